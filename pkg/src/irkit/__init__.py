"""irkit: certified lower/upper bounds on information ratios between graphs.

The package computes exact combinatorial invariants (independence, chromatic,
minrank over GF(2)), an exact rational fractional clique cover LP, a certified
Lovász theta solver, explicit zero-error joint source-channel code search, and
assembles them into certified intervals for the information ratio of a
source-channel graph pair.
"""

__version__ = "0.1.0"
