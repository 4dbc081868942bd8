"""Explicit (k,n) zero-error joint source-channel codes.

A (k,n) code for the pair (G,H) is a map V(G^k) -> V(H^n) sending distinct
non-adjacent vertices to distinct non-adjacent vertices; existence is
decided by homomorphism search between the complements of the powers.
Product vertices are indexed row-major (base-|V| digit strings), so stored
lookup tables replay deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graphs import Graph, GraphError, power_coords, strong_power, to_graph6
from .hom import FOUND, INCONCLUSIVE, NONE, hom_exists, hom_exists_orbit_reduced

DEFAULT_STATE_LIMIT = 20_000


@dataclass(frozen=True)
class CodeMap:
    source: Graph  # G, the base source graph
    channel: Graph  # H, the base channel graph
    k: int
    n: int
    mapping: tuple[int, ...]  # V(G^k) -> V(H^n), row-major indices

    def verify(self, size_limit: int = 10**6) -> bool:
        """Exhaustive non-adjacency preservation check over V(G^k)^2."""
        gk = strong_power(self.source, self.k, size_limit)
        hn = strong_power(self.channel, self.n, size_limit)
        if len(self.mapping) != gk.n:
            return False
        if any(not 0 <= t < hn.n for t in self.mapping):
            return False
        for x in range(gk.n):
            for y in range(x + 1, gk.n):
                if not gk.has_edge(x, y):
                    fx, fy = self.mapping[x], self.mapping[y]
                    if fx == fy or hn.has_edge(fx, fy):
                        return False
        return True

    def ratio(self) -> Fraction:
        return Fraction(self.k, self.n)

    def to_json(self) -> dict:
        return {
            "source": to_graph6(self.source),
            "channel": to_graph6(self.channel),
            "k": self.k,
            "n": self.n,
            "table": list(self.mapping),
        }


def identity_code(g: Graph) -> CodeMap:
    """The (1,1) identity code for the pair (g,g)."""
    return CodeMap(g, g, 1, 1, tuple(range(g.n)))


def find_code(
    g: Graph,
    h: Graph,
    k: int,
    n: int,
    budget: int = 2_000_000,
    state_limit: int = DEFAULT_STATE_LIMIT,
    symmetry: bool = True,
) -> tuple[str, Optional[CodeMap]]:
    """Search for a (k,n) code for (g,h): ('found', code) | ('none'|'inconclusive', None)."""
    if g.n**k > state_limit or h.n**n > state_limit:
        raise GraphError(
            f"code search state space {g.n}^{k} x {h.n}^{n} exceeds limit {state_limit}"
        )
    gk = strong_power(g, k, state_limit)
    hn = strong_power(h, n, state_limit)
    search = hom_exists_orbit_reduced if symmetry else hom_exists
    res = search(gk.complement(), hn.complement(), budget)
    if res.status == FOUND:
        code = CodeMap(g, h, k, n, res.witness.mapping)
        assert code.verify()
        return FOUND, code
    return res.status, None


def verify_code(code: CodeMap) -> bool:
    return code.verify()


def repeat_code(code: CodeMap, m: int, size_limit: int = 10**6) -> CodeMap:
    """Coordinate-wise repetition: a (k,n) code yields a (km,nm) code."""
    if m < 1:
        raise ValueError("m must be >= 1")
    src_states = code.source.n**code.k
    chn_states = code.channel.n**code.n
    if src_states**m > size_limit:
        raise GraphError("repeated code table too large")
    mapping = []
    for idx in range(src_states**m):
        blocks = power_coords(idx, [src_states] * m)
        out = 0
        for b in blocks:
            out = out * chn_states + code.mapping[b]
        mapping.append(out)
    return CodeMap(code.source, code.channel, code.k * m, code.n * m, tuple(mapping))


def concatenate_codes(first: CodeMap, second: CodeMap, size_limit: int = 10**6) -> CodeMap:
    """Compose a (k1,n1) code for (G,F) with a (k2,n2) code for (F,H).

    After aligning by repetition this gives a (k1*k2, n1*n2) code for (G,H);
    the result is re-verified, never trusted.
    """
    if first.channel.rows != second.source.rows:
        raise ValueError("pivot graphs do not match")
    f = repeat_code(first, second.k, size_limit)  # (k1k2, n1k2) for (G,F)
    h = repeat_code(second, first.n, size_limit)  # (k2n1, n2n1) for (F,H)
    assert f.channel.n ** f.n == len(h.mapping)
    mapping = tuple(h.mapping[t] for t in f.mapping)
    out = CodeMap(first.source, second.channel, f.k, h.n, mapping)
    assert out.verify(size_limit)
    return out


def pad_code(code: CodeMap, extra: int) -> CodeMap:
    """Extend a (k,n) code to (k,n+extra) by appending a fixed channel symbol."""
    if extra < 0:
        raise ValueError("extra must be >= 0")
    if extra == 0:
        return code
    shift = code.channel.n**extra
    mapping = tuple(t * shift for t in code.mapping)
    return CodeMap(code.source, code.channel, code.k, code.n + extra, mapping)


@dataclass
class Frontier:
    source: Graph
    channel: Graph
    cells: dict[tuple[int, int], str] = field(default_factory=dict)
    codes: dict[tuple[int, int], CodeMap] = field(default_factory=dict)

    @property
    def best(self) -> Optional[Fraction]:
        found = [Fraction(k, n) for (k, n), s in self.cells.items() if s == FOUND]
        return max(found) if found else None


def ratio_frontier(
    g: Graph,
    h: Graph,
    k_max: int,
    n_max: int,
    budget: int = 2_000_000,
    state_limit: int = DEFAULT_STATE_LIMIT,
) -> Frontier:
    """Status table over 1<=k<=k_max, 1<=n<=n_max.

    Monotone closure is applied: found at (k,n) implies found at (k,n+1)
    by padding, none at (k,n) implies none at (k+1,n) by restriction.
    Inconclusive and size-skipped cells are reported honestly.
    """
    fr = Frontier(g, h)
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            if (k, n) in fr.cells:
                continue
            if fr.cells.get((k, n - 1)) == FOUND:
                fr.cells[(k, n)] = FOUND
                fr.codes[(k, n)] = pad_code(fr.codes[(k, n - 1)], 1)
                continue
            if fr.cells.get((k - 1, n)) == NONE:
                fr.cells[(k, n)] = NONE
                continue
            try:
                status, code = find_code(g, h, k, n, budget, state_limit)
            except GraphError:
                fr.cells[(k, n)] = "skipped"
                continue
            fr.cells[(k, n)] = status
            if code is not None:
                fr.codes[(k, n)] = code
    return fr


def all_maps_oracle(g: Graph, h: Graph, k: int, n: int, cap: int = 2_000_000) -> str:
    """Brute-force found/none over every map V(G^k) -> V(H^n).

    Only usable when |V(H^n)| ** |V(G^k)| <= cap; raises otherwise.  Test
    oracle for find_code; shares no code with the search path.
    """
    gk = strong_power(g, k)
    hn = strong_power(h, n)
    total = hn.n**gk.n
    if total > cap:
        raise GraphError(f"all-maps oracle would enumerate {total} maps")
    pairs = [
        (x, y)
        for x in range(gk.n)
        for y in range(x + 1, gk.n)
        if not gk.has_edge(x, y)
    ]
    for assignment in itertools.product(range(hn.n), repeat=gk.n):
        ok = True
        for x, y in pairs:
            fx, fy = assignment[x], assignment[y]
            if fx == fy or hn.has_edge(fx, fy):
                ok = False
                break
        if ok:
            return FOUND
    return NONE
