import itertools
from fractions import Fraction

import pytest

from irkit.exactness import Exact
from irkit.graphs import (
    bits,
    complete,
    cycle,
    disjoint_union,
    empty,
    kneser,
    mycielski,
    or_product,
    schlafli,
    strong_power,
    strong_product,
)
from irkit.invariants import (
    BetaWitness,
    alpha_of_power,
    beta,
    beta_f_estimate,
    capacity_interval,
    chromatic_number,
    clique_cover_number,
    clique_number,
    gamma_power_root,
    gf2_rank,
    independence_number,
    minrank_gf2,
    verify_independent_set,
)
from conftest import random_graph


def alpha_brute(g) -> int:
    best = 0
    for mask in range(1 << g.n):
        if all(not g.rows[v] & mask for v in bits(mask)):
            best = max(best, mask.bit_count())
    return best


def chi_brute(g) -> int:
    for k in range(1, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in g.edges()):
                return k
    raise AssertionError


def minrank_brute(g) -> int:
    """Enumerate every GF(2) fitting matrix; tiny graphs only."""
    n = g.n
    free = [(i, j) for i in range(n) for j in range(n) if i != j and g.has_edge(i, j)]
    best = n
    for bitsel in range(1 << len(free)):
        rows = [1 << i for i in range(n)]  # diagonal ones
        for t, (i, j) in enumerate(free):
            if bitsel >> t & 1:
                rows[i] |= 1 << j
        best = min(best, gf2_rank(rows))
    return best


class TestAlphaOmegaChi:
    def test_known_values(self):
        assert independence_number(cycle(5)).value == 2
        assert independence_number(schlafli()).value == 3
        assert independence_number(schlafli().complement()).value == 6
        assert clique_number(kneser(5, 2)).value == 2
        assert chromatic_number(cycle(5)).value == 3
        assert chromatic_number(mycielski(cycle(5))).value == 4
        assert clique_cover_number(cycle(5)).value == 3

    def test_alpha_of_strong_square(self):
        assert alpha_of_power(cycle(5), 2).value == 5

    def test_against_brute_force(self, rng):
        for _ in range(30):
            g = random_graph(rng, 7, 0.5)
            w = independence_number(g)
            assert w.value == alpha_brute(g)
            assert verify_independent_set(g, w.witness)
            assert clique_number(g).value == alpha_brute(g.complement())

    def test_chi_against_brute_force(self, rng):
        for _ in range(12):
            g = random_graph(rng, 6, 0.5)
            w = chromatic_number(g)
            assert w.value == chi_brute(g)
            assert all(w.witness[u] != w.witness[v] for u, v in g.edges())

    def test_alpha_supermultiplicative(self, rng):
        for _ in range(8):
            g = random_graph(rng, 4, 0.5)
            h = random_graph(rng, 4, 0.5)
            a = independence_number(strong_product(g, h)).value
            assert a >= independence_number(g).value * independence_number(h).value


class TestCapacity:
    def test_pentagon(self):
        ci = capacity_interval(cycle(5), 2, theta_value=2.2360679, theta_tol=1e-6,
                               chibarf=Fraction(5, 2))
        assert ci.lower == Exact(5, 2)
        assert ci.power == 2
        assert ci.numerically_degenerate and not ci.exact

    def test_empty_graph(self):
        ci = capacity_interval(empty(7), 1, chibarf=Fraction(7))
        assert ci.lower == Exact(7) and ci.exact

    def test_nondecreasing_roots(self, rng):
        for _ in range(6):
            g = random_graph(rng, 4, 0.6)
            ci = capacity_interval(g, 2)
            a1 = ci.alpha_by_power[1]
            a2 = ci.alpha_by_power[2]
            assert Exact(a2, 2) >= Exact(a1)


class TestMinrank:
    def test_extremes(self):
        assert minrank_gf2(empty(5)).value == 5
        assert minrank_gf2(complete(5)).value == 1

    def test_pentagon(self):
        mv = minrank_gf2(cycle(5))
        assert mv.value == 3
        assert mv.verify(cycle(5))

    def test_sandwich(self, rng):
        for _ in range(10):
            g = random_graph(rng, 5, 0.5)
            mv = minrank_gf2(g)
            assert independence_number(g).value <= mv.value <= clique_cover_number(g).value
            assert mv.verify(g)

    def test_against_brute_force(self, rng):
        for _ in range(6):
            g = random_graph(rng, 4, 0.5)
            assert minrank_gf2(g).value == minrank_brute(g)

    def test_gamma_power_root(self):
        assert gamma_power_root(complete(3), 2) == Exact(1)
        assert gamma_power_root(empty(3), 1) == Exact(3)
        assert gamma_power_root(cycle(5), 1) == Exact(3)

    def test_size_limit(self):
        from irkit.graphs import GraphError

        with pytest.raises(GraphError):
            minrank_gf2(empty(13))


def beta_brute(g, f) -> int:
    """Subset x all-maps oracle for the induced-homomorphic count."""
    import itertools as it

    for size in range(g.n, 0, -1):
        for subset in it.combinations(range(g.n), size):
            sub = g.induced(subset)
            edges = list(sub.edges())
            for assign in it.product(range(f.n), repeat=size):
                if all(f.has_edge(assign[u], assign[v]) for u, v in edges):
                    return size
    return 0


class TestBeta:
    def test_beta_k1_is_alpha(self):
        g = cycle(7)
        assert beta(g, complete(1)).value == independence_number(g).value

    def test_whole_graph_maps(self):
        assert beta(cycle(5), complete(3)).value == 5

    def test_k4_to_k3(self):
        b = beta(complete(4), complete(3))
        assert b.value == 3 and b.hom.verify()

    def test_against_brute_force(self, rng):
        for _ in range(10):
            g = random_graph(rng, 5, 0.5)
            f = random_graph(rng, 3, 0.5)
            assert beta(g, f).value == beta_brute(g, f)

    def test_prop_or_product_bounds(self, rng):
        # max{a(G1) b(G2,F), a(G2) b(G1,F)} <= b(G1 v G2, F) <= b(G1,F) b(G2,F)
        for _ in range(8):
            g1 = random_graph(rng, 3, 0.5)
            g2 = random_graph(rng, 3, 0.5)
            f = random_graph(rng, 3, 0.6)
            if f.num_edges() == 0:
                continue
            prod = beta(or_product(g1, g2), f).value
            b1, b2 = beta(g1, f).value, beta(g2, f).value
            a1 = independence_number(g1).value
            a2 = independence_number(g2).value
            assert max(a1 * b2, a2 * b1) <= prod <= b1 * b2

    def test_prop_joint_supermultiplicative(self, rng):
        # b(G1,F1) b(G2,F2) <= b(G1 v G2, F1 v F2)
        for _ in range(8):
            g1 = random_graph(rng, 3, 0.5)
            g2 = random_graph(rng, 3, 0.5)
            f1 = random_graph(rng, 2, 0.7)
            f2 = random_graph(rng, 2, 0.7)
            lhs = beta(g1, f1).value * beta(g2, f2).value
            rhs = beta(or_product(g1, g2), or_product(f1, f2)).value
            assert lhs <= rhs


class TestBetaFEstimate:
    def test_alpha_case(self):
        assert beta_f_estimate(cycle(5), complete(1), 1, 1) == 2.0

    def test_empty_complement_or_square(self):
        assert beta_f_estimate(empty(3), complete(1), 1, 2) == 1.0

    def test_largest_induced_bipartite(self):
        assert beta_f_estimate(cycle(5), complete(2), 1, 1) == 4.0
