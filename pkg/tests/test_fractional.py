from fractions import Fraction

from irkit.fractional import (
    chi_bar_f,
    fractional_chromatic,
    max_weight_independent_set,
    maximal_independent_sets,
)
from irkit.graphs import (
    bits,
    complete,
    cycle,
    empty,
    kneser,
    mycielski,
    schlafli,
    strong_product,
)
from irkit.invariants import chromatic_number, clique_number, independence_number
from conftest import random_graph

F = Fraction


class TestEnumeration:
    def test_c5_maximal_sets(self):
        sets = maximal_independent_sets(cycle(5))
        assert len(sets) == 5
        assert all(m.bit_count() == 2 for m in sets)

    def test_max_weight_oracle(self, rng):
        for _ in range(15):
            g = random_graph(rng, 7, 0.5)
            w = [rng.randint(0, 6) for _ in range(7)]
            best, mask = max_weight_independent_set(g, w)
            assert sum(w[v] for v in bits(mask)) == best
            assert all(not g.rows[u] & mask for u in bits(mask))
            # brute force
            brute = 0
            for m in range(1 << 7):
                if all(not g.rows[v] & m for v in bits(m)):
                    brute = max(brute, sum(w[v] for v in bits(m)))
            assert best == brute


class TestKnownValues:
    def test_pentagon(self):
        assert chi_bar_f(cycle(5)).value == F(5, 2)

    def test_schlafli_pair(self):
        assert chi_bar_f(schlafli()).value == F(9, 2)
        assert chi_bar_f(schlafli().complement()).value == F(9)

    def test_odd_cycle_complements(self):
        for n in (2, 3, 4):
            g = cycle(2 * n + 1).complement()
            assert chi_bar_f(g).value == 2 + F(1, n)

    def test_kneser_complement(self):
        assert chi_bar_f(kneser(6, 2).complement()).value == F(3)
        assert chi_bar_f(kneser(5, 2).complement()).value == F(5, 2)

    def test_groetzsch(self):
        fv = fractional_chromatic(mycielski(cycle(5)))
        assert fv.value == F(29, 10)

    def test_edgeless(self):
        assert fractional_chromatic(empty(4)).value == 1
        assert chi_bar_f(complete(4)).value == 1


class TestStructure:
    def test_certificates_verify(self, rng):
        for _ in range(15):
            g = random_graph(rng, 7, 0.5)
            fv = fractional_chromatic(g)
            assert fv.verify(g)
            assert sum(w for _, w in fv.cover_weights) == fv.value
            assert sum(fv.vertex_weights) == fv.value

    def test_sandwich(self, rng):
        for _ in range(15):
            g = random_graph(rng, 7, 0.5)
            fv = fractional_chromatic(g)
            n_over_alpha = F(g.n, independence_number(g).value)
            assert n_over_alpha <= fv.value <= chromatic_number(g).value
            assert fv.value >= clique_number(g).value

    def test_vertex_transitive_shortcut(self):
        for g in (cycle(7), kneser(5, 2), schlafli()):
            fv = fractional_chromatic(g)
            assert fv.value == F(g.n, independence_number(g).value)

    def test_multiplicativity_strong_product(self, rng):
        for _ in range(6):
            g = random_graph(rng, 4, 0.5)
            h = random_graph(rng, 4, 0.5)
            big = chi_bar_f(strong_product(g, h)).value
            assert big == chi_bar_f(g).value * chi_bar_f(h).value

    def test_constraint_generation_path(self):
        # force the generation route by capping enumeration low
        g = kneser(5, 2)
        fv = fractional_chromatic(g, set_cap=3)
        assert fv.value == F(5, 2)
        assert fv.verify(g)
