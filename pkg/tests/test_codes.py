from fractions import Fraction

import pytest

from irkit.codes import (
    CodeMap,
    all_maps_oracle,
    concatenate_codes,
    find_code,
    identity_code,
    pad_code,
    ratio_frontier,
    repeat_code,
    verify_code,
)
from irkit.graphs import GraphError, complete, cycle, disjoint_union, empty
from irkit.hom import FOUND, NONE
from conftest import random_graph


class TestFindCode:
    def test_identity_pair(self):
        status, code = find_code(cycle(5), cycle(5), 1, 1)
        assert status == FOUND and verify_code(code)

    def test_two_bits_into_pentagon(self):
        assert find_code(empty(2), cycle(5), 2, 1)[0] == NONE
        status, code = find_code(empty(2), cycle(5), 2, 2)
        assert status == FOUND and verify_code(code)

    def test_constant_map_rejected_by_verify(self):
        bad = CodeMap(empty(2), cycle(5), 1, 1, (0, 0))
        assert not bad.verify()

    def test_state_limit(self):
        with pytest.raises(GraphError):
            find_code(complete(9), complete(9), 8, 8, state_limit=1000)


class TestConstructions:
    def test_repetition_closure(self):
        _, code = find_code(empty(2), cycle(5), 2, 2)
        rep = repeat_code(code, 2)
        assert (rep.k, rep.n) == (4, 4)
        assert rep.verify()

    def test_padding(self):
        code = identity_code(cycle(5))
        padded = pad_code(code, 2)
        assert (padded.k, padded.n) == (1, 3)
        assert padded.verify()

    def test_concatenation_reverifies(self):
        # codes C5 -> C7 and C7 -> C9 compose into a verified C5 -> C9 code
        s1, code1 = find_code(cycle(5), cycle(7), 1, 1)
        s2, code2 = find_code(cycle(7), cycle(9), 1, 1)
        assert s1 == FOUND and s2 == FOUND
        comp = concatenate_codes(code1, code2)
        assert comp.source.n == 5 and comp.channel.n == 9
        assert comp.verify()

    def test_concatenation_scales(self):
        # (1,1) into (2,2) legs align by repetition
        _, c1 = find_code(empty(2), empty(4), 2, 1)
        _, c2 = find_code(empty(4), cycle(5), 1, 2)
        comp = concatenate_codes(c1, c2)
        assert Fraction(comp.k, comp.n) == Fraction(2, 2)
        assert comp.verify()


class TestFrontier:
    def test_pentagon_frontier(self):
        fr = ratio_frontier(empty(2), cycle(5), 4, 2)
        assert fr.cells[(1, 1)] == FOUND
        assert fr.cells[(2, 1)] == NONE
        assert fr.cells[(2, 2)] == FOUND
        assert fr.cells[(3, 2)] == NONE
        assert fr.best == 1

    def test_two_cliques_to_bits(self):
        g = disjoint_union(complete(2), complete(2))
        fr = ratio_frontier(g, empty(2), 2, 4)
        assert fr.best == 1
        assert fr.cells[(2, 2)] == FOUND

    def test_monotone_consistency(self, rng):
        for _ in range(6):
            g = random_graph(rng, 3, 0.5)
            h = random_graph(rng, 3, 0.5)
            fr = ratio_frontier(g, h, 2, 2)
            for (k, n), st in fr.cells.items():
                if st == FOUND and (k, n + 1) in fr.cells:
                    assert fr.cells[(k, n + 1)] == FOUND
                if st == NONE and (k + 1, n) in fr.cells:
                    assert fr.cells[(k + 1, n)] == NONE

    def test_found_codes_verify(self, rng):
        for _ in range(4):
            g = random_graph(rng, 3, 0.6)
            h = random_graph(rng, 4, 0.4)
            fr = ratio_frontier(g, h, 2, 2)
            for code in fr.codes.values():
                assert code.verify()


class TestOracleAgreement:
    def test_examples(self):
        assert all_maps_oracle(empty(2), cycle(5), 2, 1) == NONE
        assert all_maps_oracle(cycle(5), cycle(5), 1, 1) == FOUND

    def test_random_pairs_agree(self, rng):
        checked = 0
        while checked < 20:
            gs = rng.randint(2, 3)
            ks = rng.randint(1, 2)
            hs = rng.randint(2, 3)
            ns = rng.randint(1, 2)
            g = random_graph(rng, gs, 0.5)
            h = random_graph(rng, hs, 0.5)
            if (hs**ns) ** (gs**ks) > 400_000:
                continue
            status, _ = find_code(g, h, ks, ns)
            assert status in (FOUND, NONE)
            assert status == all_maps_oracle(g, h, ks, ns)
            checked += 1
