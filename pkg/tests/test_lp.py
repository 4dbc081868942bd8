import itertools
from fractions import Fraction

import pytest

from irkit.lp import EQ, GE, INFEASIBLE, LE, OPTIMAL, UNBOUNDED, LinearProgram, solve_lp

F = Fraction


def _c5_matching_lp() -> LinearProgram:
    # variables = edges of C5, constraints = vertices
    edges = [(i, (i + 1) % 5) for i in range(5)]
    rows = [[F(1) if v in e else F(0) for e in edges] for v in range(5)]
    return LinearProgram([F(1)] * 5, rows, [F(1)] * 5, [LE] * 5)


def _enumerate_extreme_points(lp: LinearProgram):
    """Brute-force oracle: all basic feasible points of {Ax<=b, x>=0}.

    Solves every square subsystem of tight constraints by exact Gaussian
    elimination; independent of the simplex code path.
    """
    n = len(lp.objective)
    rows = [list(r) for r in lp.rows] + [
        [F(1) if j == i else F(0) for j in range(n)] for i in range(n)
    ]
    rhs = list(lp.rhs) + [F(0)] * n
    points = []
    for subset in itertools.combinations(range(len(rows)), n):
        m = [rows[i][:] + [rhs[i]] for i in subset]
        x = _solve_square(m, n)
        if x is None:
            continue
        if all(sum(a * v for a, v in zip(lp.rows[i], x)) <= lp.rhs[i] for i in range(len(lp.rows))):
            if all(v >= 0 for v in x):
                points.append(x)
    return points


def _solve_square(m, n):
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


class TestSimplex:
    def test_trivial_bound(self):
        lp = LinearProgram([F(1)], [[F(1)]], [F(3)], [LE])
        res = solve_lp(lp)
        assert res.status == OPTIMAL and res.value == 3

    def test_infeasible(self):
        lp = LinearProgram([F(1)], [[F(1)], [F(1)]], [F(0), F(1)], [LE, GE])
        assert solve_lp(lp).status == INFEASIBLE

    def test_unbounded(self):
        lp = LinearProgram([F(1)], [[F(0)]], [F(1)], [LE])
        assert solve_lp(lp).status == UNBOUNDED

    def test_equality_rows(self):
        lp = LinearProgram(
            [F(2), F(3)],
            [[F(1), F(1)], [F(1), F(-1)]],
            [F(4), F(0)],
            [EQ, EQ],
        )
        res = solve_lp(lp)
        assert res.status == OPTIMAL and res.x == [F(2), F(2)] and res.value == 10

    def test_fractional_matching_c5(self):
        lp = _c5_matching_lp()
        res = solve_lp(lp)
        assert res.status == OPTIMAL
        assert res.value == F(5, 2)
        # oracle: maximum over all extreme points
        best = max(sum(x) for x in _enumerate_extreme_points(lp))
        assert best == res.value

    def test_duality_on_matching(self):
        lp = _c5_matching_lp()
        res = solve_lp(lp)
        assert sum(y * b for y, b in zip(res.duals, lp.rhs)) == res.value
        assert all(y >= 0 for y in res.duals)
        # dual feasibility: y^T A >= c
        for j in range(5):
            assert sum(res.duals[i] * lp.rows[i][j] for i in range(5)) >= lp.objective[j]

    def test_random_lps_duality(self, rng):
        for _ in range(25):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            lp = LinearProgram(
                [F(rng.randint(-3, 5)) for _ in range(n)],
                [[F(rng.randint(-3, 4)) for _ in range(n)] for _ in range(m)],
                [F(rng.randint(-2, 6)) for _ in range(m)],
                [rng.choice([LE, GE, EQ]) for _ in range(m)],
            )
            res = solve_lp(lp)
            if res.status != OPTIMAL:
                continue
            # primal feasibility
            for row, b, s in zip(lp.rows, lp.rhs, lp.senses):
                lhs = sum(a * v for a, v in zip(row, res.x))
                assert (s == LE and lhs <= b) or (s == GE and lhs >= b) or (s == EQ and lhs == b)
            assert all(v >= 0 for v in res.x)
            # strong duality (exact)
            assert sum(y * b for y, b in zip(res.duals, lp.rhs)) == res.value
