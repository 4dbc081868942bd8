"""Exact rational linear programming: two-phase tableau simplex on Fractions.

Bland's rule throughout, so no cycling; every result carries both the primal
solution and the duals read off the final objective row, all exact.  Sized
for the small dense LPs of fractional covering problems, not for generality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

LE, EQ, GE = "<=", "==", ">="

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LinearProgram:
    """maximize objective . x  subject to rows[i] . x  (sense_i)  rhs[i], x >= 0."""

    objective: list[Fraction]
    rows: list[list[Fraction]]
    rhs: list[Fraction]
    senses: list[str]

    def __post_init__(self):
        n = len(self.objective)
        if not (len(self.rows) == len(self.rhs) == len(self.senses)):
            raise ValueError("inconsistent LP row counts")
        for r in self.rows:
            if len(r) != n:
                raise ValueError("inconsistent LP row width")
        for s in self.senses:
            if s not in (LE, EQ, GE):
                raise ValueError(f"bad sense {s!r}")


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[list[Fraction]] = None
    duals: Optional[list[Fraction]] = None  # one per constraint row


def _pivot(T: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [a - f * b for a, b in zip(r, T[row])]
    basis[row] = col


_BLAND_AFTER = 40  # consecutive degenerate pivots before switching rules


def _simplex(T: list[list[Fraction]], basis: list[int], ncols: int, allowed: int) -> str:
    """Run simplex on tableau T (objective is the last row, to maximize).

    Dantzig's rule for speed, falling back to Bland's rule after a run of
    degenerate pivots so cycling is impossible.  Columns >= `allowed` may
    not enter the basis (used to freeze artificials in phase 2).  The
    objective row stores negated reduced costs.
    """
    m = len(T) - 1
    degenerate_run = 0
    while True:
        obj = T[-1]
        if degenerate_run < _BLAND_AFTER:
            col, best_rc = None, Fraction(0)
            for j in range(allowed):
                if obj[j] < best_rc:
                    best_rc, col = obj[j], j
        else:
            col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return OPTIMAL
        row, best = None, None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[row]):
                    row, best = i, ratio
        if row is None:
            return UNBOUNDED
        degenerate_run = degenerate_run + 1 if best == 0 else 0
        _pivot(T, basis, row, col)


def solve_lp(lp: LinearProgram) -> LPResult:
    """Exact optimum with primal and dual certificates, or the failure tag."""
    n = len(lp.objective)
    m = len(lp.rows)

    # normalize rhs to be nonnegative
    rows, rhs, senses = [], [], []
    flipped = []
    for r, b, s in zip(lp.rows, lp.rhs, lp.senses):
        if b < 0:
            r = [-v for v in r]
            b = -b
            s = {LE: GE, GE: LE, EQ: EQ}[s]
            flipped.append(True)
        else:
            flipped.append(False)
        rows.append(list(r))
        rhs.append(b)
        senses.append(s)

    nslack = sum(1 for s in senses if s != EQ)
    nart = sum(1 for s in senses if s != LE)
    width = n + nslack + nart + 1

    T: list[list[Fraction]] = []
    basis: list[int] = []
    slack_col: list[Optional[int]] = [None] * m
    art_col: list[Optional[int]] = [None] * m
    js, ja = n, n + nslack
    for i in range(m):
        row = [Fraction(0)] * width
        row[:n] = [Fraction(v) for v in rows[i]]
        row[-1] = Fraction(rhs[i])
        if senses[i] == LE:
            row[js] = Fraction(1)
            slack_col[i] = js
            basis.append(js)
            js += 1
        elif senses[i] == GE:
            row[js] = Fraction(-1)
            slack_col[i] = js
            js += 1
            row[ja] = Fraction(1)
            art_col[i] = ja
            basis.append(ja)
            ja += 1
        else:
            row[ja] = Fraction(1)
            art_col[i] = ja
            basis.append(ja)
            ja += 1
        T.append(row)

    ncols = width - 1

    if nart:
        # phase 1: maximize -sum(artificials)
        obj = [Fraction(0)] * width
        for i in range(m):
            if art_col[i] is not None:
                obj = [a - b for a, b in zip(obj, T[i])]
        for i in range(m):
            if art_col[i] is not None:
                obj[art_col[i]] = Fraction(0)
        T.append(obj)
        status = _simplex(T, basis, ncols, allowed=ncols)
        if -T[-1][-1] != 0:
            return LPResult(INFEASIBLE)
        T.pop()
        # drive any artificial still in the basis out of it
        for i in range(m):
            if basis[i] >= n + nslack:
                col = next((j for j in range(n + nslack) if T[i][j] != 0), None)
                if col is not None:
                    _pivot(T, basis, i, col)
        assert status == OPTIMAL

    # phase 2
    obj = [Fraction(0)] * width
    obj[:n] = [-Fraction(c) for c in lp.objective]
    T.append(obj)
    for i in range(m):
        if basis[i] < n and T[-1][basis[i]] != 0:
            f = T[-1][basis[i]]
            T[-1] = [a - f * b for a, b in zip(T[-1], T[i])]
    status = _simplex(T, basis, ncols, allowed=n + nslack)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = T[i][-1]
    value = sum(c * v for c, v in zip(lp.objective, x))

    duals = []
    for i in range(m):
        if slack_col[i] is not None:
            y = T[-1][slack_col[i]]
            if senses[i] == GE:
                y = -y
        else:
            y = T[-1][art_col[i]]
        duals.append(-y if flipped[i] else y)
    return LPResult(OPTIMAL, value, x, duals)
