"""Fractional chromatic / fractional clique cover numbers, exact.

chi_f(g) is solved as the max-total-weight LP over vertices subject to
y(S) <= 1 for every maximal independent set S; its duals are exact cover
weights over independent sets.  When the maximal-independent-set family is
too large to enumerate, constraint generation runs with an exact max-weight
independent set oracle.  Verification of the vertex weights always goes
through that oracle, independently of which route produced them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graphs import Graph, bits
from .invariants import independence_number
from .lp import GE, OPTIMAL, LinearProgram, solve_lp

MAX_ENUMERATED_SETS = 1_000_000


class EnumerationBudget(RuntimeError):
    pass


def maximal_independent_sets(g: Graph, cap: int = MAX_ENUMERATED_SETS) -> list[int]:
    """All maximal independent sets as bitmasks (Bron-Kerbosch with pivot)."""
    comp = g.complement()  # cliques of the complement
    out: list[int] = []
    full = (1 << g.n) - 1

    def extend(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > cap:
                raise EnumerationBudget(f"more than {cap} maximal independent sets")
            return
        pivot_pool = p | x
        pivot, best = -1, -1
        for u in bits(pivot_pool):
            d = (comp.rows[u] & p).bit_count()
            if d > best:
                pivot, best = u, d
        for v in bits(p & ~comp.rows[pivot]):
            extend(r | 1 << v, p & comp.rows[v], x & comp.rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    extend(0, full, 0)
    return out


def max_weight_independent_set(g: Graph, weights: list[int]) -> tuple[int, int]:
    """Exact maximum-weight independent set for nonnegative integer weights.

    Returns (weight, vertex mask).  Plain branch and bound with a
    sum-of-remaining-weights bound; weights of zero never help, so those
    vertices are dropped up front.
    """
    n = g.n
    best_w, best_mask = 0, 0
    active = sum(1 << v for v in range(n) if weights[v] > 0)

    def rem_weight(mask: int) -> int:
        return sum(weights[v] for v in bits(mask))

    order = sorted(bits(active), key=lambda v: -weights[v])

    def expand(mask: int, cur_w: int, cur_mask: int, rem: int) -> None:
        nonlocal best_w, best_mask
        if cur_w + rem <= best_w:
            return
        if not mask:
            if cur_w > best_w:
                best_w, best_mask = cur_w, cur_mask
            return
        v = next(u for u in order if mask >> u & 1)
        drop = (g.rows[v] | 1 << v) & mask
        expand(mask & ~drop, cur_w + weights[v], cur_mask | 1 << v, rem - rem_weight(drop))
        expand(mask & ~(1 << v), cur_w, cur_mask, rem - weights[v])
        if cur_w > best_w:
            best_w, best_mask = cur_w, cur_mask

    expand(active, 0, 0, rem_weight(active))
    return best_w, best_mask


@dataclass
class FractionalValue:
    """Exact chi_f with a primal cover certificate and a dual clique certificate."""

    value: Fraction
    cover_weights: list[tuple[int, Fraction]]  # (independent-set mask, weight)
    vertex_weights: list[Fraction]

    def verify(self, g: Graph) -> bool:
        if any(w < 0 for _, w in self.cover_weights) or any(y < 0 for y in self.vertex_weights):
            return False
        for mask, _ in self.cover_weights:
            vs = bits(mask)
            for i, u in enumerate(vs):
                for v in vs[i + 1:]:
                    if g.has_edge(u, v):
                        return False
        for v in range(g.n):
            if sum(w for mask, w in self.cover_weights if mask >> v & 1) < 1:
                return False
        if sum(w for _, w in self.cover_weights) != self.value:
            return False
        if sum(self.vertex_weights) != self.value:
            return False
        # dual feasibility over ALL independent sets, by the exact oracle
        scale = math.lcm(*(y.denominator for y in self.vertex_weights))
        wts = [int(y * scale) for y in self.vertex_weights]
        best, _ = max_weight_independent_set(g, wts)
        return best <= scale


def _solve_cover_lp(g: Graph, family: list[int]) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Min-weight fractional cover of the vertices by the given independent sets.

    Returns (value, set weights, vertex duals).  Solved in the orientation
    with one row per vertex, which keeps the exact tableau narrow.
    """
    lp = LinearProgram(
        objective=[Fraction(-1)] * len(family),
        rows=[[Fraction(1) if mask >> v & 1 else Fraction(0) for mask in family] for v in range(g.n)],
        rhs=[Fraction(1)] * g.n,
        senses=[GE] * g.n,
    )
    res = solve_lp(lp)
    assert res.status == OPTIMAL  # the family always covers every vertex
    return -res.value, res.x, [-d for d in res.duals]


def _greedy_cover_family(g: Graph) -> list[int]:
    """A small starter family of maximal independent sets covering all vertices."""
    family = []
    covered = 0
    for v in range(g.n):
        if covered >> v & 1:
            continue
        s = 1 << v
        cand = ~(g.rows[v] | s)
        for u in range(g.n):
            if cand >> u & 1 and u != v:
                s |= 1 << u
                cand &= ~g.rows[u]
        family.append(s)
        covered |= s
    return family


def fractional_chromatic(
    g: Graph, set_cap: int = MAX_ENUMERATED_SETS
) -> FractionalValue:
    """Exact fractional chromatic number of g.

    Tries full maximal-independent-set enumeration first; beyond the cap it
    switches to constraint generation against the exact oracle.
    """
    if g.is_empty():
        full = (1 << g.n) - 1
        return FractionalValue(Fraction(1), [(full, Fraction(1))], [Fraction(1)] + [Fraction(0)] * (g.n - 1))
    try:
        family: Optional[list[int]] = maximal_independent_sets(g, set_cap)
    except EnumerationBudget:
        family = None

    if family is not None:
        value, weights, vertex_weights = _solve_cover_lp(g, family)
    else:
        family = _greedy_cover_family(g)
        while True:
            value, weights, vertex_weights = _solve_cover_lp(g, family)
            scale = math.lcm(*(y.denominator for y in vertex_weights))
            wts = [int(y * scale) for y in vertex_weights]
            best, best_mask = max_weight_independent_set(g, wts)
            if best <= scale:
                break
            # maximalize the violating set to keep the family tidy
            grow = best_mask
            cand = ~grow
            for u in range(g.n):
                if cand >> u & 1 and not (g.rows[u] & grow):
                    grow |= 1 << u
            family.append(grow)

    cover = [(family[i], w) for i, w in enumerate(weights) if w != 0]
    fv = FractionalValue(value, cover, vertex_weights)
    assert fv.verify(g)
    return fv


def chi_bar_f(g: Graph, set_cap: int = MAX_ENUMERATED_SETS) -> FractionalValue:
    """Fractional clique cover number: chi_f of the complement."""
    return fractional_chromatic(g.complement(), set_cap)
