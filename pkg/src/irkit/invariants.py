"""Exact combinatorial invariants with verifiable witnesses.

Independence/clique numbers by bitset branch-and-bound with greedy coloring
bounds, exact chromatic number by iterative deepening, certified capacity
intervals from strong-power independence numbers, Haemers minrank over GF(2)
by rank-r vector-pair backtracking, and the largest-homomorphic-subgraph
count used by the finite-power diagnostic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactness import Exact
from .graphs import Graph, GraphError, bits, strong_power
from .hom import FOUND, INCONCLUSIVE, BudgetExhausted, HomMap, hom_exists

ALPHA_POWER_VERTEX_LIMIT = 260  # largest strong power we will run exact alpha on


@dataclass(frozen=True)
class Witnessed:
    """An exact integer invariant with its verifiable witness."""

    value: int
    witness: tuple[int, ...]

    def __int__(self) -> int:
        return self.value


def _max_clique_mask(g: Graph) -> int:
    """Maximum clique as a bitmask (B&B with greedy-coloring upper bounds)."""
    n = g.n
    best_mask = 0
    best_size = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy color classes over candidates; returns (vertex, colors_used_so_far)
        order = []
        classes: list[int] = []
        m = cand
        verts = sorted(bits(m), key=lambda v: -(g.rows[v] & cand).bit_count())
        for v in verts:
            for ci, cls in enumerate(classes):
                if not g.rows[v] & cls:
                    classes[ci] |= 1 << v
                    order.append((v, ci + 1))
                    break
            else:
                classes.append(1 << v)
                order.append((v, len(classes)))
        order.sort(key=lambda t: t[1])
        return order

    def expand(cur: int, size: int, cand: int) -> None:
        nonlocal best_mask, best_size
        order = color_bound(cand)
        for v, bound in reversed(order):
            if size + bound <= best_size:
                return
            nxt = cand & g.rows[v]
            if size + 1 > best_size:
                best_size = size + 1
                best_mask = cur | 1 << v
            if nxt:
                expand(cur | 1 << v, size + 1, nxt)
            cand &= ~(1 << v)

    expand(0, 0, (1 << n) - 1)
    return best_mask


def clique_number(g: Graph) -> Witnessed:
    mask = _max_clique_mask(g)
    return Witnessed(mask.bit_count(), tuple(bits(mask)))


def independence_number(g: Graph) -> Witnessed:
    """Maximum independent set; solved per connected component."""
    total: list[int] = []
    for comp in g.components():
        sub = g.induced(comp)
        mask = _max_clique_mask(sub.complement())
        total.extend(comp[i] for i in bits(mask))
    total.sort()
    w = Witnessed(len(total), tuple(total))
    assert verify_independent_set(g, w.witness)
    return w


def verify_independent_set(g: Graph, vertices: tuple[int, ...]) -> bool:
    for u, v in itertools.combinations(vertices, 2):
        if g.has_edge(u, v):
            return False
    return len(set(vertices)) == len(vertices)


def chromatic_number(g: Graph) -> Witnessed:
    """Exact chromatic number; witness is a proper coloring (colors 0..k-1)."""
    lb = clique_number(g).value
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def try_k(k: int) -> Optional[list[int]]:
        color = [-1] * n

        def place(i: int, used: int) -> bool:
            if i == n:
                return True
            v = order[i]
            forbidden = set(color[w] for w in bits(g.rows[v]) if color[w] >= 0)
            for c in range(min(used + 1, k)):
                if c in forbidden:
                    continue
                color[v] = c
                if place(i + 1, max(used, c + 1)):
                    return True
                color[v] = -1
            return False

        return color if place(0, 0) else None

    for k in range(lb, n + 1):
        col = try_k(k)
        if col is not None:
            assert all(col[u] != col[v] for u, v in g.edges())
            return Witnessed(k, tuple(col))
    raise AssertionError("unreachable: n colors always suffice")


def clique_cover_number(g: Graph) -> Witnessed:
    return chromatic_number(g.complement())


@dataclass
class CapacityInterval:
    """Certified interval around the strong-power capacity limit.

    lower is exact: max over 1<=j<=m of alpha(g^j)^(1/j), nondecreasing in m
    by supermultiplicativity.  upper candidates are the theta value (float
    with tolerance) and the exact fractional clique cover number; either may
    be absent.  The interval counts as exact when the lower root meets the
    exact rational upper, and as numerically degenerate when it meets theta
    within tolerance.
    """

    lower: Exact
    power: int  # j achieving the lower bound
    witness: tuple[int, ...]  # independent set in g^power
    alpha_by_power: dict[int, int] = field(default_factory=dict)
    theta_value: Optional[float] = None
    theta_tol: Optional[float] = None
    chibarf: Optional[Fraction] = None

    @property
    def upper_float(self) -> float:
        cands = []
        if self.theta_value is not None:
            cands.append(self.theta_value + self.theta_tol)
        if self.chibarf is not None:
            cands.append(float(self.chibarf))
        return min(cands) if cands else float("inf")

    @property
    def exact(self) -> bool:
        return self.chibarf is not None and self.lower == Exact(self.chibarf)

    @property
    def numerically_degenerate(self) -> bool:
        if self.exact:
            return True
        if self.theta_value is None:
            return False
        return abs(float(self.lower) - self.theta_value) <= 2 * self.theta_tol + 1e-12


def alpha_of_power(g: Graph, j: int, limit: int = ALPHA_POWER_VERTEX_LIMIT) -> Witnessed:
    if g.n**j > limit:
        raise GraphError(f"alpha of {g.n}^{j} vertices exceeds the search limit")
    return independence_number(strong_power(g, j, limit))


def capacity_interval(
    g: Graph,
    max_power: int = 2,
    theta_value: Optional[float] = None,
    theta_tol: Optional[float] = None,
    chibarf: Optional[Fraction] = None,
    power_vertex_limit: int = ALPHA_POWER_VERTEX_LIMIT,
) -> CapacityInterval:
    """Best exact lower root over powers 1..max_power plus given uppers."""
    if max_power < 1:
        raise ValueError("max_power must be >= 1")
    best: Optional[Exact] = None
    best_j = 1
    best_wit: tuple[int, ...] = ()
    by_power: dict[int, int] = {}
    for j in range(1, max_power + 1):
        if g.n**j > power_vertex_limit:
            break
        wj = alpha_of_power(g, j, power_vertex_limit)
        by_power[j] = wj.value
        root = Exact.nth_root(wj.value, j)
        if best is None or root > best:
            best, best_j, best_wit = root, j, wj.witness
    assert best is not None
    return CapacityInterval(
        lower=best,
        power=best_j,
        witness=best_wit,
        alpha_by_power=by_power,
        theta_value=theta_value,
        theta_tol=theta_tol,
        chibarf=chibarf,
    )


# -- Haemers minrank over GF(2) -----------------------------------------


@dataclass(frozen=True)
class MinrankValue:
    value: int
    field_name: str  # "GF(2)"
    matrix: tuple[int, ...]  # row bitmasks of a fitting matrix of this rank

    def verify(self, g: Graph) -> bool:
        n = g.n
        if len(self.matrix) != n:
            return False
        for i in range(n):
            if not self.matrix[i] >> i & 1:
                return False
            for j in range(n):
                if i != j and not g.has_edge(i, j) and self.matrix[i] >> j & 1:
                    return False
        return gf2_rank(list(self.matrix)) == self.value


def gf2_rank(rows: list[int]) -> int:
    rank = 0
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
            rank += 1
    return rank


def _clique_cover_matrix(g: Graph) -> tuple[int, ...]:
    """Block all-ones matrix over a clique cover; fits g with rank = #cliques."""
    cover = clique_cover_number(g)
    classes: dict[int, int] = {}
    for v, c in enumerate(cover.witness):
        classes[c] = classes.get(c, 0) | 1 << v
    rows = [0] * g.n
    for mask in classes.values():
        for v in bits(mask):
            rows[v] = mask
    return tuple(rows)


def minrank_gf2(g: Graph, size_limit: int = 12, node_budget: int = 4_000_000) -> MinrankValue:
    """Minimum GF(2) rank over matrices with nonzero diagonal and zeros on
    non-adjacent pairs.

    Search: assign each vertex a (row, column) vector pair in GF(2)^r with
    u_i.v_i = 1 and u_i.v_j = u_j.v_i = 0 for non-adjacent i != j; B_ij is
    then u_i.v_j.  Symmetry is NOT imposed (any fitting matrix is allowed).
    """
    n = g.n
    if n > size_limit:
        raise GraphError(f"minrank limited to {size_limit} vertices, got {n}")
    lo = independence_number(g).value
    cover_rows = _clique_cover_matrix(g)
    hi = gf2_rank(list(cover_rows))

    nonadj = [
        [j for j in range(n) if j != i and not g.has_edge(i, j)] for i in range(n)
    ]

    def dot(a: int, b: int) -> int:
        return (a & b).bit_count() & 1

    nodes = 0

    def assign(r: int, i: int, us: list[int], vs: list[int]) -> bool:
        nonlocal nodes
        if i == n:
            return True
        for u in range(1, 1 << r):
            for v in range(1 << r):
                if dot(u, v) != 1:
                    continue
                nodes += 1
                if nodes > node_budget:
                    raise BudgetExhausted("minrank search budget")
                ok = True
                for j in nonadj[i]:
                    if j < i and (dot(u, vs[j]) or dot(us[j], v)):
                        ok = False
                        break
                if ok:
                    us.append(u)
                    vs.append(v)
                    if assign(r, i + 1, us, vs):
                        return True
                    us.pop()
                    vs.pop()
        return False

    for r in range(lo, hi):
        us: list[int] = []
        vs: list[int] = []
        if assign(r, 0, us, vs):
            rows = tuple(
                sum(dot(us[i], vs[j]) << j for j in range(n)) for i in range(n)
            )
            mv = MinrankValue(gf2_rank(list(rows)), "GF(2)", rows)
            assert mv.value <= r and mv.verify(g)
            return mv
    mv = MinrankValue(hi, "GF(2)", cover_rows)
    assert mv.verify(g)
    return mv


def gamma_power_root(g: Graph, m: int, size_limit: int = 12) -> Exact:
    """gamma(g^m)^(1/m): an upper approximant of the minrank power limit."""
    gm = strong_power(g, m) if m > 1 else g
    value = minrank_gf2(gm, size_limit=size_limit).value
    return Exact.nth_root(value, m)


# -- largest induced subgraph homomorphic to a pattern -------------------


@dataclass(frozen=True)
class BetaWitness:
    value: int
    vertices: tuple[int, ...]
    hom: Optional[HomMap]  # None only for the empty-pattern edge cases


def beta(g: Graph, f: Graph, budget: int = 2_000_000) -> BetaWitness:
    """Max vertices of an induced subgraph of g admitting a hom into f."""
    n = g.n
    whole = hom_exists(g, f, budget)
    if whole.status == INCONCLUSIVE:
        raise BudgetExhausted("beta: hom search budget")
    if whole.status == FOUND:
        return BetaWitness(n, tuple(range(n)), whole.witness)
    # a color class partition bound: subsets larger than chi(f)-colorable need not apply
    for size in range(n - 1, 0, -1):
        for subset in itertools.combinations(range(n), size):
            sub = g.induced(subset)
            res = hom_exists(sub, f, budget)
            if res.status == INCONCLUSIVE:
                raise BudgetExhausted("beta: hom search budget")
            if res.status == FOUND:
                return BetaWitness(size, subset, res.witness)
    raise AssertionError("unreachable: a single vertex always maps")


def beta_f_estimate(g: Graph, f: Graph, k: int, m: int, size_limit: int = 600,
                    budget: int = 2_000_000) -> float:
    """Finite-power diagnostic beta(complement(g)^{OR km}, f^{OR m})^(1/(km)).

    HEURISTIC: a lower approximant of its supermultiplicative limit, so
    inequalities evaluated with it are diagnostics, never certificates.
    """
    from .graphs import or_power

    gbar = g.complement()
    if gbar.n ** (k * m) > size_limit or f.n**m > size_limit:
        raise GraphError("beta_f_estimate: OR power exceeds the size limit")
    gp = or_power(gbar, k * m, size_limit) if k * m > 1 else gbar
    fp = or_power(f, m, size_limit) if m > 1 else f
    b = beta(gp, fp, budget)
    return b.value ** (1.0 / (k * m))
