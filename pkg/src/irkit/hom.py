"""Graph homomorphism search, retracts, cores, homomorphic equivalence.

Backtracking CSP over target-vertex domains with forward checking and
smallest-domain-first variable order; candidate images tried by descending
target degree.  Searches are deterministic for fixed inputs.  `none` is
only ever returned after an exhaustive search whose pre-search cutoffs are
individually sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits
from .graphs.canon import automorphism_orbits, canonical_key

FOUND = "found"
NONE = "none"
INCONCLUSIVE = "inconclusive"


class BudgetExhausted(RuntimeError):
    """A search that must be exhaustive ran out of node budget."""


@dataclass(frozen=True)
class HomMap:
    """A vertex map source -> target; verifiable in isolation."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def verify(self) -> bool:
        if len(self.mapping) != self.source.n:
            return False
        if any(not 0 <= t < self.target.n for t in self.mapping):
            return False
        for u, v in self.source.edges():
            if not self.target.has_edge(self.mapping[u], self.mapping[v]):
                return False
        return True

    def compose(self, then: "HomMap") -> "HomMap":
        """self: A->B composed with then: B->C, giving A->C."""
        if then.source.n != self.target.n:
            raise ValueError("composition mismatch")
        return HomMap(self.source, then.target, tuple(then.mapping[t] for t in self.mapping))

    def to_json(self) -> dict:
        from .graphs import to_graph6

        return {
            "source": to_graph6(self.source),
            "target": to_graph6(self.target),
            "map": list(self.mapping),
        }


@dataclass
class HomResult:
    status: str  # found | none | inconclusive
    witness: Optional[HomMap] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == FOUND


def _greedy_clique_lb(g: Graph) -> int:
    best = 1
    for s in range(g.n):
        clique = 1 << s
        cand = g.rows[s]
        while cand:
            # largest-degree-in-candidates vertex joins next
            pick, pdeg = -1, -1
            for v in bits(cand):
                d = (g.rows[v] & cand).bit_count()
                if d > pdeg:
                    pick, pdeg = v, d
            clique |= 1 << pick
            cand &= g.rows[pick]
        best = max(best, clique.bit_count())
    return best


def _greedy_coloring_ub(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    color = {}
    used = 0
    for v in order:
        taken = {color[w] for w in bits(g.rows[v]) if w in color}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
        used = max(used, c + 1)
    return used


def _sound_cutoffs(g: Graph, h: Graph) -> bool:
    """True when no homomorphism g -> h can exist, by cheap sound tests."""
    if g.num_edges() > 0 and h.num_edges() == 0:
        return True
    # a clique of g must map injectively onto a clique of h
    wg = _greedy_clique_lb(g)
    if wg > _greedy_coloring_ub(h):
        return True  # then chi(g) >= omega(g) > chi(h), impossible
    if wg > 1:
        from .invariants import clique_number

        if h.n <= 64 and clique_number(g).value > clique_number(h).value:
            return True
    og_h = h.odd_girth()
    og_g = g.odd_girth()
    if og_g is not None and og_h is None:
        return True  # odd cycle cannot map into a bipartite graph
    if og_g is not None and og_h is not None and og_g < og_h:
        return True  # images of odd closed walks contain odd cycles no longer
    return False


def hom_exists(
    g: Graph,
    h: Graph,
    budget: int = 2_000_000,
    first_domain: Optional[list[int]] = None,
) -> HomResult:
    """Search for a homomorphism g -> h.

    found         -> witness verifies;
    none          -> exhaustive search completed (cutoffs are sound);
    inconclusive  -> node budget exhausted.

    `first_domain` optionally restricts the image of the first assigned
    vertex (used for orbit symmetry breaking; the caller is responsible
    for its soundness).
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if _sound_cutoffs(g, h):
        return HomResult(NONE)

    full = (1 << h.n) - 1
    domains = [full] * g.n
    if first_domain is not None:
        seed = max(range(g.n), key=g.degree)
        domains[seed] = sum(1 << t for t in first_domain)
        if domains[seed] == 0:
            raise ValueError("empty first_domain")

    value_order = sorted(range(h.n), key=lambda t: (-h.degree(t), t))
    assignment = [-1] * g.n
    nodes = 0

    def pick_var() -> int:
        best, best_size = -1, 1 << 62
        for v in range(g.n):
            if assignment[v] < 0:
                size = domains[v].bit_count()
                if size < best_size:
                    best, best_size = v, size
        return best

    def search() -> Optional[bool]:
        """True found, False exhausted, None budget out."""
        nonlocal nodes
        v = pick_var()
        if v < 0:
            return True
        dom = domains[v]
        for t in value_order:
            if not dom >> t & 1:
                continue
            nodes += 1
            if nodes > budget:
                return None
            assignment[v] = t
            saved = []
            ok = True
            for u in bits(g.rows[v]):
                if assignment[u] >= 0:
                    continue
                saved.append((u, domains[u]))
                domains[u] &= h.rows[t]
                if domains[u] == 0:
                    ok = False
                    break
            if ok:
                res = search()
                if res is not False:
                    return res
            for u, d in saved:
                domains[u] = d
            assignment[v] = -1
        return False

    res = search()
    if res is None:
        return HomResult(INCONCLUSIVE, nodes=nodes)
    if res:
        hm = HomMap(g, h, tuple(assignment))
        assert hm.verify()
        return HomResult(FOUND, hm, nodes)
    return HomResult(NONE, nodes=nodes)


def hom_exists_orbit_reduced(g: Graph, h: Graph, budget: int = 2_000_000) -> HomResult:
    """hom_exists with the first image restricted to target-orbit representatives."""
    reps = [orbit[0] for orbit in automorphism_orbits(h)]
    return hom_exists(g, h, budget, first_domain=reps)


@dataclass
class CoreResult:
    core: Graph
    vertices: list[int]  # labels in the input graph
    retraction: HomMap  # input graph -> core


def core_of(g: Graph, budget: int = 2_000_000) -> CoreResult:
    """The core: an induced subgraph to which g retracts, itself a core.

    Found by repeatedly locating a non-surjective endomorphism and
    restricting to its image.  Raises BudgetExhausted if any of the
    endomorphism searches is inconclusive.
    """
    current = list(range(g.n))  # original labels of the working subgraph
    to_current = {v: i for i, v in enumerate(current)}
    rho = HomMap(g, g, tuple(range(g.n)))  # g -> working subgraph, in working indices

    while True:
        sub = g.induced(current)
        shrunk = False
        for drop in range(len(current)):
            keep = [i for i in range(len(current)) if i != drop]
            smaller = sub.induced(keep)
            res = hom_exists(sub, smaller, budget)
            if res.status == INCONCLUSIVE:
                raise BudgetExhausted(f"core search on {len(current)} vertices")
            if res.status == FOUND:
                phi = res.witness
                image = sorted({keep[t] for t in phi.mapping})  # indices in `sub`
                # compose: g -> sub -> image-subgraph
                image_pos = {iv: p for p, iv in enumerate(image)}
                comp = tuple(image_pos[keep[phi.mapping[rho.mapping[v]]]] for v in range(g.n))
                current = [current[iv] for iv in image]
                rho = HomMap(g, g.induced(current), comp)
                assert rho.verify()
                shrunk = True
                break
        if not shrunk:
            return CoreResult(sub, current, rho)


def is_core(g: Graph, budget: int = 2_000_000) -> bool:
    """True iff every endomorphism is an automorphism (no proper retract)."""
    for drop in range(g.n):
        keep = [i for i in range(g.n) if i != drop]
        res = hom_exists(g, g.induced(keep), budget)
        if res.status == INCONCLUSIVE:
            raise BudgetExhausted(f"is_core on {g.n} vertices")
        if res.status == FOUND:
            return False
    return True


def hom_equivalent(g: Graph, h: Graph, budget: int = 2_000_000) -> Optional[bool]:
    """True/False when decided; None when some direction was inconclusive."""
    fwd = hom_exists(g, h, budget)
    if fwd.status == INCONCLUSIVE:
        return None
    if fwd.status == NONE:
        return False
    bwd = hom_exists(h, g, budget)
    if bwd.status == INCONCLUSIVE:
        return None
    return bwd.status == FOUND


def cores_match(g: Graph, h: Graph, budget: int = 2_000_000) -> bool:
    """Cross-check for hom_equivalent via canonical keys of the cores."""
    return canonical_key(core_of(g, budget).core) == canonical_key(core_of(h, budget).core)
