"""Canonical labeling by iterated refinement plus backtracking.

The canonical form is the lexicographically smallest relabeled adjacency
certificate over the leaves of an individualization-refinement tree.
Automorphisms discovered along the way (leaves with equal certificates)
prune sibling branches whose individualized vertex lies in a known orbit,
which is what makes vertex-transitive inputs (cycles, Kneser graphs, the
Schläfli graph) tractable.  Adequate at desk scale, not a nauty.
"""

from __future__ import annotations

from typing import Optional

from .core import Graph, bits

_MAX_STORED_AUTS = 800


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (1-WL with order kept)."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for splitter in [sum(1 << v for v in c) for c in cells]:
            new_cells: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                byc: dict[int, list[int]] = {}
                for v in cell:
                    byc.setdefault((g.rows[v] & splitter).bit_count(), []).append(v)
                if len(byc) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for k in sorted(byc):
                        new_cells.append(byc[k])
            cells = new_cells
            if changed:
                break
    return cells


def _leaf_certificate(g: Graph, order: list[int]) -> bytes:
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    out = bytearray()
    acc, k = 0, 0
    for j in range(1, g.n):
        vj = order[j]
        for i in range(j):
            acc = acc << 1 | (g.rows[order[i]] >> vj & 1)
            k += 1
            if k == 8:
                out.append(acc)
                acc, k = 0, 0
    if k:
        out.append(acc << (8 - k))
    return bytes(out)


class _Canonizer:
    def __init__(self, g: Graph):
        self.g = g
        self.best: Optional[bytes] = None
        self.best_order: Optional[list[int]] = None
        self.auts: list[list[int]] = []
        self.orbits = _UnionFind(g.n)

    def run(self) -> None:
        by_deg: dict[int, list[int]] = {}
        for v in range(self.g.n):
            by_deg.setdefault(self.g.degree(v), []).append(v)
        cells = [by_deg[d] for d in sorted(by_deg)]
        self._descend(_refine(self.g, cells), [])

    def _descend(self, cells: list[list[int]], path: list[int]) -> None:
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _leaf_certificate(self.g, order)
            if self.best is None or cert < self.best:
                self.best = cert
                self.best_order = order
            elif cert == self.best:
                self._record_automorphism(order)
            return
        seen: list[int] = []
        for v in target:
            if any(self._in_same_orbit(v, u, path) for u in seen):
                continue
            seen.append(v)
            rest = [u for u in target if u != v]
            child: list[list[int]] = []
            for c in cells:
                if c is target:
                    child.append([v])
                    child.append(rest)
                else:
                    child.append(c)
            self._descend(_refine(self.g, child), path + [v])

    def _record_automorphism(self, order: list[int]) -> None:
        # best_order and order index the same certificate: composing gives an automorphism
        sigma = [0] * self.g.n
        for p in range(self.g.n):
            sigma[self.best_order[p]] = order[p]
        if len(self.auts) < _MAX_STORED_AUTS:
            self.auts.append(sigma)
        for v in range(self.g.n):
            self.orbits.union(v, sigma[v])

    def _in_same_orbit(self, a: int, b: int, path: list[int]) -> bool:
        if not path:
            return self.orbits.same(a, b)
        # deeper levels may only use automorphisms fixing the individualized path
        uf = _UnionFind(self.g.n)
        for sigma in self.auts:
            if all(sigma[p] == p for p in path):
                for v in range(self.g.n):
                    uf.union(v, sigma[v])
        return uf.same(a, b)


def canonical_key(g: Graph) -> bytes:
    """Bytes equal iff graphs are isomorphic (n is prefixed to the form)."""
    c = _Canonizer(g)
    c.run()
    return bytes([g.n & 0xFF, (g.n >> 8) & 0xFF]) + c.best


def canonical_order(g: Graph) -> list[int]:
    c = _Canonizer(g)
    c.run()
    return c.best_order


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits under the discovered automorphism group.

    The union over discovered generators can be coarser than the true orbit
    partition in adversarial cases, but each reported orbit is always a
    subset of a true orbit, which is the sound direction for symmetry
    breaking in searches.
    """
    c = _Canonizer(g)
    c.run()
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(c.orbits.find(v), []).append(v)
    return sorted(groups.values())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)
