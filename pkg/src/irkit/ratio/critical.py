"""Information criticality: an edge whose removal shifts every ratio.

Certification is fully exact: an edge e and an independent set of
F-minus-e strictly larger than chibarf(F) witness
Theta(F\\e) >= alpha(F\\e) > chibarf(F), which forces
Ir((F\\e)/F) > 1 and hence strict movement of the whole spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactness import Exact
from ..graphs import Graph, to_graph6
from ..invariants import alpha_of_power, verify_independent_set
from .engine import Workspace, _frac_json

CERTIFIED_CRITICAL = "certified_critical"
UNKNOWN = "unknown"


@dataclass
class CriticalityReport:
    status: str
    edge: Optional[tuple[int, int]] = None
    power: int = 1
    independent_set: Optional[tuple[int, ...]] = None
    chibarf: Optional[Fraction] = None
    cor4_fast_path: bool = False
    certificate: Optional[dict] = None

    def verify(self, f: Graph) -> bool:
        if self.status != CERTIFIED_CRITICAL:
            return True
        u, v = self.edge
        if not f.has_edge(u, v):
            return False
        h = f.delete_edge(u, v)
        if self.power == 1:
            if not verify_independent_set(h, self.independent_set):
                return False
            size = Exact(len(self.independent_set))
        else:
            from ..graphs import strong_power

            hp = strong_power(h, self.power)
            if not verify_independent_set(hp, self.independent_set):
                return False
            size = Exact.nth_root(len(self.independent_set), self.power)
        return size > Exact(self.chibarf)


def criticality_check(f: Graph, ws: Optional[Workspace] = None,
                      max_power: int = 2) -> CriticalityReport:
    """Look for an edge e with a certified Theta(F\\e) > chibarf(F)."""
    ws = ws or Workspace()
    if f.num_edges() == 0:
        return CriticalityReport(UNKNOWN)
    cb = ws.chibarf(f)
    target = cb.value

    fbar = f.complement()
    fast = (
        fbar.n >= 3
        and fbar.is_connected()
        and fbar.odd_girth() != 3
        and target < 3
    )

    for power in range(1, max_power + 1):
        if f.n**power > ws.config.alpha_power_limit:
            break
        for u, v in f.edges():
            h = f.delete_edge(u, v)
            wit = alpha_of_power(h, power, ws.config.alpha_power_limit)
            if Exact.nth_root(wit.value, power) > Exact(target):
                cert = {
                    "rule": "criticality",
                    "graph": to_graph6(f),
                    "edge": [u, v],
                    "power": power,
                    "independent_set": list(wit.witness),
                    "chibarf": _frac_json(cb),
                    "cor4_fast_path": fast,
                }
                rep = CriticalityReport(
                    CERTIFIED_CRITICAL, (u, v), power, wit.witness, target, fast, cert
                )
                assert rep.verify(f)
                return rep
    return CriticalityReport(UNKNOWN, chibarf=target, cor4_fast_path=fast)
