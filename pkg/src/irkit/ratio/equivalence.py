"""Information equivalence, weak equivalence, partial order, metrics, spectra.

Certification policy: `equivalent` needs certified lower bounds >= 1 in both
directions (then the reciprocal-product inequality forces both ratios to be
exactly 1); `inequivalent` needs a certified upper bound < 1 in some
direction.  Weak equivalence is certified only from exactly-known ratio
values (exact-value families), everything else is `unknown`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from ..graphs import Graph
from ..graphs.expr import Expr
from .engine import RatioBounds, Workspace, ir_bounds

CERTIFIED_EQUIVALENT = "certified_equivalent"
CERTIFIED_INEQUIVALENT = "certified_inequivalent"
UNKNOWN = "unknown"


@dataclass
class EquivalenceReport:
    """Joint report on ~, weak ~, and the partial order for a pair (a, b).

    forward bounds Ir(b/a) (a as source), backward bounds Ir(a/b).
    """

    a: Graph
    b: Graph
    forward: RatioBounds
    backward: RatioBounds
    equivalence: str = UNKNOWN
    weak: str = UNKNOWN
    order: str = UNKNOWN  # "equal" | "a_below_b" | "b_below_a" | "incomparable" | unknown
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "equivalence": self.equivalence,
            "weak": self.weak,
            "order": self.order,
            "forward": self.forward.to_json(),
            "backward": self.backward.to_json(),
            "notes": self.notes,
        }


def equivalence_check(
    a: Graph,
    b: Graph,
    ws: Optional[Workspace] = None,
    a_expr: Optional[Expr] = None,
    b_expr: Optional[Expr] = None,
) -> EquivalenceReport:
    ws = ws or Workspace()
    fwd = ir_bounds(a, b, ws=ws, source_expr=a_expr, channel_expr=b_expr)  # Ir(b/a)
    bwd = ir_bounds(b, a, ws=ws, source_expr=b_expr, channel_expr=a_expr)  # Ir(a/b)
    rep = EquivalenceReport(a, b, fwd, bwd)

    fwd_ge1 = fwd.lower.lo >= 1.0 or (
        fwd.lower.expr is not None and fwd.lower.expr.compare(1) in (0, 1)
    )
    bwd_ge1 = bwd.lower.lo >= 1.0 or (
        bwd.lower.expr is not None and bwd.lower.expr.compare(1) in (0, 1)
    )
    fwd_lt1 = fwd.upper.expr.compare(1) == -1 if fwd.upper.expr is not None else fwd.upper.hi < 1.0
    bwd_lt1 = bwd.upper.expr.compare(1) == -1 if bwd.upper.expr is not None else bwd.upper.hi < 1.0

    if fwd_ge1 and bwd_ge1:
        rep.equivalence = CERTIFIED_EQUIVALENT
        rep.weak = CERTIFIED_EQUIVALENT
        rep.order = "equal"
        rep.notes.append("both lower bounds reach 1; reciprocal product pins both ratios at 1")
        return rep
    if fwd_lt1 or bwd_lt1:
        rep.equivalence = CERTIFIED_INEQUIVALENT
        if fwd_lt1 and bwd_lt1:
            rep.order = "incomparable"
        elif fwd_lt1 and bwd_ge1:
            rep.order = "b_below_a"
        elif bwd_lt1 and fwd_ge1:
            rep.order = "a_below_b"
    elif fwd_ge1:
        rep.order = "a_below_b"
    elif bwd_ge1:
        rep.order = "b_below_a"

    # weak equivalence from exactly-known directional values
    fx, bx = fwd.exact_value(), bwd.exact_value()
    if fx is not None and bx is not None:
        prod = fx.mul(bx)
        if prod is not None:
            cmp1 = prod.compare(1)
            if cmp1 == 0:
                rep.weak = CERTIFIED_EQUIVALENT
                if rep.equivalence == UNKNOWN and fx.compare(1) != 0:
                    rep.equivalence = CERTIFIED_INEQUIVALENT
                    rep.notes.append("weakly equivalent with ratios away from 1")
            elif cmp1 == -1:
                rep.weak = CERTIFIED_INEQUIVALENT
    if rep.weak == UNKNOWN and rep.equivalence == CERTIFIED_INEQUIVALENT:
        # product < 1 certified when both uppers multiply below 1
        if fwd.upper.hi * bwd.upper.hi < 1.0:
            rep.weak = CERTIFIED_INEQUIVALENT
    return rep


@dataclass
class MetricIntervals:
    d: tuple[float, float]
    d_weak: tuple[float, float]


def metric_eval(a: Graph, b: Graph, ws: Optional[Workspace] = None,
                a_expr: Optional[Expr] = None, b_expr: Optional[Expr] = None) -> MetricIntervals:
    """Interval images of d = -log min(ratios) and d_w = -log(product)."""
    ws = ws or Workspace()
    fwd = ir_bounds(a, b, ws=ws, source_expr=a_expr, channel_expr=b_expr)
    bwd = ir_bounds(b, a, ws=ws, source_expr=b_expr, channel_expr=a_expr)

    def neg_log(x: float) -> float:
        if x <= 0:
            return math.inf
        return max(0.0, -math.log2(x))

    d_lo = neg_log(min(fwd.upper.hi, bwd.upper.hi))
    d_hi = neg_log(min(fwd.lower.lo, bwd.lower.lo))
    w_lo = neg_log(fwd.upper.hi * bwd.upper.hi)
    w_hi = neg_log(fwd.lower.lo * bwd.lower.lo)
    return MetricIntervals((d_lo, d_hi), (w_lo, w_hi))


@dataclass
class SpectrumEntry:
    reference: str
    as_channel: RatioBounds  # Ir(ref-complement / g): source spectrum entry
    as_source: RatioBounds  # Ir(g / ref-complement): channel spectrum entry


def core_spectra(g: Graph, ws: Optional[Workspace] = None,
                 refs: Optional[list[str]] = None) -> list[SpectrumEntry]:
    """Finite source/channel spectra against the configured reference cores.

    Necessary-condition diagnostics only: entries are intervals, and the
    reference list is a finite slice of the core enumeration.
    """
    from ..graphs.expr import eval_text

    ws = ws or Workspace()
    refs = list(refs if refs is not None else ws.config.spectrum_refs)
    out = []
    for name in refs:
        ref = eval_text(name, ws.config.size_limit).complement()
        out.append(
            SpectrumEntry(
                reference=name,
                as_channel=ir_bounds(g, ref, ws=ws),
                as_source=ir_bounds(ref, g, ws=ws),
            )
        )
    return out


def spectra_consistent_with_order(lo: list[SpectrumEntry], hi: list[SpectrumEntry]) -> bool:
    """Interval-level check of the spectrum characterization of the order.

    If L(a) <= L(b) then pointwise sigma_S(b) <= sigma_S(a) and
    sigma_C(a) <= sigma_C(b); on intervals the testable (necessary) form is
    that no entry certifies the reverse strict inequality.
    """
    for ea, eb in zip(lo, hi):
        # sigma_S: Ir(ref/g): b's entry must not certifiably exceed a's
        if eb.as_channel.lower.lo > ea.as_channel.upper.hi + 1e-9:
            return False
        # sigma_C: Ir(g/ref): a's entry must not certifiably exceed b's
        if ea.as_source.lower.lo > eb.as_source.upper.hi + 1e-9:
            return False
    return True
