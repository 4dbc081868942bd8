"""Assembly of certified lower/upper bounds on the information ratio.

Convention used throughout the package: `ir_bounds(source, channel)`
bounds Ir(channel/source), the number of source symbols per channel use.
Lower endpoints come from explicit constructions (codes, separation,
concatenation, product/union inequalities); upper endpoints from
hom-monotone invariant ratios.  Every endpoint carries a certificate that
`irkit.ratio.certificates.verify_certificate` can replay.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..codes import CodeMap, find_code, identity_code, ratio_frontier
from ..config import RunConfig
from ..exactness import Exact, LogRatio
from ..fractional import FractionalValue, chi_bar_f
from ..graphs import Graph, GraphError, canonical_key, strong_product, to_graph6
from ..graphs.expr import (
    Binary,
    Expr,
    Power,
    split_power,
    strong_factors,
    union_parts,
)
from ..hom import FOUND, BudgetExhausted, core_of, hom_exists
from ..invariants import (
    CapacityInterval,
    MinrankValue,
    Witnessed,
    capacity_interval,
    gamma_power_root,
    independence_number,
    minrank_gf2,
)
from ..theta import ThetaError, ThetaValue, lovasz_theta

INF = float("inf")


# -- serialization helpers for certificates -------------------------------


def _wit_json(w: Witnessed) -> dict:
    return {"value": w.value, "witness": list(w.witness)}


def _frac_json(fv: FractionalValue) -> dict:
    return {
        "value": str(fv.value),
        "cover": [[m, str(w)] for m, w in fv.cover_weights],
        "vertex_weights": [str(y) for y in fv.vertex_weights],
    }


def _theta_json(tv: ThetaValue) -> dict:
    return {
        "value": tv.value,
        "tol": tv.tol,
        "primal": [list(map(float, row)) for row in tv.primal],
        "dual": [list(map(float, row)) for row in tv.dual],
    }


def _capacity_json(ci: CapacityInterval) -> dict:
    return {
        "lower": ci.lower.to_json(),
        "power": ci.power,
        "witness": list(ci.witness),
        "alpha_by_power": {str(k): v for k, v in ci.alpha_by_power.items()},
        "theta": None if ci.theta_value is None else {"value": ci.theta_value, "tol": ci.theta_tol},
        "chibarf": None if ci.chibarf is None else str(ci.chibarf),
    }


def _minrank_json(mv: MinrankValue) -> dict:
    return {"value": mv.value, "field": mv.field_name, "matrix": list(mv.matrix)}


# -- workspace: memoized invariant provider ------------------------------


class Workspace:
    """Computes and memoizes per-graph invariants, optionally disk-cached."""

    def __init__(self, config: Optional[RunConfig] = None, cache=None):
        self.config = config or RunConfig()
        self.cache = cache
        self._memo: dict = {}

    def _get(self, name: str, g: Graph, params, compute):
        key = (name, g.rows, params)
        if key in self._memo:
            return self._memo[key]
        value = compute()
        self._memo[key] = value
        return value

    def alpha(self, g: Graph) -> Witnessed:
        return self._get("alpha", g, (), lambda: independence_number(g))

    def chibarf(self, g: Graph) -> FractionalValue:
        return self._get("chibarf", g, (), lambda: chi_bar_f(g))

    def theta(self, g: Graph) -> Optional[ThetaValue]:
        def compute():
            if g.n > self.config.theta_max_vertices:
                return None
            try:
                return lovasz_theta(g, self.config.tol)
            except ThetaError:
                return None

        return self._get("theta", g, (self.config.tol,), compute)

    def capacity(self, g: Graph) -> CapacityInterval:
        def compute():
            tv = self.theta(g)
            cb = self.chibarf(g)
            return capacity_interval(
                g,
                max_power=self.config.max_power,
                theta_value=None if tv is None else tv.value,
                theta_tol=None if tv is None else tv.tol,
                chibarf=cb.value,
                power_vertex_limit=self.config.alpha_power_limit,
            )

        return self._get("capacity", g, (self.config.max_power,), compute)

    def minrank(self, g: Graph) -> Optional[MinrankValue]:
        def compute():
            if g.n > self.config.minrank_limit:
                return None
            try:
                return minrank_gf2(g, self.config.minrank_limit, self.config.budget_nodes)
            except BudgetExhausted:
                return None

        return self._get("minrank", g, (), compute)

    def core_complement(self, g: Graph):
        """(reduced graph, certificate) for complement-core reduction, or (g, None)."""

        def compute():
            if g.n > self.config.core_reduce_max:
                return g, None
            try:
                cr = core_of(g.complement(), self.config.budget_nodes)
            except BudgetExhausted:
                return g, None
            if cr.core.n == g.n:
                return g, None
            reduced = cr.core.complement()
            back = hom_exists(cr.core, g.complement(), self.config.budget_nodes)
            if back.status != FOUND:  # inclusion always exists; guard anyway
                return g, None
            cert = {
                "rule": "complement_core",
                "graph": to_graph6(g),
                "reduced": to_graph6(reduced),
                "hom_to_core": cr.retraction.to_json(),
                "hom_from_core": back.witness.to_json(),
            }
            return reduced, cert

        return self._get("core_complement", g, (), compute)


# -- endpoints and bounds --------------------------------------------------


@dataclass
class Endpoint:
    """One side of a certified enclosure of Ir(channel/source).

    For a lower endpoint the certified statement is Ir >= lo; for an upper
    endpoint it is Ir <= hi.  `expr` carries the exact value when the rule
    produced one.
    """

    lo: float
    hi: float
    expr: Optional[LogRatio]
    rule: str
    cert: dict

    @staticmethod
    def exact(expr: LogRatio, rule: str, cert: dict) -> "Endpoint":
        lo, hi = expr.interval()
        cert = dict(cert)
        cert.setdefault("rule", rule)
        cert["value"] = expr.to_json()
        return Endpoint(lo, hi, expr, rule, cert)

    @staticmethod
    def interval(lo: float, hi: float, rule: str, cert: dict) -> "Endpoint":
        cert = dict(cert)
        cert.setdefault("rule", rule)
        cert["value"] = {"kind": "float_interval", "payload": [lo, hi]}
        return Endpoint(lo, hi, None, rule, cert)

    def shift_plus(self, q: Fraction, rule: str, cert: dict) -> "Endpoint":
        """Exact map x -> q + x applied to this endpoint."""
        if self.expr is not None:
            return Endpoint.exact(self.expr.add_rational(q), rule, cert)
        return Endpoint.interval(self.lo + float(q), self.hi + float(q), rule, cert)


_TIE = 1e-9  # exact endpoints win against floats within this float slack


def _pick_lower(cands: list[Endpoint]) -> Endpoint:
    best = max(e.lo for e in cands)
    tied = [e for e in cands if e.lo >= best - _TIE]
    exact = [e for e in tied if e.expr is not None]
    return max(exact or tied, key=lambda e: e.lo)


def _pick_upper(cands: list[Endpoint]) -> Endpoint:
    best = min(e.hi for e in cands)
    tied = [e for e in cands if e.hi <= best + _TIE]
    exact = [e for e in tied if e.expr is not None]
    return min(exact or tied, key=lambda e: e.hi)


@dataclass
class RatioBounds:
    source: Graph
    channel: Graph
    lower: Endpoint
    upper: Endpoint
    flags: list[str] = field(default_factory=list)
    lower_candidates: list[Endpoint] = field(default_factory=list)
    upper_candidates: list[Endpoint] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        if "infinite" in self.flags:
            return True
        if self.lower.expr is None or self.upper.expr is None:
            return False
        return self.lower.expr.compare(self.upper.expr) == 0

    def exact_value(self) -> Optional[LogRatio]:
        return self.lower.expr if self.exact and self.lower.expr is not None else None

    def to_json(self) -> dict:
        def ep(e: Endpoint, side: str) -> dict:
            if e.expr is not None:
                exactness = "rational" if e.expr.as_rational() is not None else "log_ratio"
            elif math.isinf(e.lo):
                exactness = "infinite"
            else:
                exactness = "float"
            return {
                "value": e.lo if side == "lower" else e.hi,
                "enclosure": [e.lo, e.hi],
                "exactness": exactness,
                "exact": None if e.expr is None else e.expr.to_json(),
                "rule": e.rule,
                "certificate": e.cert,
            }

        return {
            "pair": {"source": to_graph6(self.source), "channel": to_graph6(self.channel)},
            "lower": ep(self.lower, "lower"),
            "upper": ep(self.upper, "upper"),
            "flags": list(self.flags),
        }


def _stamp(cert: dict, source: Graph, channel: Graph) -> None:
    """Bind a certificate to its pair so it verifies in isolation."""
    cert.setdefault("source", to_graph6(source))
    cert.setdefault("channel", to_graph6(channel))


def _finish(rb: RatioBounds) -> RatioBounds:
    for ep in [rb.lower, rb.upper] + rb.lower_candidates + rb.upper_candidates:
        _stamp(ep.cert, rb.source, rb.channel)
    return rb


def _flag_bounds(source: Graph, channel: Graph, value: float, flag: str, rule: str) -> RatioBounds:
    cert = {"rule": rule, "source": to_graph6(source), "channel": to_graph6(channel)}
    if math.isinf(value):
        ep = Endpoint(INF, INF, None, rule, dict(cert, value={"kind": "infinite"}))
        flags = [flag, "infinite"]
    else:
        ep = Endpoint.exact(LogRatio.from_rational(0), rule, cert)
        flags = [flag]
    return RatioBounds(source, channel, ep, ep, flags, [ep], [ep])


# -- individual bound rules ------------------------------------------------


def separation_lower(ws: Workspace, source: Graph, channel: Graph) -> Endpoint:
    """Compress to bits at chibarf(source), send bits at capacity(channel)."""
    cap = ws.capacity(channel)
    cb = ws.chibarf(source)
    if cb.value <= 1:
        raise GraphError("separation needs a non-complete source")
    expr = LogRatio(cap.lower, Exact(cb.value))
    cert = {
        "rule": "separation",
        "source": to_graph6(source),
        "channel": to_graph6(channel),
        "capacity_lower": _capacity_json(cap),
        "chibarf_source": _frac_json(cb),
    }
    return Endpoint.exact(expr, "separation", cert)


def code_lower(source: Graph, channel: Graph, code: CodeMap) -> Endpoint:
    expr = LogRatio.from_rational(Fraction(code.k, code.n))
    cert = {"rule": "code", "code": code.to_json()}
    return Endpoint.exact(expr, "code", cert)


def concat_lower(ws: Workspace, source: Graph, pivot: Graph, channel: Graph,
                 left: Endpoint, right: Endpoint) -> Endpoint:
    """Ir(channel/source) >= Ir(pivot/source) * Ir(channel/pivot)."""
    expr = left.expr.mul(right.expr) if left.expr is not None and right.expr is not None else None
    cert = {
        "rule": "concatenation",
        "pivot": to_graph6(pivot),
        "left": left.cert,
        "right": right.cert,
    }
    if expr is not None:
        return Endpoint.exact(expr, "concatenation", cert)
    lo = left.lo * right.lo
    hi = left.hi * right.hi
    cert["value"] = {"kind": "float_interval", "payload": [lo, hi]}
    return Endpoint(lo, hi, None, "concatenation", cert)


def chibarf_ratio_upper(ws: Workspace, source: Graph, channel: Graph) -> Endpoint:
    ch = ws.chibarf(channel)
    sr = ws.chibarf(source)
    if sr.value <= 1:
        raise GraphError("chibarf ratio needs a non-complete source")
    expr = LogRatio(Exact(ch.value), Exact(sr.value))
    cert = {
        "rule": "chibarf_ratio",
        "chibarf_channel": _frac_json(ch),
        "chibarf_source": _frac_json(sr),
    }
    return Endpoint.exact(expr, "chibarf_ratio", cert)


def theta_ratio_upper(ws: Workspace, source: Graph, channel: Graph) -> Optional[Endpoint]:
    th = ws.theta(channel)
    tg = ws.theta(source)
    if th is None or tg is None:
        return None
    den_lo = tg.value - tg.tol
    if den_lo <= 1.0 + 1e-9:
        return None
    num_hi = th.value + th.tol
    hi = math.log2(num_hi) / math.log2(den_lo)
    lo = max(0.0, math.log2(max(th.value - th.tol, 1.0)) / math.log2(tg.value + tg.tol))
    cert = {
        "rule": "theta_ratio",
        "theta_channel": _theta_json(th),
        "theta_source": _theta_json(tg),
    }
    return Endpoint.interval(lo, hi, "theta_ratio", cert)


def capacity_ratio_upper(ws: Workspace, source: Graph, channel: Graph) -> Optional[Endpoint]:
    """log Theta(channel)/log Theta(source), only for degenerate Theta intervals."""
    ch = ws.capacity(channel)
    sr = ws.capacity(source)
    if not (ch.exact or ch.numerically_degenerate):
        return None
    if not (sr.exact or sr.numerically_degenerate):
        return None
    if not sr.lower > Exact(1):
        return None
    expr = LogRatio(ch.lower, sr.lower)
    cert = {
        "rule": "capacity_ratio",
        "channel_interval": _capacity_json(ch),
        "source_interval": _capacity_json(sr),
        "channel_exact": "rational" if ch.exact else "theta_match",
        "source_exact": "rational" if sr.exact else "theta_match",
    }
    return Endpoint.exact(expr, "capacity_ratio", cert)


def minrank_upper(ws: Workspace, source: Graph, channel: Graph) -> Optional[Endpoint]:
    """log gamma(channel^m)^(1/m) / log Theta_lo(source).

    Sound because gamma_f(channel) <= gamma(channel^m)^(1/m) and
    gamma_f(source) >= Theta(source) >= the certified alpha-power root.
    """
    m = ws.config.minrank_power
    target = channel
    if m > 1:
        if channel.n**m > ws.config.minrank_limit:
            m = 1
        else:
            target = strong_product(channel, channel)
    if target.n > ws.config.minrank_limit:
        return None
    mv = ws.minrank(target)
    if mv is None:
        return None
    sr = ws.capacity(source)
    if not sr.lower > Exact(1):
        return None
    groot = Exact.nth_root(mv.value, m)
    expr = LogRatio(groot, sr.lower)
    cert = {
        "rule": "minrank_surrogate",
        "power": m,
        "minrank": _minrank_json(mv),
        "channel_power": to_graph6(target),
        "source_capacity_lower": _capacity_json(sr),
    }
    return Endpoint.exact(expr, "minrank_surrogate", cert)


def tightness_theta_upper(ws: Workspace, source: Graph, channel: Graph,
                          sep: Endpoint) -> Optional[Endpoint]:
    """Bound collapse when Theta(channel)=theta(channel) and
    chibarf(source)=theta(source), both verified numerically within tol."""
    ch = ws.capacity(channel)
    ts = ws.theta(source)
    if ts is None or ch.theta_value is None:
        return None
    if not (ch.exact or ch.numerically_degenerate):
        return None
    cb = ws.chibarf(source)
    if abs(float(cb.value) - ts.value) > 2 * ts.tol + 1e-12:
        return None
    cert = {
        "rule": "tightness_theta",
        "channel_interval": _capacity_json(ch),
        "theta_source": {"value": ts.value, "tol": ts.tol},
        "chibarf_source": _frac_json(cb),
        "note": "exact modulo the theta tolerance checks recorded here",
    }
    return Endpoint.exact(sep.expr, "tightness_theta", cert)


def power_union_lower(ws: Workspace, source: Graph, part_a: Graph, part_b: Graph,
                      lower_a: Endpoint, lower_b: Endpoint) -> Endpoint:
    """Ir(A+B/F) >= log_c(c^Ir(A/F) + c^Ir(B/F)) with c = chibarf(F).

    Exact when the two component bounds agree exactly (the only case the
    closed form produces a representable value); float interval otherwise.
    """
    cb = ws.chibarf(source)
    c = Exact(cb.value)
    cert = {
        "rule": "power_union",
        "chibarf_source": _frac_json(cb),
        "left": lower_a.cert,
        "right": lower_b.cert,
    }
    if (
        lower_a.expr is not None
        and lower_b.expr is not None
        and lower_a.expr.compare(lower_b.expr) == 0
    ):
        # log_c(2 c^x) = x + log 2 / log c
        expr = lower_a.expr.add(LogRatio(Exact(2), c))
        if expr is not None:
            return Endpoint.exact(expr, "power_union", cert)
    logc = math.log2(float(cb.value))

    def f(x: float, y: float) -> float:
        return math.log2(2.0 ** (x * logc) + 2.0 ** (y * logc)) / logc

    lo = f(lower_a.lo, lower_b.lo)
    hi = f(lower_a.hi, lower_b.hi)
    cert["value"] = {"kind": "float_interval", "payload": [lo, hi]}
    return Endpoint(lo, hi, None, "power_union", cert)


def product_sum_lower(a: Endpoint, b: Endpoint) -> Endpoint:
    """Ir(A boxtimes B / F) >= Ir(A/F) + Ir(B/F)."""
    cert = {"rule": "product_sum", "left": a.cert, "right": b.cert}
    expr = a.expr.add(b.expr) if a.expr is not None and b.expr is not None else None
    if expr is not None:
        return Endpoint.exact(expr, "product_sum", cert)
    lo, hi = a.lo + b.lo, a.hi + b.hi
    cert["value"] = {"kind": "float_interval", "payload": [lo, hi]}
    return Endpoint(lo, hi, None, "product_sum", cert)


def reverse_product_lower(a: Endpoint, b: Endpoint) -> Endpoint:
    """Ir(F/A boxtimes B) >= (x*y)/(x+y) for x=Ir(F/A), y=Ir(F/B)."""
    cert = {"rule": "reverse_product", "left": a.cert, "right": b.cert}
    expr = None
    if a.expr is not None and b.expr is not None and a.expr.compare(b.expr) == 0:
        ar = a.expr.as_rational()
        if ar is not None:
            expr = LogRatio.from_rational(ar / 2)
        else:
            half = a.expr.scale(Fraction(1, 2))
            expr = half
    if expr is not None:
        return Endpoint.exact(expr, "reverse_product", cert)

    def f(x: float, y: float) -> float:
        return 0.0 if x <= 0 or y <= 0 else (x * y) / (x + y)

    lo, hi = f(a.lo, b.lo), f(a.hi, b.hi)
    cert["value"] = {"kind": "float_interval", "payload": [lo, hi]}
    return Endpoint(lo, hi, None, "reverse_product", cert)


# -- structural identity rules --------------------------------------------


def _eval_expr(e: Expr, cfg: RunConfig) -> Graph:
    from ..graphs.expr import evaluate

    return evaluate(e, cfg.size_limit)


def _fold_strong(factors: list[Expr]) -> Expr:
    out = factors[0]
    for f in factors[1:]:
        out = Binary("strong", out, f)
    return out


def _match_iso_factor(factors: list[Expr], key: bytes, cfg: RunConfig) -> Optional[int]:
    for i, f in enumerate(factors):
        try:
            if canonical_key(_eval_expr(f, cfg)) == key:
                return i
        except GraphError:
            continue
    return None


def _identity_rewrites(
    ws: Workspace,
    source: Graph,
    channel: Graph,
    source_expr: Optional[Expr],
    channel_expr: Optional[Expr],
    depth: int,
) -> Optional[RatioBounds]:
    """Exact rewrites from the product identities and power/union closed forms."""
    cfg = ws.config
    if source_expr is None or channel_expr is None or depth > 3:
        return None

    skey = canonical_key(source)
    ckey = canonical_key(channel)

    # powers of a common base: Ir(F^m1 / F^m2) = m1/m2
    sbase, m2 = split_power(source_expr)
    cbase, m1 = split_power(channel_expr)
    if m1 > 1 or m2 > 1:
        try:
            sb = _eval_expr(sbase, cfg)
            cb = _eval_expr(cbase, cfg)
        except GraphError:
            sb = cb = None
        if sb is not None and not sb.is_complete() and canonical_key(sb) == canonical_key(cb):
            expr = LogRatio.from_rational(Fraction(m1, m2))
            cert = {
                "rule": "power_ratio",
                "base": to_graph6(sb),
                "m_channel": m1,
                "m_source": m2,
            }
            ep = Endpoint.exact(expr, "power_ratio", cert)
            return _finish(RatioBounds(source, channel, ep, ep, ["exact"], [ep], [ep]))

    # channel = source x rest:  Ir(S*R / S) = 1 + Ir(R/S)
    cf = strong_factors(channel_expr)
    if len(cf) > 1:
        i = _match_iso_factor(cf, skey, cfg)
        if i is not None:
            rest_expr = _fold_strong(cf[:i] + cf[i + 1:])
            rest = _eval_expr(rest_expr, cfg)
            inner = ir_bounds(source, rest, ws=ws, source_expr=source_expr,
                              channel_expr=rest_expr, depth=depth + 1)
            if "infinite" not in inner.flags:
                cert = {"rule": "product_identity_left", "inner": inner.to_json()}
                lo = inner.lower.shift_plus(Fraction(1), "product_identity", cert)
                hi = inner.upper.shift_plus(Fraction(1), "product_identity", cert)
                return _finish(RatioBounds(source, channel, lo, hi, list(inner.flags), [lo], [hi]))

    # source = channel x rest:  Ir(C / C*R) = r/(1+r), r = Ir(C/R)
    sf = strong_factors(source_expr)
    if len(sf) > 1:
        i = _match_iso_factor(sf, ckey, cfg)
        if i is not None:
            rest_expr = _fold_strong(sf[:i] + sf[i + 1:])
            rest = _eval_expr(rest_expr, cfg)
            inner = ir_bounds(rest, channel, ws=ws, source_expr=rest_expr,
                              channel_expr=channel_expr, depth=depth + 1)

            def thru(e: Endpoint) -> Endpoint:
                cert = {"rule": "product_identity_right", "inner": inner.to_json()}
                if math.isinf(e.lo):
                    return Endpoint.exact(LogRatio.from_rational(1), "product_identity", cert)
                expr = e.expr.over_one_plus() if e.expr is not None else None
                if expr is not None:
                    return Endpoint.exact(expr, "product_identity", cert)
                f = lambda x: x / (1.0 + x)
                return Endpoint.interval(f(e.lo), f(e.hi), "product_identity", cert)

            lo, hi = thru(inner.lower), thru(inner.upper)
            return _finish(RatioBounds(source, channel, lo, hi, [], [lo], [hi]))

    # unions of two isomorphic powers of a common base
    su = union_parts(source_expr)
    cu = union_parts(channel_expr)
    if len(cu) == 2 and len(su) == 1:
        b0, e0 = split_power(cu[0])
        b1, e1 = split_power(cu[1])
        if e0 == e1:
            try:
                g0, g1 = _eval_expr(cu[0], cfg), _eval_expr(cu[1], cfg)
            except GraphError:
                g0 = g1 = None
            if g0 is not None and canonical_key(g0) == canonical_key(g1) == _power_key(ws, source, e0, skey):
                # Ir(F^m + F^m / F) with F = source:
                #   (1 + m log chibarf(F)) / log chibarf(F), via the pair formula at m2 = ... of the
                #   union construction; for m = 1 this is 1 + 1/log chibarf(F)
                cb = ws.chibarf(source)
                if cb.value > 1:
                    c = Exact(cb.value)
                    expr = LogRatio(Exact(2) * c.pow_fraction(e0), c)
                    cert = {
                        "rule": "union_of_powers",
                        "m_channel": e0,
                        "m_source": 1,
                        "chibarf_base": _frac_json(cb),
                    }
                    ep = Endpoint.exact(expr, "union_of_powers", cert)
                    return _finish(RatioBounds(source, channel, ep, ep, ["exact"], [ep], [ep]))
    if len(su) == 2 and len(cu) == 1:
        b0, e0 = split_power(su[0])
        b1, e1 = split_power(su[1])
        if e0 == e1:
            try:
                g0, g1 = _eval_expr(su[0], cfg), _eval_expr(su[1], cfg)
            except GraphError:
                g0 = g1 = None
            if g0 is not None and canonical_key(g0) == canonical_key(g1) == _power_key(ws, channel, e0, ckey):
                # Ir(F / F^m + F^m) = m' with Theta: log Theta(F^m...)
                cap = ws.capacity(channel)
                if (cap.exact or cap.numerically_degenerate) and cap.lower > Exact(1):
                    t = cap.lower
                    # Ir(F/(F^m+F^m)) = log Theta(F) / (1 + m log Theta(F))
                    num = t
                    den = Exact(2) * t.pow_fraction(e0)
                    expr = LogRatio(num, den)
                    cert = {
                        "rule": "union_of_powers_reverse",
                        "m_source": e0,
                        "capacity_channel": _capacity_json(cap),
                    }
                    ep = Endpoint.exact(expr, "union_of_powers_reverse", cert)
                    return _finish(RatioBounds(source, channel, ep, ep, ["exact"], [ep], [ep]))
    if len(su) == 2 and len(cu) == 2:
        rb = _union_pair_rule(ws, source, channel, su, cu)
        if rb is not None:
            return rb
    return None


def _power_key(ws: Workspace, base: Graph, m: int, base_key: bytes) -> Optional[bytes]:
    if m == 1:
        return base_key
    from ..graphs import strong_power

    try:
        return canonical_key(strong_power(base, m, ws.config.size_limit))
    except GraphError:
        return None


def _union_pair_rule(ws: Workspace, source: Graph, channel: Graph,
                     su: list[Expr], cu: list[Expr]) -> Optional[RatioBounds]:
    """Ir(F^m1+F^m1 / F^m2+F^m2) closed form over a common base F."""
    cfg = ws.config
    sb0, sm0 = split_power(su[0])
    sb1, sm1 = split_power(su[1])
    cb0, cm0 = split_power(cu[0])
    cb1, cm1 = split_power(cu[1])
    if sm0 != sm1 or cm0 != cm1:
        return None
    try:
        base = _eval_expr(sb0, cfg)
        others = [_eval_expr(e, cfg) for e in (sb1, cb0, cb1)]
    except GraphError:
        return None
    key = canonical_key(base)
    if any(canonical_key(o) != key for o in others) or base.is_complete():
        return None
    m1, m2 = cm0, sm0
    if m1 <= m2:
        c = Exact(ws.chibarf(base).value)
        kind = "chibarf"
    else:
        cap = ws.capacity(base)
        if not (cap.exact or cap.numerically_degenerate) or not cap.lower > Exact(1):
            return None
        c = cap.lower
        kind = "capacity"
    expr = LogRatio(Exact(2) * c.pow_fraction(m1), Exact(2) * c.pow_fraction(m2))
    cert = {
        "rule": "union_pair",
        "base": to_graph6(base),
        "m_channel": m1,
        "m_source": m2,
        "scale_kind": kind,
        "scale": c.to_json(),
    }
    ep = Endpoint.exact(expr, "union_pair", cert)
    return _finish(RatioBounds(source, channel, ep, ep, ["exact"], [ep], [ep]))


# -- main assembly ---------------------------------------------------------


def _base_lower(ws: Workspace, source: Graph, channel: Graph) -> Optional[Endpoint]:
    """Cheap certified lower for concatenation legs: separation or identity."""
    cands = []
    if not source.is_complete():
        cands.append(separation_lower(ws, source, channel))
    res = hom_exists(source.complement(), channel.complement(),
                     min(ws.config.budget_nodes, 400_000))
    if res.status == FOUND:
        code = CodeMap(source, channel, 1, 1, res.witness.mapping)
        if code.verify():
            cands.append(code_lower(source, channel, code))
    return _pick_lower(cands) if cands else None


def ir_bounds(
    source: Graph,
    channel: Graph,
    config: Optional[RunConfig] = None,
    ws: Optional[Workspace] = None,
    source_expr: Optional[Expr] = None,
    channel_expr: Optional[Expr] = None,
    depth: int = 0,
    reduce_cores: bool = True,
) -> RatioBounds:
    """Certified bounds on Ir(channel/source)."""
    ws = ws or Workspace(config)
    cfg = ws.config

    # degenerate flags
    if source.is_complete():
        flag = "both_complete" if channel.is_complete() else "source_complete"
        return _flag_bounds(source, channel, INF, flag, "complete_source")
    if channel.is_complete():
        return _flag_bounds(source, channel, 0.0, "channel_complete", "complete_channel")

    # same labeled-or-isomorphic pair
    if source.rows == channel.rows or canonical_key(source) == canonical_key(channel):
        code = identity_code(source) if source.rows == channel.rows else None
        if code is None:
            res = hom_exists(source.complement(), channel.complement(), cfg.budget_nodes)
            assert res.status == FOUND
            code = CodeMap(source, channel, 1, 1, res.witness.mapping)
        lo = code_lower(source, channel, code)
        hi = chibarf_ratio_upper(ws, source, channel)
        return _finish(RatioBounds(source, channel, lo, hi, ["exact"], [lo], [hi]))

    # structural identities
    rb = _identity_rewrites(ws, source, channel, source_expr, channel_expr, depth)
    if rb is not None:
        return rb

    # complement-core reduction
    if reduce_cores and depth <= 2:
        red_s, cert_s = ws.core_complement(source)
        red_c, cert_c = ws.core_complement(channel)
        if cert_s is not None or cert_c is not None:
            inner = ir_bounds(red_s, red_c, ws=ws, depth=depth + 1, reduce_cores=False)
            wrap = {
                "rule": "core_reduction",
                "source_reduction": cert_s,
                "channel_reduction": cert_c,
            }

            def wraps(e: Endpoint) -> Endpoint:
                return Endpoint(e.lo, e.hi, e.expr, e.rule, dict(wrap, inner=e.cert))

            lo, hi = wraps(inner.lower), wraps(inner.upper)
            return _finish(RatioBounds(source, channel, lo, hi, list(inner.flags), [lo], [hi]))

    lowers: list[Endpoint] = []
    uppers: list[Endpoint] = []

    sep = separation_lower(ws, source, channel)
    lowers.append(sep)

    base = _base_lower(ws, source, channel)
    if base is not None and base.lo > sep.lo:
        lowers.append(base)

    # concatenation over the pivot set
    from ..graphs.expr import eval_text

    pivots = []
    for ptxt in cfg.pivots:
        try:
            pivots.append(eval_text(ptxt, cfg.size_limit))
        except Exception:
            continue
    for pv in pivots:
        if pv.rows in (source.rows, channel.rows) or pv.is_complete():
            continue
        left = _base_lower(ws, source, pv)
        right = _base_lower(ws, pv, channel)
        if left is not None and right is not None:
            lowers.append(concat_lower(ws, source, pv, channel, left, right))

    # product/union inequalities when the expressions decompose
    if channel_expr is not None:
        cf = strong_factors(channel_expr)
        if len(cf) == 2:
            try:
                parts = [_eval_expr(e, cfg) for e in cf]
                legs = [_base_lower(ws, source, p) for p in parts]
                if all(l is not None for l in legs):
                    lowers.append(product_sum_lower(legs[0], legs[1]))
            except GraphError:
                pass
        cu = union_parts(channel_expr)
        if len(cu) == 2:
            try:
                parts = [_eval_expr(e, cfg) for e in cu]
                legs = [_base_lower(ws, source, p) for p in parts]
                if all(l is not None for l in legs):
                    lowers.append(power_union_lower(ws, source, parts[0], parts[1], legs[0], legs[1]))
            except GraphError:
                pass
    if source_expr is not None:
        sf = strong_factors(source_expr)
        if len(sf) == 2:
            try:
                parts = [_eval_expr(e, cfg) for e in sf]
                legs = [_base_lower(ws, p, channel) for p in parts]
                if all(l is not None for l in legs):
                    lowers.append(reverse_product_lower(legs[0], legs[1]))
            except GraphError:
                pass

    # small exhaustive code search
    if (
        source.n <= 6
        and channel.n <= 6
        and source.n ** cfg.frontier_kmax <= cfg.code_state_limit
        and channel.n ** cfg.frontier_nmax <= cfg.code_state_limit
    ):
        fr = ratio_frontier(source, channel, cfg.frontier_kmax, cfg.frontier_nmax,
                            cfg.budget_nodes, cfg.code_state_limit)
        best = fr.best
        if best is not None:
            kn = max((kn for kn, s in fr.cells.items() if s == FOUND and Fraction(*kn) == best),
                     key=lambda kn: kn)
            lowers.append(code_lower(source, channel, fr.codes[kn]))

    uppers.append(chibarf_ratio_upper(ws, source, channel))
    tr = theta_ratio_upper(ws, source, channel)
    if tr is not None:
        uppers.append(tr)
    cr = capacity_ratio_upper(ws, source, channel)
    if cr is not None:
        uppers.append(cr)
    mr = minrank_upper(ws, source, channel)
    if mr is not None:
        uppers.append(mr)
    tt = tightness_theta_upper(ws, source, channel, sep)
    if tt is not None:
        uppers.append(tt)

    # reciprocal of an opposite-direction lower (Ir(h/g) <= 1/Ir(g/h))
    opp = _base_lower(ws, channel, source)
    if opp is not None and opp.lo > 0:
        expr = opp.expr.reciprocal() if opp.expr is not None else None
        cert = {"rule": "reciprocal", "opposite_lower": opp.cert}
        if expr is not None:
            uppers.append(Endpoint.exact(expr, "reciprocal", cert))
        else:
            uppers.append(Endpoint.interval(1.0 / opp.hi, 1.0 / opp.lo, "reciprocal", cert))

    lower = _pick_lower(lowers)
    upper = _pick_upper(uppers)
    flags = []
    if lower.expr is not None and upper.expr is not None and lower.expr.compare(upper.expr) == 0:
        flags.append("exact")
    if lower.lo > upper.hi + 1e-7:
        raise AssertionError(
            f"bound crossing: lower {lower.lo} ({lower.rule}) > upper {upper.hi} ({upper.rule})"
        )
    return _finish(RatioBounds(source, channel, lower, upper, flags, lowers, uppers))
