"""Replay verification for bound certificates.

Every Endpoint carries a certificate dict naming its rule, the graphs it
binds (graph6), its claimed value, and premise certificates.  The verifier
re-checks all embedded witnesses (independent sets, LP covers, code tables,
homomorphisms, fitting matrices, theta witness matrices) and recomputes the
claimed value from the premises.  It never re-runs searches: certificates
are checkable without the solvers that produced them.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..exactness import Exact, LogRatio
from ..fractional import FractionalValue
from ..graphs import Graph, from_graph6, strong_power
from ..hom import HomMap
from ..invariants import MinrankValue, verify_independent_set


class CertificateError(ValueError):
    """A certificate failed replay; the message says which check broke."""


def _fail(msg: str):
    raise CertificateError(msg)


def _graph(cert: dict, key: str) -> Graph:
    return from_graph6(cert[key])


def _value_expr(cert: dict) -> LogRatio | None:
    v = cert.get("value")
    if not isinstance(v, dict) or v.get("kind") in (None, "float_interval", "infinite"):
        return None
    return LogRatio.from_json(v)


def _check_value(cert: dict, expr: LogRatio) -> None:
    claimed = _value_expr(cert)
    if claimed is None:
        _fail(f"{cert.get('rule')}: exact rule without exact claimed value")
    if claimed.compare(expr) != 0:
        _fail(f"{cert.get('rule')}: claimed value differs from recomputation")


def _frac_value(payload: dict) -> Fraction:
    return Fraction(payload["value"])


def _verify_chibarf(payload: dict, g: Graph) -> Fraction:
    """Replay a fractional clique cover certificate against g."""
    fv = FractionalValue(
        value=Fraction(payload["value"]),
        cover_weights=[(int(m), Fraction(w)) for m, w in payload["cover"]],
        vertex_weights=[Fraction(y) for y in payload["vertex_weights"]],
    )
    if not fv.verify(g.complement()):
        _fail("fractional clique cover certificate failed replay")
    return fv.value


def _verify_capacity_lower(payload: dict, g: Graph) -> Exact:
    """Replay an alpha-power witness; returns the certified root."""
    power = payload["power"]
    wit = tuple(payload["witness"])
    gp = strong_power(g, power) if power > 1 else g
    if not verify_independent_set(gp, wit):
        _fail("capacity witness is not an independent set")
    return Exact.nth_root(len(wit), power)


def _verify_theta_witnesses(payload: dict, g: Graph, slack: float = 1e-8) -> tuple[float, float]:
    """Replay theta witnesses; returns certified (lower, upper) on theta(g)."""
    X = np.array(payload["primal"], dtype=float)
    A = np.array(payload["dual"], dtype=float)
    n = g.n
    if X.shape != (n, n) or A.shape != (n, n):
        _fail("theta witness has wrong shape")
    tol = payload["tol"]
    if abs(np.trace(X) - 1.0) > tol + slack:
        _fail("theta primal witness trace")
    for u, v in g.edges():
        if abs(X[u, v]) > tol + slack:
            _fail("theta primal witness edge entry")
    if float(np.linalg.eigvalsh(X)[0]) < -(tol + slack):
        _fail("theta primal witness not PSD within tol")
    for u in range(n):
        for v in range(n):
            if (u == v or not g.has_edge(u, v)) and abs(A[u, v] - 1.0) > slack:
                _fail("theta dual witness pattern")
    lower = float(X.sum()) - n * n * slack
    upper = float(np.linalg.eigvalsh(A)[-1]) + n * slack
    value = payload["value"]
    if not (lower - 2 * tol <= value <= upper + 2 * tol):
        _fail("theta value outside witness enclosure")
    return lower, upper


def verify_certificate(cert: dict) -> bool:
    """Replay a certificate tree; True on success, CertificateError on failure."""
    rule = cert.get("rule")
    if rule is None:
        _fail("certificate without a rule")
    handler = _HANDLERS.get(rule)
    if handler is None:
        _fail(f"unknown certificate rule {rule!r}")
    handler(cert)
    return True


def _verify_inner_bounds(bj: dict) -> None:
    verify_certificate(bj["lower"]["certificate"])
    verify_certificate(bj["upper"]["certificate"])


# -- handlers ---------------------------------------------------------------


def _h_separation(cert: dict) -> None:
    source = _graph(cert, "source")
    channel = _graph(cert, "channel")
    root = _verify_capacity_lower(cert["capacity_lower"], channel)
    cb = _verify_chibarf(cert["chibarf_source"], source)
    if cb <= 1:
        _fail("separation with a complete source")
    _check_value(cert, LogRatio(root, Exact(cb)))


def _h_code(cert: dict) -> None:
    from ..codes import CodeMap

    payload = cert["code"]
    code = CodeMap(
        from_graph6(payload["source"]),
        from_graph6(payload["channel"]),
        payload["k"],
        payload["n"],
        tuple(payload["table"]),
    )
    if not code.verify():
        _fail("code table is not non-adjacency preserving")
    _check_value(cert, LogRatio.from_rational(Fraction(payload["k"], payload["n"])))


def _h_chibarf_ratio(cert: dict) -> None:
    source = _graph(cert, "source")
    channel = _graph(cert, "channel")
    ch = _verify_chibarf(cert["chibarf_channel"], channel)
    sr = _verify_chibarf(cert["chibarf_source"], source)
    if sr <= 1:
        _fail("chibarf ratio with a complete source")
    _check_value(cert, LogRatio(Exact(ch), Exact(sr)))


def _h_theta_ratio(cert: dict) -> None:
    source = _graph(cert, "source")
    channel = _graph(cert, "channel")
    _, up_ch = _verify_theta_witnesses(cert["theta_channel"], channel)
    lo_src, _ = _verify_theta_witnesses(cert["theta_source"], source)
    lo_src -= cert["theta_source"]["tol"]
    up_ch += cert["theta_channel"]["tol"]
    if lo_src <= 1.0:
        _fail("theta ratio with source theta at 1")
    hi_claim = cert["value"]["payload"][1]
    if hi_claim < math.log2(up_ch) / math.log2(lo_src) - 1e-6:
        _fail("theta ratio upper endpoint tighter than witnesses allow")


def _h_capacity_ratio(cert: dict) -> None:
    source = _graph(cert, "source")
    channel = _graph(cert, "channel")
    ch_root = _verify_capacity_lower(cert["channel_interval"], channel)
    sr_root = _verify_capacity_lower(cert["source_interval"], source)
    for side, payload, root in (
        ("channel", cert["channel_interval"], ch_root),
        ("source", cert["source_interval"], sr_root),
    ):
        kind = cert[f"{side}_exact"]
        if kind == "rational":
            if payload["chibarf"] is None or Exact(Fraction(payload["chibarf"])) != root:
                _fail(f"capacity ratio: {side} interval not rationally degenerate")
        elif kind == "theta_match":
            th = payload["theta"]
            if th is None or abs(float(root) - th["value"]) > 2 * th["tol"] + 1e-10:
                _fail(f"capacity ratio: {side} interval not theta-degenerate")
        else:
            _fail("capacity ratio: unknown degeneracy kind")
    if not sr_root > Exact(1):
        _fail("capacity ratio with trivial source capacity")
    _check_value(cert, LogRatio(ch_root, sr_root))


def _h_minrank(cert: dict) -> None:
    source = _graph(cert, "source")
    hp = from_graph6(cert["channel_power"])
    payload = cert["minrank"]
    mv = MinrankValue(payload["value"], payload["field"], tuple(payload["matrix"]))
    if not mv.verify(hp):
        _fail("minrank fitting matrix failed replay")
    root = _verify_capacity_lower(cert["source_capacity_lower"], source)
    if not root > Exact(1):
        _fail("minrank surrogate with trivial source capacity")
    _check_value(cert, LogRatio(Exact.nth_root(mv.value, cert["power"]), root))


def _h_tightness_theta(cert: dict) -> None:
    source = _graph(cert, "source")
    channel = _graph(cert, "channel")
    root = _verify_capacity_lower(cert["channel_interval"], channel)
    payload = cert["channel_interval"]
    ok_exact = payload["chibarf"] is not None and Exact(Fraction(payload["chibarf"])) == root
    th = payload["theta"]
    ok_theta = th is not None and abs(float(root) - th["value"]) <= 2 * th["tol"] + 1e-10
    if not (ok_exact or ok_theta):
        _fail("tightness: channel capacity interval not degenerate")
    ts = cert["theta_source"]
    cb = _verify_chibarf(cert["chibarf_source"], source)
    if abs(float(cb) - ts["value"]) > 2 * ts["tol"] + 1e-10:
        _fail("tightness: chibarf(source) does not match theta(source)")
    _check_value(cert, LogRatio(root, Exact(cb)))


def _h_concat(cert: dict) -> None:
    verify_certificate(cert["left"])
    verify_certificate(cert["right"])
    left = _value_expr(cert["left"])
    right = _value_expr(cert["right"])
    if left is not None and right is not None:
        prod = left.mul(right)
        claimed = _value_expr(cert)
        if prod is not None and claimed is not None and prod.compare(claimed) != 0:
            _fail("concatenation value mismatch")


def _h_product_sum(cert: dict) -> None:
    verify_certificate(cert["left"])
    verify_certificate(cert["right"])
    left, right = _value_expr(cert["left"]), _value_expr(cert["right"])
    claimed = _value_expr(cert)
    if left is not None and right is not None and claimed is not None:
        s = left.add(right)
        if s is not None and s.compare(claimed) != 0:
            _fail("product sum value mismatch")


def _h_reverse_product(cert: dict) -> None:
    verify_certificate(cert["left"])
    verify_certificate(cert["right"])


def _h_power_union(cert: dict) -> None:
    verify_certificate(cert["left"])
    verify_certificate(cert["right"])


def _h_power_ratio(cert: dict) -> None:
    base = _graph(cert, "base")
    if base.is_complete():
        _fail("power ratio over a complete base")
    m1, m2 = cert["m_channel"], cert["m_source"]
    if m1 < 1 or m2 < 1:
        _fail("power ratio with non-positive exponents")
    _check_value(cert, LogRatio.from_rational(Fraction(m1, m2)))


def _h_union_of_powers(cert: dict) -> None:
    source = _graph(cert, "source")
    cb = _verify_chibarf(cert["chibarf_base"], source)
    if cb <= 1:
        _fail("union closed form over a complete base")
    c = Exact(cb)
    expr = LogRatio(Exact(2) * c.pow_fraction(cert["m_channel"]), c)
    _check_value(cert, expr)


def _h_union_of_powers_reverse(cert: dict) -> None:
    channel = _graph(cert, "channel")
    root = _verify_capacity_lower(cert["capacity_channel"], channel)
    payload = cert["capacity_channel"]
    th = payload["theta"]
    ok_exact = payload["chibarf"] is not None and Exact(Fraction(payload["chibarf"])) == root
    ok_theta = th is not None and abs(float(root) - th["value"]) <= 2 * th["tol"] + 1e-10
    if not (ok_exact or ok_theta):
        _fail("reverse union closed form needs a degenerate capacity interval")
    m = cert["m_source"]
    _check_value(cert, LogRatio(root, Exact(2) * root.pow_fraction(m)))


def _h_union_pair(cert: dict) -> None:
    c = Exact.from_json(cert["scale"])
    m1, m2 = cert["m_channel"], cert["m_source"]
    if cert["scale_kind"] not in ("chibarf", "capacity"):
        _fail("union pair: unknown scale kind")
    if (m1 <= m2) != (cert["scale_kind"] == "chibarf"):
        _fail("union pair: scale kind does not match exponent order")
    expr = LogRatio(Exact(2) * c.pow_fraction(m1), Exact(2) * c.pow_fraction(m2))
    _check_value(cert, expr)


def _h_core_reduction(cert: dict) -> None:
    for key in ("source_reduction", "channel_reduction"):
        sub = cert.get(key)
        if sub is None:
            continue
        g = from_graph6(sub["graph"])
        reduced = from_graph6(sub["reduced"])
        fwd = _hom_from_json(sub["hom_to_core"])
        bwd = _hom_from_json(sub["hom_from_core"])
        if fwd.source.rows != g.complement().rows or bwd.target.rows != g.complement().rows:
            _fail("core reduction: homomorphism endpoints do not match")
        if bwd.source.rows != reduced.complement().rows:
            _fail("core reduction: reduced graph mismatch")
        if not fwd.verify() or not bwd.verify():
            _fail("core reduction: homomorphism failed replay")
    verify_certificate(cert["inner"])


def _hom_from_json(payload: dict) -> HomMap:
    return HomMap(
        from_graph6(payload["source"]),
        from_graph6(payload["target"]),
        tuple(payload["map"]),
    )


def _h_product_identity(cert: dict) -> None:
    _verify_inner_bounds(cert["inner"])


def _h_reciprocal(cert: dict) -> None:
    verify_certificate(cert["opposite_lower"])
    inner = _value_expr(cert["opposite_lower"])
    claimed = _value_expr(cert)
    if inner is not None and claimed is not None:
        rec = inner.reciprocal()
        if rec is not None and rec.compare(claimed) != 0:
            _fail("reciprocal value mismatch")


def _h_complete(cert: dict) -> None:
    g = _graph(cert, "source" if cert["rule"] == "complete_source" else "channel")
    if not g.is_complete():
        _fail("completeness flag on a non-complete graph")


def _h_criticality(cert: dict) -> None:
    f = _graph(cert, "graph")
    u, v = cert["edge"]
    h = f.delete_edge(u, v)
    power = cert["power"]
    hp = strong_power(h, power) if power > 1 else h
    wit = tuple(cert["independent_set"])
    if not verify_independent_set(hp, wit):
        _fail("criticality witness is not independent")
    cb = _verify_chibarf(cert["chibarf"], f)
    if not Exact.nth_root(len(wit), power) > Exact(cb):
        _fail("criticality witness does not exceed chibarf")


_HANDLERS = {
    "separation": _h_separation,
    "code": _h_code,
    "chibarf_ratio": _h_chibarf_ratio,
    "theta_ratio": _h_theta_ratio,
    "capacity_ratio": _h_capacity_ratio,
    "minrank_surrogate": _h_minrank,
    "tightness_theta": _h_tightness_theta,
    "concatenation": _h_concat,
    "product_sum": _h_product_sum,
    "reverse_product": _h_reverse_product,
    "power_union": _h_power_union,
    "power_ratio": _h_power_ratio,
    "union_of_powers": _h_union_of_powers,
    "union_of_powers_reverse": _h_union_of_powers_reverse,
    "union_pair": _h_union_pair,
    "core_reduction": _h_core_reduction,
    "product_identity_left": _h_product_identity,
    "product_identity_right": _h_product_identity,
    "reciprocal": _h_reciprocal,
    "complete_source": _h_complete,
    "complete_channel": _h_complete,
    "criticality": _h_criticality,
}
