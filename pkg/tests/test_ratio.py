import math
from fractions import Fraction

import pytest

from irkit.config import RunConfig
from irkit.exactness import Exact, LogRatio
from irkit.graphs import complete, cycle, empty, eval_text, kneser, parse, evaluate, schlafli
from irkit.ratio import (
    Workspace,
    ir_bounds,
    separation_lower,
    verify_certificate,
)
from irkit.ratio.engine import (
    chibarf_ratio_upper,
    capacity_ratio_upper,
    code_lower,
    concat_lower,
    minrank_upper,
    power_union_lower,
    product_sum_lower,
    reverse_product_lower,
    theta_ratio_upper,
)
from conftest import random_graph

F = Fraction


@pytest.fixture(scope="module")
def ws():
    return Workspace(RunConfig())


def bounds_for(ws, stxt, ctxt):
    se, ce = parse(stxt), parse(ctxt)
    return ir_bounds(evaluate(se), evaluate(ce), ws=ws, source_expr=se, channel_expr=ce)


class TestSeparation:
    def test_pentagon_self(self, ws):
        ep = separation_lower(ws, cycle(5), cycle(5))
        # log sqrt(5) / log(5/2) = 0.8788 (the classic separation shortfall)
        assert abs(ep.lo - 0.87823540) <= 1e-6
        assert ep.expr.compare(LogRatio(Exact(5, 2), Exact(F(5, 2)))) == 0

    def test_pure_channel_coding(self, ws):
        # source Kbar(2): value = log2 Theta_lo(channel)
        ep = separation_lower(ws, empty(2), cycle(5))
        assert ep.expr.compare(LogRatio(Exact(5, 2), Exact(2))) == 0

    def test_pure_compression(self, ws):
        # channel Kbar(2): value = 1 / log2 chibarf(source)
        ep = separation_lower(ws, cycle(5), empty(2))
        assert ep.expr.compare(LogRatio(Exact(2), Exact(F(5, 2)))) == 0


class TestUpperFamilies:
    def test_chibarf_ratio(self, ws):
        ep = chibarf_ratio_upper(ws, schlafli().complement(), schlafli())
        assert ep.expr.compare(LogRatio(Exact(F(9, 2)), Exact(9))) == 0

    def test_theta_ratio_encloses(self, ws):
        ep = theta_ratio_upper(ws, schlafli().complement(), schlafli())
        assert ep.lo <= 0.5 <= ep.hi and ep.hi - 0.5 < 1e-4

    def test_capacity_ratio_requires_degenerate(self, ws):
        # channel C5 degenerate via alpha(C5^2)=5; source Kbar(3) exact
        ep = capacity_ratio_upper(ws, empty(3), cycle(5))
        assert ep is not None
        assert ep.expr.compare(LogRatio(Exact(5, 2), Exact(3))) == 0
        # complement of schlafli has a genuinely open interval: no ratio
        assert capacity_ratio_upper(ws, cycle(5), schlafli().complement()) is None

    def test_minrank_surrogate(self, ws):
        # gamma(C5) = 3, Theta_lo(Kbar(3)) = 3: upper = log3/log3 = 1
        ep = minrank_upper(ws, empty(3), cycle(5))
        assert ep is not None and ep.expr.compare(F(1)) == 0


class TestCombinationRules:
    def test_concat_chains_exactly(self, ws):
        left = code_lower(empty(2), empty(4), _trivial_code(empty(2), empty(4)))
        assert left.expr.compare(1) == 0
        sep = separation_lower(ws, empty(4), cycle(5) )
        got = concat_lower(ws, empty(2), empty(4), cycle(5), left, sep)
        assert got.expr is not None

    def test_product_sum(self, ws):
        a = separation_lower(ws, cycle(5), cycle(5))
        b = separation_lower(ws, cycle(5), cycle(5))
        s = product_sum_lower(a, b)
        assert s.expr is not None
        assert abs(s.lo - 2 * a.lo) < 1e-9

    def test_reverse_product_equal_args(self, ws):
        a = separation_lower(ws, cycle(5), cycle(5))
        r = reverse_product_lower(a, a)
        assert r.expr is not None
        assert abs(r.lo - a.lo / 2) < 1e-9

    def test_power_union_equal_args_exact(self, ws):
        one = code_lower(cycle(5), cycle(5), _identity(cycle(5)))
        u = power_union_lower(ws, cycle(5), cycle(5), cycle(5), one, one)
        # 1 + 1/log2(5/2)
        expect = 1 + 1 / math.log2(2.5)
        assert u.expr is not None and abs(u.lo - expect) < 1e-9


def _identity(g):
    from irkit.codes import identity_code

    return identity_code(g)


def _trivial_code(src, dst):
    from irkit.codes import CodeMap

    return CodeMap(src, dst, 1, 1, tuple(range(src.n)))


class TestIrBounds:
    def test_self_pair(self, ws):
        rb = bounds_for(ws, "C(5)", "C(5)")
        assert rb.exact and rb.exact_value().as_rational() == 1

    def test_power_identities(self, ws):
        for m, expect in ((2, F(2)), (3, F(3))):
            rb = bounds_for(ws, "C(5)", f"C(5)^{m}")
            assert rb.exact and rb.exact_value().as_rational() == expect
        rb = bounds_for(ws, "C(5)^2", "C(5)")
        assert rb.exact_value().as_rational() == F(1, 2)

    def test_product_identity_left(self, ws):
        # channel = C5 * C7: Ir = 1 + Ir(C7/C5)
        rb = bounds_for(ws, "C(5)", "C(5) * C(7)")
        inner = bounds_for(ws, "C(5)", "C(7)")
        assert abs(rb.lower.lo - (1 + inner.lower.lo)) < 1e-9
        assert abs(rb.upper.hi - (1 + inner.upper.hi)) < 1e-9

    def test_product_identity_right(self, ws):
        # source = C5 * C7, channel C5: r/(1+r) with r = Ir(C5/C7)
        rb = bounds_for(ws, "C(5) * C(7)", "C(5)")
        inner = bounds_for(ws, "C(7)", "C(5)")
        f = lambda x: x / (1 + x)
        assert abs(rb.lower.lo - f(inner.lower.lo)) < 1e-9
        assert abs(rb.upper.hi - f(inner.upper.hi)) < 1e-8

    def test_schlafli_thm14(self, ws):
        rb = bounds_for(ws, "~schlafli", "schlafli")
        assert rb.exact_value() is not None
        assert rb.exact_value().as_rational() == F(1, 2)

    def test_schlafli_reverse_direction(self, ws):
        rb = bounds_for(ws, "schlafli", "~schlafli")
        assert rb.lower.lo == pytest.approx(math.log2(6) / math.log2(4.5), abs=1e-6)
        assert rb.upper.hi == pytest.approx(math.log2(9) / math.log2(4.5), abs=1e-6)

    def test_clique_unions(self, ws):
        rb = bounds_for(ws, "K(3)+K(2)+K(4)", "K(5)+K(5)")
        assert rb.exact_value().compare(LogRatio(Exact(2), Exact(3))) == 0

    def test_incomparable_pair_uppers(self, ws):
        fwd = bounds_for(ws, "C(5)^2", "Kbar(6)")
        bwd = bounds_for(ws, "Kbar(6)", "C(5)^2")
        assert fwd.upper.hi < 1 and bwd.upper.hi < 1
        assert abs(fwd.upper.hi - math.log2(6) / math.log2(6.25)) < 1e-6
        assert abs(bwd.upper.hi - math.log2(5) / math.log2(6)) < 1e-6

    def test_flags(self, ws):
        rb = bounds_for(ws, "K(4)", "C(5)")
        assert "source_complete" in rb.flags and rb.lower.lo == math.inf
        rb = bounds_for(ws, "C(5)", "K(4)")
        assert "channel_complete" in rb.flags and rb.upper.hi == 0.0
        rb = bounds_for(ws, "K(3)", "K(5)")
        assert "both_complete" in rb.flags

    def test_bipartite_complement_channel(self, ws):
        # complement of bipartite: behaves as Kbar(2) (core reduction)
        rb = bounds_for(ws, "C(5)", "~C(6)")
        expect = 1 / math.log2(2.5)
        assert abs(rb.lower.lo - expect) < 1e-9 and abs(rb.upper.hi - expect) < 1e-9

    def test_soundness_vs_codes(self, ws, rng):
        # wherever a verified code achieves k/n, the lower bound is >= k/n... and
        # lower <= upper always
        from irkit.codes import ratio_frontier
        from irkit.hom import FOUND

        for _ in range(8):
            g = random_graph(rng, 4, 0.5)
            h = random_graph(rng, 4, 0.5)
            if g.is_complete() or h.is_complete():
                continue
            rb = ir_bounds(g, h, ws=ws)
            assert rb.lower.lo <= rb.upper.hi + 1e-9
            fr = ratio_frontier(g, h, 2, 2)
            if fr.best is not None:
                assert rb.upper.hi >= float(fr.best) - 1e-9


class TestCertificates:
    def test_all_candidates_verify(self, ws, rng):
        pairs = [("C(5)", "C(7)"), ("~schlafli", "schlafli"), ("Kbar(2)", "C(5)"),
                 ("C(5)+C(5)", "C(5)"), ("KG(5,2)", "Kbar(4)")]
        for stxt, ctxt in pairs:
            rb = bounds_for(ws, stxt, ctxt)
            for ep in [rb.lower, rb.upper] + rb.lower_candidates + rb.upper_candidates:
                assert verify_certificate(ep.cert)

    def test_json_schema_round_trip(self, ws):
        import json

        rb = bounds_for(ws, "C(5)", "C(7)")
        payload = json.loads(json.dumps(rb.to_json()))
        assert payload["lower"]["value"] <= payload["upper"]["value"] + 1e-9
        assert payload["pair"]["source"] and payload["pair"]["channel"]
        for side in ("lower", "upper"):
            assert payload[side]["exactness"] in ("rational", "log_ratio", "float", "infinite")

    def test_tampered_certificates_fail(self, ws):
        import json

        from irkit.ratio import CertificateError

        rb = bounds_for(ws, "Kbar(2)", "C(5)")
        bad = json.loads(json.dumps(rb.lower.cert))
        bad["capacity_lower"]["power"] = 1
        bad["capacity_lower"]["witness"] = [0, 1]  # adjacent pair in C5
        with pytest.raises(CertificateError):
            verify_certificate(bad)
