from fractions import Fraction

import pytest

from irkit.exactness import Exact, LogRatio, iroot


def test_iroot():
    assert iroot(27, 3) == (3, True)
    assert iroot(26, 3) == (2, False)
    assert iroot(1, 7) == (1, True)
    assert iroot(10**18, 2) == (10**9, True)


def test_exact_normalizes_perfect_powers():
    assert Exact(25, 2) == Exact(5)
    assert Exact(Fraction(4, 9), 2) == Exact(Fraction(2, 3))
    assert Exact(8, 6) == Exact(2, 2)  # 8^(1/6) = 2^(1/2)


def test_exact_comparisons_cross_power():
    sqrt5 = Exact(5, 2)
    assert sqrt5 > Exact(2)
    assert sqrt5 < Exact(Fraction(9, 4))
    assert Exact(20, 2) == Exact(20, 2)
    assert Exact(2, 2) * Exact(2, 2) == Exact(2)


def test_exact_pow_fraction():
    x = Exact(5, 2)  # sqrt 5
    assert x.pow_fraction(2) == Exact(5)
    assert x.pow_fraction(Fraction(1, 2)) == Exact(5, 4)
    assert x.pow_fraction(-2) == Exact(Fraction(1, 5))


def test_logratio_rational_recognition():
    assert LogRatio(Exact(3), Exact(9)).as_rational() == Fraction(1, 2)
    assert LogRatio(Exact(4), Exact(2)).as_rational() == Fraction(2)
    assert LogRatio(Exact(2), Exact(Fraction(5, 2))).as_rational() is None
    assert LogRatio.from_rational(Fraction(3, 2)).as_rational() == Fraction(3, 2)


def test_logratio_algebra():
    sep = LogRatio(Exact(5, 2), Exact(Fraction(5, 2)))  # log sqrt5 / log 2.5
    assert sep.as_rational() is None
    # concatenation: (log a/log b)(log b/log c) = log a/log c
    ab = LogRatio(Exact(5), Exact(3))
    bc = LogRatio(Exact(3), Exact(2))
    assert ab.mul(bc).compare(LogRatio(Exact(5), Exact(2))) == 0
    # shared-base addition
    s = sep.add(LogRatio(Exact(2), Exact(Fraction(5, 2))))
    assert s.compare(LogRatio(Exact(20, 2), Exact(Fraction(5, 2)))) == 0
    # 1 + x keeps the base
    one_plus = sep.add_rational(Fraction(1))
    assert one_plus.compare(LogRatio(Exact(Fraction(5, 2)) * Exact(5, 2), Exact(Fraction(5, 2)))) == 0
    # x/(1+x)
    x = LogRatio(Exact(5, 2), Exact(2))
    assert x.over_one_plus().compare(LogRatio(Exact(5, 2), Exact(20, 2))) == 0


def test_logratio_compare_mixed():
    assert LogRatio(Exact(5, 2), Exact(2)).compare(1) == 1  # log2 sqrt5 > 1
    assert LogRatio(Exact(5), Exact(6)).compare(1) == -1
    assert LogRatio(Exact(6), Exact(Fraction(25, 4))).compare(1) == -1
    assert LogRatio(Exact(3), Exact(9)).compare(Fraction(1, 2)) == 0


def test_logratio_scale_and_reciprocal():
    x = LogRatio(Exact(5), Exact(2))
    assert x.scale(Fraction(1, 2)).compare(LogRatio(Exact(5, 2), Exact(2))) == 0
    assert x.reciprocal().compare(LogRatio(Exact(2), Exact(5))) == 0
    assert LogRatio.from_rational(0).reciprocal() is None


def test_json_round_trip():
    for v in [LogRatio.from_rational(Fraction(7, 3)),
              LogRatio(Exact(20, 2), Exact(Fraction(5, 2)))]:
        assert LogRatio.from_json(v.to_json()).compare(v) == 0
    x = Exact(Fraction(9, 2))
    assert Exact.from_json(x.to_json()) == x


def test_interval_encloses_value():
    v = LogRatio(Exact(5, 2), Exact(Fraction(5, 2)))
    lo, hi = v.interval()
    assert lo <= v.float() <= hi
    assert hi - lo < 1e-9


def test_invalid_constructions():
    with pytest.raises(ValueError):
        Exact(0)
    with pytest.raises(ValueError):
        Exact(-3)
    with pytest.raises(ValueError):
        LogRatio(Exact(Fraction(1, 2)), Exact(2))  # numerator below 1
    with pytest.raises(ValueError):
        LogRatio(Exact(2), Exact(1))  # denominator at 1
