from fractions import Fraction

import pytest

from charlab.measures import (
    binom2,
    char_ratio,
    content_elementary,
    content_multiset,
    content_product,
    jack_prob,
    level_measure,
    plancherel_prob,
    s_value,
    t_statistic,
)
from charlab.partitions import conjugate, enumerate_partitions

ALPHAS = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2), Fraction(5))


def test_plancherel_fixtures():
    assert plancherel_prob((4, 2, 1)) == Fraction(35, 144)
    for n in range(1, 8):
        assert plancherel_prob((n,)) == Fraction(1, [1, 1, 2, 6, 24, 120, 720, 5040][n])
    assert sum(plancherel_prob(lam) for lam in enumerate_partitions(6)) == 1


def test_jack_displayed_example():
    # 5-box two-row diagram: 30 a^2 / ((3a+1)(a+2)(2a+1)(a+1)^2)
    for a in ALPHAS:
        expected = 30 * a**2 / ((3 * a + 1) * (a + 2) * (2 * a + 1) * (a + 1) ** 2)
        assert jack_prob((3, 2), a) == expected


def test_jack_reduces_to_plancherel():
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert jack_prob(lam, Fraction(1)) == plancherel_prob(lam)
    assert jack_prob((4, 2, 1), Fraction(1)) == Fraction(35, 144)


def test_jack_two_box_values():
    for a in ALPHAS:
        assert jack_prob((2,), a) == 1 / (a + 1)
        assert jack_prob((1, 1), a) == a / (a + 1)


def test_normalization_exact():
    for a in ALPHAS:
        for n in range(1, 11):
            assert sum(level_measure(n, a).values()) == 1


def test_transpose_duality_exact():
    for a in (Fraction(2), Fraction(3, 2), Fraction(5)):
        for n in range(1, 11):
            for lam in enumerate_partitions(n):
                assert jack_prob(lam, a) == jack_prob(conjugate(lam), 1 / a)


def test_numerator_duality_exact():
    for a in ALPHAS:
        for n in range(1, 11):
            for lam in enumerate_partitions(n):
                assert s_value(conjugate(lam), 1 / a) == -s_value(lam, a) / a


def test_char_ratio_fixtures():
    for n in range(2, 9):
        assert char_ratio((n,)) == 1
        assert char_ratio((1,) * n) == -1
    assert char_ratio((2, 1)) == 0


def test_char_ratio_rejects_small_n():
    for lam in [(), (1,)]:
        with pytest.raises(ValueError):
            char_ratio(lam)


def test_s_value_fixtures():
    for a in ALPHAS:
        assert s_value((2,), a) == a
        assert s_value((1, 1), a) == -1
        assert s_value((2, 1), a) == a - 1


def test_s_matches_char_ratio_at_alpha_one():
    for n in range(2, 10):
        for lam in enumerate_partitions(n):
            assert s_value(lam, Fraction(1)) == binom2(n) * char_ratio(lam)


def test_t_statistic():
    t = t_statistic((2,), Fraction(2))
    assert t.s_value == 2 and t.n == 2
    assert abs(t.t_float - 2**0.5) < 1e-15
    t = t_statistic((1, 1), Fraction(4))
    assert t.s_value == -1
    assert abs(t.t_float + 0.5) < 1e-15
    with pytest.raises(ValueError):
        t_statistic((1,), Fraction(1))


def test_t_float_scale_invariant():
    for a in ALPHAS:
        for n in (2, 5, 9):
            for lam in enumerate_partitions(n):
                t = t_statistic(lam, a)
                s2 = float(t.s_value) ** 2
                if s2 == 0:
                    assert t.t_float == 0
                else:
                    assert abs(t.t_float**2 * float(a) * binom2(n) - s2) <= 1e-12 * s2


def test_box_content_identity():
    for a in ALPHAS:
        for n in range(1, 11):
            for lam in enumerate_partitions(n):
                assert sum(content_multiset(lam, a)) == s_value(lam, a)


def test_content_elementary_fixtures():
    assert content_elementary((2, 1), 2, Fraction(1)) == -1
    assert content_elementary((3,), 1, Fraction(1)) == 3
    # the (1,1) box has content 0, so e_n vanishes termwise
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert content_elementary(lam, n, Fraction(1)) == 0


def test_content_elementary_range():
    with pytest.raises(ValueError):
        content_elementary((2, 1), 0, Fraction(1))
    with pytest.raises(ValueError):
        content_elementary((2, 1), 4, Fraction(1))


def test_content_product_fixtures():
    assert content_product((2, 1), 2, Fraction(1)) == 6
    m = 4
    assert content_product((1,) * (m + 1), m, Fraction(1)) == 0
    with pytest.raises(ValueError):
        content_product((2, 1), 0, Fraction(1))


def test_moment_identities_small():
    for a in ALPHAS:
        for n in range(2, 9):
            measure = level_measure(n, a)
            mean = sum(p * s_value(lam, a) for lam, p in measure.items())
            var = sum(p * s_value(lam, a) ** 2 for lam, p in measure.items())
            third = sum(p * s_value(lam, a) ** 3 for lam, p in measure.items())
            assert mean == 0
            assert var == a * binom2(n)
            assert third == a * (a - 1) * binom2(n)
