import math
from fractions import Fraction

import pytest

from charlab.limits import (
    ConcentrationReport,
    DistanceReport,
    concentration_probe,
    dkw_halfwidth,
    distance_from_atoms,
    dual_atoms,
    exact_cdf,
    kolmogorov_exact,
    kolmogorov_mc,
    normal_cdf,
    rate_fit,
)

# Frozen from a 30-digit quadrature of the Gaussian density.
PHI_ORACLE = {
    0.5: 0.69146246127401310364,
    1.0: 0.84134474606854294859,
    2.0: 0.97724986805182079280,
    5.0: 0.99999971334842812081,
}


def test_normal_cdf_center_and_symmetry():
    assert normal_cdf(0.0) == 0.5
    for x in (0.5, 1.0, 2.0, 5.0):
        assert abs(normal_cdf(x) + normal_cdf(-x) - 1.0) <= 1e-12


def test_normal_cdf_against_quadrature_oracle():
    for x, val in PHI_ORACLE.items():
        assert abs(normal_cdf(x) - val) <= 1e-12


def test_exact_cdf_two_boxes():
    atoms = exact_cdf(2, Fraction(1))
    assert [(a.exact_s, a.prob) for a in atoms] == [
        (Fraction(-1), Fraction(1, 2)),
        (Fraction(1), Fraction(1, 2)),
    ]
    assert atoms[-1].cum_prob == 1
    assert atoms[0].t_value == -1.0 and atoms[1].t_value == 1.0


def test_exact_cdf_three_boxes():
    atoms = exact_cdf(3, Fraction(1))
    assert [(a.exact_s, a.prob) for a in atoms] == [
        (Fraction(-3), Fraction(1, 6)),
        (Fraction(0), Fraction(2, 3)),
        (Fraction(3), Fraction(1, 6)),
    ]


def test_exact_cdf_mass_and_sorting():
    for a in (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3, 2), Fraction(5)):
        for n in range(2, 13):
            atoms = exact_cdf(n, a)
            assert atoms[-1].cum_prob == 1
            ss = [atom.exact_s for atom in atoms]
            assert ss == sorted(ss) and len(set(ss)) == len(ss)


def test_exact_cdf_range():
    for bad in (1, 41):
        with pytest.raises(ValueError):
            exact_cdf(bad, Fraction(1))


def test_kolmogorov_exact_two_boxes():
    rep = kolmogorov_exact(2, Fraction(1))
    assert rep.method == "exact"
    assert abs(rep.distance - (PHI_ORACLE[1.0] - 0.5)) <= 1e-9


def test_distance_in_unit_interval():
    for n in (2, 5, 9, 12):
        d = kolmogorov_exact(n, Fraction(2)).distance
        assert 0.0 <= d <= 1.0


def test_exact_distances_strictly_decreasing():
    ds = [kolmogorov_exact(n, Fraction(1)).distance for n in (4, 6, 8, 10, 12)]
    assert all(a > b for a, b in zip(ds, ds[1:]))


def test_scaled_distance_band_small_n():
    for a in (Fraction(1), Fraction(2)):
        for n in (4, 6, 8, 10, 12):
            d = kolmogorov_exact(n, a).distance
            assert 0.1 <= d * math.sqrt(n) <= 1.5


def test_dual_atoms_equal_reciprocal_parameter_atoms():
    for a in (Fraction(2), Fraction(3, 2), Fraction(5)):
        for n in range(2, 11):
            direct = exact_cdf(n, 1 / a)
            dual = dual_atoms(exact_cdf(n, a), a, n)
            assert [(x.exact_s, x.prob, x.cum_prob) for x in direct] == [
                (x.exact_s, x.prob, x.cum_prob) for x in dual
            ]
            assert [x.t_value for x in direct] == [x.t_value for x in dual]
            assert distance_from_atoms(dual) == kolmogorov_exact(n, 1 / a).distance


def test_mc_matches_exact_within_dkw_small():
    rep = kolmogorov_mc(2, Fraction(1), 100_000, seed=41)
    assert abs(rep.distance - kolmogorov_exact(2, Fraction(1)).distance) <= rep.dkw_eps_99
    assert rep.dkw_eps_99 == dkw_halfwidth(100_000)


def test_mc_determinism_and_threads():
    a = kolmogorov_mc(10, Fraction(2), 5000, seed=77)
    b = kolmogorov_mc(10, Fraction(2), 5000, seed=77)
    c = kolmogorov_mc(10, Fraction(2), 5000, seed=77, threads=4)
    assert a == b == c


def test_mc_rejects_tiny_samples():
    with pytest.raises(ValueError):
        kolmogorov_mc(8, Fraction(1), 999, seed=1)
    with pytest.raises(ValueError):
        kolmogorov_mc(1, Fraction(1), 2000, seed=1)


def _reports(points, alpha=Fraction(1)):
    return [DistanceReport(n, alpha, "mc", d) for n, d in points]


def test_rate_fit_exact_power_law():
    pts = [(n, n**-0.5) for n in (8, 16, 32, 64, 128)]
    fit = rate_fit(_reports(pts))
    assert abs(fit.slope + 0.5) <= 1e-12
    assert abs(fit.intercept) <= 1e-12
    fit = rate_fit(_reports([(n, 2 * n**-0.5) for n in (8, 16, 32)]))
    assert abs(fit.slope + 0.5) <= 1e-12
    assert abs(fit.sup_scaled - 2.0) <= 1e-12


def test_rate_fit_rejections():
    with pytest.raises(ValueError):
        rate_fit(_reports([(8, 0.1), (16, 0.05)]))
    with pytest.raises(ValueError):
        rate_fit(_reports([(8, 0.1), (8, 0.05), (16, 0.02)]))
    with pytest.raises(ValueError):
        rate_fit(_reports([(8, 0.1), (16, 0.0), (32, 0.02)]))
    mixed = _reports([(8, 0.1), (16, 0.05)]) + _reports([(32, 0.02)], Fraction(2))
    with pytest.raises(ValueError):
        rate_fit(mixed)


def test_concentration_probe_small():
    rep = concentration_probe(25, 5000, Fraction(1), seed=5)
    assert isinstance(rep, ConcentrationReport)
    assert rep.threshold == pytest.approx(2 * math.e * 5.0)
    assert rep.final_exceed_count == 0
    assert rep.step_bound_violations == 0
    assert rep.tight_bound_held
    assert rep.max_abs_final <= 24


def test_concentration_probe_preconditions():
    with pytest.raises(ValueError):
        concentration_probe(2, 1000, Fraction(1), seed=1)
    with pytest.raises(ValueError):
        concentration_probe(10, 1000, Fraction(2), seed=1)


def test_max_final_increment_growth_informational():
    # no pass/fail bound: log the observed max |X_n| across a widening n grid
    observed = {}
    for n in (25, 100, 400):
        rep = concentration_probe(n, 3000, Fraction(1), seed=6)
        observed[n] = rep.max_abs_final
        assert rep.final_exceed_count == 0
    print(f"max |X_n| by n (3000 draws each): {observed}")
    # sanity only: far below the linear content bound
    assert all(v < n for n, v in observed.items())


def test_distance_report_fields():
    rep = kolmogorov_mc(8, Fraction(1), 2000, seed=9)
    assert rep.sample_count == 2000 and rep.seed == 9 and rep.method == "mc"
    assert rep.dkw_eps_99 == pytest.approx(math.sqrt(math.log(200.0) / 4000.0))
    ex = kolmogorov_exact(8, Fraction(1))
    assert ex.sample_count is None and ex.seed is None and ex.dkw_eps_99 is None
