import math

import numpy as np
import pytest

import pplus


M = pplus.ComplexMass(mass=1.0, width=0.2)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def test_boost_preserves_metric_and_maps_rest_frame():
    L = pplus.LorentzTransform.boost([0.3, -0.2, 1.1])
    lam = L.matrix()
    assert np.abs(lam.T @ ETA @ lam - ETA).max() <= 1e-12
    img = L.apply(pplus.FourVector(1.0, 0.0, 0.0, 0.0))
    u0 = math.sqrt(1.0 + 0.3**2 + 0.2**2 + 1.1**2)
    assert img.t == pytest.approx(u0, rel=1e-14)
    assert img.z == pytest.approx(1.1, rel=1e-14)


def test_interval_classification():
    assert pplus.classify_interval(pplus.FourVector(1, 0, 0, 1)) == pplus.IntervalClass.InForwardCone
    assert pplus.classify_interval(pplus.FourVector(1, 0, 0, 2)) == pplus.IntervalClass.Spacelike
    assert pplus.classify_interval(pplus.FourVector(-1, 0, 0, 0)) == pplus.IntervalClass.PastPointing


def test_wigner_d_double_cover_sign():
    turn = pplus.LorentzTransform.rotation([0, 0, 1], 2.0 * math.pi)
    w = pplus.wigner_rotation(turn, [0.2, 0.1, -0.4])
    d = pplus.wigner_d(1, w.spinor)
    assert np.abs(d.matrix() + np.eye(2)).max() <= 1e-12


def test_wigner_d_homomorphism():
    a = pplus.LorentzTransform.rotation([0, 1, 0], 0.7).spinor_lift()
    b = pplus.LorentzTransform.rotation([1, 0, 0], -1.2).spinor_lift()
    for two_j in (0, 1, 2, 3):
        d_ab = pplus.wigner_d(two_j, a * b).matrix()
        d_a = pplus.wigner_d(two_j, a).matrix()
        d_b = pplus.wigner_d(two_j, b).matrix()
        assert np.abs(d_ab - d_a @ d_b).max() <= 1e-10


def test_evolution_decay_bound():
    grid = pplus.QuadratureGrid.one_d(8.0, 64)
    state = pplus.normalize(pplus.gaussian_packet([0, 0, 0], 1.0), grid)
    for t in (0.1, 1.0, 10.0):
        n2 = pplus.norm_squared(pplus.evolve(state.wavefunction, M, t), grid)
        assert n2 <= math.exp(-M.width * t) + 1e-12


def test_semigroup_rejects_negative_time():
    f = pplus.gaussian_packet([0, 0, 0], 1.0)
    with pytest.raises(Exception, match="semigroup"):
        pplus.evolve(f, M, -0.5)


def test_checked_translation_rejects_spacelike():
    f = pplus.gaussian_packet([0, 0, 0], 1.0)
    with pytest.raises(Exception, match="spacelike"):
        pplus.translate(f, M, pplus.FourVector(0.0, 3.0, 0.0, 0.0))
    pplus.translate(f, M, pplus.FourVector(0.0, 3.0, 0.0, 0.0), checked=False)


def test_strip_bounds_closed_form():
    b = pplus.spectral_bounds(pplus.SpectrumDescriptor.closed_form_ray(M))
    assert b.k0 == pytest.approx(-0.1, abs=1e-14)
    assert b.k2 == pytest.approx(0.1, abs=1e-14)
    assert b.k1_empty
    assert pplus.analytic_strip(b).half_width == pytest.approx(0.1, abs=1e-14)


def test_dichotomy_physical_run():
    grid = pplus.QuadratureGrid.one_d(8.0, 64)
    state = pplus.normalize(pplus.gaussian_packet([0, 0, 0], 1.0), grid)
    ind = pplus.Observable.velocity_indicator(1.0, True)
    ts = [20.0 * i / 199 for i in range(200)]
    series = pplus.expectation_series(state, ind, M, ts)
    assert pplus.dichotomy_probe(series) == pplus.DichotomyVerdict.AlmostNeverZero

    zero = pplus.expectation_series(state, pplus.Observable.zero(), M, ts)
    assert pplus.dichotomy_probe(zero) == pplus.DichotomyVerdict.IdenticallyZero


def test_norm_growth_scan_blows_up_spacelike():
    grid = pplus.QuadratureGrid.one_d(8.0, 64)
    state = pplus.normalize(pplus.gaussian_packet([0, 0, 0], 1.0), grid)
    report = pplus.norm_growth_scan(state.wavefunction, grid, M, [0, 0, 1.0], 1.0,
                                    [0.5, 1.0, 8.0, 64.0, 128.0])
    values = {row.a.z: row.value for row in report.rows}
    assert values[0.5] <= 1.0 + 1e-10
    assert values[128.0] > 1e6
    assert report.first_exceed_x is not None


def test_python_callable_wavefunction():
    grid = pplus.QuadratureGrid.one_d(6.0, 48)

    def eval_fn(u, two_j3):
        return complex(math.exp(-u[2] ** 2), 0.0)

    f = pplus.SpinWavefunction(0, eval_fn, "py gaussian")
    g = pplus.gaussian_packet([0, 0, 0], math.sqrt(0.5))
    ip_ff = pplus.inner_product(f, f, grid)
    ip_fg = pplus.inner_product(f, g, grid)
    assert ip_ff.real == pytest.approx(ip_fg.real, rel=1e-12)


def test_schwarz_reflection():
    grid = pplus.QuadratureGrid.one_d(8.0, 64)
    state = pplus.normalize(pplus.gaussian_packet([0, 0, 0], 1.0), grid)
    ind = pplus.Observable.velocity_indicator(0.8, True)
    for z in (0.5 + 0.05j, 1.0 - 0.09j, 2.0 + 0.02j):
        lhs = np.conj(pplus.complex_expectation(state.wavefunction, grid, ind, M, np.conj(z)))
        rhs = pplus.complex_expectation(state.wavefunction, grid, ind, M, z)
        assert abs(lhs - rhs) <= 1e-12


def test_selftest_suites_pass():
    for suite in pplus.run_selftest(123):
        assert suite.pass_, suite.name


def test_runner_roundtrip(tmp_path):
    config = """{
      "experiment": "spectrum-check",
      "complex_mass": {"mass": 1.0, "width": 0.2}
    }"""
    ok, errors = pplus.validate_config_text(config)
    assert ok and not errors
    code, summary = pplus.run_experiment_json(config, str(tmp_path))
    assert code == 0
    assert (tmp_path / "spectrum-check.csv").exists()
    assert (tmp_path / "manifest.json").exists()
