import math

import numpy as np
import pytest

from gaussdisc import (
    DomainError,
    GaussianPovm,
    ReportFailure,
    averaged_fidelity_bound,
    bhattacharyya_global,
    condition_on_povm,
    fidelity_heterodyne,
    gaussian_fidelity_one_mode,
    heterodyne_epsilon,
    local_bounds,
    p_lower_local,
    p_upper_local,
    qcb_global,
    s_overlap_heterodyne,
    s_overlap_local,
    verify_fidelity_optimality,
    verify_heterodyne_optimality,
)

SQRT2, SQRT3 = math.sqrt(2.0), math.sqrt(3.0)
HET = GaussianPovm.heterodyne()


def test_povm_validation():
    with pytest.raises(DomainError):
        GaussianPovm(eta=0.5)
    with pytest.raises(DomainError):
        GaussianPovm(lam=0.0)
    with pytest.raises(DomainError):
        GaussianPovm(theta=7.0)


def test_heterodyne_covariance_is_identity():
    assert np.array_equal(HET.covariance(), np.eye(2))
    assert HET.is_heterodyne


def test_povm_covariance_symplectic_eigenvalue():
    povm = GaussianPovm(eta=1.7, theta=0.3, lam=2.5)
    cov = povm.covariance()
    assert np.allclose(cov, cov.T)
    assert math.sqrt(np.linalg.det(cov)) == pytest.approx(povm.eta, rel=1e-12)
    assert np.linalg.eigvalsh(cov).min() > 0.0


def test_conditioning_without_correlations():
    prep = condition_on_povm(2.0, 0.0, GaussianPovm(eta=1.3, theta=0.4, lam=2.0))
    assert np.array_equal(prep.v_mod, np.zeros((2, 2)))
    np.testing.assert_allclose(prep.v_cond, 2.0 * np.eye(2), atol=1e-15)


def test_conditioning_heterodyne_case():
    prep = condition_on_povm(2.0, 1.0, HET)
    np.testing.assert_allclose(prep.v_cond, (5.0 / 3.0) * np.eye(2), atol=1e-12)
    np.testing.assert_allclose(prep.v_mod, (1.0 / 3.0) * np.eye(2), atol=1e-12)
    assert prep.outcome_gain == pytest.approx(heterodyne_epsilon(2.0) / SQRT2, abs=1e-15)


def test_conditioning_diagonal_squeezed_case():
    prep = condition_on_povm(3.0, 2.0, GaussianPovm(eta=1.0, theta=0.0, lam=2.0))
    assert prep.v_cond[0, 0] == pytest.approx(3.0 - 4.0 / 5.0, abs=1e-12)
    assert prep.v_cond[1, 1] == pytest.approx(3.0 - 4.0 / 3.5, abs=1e-12)
    assert prep.outcome_gain is None


def test_conditioning_complement_identity():
    rng = np.random.default_rng(7)
    for _ in range(100):
        mu = rng.uniform(1.0, 20.0)
        g = rng.uniform(-(mu - 1.0), mu - 1.0)
        povm = GaussianPovm(
            eta=rng.uniform(1.0, 5.0),
            theta=rng.uniform(0.0, 2.0 * math.pi),
            lam=math.exp(rng.uniform(math.log(0.2), math.log(5.0))),
        )
        prep = condition_on_povm(mu, g, povm)
        np.testing.assert_allclose(prep.v_cond + prep.v_mod, mu * np.eye(2), atol=1e-12)
        assert np.linalg.eigvalsh(prep.v_cond).min() > 0.0
        assert math.sqrt(np.linalg.det(prep.v_cond)) >= 1.0 - 1e-12
        assert np.linalg.eigvalsh(prep.v_mod).min() >= -1e-12


def test_conditioning_rejects_excess_correlation():
    with pytest.raises(DomainError):
        condition_on_povm(2.0, 1.5, HET)


def test_heterodyne_epsilon_values():
    assert heterodyne_epsilon(1.0) == 0.0
    assert heterodyne_epsilon(2.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
    assert heterodyne_epsilon(1e9) == pytest.approx(2.0, abs=1e-8)


def test_heterodyne_is_isotropic_in_theta():
    reference = condition_on_povm(2.5, 1.2, HET)
    for theta in (0.0, math.pi / 7.0, math.pi / 3.0):
        prep = condition_on_povm(2.5, 1.2, GaussianPovm(1.0, theta, 1.0))
        assert np.array_equal(prep.v_cond, reference.v_cond)
        assert np.array_equal(prep.v_mod, reference.v_mod)


def test_local_overlap_identical_states():
    for s in (0.2, 0.5, 0.8):
        assert s_overlap_local(1.0, s, HET) == pytest.approx(1.0, abs=1e-14)
        assert s_overlap_heterodyne(1.0, s) == pytest.approx(1.0, abs=1e-14)


def test_local_overlap_heterodyne_radical_value():
    # 2 G(2) sqrt(3) / (Lambda(2) + 3 + 1/3) at s = 1/2
    expected = (
        2.0 * (SQRT2 / (SQRT3 - 1.0)) * SQRT3 / ((2.0 + SQRT3) + 3.0 + 1.0 / 3.0)
    )
    assert s_overlap_local(2.0, 0.5, HET) == pytest.approx(expected, abs=1e-13)
    assert s_overlap_heterodyne(2.0, 0.5) == pytest.approx(expected, abs=1e-13)


def test_local_overlap_matrix_route_matches_closed_form():
    for mu in (1.2, 2.0, 8.0):
        for s in (0.15, 0.5, 0.85):
            assert s_overlap_local(mu, s, HET) == pytest.approx(
                s_overlap_heterodyne(mu, s), rel=1e-12
            )


def test_squeezed_povm_is_worse_than_heterodyne():
    het = s_overlap_local(2.0, 0.5, HET)
    squeezed = s_overlap_local(2.0, 0.5, GaussianPovm(1.0, 0.0, 2.0))
    assert squeezed > het


def test_overlap_grows_with_povm_noise():
    for mu in (1.5, 2.0, 5.0, 20.0):
        for s in (0.1, 0.5, 0.9):
            values = [
                s_overlap_local(mu, s, GaussianPovm(eta, 0.0, 1.0))
                for eta in np.linspace(1.0, 5.0, 9)
            ]
            assert all(b >= a - 1e-12 for a, b in zip(values, values[1:]))


def test_heterodyne_minimizes_overlap_on_scan_grid():
    lams = np.logspace(-1.0, 1.0, 81)
    for mu in (1.5, 2.0, 5.0, 20.0):
        het = [s_overlap_local(mu, s, HET) for s in np.arange(0.1, 0.95, 0.1)]
        for lam in lams[::8]:
            povm = GaussianPovm(1.0, 0.0, float(lam))
            for i, s in enumerate(np.arange(0.1, 0.95, 0.1)):
                assert s_overlap_local(mu, s, povm) >= het[i] - 1e-12


def test_p_upper_local_trivial_and_bounded():
    assert p_upper_local(1.0).p_upper == 0.5
    result = p_upper_local(2.0)
    assert result.p_upper <= 0.9471714908126589 / 2.0 + 1e-12
    assert 0.0 < result.s_star < 1.0


def test_local_upper_bound_dominates_global():
    for mu in np.logspace(0.0, 2.0, 12):
        assert p_upper_local(float(mu)).p_upper >= qcb_global(float(mu)).p_upper - 1e-12


def test_fidelity_heterodyne_trivial():
    assert fidelity_heterodyne(1.0, (0.0, 0.0)) == pytest.approx(1.0, abs=1e-14)


def test_fidelity_heterodyne_radical_value():
    expected = 2.0 / (1.0 + 10.0 / 3.0 - 2.0 * math.sqrt(4.0 / 3.0))
    value = fidelity_heterodyne(2.0, (0.0, 0.0))
    assert value == pytest.approx(expected, abs=1e-13)
    assert value < 1.0


def test_fidelity_heterodyne_decreases_with_displacement():
    radii = [0.0, 0.5, 1.0, 2.0, 4.0]
    values = [fidelity_heterodyne(2.0, (r, 0.0)) for r in radii]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_gaussian_fidelity_one_mode_identical():
    v = 1.7 * np.eye(2)
    assert gaussian_fidelity_one_mode(v, v, (0.0, 0.0)) == pytest.approx(1.0, rel=1e-12)


def test_gaussian_fidelity_matches_heterodyne_closed_form():
    # the closed form is the moment formula evaluated at the conditional pair,
    # with the displacement label scaled by the heterodyne gain
    for mu in (1.5, 2.0, 4.0):
        eps = heterodyne_epsilon(mu)
        for a in ((0.0, 0.0), (1.0, 0.0), (0.7, -1.1)):
            mean = (eps / SQRT2) * np.asarray(a)
            direct = gaussian_fidelity_one_mode(
                mu * np.eye(2), (1.0 + eps) * np.eye(2), mean
            )
            assert fidelity_heterodyne(mu, a) == pytest.approx(direct, rel=1e-12)


def test_p_lower_local_trivial():
    assert p_lower_local(1.0) == 0.5


def test_p_lower_local_monte_carlo_oracle():
    mu = 2.0
    rng = np.random.default_rng(12345)
    n = 1_000_000
    sigma = math.sqrt(mu - 1.0 - heterodyne_epsilon(mu))
    samples = rng.normal(0.0, sigma, size=(n, 2))
    # vectorized copy of the fidelity closed form
    eps = heterodyne_epsilon(mu)
    den = 1.0 + mu * (1.0 + eps) - 2.0 * (mu - 1.0) * math.sqrt(2.0 * mu / (mu + 1.0))
    a2 = np.sum(samples * samples, axis=1)
    fid = 2.0 * np.exp(-eps * eps * a2 / (4.0 * (mu + 1.0 + eps))) / den
    values = (1.0 - np.sqrt(np.maximum(0.0, 1.0 - fid))) / 2.0
    estimate = float(values.mean())
    stderr = float(values.std() / math.sqrt(n))
    assert abs(p_lower_local(mu) - estimate) <= 3.0 * stderr


def test_p_lower_local_bracket():
    for mu in (1.2, 2.0, 10.0, 200.0):
        lower = p_lower_local(mu)
        upper = p_upper_local(mu).p_upper
        assert 0.0 < lower <= upper <= 0.5
        assert lower >= bhattacharyya_global(mu).p_lower - 1e-12


def test_local_bounds_record():
    bounds = local_bounds(2.0)
    assert bounds.p_lower == pytest.approx(p_lower_local(2.0), rel=1e-12)
    assert bounds.p_upper == pytest.approx(p_upper_local(2.0).p_upper, rel=1e-12)


@pytest.mark.parametrize("mu, g, s", [(2.0, 1.0, 0.5), (5.0, 4.0, 0.3), (3.0, 1.0, 0.7)])
def test_heterodyne_optimality_scan(mu, g, s):
    scan = verify_heterodyne_optimality(mu, g, s)
    assert scan.min_lambda == 1.0
    assert abs(scan.derivative_at_unit) <= 1e-6
    assert scan.values.shape == (81,)


def test_heterodyne_optimality_rejects_bad_points():
    with pytest.raises(DomainError):
        verify_heterodyne_optimality(2.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        verify_heterodyne_optimality(2.0, 1.0, 1.5)


def test_fidelity_scan_confirms_heterodyne():
    for mu in (1.5, 2.0, 5.0):
        scan = verify_fidelity_optimality(mu)
        assert scan.min_lambda == 1.0
        assert abs(scan.derivative_at_unit) <= 1e-6


def test_averaged_fidelity_bound_matches_quadrature_at_unit_lambda():
    # at lambda = 1 the scanned functional is isotropic; it differs from
    # p_lower_local only through the displacement normalization, so both
    # must sit strictly between 0 and the local upper bound
    for mu in (1.5, 3.0):
        value = averaged_fidelity_bound(mu, 1.0)
        assert 0.0 < value <= p_upper_local(mu).p_upper + 1e-12
