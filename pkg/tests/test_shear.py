import numpy as np
import pytest

from diskharm.maps import (
    MonomialDilatation,
    closed_form_parts_alpha,
    closed_form_parts_example213,
    prevertex_alpha,
    prevertex_theta,
)
from diskharm.poly import Polynomial, cohn_step, roots
from diskharm.shear import (
    LinCombSpec,
    QuadratureFailure,
    QuadratureParams,
    combined_dilatation_eq5,
    dilatation_example213,
    gamma_polys,
    gamma_rational,
    lincomb,
    radial_integral,
    shear_construct,
)

RNG = np.random.default_rng(123)

MINUS_Z = MonomialDilatation(-1, 1)
PLUS_Z = MonomialDilatation(1, 1)


def random_disk_points(n, r_max=0.9, r_min=0.02):
    r = RNG.uniform(r_min, r_max, n)
    return r * np.exp(2j * np.pi * RNG.uniform(size=n))


def test_radial_integral_elementary():
    z = random_disk_points(50)
    np.testing.assert_allclose(radial_integral(lambda w: 2 * w, z), z * z, rtol=1e-12)
    np.testing.assert_allclose(
        radial_integral(lambda w: 1.0 / (1.0 - w), z), -np.log(1 - z), rtol=1e-10
    )
    assert radial_integral(lambda w: np.ones_like(w), 0.3 + 0.4j) == pytest.approx(
        0.3 + 0.4j
    )


def test_radial_integral_failure():
    quad = QuadratureParams(tol=1e-14, max_subdivisions=4)
    with pytest.raises(QuadratureFailure):
        radial_integral(lambda w: 1.0 / (1.0 - 0.999 * w), np.array([0.998]), quad)


def test_shear_matches_closed_forms():
    z = random_disk_points(100)
    for a in (-1.0, -0.25, 0.5, 1.0):
        for omega in (MINUS_Z, PLUS_Z):
            F = prevertex_alpha(a)
            f = shear_construct(F, omega)
            h_ref, g_ref = closed_form_parts_alpha(a, omega)
            assert np.max(np.abs(f.h.value_at(z) - h_ref.value_at(z))) <= 1e-9
            assert np.max(np.abs(f.g.value_at(z) - g_ref.value_at(z))) <= 1e-9


def test_shear_normalization():
    for build in (
        lambda: shear_construct(prevertex_alpha(0.5), MINUS_Z),
        lambda: shear_construct(prevertex_theta(np.pi / 2), MINUS_Z),
        lambda: shear_construct(prevertex_alpha(-1.0), MonomialDilatation(1, 2)),
    ):
        f = build()
        assert abs(f(0.0)) <= 1e-13
        assert f.h.derivative_at(0.0) == pytest.approx(1.0)
        assert abs(f.g.derivative_at(0.0)) <= 1e-13


def test_shear_strip_minus_z_gives_arctan_sum():
    f = shear_construct(prevertex_theta(np.pi / 2), MINUS_Z)
    z = random_disk_points(60)
    lhs = f.h.value_at(z) + f.g.value_at(z)
    np.testing.assert_allclose(lhs, np.arctan(z), rtol=1e-9, atol=1e-12)
    # known part derivatives: h' = 1/((1-z)(1+z^2)), g' = -z/((1-z)(1+z^2))
    np.testing.assert_allclose(
        f.h.derivative_at(z), 1.0 / ((1 - z) * (1 + z * z)), rtol=1e-12
    )


def test_lincomb_endpoints_and_linearity():
    f1 = shear_construct(prevertex_alpha(0.5), MINUS_Z)
    f2 = shear_construct(prevertex_alpha(-0.5), PLUS_Z)
    assert lincomb(LinCombSpec(f1, f2, 1.0)) is f1
    assert lincomb(LinCombSpec(f1, f2, 0.0)) is f2
    f = lincomb(LinCombSpec(f1, f2, 0.25))
    z = 0.3
    assert abs(f(z) - (0.25 * f1(z) + 0.75 * f2(z))) <= 1e-12
    z = random_disk_points(20)
    np.testing.assert_allclose(
        f.h.value_at(z), 0.25 * f1.h.value_at(z) + 0.75 * f2.h.value_at(z), rtol=1e-12
    )
    with pytest.raises(ValueError):
        LinCombSpec(f1, f2, 1.5)


def test_combined_dilatation_reduces_at_equal_alphas():
    a = 0.3
    t = 0.6
    w1 = MonomialDilatation(1, 2)
    w2 = MonomialDilatation(1, 2)
    rd = combined_dilatation_eq5(w1, w2, a, a, t)
    z = random_disk_points(200)
    expected = (t * w1(z) + (1 - t) * w2(z) + w1(z) * w2(z)) / (
        1 + t * w2(z) + (1 - t) * w1(z)
    )
    np.testing.assert_allclose(rd(z), expected, rtol=1e-12)


def test_combined_dilatation_t_one_is_first():
    rd = combined_dilatation_eq5(MINUS_Z, PLUS_Z, 0.4, -0.2, 1.0)
    z = random_disk_points(100)
    np.testing.assert_allclose(rd(z), -z, atol=1e-13)


def test_three_dilatation_routes_agree():
    a1, a2, t = 0.5, -0.5, 0.25
    z = 0.3 + 0.2j
    rd5 = combined_dilatation_eq5(MINUS_Z, PLUS_Z, a1, a2, t)
    rd6 = gamma_rational(a1, a2, t)
    f1 = shear_construct(prevertex_alpha(a1), MINUS_Z)
    f2 = shear_construct(prevertex_alpha(a2), PLUS_Z)
    f = lincomb(LinCombSpec(f1, f2, t))
    assert abs(rd5(z) - rd6(z)) <= 1e-12
    assert abs(rd5(z) - f.omega(z)) <= 1e-12
    zs = random_disk_points(500)
    np.testing.assert_allclose(rd5(zs), rd6(zs), rtol=1e-10)
    np.testing.assert_allclose(rd5(zs), f.omega(zs), rtol=1e-10)


@pytest.mark.parametrize(
    "w1,w2",
    [
        (MINUS_Z, PLUS_Z),
        (MINUS_Z, MonomialDilatation(-1, 2)),
        (MINUS_Z, MonomialDilatation(1, 2)),
        (MINUS_Z, MonomialDilatation(1, 3)),
    ],
)
def test_eq5_matches_hprime_ratio(w1, w2):
    a1, a2, t = 0.6, -0.2, 0.35
    rd = combined_dilatation_eq5(w1, w2, a1, a2, t)
    f1 = shear_construct(prevertex_alpha(a1), w1)
    f2 = shear_construct(prevertex_alpha(a2), w2)
    f = lincomb(LinCombSpec(f1, f2, t))
    z = random_disk_points(500, r_max=0.85)
    np.testing.assert_allclose(rd(z), f.omega(z), rtol=1e-10)


def test_gamma_half_t_factorization():
    a1, a2 = 0.3, -0.4
    gamma, gamma_star = gamma_polys(a1, a2, 0.5)
    expected = Polynomial([0.0, -(a1 - a2 - 1), -(a1 + a2), 1.0])
    assert gamma.allclose(expected, rtol=1e-14)
    # constant term of gamma is zero at t = 1/2, so gamma* drops a degree
    np.testing.assert_allclose(gamma_star.coeffs, gamma.coeffs[:0:-1])


def test_gamma_zero_alphas_zeros_in_closed_disk():
    for t in (0.1, 0.3, 0.7, 0.9):
        gamma, _ = gamma_polys(0.0, 0.0, t)
        expected = Polynomial([2 * t - 1, 1.0, 2 * t - 1, 1.0])
        assert gamma.allclose(expected, rtol=1e-14)
        assert all(abs(r) <= 1 + 1e-9 for r in roots(gamma))


def test_gamma_cohn_chain_quadratic():
    a1, a2, t = 0.4, -0.2, 0.3
    gamma, _ = gamma_polys(a1, a2, t)
    g1 = cohn_step(gamma)
    k = 4 * t * (1 - t)
    expected = Polynomial([k * -(a1 - a2 - 1), k * -(a1 + a2), k])
    assert g1.allclose(expected, rtol=1e-12)


def test_example213_dilatation_against_lincomb():
    t = 0.75
    rd = dilatation_example213(t)
    z = 0.5j
    hand = z * (z - t) / (1 - t * z)
    assert abs(rd(z) - hand) <= 1e-15
    (h1, g1), (h2, g2) = closed_form_parts_example213()
    from diskharm.shear import HarmonicMap

    f1 = HarmonicMap(h=h1, g=g1, omega=MINUS_Z)
    f2 = HarmonicMap(h=h2, g=g2, omega=MonomialDilatation(1, 2))
    f = lincomb(LinCombSpec(f1, f2, t))
    zs = random_disk_points(300)
    np.testing.assert_allclose(rd(zs), f.omega(zs), rtol=1e-10)
    np.testing.assert_allclose(np.abs(rd(zs)), np.abs(zs * (zs - t) / (1 - t * zs)))


def test_eq5_parameter_validation():
    with pytest.raises(ValueError):
        combined_dilatation_eq5(MINUS_Z, PLUS_Z, 1.5, 0.0, 0.5)
    with pytest.raises(ValueError):
        combined_dilatation_eq5(MINUS_Z, PLUS_Z, 0.5, 0.0, -0.1)
    with pytest.raises(ValueError):
        gamma_polys(0.0, -2.0, 0.5)
