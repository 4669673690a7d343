import numpy as np
import pytest

from diskharm.maps import (
    DomainError,
    FamilyParams,
    MonomialDilatation,
    UnsupportedDilatation,
    closed_form_parts_alpha,
    closed_form_parts_example213,
    prevertex_alpha,
    prevertex_theta,
)

RNG = np.random.default_rng(42)


def random_disk_points(n, r_max=0.9, r_min=0.02):
    r = RNG.uniform(r_min, r_max, n)
    return r * np.exp(2j * np.pi * RNG.uniform(size=n))


def fd_derivative(F, z, h=1e-5):
    return (F.value_at(z + h) - F.value_at(z - h)) / (2 * h)


def test_prevertex_alpha_examples():
    F = prevertex_alpha(-1.0)
    assert F.value_at(0.5) == pytest.approx(1.0)  # z/(1-z) at 1/2
    F = prevertex_alpha(0.0)
    assert F.value_at(0.5) == pytest.approx(2.0 / 3.0)
    for a in (-1, -0.3, 0.7, 1):
        F = prevertex_alpha(a)
        assert F.value_at(0.0) == 0
        assert F.derivative_at(0.0) == pytest.approx(1.0)


def test_prevertex_alpha_domain_and_bounds():
    with pytest.raises(ValueError):
        prevertex_alpha(1.5)
    with pytest.raises(DomainError):
        prevertex_alpha(0.5).value_at(1.0)
    with pytest.raises(DomainError):
        prevertex_alpha(0.5).derivative_at(1.2j)


def test_prevertex_theta_is_arctan_at_right_angle():
    F = prevertex_theta(np.pi / 2)
    assert F.value_at(0.0) == 0
    assert abs(F.value_at(0.5) - np.arctan(0.5)) <= 1e-12
    z = random_disk_points(200)
    np.testing.assert_allclose(F.value_at(z), np.arctan(z), rtol=1e-12, atol=1e-14)


def test_prevertex_theta_normalization_and_bounds():
    for th in (0.3, 1.1, 2.8):
        F = prevertex_theta(th)
        assert abs(F.value_at(0.0)) == 0
        assert F.derivative_at(0.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        prevertex_theta(0.0)
    with pytest.raises(ValueError):
        prevertex_theta(np.pi)


def test_derivatives_match_finite_differences():
    fns = [prevertex_alpha(0.5), prevertex_alpha(-1.0), prevertex_theta(1.0)]
    fns += list(closed_form_parts_alpha(0.3, MonomialDilatation(-1, 1)))
    fns += list(closed_form_parts_alpha(-0.6, MonomialDilatation(1, 1)))
    (h1, g1), (h2, g2) = closed_form_parts_example213()
    fns += [h1, g1, h2, g2]
    z = random_disk_points(50, r_max=0.9)
    for F in fns:
        fd = fd_derivative(F, z)
        an = F.derivative_at(z)
        assert np.max(np.abs(fd - an) / np.abs(an)) <= 1e-6, F.label


def test_positivity_criterion_alpha_family():
    r = np.linspace(0.01, 0.99, 100)
    th = 2 * np.pi * np.arange(360) / 360
    z = (r[:, None] * np.exp(1j * th)[None, :]).ravel()
    for a in (-1.0, -0.5, 0.0, 0.5, 1.0):
        F = prevertex_alpha(a)
        direct = np.real((1 - z * z) * F.derivative_at(z))
        closed = (
            (1 - np.abs(z) ** 2)
            * (1 + np.abs(z) ** 2 - 2 * a * np.real(z))
            / np.abs(1 - z * z) ** 2
        )
        assert np.all(direct > 0)
        assert np.max(np.abs(direct - closed) / closed) <= 1e-10


def test_positivity_criterion_strip_family():
    r = np.linspace(0.01, 0.99, 100)
    th = 2 * np.pi * np.arange(360) / 360
    z = (r[:, None] * np.exp(1j * th)[None, :]).ravel()
    for theta in (np.pi / 6, np.pi / 2, 5 * np.pi / 6):
        F = prevertex_theta(theta)
        assert np.all(np.real((1 - z * z) * F.derivative_at(z)) > 0)


def test_closed_form_normalization():
    for a in (-1.0, -0.25, 0.5, 1.0):
        for omega in (MonomialDilatation(-1, 1), MonomialDilatation(1, 1)):
            h, g = closed_form_parts_alpha(a, omega)
            assert abs(h.value_at(0.0)) <= 1e-15
            assert abs(g.value_at(0.0)) <= 1e-15
            assert h.derivative_at(0.0) == pytest.approx(1.0)
            assert abs(g.derivative_at(0.0)) <= 1e-15


def test_closed_form_shear_and_dilatation_identities():
    z = random_disk_points(1000)
    for a in (-1.0, -0.25, 0.5, 1.0):
        F = prevertex_alpha(a)
        for omega in (MonomialDilatation(-1, 1), MonomialDilatation(1, 1)):
            h, g = closed_form_parts_alpha(a, omega)
            lhs = h.value_at(z) + g.value_at(z)
            rhs = F.value_at(z)
            assert np.max(np.abs(lhs - rhs) / np.abs(rhs)) <= 1e-11
            ratio = g.derivative_at(z) / h.derivative_at(z)
            assert np.max(np.abs(ratio - omega(z))) <= 1e-10


def test_closed_form_unsupported_dilatation():
    with pytest.raises(UnsupportedDilatation):
        closed_form_parts_alpha(0.5, MonomialDilatation(1, 2))


def test_real_symmetry_alpha_closed_forms():
    z = random_disk_points(100)
    for a in (-0.5, 0.5):
        for omega in (MonomialDilatation(-1, 1), MonomialDilatation(1, 1)):
            h, g = closed_form_parts_alpha(a, omega)
            for A in (h, g):
                assert np.max(
                    np.abs(np.conj(A.value_at(np.conj(z))) - A.value_at(z))
                ) <= 1e-12


def test_example213_closed_forms():
    (h1, g1), (h2, g2) = closed_form_parts_example213()
    assert abs(h1.value_at(0.0) + g1.value_at(0.0)) == 0
    z = 0.4 + 0.2j
    assert abs(g2.derivative_at(z) / h2.derivative_at(z) - z * z) <= 1e-12
    assert h1.derivative_at(0.5) + g1.derivative_at(0.5) == pytest.approx(0.8)
    zs = random_disk_points(300)
    np.testing.assert_allclose(
        h1.value_at(zs) + g1.value_at(zs), np.arctan(zs), rtol=1e-12, atol=1e-14
    )
    np.testing.assert_allclose(
        h2.value_at(zs) + g2.value_at(zs), zs / (1 - zs), rtol=1e-12, atol=1e-14
    )
    ratio = g1.derivative_at(zs) / h1.derivative_at(zs)
    assert np.max(np.abs(ratio + zs)) <= 1e-12


def test_monomial_dilatation_bounds():
    with pytest.raises(ValueError):
        MonomialDilatation(1.5, 1)
    with pytest.raises(ValueError):
        MonomialDilatation(0.5, 0)
    w = MonomialDilatation(0.5j, 2)
    assert w(0.5) == pytest.approx(0.125j)
    assert str(MonomialDilatation(-1, 1)) == "-z"
    assert str(MonomialDilatation(1, 3)) == "z^3"


def test_family_params_validation():
    with pytest.raises(ValueError):
        FamilyParams(family="alpha", alpha=2.0)
    with pytest.raises(ValueError):
        FamilyParams(family="theta", theta=4.0)
    with pytest.raises(ValueError):
        FamilyParams(family="beta")
    p = FamilyParams(family="alpha", alpha=0.5)
    assert p.prevertex().value_at(0.0) == 0
