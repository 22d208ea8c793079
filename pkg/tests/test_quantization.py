import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quantfield import liecore
from quantfield.quantization import (CurvatureOptions, ModelSpec, PlanckPoint,
                                     curvature, flatness_classify,
                                     legendre_value, model_log_p,
                                     p_group_closed, p_group_quadrature,
                                     p_su2_closed, p_torus_closed,
                                     p_truncated_circle, p_sphere,
                                     sphere_asymptote, spherical_phi,
                                     truncated_circle_kappa_limit,
                                     weight_params, weyl_reduction_check)


def test_planck_point():
    assert PlanckPoint(1 + 2j).y == 2.0
    with pytest.raises(ValueError):
        PlanckPoint(1 - 1j)


def test_weight_params_examples():
    wp = weight_params(1j, 3, corrected=False)
    assert (wp.a, wp.b) == (-1.0, 0.0)
    wp = weight_params(2j, 3, corrected=True)
    assert wp.a == pytest.approx(-0.5)
    assert wp.b == pytest.approx(-1.5 * math.log(2))
    # depends only on Im s
    assert weight_params(1 + 1j, 1, False) == weight_params(5 + 1j, 1, False)


def test_model_validation():
    with pytest.raises(ValueError):
        ModelSpec.sphere(1, 0)
    with pytest.raises(ValueError):
        ModelSpec("sphere", False, 0, m=2)      # bare sphere unsupported
    with pytest.raises(ValueError):
        ModelSpec.truncated_circle(-1.0, 0)
    with pytest.raises(ValueError):
        ModelSpec("group", True, 0)


def test_corrected_su2_ratio_constancy():
    # p(s) / e^{(k+1)^2 Im s} constant in y to 1e-7
    rs = liecore.su2()
    for k in (0, 1, 3):
        lam = liecore.su2_weight(k)
        logs = [p_group_quadrature(complex(0, y), rs, lam, True).log_magnitude
                - (k + 1) ** 2 * y
                for y in (0.5, 1.0, 2.0)]
        assert max(logs) - min(logs) < 1e-7


def test_bare_su2_quadrature_vs_closed():
    # equality up to one global constant, 1e-7 relative across k and y
    rs = liecore.su2()
    diffs = []
    for k in range(7):
        lam = liecore.su2_weight(k)
        for y in (0.5, 1.0, 2.0):
            q = p_group_quadrature(complex(0, y), rs, lam, False)
            c = p_su2_closed(complex(0, y), k)
            diffs.append(q.log_magnitude - c.log_magnitude)
    assert max(diffs) - min(diffs) < 1e-7


def test_bare_torus_quadrature_vs_closed():
    for m in (1, 2):
        lam = liecore.torus_weight(m, [2] * m)
        diffs = []
        for y in (0.5, 1.0, 2.0):
            model = ModelSpec.torus(m, [2] * m, corrected=False)
            q = model_log_p(model)(complex(0, y)).log_magnitude
            c = p_torus_closed(complex(0, y), m, lam, False).log_magnitude
            diffs.append(q - c)
        assert max(diffs) - min(diffs) < 1e-10


def test_su2_closed_values():
    # k=1, y=1: p = e * 2 * (1 + 2) = 6e (times y^{-3/2} = 1)
    got = p_su2_closed(1j, 1).log_magnitude
    assert got == pytest.approx(math.log(6.0) + 1.0, abs=1e-12)
    assert p_su2_closed(1j, 0).log_magnitude == 0.0   # single j=0 term, k=0
    with pytest.raises(ValueError):
        p_su2_closed(1j, -1)


def test_group_closed_exponent():
    rs = liecore.su2()
    for k in (0, 2):
        lam = liecore.su2_weight(k)
        d = p_group_closed(2j, rs, lam).log_magnitude \
            - p_group_closed(1j, rs, lam).log_magnitude
        assert d == pytest.approx((k + 1) ** 2, abs=1e-12)


def test_spherical_phi_base_cases():
    assert spherical_phi(0, 2, 0.7).log_magnitude == \
        pytest.approx(math.log(math.pi), abs=1e-12)
    # m=2 equals pi P_k(cosh 2t)
    for k in range(11):
        for t in (0.3, 1.0, 2.0):
            got = spherical_phi(k, 2, t).log_magnitude
            want = math.log(math.pi) + math.log(legendre_value(
                k, math.cosh(2 * t)))
            assert got == pytest.approx(want, abs=1e-8)
    # upper bound from the integrand maximum
    assert spherical_phi(12, 2, 1.5).log_magnitude <= \
        2 * 12 * 1.5 + math.log(math.pi) + 1e-12


def test_sphere_guards():
    with pytest.raises(ValueError):
        p_sphere(1j, 300, 2)
    with pytest.raises(ValueError):
        p_sphere(1j, 3, 1)


def test_truncated_circle_erf_value():
    # k=0, r=1, y=1 (a=-1, b=0): integral = sqrt(pi) erf(1)
    got = p_truncated_circle(1j, 0, 1.0, corrected=False)
    want = math.log(math.sqrt(math.pi) * math.erf(1.0))
    assert got.log_magnitude == pytest.approx(want, abs=1e-10)


def test_truncated_circle_large_r_limit():
    got = p_truncated_circle(1j, 0, 8.0, corrected=False).log_magnitude
    assert got == pytest.approx(0.5 * math.log(math.pi), abs=1e-12)


def test_curvature_cross_check_paths():
    rs = liecore.su2()
    c = curvature(ModelSpec.group(rs, 2, corrected=True), 1j)
    assert c.method == "quadrature+FD"
    assert c.cross_check is not None
    assert abs(c.kappa - c.cross_check) < 1e-7
    c2 = curvature(ModelSpec.group(rs, 2, corrected=True), 1j,
                   CurvatureOptions(method="closed-form"))
    assert abs(c2.kappa) < 1e-9


def test_curvature_scaling_invariance():
    # kappa is blind to constant rescalings of p by construction: the two
    # paths differ by a large constant yet agree
    rs = liecore.su2()
    for k in (0, 4):
        c = curvature(ModelSpec.group(rs, k, corrected=False), 1.5j)
        assert abs(c.kappa - c.cross_check) < 1e-6


def test_curvature_x_independence():
    model = ModelSpec.torus(1, 3, corrected=False)
    full = curvature(model, 0.4 + 1j,
                     CurvatureOptions(check_x_derivative=True)).kappa
    fast = curvature(model, 0.4 + 1j).kappa
    assert full == pytest.approx(fast, abs=1e-6)
    assert fast == pytest.approx(1 / 8, abs=1e-6)


def test_flatness_verdicts():
    su2 = liecore.su2()
    res = flatness_classify(ModelSpec.group(su2, 0, corrected=True),
                            [0, 1, 2], [1j, 2j])
    assert res.verdict == "Flat"
    res = flatness_classify(ModelSpec.torus(1, 0, corrected=False),
                            [0, 2, 5], [1j, 2j])
    assert res.verdict == "ProjectivelyFlat"
    assert res.max_abs_kappa == pytest.approx(1 / 8, abs=1e-6)
    res = flatness_classify(ModelSpec.group(su2, 0, corrected=False),
                            [0, 1], [1j, 2j])
    assert res.verdict == "NotProjectivelyFlat"
    k, k2, s, gap = res.witness
    assert {k, k2} == {0, 1} and s == 1j
    assert gap == pytest.approx(1 / 9, abs=1e-6)
    with pytest.raises(ValueError):
        flatness_classify(ModelSpec.group(su2, 0, True), [0], [1j, 2j])


def test_sphere_asymptote_values():
    assert sphere_asymptote(10, 2, 1j) == pytest.approx(-1 / (8 * 21 ** 2))
    assert sphere_asymptote(5, 3, 1j) == 0.0
    assert sphere_asymptote(5, 1, 1j) == 0.0


def test_weyl_reduction_3sigma():
    chk = weyl_reduction_check(lambda t: math.exp(-t * t),
                               lambda t: math.exp(-0.25 * t * t), seed=123)
    assert chk.agrees


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=6),
       st.floats(min_value=0.4, max_value=2.5))
def test_corrected_su2_flat_property(k, y):
    rs = liecore.su2()
    c = curvature(ModelSpec.group(rs, k, corrected=True), complex(0, y),
                  CurvatureOptions(method="closed-form"))
    assert abs(c.kappa) < 1e-6


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=5),
       st.floats(min_value=0.5, max_value=2.0))
def test_torus_kappa_weight_independent_property(k, y):
    c = curvature(ModelSpec.torus(1, k, corrected=False), complex(0, y))
    assert c.kappa == pytest.approx(1 / (8 * y * y), abs=1e-6)
