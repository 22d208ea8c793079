import json
import math

import numpy as np
import pytest

from quantfield.hilbertfield import (BasePath, ConnectionField,
                                     abelian_area_example, classify,
                                     connection_from_grid, curvature_at,
                                     export_grid, parallel_transport,
                                     trivialize, twist_to_flat)


@pytest.fixture(scope="module")
def area_field():
    return abelian_area_example(scale=1.0)


@pytest.fixture(scope="module")
def flat_field(area_field):
    return twist_to_flat(area_field, lambda x: np.array([-1j * x[1], 0.0]))


def test_path_validation():
    with pytest.raises(ValueError):
        BasePath.from_points([(0.0, 0.0)])
    p = BasePath.from_points([(0, 0), (1, 0)])
    q = BasePath.from_points([(1, 0), (1, 1)])
    assert p.compose(q).vertices == ((0, 0), (1, 0), (1, 1))
    with pytest.raises(ValueError):
        q.compose(p)
    assert BasePath.unit_square_loop().is_loop()
    assert not p.is_loop()


def test_curvature_exact_vs_fd(area_field):
    # the example carries exact derivatives; strip them to hit the FD path
    fd_field = ConnectionField(area_field.coefficients, 2, 2,
                               area_field.lows, area_field.highs)
    x = np.array([0.2, 0.5])
    exact = curvature_at(area_field, x).components
    approx = curvature_at(fd_field, x).components
    assert np.max(np.abs(exact - approx)) < 1e-8
    assert exact[0, 1][0, 0] == pytest.approx(-1j)
    assert np.max(np.abs(exact + exact.transpose(1, 0, 2, 3))) == 0.0


def test_classification(area_field, flat_field):
    assert classify(area_field).verdict == "ProjectivelyFlat"
    assert classify(flat_field).verdict == "Flat"

    def bad(x):
        A = np.zeros((2, 2, 2), dtype=complex)
        A[0] = np.array([[0.0, x[1]], [0.0, 0.0]])
        return A

    nb = ConnectionField(bad, 2, 2, (0.0, 0.0), (1.0, 1.0))
    res = classify(nb)
    assert res.verdict == "NotProjectivelyFlat"
    assert res.witness is not None


def test_scalar_field_of_projectively_flat(area_field):
    res = classify(area_field)
    r = res.scalar_field(np.array([0.3, 0.3]))
    assert r[0, 1] == pytest.approx(-1j, abs=1e-8)


def test_square_holonomy(area_field):
    T = parallel_transport(area_field, BasePath.unit_square_loop())
    assert np.max(np.abs(T - np.exp(1j) * np.eye(2))) < 1e-9


def test_transport_composition_and_inverse(area_field):
    p1 = BasePath.from_points([(0, 0), (0.7, 0.1)])
    p2 = BasePath.from_points([(0.7, 0.1), (0.4, 0.9)])
    T = parallel_transport(area_field, p1.compose(p2))
    Tc = parallel_transport(area_field, p2) @ parallel_transport(area_field, p1)
    assert np.max(np.abs(T - Tc)) < 1e-10
    Ti = parallel_transport(area_field, p1.reversed())
    assert np.max(np.abs(Ti @ parallel_transport(area_field, p1)
                         - np.eye(2))) < 1e-9


def test_flat_loop_holonomy(flat_field):
    rng = np.random.default_rng(9)
    for _ in range(20):
        pts = [tuple(rng.uniform(-0.8, 1.3, size=2)) for _ in range(4)]
        T = parallel_transport(flat_field, BasePath.from_points(pts + [pts[0]]))
        assert np.max(np.abs(T - np.eye(2))) < 1e-8


def test_trivialize(flat_field):
    triv = trivialize(flat_field)
    assert triv.path_independence < 1e-8
    assert triv.gauge_residual < 1e-6


def test_trivialize_refuses_curved(area_field):
    with pytest.raises(ValueError, match="ProjectivelyFlat"):
        trivialize(area_field)


def test_twist_guards(area_field, flat_field):
    # twisting an already flat field is a no-op
    assert twist_to_flat(flat_field, lambda x: np.zeros(2)) is flat_field
    # a potential that does not cancel r is rejected
    with pytest.raises(ArithmeticError):
        twist_to_flat(area_field, lambda x: np.array([+1j * x[1], 0.0]))


def test_grid_round_trip(area_field):
    payload = export_grid(area_field, per_axis=21)
    rebuilt = connection_from_grid(json.dumps(payload))
    x = np.array([0.25, 0.6])
    assert np.max(np.abs(rebuilt.a_matrices(x)
                         - area_field.a_matrices(x))) < 1e-12
    T = parallel_transport(rebuilt, BasePath.unit_square_loop())
    assert np.max(np.abs(T - np.exp(1j) * np.eye(2))) < 1e-8


def test_grid_shape_validation():
    with pytest.raises(ValueError):
        connection_from_grid({"axes": [[0, 1]], "fiber_dim": 1,
                              "values": [[[0.0]]]})
