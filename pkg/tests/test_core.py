import math

import numpy as np
import pytest

from giantnode.core import (NodeParams, ParameterError, Port, ScatteringMatrix, normalize_params,
                            wrap_phase)


def test_port_numbering():
    assert [int(p) for p in Port] == [1, 2, 3, 4]
    assert Port.LOWER_LEFT == 1 and Port.UPPER_RIGHT == 4


@pytest.mark.parametrize("x, expected", [
    (0.0, 0.0),
    (2 * math.pi, 0.0),
    (-math.pi / 2, 1.5 * math.pi),
    (5 * math.pi, math.pi),
])
def test_wrap_phase(x, expected):
    assert wrap_phase(x) == pytest.approx(expected, abs=1e-15)


def test_phases_wrapped_on_construction():
    p = NodeParams(theta=(-math.pi, 3 * math.pi, 0, 7), alpha=-0.5, phi=(10, -1))
    assert all(0 <= t < 2 * math.pi for t in p.theta + p.phi + (p.alpha,))
    assert p.theta[0] == pytest.approx(math.pi)


@pytest.mark.parametrize("kwargs, msg", [
    (dict(g=(1, -0.1, 1, 1)), "negative coupling strength g2"),
    (dict(gamma_e=(0, -1)), "negative dissipation rate gamma_e2"),
    (dict(omega=-1), "negative interatomic"),
    (dict(tau=(-1, 0)), "negative retardation"),
    (dict(g=(1, 1, 1)), "needs 4 values"),
])
def test_invalid_params(kwargs, msg):
    with pytest.raises(ParameterError, match=msg):
        NodeParams(**kwargs)


def test_normalize_idempotent():
    p = NodeParams(theta=(7, -1, 2, 3), alpha=9.0, phi=(-3, 4))
    q = normalize_params(p)
    assert q == p
    assert normalize_params(q) == q


def test_symmetric_layout():
    p = NodeParams.symmetric(math.pi / 2, omega=8, theta1=0.3)
    assert p.g == (1.0,) * 4
    assert p.theta[1] == p.theta[2] == pytest.approx(0.3 + math.pi / 2)
    assert p.theta[0] == p.theta[3] == pytest.approx(0.3)
    assert p.phi == (math.pi / 2, math.pi / 2)


def test_effective_phi_retardation():
    p = NodeParams(phi=(1.0, 2.0), tau=(0.1, 0.2), delta=3.0)
    assert p.effective_phi() == pytest.approx((1.3, 2.6))


def test_scattering_matrix_readonly_and_accessors():
    s = np.eye(4, dtype=complex)[[1, 0, 3, 2]]
    S = ScatteringMatrix(s)
    assert S.p(1, 2) == 1.0 and S.amp(3, 4) == 1.0
    assert S.is_unitary()
    with pytest.raises(ValueError):
        S.s[0, 0] = 1


def test_subunitary_check():
    S = ScatteringMatrix(0.9 * np.eye(4))
    assert S.is_subunitary()
    assert not S.is_unitary()
    assert not ScatteringMatrix(1.1 * np.eye(4)).is_subunitary()
