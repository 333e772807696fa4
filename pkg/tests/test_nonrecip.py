import math

import numpy as np
import pytest

from giantnode.core import ScatteringMatrix
from giantnode.nonrecip import (S_CCW, S_CW, UndefinedNonreciprocity, circulator_fidelity,
                                circulator_params, classify_mode, nonreciprocity)
from giantnode.solver import scattering_matrix

PI = math.pi


def _S(prob):
    return ScatteringMatrix(np.sqrt(np.asarray(prob, dtype=float)))


def test_ideal_matrices_follow_port_order():
    # counterclockwise: 1->4, 4->3, 3->2, 2->1 (row = input)
    assert [int(np.argmax(r)) + 1 for r in S_CCW] == [4, 1, 2, 3]
    assert [int(np.argmax(r)) + 1 for r in S_CW] == [2, 3, 4, 1]


def test_fidelity_of_ideals():
    assert circulator_fidelity(S_CW, "cw") == 1.0
    assert circulator_fidelity(S_CCW, "cw") == 0.0
    assert circulator_fidelity(_S(S_CCW), "ccw") == 1.0


def test_nonreciprocity_antisymmetric(rng):
    for _ in range(20):
        S = scattering_matrix(circulator_params(rng.uniform(0, 2 * PI), omega=rng.uniform(0, 8),
                                                delta=rng.uniform(-8, 8)))
        for i in range(1, 5):
            for j in range(1, 5):
                if i != j and S.p(i, j) + S.p(j, i) > 0:
                    assert nonreciprocity(S, i, j) == -nonreciprocity(S, j, i)


def test_nonreciprocity_edges():
    S = _S([[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert nonreciprocity(S, 1, 2) == 1.0
    with pytest.raises(UndefinedNonreciprocity):
        nonreciprocity(S, 3, 4)
    with pytest.raises(ValueError):
        nonreciprocity(S, 1, 1)


def test_reciprocal_at_zero_detuning():
    S = scattering_matrix(circulator_params(omega=5.0, delta=0.0))
    assert nonreciprocity(S, 1, 2) == pytest.approx(0.0, abs=1e-10)


def test_clockwise_region_nonreciprocity():
    S = scattering_matrix(circulator_params(omega=5.0, delta=5.0))
    assert nonreciprocity(S, 1, 2) == pytest.approx(1.0, abs=1e-10)


def test_no_reflection_any_detuning(rng):
    for d in np.linspace(-10, 10, 41):
        P = scattering_matrix(circulator_params(rng.uniform(0, 2 * PI), rng.uniform(0, 2 * PI),
                                                rng.uniform(0, 2 * PI), omega=rng.uniform(0, 10),
                                                delta=d)).prob()
        assert np.diag(P).max() <= 1e-9
        np.testing.assert_allclose(P.sum(axis=0), 1, atol=1e-9)
        np.testing.assert_allclose(P.sum(axis=1), 1, atol=1e-9)


def test_circulator_closed_form_entries():
    # with these phases: S14 = S32 = 4/((D+W)^2+4), S21 = S43 = (D-W)^2/((D-W)^2+4)
    for omega in (2.0, 5.0, 8.0):
        for d in np.linspace(-10, 10, 9):
            P = scattering_matrix(circulator_params(omega=omega, delta=d)).prob()
            assert P[0, 3] == pytest.approx(4 / ((d + omega) ** 2 + 4), abs=1e-12)
            assert P[1, 0] == pytest.approx((d - omega) ** 2 / ((d - omega) ** 2 + 4), abs=1e-12)
            assert P[2, 1] == pytest.approx(P[0, 3], abs=1e-12)
            assert P[3, 2] == pytest.approx(P[1, 0], abs=1e-12)


@pytest.mark.parametrize("omega", [2.0, 5.0, 8.0])
def test_mode_flips_with_detuning(omega):
    ccw = scattering_matrix(circulator_params(omega=omega, delta=-omega))
    cw = scattering_matrix(circulator_params(omega=omega, delta=omega))
    assert classify_mode(ccw, threshold=0.85) == "ccw"
    assert classify_mode(cw, threshold=0.85) == "cw"


def test_classify_at_design_points():
    assert classify_mode(scattering_matrix(circulator_params(omega=5.0, delta=-5.0))) == "ccw"
    assert classify_mode(scattering_matrix(circulator_params(omega=5.0, delta=5.0))) == "cw"
    assert classify_mode(scattering_matrix(circulator_params(omega=5.0, delta=0.0))) is None


def test_fidelity_leakage_at_omega_5():
    # one of the two cycles leaks 1/26 at Omega = 5, capping the fidelity at 1 - 1/52
    S = scattering_matrix(circulator_params(omega=5.0, delta=5.0))
    assert circulator_fidelity(S, "cw") == pytest.approx(1 - 1 / 52, abs=1e-12)
