"""
Routing regimes of the node and their figures of merit.

Two operating regimes are provided as parameter generators:

* trans-waveguide: a photon entering port 1 leaves entirely through the upper
  guide (ports 3 and 4);
* unidirectional: nothing is reflected, so a photon entering port 1 or 3 only
  moves to the right (ports 2 and 4).
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import brentq

from .core import NodeParams, ParameterError, ScatteringMatrix
from .solver import scattering_matrix

PI = math.pi


class InfeasibleCondition(ValueError):
    """The requested routing condition has no physical parameter point."""


class UndefinedFidelity(ZeroDivisionError):
    """Routing fidelity requested for a row that scatters nothing."""


def unidirectional_coefficient(S: ScatteringMatrix) -> float:
    """Left/right emission asymmetry in the upper guide for port-1 input.

    ``|S13 - S14| / (S13 + S14)``; 0 when the upper guide receives nothing.
    """
    s13, s14 = S.p(1, 3), S.p(1, 4)
    total = s13 + s14
    if total == 0.0:
        return 0.0
    return min(1.0, abs(s13 - s14) / total)


def trans_waveguide_omega(alpha: float, theta2: float, gamma12: float = 1.0) -> float:
    """Interatomic strength that closes the lower guide for ``theta1 = -theta2``.

    ``Omega = -2 cos(2 theta2 + alpha) Gamma12``; negative values have no
    physical realisation.
    """
    return -2.0 * math.cos(2.0 * theta2 + alpha) * gamma12


def trans_waveguide_params(alpha: float, theta2: float = PI, *, theta3: float | None = None,
                           g0: float = 1.0, delta: float = 0.0,
                           gamma_e=(0.0, 0.0), d_phi: float = 0.0) -> NodeParams:
    """Parameters routing a port-1 photon completely into the upper guide.

    Uses ``phi_a = phi_b = pi/2``, ``theta1 = -theta2``,
    ``theta4 - theta3 = 2 alpha + theta2 - theta1`` and the interatomic strength
    from :func:`trans_waveguide_omega`. ``theta3`` defaults to ``theta2``.
    ``d_phi`` adds a propagation-phase mismatch to both guides.

    Raises
    ------
    InfeasibleCondition
        If the required interatomic strength is negative.
    """
    gamma12 = g0 * g0
    omega = trans_waveguide_omega(alpha, theta2, gamma12)
    if omega < -1e-12:
        raise InfeasibleCondition(
            f"no physical trans-waveguide point: required Omega = {omega:.6g} < 0 "
            f"(alpha = {alpha:.6g}, theta2 = {theta2:.6g})")
    t1 = -theta2
    t3 = theta2 if theta3 is None else theta3
    t4 = t3 + 2.0 * alpha + theta2 - t1
    return NodeParams(g=(g0,) * 4, theta=(t1, theta2, t3, t4), omega=max(omega, 0.0),
                      alpha=alpha, gamma_e=gamma_e, phi=(PI / 2 + d_phi, PI / 2 + d_phi),
                      delta=delta)


def trans_waveguide_alpha(omega: float, theta2: float = PI, gamma12: float = 1.0) -> float:
    """Interatomic phase placing ``omega`` on the trans-waveguide curve."""
    c = -omega / (2.0 * gamma12)
    if not -1.0 - 1e-12 <= c <= 1.0 + 1e-12:
        raise InfeasibleCondition(f"Omega = {omega:.6g} exceeds 2 Gamma12 = {2 * gamma12:.6g}")
    return math.acos(min(1.0, max(-1.0, c))) - 2.0 * theta2


def beamsplitter_point(theta2: float = PI, g0: float = 1.0, xtol: float = 1e-12) -> tuple[float, NodeParams]:
    """Interatomic strength where the trans-waveguide router splits 50:50.

    Bisects ``S13 - S14`` along the trans-waveguide curve for
    ``Omega`` in ``(0, 2 Gamma12]``.
    """
    gamma12 = g0 * g0

    def split(omega):
        p = trans_waveguide_params(trans_waveguide_alpha(omega, theta2, gamma12), theta2, g0=g0)
        S = scattering_matrix(p)
        return S.p(1, 3) - S.p(1, 4)

    lo, hi = 1e-6 * gamma12, 2.0 * gamma12
    if split(lo) * split(hi) > 0:
        raise InfeasibleCondition("S13 - S14 does not change sign on the trans-waveguide curve")
    omega = brentq(split, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)
    return omega, trans_waveguide_params(trans_waveguide_alpha(omega, theta2, gamma12), theta2, g0=g0)


def unidirectional_params(alpha: float, theta1: float = 0.0, theta3: float = 0.0, k: int = 1, *,
                          omega: float = 0.0, phi_a: float = PI / 2, g0: float = 1.0,
                          delta: float = 0.0, gamma_e=(0.0, 0.0), d_phi: float = 0.0) -> NodeParams:
    """Anti-reflective parameters (no photon leaves through ports 1 or 3).

    ``phi_a + phi_b = k pi``, ``theta2 - theta1 = -pi/2 - alpha`` and
    ``theta4 - theta3 = alpha + pi/2 - k pi``. With the default
    ``phi_a = pi/2, k = 1`` this is ``phi_a = phi_b = pi/2``,
    ``theta4 - theta3 = -pi/2 + alpha``. ``d_phi`` detunes both propagation
    phases from the matched value.
    """
    phi_b = k * PI - phi_a
    t2 = theta1 - PI / 2 - alpha
    t4 = theta3 + alpha + PI / 2 - k * PI
    return NodeParams(g=(g0,) * 4, theta=(theta1, t2, theta3, t4), omega=omega, alpha=alpha,
                      gamma_e=gamma_e, phi=(phi_a + d_phi, phi_b + d_phi), delta=delta)


def unidirectional_residual(p: NodeParams) -> float:
    """Largest violation of the unidirectional phase conditions, in radians.

    Zero means ``phi_a + phi_b = k pi`` and the coupling phases match the same
    ``k``; only the equal-coupling case is meaningful.
    """
    t1, t2, t3, t4 = p.theta
    phi_sum = p.phi[0] + p.phi[1]
    k = round(phi_sum / PI)

    def dist(x):
        y = math.remainder(x, 2 * PI)
        return abs(y)

    r_phi = dist(phi_sum - k * PI)
    r_low = dist(t2 - t1 + PI / 2 + p.alpha)
    r_up = dist(t4 - t3 - p.alpha - PI / 2 + k * PI)
    return max(r_phi, r_low, r_up)


def routing_fidelities(S: ScatteringMatrix) -> tuple[float, float]:
    """``(F_dire, F_trans)`` for a port-1 photon.

    Both are fractions of the scattered (not absorbed) probability:
    ``(S12 + S14) / sum`` and ``(S13 + S14) / sum``.
    """
    row = S.prob()[0]
    total = float(row.sum())
    if total <= 0.0:
        raise UndefinedFidelity("port-1 row scatters no probability (total absorption)")
    return float((row[1] + row[3]) / total), float((row[2] + row[3]) / total)
