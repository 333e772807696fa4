"""
Nonreciprocity and four-port circulators.

Probability matrices here use the scattering-matrix layout: row = input port,
column = output port, so ``T[n-1, m-1] = S_{n->m}``. The ideal circulators are
stored in the same layout; the fidelity only needs both to agree.
"""

from __future__ import annotations

import math

import numpy as np

from .core import NodeParams, ScatteringMatrix
from .routing import unidirectional_params

PI = math.pi

#: counterclockwise: 1->4, 2->1, 3->2, 4->3
S_CCW = np.array([
    [0, 0, 0, 1],
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
], dtype=float)

#: clockwise: 1->2, 2->3, 3->4, 4->1
S_CW = np.array([
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 0, 0, 0],
], dtype=float)

IDEAL = {"ccw": S_CCW, "cw": S_CW}


class UndefinedNonreciprocity(ZeroDivisionError):
    pass


def nonreciprocity(S: ScatteringMatrix, i: int, j: int) -> float:
    """``(S_{i->j} - S_{j->i}) / (S_{i->j} + S_{j->i})``."""
    if i == j:
        raise ValueError("nonreciprocity needs two distinct ports")
    fwd, bwd = S.p(i, j), S.p(j, i)
    total = fwd + bwd
    if total == 0.0:
        raise UndefinedNonreciprocity(f"S_{i}->{j} and S_{j}->{i} are both zero")
    return (fwd - bwd) / total


def circulator_params(alpha: float = PI / 2, theta1: float = 0.0, theta3: float = 0.0, *,
                      omega: float = 5.0, delta: float = 0.0, g0: float = 1.0,
                      gamma_e=(0.0, 0.0)) -> NodeParams:
    """Reflection-free node: ``phi_a = phi_b = pi/2``,
    ``theta2 - theta1 = -pi/2 - alpha``, ``theta4 - theta3 = -pi/2 + alpha``.

    No port reflects at any detuning; ``delta = -omega`` circulates
    counterclockwise and ``delta = +omega`` clockwise.
    """
    return unidirectional_params(alpha, theta1, theta3, omega=omega, g0=g0, delta=delta,
                                 gamma_e=gamma_e)


def circulator_fidelity(S, ideal: str = "cw") -> float:
    """``Tr[T T_id^T] / Tr[T_id T_id^T]`` with ``T`` the probability matrix.

    ``S`` may be a :class:`ScatteringMatrix` or a 4x4 probability matrix.
    """
    T = S.prob() if isinstance(S, ScatteringMatrix) else np.asarray(S, dtype=float)
    Tid = IDEAL[ideal]
    return float(np.trace(T @ Tid.T) / np.trace(Tid @ Tid.T))


def classify_mode(S, threshold: float = 0.9) -> str | None:
    """``"ccw"``, ``"cw"`` or ``None`` depending on which ideal circulator
    the scattering matches with fidelity at least ``threshold``."""
    best, best_f = None, -1.0
    for name in ("ccw", "cw"):
        f = circulator_fidelity(S, name)
        if f >= threshold and f > best_f:
            best, best_f = name, f
    return best
