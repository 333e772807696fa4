"""
Path-encoded photonic gates built from unidirectional nodes.

The photon qubit is which guide carries a right-moving photon. Basis order is
``(|up>, |down>)``: index 0 is the upper guide (in through port 3, out through
port 4), index 1 the lower guide (in through port 1, out through port 2). A
gate matrix is ``u[out, in]``, so::

    u = [[s_{3->4}, s_{1->4}],
         [s_{3->2}, s_{1->2}]]

Controlled gates act on ``aux (x) path`` with the auxiliary qubit as the most
significant index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import NodeParams
from .routing import unidirectional_params
from .solver import scattering_matrix

PI = math.pi

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
CNOT = np.block([[I2, np.zeros((2, 2))], [np.zeros((2, 2)), SIGMA_X]]).astype(complex)

#: seed for the Haar-random part of the default fidelity state set
DEFAULT_SEED = 20240611


class PhaseMatchingError(ValueError):
    """Node parameters are not on the unidirectional gate manifold."""

    def __init__(self, residual: float, detail: str):
        self.residual = float(residual)
        super().__init__(f"{detail} (residual {self.residual:.3e})")


@dataclass(frozen=True)
class PathGate:
    """2x2 operator on the path qubit, basis ``(|up>, |down>)``.

    ``delta`` and ``phi`` are set when the gate is the ideal node unitary
    ``exp(-i delta) [[cos delta, i e^{i phi} sin delta], [i e^{-i phi} sin delta, cos delta]]``.
    Gates read off the solver away from the ideal point may be non-unitary.
    """

    u: np.ndarray
    delta: float | None = None
    phi: float | None = None

    def __post_init__(self):
        u = np.array(self.u, dtype=complex)
        if u.shape != (2, 2):
            raise ValueError(f"path gate must be 2x2, got {u.shape}")
        u.flags.writeable = False
        object.__setattr__(self, "u", u)

    @classmethod
    def from_angles(cls, delta: float, phi: float) -> "PathGate":
        c, s = math.cos(delta), math.sin(delta)
        u = np.exp(-1j * delta) * np.array([
            [c, 1j * np.exp(1j * phi) * s],
            [1j * np.exp(-1j * phi) * s, c],
        ])
        return cls(u, delta, phi)

    @property
    def dagger(self) -> "PathGate":
        return PathGate(self.u.conj().T)

    def unitarity_error(self) -> float:
        return float(np.abs(self.u.conj().T @ self.u - I2).max())

    def is_unitary(self, tol: float = 1e-10) -> bool:
        return self.unitarity_error() < tol


def _circ_dist(x: float) -> float:
    return abs(math.remainder(x, 2 * PI))


def gate_residual(p: NodeParams) -> float:
    """Largest deviation of ``p`` from the ideal gate manifold.

    The manifold is equal couplings, ``phi_a = phi_b = pi/2``,
    ``theta2 - theta1 = -pi/2 - alpha``, ``theta4 - theta3 = -pi/2 + alpha``,
    zero detuning, no dissipation and degenerate levels. Phases contribute in
    radians, everything else in rate units.
    """
    t1, t2, t3, t4 = p.theta
    g0 = p.g[0]
    return max(
        max(abs(gi - g0) for gi in p.g),
        _circ_dist(p.phi[0] - PI / 2),
        _circ_dist(p.phi[1] - PI / 2),
        _circ_dist(t2 - t1 + PI / 2 + p.alpha),
        _circ_dist(t4 - t3 + PI / 2 - p.alpha),
        abs(p.delta),
        max(p.gamma_e),
        max(abs(x) for x in p.level_shift),
    )


def gate_from_node(p: NodeParams, tol: float = 1e-9) -> PathGate:
    """Ideal path-qubit unitary of a phase-matched node at zero detuning.

    Evaluates the closed-form amplitudes with ``Gamma12 = g1 g2``:
    ``s12 = s34 = Omega / (2i Gamma12 + Omega)`` and
    ``s14 = 2i Gamma12 / (2i Gamma12 + Omega) e^{i phi}``,
    ``s32 = 2i Gamma12 / (2i Gamma12 + Omega) e^{-i phi}``,
    ``phi = alpha - theta1 + theta3``.

    Raises
    ------
    PhaseMatchingError
        When :func:`gate_residual` exceeds ``tol``.
    """
    r = gate_residual(p)
    if r > tol:
        raise PhaseMatchingError(r, "node is not on the unidirectional gate manifold")
    gamma12 = p.g[0] * p.g[1]
    if gamma12 == 0.0:
        raise PhaseMatchingError(0.0, "decoupled node has no gate action")
    phi = p.alpha - p.theta[0] + p.theta[2]
    den = 2j * gamma12 + p.omega
    s12 = p.omega / den
    s14 = 2j * gamma12 / den * np.exp(1j * phi)
    s32 = 2j * gamma12 / den * np.exp(-1j * phi)
    u = np.array([[s12, s14], [s32, s12]])
    return PathGate(u, math.atan2(2 * gamma12, p.omega), phi)


def gate_attempt(p: NodeParams) -> PathGate:
    """Right-moving 2x2 block of the solver's scattering matrix, unnormalised.

    Valid at any detuning or dissipation; probability reflected or absorbed
    shows up as non-unitarity.
    """
    s = scattering_matrix(p).s
    return PathGate(np.array([[s[2, 3], s[0, 3]], [s[2, 1], s[0, 1]]]))


def node_for_gate(delta: float, phi: float, g0: float = 1.0, theta1: float = 0.0,
                  theta3: float = 0.0) -> NodeParams:
    """Phase-matched node realising ``U(delta, phi)`` (``0 < delta <= pi/2``)."""
    if not 0.0 < delta <= PI / 2 + 1e-15:
        raise ValueError("delta must lie in (0, pi/2]; delta = 0 needs infinite Omega")
    gamma12 = g0 * g0
    omega = 0.0 if abs(delta - PI / 2) < 1e-15 else 2 * gamma12 / math.tan(delta)
    alpha = phi + theta1 - theta3
    return unidirectional_params(alpha, theta1, theta3, omega=omega, g0=g0)


def compose(gates: Sequence[PathGate]) -> PathGate:
    """Cascade of nodes listed in the order the photon meets them.

    Returns ``U_n ... U_2 U_1``.
    """
    if not gates:
        raise ValueError("compose needs at least one gate")
    u = I2
    for gate in gates:
        u = gate.u @ u
    return PathGate(u)


def _branch_gate(omega: float, alpha: float, theta1: float, theta3: float,
                 gamma_e: float, delta: float) -> np.ndarray:
    phi = alpha - theta1 + theta3
    if math.isinf(omega):
        return PathGate.from_angles(0.0, phi).u
    p = unidirectional_params(alpha, theta1, theta3, omega=omega, delta=delta,
                              gamma_e=(gamma_e, gamma_e))
    if gamma_e == 0.0 and delta == 0.0:
        return gate_from_node(p).u
    return gate_attempt(p).u


def controlled_gate(omega_on: float = math.inf, omega_off: float = 0.0, *, alpha: float = 0.0,
                    theta1: float = 0.0, theta3: float = 0.0, gamma_e: float = 0.0,
                    delta: float = 0.0) -> np.ndarray:
    """Auxiliary-qubit-controlled path gate, 4x4 on ``aux (x) path``.

    The auxiliary qubit sets the interatomic strength: ``omega_on`` when it is
    |0> and ``omega_off`` when it is |1>. With ``omega_off = 0``,
    ``omega_on = inf`` and ``alpha - theta1 + theta3 = 0`` this is an exact
    CNOT. Dissipation or detuning switch to solver-derived (non-unitary)
    blocks.
    """
    if omega_on < 0 or omega_off < 0:
        raise ValueError("interatomic strengths must be non-negative")
    u0 = _branch_gate(omega_on, alpha, theta1, theta3, gamma_e, delta)
    u1 = _branch_gate(omega_off, alpha, theta1, theta3, gamma_e, delta)
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = u0
    out[2:, 2:] = u1
    return out


# ---------------------------------------------------------------------------
# fidelity


def cardinal_states(d: int = 2) -> np.ndarray:
    """Basis states plus all pairwise ``(|i> + c|j>)/sqrt2``, ``c in {1, -1, i, -i}``.

    For ``d = 2`` these are the six Pauli eigenstates.
    """
    states = [np.eye(d, dtype=complex)[k] for k in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            for c in (1, -1, 1j, -1j):
                v = np.zeros(d, dtype=complex)
                v[i], v[j] = 1, c
                states.append(v / math.sqrt(2))
    return np.array(states)


def haar_states(n: int, d: int = 2, seed: int | None = DEFAULT_SEED) -> np.ndarray:
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def default_states(d: int = 2, n_haar: int = 100, seed: int | None = DEFAULT_SEED) -> np.ndarray:
    return np.concatenate([cardinal_states(d), haar_states(n_haar, d, seed)])


def _as_matrix(op) -> np.ndarray:
    return np.asarray(op.u if isinstance(op, PathGate) else op, dtype=complex)


def gate_fidelity(actual, ideal, states=None) -> float:
    """Mean of ``|<psi| V^dagger U |psi>|^2`` over a state set.

    ``states`` defaults to the cardinal states plus 100 seeded Haar-random
    states of the right dimension.
    """
    U, V = _as_matrix(actual), _as_matrix(ideal)
    if U.shape != V.shape or U.shape[0] != U.shape[1]:
        raise ValueError(f"dimension mismatch: {U.shape} vs {V.shape}")
    d = U.shape[0]
    psi = default_states(d) if states is None else np.atleast_2d(np.asarray(states, dtype=complex))
    if psi.shape[1] != d:
        raise ValueError(f"dimension mismatch: states of dimension {psi.shape[1]} for a {d}x{d} gate")
    M = V.conj().T @ U
    amp = np.einsum("ni,ij,nj->n", psi.conj(), M, psi)
    return float(np.mean(np.abs(amp) ** 2))


def average_gate_fidelity(actual, ideal) -> float:
    """Haar average of ``|<psi|V^dagger U|psi>|^2`` in closed form.

    ``(Tr(M M^dagger) + |Tr M|^2) / (d (d + 1))`` with ``M = V^dagger U``; for
    unitary ``U`` this is ``(|Tr M|^2 + d) / (d (d + 1))``.
    """
    U, V = _as_matrix(actual), _as_matrix(ideal)
    if U.shape != V.shape:
        raise ValueError(f"dimension mismatch: {U.shape} vs {V.shape}")
    d = U.shape[0]
    M = V.conj().T @ U
    return float((np.trace(M @ M.conj().T).real + abs(np.trace(M)) ** 2) / (d * (d + 1)))


def sigma_x_attempt(d_omega: float = 0.0, d_alpha: float = 0.0, gamma_e: float = 0.0) -> PathGate:
    """Solver-derived sigma_x node with strength and phase mismatches.

    The phases stay at the ideal ``alpha = 0`` design while the device runs at
    ``Omega = d_omega`` and ``alpha = d_alpha``. A negative strength is the
    same coupling with its phase advanced by pi.
    """
    omega, alpha = abs(d_omega), d_alpha + (PI if d_omega < 0 else 0.0)
    p = unidirectional_params(0.0, 0.0, 0.0, omega=0.0)
    return gate_attempt(p.with_(omega=omega, alpha=alpha, gamma_e=(gamma_e, gamma_e)))
