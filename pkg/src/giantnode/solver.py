"""
Exact single-photon scattering for the giant-atom node.

For a photon entering at any port the stationary wavefunction has one
amplitude per guide segment and propagation direction. The unknowns are
ordered as::

    x = (s_{n->1}, s_{n->2}, s_{n->3}, s_{n->4},
         W_a^R, W_a^L, W_b^R, W_b^L, u_e1, u_e2)

``s_{n->1}`` lives on the left-moving wave left of x = 0 in the lower guide,
``s_{n->2}`` on the right-moving wave right of x = d_a, and likewise ``s_{n->3}``
and ``s_{n->4}`` in the upper guide. The incident wave (amplitude 1) occupies
the one outer segment that points into the node: right-moving left of 0 for
port 1 or 3, left-moving right of d_{a,b} for port 2 or 4. The coefficient
matrix is therefore the same for all four ports; only the source changes.

Eight rows encode the field jumps at the coupling points and two rows the
atomic amplitude equations. A field sampled at a delta coupling is the mean of
its left and right limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import PORTS, NodeParams, ParameterError, Port, ScatteringMatrix, wrap_phase

N_UNKNOWNS = 10
S1, S2, S3, S4, WAR, WAL, WBR, WBL, U1, U2 = range(N_UNKNOWNS)

#: one-norm condition number above which the system is treated as singular
COND_LIMIT = 1e12


class ResonanceSingularity(ArithmeticError):
    """The scattering system is singular (bound state or dark mode)."""

    def __init__(self, cond: float, message: str | None = None):
        self.cond = float(cond)
        super().__init__(message or f"resonance singularity: condition number {self.cond:.3e}")


class ClosedFormSingular(ArithmeticError):
    """The closed-form beta denominator vanishes; use the general solver."""


@dataclass(frozen=True)
class SolverSolution:
    port: Port
    row: np.ndarray
    w: np.ndarray
    u: np.ndarray
    beta: complex | None


def _coeff_matrix(p: NodeParams) -> np.ndarray:
    g = np.asarray(p.g)
    c1, c2, c3, c4 = g * np.exp(1j * np.asarray(p.theta))
    phi_a, phi_b = p.effective_phi()
    ea, eb = np.exp(1j * phi_a), np.exp(1j * phi_b)
    A = np.zeros((N_UNKNOWNS, N_UNKNOWNS), dtype=complex)

    # lower guide, right-movers: jumps at x = 0 and x = d_a
    A[0, WAR], A[0, U2] = -1j, c1
    A[1, S2], A[1, WAR], A[1, U1] = -1j * ea, 1j * ea, c2
    # lower guide, left-movers
    A[2, WAL], A[2, S1], A[2, U2] = 1j, -1j, c1
    A[3, WAL], A[3, U1] = -1j / ea, c2
    # upper guide, right-movers: jumps at x = 0 and x = d_b
    A[4, WBR], A[4, U1] = -1j, c3
    A[5, S4], A[5, WBR], A[5, U2] = -1j * eb, 1j * eb, c4
    # upper guide, left-movers
    A[6, WBL], A[6, S3], A[6, U1] = 1j, -1j, c3
    A[7, WBL], A[7, U2] = -1j / eb, c4

    if not g.any():
        # fully decoupled atom: it is never excited
        A[8, U1] = A[9, U2] = 1.0
        return A

    d1 = p.delta - p.level_shift[0] + 0.5j * p.gamma_e[0]
    d2 = p.delta - p.level_shift[1] + 0.5j * p.gamma_e[1]
    kappa = p.omega * np.exp(1j * p.alpha)
    # |e1>: driven by the upper guide at x = 0 and the lower guide at x = d_a
    A[8, U1] = d1
    A[8, U2] = -kappa
    for k in (WBR, S3, WBL):
        A[8, k] -= 0.5 * np.conj(c3)
    A[8, WAR] -= 0.5 * np.conj(c2) * ea
    A[8, S2] -= 0.5 * np.conj(c2) * ea
    A[8, WAL] -= 0.5 * np.conj(c2) / ea
    # |e2>: driven by the lower guide at x = 0 and the upper guide at x = d_b
    A[9, U2] = d2
    A[9, U1] = -np.conj(kappa)
    for k in (WAR, S1, WAL):
        A[9, k] -= 0.5 * np.conj(c1)
    A[9, WBR] -= 0.5 * np.conj(c4) * eb
    A[9, S4] -= 0.5 * np.conj(c4) * eb
    A[9, WBL] -= 0.5 * np.conj(c4) / eb
    return A


def _sources(p: NodeParams) -> np.ndarray:
    """Source vectors for the four incident ports, one per column."""
    g = np.asarray(p.g)
    c1, c2, c3, c4 = g * np.exp(1j * np.asarray(p.theta))
    phi_a, phi_b = p.effective_phi()
    ea, eb = np.exp(1j * phi_a), np.exp(1j * phi_b)
    B = np.zeros((N_UNKNOWNS, 4), dtype=complex)
    # port 1: right-mover entering the lower guide from the left
    B[0, 0] = -1j
    if g.any():
        B[9, 0] = 0.5 * np.conj(c1)
    # port 2: left-mover entering the lower guide from the right
    B[3, 1] = -1j / ea
    if g.any():
        B[8, 1] = 0.5 * np.conj(c2) / ea
    # port 3: right-mover entering the upper guide from the left
    B[4, 2] = -1j
    if g.any():
        B[8, 2] = 0.5 * np.conj(c3)
    # port 4: left-mover entering the upper guide from the right
    B[7, 3] = -1j / eb
    if g.any():
        B[9, 3] = 0.5 * np.conj(c4) / eb
    return B


def assemble_system(p: NodeParams, port: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient matrix and source vector for incidence at ``port``.

    Returns ``(A, b)`` with ``A @ x = b`` and ``x`` ordered as in the module
    docstring.
    """
    port = Port(port)
    return _coeff_matrix(p), _sources(p)[:, port - 1]


def _check_condition(A: np.ndarray) -> float:
    with np.errstate(all="ignore"):
        try:
            cond = float(np.abs(np.linalg.cond(A, 1)))
        except np.linalg.LinAlgError:
            cond = np.inf
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise ResonanceSingularity(cond)
    return cond


def _solve(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    _check_condition(A)
    try:
        return np.linalg.solve(A, B)
    except np.linalg.LinAlgError as exc:
        raise ResonanceSingularity(np.inf) from exc


def _solution(port: Port, x: np.ndarray) -> SolverSolution:
    u = x[U1:U2 + 1].copy()
    beta = complex(u[1] / u[0]) if u[0] != 0 else None
    return SolverSolution(port=port, row=x[S1:S4 + 1].copy(), w=x[WAR:WBL + 1].copy(), u=u, beta=beta)


def solve_port(p: NodeParams, port: int = 1) -> SolverSolution:
    """Scattering row, inter-point waves and atomic amplitudes for one port.

    Raises
    ------
    ResonanceSingularity
        If the system's one-norm condition number exceeds ``COND_LIMIT``.
    """
    port = Port(port)
    A, b = assemble_system(p, port)
    return _solution(port, _solve(A, b))


def solve_all(p: NodeParams) -> list[SolverSolution]:
    X = _solve(_coeff_matrix(p), _sources(p))
    return [_solution(port, X[:, port - 1]) for port in PORTS]


def scattering_matrix(p: NodeParams) -> ScatteringMatrix:
    """Full 4x4 amplitude matrix, row ``n-1`` holding ``s_{n->1..4}``."""
    X = _solve(_coeff_matrix(p), _sources(p))
    return ScatteringMatrix(X[S1:S4 + 1, :].T)


def scattering_matrices(params: Iterable[NodeParams]) -> np.ndarray:
    """Stacked amplitude matrices for many parameter points, shape (N, 4, 4).

    Singular points raise ``ResonanceSingularity`` like the scalar call.
    """
    params = list(params)
    if not params:
        return np.zeros((0, 4, 4), dtype=complex)
    A = np.stack([_coeff_matrix(p) for p in params])
    B = np.stack([_sources(p) for p in params])
    with np.errstate(all="ignore"):
        try:
            cond = np.abs(np.linalg.cond(A, 1))
        except np.linalg.LinAlgError:
            cond = np.array([np.inf])
    bad = ~np.isfinite(cond) | (cond > COND_LIMIT)
    if bad.any():
        worst = np.nan_to_num(cond[bad], nan=np.inf)
        raise ResonanceSingularity(float(worst.max()), f"resonance singularity at point {int(np.argmax(bad))}")
    X = np.linalg.solve(A, B)
    return np.transpose(X[:, S1:S4 + 1, :], (0, 2, 1))


# ---------------------------------------------------------------------------
# closed form for the symmetric node


def _require_symmetric(p: NodeParams, tol: float = 1e-12) -> tuple[float, float]:
    g0 = p.g[0]
    if max(abs(gi - g0) for gi in p.g) > tol:
        raise ParameterError("closed form needs equal couplings g1 = g2 = g3 = g4")
    t1, t2, t3, t4 = p.theta
    theta = wrap_phase(t2 - t1)
    phi_a, phi_b = p.effective_phi()

    def off(a, b):
        d = wrap_phase(a - b)
        return min(d, 2 * np.pi - d)

    if off(t2, t3) > tol or off(t1, t4) > tol:
        raise ParameterError("closed form needs theta2 = theta3 and theta1 = theta4")
    if off(phi_a, theta) > tol or off(phi_b, theta) > tol:
        raise ParameterError("closed form needs phi_a = phi_b = theta2 - theta1")
    if any(p.level_shift):
        raise ParameterError("closed form needs degenerate levels")
    return g0 * g0, theta


def beta(p: NodeParams) -> complex:
    """Ratio ``u_e2 / u_e1`` for the symmetric node (port-1 incidence)."""
    gamma0, theta = _require_symmetric(p)
    num, den = _beta_parts(p, gamma0, theta)
    if abs(den) < 1e-14 * max(1.0, abs(num)):
        raise ClosedFormSingular("closed-form singular; use general solver")
    return num / den


def _beta_parts(p: NodeParams, gamma0: float, theta: float) -> tuple[complex, complex]:
    g1, g2 = p.gamma_e
    ea = np.exp(1j * p.alpha)
    num = p.delta + 0.5j * g1 + p.omega / ea + 2j * gamma0 * (1 - np.exp(2j * theta))
    den = p.delta + 0.5j * g2 + p.omega * ea
    return complex(num), complex(den)


def closed_form_row1(p: NodeParams) -> np.ndarray:
    """``(s_{1->1}, s_{1->2}, s_{1->3}, s_{1->4})`` from the symmetric closed form."""
    gamma0, theta = _require_symmetric(p)
    b = beta(p)
    et = np.exp(1j * theta)
    den = p.delta + 0.5j * p.gamma_e[0] - b * p.omega * np.exp(1j * p.alpha) + 2j * gamma0 * (1 + b)
    if den == 0:
        raise ClosedFormSingular("closed-form singular; use general solver")
    k = -1j * gamma0 / den
    return np.array([
        k * (et * et + b),
        k * (1 + b) + 1,
        k * (1 + b) * et,
        k * (et + b / et),
    ])


def row1(p: NodeParams) -> np.ndarray:
    """Port-1 amplitudes, closed form when applicable, else the linear solver."""
    try:
        return closed_form_row1(p)
    except (ParameterError, ClosedFormSingular):
        return solve_port(p, 1).row


def mirrored(p: NodeParams) -> NodeParams:
    """Parameters of the spatially mirrored node.

    Reflecting x swaps the two coupling points on each guide; relabelling
    e1 <-> e2 restores the original layout, which swaps (g1, g2), (g3, g4),
    the two dissipation rates and conjugates the interatomic phase. Ports map
    1 <-> 2 and 3 <-> 4.
    """
    g, t = p.g, p.theta
    return p.with_(g=(g[1], g[0], g[3], g[2]), theta=(t[1], t[0], t[3], t[2]),
                   alpha=-p.alpha, gamma_e=p.gamma_e[::-1], level_shift=p.level_shift[::-1])


MIRROR_PORTS: Sequence[int] = (1, 0, 3, 2)
