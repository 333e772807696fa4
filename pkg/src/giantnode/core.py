"""
Shared domain types for the giant-atom node.

Units: the waveguide group velocity is 1, so a coupling point with strength
``g`` relaxes at ``Gamma = g**2``. Every energy and rate (detuning, interatomic
coupling, external dissipation) is expressed in the same unit, normally
``Gamma0 = g0**2`` with ``g0 = 1``.

Geometry
--------
The lower guide (W_a) carries coupling points at x = 0 (strength g1, level e2)
and x = d_a (g2, level e1). The upper guide (W_b) carries x = 0 (g3, e1) and
x = d_b (g4, e2). Ports::

    3 (upper-left)  ====[g3]=======[g4]====  4 (upper-right)
    1 (lower-left)  ====[g1]=======[g2]====  2 (lower-right)

Scattering amplitudes are referenced to plane waves ``exp(+-ikx)`` anchored at
x = 0 on both guides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from enum import IntEnum

import numpy as np

TWO_PI = 2.0 * math.pi

#: default absolute tolerance for complex equality checks
DEFAULT_TOL = 1e-10


class ParameterError(ValueError):
    """Raised when a physical parameter is out of its allowed domain."""


class Port(IntEnum):
    LOWER_LEFT = 1
    LOWER_RIGHT = 2
    UPPER_LEFT = 3
    UPPER_RIGHT = 4


PORTS = (Port.LOWER_LEFT, Port.LOWER_RIGHT, Port.UPPER_LEFT, Port.UPPER_RIGHT)


def wrap_phase(x: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    y = math.fmod(float(x), TWO_PI)
    if y < 0.0:
        y += TWO_PI
    # fmod of a value a hair below a multiple of 2*pi can round up to 2*pi
    if y >= TWO_PI:
        y = 0.0
    return y


def _tuple(values, n: int, name: str) -> tuple[float, ...]:
    vals = tuple(float(v) for v in np.atleast_1d(np.asarray(values, dtype=float)))
    if len(vals) == 1 and n > 1:
        vals = vals * n
    if len(vals) != n:
        raise ParameterError(f"{name} needs {n} values, got {len(vals)}")
    return vals


@dataclass(frozen=True)
class NodeParams:
    """Physical parameters of one giant-atom node.

    Attributes
    ----------
    g : 4 coupling strengths (g1, g2, g3, g4); ``Gamma_i = g_i**2``.
    theta : 4 coupling phases in radians.
    omega : interatomic coupling strength.
    alpha : interatomic coupling phase.
    gamma_e : external dissipation rates of |e1>, |e2>.
    phi : resonant propagation phases (phi_a, phi_b) between coupling points.
    delta : photon detuning from the (degenerate) atomic transition.
    tau : propagation delays; the effective phase is ``phi + tau * delta``.
        Zero (the default) is the Markovian regime.
    level_shift : per-level frequency offsets of e1, e2 from the common
        transition frequency; zero for degenerate levels.

    Construction wraps every phase into [0, 2*pi) and rejects negative
    strengths or rates. Instances are immutable.
    """

    g: tuple[float, float, float, float] = (1.0, 1.0, 1.0, 1.0)
    theta: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    omega: float = 0.0
    alpha: float = 0.0
    gamma_e: tuple[float, float] = (0.0, 0.0)
    phi: tuple[float, float] = (0.0, 0.0)
    delta: float = 0.0
    tau: tuple[float, float] = (0.0, 0.0)
    level_shift: tuple[float, float] = field(default=(0.0, 0.0))

    def __post_init__(self):
        g = _tuple(self.g, 4, "g")
        for i, gi in enumerate(g, start=1):
            if not gi >= 0.0:
                raise ParameterError(f"negative coupling strength g{i}")
        gamma = _tuple(self.gamma_e, 2, "gamma_e")
        for i, gi in enumerate(gamma, start=1):
            if not gi >= 0.0:
                raise ParameterError(f"negative dissipation rate gamma_e{i}")
        omega = float(self.omega)
        if not omega >= 0.0:
            raise ParameterError("negative interatomic coupling strength omega")
        tau = _tuple(self.tau, 2, "tau")
        for i, t in enumerate(tau):
            if not t >= 0.0:
                raise ParameterError(f"negative retardation time tau_{'ab'[i]}")
        set_ = object.__setattr__
        set_(self, "g", g)
        set_(self, "gamma_e", gamma)
        set_(self, "omega", omega)
        set_(self, "tau", tau)
        set_(self, "theta", tuple(wrap_phase(t) for t in _tuple(self.theta, 4, "theta")))
        set_(self, "phi", tuple(wrap_phase(t) for t in _tuple(self.phi, 2, "phi")))
        set_(self, "alpha", wrap_phase(self.alpha))
        set_(self, "delta", float(self.delta))
        set_(self, "level_shift", _tuple(self.level_shift, 2, "level_shift"))

    @classmethod
    def symmetric(cls, theta, omega=0.0, alpha=0.0, delta=0.0, gamma_e=(0.0, 0.0),
                  g0=1.0, theta1=0.0) -> "NodeParams":
        """Equal couplings with theta2 = theta3 = theta1 + theta, theta4 = theta1
        and phi_a = phi_b = theta."""
        t2 = theta1 + theta
        return cls(g=(g0,) * 4, theta=(theta1, t2, t2, theta1), omega=omega,
                   alpha=alpha, gamma_e=gamma_e, phi=(theta, theta), delta=delta)

    def with_(self, **changes) -> "NodeParams":
        return replace(self, **changes)

    def effective_phi(self) -> tuple[float, float]:
        return (self.phi[0] + self.tau[0] * self.delta,
                self.phi[1] + self.tau[1] * self.delta)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def normalize_params(raw: NodeParams) -> NodeParams:
    """Return ``raw`` with phases wrapped and strengths validated.

    ``NodeParams`` already normalizes on construction, so this re-runs that
    step and is idempotent.
    """
    return NodeParams(**raw.as_dict())


@dataclass(frozen=True)
class ScatteringMatrix:
    """Single-photon scattering amplitudes, ``s[n-1, m-1] = s_{n->m}``.

    Rows are incident ports and columns outgoing ports, the same layout as the
    matrix printed for the four-port model.
    """

    s: np.ndarray

    def __post_init__(self):
        s = np.array(self.s, dtype=complex)
        if s.shape != (4, 4):
            raise ValueError(f"scattering matrix must be 4x4, got {s.shape}")
        s.flags.writeable = False
        object.__setattr__(self, "s", s)

    def prob(self) -> np.ndarray:
        """Probabilities ``S_{n->m} = |s_{n->m}|**2`` in the same layout."""
        return np.abs(self.s) ** 2

    def amp(self, n: int, m: int) -> complex:
        return complex(self.s[n - 1, m - 1])

    def p(self, n: int, m: int) -> float:
        return float(abs(self.s[n - 1, m - 1]) ** 2)

    def unitarity_error(self) -> float:
        """Induced infinity-norm of ``S^dagger S - I``."""
        d = self.s.conj().T @ self.s - np.eye(4)
        return float(np.abs(d).sum(axis=1).max())

    def is_unitary(self, tol: float = DEFAULT_TOL) -> bool:
        return self.unitarity_error() < tol

    def is_subunitary(self, tol: float = 1e-12) -> bool:
        return bool(np.all(self.prob().sum(axis=1) <= 1.0 + tol))
