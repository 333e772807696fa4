"""
Superconducting-circuit design values compiled into node parameters.

Each of the four waveguide coupling points and the interatomic link is an rf
loop whose mutual inductance is tuned by an external flux
``Phi(t) = Phi0_static + dPhi cos(Delta_mod t + phase)``. The part oscillating
at ``Delta_mod`` becomes, after the rotating-wave approximation, a coupling
``g = -M1 I_q I_k / 2`` carrying the modulation phase.

Units: inductances in henry, energies in joule, capacitances in farad, fluxes
in flux quanta, phases in radians, ``mod_freq`` in rad/s. The waveguide mode
current ``I_k`` is an effective scalar that already absorbs the waveguide
inductance and group velocity, chosen so that ``g / hbar`` comes out in
``sqrt(rad/s)``; the decay rate of a point is then ``(g / hbar)**2``.

Coupling points 2 and 3 belong to qubit 1, points 1 and 4 to qubit 2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, fields, replace

import numpy as np
from scipy.constants import e as E_CHARGE, hbar, physical_constants
from scipy.special import j1

from .core import NodeParams

PHI0 = physical_constants["mag. flux quantum"][0]
TWO_PI = 2.0 * math.pi

#: waveguide coupling point -> index of the qubit it couples (0 = qubit 1)
POINT_QUBIT = (1, 0, 0, 1)

L0_RATIO_LIMIT = 0.1
TAYLOR_LIMIT = 0.01
SIN_ZERO = 1e-12


class ConfigError(ValueError):
    """Malformed hardware configuration."""


class HardwareDomainError(ValueError):
    """Configuration is well formed but outside the supported physics."""


class HysteresisError(HardwareDomainError):
    pass


class CouplingDeadPoint(HardwareDomainError):
    pass


class ResonanceError(HardwareDomainError):
    pass


class HardwareWarning(UserWarning):
    pass


def _vec(x, n, name):
    if np.ndim(x) == 0:
        x = (x,) * n
    t = tuple(float(v) for v in x)
    if len(t) != n:
        raise ConfigError(f"{name} needs {n} entries, got {len(t)}")
    if not all(math.isfinite(v) for v in t):
        raise ConfigError(f"{name} must be finite")
    return t


@dataclass(frozen=True)
class HardwareConfig:
    L0: float = 0.1e-9
    L_T: tuple = (2.0e-9,) * 4
    L_T_g: float = 2.0e-9
    beta_loop: tuple | None = None
    flux_static: tuple = (-0.25,) * 4
    flux_static_g: float = -0.25
    flux_mod_amp: tuple = (1e-3,) * 4
    flux_mod_amp_g: float = 1e-3
    mod_phase: tuple = (0.0,) * 4
    mod_phase_g: float = 0.0
    mod_freq: float = TWO_PI * 0.5e9
    E_J: tuple = (1.3e-23,) * 2
    C: tuple = (80e-15,) * 2
    E_C: tuple | None = None
    I_q: tuple | None = None
    I_k: float = 1e-10
    prop_phase: tuple = (math.pi / 2, math.pi / 2)
    gamma_e: tuple = (0.0, 0.0)

    def __post_init__(self):
        set_ = lambda k, v: object.__setattr__(self, k, v)  # noqa: E731
        for name, n in (("L_T", 4), ("flux_static", 4), ("flux_mod_amp", 4), ("mod_phase", 4),
                        ("E_J", 2), ("C", 2), ("prop_phase", 2), ("gamma_e", 2)):
            set_(name, _vec(getattr(self, name), n, name))
        for name in ("L0", "L_T_g", "flux_static_g", "flux_mod_amp_g", "mod_phase_g", "mod_freq", "I_k"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ConfigError(f"{name} must be finite")
            set_(name, v)
        if self.beta_loop is None:
            set_("beta_loop", tuple(2.0 * self.L0 / lt for lt in self.L_T))
        else:
            set_("beta_loop", _vec(self.beta_loop, 4, "beta_loop"))
        if self.E_C is not None:
            set_("E_C", _vec(self.E_C, 2, "E_C"))
        if self.I_q is not None:
            set_("I_q", _vec(self.I_q, 2, "I_q"))
        positive = [("L0", (self.L0,)), ("L_T", self.L_T), ("L_T_g", (self.L_T_g,)),
                    ("E_J", self.E_J), ("C", self.C)]
        for name, vals in positive:
            if any(v <= 0 for v in vals):
                raise ConfigError(f"{name} must be positive")
        for name, vals in (("flux_mod_amp", self.flux_mod_amp), ("flux_mod_amp_g", (self.flux_mod_amp_g,)),
                           ("gamma_e", self.gamma_e), ("I_k", (self.I_k,)), ("beta_loop", self.beta_loop),
                           ("mod_freq", (self.mod_freq,))):
            if any(v < 0 for v in vals):
                raise ConfigError(f"{name} must be non-negative")

    @classmethod
    def from_dict(cls, d: dict) -> "HardwareConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(d) - known)
        if unknown:
            raise ConfigError(f"unknown hardware field(s): {', '.join(unknown)}")
        try:
            return cls(**d)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(str(exc)) from exc

    def as_dict(self) -> dict:
        return {f.name: (list(v) if isinstance(v := getattr(self, f.name), tuple) else v)
                for f in fields(self)}


def phase_from_flux(flux_ext: float, beta_loop: float, tol: float = 1e-13) -> float:
    """Solve ``phi + beta sin(phi) = 2 pi flux_ext`` for the loop phase.

    ``flux_ext`` is in flux quanta. Newton's method started at
    ``2 pi flux_ext``, kept inside the bracket ``[x - beta, x + beta]`` that
    must contain the root; the solution is unique for ``beta < 1``.

    Raises
    ------
    HysteresisError
        For ``beta_loop >= 1``, where the loop is multistable.
    """
    if beta_loop < 0:
        raise ValueError("beta_loop must be non-negative")
    if beta_loop >= 1.0:
        raise HysteresisError(f"hysteretic regime unsupported (beta_loop = {beta_loop:.6g} >= 1)")
    x = TWO_PI * flux_ext
    if beta_loop == 0.0:
        return x
    lo, hi = x - beta_loop, x + beta_loop
    phi = x
    for _ in range(100):
        f = phi + beta_loop * math.sin(phi) - x
        if abs(f) <= tol * max(1.0, abs(x)):
            # one more Newton step takes a converged iterate down to rounding level
            polish = phi - f / (1.0 + beta_loop * math.cos(phi))
            g = polish + beta_loop * math.sin(polish) - x
            return polish if abs(g) < abs(f) else phi
        if f > 0:
            hi = phi
        else:
            lo = phi
        step = phi - f / (1.0 + beta_loop * math.cos(phi))
        phi = step if lo < step < hi else 0.5 * (lo + hi)
    return phi


def loop_mutual_inductance(flux_ext, L0: float, L_T: float, beta_loop: float) -> float:
    """``M = (L0^2 / L_T) cos(phi) / (1 + beta cos(phi))`` with the loop phase solved."""
    phi = phase_from_flux(flux_ext, beta_loop)
    c = math.cos(phi)
    return L0 * L0 / L_T * c / (1.0 + beta_loop * c)


def mutual_inductance_t(t, L0: float, L_T: float, flux_static: float, flux_mod_amp: float,
                        mod_freq: float, phase: float):
    """Small-``L0`` mutual inductance under modulation, no Taylor expansion."""
    t = np.asarray(t, dtype=float)
    return L0 * L0 / L_T * np.cos(TWO_PI * (flux_static + flux_mod_amp * np.cos(mod_freq * t + phase)))


def first_harmonic(L0: float, L_T: float, flux_static: float, flux_mod_amp: float, exact: bool = False) -> float:
    """Amplitude ``M1`` of the ``-M1 cos(Delta_mod t + phase)`` term.

    First order: ``(L0^2/L_T) sin(2 pi Phi0_static) (2 pi dPhi)``. With
    ``exact=True`` the full Fourier coefficient
    ``(L0^2/L_T) sin(2 pi Phi0_static) 2 J1(2 pi dPhi)``.
    """
    a, b = TWO_PI * flux_static, TWO_PI * flux_mod_amp
    scale = L0 * L0 / L_T * math.sin(a)
    return scale * (2.0 * float(j1(b)) if exact else b)


@dataclass(frozen=True)
class MutualInductances:
    M0: tuple
    M1: tuple
    M0_g: float
    M1_g: float


def mutual_inductances(cfg: HardwareConfig) -> MutualInductances:
    """Static and first-harmonic mutual inductances of all five loops.

    Emits :class:`HardwareWarning` when ``L0 / min(L_T)`` exceeds 0.1 or when
    a first-order amplitude is off from the exact harmonic by more than 1%.
    """
    lts = cfg.L_T + (cfg.L_T_g,)
    if cfg.L0 / min(lts) > L0_RATIO_LIMIT:
        warnings.warn(f"L0/L_T = {cfg.L0 / min(lts):.3g} > {L0_RATIO_LIMIT}: small-L0 mutual "
                      "inductance is inaccurate", HardwareWarning, stacklevel=2)
    stat = cfg.flux_static + (cfg.flux_static_g,)
    amp = cfg.flux_mod_amp + (cfg.flux_mod_amp_g,)
    m0, m1 = [], []
    for k, (lt, f0, df) in enumerate(zip(lts, stat, amp)):
        m0.append(cfg.L0 * cfg.L0 / lt * math.cos(TWO_PI * f0))
        approx = first_harmonic(cfg.L0, lt, f0, df)
        m1.append(approx)
        exact = first_harmonic(cfg.L0, lt, f0, df, exact=True)
        if exact != 0.0 and abs(approx - exact) > TAYLOR_LIMIT * abs(exact):
            name = "g" if k == 4 else str(k + 1)
            warnings.warn(f"loop {name}: first-order M1 differs from the exact harmonic by "
                          f"{abs(approx / exact - 1):.2%}", HardwareWarning, stacklevel=2)
    return MutualInductances(tuple(m0[:4]), tuple(m1[:4]), m0[4], m1[4])


@dataclass(frozen=True)
class QubitSpec:
    L_Q: tuple
    omega_q: tuple
    E_C: tuple
    I_q: tuple


def qubit_spec(cfg: HardwareConfig, mi: MutualInductances | None = None) -> QubitSpec:
    """Total inductance, two-level frequency and current scale of both qubits.

    ``L_Q = L_s + L_a`` with the junction inductance
    ``L_s = (Phi0 / 2 pi)^2 / E_J`` and the loop loading
    ``L_a1 = 2 L0 + M_g + M2 + M3``, ``L_a2 = 2 L0 + M_g + M1 + M4`` at the
    static bias; ``omega_q = 1/sqrt(L_Q C) - E_C/hbar``.
    """
    mi = mutual_inductances(cfg) if mi is None else mi
    m = mi.M0
    l_a = (2 * cfg.L0 + mi.M0_g + m[1] + m[2], 2 * cfg.L0 + mi.M0_g + m[0] + m[3])
    e_c = cfg.E_C if cfg.E_C is not None else tuple(E_CHARGE ** 2 / (2 * c) for c in cfg.C)
    l_q, w_q = [], []
    for j in range(2):
        lq = (PHI0 / TWO_PI) ** 2 / cfg.E_J[j] + l_a[j]
        if lq <= 0:
            raise ResonanceError(f"qubit {j + 1}: non-positive total inductance {lq:.3g} H")
        w = 1.0 / math.sqrt(lq * cfg.C[j]) - e_c[j] / hbar
        if w <= 0:
            raise ResonanceError(f"qubit {j + 1}: charging energy exceeds the plasma frequency")
        l_q.append(lq)
        w_q.append(w)
    if cfg.I_q is not None:
        i_q = cfg.I_q
    else:
        i_q = tuple(math.sqrt(hbar * w / (2 * lq)) for w, lq in zip(w_q, l_q))
    return QubitSpec(tuple(l_q), tuple(w_q), e_c, i_q)


def _fold(value: float, phase: float) -> tuple[float, float]:
    return (abs(value), phase + math.pi) if value < 0 else (value, phase)


def compile_node(cfg: HardwareConfig, delta: float = 0.0) -> NodeParams:
    """Node parameters realised by a hardware configuration.

    Couplings are normalised to the strongest one (``Gamma0 = (g_max/hbar)^2``)
    and the interatomic strength is expressed in ``Gamma0``. Negative
    couplings keep their magnitude and gain ``pi`` in phase. Unequal qubit
    frequencies appear as level shifts about their mean; ``delta`` is the
    photon detuning from that mean, in ``Gamma0``.

    Raises
    ------
    HysteresisError
        If any loop has ``beta_loop >= 1``.
    CouplingDeadPoint
        If a modulated loop sits at a static bias where ``M1`` vanishes.
    ResonanceError
        If the modulation frequency cannot bridge qubit and waveguide.
    """
    for i, (f0, b) in enumerate(zip(cfg.flux_static, cfg.beta_loop)):
        try:
            phase_from_flux(f0, b)
        except HysteresisError as exc:
            raise HysteresisError(f"loop {i + 1}: {exc}") from None
    mi = mutual_inductances(cfg)
    q = qubit_spec(cfg, mi)
    for j, w in enumerate(q.omega_q):
        if cfg.mod_freq >= w:
            raise ResonanceError(f"qubit {j + 1}: modulation frequency {cfg.mod_freq:.6g} rad/s "
                                 f"leaves no waveguide mode below omega_q = {w:.6g} rad/s")

    loops = [(str(i + 1), cfg.flux_static[i], cfg.flux_mod_amp[i]) for i in range(4)]
    loops.append(("g", cfg.flux_static_g, cfg.flux_mod_amp_g))
    for name, f0, df in loops:
        if df > 0 and abs(math.sin(TWO_PI * f0)) < SIN_ZERO:
            raise CouplingDeadPoint(f"coupling dead point in loop {name}: static flux {f0:.6g} "
                                    "Phi0 gives zero first-harmonic mutual inductance")

    g_raw = [-mi.M1[i] * q.I_q[POINT_QUBIT[i]] * cfg.I_k / 2.0 for i in range(4)]
    omega_raw = -mi.M1_g * q.I_q[0] * q.I_q[1] / 2.0
    folded = [_fold(g, th) for g, th in zip(g_raw, cfg.mod_phase)]
    g_abs = [f[0] for f in folded]
    g_max = max(g_abs)
    if g_max == 0.0:
        if omega_raw != 0.0:
            raise ConfigError("interatomic loop is modulated but no waveguide loop is; "
                              "there is no rate unit to express Omega in")
        return NodeParams(g=(0.0,) * 4, theta=tuple(cfg.mod_phase), omega=0.0, alpha=cfg.mod_phase_g,
                          gamma_e=cfg.gamma_e, phi=cfg.prop_phase, delta=delta)
    gamma0 = (g_max / hbar) ** 2
    omega, alpha = _fold(omega_raw, cfg.mod_phase_g)
    w_mean = 0.5 * (q.omega_q[0] + q.omega_q[1])
    shift = tuple((w - w_mean) / gamma0 for w in q.omega_q)
    return NodeParams(
        g=tuple(g / g_max for g in g_abs),
        theta=tuple(f[1] for f in folded),
        omega=omega / hbar / gamma0,
        alpha=alpha,
        gamma_e=cfg.gamma_e,
        phi=cfg.prop_phase,
        delta=delta,
        level_shift=shift,
    )


def synthesize_config(target: NodeParams, base: HardwareConfig | None = None,
                      flux_mod_ref: float = 1e-3) -> HardwareConfig:
    """Hardware configuration whose compiled node reproduces ``target``.

    Every loop is biased at ``-Phi0/4``, where the static mutual inductance
    vanishes (so both qubits stay degenerate) and ``M1 < 0``. The strongest
    waveguide loop is modulated with ``flux_mod_ref``; ``I_k`` is chosen so
    that an interatomic modulation of ``flux_mod_ref`` gives ``Omega = Gamma0``.
    ``target`` must have its largest coupling equal to 1, no detuning and
    degenerate levels.
    """
    base = HardwareConfig() if base is None else base
    if not math.isclose(max(target.g), 1.0, rel_tol=0, abs_tol=1e-15):
        raise ValueError("target couplings must be normalised to a largest value of 1")
    if any(target.level_shift):
        raise ValueError("synthesised devices have degenerate qubits; level_shift must be zero")
    cfg = replace(base, flux_static=(-0.25,) * 4, flux_static_g=-0.25, E_C=base.E_C,
                  flux_mod_amp=(0.0,) * 4, flux_mod_amp_g=0.0)
    q = qubit_spec(cfg)
    if q.omega_q[0] != q.omega_q[1]:
        raise ValueError("base qubits must be identical to synthesise a degenerate node")
    per_flux = [cfg.L0 ** 2 / cfg.L_T[i] * TWO_PI * q.I_q[POINT_QUBIT[i]] / 2.0 for i in range(4)]
    i_max = int(np.argmax(target.g))
    amps = [flux_mod_ref * target.g[i] * per_flux[i_max] / per_flux[i] for i in range(4)]
    amps[i_max] = flux_mod_ref
    # g_max/hbar = per_flux * dPhi * I_k / hbar; pick I_k so Gamma0 equals Omega_raw/hbar at dPhi_g = ref
    omega_ref = cfg.L0 ** 2 / cfg.L_T_g * TWO_PI * flux_mod_ref * q.I_q[0] * q.I_q[1] / 2.0 / hbar
    i_k = math.sqrt(omega_ref) * hbar / (per_flux[i_max] * flux_mod_ref)
    return replace(cfg, flux_mod_amp=tuple(amps), flux_mod_amp_g=flux_mod_ref * target.omega,
                   mod_phase=tuple(target.theta), mod_phase_g=target.alpha, I_k=i_k,
                   prop_phase=tuple(target.phi), gamma_e=tuple(target.gamma_e))
