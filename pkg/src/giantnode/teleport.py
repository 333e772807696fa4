"""
State transfer between two giant-atom nodes with a path-encoded photon.

Register layout: ``node1 (x) photon (x) nodeN``, flat index
``4 * q1 + 2 * path + qN``. The photon path uses the gate basis
``(|up>, |down>)`` (index 0 = up) and starts in ``|down>``.

Protocol:

1. node N is prepared in ``|+>`` (Hadamard on ``|0>``); node 1 holds the input;
2. controlled path gate node 1 -> photon, then node N -> photon; with ideal
   gates the photon ends in ``|up>`` exactly when the two nodes disagree;
3. the photon is detected in ``{|up>, |down>}``;
4. node 1 is measured in the X basis (Hadamard, then Z);
5. node N gets ``sigma_x`` if the photon was ``|up>`` and then ``sigma_z`` if
   node 1 gave ``|1>``.

Lossy gates are non-unitary; the missing norm is the probability that the
photon is not detected in a forward output, and all branch probabilities are
renormalised to the heralded events.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .gates import SIGMA_X, SIGMA_Z, controlled_gate

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
PATH_LABELS = ("up", "down")
UP, DOWN = 0, 1
BELL_PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / math.sqrt(2)
BELL_PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / math.sqrt(2)


class NotNormalized(ValueError):
    pass


@dataclass(frozen=True)
class GateConfig:
    """Controlled-gate settings shared by both nodes."""

    omega_on: float = math.inf
    omega_off: float = 0.0
    gamma_e: float = 0.0
    alpha: float = 0.0
    theta1: float = 0.0
    theta3: float = 0.0

    def matrix(self) -> np.ndarray:
        return controlled_gate(self.omega_on, self.omega_off, alpha=self.alpha,
                               theta1=self.theta1, theta3=self.theta3, gamma_e=self.gamma_e)

    def to_dict(self) -> dict:
        return {"omega_on": None if math.isinf(self.omega_on) else self.omega_on,
                "omega_off": self.omega_off, "gamma_e": self.gamma_e, "alpha": self.alpha,
                "theta1": self.theta1, "theta3": self.theta3}


IDEAL_GATES = GateConfig()


@dataclass(frozen=True)
class Branch:
    photon: str
    node1: int
    probability: float
    corrections: tuple[str, ...]
    state: np.ndarray
    fidelity: float

    def to_dict(self) -> dict:
        return {"photon": self.photon, "node1": self.node1, "probability": self.probability,
                "corrections": list(self.corrections), "fidelity": self.fidelity,
                "state": [[z.real, z.imag] for z in self.state]}


@dataclass
class TeleportResult:
    mode: str
    output: np.ndarray
    fidelity: float
    stderr: float
    heralding_probability: float
    branches: list[Branch]
    shots: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "fidelity": self.fidelity,
            "stderr": self.stderr,
            "heralding_probability": self.heralding_probability,
            "branches": [b.to_dict() for b in self.branches],
            "output_density": [[[z.real, z.imag] for z in row] for row in self.output],
        }
        if self.shots:
            counts = np.bincount(self.shots, minlength=len(self.branches))
            out["shots"] = len(self.shots)
            out["counts"] = [int(c) for c in counts]
            out["outcomes"] = [int(s) for s in self.shots]
        return out


def _apply_1q(psi: np.ndarray, op: np.ndarray, site: int) -> np.ndarray:
    t = psi.reshape(2, 2, 2)
    t = np.moveaxis(np.tensordot(op, t, axes=(1, site)), 0, site)
    return t.reshape(8)


def _apply_controlled(psi: np.ndarray, cg: np.ndarray, control: int) -> np.ndarray:
    """Apply a 4x4 ``control (x) path`` gate; the photon is site 1."""
    t = psi.reshape(2, 2, 2)
    op = cg.reshape(2, 2, 2, 2)
    if control == 0:
        t = np.einsum("abcd,cde->abe", op, t)
    else:
        t = np.einsum("abcd,edc->eba", op, t)
    return t.reshape(8)


def _check_input(state) -> np.ndarray:
    v = np.asarray(state, dtype=complex).reshape(-1)
    if v.shape != (2,):
        raise NotNormalized(f"input must be a single-qubit state, got shape {v.shape}")
    norm = float(np.vdot(v, v).real)
    if abs(norm - 1.0) > 1e-10:
        raise NotNormalized(f"input state has norm^2 {norm:.12g}, expected 1")
    return v


def _entangle(psi1: np.ndarray, cg: np.ndarray) -> np.ndarray:
    photon = np.zeros(2, dtype=complex)
    photon[DOWN] = 1.0
    psi = np.kron(np.kron(psi1, photon), np.array([1, 0], dtype=complex))
    psi = _apply_1q(psi, HADAMARD, 2)
    psi = _apply_controlled(psi, cg, 0)
    return _apply_controlled(psi, cg, 2)


def teleport_branches(state, gates: GateConfig = IDEAL_GATES, *, correct_x: bool = True,
                      correct_z: bool = True) -> tuple[list[Branch], float]:
    """All four measurement branches with heralded probabilities.

    Returns the branches (ordered photon up/down, then node 1 outcome 0/1) and
    the heralding probability.
    """
    a = _check_input(state)
    psi = _entangle(a, gates.matrix())
    psi = _apply_1q(psi, HADAMARD, 0)
    t = psi.reshape(2, 2, 2)
    heralded = float(np.vdot(psi, psi).real)
    branches = []
    for ph in (UP, DOWN):
        for m1 in (0, 1):
            out = t[m1, ph, :].copy()
            prob = float(np.vdot(out, out).real) / heralded
            corr = []
            if ph == UP and correct_x:
                out = SIGMA_X @ out
                corr.append("x")
            if m1 == 1 and correct_z:
                out = SIGMA_Z @ out
                corr.append("z")
            n = np.linalg.norm(out)
            out = out / n if n > 0 else out
            fid = float(abs(np.vdot(a, out)) ** 2) if n > 0 else 0.0
            branches.append(Branch(PATH_LABELS[ph], m1, prob, tuple(corr), out, fid))
    return branches, heralded


def run_teleport(state, gates: GateConfig = IDEAL_GATES, seed: int = 0, mode: str = "enumerated",
                 shots: int = 1, *, correct_x: bool = True, correct_z: bool = True) -> TeleportResult:
    """Teleport a single-qubit state from node 1 to node N.

    ``enumerated`` weights every branch by its exact probability. ``sampled``
    draws ``shots`` branch outcomes from a generator seeded with ``seed`` and
    reports mean and standard error of the per-shot fidelity. ``output`` is the
    resulting density matrix on node N in either mode.
    """
    branches, heralded = teleport_branches(state, gates, correct_x=correct_x, correct_z=correct_z)
    probs = np.array([b.probability for b in branches])
    fids = np.array([b.fidelity for b in branches])
    rhos = np.array([np.outer(b.state, b.state.conj()) for b in branches])
    if mode == "enumerated":
        rho = np.einsum("k,kij->ij", probs, rhos)
        return TeleportResult(mode, rho, float(probs @ fids), 0.0, heralded, branches)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}; use 'sampled' or 'enumerated'")
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    idx = rng.choice(len(branches), size=shots, p=probs / probs.sum())
    f = fids[idx]
    stderr = float(f.std(ddof=1) / math.sqrt(shots)) if shots > 1 else 0.0
    rho = rhos[idx].mean(axis=0)
    return TeleportResult(mode, rho, float(f.mean()), stderr, heralded, branches, idx.tolist())


@dataclass(frozen=True)
class BellDiagnostic:
    fidelity: float
    stderr: float
    heralding_probability: float
    outcome_probabilities: dict
    outcome_fidelities: dict

    def to_dict(self) -> dict:
        return {"fidelity": self.fidelity, "stderr": self.stderr,
                "heralding_probability": self.heralding_probability,
                "outcome_probabilities": self.outcome_probabilities,
                "outcome_fidelities": self.outcome_fidelities}


def entangle_nodes(gates: GateConfig = IDEAL_GATES, seed: int = 0, mode: str = "enumerated",
                   shots: int = 1000) -> BellDiagnostic:
    """Entangle the two nodes through the photon and score the Bell pair.

    Both nodes start in ``|+>``. A ``|down>`` detection should leave
    ``(|00> + |11>)/sqrt2`` and an ``|up>`` detection ``(|01> + |10>)/sqrt2``;
    the fidelity is taken against the target of the observed outcome.
    """
    plus = np.array([1, 1], dtype=complex) / math.sqrt(2)
    psi = _entangle(plus, gates.matrix())
    heralded = float(np.vdot(psi, psi).real)
    t = psi.reshape(2, 2, 2)
    probs, fids = {}, {}
    for ph, target in ((DOWN, BELL_PHI_PLUS), (UP, BELL_PSI_PLUS)):
        pair = t[:, ph, :].reshape(4)
        w = float(np.vdot(pair, pair).real)
        probs[PATH_LABELS[ph]] = w / heralded
        fids[PATH_LABELS[ph]] = float(abs(np.vdot(target, pair)) ** 2 / w) if w > 0 else 0.0
    labels = list(probs)
    p = np.array([probs[k] for k in labels])
    f = np.array([fids[k] for k in labels])
    if mode == "enumerated":
        return BellDiagnostic(float(p @ f), 0.0, heralded, probs, fids)
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}; use 'sampled' or 'enumerated'")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    draws = f[rng.choice(len(labels), size=shots, p=p / p.sum())]
    stderr = float(draws.std(ddof=1) / math.sqrt(shots)) if shots > 1 else 0.0
    return BellDiagnostic(float(draws.mean()), stderr, heralded, probs, fids)
