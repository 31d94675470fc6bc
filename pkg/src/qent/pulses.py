"""Pulse sequences over single-qubit rotations and two-qubit Ising couplings.

Sign conventions (fixed package-wide, no hidden normalization):

* ``Rotation(axis, angle, qubit)`` is the unitary exp(+i * angle * sigma_axis).
* ``IsingCoupling(angle, (a, b))`` is exp(+i * angle * sigma_z^a sigma_z^b).
* A ``PulseSequence`` lists pulses in application order: the first element
  acts on the state first, i.e. it is the rightmost factor of the
  corresponding operator product.

Under these conventions the three sequences built here reproduce their
canonical gates exactly up to a global phase (the SWAP construction carries
e^{i pi/4}, the c-SWAP carries e^{-i pi/8}; the three-body construction is
exact).  Scalar phase prefactors are not stored as pulses, but the
e^{-i pi/8 sigma_z} factor on the control qubit of the c-SWAP is a physical
pulse and is kept.

Interaction-time accounting: the coupling hardware evolves under
H = g sigma_z sigma_z, so a time t >= 0 realizes exp(-i g t ZZ).  With fixed
g > 0 a pulse exp(+i theta ZZ) therefore costs ((-theta) mod 2pi)/g; if the
sign of g is tunable the cheaper direction min(theta mod 2pi,
(-theta) mod 2pi)/|g| is used.  Single-qubit pulses cost no interaction
time.  Exploiting the pi-periodicity of ZZ evolution up to global phase
would allow cheaper schedules; that is deliberately not done, so the account
matches the straightforward per-pulse costs 27pi/(4g) and 9pi/(4|g|) for the
c-SWAP sequence.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

AXES = ("x", "y", "z")
_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class Rotation:
    """Single-qubit pulse exp(+i * angle * sigma_axis) on ``qubit``."""

    axis: str
    angle: float
    qubit: int

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"axis must be one of {AXES}, got {self.axis!r}")
        if not math.isfinite(self.angle):
            raise ValueError(f"angle must be finite, got {self.angle!r}")
        if self.qubit < 0:
            raise ValueError(f"qubit index must be >= 0, got {self.qubit}")


@dataclass(frozen=True)
class IsingCoupling:
    """Two-qubit pulse exp(+i * angle * sigma_z sigma_z) on ``qubits``."""

    angle: float
    qubits: tuple[int, int]

    def __post_init__(self):
        a, b = self.qubits
        if a == b:
            raise ValueError(f"Ising coupling needs two distinct qubits, got {self.qubits}")
        if min(a, b) < 0:
            raise ValueError(f"qubit indices must be >= 0, got {self.qubits}")
        if not math.isfinite(self.angle):
            raise ValueError(f"angle must be finite, got {self.angle!r}")
        object.__setattr__(self, "qubits", (int(a), int(b)))


Pulse = Union[Rotation, IsingCoupling]


@dataclass(frozen=True)
class PulseSequence:
    """Ordered pulses (first applied first) over ``register_size`` qubits."""

    pulses: tuple[Pulse, ...]
    register_size: int

    def __post_init__(self):
        object.__setattr__(self, "pulses", tuple(self.pulses))
        for p in self.pulses:
            targets = (p.qubit,) if isinstance(p, Rotation) else p.qubits
            if max(targets) >= self.register_size:
                raise ValueError(
                    f"pulse targets {targets} exceed register size {self.register_size}"
                )


@dataclass(frozen=True)
class CouplingModel:
    """Ising coupling strength g > 0 (radians per unit time)."""

    g: float
    sign_tunable: bool = False

    def __post_init__(self):
        if not self.g > 0:
            raise ValueError(f"coupling strength g must be > 0, got {self.g}")


# ---------------------------------------------------------------------------
# matrix realization


def pulse_unitary(pulse: Pulse, register_size: int) -> np.ndarray:
    """Full 2**register_size unitary of one pulse, identity on other qubits."""
    dim = 2**register_size
    if isinstance(pulse, Rotation):
        if pulse.qubit >= register_size:
            raise ValueError(f"pulse target {pulse.qubit} exceeds register {register_size}")
        u2 = math.cos(pulse.angle) * np.eye(2) + 1j * math.sin(pulse.angle) * _PAULI[pulse.axis]
        u = np.array([[1.0]], dtype=complex)
        for q in range(register_size):
            u = np.kron(u, u2 if q == pulse.qubit else np.eye(2))
        return u
    a, b = pulse.qubits
    if max(a, b) >= register_size:
        raise ValueError(f"pulse targets {pulse.qubits} exceed register {register_size}")
    idx = np.arange(dim)
    bits_a = (idx >> (register_size - 1 - a)) & 1
    bits_b = (idx >> (register_size - 1 - b)) & 1
    sign = np.where(bits_a == bits_b, 1.0, -1.0)
    return np.diag(np.exp(1j * pulse.angle * sign))


def sequence_unitary(seq: PulseSequence) -> np.ndarray:
    """Ordered product of the pulse unitaries (first pulse rightmost)."""
    if not seq.pulses:
        raise ValueError("pulse sequence is empty")
    u = np.eye(2**seq.register_size, dtype=complex)
    for p in seq.pulses:
        u = pulse_unitary(p, seq.register_size) @ u
    return u


# ---------------------------------------------------------------------------
# sequence constructors


def swap_sequence(t: int, s: int) -> PulseSequence:
    """SWAP(t, s) from three Ising couplings conjugated by x/y rotations.

    Realizes e^{-i pi/4 (XX+YY+ZZ)} = e^{-i pi/4} SWAP; the scalar phase is
    not tracked.  Each paired rotation e^{i a (sigma_t + sigma_s)} is stored
    as its two commuting single-qubit pulses.
    """
    if t == s:
        raise ValueError("SWAP needs two distinct qubits")
    q = math.pi / 4
    pulses = [
        IsingCoupling(-q, (t, s)),
        Rotation("x", -q, t), Rotation("x", -q, s),
        IsingCoupling(-q, (t, s)),
        Rotation("x", q, t), Rotation("x", q, s),
        Rotation("y", -q, t), Rotation("y", -q, s),
        IsingCoupling(-q, (t, s)),
        Rotation("y", q, t), Rotation("y", q, s),
    ]
    return PulseSequence(tuple(pulses), max(t, s) + 1)


def _three_body_pulses(phi: float, c: int, t: int, s: int) -> list[Pulse]:
    q = math.pi / 4
    return [
        Rotation("y", q, t),
        Rotation("x", q, t),
        Rotation("y", math.pi / 2, c),
        IsingCoupling(q, (c, t)),
        Rotation("x", -q, t),
        Rotation("y", -q, c),
        IsingCoupling(-phi, (t, s)),
        Rotation("x", q, t),
        Rotation("y", q, c),
        IsingCoupling(-q, (c, t)),
        Rotation("x", -q, t),
        Rotation("y", -q, t),
        Rotation("y", -math.pi / 2, c),
    ]


def three_body_sequence(phi: float, c: int, t: int, s: int) -> PulseSequence:
    """exp(+i phi Z_c Z_t Z_s) from couplings on (c,t) and (t,s) only.

    A conjugation built from Rotation/IsingCoupling pulses maps the central
    exp(-i phi Z_t Z_s) coupling onto the three-body generator; the identity
    is exact (no global phase).
    """
    if len({c, t, s}) != 3:
        raise ValueError("three-body sequence needs three distinct qubits")
    return PulseSequence(tuple(_three_body_pulses(phi, c, t, s)), max(c, t, s) + 1)


def cswap_sequence(c: int, t: int, s: int) -> PulseSequence:
    """Controlled-SWAP (control c) with three-body factors expanded inline.

    Each Ising coupling of the SWAP construction is replaced by its
    controlled counterpart e^{-i pi/8 Z_t Z_s} e^{+i pi/8 Z_c Z_t Z_s}, and a
    z pulse on the control supplies the conditional phase.  All couplings act
    on the pairs (c, t) and (t, s) only.  Equals the canonical gate up to a
    global phase of e^{-i pi/8}.
    """
    if len({c, t, s}) != 3:
        raise ValueError("c-SWAP needs three distinct qubits")
    q = math.pi / 4
    e = math.pi / 8
    pulses = [
        *_three_body_pulses(e, c, t, s),
        IsingCoupling(-e, (t, s)),
        Rotation("x", -q, t), Rotation("x", -q, s),
        *_three_body_pulses(e, c, t, s),
        IsingCoupling(-e, (t, s)),
        Rotation("x", q, t), Rotation("x", q, s),
        Rotation("y", -q, t), Rotation("y", -q, s),
        *_three_body_pulses(e, c, t, s),
        IsingCoupling(-e, (t, s)),
        Rotation("y", q, t), Rotation("y", q, s),
        Rotation("z", -e, c),
    ]
    return PulseSequence(tuple(pulses), max(c, t, s) + 1)


# ---------------------------------------------------------------------------
# accounting and comparison


def interaction_time(seq: PulseSequence, model: CouplingModel) -> float:
    """Total two-qubit interaction time (see module docstring for the rule)."""
    two_pi = 2 * math.pi
    total = 0.0
    for p in seq.pulses:
        if not isinstance(p, IsingCoupling):
            continue
        backward = (-p.angle) % two_pi
        if model.sign_tunable:
            total += min(p.angle % two_pi, backward)
        else:
            total += backward
    return total / model.g


def equal_up_to_global_phase(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    """True iff u = e^{i alpha} v within ``tol``.

    Requires both |Tr(u^dag v)|/dim > 1 - tol and, after aligning v by the
    trace phase, max elementwise deviation < tol * dim, so near-degenerate
    traces cannot pass on the trace condition alone.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"shapes differ: {u.shape} vs {v.shape}")
    dim = u.shape[0]
    tr = np.trace(u.conj().T @ v)
    if abs(tr) / dim <= 1 - tol:
        return False
    return phase_aligned_deviation(u, v) < tol * dim


def phase_aligned_deviation(u: np.ndarray, v: np.ndarray) -> float:
    """max |u - e^{-i alpha} v| with alpha the phase of Tr(u^dag v)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"shapes differ: {u.shape} vs {v.shape}")
    tr = np.trace(u.conj().T @ v)
    if abs(tr) < 1e-15:
        return float(np.max(np.abs(u - v)))
    return float(np.max(np.abs(u - v * (abs(tr) / tr))))


# ---------------------------------------------------------------------------
# canonical gates (verification targets)


def canonical_swap(t: int, s: int, register_size: int) -> np.ndarray:
    if t == s or max(t, s) >= register_size:
        raise ValueError(f"invalid SWAP targets ({t}, {s}) for register {register_size}")
    dim = 2**register_size
    idx = np.arange(dim)
    swapped = _swap_bits(idx, t, s, register_size)
    u = np.zeros((dim, dim), dtype=complex)
    u[swapped, idx] = 1.0
    return u


def canonical_cswap(c: int, t: int, s: int, register_size: int) -> np.ndarray:
    if len({c, t, s}) != 3 or max(c, t, s) >= register_size:
        raise ValueError(f"invalid c-SWAP targets ({c}, {t}, {s}) for register {register_size}")
    dim = 2**register_size
    idx = np.arange(dim)
    control_on = ((idx >> (register_size - 1 - c)) & 1) == 1
    out = np.where(control_on, _swap_bits(idx, t, s, register_size), idx)
    u = np.zeros((dim, dim), dtype=complex)
    u[out, idx] = 1.0
    return u


def zzz_unitary(phi: float, c: int, t: int, s: int, register_size: int) -> np.ndarray:
    """exp(+i phi Z_c Z_t Z_s): diagonal phases by parity of the three bits."""
    if len({c, t, s}) != 3 or max(c, t, s) >= register_size:
        raise ValueError(f"invalid targets ({c}, {t}, {s}) for register {register_size}")
    idx = np.arange(2**register_size)
    par = sum((idx >> (register_size - 1 - q)) & 1 for q in (c, t, s)) % 2
    return np.diag(np.exp(1j * phi * (1.0 - 2.0 * par)))


def _swap_bits(idx: np.ndarray, a: int, b: int, width: int) -> np.ndarray:
    pa, pb = width - 1 - a, width - 1 - b
    bit_a = (idx >> pa) & 1
    bit_b = (idx >> pb) & 1
    diff = bit_a ^ bit_b
    return idx ^ (diff << pa) ^ (diff << pb)


# ---------------------------------------------------------------------------
# JSON export: ordered pulse array, each {kind, axis?, angle, targets}


def sequence_to_dict(seq: PulseSequence) -> dict:
    pulses = []
    for p in seq.pulses:
        if isinstance(p, Rotation):
            pulses.append(
                {"kind": "rotation", "axis": p.axis, "angle": p.angle, "targets": [p.qubit]}
            )
        else:
            pulses.append({"kind": "ising", "angle": p.angle, "targets": list(p.qubits)})
    return {"register_size": seq.register_size, "pulses": pulses}


def sequence_from_dict(doc: dict) -> PulseSequence:
    try:
        pulses: list[Pulse] = []
        for entry in doc["pulses"]:
            if entry["kind"] == "rotation":
                (target,) = entry["targets"]
                pulses.append(Rotation(entry["axis"], float(entry["angle"]), int(target)))
            elif entry["kind"] == "ising":
                a, b = entry["targets"]
                pulses.append(IsingCoupling(float(entry["angle"]), (int(a), int(b))))
            else:
                raise ValueError(f"unknown pulse kind {entry['kind']!r}")
        return PulseSequence(tuple(pulses), int(doc["register_size"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed sequence document: {exc}") from exc


def save_sequence(seq: PulseSequence, path: str | Path) -> None:
    Path(path).write_text(json.dumps(sequence_to_dict(seq)) + "\n")


def load_sequence(path: str | Path) -> PulseSequence:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed sequence file {path}: {exc}") from exc
    return sequence_from_dict(doc)
