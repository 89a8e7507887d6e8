"""Majorana monomials with exact Z4 phases, and braid-gate conjugation.

A monomial is ``i^r * c_{a1} c_{a2} ... c_{ak}`` with mode indices strictly
increasing; it is stored as a packed bit string plus the phase exponent
``r mod 4``.  The library's gate set is generated by two families:

* quadratic braid ``exp(-pi/4 c_a c_b)`` -- generator ``i * c_a c_b``,
* quartic braid ``exp(+i pi/4 c_a c_b c_c c_d)`` -- generator ``c_a c_b c_c c_d``,

each with an inverse direction.  Conjugating a monomial by a braid either
fixes it (even pairing) or multiplies it by ``i`` times the gate generator
(odd pairing); both branches reduce to one XOR and a phase update with a
reorder parity.  The bit action of a gate is linear, so a circuit also has a
GF(2) matrix, which is symplectic for the fermionic pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .bitlinalg import BitMatrix, BitVec, _pairing_raw, _reorder_raw

__all__ = [
    "MajoranaString",
    "BraidGate",
    "Circuit",
    "multiply",
    "conjugate",
    "conjugate_circuit",
    "invert",
    "gate_matrix",
    "circuit_matrix",
    "gate_counts",
    "circuit_to_text",
    "circuit_from_text",
]

_PHASE_STR = {0: "+1", 1: "+i", 2: "-1", 3: "-i"}


def _conjugate_raw(mask: int, gen_phase: int, bits: int, phase: int) -> tuple[int, int]:
    """Conjugation kernel on packed ints; mask has even weight."""
    if (mask & bits).bit_count() & 1 == 0:
        return bits, phase
    phase = (phase + 1 + gen_phase + 2 * _reorder_raw(mask, bits)) & 3
    return bits ^ mask, phase


def _multiply_raw(abits: int, aphase: int, bbits: int, bphase: int) -> tuple[int, int]:
    """Product kernel on packed ints."""
    phase = (aphase + bphase + 2 * _reorder_raw(abits, bbits)) & 3
    return abits ^ bbits, phase


@dataclass(frozen=True, slots=True)
class MajoranaString:
    """``i^phase_r`` times an ordered product of Majorana modes."""

    bits: BitVec
    phase_r: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.phase_r <= 3:
            raise ValueError("phase_r must lie in 0..3")

    @classmethod
    def identity(cls, n_modes: int) -> MajoranaString:
        return cls(BitVec(n_modes), 0)

    @classmethod
    def single_mode(cls, n_modes: int, k: int) -> MajoranaString:
        return cls(BitVec.from_indices(n_modes, (k,)), 0)

    @classmethod
    def from_modes(cls, n_modes: int, modes: Iterable[int], phase_r: int = 0) -> MajoranaString:
        return cls(BitVec.from_indices(n_modes, modes), phase_r)

    @property
    def n_modes(self) -> int:
        return self.bits.length

    @property
    def weight(self) -> int:
        return self.bits.weight()

    def is_hermitian(self) -> bool:
        """Hermitian iff the phase parity matches weight*(weight-1)/2."""
        w = self.weight
        return self.phase_r % 2 == (w * (w - 1) // 2) % 2

    def __str__(self) -> str:
        if self.weight == 0:
            return _PHASE_STR[self.phase_r]
        modes = " ".join(f"c{i}" for i in self.bits.indices())
        return f"{_PHASE_STR[self.phase_r]} {modes}"


GateKind = Literal["braid2", "braid4"]
_SUPPORT_SIZE = {"braid2": 2, "braid4": 4}


@dataclass(frozen=True, slots=True)
class BraidGate:
    """A quadratic or quartic braid on a sorted tuple of distinct modes."""

    kind: GateKind
    modes: tuple[int, ...]
    direction: int = 1

    def __post_init__(self) -> None:
        if self.kind not in _SUPPORT_SIZE:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.modes) != _SUPPORT_SIZE[self.kind]:
            raise ValueError(f"{self.kind} needs {_SUPPORT_SIZE[self.kind]} modes")
        if any(m < 0 for m in self.modes):
            raise ValueError("modes must be nonnegative")
        if any(a >= b for a, b in zip(self.modes, self.modes[1:])):
            raise ValueError("modes must be strictly ascending")
        if self.direction not in (1, -1):
            raise ValueError("direction must be +1 or -1")

    @property
    def support_mask(self) -> int:
        mask = 0
        for m in self.modes:
            mask |= 1 << m
        return mask

    @property
    def generator_phase(self) -> int:
        """Phase exponent r' of the gate generator ``i^{r'} [support]``."""
        base = 1 if self.kind == "braid2" else 0
        return base if self.direction == 1 else base + 2

    def inverse(self) -> BraidGate:
        return BraidGate(self.kind, self.modes, -self.direction)

    def __str__(self) -> str:
        tag = "B2" if self.kind == "braid2" else "B4"
        sign = "+" if self.direction == 1 else "-"
        return f"{tag} {sign}({','.join(map(str, self.modes))})"


@dataclass(frozen=True, slots=True)
class Circuit:
    """An ordered braid-gate sequence on a fixed register of modes."""

    n_modes: int
    gates: tuple[BraidGate, ...] = ()

    def __post_init__(self) -> None:
        if self.n_modes < 0:
            raise ValueError("n_modes must be nonnegative")
        for g in self.gates:
            if g.modes[-1] >= self.n_modes:
                raise ValueError(f"gate {g} exceeds register of {self.n_modes} modes")

    def __len__(self) -> int:
        return len(self.gates)


def multiply(a: MajoranaString, b: MajoranaString) -> MajoranaString:
    """Operator product a*b, with the reorder sign folded into the phase."""
    if a.n_modes != b.n_modes:
        raise ValueError("mode count mismatch")
    bits, phase = _multiply_raw(a.bits.value, a.phase_r, b.bits.value, b.phase_r)
    return MajoranaString(BitVec(a.n_modes, bits), phase)


def conjugate(gate: BraidGate, m: MajoranaString) -> MajoranaString:
    """Image of m under conjugation by the gate, tracked exactly.

    Even pairing against the gate support leaves m untouched; odd pairing
    maps m to ``i * V * m`` with V the gate generator.
    """
    if gate.modes[-1] >= m.n_modes:
        raise ValueError("gate mode out of range")
    bits, phase = _conjugate_raw(gate.support_mask, gate.generator_phase, m.bits.value, m.phase_r)
    return MajoranaString(BitVec(m.n_modes, bits), phase)


def conjugate_circuit(circuit: Circuit, m: MajoranaString) -> MajoranaString:
    """Conjugate m through every gate of the circuit, in order."""
    if circuit.n_modes != m.n_modes:
        raise ValueError("mode count mismatch")
    bits, phase = m.bits.value, m.phase_r
    for g in circuit.gates:
        bits, phase = _conjugate_raw(g.support_mask, g.generator_phase, bits, phase)
    return MajoranaString(BitVec(m.n_modes, bits), phase)


def invert(circuit: Circuit) -> Circuit:
    """Exact inverse: reversed gate order with each direction negated."""
    return Circuit(circuit.n_modes, tuple(g.inverse() for g in reversed(circuit.gates)))


def gate_matrix(gate: BraidGate, n_modes: int) -> BitMatrix:
    """GF(2) bit action of one gate: complement block on the support.

    The matrix is the identity outside the support and all-ones-minus-identity
    on it; it is involutive, symmetric and symplectic, and independent of the
    gate direction.
    """
    if gate.modes[-1] >= n_modes:
        raise ValueError("gate mode out of range")
    mask = gate.support_mask
    cols = tuple((mask ^ (1 << j)) if (mask >> j) & 1 else (1 << j) for j in range(n_modes))
    return BitMatrix(n_modes, cols)


def circuit_matrix(circuit: Circuit) -> BitMatrix:
    """Composite GF(2) action of the circuit (later gates applied last)."""
    n = circuit.n_modes
    cols = [1 << j for j in range(n)]
    for g in circuit.gates:
        mask = g.support_mask
        for j, x in enumerate(cols):
            if (x & mask).bit_count() & 1:
                cols[j] = x ^ mask
    return BitMatrix(n, tuple(cols))


def gate_counts(circuit: Circuit) -> dict[str, int]:
    counts = {"braid2": 0, "braid4": 0}
    for g in circuit.gates:
        counts[g.kind] += 1
    return counts


def circuit_to_text(circuit: Circuit) -> str:
    """Canonical text form, one gate per line, e.g. ``B4 +(0,2,3,4)``."""
    return "".join(f"{g}\n" for g in circuit.gates)


def circuit_from_text(text: str, n_modes: int) -> Circuit:
    """Parse the canonical one-gate-per-line form back into a circuit."""
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            tag, rest = line.split(None, 1)
            kind = {"B2": "braid2", "B4": "braid4"}[tag]
            sign, body = rest[0], rest[1:].strip()
            direction = {"+": 1, "-": -1}[sign]
            if not (body.startswith("(") and body.endswith(")")):
                raise ValueError
            modes = tuple(int(tok) for tok in body[1:-1].split(","))
        except (ValueError, KeyError, IndexError) as exc:
            raise ValueError(f"bad gate on line {lineno}: {raw!r}") from exc
        gates.append(BraidGate(kind, modes, direction))
    return Circuit(n_modes, tuple(gates))
