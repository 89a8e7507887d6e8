"""Stabilizer codes over Majorana monomials, and the decoded normal form.

A code on N modes is a list of r generators that must be Hermitian, of even
weight, pairwise commuting and GF(2)-independent; nondegeneracy of the
fermionic pairing then forces r <= N/2.  Validation checks exactly those
properties, in a fixed order, and reports the first failure with the
offending generator indices so callers can surface precise diagnostics.

The synthesis target is the decoded form in which generator j acts only on
the mode pair (pivot_base + 2j, pivot_base + 2j + 1) with phase +i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitlinalg import BitVec, _pairing_raw
from .majorana import Circuit, MajoranaString, conjugate_circuit

__all__ = [
    "CodeValidationError",
    "StabilizerCode",
    "DecodedTarget",
    "apply_circuit",
    "contains_total_parity",
    "in_normalizer",
    "prepend_ancilla_modes",
]


class CodeValidationError(ValueError):
    """A generator list that is not a valid stabilizer code.

    kind is one of "odd_weight", "bad_phase", "anticommuting", "dependent",
    "too_many_generators"; indices points at the generators involved.
    """

    def __init__(self, kind: str, indices: tuple[int, ...], message: str) -> None:
        super().__init__(message)
        self.kind = kind
        self.indices = indices


@dataclass(frozen=True, slots=True)
class StabilizerCode:
    """An N-mode code given by its stabilizer generators."""

    n_modes: int
    generators: tuple[MajoranaString, ...]
    name: str | None = None

    def __post_init__(self) -> None:
        if self.n_modes < 2 or self.n_modes % 2:
            raise ValueError("n_modes must be even and at least 2")
        for g in self.generators:
            if g.n_modes != self.n_modes:
                raise ValueError("generator register size mismatch")

    @property
    def n_stabilizers(self) -> int:
        return len(self.generators)

    @property
    def n_logical(self) -> int:
        """Encoded fermion pairs; meaningful once validate() has passed."""
        return self.n_modes // 2 - self.n_stabilizers

    def validate(self) -> None:
        """Raise CodeValidationError at the first violated code property."""
        gens = self.generators
        for j, g in enumerate(gens):
            if g.weight % 2:
                raise CodeValidationError(
                    "odd_weight", (j,), f"generator {j} has odd weight {g.weight}"
                )
        for j, g in enumerate(gens):
            if not g.is_hermitian():
                raise CodeValidationError(
                    "bad_phase",
                    (j,),
                    f"generator {j} has phase i^{g.phase_r}, which is not Hermitian "
                    f"for weight {g.weight}",
                )
        for j in range(len(gens)):
            for k in range(j + 1, len(gens)):
                if _pairing_raw(gens[j].bits.value, gens[k].bits.value):
                    raise CodeValidationError(
                        "anticommuting", (j, k), f"generators {j} and {k} anticommute"
                    )
        pivots: dict[int, int] = {}
        for j, g in enumerate(gens):
            v = g.bits.value
            while v:
                low = v & -v
                row = low.bit_length() - 1
                if row not in pivots:
                    pivots[row] = v
                    break
                v ^= pivots[row]
            if not v:
                raise CodeValidationError(
                    "dependent", (j,), f"generator {j} is a product of earlier generators"
                )
        if len(gens) > self.n_modes // 2:
            raise CodeValidationError(
                "too_many_generators",
                tuple(range(len(gens))),
                f"{len(gens)} generators exceed the maximum {self.n_modes // 2}",
            )


@dataclass(frozen=True, slots=True)
class DecodedTarget:
    """Where synthesis sends the code: pair (pivot_base+2j, pivot_base+2j+1)."""

    n_modes: int
    pivot_base: int
    r: int

    def generator(self, j: int) -> MajoranaString:
        if not 0 <= j < self.r:
            raise ValueError("generator index out of range")
        p = self.pivot_base + 2 * j
        return MajoranaString.from_modes(self.n_modes, (p, p + 1), 1)

    def generators(self) -> tuple[MajoranaString, ...]:
        return tuple(self.generator(j) for j in range(self.r))

    def matches(self, code: StabilizerCode) -> bool:
        """True iff the code is exactly in this decoded form."""
        return code.n_modes == self.n_modes and code.generators == self.generators()


def apply_circuit(circuit: Circuit, code: StabilizerCode) -> StabilizerCode:
    """Conjugate every generator through the circuit."""
    if circuit.n_modes != code.n_modes:
        raise ValueError("mode count mismatch")
    gens = tuple(conjugate_circuit(circuit, g) for g in code.generators)
    return StabilizerCode(code.n_modes, gens, code.name)


def contains_total_parity(code: StabilizerCode) -> bool:
    """True iff the all-modes product lies in the GF(2) span of the bits."""
    pivots: dict[int, int] = {}
    for g in code.generators:
        v = g.bits.value
        while v:
            low = v & -v
            row = low.bit_length() - 1
            if row not in pivots:
                pivots[row] = v
                break
            v ^= pivots[row]
    v = (1 << code.n_modes) - 1
    while v:
        low = v & -v
        row = low.bit_length() - 1
        if row not in pivots:
            return False
        v ^= pivots[row]
    return True


def in_normalizer(code: StabilizerCode, m: MajoranaString) -> bool:
    """True iff m commutes with every stabilizer generator."""
    if m.n_modes != code.n_modes:
        raise ValueError("mode count mismatch")
    return all(_pairing_raw(m.bits.value, g.bits.value) == 0 for g in code.generators)


def prepend_ancilla_modes(code: StabilizerCode) -> StabilizerCode:
    """Shift the code up by one fresh mode pair at indices 0 and 1."""
    n = code.n_modes + 2
    gens = tuple(
        MajoranaString(BitVec(n, g.bits.value << 2), g.phase_r) for g in code.generators
    )
    return StabilizerCode(n, gens, code.name)
