"""Encoder/decoder synthesis for Majorana fermionic stabilizer codes.

Majorana monomials are tracked as packed GF(2) bit strings with exact Z4
phases; circuits are sequences of quadratic and quartic braid gates.  The
synthesizer reduces any valid code to aligned mode pairs with +i phases,
either on two extra ancilla modes or ancilla-free where possible, and every
step can be cross-checked against a dense matrix oracle for small registers.
"""

from .bitlinalg import (
    BitMatrix,
    BitVec,
    check_symplectic,
    fermionic_form,
    in_span,
    rank,
    reorder_parity,
    symplectic_pairing,
)
from .codes import (
    CodeFormatError,
    kitaev_chain,
    parse_code,
    random_circuit,
    random_code,
    serialize_code,
    shortest_code,
)
from .majorana import (
    BraidGate,
    Circuit,
    MajoranaString,
    circuit_matrix,
    conjugate,
    conjugate_circuit,
    gate_counts,
    gate_matrix,
    invert,
    multiply,
)
from .synth import (
    PhaseCorrectionError,
    SynthesisResult,
    TotalParityObstruction,
    apply_substitutions,
    destabilizers,
    logical_representatives,
    reset_ancilla_pair,
    synthesize_ancilla_free,
    synthesize_with_ancilla,
)
from .tableau import (
    CodeValidationError,
    DecodedTarget,
    StabilizerCode,
    apply_circuit,
    contains_total_parity,
    in_normalizer,
    prepend_ancilla_modes,
)

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "BitMatrix",
    "symplectic_pairing",
    "reorder_parity",
    "rank",
    "in_span",
    "fermionic_form",
    "check_symplectic",
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
    "CodeValidationError",
    "StabilizerCode",
    "DecodedTarget",
    "apply_circuit",
    "contains_total_parity",
    "in_normalizer",
    "prepend_ancilla_modes",
    "CodeFormatError",
    "kitaev_chain",
    "shortest_code",
    "random_circuit",
    "random_code",
    "parse_code",
    "serialize_code",
    "TotalParityObstruction",
    "PhaseCorrectionError",
    "SynthesisResult",
    "synthesize_with_ancilla",
    "synthesize_ancilla_free",
    "reset_ancilla_pair",
    "apply_substitutions",
    "destabilizers",
    "logical_representatives",
    "__version__",
]
