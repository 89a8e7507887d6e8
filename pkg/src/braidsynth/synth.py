"""Decoder synthesis: reduce a stabilizer code to aligned mode pairs.

Both variants sweep the generators column by column.  Quartic braids shrink
the working column's weight below the pivot by two per step, quadratic
braids swap the surviving two bits onto the pivot pair, and a second quartic
pass clears bits the column still holds on already-decoded pairs.  Every
emitted gate has even overlap with every finished pair, so decoded
generators are never disturbed -- the loop invariant that makes the sweep
correct.

The ancilla variant adjoins a fresh mode pair at indices 0 and 1; mode 0
serves as the always-available parking slot for quartic shrinking, and the
pair is swept back to (0, 1) at the end when that is possible at all.  (It
is not when the stabilizer group contains the total parity: every braid
fixes the all-modes monomial, which pins the ancilla pair's image to the
global parity times decoded generators, an operator no pair-preserving
gate can move.  The residual image is reported instead of hidden.)  The
ancilla-free variant parks on a zero row below the pivot, falling back to
a recorded change of generating set (a pre-multiplication, not a gate)
when no zero row exists; it must reject codes whose stabilizer group
contains the total parity with r < N/2, for which no ancilla-free decoder
exists at all.

After the sweep all generator phases are +-i.  A doubled braid commutes
with every monomial's bits and flips the sign of those it pairs oddly with,
which is exactly the hammer needed to turn -i phases into +i; the chosen
supports keep every other generator even, at the recorded cost of sign
flips on some logical-pair representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitlinalg import BitVec, _lowest_bit, _pairing_raw
from .majorana import (
    BraidGate,
    Circuit,
    MajoranaString,
    _conjugate_raw,
    _multiply_raw,
    conjugate_circuit,
    gate_counts,
    invert,
    multiply,
)
from .tableau import (
    DecodedTarget,
    StabilizerCode,
    contains_total_parity,
    prepend_ancilla_modes,
)

__all__ = [
    "TotalParityObstruction",
    "PhaseCorrectionError",
    "SynthesisResult",
    "synthesize_with_ancilla",
    "synthesize_ancilla_free",
    "reset_ancilla_pair",
    "apply_substitutions",
    "destabilizers",
    "logical_representatives",
]


class TotalParityObstruction(Exception):
    """No ancilla-free decoder exists: every braid gate fixes the all-modes
    monomial, but decoding would have to move it out of the stabilizer."""


class PhaseCorrectionError(Exception):
    """A lone -i generator with no admissible correction support (possible
    only ancilla-free with k = 0, where the all-modes monomial's sign is
    rigid under every braid gate)."""


@dataclass(frozen=True, slots=True)
class SynthesisResult:
    """A synthesized decoder plus the bookkeeping needed to interpret it.

    decoder conjugates the (ancilla-extended, substitution-adjusted) code to
    the decoded target; encoder is its exact gate-for-gate inverse.
    substitutions lists generating-set changes (i, j) meaning generator i
    was pre-multiplied by generator j.  correction_span is the decoder gate
    index range holding the doubled phase-correction braids.  For the
    ancilla variant, ancilla_image is the decoder image of i c_0 c_1 after
    the reset pass: normally i^s c_0 c_1 with the residual sign s recorded
    in ancilla_phase_r (reported, not corrected).  For a code whose
    stabilizer group contains the total parity the image is pinned to the
    all-modes monomial times decoded pairs; unless that product already is
    the ancilla pair (possible only with no encoded pairs left over), it
    cannot be reduced, ancilla_phase_r is None, and the full monomial is
    reported.
    """

    decoder: Circuit
    encoder: Circuit
    total_modes: int
    ancilla_modes: tuple[int, ...]
    target: DecodedTarget
    logical_sign_flips: tuple[int, ...]
    gate_counts: dict[str, int]
    substitutions: tuple[tuple[int, int], ...]
    ancilla_phase_r: int | None
    ancilla_image: MajoranaString | None
    correction_span: tuple[int, int]


def synthesize_with_ancilla(code: StabilizerCode) -> SynthesisResult:
    """Decode on N+2 modes, never failing, ancilla pair swept back to (0,1)."""
    return _run(code, use_ancilla=True)


def synthesize_ancilla_free(code: StabilizerCode) -> SynthesisResult:
    """Decode on the code's own N modes, or raise TotalParityObstruction."""
    return _run(code, use_ancilla=False)


def _run(code: StabilizerCode, use_ancilla: bool) -> SynthesisResult:
    code.validate()
    r = code.n_stabilizers
    if use_ancilla:
        work = prepend_ancilla_modes(code)
        pivot_base = 2
        ancilla_modes: tuple[int, ...] = (0, 1)
    else:
        if contains_total_parity(code) and r < code.n_modes // 2:
            raise TotalParityObstruction(
                "total parity lies in the stabilizer group with r < N/2; "
                "use the ancilla variant"
            )
        work = code
        pivot_base = 0
        ancilla_modes = ()
    n_work = work.n_modes
    full = (1 << n_work) - 1

    bits = [g.bits.value for g in work.generators]
    phases = [g.phase_r for g in work.generators]
    gates: list[BraidGate] = []
    substitutions: list[tuple[int, int]] = []

    def emit(kind: str, modes: tuple[int, ...]) -> None:
        gate = BraidGate(kind, tuple(sorted(modes)))
        gates.append(gate)
        mask, gp = gate.support_mask, gate.generator_phase
        for idx in range(r):
            bits[idx], phases[idx] = _conjugate_raw(mask, gp, bits[idx], phases[idx])

    def substitute(i: int, j: int) -> None:
        bits[i], phases[i] = _multiply_raw(bits[i], phases[i], bits[j], phases[j])
        substitutions.append((i, j))

    for i in range(r):
        p = pivot_base + 2 * i
        tail = full ^ ((1 << p) - 1)

        if use_ancilla and bits[i] & 1:
            # the parking bit is set exactly when the tail weight is odd;
            # push it onto the lowest clear tail row before shrinking
            z = _lowest_bit(~bits[i] & tail)
            emit("braid2", (0, z))

        while (bits[i] & tail).bit_count() > 2:
            t = bits[i] & tail
            a1 = _lowest_bit(t)
            a2 = _lowest_bit(t ^ (1 << a1))
            a3 = _lowest_bit(t ^ (1 << a1) ^ (1 << a2))
            if use_ancilla:
                emit("braid4", (0, a1, a2, a3))
                emit("braid2", (0, a1))
            else:
                clear = ~bits[i] & tail
                if clear == 0:
                    # all-ones tail: borrow another generator's tail support
                    # (guaranteed by independence; a recorded basis change)
                    j = next(k for k in range(r) if k != i and bits[k] & tail)
                    substitute(i, j)
                    continue
                emit("braid4", (_lowest_bit(clear), a1, a2, a3))

        t = bits[i] & tail
        b1 = _lowest_bit(t)
        b2 = _lowest_bit(t ^ (1 << b1))
        if b1 != p:
            emit("braid2", (p, b1))
        if b2 != p + 1:
            emit("braid2", (p + 1, b2))

        # clear the column's leftover support on already-decoded pairs;
        # commutation forces it to occur in aligned complete pairs
        pair_region = ((1 << p) - 1) ^ ((1 << pivot_base) - 1)
        while bits[i] & pair_region:
            q = _lowest_bit(bits[i] & pair_region)
            assert (bits[i] >> (q + 1)) & 1, "decoded-pair support must be aligned"
            if use_ancilla:
                emit("braid4", (0, q, q + 1, p))
                emit("braid2", (0, p))
            elif p + 2 < n_work:
                emit("braid4", (q, q + 1, p, p + 2))
                emit("braid2", (p, p + 2))
            else:
                substitute(i, (q - pivot_base) // 2)

    # ---- phase correction: doubled braids flip -i generators to +i ----
    correction_start = len(gates)
    log_start = pivot_base + 2 * r
    free = list(ancilla_modes) + list(range(log_start, n_work))
    mode_flips: dict[int, int] = {}

    def emit_double(kind: str, modes: tuple[int, ...]) -> None:
        emit(kind, modes)
        emit(kind, modes)
        for m in modes:
            if m >= log_start:
                mode_flips[m] = mode_flips.get(m, 0) + 1

    for j in range(r):
        if phases[j] != 3:
            continue
        pj = pivot_base + 2 * j
        if len(free) >= 3:
            emit_double("braid4", (pj, free[0], free[1], free[2]))
        elif free and r >= 2:
            q = pivot_base if j != 0 else pivot_base + 2
            emit_double("braid4", (pj, free[0], q, q + 1))
        elif free:
            emit_double("braid2", (pj, free[0]))
        else:
            partner = next((k for k in range(j + 1, r) if phases[k] == 3), None)
            if partner is None:
                raise PhaseCorrectionError(
                    f"generator {j} is stuck at phase -i: no free modes remain "
                    "and no second flipped generator exists to pair with"
                )
            emit_double("braid2", (pj, pivot_base + 2 * partner))
        assert phases[j] == 1
    correction_span = (correction_start, len(gates))

    logical_flips = tuple(
        (m - log_start) // 2 for m in sorted(mode_flips) if mode_flips[m] & 1
    )

    target = DecodedTarget(n_work, pivot_base, r)

    ancilla_phase: int | None = None
    ancilla_image: MajoranaString | None = None
    if use_ancilla:
        for gate in reset_ancilla_pair(Circuit(n_work, tuple(gates)), target):
            emit(gate.kind, gate.modes)
        qb, qp = 0b11, 1
        for gate in gates:
            qb, qp = _conjugate_raw(gate.support_mask, gate.generator_phase, qb, qp)
        ancilla_image = MajoranaString(BitVec(n_work, qb), qp)
        if qb == 0b11:
            ancilla_phase = qp

    for j in range(r):
        assert bits[j] == 0b11 << (pivot_base + 2 * j) and phases[j] == 1

    decoder = Circuit(n_work, tuple(gates))
    return SynthesisResult(
        decoder=decoder,
        encoder=invert(decoder),
        total_modes=n_work,
        ancilla_modes=ancilla_modes,
        target=target,
        logical_sign_flips=logical_flips,
        gate_counts=gate_counts(decoder),
        substitutions=tuple(substitutions),
        ancilla_phase_r=ancilla_phase,
        ancilla_image=ancilla_image,
        correction_span=correction_span,
    )


def reset_ancilla_pair(decoder: Circuit, target: DecodedTarget) -> list[BraidGate]:
    """Gates returning the ancilla pair's decoder image to modes (0, 1).

    Tracks q, the image of i c_0 c_1 under the decoder, and strips surplus
    modes two at a time.  Every gate used has even overlap with every
    decoded generator pair, so the stabilizer table is untouched; only the
    Z4 phase riding on the ancilla pair can remain, and is left for the
    caller to report.

    When q covers the whole non-pair region (which happens exactly when the
    stabilizer group contains the total parity, since braids fix the
    all-modes monomial), every pair-preserving gate has even overlap with q
    and the image is immovable; the pass then returns no gates and leaves q
    for the caller to report.
    """
    if target.pivot_base != 2:
        raise ValueError("ancilla reset applies to the ancilla variant only")
    n = decoder.n_modes
    r = target.r
    log_start = 2 + 2 * r
    free_mask = 0b11 | (((1 << n) - 1) ^ ((1 << log_start) - 1))

    qb, qp = 0b11, 1
    for gate in decoder.gates:
        qb, qp = _conjugate_raw(gate.support_mask, gate.generator_phase, qb, qp)

    out: list[BraidGate] = []

    def step(kind: str, modes: tuple[int, ...]) -> None:
        nonlocal qb, qp
        gate = BraidGate(kind, tuple(sorted(modes)))
        out.append(gate)
        qb, qp = _conjugate_raw(gate.support_mask, gate.generator_phase, qb, qp)

    while qb != 0b11:
        if free_mask & ~qb == 0:
            break  # image covers every free mode: rigid, see docstring
        if not qb & 1:
            # bring mode 0 into the image first (q meets the ancilla/logical
            # region in a nonzero even set, by independence from the pairs)
            step("braid2", (0, _lowest_bit(qb & free_mask)))
            continue
        surplus = qb ^ 1
        if surplus.bit_count() == 1:
            step("braid2", (1, _lowest_bit(surplus)))
            continue
        removal: tuple[int, int] | None = None
        for j in range(r):
            pair_mask = 0b11 << (2 + 2 * j)
            if qb & pair_mask == pair_mask:
                removal = (2 + 2 * j, 3 + 2 * j)
                break
        if removal is None:
            fs = qb & free_mask & ~1
            a = _lowest_bit(fs)
            removal = (a, _lowest_bit(fs ^ (1 << a)))
        z_pool = free_mask & ~qb & ~1
        assert z_pool, "ancilla reset needs a free mode outside the image"
        z = _lowest_bit(z_pool)
        step("braid4", (0, removal[0], removal[1], z))
        step("braid2", (0, z))
    return out


def apply_substitutions(
    code: StabilizerCode, substitutions: tuple[tuple[int, int], ...]
) -> StabilizerCode:
    """Replay recorded generating-set changes: gens[i] <- gens[i] * gens[j]."""
    gens = list(code.generators)
    for i, j in substitutions:
        gens[i] = multiply(gens[i], gens[j])
    return StabilizerCode(code.n_modes, tuple(gens), code.name)


def _encoder_image(result: SynthesisResult, mode: int) -> MajoranaString:
    """Encoder image of a decoded-frame mode, reduced to the user register.

    If the mode pairs oddly with the ancilla pair's decoder image (possible
    only for total-parity codes, where data-local operators of the needed
    kind must have the opposite weight parity), the Hermitian pair
    i c_0 c_mode is taken instead; that flips nothing against the decoded
    pairs.  The image then meets the ancilla pair in both modes or neither.
    When both, multiply by i c_0 c_1 -- a +1 operator at the decoder's
    input, where the ancilla pair is freshly prepared -- to clear them
    before dropping the two slots.
    """
    n = result.total_modes
    m = MajoranaString.single_mode(n, mode)
    if not result.ancilla_modes:
        return conjugate_circuit(result.encoder, m)
    assert result.ancilla_image is not None
    if _pairing_raw(m.bits.value, result.ancilla_image.bits.value):
        m = MajoranaString.from_modes(n, (0, mode), 1)
    img = conjugate_circuit(result.encoder, m)
    if img.bits.value & 0b11:
        assert img.bits.value & 0b11 == 0b11, "ancilla overlap must be the full pair"
        img = multiply(img, MajoranaString.from_modes(n, (0, 1), 1))
    return MajoranaString(BitVec(n - 2, img.bits.value >> 2), img.phase_r)


def destabilizers(result: SynthesisResult) -> list[MajoranaString]:
    """Encoder images of the pivot modes, one per generator, on user modes.

    Destabilizer j anticommutes with generator j and commutes with all the
    others, because single pivot modes do exactly that against the decoded
    pairs and conjugation preserves pairings.
    """
    pb = result.target.pivot_base
    return [_encoder_image(result, pb + 2 * j) for j in range(result.target.r)]


def logical_representatives(
    result: SynthesisResult,
) -> list[tuple[MajoranaString, MajoranaString]]:
    """Encoder images of the logical-region modes, paired, on user modes.

    Each string commutes with every stabilizer generator; the two members
    of a pair anticommute with each other.
    """
    pb, r, n = result.target.pivot_base, result.target.r, result.total_modes
    log_start = pb + 2 * r
    k = (n - log_start) // 2
    if k == 0:
        raise ValueError("code has no encoded pairs")
    return [
        (
            _encoder_image(result, log_start + 2 * ell),
            _encoder_image(result, log_start + 2 * ell + 1),
        )
        for ell in range(k)
    ]
