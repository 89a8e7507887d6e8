"""Decoder synthesis: both variants, reporting fields, and failure modes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidsynth.bitlinalg import symplectic_pairing
from braidsynth.codes import kitaev_chain, random_code, shortest_code
from braidsynth.majorana import (
    Circuit,
    MajoranaString,
    conjugate,
    multiply,
)
from braidsynth.synth import (
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
from braidsynth.tableau import (
    DecodedTarget,
    StabilizerCode,
    apply_circuit,
    contains_total_parity,
    prepend_ancilla_modes,
)


def gens(n_modes, *rows):
    return tuple(MajoranaString.from_modes(n_modes, m, r) for m, r in rows)


PARITY4 = StabilizerCode(4, gens(4, ((0, 1, 2, 3), 0)), name="parity4")


def decoded_ok(code: StabilizerCode, result: SynthesisResult) -> bool:
    """Replay the recorded basis changes and run the decoder on the code."""
    work = apply_substitutions(code, result.substitutions)
    if result.ancilla_modes:
        work = prepend_ancilla_modes(work)
    return result.target.matches(apply_circuit(result.decoder, work))


def recomputed_sign_flips(result: SynthesisResult) -> tuple[int, ...]:
    """Re-derive logical_sign_flips from the correction gates alone."""
    lo, hi = result.correction_span
    log_start = result.target.pivot_base + 2 * result.target.r
    flips = []
    for m in range(log_start, result.total_modes):
        img = MajoranaString.single_mode(result.total_modes, m)
        for gate in result.decoder.gates[lo:hi]:
            img = conjugate(gate, img)
        assert img.bits.value == 1 << m  # doubled braids never move bits
        if img.phase_r == 2:
            flips.append((m - log_start) // 2)
    return tuple(flips)


def check_reported_operators(code: StabilizerCode, result: SynthesisResult):
    ds = destabilizers(result)
    assert len(ds) == code.n_stabilizers
    for j, d in enumerate(ds):
        assert d.n_modes == code.n_modes
        assert d.is_hermitian()
        for i, g in enumerate(code.generators):
            assert symplectic_pairing(d.bits, g.bits) == (1 if i == j else 0)
    if code.n_logical == 0:
        return
    reps = logical_representatives(result)
    assert len(reps) == code.n_logical
    for x, z in reps:
        assert x.is_hermitian() and z.is_hermitian()
        assert symplectic_pairing(x.bits, z.bits) == 1
        for g in code.generators:
            assert symplectic_pairing(x.bits, g.bits) == 0
            assert symplectic_pairing(z.bits, g.bits) == 0


def test_kitaev_chain_free_run_needs_no_quartic_gates():
    code = kitaev_chain(4)
    result = synthesize_ancilla_free(code)
    assert result.gate_counts == {"braid2": 6, "braid4": 0}
    assert result.total_modes == 8
    assert result.ancilla_modes == ()
    assert result.ancilla_image is None and result.ancilla_phase_r is None
    assert result.substitutions == ()
    assert decoded_ok(code, result)


def test_shortest_code_with_ancilla():
    code = shortest_code()
    result = synthesize_with_ancilla(code)
    assert result.total_modes == 14
    assert result.ancilla_modes == (0, 1)
    assert result.gate_counts == {"braid2": 25, "braid4": 18}
    assert decoded_ok(code, result)
    # the ancilla pair comes back to (0, 1), up to a reported sign
    assert result.ancilla_image is not None
    assert result.ancilla_image.bits.indices() == (0, 1)
    assert result.ancilla_phase_r == 3
    assert str(result.ancilla_image) == "-i c0 c1"
    check_reported_operators(code, result)


def test_encoder_is_the_reversed_inverse():
    result = synthesize_with_ancilla(shortest_code())
    assert result.encoder.gates == tuple(
        g.inverse() for g in reversed(result.decoder.gates)
    )


def test_total_parity_obstructs_the_ancilla_free_variant():
    assert contains_total_parity(PARITY4)
    with pytest.raises(TotalParityObstruction):
        synthesize_ancilla_free(PARITY4)


def test_total_parity_pins_the_ancilla_image():
    result = synthesize_with_ancilla(PARITY4)
    assert decoded_ok(PARITY4, result)
    # the image cannot be brought back to the bare pair: it is stuck on the
    # all-modes monomial times the decoded generator
    assert result.ancilla_phase_r is None
    assert result.ancilla_image.bits.indices() == (0, 1, 4, 5)
    assert result.ancilla_image.phase_r == 0
    [d] = destabilizers(result)
    assert str(d) == "+i c0 c1 c2"
    [(x, z)] = logical_representatives(result)
    assert (str(x), str(z)) == ("-i c0 c2", "-i c0 c1")
    check_reported_operators(PARITY4, result)


def test_full_stabilizer_rank_can_still_reset_cleanly():
    # k = 0 forces the total parity into the group, but when the generator
    # product IS the total parity the pinned image is the bare pair itself
    code = StabilizerCode(4, gens(4, ((0, 1), 1), ((2, 3), 1)))
    assert contains_total_parity(code)
    result = synthesize_with_ancilla(code)
    assert result.ancilla_image.bits.indices() == (0, 1)
    assert result.ancilla_phase_r == result.ancilla_image.phase_r == 1


def test_lone_minus_i_generator_with_no_room_fails():
    code = StabilizerCode(4, gens(4, ((0, 1), 3), ((2, 3), 1)))
    with pytest.raises(PhaseCorrectionError):
        synthesize_ancilla_free(code)


def test_paired_minus_i_generators_fix_each_other():
    code = StabilizerCode(4, gens(4, ((0, 1), 3), ((2, 3), 3)))
    result = synthesize_ancilla_free(code)
    assert decoded_ok(code, result)
    lo, hi = result.correction_span
    assert hi - lo == 2  # one doubled quadratic braid handles both signs


def test_ancilla_rescues_the_lone_minus_i_generator():
    code = StabilizerCode(4, gens(4, ((0, 1), 3), ((2, 3), 1)))
    result = synthesize_with_ancilla(code)
    assert decoded_ok(code, result)


def test_last_column_falls_back_to_a_substitution():
    code = StabilizerCode(4, gens(4, ((0, 1), 1), ((0, 1, 2, 3), 2)))
    result = synthesize_ancilla_free(code)
    assert result.substitutions == ((1, 0),)
    assert len(result.decoder) == 0
    assert decoded_ok(code, result)


def test_apply_substitutions_multiplies_rows():
    code = StabilizerCode(6, gens(6, ((0, 1), 1), ((2, 3), 1)))
    out = apply_substitutions(code, ((0, 1),))
    assert out.generators[0] == multiply(code.generators[0], code.generators[1])
    assert out.generators[1] == code.generators[1]


def test_empty_code_decodes_with_no_gates():
    code = StabilizerCode(4, ())
    for result in (synthesize_ancilla_free(code), synthesize_with_ancilla(code)):
        assert len(result.decoder) == 0
        assert decoded_ok(code, result)
        assert destabilizers(result) == []
        check_reported_operators(code, result)


def test_no_representatives_without_encoded_pairs():
    result = synthesize_with_ancilla(random_code(6, 3, seed=5))
    with pytest.raises(ValueError):
        logical_representatives(result)


def test_reset_pass_requires_the_ancilla_layout():
    with pytest.raises(ValueError):
        reset_ancilla_pair(Circuit(4, ()), DecodedTarget(4, 0, 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_codes_decode_in_both_variants(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 6, 8, 10, 12])
    r = rng.randint(0, n // 2)
    code = random_code(n, r, seed=seed)
    ptot = contains_total_parity(code)
    # scrambling a decoded form keeps the total parity in the group
    # exactly when every mode pair was a stabilizer to begin with
    assert ptot == (code.n_logical == 0)

    result = synthesize_with_ancilla(code)
    assert result.total_modes == n + 2
    assert decoded_ok(code, result)
    assert len(result.decoder) <= 3 * r * result.total_modes
    assert result.ancilla_image.bits.value & 0b11 == 0b11
    clean = result.ancilla_image.bits.value == 0b11
    assert (result.ancilla_phase_r is not None) == clean
    if not ptot:
        assert clean and result.ancilla_phase_r in (1, 3)
    assert recomputed_sign_flips(result) == result.logical_sign_flips
    check_reported_operators(code, result)

    try:
        free = synthesize_ancilla_free(code)
    except TotalParityObstruction:
        assert ptot and r < n // 2
        return
    except PhaseCorrectionError:
        assert code.n_logical == 0
        return
    assert free.total_modes == n and free.ancilla_modes == ()
    assert free.ancilla_image is None and free.ancilla_phase_r is None
    assert decoded_ok(code, free)
    assert len(free.decoder) <= 3 * r * n
    assert recomputed_sign_flips(free) == free.logical_sign_flips
    check_reported_operators(code, free)
