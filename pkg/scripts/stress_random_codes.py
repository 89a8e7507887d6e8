#!/usr/bin/env python3
"""Randomized stress run for the synthesizer.

Generates seeded random codes, synthesizes both variants, and checks the
full contract on each: decoded form reached, gate count within the linear
bound, reported operators pair correctly, ancilla reset as promised, and
the ancilla-free obstruction raised exactly when it must be.  Prints one
summary line; any violation trips an assert.
"""

import argparse
import random

from braidsynth.bitlinalg import symplectic_pairing
from braidsynth.codes import random_code
from braidsynth.synth import (
    PhaseCorrectionError,
    TotalParityObstruction,
    apply_substitutions,
    destabilizers,
    logical_representatives,
    synthesize_ancilla_free,
    synthesize_with_ancilla,
)
from braidsynth.tableau import apply_circuit, contains_total_parity, prepend_ancilla_modes


def check(code, result):
    work = apply_substitutions(code, result.substitutions)
    if result.ancilla_modes:
        work = prepend_ancilla_modes(work)
    assert result.target.matches(apply_circuit(result.decoder, work))
    r = code.n_stabilizers
    assert len(result.decoder) <= 3 * r * result.total_modes
    for j, d in enumerate(destabilizers(result)):
        assert d.is_hermitian()
        for i, g in enumerate(code.generators):
            assert symplectic_pairing(d.bits, g.bits) == (1 if i == j else 0)
    if code.n_logical:
        for x, z in logical_representatives(result):
            assert x.is_hermitian() and z.is_hermitian()
            assert symplectic_pairing(x.bits, z.bits) == 1
            for g in code.generators:
                assert symplectic_pairing(x.bits, g.bits) == 0
                assert symplectic_pairing(z.bits, g.bits) == 0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--codes", type=int, default=200)
    parser.add_argument("--max-modes", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pinned = clean_full_rank = obstructed = 0
    for idx in range(args.codes):
        n = 2 * rng.randint(2, args.max_modes // 2)
        r = rng.randint(0, n // 2)
        code = random_code(n, r, seed=args.seed * 100_000 + idx)
        ptot = contains_total_parity(code)

        result = synthesize_with_ancilla(code)
        check(code, result)
        clean = result.ancilla_image.bits.value == 0b11
        assert (result.ancilla_phase_r is not None) == clean
        if not ptot:
            assert clean
        elif clean:
            clean_full_rank += 1
        else:
            pinned += 1

        try:
            check(code, synthesize_ancilla_free(code))
        except TotalParityObstruction:
            assert ptot and r < n // 2
            obstructed += 1
        except PhaseCorrectionError:
            assert code.n_logical == 0

    print(
        f"stress ok: {args.codes} codes | pinned ancilla images: {pinned} | "
        f"clean full-rank resets: {clean_full_rank} | obstructions: {obstructed}"
    )


if __name__ == "__main__":
    main()
