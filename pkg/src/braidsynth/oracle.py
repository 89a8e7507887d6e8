"""Dense-matrix oracle for small registers.

Builds explicit matrices for modes, monomials, gates and circuits on the
standard qubit chain (mode ``2j`` -> Z..Z X I..I, mode ``2j+1`` -> Z..Z Y
I..I with j leading Z factors), so every algebraic identity the packed
representation claims can be checked against literal matrix arithmetic.

Braid unitaries are ``(I + i V)/sqrt(2)`` with V the gate generator, so a
conjugation ``U M U^dagger`` expands to ``(I + iV) M (I - iV)/2``.  All of
its entries are Gaussian integers divided by two, which complex128 holds
exactly; tests compare such matrices with ``==`` rather than a tolerance.

Everything here is deliberately naive and O(4^n): it exists to be obviously
correct, not fast, and refuses registers beyond MAX_MODES.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .majorana import BraidGate, Circuit, MajoranaString

__all__ = [
    "MAX_MODES",
    "dense_majorana",
    "dense_monomial",
    "dense_gate",
    "conjugate_dense",
    "circuit_unitary",
    "stabilizer_projector",
]

MAX_MODES = 16

_I2 = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def _check_register(n_modes: int) -> None:
    if n_modes % 2:
        raise ValueError("dense oracle needs an even number of modes")
    if not 0 < n_modes <= MAX_MODES:
        raise ValueError(f"n_modes must lie in 2..{MAX_MODES}")


@lru_cache(maxsize=None)
def dense_majorana(n_modes: int, k: int) -> np.ndarray:
    """Matrix of mode k on n_modes/2 qubits."""
    _check_register(n_modes)
    if not 0 <= k < n_modes:
        raise ValueError("mode out of range")
    out = np.ones((1, 1), dtype=np.complex128)
    for q in range(n_modes // 2):
        if q < k // 2:
            factor = _Z
        elif q == k // 2:
            factor = _X if k % 2 == 0 else _Y
        else:
            factor = _I2
        out = np.kron(out, factor)
    out.setflags(write=False)
    return out


def dense_monomial(m: MajoranaString) -> np.ndarray:
    """Matrix of ``i^r c_{a1}...c_{ak}``, factors in ascending mode order."""
    _check_register(m.n_modes)
    dim = 2 ** (m.n_modes // 2)
    out = (1j**m.phase_r) * np.eye(dim, dtype=np.complex128)
    for k in m.bits.indices():
        out = out @ dense_majorana(m.n_modes, k)
    return out


def _dense_generator(gate: BraidGate, n_modes: int) -> np.ndarray:
    v = MajoranaString.from_modes(n_modes, gate.modes, gate.generator_phase)
    return dense_monomial(v)


def dense_gate(gate: BraidGate, n_modes: int) -> np.ndarray:
    """Unitary ``(I + i V)/sqrt(2)`` of one braid gate."""
    v = _dense_generator(gate, n_modes)
    return (np.eye(v.shape[0], dtype=np.complex128) + 1j * v) / np.sqrt(2.0)


def conjugate_dense(gate: BraidGate, mat: np.ndarray, n_modes: int) -> np.ndarray:
    """Exact ``U mat U^dagger`` via ``(I + iV) mat (I - iV) / 2``."""
    v = _dense_generator(gate, n_modes)
    eye = np.eye(v.shape[0], dtype=np.complex128)
    return (eye + 1j * v) @ mat @ (eye - 1j * v) / 2


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Product of the gate unitaries, later gates applied last."""
    _check_register(circuit.n_modes)
    out = np.eye(2 ** (circuit.n_modes // 2), dtype=np.complex128)
    for g in circuit.gates:
        out = dense_gate(g, circuit.n_modes) @ out
    return out


def stabilizer_projector(mats: list[np.ndarray]) -> np.ndarray:
    """Projector ``prod (I + S)/2`` onto the joint +1 eigenspace."""
    if not mats:
        raise ValueError("need at least one stabilizer matrix")
    dim = mats[0].shape[0]
    out = np.eye(dim, dtype=np.complex128)
    for s in mats:
        out = out @ (np.eye(dim, dtype=np.complex128) + s) / 2
    return out
