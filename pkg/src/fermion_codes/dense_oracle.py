"""Exact dense-matrix backend for verifying the symplectic constructions.

Everything here works with explicit complex matrices at small qubit/mode
counts (default cap 14 qubits, i.e. 16384-dimensional spaces) and serves as
an independent oracle for the bit-level algebra: Pauli products, Majorana
products, stabilizer projectors, and the claimed fermionic action of
logical errors.

All matrix entries are exact dyadics times powers of i, so the floating
tolerance (default 1e-12) only absorbs accumulation error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .majorana import MajoranaMonomial
from .pauli import PauliOp

__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_TOL",
    "dense_of_pauli",
    "apply_pauli",
    "dense_of_majorana",
    "code_projector",
    "CodeIsometry",
    "verify_logical_action",
    "verify_encoding",
    "CheckResult",
]

DEFAULT_CAP = 14
DEFAULT_TOL = 1e-12

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_MATS = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ValueError(f"{n} qubits exceeds the dense oracle cap of {cap}")


def dense_of_pauli(p: PauliOp, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Kronecker-product matrix of a Pauli, qubit 0 leftmost."""
    _check_cap(p.n_qubits, cap)
    m = np.array([[1j ** p.phase]], dtype=complex)
    for k in range(p.n_qubits):
        m = np.kron(m, _MATS[p.letter(k)])
    return m


def apply_pauli(p: PauliOp, mat: np.ndarray, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Compute ``dense(p) @ mat`` without materializing ``dense(p)``.

    Pauli action in the computational basis is a bit-flip permutation with
    signs: with qubit 0 as the leftmost factor, basis index bit (n-1-k)
    corresponds to qubit k.  Used to keep large-projector arithmetic cheap.
    """
    n = p.n_qubits
    _check_cap(n, cap)
    dim = 1 << n
    if mat.shape[0] != dim:
        raise ValueError("dimension mismatch")
    # Reverse masks: qubit k lives at basis bit (n-1-k).
    xmask = zmask = 0
    for k in range(n):
        if (p.x >> k) & 1:
            xmask |= 1 << (n - 1 - k)
        if (p.z >> k) & 1:
            zmask |= 1 << (n - 1 - k)
    idx = np.arange(dim)
    rows = idx ^ xmask
    # p|c> = i^(phase + y_count) (-1)^(popcount(zmask & c)) |c ^ xmask>.
    zbits = idx & zmask
    parity = np.zeros(dim, dtype=np.int64)
    while zbits.any():
        parity ^= zbits & 1
        zbits >>= 1
    amp = (1j ** p.phase) * (1j ** p.y_count) * (1.0 - 2.0 * parity)
    out = np.zeros_like(mat, dtype=complex)
    out[rows] = (amp[:, None] * mat[idx]) if mat.ndim == 2 else (amp * mat[idx])
    return out


def dense_of_majorana(m: MajoranaMonomial, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Jordan-Wigner matrix of a Majorana monomial, mode 0 leftmost.

    This is the reference faithful representation: ``c_j`` maps to
    Z...Z X I...I and ``c'_j`` to Z...Z Y I...I.
    """
    _check_cap(m.n_modes, cap)
    dim = 1 << m.n_modes
    out = (1j ** m.phase) * np.eye(dim, dtype=complex)
    for mode, kind in m.factors:
        g = np.array([[1]], dtype=complex)
        for j in range(m.n_modes):
            if j < mode:
                g = np.kron(g, _Z)
            elif j == mode:
                g = np.kron(g, _Y if kind else _X)
            else:
                g = np.kron(g, _I2)
        out = out @ g
    return out
