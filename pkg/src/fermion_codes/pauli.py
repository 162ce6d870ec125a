"""Exact n-qubit Pauli operators in a symplectic GF(2) representation.

A Pauli operator is stored as a pair of bit-masks ``(x, z)`` plus a global
phase, which is an exponent of the imaginary unit modulo 4.  Qubit ``k``
carries

=========  =========  ========
x bit k    z bit k    letter
=========  =========  ========
0          0          I
1          0          X
0          1          Z
1          1          Y
=========  =========  ========

with the convention ``Y = i * X * Z`` (the standard Pauli matrix).  The
operator represented is ``i**phase`` times the tensor product of the
letters, qubit 0 being the leftmost tensor factor.

All arithmetic is exact integer arithmetic; no floating point is involved.
Bit-masks are plain Python integers, so operators of any width are packed
into machine words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "PauliOp",
    "identity",
    "single_qubit",
    "from_letters",
    "pauli_mul",
    "commutes",
    "weight",
    "is_hermitian",
    "render",
    "parse",
]

_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {v: k for k, v in _PHASE_PREFIX.items()}
_TERM_RE = re.compile(r"([IXYZ])(\d+)")


@dataclass(frozen=True)
class PauliOp:
    """An n-qubit Pauli operator with exact global phase.

    ``phase`` is the exponent of ``i`` multiplying the bare tensor product
    of letters (see module docstring).  Instances are immutable values and
    safe to share between threads.
    """

    n_qubits: int
    x: int
    z: int
    phase: int

    def __post_init__(self) -> None:
        mask = (1 << self.n_qubits) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit-mask exceeds qubit count")
        if not 0 <= self.phase < 4:
            object.__setattr__(self, "phase", self.phase % 4)

    # -- single-qubit views ------------------------------------------------

    def letter(self, k: int) -> str:
        """Letter (I/X/Y/Z) carried by qubit ``k``."""
        xb = (self.x >> k) & 1
        zb = (self.z >> k) & 1
        return "IXZY"[xb + 2 * zb]

    def support(self) -> list[int]:
        """Indices of qubits acted on non-trivially, ascending."""
        bits = self.x | self.z
        return [k for k in range(self.n_qubits) if (bits >> k) & 1]

    # -- derived quantities --------------------------------------------------

    @property
    def y_count(self) -> int:
        return (self.x & self.z).bit_count()

    def is_identity(self) -> bool:
        """True iff the operator is exactly the identity (phase 0)."""
        return self.x == 0 and self.z == 0 and self.phase == 0

    def mul(self, other: PauliOp) -> PauliOp:
        return pauli_mul(self, other)

    def scale(self, i_power: int) -> PauliOp:
        """Multiply by ``i**i_power``."""
        return PauliOp(self.n_qubits, self.x, self.z, (self.phase + i_power) % 4)

    def adjoint(self) -> PauliOp:
        return PauliOp(self.n_qubits, self.x, self.z, (-self.phase) % 4)

    def __str__(self) -> str:
        return render(self)


def identity(n_qubits: int) -> PauliOp:
    return PauliOp(n_qubits, 0, 0, 0)


def single_qubit(n_qubits: int, k: int, letter: str) -> PauliOp:
    """Pauli with one non-trivial letter at qubit ``k``, phase 0."""
    if not 0 <= k < n_qubits:
        raise ValueError(f"qubit index {k} out of range for {n_qubits} qubits")
    if letter == "X":
        return PauliOp(n_qubits, 1 << k, 0, 0)
    if letter == "Y":
        return PauliOp(n_qubits, 1 << k, 1 << k, 0)
    if letter == "Z":
        return PauliOp(n_qubits, 0, 1 << k, 0)
    if letter == "I":
        return identity(n_qubits)
    raise ValueError(f"unknown Pauli letter {letter!r}")


def from_letters(n_qubits: int, letters: dict[int, str], phase: int = 0) -> PauliOp:
    """Pauli from a ``{qubit: letter}`` mapping times ``i**phase``."""
    x = z = 0
    for k, letter in letters.items():
        if not 0 <= k < n_qubits:
            raise ValueError(f"qubit index {k} out of range")
        if letter in ("X", "Y"):
            x |= 1 << k
        if letter in ("Z", "Y"):
            z |= 1 << k
        if letter not in ("I", "X", "Y", "Z"):
            raise ValueError(f"unknown Pauli letter {letter!r}")
    return PauliOp(n_qubits, x, z, phase % 4)


def _phase_xz(p: PauliOp) -> int:
    # Exponent of i when the operator is written as i**e * prod X^x Z^z.
    return (p.phase + p.y_count) % 4


def pauli_mul(a: PauliOp, b: PauliOp) -> PauliOp:
    """Exact product ``a * b`` with phase tracked mod 4.

    Internally both factors are rewritten as ``i**e * prod_k X^x Z^z``;
    commuting each Z of ``a`` past each X of ``b`` on the same qubit
    contributes a factor of -1.
    """
    if a.n_qubits != b.n_qubits:
        raise ValueError(
            f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}"
        )
    x = a.x ^ b.x
    z = a.z ^ b.z
    swaps = (a.z & b.x).bit_count()
    e = (_phase_xz(a) + _phase_xz(b) + 2 * swaps) % 4
    y_res = (x & z).bit_count()
    return PauliOp(a.n_qubits, x, z, (e - y_res) % 4)


def commutes(a: PauliOp, b: PauliOp) -> bool:
    """True iff ``a`` and ``b`` commute (symplectic inner product is 0).

    Phase-independent: only the (x, z) bit-masks enter.
    """
    if a.n_qubits != b.n_qubits:
        raise ValueError(
            f"qubit count mismatch: {a.n_qubits} vs {b.n_qubits}"
        )
    return ((a.x & b.z) ^ (a.z & b.x)).bit_count() % 2 == 0


def weight(a: PauliOp) -> int:
    """Number of qubits acted on non-trivially."""
    return (a.x | a.z).bit_count()


def is_hermitian(a: PauliOp) -> bool:
    """True iff ``a`` equals its adjoint.

    The letters are Hermitian, so this is a parity condition on the phase;
    equivalently, in X^x Z^z form it is a parity check on the Y-count.
    """
    return a.phase % 2 == 0


def render(p: PauliOp) -> str:
    """Text form like ``+iY0 X3 Z5``; the identity renders as ``+I``."""
    prefix = _PHASE_PREFIX[p.phase]
    terms = [f"{p.letter(k)}{k}" for k in p.support()]
    if not terms:
        return prefix + "I"
    return prefix + " ".join(terms)


def parse(text: str, n_qubits: int) -> PauliOp:
    """Inverse of :func:`render`; ``parse(render(p), p.n_qubits) == p``."""
    text = text.strip()
    if text[:2] in ("+i", "-i"):
        prefix, rest = text[:2], text[2:]
    elif text[:1] in ("+", "-"):
        prefix, rest = text[:1], text[1:]
    else:
        prefix, rest = "+", text
    phase = _PREFIX_PHASE[prefix]
    rest = rest.strip()
    if rest in ("", "I"):
        return PauliOp(n_qubits, 0, 0, phase)
    letters: dict[int, str] = {}
    consumed = 0
    for m in _TERM_RE.finditer(rest):
        k = int(m.group(2))
        if k in letters:
            raise ValueError(f"duplicate qubit index {k} in {text!r}")
        letters[k] = m.group(1)
        consumed += len(m.group(0))
    if consumed != len(rest.replace(" ", "")):
        raise ValueError(f"cannot parse Pauli string {text!r}")
    return from_letters(n_qubits, letters, phase)
