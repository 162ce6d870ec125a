"""Exact algebra of Majorana monomials over a set of fermionic modes.

Each mode ``j`` carries two Hermitian, self-inverse Majorana operators:
``c_j`` (kind 0, written ``gj``) and ``c'_j`` (kind 1, written ``gj'``).
Distinct Majoranas anticommute.  A monomial is a signed, ordered product of
Majorana factors; the canonical form keeps factors strictly ascending under
``(mode, kind)`` with ``c`` before ``c'`` on the same mode, and a global
phase that is an exponent of ``i`` mod 4.  Sorting into canonical order
accumulates a sign from the transposition parity, and repeated factors
cancel (``g**2 = 1``), so equality of canonical forms is operator equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal

__all__ = [
    "MajoranaMonomial",
    "ModeIndex",
    "monomial",
    "identity",
    "single",
    "majorana_mul",
    "mode_weight",
    "parity_sector",
    "render",
    "parse",
]

Factor = tuple[int, int]  # (mode, kind); kind 0 = c, 1 = c'

_FACTOR_RE = re.compile(r"g(\d+)('?)")


@dataclass(frozen=True)
class ModeIndex:
    """Fermionic mode id with its role in an encoding."""

    id: int
    role: Literal["primary", "auxiliary"] = "primary"


@dataclass(frozen=True)
class MajoranaMonomial:
    """Canonical signed product of Majorana operators.

    Invariants: ``factors`` strictly ascending, no repeats, ``phase`` in
    [0, 4).  Construct via :func:`monomial`, which canonicalizes.
    """

    n_modes: int
    factors: tuple[Factor, ...]
    phase: int

    def __post_init__(self) -> None:
        if not 0 <= self.phase < 4:
            object.__setattr__(self, "phase", self.phase % 4)
        for mode, kind in self.factors:
            if not 0 <= mode < self.n_modes:
                raise ValueError(f"mode {mode} out of range")
            if kind not in (0, 1):
                raise ValueError(f"kind must be 0 (c) or 1 (c'), got {kind}")
        if any(self.factors[i] >= self.factors[i + 1] for i in range(len(self.factors) - 1)):
            raise ValueError("factors not in strict canonical order; use monomial()")

    def is_identity(self) -> bool:
        return not self.factors and self.phase == 0

    def is_hermitian(self) -> bool:
        # Reversing k anticommuting factors costs (-1)^(k(k-1)/2).
        k = len(self.factors)
        return (2 * self.phase + k * (k - 1)) % 4 == 0

    def is_phase_product(self) -> bool:
        """True iff the monomial is a product of ``-i c_j c'_j`` dephasing factors.

        Phase-noise products act on each involved mode with both of its
        Majoranas; single Majoranas or hopping-like factors disqualify.
        """
        modes = [m for m, _ in self.factors]
        return all(
            (m, 0) in self.factors and (m, 1) in self.factors for m in modes
        )

    def mul(self, other: MajoranaMonomial) -> MajoranaMonomial:
        return majorana_mul(self, other)

    def scale(self, i_power: int) -> MajoranaMonomial:
        return MajoranaMonomial(self.n_modes, self.factors, (self.phase + i_power) % 4)

    def __str__(self) -> str:
        return render(self)


def _canonicalize(seq: list[Factor]) -> tuple[tuple[Factor, ...], int]:
    """Sort factors, counting transpositions; cancel repeated factors.

    Returns (canonical factors, extra phase exponent in {0, 2}).
    """
    seq = list(seq)
    swaps = 0
    # Insertion sort; strict comparison keeps equal factors adjacent
    # without swapping them past each other.
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            swaps += 1
            j -= 1
    out: list[Factor] = []
    for f in seq:
        if out and out[-1] == f:
            out.pop()  # g * g = 1, adjacent so no extra sign
        else:
            out.append(f)
    return tuple(out), (2 * swaps) % 4


def monomial(n_modes: int, factors: Iterable[Factor], phase: int = 0) -> MajoranaMonomial:
    """Build a monomial from factors in any order, canonicalizing exactly."""
    canon, extra = _canonicalize(list(factors))
    return MajoranaMonomial(n_modes, canon, (phase + extra) % 4)


def identity(n_modes: int) -> MajoranaMonomial:
    return MajoranaMonomial(n_modes, (), 0)


def single(n_modes: int, mode: int, kind: int) -> MajoranaMonomial:
    return MajoranaMonomial(n_modes, ((mode, kind),), 0)


def majorana_mul(a: MajoranaMonomial, b: MajoranaMonomial) -> MajoranaMonomial:
    """Exact product with sign from anticommutation and involution."""
    if a.n_modes != b.n_modes:
        raise ValueError(f"mode count mismatch: {a.n_modes} vs {b.n_modes}")
    return monomial(a.n_modes, list(a.factors) + list(b.factors), a.phase + b.phase)


def mode_weight(a: MajoranaMonomial) -> int:
    """Number of distinct fermionic modes acted on non-trivially."""
    return len({m for m, _ in a.factors})


def parity_sector(a: MajoranaMonomial) -> str:
    """``"odd"`` iff the monomial flips fermion parity (odd factor count)."""
    return "odd" if len(a.factors) % 2 else "even"


_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_PREFIX_PHASE = {v: k for k, v in _PHASE_PREFIX.items()}


def render(a: MajoranaMonomial) -> str:
    """Text form like ``-i g0 g0' g3``; the identity renders as ``+ 1``."""
    prefix = _PHASE_PREFIX[a.phase]
    if not a.factors:
        return prefix + " 1"
    parts = [f"g{m}" + ("'" if k else "") for m, k in a.factors]
    return prefix + " " + " ".join(parts)


def parse(text: str, n_modes: int) -> MajoranaMonomial:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text[:2] in ("+i", "-i"):
        prefix, rest = text[:2], text[2:]
    elif text[:1] in ("+", "-"):
        prefix, rest = text[:1], text[1:]
    else:
        prefix, rest = "+", text
    phase = _PREFIX_PHASE[prefix]
    rest = rest.strip()
    if rest in ("", "1"):
        return MajoranaMonomial(n_modes, (), phase)
    factors: list[Factor] = []
    consumed = 0
    for m in _FACTOR_RE.finditer(rest):
        factors.append((int(m.group(1)), 1 if m.group(2) else 0))
        consumed += len(m.group(0))
    if consumed != len(rest.replace(" ", "")):
        raise ValueError(f"cannot parse Majorana string {text!r}")
    return monomial(n_modes, factors, phase)
