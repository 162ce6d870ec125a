"""Classification of Pauli errors against an encoding.

Every Pauli error falls into exactly one of three buckets:

* ``detectable``  -- anticommutes with at least one stabilizer generator;
  the syndrome records which.
* ``stabilizer``  -- zero syndrome and decomposable over the stabilizer
  generators alone (acts trivially on the code space).
* ``logical``     -- zero syndrome with a non-trivial fermionic action;
  the report carries the exact Majorana monomial it implements on the
  code space, from which mode weight and parity switching follow.

The zero-syndrome decomposition is a GF(2) solve over the symplectic
vectors of the stabilizer generators and the encoding's fermionic
generator images; phases are reconciled afterwards by exact Pauli
multiplication, so the reported fermionic image carries the right power
of i.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional

from . import gf2
from .encodings import Encoding, logical_generators
from .majorana import MajoranaMonomial, identity as majorana_identity
from .majorana import majorana_mul, mode_weight, parity_sector, render as render_majorana
from .pauli import PauliOp, commutes, pauli_mul, parse as parse_pauli, render as render_pauli
from .pauli import identity as pauli_identity, single_qubit, weight

__all__ = [
    "Syndrome",
    "ErrorReport",
    "ErrorClassifier",
    "InternalConsistencyError",
    "syndrome_of",
    "classify",
    "enumerate_errors",
    "random_xy_correction",
    "summarize",
    "reports_to_csv",
    "reports_to_json_dict",
]


class InternalConsistencyError(RuntimeError):
    """A zero-syndrome operator failed to decompose over the generators."""


@dataclass(frozen=True)
class Syndrome:
    """One bit per stabilizer generator; bit i set iff generator i flags."""

    bits: int
    n_generators: int

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def to_hex(self) -> str:
        return hex(self.bits)

    def flagged(self) -> list[int]:
        return [i for i in range(self.n_generators) if (self.bits >> i) & 1]


@dataclass
class ErrorReport:
    error: PauliOp
    syndrome: Syndrome
    category: str  # "detectable" | "stabilizer" | "logical"
    fermionic_image: Optional[MajoranaMonomial] = None
    parity_switching: bool = False
    mode_weight: Optional[int] = None


class ErrorClassifier:
    """Precomputed syndrome masks and GF(2) solver for one encoding."""

    def __init__(self, enc: Encoding):
        self.encoding = enc
        self.stabilizers = list(enc.stabilizer_generators)
        self.logical = logical_generators(enc)
        self._logical_items = list(self.logical.items())
        rows = self.stabilizers + [img for _, img in self._logical_items]
        self._solver = gf2.Gf2Solver(enc.symplectic_matrix(rows)) if rows else None
        self._n_stab = len(self.stabilizers)
        # Per-(qubit, letter) syndrome masks; syndromes XOR under products.
        self._masks: dict[tuple[int, str], int] = {}
        for q in range(enc.n_qubits):
            for letter in "XYZ":
                p = single_qubit(enc.n_qubits, q, letter)
                bits = 0
                for i, s in enumerate(self.stabilizers):
                    if not commutes(p, s):
                        bits |= 1 << i
                self._masks[(q, letter)] = bits

    # -- syndromes -----------------------------------------------------------

    def syndrome_of(self, error: PauliOp) -> Syndrome:
        if error.n_qubits != self.encoding.n_qubits:
            raise ValueError("error acts on the wrong number of qubits")
        bits = 0
        for q in error.support():
            bits ^= self._masks[(q, error.letter(q))]
        return Syndrome(bits, self._n_stab)

    # -- classification --------------------------------------------------------

    def classify(self, error: PauliOp) -> ErrorReport:
        syn = self.syndrome_of(error)
        if not syn.is_zero:
            return ErrorReport(error, syn, "detectable")
        combo = None
        if self._solver is not None:
            vec = self.encoding.symplectic_matrix([error])[0]
            combo = self._solver.solve(vec)
        elif error.x == 0 and error.z == 0:
            combo = []
        if combo is None:
            raise InternalConsistencyError(
                f"zero-syndrome operator {render_pauli(error)} does not decompose "
                "over the stabilizer and logical generators"
            )
        logical_part = [i - self._n_stab for i in combo if i >= self._n_stab]
        prod = pauli_identity(self.encoding.n_qubits)
        for i in combo:
            if i < self._n_stab:
                prod = pauli_mul(prod, self.stabilizers[i])
        mono = majorana_identity(self.encoding.n_primary_modes)
        for j in logical_part:
            label, img = self._logical_items[j]
            prod = pauli_mul(prod, img)
            mono = majorana_mul(mono, label)
        if (prod.x, prod.z) != (error.x, error.z):
            raise InternalConsistencyError("decomposition product mismatch")
        phase_fix = (error.phase - prod.phase) % 4
        if not logical_part:
            return ErrorReport(error, syn, "stabilizer")
        image = mono.scale(phase_fix)
        return ErrorReport(
            error,
            syn,
            "logical",
            fermionic_image=image,
            parity_switching=parity_sector(image) == "odd",
            mode_weight=mode_weight(image),
        )

    # -- enumeration -----------------------------------------------------------

    def enumerate(self, max_weight: int) -> list[ErrorReport]:
        """All Pauli errors of weight 1..max_weight, classified.

        Deterministic order: ascending qubit tuple, then letters X < Y < Z
        at each position.
        """
        n = self.encoding.n_qubits
        reports: list[ErrorReport] = []
        if max_weight >= 1:
            for q in range(n):
                for letter in "XYZ":
                    reports.append(self.classify(single_qubit(n, q, letter)))
        if max_weight >= 2:
            for q1 in range(n):
                for q2 in range(q1 + 1, n):
                    for l1 in "XYZ":
                        p1 = single_qubit(n, q1, l1)
                        for l2 in "XYZ":
                            err = pauli_mul(p1, single_qubit(n, q2, l2))
                            reports.append(self.classify(err))
        if max_weight >= 3:
            reports.extend(self._enumerate_higher(max_weight))
        return reports

    def _enumerate_higher(self, max_weight: int) -> list[ErrorReport]:
        import itertools

        n = self.encoding.n_qubits
        out = []
        for w in range(3, max_weight + 1):
            for qubits in itertools.combinations(range(n), w):
                for letters in itertools.product("XYZ", repeat=w):
                    err = pauli_identity(n)
                    for q, letter in zip(qubits, letters):
                        err = pauli_mul(err, single_qubit(n, q, letter))
                    out.append(self.classify(err))
        return out


def syndrome_of(enc: Encoding, error: PauliOp) -> Syndrome:
    return ErrorClassifier(enc).syndrome_of(error)


def classify(enc: Encoding, error: PauliOp) -> ErrorReport:
    return ErrorClassifier(enc).classify(error)


def enumerate_errors(enc: Encoding, max_weight: int) -> tuple[list[ErrorReport], dict]:
    """Exhaustive weight <= max_weight classification plus summary table."""
    clf = ErrorClassifier(enc)
    reports = clf.enumerate(max_weight)
    return reports, summarize(enc, reports)


def random_xy_correction(enc_or_clf, detected: ErrorReport, coin: int) -> ErrorReport:
    """Apply the random X-or-Y correction to a detected X/Y vertex error.

    The two errors share a syndrome (they differ by an undetectable Z), so
    the corrector flips a coin: the residual is the identity half the time
    and otherwise the Z phase error on that qubit.
    """
    clf = enc_or_clf if isinstance(enc_or_clf, ErrorClassifier) else ErrorClassifier(enc_or_clf)
    if coin not in (0, 1):
        raise ValueError("coin must be 0 or 1")
    if detected.category != "detectable":
        raise ValueError("random correction applies to detectable errors only")
    err = detected.error
    support = err.support()
    if len(support) != 1 or err.letter(support[0]) not in ("X", "Y"):
        raise ValueError("not a weight-1 X/Y error")
    q = support[0]
    label = clf.encoding.qubit_labels[q][0]
    if label not in ("primary", "vertex", "mode"):
        raise ValueError("random correction targets primary qubits only")
    syn_x = clf.syndrome_of(single_qubit(err.n_qubits, q, "X"))
    syn_y = clf.syndrome_of(single_qubit(err.n_qubits, q, "Y"))
    if syn_x != syn_y or syn_x != detected.syndrome:
        raise ValueError("syndrome is not X/Y-ambiguous on this qubit")
    correction = single_qubit(err.n_qubits, q, "X" if coin == 0 else "Y")
    return clf.classify(pauli_mul(correction, err))


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


def _report_row(report: ErrorReport) -> dict:
    return {
        "error": render_pauli(report.error),
        "weight": weight(report.error),
        "syndrome_hex": report.syndrome.to_hex(),
        "category": report.category,
        "fermionic_image": (
            render_majorana(report.fermionic_image)
            if report.fermionic_image is not None
            else ""
        ),
        "mode_weight": report.mode_weight if report.mode_weight is not None else "",
        "parity_switch": report.parity_switching,
    }


def summarize(enc: Encoding, reports: list[ErrorReport]) -> dict:
    """Deterministic summary: counts per classification cell, plus the
    boundary section listing undetectable non-phase errors of weight 2."""
    cells: dict[tuple, int] = {}
    boundary: list[dict] = []
    for r in reports:
        key = (
            weight(r.error),
            r.category,
            r.parity_switching,
            r.mode_weight if r.mode_weight is not None else -1,
        )
        cells[key] = cells.get(key, 0) + 1
        if (
            r.category == "logical"
            and weight(r.error) >= 2
            and r.fermionic_image is not None
            and not r.fermionic_image.is_phase_product()
        ):
            boundary.append(_report_row(r))
    cell_rows = [
        {
            "weight": w,
            "category": c,
            "parity_switching": p,
            "mode_weight": mw if mw >= 0 else None,
            "count": n,
        }
        for (w, c, p, mw), n in sorted(cells.items(), key=lambda kv: (
            kv[0][0], kv[0][1], kv[0][2], kv[0][3]))
    ]
    return {
        "total": len(reports),
        "cells": cell_rows,
        "undetectable_non_phase": boundary,
    }


def reports_to_csv(reports: list[ErrorReport]) -> str:
    buf = io.StringIO()
    fields = ["error", "weight", "syndrome_hex", "category",
              "fermionic_image", "mode_weight", "parity_switch"]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = _report_row(r)
        row["parity_switch"] = "true" if row["parity_switch"] else "false"
        writer.writerow(row)
    return buf.getvalue()


def reports_to_json_dict(enc: Encoding, reports: list[ErrorReport],
                         summary: dict, config: dict | None = None) -> dict:
    return {
        "config": config or {},
        "n_qubits": enc.n_qubits,
        "n_stabilizers": enc.n_stabilizers,
        "rows": [_report_row(r) for r in reports],
        "summary": summary,
    }


def report_from_row(enc_or_clf, row: dict) -> ErrorReport:
    """Re-parse a table row and re-classify it (round-trip check hook)."""
    clf = enc_or_clf if isinstance(enc_or_clf, ErrorClassifier) else ErrorClassifier(enc_or_clf)
    error = parse_pauli(row["error"], clf.encoding.n_qubits)
    return clf.classify(error)
