"""Fermion-to-qubit stabilizer encodings on rectangular lattices.

Three encodings are built here:

* ``jw``  -- the plain Jordan-Wigner transform on a line of modes; no
  stabilizers, Majoranas map to Z-strings capped by X or Y.
* ``vc``  -- the auxiliary-site encoding: every primary site gets an
  auxiliary partner, modes are ordered primary/auxiliary interleaved
  along a snake path, and the stabilizers are encoded pairs of auxiliary
  Majoranas.  The pairing follows the closed-curve diagrams: vertical
  capsules pair the lower site's c with the upper site's c', the top row
  pairs c-c and the bottom row c'-c' horizontally, and lattices with an
  odd column count use the special last-column pattern with self-paired
  corners (which contribute bare Z stabilizers on auxiliary qubits).
* ``dk``  -- the vertex/odd-face encoding: a qubit per site plus a qubit
  per odd face, fermionic edge operators mapped to Paulis of weight at
  most 3, and one loop stabilizer per even face.  Optional variants:
  shaved corners (single Majoranas become weight-2) and an appended
  global fermion-parity stabilizer.

Mode indexing: JW/VC number primary modes along the snake order, DK uses
row-major site order.  Encodings are immutable after construction and all
builders are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from . import gf2
from .lattice import Edge, Face, Lattice, Site, build_lattice, default_jw_order, shave_corner
from .majorana import MajoranaMonomial, majorana_mul, monomial
from .majorana import single as majorana_single
from .pauli import PauliOp, commutes, from_letters, identity, is_hermitian, parse, pauli_mul, render, single_qubit

__all__ = [
    "Encoding",
    "VariantFlags",
    "build_jw",
    "build_vc",
    "build_dk",
    "encode_hubbard_term",
    "logical_generators",
    "embed_in_spin_layer",
    "encoding_to_dict",
    "encoding_from_dict",
]


@dataclass(frozen=True)
class VariantFlags:
    vc_first_pair_swapped: bool = False
    dk_corner_shaved: bool = False
    parity_stabilizer_included: bool = False


PairEnd = tuple[int, int]  # (site order index, Majorana kind)


@dataclass
class Encoding:
    """A built encoding: layout, stabilizers, operator images.

    ``majorana_images`` is keyed by ``(role, mode, kind)`` with role "p"
    (primary) or "a" (auxiliary); it is populated for jw/vc.  DK encodings
    instead populate ``edge_images`` (keyed by ordered site-id pairs, both
    directions present, reversal flips the sign), ``vertex_images`` and,
    when the full Fock space is encoded, ``corner_majorana_images``.
    """

    kind: str
    lattice: Optional[Lattice]
    n_qubits: int
    n_primary_modes: int
    qubit_labels: tuple[tuple, ...]
    stabilizer_generators: tuple[PauliOp, ...]
    variant_flags: VariantFlags
    majorana_images: dict[tuple[str, int, int], PauliOp] = field(default_factory=dict)
    edge_images: dict[tuple[int, int], PauliOp] = field(default_factory=dict)
    vertex_images: dict[int, PauliOp] = field(default_factory=dict)
    corner_majorana_images: dict[int, tuple[PauliOp, PauliOp]] = field(default_factory=dict)
    vc_pairing: tuple[tuple[PairEnd, PairEnd], ...] = ()
    vc_pair_stabilizer: dict[tuple[int, int], PauliOp] = field(default_factory=dict)
    parity_stabilizer_redundant: bool = False

    @property
    def n_stabilizers(self) -> int:
        return len(self.stabilizer_generators)

    def symplectic_matrix(self, ops: list[PauliOp]) -> np.ndarray:
        """Rows = [x-bits | z-bits] of the given operators."""
        M = np.zeros((len(ops), 2 * self.n_qubits), dtype=np.uint8)
        for r, p in enumerate(ops):
            for k in range(self.n_qubits):
                M[r, k] = (p.x >> k) & 1
                M[r, self.n_qubits + k] = (p.z >> k) & 1
        return M

    @property
    def stabilizer_rank(self) -> int:
        if not self.stabilizer_generators:
            return 0
        return gf2.rank(self.symplectic_matrix(list(self.stabilizer_generators)))

    @property
    def code_dimension_log2(self) -> int:
        """log2 of the code-space dimension, n_qubits - rank."""
        return self.n_qubits - self.stabilizer_rank

    def site_mode(self, s: Site) -> int:
        """Primary mode index of a lattice site."""
        if self.kind == "dk":
            return self.lattice.site_index(s)
        order = _vc_site_order(self.lattice)
        return order.index(s)


# ---------------------------------------------------------------------------
# Jordan-Wigner building blocks
# ---------------------------------------------------------------------------


def _jw_string(n_qubits: int, position: int, kind: int) -> PauliOp:
    """(prod_{i<position} Z_i) X_position, or Y for kind 1 (c')."""
    z = (1 << position) - 1
    x = 1 << position
    if kind:
        z |= 1 << position
    return PauliOp(n_qubits, x, z, 0)


def build_jw(n_modes: int) -> Encoding:
    """Plain Jordan-Wigner encoding of a line of modes; no stabilizers."""
    if n_modes < 1:
        raise ValueError("need at least one mode")
    images = {}
    for j in range(n_modes):
        images[("p", j, 0)] = _jw_string(n_modes, j, 0)
        images[("p", j, 1)] = _jw_string(n_modes, j, 1)
    return Encoding(
        kind="jw",
        lattice=None,
        n_qubits=n_modes,
        n_primary_modes=n_modes,
        qubit_labels=tuple(("mode", j) for j in range(n_modes)),
        stabilizer_generators=(),
        variant_flags=VariantFlags(),
        majorana_images=images,
    )


# ---------------------------------------------------------------------------
# Verstraete-Cirac
# ---------------------------------------------------------------------------


def _vc_site_order(lat: Lattice) -> tuple[Site, ...]:
    return default_jw_order(lat)


def _vc_pairing(lat: Lattice) -> tuple[tuple[PairEnd, PairEnd], ...]:
    """Auxiliary Majorana pairing per the closed-curve diagrams.

    Returns pairs of (site order index, kind), each pair sorted by index;
    a self-pair repeats the index with kinds (0, 1).  Every auxiliary
    Majorana is used exactly once.
    """
    order = _vc_site_order(lat)
    idx = {s: i for i, s in enumerate(order)}
    rows, cols = lat.rows, lat.cols
    vert_cols = cols if cols % 2 == 0 else cols - 1
    pairs: list[tuple[PairEnd, PairEnd]] = []

    for c in range(vert_cols):
        for r in range(rows - 1):
            i, j = idx[Site(r, c)], idx[Site(r + 1, c)]
            pairs.append(((i, 1), (j, 0)))  # capsule: c' above, c below
    for c in range(0, vert_cols - 1, 2):
        a, b = idx[Site(0, c)], idx[Site(0, c + 1)]
        pairs.append(((min(a, b), 0), (max(a, b), 0)))  # top row: c-c loops
    bottom = rows - 1
    for c in range(0, vert_cols - 1, 2):
        a, b = idx[Site(bottom, c)], idx[Site(bottom, c + 1)]
        pairs.append(((min(a, b), 1), (max(a, b), 1)))  # bottom row: c'-c'

    if cols % 2 == 1:
        c = cols - 1
        k = idx[Site(0, c)]
        pairs.append(((k, 0), (k, 1)))  # self-paired corner
        r = 1
        while r + 1 <= rows - 1:
            i, j = idx[Site(r, c)], idx[Site(r + 1, c)]
            pairs.append(((i, 1), (j, 0)))
            pairs.append(((i, 0), (j, 1)))  # double link
            r += 2
        if rows % 2 == 0:
            k = idx[Site(bottom, c)]
            pairs.append(((k, 0), (k, 1)))

    used = [end for pair in pairs for end in pair]
    if len(used) != 2 * len(order) or len(set(used)) != len(used):
        raise AssertionError("auxiliary Majorana pairing is not a perfect matching")
    return tuple(pairs)


def build_vc(lat: Lattice, swap_first_pair: bool = False) -> Encoding:
    """Auxiliary-site encoding with paired-Majorana stabilizers.

    Qubit layout: one primary and one auxiliary qubit per site, ordered
    along the snake with the auxiliary directly after its primary (before
    it for site 0 when ``swap_first_pair`` is set).
    """
    if lat.boundary != "open":
        raise ValueError("periodic boundaries are not supported by this encoding")
    if lat.shaved_corners:
        raise ValueError("shaved lattices are not supported by this encoding")
    order = _vc_site_order(lat)
    n = len(order)
    n_qubits = 2 * n

    pos_primary = {k: 2 * k for k in range(n)}
    pos_aux = {k: 2 * k + 1 for k in range(n)}
    if swap_first_pair:
        pos_primary[0], pos_aux[0] = 1, 0

    images: dict[tuple[str, int, int], PauliOp] = {}
    for k in range(n):
        for kind in (0, 1):
            images[("p", k, kind)] = _jw_string(n_qubits, pos_primary[k], kind)
            images[("a", k, kind)] = _jw_string(n_qubits, pos_aux[k], kind)

    pairing = _vc_pairing(lat)
    stabilizers: list[PauliOp] = []
    pair_stab: dict[tuple[int, int], PauliOp] = {}
    for (i, ki), (j, kj) in pairing:
        if i == j:
            s = pauli_mul(images[("a", i, 0)], images[("a", i, 1)]).scale(3)
        else:
            s = pauli_mul(images[("a", i, ki)], images[("a", j, kj)])
            s = s.scale(1 if ki == 0 else 3)
        if not is_hermitian(s):
            raise AssertionError(f"pair stabilizer for {(i, ki), (j, kj)} is not Hermitian")
        stabilizers.append(s)
        pair_stab.setdefault((i, j), s)

    labels: list[tuple] = [()] * n_qubits
    for k, site in enumerate(order):
        labels[pos_primary[k]] = ("primary", site.row, site.col)
        labels[pos_aux[k]] = ("aux", site.row, site.col)

    return Encoding(
        kind="vc",
        lattice=lat,
        n_qubits=n_qubits,
        n_primary_modes=n,
        qubit_labels=tuple(labels),
        stabilizer_generators=tuple(stabilizers),
        variant_flags=VariantFlags(vc_first_pair_swapped=swap_first_pair),
        majorana_images=images,
        vc_pairing=pairing,
        vc_pair_stabilizer=pair_stab,
    )


# ---------------------------------------------------------------------------
# Derby-Klassen style vertex/face encoding
# ---------------------------------------------------------------------------

_EDGE_FACE_LETTER = {"horizontal": "Y", "vertical-up": "X", "vertical-down": "X"}


def _dk_edge_image(lat: Lattice, e: Edge, n_qubits: int,
                   q_site: dict[Site, int], q_face: dict[Face, int]) -> PauliOp:
    qi, qj = q_site[e.tail], q_site[e.head]
    letters = {qi: "X", qj: "Y"}
    f = lat.odd_face_of_edge(e)
    if f is not None:
        letters[q_face[f]] = _EDGE_FACE_LETTER[e.kind]
    phase = 2 if e.kind == "vertical-up" else 0
    return from_letters(n_qubits, letters, phase)


def _dk_loop(edge_images: dict[tuple[int, int], PauliOp],
             cycle: list[int]) -> PauliOp:
    """i^(|p|-1) prod E_(p_i p_i+1) around a closed site-id cycle."""
    n_steps = len(cycle)
    first = edge_images[(cycle[0], cycle[1 % n_steps])]
    out = first
    for a, b in zip(cycle[1:], cycle[2:] + cycle[:1]):
        out = pauli_mul(out, edge_images[(a, b)])
    return out.scale(n_steps % 4)


def build_dk(lat: Lattice, parity_stabilizer: bool = False) -> Encoding:
    """Vertex/odd-face encoding with even-face loop stabilizers."""
    sites = lat.sites
    odd_faces = lat.odd_faces
    n_sites = len(sites)
    n_qubits = n_sites + len(odd_faces)
    q_site = {s: i for i, s in enumerate(sites)}
    q_face = {f: n_sites + j for j, f in enumerate(odd_faces)}
    sid = lat.site_index

    vertex_images = {i: single_qubit(n_qubits, i, "Z") for i in range(n_sites)}

    edge_images: dict[tuple[int, int], PauliOp] = {}
    for e in lat.edges:
        if e.kind == "diagonal-corner":
            continue
        img = _dk_edge_image(lat, e, n_qubits, q_site, q_face)
        edge_images[(sid(e.tail), sid(e.head))] = img
        edge_images[(sid(e.head), sid(e.tail))] = img.scale(2)

    # Diagonal replacement edges: Z on the face qubit, vertex letters taken
    # from the remaining face edges, sign fixed by the 3-cycle identity.
    for e in lat.edges:
        if e.kind != "diagonal-corner":
            continue
        face = lat._diagonal_face(e)
        a, b = sid(e.tail), sid(e.head)
        fq = q_face[face]
        face_edges = [x for x in lat.edges_of_face(face) if x.kind != "diagonal-corner"]
        letters: dict[int, str] = {fq: "Z"}
        third = None
        for fe in face_edges:
            img = edge_images[(sid(fe.tail), sid(fe.head))]
            for s in fe.sites:
                if sid(s) in (a, b):
                    letters[sid(s)] = img.letter(sid(s))
                else:
                    third = sid(s)
        base = from_letters(n_qubits, letters, 0)
        # Cycle a -> third -> b -> a must encode to +identity.
        trial = dict(edge_images)
        trial[(a, b)] = base
        trial[(b, a)] = base.scale(2)
        loop = _dk_loop(trial, [a, third, b])
        if loop == identity(n_qubits).scale(2):
            base = base.scale(2)
        edge_images[(a, b)] = base
        edge_images[(b, a)] = base.scale(2)
        if not _dk_loop(edge_images, [a, third, b]).is_identity():
            raise AssertionError("shaved-corner 3-cycle does not close to +1")

    stabilizers: list[PauliOp] = []
    for f in lat.even_faces:
        tl, tr, br, bl = lat.face_corners(f)
        cyc = [sid(tl), sid(tr), sid(br), sid(bl)]
        s = _dk_loop(edge_images, cyc)
        if not is_hermitian(s):
            raise AssertionError(f"even-face stabilizer at {f} is not Hermitian")
        stabilizers.append(s)

    # Loop condition: odd-face cycles encode to +identity already.
    for f in lat.odd_faces:
        corners = [s for s in lat.face_corners(f) if lat.has_site(s)]
        if len(corners) == 4:
            tl, tr, br, bl = lat.face_corners(f)
            loop = _dk_loop(edge_images, [sid(tl), sid(tr), sid(br), sid(bl)])
            if not loop.is_identity():
                raise AssertionError(f"odd-face loop at {f} is not +1")

    # Corner sites touching only an odd face carry weight-1 (or weight-2
    # after shaving) single-Majorana images.
    corner_images: dict[int, tuple[PauliOp, PauliOp]] = {}
    if lat.boundary == "open":
        for corner in lat.corner_sites():
            if not lat.has_site(corner):
                continue
            faces = [f for f in lat.faces if corner in lat.face_corners(f)]
            if len(faces) != 1 or not lat.face_is_odd(faces[0]) or lat.face_is_shaved(faces[0]):
                continue
            i = sid(corner)
            incident = [img for (t, h), img in edge_images.items() if t == i]
            cands = [p for p in (single_qubit(n_qubits, i, "X"), single_qubit(n_qubits, i, "Y"))
                     if all(not commutes(p, img) for img in incident)]
            if len(cands) != 1:
                raise AssertionError(f"corner Majorana at site {i} not uniquely determined")
            c_img = cands[0]
            cprime_img = pauli_mul(c_img, vertex_images[i]).scale(1)
            corner_images[i] = (c_img, cprime_img)
        for corner in sorted(lat.shaved_corners):
            corner_images.update(
                _dk_shaved_majoranas(lat, corner, n_qubits, q_site, q_face,
                                     edge_images, vertex_images, stabilizers)
            )

    flags = VariantFlags(
        dk_corner_shaved=bool(lat.shaved_corners),
        parity_stabilizer_included=parity_stabilizer,
    )
    enc = Encoding(
        kind="dk",
        lattice=lat,
        n_qubits=n_qubits,
        n_primary_modes=n_sites,
        qubit_labels=tuple(
            [("vertex", s.row, s.col) for s in sites]
            + [("face", f.row, f.col) for f in odd_faces]
        ),
        stabilizer_generators=tuple(stabilizers),
        variant_flags=flags,
        edge_images=edge_images,
        vertex_images=vertex_images,
        corner_majorana_images=corner_images,
    )
    if parity_stabilizer:
        enc = _append_parity_stabilizer(enc)
    return enc


def _dk_shaved_majoranas(lat, corner, n_qubits, q_site, q_face,
                         edge_images, vertex_images, stabilizers):
    """Weight-2 single-Majorana images on the two sites next to a shaved corner.

    The c-type image must anticommute with the site's vertex operator and
    all incident edge operators, and commute with everything else; its
    support is the vertex qubit plus the corner face qubit, so a small
    letter search pins it down uniquely.
    """
    sid = lat.site_index
    face = next(f for f in lat.faces
                if corner in lat.face_corners(f) and lat.face_is_shaved(f))
    fq = q_face[face]
    out: dict[int, tuple[PauliOp, PauliOp]] = {}
    for s in lat.face_corners(face):
        if not lat.has_site(s) or s not in _shaved_neighbours(lat, corner):
            continue
        i = sid(s)
        incident_keys = {k for k in edge_images if k[0] == i or k[1] == i}
        sol = None
        for lv in "XY":
            for lf in "XYZ":
                p = from_letters(n_qubits, {i: lv, fq: lf})
                if not all(not commutes(p, edge_images[k]) for k in incident_keys):
                    continue
                ok_rest = all(
                    commutes(p, img)
                    for k, img in edge_images.items()
                    if k not in incident_keys
                ) and all(commutes(p, st) for st in stabilizers) and all(
                    commutes(p, v) for j, v in vertex_images.items() if j != i
                )
                if ok_rest:
                    if sol is not None:
                        raise AssertionError("shaved corner Majorana not unique")
                    sol = p
        if sol is None:
            raise AssertionError(f"no weight-2 Majorana image at shaved corner site {i}")
        out[i] = (sol, pauli_mul(sol, vertex_images[i]).scale(1))
    return out


def _shaved_neighbours(lat: Lattice, corner: Site) -> tuple[Site, Site]:
    vert = Site(1, corner.col) if corner.row == 0 else Site(lat.rows - 2, corner.col)
    horiz = Site(corner.row, 1) if corner.col == 0 else Site(corner.row, lat.cols - 2)
    return (vert, horiz)


def _append_parity_stabilizer(enc: Encoding) -> Encoding:
    """Append prod_j Z_vertex as a generator, unless already enforced."""
    n_sites = enc.n_primary_modes
    parity = identity(enc.n_qubits)
    for i in range(n_sites):
        parity = pauli_mul(parity, enc.vertex_images[i])
    M = enc.symplectic_matrix(list(enc.stabilizer_generators))
    v = enc.symplectic_matrix([parity])[0]
    solver = gf2.Gf2Solver(M)
    combo = solver.solve(v)
    if combo is not None:
        prod = identity(enc.n_qubits)
        for i in combo:
            prod = pauli_mul(prod, enc.stabilizer_generators[i])
        if prod != parity:
            raise AssertionError(
                "parity operator lies in the stabilizer span with the wrong sign"
            )
        return replace(enc, parity_stabilizer_redundant=True)
    return replace(
        enc,
        stabilizer_generators=enc.stabilizer_generators + (parity,),
    )


# ---------------------------------------------------------------------------
# Logical generators and Hubbard terms
# ---------------------------------------------------------------------------


def logical_generators(enc: Encoding) -> dict[MajoranaMonomial, PauliOp]:
    """Fermionic generating set with its Pauli images.

    JW/VC: every primary Majorana.  DK: every vertex operator
    (-i c_j c'_j), every oriented edge operator (-i c_a c_b), plus the
    corner single Majoranas when the full Fock space is encoded.
    """
    M = enc.n_primary_modes
    out: dict[MajoranaMonomial, PauliOp] = {}
    if enc.kind in ("jw", "vc"):
        for j in range(M):
            for kind in (0, 1):
                out[majorana_single(M, j, kind)] = enc.majorana_images[("p", j, kind)]
        return out
    for j in sorted(enc.vertex_images):
        out[monomial(M, [(j, 0), (j, 1)], 3)] = enc.vertex_images[j]
    seen = set()
    for (a, b) in sorted(enc.edge_images):
        if (b, a) in seen:
            continue
        seen.add((a, b))
        out[monomial(M, [(a, 0), (b, 0)], 3)] = enc.edge_images[(a, b)]
    for i in sorted(enc.corner_majorana_images):
        c_img, cp_img = enc.corner_majorana_images[i]
        out[majorana_single(M, i, 0)] = c_img
        out[majorana_single(M, i, 1)] = cp_img
    return out


def _collect_terms(raw: list[tuple[complex, PauliOp]]) -> list[tuple[float, PauliOp]]:
    """Move Pauli phases into coefficients; assert the result is real."""
    acc: dict[tuple[int, int, int], complex] = {}
    ops: dict[tuple[int, int, int], PauliOp] = {}
    for coeff, p in raw:
        bare = PauliOp(p.n_qubits, p.x, p.z, 0)
        key = (p.n_qubits, p.x, p.z)
        acc[key] = acc.get(key, 0) + coeff * (1j ** p.phase)
        ops[key] = bare
    out = []
    for key, c in acc.items():
        if abs(c) < 1e-15:
            continue
        if abs(c.imag) > 1e-12:
            raise AssertionError("encoded term has a non-real coefficient")
        out.append((float(c.real), ops[key]))
    out.sort(key=lambda t: (t[1].x, t[1].z))
    return out


def _vc_local_hopping(enc: Encoding, i: int, k: int) -> list[tuple[complex, PauliOp]]:
    ci = enc.majorana_images[("p", i, 0)]
    cpi = enc.majorana_images[("p", i, 1)]
    ck = enc.majorana_images[("p", k, 0)]
    cpk = enc.majorana_images[("p", k, 1)]
    # i/2 (c_i c'_k - c'_i c_k)
    t1 = pauli_mul(ci, cpk).scale(1)
    t2 = pauli_mul(cpi, ck).scale(3)
    terms = [(0.5, t1), (0.5, t2)]
    if enc.kind == "vc" and k != i + 1:
        stab = enc.vc_pair_stabilizer.get((i, k))
        if stab is None:
            raise AssertionError(f"no pair stabilizer for sites ({i},{k})")
        terms = [(c, pauli_mul(p, stab)) for c, p in terms]
    return terms


def encode_hubbard_term(enc: Encoding, term: tuple, spin: int | None = None):
    """Encode a lattice-Hamiltonian term as a list of (coeff, Pauli) pairs.

    ``term`` is ("hopping", i, k), ("number", j) or ("onsite", j) with
    primary-mode indices.  Hopping and number act on the encoding's own
    qubits, unless ``spin`` (0 or 1) asks for embedding into the doubled
    two-layer layout; the onsite term always lives on the doubled layout,
    being a product of the two layers' number operators.
    """
    name = term[0]
    if name == "hopping":
        _, i, k = term
        i, k = min(i, k), max(i, k)
        if i == k:
            raise ValueError("hopping needs two distinct sites")
        _require_adjacent(enc, i, k)
        if enc.kind in ("jw", "vc"):
            raw = _vc_local_hopping(enc, i, k)
        else:
            # -(i/2) (E_ik V_k + V_i E_ik)
            e = enc.edge_images[(i, k)]
            t1 = pauli_mul(e, enc.vertex_images[k]).scale(3)
            t2 = pauli_mul(enc.vertex_images[i], e).scale(3)
            raw = [(0.5, t1), (0.5, t2)]
        terms = _collect_terms(raw)
    elif name == "number":
        _, j = term
        zj = _mode_z_image(enc, j)
        terms = _collect_terms([(0.5, identity(enc.n_qubits)), (-0.5, zj)])
    elif name == "onsite":
        _, j = term
        zj = _mode_z_image(enc, j)
        up = embed_in_spin_layer(zj, 0)
        dn = embed_in_spin_layer(zj, 1)
        ident = identity(2 * enc.n_qubits)
        terms = _collect_terms(
            [(0.25, ident), (-0.25, up), (-0.25, dn), (0.25, pauli_mul(up, dn))]
        )
        return terms
    else:
        raise ValueError(f"unknown term {name!r}")
    if spin is not None:
        terms = [(c, embed_in_spin_layer(p, spin)) for c, p in terms]
    return terms


def _mode_z_image(enc: Encoding, j: int) -> PauliOp:
    """Image of the dephasing operator -i c_j c'_j (a single Z)."""
    if enc.kind in ("jw", "vc"):
        img = pauli_mul(
            enc.majorana_images[("p", j, 0)], enc.majorana_images[("p", j, 1)]
        ).scale(3)
        return img
    return enc.vertex_images[j]


def _require_adjacent(enc: Encoding, i: int, k: int) -> None:
    if enc.lattice is None:
        return
    lat = enc.lattice
    if enc.kind == "vc":
        order = _vc_site_order(lat)
        a, b = order[i], order[k]
    else:
        a, b = lat.sites[i], lat.sites[k]
    if not lat.has_edge(a, b):
        raise ValueError(f"sites {i} and {k} are not adjacent on the lattice")


def embed_in_spin_layer(p: PauliOp, layer: int) -> PauliOp:
    """Embed into the two-layer spinful layout (qubit q -> 2q + layer)."""
    if layer not in (0, 1):
        raise ValueError("layer must be 0 (up) or 1 (down)")
    x = z = 0
    for k in range(p.n_qubits):
        if (p.x >> k) & 1:
            x |= 1 << (2 * k + layer)
        if (p.z >> k) & 1:
            z |= 1 << (2 * k + layer)
    return PauliOp(2 * p.n_qubits, x, z, p.phase)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def encoding_to_dict(enc: Encoding) -> dict:
    d = {
        "kind": enc.kind,
        "lattice": enc.lattice.to_dict() if enc.lattice else None,
        "n_qubits": enc.n_qubits,
        "n_primary_modes": enc.n_primary_modes,
        "qubit_layout": [list(t) for t in enc.qubit_labels],
        "stabilizer_generators": [render(p) for p in enc.stabilizer_generators],
        "variant_flags": {
            "vc_first_pair_swapped": enc.variant_flags.vc_first_pair_swapped,
            "dk_corner_shaved": enc.variant_flags.dk_corner_shaved,
            "parity_stabilizer_included": enc.variant_flags.parity_stabilizer_included,
        },
        "parity_stabilizer_redundant": enc.parity_stabilizer_redundant,
    }
    if enc.kind in ("jw", "vc"):
        d["majorana_images"] = {
            f"{role}{mode}" + ("'" if kind else ""): render(img)
            for (role, mode, kind), img in sorted(enc.majorana_images.items())
        }
        d["vc_pairing"] = [list(map(list, pair)) for pair in enc.vc_pairing]
    else:
        d["edge_images"] = {
            f"{a}->{b}": render(img) for (a, b), img in sorted(enc.edge_images.items())
        }
        d["vertex_images"] = {
            str(j): render(img) for j, img in sorted(enc.vertex_images.items())
        }
        d["corner_majorana_images"] = {
            str(j): [render(c), render(cp)]
            for j, (c, cp) in sorted(enc.corner_majorana_images.items())
        }
    return d


def rebuild_from_config(kind: str, lattice_dict: Optional[dict],
                        swap_first_pair: bool = False,
                        parity_stabilizer: bool = False,
                        n_modes: int | None = None) -> Encoding:
    """Rebuild an encoding from a lattice description and variant flags."""
    if kind == "jw":
        return build_jw(n_modes if n_modes is not None else 1)
    lat = build_lattice(
        lattice_dict["rows"],
        lattice_dict["cols"],
        lattice_dict.get("boundary", "open"),
        lattice_dict.get("face_parity_offset", 0),
    )
    for corner in lattice_dict.get("shaved_corners", []):
        lat = shave_corner(lat, Site(*corner))
    if kind == "vc":
        return build_vc(lat, swap_first_pair=swap_first_pair)
    if kind == "dk":
        return build_dk(lat, parity_stabilizer=parity_stabilizer)
    raise ValueError(f"unknown encoding kind {kind!r}")


def encoding_from_dict(d: dict) -> Encoding:
    """Reconstruct an Encoding from its dump (stabilizers as stored)."""
    enc = rebuild_from_config(
        d["kind"],
        d.get("lattice"),
        swap_first_pair=d.get("variant_flags", {}).get("vc_first_pair_swapped", False),
        parity_stabilizer=d.get("variant_flags", {}).get("parity_stabilizer_included", False),
        n_modes=d.get("n_primary_modes"),
    )
    stored = tuple(parse(s, d["n_qubits"]) for s in d["stabilizer_generators"])
    return replace(enc, stabilizer_generators=stored)
