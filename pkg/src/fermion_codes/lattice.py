"""Rectangular site lattices: faces, parities, edge orientations, snake orders.

Geometry conventions (fixed once, used throughout the package):

* Sites are ``(row, col)`` with row 0 drawn at the top.
* Face ``(r, c)`` is the unit square whose top-left corner site is ``(r, c)``.
* Faces carry a checkerboard parity.  With ``face_parity_offset = 0`` the
  lower-left face is odd; flipping the offset swaps the two classes.
  Formula: a face is odd iff ``(rb + c + offset)`` is even, where ``rb`` is
  the face row counted from the bottom.
* Every edge carries an orientation (an arrow) chosen so that the four
  edges of every even face form a directed cycle.  Vertical arrows point
  up (towards smaller row) iff ``(col + offset)`` is odd.  Horizontal
  arrows point right iff ``(rows - 1 - row)`` is odd on open lattices and
  iff ``row`` is odd on the torus.

Periodic boundaries require even side lengths for the checkerboard to
close up; sides of length 2 would create parallel edges and are rejected.

Corner shaving removes a lattice corner site that touches only an odd
face and replaces its two incident edges with one diagonal edge between
its former neighbours.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

__all__ = [
    "Site",
    "Face",
    "Edge",
    "Lattice",
    "build_lattice",
    "default_jw_order",
    "shave_corner",
]


class Site(NamedTuple):
    row: int
    col: int


class Face(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Edge:
    """Oriented lattice edge; the arrow points from ``tail`` to ``head``."""

    tail: Site
    head: Site
    kind: str  # "horizontal" | "vertical-up" | "vertical-down" | "diagonal-corner"

    @property
    def sites(self) -> frozenset[Site]:
        return frozenset((self.tail, self.head))


@dataclass
class Lattice:
    """Immutable rectangular lattice with faces, parities and orientations."""

    rows: int
    cols: int
    boundary: str
    face_parity_offset: int
    shaved_corners: frozenset[Site]
    sites: tuple[Site, ...] = field(default=())
    edges: tuple[Edge, ...] = field(default=())
    faces: tuple[Face, ...] = field(default=())
    _site_index: dict[Site, int] = field(default_factory=dict, repr=False)
    _edge_by_sites: dict[frozenset[Site], Edge] = field(default_factory=dict, repr=False)

    # -- lookup ------------------------------------------------------------

    def site_index(self, s: Site) -> int:
        return self._site_index[s]

    def has_site(self, s: Site) -> bool:
        return s in self._site_index

    def edge_between(self, a: Site, b: Site) -> Edge:
        return self._edge_by_sites[frozenset((a, b))]

    def has_edge(self, a: Site, b: Site) -> bool:
        return frozenset((a, b)) in self._edge_by_sites

    # -- faces ---------------------------------------------------------------

    @property
    def n_face_rows(self) -> int:
        return self.rows if self.boundary == "periodic" else self.rows - 1

    @property
    def n_face_cols(self) -> int:
        return self.cols if self.boundary == "periodic" else self.cols - 1

    def face_is_odd(self, f: Face) -> bool:
        rb = self.n_face_rows - 1 - f.row
        return (rb + f.col + self.face_parity_offset) % 2 == 0

    @property
    def odd_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if self.face_is_odd(f))

    @property
    def even_faces(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if not self.face_is_odd(f))

    def face_corners(self, f: Face) -> tuple[Site, Site, Site, Site]:
        """Geometric corners (TL, TR, BR, BL), wrapping on the torus.

        Shaved sites may appear here; callers that need existing sites
        only should filter with :meth:`has_site`.
        """
        if self.boundary == "periodic":
            r1, c1 = (f.row + 1) % self.rows, (f.col + 1) % self.cols
        else:
            r1, c1 = f.row + 1, f.col + 1
        return (
            Site(f.row, f.col),
            Site(f.row, c1),
            Site(r1, c1),
            Site(r1, f.col),
        )

    def face_is_shaved(self, f: Face) -> bool:
        return any(s in self.shaved_corners for s in self.face_corners(f))

    def edges_of_face(self, f: Face) -> tuple[Edge, ...]:
        """The boundary edges of a face: 4, or 3 for a shaved corner face."""
        tl, tr, br, bl = self.face_corners(f)
        out = []
        for a, b in ((tl, tr), (tr, br), (br, bl), (bl, tl)):
            if self.has_edge(a, b):
                out.append(self.edge_between(a, b))
        if self.face_is_shaved(f):
            out.extend(
                e for e in self.edges
                if e.kind == "diagonal-corner" and self._diagonal_face(e) == f
            )
        return tuple(out)

    def _diagonal_face(self, e: Edge) -> Optional[Face]:
        # A diagonal edge belongs to the unique odd corner face it cuts.
        for f in self.faces:
            if self.face_is_shaved(f):
                corners = set(self.face_corners(f))
                if e.sites <= corners:
                    return f
        return None

    def faces_of_edge(self, e: Edge) -> tuple[Face, ...]:
        """Faces adjacent to an edge (1 or 2; diagonal edges have 1)."""
        if e.kind == "diagonal-corner":
            f = self._diagonal_face(e)
            return (f,) if f is not None else ()
        a, b = sorted(e.sites)
        out: list[Face] = []
        if e.kind == "horizontal":
            r = a.row
            c = min(a.col, b.col)
            if abs(a.col - b.col) != 1:  # wrap edge on the torus
                c = self.cols - 1
            candidates = [Face((r - 1) % self.rows if self.boundary == "periodic" else r - 1, c), Face(r, c)]
        else:
            r = min(a.row, b.row)
            if abs(a.row - b.row) != 1:
                r = self.rows - 1
            c = a.col
            candidates = [Face(r, (c - 1) % self.cols if self.boundary == "periodic" else c - 1), Face(r, c)]
        for f in candidates:
            if 0 <= f.row < self.n_face_rows and 0 <= f.col < self.n_face_cols:
                out.append(f)
        return tuple(out)

    def odd_face_of_edge(self, e: Edge) -> Optional[Face]:
        """The unique adjacent odd face, or None for boundary edges without one."""
        odd = [f for f in self.faces_of_edge(e) if self.face_is_odd(f)]
        if len(odd) > 1:
            raise RuntimeError(f"edge {e} has {len(odd)} odd faces; checkerboard broken")
        return odd[0] if odd else None

    # -- corners / shaving ---------------------------------------------------

    def corner_sites(self) -> tuple[Site, ...]:
        return (
            Site(0, 0),
            Site(0, self.cols - 1),
            Site(self.rows - 1, 0),
            Site(self.rows - 1, self.cols - 1),
        )

    def eligible_shave_corners(self) -> tuple[Site, ...]:
        """Corners adjacent only to an odd face and not yet shaved away."""
        if self.boundary != "open":
            return ()
        out = []
        for s in self.corner_sites():
            if s in self.shaved_corners:
                continue
            faces = [f for f in self.faces if s in self.face_corners(f)]
            if len(faces) == 1 and self.face_is_odd(faces[0]) and not self.face_is_shaved(faces[0]):
                out.append(s)
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "boundary": self.boundary,
            "face_parity_offset": self.face_parity_offset,
            "shaved_corners": sorted([list(s) for s in self.shaved_corners]),
        }


def _horizontal_points_right(rows: int, boundary: str, row: int) -> bool:
    if boundary == "periodic":
        return row % 2 == 1
    return (rows - 1 - row) % 2 == 1


def _vertical_points_up(offset: int, col: int) -> bool:
    return (col + offset) % 2 == 1


def _build(rows: int, cols: int, boundary: str, offset: int, shaved: frozenset[Site]) -> Lattice:
    sites = tuple(
        Site(r, c) for r in range(rows) for c in range(cols) if Site(r, c) not in shaved
    )
    site_index = {s: i for i, s in enumerate(sites)}

    edges: list[Edge] = []
    wrap = boundary == "periodic"
    for r in range(rows):
        for c in range(cols if wrap else cols - 1):
            a, b = Site(r, c), Site(r, (c + 1) % cols)
            if a in shaved or b in shaved:
                continue
            if _horizontal_points_right(rows, boundary, r):
                edges.append(Edge(a, b, "horizontal"))
            else:
                edges.append(Edge(b, a, "horizontal"))
    for r in range(rows if wrap else rows - 1):
        for c in range(cols):
            upper, lower = Site(r, c), Site((r + 1) % rows, c)
            if upper in shaved or lower in shaved:
                continue
            if _vertical_points_up(offset, c):
                edges.append(Edge(lower, upper, "vertical-up"))
            else:
                edges.append(Edge(upper, lower, "vertical-down"))
    # Diagonal replacement edges for shaved corners: connect the two former
    # neighbours, tail at the vertical neighbour.
    for s in sorted(shaved):
        vert = Site(1, s.col) if s.row == 0 else Site(rows - 2, s.col)
        horiz = Site(s.row, 1) if s.col == 0 else Site(s.row, cols - 2)
        edges.append(Edge(vert, horiz, "diagonal-corner"))

    n_face_rows = rows if wrap else rows - 1
    n_face_cols = cols if wrap else cols - 1
    faces = tuple(Face(r, c) for r in range(n_face_rows) for c in range(n_face_cols))

    lat = Lattice(
        rows=rows,
        cols=cols,
        boundary=boundary,
        face_parity_offset=offset,
        shaved_corners=shaved,
        sites=sites,
        edges=tuple(edges),
        faces=faces,
        _site_index=site_index,
        _edge_by_sites={e.sites: e for e in edges},
    )
    return lat


def build_lattice(
    rows: int,
    cols: int,
    boundary: str = "open",
    face_parity_offset: int = 0,
) -> Lattice:
    """Build a rows x cols site lattice with faces, parities and arrows."""
    if rows < 2 or cols < 2:
        raise ValueError("lattice needs rows >= 2 and cols >= 2")
    if boundary not in ("open", "periodic"):
        raise ValueError(f"unknown boundary {boundary!r}")
    if face_parity_offset not in (0, 1):
        raise ValueError("face_parity_offset must be 0 or 1")
    if boundary == "periodic":
        if rows % 2 or cols % 2:
            raise ValueError("periodic boundary requires even rows and cols")
        if rows < 4 or cols < 4:
            raise ValueError("periodic boundary requires rows, cols >= 4 (shorter sides create parallel edges)")
    return _build(rows, cols, boundary, face_parity_offset, frozenset())


def default_jw_order(lat: Lattice) -> tuple[Site, ...]:
    """Row-major snake path over the sites (the grey path of the figures).

    Consecutive sites are lattice-adjacent.  Only defined on open,
    unshaved lattices; a periodic lattice has no canonical snake.
    """
    if lat.boundary != "open":
        raise ValueError("no canonical snake order on a periodic lattice")
    if lat.shaved_corners:
        raise ValueError("no snake order on a shaved lattice")
    order: list[Site] = []
    for r in range(lat.rows):
        cs = range(lat.cols) if r % 2 == 0 else range(lat.cols - 1, -1, -1)
        order.extend(Site(r, c) for c in cs)
    return tuple(order)


def shave_corner(lat: Lattice, corner: Site) -> Lattice:
    """Remove an eligible corner site, adding the diagonal replacement edge."""
    if corner not in lat.eligible_shave_corners():
        raise ValueError(
            f"corner {tuple(corner)} is not eligible for shaving "
            "(must be an unshaved open-lattice corner touching only an odd face)"
        )
    return _build(
        lat.rows,
        lat.cols,
        lat.boundary,
        lat.face_parity_offset,
        lat.shaved_corners | {corner},
    )
