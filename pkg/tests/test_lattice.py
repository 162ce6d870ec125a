"""Tests for lattice geometry: faces, parities, orientations, shaving."""

from __future__ import annotations

import pytest

from fermion_codes.lattice import (
    Edge,
    Face,
    Site,
    build_lattice,
    default_jw_order,
    shave_corner,
)


def adjacent(lat, a: Site, b: Site) -> bool:
    dr = abs(a.row - b.row)
    dc = abs(a.col - b.col)
    if lat.boundary == "periodic":
        dr = min(dr, lat.rows - dr)
        dc = min(dc, lat.cols - dc)
    return dr + dc == 1


class TestBuild:
    def test_3x3_counts_match_unit_cell(self):
        lat = build_lattice(3, 3)
        assert len(lat.sites) == 9
        assert len(lat.edges) == 12
        assert len(lat.faces) == 4
        assert len(lat.odd_faces) == 2
        assert len(lat.even_faces) == 2

    def test_3x3_odd_faces_are_lower_left_and_upper_right(self):
        lat = build_lattice(3, 3)
        assert set(lat.odd_faces) == {Face(1, 0), Face(0, 1)}

    def test_2x2_smallest_grid(self):
        lat = build_lattice(2, 2)
        assert len(lat.sites) == 4
        assert len(lat.edges) == 4
        assert len(lat.faces) == 1

    def test_4x4_torus_counts(self):
        lat = build_lattice(4, 4, boundary="periodic")
        assert len(lat.sites) == 16
        assert len(lat.edges) == 32
        assert len(lat.faces) == 16
        assert len(lat.odd_faces) == 8

    def test_parity_offset_flips_classes(self):
        a = build_lattice(4, 4, face_parity_offset=0)
        b = build_lattice(4, 4, face_parity_offset=1)
        assert set(a.odd_faces) == set(b.even_faces)
        # Even x even, offset 0: all four corner faces odd.
        corners = {Face(0, 0), Face(0, 2), Face(2, 0), Face(2, 2)}
        assert corners <= set(a.odd_faces)
        assert corners <= set(b.even_faces)

    def test_invalid_dimensions(self):
        with pytest.raises(ValueError):
            build_lattice(1, 3)
        with pytest.raises(ValueError):
            build_lattice(3, 4, boundary="periodic")
        with pytest.raises(ValueError):
            build_lattice(2, 4, boundary="periodic")

    def test_euler_formula_open(self):
        for rows, cols in ((2, 2), (3, 3), (3, 4), (4, 4), (2, 5)):
            lat = build_lattice(rows, cols)
            assert len(lat.sites) - len(lat.edges) + len(lat.faces) == 1


class TestFacesAndEdges:
    @pytest.mark.parametrize("rows,cols,boundary,offset", [
        (3, 3, "open", 0), (3, 3, "open", 1), (4, 4, "open", 0),
        (3, 4, "open", 0), (2, 3, "open", 0), (4, 4, "periodic", 0),
        (4, 4, "periodic", 1), (4, 6, "periodic", 0),
    ])
    def test_every_edge_has_at_most_one_odd_face(self, rows, cols, boundary, offset):
        lat = build_lattice(rows, cols, boundary, offset)
        for e in lat.edges:
            lat.odd_face_of_edge(e)  # raises if two odd neighbours
        interior = [e for e in lat.edges if len(lat.faces_of_edge(e)) == 2]
        for e in interior:
            assert lat.odd_face_of_edge(e) is not None

    @pytest.mark.parametrize("rows,cols,boundary,offset", [
        (3, 3, "open", 0), (3, 3, "open", 1), (4, 4, "open", 0),
        (4, 4, "open", 1), (3, 4, "open", 0), (4, 4, "periodic", 0),
        (4, 4, "periodic", 1), (6, 4, "periodic", 1),
    ])
    def test_even_faces_form_directed_cycles(self, rows, cols, boundary, offset):
        lat = build_lattice(rows, cols, boundary, offset)
        for f in lat.even_faces:
            tl, tr, br, bl = lat.face_corners(f)
            edges = [lat.edge_between(a, b) for a, b in
                     ((tl, tr), (tr, br), (br, bl), (bl, tl))]
            # Each corner must have exactly one incoming and one outgoing arrow.
            for corner in (tl, tr, br, bl):
                heads = sum(1 for e in edges if e.head == corner)
                tails = sum(1 for e in edges if e.tail == corner)
                assert (heads, tails) == (1, 1), f"face {f} corner {corner}"

    def test_fig2_arrow_regression_3x3(self):
        # Middle row points right, top and bottom rows left; middle column
        # points up, outer columns down (offset 0).
        lat = build_lattice(3, 3)
        e = lat.edge_between(Site(1, 0), Site(1, 1))
        assert e.tail == Site(1, 0) and e.kind == "horizontal"
        e = lat.edge_between(Site(0, 0), Site(0, 1))
        assert e.tail == Site(0, 1)
        e = lat.edge_between(Site(2, 1), Site(2, 2))
        assert e.tail == Site(2, 2)
        e = lat.edge_between(Site(0, 1), Site(1, 1))
        assert e.kind == "vertical-up" and e.head == Site(0, 1)
        e = lat.edge_between(Site(0, 0), Site(1, 0))
        assert e.kind == "vertical-down" and e.head == Site(1, 0)


class TestJWOrder:
    def test_2x2_snake(self):
        lat = build_lattice(2, 2)
        assert default_jw_order(lat) == (Site(0, 0), Site(0, 1), Site(1, 1), Site(1, 0))

    def test_3x3_snake_consecutive_adjacent(self):
        lat = build_lattice(3, 3)
        order = default_jw_order(lat)
        assert len(order) == 9
        assert sum(1 for a, b in zip(order, order[1:]) if adjacent(lat, a, b)) == 8

    def test_4x4_snake_shape(self):
        lat = build_lattice(4, 4)
        order = default_jw_order(lat)
        assert order[:4] == (Site(0, 0), Site(0, 1), Site(0, 2), Site(0, 3))
        assert order[4] == Site(1, 3)
        assert all(adjacent(lat, a, b) for a, b in zip(order, order[1:]))

    def test_periodic_has_no_canonical_order(self):
        lat = build_lattice(4, 4, boundary="periodic")
        with pytest.raises(ValueError):
            default_jw_order(lat)


class TestShaving:
    def test_eligible_corners_3x3(self):
        lat = build_lattice(3, 3)
        # Odd faces at lower-left and upper-right; those corners qualify.
        assert set(lat.eligible_shave_corners()) == {Site(2, 0), Site(0, 2)}

    def test_shave_removes_site_and_adds_diagonal(self):
        lat = build_lattice(3, 3)
        shaved = shave_corner(lat, Site(2, 0))
        assert len(shaved.sites) == 8
        assert not shaved.has_site(Site(2, 0))
        diag = [e for e in shaved.edges if e.kind == "diagonal-corner"]
        assert len(diag) == 1
        assert diag[0].sites == frozenset({Site(1, 0), Site(2, 1)})
        # The shaved corner face keeps three boundary edges.
        assert len(shaved.edges_of_face(Face(1, 0))) == 3

    def test_shave_both_eligible_corners(self):
        lat = build_lattice(3, 3)
        shaved = shave_corner(shave_corner(lat, Site(2, 0)), Site(0, 2))
        assert len(shaved.sites) == 7
        assert sum(1 for e in shaved.edges if e.kind == "diagonal-corner") == 2

    def test_shave_ineligible_corner_errors(self):
        lat = build_lattice(3, 3)
        with pytest.raises(ValueError):
            shave_corner(lat, Site(0, 0))  # touches an even face

    def test_even_by_even_offset_can_avoid_odd_corners(self):
        lat = build_lattice(4, 4, face_parity_offset=1)
        assert lat.eligible_shave_corners() == ()
        with pytest.raises(ValueError):
            shave_corner(lat, Site(0, 0))

    def test_euler_after_shave(self):
        lat = shave_corner(build_lattice(3, 3), Site(2, 0))
        # One site and one net edge removed; face count unchanged.
        assert len(lat.sites) - len(lat.edges) + len(lat.faces) == 1
