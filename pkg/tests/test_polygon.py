from fractions import Fraction

import pytest

from semitoric import (
    DomainError,
    MarkedPoint,
    Point,
    SemitoricPolygon,
    ValidationFailure,
    boundary_chains,
    contains_interior,
    require_valid,
    slice_heights,
    validate,
)


def pt(x, y):
    return Point(Fraction(x), Fraction(y))


class TestValidate:
    def test_corpus_ff1_valid(self, corpus):
        assert validate(corpus["FF1"]).valid

    def test_flipped_sign_breaks_endpoint(self, corpus):
        ff1 = corpus["FF1"]
        broken = SemitoricPolygon(
            ff1.vertices, (MarkedPoint(pt(1, Fraction(1, 4)), 1, +1),)
        )
        report = validate(broken)
        assert not report.valid
        assert report.violations[0].rule == "cut-endpoint-not-vertex"
        assert "(1, 1/2)" in report.violations[0].message

    def test_square_valid(self, corpus):
        assert validate(corpus["SQUARE"]).valid

    def test_whole_corpus_valid(self, corpus):
        for name, polygon in corpus.items():
            report = validate(polygon)
            assert report.valid, (name, [str(v) for v in report.violations])

    def test_clockwise_rejected(self):
        cw = SemitoricPolygon((pt(0, 0), pt(0, 1), pt(1, 0)))
        report = validate(cw)
        assert [v.rule for v in report.violations] == ["not-counter-clockwise"]

    def test_collinear_rejected(self):
        flat = SemitoricPolygon((pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)))
        assert any(v.rule == "not-strictly-convex" for v in validate(flat).violations)

    def test_duplicate_vertex_rejected(self):
        dup = SemitoricPolygon((pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)))
        assert validate(dup).violations[0].rule == "duplicate-vertex"

    def test_mark_outside_rejected(self, corpus):
        bad = SemitoricPolygon(corpus["SQUARE"].vertices, (MarkedPoint(pt(2, 2), 1, -1),))
        assert validate(bad).violations[0].rule == "mark-not-interior"

    def test_mark_on_boundary_rejected(self, corpus):
        bad = SemitoricPolygon(corpus["SQUARE"].vertices, (MarkedPoint(pt(Fraction(1, 2), 0), 1, -1),))
        assert validate(bad).violations[0].rule == "mark-not-interior"

    def test_unclassifiable_vertex(self):
        # a (1,2)-corner with no cuts matches no vertex class
        bad = SemitoricPolygon((pt(0, 0), pt(1, 0), pt(2, 2), pt(0, 1)))
        report = validate(bad)
        assert any(v.rule == "unclassifiable-vertex" for v in report.violations)

    def test_require_valid_raises(self):
        cw = SemitoricPolygon((pt(0, 0), pt(0, 1), pt(1, 0)))
        with pytest.raises(ValidationFailure) as exc:
            require_valid(cw)
        assert exc.value.report.violations

    def test_multiplicity_sum(self, corpus):
        assert corpus["NONADAPT3"].total_multiplicity == 3
        assert corpus["SQUARE"].total_multiplicity == 0

    def test_markless_polygons_have_delzant_vertices_only(self, corpus):
        from semitoric import VertexKind, classify_vertex

        for name in ("SQUARE", "CP2STD", "TRI121"):
            polygon = corpus[name]
            for v in polygon.vertices:
                assert classify_vertex(polygon, v).kind is VertexKind.DELZANT


class TestBoundaryChains:
    def test_ff1(self, corpus):
        chains = boundary_chains(corpus["FF1"])
        assert chains.bottom == (pt(0, 0), pt(1, 0), pt(2, 1))
        assert chains.top == (pt(0, 0), pt(2, 1))
        assert chains.left_vertical is None and chains.right_vertical is None

    def test_square(self, corpus):
        chains = boundary_chains(corpus["SQUARE"])
        assert chains.bottom == (pt(0, 0), pt(1, 0))
        assert chains.top == (pt(0, 1), pt(1, 1))
        assert chains.left_vertical == (pt(0, 0), pt(0, 1))
        assert chains.right_vertical == (pt(1, 0), pt(1, 1))

    def test_nonadapt3(self, corpus):
        chains = boundary_chains(corpus["NONADAPT3"])
        assert chains.bottom == (pt(0, 0), pt(1, 0), pt(2, 3))
        assert chains.top == (pt(0, 4), pt(2, 4))
        left_bottom, left_top = chains.left_vertical
        assert left_top.y - left_bottom.y == 4
        right_bottom, right_top = chains.right_vertical
        assert right_top.y - right_bottom.y == 1

    def test_union_is_whole_boundary(self, corpus):
        for polygon in corpus.values():
            chains = boundary_chains(polygon)
            covered = set(chains.bottom) | set(chains.top)
            for edge in (chains.left_vertical, chains.right_vertical):
                if edge:
                    covered.update(edge)
            assert covered == set(polygon.vertices)


class TestSliceHeights:
    def test_examples(self, corpus):
        assert slice_heights(corpus["FF1"], Fraction(1)) == (0, Fraction(1, 2))
        assert slice_heights(corpus["SQUARE"], Fraction(1, 2)) == (0, 1)
        assert slice_heights(corpus["FF1"], Fraction(0)) == (0, 0)

    def test_out_of_range(self, corpus):
        with pytest.raises(DomainError):
            slice_heights(corpus["FF1"], Fraction(3))

    def test_boundary_slopes_monotone(self, corpus):
        # convexity restated: bottom slopes never decrease, top slopes never increase
        for polygon in corpus.values():
            chains = boundary_chains(polygon)
            for path, sign in ((chains.bottom, 1), (chains.top, -1)):
                slopes = [
                    (b.y - a.y) / (b.x - a.x) for a, b in zip(path, path[1:])
                ]
                assert all(sign * (s2 - s1) >= 0 for s1, s2 in zip(slopes, slopes[1:]))

    def test_interior_test_is_strict(self, corpus):
        square = corpus["SQUARE"]
        assert contains_interior(square, pt(Fraction(1, 2), Fraction(1, 2)))
        assert not contains_interior(square, pt(0, Fraction(1, 2)))
        assert not contains_interior(square, pt(3, 3))
