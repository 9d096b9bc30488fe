from fractions import Fraction

import pytest

from semitoric import (
    DomainError,
    MarkedPoint,
    Point,
    SemitoricPolygon,
    adaptability,
    delzant_presentations,
    det2,
    dh_function,
    dh_jump_report,
    enumerate_presentations,
    orbit_counts,
    outgoing_primitives,
    primitive,
    self_intersection,
    validate,
    vertical_edge_endpoints,
)


def pt(x, y):
    return Point(Fraction(x), Fraction(y))


class TestDhFunction:
    def test_examples(self, corpus):
        ff1 = dh_function(corpus["FF1"])
        assert ff1.breakpoints == (0, 1, 2)
        assert ff1.values == (0, Fraction(1, 2), 0)
        square = dh_function(corpus["SQUARE"])
        assert square.breakpoints == (0, 1)
        assert square.values == (1, 1)
        na3 = dh_function(corpus["NONADAPT3"])
        assert na3.breakpoints == (0, 1, 2)
        assert na3.values == (4, 4, 1)

    def test_extreme_values_match_fat_areas(self, corpus):
        from semitoric import boundary_chains

        for polygon in corpus.values():
            density = dh_function(polygon)
            chains = boundary_chains(polygon)
            left = chains.left_vertical
            right = chains.right_vertical
            assert density.values[0] == (left[1].y - left[0].y if left else 0)
            assert density.values[-1] == (right[1].y - right[0].y if right else 0)

    def test_value_interpolation(self, corpus):
        density = dh_function(corpus["FF1"])
        assert density.value_at(Fraction(1, 2)) == Fraction(1, 4)
        assert density.value_at(Fraction(3, 2)) == Fraction(1, 4)


class TestJumpReport:
    def test_pinned_values(self, corpus):
        ff1 = dh_jump_report(corpus["FF1"])
        (entry,) = ff1.entries
        assert entry.x == 1 and entry.observed == -1 and entry.predicted == -1

        hd1down = dh_jump_report(corpus["HD1DOWN"])
        (entry,) = hd1down.entries
        assert entry.observed == -2
        assert entry.e_top == 1 and entry.e_bottom == 0 and entry.focus_multiplicity == 1

        na3 = dh_jump_report(corpus["NONADAPT3"])
        (entry,) = na3.entries
        assert entry.observed == -3 and entry.predicted == -3

    def test_consistent_on_corpus_and_presentations(self, corpus):
        for polygon in corpus.values():
            for _, member in enumerate_presentations(polygon).members:
                report = dh_jump_report(member)
                assert report.consistent, (polygon, member)


class TestOrbitCounts:
    def test_examples(self, corpus):
        counts = orbit_counts(corpus["NONADAPT3"], Fraction(1))
        assert (counts.ee, counts.ff, counts.zk) == (0, 3, 0)
        counts = orbit_counts(corpus["FF1"], Fraction(1))
        assert (counts.ee, counts.ff, counts.zk) == (0, 1, 1)
        counts = orbit_counts(corpus["HD1"], Fraction(1))
        assert (counts.ee, counts.ff, counts.zk) == (1, 1, 0)

    def test_extremal_rejected(self, corpus):
        with pytest.raises(DomainError):
            orbit_counts(corpus["FF1"], Fraction(0))

    def test_presentation_independent(self, corpus):
        for polygon in corpus.values():
            columns = sorted(
                {v.x for v in polygon.vertices} | {m.position.x for m in polygon.marks}
            )
            interior = [x for x in columns if polygon.j_min < x < polygon.j_max]
            baseline = [orbit_counts(polygon, x) for x in interior]
            for _, member in enumerate_presentations(polygon).members:
                assert [orbit_counts(member, x) for x in interior] == baseline

    def test_structural_bounds(self, corpus, derived_polygons):
        for polygon in list(corpus.values()) + derived_polygons:
            for x in {v.x for v in polygon.vertices} | {m.position.x for m in polygon.marks}:
                if not polygon.j_min < x < polygon.j_max:
                    continue
                counts = orbit_counts(polygon, x)
                assert counts.ee <= 2 and counts.zk <= 2
                if counts.total >= 3:
                    # the six admissible shapes: ff >= 1 and ee + zk <= 2
                    assert counts.ff >= 1
                    assert counts.ee + counts.zk <= 2


class TestAdaptability:
    def test_ff1(self, corpus):
        verdict = adaptability(corpus["FF1"])
        assert verdict.adaptable and verdict.criteria_agree
        assert verdict.delzant_signs == ((-1,),)
        assert not verdict.violating_levels

    def test_nonadapt3(self, corpus):
        verdict = adaptability(corpus["NONADAPT3"])
        assert not verdict.adaptable
        ((x, counts),) = verdict.violating_levels
        assert x == 1 and counts.total == 3
        assert not verdict.delzant_signs

    def test_hd1(self, corpus):
        verdict = adaptability(corpus["HD1"])
        assert verdict.adaptable
        assert verdict.delzant_signs == ((-1,),)

    def test_unsplit_double_mark_agrees_via_splitting(self):
        # one entry of multiplicity two: the Delzant member needs opposite
        # signs at the two underlying points, reached only after splitting
        polygon = SemitoricPolygon(
            (pt(0, 0), pt(1, 0), pt(2, 2)),
            (MarkedPoint(pt(1, Fraction(1, 2)), 2, -1),),
        )
        assert validate(polygon).valid
        verdict = adaptability(polygon)
        assert verdict.adaptable and verdict.criteria_agree
        assert all(len(signs) == 2 for signs in verdict.delzant_signs)
        assert {frozenset(s) for s in verdict.delzant_signs} == {frozenset({-1, 1})}

    def test_no_vertical_edges_implies_adaptable(self, corpus, derived_polygons):
        for polygon in list(corpus.values()) + derived_polygons:
            if not vertical_edge_endpoints(polygon):
                assert adaptability(polygon).adaptable


class TestDelzantPresentations:
    def test_examples(self, corpus):
        assert delzant_presentations(corpus["FF1"]) == (corpus["FF1"],)
        assert delzant_presentations(corpus["HD1"]) == (corpus["HD1DOWN"],)
        assert delzant_presentations(corpus["NONADAPT3"]) == ()

    def test_members_are_delzant_and_canonical(self, corpus):
        from semitoric import is_delzant_polygon, shear_normal_form

        for polygon in corpus.values():
            for member in delzant_presentations(polygon):
                assert is_delzant_polygon(member)
                assert shear_normal_form(member) == member


class TestSelfIntersection:
    def test_examples(self, corpus):
        assert self_intersection(corpus["SQUARE"], "left") == 0
        assert self_intersection(corpus["SQUARE"], "right") == 0
        assert self_intersection(corpus["CP2STD"], "left") == 1
        assert self_intersection(corpus["NONADAPT3"], "left") == 0
        assert self_intersection(corpus["NONADAPT3"], "right") == -3

    def test_no_vertical_edge(self, corpus):
        with pytest.raises(DomainError):
            self_intersection(corpus["FF1"], "left")
        with pytest.raises(DomainError):
            self_intersection(corpus["CP2STD"], "right")

    def test_matches_det_of_outgoing_primitives(self, corpus, derived_polygons):
        from semitoric import boundary_chains

        for polygon in list(corpus.values()) + derived_polygons:
            chains = boundary_chains(polygon)
            for side, edge in (("left", chains.left_vertical), ("right", chains.right_vertical)):
                if edge is None:
                    continue
                value = self_intersection(polygon, side)
                tangents = []
                for endpoint in edge:
                    for d in outgoing_primitives(polygon, endpoint):
                        if d.a != 0:
                            tangents.append(d if d.a > 0 else primitive((-d.a, -d.b)))
                assert abs(value) == abs(det2(*tangents))

    def test_nonadaptable_witness_conditions(self, corpus):
        # every non-adaptable entry has a sphere with self-intersection != -1
        # and a level with at least three non-free orbits
        for polygon in corpus.values():
            verdict = adaptability(polygon)
            if verdict.adaptable:
                continue
            from semitoric import boundary_chains

            chains = boundary_chains(polygon)
            values = [
                self_intersection(polygon, side)
                for side, edge in (("left", chains.left_vertical), ("right", chains.right_vertical))
                if edge is not None
            ]
            assert any(v != -1 for v in values)
            assert any(counts.total >= 3 for _, counts in verdict.violating_levels)
