"""Regression: every corpus entry's expected block matches recomputation exactly."""

from semitoric import (
    adaptability,
    betti_b2,
    boundary_chains,
    build_graph,
    classify_vertex,
    corpus_get,
    corpus_names,
    dh_function,
    format_rational,
    is_delzant_polygon,
    self_intersection,
    validate,
    zk_chains,
)


def _graph_content(graph):
    isolated = sorted(
        format_rational(v.label) for v in graph.vertices if v.kind == "isolated"
    )
    fat = sorted(
        [format_rational(v.label), format_rational(v.area)]
        for v in graph.vertices
        if v.kind == "fat"
    )
    edges = sorted(
        [
            format_rational(graph.vertices[e.source].label),
            format_rational(graph.vertices[e.target].label),
            e.weight,
        ]
        for e in graph.edges
    )
    return {"isolated": isolated, "fat": fat, "edges": edges}


def test_corpus_regression():
    for name in corpus_names():
        entry = corpus_get(name)
        polygon = entry.polygon
        expected = entry.expected

        report = validate(polygon)
        assert report.valid, name

        kinds = {str(v): classify_vertex(polygon, v).kind.value for v in polygon.vertices}
        assert kinds == expected["kinds"], name

        assert is_delzant_polygon(polygon) == expected["delzant"], name
        assert adaptability(polygon).adaptable == expected["adaptable"], name
        assert polygon.total_multiplicity == expected["total_multiplicity"], name

        graph = build_graph(polygon)
        assert betti_b2(graph) == expected["b2"], name
        assert _graph_content(graph) == expected["graph"], name

        density = dh_function(polygon)
        breaks, values = expected["dh"]
        assert [format_rational(x) for x in density.breakpoints] == breaks, name
        assert [format_rational(v) for v in density.values] == values, name

        chains = [
            [c.k, c.side, format_rational(c.start_vertex.x), format_rational(c.end_vertex.x)]
            for c in zk_chains(polygon)
        ]
        assert chains == expected["chains"], name

        bc = boundary_chains(polygon)
        for side, edge in (("left", bc.left_vertical), ("right", bc.right_vertical)):
            want = expected["self_intersection"][side]
            if edge is None:
                assert want is None, name
            else:
                assert self_intersection(polygon, side) == want, name
