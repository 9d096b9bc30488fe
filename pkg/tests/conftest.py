import random
from fractions import Fraction

import pytest

from semitoric import (
    GlobalShear,
    SemitoricError,
    VertexKind,
    chop_allowance,
    classify_vertex,
    corner_chop,
    corpus_get,
    corpus_names,
    switch_cut,
    transform_polygon,
)


@pytest.fixture(scope="session")
def corpus():
    return {name: corpus_get(name).polygon for name in corpus_names()}


def random_global_shear(rng: random.Random) -> GlobalShear:
    return GlobalShear(rng.randint(-3, 3), Fraction(rng.randint(-6, 6), rng.randint(1, 4)))


def fuzz_derivatives(count: int = 200, seed: int = 20240817, max_ops: int = 5):
    """Polygons reached from corpus seeds by short random op sequences.

    Ops are drawn from cut switches, global shears, and corner chops at
    Delzant vertices; every result is a validated polygon.  Deterministic
    for a fixed seed.
    """
    rng = random.Random(seed)
    seeds = [corpus_get(name).polygon for name in corpus_names()]
    results = []
    while len(results) < count:
        polygon = seeds[rng.randrange(len(seeds))]
        for _ in range(rng.randint(1, max_ops)):
            op = rng.choice(("switch", "shear", "chop"))
            try:
                if op == "switch" and polygon.marks:
                    polygon = switch_cut(polygon, rng.randrange(len(polygon.marks)))
                elif op == "shear":
                    polygon = transform_polygon(polygon, random_global_shear(rng))
                elif op == "chop":
                    candidates = [
                        v
                        for v in polygon.vertices
                        if classify_vertex(polygon, v).kind is VertexKind.DELZANT
                    ]
                    if not candidates:
                        continue
                    vertex = candidates[rng.randrange(len(candidates))]
                    delta = chop_allowance(polygon, vertex) * Fraction(1, rng.randint(2, 6))
                    polygon = corner_chop(polygon, vertex, delta)
            except SemitoricError:
                continue
        results.append(polygon)
    return results


@pytest.fixture(scope="session")
def derived_polygons():
    return fuzz_derivatives(count=200)
