import random

import pytest

from singvol import MonomialIdeal, ResolutionGraph, ToricCone


@pytest.fixture
def plane():
    """The smooth plane: sigma spanned by the standard basis of Z^2."""
    return ToricCone([(1, 0), (0, 1)])


@pytest.fixture
def quadric():
    """The three-dimensional quadric cone singularity."""
    return ToricCone([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])


@pytest.fixture
def two_vertex_graph():
    """A genus-2 curve of self-intersection -3 meeting a rational -2 curve."""
    return ResolutionGraph([(-3, 2), (-2, 0)], [(0, 1, 1)])


def random_m_primary_ideal(rng: random.Random, cone: ToricCone, max_degree: int = 8):
    """A random m-primary monomial ideal on the plane with bounded degrees."""
    a = rng.randint(1, max_degree)
    b = rng.randint(1, max_degree)
    gens = [(a, 0), (0, b)]
    for _ in range(rng.randint(0, 3)):
        gens.append((rng.randint(1, max_degree - 1), rng.randint(1, max_degree - 1)))
    return MonomialIdeal(cone, gens)


def random_graph(rng: random.Random, max_vertices: int = 5) -> ResolutionGraph:
    """A random connected negative-definite dual graph via diagonal dominance."""
    k = rng.randint(1, max_vertices)
    edges = []
    for v in range(1, k):
        edges.append((rng.randint(0, v - 1), v, rng.randint(1, 2)))
    for _ in range(rng.randint(0, 2)):
        i, j = rng.randint(0, k - 1), rng.randint(0, k - 1)
        if i != j:
            edges.append((min(i, j), max(i, j), rng.randint(1, 2)))
    degree = [0] * k
    for i, j, mult in edges:
        degree[i] += mult
        degree[j] += mult
    vertices = [
        (-(degree[v] + rng.randint(1, 3)), rng.randint(0, 2)) for v in range(k)
    ]
    return ResolutionGraph(vertices, edges)
