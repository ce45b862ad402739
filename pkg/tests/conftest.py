import pytest

from divgraph import Graph


@pytest.fixture
def triangle_doubled():
    """Three weightless vertices; a doubled edge v1-v2 plus the path
    v1-v3-v2. Contracting the v2-v3 edge (index 3) yields the 3-edge
    binary graph; ranks jump both ways across that contraction."""
    return Graph(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v2"), ("v1", "v3"), ("v2", "v3")],
    )


@pytest.fixture
def binary2():
    """Two weightless vertices joined by three parallel edges (genus 2)."""
    return Graph(["v1", "v2"], [("v1", "v2")] * 3)


@pytest.fixture
def weight_loop_mix():
    """A weight-1 vertex joined to a weight-0 vertex carrying a loop;
    genus 2, and the loopless model is a 4-vertex chain of doubled edges
    around a bridge."""
    return Graph([("v", 1), ("w", 0)], [("v", "w"), ("w", "w")])


@pytest.fixture
def two_weight_one():
    """Two weight-1 vertices joined by a single bridge; genus 2."""
    return Graph([("v1", 1), ("v2", 1)], [("v1", "v2")])


def cycle(n):
    ids = [f"v{i + 1}" for i in range(n)]
    return Graph(ids, [(ids[i], ids[(i + 1) % n]) for i in range(n)])


def binary(g):
    return Graph(["v1", "v2"], [("v1", "v2")] * (g + 1))


def single_vertex(weight, loops=0):
    return Graph([("v", weight)], [("v", "v")] * loops)
