"""Linear equivalence, canonical representatives and Picard group structure.

None of this depends on loops or weights: the firing moves only see the
edges between distinct vertices, so the machinery is total on every valid
Graph (callers that need the weightless loopless model build it first).

The canonical representative of a class is its q-reduced divisor: it is
nonnegative away from q and no subset of V - {q} can fire without going
negative, which Dhar's burning test certifies. q-reduction runs in two
stages: a sweep over BFS layers that set-fires balls around q until every
vertex away from q is nonnegative, then the burning loop that fires the
unburnt set (with a multi-fire shortcut) until everything burns.
"""

from dataclasses import dataclass

from .divisors import Divisor, firing_divisor
from .errors import EnumerationCapExceeded, GraphMismatch
from .graphs import Graph
from .intmat import IntegerLattice, smith_normal_form


def reduce_coeffs(graph: Graph, coeffs, q: int):
    """q-reduced form of a coefficient tuple; q is a vertex index."""
    n = graph.vertex_count
    if n == 1:
        return tuple(coeffs)
    d = list(coeffs)
    adj = graph._adj
    nbrs = graph._neighbors

    # stage 1: make d nonnegative away from q, outermost layer first.
    # Firing the ball of radius k-1 moves chips only from layer k-1 to
    # layer k, so later sweeps never disturb the layers already fixed.
    layers = graph.bfs_layers(q)
    for k in range(len(layers) - 1, 0, -1):
        layer = layers[k]
        inner = layers[k - 1]
        t = 0
        gains = []
        for v in layer:
            row = adj[v]
            gain = sum(row[u] for u in inner)
            gains.append(gain)
            if d[v] < 0:
                need = (-d[v] + gain - 1) // gain
                if need > t:
                    t = need
        if t:
            for v, gain in zip(layer, gains):
                d[v] += t * gain
            layer_set = set(layer)
            for u in inner:
                row = adj[u]
                d[u] -= t * sum(row[v] for v in layer_set)

    # stage 2: Dhar's burning loop with multi-fire of the unburnt set.
    while True:
        burnt = [False] * n
        burnt[q] = True
        heat = [0] * n  # edges from v into the burnt region
        stack = [q]
        nburnt = 1
        while stack:
            b = stack.pop()
            for v, m in nbrs[b]:
                if not burnt[v]:
                    heat[v] += m
                    if heat[v] > d[v]:
                        burnt[v] = True
                        nburnt += 1
                        stack.append(v)
        if nburnt == n:
            return tuple(d)
        unburnt = [v for v in range(n) if not burnt[v]]
        # every unburnt v satisfies heat[v] <= d[v], so t >= 1
        t = min(d[v] // heat[v] for v in unburnt if heat[v])
        for v in unburnt:
            d[v] -= t * heat[v]
        for w in range(n):
            if burnt[w]:
                row = adj[w]
                gain = sum(row[v] for v in unburnt)
                if gain:
                    d[w] += t * gain


@dataclass(frozen=True)
class ReducedDivisor:
    """The unique q-reduced representative of a divisor class."""

    base: Divisor
    basepoint: object

    @property
    def coeffs(self):
        return self.base.coeffs

    def is_effective(self):
        return self.base.is_effective()


def q_reduce(divisor: Divisor, q) -> ReducedDivisor:
    """The unique q-reduced divisor linearly equivalent to ``divisor``."""
    g = divisor.graph
    qi = g.index(q)
    reduced = reduce_coeffs(g, divisor.coeffs, qi)
    return ReducedDivisor(Divisor(g, reduced), q)


def principal_lattice(graph: Graph) -> IntegerLattice:
    """The lattice of principal divisors, spanned by the firing moves."""
    lattice = graph._cache.get("principal_lattice")
    if lattice is None:
        lattice = IntegerLattice(graph.vertex_count)
        for v in graph.vertex_ids:
            lattice.add(firing_divisor(graph, v).coeffs)
        graph._cache["principal_lattice"] = lattice
    return lattice


def is_equivalent(d1: Divisor, d2: Divisor) -> bool:
    """True iff the divisors differ by a principal divisor."""
    if d1.graph != d2.graph:
        raise GraphMismatch("divisors live on different graphs")
    if d1.degree != d2.degree:
        return False
    diff = tuple(a - b for a, b in zip(d1.coeffs, d2.coeffs))
    return diff in principal_lattice(d1.graph)


@dataclass(frozen=True)
class PicardStructure:
    """Cyclic decomposition of the degree-zero Picard group."""

    graph: Graph
    invariant_factors: tuple
    order: int


def picard_structure(graph: Graph) -> PicardStructure:
    """Invariant factors of Pic^0 via the Smith normal form of a reduced
    Laplacian; the group order equals the number of spanning trees."""
    n = graph.vertex_count
    rows = []
    for i in range(1, n):
        row = [0] * (n - 1)
        for j in range(1, n):
            row[j - 1] = graph._degree[i] if i == j else -graph._adj[i][j]
        rows.append(row)
    diag = smith_normal_form(rows)
    order = 1
    for d in diag:
        order *= d
    factors = tuple(d for d in diag if d > 1)
    return PicardStructure(graph, factors, order if diag else 1)


def superstable_configs(graph: Graph, q: int):
    """All q-superstable configurations (coefficients on V - {q}), i.e.
    the vectors fixed by the burning test; exactly one per divisor class.
    Returned in lexicographic order of the full coefficient vector with
    0 at q."""
    n = graph.vertex_count
    others = [v for v in range(n) if v != q]
    nbrs = graph._neighbors
    deg = graph._degree

    found = []
    config = [0] * n

    def burns_completely():
        burnt = [False] * n
        burnt[q] = True
        heat = [0] * n
        stack = [q]
        nburnt = 1
        while stack:
            b = stack.pop()
            for v, m in nbrs[b]:
                if not burnt[v]:
                    heat[v] += m
                    if heat[v] > config[v]:
                        burnt[v] = True
                        nburnt += 1
                        stack.append(v)
        return nburnt == n

    def rec(k):
        if k == len(others):
            if burns_completely():
                found.append(tuple(config))
            return
        v = others[k]
        for c in range(deg[v]):
            config[v] = c
            rec(k + 1)
        config[v] = 0

    rec(0)
    return found


def enumerate_classes(graph: Graph, degree: int, cap: int = 10**6):
    """One q-reduced representative per divisor class of the given degree,
    with q the first vertex, in lexicographic order."""
    count = graph.complexity()
    if count > cap:
        raise EnumerationCapExceeded(f"{count} classes exceed the cap of {cap}")
    reps = []
    for config in superstable_configs(graph, 0):
        coeffs = list(config)
        coeffs[0] = degree - sum(config)
        reps.append(tuple(coeffs))
    reps.sort()
    return [Divisor(graph, c) for c in reps]
