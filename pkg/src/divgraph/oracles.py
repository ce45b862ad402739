"""Independent brute-force oracles for cross-checking the fast paths.

Each of these deliberately avoids the machinery it is used to validate:
spanning trees are counted by enumerating edge subsets rather than by a
determinant, class effectivity enumerates candidate effective divisors
and tests lattice membership rather than reducing, the rank oracle walks
the raw definition, and firing components explore actual chip-firing
moves inside a bounded coefficient box.
"""

from itertools import combinations, product

from .divisors import Divisor
from .graphs import Graph
from .picard import principal_lattice
from .rank import _compositions


def spanning_tree_count(graph: Graph) -> int:
    """Number of spanning trees by direct enumeration of edge subsets."""
    n = graph.vertex_count
    nonloop = [
        e for e, (i, j) in enumerate(graph._edge_pairs) if i != j
    ]
    if n == 1:
        return 1
    count = 0
    for subset in combinations(nonloop, n - 1):
        if _is_spanning_tree(graph, subset):
            count += 1
    return count


def spanning_trees_avoiding(graph: Graph, e: int) -> int:
    """Spanning trees that do not use edge e, by direct enumeration."""
    n = graph.vertex_count
    nonloop = [
        k for k, (i, j) in enumerate(graph._edge_pairs) if i != j and k != e
    ]
    if n == 1:
        return 1
    count = 0
    for subset in combinations(nonloop, n - 1):
        if _is_spanning_tree(graph, subset):
            count += 1
    return count


def _is_spanning_tree(graph, edge_subset):
    n = graph.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = 0
    for e in edge_subset:
        i, j = graph._edge_pairs[e]
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
        merged += 1
    return merged == n - 1


def class_effective_brute(graph: Graph, coeffs) -> bool:
    """True iff some effective divisor of the same degree is equivalent,
    found by enumerating all of them and testing lattice membership."""
    degree = sum(coeffs)
    if degree < 0:
        return False
    lattice = principal_lattice(graph)
    n = graph.vertex_count
    for e in _compositions(degree, n):
        diff = tuple(a - b for a, b in zip(e, coeffs))
        if diff in lattice:
            return True
    return False


def rank_by_definition(graph: Graph, divisor: Divisor) -> int:
    """Rank straight from the definition: increase k until some effective
    test divisor of degree k defeats every equivalent representative.
    Exponential; intended for small graphs and small degrees only."""
    coeffs = divisor.coeffs
    n = graph.vertex_count
    if not class_effective_brute(graph, coeffs):
        return -1
    k = 1
    while True:
        for e in _compositions(k, n):
            rem = tuple(a - b for a, b in zip(coeffs, e))
            if not class_effective_brute(graph, rem):
                return k - 1
        k += 1


class FiringComponents:
    """Connected components of the chip-firing move graph on the set of
    divisors with all coefficients in [-bound, bound].

    Moves are single-vertex firings in both directions (an unfiring is
    someone else's firing, so undirected union-find captures the full
    equivalence generated inside the box). Two divisors in the same
    component are certainly linearly equivalent; the converse may need a
    larger box, which callers escalate.
    """

    def __init__(self, graph: Graph, bound: int):
        self.graph = graph
        self.bound = bound
        n = graph.vertex_count
        radix = 2 * bound + 1
        self._radix = radix
        self._n = n
        size = radix**n
        parent = list(range(size))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        moves = []
        for i in range(n):
            delta = [0] * n
            delta[i] = -graph._degree[i]
            for j, m in graph._neighbors[i]:
                delta[j] = m
            moves.append(tuple(delta))

        for idx, coeffs in enumerate(product(range(-bound, bound + 1), repeat=n)):
            for delta in moves:
                target_idx = 0
                ok = True
                for c, dlt in zip(coeffs, delta):
                    t = c + dlt
                    if t < -bound or t > bound:
                        ok = False
                        break
                    target_idx = target_idx * radix + (t + bound)
                if ok:
                    ra, rb = find(idx), find(target_idx)
                    if ra != rb:
                        parent[ra] = rb
        self._parent = parent
        self._find = find

    def root(self, coeffs):
        idx = 0
        b = self.bound
        radix = self._radix
        for c in coeffs:
            if c < -b or c > b:
                raise ValueError("coefficients outside the component box")
            idx = idx * radix + (c + b)
        return self._find(idx)

    def same_class(self, c1, c2) -> bool:
        return self.root(c1) == self.root(c2)


def equivalent_by_firing(graph: Graph, c1, c2, bound: int) -> bool:
    """Bounded chip-firing reachability between two coefficient tuples."""
    return FiringComponents(graph, bound).same_class(c1, c2)
