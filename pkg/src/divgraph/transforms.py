"""Divisor push-forward under contraction and multidegree balance analysis.

The balance inequality compares d(Z) against k(Z)*d/(2g-2) - (Z.Z^c)/2
over every vertex subset Z; the bound is generally non-integral, so it is
evaluated in exact rational arithmetic throughout (fractions.Fraction or
cross-multiplied integers, never floats).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .divisors import Divisor, canonical_divisor, firing_divisor
from .errors import (
    GenusTooSmall,
    GraphMismatch,
    MultiEdgeContraction,
    NotABridge,
    NotSemistable,
    SearchExhausted,
)
from .graphs import ContractionMap, Graph
from .rank import rank


def push_forward(cm: ContractionMap, divisor: Divisor) -> Divisor:
    """Sum the coefficients over each fiber of the contraction; a
    degree-preserving surjective group homomorphism."""
    if divisor.graph != cm.source:
        raise GraphMismatch("divisor does not live on the contraction source")
    target = cm.target
    coeffs = [0] * target.vertex_count
    for v, c in zip(cm.source.vertex_ids, divisor.coeffs):
        coeffs[target.index(cm.vertex_map[v])] += c
    return Divisor(target, coeffs)


def verify_prin_pushforward(cm: ContractionMap) -> bool:
    """Constructively check that the push-forward of the principal lattice
    covers the principal lattice of the target, for a single-edge
    contraction: away from the contracted edge the firing move of a vertex
    pushes to the firing move of its image, and the merged vertex's move
    is the push-forward of the sum of the two endpoint moves."""
    if not cm.is_single_edge():
        raise MultiEdgeContraction("expected a single contracted edge")
    (e,) = cm.contracted_edges
    a, b = cm.source.edges[e]
    merged = cm.vertex_map[a]
    for v in cm.source.vertex_ids:
        if v == a or v == b:
            continue
        pushed = push_forward(cm, firing_divisor(cm.source, v))
        if pushed != firing_divisor(cm.target, cm.vertex_map[v]):
            return False
    endpoint_sum = firing_divisor(cm.source, a) + firing_divisor(cm.source, b)
    return push_forward(cm, endpoint_sum) == firing_divisor(cm.target, merged)


def bridge_rank_preservation(cm: ContractionMap, divisor: Divisor) -> bool:
    """True iff contracting the bridge leaves the rank unchanged."""
    if not cm.is_single_edge():
        raise MultiEdgeContraction("expected a single contracted edge")
    (e,) = cm.contracted_edges
    if not cm.source.is_bridge(e):
        raise NotABridge(f"edge {e} is not a bridge")
    before = rank(cm.source, divisor).value
    after = rank(cm.target, push_forward(cm, divisor)).value
    return before == after


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of the balance inequality over all vertex subsets."""

    divisor: Divisor
    semibalanced: bool
    balanced: bool
    violating_set: Optional[frozenset] = None


def _check_semistable(graph: Graph):
    if 2 * graph.genus() - 2 <= 0:
        raise GenusTooSmall("balance analysis needs genus at least 2")
    for i, v in enumerate(graph.vertex_ids):
        if graph.weights[i] == 0 and graph.valency(v) < 2:
            raise NotSemistable(f"weight-0 vertex {v!r} has valency < 2")


class _BalanceContext:
    """Per-graph data shared by every balance evaluation: the canonical
    coefficients, the subset list in lexicographic order with precomputed
    cut sizes, and the weight-0 valency-2 vertices."""

    def __init__(self, graph: Graph):
        _check_semistable(graph)
        self.graph = graph
        self.k_coeffs = canonical_divisor(graph).coeffs
        self.two_g_minus_2 = 2 * graph.genus() - 2
        n = graph.vertex_count
        adj = graph._adj
        deg = graph._degree
        subsets = []
        for mask in range(1, (1 << n) - 1):
            zs = tuple(i for i in range(n) if mask >> i & 1)
            subsets.append(zs)
        subsets.sort()
        entries = []
        for zs in subsets:
            inside = 0
            for a in range(len(zs)):
                row = adj[zs[a]]
                for b in range(a + 1, len(zs)):
                    inside += row[zs[b]]
            cut = sum(deg[i] for i in zs) - 2 * inside
            k_z = sum(self.k_coeffs[i] for i in zs)
            entries.append((zs, k_z, cut))
        self.entries = entries
        self.special = tuple(
            i
            for i, v in enumerate(graph.vertex_ids)
            if graph.weights[i] == 0 and graph.valency(v) == 2
        )

    def first_violation(self, coeffs):
        """Lexicographically least subset violating the inequality, or the
        first special vertex with a negative coefficient; None if
        semibalanced."""
        degree = sum(coeffs)
        m = self.two_g_minus_2
        for zs, k_z, cut in self.entries:
            chips = sum(coeffs[i] for i in zs)
            # chips >= k_z*degree/m - cut/2, cleared of denominators
            if 2 * m * chips < 2 * k_z * degree - m * cut:
                return zs
        for i in self.special:
            if coeffs[i] < 0:
                return (i,)
        return None

    def is_semibalanced(self, coeffs):
        return self.first_violation(coeffs) is None


def _balance_ctx(graph: Graph) -> _BalanceContext:
    ctx = graph._cache.get("balance_ctx")
    if ctx is None:
        ctx = _BalanceContext(graph)
        graph._cache["balance_ctx"] = ctx
    return ctx


def balance_bound(graph: Graph, degree: int, zs) -> Fraction:
    """Exact lower bound k(Z)*degree/(2g-2) - (Z.Z^c)/2 for d(Z)."""
    k = canonical_divisor(graph)
    two_g_minus_2 = 2 * graph.genus() - 2
    cut = graph.intersection(zs, set(graph.vertex_ids) - set(zs))
    return Fraction(k.restrict(zs) * degree, two_g_minus_2) - Fraction(cut, 2)


def balance_report(graph: Graph, divisor: Divisor) -> BalanceReport:
    """Evaluate the balance inequality for every vertex subset plus the
    valency-2 vertex conditions, in exact rational arithmetic.

    Semibalanced: every subset Z satisfies the bound and every weight-0
    valency-2 vertex has d(v) >= 0. Balanced additionally requires
    d(v) = 1 there. ``violating_set`` carries the lexicographically least
    violating subset when not semibalanced, or the first vertex breaking
    the balanced condition when merely semibalanced.
    """
    ctx = _balance_ctx(graph)
    ids = graph.vertex_ids
    coeffs = divisor.coeffs
    violation = ctx.first_violation(coeffs)
    semibalanced = violation is None
    balanced = semibalanced and all(coeffs[i] == 1 for i in ctx.special)
    if semibalanced and not balanced:
        violation = next((i,) for i in ctx.special if coeffs[i] != 1)
    violating = (
        frozenset(ids[i] for i in violation) if violation is not None else None
    )
    return BalanceReport(divisor, semibalanced, balanced, violating)


def _abs_sum_tuples(length, bound, total):
    """Tuples in [-bound, bound]^length with |entries| summing to total,
    ascending lexicographic order."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(-bound, bound + 1):
        rem = total - abs(first)
        if 0 <= rem <= (length - 1) * bound:
            for rest in _abs_sum_tuples(length - 1, bound, rem):
                yield (first,) + rest


def _multipliers(length, bound):
    """All tuples in [-bound, bound]^length ordered by total absolute
    size then lexicographically; the zero tuple comes first."""
    for total in range(length * bound + 1):
        yield from _abs_sum_tuples(length, bound, total)


def find_semibalanced_representative(
    graph: Graph, divisor: Divisor, *, box: Optional[int] = None, retries: int = 4
) -> Divisor:
    """Search the divisor class for a semibalanced representative.

    Translates of the divisor by firing moves are scanned inside a
    multiplier box (default degree + genus + 2, doubled on exhaustion up
    to ``retries`` times); the first hit in (total size, lex) order is
    returned, so an already-semibalanced divisor comes back unchanged.
    """
    ctx = _balance_ctx(graph)
    if box is None:
        box = abs(divisor.degree) + graph.genus() + 2
    n = graph.vertex_count
    generators = [firing_divisor(graph, v).coeffs for v in graph.vertex_ids[1:]]
    base = divisor.coeffs
    for _ in range(retries + 1):
        for mults in _multipliers(n - 1, box):
            coeffs = list(base)
            for m, gen in zip(mults, generators):
                if m:
                    for i, gi in enumerate(gen):
                        coeffs[i] += m * gi
            if ctx.is_semibalanced(coeffs):
                return Divisor(graph, coeffs)
        box *= 2
    raise SearchExhausted(
        f"no semibalanced representative within multiplier box {box // 2}"
    )
