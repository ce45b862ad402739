"""Baker-Norine rank and the verification predicates built on it.

The rank of a divisor d is the largest k such that subtracting any
effective divisor of degree k leaves a class containing an effective
divisor (-1 if the class of d itself contains none). On a weightless
loopless graph this is computed exactly by the classical recursion

    rank(d) = -1                      if no effective divisor ~ d,
    rank(d) = 1 + min_v rank(d - v)   otherwise,

which is the increasing-degree search over effective test divisors e with
the class-effectivity tests shared through q-reduced canonical forms: two
test divisors whose remainders d - e are linearly equivalent cost one
burning run between them. States are memoised per graph, so sweeping many
divisors on one graph (as the property suites do) is cheap after warm-up.

General graphs are handled through their weightless loopless model: the
divisor is extended by zeros on the midpoint vertices and ranked there.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .divisors import Divisor, canonical_divisor
from .errors import (
    DegreeCapExceeded,
    DegreeNotZero,
    DegreeOutOfRange,
    GraphMismatch,
    RequiresWeightlessLoopless,
)
from .graphs import Graph
from .picard import is_equivalent, reduce_coeffs

DEFAULT_DEGREE_CAP = 30


@dataclass(frozen=True)
class RankResult:
    """Rank value plus, optionally, the first failing test divisor.

    For value r, ``witness`` is the lexicographically least effective
    divisor e of degree r + 1 such that d - e has no effective equivalent;
    it lives on the graph the search ran on (the weightless loopless model
    when the input graph carries weights or loops).
    """

    value: int
    witness: Optional[Divisor] = None

    def __int__(self):
        return self.value


class _RankEngine:
    """Memoised rank search bound to one weightless loopless graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.vertex_count
        self._reduced = {}
        self._rank = {}

    def reduced(self, coeffs):
        r = self._reduced.get(coeffs)
        if r is None:
            r = reduce_coeffs(self.graph, coeffs, 0)
            self._reduced[coeffs] = r
        return r

    def class_effective(self, coeffs):
        if sum(coeffs) < 0:
            return False
        return self.reduced(coeffs)[0] >= 0

    def rank(self, coeffs):
        if sum(coeffs) < 0:
            return -1
        red = self.reduced(coeffs)
        val = self._rank.get(red)
        if val is None:
            val = self._rank_of_reduced(red)
        return val

    def _rank_of_reduced(self, red):
        if red[0] < 0:
            self._rank[red] = -1
            return -1
        best = None
        n = self.n
        rank = self.rank
        for v in range(n):
            child = list(red)
            child[v] -= 1
            rv = rank(tuple(child))
            if rv == -1:
                best = -1
                break
            if best is None or rv < best:
                best = rv
        val = 1 + best
        self._rank[red] = val
        return val


def _engine(graph: Graph) -> _RankEngine:
    eng = graph._cache.get("rank_engine")
    if eng is None:
        eng = _RankEngine(graph)
        graph._cache["rank_engine"] = eng
    return eng


def _compositions(total, length):
    """All length-tuples of nonnegative ints summing to total, in
    ascending lexicographic order."""
    if length == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, length - 1):
            yield (head,) + tail


def _witness(engine, coeffs, value):
    for e in _compositions(value + 1, engine.n):
        rem = tuple(a - b for a, b in zip(coeffs, e))
        if not engine.class_effective(rem):
            return Divisor(engine.graph, e)
    return None


def _require_plain(graph):
    if not graph.is_weightless_loopless():
        raise RequiresWeightlessLoopless(
            "operation needs a weightless loopless graph; rank on general "
            "graphs goes through Graph.loopless_model()"
        )


def is_class_effective(divisor: Divisor) -> bool:
    """True iff some effective divisor is linearly equivalent to this one
    (weightless loopless graphs only)."""
    _require_plain(divisor.graph)
    return _engine(divisor.graph).class_effective(divisor.coeffs)


def rank_weightless(
    divisor: Divisor, *, with_witness: bool = False, max_degree: int = DEFAULT_DEGREE_CAP
) -> RankResult:
    """Exact rank on a weightless loopless graph."""
    _require_plain(divisor.graph)
    if divisor.degree > max_degree:
        raise DegreeCapExceeded(
            f"degree {divisor.degree} exceeds the search cap {max_degree}"
        )
    engine = _engine(divisor.graph)
    value = engine.rank(divisor.coeffs)
    witness = _witness(engine, divisor.coeffs, value) if with_witness else None
    return RankResult(value, witness)


def rank(
    graph: Graph,
    divisor: Divisor,
    *,
    with_witness: bool = False,
    max_degree: int = DEFAULT_DEGREE_CAP,
) -> RankResult:
    """Rank of a divisor on any graph, through the weightless loopless
    model (a graph that is already weightless and loopless is its own
    model, so this agrees with rank_weightless there)."""
    if divisor.graph != graph:
        raise GraphMismatch("divisor does not live on the given graph")
    if divisor.degree > max_degree:
        raise DegreeCapExceeded(
            f"degree {divisor.degree} exceeds the search cap {max_degree}"
        )
    model = graph.loopless_model()
    coeffs = model.embed_coeffs(divisor.coeffs)
    engine = _engine(model.model)
    value = engine.rank(coeffs)
    witness = _witness(engine, coeffs, value) if with_witness else None
    return RankResult(value, witness)


def riemann_roch_check(graph: Graph, divisor: Divisor) -> bool:
    """Evaluate rank(d) - rank(k - d) == degree - genus + 1."""
    k = canonical_divisor(graph)
    r_d = rank(graph, divisor).value
    r_res = rank(graph, k - divisor).value
    return r_d - r_res == divisor.degree - graph.genus() + 1


def clifford_check(graph: Graph, divisor: Divisor) -> bool:
    """Check rank(d) <= degree/2 for 0 <= degree <= 2g - 2 (exact
    integer comparison, no division)."""
    two_g = 2 * graph.genus()
    if not 0 <= divisor.degree <= two_g - 2:
        raise DegreeOutOfRange(
            f"degree {divisor.degree} outside [0, {two_g - 2}]"
        )
    return 2 * rank(graph, divisor).value <= divisor.degree


def certify_rank_below(graph: Graph, divisor: Divisor, v, r: int) -> bool:
    """Cut criterion certifying rank(d) <= r - 1 (CLI subcommand ``kz``).

    True iff d(v) < r and every nonempty subset Z of V - {v} holds fewer
    chips than the size of its boundary cut. When true, the class of
    d - r*v contains no effective divisor, so the rank bound follows
    (the tests cross-check this against the exact rank).
    """
    if r < 0:
        raise DegreeOutOfRange("r must be >= 0")
    vi = graph.index(v)
    coeffs = divisor.coeffs
    if coeffs[vi] >= r:
        return False
    n = graph.vertex_count
    adj = graph._adj
    deg = graph._degree
    others = [i for i in range(n) if i != vi]
    m = len(others)
    for mask in range(1, 1 << m):
        zs = [others[k] for k in range(m) if mask >> k & 1]
        chips = sum(coeffs[i] for i in zs)
        inside = 0
        for a in range(len(zs)):
            row = adj[zs[a]]
            for b in range(a + 1, len(zs)):
                inside += row[zs[b]]
        cut = sum(deg[i] for i in zs) - 2 * inside
        if chips >= cut:
            return False
    return True


class DegreeZeroClass(Enum):
    PRINCIPAL_RANK0 = "principal, rank 0"
    NONPRINCIPAL_RANKNEG = "non-principal, rank -1"


def degree_zero_classification(graph: Graph, divisor: Divisor) -> DegreeZeroClass:
    """Degree-zero dichotomy: a degree-0 class is either principal (rank 0)
    or contains no effective divisor at all (rank -1)."""
    if divisor.degree != 0:
        raise DegreeNotZero(f"degree is {divisor.degree}, not 0")
    if is_equivalent(divisor, Divisor.zero(graph)):
        return DegreeZeroClass.PRINCIPAL_RANK0
    return DegreeZeroClass.NONPRINCIPAL_RANKNEG
