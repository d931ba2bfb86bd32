"""Exact brute-force ground truth for small instances.

Everything here enumerates: neighbourhoods word by word, graphs edge subset by
edge subset, trees codeword by codeword. Probabilities are ``Fraction``s.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb, lcm, perm, prod
from typing import Callable, Iterator, Sequence

import numpy as np

from .blocks import block_degree_sequence, decompose_blocks
from .codec import count_with_tree, decode_extended, encode_extended, unique_member
from .explosion import ExplosionNeighborhood, descriptor_of, explode, neighborhood_of, skeleton_tree
from .graph import LabeledGraph, components, induced_relabeled, is_connected
from .prufer import WeightModel, appearances, bfs_distances, prufer_decode


@dataclass
class OracleConfig:
    enumeration_cap: int = 10**6
    max_tail_m: int = 8
    max_class_n: int = 7
    max_canonical_block: int = 8


CONFIG = OracleConfig()


class CapExceededError(ValueError):
    pass


@dataclass
class OracleReport:
    check: str
    parameters: dict
    exact_value: Fraction | None
    bound: str | None
    passed: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "exact_value": None if self.exact_value is None else f"{self.exact_value.numerator}/{self.exact_value.denominator}",
            "decimal": None if self.exact_value is None else float(self.exact_value),
            "bound": self.bound,
            "pass": self.passed,
            **({"details": self.details} if self.details else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


@dataclass(frozen=True)
class ExactDistribution:
    support: tuple
    probabilities: tuple[Fraction, ...]

    def __post_init__(self):
        if any(p < 0 for p in self.probabilities) or sum(self.probabilities) != 1:
            raise ValueError("probabilities must be nonnegative and sum to exactly 1")

    @classmethod
    def from_counts(cls, counts: Counter) -> "ExactDistribution":
        total = sum(counts.values())
        keys = sorted(counts)
        return cls(tuple(keys), tuple(Fraction(counts[k], total) for k in keys))

    def tail(self, s) -> Fraction:
        return sum((p for x, p in zip(self.support, self.probabilities) if x >= s), Fraction(0))


# ---------------------------------------------------------------- enumeration


def enumerate_neighborhood(d: ExplosionNeighborhood, cap: int | None = None) -> list[LabeledGraph]:
    """All members of the neighbourhood, in lexicographic codeword order."""
    cap = CONFIG.enumeration_cap if cap is None else cap
    if d.k == 1:
        return [unique_member(d)]
    if d.size > cap:
        raise CapExceededError(f"{d.n}^{d.k - 1} = {d.size} members exceeds cap {cap}")
    out = [decode_extended(w, d) for w in itertools.product(range(1, d.n + 1), repeat=d.k - 1)]
    if len(set(out)) != len(out):
        raise AssertionError("extended decoding is not injective on this neighbourhood")
    return out


def all_graphs(n: int) -> Iterator[LabeledGraph]:
    """Every labeled simple graph on [n], by edge subset."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def block_graphs(g: LabeledGraph) -> list[LabeledGraph]:
    """Each block as a graph on [|B|], relabeled order-preservingly."""
    dec = decompose_blocks(g)
    out = []
    for verts, es in zip(dec.blocks, dec.block_edges):
        labels = sorted(verts)
        index = {v: i + 1 for i, v in enumerate(labels)}
        out.append(LabeledGraph.from_edges(len(labels), ((index[a], index[b]) for a, b in es)))
    return out


def forest_blocks(b: LabeledGraph) -> bool:
    """Blocks of forests: a single vertex or a single edge."""
    return b.n <= 2 and len(b.edges) == b.n - 1


def triangle_blocks(b: LabeledGraph) -> bool:
    return b.n == 1 or (b.n == 3 and len(b.edges) == 3)


def enumerate_class_small(
    n: int, block_predicate: Callable[[LabeledGraph], bool], max_n: int | None = None
) -> list[LabeledGraph]:
    """Graphs on [n] all of whose blocks (isolated vertices included) satisfy the predicate."""
    max_n = CONFIG.max_class_n if max_n is None else max_n
    if n > max_n:
        raise CapExceededError(f"n={n} exceeds the class-enumeration limit {max_n}")
    return [g for g in all_graphs(n) if all(block_predicate(b) for b in block_graphs(g))]


# ---------------------------------------------------------------- equivalence


def canonical_form(g: LabeledGraph, max_n: int | None = None) -> tuple:
    """Lexicographically least sorted edge list over all relabelings."""
    max_n = CONFIG.max_canonical_block if max_n is None else max_n
    if g.n > max_n:
        raise CapExceededError(f"canonical labeling limited to {max_n} vertices, got {g.n}")
    best = None
    for p in itertools.permutations(range(1, g.n + 1)):
        form = tuple(sorted((min(p[u - 1], p[v - 1]), max(p[u - 1], p[v - 1])) for u, v in g.edges))
        if best is None or form < best:
            best = form
    return (g.n, best)


def block_signature(g: LabeledGraph) -> tuple:
    """Sorted block isomorphism types of a connected graph."""
    return tuple(sorted(canonical_form(b) for b in block_graphs(g)))


def component_signatures(g: LabeledGraph, match_vertex_sets: bool = True) -> Counter:
    sig: Counter = Counter()
    for part in components(g):
        sub, _ = induced_relabeled(g, part)
        key = (part if match_vertex_sets else len(part), block_signature(sub))
        sig[key] += 1
    return sig


def graphs_equivalent(g: LabeledGraph, h: LabeledGraph, match_vertex_sets: bool = True) -> bool:
    """Component-wise equal multisets of block types.

    With ``match_vertex_sets`` (the default) matched components must also span the
    same vertex set; without it only their sizes have to agree.
    """
    if g.n != h.n:
        return False
    return component_signatures(g, match_vertex_sets) == component_signatures(h, match_vertex_sets)


# ---------------------------------------------------------------- distinct values


def _as_distribution(p: Sequence) -> tuple[Fraction, ...]:
    q = tuple(Fraction(x) for x in p)
    if any(x < 0 for x in q) or sum(q) != 1:
        raise ValueError("p must be a nonnegative distribution summing to exactly 1")
    return q


def distinct_prob_exact(p: Sequence, j: int) -> tuple[Fraction, Fraction]:
    """(P(X_1 is not repeated among X_1..X_j), P(X_1..X_j all distinct)) for i.i.d. X ~ p.

    Both are computed by brute force: the first by conditioning on ``X_1`` and the
    second by summing over every injective ``j``-tuple.
    """
    q = _as_distribution(p)
    n = len(q)
    if not 2 <= j <= n:
        raise ValueError(f"need 2 <= j <= n, got j={j}, n={n}")
    not_repeated = sum((x * (1 - x) ** (j - 1) for x in q), Fraction(0))
    all_distinct = Fraction(0)
    for tup in itertools.permutations(range(n), j):
        term = Fraction(1)
        for i in tup:
            term *= q[i]
        all_distinct += term
    return not_repeated, all_distinct


def not_repeated_bound(n: int, j: int) -> Fraction:
    return (1 - Fraction(1, n)) ** (j - 1)


def all_distinct_bound(n: int, j: int) -> Fraction:
    return Fraction(perm(n, j), n**j)


def random_rational_distribution(n: int, rng: np.random.Generator, denominator: int = 60) -> tuple[Fraction, ...]:
    """A random point of the simplex with rational coordinates over ``denominator``.

    Zeros are allowed; the cut points are uniform integers.
    """
    cuts = sorted(rng.integers(0, denominator + 1, size=n - 1).tolist())
    edges = [0] + cuts + [denominator]
    return tuple(Fraction(edges[i + 1] - edges[i], denominator) for i in range(n))


# ---------------------------------------------------------------- weighted tree distances


@lru_cache(maxsize=None)
def _distance_table(m: int):
    """Every codeword of length m - 2 grouped by its appearance vector.

    Returns ``(count_vectors, pairs, hist)`` where ``hist[c, p, s]`` is the number of
    codewords with appearance vector ``count_vectors[c]`` whose tree puts pair
    ``pairs[p]`` at distance exactly ``s``.
    """
    pairs = list(itertools.combinations(range(1, m + 1), 2))
    index: dict[tuple, int] = {}
    rows: list[np.ndarray] = []
    for word in itertools.product(range(1, m + 1), repeat=m - 2):
        counts = tuple(appearances(word, m))
        c = index.get(counts)
        if c is None:
            c = index[counts] = len(rows)
            rows.append(np.zeros((len(pairs), m), dtype=np.int64))
        adj = prufer_decode(word, m).adjacency
        dist = [bfs_distances(adj, i) for i in range(m + 1)] if m > 1 else []
        row = rows[c]
        for p, (i, j) in enumerate(pairs):
            row[p, dist[i][j]] += 1
    vectors = sorted(index, key=index.get)
    return vectors, pairs, np.stack(rows) if rows else np.zeros((0, len(pairs), m), dtype=np.int64)


def _pair_tails(wm: WeightModel, t: int) -> dict[tuple[int, int], Fraction]:
    m = wm.m
    if not 2 <= m <= CONFIG.max_tail_m:
        raise CapExceededError(f"m={m} outside the enumeration range [2, {CONFIG.max_tail_m}]")
    vectors, pairs, hist = _distance_table(m)
    w = [Fraction(x) for x in wm.weights]
    # scaling all weights by a common denominator leaves the law unchanged
    scale = lcm(*(x.denominator for x in w))
    iw = [int(x * scale) for x in w]
    itotal = sum(iw)
    mono = [prod(iw[j] ** c for j, c in enumerate(vec)) for vec in vectors]
    s0 = max(t + 1, 0)
    tails = hist[:, :, s0:].sum(axis=2) if s0 < m else np.zeros(hist.shape[:2], dtype=np.int64)
    out = {}
    denom = itotal ** (m - 2)
    for p, pair in enumerate(pairs):
        num = sum(mv * int(tails[c, p]) for c, mv in enumerate(mono) if tails[c, p])
        out[pair] = Fraction(num, denom)
    return out


def distance_tail_exact(wm: WeightModel, t: int) -> Fraction:
    """P(dist(m-1, m; T(X)) >= t + 1) for the weighted random tree, exactly."""
    return _pair_tails(wm, t)[(wm.m - 1, wm.m)]


def distance_tails_all_pairs(wm: WeightModel, t: int) -> dict[tuple[int, int], Fraction]:
    return _pair_tails(wm, t)


def distance_tail_bruteforce(wm: WeightModel, t: int, pair: tuple[int, int] | None = None) -> Fraction:
    """Same quantity by direct weighted enumeration, without the grouping shortcut."""
    m = wm.m
    i, j = pair or (m - 1, m)
    w = [Fraction(x) for x in wm.weights]
    total = sum(w)
    acc = Fraction(0)
    for word in itertools.product(range(1, m + 1), repeat=m - 2):
        tree = prufer_decode(word, m)
        if bfs_distances(tree.adjacency, i)[j] >= t + 1:
            pr = Fraction(1)
            for x in word:
                pr *= w[x - 1] / total
            acc += pr
    return acc


def exp_neg(x: Fraction, digits: int = 60) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = digits
        return (-(Decimal(x.numerator) / Decimal(x.denominator))).exp()


def le_exp_neg(p: Fraction, x: Fraction, digits: int = 60) -> bool:
    """Exact test of ``p <= exp(-x)`` for rational ``p`` and ``x``.

    ``exp(-x)`` is irrational unless ``x == 0``, so a high-precision value settles
    every comparison except a near tie, which raises.
    """
    if x == 0:
        return p <= 1
    approx = Fraction(exp_neg(x, digits))
    gap = p - approx
    if abs(gap) < Fraction(1, 10 ** (digits - 5)):
        raise ArithmeticError("comparison with exp(-x) is too close to call")
    return gap < 0


def distance_bound_exponent(t: int, m: int) -> Fraction:
    """The exponent C(t, 2) / m of the distance-tail bound."""
    return Fraction(comb(t, 2), m)


# ---------------------------------------------------------------- dominance


@lru_cache(maxsize=None)
def tree_max_degree_distribution(n: int) -> ExactDistribution:
    """Exact law of the maximum degree of a uniform labeled tree on [n], by enumeration."""
    if n == 1:
        return ExactDistribution((0,), (Fraction(1),))
    counts: Counter = Counter()
    for word in itertools.product(range(1, n + 1), repeat=n - 2):
        counts[max(prufer_decode(word, n).degrees())] += 1
    return ExactDistribution.from_counts(counts)


@dataclass
class DominanceResult:
    passed: bool
    witness: int | None
    neighborhood_tails: dict[int, Fraction]
    tree_tails: dict[int, Fraction]


def check_marginal_dominance(d: ExplosionNeighborhood, cap: int | None = None) -> DominanceResult:
    """Check P(max block degree of R >= s) <= P(max degree of T_n >= s) for every s."""
    cap = CONFIG.enumeration_cap if cap is None else cap
    if d.n ** max(d.n - 2, 0) > cap:
        raise CapExceededError(f"tree side needs {d.n}^{d.n - 2} codewords, cap is {cap}")
    members = enumerate_neighborhood(d, cap)
    r_law = ExactDistribution.from_counts(Counter(max(block_degree_sequence(h)) for h in members))
    t_law = tree_max_degree_distribution(d.n)
    r_tails = {s: r_law.tail(s) for s in range(1, d.n + 1)}
    t_tails = {s: t_law.tail(s) for s in range(1, d.n + 1)}
    witness = next((s for s in r_tails if r_tails[s] > t_tails[s]), None)
    return DominanceResult(witness is None, witness, r_tails, t_tails)


# ---------------------------------------------------------------- two-paths counterexample


def in_two_triples_set(x: Sequence[int]) -> bool:
    """Whether the six coordinates split into two 3-sets each summing to at least 4."""
    total = sum(x)
    for I in itertools.combinations(range(6), 3):
        s = sum(x[i] for i in I)
        if s >= 4 and total - s >= 4:
            return True
    return False


def two_paths_graph() -> LabeledGraph:
    return LabeledGraph.from_edges(6, [(1, 2), (2, 3), (4, 5), (5, 6)])


@dataclass
class CounterexampleReport:
    equivalence_class_size: int
    isomorphism_class_size: int
    random_graph_prob: Fraction
    random_graph_prob_iso: Fraction
    tree_prob: Fraction
    star_in_set: bool

    @property
    def passed(self) -> bool:
        return (
            self.random_graph_prob == 1
            and self.random_graph_prob_iso == 1
            and self.tree_prob < 1
            and not self.star_in_set
        )


def two_paths_counterexample() -> CounterexampleReport:
    """Forests on [6] made of two paths of length 2 against the uniform tree on [6].

    The class is taken two ways: graphs equivalent to the base graph component by
    component on the same vertex sets (9 graphs), and every graph isomorphic to it
    (90 graphs: ten ways to split [6] into two triples, three paths on each).
    """
    g = two_paths_graph()
    base = component_signatures(g, match_vertex_sets=False)
    same_vertex_sets, iso = [], []
    for h in all_graphs(6):
        if len(h.edges) != 4:
            continue
        if graphs_equivalent(g, h):
            same_vertex_sets.append(h)
        if component_signatures(h, match_vertex_sets=False) == base:
            iso.append(h)

    def prob(graphs):
        return Fraction(sum(in_two_triples_set(block_degree_sequence(h)) for h in graphs), len(graphs))

    trees = [prufer_decode(w, 6) for w in itertools.product(range(1, 7), repeat=4)]
    tree_prob = Fraction(sum(in_two_triples_set(t.degrees()) for t in trees), len(trees))
    star = (5, 1, 1, 1, 1, 1)
    return CounterexampleReport(
        equivalence_class_size=len(same_vertex_sets),
        isomorphism_class_size=len(iso),
        random_graph_prob=prob(same_vertex_sets),
        random_graph_prob_iso=prob(iso),
        tree_prob=tree_prob,
        star_in_set=in_two_triples_set(star),
    )


# ---------------------------------------------------------------- sweeps


def connected_multiblock_graphs(n: int) -> Iterator[LabeledGraph]:
    for g in all_graphs(n):
        if is_connected(g) and len(decompose_blocks(g)) >= 2:
            yield g


def all_trees(m: int) -> list:
    if m == 1:
        return [prufer_decode((), 1)]
    return [prufer_decode(w, m) for w in itertools.product(range(1, m + 1), repeat=m - 2)]


@dataclass
class NeighborhoodAudit:
    size: int
    distinct: bool
    members_share_descriptor: bool
    roundtrip: bool
    degree_law: bool
    equivalent: bool | None
    tree_counts_match: bool
    tree_total: int

    @property
    def passed(self) -> bool:
        return (
            self.distinct
            and self.members_share_descriptor
            and self.roundtrip
            and self.degree_law
            and self.equivalent is not False
            and self.tree_counts_match
        )


def audit_neighborhood(
    d: ExplosionNeighborhood, check_equivalence: bool = False, cap: int | None = None
) -> tuple[NeighborhoodAudit, list[LabeledGraph]]:
    """Decode every word and check the bijection, the degree law and the per-tree counts."""
    cap = CONFIG.enumeration_cap if cap is None else cap
    if d.size > cap:
        raise CapExceededError(f"{d.size} members exceeds cap {cap}")
    members = []
    share = roundtrip = degree_law = True
    tally: Counter = Counter()
    for word in itertools.product(range(1, d.n + 1), repeat=d.k - 1):
        h = decode_extended(word, d)
        members.append(h)
        x = explode(h)
        share &= neighborhood_of(x) == d
        roundtrip &= encode_extended(h, d) == word
        degree_law &= block_degree_sequence(h) == tuple(a + 1 for a in appearances(word, d.n))
        tally[skeleton_tree(x).edges] += 1
    distinct = len(set(members)) == len(members)
    trees = all_trees(d.k + 1)
    counts_match = all(tally.get(t.edges, 0) == count_with_tree(d, t) for t in trees)
    counts_match &= sum(tally.values()) == d.size == sum(count_with_tree(d, t) for t in trees)
    equivalent = None
    if check_equivalence:
        base = block_signature(members[0])
        equivalent = all(block_signature(h) == base for h in members)
    audit = NeighborhoodAudit(
        size=len(members),
        distinct=distinct,
        members_share_descriptor=share,
        roundtrip=roundtrip,
        degree_law=degree_law,
        equivalent=equivalent,
        tree_counts_match=counts_match,
        tree_total=sum(tally.values()),
    )
    return audit, members


def neighborhood_partition(n: int) -> Iterator[tuple[LabeledGraph, ExplosionNeighborhood]]:
    """One representative per explosion neighbourhood of connected graphs on [n] with k >= 2."""
    seen: set = set()
    for g in connected_multiblock_graphs(n):
        if g.edges in seen:
            continue
        d = descriptor_of(g)
        yield g, d
        for h in enumerate_neighborhood(d):
            seen.add(h.edges)


def sweep_bijection(max_n: int) -> OracleReport:
    """Audit every neighbourhood of connected multi-block graphs on [n] for n <= max_n."""
    graphs = neighborhoods = 0
    failures = []
    for n in range(2, max_n + 1):
        covered: set = set()
        expected = sum(1 for _ in connected_multiblock_graphs(n))
        for g, d in neighborhood_partition(n):
            audit, members = audit_neighborhood(d)
            neighborhoods += 1
            edge_sets = {h.edges for h in members}
            ok = audit.passed and g.edges in edge_sets and not (edge_sets & covered)
            covered |= edge_sets
            if not ok:
                failures.append({"n": n, "graph": sorted(g.edges)})
        graphs += len(covered)
        if len(covered) != expected:
            failures.append({"n": n, "covered": len(covered), "expected": expected})
    return OracleReport(
        check="bijection_and_tree_counts",
        parameters={"max_n": max_n},
        exact_value=None,
        bound=None,
        passed=not failures,
        details={"graphs": graphs, "neighbourhoods": neighborhoods, "failures": failures[:5]},
    )


def sweep_dominance(max_n: int) -> OracleReport:
    checked = 0
    failures = []
    for n in range(2, max_n + 1):
        for g, d in neighborhood_partition(n):
            res = check_marginal_dominance(d)
            checked += 1
            if not res.passed:
                failures.append({"n": n, "graph": sorted(g.edges), "s": res.witness})
    return OracleReport(
        check="max_block_degree_dominated_by_tree",
        parameters={"max_n": max_n},
        exact_value=None,
        bound=None,
        passed=not failures,
        details={"neighbourhoods": checked, "failures": failures[:5]},
    )


def sweep_distinct(max_n: int, samples: int = 100, seed: int = 0) -> OracleReport:
    rng = np.random.default_rng(seed)
    checked = 0
    failures = []
    for n in range(2, max_n + 1):
        dists = [tuple(Fraction(1, n) for _ in range(n))]
        dists += [random_rational_distribution(n, rng) for _ in range(samples)]
        for j in range(2, n + 1):
            a_bound, b_bound = not_repeated_bound(n, j), all_distinct_bound(n, j)
            for idx, p in enumerate(dists):
                a, b = distinct_prob_exact(p, j)
                checked += 1
                ok = a <= a_bound and b <= b_bound
                if idx == 0:
                    ok &= b == b_bound and a == a_bound
                if not ok:
                    failures.append({"n": n, "j": j, "p": [str(x) for x in p]})
    return OracleReport(
        check="distinct_values",
        parameters={"max_n": max_n, "samples": samples, "seed": seed},
        exact_value=None,
        bound="(1-1/n)^(j-1) and (n)_j/n^j",
        passed=not failures,
        details={"cases": checked, "failures": failures[:5]},
    )


def integer_weight_models(max_m: int, max_total: int, min_m: int = 2) -> Iterator[tuple[int, ...]]:
    """All positive integer weight vectors of length ``min_m..max_m`` with sum at most ``max_total``."""
    for m in range(min_m, max_m + 1):
        for total in range(m, max_total + 1):
            # compositions of total into m positive parts
            for cuts in itertools.combinations(range(1, total), m - 1):
                bounds = (0,) + cuts + (total,)
                yield tuple(bounds[i + 1] - bounds[i] for i in range(m))


def sweep_distance_tails(max_m: int = 7, max_total: int = 12) -> OracleReport:
    models = 0
    worst = Fraction(0)
    failures = []
    for w in integer_weight_models(max_m, max_total):
        wm = WeightModel(w)
        m = wm.m
        models += 1
        for t in range(0, m + 1):
            x = distance_bound_exponent(t, m)
            tails = distance_tails_all_pairs(wm, t)
            last = tails[(m - 1, m)]
            ok = le_exp_neg(last, x)
            # every pair obeys the same bound, hence the expected count obeys C(m,2) times it
            ok &= all(le_exp_neg(v, x) for v in tails.values())
            ok &= le_exp_neg(sum(tails.values()) / comb(m, 2), x)
            if last > worst:
                worst = last
            if not ok:
                failures.append({"weights": list(w), "t": t})
    return OracleReport(
        check="weighted_tree_distance_tails",
        parameters={"max_m": max_m, "max_weight_sum": max_total},
        exact_value=None,
        bound="exp(-C(t,2)/m) per pair; C(m,2) exp(-C(t,2)/m) expected long pairs",
        passed=not failures,
        details={"models": models, "failures": failures[:5]},
    )


def check_prufer_reduction(max_n: int) -> OracleReport:
    """For the path on [n] the neighbourhood is every labeled tree, decoded exactly as Prufer does."""
    from .graph import path_graph

    failures = []
    for n in range(3, max_n + 1):
        d = descriptor_of(path_graph(n))
        decoded = set()
        for word in itertools.product(range(1, n + 1), repeat=n - 2):
            h = decode_extended(word, d)
            t = prufer_decode(word, n)
            decoded.add(h.edges)
            if h.edges != t.edges:
                failures.append({"n": n, "word": list(word)})
                break
        if decoded != {t.edges for t in all_trees(n)} or len(decoded) != n ** (n - 2):
            failures.append({"n": n, "trees": len(decoded)})
    return OracleReport(
        check="path_neighbourhood_is_prufer",
        parameters={"max_n": max_n},
        exact_value=None,
        bound=None,
        passed=not failures,
        details={"failures": failures[:5]},
    )


def counterexample_report() -> OracleReport:
    rep = two_paths_counterexample()
    return OracleReport(
        check="two_paths_counterexample",
        parameters={"n": 6},
        exact_value=rep.tree_prob,
        bound="random graph probability 1, tree probability < 1",
        passed=rep.passed and rep.isomorphism_class_size == 90 and rep.equivalence_class_size == 9,
        details={
            "equivalence_class_size": rep.equivalence_class_size,
            "isomorphism_class_size": rep.isomorphism_class_size,
            "random_graph_prob": str(rep.random_graph_prob_iso),
            "tree_prob": str(rep.tree_prob),
        },
    )


def run_verification(max_n: int = 6, max_m: int = 7, max_weight_sum: int = 12) -> list[OracleReport]:
    from .graph import pendant_triangle_graph

    d = descriptor_of(pendant_triangle_graph())
    audit, _ = audit_neighborhood(d, check_equivalence=True)
    reports = [
        OracleReport(
            check="pendant_triangle_bijection",
            parameters={"n": 5, "k": 3},
            exact_value=None,
            bound=None,
            passed=audit.passed and audit.size == 25,
            details={"members": audit.size},
        ),
        sweep_bijection(max_n),
        check_prufer_reduction(max_n),
        sweep_dominance(max_n),
        sweep_distinct(max_n),
        sweep_distance_tails(max_m, max_weight_sum),
        counterexample_report(),
    ]
    return reports

