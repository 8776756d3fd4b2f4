"""Generators for the standard example families.

* skeletons and point sets,
* complexes on the edge set of a complete graph cut out by a monotone graph
  property (faces are the edge sets whose complement has the property),
* random self-dual complexes from weighted-majority thresholds,
* face counts of r-fold deleted joins.

Deleted joins are enumerated, never materialized: their vertex sets multiply
and only f-vectors are needed downstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .bitsets import full_mask, iter_singletons
from .complexes import Measure, SimplicialComplex, from_facets, sublevel_complex
from .errors import BudgetExceededError

DEFAULT_COLORING_BUDGET = 1 << 26
DEFAULT_DELETED_JOIN_BUDGET = 1 << 30


def skeleton(k: int, m: int) -> SimplicialComplex:
    """The k-skeleton of the (m-1)-simplex: all subsets of [m] of size <= k+1."""
    if not 0 <= k <= m - 1:
        raise ValueError(f"need 0 <= k <= m-1, got k={k}, m={m}")
    return from_facets(m, combinations(range(1, m + 1), k + 1))


def points(m: int) -> SimplicialComplex:
    """The 0-dimensional complex of m isolated points."""
    return skeleton(0, m)


@dataclass(frozen=True)
class GraphProperty:
    """A monotone property of graphs given by their edge subsets of K_n.

    ``make_test(n)`` returns a predicate on edge masks.  When the minimal
    edge sets with the property are known in closed form, ``make_minimal_sets``
    supplies them and complex construction avoids the exhaustive scan.
    """

    name: str
    make_test: Callable[[int], Callable[[int], bool]]
    make_minimal_sets: Optional[Callable[[int], tuple[int, ...]]] = None


def edge_table(n: int) -> tuple[tuple[int, int], ...]:
    """Edges of K_n in lexicographic order; edge index v (1-based) is table[v-1]."""
    return tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1))


def _edge_index_map(n: int) -> dict[tuple[int, int], int]:
    return {edge: idx for idx, edge in enumerate(edge_table(n))}


def _clique_masks(n: int, k: int) -> tuple[int, ...]:
    index = _edge_index_map(n)
    masks = []
    for verts in combinations(range(1, n + 1), k):
        mask = 0
        for e in combinations(verts, 2):
            mask |= 1 << index[e]
        masks.append(mask)
    return tuple(masks)


def contains_clique(k: int) -> GraphProperty:
    """The monotone property of containing a clique on k vertices."""
    if k < 2:
        raise ValueError("clique size must be at least 2")

    def make_test(n: int) -> Callable[[int], bool]:
        cliques = _clique_masks(n, k)
        return lambda graph: any(graph & c == c for c in cliques)

    return GraphProperty(
        name=f"contains_clique({k})",
        make_test=make_test,
        make_minimal_sets=lambda n: _clique_masks(n, k),
    )


def _minimal_property_sets(n: int, prop: GraphProperty, budget: int) -> tuple[int, ...]:
    # Generic fallback: scan all edge subsets by ascending cardinality.
    num_edges = n * (n - 1) // 2
    if 1 << num_edges > budget:
        raise BudgetExceededError(
            f"scanning 2^{num_edges} edge subsets exceeds the budget {budget}")
    test = prop.make_test(n)
    minimal = []
    for mask in range(1 << num_edges):
        if test(mask) and not any(test(mask ^ bit) for bit in iter_singletons(mask)):
            minimal.append(mask)
    return tuple(minimal)


def ramsey_complex(
    n: int, prop: GraphProperty, *, budget: int = DEFAULT_COLORING_BUDGET
) -> tuple[SimplicialComplex, tuple[tuple[int, int], ...]]:
    """The complex on the edges of K_n whose faces are the edge sets S such
    that the complementary graph has the property.

    Returns the complex together with the edge labeling table (vertex v of
    the complex is the edge ``table[v-1]`` of K_n).  Facets are complements
    of the minimal property graphs.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    num_edges = n * (n - 1) // 2
    if num_edges > 63:
        raise ValueError("edge set exceeds the 63-vertex ground-set limit")
    if prop.make_minimal_sets is not None:
        minimal = prop.make_minimal_sets(n)
    else:
        minimal = _minimal_property_sets(n, prop, budget)
    if not minimal:
        raise ValueError(f"property {prop.name} never holds on K_{n}; the complex would be void")
    full = full_mask(num_edges)
    K = from_facets(num_edges, [full ^ mask for mask in minimal])
    return K, edge_table(n)


def is_admissible(
    n: int,
    prop: GraphProperty,
    r: int,
    allow_empty_classes: bool = True,
    *,
    budget: int = DEFAULT_COLORING_BUDGET,
) -> bool:
    """Exhaustive scan over r-colorings of the edges of K_n.

    True iff every coloring has a class whose complement (the union of the
    other classes) satisfies the property.  With ``allow_empty_classes``
    False, colorings with an empty class are skipped, which quantifies over
    partitions into r nonempty classes instead.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if r < 2:
        raise ValueError("r must be at least 2")
    num_edges = n * (n - 1) // 2
    if r ** num_edges > budget:
        raise BudgetExceededError(
            f"{r}^{num_edges} colorings exceed the budget {budget}")
    test = prop.make_test(n)
    classes = [0] * r

    def assigned_union_ok(assigned: int) -> bool:
        # Once the union of the classes other than i has the property, every
        # completion keeps it (the union only grows): prune as satisfied.
        return any(test(assigned ^ classes[i]) for i in range(r))

    def scan(edge: int, assigned: int) -> bool:
        if assigned_union_ok(assigned):
            return True
        if edge == num_edges:
            if not allow_empty_classes and any(c == 0 for c in classes):
                return True  # skipped coloring
            return False  # a violating coloring survived
        bit = 1 << edge
        for i in range(r):
            classes[i] |= bit
            ok = scan(edge + 1, assigned | bit)
            classes[i] ^= bit
            if not ok:
                return False
        return True

    return scan(0, 0)


def weighted_majority_complex(weights) -> SimplicialComplex:
    """Faces are the coalitions with strictly less than half the total weight.

    Weights must be positive integers with odd total, so no subset lands on
    exactly half and the complex is self-dual.
    """
    ws = list(weights)
    if not ws or any(not isinstance(w, int) or isinstance(w, bool) or w <= 0 for w in ws):
        raise ValueError("weights must be positive integers")
    total = sum(ws)
    if total % 2 == 0:
        raise ValueError("total weight must be odd (ties would break self-duality)")
    mu = Measure(tuple(Fraction(w) for w in ws))
    return sublevel_complex(mu, Fraction(total, 2), strict=True)


def random_selfdual(m: int, seed: int) -> SimplicialComplex:
    """A random self-dual complex from a weighted-majority threshold; deterministic per seed."""
    if m < 1:
        raise ValueError("need m >= 1")
    rng = random.Random(seed)
    ws = [rng.randint(1, 2 * m + 1) for _ in range(m)]
    if sum(ws) % 2 == 0:
        ws[0] += 1
    return weighted_majority_complex(ws)


def deleted_join_faces(
    K: SimplicialComplex, r: int, *, budget: int = DEFAULT_DELETED_JOIN_BUDGET
) -> tuple[int, ...]:
    """f-vector of the r-fold 2-wise deleted join of K (counts of nonempty
    faces by dimension).

    A face is a labeling of a subset of [m] with labels 1..r whose label
    classes are all faces of K; its dimension is the number of labeled
    vertices minus one.  Enumerated by a depth-first sweep over labelings,
    pruning as soon as a class stops being a face.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if (r + 1) ** K.m > budget:
        raise BudgetExceededError(
            f"({r + 1})^{K.m} label assignments exceed the budget {budget}")
    counts = [0] * K.m
    classes = [0] * r
    face_cache: dict[int, bool] = {0: True}

    def is_face(mask: int) -> bool:
        hit = face_cache.get(mask)
        if hit is None:
            hit = face_cache[mask] = K.is_face(mask)
        return hit

    def sweep(vertex: int, labeled: int) -> None:
        if vertex == K.m:
            if labeled:
                counts[labeled - 1] += 1
            return
        bit = 1 << vertex
        sweep(vertex + 1, labeled)  # leave unlabeled
        for i in range(r):
            grown = classes[i] | bit
            if is_face(grown):
                classes[i] = grown
                sweep(vertex + 1, labeled + 1)
                classes[i] ^= bit

    sweep(0, 0)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)
