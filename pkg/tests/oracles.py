"""Independent reference implementations used to validate the package.

Everything here is deliberately naive and shares no code path with the
library: faces come from direct facet-subset arithmetic, set partitions from
recursive insertion (not restricted growth strings), packings and measures
from exhaustive enumeration.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from unavoidable import SimplicialComplex, from_facets
from unavoidable.bitsets import full_mask


def is_face_naive(K: SimplicialComplex, mask: int) -> bool:
    return any(mask & ~facet == 0 for facet in K.facets)


def brute_faces(K: SimplicialComplex) -> set[int]:
    return {mask for mask in range(1 << K.m) if is_face_naive(K, mask)}


def brute_min_nonfaces(K: SimplicialComplex) -> set[int]:
    faces = brute_faces(K)
    out = set()
    for mask in range(1, 1 << K.m):
        if mask in faces:
            continue
        if all((mask ^ (1 << i)) in faces for i in range(K.m) if mask >> i & 1):
            out.add(mask)
    return out


def partitions_insertion(universe: list[int]):
    """All set partitions of ``universe`` (lists of lists), by element insertion."""
    if not universe:
        yield []
        return
    first, rest = universe[0], universe[1:]
    for smaller in partitions_insertion(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]
        yield [[first]] + smaller


def oracle_partition_number(K: SimplicialComplex) -> int:
    """Literal least nu: every partition into nu blocks has a face block."""
    by_count: dict[int, bool] = {}
    for blocks in partitions_insertion(list(range(1, K.m + 1))):
        nu = len(blocks)
        masks = [sum(1 << (v - 1) for v in block) for block in blocks]
        if all(not is_face_naive(K, b) for b in masks):
            by_count[nu] = True
    for nu in range(1, K.m + 1):
        if nu not in by_count:
            return nu
    return K.m + 1


def oracle_r_unavoidable_subpartitions(K: SimplicialComplex, r: int) -> bool:
    """Literal check over disjoint nonempty families with union inside [m]:
    label every vertex with 0 (unused) or a class 1..r."""
    for labels in product(range(r + 1), repeat=K.m):
        classes = [0] * r
        for v, lab in enumerate(labels):
            if lab:
                classes[lab - 1] |= 1 << v
        if any(c == 0 for c in classes):
            continue
        if all(not is_face_naive(K, c) for c in classes):
            return False
    return True


def oracle_max_disjoint_nonfaces(K: SimplicialComplex) -> int:
    cands = sorted(brute_min_nonfaces(K))
    best = 0
    for picks in product([0, 1], repeat=len(cands)):
        used = 0
        ok = True
        chosen = 0
        for cand, take in zip(cands, picks):
            if take:
                if cand & used:
                    ok = False
                    break
                used |= cand
                chosen += 1
        if ok:
            best = max(best, chosen)
    return best


def oracle_wh_measure(members, omega, subset_mask: int) -> Fraction:
    """Best total weight over all pairwise disjoint subfamilies inside the subset."""
    best = Fraction(0)
    n = len(members)
    for picks in range(1 << n):
        used = 0
        total = Fraction(0)
        ok = True
        for i in range(n):
            if picks >> i & 1:
                b = members[i]
                if b & ~subset_mask or b & used:
                    ok = False
                    break
                used |= b
                total += omega[i]
        if ok and total > best:
            best = total
    return best


def oracle_deleted_join_counts(K: SimplicialComplex, r: int) -> tuple[int, ...]:
    counts = [0] * K.m
    for labels in product(range(r + 1), repeat=K.m):
        classes = [0] * r
        labeled = 0
        for v, lab in enumerate(labels):
            if lab:
                classes[lab - 1] |= 1 << v
                labeled += 1
        if labeled == 0:
            continue
        if all(is_face_naive(K, c) for c in classes):
            counts[labeled - 1] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def oracle_num_faces(K: SimplicialComplex) -> int:
    return len(brute_faces(K))


def fourier_motzkin_maximize(objective, rows):
    """Exact LP oracle by Fourier-Motzkin elimination (tiny instances only).

    Maximize c.x over x >= 0 subject to (coeffs, sense, rhs) rows; returns
    ("optimal", value), ("infeasible", None), or ("unbounded", None).
    Completely independent of the simplex implementation.
    """
    n = len(objective)
    # inequalities over (x_1..x_n, t):  a.x + p*t <= q
    ineqs: list[tuple[list[Fraction], Fraction, Fraction]] = []

    def add(coeffs, p, q):
        ineqs.append(([Fraction(v) for v in coeffs], Fraction(p), Fraction(q)))

    for coeffs, sense, rhs in rows:
        if sense in ("<=", "=="):
            add(coeffs, 0, rhs)
        if sense in (">=", "=="):
            add([-v for v in coeffs], 0, -Fraction(rhs))
    for i in range(n):
        add([-(1 if j == i else 0) for j in range(n)], 0, 0)
    add([Fraction(v) for v in objective], -1, 0)   # t <= c.x
    add([-Fraction(v) for v in objective], 1, 0)   # t >= c.x

    for var in range(n):
        pos, neg, rest = [], [], []
        for coeffs, p, q in ineqs:
            a = coeffs[var]
            if a > 0:
                pos.append((coeffs, p, q))
            elif a < 0:
                neg.append((coeffs, p, q))
            else:
                rest.append((coeffs, p, q))
        new = rest
        for cp, pp, qp in pos:
            for cn, pn, qn in neg:
                s, t_ = cp[var], -cn[var]
                coeffs = [t_ * a + s * b for a, b in zip(cp, cn)]
                new.append((coeffs, t_ * pp + s * pn, t_ * qp + s * qn))
        ineqs = new

    upper = None
    lower = None
    for coeffs, p, q in ineqs:
        assert all(v == 0 for v in coeffs)
        if p > 0:
            bound = q / p
            upper = bound if upper is None else min(upper, bound)
        elif p < 0:
            bound = q / p
            lower = bound if lower is None else max(lower, bound)
        elif q < 0:
            return "infeasible", None
    if lower is not None and upper is not None and lower > upper:
        return "infeasible", None
    if upper is None:
        return "unbounded", None
    return "optimal", upper


def random_complex(rng: random.Random, m: int, max_facets: int = 6) -> SimplicialComplex:
    count = rng.randint(1, max_facets)
    facets = [rng.getrandbits(m) for _ in range(count)]
    return from_facets(m, facets)


def all_complexes(m: int):
    """Every simplicial complex on [m]: one per nonempty antichain in 2^[m]."""
    subsets = sorted(range(1 << m))

    def rec(start: int, chosen: list[int]):
        if chosen:
            yield from_facets(m, list(chosen))
        for i in range(start, len(subsets)):
            cand = subsets[i]
            if any(cand & ~c == 0 or c & ~cand == 0 for c in chosen):
                continue
            chosen.append(cand)
            yield from rec(i + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def named_small_examples() -> list[SimplicialComplex]:
    """A spread of named complexes with m <= 12 for oracle comparisons."""
    from unavoidable import join, points, skeleton

    out: list[SimplicialComplex] = []
    for m in range(1, 9):
        out.append(points(m))
    for n in (1, 2, 3):
        out.append(skeleton(n, 2 * n + 3))
    for m in (4, 6, 8):
        out.append(skeleton(1, m))
    for m in (1, 3, 5):
        out.append(from_facets(m, [full_mask(m)]))  # full simplex
    for m in (2, 4, 6):
        out.append(from_facets(m, [[]]))  # the complex {0}
    for m in (3, 5, 7):
        boundary = [full_mask(m) ^ (1 << i) for i in range(m)]
        out.append(from_facets(m, boundary))
    out.append(join(points(2), points(3)))
    out.append(join(skeleton(1, 5), points(3)))
    return out
