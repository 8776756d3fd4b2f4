"""Exact decision procedures for unavoidability and partition numbers.

The workhorse is a packing reduction: a partition of [m] into nu blocks that
are all non-faces exists exactly when nu pairwise disjoint minimal non-faces
exist (shrink each block to a minimal non-face inside it; conversely dump the
leftover vertices into one packed non-face, which stays a non-face because
non-faces are upward closed).  Hence

    partition_number(K) = (max size of a disjoint family of minimal non-faces) + 1

and K is r-unavoidable iff no r pairwise disjoint minimal non-faces exist.
A literal brute-force oracle over set partitions guards the reduction.

All searches scan candidates in the lexicographic order of their vertex
tuples, so returned witnesses are the lexicographically least ones and runs
reproduce bit-identically regardless of scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bitsets import SubsetLike, as_mask, elements, full_mask, iter_singletons
from .complexes import SimplicialComplex
from .errors import BudgetExceededError

ORACLE_MAX_GROUND_SET = 12


@dataclass(frozen=True)
class PackingWitness:
    """A pairwise disjoint family of minimal non-faces plus the uncovered rest of [m]."""

    nonfaces: tuple[tuple[int, ...], ...]
    leftover: tuple[int, ...]


@dataclass(frozen=True)
class PartitionWitness:
    """A partition of [m] with a flag per block (True = the block is a non-face)."""

    blocks: tuple[tuple[int, ...], ...]
    offending: tuple[bool, ...]


def _partition_witness(K: SimplicialComplex, block_masks: Sequence[int]) -> PartitionWitness:
    return PartitionWitness(
        blocks=tuple(elements(b) for b in block_masks),
        offending=tuple(not K.is_face(b) for b in block_masks),
    )


def max_disjoint_min_nonfaces(K: SimplicialComplex) -> tuple[int, PackingWitness]:
    """Maximum pairwise disjoint family of minimal non-faces, with its witness.

    Branch and bound over the minimal-non-face antichain in lexicographic
    order; the returned witness is the lexicographically least family of
    maximum size.  D = 0 exactly when K is the full simplex.
    """
    cands = K.min_nonfaces
    n = len(cands)
    best: list[int] = []
    chosen: list[int] = []

    def grow(start: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        for i in range(start, n):
            if len(chosen) + (n - i) <= len(best):
                return
            cand = cands[i]
            if cand & used:
                continue
            chosen.append(cand)
            grow(i + 1, used | cand)
            chosen.pop()

    grow(0, 0)
    union = 0
    for mask in best:
        union |= mask
    witness = PackingWitness(
        nonfaces=tuple(elements(mask) for mask in best),
        leftover=elements(full_mask(K.m) & ~union),
    )
    return len(best), witness


def partition_number(K: SimplicialComplex) -> int:
    """pi(K): least nu such that every partition of [m] into nu nonempty blocks
    contains a face block.

    The value m+1 means no nu in 1..m works, which happens exactly for the
    complex {0} (every nonempty set is a non-face).
    """
    return max_disjoint_min_nonfaces(K)[0] + 1


def _set_partitions(m: int, nu: int) -> Iterator[tuple[int, ...]]:
    """All partitions of [m] into exactly nu nonempty blocks, as block-mask tuples.

    Restricted-growth-string enumeration: vertex 1 gets label 0 and each next
    vertex gets a label at most one past the current maximum.
    """
    blocks = [0] * nu

    def rec(v: int, used: int) -> Iterator[tuple[int, ...]]:
        if v == m:
            if used == nu:
                yield tuple(blocks)
            return
        if used + (m - v) < nu:
            return
        bit = 1 << v
        for label in range(min(used + 1, nu)):
            blocks[label] |= bit
            yield from rec(v + 1, max(used, label + 1))
            blocks[label] ^= bit

    yield from rec(0, 0)


def partition_number_oracle(K: SimplicialComplex) -> int:
    """Literal partition number by exhausting all set partitions (m <= 12).

    Independent of the packing reduction: uses only facet-containment
    membership and restricted-growth-string enumeration.
    """
    if K.m > ORACLE_MAX_GROUND_SET:
        raise BudgetExceededError(
            f"partition oracle limited to m <= {ORACLE_MAX_GROUND_SET}, got m = {K.m}")
    for nu in range(1, K.m + 1):
        violating = False
        for blocks in _set_partitions(K.m, nu):
            if all(not K.is_face(b) for b in blocks):
                violating = True
                break
        if not violating:
            return nu
    return K.m + 1


def _first_packing(cands: Sequence[int], k: int) -> Optional[list[int]]:
    """Lexicographically least family of k pairwise disjoint masks, or None."""
    n = len(cands)
    out: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(out) == k:
            return True
        for i in range(start, n):
            if n - i < k - len(out):
                return False
            cand = cands[i]
            if cand & used:
                continue
            out.append(cand)
            if rec(i + 1, used | cand):
                return True
            out.pop()
        return False

    return out if rec(0, 0) else None


def is_r_unavoidable(K: SimplicialComplex, r: int) -> tuple[bool, Optional[PartitionWitness]]:
    """True iff pi(K) <= r, i.e. no r pairwise disjoint minimal non-faces exist.

    On failure the witness is a concrete partition of [m] into r non-face
    blocks: the lexicographically least packing of size r, with the leftover
    vertices dumped into the first block (non-faces are upward closed).
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    packing = _first_packing(K.min_nonfaces, r)
    if packing is None:
        return True, None
    used = 0
    for mask in packing:
        used |= mask
    blocks = list(packing)
    blocks[0] |= full_mask(K.m) & ~used
    return False, _partition_witness(K, blocks)


def _min_total_packing(cands: Sequence[int], k: int) -> Optional[tuple[int, list[int]]]:
    """Packing of exactly k disjoint masks minimizing total size; lex-least minimizer."""
    n = len(cands)
    if k == 0:
        return 0, []
    sizes = [c.bit_count() for c in cands]
    best: Optional[tuple[int, list[int]]] = None
    chosen: list[int] = []

    def rec(start: int, used: int, total: int) -> None:
        nonlocal best
        if len(chosen) == k:
            if best is None or total < best[0]:
                best = (total, chosen.copy())
            return
        need = k - len(chosen)
        if best is not None:
            floor = total + sum(sorted(sizes[start:])[:need])
            if floor >= best[0]:
                return
        for i in range(start, n):
            if n - i < need:
                return
            cand = cands[i]
            if cand & used:
                continue
            chosen.append(cand)
            rec(i + 1, used | cand, total + sizes[i])
            chosen.pop()

    rec(0, 0, 0)
    return best


def is_rs_unavoidable(K: SimplicialComplex, r: int, s: int) -> tuple[bool, Optional[PartitionWitness]]:
    """True iff every partition of [m] into r nonempty blocks has >= s face blocks.

    A violating partition needs r-s+1 non-face blocks plus s-1 further
    nonempty blocks, so it exists exactly when r-s+1 pairwise disjoint
    minimal non-faces fit into m-(s-1) vertices.  With s = 1 this is
    r-unavoidability.
    """
    if not r > s >= 1:
        raise ValueError("need r > s >= 1")
    k = r - s + 1
    found = _min_total_packing(K.min_nonfaces, k)
    if found is None or found[0] > K.m - (s - 1):
        return True, None
    packing = found[1]
    used = 0
    for mask in packing:
        used |= mask
    leftover = full_mask(K.m) & ~used
    blocks = list(packing)
    if s == 1:
        blocks[0] |= leftover
    else:
        rest = list(iter_singletons(leftover))
        for bit in rest[: s - 2]:
            blocks.append(bit)
        tail = 0
        for bit in rest[s - 2:]:
            tail |= bit
        blocks.append(tail)
    return False, _partition_witness(K, blocks)


def is_minimally_r_unavoidable(K: SimplicialComplex, r: int) -> bool:
    """True iff K is r-unavoidable but no facet deletion is.

    Facet deletions are the maximal proper subcomplexes, and unavoidability
    is monotone under inclusion, so checking them decides minimality over all
    proper subcomplexes.  Deleting facet F turns F into a minimal non-face
    and keeps (a subset of) the old ones; since the old antichain packs no r
    disjoint members, the deletion loses unavoidability exactly when r-1
    pairwise disjoint old minimal non-faces avoid F.  The empty facet is
    skipped: deleting it would leave the void family, which has no faces and
    is never unavoidable here.
    """
    ok, _ = is_r_unavoidable(K, r)
    if not ok:
        return False
    for facet in K.facets:
        if facet == 0:
            continue
        off_facet = [nf for nf in K.min_nonfaces if nf & facet == 0]
        if _first_packing(off_facet, r - 1) is None:
            return False
    return True


def hypergraph_partition_number(
    K: SimplicialComplex, H: Sequence[SubsetLike]
) -> tuple[int, frozenset[int]]:
    """Partition number restricted to partitions whose blocks all lie in H.

    Returns the least nu such that at every level nu' >= nu each partition of
    [m] into nu' blocks from H has a face block, together with the set of
    vacuous levels (those admitting no H-partition at all, always including
    m+1).  Levels with no H-partition satisfy the condition vacuously; since
    that makes the condition non-monotone in nu, the bare minimum alone would
    mislead, so the stable threshold is returned and the vacuous levels are
    surfaced explicitly.
    """
    if K.m > ORACLE_MAX_GROUND_SET:
        raise BudgetExceededError(
            f"hypergraph partition number limited to m <= {ORACLE_MAX_GROUND_SET}, got m = {K.m}")
    members = frozenset(as_mask(K.m, h) for h in H)
    if not members:
        raise ValueError("H must be nonempty")
    if 0 in members:
        raise ValueError("H members must be nonempty subsets")
    failing: list[int] = []
    vacuous: set[int] = {K.m + 1}
    for nu in range(1, K.m + 1):
        saw_h_partition = False
        violated = False
        for blocks in _set_partitions(K.m, nu):
            if not all(b in members for b in blocks):
                continue
            saw_h_partition = True
            if all(not K.is_face(b) for b in blocks):
                violated = True
                break
        if violated:
            failing.append(nu)
        elif not saw_h_partition:
            vacuous.add(nu)
    pi_h = failing[-1] + 1 if failing else 1
    return pi_h, frozenset(vacuous)
