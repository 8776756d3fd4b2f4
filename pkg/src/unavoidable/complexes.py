"""Immutable simplicial complexes on a ground set {1, ..., m}.

A complex is stored by its facets (inclusion-maximal faces) together with the
cached antichain of minimal non-faces computed at construction time.  The two
antichains support both membership routes:

    A is a face  <=>  A is contained in some facet
                 <=>  A contains no minimal non-face

Conventions:

* Subsets of the ground set are bit masks (see :mod:`unavoidable.bitsets`);
  every public operation also accepts iterables of 1-based vertices.
* The empty set is a face of every complex.  The void family (no faces at
  all) is never constructed; it appears only as the :data:`VOID` result
  marker of :func:`alexander_dual`.
* Vert(K) may be a proper subset of [m]; isolated ground-set elements are
  legal and count toward m everywhere.
* Stored antichains are sorted by the lexicographic order of increasing
  vertex tuples, making equality structural and all output deterministic.
* Measure arithmetic is exact: weights and thresholds are
  :class:`fractions.Fraction`; float input is rejected.

All values are immutable after construction and every operation is a pure
function, so values may be shared freely across threads.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Union

from .bitsets import (
    MAX_GROUND_SET,
    SubsetLike,
    as_mask,
    check_ground_set,
    elements,
    full_mask,
    iter_singletons,
)

RationalLike = Union[int, str, Fraction]


def as_fraction(value: RationalLike) -> Fraction:
    """Exact rational conversion; floats are rejected to keep verdicts exact."""
    if isinstance(value, float):
        raise TypeError("floating point rejected; pass an int, Fraction, or 'p/q' string")
    if isinstance(value, bool):
        raise TypeError("boolean is not a rational value")
    return Fraction(value)


class ScxFormatError(ValueError):
    """Malformed .scx complex file."""


class _Void:
    """Distinguished marker for the dual of the full simplex (a value, not an error)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VOID"


VOID = _Void()


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex over [m], held as sorted facet / minimal-non-face masks.

    Build instances with :func:`from_facets`; the raw constructor performs no
    validation or reduction.
    """

    m: int
    facets: tuple[int, ...]
    min_nonfaces: tuple[int, ...]

    def is_face(self, subset: SubsetLike) -> bool:
        """Membership via facet containment."""
        mask = as_mask(self.m, subset)
        return any(mask & ~facet == 0 for facet in self.facets)

    def is_face_via_nonfaces(self, subset: SubsetLike) -> bool:
        """Membership via minimal-non-face avoidance; must agree with :meth:`is_face`."""
        mask = as_mask(self.m, subset)
        return not any(nf & ~mask == 0 for nf in self.min_nonfaces)

    def __contains__(self, subset: SubsetLike) -> bool:
        return self.is_face(subset)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vert(K): vertices that occur in some face; may be a proper subset of [m]."""
        used = 0
        for facet in self.facets:
            used |= facet
        return elements(used)

    @property
    def dim(self) -> int:
        """Dimension: largest facet size minus one (-1 for the complex {0})."""
        return max(facet.bit_count() for facet in self.facets) - 1

    def iter_faces(self) -> Iterator[int]:
        """All face masks, by ascending cardinality, lexicographic within a level."""
        level = {0}
        while level:
            yield from sorted(level, key=elements)
            nxt: set[int] = set()
            free_all = full_mask(self.m)
            for base in level:
                for low in iter_singletons(free_all & ~base):
                    cand = base | low
                    if cand not in nxt and self.is_face(cand):
                        nxt.add(cand)
            level = nxt

    def num_faces(self) -> int:
        """Number of faces including the empty face."""
        return sum(1 for _ in self.iter_faces())

    def __repr__(self) -> str:
        shown = [set(elements(f)) or "{}" for f in self.facets[:8]]
        more = "" if len(self.facets) <= 8 else f", ... ({len(self.facets)} facets)"
        return f"SimplicialComplex(m={self.m}, facets={shown}{more})"


def _maximal_antichain(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks))
    return [a for a in uniq if not any(a != b and a & ~b == 0 for b in uniq)]


def _min_nonfaces_from_facets(m: int, facets: tuple[int, ...]) -> tuple[int, ...]:
    # Ascending-cardinality sweep.  `level` holds every face of the current
    # cardinality; a candidate one element larger is a minimal non-face
    # exactly when it is not a face and each one-element deletion is a face.
    full = full_mask(m)
    if any(facet == full for facet in facets):
        return ()  # full simplex: no non-faces, skip the 2^m walk
    out: list[int] = []
    level: set[int] = {0}
    while level:
        nxt: set[int] = set()
        tried: set[int] = set()
        for base in level:
            free = full & ~base
            while free:
                low = free & -free
                free ^= low
                cand = base | low
                if cand in tried:
                    continue
                tried.add(cand)
                if any(cand & ~facet == 0 for facet in facets):
                    nxt.add(cand)
                elif all((cand ^ bit) in level for bit in iter_singletons(cand)):
                    out.append(cand)
        level = nxt
    return tuple(sorted(out, key=elements))


def from_facets(m: int, facets: Iterable[SubsetLike], *, verbose: bool = False) -> SimplicialComplex:
    """Build a complex from generating faces.

    The input list is deduplicated and reduced to its maximal elements (a
    warning is emitted in verbose mode when that changes anything); minimal
    non-faces are computed and cached.  The complex {0} is given as the single
    empty facet; an empty facet list (the void family) is rejected.
    """
    check_ground_set(m)
    masks = [as_mask(m, f) for f in facets]
    if not masks:
        raise ValueError("facet list is empty: the void complex cannot be represented "
                         "(give the complex {0} as the single empty facet)")
    reduced = _maximal_antichain(masks)
    if verbose and sorted(set(masks)) != reduced:
        warnings.warn("facet list deduplicated and reduced to maximal elements")
    facets_sorted = tuple(sorted(reduced, key=elements))
    return SimplicialComplex(
        m=m,
        facets=facets_sorted,
        min_nonfaces=_min_nonfaces_from_facets(m, facets_sorted),
    )


def contains_face(K: SimplicialComplex, subset: SubsetLike) -> bool:
    """True iff ``subset`` is a face of K."""
    return K.is_face(subset)


def alexander_dual(K: SimplicialComplex):
    """The complex {A : [m] \\ A is not a face of K}, or VOID when K is the full simplex.

    Facets of the dual are complements of minimal non-faces, and minimal
    non-faces of the dual are complements of facets; for non-full K the dual
    of the dual is K itself.
    """
    full = full_mask(K.m)
    if not K.min_nonfaces:
        return VOID
    return SimplicialComplex(
        m=K.m,
        facets=tuple(sorted((full ^ nf for nf in K.min_nonfaces), key=elements)),
        min_nonfaces=tuple(sorted((full ^ facet for facet in K.facets), key=elements)),
    )


def is_self_dual(K: SimplicialComplex) -> bool:
    """True iff for every subset A exactly one of A, [m]\\A is a face.

    Checked by the antichain bijection: complements of facets must be exactly
    the minimal non-faces.
    """
    full = full_mask(K.m)
    return {full ^ facet for facet in K.facets} == set(K.min_nonfaces)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; K2's vertices are relabeled to {m1+1, ..., m1+m2}.

    Facets are the unions of a facet from each factor, and the face count
    (including the empty face) is multiplicative.
    """
    m = K1.m + K2.m
    if m > MAX_GROUND_SET:
        raise ValueError(f"join ground set {m} exceeds the {MAX_GROUND_SET}-vertex limit")
    shift = K1.m
    facets = [f1 | (f2 << shift) for f1 in K1.facets for f2 in K2.facets]
    # Minimal non-faces of a join are the minimal non-faces of the factors:
    # a subset splits over the two blocks, and it is a face iff both parts are.
    nonfaces = list(K1.min_nonfaces) + [nf << shift for nf in K2.min_nonfaces]
    return SimplicialComplex(
        m=m,
        facets=tuple(sorted(facets, key=elements)),
        min_nonfaces=tuple(sorted(nonfaces, key=elements)),
    )


def delete_facet(K: SimplicialComplex, facet: SubsetLike) -> SimplicialComplex:
    """The complex whose faces are faces(K) minus the given facet.

    Deleting the empty facet (possible only for the complex {0}) would leave
    the void family and is rejected.
    """
    mask = as_mask(K.m, facet)
    if mask not in K.facets:
        raise ValueError(f"{elements(mask)} is not a facet")
    if mask == 0:
        raise ValueError("deleting the empty face would leave the void family")
    # The other facets stay maximal; a shrunken copy survives unless some
    # other facet already contains it (two shrunken copies never nest).
    others = [f for f in K.facets if f != mask]
    new_facets = others + [
        sub for sub in (mask ^ bit for bit in iter_singletons(mask))
        if not any(sub & ~g == 0 for g in others)
    ]
    # The deleted facet becomes a minimal non-face; old minimal non-faces
    # survive unless they strictly contain it.
    new_nonfaces = [mask] + [nf for nf in K.min_nonfaces if mask & ~nf != 0]
    return SimplicialComplex(
        m=K.m,
        facets=tuple(sorted(new_facets, key=elements)),
        min_nonfaces=tuple(sorted(new_nonfaces, key=elements)),
    )


@dataclass(frozen=True)
class Measure:
    """Additive measure on [m]: non-negative rational weights with positive total.

    ``value(A)`` is the weight sum over A; a probability measure has total 1.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(as_fraction(w) for w in self.weights)
        if not ws:
            raise ValueError("a measure needs at least one weight")
        if len(ws) > MAX_GROUND_SET:
            raise ValueError(f"at most {MAX_GROUND_SET} weights supported")
        if any(w < 0 for w in ws):
            raise ValueError("weights must be non-negative")
        if sum(ws) <= 0:
            raise ValueError("total mass must be positive")
        object.__setattr__(self, "weights", ws)

    @property
    def m(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_probability(self) -> bool:
        return self.total == 1

    def value(self, subset: SubsetLike) -> Fraction:
        mask = as_mask(self.m, subset)
        total = Fraction(0)
        while mask:
            low = mask & -mask
            mask ^= low
            total += self.weights[low.bit_length() - 1]
        return total

    @classmethod
    def uniform(cls, m: int) -> "Measure":
        check_ground_set(m)
        return cls(tuple(Fraction(1, m) for _ in range(m)))

    @classmethod
    def counting(cls, m: int, support: Iterable[int]) -> "Measure":
        """Normalized counting measure on [m] supported by the given set."""
        check_ground_set(m)
        support_mask = as_mask(m, support)
        size = support_mask.bit_count()
        if size == 0:
            raise ValueError("support must be nonempty")
        w = [Fraction(1, size) if support_mask >> i & 1 else Fraction(0) for i in range(m)]
        return cls(tuple(w))


def _facets_of_closed_family(m: int, is_face: Callable[[int], bool]) -> list[int]:
    """Facets of the downward-closed family {A : is_face(A)}.

    ``is_face`` must be hereditary (monotone under taking subsets); local
    maximality then coincides with global maximality.  Raises when even the
    empty set fails the predicate, since the void family is not representable.
    """
    cache: dict[int, bool] = {}

    def cached(mask: int) -> bool:
        hit = cache.get(mask)
        if hit is None:
            hit = cache[mask] = bool(is_face(mask))
        return hit

    if not cached(0):
        raise ValueError("the family has no faces at all (void complex)")
    full = full_mask(m)
    facets: list[int] = []
    level = {0}
    while level:
        nxt: set[int] = set()
        for base in level:
            grew = False
            for low in iter_singletons(full & ~base):
                cand = base | low
                if cand in nxt or cached(cand):
                    nxt.add(cand)
                    grew = True
            if not grew:
                facets.append(base)
        level = nxt
    return facets


def sublevel_complex(mu: Measure, beta: RationalLike, strict: bool = False) -> SimplicialComplex:
    """The sub-level complex {A : mu(A) <= beta} (or < beta when strict).

    Downward closed because mu is monotone; comparisons are exact rational.
    """
    threshold = as_fraction(beta)
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    if strict:
        pred = lambda mask: mu.value(mask) < threshold  # noqa: E731
    else:
        pred = lambda mask: mu.value(mask) <= threshold  # noqa: E731
    try:
        facets = _facets_of_closed_family(mu.m, pred)
    except ValueError:
        raise ValueError("sub-level family is void (threshold excludes the empty set)") from None
    return from_facets(mu.m, facets)


# --- .scx text format ------------------------------------------------------
#
# First non-comment line:  m <int>
# Each following non-comment line: one facet, space-separated 1-based vertex
# indices in increasing order; a line containing only "-" is the empty facet.
# "#" starts a comment.  parse_scx(format_scx(K)) == K, and format_scx
# reproduces canonical files byte for byte.


def format_scx(K: SimplicialComplex) -> str:
    lines = [f"m {K.m}"]
    for facet in K.facets:
        lines.append(" ".join(str(v) for v in elements(facet)) if facet else "-")
    return "\n".join(lines) + "\n"


def parse_scx(text: str) -> SimplicialComplex:
    m: int | None = None
    facets: list[SubsetLike] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "m":
                raise ScxFormatError(f"line {lineno}: expected header 'm <int>', got {line!r}")
            try:
                m = int(parts[1])
            except ValueError:
                raise ScxFormatError(f"line {lineno}: bad ground-set size {parts[1]!r}") from None
            continue
        if line == "-":
            facets.append(0)
            continue
        try:
            verts = [int(tok) for tok in line.split()]
        except ValueError:
            raise ScxFormatError(f"line {lineno}: facet must be integers, got {line!r}") from None
        if any(a >= b for a, b in zip(verts, verts[1:])):
            raise ScxFormatError(f"line {lineno}: vertices must be strictly increasing")
        facets.append(verts)
    if m is None:
        raise ScxFormatError("missing 'm <int>' header line")
    if not facets:
        raise ScxFormatError("no facet lines (the complex {0} is written as a single '-')")
    try:
        return from_facets(m, facets)
    except (TypeError, ValueError) as exc:
        raise ScxFormatError(str(exc)) from None


def load_scx(path) -> SimplicialComplex:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scx(fh.read())


def dump_scx(K: SimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_scx(K))
