"""Realizability of unavoidable complexes by exact measures.

Three measure families feed sub-level constructions:

* additive :class:`~unavoidable.complexes.Measure` (weights on vertices),
* :class:`WeightedHypergraph` measures: the best total weight of a pairwise
  disjoint subfamily packed inside a set (superadditive by construction),
* :class:`GeometricMeasure`: pointwise minima of additive measures.

Linear realizability of K at level r asks for a probability measure with
mu(facet) <= 1/r and mu(minimal non-face) > 1/r.  That strict system is
feasible exactly when the margin LP

    maximize eps  s.t.  sum mu = 1, mu >= 0,
                        mu(F) <= 1/r,  mu(N) >= 1/r + eps

has positive optimum.  The LP is solved exactly in rationals through its
dual (m+1 rows instead of one row per facet and non-face), and every verdict
is re-verified by direct evaluation: optimal witnesses must satisfy each
constraint and match the optimum, infeasible outcomes must come with a valid
nonnegative combination of constraints that is contradictory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bitsets import SubsetLike, as_mask, check_ground_set, elements, full_mask
from .complexes import (
    Measure,
    RationalLike,
    SimplicialComplex,
    _facets_of_closed_family,
    as_fraction,
    from_facets,
)
from .errors import BudgetExceededError
from .lp import maximize
from .partitions import is_r_unavoidable

WH_MAX_GROUND_SET = 22
WH_MAX_FAMILY = 4096
SWEEP_MAX_GROUND_SET = 22
DEFAULT_LP_CONSTRAINT_CAP = 100_000

ZERO = Fraction(0)
ONE = Fraction(1)


class WeightedHypergraph:
    """Distinct nonempty subsets of [m] with non-negative rational weights.

    ``value(A)`` is the induced superadditive measure: the largest total
    weight of pairwise disjoint members inside A, or 0 when no member fits.
    Evaluation memoizes over subsets; the hard caps m <= 22 and at most 4096
    members keep that tractable.
    """

    __slots__ = ("m", "members", "omega", "_memo")

    def __init__(self, m: int, members: Sequence[SubsetLike], omega: Sequence[RationalLike]):
        check_ground_set(m)
        if m > WH_MAX_GROUND_SET:
            raise BudgetExceededError(f"weighted hypergraphs support m <= {WH_MAX_GROUND_SET}")
        masks = [as_mask(m, x) for x in members]
        weights = [as_fraction(w) for w in omega]
        if len(masks) != len(weights):
            raise ValueError("family and weight list lengths differ")
        if len(masks) > WH_MAX_FAMILY:
            raise BudgetExceededError(f"at most {WH_MAX_FAMILY} family members supported")
        if any(mask == 0 for mask in masks):
            raise ValueError("family members must be nonempty")
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate family members are forbidden")
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        order = sorted(range(len(masks)), key=lambda i: elements(masks[i]))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "members", tuple(masks[i] for i in order))
        object.__setattr__(self, "omega", tuple(weights[i] for i in order))
        object.__setattr__(self, "_memo", {0: ZERO})

    def __setattr__(self, name, value):
        raise AttributeError("WeightedHypergraph is immutable")

    def value(self, subset: SubsetLike) -> Fraction:
        return self._nu(as_mask(self.m, subset))

    def _nu(self, mask: int) -> Fraction:
        memo = self._memo
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best = ZERO
        for member, weight in zip(self.members, self.omega):
            if member & ~mask == 0:
                cand = weight + self._nu(mask & ~member)
                if cand > best:
                    best = cand
        memo[mask] = best
        return best

    @property
    def total(self) -> Fraction:
        return self.value(full_mask(self.m))

    def __repr__(self) -> str:
        return f"WeightedHypergraph(m={self.m}, members={len(self.members)})"


@dataclass(frozen=True)
class GeometricMeasure:
    """Pointwise minimum of finitely many additive measures on the same [m]."""

    components: tuple[Measure, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("at least one component measure required")
        if len({mu.m for mu in comps}) != 1:
            raise ValueError("component measures must share the ground set")
        object.__setattr__(self, "components", comps)

    @property
    def m(self) -> int:
        return self.components[0].m

    def value(self, subset: SubsetLike) -> Fraction:
        mask = as_mask(self.m, subset)
        return min(mu.value(mask) for mu in self.components)

    @property
    def total(self) -> Fraction:
        return self.value(full_mask(self.m))


def wh_measure(F: WeightedHypergraph, subset: SubsetLike) -> Fraction:
    """Superadditive measure of a weighted hypergraph on a subset."""
    return F.value(subset)


def geometric_measure(G: GeometricMeasure, subset: SubsetLike) -> Fraction:
    """Minimum of the component measures on a subset."""
    return G.value(subset)


def superadditive_sublevel(nu, r: int) -> SimplicialComplex:
    """The sub-level complex {A : nu(A) <= nu([m]) / r} of a superadditive measure.

    ``nu`` is any of Measure, WeightedHypergraph, or GeometricMeasure.  The
    result is always r-unavoidable: blocks of a partition cannot all exceed
    the threshold, or superadditivity would push nu([m]) past itself.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if nu.m > SWEEP_MAX_GROUND_SET:
        raise BudgetExceededError(f"sub-level sweeps support m <= {SWEEP_MAX_GROUND_SET}")
    alpha = nu.total
    if alpha <= 0:
        raise ValueError("total mass must be positive")
    threshold = alpha / r
    facets = _facets_of_closed_family(nu.m, lambda mask: nu.value(mask) <= threshold)
    K = from_facets(nu.m, facets)
    if __debug__:
        ok, _ = is_r_unavoidable(K, r)
        assert ok, "sub-level complex of a superadditive measure must be r-unavoidable"
    return K


def pi_upper_bound(alpha: RationalLike, beta: RationalLike) -> int:
    """ceil(alpha / beta): an upper bound for the partition number of any
    sub-level complex of a superadditive measure with total alpha at level beta."""
    a = as_fraction(alpha)
    b = as_fraction(beta)
    if b <= 0:
        raise ValueError("beta must be positive")
    return math.ceil(a / b)


@dataclass(frozen=True)
class LpVerdict:
    """Outcome of a realizability LP.

    ``feasible`` means realizable: the witness satisfies every constraint
    with strict margin at least ``margin`` > 0 under exact arithmetic.
    ``margin`` is the exact optimal slack (None when the constraint system
    itself is contradictory, or vacuously unconstrained); on non-realizable
    outcomes ``infeasibility_note`` summarizes the optimal dual weights.
    """

    feasible: bool
    witness: Optional[Measure]
    margin: Optional[Fraction]
    infeasibility_note: Optional[str]


def _format_weighted(label_weights: list[tuple[str, Fraction]], limit: int = 24) -> str:
    shown = [f"{label} x {weight}" for label, weight in label_weights[:limit]]
    if len(label_weights) > limit:
        shown.append(f"... ({len(label_weights) - limit} more)")
    return "; ".join(shown)


def _solve_margin_lp(m: int, upper: Sequence[int], lower: Sequence[int], r: int,
                     cap: int = DEFAULT_LP_CONSTRAINT_CAP):
    """Solve  max eps : sum mu = 1, mu >= 0, mu(F) <= 1/r, mu(N) >= 1/r + eps.

    Returns ("optimal", eps, mu, note_weights) or ("infeasible", None, None,
    note_weights); notes carry exact dual/Farkas weights, already verified.
    Solved through the LP dual, whose rows number m+1.
    """
    if not lower:
        raise ValueError("margin LP needs at least one lower (non-face) constraint")
    if len(upper) + len(lower) + 1 > cap:
        raise BudgetExceededError(
            f"LP would have {len(upper) + len(lower) + 1} constraints, cap is {cap}")
    inv_r = Fraction(1, r)
    nf, nn = len(upper), len(lower)
    # Dual variables: y1, y2 (split of the free total-mass multiplier),
    # u_F >= 0 per upper set, v_N >= 0 per lower set.
    n_dual = 2 + nf + nn
    objective = [-ONE, ONE] + [-inv_r] * nf + [inv_r] * nn
    rows = []
    for i in range(m):
        bit = 1 << i
        coeffs = [ONE, -ONE]
        coeffs += [ONE if fs & bit else ZERO for fs in upper]
        coeffs += [-ONE if ns & bit else ZERO for ns in lower]
        rows.append((coeffs, ">=", ZERO))
    rows.append(([ZERO, ZERO] + [ZERO] * nf + [ONE] * nn, "==", ONE))
    res = maximize(objective, rows)

    if res.status == "optimal":
        eps = -res.objective
        mu = tuple(-d for d in res.duals[:m])
        if any(w < 0 for w in mu) or sum(mu) != 1:
            raise RuntimeError("LP postcondition failed: recovered measure is not a probability")
        for fs in upper:
            if sum(mu[v - 1] for v in elements(fs)) > inv_r:
                raise RuntimeError("LP postcondition failed: an upper constraint is violated")
        achieved = min(sum(mu[v - 1] for v in elements(ns)) for ns in lower) - inv_r
        if achieved != eps:
            raise RuntimeError("LP postcondition failed: duality gap is nonzero")
        y1, y2 = res.x[0], res.x[1]
        u = res.x[2:2 + nf]
        v = res.x[2 + nf:]
        labels = [("total-mass", y1 - y2)] if y1 != y2 else []
        labels += [(f"facet {elements(fs)}", w) for fs, w in zip(upper, u) if w]
        labels += [(f"non-face {elements(ns)}", w) for ns, w in zip(lower, v) if w]
        return "optimal", eps, mu, labels

    if res.status == "unbounded":
        ray = res.ray
        y1d, y2d = ray[0], ray[1]
        ud = ray[2:2 + nf]
        vd = ray[2 + nf:]
        # Verify the Farkas combination exactly before reporting it.
        if any(w < 0 for w in ray):
            raise RuntimeError("LP postcondition failed: Farkas ray has negative weights")
        if sum(vd, ZERO) != 0:
            raise RuntimeError("LP postcondition failed: Farkas ray touches the margin row")
        for i in range(m):
            bit = 1 << i
            lhs = y1d - y2d
            lhs += sum(w for fs, w in zip(upper, ud) if fs & bit)
            lhs -= sum(w for ns, w in zip(lower, vd) if ns & bit)
            if lhs < 0:
                raise RuntimeError("LP postcondition failed: Farkas ray is not dual-feasible")
        drop = y1d - y2d + inv_r * (sum(ud, ZERO) - sum(vd, ZERO))
        if drop >= 0:
            raise RuntimeError("LP postcondition failed: Farkas ray does not improve")
        labels = [("total-mass", y1d - y2d)] if y1d != y2d else []
        labels += [(f"facet {elements(fs)}", w) for fs, w in zip(upper, ud) if w]
        labels += [(f"non-face {elements(ns)}", w) for ns, w in zip(lower, vd) if w]
        return "infeasible", None, None, labels

    raise RuntimeError(f"margin LP ended in unexpected status {res.status!r}")


def is_linearly_realizable(K: SimplicialComplex, r: int, *,
                           max_constraints: int = DEFAULT_LP_CONSTRAINT_CAP) -> LpVerdict:
    """Decide whether K equals the 1/r sub-level complex of some probability measure.

    Equality holds iff every facet weighs at most 1/r and every minimal
    non-face strictly more, so the verdict is the sign of the optimal margin.
    Complexes that are not r-unavoidable are never realizable and
    short-circuit without solving.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    unavoidable, _ = is_r_unavoidable(K, r)
    if not unavoidable:
        return LpVerdict(False, None, None,
                         f"not {r}-unavoidable, so no probability measure can realize it "
                         f"(sub-level complexes at 1/{r} always are)")
    if not K.min_nonfaces:
        return LpVerdict(False, None, None,
                         "the full simplex is never realizable: the whole ground set is a face "
                         f"of weight 1 > 1/{r}")
    upper = [f for f in K.facets if f]
    status, eps, mu, labels = _solve_margin_lp(K.m, upper, K.min_nonfaces, r,
                                               cap=max_constraints)
    if status == "infeasible":
        return LpVerdict(False, None, None,
                         "constraint system is contradictory: the listed nonnegative "
                         "combination of constraints sums to an impossibility; "
                         + _format_weighted(labels))
    witness = Measure(mu)
    if eps > 0:
        _verify_realization(K, witness, r, eps)
        return LpVerdict(True, witness, eps, None)
    return LpVerdict(False, None, eps,
                     f"optimal margin {eps} <= 0: the listed dual weights cap the margin; "
                     + _format_weighted(labels))


def linear_subcomplex_witness(K: SimplicialComplex, r: int, *,
                              max_constraints: int = DEFAULT_LP_CONSTRAINT_CAP) -> LpVerdict:
    """Relaxed LP dropping facet constraints: find a probability measure whose
    1/r sub-level complex is contained in K (and is then itself r-unavoidable).

    Feasible whenever every minimal non-face can be pushed strictly above
    1/r; a complex without non-faces is trivially feasible.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if not K.min_nonfaces:
        return LpVerdict(True, Measure.uniform(K.m), None, None)
    status, eps, mu, labels = _solve_margin_lp(K.m, (), K.min_nonfaces, r,
                                               cap=max_constraints)
    if status == "infeasible":  # cannot happen: eps is free in the primal
        raise RuntimeError("relaxed margin LP reported infeasible")
    witness = Measure(mu)
    if eps > 0:
        for nf in K.min_nonfaces:
            if witness.value(nf) <= Fraction(1, r):
                raise RuntimeError("relaxed LP witness fails a non-face constraint")
        if __debug__:
            from .complexes import sublevel_complex
            sub = sublevel_complex(witness, Fraction(1, r))
            assert all(K.is_face(f) for f in sub.facets), "sub-level complex not inside K"
            assert is_r_unavoidable(sub, r)[0]
        return LpVerdict(True, witness, eps, None)
    return LpVerdict(False, None, eps,
                     f"optimal margin {eps} <= 0: the listed dual weights cap the margin; "
                     + _format_weighted(labels))


def _verify_realization(K: SimplicialComplex, witness: Measure, r: int, eps: Fraction) -> None:
    inv_r = Fraction(1, r)
    for facet in K.facets:
        if witness.value(facet) > inv_r:
            raise RuntimeError("witness violates a facet constraint")
    for nf in K.min_nonfaces:
        if witness.value(nf) < inv_r + eps:
            raise RuntimeError("witness violates a non-face margin")


def wh_realization_check(K: SimplicialComplex, r: int, F: WeightedHypergraph) -> bool:
    """Exhaustively test K = {A : nu_F(A) <= nu_F([m]) / r}."""
    if r < 2:
        raise ValueError("r must be at least 2")
    if F.m != K.m:
        raise ValueError("ground sets differ")
    alpha = F.total
    if alpha <= 0:
        raise ValueError("total weighted-hypergraph mass is zero")
    threshold = alpha / r
    for mask in range(1 << K.m):
        if K.is_face(mask) != (F.value(mask) <= threshold):
            return False
    return True


def selfdual_wh_realization(K: SimplicialComplex) -> WeightedHypergraph:
    """The canonical weighted-hypergraph realization of a self-dual complex.

    Weights are the indicator of non-faces over all nonempty subsets.  No set
    contains two disjoint non-faces (self-dual complexes admit no such pair),
    so the induced measure is the indicator itself, total 1, and the 1/2
    sub-level complex is exactly K.
    """
    from .complexes import is_self_dual

    if not is_self_dual(K):
        raise ValueError("complex is not self-dual")
    if (1 << K.m) - 1 > WH_MAX_FAMILY:
        raise BudgetExceededError(
            f"canonical realization enumerates all subsets; needs m <= {WH_MAX_FAMILY.bit_length() - 1}")
    members = list(range(1, 1 << K.m))
    omega = [ZERO if K.is_face(mask) else ONE for mask in members]
    out = WeightedHypergraph(K.m, members, omega)
    if __debug__:
        assert wh_realization_check(K, 2, out)
    return out


def prune_zero_weights(F: WeightedHypergraph) -> WeightedHypergraph:
    """Drop zero-weight members; the induced measure is unchanged."""
    keep = [(member, w) for member, w in zip(F.members, F.omega) if w != 0]
    return WeightedHypergraph(F.m, [m_ for m_, _ in keep], [w for _, w in keep])


# --- JSON wire formats -----------------------------------------------------
#
# Weighted hypergraph: {"m": int, "family": [[ints]], "omega": ["p/q", ...]}
# Measure:             {"weights": ["p/q", ...]}


def weights_to_json(F: WeightedHypergraph) -> dict:
    return {
        "m": F.m,
        "family": [list(elements(member)) for member in F.members],
        "omega": [str(w) for w in F.omega],
    }


def weights_from_json(obj: dict) -> WeightedHypergraph:
    try:
        return WeightedHypergraph(obj["m"], obj["family"], obj["omega"])
    except KeyError as exc:
        raise ValueError(f"weights object is missing key {exc}") from None


def measure_to_json(mu: Measure) -> dict:
    return {"weights": [str(w) for w in mu.weights]}


def measure_from_json(obj: dict) -> Measure:
    try:
        return Measure(tuple(obj["weights"]))
    except KeyError as exc:
        raise ValueError(f"measure object is missing key {exc}") from None
