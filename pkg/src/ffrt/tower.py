"""Towers S = R[x_1..x_r]/(x_1^q_1 + f_1, ..., x_r^q_r + f_r) and their Frobenius pushforwards.

S is free over R on the monomials x^a (0 <= a_i < q_i), so ^eS as a graded
R-module is a sum of shifted copies of ^eR.  When R is a weighted polynomial
ring, ^eR is itself free on the q-th roots of monomials, and when R is a
curve ring its summands come from the curve decomposition.  The predicted
summand list is checked against the Hilbert series of S computed straight
from its defining equations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import decomp
from .curve import RingPresentation
from .errors import (
    BaseNotCertified,
    FPurityFailure,
    InvalidPresentation,
    UnsupportedCharacteristic,
)
from .hilbert import HilbertSeries, common_denominator
from .sparse import SparsePoly
from .subspace import root_space

DEFAULT_TRUNC = 40
REGULAR_CLASS = "R"


def _is_power_of(q: int, p: int) -> bool:
    while q > 1 and q % p == 0:
        q //= p
    return q == 1


def _log_p(q: int, p: int) -> int:
    e = 0
    while q > 1:
        q //= p
        e += 1
    return e


@dataclass(frozen=True)
class PolyBase:
    """Weighted polynomial ring F_p[vars]."""

    p: int
    vars: tuple[str, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.vars) != len(self.weights):
            raise InvalidPresentation("one weight per variable")
        if any(w <= 0 for w in self.weights):
            raise InvalidPresentation("weights must be positive")


@dataclass(frozen=True)
class CurveBase:
    """A curve ring used as a tower base; its generators are the polynomial variables."""

    ring: RingPresentation

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def vars(self) -> tuple[str, ...]:
        return tuple(f"g{j + 1}" for j in range(len(self.ring.generators)))

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d) for d in self.ring.degrees)


@dataclass(frozen=True)
class Adjunction:
    var: str
    exponent: int
    f: SparsePoly
    weight: Fraction


@dataclass
class TowerPresentation:
    base: PolyBase | CurveBase
    adjoin: list[Adjunction]
    name: str = "S"

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def e_tilde(self) -> int:
        return max(_log_p(a.exponent, self.p) for a in self.adjoin)

    @property
    def all_vars(self) -> tuple[str, ...]:
        return tuple(self.base.vars) + tuple(a.var for a in self.adjoin)

    @property
    def all_weights(self) -> tuple[Fraction, ...]:
        return tuple(self.base.weights) + tuple(a.weight for a in self.adjoin)


def make_tower(base, adjoin_specs, name: str = "S") -> TowerPresentation:
    """Validate and assemble a tower; ``adjoin_specs`` are (var, exponent, f, weight-or-None)."""
    p = base.p
    adjoin = []
    for var, q, f, weight in adjoin_specs:
        if q < 1 or not _is_power_of(q, p):
            raise InvalidPresentation(f"exponent {q} of {var} is not a power of p = {p}")
        if var in base.vars or any(a.var == var for a in adjoin):
            raise InvalidPresentation(f"variable {var} already used")
        if f.names != tuple(base.vars):
            raise InvalidPresentation(f"f for {var} must be a polynomial in the base variables {base.vars}")
        if f.is_zero():
            if weight is None:
                raise InvalidPresentation(f"f = 0 for {var}: an explicit weight is required")
            weight = Fraction(weight)
        else:
            if not f.is_homogeneous(base.weights):
                raise InvalidPresentation(f"f for {var} is not homogeneous in weights {base.weights}")
            derived = f.weighted_degree(base.weights) / q
            if weight is not None and Fraction(weight) != derived:
                raise InvalidPresentation(f"weight of {var} must be deg f / q = {derived}")
            weight = derived
        if weight <= 0:
            raise InvalidPresentation(f"weight of {var} must be positive")
        adjoin.append(Adjunction(var, q, f, weight))
    if not adjoin:
        raise InvalidPresentation("a tower needs at least one adjoined variable")
    return TowerPresentation(base, adjoin, name)


# --------------------------------------------------------------------------
# Freshman's dream
# --------------------------------------------------------------------------


@dataclass
class SubstitutionCheck:
    ok: bool
    binomials_ok: bool
    root_ok: bool
    expansion_ok: bool
    falsifying: str | None = None


def substitution_identity_check(f: SparsePoly, q: int, var: str = "x") -> SubstitutionCheck:
    """Verify (x + f^(1/q))^q = x^q + f by expanding in R^(1/q)[x] over F_p."""
    p = f.p
    for k in range(1, q):
        if comb(q, k) % p:
            return SubstitutionCheck(False, False, False, False, f"C({q},{k}) = {comb(q, k)} is nonzero mod {p}")
    names = tuple(f.names) + (var,)
    fx = f.extend(names)
    x = SparsePoly.var(p, names, var)
    g = fx.root(q)
    if g**q != fx:
        return SubstitutionCheck(False, True, False, False, f"(f^(1/{q}))^{q} = {g**q} != {fx}")
    lhs = (x + g) ** q
    rhs = x**q + fx
    if lhs != rhs:
        extra = lhs - rhs
        return SubstitutionCheck(False, True, True, False, f"leftover terms {extra}")
    return SubstitutionCheck(True, True, True, True)


# --------------------------------------------------------------------------
# F-purity
# --------------------------------------------------------------------------


def fedder_fpure(f: SparsePoly | None, p: int | None = None) -> bool:
    """Hypersurface F-purity: F_p[x]/(f) is F-pure iff f^(p-1) is not in (x_1^p, ..., x_n^p)."""
    if f is None:
        return True
    p = f.p if p is None else p
    if f.p != p:
        raise ValueError("polynomial characteristic does not match p")
    if f.has_constant_term():
        raise ValueError("f must lie in the homogeneous maximal ideal")
    if f.is_zero():
        return False
    power = f ** (p - 1)
    return any(all(x < p for x in exp) for exp in power.terms)


def curve_fpure(A: RingPresentation) -> bool:
    """Splitting check for a curve ring.

    For q >= c the copy of A inside A^(1/q) sits in the residue-0 summand
    M_0 = sum_j V_(jq)^(1/q) t^j, which has rank one; A splits off iff it
    equals M_0, i.e. V_(jq)^(1/q) = V_j for every j.  One q decides F-purity.
    """
    prof = A.profile
    e = decomp.min_clearing_e(A)
    q = A.p**e
    for j in range(prof.c + 1):
        if root_space(prof.space(j * q), e) != prof.space(j):
            return False
    return True


# --------------------------------------------------------------------------
# Summands and the Hilbert check
# --------------------------------------------------------------------------


@dataclass
class TowerReport:
    tower: TowerPresentation
    e: int
    q: int
    summands: Counter  # (class id, shift) -> multiplicity
    class_series: dict
    hilbert_order: Fraction
    hilbert_pass: bool
    hilbert_mismatch: tuple | None
    fpurity: dict
    substitution: dict[str, SubstitutionCheck] = field(default_factory=dict)
    x_action_zero: bool = False

    @property
    def count(self) -> int:
        return sum(self.summands.values())

    @property
    def all_free(self) -> bool:
        return all(cls in (REGULAR_CLASS, decomp.FREE_CLASS) for cls, _ in self.summands)


def _base_summands(T: TowerPresentation, e: int):
    """(class id, shift) pairs of ^eR and the Hilbert series recipe of each class."""
    base = T.base
    q = T.p**e
    if isinstance(base, PolyBase):
        out = Counter()
        for b in itertools.product(range(q), repeat=len(base.vars)):
            out[(REGULAR_CLASS, -sum(Fraction(bi) * w for bi, w in zip(b, base.weights)) / q)] += 1
        return out, {REGULAR_CLASS: ("poly", base.weights)}
    A = base.ring
    verdict_table = decomp.classify(A, e_max=max(e, decomp.min_clearing_e(A) + (A.field.frobenius_order or 0)))
    verdict = decomp.ffrt_verdict(A, verdict_table.e_max, verdict_table)
    if verdict.status != decomp.FFRT_CERTIFIED:
        raise BaseNotCertified(f"base curve ring {A.name} is {verdict.status}")
    if e not in verdict_table.reports:
        decomp._require_cleared(A, e)
    rep = verdict_table.reports[e]
    out = Counter()
    recipes = {}
    n = A.field.n
    for s in rep.summands:
        out[(s.class_id, s.shift)] += 1
        if s.class_id not in recipes:
            recipes[s.class_id] = ("curve", n, s.W.dim if s.W is not None else None)
    return out, recipes


def _class_series(recipe, D, order) -> HilbertSeries:
    """Hilbert series of a class generated in degree 0."""
    if recipe[0] == "poly":
        return HilbertSeries.weighted_polynomial_ring(recipe[1], D, order)
    _, n, wdim = recipe
    dims = (lambda j: n) if wdim is None else (lambda j: wdim if j == 0 else n)
    return HilbertSeries.from_dims(dims, D, order)


def base_hilbert_series(T: TowerPresentation, D: int, order) -> HilbertSeries:
    base = T.base
    if isinstance(base, PolyBase):
        return HilbertSeries.weighted_polynomial_ring(base.weights, D, order)
    prof = base.ring.profile
    return HilbertSeries.from_dims(prof.dim, D, order)


def direct_series(T: TowerPresentation, e: int, order) -> HilbertSeries:
    """HS of ^eS from the presentation: HS_R / prod(1 - s^w_i) * prod(1 - s^(q_i w_i)), regraded by q."""
    q = T.p**e
    D = common_denominator(*T.all_weights)
    big = Fraction(order) * q
    hs = base_hilbert_series(T, D, big)
    for a in T.adjoin:
        hs = hs.over_one_minus(a.weight)
    for a in T.adjoin:
        hs = hs.times_one_minus(a.exponent * a.weight)
    return hs.regrade(q)


def predicted_series(T: TowerPresentation, e: int, summands: Counter, recipes: dict, order) -> HilbertSeries:
    q = T.p**e
    D = common_denominator(*T.all_weights) * q
    D = common_denominator(*(Fraction(1, D),), *(s for _, s in summands)) if summands else D
    total = HilbertSeries.zero(D, order)
    by_class: dict[str, Counter] = {}
    for (cls, shift), m in summands.items():
        by_class.setdefault(cls, Counter())[-shift] += m
    for cls, shifts in sorted(by_class.items()):
        total = total + _class_series(recipes[cls], D, order).convolve_shifts(shifts)
    return total


def x_basis_shifts(T: TowerPresentation, e: int, adjoin=None) -> Counter:
    q = T.p**e
    adjoin = T.adjoin if adjoin is None else adjoin
    out = Counter()
    for a in itertools.product(*(range(x.exponent) for x in adjoin)):
        out[-sum(Fraction(ai) * x.weight for ai, x in zip(a, adjoin)) / q] += 1
    return out


def _combine(summands: Counter, shifts: Counter) -> Counter:
    out = Counter()
    for (cls, s1), m1 in summands.items():
        for s2, m2 in shifts.items():
            out[(cls, s1 + s2)] += m1 * m2
    return out


def _fpurity(T: TowerPresentation) -> dict:
    needs = any(not a.f.is_zero() for a in T.adjoin)
    if isinstance(T.base, PolyBase):
        return {"required": needs, "method": "regular", "fpure": fedder_fpure(None)}
    ok = curve_fpure(T.base.ring)
    return {"required": needs, "method": "curve-splitting (engine-level)", "fpure": ok}


def tower_summands(T: TowerPresentation, e: int, trunc: int = DEFAULT_TRUNC, iterate: bool = False) -> TowerReport:
    """Predicted summands of ^eS over the base plus the Hilbert-series check.

    ``iterate=True`` adjoins the variables one at a time instead of using the
    full monomial basis at once; the multiset must come out the same.
    """
    if e < 0:
        raise ValueError("e must be non-negative")
    fp = _fpurity(T)
    if fp["required"] and not fp["fpure"]:
        raise FPurityFailure(f"base of {T.name} is not F-pure but some f_i is nonzero")
    q = T.p**e
    base, recipes = _base_summands(T, e)
    if iterate:
        summands = base
        for a in T.adjoin:
            summands = _combine(summands, x_basis_shifts(T, e, [a]))
    else:
        summands = _combine(base, x_basis_shifts(T, e))
    order = Fraction(trunc)
    pred = predicted_series(T, e, summands, recipes, order)
    direct = direct_series(T, e, order)
    D = common_denominator(Fraction(1, pred.D), Fraction(1, direct.D))
    pred, direct = pred.refine(D), direct.refine(D)
    mismatch = direct.first_difference(pred)
    subs = {a.var: substitution_identity_check(a.f, a.exponent, a.var) for a in T.adjoin if not a.f.is_zero()}
    return TowerReport(
        T, e, q, summands, recipes, order, mismatch is None, mismatch, fp, subs,
        x_action_zero=e >= T.e_tilde,
    )


# --------------------------------------------------------------------------
# Bundled instances
# --------------------------------------------------------------------------


def _poly(p, names, terms) -> SparsePoly:
    return SparsePoly(p, names, {tuple(exp): c for exp, c in terms})


def brenner_instance(p: int) -> TowerPresentation:
    """x^2 + y^3 + z^7 solved for the variable whose exponent is p."""
    F = Fraction
    if p == 2:
        base = PolyBase(2, ("y", "z"), (F(14), F(6)))
        f = _poly(2, base.vars, [((3, 0), 1), ((0, 7), 1)])
        return make_tower(base, [("x", 2, f, None)], "brenner_p2")
    if p == 3:
        base = PolyBase(3, ("x", "z"), (F(21), F(6)))
        f = _poly(3, base.vars, [((2, 0), 1), ((0, 7), 1)])
        return make_tower(base, [("y", 3, f, None)], "brenner_p3")
    if p == 7:
        base = PolyBase(7, ("x", "y"), (F(3), F(2)))
        f = _poly(7, base.vars, [((2, 0), 1), ((0, 3), 1)])
        return make_tower(base, [("z", 7, f, None)], "brenner_p7")
    raise UnsupportedCharacteristic(f"x^2 + y^3 + z^7 has no tower presentation in characteristic {p}")


def sq_st_t_instance(q: int, p: int | None = None) -> TowerPresentation:
    """k[s^q, st, t] = k[x, y, z]/(y^q - x z^q) with x = s^q, y = st, z = t."""
    if p is None:
        p = next(d for d in range(2, q + 1) if q % d == 0)
    if not _is_power_of(q, p):
        raise InvalidPresentation(f"q = {q} is not a power of p = {p}")
    base = PolyBase(p, ("x", "z"), (Fraction(q), Fraction(1)))
    f = _poly(p, base.vars, [((1, q), -1)])
    return make_tower(base, [("y", q, f, None)], f"s{q}_st_t")
