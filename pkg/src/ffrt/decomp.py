"""Graded decomposition of A^(1/q), classification of summands across e, and verdicts.

For q = p^e at least the conductor c, A^(1/q) splits by residue of degree
mod q into rank-one summands M_i (0 <= i < q):

* V_i = 0      -> M_i is B = K[t], generated in degree 1 + i/q
* V_i = K      -> M_i is B, generated in degree i/q
* otherwise    -> M_i = V_i^(1/q) t^(i/q) + (K t^(1+i/q) + ...), a proper summand

Two proper summands are isomorphic up to shift iff their root spaces are
projectively equivalent (beta*W1 = W2 for some beta in K*).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction

import flint

from . import linalg
from .curve import RingPresentation, hilbert_dim
from .errors import CertificateFailure, ConductorNotCleared, NotProper, PatternMismatch
from .fields import ExtElement, PerfectClosure
from .subspace import (
    Subspace,
    canonical_label,
    frobenius_space,
    projectively_equivalent,
    root_space,
    span,
)
from .unionfind import DisjointSet

FREE = "Free"
PROPER = "Proper"

FFRT_CERTIFIED = "FFRT_CERTIFIED"
NOT_FFRT_CERTIFIED = "NOT_FFRT_CERTIFIED"
LOWER_BOUND_ONLY = "LOWER_BOUND_ONLY"

FREE_CLASS = "B"
DEFAULT_EMAX = 8
DEFAULT_CHECK_DEGREE = 8


@dataclass(frozen=True)
class SummandDescriptor:
    """One rank-one graded summand M^(e)_i.

    ``shift`` is a with M_i isomorphic to B(a) (free) or generated in degree
    -a (proper), using [M(a)]_b = M_(a+b).
    """

    e: int
    i: int
    kind: str
    shift: Fraction
    W: Subspace | None = None
    class_id: str | None = None
    rank: int = 1

    @property
    def generator_degree(self) -> Fraction:
        return -self.shift

    def dim_at(self, degree: Fraction, n: int) -> int:
        m = degree - self.generator_degree
        if m < 0 or m.denominator != 1:
            return 0
        if self.kind == PROPER and m == 0:
            return self.W.dim
        return n


@dataclass
class DecompositionReport:
    ring: RingPresentation
    e: int
    q: int
    summands: list[SummandDescriptor]
    check_degree: int
    hilbert_ok: bool
    hilbert_failures: list[tuple[Fraction, int, int]] = field(default_factory=list)
    # constants of the rank-one torsion-free case: ^eA = B^(r q) + k^ell
    r: int = 1
    ell: int = 0

    @property
    def free_count(self) -> int:
        return sum(1 for s in self.summands if s.kind == FREE)

    @property
    def proper(self) -> list[SummandDescriptor]:
        return [s for s in self.summands if s.kind == PROPER]


def min_clearing_e(A: RingPresentation) -> int:
    """Smallest e >= 1 with p^e >= c."""
    c = A.profile.c
    e = 1
    while A.p**e < c:
        e += 1
    return e


def _require_cleared(A: RingPresentation, e: int):
    q = A.p**e
    if q < A.profile.c:
        raise ConductorNotCleared(f"q = {A.p}^{e} = {q} is below the conductor c = {A.profile.c}")


def hilbert_conservation(A: RingPresentation, e: int, summands, check_degree: int):
    """Compare summed descriptor dimensions with dim V_j for every j/q <= check_degree."""
    q = A.p**e
    n = A.field.n
    by_frac = defaultdict(list)
    for s in summands:
        g = s.generator_degree
        by_frac[g - (g.numerator // g.denominator)].append(s)
    failures = []
    for j in range(check_degree * q + 1):
        d = Fraction(j, q)
        got = sum(s.dim_at(d, n) for s in by_frac.get(d - (j // q), ()))
        want = hilbert_dim(A, e, j)
        if got != want:
            failures.append((d, got, want))
    return not failures, failures


def decompose(
    A: RingPresentation,
    e: int,
    check_degree: int = DEFAULT_CHECK_DEGREE,
) -> DecompositionReport:
    """Split A^(1/q) into its q rank-one graded summands."""
    if e < 0:
        raise ValueError("e must be non-negative")
    _require_cleared(A, e)
    q = A.p**e
    prof = A.profile
    summands = []
    for i in range(q):
        V = prof.space(i)
        if V.is_zero:
            summands.append(SummandDescriptor(e, i, FREE, -Fraction(i + q, q)))
        elif V.is_full:
            summands.append(SummandDescriptor(e, i, FREE, -Fraction(i, q)))
        else:
            W = root_space(V, e)
            summands.append(SummandDescriptor(e, i, PROPER, -Fraction(i, q), W))
    ok, failures = hilbert_conservation(A, e, summands, check_degree)
    return DecompositionReport(A, e, q, summands, check_degree, ok, failures)


# --------------------------------------------------------------------------
# Pairwise comparison
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    isomorphic: bool
    witness: ExtElement | None
    certificate: Subspace
    reason: str
    normalized_e: int

    def __bool__(self):
        return self.isomorphic


def _normalized_pair(A, e1, i1, e2, i2):
    """Frobenius^E images of the two root spaces, E = max(e1, e2).

    The Frobenius of K is a field automorphism carrying k onto k, so it maps
    transporters to transporters and preserves projective equivalence.
    """
    E = max(e1, e2)
    V1 = A.profile.space(i1)
    V2 = A.profile.space(i2)
    return E, frobenius_space(V1, E - e1), frobenius_space(V2, E - e2)


def pairwise_noniso(
    A: RingPresentation, e1: int, i1: int, e2: int, i2: int, method: str = "direct"
) -> Comparison:
    """Decide whether M^(e1)_i1 and M^(e2)_i2 are isomorphic up to shift.

    ``method="direct"`` compares the root spaces V^(1/q) themselves.
    ``method="frobenius"`` first pushes both through Frobenius^max(e1,e2) and
    so never leaves level zero; the verdict is the same.  Either way the
    witness is a beta with beta * V_i1^(1/q1) = V_i2^(1/q2).
    """
    for e in (e1, e2):
        _require_cleared(A, e)
    for e, i in ((e1, i1), (e2, i2)):
        V = A.profile.space(i)
        if V.is_zero or V.is_full:
            raise NotProper(f"M^({e})_{i} is free; only the shift distinguishes it")
    if method == "direct":
        W1 = root_space(A.profile.space(i1), e1)
        W2 = root_space(A.profile.space(i2), e2)
        res = projectively_equivalent(W1, W2)
        return Comparison(res.equivalent, res.witness, res.transporter, res.reason, 0)
    if method != "frobenius":
        raise ValueError(f"unknown comparison method {method!r}")
    E, W1, W2 = _normalized_pair(A, e1, i1, e2, i2)
    res = projectively_equivalent(W1, W2)
    witness = None
    if res.equivalent:
        witness = res.witness if res.witness == A.field.one else res.witness.pth_root_iter(E)
    return Comparison(res.equivalent, witness, res.transporter, res.reason, E)


# --------------------------------------------------------------------------
# Classification across e
# --------------------------------------------------------------------------


@dataclass
class ClassInfo:
    id: str
    kind: str
    dim: int | None
    first_seen: tuple[int, int] | None
    label: object = None


@dataclass
class ClassTable:
    ring: RingPresentation
    e_min: int
    e_max: int
    reports: dict[int, DecompositionReport]
    classes: list[ClassInfo]
    multiplicities: dict[int, dict[str, int]]
    method: str
    frobenius_order: int | None = None
    period: int | None = None
    periodic_offset_ok: bool | None = None
    offset_failures: list = field(default_factory=list)

    def class_of(self, e: int, i: int) -> str:
        return self.reports[e].summands[i].class_id

    def proper_profile(self, e: int) -> tuple[str, ...]:
        return tuple(s.class_id for s in self.reports[e].summands[: self.ring.profile.c])

    def cumulative_class_counts(self) -> list[int]:
        seen, out = set(), []
        for e in range(self.e_min, self.e_max + 1):
            seen.update(self.multiplicities[e])
            out.append(len(seen))
        return out

    @property
    def proper_classes(self) -> list[ClassInfo]:
        return [c for c in self.classes if c.kind == PROPER]


def classify(
    A: RingPresentation,
    e_max: int = DEFAULT_EMAX,
    e_min: int | None = None,
    check_degree: int = DEFAULT_CHECK_DEGREE,
) -> ClassTable:
    """Assign class ids to every summand for e_min <= e <= e_max."""
    if e_min is None:
        e_min = min_clearing_e(A)
    _require_cleared(A, e_min)
    if e_max < e_min:
        raise ValueError(f"e_max = {e_max} is below e_min = {e_min}")
    K = A.field
    finite = K.is_finite
    classes = [ClassInfo(FREE_CLASS, FREE, None, None)]
    label_to_id: dict = {}
    dsu = DisjointSet()
    reps: list[tuple[str, tuple[int, int], Subspace]] = []  # one entry per union-find root
    reports = {}
    multiplicities = {}
    for e in range(e_min, e_max + 1):
        rep = decompose(A, e, check_degree)
        labelled = []
        for s in rep.summands:
            if s.kind == FREE:
                labelled.append(replace(s, class_id=FREE_CLASS))
                continue
            if finite:
                lab = canonical_label(s.W)
                cid = label_to_id.get(lab)
                if cid is None:
                    cid = f"P{len(label_to_id) + 1}"
                    label_to_id[lab] = cid
                    classes.append(ClassInfo(cid, PROPER, s.W.dim, (e, s.i), lab))
            else:
                node = (e, s.i)
                dsu.make_set(node)
                cid = None
                for rid, rnode, rW in reps:
                    if rW.dim == s.W.dim and projectively_equivalent(rW, s.W).equivalent:
                        dsu.union(rnode, node)
                        cid = rid
                        break
                if cid is None:
                    cid = f"P{len(reps) + 1}"
                    reps.append((cid, node, s.W))
                    classes.append(ClassInfo(cid, PROPER, s.W.dim, node))
            labelled.append(replace(s, class_id=cid))
        rep.summands = labelled
        reports[e] = rep
        multiplicities[e] = dict(sorted(Counter(s.class_id for s in labelled).items(), key=_class_sort))
    table = ClassTable(
        A, e_min, e_max, reports, classes, multiplicities,
        method="canonical-label" if finite else "union-find",
    )
    if finite:
        _periodicity(table, K.frobenius_order)
    return table


def _class_sort(item):
    cid = item[0]
    return (0, 0) if cid == FREE_CLASS else (1, int(cid[1:]))


def _periodicity(table: ClassTable, F: int):
    table.frobenius_order = F
    failures = []
    for e in range(table.e_min, table.e_max - F + 1):
        for s in table.reports[e].summands:
            other = table.class_of(e + F, s.i)
            if other != s.class_id:
                failures.append((e, s.i, s.class_id, other))
    table.offset_failures = failures
    table.periodic_offset_ok = not failures if table.e_max - table.e_min >= F else None
    profiles = {e: table.proper_profile(e) for e in range(table.e_min, table.e_max + 1)}
    for d in sorted(x for x in range(1, F + 1) if F % x == 0):
        if all(profiles[e] == profiles[e + d] for e in range(table.e_min, table.e_max - d + 1)):
            table.period = d
            break


# --------------------------------------------------------------------------
# Quartic-family recurrence certificate
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceEntry:
    e: int
    f: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]
    identity_ok: bool
    nonzero_ok: bool
    degree_pattern_ok: bool

    @property
    def deg_f(self) -> int:
        return len(self.f) - 1

    @property
    def deg_g(self) -> int:
        return len(self.g) - 1

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.nonzero_ok and self.degree_pattern_ok


@dataclass
class RecurrenceCertificate:
    """a^(2^e) = f_e a^2 + g_e a + h_e with f_e, g_e in F_2[u] for 2 <= e <= e_max."""

    entries: list[RecurrenceEntry]
    independence: dict[int, int]  # d -> rank of {1, a, a^(2^d), a^(2^d + 1)}

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.entries) and all(r == 4 for r in self.independence.values())


def is_quartic_family(K) -> bool:
    base = K.base
    if not isinstance(base, PerfectClosure) or base.p != 2 or K.n != 4:
        return False
    u = base.gen
    return list(K.min_poly) == [base.one, u, base.one, base.zero, base.one]


def _as_base(poly: flint.nmod_poly, base):
    return base.element(poly.coeffs() or [0])


def _ints(poly: flint.nmod_poly) -> tuple[int, ...]:
    return tuple(int(c) for c in poly.coeffs())


def _independence_rank(K, x: ExtElement) -> int:
    vecs = [K.one, K.gen, x, x * K.gen]
    return linalg.rank([v.coords for v in vecs], K.base)


def recurrence_certificate(K_or_ring, e_max: int = 12, strict: bool = True) -> RecurrenceCertificate:
    """Iterate f_(e+1) = f_e^2 + g_e^2, g_(e+1) = u f_e^2, h_(e+1) = f_e^2 + h_e^2 from (1, u, 1)."""
    K = K_or_ring.field if isinstance(K_or_ring, RingPresentation) else K_or_ring
    if not is_quartic_family(K):
        raise PatternMismatch(f"{K!r} is not a^4 + a^2 + u a + 1 = 0 over the perfect closure of F_2(u)")
    if e_max < 2:
        raise ValueError("the recurrence starts at e = 2")
    base = K.base
    P = lambda c: flint.nmod_poly(c, 2)  # noqa: E731
    u = P([0, 1])
    f, g, h = P([1]), u, P([1])
    a = K.gen
    power = a.frobenius(2)
    entries = []
    independence = {1: _independence_rank(K, a.frobenius(1))}
    for e in range(2, e_max + 1):
        if e > 2:
            f, g, h = f * f + g * g, u * f * f, f * f + h * h
            power = power.frobenius(1)
        rhs = K.gen * K.gen * _as_base(f, base) + K.gen * _as_base(g, base) + K.from_base(_as_base(h, base))
        identity_ok = rhs == power
        nonzero_ok = not f.is_zero() and not g.is_zero()
        df, dg = f.degree(), g.degree()
        pattern_ok = nonzero_ok and (df == dg - 1 if e % 2 == 0 else df == dg + 1)
        entries.append(RecurrenceEntry(e, _ints(f), _ints(g), _ints(h), identity_ok, nonzero_ok, pattern_ok))
        independence[e] = _independence_rank(K, power)
    cert = RecurrenceCertificate(entries, independence)
    if strict and not cert.ok:
        bad = [x.e for x in entries if not x.ok] + [d for d, r in independence.items() if r != 4]
        raise CertificateFailure(f"recurrence certificate fails at e = {bad}")
    return cert


# --------------------------------------------------------------------------
# Verdict
# --------------------------------------------------------------------------


@dataclass
class Verdict:
    status: str
    reason: str
    class_count: int
    proper_class_count: int
    period: int | None = None
    minimal_period: int | None = None
    lower_bound: int | None = None
    certificate: RecurrenceCertificate | None = None
    notes: list[str] = field(default_factory=list)


def ffrt_verdict(A: RingPresentation, e_max: int = DEFAULT_EMAX, table: ClassTable | None = None) -> Verdict:
    if table is None:
        table = classify(A, e_max)
    prof = A.profile
    proper_res = [i for i in range(prof.c) if not (prof.space(i).is_zero or prof.space(i).is_full)]
    n_classes = len(table.classes)
    n_proper = len(table.proper_classes)
    if not proper_res:
        return Verdict(
            FFRT_CERTIFIED, "all-free", n_classes, n_proper,
            notes=["every V_i with i < c is 0 or K, so every A^(1/q) with q >= c is a sum of shifted copies of B"],
        )
    K = A.field
    if K.is_finite:
        F = K.frobenius_order
        if table.periodic_offset_ok:
            return Verdict(
                FFRT_CERTIFIED, "finite-field-periodicity", n_classes, n_proper, period=F,
                minimal_period=table.period,
                notes=[
                    f"|K| = p^{F}: class(M^(e)_i) = class(M^(e+{F})_i) on the observed range, "
                    "so the classes seen in one period are all that occur"
                ],
            )
        if table.offset_failures:
            return Verdict(LOWER_BOUND_ONLY, "periodicity-violated", n_classes, n_proper, lower_bound=n_proper,
                           notes=[f"offset-{F} mismatches: {table.offset_failures[:5]}"])
        return Verdict(
            LOWER_BOUND_ONLY, "range-shorter-than-period", n_classes, n_proper, lower_bound=n_proper,
            notes=[f"need e_max - e_min >= {F} to observe a full Frobenius period"],
        )
    if all(prof.space(i).dim == 1 for i in proper_res):
        return Verdict(
            FFRT_CERTIFIED, "lines-only", n_classes, n_proper,
            notes=["every proper V_i is a line and any two lines in K are scalar multiples"],
        )
    if is_quartic_family(K):
        line = span([K.one, K.gen], K)
        hits = [i for i in proper_res if prof.space(i) == line]
        if hits:
            cert = recurrence_certificate(K, max(e_max, 2))
            return Verdict(
                NOT_FFRT_CERTIFIED, "quartic-recurrence", n_classes, n_proper, certificate=cert,
                lower_bound=n_proper,
                notes=[
                    f"V_{hits[0]} = span(1, a); the recurrence keeps deg f_e != deg g_e for every e, "
                    "so 1, a, a^(2^d), a^(2^d+1) are independent and the M^(e)_" f"{hits[0]} are pairwise non-isomorphic"
                ],
            )
    return Verdict(
        LOWER_BOUND_ONLY, "distinct-classes-observed", n_classes, n_proper, lower_bound=n_proper,
        notes=[f"{n_proper} pairwise non-isomorphic proper classes for {table.e_min} <= e <= {table.e_max}"],
    )
