"""Graded one-dimensional domains A = k[a_1 t^n_1, ..., a_r t^n_r] inside K[t].

The degree-i piece of A is V_i * t^i for a k-subspace V_i of K.  Past the
conductor c every V_i is all of K, so A is pinned down by the finite table
V_0, ..., V_(c-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd

from .errors import InvalidPresentation, StabilizationFailure
from .fields import ExtElement, ExtField
from .subspace import Subspace, full_space, span, zero_space


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    members: tuple[bool, ...]
    conductor: int

    @classmethod
    def from_generators(cls, generators, bound: int | None = None) -> NumericalSemigroup:
        gens = tuple(sorted(set(generators)))
        if reduce(gcd, gens) != 1:
            raise InvalidPresentation(f"degrees {gens} have gcd != 1")
        if bound is None:
            bound = (gens[0] - 1) * (gens[-1] - 1) + gens[-1] + 1
        members = [False] * (bound + 1)
        members[0] = True
        for i in range(1, bound + 1):
            members[i] = any(i >= g and members[i - g] for g in gens)
        return cls(gens, tuple(members), _conductor_of(members))

    def __contains__(self, i: int) -> bool:
        return i >= self.conductor or (0 <= i < len(self.members) and self.members[i])

    @property
    def gaps(self) -> list[int]:
        return [i for i in range(self.conductor) if not self.members[i]]


def _conductor_of(members) -> int:
    c = len(members)
    while c > 0 and members[c - 1]:
        c -= 1
    return c


@dataclass(frozen=True)
class CoefficientProfile:
    """V_i for 0 <= i < len(V); every index from c on is K."""

    field: ExtField
    V: tuple[Subspace, ...]
    c: int

    def space(self, i: int) -> Subspace:
        if i < 0:
            return zero_space(self.field)
        if i < len(self.V):
            return self.V[i]
        return full_space(self.field)

    def dim(self, i: int) -> int:
        if i >= self.c:
            return self.field.n
        return self.space(i).dim


class RingPresentation:
    """A = k[coeff_1 t^deg_1, ...] inside B = K[t]."""

    def __init__(self, field: ExtField, generators, name: str = "A"):
        self.field = field
        self.name = name
        gens = []
        for coeff, degree in generators:
            coeff = field(coeff)
            if not coeff:
                raise InvalidPresentation("generator coefficient is zero")
            if not isinstance(degree, int) or degree < 1:
                raise InvalidPresentation(f"generator degree must be a positive integer, got {degree!r}")
            gens.append((coeff, degree))
        if not gens:
            raise InvalidPresentation("presentation has no generators")
        if reduce(gcd, (d for _, d in gens)) != 1:
            raise InvalidPresentation("generator degrees must have gcd 1")
        self.generators: tuple[tuple[ExtElement, int], ...] = tuple(gens)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.generators)

    @property
    def stabilization_cap(self) -> int:
        degs = sorted(self.degrees)
        return (degs[0] - 1) * (degs[-1] - 1) + 4 * self.field.n * degs[-1]

    @cached_property
    def profile(self) -> CoefficientProfile:
        return _build_profile(self)

    @cached_property
    def semigroup(self) -> NumericalSemigroup:
        """H read off the coefficient spaces: i in H iff V_i != 0."""
        prof = self.profile
        members = tuple(not prof.space(i).is_zero for i in range(len(prof.V)))
        return NumericalSemigroup(tuple(sorted(set(self.degrees))), members, _conductor_of(members))

    def __repr__(self):
        gens = ", ".join(f"({c!r}) t^{d}" for c, d in self.generators)
        return f"{self.name} = k[{gens}]"


def _build_profile(A: RingPresentation) -> CoefficientProfile:
    K = A.field
    window = max(A.degrees)
    cap = A.stabilization_cap
    V: list[Subspace] = [span([K.one], K)]
    run = 1 if V[0].is_full else 0
    i = 0
    while run < window:
        i += 1
        if i > cap:
            raise StabilizationFailure(
                f"V_i has not reached K for {window} consecutive degrees by i = {cap}; "
                "the coefficients do not generate K or the presentation is degenerate"
            )
        vecs = []
        for coeff, d in A.generators:
            if i >= d:
                vecs.extend(coeff * w for w in V[i - d].basis())
        V.append(span(vecs, K))
        run = run + 1 if V[i].is_full else 0
    c = len(V) - run
    return CoefficientProfile(K, tuple(V[:c]), c)


def coefficient_space(A: RingPresentation, i: int) -> Subspace:
    """V_i = {a in K : a t^i in A}."""
    if i < 0:
        raise ValueError("degree must be non-negative")
    return A.profile.space(i)


def conductor(A: RingPresentation) -> tuple[int, NumericalSemigroup, CoefficientProfile]:
    return A.profile.c, A.semigroup, A.profile


def hilbert_dim(A: RingPresentation, e: int, j: int) -> int:
    """dim_k of the degree j/q piece of A^(1/q); equals dim V_j independently of e."""
    if j < 0:
        return 0
    return A.profile.dim(j)


def is_multiplicative(profile: CoefficientProfile, upto: int | None = None) -> bool:
    """Check V_i * V_j inside V_(i+j) for all i, j below ``upto`` (default c)."""
    from .subspace import product_space

    upto = profile.c if upto is None else upto
    for i in range(upto):
        for j in range(i, upto):
            prod = product_space(profile.space(i), profile.space(j))
            if not profile.space(i + j).contains_space(prod):
                return False
    return True
