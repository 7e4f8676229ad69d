"""Sparse multivariate polynomials over F_p with rational exponents.

Rational exponents let R^(1/q) live in the same ring as R: the q-th root of
a monomial just divides its exponent vector by q.
"""

from __future__ import annotations

from fractions import Fraction


class SparsePoly:
    __slots__ = ("p", "names", "terms")

    def __init__(self, p: int, names, terms=None):
        self.p = p
        self.names = tuple(names)
        clean = {}
        for exp, c in (terms or {}).items():
            c %= p
            if c:
                exp = tuple(Fraction(x) for x in exp)
                if len(exp) != len(self.names):
                    raise ValueError("exponent vector length does not match variables")
                clean[exp] = (clean.get(exp, 0) + c) % p
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def var(cls, p, names, name) -> SparsePoly:
        exp = tuple(1 if n == name else 0 for n in names)
        return cls(p, names, {exp: 1})

    @classmethod
    def const(cls, p, names, c) -> SparsePoly:
        return cls(p, names, {(0,) * len(names): c})

    def _same(self, other):
        if isinstance(other, int):
            return SparsePoly.const(self.p, self.names, other)
        if other.p != self.p or other.names != self.names:
            raise ValueError("polynomials over different rings")
        return other

    def __add__(self, other):
        other = self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = (out.get(k, 0) + v) % self.p
        return SparsePoly(self.p, self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.p, self.names, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._same(other))

    def __mul__(self, other):
        other = self._same(other)
        p = self.p
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = (out.get(k, 0) + v1 * v2) % p
        return SparsePoly(p, self.names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(self.p, self.names, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.const(self.p, self.names, other)
        return isinstance(other, SparsePoly) and (self.p, self.names, self.terms) == (other.p, other.names, other.terms)

    def __hash__(self):
        return hash((self.p, self.names, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def root(self, q: int) -> SparsePoly:
        """The q-th root in R^(1/q); coefficients in F_p are their own roots."""
        return SparsePoly(self.p, self.names, {tuple(x / q for x in k): v for k, v in self.terms.items()})

    def extend(self, names) -> SparsePoly:
        """Same polynomial viewed in a ring with more variables."""
        names = tuple(names)
        idx = [names.index(n) for n in self.names]
        out = {}
        for k, v in self.terms.items():
            exp = [0] * len(names)
            for j, x in zip(idx, k):
                exp[j] = x
            out[tuple(exp)] = v
        return SparsePoly(self.p, names, out)

    def weighted_degrees(self, weights) -> set[Fraction]:
        return {sum(Fraction(w) * x for w, x in zip(weights, k)) for k in self.terms}

    def is_homogeneous(self, weights) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def weighted_degree(self, weights) -> Fraction:
        degs = self.weighted_degrees(weights)
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degs.pop()

    def has_constant_term(self) -> bool:
        return any(all(x == 0 for x in k) for k in self.terms)

    def to_json(self) -> list:
        out = []
        for k in sorted(self.terms):
            out.append({"coeff": self.terms[k], "exp": [str(x) if x.denominator != 1 else int(x) for x in k]})
        return out

    @classmethod
    def from_json(cls, p, names, obj) -> SparsePoly:
        terms = {}
        for t in obj:
            exp = tuple(Fraction(x) for x in t["exp"])
            terms[exp] = (terms.get(exp, 0) + int(t["coeff"])) % p
        return cls(p, names, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            mono = "*".join(n if x == 1 else f"{n}^{x}" for n, x in zip(self.names, k) if x)
            if not mono:
                parts.append(str(v))
            else:
                parts.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(parts)
