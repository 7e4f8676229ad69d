"""Exact coefficient fields.

Three kinds of field live here:

* ``FiniteField`` -- GF(p^f) as dense coordinate vectors over F_p in a fixed
  power basis.
* ``PerfectClosure`` -- the perfect closure of F_p(u).  An element is a
  reduced fraction num(v)/den(v) over F_p with v = u^(1/p^level), stored at
  the smallest level that can hold it.
* ``ExtField`` -- a simple extension K = k[x]/(m(x)) of either of the above.

Every element is immutable and compares equal exactly when its normal form
is identical, so elements are hashable and safe as dict keys.
"""

from __future__ import annotations

import itertools
import random
from functools import cached_property

import flint

from . import linalg
from .errors import DivisionByZero, FieldMismatch, ReducibleModulus


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


# --------------------------------------------------------------------------
# GF(p^f)
# --------------------------------------------------------------------------


def _irreducible_fp(coeffs, p: int) -> bool:
    _, factors = flint.nmod_poly(list(coeffs), p).factor()
    return len(factors) == 1 and factors[0][1] == 1


def _first_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree f over F_p."""
    if f == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=f):
        coeffs = list(reversed(tail)) + [1]
        if coeffs[0] == 0:
            continue
        if _irreducible_fp(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FiniteField:
    """GF(p^f) with elements as coordinate tuples over F_p (low degree first)."""

    kind = "finite"

    def __init__(self, p: int, f: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 1:
            raise ValueError("extension degree f must be >= 1")
        self.p = p
        self.f = f
        if modulus is None:
            modulus = _first_irreducible(p, f)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree f")
        if f > 1 and not _irreducible_fp(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self.size = p**f
        self.zero = FFElement(self, (0,) * f)
        self.one = FFElement(self, (1,) + (0,) * (f - 1))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash(("GF", self.p, self.f, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    @property
    def frobenius_order(self) -> int:
        """log_p of the field size."""
        return self.f

    def __call__(self, value) -> FFElement:
        if isinstance(value, FFElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            coords = [value % self.p] + [0] * (self.f - 1)
        else:
            coords = [int(c) % self.p for c in value]
            if len(coords) > self.f:
                raise ValueError(f"too many coordinates for {self!r}")
            coords += [0] * (self.f - len(coords))
        return FFElement(self, tuple(coords))

    def elements(self):
        for coords in itertools.product(range(self.p), repeat=self.f):
            yield FFElement(self, tuple(reversed(coords)))

    def random_element(self, rng: random.Random) -> FFElement:
        return FFElement(self, tuple(rng.randrange(self.p) for _ in range(self.f)))

    def to_json(self, a: FFElement):
        return a.c[0] if self.f == 1 else list(a.c)

    def from_json(self, obj) -> FFElement:
        return self(obj)

    def descriptor(self) -> dict:
        out = {"kind": "finite", "p": self.p, "f": self.f}
        if self.f > 1:
            out["modulus"] = list(self.modulus)
        return out


class FFElement:
    __slots__ = ("field", "c")

    def __init__(self, field: FiniteField, c: tuple[int, ...]):
        self.field = field
        self.c = c

    def _check(self, other):
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FFElement) or other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"cannot combine {self!r} with {other!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.c))

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        p, f = F.p, F.f
        if f == 1:
            return FFElement(F, ((self.c[0] * other.c[0]) % p,))
        prod = [0] * (2 * f - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    prod[i + j] += a * b
        mod = F.modulus
        for k in range(2 * f - 2, f - 1, -1):
            t = prod[k] % p
            if t:
                for j in range(f):
                    prod[k - f + j] -= t * mod[j]
        return FFElement(F, tuple(x % p for x in prod[:f]))

    __rmul__ = __mul__

    def inverse(self) -> FFElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        F = self.field
        if F.f == 1:
            return FFElement(F, (pow(self.c[0], -1, F.p),))
        return self ** (F.size - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self, e: int = 1) -> FFElement:
        return self ** (self.field.p ** (e % self.field.f)) if e else self

    def pth_root(self) -> FFElement:
        F = self.field
        return self ** (F.p ** (F.f - 1))

    def key(self):
        return self.c

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        return isinstance(other, FFElement) and self.c == other.c and self.field == other.field

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if self.field.f == 1:
            return str(self.c[0])
        terms = [f"{c}*g^{i}" if i else str(c) for i, c in enumerate(self.c) if c]
        return "(" + " + ".join(terms or ["0"]) + ")"


# --------------------------------------------------------------------------
# Perfect closure of F_p(u)
# --------------------------------------------------------------------------


def _spread(poly: flint.nmod_poly, s: int, p: int) -> flint.nmod_poly:
    """poly(v) -> poly(v^s)."""
    if s == 1 or poly.degree() <= 0:
        return poly
    coeffs = poly.coeffs()
    out = [0] * ((len(coeffs) - 1) * s + 1)
    out[::s] = coeffs
    return flint.nmod_poly(out, p)


def _compress_level(num, den, level, p):
    """Lower the level while every exponent of num and den is divisible by p."""
    while level > 0:
        nc, dc = num.coeffs(), den.coeffs()
        if any(c for i, c in enumerate(nc) if i % p) or any(c for i, c in enumerate(dc) if i % p):
            break
        num = flint.nmod_poly(nc[::p], p)
        den = flint.nmod_poly(dc[::p], p)
        level -= 1
    return num, den, level


class PerfectClosure:
    """The perfect closure of the rational function field F_p(u)."""

    kind = "perfect_closure_rational"

    def __init__(self, p: int, variable: str = "u"):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.variable = variable
        self.zero = PCElement(self, 0, flint.nmod_poly([], p), flint.nmod_poly([1], p))
        self.one = PCElement(self, 0, flint.nmod_poly([1], p), flint.nmod_poly([1], p))

    def __eq__(self, other):
        return isinstance(other, PerfectClosure) and self.p == other.p

    def __hash__(self):
        return hash(("PC", self.p))

    def __repr__(self):
        return f"F_{self.p}({self.variable})^perf"

    frobenius_order = None

    @property
    def gen(self) -> PCElement:
        return self.element([0, 1])

    def element(self, num, den=(1,), level: int = 0) -> PCElement:
        p = self.p
        num = flint.nmod_poly([int(c) % p for c in num], p)
        den = flint.nmod_poly([int(c) % p for c in den], p)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if level < 0:
            raise ValueError("level must be non-negative")
        return PCElement.normalized(self, level, num, den)

    def __call__(self, value) -> PCElement:
        if isinstance(value, PCElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            return self.element([value])
        return self.from_json(value)

    def random_element(self, rng: random.Random, max_level: int = 2, max_deg: int = 3) -> PCElement:
        p = self.p
        num = [rng.randrange(p) for _ in range(rng.randint(1, max_deg + 1))]
        while True:
            den = [rng.randrange(p) for _ in range(rng.randint(1, max_deg))]
            if any(den):
                break
        return self.element(num, den, rng.randint(0, max_level))

    def to_json(self, a: PCElement):
        return {"level": a.level, "num": [int(c) for c in a.num.coeffs()], "den": [int(c) for c in a.den.coeffs()]}

    def from_json(self, obj) -> PCElement:
        if isinstance(obj, int):
            return self.element([obj])
        if isinstance(obj, dict):
            return self.element(obj.get("num", []), obj.get("den", [1]), obj.get("level", 0))
        raise ValueError(f"cannot read perfect-closure element from {obj!r}")

    def descriptor(self) -> dict:
        return {"kind": "perfect_closure_rational", "p": self.p, "variable": self.variable}


class PCElement:
    """num(v)/den(v) with v = u^(1/p^level); den monic, fraction reduced, level minimal."""

    __slots__ = ("field", "level", "num", "den", "_key")

    def __init__(self, field, level, num, den):
        self.field = field
        self.level = level
        self.num = num
        self.den = den
        self._key = None

    @classmethod
    def normalized(cls, field, level, num, den) -> PCElement:
        p = field.p
        if num.is_zero():
            return field.zero if hasattr(field, "zero") else cls(field, 0, num, flint.nmod_poly([1], p))
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num // g, den // g
        lc = int(den.coeffs()[-1])
        if lc != 1:
            inv = pow(lc, -1, p)
            num, den = num * inv, den * inv
        if level:
            num, den, level = _compress_level(num, den, level, p)
        return cls(field, level, num, den)

    def _check(self, other):
        if isinstance(other, int):
            return self.field.element([other])
        if not isinstance(other, PCElement) or other.field.p != self.field.p:
            raise FieldMismatch(f"cannot combine {self!r} with {other!r}")
        return other

    def lifted(self, level: int):
        """(num, den) rewritten at a higher level."""
        s = self.field.p ** (level - self.level)
        return _spread(self.num, s, self.field.p), _spread(self.den, s, self.field.p)

    def _common(self, other):
        L = max(self.level, other.level)
        n1, d1 = self.lifted(L)
        n2, d2 = other.lifted(L)
        return L, n1, d1, n2, d2

    def __add__(self, other):
        other = self._check(other)
        if not other:
            return self
        if not self:
            return other
        L, n1, d1, n2, d2 = self._common(other)
        if d1 == d2:
            return PCElement.normalized(self.field, L, n1 + n2, d1)
        return PCElement.normalized(self.field, L, n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return PCElement(self.field, self.level, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if not self or not other:
            return self.field.zero
        L, n1, d1, n2, d2 = self._common(other)
        return PCElement.normalized(self.field, L, n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> PCElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        return PCElement.normalized(self.field, self.level, self.den, self.num)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self, e: int = 1) -> PCElement:
        """self^(p^e).  Coefficients lie in F_p, so only the level or the exponents move."""
        if not self or e == 0:
            return self
        p = self.field.p
        if e <= self.level:
            return PCElement(self.field, self.level - e, self.num, self.den)
        s = p ** (e - self.level)
        return PCElement(self.field, 0, _spread(self.num, s, p), _spread(self.den, s, p))

    def pth_root(self) -> PCElement:
        if not self:
            return self
        return PCElement.normalized(self.field, self.level + 1, self.num, self.den)

    def key(self):
        if self._key is None:
            self._key = (self.level, tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs()))
        return self._key

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.element([other])
        return isinstance(other, PCElement) and self.key() == other.key() and self.field == other.field

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        var = self.field.variable if self.level == 0 else f"{self.field.variable}^(1/{self.field.p**self.level})"
        n = str(self.num).replace("x", var)
        if self.den.degree() == 0:
            return n if self.num.degree() <= 0 else f"({n})"
        return f"({n})/({str(self.den).replace('x', var)})"


# --------------------------------------------------------------------------
# Univariate polynomials over a base field (coefficient lists, low first)
# --------------------------------------------------------------------------


def _ptrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _pdivmod(a, b, field):
    a, b = _ptrim(a), _ptrim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = field.one / b[-1]
    quot = [field.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        t = a[-1] * inv_lead
        quot[shift] = t
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - t * bc
        a = _ptrim(a)
    return quot, a


def poly_gcd(a, b, field):
    """Monic gcd of two coefficient lists over ``field``."""
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pdivmod(a, b, field)[1]
    if not a:
        return []
    inv = field.one / a[-1]
    return [c * inv for c in a]


def poly_derivative(a, field):
    return _ptrim([c * i for i, c in enumerate(a)][1:]) if len(a) > 1 else []


# --------------------------------------------------------------------------
# Simple extensions K = k[x]/(m)
# --------------------------------------------------------------------------


class ExtField:
    """K = k[x]/(min_poly) with elements as coordinate tuples in 1, a, ..., a^(n-1)."""

    def __init__(self, base, min_poly, name: str = "a", trusted_irreducible: bool = False, check: bool = True):
        self.base = base
        self.p = base.p
        coeffs = tuple(base(c) for c in min_poly)
        if len(coeffs) < 2 or coeffs[-1] != base.one:
            raise ValueError("min_poly must be monic of degree >= 1")
        self.min_poly = coeffs
        self.n = len(coeffs) - 1
        self.name = name
        self.trusted_irreducible = trusted_irreducible
        self.zero = ExtElement(self, (base.zero,) * self.n)
        self.one = ExtElement(self, (base.one,) + (base.zero,) * (self.n - 1))
        # reductions of a^k for n <= k <= 2n-2
        red = []
        cur = [-c for c in coeffs[:-1]]
        for _ in range(self.n - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [base.zero] + cur[:-1]
            if top:
                cur = [x - top * m for x, m in zip(cur, coeffs[:-1])]
        self._reductions = red
        self.irreducibility = None
        if check:
            self.irreducibility = self._validate()

    # -- validation -------------------------------------------------------

    def _validate(self) -> str:
        base = self.base
        mp = list(self.min_poly)
        if self.n == 1:
            return "degree-one"
        dm = poly_derivative(mp, base)
        if not dm or len(poly_gcd(mp, dm, base)) > 1:
            raise ReducibleModulus("min_poly is not separable")
        if base.kind == "finite":
            # Ben-Or: no factor of degree <= n/2 divides m
            x = self.gen
            power = x
            Q = base.size
            for i in range(1, self.n // 2 + 1):
                power = power ** Q
                diff = list((power - x).coords)
                if len(poly_gcd(mp, diff, base)) > 1:
                    raise ReducibleModulus(f"min_poly has a factor of degree <= {i}")
            return "ben-or"
        return self._validate_function_field()

    def _validate_function_field(self) -> str:
        # A separable polynomial irreducible over F_p(v) stays irreducible over
        # the perfect closure, which is purely inseparable over F_p(v).
        p = self.p
        level = max(c.level for c in self.min_poly)
        lifted = [c.lifted(level) for c in self.min_poly]
        den_lcm = flint.nmod_poly([1], p)
        for _, d in lifted:
            den_lcm = den_lcm * d // den_lcm.gcd(d)
        ctx = flint.nmod_mpoly_ctx.get(("x", "v"), modulus=p)
        X, V = ctx.gens()
        total = ctx.from_dict({})
        for i, (num, den) in enumerate(lifted):
            coeff = num * (den_lcm // den)
            for j, c in enumerate(coeff.coeffs()):
                if c:
                    total += c * X**i * V**j
        _, factors = total.factor()
        xfactors = [(fac, mult) for fac, mult in factors if fac.degrees()[0] > 0]
        if len(xfactors) != 1 or xfactors[0][1] != 1:
            raise ReducibleModulus(f"min_poly factors over F_{p}(v): {factors}")
        return "bivariate-factorization"

    # -- construction -----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.base == other.base and self.min_poly == other.min_poly

    def __hash__(self):
        return hash((self.base, self.min_poly))

    def __repr__(self):
        return f"{self.base!r}[{self.name}]/({self.min_poly_str()})"

    def min_poly_str(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.min_poly))):
            if not c:
                continue
            mono = "1" if i == 0 else (self.name if i == 1 else f"{self.name}^{i}")
            terms.append(mono if c == self.base.one and i else f"{c!r}*{mono}" if i else repr(c))
        return " + ".join(terms)

    @property
    def is_finite(self) -> bool:
        return self.base.kind == "finite"

    @property
    def frobenius_order(self) -> int | None:
        """F with |K| = p^F, or None over an infinite base."""
        if not self.is_finite:
            return None
        return self.base.f * self.n

    @cached_property
    def gen(self) -> ExtElement:
        if self.n == 1:
            return self(-self.min_poly[0])
        return self.basis_vector(1)

    def basis_vector(self, j: int) -> ExtElement:
        coords = [self.base.zero] * self.n
        coords[j] = self.base.one
        return ExtElement(self, tuple(coords))

    def __call__(self, value) -> ExtElement:
        if isinstance(value, ExtElement):
            if value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) > self.n:
                raise ValueError(f"too many coordinates for degree-{self.n} extension")
            coords = [self.base(c) for c in value] + [self.base.zero] * (self.n - len(value))
            return ExtElement(self, tuple(coords))
        return ExtElement(self, (self.base(value),) + (self.base.zero,) * (self.n - 1))

    def from_base(self, c) -> ExtElement:
        return ExtElement(self, (c,) + (self.base.zero,) * (self.n - 1))

    def elements(self):
        if not self.is_finite:
            raise TypeError("cannot enumerate an infinite field")
        for coords in itertools.product(list(self.base.elements()), repeat=self.n):
            yield ExtElement(self, tuple(coords))

    def random_element(self, rng: random.Random) -> ExtElement:
        return ExtElement(self, tuple(self.base.random_element(rng) for _ in range(self.n)))

    def to_json(self, a: ExtElement) -> list:
        return [self.base.to_json(c) for c in a.coords]

    def from_json(self, obj) -> ExtElement:
        return self(list(obj) if isinstance(obj, (list, tuple)) else obj)

    # -- cached tables ----------------------------------------------------

    @cached_property
    def _frob_images(self) -> list[ExtElement]:
        """a^(j p) for j < n."""
        ap = self.gen ** self.p
        out = [self.one]
        for _ in range(1, self.n):
            out.append(out[-1] * ap)
        return out

    @cached_property
    def _frob_matrix_inverse(self):
        """Inverse of the matrix whose column j holds the coordinates of a^(jp)."""
        base = self.base
        n = self.n
        cols = [img.coords for img in self._frob_images]
        rows = [[cols[j][i] for j in range(n)] + [base.one if i == r else base.zero for r in range(n)] for i in range(n)]
        red, pivots = linalg.rref(rows, base)
        if pivots[:n] != list(range(n)) or len(red) != n:
            raise ReducibleModulus("Frobenius is not bijective; min_poly is not separable")
        return [row[n:] for row in red]


class ExtElement:
    __slots__ = ("field", "coords")

    def __init__(self, field: ExtField, coords: tuple):
        self.field = field
        self.coords = coords

    def _check(self, other) -> ExtElement:
        if isinstance(other, ExtElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"elements of {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, FFElement, PCElement)):
            return self.field.from_base(self.field.base(other))
        raise FieldMismatch(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other):
        other = self._check(other)
        return ExtElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return ExtElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return ExtElement(self.field, tuple(-a for a in self.coords))

    def scale(self, c) -> ExtElement:
        """Multiply by a base-field scalar."""
        return ExtElement(self.field, tuple(c * a if a else a for a in self.coords))

    def __mul__(self, other):
        other = self._check(other)
        K = self.field
        n = K.n
        zero = K.base.zero
        prod = [zero] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            t = prod[k]
            if t:
                red = K._reductions[k - n]
                out = [x + t * r if r else x for x, r in zip(out, red)]
        return ExtElement(K, tuple(out))

    __rmul__ = __mul__

    def mult_matrix(self) -> list[list]:
        """Matrix (rows = output coordinates) of y -> self*y."""
        K = self.field
        cols = [(self * K.basis_vector(j)).coords for j in range(K.n)]
        return [[cols[j][i] for j in range(K.n)] for i in range(K.n)]

    def inverse(self) -> ExtElement:
        if not self:
            raise DivisionByZero("inverse of zero")
        K = self.field
        rhs = [K.base.one] + [K.base.zero] * (K.n - 1)
        sol = linalg.solve(self.mult_matrix(), rhs, K.base)
        if sol is None:
            raise ReducibleModulus("element is a zero divisor; min_poly is reducible")
        return ExtElement(K, tuple(sol))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self, e: int = 1) -> ExtElement:
        """self^(p^e) via coordinatewise p-th powers and the table of a^(jp)."""
        K = self.field
        if K.is_finite and K.frobenius_order:
            e %= K.frobenius_order
        images = K._frob_images
        cur = self
        for _ in range(e):
            acc = K.zero
            for c, img in zip(cur.coords, images):
                if c:
                    acc = acc + img.scale(c.frobenius(1))
            cur = acc
        return cur

    def pth_root(self) -> ExtElement:
        K = self.field
        if not self:
            return self
        if K.is_finite:
            return self.frobenius(K.frobenius_order - 1)
        # self = sum_j c_j a^(jp) with c_j = b_j^p; solve for c, then root each.
        inv = K._frob_matrix_inverse
        zero = K.base.zero
        coords = []
        for row in inv:
            acc = zero
            for m, a in zip(row, self.coords):
                if m and a:
                    acc = acc + m * a
            coords.append(acc.pth_root())
        return ExtElement(K, tuple(coords))

    def pth_root_iter(self, e: int) -> ExtElement:
        out = self
        for _ in range(e):
            out = out.pth_root()
        return out

    def key(self):
        return tuple(c.key() for c in self.coords)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, (int, FFElement, PCElement)):
            other = self._check(other)
        return isinstance(other, ExtElement) and self.coords == other.coords and self.field == other.field

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        name = self.field.name
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            mono = "" if i == 0 else (name if i == 1 else f"{name}^{i}")
            if not mono:
                terms.append(repr(c))
            elif c == self.field.base.one:
                terms.append(mono)
            else:
                terms.append(f"{c!r}*{mono}")
        return " + ".join(terms) if terms else "0"


def prime_field(p: int) -> FiniteField:
    return FiniteField(p, 1)


def trivial_extension(base) -> ExtField:
    """K = k, presented as k[x]/(x)."""
    return ExtField(base, [base.zero, base.one], name="1")


__all__ = [
    "FiniteField", "FFElement", "PerfectClosure", "PCElement", "ExtField", "ExtElement",
    "prime_field", "trivial_extension", "poly_gcd", "is_prime",
]
