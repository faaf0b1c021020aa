"""Rational function fields k(t) over an exact constant field.

Elements are reduced fractions of `poly.Poly` values in the variable t: the
denominator is monic and coprime to the numerator.  The constant field k is
any domain adapter from this package (QQ or a finite field), so k(t) itself
is again a domain adapter and can serve as the coefficient field of the
polynomials split in `localsplit`.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, poly_gcd


class RatFunc:
    """Element of k(t), stored as num/den in lowest terms."""

    __slots__ = ("parent", "num", "den")

    def __init__(self, parent, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in k(t)")
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.leading()
            if lead != parent.base.one:
                inv = parent.base.one / lead
                num = num * inv
                den = den * inv
        else:
            den = Poly.one(parent.base)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self.parent.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return (self.parent is other.parent and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((id(self.parent), self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = self.parent.coerce(other)
        return RatFunc(self.parent,
                       self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.parent, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self.parent.coerce(other))

    def __rsub__(self, other):
        return self.parent.coerce(other) - self

    def __mul__(self, other):
        other = self.parent.coerce(other)
        return RatFunc(self.parent, self.num * other.num,
                       self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.parent.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in k(t)")
        return RatFunc(self.parent, self.num * other.den,
                       self.den * other.num)

    def __rtruediv__(self, other):
        return self.parent.coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (self.parent.one / self) ** (-e)
        out = self.parent.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def d_dt(self) -> "RatFunc":
        """Derivative with respect to t (quotient rule)."""
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(self.parent, num, self.den * self.den)

    def order_at(self, pi: Poly) -> int:
        """pi-adic order: multiplicity of pi in num minus that in den."""
        if not self:
            raise ValueError("zero has no finite order")

        def mult(f):
            m = 0
            while True:
                q, r = divmod(f, pi)
                if not r.is_zero():
                    return m, f
                m += 1
                f = q

        mn, _ = mult(self.num)
        md, _ = mult(self.den)
        return mn - md

    def __repr__(self):
        num = _fmt_tpoly(self.num)
        if self.den.degree == 0:
            return num
        return f"({num})/({_fmt_tpoly(self.den)})"


def _fmt_tpoly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == f.field.zero:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            s = "t" if i == 1 else f"t^{i}"
            parts.append(s if c == f.field.one else f"{c}*{s}")
    return " + ".join(parts)


class FunctionField:
    """Domain adapter for k(t); elements are RatFunc values."""

    _cache = {}

    def __new__(cls, base):
        if base in cls._cache:
            return cls._cache[base]
        obj = super().__new__(cls)
        cls._cache[base] = obj
        return obj

    def __init__(self, base):
        if getattr(self, "base", None) is not None:
            return
        self.base = base
        self.characteristic = base.characteristic
        self.zero = RatFunc(self, Poly.zero(base), Poly.one(base))
        self.one = RatFunc(self, Poly.one(base), Poly.one(base))
        self.t = RatFunc(self, Poly.x(base), Poly.one(base))

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.parent is not self:
                raise ValueError("element of a different function field")
            return x
        if isinstance(x, Poly):
            if x.field != self.base:
                raise ValueError("polynomial over a different constant field")
            return RatFunc(self, x, Poly.one(self.base))
        if isinstance(x, (int, Fraction)):
            return RatFunc(self, Poly.constant(self.base, self.base.coerce(x)),
                           Poly.one(self.base))
        try:
            c = self.base.coerce(x)
        except (TypeError, ValueError) as exc:
            raise TypeError(f"cannot coerce {x!r} into {self}") from exc
        return RatFunc(self, Poly.constant(self.base, c), Poly.one(self.base))

    def from_coeff_lists(self, num_coeffs, den_coeffs=(1,)):
        return RatFunc(self, Poly(self.base, num_coeffs),
                       Poly(self.base, den_coeffs))

    def elem_key(self, c):
        return (tuple(self.base.elem_key(a) for a in c.num.coeffs),
                tuple(self.base.elem_key(a) for a in c.den.coeffs))

    def __repr__(self):
        return f"{self.base}(t)"
