"""Rank-2 monomial valuations on k(x,y) and their tame binomial extensions.

A monomial valuation assigns x and y rational weight vectors and gives each
polynomial the lex-least weight of its monomials; with Z-linearly
independent weights the minimum is attained at a single monomial, which
makes the assignment a valuation with value group Γ_ν = Z·w_x + Z·w_y of
rational rank 2 and residue field k.

`extend_binomial` adjoins z with z^n = c·x^a·y^b (tame: the characteristic
of k does not divide n).  Writing g = gcd(n, a, b) and w = (a·w_x + b·w_y)/n,
the extended value group is Γ_ν + Z·w with e = [Γ_ω : Γ_ν] = n/g, and
z^e / (x^(a/g)·y^(b/g)) is a unit U with U^(n/e) = c exactly — the monomial
of value e·w divides z^n's right-hand side on the nose, so the residual
equation is T^(n/e) = c̄ with unit 1.  Each irreducible factor of
T^(n/e) − c̄ over k contributes one extension with f = its degree; tameness
makes every extension defectless, so local degrees are e·f and sum to n.

These are the smallest instances separating ε from e: the criterion's
initial condition holds or fails depending on whether w is congruent mod
Γ_ν to a vector supported in the lex-smallest coordinate.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, inf

from .gf import FiniteField
from .ordgroup import LexGroup, RationalVector, lex_compare, subgroup_index
from .poly import Poly, QQ, RationalField
from .raminv import ExtensionInvariants, validate
from .residuefield import factor_over

INFINITY = inf


class WildBinomialError(NotImplementedError):
    """The characteristic divides n: the extension is out of tame scope."""


class MonomialValuation:
    """Lex-monomial valuation on k(x,y) given by two weight vectors.

    weight_x, weight_y: length-2 rational vectors, Z-linearly independent
    (equivalently their determinant is nonzero), so distinct monomials get
    distinct values and the valuation is multiplicative.
    """

    def __init__(self, base_field, weight_x, weight_y):
        if not isinstance(base_field, (FiniteField, RationalField)):
            raise TypeError("base field must be a finite field or Q")
        wx = RationalVector(Fraction(c) for c in weight_x)
        wy = RationalVector(Fraction(c) for c in weight_y)
        if len(wx) != 2 or len(wy) != 2:
            raise ValueError("weights must be rational vectors of length 2")
        if wx[0] * wy[1] - wx[1] * wy[0] == 0:
            raise ValueError("weight vectors must be Z-linearly independent")
        self.base_field = base_field
        self.weight_x = wx
        self.weight_y = wy

    @property
    def residue_char(self) -> int:
        return self.base_field.characteristic

    def value_group(self) -> LexGroup:
        return LexGroup(2, [self.weight_x, self.weight_y])

    def monomial_value(self, a: int, b: int) -> RationalVector:
        return self.weight_x * a + self.weight_y * b

    def __repr__(self):
        return (f"MonomialValuation({self.base_field!r}, x -> {self.weight_x},"
                f" y -> {self.weight_y})")


class BinomialExtensionSpec:
    """The extension K(z)/K with z^n = c * x^a * y^b.

    n is a positive integer, a and b integers, c a nonzero constant of the
    base field; tameness (char k does not divide n) is checked when the
    extension is computed.
    """

    def __init__(self, n: int, a: int, b: int, c):
        if n < 1:
            raise ValueError("n must be a positive integer")
        self.n = int(n)
        self.a = int(a)
        self.b = int(b)
        self.c = c

    def __repr__(self):
        return (f"BinomialExtensionSpec(z^{self.n} = "
                f"{self.c} * x^{self.a} * y^{self.b})")


def mono_value(v: MonomialValuation, poly):
    """Lex-least weight of the monomials of poly; infinity for zero.

    poly is a mapping (a, b) -> coefficient or an iterable of
    (a, b, coefficient) triples; zero coefficients are ignored.
    """
    items = poly.items() if hasattr(poly, "items") else ((t[:2], t[2]) for t in poly)
    best = None
    k = v.base_field
    for (a, b), c in items:
        if not k.coerce(c):
            continue
        w = v.monomial_value(a, b)
        if best is None or lex_compare(w, best) < 0:
            best = w
    return best if best is not None else INFINITY


def _is_qth_power(field, c, q: int) -> bool:
    """Is c a q-th power in the field (q prime, or 4 for the special case)?"""
    if isinstance(field, RationalField):
        c = Fraction(c)
        if c == 0:
            return True
        if c < 0 and q % 2 == 0:
            return False
        return (_iroot(abs(c.numerator), q) is not None
                and _iroot(c.denominator, q) is not None)
    c = field.coerce(c)
    if not c:
        return True
    s = field.p ** field.n
    g = gcd(q, s - 1)
    return c ** ((s - 1) // g) == field.one


def _iroot(m: int, q: int):
    """Exact integer q-th root of m >= 0, or None."""
    if m in (0, 1):
        return m
    lo, hi = 1, 1 << ((m.bit_length() + q - 1) // q + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** q < m:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** q == m else None


def _binomial_irreducible(field, n: int, a: int, b: int, c) -> bool:
    """Classical criterion for z^n - c*x^a*y^b irreducible over k(x,y).

    z^n - u is irreducible iff u is not a q-th power in the field for any
    prime q dividing n, and, when 4 divides n, u is not of the form -4*s^4.
    For u = c*x^a*y^b being a q-th power forces q | a, q | b and c a q-th
    power in k.
    """
    seen = set()
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            seen.add(d)
            m //= d
        d += 1
    if m > 1:
        seen.add(m)
    for q in sorted(seen):
        if a % q == 0 and b % q == 0 and _is_qth_power(field, c, q):
            return False
    # the -4s^4 clause; vacuous in characteristic 2 where -4 = 0
    if (n % 4 == 0 and a % 4 == 0 and b % 4 == 0
            and field.characteristic != 2):
        minus_c_over_4 = -field.coerce(c) / field.coerce(4)
        if _is_qth_power(field, minus_c_over_4, 4):
            return False
    return True


def extend_binomial(v: MonomialValuation, spec: BinomialExtensionSpec) -> list:
    """All extensions of v to K(z), z^n = c*x^a*y^b, as ExtensionInvariants.

    Raises WildBinomialError when char k divides n and ValueError when the
    binomial is reducible or c is zero.
    """
    k = v.base_field
    n, a, b = spec.n, spec.a, spec.b
    c = k.coerce(spec.c)
    if not c:
        raise ValueError("c must be a nonzero constant")
    p = k.characteristic
    if p and n % p == 0:
        raise WildBinomialError(
            f"characteristic {p} divides n = {n}: wild binomials are not supported")
    if not _binomial_irreducible(k, n, a, b, c):
        raise ValueError(
            f"z^{n} - {c}*x^{a}*y^{b} is reducible over the base field")

    g = gcd(n, gcd(a, b))
    e = n // g
    w = v.monomial_value(a, b) * Fraction(1, n)
    gamma_nu = v.value_group()
    gamma_omega = LexGroup(2, [v.weight_x, v.weight_y, w])
    idx = subgroup_index(gamma_omega, gamma_nu)
    if idx != e:
        raise ValueError(
            f"inconsistent data: lattice index {idx} != n/gcd(n,a,b) = {e}")

    # z^e / x^(a/g) y^(b/g) is a unit whose (n/e)-th power is exactly c,
    # so the residual equation is T^(n/e) = c-bar with residue unit 1.
    resid = Poly(k, [-c] + [k.zero] * (n // e - 1) + [k.one])
    out = []
    for psi, mult in factor_over(k, resid):
        assert mult == 1, "tame residual polynomial must be separable"
        inv = ExtensionInvariants(
            gamma_nu=gamma_nu,
            gamma_omega=gamma_omega,
            residue_degree=psi.degree,
            local_degree=e * psi.degree,
            residue_char=p,
            total_degree=n,
            provenance=(f"binomial z^{n} = {c}*x^{a}*y^{b}: e = {e}, "
                        f"residual factor {psi}"))
        problems = validate(inv)
        if problems:
            raise ValueError(f"inconsistent data: {problems}")
        out.append(inv)
    total = sum(inv.local_degree for inv in out)
    if total != n:
        raise ValueError(
            f"inconsistent data: local degrees sum to {total}, expected {n}")
    return out
