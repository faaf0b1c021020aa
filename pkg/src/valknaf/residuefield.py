"""Residue-field services shared by the splitting engine.

The residue fields arising here are either finite fields or Q.  This module
gives them a uniform face: deterministic factorization of monic polynomials,
simple extensions by an irreducible (returning the new field, the embedding,
the chosen root and a decomposition map back onto the old field), and
F_p-linear decomposition helpers for finite fields.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .gf import GF, FiniteField, GFElement, embed
from .gf import factor as gf_factor
from .poly import QQ, Poly, RationalField


class UnsupportedResidueExtension(NotImplementedError):
    """Residue extension outside the supported scope (number fields)."""


def factor_over(field, f: Poly):
    """Monic irreducible factors of f with multiplicity, in a fixed order.

    Finite fields use the in-package deterministic Berlekamp routine;
    Q delegates to sympy.  Factors are monic, sorted by
    (degree, coefficient key).
    """
    if isinstance(field, FiniteField):
        _, pairs = gf_factor(f)
        return pairs
    if isinstance(field, RationalField):
        return _factor_rational(f)
    raise TypeError(f"no factorization over {field!r}")


def _factor_rational(f: Poly):
    x = sympy.symbols("x")
    expr = sum(sympy.Rational(c) * x ** i for i, c in enumerate(f.coeffs))
    _, fac = sympy.factor_list(sympy.Poly(expr, x))
    pairs = []
    for g, m in fac:
        coeffs = [Fraction(str(c)) for c in reversed(sympy.Poly(g, x).all_coeffs())]
        pairs.append((Poly(QQ, coeffs).monic(), int(m)))
    pairs.sort(key=lambda t: t[0].sort_key())
    return pairs


def linear_decomposer(field: FiniteField, basis):
    """Callable writing elements of a finite field over an F_p basis.

    basis: list of n = field.n elements that are F_p-linearly independent.
    Returns elem -> list of ints (mod p coefficients).
    """
    p = field.p
    n = field.n
    if len(basis) != n:
        raise ValueError("basis has wrong size")
    # invert the basis matrix over F_p (columns = coordinates of basis elems)
    aug = []
    for i in range(n):
        row = [basis[j].coeffs[i] for j in range(n)]
        row += [1 if k == i else 0 for k in range(n)]
        aug.append(row)
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if aug[i][c] % p), None)
        if piv is None:
            raise ValueError("basis is linearly dependent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [a * inv % p for a in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] % p:
                fct = aug[i][c]
                aug[i] = [(a - fct * b) % p for a, b in zip(aug[i], aug[r])]
        r += 1
    inv_rows = [row[n:] for row in aug]

    def decompose(x: GFElement):
        vec = list(x.coeffs)
        return [sum(inv_rows[i][k] * vec[k] for k in range(n)) % p
                for i in range(n)]

    return decompose


class ResidueExtension:
    """A simple extension old -> old[z]/(psi) of a residue field.

    Attributes: new_field, embed_fn (old elem -> new elem), root (the chosen
    root of psi in new_field), decompose (new elem -> list of old-field
    coefficients over the basis root^s, s < deg psi).
    """

    def __init__(self, new_field, embed_fn, root, decompose):
        self.new_field = new_field
        self.embed = embed_fn
        self.root = root
        self.decompose = decompose


def extend_residue(field, psi: Poly) -> ResidueExtension:
    """Extend a residue field by a monic irreducible polynomial psi.

    Deterministic: for finite fields the new field is the canonical
    GF(p^(n*d)) and the root is the first one in element order.  Over Q only
    degree-1 extensions are supported (the residue fields of the shipped
    base valuations with characteristic 0 are Q itself).
    """
    d = psi.degree
    if d < 1:
        raise ValueError("extension polynomial must have degree >= 1")
    if d == 1:
        root = -psi[0]
        return ResidueExtension(field, lambda x: x, root, lambda x: [x])
    if isinstance(field, RationalField):
        raise UnsupportedResidueExtension(
            "residual factor of degree > 1 over the rational residue field; "
            "number-field residue arithmetic is out of scope")
    if not isinstance(field, FiniteField):
        raise TypeError(f"cannot extend {field!r}")
    big = GF(field.p, field.n * d)
    embed_fn = embed(field, big)
    root = None
    for cand in big.elements():
        acc = big.zero
        for c in reversed(psi.coeffs):
            acc = acc * cand + embed_fn(c)
        if not acc:
            root = cand
            break
    if root is None:
        raise RuntimeError("irreducible polynomial has no root upstairs")
    # basis embed(y^u) * root^s of big over F_p
    basis = []
    pow_root = big.one
    gens = [field.generator() ** u for u in range(field.n)]
    for _ in range(d):
        for g in gens:
            basis.append(embed_fn(g) * pow_root)
        pow_root = pow_root * root
    fp_dec = linear_decomposer(big, basis)

    def decompose(x: GFElement):
        flat = fp_dec(x)
        out = []
        for s in range(d):
            coeffs = flat[s * field.n:(s + 1) * field.n]
            out.append(field.element(coeffs))
        return out

    return ResidueExtension(big, embed_fn, root, decompose)
