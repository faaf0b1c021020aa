"""Library tour: value groups, invariants, and the finite-type verdict.

Walks the same ground as the fixture catalog, but through the Python API:
lex-ordered value groups and their two indices, the rank-1 splitting engine
on desk-checked polynomials, the rank-2 monomial engine on binomials, and
a declared defect example.  Everything is exact; run it with python3.
"""

from fractions import Fraction

from valknaf import (BaseValuation, BinomialExtensionSpec, ExtensionInvariants,
                     LexGroup, MonomialValuation, extend_binomial,
                     frobenius_defect, initial_index, knaf_decide,
                     split_extensions, subgroup_index, to_extension_invariants)
from valknaf.gf import GF
from valknaf.poly import Poly


def show(tag, inv):
    k = knaf_decide(inv)
    print(f"  {tag}: e={k.e} f={k.f} eps={k.eps} d={k.d} -> "
          f"{'EFT' if k.eft else 'not EFT'}")


print("== the two indices of a lex group extension ==")
z2 = LexGroup(2, [(1, 0), (0, 1)])
half_x = LexGroup(2, [(Fraction(1, 2), 0), (0, 1)])
half_y = LexGroup(2, [(1, 0), (0, Fraction(1, 2))])
print(f"  [{half_x!r} : Z^2] = {subgroup_index(half_x, z2)}, "
      f"initial index {initial_index(half_x, z2)}")
print(f"  [{half_y!r} : Z^2] = {subgroup_index(half_y, z2)}, "
      f"initial index {initial_index(half_y, z2)}")
print("  same index 2, but only the second group keeps its new element")
print("  below every positive old one; that asymmetry is the whole story.")
print()

print("== rank-1 engine: extensions of v_p along a polynomial ==")
for p, coeffs, name in [(2, [-2, 0, 1], "x^2 - 2 at v_2"),
                        (5, [1, 0, 1], "x^2 + 1 at v_5"),
                        (3, [1, 0, 1], "x^2 + 1 at v_3"),
                        (2, [4, 0, 8, 0, 1], "x^4 + 8x^2 + 4 at v_2")]:
    v = BaseValuation.padic(p)
    g = Poly(v.field, coeffs)
    print(f"  {name}:")
    for lf in split_extensions(v, g):
        show(f"  degree {lf.degree}", to_extension_invariants(v, lf, g.degree))
print()

print("== the same engine over F_3(t) ==")
vt = BaseValuation.pi_adic(GF(3), [0, 1])
g = Poly(vt.field, [-vt.field.t, 0, 1])
for lf in split_extensions(vt, g):
    show("x^2 - t at v_t", to_extension_invariants(vt, lf, g.degree))
print()

print("== rank-2 monomial valuations: where eps < e appears ==")
v = MonomialValuation(GF(5), (1, 0), (0, 1))
for n, a, b, label in [(2, 1, 0, "z^2 = x"), (2, 0, 1, "z^2 = y"),
                       (2, 1, 1, "z^2 = xy"), (6, 2, 3, "z^6 = x^2 y^3")]:
    for inv in extend_binomial(v, BinomialExtensionSpec(n, a, b, 1)):
        show(label, inv)
print("  z^2 = y lands in the lex-smallest level, so eps = e; the others")
print("  create value below nothing and fail the initial-index condition.")
print()

print("== defect: the other way to fail ==")
z = LexGroup(1, [(1,)])
inv = ExtensionInvariants(gamma_nu=z, gamma_omega=z, residue_degree=1,
                          local_degree=2, residue_char=2, total_degree=2)
show("defect-2 extension", inv)
print(f"  frobenius_defect(p, Z, 1) for p=2,3,5: "
      f"{[frobenius_defect(p, LexGroup(1, [(1,)]), 1, p) for p in (2, 3, 5)]}"
      f" (Abhyankar, defectless)")
print(f"  declared p-divisible group: "
      f"{[frobenius_defect(p, 1, 1, p) for p in (2, 3, 5)]} (defect = p)")
