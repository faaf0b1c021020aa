"""Exact ramification invariants of valuation extensions.

Subpackages by theme:

- `ordgroup`: finitely generated subgroups of Q^r under the lex order.
- `raminv`: ramification invariants (e, f, eps, d) and the criterion
  deciding when a valuation extension is of essentially finite type.
- `localsplit`: extensions of a rank-1 discrete valuation along a monic
  squarefree polynomial, via Newton polygons and residual polynomials.
- `monoval`: rank-2 monomial valuations on k(x, y) and their tame binomial
  extensions.
- `cli` / `problemfile` / `fixtures`: the command-line front end, the
  problem-file format, and the named example catalog.
"""

from .fixtures import FIXTURES, Fixture, fixture
from .localsplit import (BaseValuation, LocalFactor, NewtonPolygonSegment,
                         UnresolvedBranchError, newton_polygon,
                         residual_polynomial, split_extensions,
                         to_extension_invariants, value_of)
from .monoval import (BinomialExtensionSpec, MonomialValuation,
                      WildBinomialError, extend_binomial, mono_value)
from .ordgroup import (LexGroup, RationalVector, coset_representatives,
                       initial_index, initial_set, lex_compare,
                       subgroup_index)
from .problemfile import (ProblemFile, ProblemFileError, parse_problem,
                          serialize)
from .raminv import (ExtensionInvariants, KnafVerdict, defect,
                     frobenius_defect, knaf_decide, ramification_index,
                     validate)

__all__ = [
    "LexGroup", "RationalVector", "coset_representatives", "initial_index",
    "initial_set", "lex_compare", "subgroup_index",
    "ExtensionInvariants", "KnafVerdict", "defect", "frobenius_defect",
    "knaf_decide", "ramification_index", "validate",
    "BaseValuation", "LocalFactor", "NewtonPolygonSegment",
    "UnresolvedBranchError", "newton_polygon", "residual_polynomial",
    "split_extensions", "to_extension_invariants", "value_of",
    "BinomialExtensionSpec", "MonomialValuation", "WildBinomialError",
    "extend_binomial", "mono_value",
    "ProblemFile", "ProblemFileError", "parse_problem", "serialize",
    "FIXTURES", "Fixture", "fixture",
]
