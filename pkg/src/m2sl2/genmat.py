"""Generic 2x2 matrices and the exact identity oracle.

Even letters evaluate to generic diagonal trace-zero matrices, odd letters to
generic off-diagonal ones:

    Y_i = [[alpha_i, 0], [0, -alpha_i]]      Z_i = [[0, beta_i], [gamma_i, 0]]

over the integer polynomial ring in the alpha/beta/gamma families.  The pair
(diagonal subalgebra, off-diagonal part) is relatively free for the graded
weak identities in play, so a polynomial vanishes under every graded
substitution by (M2, sl2) pairs exactly when its generic evaluation is the
zero matrix.  Everything is exact integer polynomial arithmetic; there is no
tolerance anywhere.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import ResourceBoundError
from .freealg import CanonicalMonomial, QPoly, enumerate_basis
from .intlinalg import IntRowLattice
from .ring import MultiPoly, alpha, beta, gamma

_ZERO = MultiPoly.zero()


@dataclass(frozen=True)
class GMatrix2:
    e11: MultiPoly
    e12: MultiPoly
    e21: MultiPoly
    e22: MultiPoly

    def __add__(self, other: "GMatrix2") -> "GMatrix2":
        return GMatrix2(
            self.e11 + other.e11,
            self.e12 + other.e12,
            self.e21 + other.e21,
            self.e22 + other.e22,
        )

    def __sub__(self, other: "GMatrix2") -> "GMatrix2":
        return GMatrix2(
            self.e11 - other.e11,
            self.e12 - other.e12,
            self.e21 - other.e21,
            self.e22 - other.e22,
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return GMatrix2(self.e11 * other, self.e12 * other, self.e21 * other, self.e22 * other)
        if not isinstance(other, GMatrix2):
            return NotImplemented
        return GMatrix2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return (
            self.e11.is_zero()
            and self.e12.is_zero()
            and self.e21.is_zero()
            and self.e22.is_zero()
        )

    def entries(self) -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
        return (self.e11, self.e12, self.e21, self.e22)


def zero_matrix() -> GMatrix2:
    return GMatrix2(_ZERO, _ZERO, _ZERO, _ZERO)


def identity_matrix() -> GMatrix2:
    one = MultiPoly.one()
    return GMatrix2(one, _ZERO, _ZERO, one)


@lru_cache(maxsize=None)
def generic_y(i: int) -> GMatrix2:
    a = alpha(i)
    return GMatrix2(a, _ZERO, _ZERO, -a)


@lru_cache(maxsize=None)
def generic_z(i: int) -> GMatrix2:
    return GMatrix2(_ZERO, beta(i), gamma(i), _ZERO)


def eval_word(w) -> GMatrix2:
    acc = identity_matrix()
    for fam, idx in w:
        acc = acc * (generic_y(idx) if fam == "y" else generic_z(idx))
    return acc


def evaluate(f) -> GMatrix2:
    """Evaluate a polynomial at the generic matrices.

    Accepts a QPoly, a single CanonicalMonomial, or an iterable of
    (coeff, word) pairs; the last form evaluates raw words with no canonical
    reduction, which is what makes cross-checks against the rewriting honest.
    """
    if isinstance(f, CanonicalMonomial):
        return eval_word(f.word())
    if isinstance(f, QPoly):
        pairs = ((c, m.word()) for m, c in f.terms.items())
    else:
        pairs = ((c, tuple(w)) for c, w in f)
    acc = zero_matrix()
    for coeff, w in pairs:
        if coeff:
            acc = acc + eval_word(w) * coeff
    return acc


def is_graded_weak_identity(f) -> bool:
    """True iff f vanishes identically on the graded pair; exact."""
    return evaluate(f).is_zero()


def monomial_row(m: CanonicalMonomial) -> dict:
    """The evaluation of m flattened to a sparse integer row.

    Columns are (entry position, commutative-term key) pairs; entry positions
    run e11, e12, e21, e22.  Each basis monomial hits exactly two entries with
    a single +/-1 term each, which is what makes the independence matrix easy
    to rank exactly.
    """
    row: dict = {}
    for pos, poly in enumerate(evaluate(m).entries()):
        for term, coeff in poly.terms.items():
            row[(pos, term)] = coeff
    return row


@dataclass(frozen=True)
class IndependenceReport:
    degree: int
    indices: int
    monomials: int
    rank: int

    @property
    def full_rank(self) -> bool:
        return self.rank == self.monomials

    def to_obj(self) -> dict:
        return {
            "degree": self.degree,
            "indices": self.indices,
            "monomials": self.monomials,
            "rank": self.rank,
        }


def independence_report(max_degree: int = 6, max_index: int = 3,
                        max_monomials: int = 200_000) -> IndependenceReport:
    """Rank of the evaluation matrix of all basis monomials within the caps.

    Full rank certifies that the enumerated monomials evaluate to Z-linearly
    independent matrices, i.e. that no nonzero integer combination of them is
    a graded weak identity.
    """
    lattice = IntRowLattice()
    count = 0
    for m in enumerate_basis(max_degree, max_index):
        count += 1
        if count > max_monomials:
            raise ResourceBoundError(
                f"enumeration exceeded {max_monomials} monomials; tighten the caps"
            )
        lattice.add(monomial_row(m))
    return IndependenceReport(max_degree, max_index, count, lattice.rank)
