"""The free 2-graded algebra on even letters y_i and odd letters z_i, taken
modulo the rewriting rules

    y_i y_j -> y_j y_i            (even letters commute)
    z_i y_j -> - y_j z_i          (odd past even flips the sign)
    z_a z_b z_c -> z_c z_b z_a    (outer letters of any length-3 window of
                                   odd letters swap freely)

Every word is congruent to +/- one canonical monomial

    y_1^e1 y_2^e2 ... z_{c_1} z_{d_1} z_{c_2} z_{d_2} ...

where the odd letters in odd positions of the z-block (the c-slots) are sorted
ascending, and so are the ones in even positions (the d-slots).  The length-3
rule permutes letters two apart, so each slot class can be sorted without any
sign; only moving z past y costs a sign.

The canonical monomial pins down a basis of the quotient: polynomials are
integer combinations of canonical monomials and arithmetic always returns
canonical representations.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .errors import GradeMismatchError

Letter = tuple[str, int]  # ("y" | "z", index >= 1)
Word = tuple[Letter, ...]


def y(i: int) -> Letter:
    if i < 1:
        raise ValueError("letter index must be >= 1")
    return ("y", i)


def z(i: int) -> Letter:
    if i < 1:
        raise ValueError("letter index must be >= 1")
    return ("z", i)


def word(*letters: Letter) -> Word:
    return tuple(letters)


def _trim(seq) -> tuple[int, ...]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


@dataclass(frozen=True)
class CanonicalMonomial:
    """A basis monomial: y-exponents plus the sorted c- and d-slot indices.

    yexp[i-1] is the exponent of y_i (trailing zeros trimmed).  cseq and dseq
    list the odd-letter indices sitting in the odd resp. even positions of the
    z-block, each sorted ascending.  The z-block interleaves them
    c1 d1 c2 d2 ..., so len(dseq) is len(cseq) or len(cseq) - 1, and both are
    empty together.
    """

    yexp: tuple[int, ...] = ()
    cseq: tuple[int, ...] = ()
    dseq: tuple[int, ...] = ()

    def __post_init__(self):
        if self.yexp and self.yexp[-1] == 0:
            raise ValueError("yexp must have trailing zeros trimmed")
        if any(e < 0 for e in self.yexp):
            raise ValueError("negative exponent")
        for seq in (self.cseq, self.dseq):
            if any(i < 1 for i in seq):
                raise ValueError("z index must be >= 1")
            if any(seq[k] > seq[k + 1] for k in range(len(seq) - 1)):
                raise ValueError("slot indices must be sorted ascending")
        if self.cseq:
            if len(self.dseq) not in (len(self.cseq), len(self.cseq) - 1):
                raise ValueError("d-slot count must be c-slot count or one less")
        elif self.dseq:
            raise ValueError("d-slots cannot exist without c-slots")

    @classmethod
    def make(cls, yexp=(), cseq=(), dseq=()) -> "CanonicalMonomial":
        return cls(_trim(yexp), tuple(cseq), tuple(dseq))

    @property
    def degree(self) -> int:
        return sum(self.yexp) + len(self.cseq) + len(self.dseq)

    @property
    def grade(self) -> int:
        return (len(self.cseq) + len(self.dseq)) % 2

    @property
    def is_pure_y(self) -> bool:
        return not self.cseq

    @property
    def max_index(self) -> int:
        m = len(self.yexp)
        if self.cseq:
            m = max(m, self.cseq[-1])
        if self.dseq:
            m = max(m, self.dseq[-1])
        return m

    def word(self) -> Word:
        letters: list[Letter] = []
        for i, e in enumerate(self.yexp, start=1):
            letters.extend([("y", i)] * e)
        for k in range(len(self.cseq)):
            letters.append(("z", self.cseq[k]))
            if k < len(self.dseq):
                letters.append(("z", self.dseq[k]))
        return tuple(letters)

    def __repr__(self):
        return f"CanonicalMonomial({self.yexp}, {self.cseq}, {self.dseq})"


ONE = CanonicalMonomial()


def reduce_word(w: Word) -> tuple[int, CanonicalMonomial]:
    """Canonical image of a word: (sign, monomial).

    The sign is (-1)^t where t counts pairs (i, j), i < j, with w[i] odd and
    w[j] even: commuting the even letters to the front crosses exactly those
    pairs.  The surviving odd letters keep their slot parity and each slot
    class sorts freely.
    """
    t = 0
    seen_z = 0
    ycount: dict[int, int] = {}
    zs: list[int] = []
    for fam, idx in w:
        if fam == "z":
            seen_z += 1
            zs.append(idx)
        elif fam == "y":
            t += seen_z
            ycount[idx] = ycount.get(idx, 0) + 1
        else:
            raise ValueError(f"unknown letter family {fam!r}")
    yexp = [0] * (max(ycount) if ycount else 0)
    for idx, e in ycount.items():
        yexp[idx - 1] = e
    sign = -1 if t % 2 else 1
    return sign, CanonicalMonomial(_trim(yexp), tuple(sorted(zs[0::2])), tuple(sorted(zs[1::2])))


class QPoly:
    """An integer combination of canonical monomials.

    Treat instances as immutable.  The term dict maps CanonicalMonomial to a
    nonzero int, so equality is plain dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[CanonicalMonomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls({ONE: 1})

    @classmethod
    def monomial(cls, m: CanonicalMonomial, coeff: int = 1) -> "QPoly":
        return cls({m: coeff})

    @classmethod
    def letter(cls, letter: Letter) -> "QPoly":
        sign, m = reduce_word((letter,))
        return cls({m: sign})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            other = QPoly({ONE: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __neg__(self) -> "QPoly":
        return QPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            n = acc.get(m, 0) + c
            if n:
                acc[m] = n
            else:
                acc.pop(m, None)
        return QPoly(acc)

    def __sub__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return QPoly({m: c * other for m, c in self.terms.items()}) if other else QPoly()
        if not isinstance(other, QPoly):
            return NotImplemented
        acc: dict[CanonicalMonomial, int] = {}
        for m1, c1 in self.terms.items():
            w1 = m1.word()
            for m2, c2 in other.terms.items():
                sign, m = reduce_word(w1 + m2.word())
                n = acc.get(m, 0) + sign * c1 * c2
                if n:
                    acc[m] = n
                else:
                    acc.pop(m, None)
        return QPoly(acc)

    def __rmul__(self, other) -> "QPoly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    @property
    def degree(self) -> int:
        """Max degree over the support; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    @property
    def max_index(self) -> int:
        return max((m.max_index for m in self.terms), default=0)

    def __repr__(self):
        return f"QPoly({self.terms!r})"


def normalize(weighted_words) -> QPoly:
    """Fold a list of (coeff, word) pairs into a canonical polynomial."""
    acc: dict[CanonicalMonomial, int] = {}
    for coeff, w in weighted_words:
        if not coeff:
            continue
        sign, m = reduce_word(tuple(w))
        n = acc.get(m, 0) + sign * coeff
        if n:
            acc[m] = n
        else:
            acc.pop(m, None)
    return QPoly(acc)


def q_mul(f: QPoly, g: QPoly) -> QPoly:
    return f * g


def commutator(f: QPoly, g: QPoly) -> QPoly:
    return f * g - g * f


# --- Lie expressions over the letters -------------------------------------

@dataclass(frozen=True)
class LieVar:
    letter: Letter

    @property
    def grade(self) -> int:
        return 1 if self.letter[0] == "z" else 0


@dataclass(frozen=True)
class LieBracket:
    left: "LieVar | LieBracket"
    right: "LieVar | LieBracket"

    @property
    def grade(self) -> int:
        return (self.left.grade + self.right.grade) % 2


LieExpr = LieVar | LieBracket


def lie_to_words(e: LieExpr) -> list[tuple[int, Word]]:
    """Expand brackets in the free algebra, with no canonical reduction."""
    if isinstance(e, LieVar):
        return [(1, (e.letter,))]
    left = lie_to_words(e.left)
    right = lie_to_words(e.right)
    out: list[tuple[int, Word]] = []
    for cl, wl in left:
        for cr, wr in right:
            out.append((cl * cr, wl + wr))
    for cr, wr in right:
        for cl, wl in left:
            out.append((-cl * cr, wr + wl))
    return out


def lie_to_poly(e: LieExpr) -> QPoly:
    return normalize(lie_to_words(e))


def subst_words(weighted_words, sigma: dict[Letter, LieExpr]) -> list[tuple[int, Word]]:
    """Substitute letters by Lie expressions, expanding in the free algebra.

    Every image must match the grade of the letter it replaces; letters
    outside sigma stay themselves.  The result is a raw weighted word list
    (no canonical reduction), suitable for direct matrix evaluation.
    """
    for letter, image in sigma.items():
        want = 1 if letter[0] == "z" else 0
        if image.grade != want:
            raise GradeMismatchError(
                f"{letter[0]}{letter[1]} needs a grade-{want} image, got grade {image.grade}"
            )
    out: list[tuple[int, Word]] = []
    for coeff, w in weighted_words:
        parts: list[tuple[int, Word]] = [(coeff, ())]
        for letter in w:
            image = sigma.get(letter)
            expansion = [(1, (letter,))] if image is None else lie_to_words(image)
            parts = [(c0 * c1, w0 + w1) for c0, w0 in parts for c1, w1 in expansion]
        out.extend(parts)
    return out


def subst(weighted_words, sigma: dict[Letter, LieExpr]) -> QPoly:
    return normalize(subst_words(weighted_words, sigma))


def identity_generators() -> list[list[tuple[int, Word]]]:
    """The three defining relations as raw weighted word lists:
    [y1, y2],  z1 z2 z3 - z3 z2 z1,  y1 z1 + z1 y1.
    """
    y1, y2 = ("y", 1), ("y", 2)
    z1, z2, z3 = ("z", 1), ("z", 2), ("z", 3)
    return [
        [(1, (y1, y2)), (-1, (y2, y1))],
        [(1, (z1, z2, z3)), (-1, (z3, z2, z1))],
        [(1, (y1, z1)), (1, (z1, y1))],
    ]


# --- serialization ----------------------------------------------------------

def monomial_to_obj(m: CanonicalMonomial) -> dict:
    return {"y": list(m.yexp), "c": list(m.cseq), "d": list(m.dseq)}


def monomial_from_obj(obj: dict) -> CanonicalMonomial:
    return CanonicalMonomial.make(obj.get("y", ()), obj.get("c", ()), obj.get("d", ()))


def poly_to_obj(f: QPoly, sort_key=None) -> list:
    """Polynomial as a list of {"coeff": str, "m": monomial} records.

    Coefficients are serialized as strings so arbitrary-precision values
    survive any JSON consumer.  sort_key fixes the term order; the default
    sorts on the raw component tuples, which is deterministic but arbitrary.
    """
    if sort_key is None:
        sort_key = lambda m: (m.yexp, m.cseq, m.dseq)
    items = sorted(f.terms.items(), key=lambda mc: sort_key(mc[0]))
    return [{"coeff": str(c), "m": monomial_to_obj(m)} for m, c in items]


def poly_from_obj(obj) -> QPoly:
    acc: dict[CanonicalMonomial, int] = {}
    for rec in obj:
        m = monomial_from_obj(rec["m"])
        acc[m] = acc.get(m, 0) + int(rec["coeff"])
    return QPoly(acc)


# --- enumeration ------------------------------------------------------------

def _exponent_vectors(slots: int, total: int):
    """All tuples of `slots` nonnegative ints summing to `total`."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _exponent_vectors(slots - 1, total - first):
            yield (first,) + rest


def enumerate_basis(max_degree: int, max_index: int):
    """All canonical monomials with degree <= max_degree and every letter
    index <= max_index, in a fixed degree-graded order."""
    if max_degree < 0 or max_index < 1:
        raise ValueError("need max_degree >= 0 and max_index >= 1")
    idx = range(1, max_index + 1)
    for d in range(max_degree + 1):
        for ydeg in range(d, -1, -1):
            zlen = d - ydeg
            clen = (zlen + 1) // 2
            dlen = zlen // 2
            for yv in _exponent_vectors(max_index, ydeg):
                for cs in combinations_with_replacement(idx, clen):
                    for ds in combinations_with_replacement(idx, dlen):
                        yield CanonicalMonomial(_trim(yv), cs, ds)
