"""Leading-term reduction against the embedding order.

The linear well-order picks leading terms; the embedding order decides which
generators may reduce a given leading monomial.  Whenever lm(g) <=' M with
witness phi, the monomial M factors exactly as

    M  =  N . phi(g's leading monomial) . P         (sign +1)

with N pure-y on the left and P a pure-z word on the right, so g lifts to a
reducer with leading term exactly M and unchanged leading coefficient.
Coefficients live in Z, so a reduction step is Euclidean division of the
leading coefficient by the gcd of the usable reducers' leading coefficients;
a nonzero residue freezes into the remainder and reduction continues on the
strictly smaller tail.  Strict descent in a well-order terminates.
"""

from dataclasses import dataclass

from .errors import NotEmbeddableError, ResourceBoundError, ZeroPolynomialError
from .freealg import (
    CanonicalMonomial,
    QPoly,
    Word,
    monomial_to_obj,
    normalize,
    _trim,
)
from .intlinalg import IntRowLattice, bezout
from .orders import (
    MonotoneInjection,
    apply_renaming,
    pwo_leq,
    push_profile,
    rename_monomial,
    total_key,
    xi,
)


@dataclass(frozen=True)
class LeadingData:
    lc: int
    lm: CanonicalMonomial

    def to_obj(self) -> dict:
        return {"coeff": str(self.lc), "m": monomial_to_obj(self.lm)}


def leading(f: QPoly) -> LeadingData:
    """Leading coefficient and monomial under the linear well-order."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    lm = max(f.terms, key=total_key)
    return LeadingData(f.terms[lm], lm)


@dataclass(frozen=True)
class ReducerTriple:
    """A factorization M_big = N . phi(M) . P with sign +1.

    N is pure-y; P is the pure-z word (as an index tuple) whose letters fill
    the slot classes left short after pushing M along phi.
    """

    phi: MonotoneInjection
    n_part: CanonicalMonomial
    p_word: tuple[int, ...]

    def to_obj(self) -> dict:
        return {
            "phi": self.phi.to_obj(),
            "N": monomial_to_obj(self.n_part),
            "P": list(self.p_word),
        }


def _seq_sub(v, pushed) -> tuple[int, ...]:
    length = max(len(v), len(pushed))
    out = []
    for k in range(length):
        a = v[k] if k < len(v) else 0
        b = pushed[k] if k < len(pushed) else 0
        if a < b:
            raise NotEmbeddableError("pushed profile exceeds the target")
        out.append(a - b)
    return _trim(out)


def _spread_counts(u) -> list[int]:
    out: list[int] = []
    for i, n in enumerate(u, start=1):
        out.extend([i] * n)
    return out


def factorize_embedding(m: CanonicalMonomial, target: CanonicalMonomial) -> ReducerTriple:
    """Factor target = N . phi(m) . P, given m <=' target.

    The y-exponents of N are whatever the push of m along phi leaves missing
    from the target; likewise the extra c- and d-slot letters make up P,
    interleaved so that they land in the right slot classes after the z-block
    of phi(m).  No sign appears: N adds no even letter to the right of an odd
    one, and P only appends.
    """
    phi = pwo_leq(m, target)
    if phi is None:
        raise NotEmbeddableError("source monomial does not embed into the target")
    pm, pt = xi(m), xi(target)
    pushed = push_profile(pm, phi, "both")
    l1 = _seq_sub(pt.u1, pushed.u1)
    n_part = CanonicalMonomial(l1)
    if pm.variant == 1:
        return ReducerTriple(phi, n_part, ())
    extra_c = _spread_counts(_seq_sub(pt.u2, pushed.u2))
    extra_d = _spread_counts(_seq_sub(pt.u3, pushed.u3))
    zlen = len(m.cseq) + len(m.dseq)
    if zlen % 2 == 0:
        first, second = extra_c, extra_d
    else:
        # the z-block of phi(m) ends on a c-slot, so P starts with a d-letter
        first, second = extra_d, extra_c
    if len(first) - len(second) not in (0, 1):
        raise NotEmbeddableError("slot deficits cannot interleave into a word")
    p_word: list[int] = []
    for k in range(len(first)):
        p_word.append(first[k])
        if k < len(second):
            p_word.append(second[k])
    return ReducerTriple(phi, n_part, tuple(p_word))


def reducer_word(triple: ReducerTriple, m: CanonicalMonomial) -> Word:
    """The literal word N . phi(m) . P, before any reduction."""
    renamed = rename_monomial(m, triple.phi, "both")
    return triple.n_part.word() + renamed.word() + tuple(("z", i) for i in triple.p_word)


def apply_reducer(triple: ReducerTriple, f: QPoly) -> QPoly:
    """N . phi(f) . P as a canonical polynomial."""
    out = QPoly.monomial(triple.n_part) * apply_renaming(f, triple.phi, "both")
    if triple.p_word:
        out = out * normalize([(1, tuple(("z", i) for i in triple.p_word))])
    return out


def lift_reducer(f: QPoly, target: CanonicalMonomial) -> QPoly:
    """Lift f so its leading monomial becomes `target` exactly.

    Requires lm(f) <=' target.  Renaming preserves the strict order between
    monomials and the outer factors move every non-leading term strictly
    below the lifted leading term, so lm of the result is the target and the
    leading coefficient is lc(f).
    """
    ld = leading(f)
    triple = factorize_embedding(ld.lm, target)
    return apply_reducer(triple, f)


def reduce_by(f: QPoly, generators, trace: list | None = None) -> QPoly:
    """Remainder of f under the generator family.

    At each step the usable generators are those whose leading monomial
    embeds into lm(f).  Their lifted combination realizes the gcd d of their
    leading coefficients at lm(f); Euclidean division lc(f) = q*d + r
    subtracts q times that combination and freezes any nonzero residue r into
    the remainder.  Each step strictly lowers the working leading monomial,
    and the well-order guarantees termination.

    When `trace` is a list, subtraction records
    {"against", "beta", "q", "phi", "N", "P"} and freeze records
    {"frozen": {"coeff", "m"}} are appended in execution order.
    """
    gens = list(generators)
    lds = []
    for g in gens:
        if g.is_zero():
            raise ZeroPolynomialError("generators must be nonzero")
        lds.append(leading(g))
    remainder = QPoly.zero()
    work = f
    while not work.is_zero():
        ld = leading(work)
        usable = [k for k in range(len(gens)) if pwo_leq(lds[k].lm, ld.lm) is not None]
        if usable:
            d, betas = bezout([lds[k].lc for k in usable])
            q, r = divmod(ld.lc, d)
            if q:
                subtrahend = QPoly.zero()
                for k, beta in zip(usable, betas):
                    if not beta:
                        continue
                    triple = factorize_embedding(lds[k].lm, ld.lm)
                    subtrahend = subtrahend + apply_reducer(triple, gens[k]) * beta
                    if trace is not None:
                        rec = {"against": k, "beta": str(beta), "q": str(q)}
                        rec.update(triple.to_obj())
                        trace.append(rec)
                work = work - subtrahend * q
        else:
            r = ld.lc
        if r:
            frozen = QPoly.monomial(ld.lm, r)
            remainder = remainder + frozen
            work = work - frozen
            if trace is not None:
                trace.append({"frozen": {"coeff": str(r), "m": monomial_to_obj(ld.lm)}})
    return remainder


@dataclass
class ChainReport:
    adjoined: list  # (step, LeadingData) for each generator the chain gained
    steps: int
    truncated: bool
    generators: list

    @property
    def stabilized_at(self) -> int | None:
        if self.truncated:
            return None
        return self.adjoined[-1][0] if self.adjoined else 0

    def to_obj(self) -> list:
        out = [{"step": step, "lt": ld.to_obj()} for step, ld in self.adjoined]
        tail: dict = {"stabilized_at": self.stabilized_at}
        if self.truncated:
            tail["truncated"] = True
        out.append(tail)
        return out


def chain_demo(stream, budget: int = 1_000_000) -> ChainReport:
    """Feed polynomials; adjoin every nonzero remainder to the generator list.

    Reports which steps grew the chain.  On a fully consumed stream the last
    growth step is where the chain stabilized; when the budget truncates the
    stream no stabilization claim is made.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    gens: list[QPoly] = []
    adjoined: list[tuple[int, LeadingData]] = []
    steps = 0
    truncated = False
    for fpoly in stream:
        if steps >= budget:
            truncated = True
            break
        steps += 1
        r = reduce_by(fpoly, gens)
        if not r.is_zero():
            gens.append(r)
            adjoined.append((steps, leading(r)))
    return ChainReport(adjoined, steps, truncated, gens)


def _y_monomials_upto(max_degree: int, max_index: int):
    """Pure-y monomials with degree <= max_degree, indices <= max_index."""
    from itertools import combinations_with_replacement

    for d in range(max_degree + 1):
        for combo in combinations_with_replacement(range(1, max_index + 1), d):
            yexp = [0] * max_index
            for i in combo:
                yexp[i - 1] += 1
            yield CanonicalMonomial(_trim(yexp))


def membership_bounded(f: QPoly, generators, max_degree: int,
                       max_index: int | None = None,
                       max_candidates: int = 100_000) -> bool:
    """Truncated membership test for the one-sided closure of the generators.

    Enumerates products N . phi(g) . P over all monotone injections phi into
    1..cap, pure-y left factors N, and pure-z right words P, keeping products
    whose degree stays within max_degree, then asks whether f lies in the
    Z-row-span of their coefficient vectors.  A True answer is a certificate;
    a False answer only says the truncated family misses f, because the cap
    and the degree bound cut the enumeration off.  This is a bounded check,
    not a decision procedure.
    """
    from itertools import combinations, combinations_with_replacement

    if f.is_zero():
        return True
    if f.degree > max_degree:
        raise ValueError("f exceeds the degree bound")
    gens = [g for g in generators if not g.is_zero()]
    if max_index is None:
        src_max = max([f.max_index] + [g.max_index for g in gens], default=1)
        max_index = max(1, src_max) + max_degree
    cap = max_index

    def vec(poly: QPoly) -> dict:
        return {(m.yexp, m.cseq, m.dseq): c for m, c in poly.terms.items()}

    lattice = IntRowLattice()
    count = 0
    for g in gens:
        gdeg_min = min(m.degree for m in g.terms)
        support = set()
        for m in g.terms:
            support.update(i for i, e in enumerate(m.yexp, start=1) if e)
            support.update(m.cseq)
            support.update(m.dseq)
        src = sorted(support)
        for targets in combinations(range(1, cap + 1), len(src)):
            phi = MonotoneInjection(tuple(zip(src, targets)))
            gp = apply_renaming(g, phi, "both")
            if gp.degree > max_degree:
                continue
            room = max_degree - gdeg_min
            for n_mon in _y_monomials_upto(room, cap):
                room_p = room - n_mon.degree
                left = QPoly.monomial(n_mon) * gp
                for olen in range(0, room_p + 1):
                    elens = [e for e in (olen - 1, olen) if 0 <= e <= room_p - olen]
                    for elen in elens:
                        for och in combinations_with_replacement(range(1, cap + 1), olen):
                            for ech in combinations_with_replacement(range(1, cap + 1), elen):
                                p_word: list[int] = []
                                for k in range(olen):
                                    p_word.append(och[k])
                                    if k < elen:
                                        p_word.append(ech[k])
                                prod = left
                                if p_word:
                                    prod = left * normalize(
                                        [(1, tuple(("z", i) for i in p_word))]
                                    )
                                if prod.is_zero() or prod.degree > max_degree:
                                    continue
                                count += 1
                                if count > max_candidates:
                                    raise ResourceBoundError(
                                        f"membership enumeration exceeded {max_candidates} products"
                                    )
                                lattice.add(vec(prod))
    return lattice.contains(vec(f))
