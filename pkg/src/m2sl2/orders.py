"""Profiles and the two orders that drive the reduction engine.

A canonical monomial maps to a profile: pure-y monomials give a variant-1
profile (just the exponent sequence u1), monomials with odd letters give a
variant-2 profile (u1 plus the two slot-count sequences u2 and u3 for the
c- and d-slots).  Profiles compare two ways:

* cmp_total is a linear well-order.  Finite-support integer sequences compare
  by their highest differing index (right to left); variant 1 sits below
  variant 2; within variant 2 the total z-count decides first, then u3, then
  u2, then u1.

* pwo_leq is the Higman-style embedding order: u <= v when some strictly
  increasing index map phi puts every entry of u under the matching entry of
  v (componentwise on the (u1, u2, u3) triples for variant 2, with the same
  phi for all three).  The right operand carries an implicit infinite zero
  tail.  This order is a well partial order, which is what makes the
  ascending-chain machinery downstream terminate.
"""

from dataclasses import dataclass

from .errors import CannotExtendError, InvalidProfileError
from .freealg import CanonicalMonomial, QPoly, _trim

RENAME_MODES = ("both", "y_only", "z_only")


@dataclass(frozen=True)
class Profile:
    """Finite-support count sequences attached to a canonical monomial."""

    variant: int
    u1: tuple[int, ...] = ()
    u2: tuple[int, ...] = ()
    u3: tuple[int, ...] = ()

    def __post_init__(self):
        if self.variant not in (1, 2):
            raise InvalidProfileError(f"variant must be 1 or 2, got {self.variant}")
        for seq in (self.u1, self.u2, self.u3):
            if any(e < 0 for e in seq):
                raise InvalidProfileError("profile entries must be >= 0")
            if seq and seq[-1] == 0:
                raise InvalidProfileError("trailing zeros must be trimmed")
        if self.variant == 1:
            if self.u2 or self.u3:
                raise InvalidProfileError("variant 1 carries only u1")
        else:
            c, d = sum(self.u2), sum(self.u3)
            if c < 1:
                raise InvalidProfileError("variant 2 needs at least one c-slot")
            if c - d not in (0, 1):
                raise InvalidProfileError("c-slot count minus d-slot count must be 0 or 1")

    def to_obj(self) -> dict:
        return {"v": self.variant, "u1": list(self.u1), "u2": list(self.u2), "u3": list(self.u3)}


def _counts(seq) -> tuple[int, ...]:
    if not seq:
        return ()
    out = [0] * max(seq)
    for i in seq:
        out[i - 1] += 1
    return tuple(out)


def xi(m: CanonicalMonomial) -> Profile:
    """The profile of a canonical monomial.  Bijective onto valid profiles."""
    if not m.cseq:
        return Profile(1, m.yexp)
    return Profile(2, m.yexp, _counts(m.cseq), _counts(m.dseq))


def _expand_counts(u) -> tuple[int, ...]:
    out = []
    for i, n in enumerate(u, start=1):
        out.extend([i] * n)
    return tuple(out)


def xi_inv(p: Profile) -> CanonicalMonomial:
    if p.variant == 1:
        return CanonicalMonomial(p.u1)
    return CanonicalMonomial(p.u1, _expand_counts(p.u2), _expand_counts(p.u3))


# --- the linear well-order --------------------------------------------------

def _cmp_rightmost(u, v) -> int:
    """Compare finite-support sequences: the highest index where they differ
    decides, missing entries read as 0."""
    for k in range(max(len(u), len(v)) - 1, -1, -1):
        a = u[k] if k < len(u) else 0
        b = v[k] if k < len(v) else 0
        if a != b:
            return -1 if a < b else 1
    return 0


def cmp_profiles(p: Profile, q: Profile) -> int:
    if p.variant != q.variant:
        return -1 if p.variant < q.variant else 1
    if p.variant == 1:
        return _cmp_rightmost(p.u1, q.u1)
    dp = sum(p.u2) + sum(p.u3)
    dq = sum(q.u2) + sum(q.u3)
    if dp != dq:
        return -1 if dp < dq else 1
    c = _cmp_rightmost(p.u3, q.u3)
    if c:
        return c
    c = _cmp_rightmost(p.u2, q.u2)
    if c:
        return c
    return _cmp_rightmost(p.u1, q.u1)


def cmp_total(a: CanonicalMonomial, b: CanonicalMonomial) -> int:
    """Linear well-order on canonical monomials: -1, 0, or 1."""
    return cmp_profiles(xi(a), xi(b))


def total_key(m: CanonicalMonomial):
    """functools-style sort key object for cmp_total."""
    return _TotalKey(m)


class _TotalKey:
    __slots__ = ("m", "p")

    def __init__(self, m):
        self.m = m
        self.p = xi(m)

    def __lt__(self, other):
        return cmp_profiles(self.p, other.p) < 0

    def __eq__(self, other):
        return cmp_profiles(self.p, other.p) == 0


# --- monotone injections ----------------------------------------------------

@dataclass(frozen=True)
class MonotoneInjection:
    """A strictly increasing partial map on positive indices.

    Stored as explicit (source, target) pairs sorted by source; both columns
    strictly increase.  Extension past the stored support picks the smallest
    target compatible with monotonicity, so greedily built witnesses can be
    applied to polynomials mentioning extra indices.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last_s, last_t = 0, 0
        for s, t in self.pairs:
            if s <= last_s or t <= last_t:
                raise ValueError("pairs must strictly increase in source and target")
            last_s, last_t = s, t

    @classmethod
    def from_targets(cls, targets) -> "MonotoneInjection":
        """Map 1..n onto the given strictly increasing targets."""
        return cls(tuple((i, t) for i, t in enumerate(targets, start=1)))

    @classmethod
    def identity(cls) -> "MonotoneInjection":
        return cls(())

    def __call__(self, i: int) -> int:
        for s, t in self.pairs:
            if s == i:
                return t
        raise KeyError(i)

    def covering(self, indices) -> "MonotoneInjection":
        """Extend to cover every index in `indices`.

        New images take the smallest value that keeps both columns strictly
        increasing; a hole whose neighbouring targets leave no room raises
        CannotExtendError.
        """
        need = sorted(set(indices) - {s for s, _ in self.pairs})
        if not need:
            return self
        assigned = dict(self.pairs)
        for i in need:
            lo = max((t for s, t in assigned.items() if s < i), default=0)
            hi = min((t for s, t in assigned.items() if s > i), default=None)
            # prefer the identity-like image, fall back to the smallest legal one
            cand = max(lo + 1, i)
            if hi is not None and cand >= hi:
                cand = lo + 1
            if hi is not None and cand >= hi:
                raise CannotExtendError(f"no room to extend injection at index {i}")
            assigned[i] = cand
        return MonotoneInjection(tuple(sorted(assigned.items())))

    def image(self, i: int) -> int:
        return self.covering((i,))(i)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.pairs)

    def to_obj(self) -> list:
        return [[s, t] for s, t in self.pairs]

    def __repr__(self):
        body = ", ".join(f"{s}->{t}" for s, t in self.pairs)
        return f"MonotoneInjection({body})"


# --- the embedding order ----------------------------------------------------

def seq_embed(u, v, leq=None):
    """Greedy leftmost embedding of sequence u into sequence v.

    Returns the 1-based positions used, or None.  Greedy is complete here:
    any embedding can be pushed left position by position without breaking
    later choices, so failure of the greedy scan means no embedding exists.
    """
    if leq is None:
        leq = lambda a, b: a <= b
    pos: list[int] = []
    p = 0
    for x in u:
        p += 1
        while p <= len(v) and not leq(x, v[p - 1]):
            p += 1
        if p > len(v):
            return None
        pos.append(p)
    return tuple(pos)


def _triple_rows(p: Profile, length: int):
    u1, u2, u3 = p.u1, p.u2, p.u3
    return [
        (
            u1[k] if k < len(u1) else 0,
            u2[k] if k < len(u2) else 0,
            u3[k] if k < len(u3) else 0,
        )
        for k in range(length)
    ]


def _leq3(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def pwo_leq_profiles(p: Profile, q: Profile) -> MonotoneInjection | None:
    if p.variant != q.variant:
        return None
    if p.variant == 1:
        u = p.u1
        v = list(q.u1) + [0] * len(u)
        emb = seq_embed(u, v)
    else:
        lu = max(len(p.u1), len(p.u2), len(p.u3))
        lv = max(len(q.u1), len(q.u2), len(q.u3))
        u = _triple_rows(p, lu)
        v = _triple_rows(q, lv) + [(0, 0, 0)] * lu
        emb = seq_embed(u, v, _leq3)
    if emb is None:
        return None
    return MonotoneInjection(tuple((i, t) for i, t in enumerate(emb, start=1)))


def pwo_leq(a: CanonicalMonomial, b: CanonicalMonomial) -> MonotoneInjection | None:
    """Embedding-order test a <=' b; returns a witness injection or None.

    Monomials of different variants never compare.  The witness maps the
    (padded) profile positions of a strictly increasingly into those of b,
    entrywise dominated; positions of b beyond its support count as zero.
    """
    return pwo_leq_profiles(xi(a), xi(b))


# --- renaming endomorphisms -------------------------------------------------

def _nonzero_positions(u):
    return [i for i, e in enumerate(u, start=1) if e]


def _push_seq(u, phi: MonotoneInjection):
    """Push a count sequence along phi: result[phi(i)] = u[i]."""
    nz = _nonzero_positions(u)
    if not nz:
        return ()
    phi = phi.covering(nz)
    out: dict[int, int] = {}
    for i in nz:
        out[phi(i)] = u[i - 1]
    top = max(out)
    return tuple(out.get(k, 0) for k in range(1, top + 1))


def _monomial_need(m: CanonicalMonomial, mode: str) -> set[int]:
    """Indices the renaming has to cover.  One shared extension per operation:
    extending per component would let the u2 and u3 pushes drift apart."""
    need: set[int] = set()
    if mode in ("both", "y_only"):
        need.update(_nonzero_positions(m.yexp))
    if mode in ("both", "z_only"):
        need.update(m.cseq)
        need.update(m.dseq)
    return need


def push_profile(p: Profile, phi: MonotoneInjection, mode: str = "both") -> Profile:
    """The profile-side action matching rename on monomials."""
    if mode not in RENAME_MODES:
        raise ValueError(f"mode must be one of {RENAME_MODES}")
    need: set[int] = set()
    if mode in ("both", "y_only"):
        need.update(_nonzero_positions(p.u1))
    if p.variant == 2 and mode in ("both", "z_only"):
        need.update(_nonzero_positions(p.u2))
        need.update(_nonzero_positions(p.u3))
    if need:
        phi = phi.covering(need)
    u1, u2, u3 = p.u1, p.u2, p.u3
    if mode in ("both", "y_only"):
        u1 = _push_seq(u1, phi)
    if p.variant == 2 and mode in ("both", "z_only"):
        u2 = _push_seq(u2, phi)
        u3 = _push_seq(u3, phi)
    return Profile(p.variant, u1, u2, u3)


def rename_monomial(m: CanonicalMonomial, phi: MonotoneInjection, mode: str = "both") -> CanonicalMonomial:
    """Rename letter indices along phi.  Strict monotonicity keeps slot
    sequences sorted and never merges exponents, so the result is canonical
    and no sign appears."""
    if mode not in RENAME_MODES:
        raise ValueError(f"mode must be one of {RENAME_MODES}")
    need = _monomial_need(m, mode)
    if need:
        phi = phi.covering(need)
    yexp, cseq, dseq = m.yexp, m.cseq, m.dseq
    if mode in ("both", "y_only"):
        yexp = _push_seq(yexp, phi)
    if mode in ("both", "z_only"):
        cseq = tuple(phi(i) for i in cseq)
        dseq = tuple(phi(i) for i in dseq)
    return CanonicalMonomial(_trim(yexp), cseq, dseq)


def apply_renaming(f: QPoly, phi: MonotoneInjection, mode: str = "both") -> QPoly:
    """Rename every monomial of f along phi; coefficients ride along.

    The covering extension is computed once for the whole polynomial, so the
    renaming acts as a single letter substitution.  Extending monomial by
    monomial instead could merge terms (phi 1->2 sends both y1*y2 and y1*y3
    to y2*y3 under separate extensions) and break strict order preservation.
    """
    if mode not in RENAME_MODES:
        raise ValueError(f"mode must be one of {RENAME_MODES}")
    need: set[int] = set()
    for m in f.terms:
        need.update(_monomial_need(m, mode))
    if need:
        phi = phi.covering(need)
    acc: dict[CanonicalMonomial, int] = {}
    for m, c in f.terms.items():
        r = rename_monomial(m, phi, mode)
        acc[r] = acc.get(r, 0) + c
    return QPoly(acc)


# --- antichains and stabilization -------------------------------------------

def minimal_elements(monomials) -> list[CanonicalMonomial]:
    """The <='-minimal elements of a finite set (duplicates collapsed)."""
    items = list(dict.fromkeys(monomials))
    out = []
    for m in items:
        if not any(other != m and pwo_leq(other, m) is not None for other in items):
            out.append(m)
    return out


@dataclass
class StabilizationReport:
    retained: list
    last_growth_step: int | None
    steps: int
    truncated: bool

    @property
    def stabilized_at(self) -> int | None:
        """Step of last growth, when the whole stream was seen; None if the
        budget cut the stream and growth may have continued."""
        return None if self.truncated else self.last_growth_step


def chain_stabilization_check(stream, budget: int) -> StabilizationReport:
    """Feed monomials; retain each one not <='-dominated by a retained one.

    Retention is never revisited: an element kept early stays kept even if a
    later arrival sits below it.  By the well-partial-order property the
    retained family cannot grow forever, so on any infinite stream growth
    stops; the budget merely bounds how much of the stream is examined.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    retained: list[CanonicalMonomial] = []
    steps = 0
    last_growth = None
    truncated = False
    for m in stream:
        if steps >= budget:
            truncated = True
            break
        steps += 1
        if not any(pwo_leq(r, m) is not None for r in retained):
            retained.append(m)
            last_growth = steps
    return StabilizationReport(retained, last_growth, steps, truncated)
