"""Shared random generators and independent oracles for the test suite.

The brute-force checks here deliberately avoid the package's own profile
helpers: they recompute slot counts straight from the monomial components so
that agreement actually means something.
"""

import random
from itertools import combinations

from m2sl2 import (
    CanonicalMonomial,
    GMatrix2,
    LieBracket,
    LieVar,
    MonotoneInjection,
    MultiPoly,
    Profile,
    QPoly,
    alpha,
    beta,
    cmp_total,
    gamma,
    normalize,
    pwo_leq,
    push_profile,
    xi,
    xi_inv,
)


def expected_y_product(indices) -> GMatrix2:
    """Closed form for a product of generic diagonal matrices."""
    prod = MultiPoly.one()
    for i in indices:
        prod = prod * alpha(i)
    return GMatrix2(prod, MultiPoly.zero(), MultiPoly.zero(),
                    prod * (-1) ** len(indices))


def expected_z_product(indices) -> GMatrix2:
    """Alternating beta/gamma products decided purely by position parity."""
    upper, lower = MultiPoly.one(), MultiPoly.one()
    for pos, i in enumerate(indices, start=1):
        if pos % 2:
            upper, lower = upper * beta(i), lower * gamma(i)
        else:
            upper, lower = upper * gamma(i), lower * beta(i)
    zero = MultiPoly.zero()
    if len(indices) % 2 == 0:
        return GMatrix2(upper, zero, zero, lower)
    return GMatrix2(zero, upper, lower, zero)


def rand_monomial(rng: random.Random, max_degree=8, max_index=5, variant=None) -> CanonicalMonomial:
    if variant is None:
        variant = rng.choice((1, 2))
    yexp = [0] * max_index
    if variant == 1:
        for _ in range(rng.randint(0, max_degree)):
            yexp[rng.randrange(max_index)] += 1
        return CanonicalMonomial.make(yexp)
    zlen = rng.randint(1, max_degree)
    for _ in range(rng.randint(0, max_degree - zlen)):
        yexp[rng.randrange(max_index)] += 1
    cs = sorted(rng.randint(1, max_index) for _ in range((zlen + 1) // 2))
    ds = sorted(rng.randint(1, max_index) for _ in range(zlen // 2))
    return CanonicalMonomial.make(yexp, cs, ds)


def rand_word(rng: random.Random, max_len=8, max_index=4):
    n = rng.randint(0, max_len)
    return tuple(
        (rng.choice("yz"), rng.randint(1, max_index)) for _ in range(n)
    )


def rand_zword(rng: random.Random, max_len=6, max_index=4):
    n = rng.randint(0, max_len)
    return tuple(("z", rng.randint(1, max_index)) for _ in range(n))


def rand_qpoly(rng: random.Random, max_terms=4, max_degree=6, max_index=4) -> QPoly:
    acc = QPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        m = rand_monomial(rng, max_degree, max_index)
        acc = acc + QPoly.monomial(m, rng.choice((-3, -2, -1, 1, 2, 3)))
    return acc


def rand_injection(rng: random.Random, n: int, spread=4) -> MonotoneInjection:
    """A random strictly increasing map defined on 1..n."""
    targets = sorted(rng.sample(range(1, n + spread + 1), n)) if n else []
    return MonotoneInjection.from_targets(targets)


def rand_lie(rng: random.Random, grade: int, depth: int, max_index=4):
    if depth <= 0 or (rng.random() < 0.35):
        fam = "y" if grade == 0 else "z"
        return LieVar((fam, rng.randint(1, max_index)))
    if grade == 0:
        ga, gb = rng.choice(((0, 0), (1, 1)))
    else:
        ga, gb = rng.choice(((0, 1), (1, 0)))
    return LieBracket(
        rand_lie(rng, ga, depth - 1, max_index),
        rand_lie(rng, gb, depth - 1, max_index),
    )


def inflate(rng: random.Random, m: CanonicalMonomial, spread=3, extra=3):
    """A random monomial that m embeds into (built by push-and-pad)."""
    p = xi(m)
    length = max(len(p.u1), len(p.u2), len(p.u3))
    phi = rand_injection(rng, length, spread)
    pushed = push_profile(p, phi, "both")
    size = length + spread + extra + 1
    u1 = list(pushed.u1) + [0] * (size - len(pushed.u1))
    for _ in range(rng.randint(0, extra)):
        u1[rng.randrange(size)] += 1
    if p.variant == 1:
        return xi_inv(Profile(1, _trim(u1)))
    u2 = list(pushed.u2) + [0] * (size - len(pushed.u2))
    u3 = list(pushed.u3) + [0] * (size - len(pushed.u3))
    e2 = rng.randint(0, extra)
    delta = sum(u2) - sum(u3)  # 0 or 1
    new_delta = rng.choice((0, 1)) if delta + e2 >= 1 else 0
    e3 = delta + e2 - new_delta
    for _ in range(e2):
        u2[rng.randrange(size)] += 1
    for _ in range(e3):
        u3[rng.randrange(size)] += 1
    return xi_inv(Profile(2, _trim(u1), _trim(u2), _trim(u3)))


def _trim(seq):
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    return tuple(seq)


def monomial_indices(m: CanonicalMonomial) -> set:
    idx = {i for i, e in enumerate(m.yexp, start=1) if e}
    idx.update(m.cseq)
    idx.update(m.dseq)
    return idx


# --- independent embedding oracle -------------------------------------------

def monomial_rows(m: CanonicalMonomial):
    n = max(
        len(m.yexp),
        max(m.cseq, default=0),
        max(m.dseq, default=0),
    )
    rows = []
    for i in range(1, n + 1):
        rows.append((
            m.yexp[i - 1] if i <= len(m.yexp) else 0,
            sum(1 for c in m.cseq if c == i),
            sum(1 for d in m.dseq if d == i),
        ))
    return rows


def brute_embed(a: CanonicalMonomial, b: CanonicalMonomial) -> bool:
    """Exhaustive search over all monotone injections, zero tail included."""
    if bool(a.cseq) != bool(b.cseq):
        return False
    ra = monomial_rows(a)
    rb = monomial_rows(b) + [(0, 0, 0)] * len(ra)
    for combo in combinations(range(len(rb)), len(ra)):
        if all(
            ra[j][k] <= rb[combo[j]][k]
            for j in range(len(ra))
            for k in range(3)
        ):
            return True
    return False


def assert_witness_valid(a: CanonicalMonomial, b: CanonicalMonomial, phi: MonotoneInjection):
    """Check a claimed embedding witness entry by entry."""
    ra = monomial_rows(a)
    rb = monomial_rows(b)

    def at(rows, i):
        return rows[i - 1] if i <= len(rows) else (0, 0, 0)

    sources = [s for s, _ in phi.pairs]
    assert sources == list(range(1, len(ra) + 1)), "witness must cover the padded support"
    for s, t in phi.pairs:
        assert all(at(ra, s)[k] <= at(rb, t)[k] for k in range(3)), (a, b, phi)


# --- profiles, exhaustively --------------------------------------------------

def v1_profiles(support: int, entry_cap: int):
    """Every variant-1 profile with given support bound and entry cap."""
    out = []

    def rec(prefix):
        if len(prefix) == support:
            out.append(Profile(1, _trim(prefix)))
            return
        for v in range(entry_cap + 1):
            rec(prefix + (v,))

    rec(())
    # trimming collapses duplicates
    seen = {}
    for p in out:
        seen[p.u1] = p
    return list(seen.values())


def v2_profiles(support: int, entry_cap: int):
    """Every valid variant-2 profile within the caps."""
    vecs = [v.u1 for v in v1_profiles(support, entry_cap)]
    out = []
    for u1 in vecs:
        for u2 in vecs:
            if sum(u2) < 1:
                continue
            for u3 in vecs:
                if sum(u2) - sum(u3) in (0, 1):
                    out.append(Profile(2, u1, u2, u3))
    return out


# --- the lemma suites ---------------------------------------------------------

def single_term(f: QPoly):
    ((m, c),) = f.terms.items()
    return c, m


def check_comp(rng, count):
    """Renaming a monomial then profiling equals profiling then pushing."""
    from m2sl2 import rename_monomial

    for _ in range(count):
        m = rand_monomial(rng)
        phi = rand_injection(rng, rng.randint(0, 6))
        for mode in ("both", "y_only", "z_only"):
            left = xi(rename_monomial(m, phi, mode))
            right = push_profile(xi(m), phi, mode)
            assert left == right, (m, phi, mode)


def check_mult(rng, count):
    """Left multiplication by a pure-y monomial is monotone."""
    for _ in range(count):
        m = rand_monomial(rng, variant=1)
        a = rand_monomial(rng)
        b = rand_monomial(rng)
        if cmp_total(a, b) > 0:
            a, b = b, a
        mp = QPoly.monomial(m)
        _, pa = single_term(mp * QPoly.monomial(a))
        _, pb = single_term(mp * QPoly.monomial(b))
        assert cmp_total(pa, pb) <= 0, (m, a, b)


def check_mult1(rng, count):
    """Pure-y monomials absorb: M <= M*N."""
    for _ in range(count):
        m = rand_monomial(rng, variant=1)
        n = rand_monomial(rng, variant=1)
        _, prod = single_term(QPoly.monomial(m) * QPoly.monomial(n))
        assert cmp_total(m, prod) <= 0, (m, n)


def check_mult2(rng, count):
    """Pure-z words absorb on the right, with sign +1 throughout."""
    from m2sl2 import reduce_word

    for _ in range(count):
        w1 = rand_zword(rng, max_len=5)
        w2 = rand_zword(rng, max_len=5)
        if not w1:
            continue
        s1, m1 = reduce_word(w1)
        s12, m12 = reduce_word(w1 + w2)
        assert s1 == 1 and s12 == 1
        assert cmp_total(m1, m12) <= 0, (w1, w2)


def check_mult3a(rng, count):
    """Right multiplication by a pure-y monomial is monotone (up to sign)."""
    for _ in range(count):
        p = rand_monomial(rng)
        q = rand_monomial(rng)
        if cmp_total(p, q) > 0:
            p, q = q, p
        m = rand_monomial(rng, variant=1)
        mp = QPoly.monomial(m)
        _, pm = single_term(QPoly.monomial(p) * mp)
        _, qm = single_term(QPoly.monomial(q) * mp)
        assert cmp_total(pm, qm) <= 0, (p, q, m)


def check_mult3b(rng, count):
    """Right multiplication by a pure-z word is monotone."""
    for _ in range(count):
        p = rand_monomial(rng)
        q = rand_monomial(rng)
        if cmp_total(p, q) > 0:
            p, q = q, p
        w = rand_zword(rng, max_len=5)
        nw = normalize([(1, w)])
        if nw.is_zero():
            continue
        _, pn = single_term(QPoly.monomial(p) * nw)
        _, qn = single_term(QPoly.monomial(q) * nw)
        assert cmp_total(pn, qn) <= 0, (p, q, w)


def check_mult4(rng, count):
    """Renaming by one shared injection preserves strict order, in every mode.

    The injection is extended over the union of both supports up front; two
    separate extensions would not be a single letter substitution and can
    collapse distinct monomials.
    """
    from m2sl2 import rename_monomial

    done = 0
    while done < count:
        a = rand_monomial(rng)
        b = rand_monomial(rng)
        c = cmp_total(a, b)
        if c == 0:
            continue
        if c > 0:
            a, b = b, a
        phi = rand_injection(rng, rng.randint(0, 6))
        phi = phi.covering(monomial_indices(a) | monomial_indices(b) | {1})
        for mode in ("both", "y_only", "z_only"):
            ra = rename_monomial(a, phi, mode)
            rb = rename_monomial(b, phi, mode)
            assert cmp_total(ra, rb) < 0, (a, b, phi, mode)
        done += 1


def check_mult5(rng, count):
    """factorize_embedding reconstructs the target with sign +1."""
    from m2sl2 import reduce_word
    from m2sl2.reduction import factorize_embedding, reducer_word

    for _ in range(count):
        m = rand_monomial(rng, max_degree=6, max_index=4)
        target = inflate(rng, m)
        triple = factorize_embedding(m, target)
        sign, got = reduce_word(reducer_word(triple, m))
        assert sign == 1 and got == target, (m, target, triple)


def check_mult6(rng, count):
    """lift_reducer hits the target leading monomial with the old coefficient."""
    from m2sl2 import leading, lift_reducer

    for _ in range(count):
        f = rand_qpoly(rng, max_terms=4, max_degree=5, max_index=4)
        if f.is_zero():
            continue
        ld = leading(f)
        target = inflate(rng, ld.lm)
        g = lift_reducer(f, target)
        gld = leading(g)
        assert gld.lm == target and gld.lc == ld.lc, (f, target, g)
