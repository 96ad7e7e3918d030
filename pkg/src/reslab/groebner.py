"""Buchberger's algorithm, normal forms, and the derived ideal operations.

The engine works on raw term dicts (monomial tuple -> coefficient) with a
flat integer sort key per term order, so the division loop is native dict
and tuple traffic. Pair updates use the Gebauer-Moeller refinements of
Buchberger's coprimality and chain criteria; pair selection is the normal
strategy (smallest lcm degree first) with a total deterministic tiebreak.

Everything downstream of a reduced basis is a view on it: membership is a
zero normal form, ideal equality is equality of reduced bases, elimination
restricts a block-order basis, intersection / colon / saturation are the
classical auxiliary-variable constructions. graded_membership is the
independent linear-algebra route used to cross-check the Groebner verdicts
on homogeneous input.
"""

from __future__ import annotations

import heapq
import threading
from fractions import Fraction

import numpy as np

from .algebra import (
    Polynomial,
    RingContext,
    TermOrder,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import (
    ContextMismatchError,
    MacaulaySizeError,
    NonHomogeneousError,
    PreconditionError,
    ReslabError,
    ResourceLimitError,
    ZeroPolynomialError,
)


# ---------------------------------------------------------------------------
# Raw normal form
# ---------------------------------------------------------------------------

def _neg_key(key: tuple) -> tuple:
    return tuple(-k for k in key)


def _normal_form_raw(terms, reducers, keyfn, field, config):
    """Fully reduce a term dict against monic (lead, tail) reducers.

    Returns a new dict no term of which is divisible by any reducer lead
    monomial. Reducers must be monic under the same order as keyfn.
    """
    work = dict(terms)
    if not work:
        return work
    out = {}
    heap = [(_neg_key(keyfn(m)), m) for m in work]
    heapq.heapify(heap)
    zero = field.zero
    sub, mul = field.sub, field.mul
    guard = config.degree_guard
    ticks = 0
    while heap:
        _, m = heapq.heappop(heap)
        c = work.get(m)
        if c is None:
            continue  # stale heap entry, already cancelled
        ticks += 1
        if ticks & 0x3FF == 0:
            config.check_deadline()
        hit = None
        for lead, tail in reducers:
            if mono_divides(lead, m):
                hit = (lead, tail)
                break
        if hit is None:
            out[m] = c
            del work[m]
            continue
        lead, tail = hit
        q = mono_div(m, lead)
        del work[m]
        for tm, tc in tail:
            nm = mono_mul(tm, q)
            old = work.get(nm)
            if old is None:
                nc = sub(zero, mul(c, tc))
                if nc != 0:
                    if sum(nm) > guard:
                        raise ResourceLimitError(
                            "normal form produced degree %d > guard %d"
                            % (sum(nm), guard)
                        )
                    work[nm] = nc
                    heapq.heappush(heap, (_neg_key(keyfn(nm)), nm))
            else:
                nc = sub(old, mul(c, tc))
                if nc == 0:
                    del work[nm]
                else:
                    work[nm] = nc
    return out


def _monic_raw(terms, keyfn, field):
    lead = max(terms, key=keyfn)
    lc = terms[lead]
    if lc == field.one:
        return terms, lead
    inv = field.inv(lc)
    return {m: field.mul(c, inv) for m, c in terms.items()}, lead


def _spoly_raw(lead_f, terms_f, lead_g, terms_g, field):
    """S-polynomial of two monic term dicts (lead coefficients 1)."""
    lcm = mono_lcm(lead_f, lead_g)
    qf = mono_div(lcm, lead_f)
    qg = mono_div(lcm, lead_g)
    out = {}
    zero, add, sub = field.zero, field.add, field.sub
    for m, c in terms_f.items():
        nm = mono_mul(m, qf)
        nc = add(out.get(nm, zero), c)
        if nc == 0:
            out.pop(nm, None)
        else:
            out[nm] = nc
    for m, c in terms_g.items():
        nm = mono_mul(m, qg)
        nc = sub(out.get(nm, zero), c)
        if nc == 0:
            out.pop(nm, None)
        else:
            out[nm] = nc
    return out


def _buchberger_raw(generator_terms, keyfn, field, config):
    """Reduced Groebner basis of the given term dicts, as monic term dicts."""
    basis = []       # monic term dicts
    leads = []       # their lead monomials
    reducers = []    # (lead, tail items) views for the division loop
    pairs = set()

    def install(terms):
        # Gebauer-Moeller update: prune the pending pair set against the
        # newcomer (chain criterion), then add one pair per minimal new lcm
        # unless the coprimality criterion kills the whole class.
        terms, lead = _monic_raw(terms, keyfn, field)
        idx = len(basis)
        survivors = set()
        for i, j in pairs:
            lcm_ij = mono_lcm(leads[i], leads[j])
            if (
                not mono_divides(lead, lcm_ij)
                or mono_lcm(leads[i], lead) == lcm_ij
                or mono_lcm(leads[j], lead) == lcm_ij
            ):
                survivors.add((i, j))
        pairs.clear()
        pairs.update(survivors)
        by_lcm = {}
        for i in range(idx):
            by_lcm.setdefault(mono_lcm(leads[i], lead), []).append(i)
        minimal = []
        for lcm in sorted(by_lcm, key=keyfn):
            if all(not mono_divides(kept, lcm) for kept in minimal):
                minimal.append(lcm)
        for lcm in minimal:
            if not any(
                mono_lcm(leads[i], lead) == mono_mul(leads[i], lead)
                for i in by_lcm[lcm]
            ):
                pairs.add((min(by_lcm[lcm]), idx))
        basis.append(terms)
        leads.append(lead)
        reducers.append((lead, tuple((m, c) for m, c in terms.items() if m != lead)))

    for terms in generator_terms:
        if terms:
            install(dict(terms))

    def pair_rank(p):
        lcm = mono_lcm(leads[p[0]], leads[p[1]])
        return (mono_degree(lcm), keyfn(lcm), p)

    while pairs:
        config.check_deadline()
        i, j = min(pairs, key=pair_rank)
        pairs.discard((i, j))
        lcm = mono_lcm(leads[i], leads[j])
        config.check_degree(mono_degree(lcm))
        s = _spoly_raw(leads[i], basis[i], leads[j], basis[j], field)
        if not s:
            continue
        remainder = _normal_form_raw(s, reducers, keyfn, field, config)
        if remainder:
            install(remainder)

    # Minimalize: keep only elements whose lead is not divisible by another
    # kept lead; scanning by ascending lead keeps the smallest ones.
    order_idx = sorted(range(len(basis)), key=lambda k: keyfn(leads[k]))
    kept = []
    for k in order_idx:
        if all(not mono_divides(leads[m], leads[k]) for m in kept):
            kept.append(k)
    minimal_basis = [basis[k] for k in kept]
    minimal_leads = [leads[k] for k in kept]
    # Interreduce tails against the other minimal elements.
    reduced = []
    for pos, terms in enumerate(minimal_basis):
        others = [
            (minimal_leads[q], tuple(
                (m, c) for m, c in minimal_basis[q].items() if m != minimal_leads[q]
            ))
            for q in range(len(minimal_basis))
            if q != pos
        ]
        r = _normal_form_raw(terms, others, keyfn, field, config)
        r, _ = _monic_raw(r, keyfn, field)
        reduced.append(r)
    reduced.sort(key=lambda t: keyfn(max(t, key=keyfn)))
    return reduced


# ---------------------------------------------------------------------------
# Public wrappers
# ---------------------------------------------------------------------------

class GroebnerBasis:
    """A reduced, monic Groebner basis frozen together with its order."""

    __slots__ = ("context", "order", "elements", "_reducers")

    def __init__(self, context: RingContext, order: TermOrder, elements):
        self.context = context
        self.order = order
        self.elements = tuple(elements)
        self._reducers = None

    def _raw_reducers(self):
        if self._reducers is None:
            keyed = []
            for g in self.elements:
                lead, _ = g.leading_term(self.order)
                tail = tuple((m, c) for m, c in g.terms.items() if m != lead)
                keyed.append((lead, tail))
            self._reducers = keyed
        return self._reducers

    def leading_monomials(self):
        return tuple(g.leading_term(self.order)[0] for g in self.elements)

    def normal_form(self, f: Polynomial, config: EngineConfig = DEFAULT_CONFIG):
        if f.context != self.context:
            raise ContextMismatchError("polynomial is from a different ring")
        reduced = _normal_form_raw(
            f.terms, self._raw_reducers(), self.order.key, self.context.field, config
        )
        return Polynomial(self.context, reduced, _checked=True)

    def contains(self, f: Polynomial, config: EngineConfig = DEFAULT_CONFIG) -> bool:
        return not self.normal_form(f, config).terms

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].total_degree() == 0

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return "GroebnerBasis(%s; %s)" % (
            self.order,
            ", ".join(g.to_text() for g in self.elements),
        )


class Ideal:
    """Generator list plus a per-order cache of reduced Groebner bases.

    The cache supports concurrent reads and first-writer-wins inserts;
    recomputation is harmless because the reduced basis is deterministic.
    """

    __slots__ = ("context", "generators", "_cache", "_lock")

    def __init__(self, context: RingContext, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise PreconditionError("ideal generators must be polynomials")
            if g.context != context:
                raise ContextMismatchError("generator from a different ring")
            if g.terms:
                gens.append(g)
        self.context = context
        self.generators = tuple(gens)
        self._cache = {}
        self._lock = threading.Lock()

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def groebner_basis(
        self, order: TermOrder | None = None, config: EngineConfig = DEFAULT_CONFIG
    ) -> GroebnerBasis:
        order = order or self.context.order
        cached = self._cache.get(order)
        if cached is not None:
            return cached
        raw = _buchberger_raw(
            [g.terms for g in self.generators],
            order.key,
            self.context.field,
            config,
        )
        basis = GroebnerBasis(
            self.context,
            order,
            [Polynomial(self.context, t, _checked=True) for t in raw],
        )
        with self._lock:
            return self._cache.setdefault(order, basis)

    def contains(self, f: Polynomial, config: EngineConfig = DEFAULT_CONFIG) -> bool:
        if not f.terms:
            return True
        return self.groebner_basis(config=config).contains(f, config)

    def has_cached_basis(self, order: TermOrder | None = None) -> bool:
        return (order or self.context.order) in self._cache

    def __repr__(self):
        if not self.generators:
            return "(0)"
        return "(%s)" % ", ".join(g.to_text() for g in self.generators)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder | None = None) -> Polynomial:
    """S-polynomial after monic normalization of both leading coefficients."""
    if f.context != g.context:
        raise ContextMismatchError("operands live in different rings")
    if not f.terms or not g.terms:
        raise ZeroPolynomialError("s_polynomial needs nonzero inputs")
    order = order or f.context.order
    field = f.context.field
    keyfn = order.key
    tf, lf = _monic_raw(f.terms, keyfn, field)
    tg, lg = _monic_raw(g.terms, keyfn, field)
    return Polynomial(f.context, _spoly_raw(lf, tf, lg, tg, field), _checked=True)


def normal_form(
    f: Polynomial,
    basis,
    order: TermOrder | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Polynomial:
    """Remainder of f modulo a GroebnerBasis (or an explicit reducer list)."""
    if isinstance(basis, GroebnerBasis):
        return basis.normal_form(f, config)
    order = order or f.context.order
    field = f.context.field
    keyfn = order.key
    reducers = []
    for g in basis:
        if not g.terms:
            continue
        terms, lead = _monic_raw(g.terms, keyfn, field)
        reducers.append((lead, tuple((m, c) for m, c in terms.items() if m != lead)))
    reduced = _normal_form_raw(f.terms, reducers, keyfn, field, config)
    return Polynomial(f.context, reduced, _checked=True)


def buchberger(
    ideal: Ideal, order: TermOrder | None = None, config: EngineConfig = DEFAULT_CONFIG
) -> GroebnerBasis:
    return ideal.groebner_basis(order, config)


def verify_spair_reduction(
    elements,
    order: TermOrder,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Directly re-check that every pairwise S-polynomial reduces to zero.

    This is the Buchberger criterion applied to an arbitrary candidate
    list; it does not trust any cached construction.
    """
    elems = [g for g in elements if g.terms]
    if not elems:
        return True
    field = elems[0].context.field
    keyfn = order.key
    raws = []
    for g in elems:
        terms, lead = _monic_raw(g.terms, keyfn, field)
        raws.append((lead, terms))
    reducers = [
        (lead, tuple((m, c) for m, c in terms.items() if m != lead))
        for lead, terms in raws
    ]
    for i in range(len(raws)):
        for j in range(i + 1, len(raws)):
            s = _spoly_raw(raws[i][0], raws[i][1], raws[j][0], raws[j][1], field)
            if _normal_form_raw(s, reducers, keyfn, field, config):
                return False
    return True


def ideal_membership(
    f: Polynomial,
    ideal: Ideal,
    order: TermOrder | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    if not f.terms:
        return True
    return ideal.groebner_basis(order, config).contains(f, config)


def ideal_equal(a: Ideal, b: Ideal, config: EngineConfig = DEFAULT_CONFIG) -> bool:
    """Equality via the unique reduced basis under one fixed order."""
    if a.context != b.context:
        raise ContextMismatchError("ideals live in different rings")
    ga = a.groebner_basis(config=config).elements
    gb = b.groebner_basis(config=config).elements
    if len(ga) != len(gb):
        return False
    return all(x.terms == y.terms for x, y in zip(ga, gb))


# ---------------------------------------------------------------------------
# Elimination-based constructions
# ---------------------------------------------------------------------------

def eliminate(ideal: Ideal, block, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
    """Generators of the contraction to the subring without the block vars."""
    ctx = ideal.context
    kill = tuple(
        ctx.var_index(v) if isinstance(v, str) else int(v) for v in block
    )
    if not kill:
        return ideal
    order = TermOrder.elimination(kill, ctx.nvars)
    basis = ideal.groebner_basis(order, config)
    killset = set(kill)
    kept = [
        g
        for g in basis.elements
        if all(m[i] == 0 for m in g.terms for i in killset)
    ]
    return Ideal(ctx, kept)


def _fresh_variable(ctx: RingContext) -> str:
    name = "t"
    k = 0
    while name in ctx.variables:
        name = "t%d" % k
        k += 1
    return name


def _lift(ctx_ext: RingContext, f: Polynomial) -> Polynomial:
    # new variable sits at index 0; shift exponent vectors right
    return Polynomial(
        ctx_ext, {(0,) + m: c for m, c in f.terms.items()}, _checked=True
    )


def intersect(a: Ideal, b: Ideal, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
    """I cap J via the auxiliary variable: eliminate t from t*I + (1-t)*J."""
    if a.context != b.context:
        raise ContextMismatchError("ideals live in different rings")
    ctx = a.context
    if a.is_zero or b.is_zero:
        return Ideal(ctx, ())
    tname = _fresh_variable(ctx)
    ext = RingContext(ctx.field, (tname,) + ctx.variables)
    t = ext.variable(tname)
    one_minus_t = ext.one - t
    gens = [t * _lift(ext, g) for g in a.generators]
    gens += [one_minus_t * _lift(ext, g) for g in b.generators]
    order = TermOrder.elimination((0,), ext.nvars)
    basis = Ideal(ext, gens).groebner_basis(order, config)
    kept = []
    for g in basis.elements:
        if all(m[0] == 0 for m in g.terms):
            kept.append(
                Polynomial(ctx, {m[1:]: c for m, c in g.terms.items()}, _checked=True)
            )
    return Ideal(ctx, kept)


def divide_exact(g: Polynomial, f: Polynomial, order: TermOrder | None = None) -> Polynomial:
    """Exact quotient g / f; raises if f does not divide g."""
    if not f.terms:
        raise ZeroPolynomialError("division by the zero polynomial")
    ctx = g.context
    order = order or ctx.order
    field = ctx.field
    keyfn = order.key
    lead_f, lc_f = f.leading_term(order)
    inv_lc = field.inv(lc_f)
    rem = dict(g.terms)
    quot = {}
    while rem:
        m = max(rem, key=keyfn)
        if not mono_divides(lead_f, m):
            raise ReslabError("inexact division: %s does not divide %s" % (f, g))
        qm = mono_div(m, lead_f)
        qc = field.mul(rem[m], inv_lc)
        quot[qm] = qc
        for fm, fc in f.terms.items():
            nm = mono_mul(fm, qm)
            nc = field.sub(rem.get(nm, field.zero), field.mul(qc, fc))
            if nc == 0:
                rem.pop(nm, None)
            else:
                rem[nm] = nc
    return Polynomial(ctx, quot, _checked=True)


def colon(ideal: Ideal, f: Polynomial, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
    """(I : f), computed from I cap (f) by exact division."""
    ctx = ideal.context
    if f.context != ctx:
        raise ContextMismatchError("polynomial from a different ring")
    if not f.terms:
        raise PreconditionError("colon by the zero polynomial")
    if f.total_degree() == 0:
        return ideal
    if ideal.is_zero:
        return ideal
    meet = intersect(ideal, Ideal(ctx, (f,)), config)
    return Ideal(ctx, [divide_exact(g, f) for g in meet.generators])


def saturate(ideal: Ideal, by: Ideal, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
    """(I : J^infinity) as the meet over generators f of the stabilized
    colon iteration (I : f : f : ...), each capped by the config."""
    ctx = ideal.context
    if by.context != ctx:
        raise ContextMismatchError("ideals live in different rings")
    if by.is_zero:
        raise PreconditionError("saturation by the zero ideal")
    if by.groebner_basis(config=config).is_unit:
        raise PreconditionError("saturation requires a proper ideal")
    partials = []
    for f in by.generators:
        current = ideal
        for _ in range(config.saturation_cap):
            nxt = colon(current, f, config)
            if ideal_equal(nxt, current, config):
                break
            current = nxt
        else:
            raise ResourceLimitError(
                "colon iteration did not stabilize within %d steps"
                % config.saturation_cap
            )
        partials.append(current)
    result = partials[0]
    for other in partials[1:]:
        result = intersect(result, other, config)
    return result


# ---------------------------------------------------------------------------
# Graded linear algebra (independent membership oracle) and Hilbert function
# ---------------------------------------------------------------------------

def _macaulay_rows(ideal: Ideal, d: int, config: EngineConfig):
    """Spanning rows {m*g : deg(m*g) = d} as sparse term dicts."""
    from math import comb

    nvars = ideal.context.nvars
    total = sum(
        comb(d - g.total_degree() + nvars - 1, nvars - 1)
        for g in ideal.generators
        if g.total_degree() <= d
    )
    if total > max(4_000_000, config.macaulay_entry_limit // 8):
        raise MacaulaySizeError("Macaulay span of %d rows is too large" % total)
    rows = []
    for g in ideal.generators:
        dg = g.total_degree()
        if dg > d:
            continue
        for m in monomials_of_degree(nvars, d - dg):
            rows.append({mono_mul(m, gm): c for gm, c in g.terms.items()})
    return rows


def _prune_components(rows, target_support):
    """Keep only rows in the monomial-cooccurrence components of the target.

    Every row's support lies inside one component, so membership of a
    vector only involves the rows living in the components its own support
    touches; dropping the rest is exact and often removes most of the
    matrix (for instance all rows of the wrong multidegree).
    """
    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for row in rows:
        it = iter(row)
        first = next(it)
        if first not in parent:
            parent[first] = first
        for m in it:
            if m not in parent:
                parent[m] = m
            union(first, m)
    wanted = set()
    for m in target_support:
        if m in parent:
            wanted.add(find(m))
    kept = [row for row in rows if find(next(iter(row))) in wanted]
    return kept


def _reduce_mod_p(rows, vector, columns, p, config):
    """Is vector in the row span, over GF(p) via dense numpy elimination?"""
    col_index = {m: i for i, m in enumerate(columns)}
    A = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for r, row in enumerate(rows):
        for m, c in row.items():
            A[r, col_index[m]] = c
    v = np.zeros(len(columns), dtype=np.int64)
    for m, c in vector.items():
        v[col_index[m]] = c
    rank_row = 0
    for col in range(len(columns)):
        if rank_row == len(rows):
            break
        config.check_deadline()
        nz = np.nonzero(A[rank_row:, col])[0]
        if nz.size == 0:
            continue
        piv = rank_row + nz[0]
        if piv != rank_row:
            A[[rank_row, piv]] = A[[piv, rank_row]]
        inv = pow(int(A[rank_row, col]), p - 2, p)
        A[rank_row] = A[rank_row] * inv % p
        below = rank_row + 1 + np.nonzero(A[rank_row + 1 :, col])[0]
        if below.size:
            A[below] = (A[below] - np.outer(A[below, col], A[rank_row])) % p
        if v[col]:
            v = (v - v[col] * A[rank_row]) % p
        rank_row += 1
    return not v.any()


def _reduce_exact(rows, vector, columns, field, config):
    """Fraction-exact echelon insertion; used for rational coefficients."""
    col_index = {m: i for i, m in enumerate(columns)}
    pivots = {}

    def reduce_vec(vec):
        for col in sorted(vec):
            if vec.get(col, 0) == 0:
                continue
            pivot_row = pivots.get(col)
            if pivot_row is None:
                continue
            factor = vec[col]
            for c2, v2 in pivot_row.items():
                nv = field.sub(vec.get(c2, field.zero), field.mul(factor, v2))
                if nv == 0:
                    vec.pop(c2, None)
                else:
                    vec[c2] = nv
        return vec

    for row in rows:
        config.check_deadline()
        vec = reduce_vec({col_index[m]: c for m, c in row.items()})
        live = {c for c, v in vec.items() if v != 0}
        if not live:
            continue
        lead = min(live)
        inv = field.inv(vec[lead])
        pivots[lead] = {c: field.mul(v, inv) for c, v in vec.items() if v != 0}
    target = reduce_vec({col_index[m]: c for m, c in vector.items()})
    return all(v == 0 for v in target.values())


def graded_membership(
    f: Polynomial,
    ideal: Ideal,
    d: int,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Decide membership of a degree-d form by exact rank over the field.

    The span of {m*g : g generator, deg(m*g) = d} is compared against f
    without any Groebner computation, which makes this the independent
    oracle for ideal_membership on homogeneous input.
    """
    ctx = f.context
    if ideal.context != ctx:
        raise ContextMismatchError("polynomial and ideal from different rings")
    if not f.is_homogeneous():
        raise NonHomogeneousError("graded membership needs a homogeneous polynomial")
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise NonHomogeneousError("graded membership needs a homogeneous ideal")
    if not f.terms:
        return True
    if f.total_degree() != d:
        raise PreconditionError(
            "polynomial has degree %s, not the stated %d" % (f.total_degree(), d)
        )
    rows = _macaulay_rows(ideal, d, config)
    rows = _prune_components(rows, f.terms.keys())
    support = set(f.terms)
    covered = set()
    for row in rows:
        covered.update(row)
    if not support <= covered:
        return False  # some monomial of f never occurs in the span
    if len(rows) * len(covered) > config.macaulay_entry_limit:
        raise MacaulaySizeError(
            "Macaulay matrix %d x %d exceeds the entry limit"
            % (len(rows), len(covered))
        )
    columns = sorted(covered, key=ctx.order.key, reverse=True)
    if ctx.field.is_prime_field:
        return _reduce_mod_p(rows, f.terms, columns, ctx.field.characteristic, config)
    return _reduce_exact(rows, f.terms, columns, ctx.field, config)


def hilbert_function(
    ideal: Ideal, d: int, config: EngineConfig = DEFAULT_CONFIG
) -> int:
    """Dimension of the degree-d piece of the quotient ring.

    Counted as the standard monomials of degree d with respect to any
    Groebner basis (the count does not depend on the order chosen).
    """
    if d < 0:
        return 0
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise NonHomogeneousError("hilbert_function needs a homogeneous ideal")
    ctx = ideal.context
    leads = ideal.groebner_basis(config=config).leading_monomials()
    count = 0
    for m in monomials_of_degree(ctx.nvars, d):
        if all(not mono_divides(lt, m) for lt in leads):
            count += 1
    return count
