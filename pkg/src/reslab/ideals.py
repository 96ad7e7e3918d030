"""Constructions on ideals: powers, point ideals, symbolic powers, product
rings, fiber sums, k-fold products, and the Fermat point configurations.

Symbolic powers are restricted to ideals of reduced points, where the
fat-point intersection of powers of the point primes realizes the
definition exactly; general inputs would need primary decomposition and
are rejected rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .algebra import FieldSpec, Polynomial, RingContext, find_root_of_unity
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import ContextMismatchError, PreconditionError
from .groebner import Ideal, intersect, saturate


def canonical_generators(context: RingContext, gens):
    """Deduplicate and sort generators so ideal identity is text-stable."""
    seen = {}
    for g in gens:
        if g.terms:
            seen.setdefault(g.to_text(), g)
    return sorted(seen.values(), key=lambda g: (g.total_degree(), g.to_text()))


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.context != b.context:
        raise ContextMismatchError("summands live in different rings")
    return Ideal(a.context, canonical_generators(a.context, a.generators + b.generators))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.context != b.context:
        raise ContextMismatchError("factors live in different rings")
    gens = [f * g for f in a.generators for g in b.generators]
    return Ideal(a.context, canonical_generators(a.context, gens))


def ideal_power(a: Ideal, m: int) -> Ideal:
    """All m-fold products of generators; the 0-th power is the unit ideal."""
    if m < 0:
        raise PreconditionError("negative ideal powers are undefined")
    if m == 0:
        return Ideal(a.context, (a.context.one,))
    if m == 1:
        return Ideal(a.context, canonical_generators(a.context, a.generators))
    gens = []
    for combo in combinations_with_replacement(a.generators, m):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        gens.append(prod)
    return Ideal(a.context, canonical_generators(a.context, gens))


def irrelevant_ideal(context: RingContext) -> Ideal:
    return Ideal(context, context.gens())


# ---------------------------------------------------------------------------
# Projective points
# ---------------------------------------------------------------------------

def _normalize_point(field: FieldSpec, coords):
    vec = tuple(field.normalize(c) for c in coords)
    pivot = next((i for i, c in enumerate(vec) if c != 0), None)
    if pivot is None:
        raise PreconditionError("a projective point cannot be the zero vector")
    inv = field.inv(vec[pivot])
    return tuple(field.mul(c, inv) for c in vec)


class PointSet:
    """Distinct projective points tied to the ring of their ambient space."""

    __slots__ = ("context", "points", "_defining", "_symbolic")

    def __init__(self, context: RingContext, points):
        field = context.field
        normalized = []
        seen = set()
        for coords in points:
            if len(coords) != context.nvars:
                raise PreconditionError(
                    "point has %d coordinates, ring has %d variables"
                    % (len(coords), context.nvars)
                )
            vec = _normalize_point(field, coords)
            if vec in seen:
                raise PreconditionError("points must be projectively distinct")
            seen.add(vec)
            normalized.append(vec)
        if not normalized:
            raise PreconditionError("a point set cannot be empty")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "points", tuple(normalized))
        object.__setattr__(self, "_defining", None)
        object.__setattr__(self, "_symbolic", {})

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    @property
    def ambient_dimension(self) -> int:
        return self.context.nvars - 1

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return "PointSet(%d points in P^%d over %s)" % (
            len(self.points),
            self.ambient_dimension,
            self.context.field,
        )

    def defining_ideal(self, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
        if self._defining is None:
            object.__setattr__(
                self, "_defining", points_defining_ideal(self, config)
            )
        return self._defining

    def symbolic_power(self, m: int, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
        cached = self._symbolic.get(m)
        if cached is None:
            cached = symbolic_power_points(self, m, config)
            self._symbolic[m] = cached
        return cached


def point_ideal(context: RingContext, point) -> Ideal:
    """Prime ideal of the N independent linear forms vanishing at the point."""
    vec = _normalize_point(context.field, point)
    pivot = next(i for i, c in enumerate(vec) if c != 0)
    gens = []
    pivot_var = context.variable(context.variables[pivot])
    for i, c in enumerate(vec):
        if i == pivot:
            continue
        gens.append(context.variable(context.variables[i]) - pivot_var * c)
    return Ideal(context, gens)


def points_defining_ideal(points: PointSet, config: EngineConfig = DEFAULT_CONFIG) -> Ideal:
    """Radical ideal of the configuration: the meet of its point primes."""
    result = None
    for p in points.points:
        prime = point_ideal(points.context, p)
        result = prime if result is None else intersect(result, prime, config)
    return result


def symbolic_power_points(
    points: PointSet, m: int, config: EngineConfig = DEFAULT_CONFIG
) -> Ideal:
    """Fat-point ideal: meet of the m-th powers of the point primes.

    Folded left-to-right in input order so the generator list is
    reproducible run to run.
    """
    if m < 1:
        raise PreconditionError("symbolic powers need m >= 1")
    result = None
    for p in points.points:
        power = ideal_power(point_ideal(points.context, p), m)
        result = power if result is None else intersect(result, power, config)
    return result


def symbolic_power_saturation(
    ideal: Ideal, m: int, config: EngineConfig = DEFAULT_CONFIG
) -> Ideal:
    """Symbolic power of a radical ideal of points via saturation.

    Valid because the only possible embedded prime of an ordinary power of
    such an ideal is the irrelevant maximal ideal; the caller asserts the
    input is indeed a radical ideal of points.
    """
    if m < 1:
        raise PreconditionError("symbolic powers need m >= 1")
    if ideal.is_zero:
        raise PreconditionError("symbolic powers of the zero ideal are undefined")
    return saturate(ideal_power(ideal, m), irrelevant_ideal(ideal.context), config)


# ---------------------------------------------------------------------------
# Product rings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProductRingMap:
    """Renaming of a plain ring's variables onto one block of a product ring."""

    source: RingContext
    target: RingContext
    block: int  # 0-based block index into target.blocks

    def __post_init__(self):
        if self.block < 0 or self.block >= len(self.target.blocks):
            raise PreconditionError("no block %d in the target ring" % self.block)
        if len(self.target.blocks[self.block]) != self.source.nvars:
            raise ContextMismatchError("block arity differs from the source ring")
        if self.source.field != self.target.field:
            raise ContextMismatchError("source and target fields differ")

    def apply(self, f: Polynomial) -> Polynomial:
        if f.context != self.source:
            raise ContextMismatchError("polynomial is not from the source ring")
        slots = self.target.blocks[self.block]
        n = self.target.nvars
        out = {}
        for mono, coeff in f.terms.items():
            exps = [0] * n
            for src_i, e in enumerate(mono):
                if e:
                    exps[slots[src_i]] = e
            out[tuple(exps)] = coeff
        return Polynomial(self.target, out, _checked=True)

    def apply_ideal(self, ideal: Ideal) -> Ideal:
        if ideal.context != self.source:
            raise ContextMismatchError("ideal is not from the source ring")
        return Ideal(self.target, [self.apply(g) for g in ideal.generators])


def product_context(context: RingContext, k: int) -> RingContext:
    """k-block product ring with block i getting suffix-i variable names."""
    if len(context.blocks) != 1:
        raise PreconditionError("product rings are built from single-block rings")
    if k < 1:
        raise PreconditionError("a product ring needs k >= 1 factors")
    names = []
    blocks = []
    n = context.nvars
    for i in range(k):
        names.extend("%s%d" % (v, i + 1) for v in context.variables)
        blocks.append(tuple(range(i * n, (i + 1) * n)))
    kind = "grevlex" if context.order.kind == "grevlex" else "lex"
    return RingContext(context.field, names, blocks, order=kind)


def block_map(source: RingContext, target: RingContext, block: int) -> ProductRingMap:
    return ProductRingMap(source, target, block)


def extend_to_block(ideal: Ideal, pmap: ProductRingMap) -> Ideal:
    return pmap.apply_ideal(ideal)


def _combined_product_context(a: RingContext, b: RingContext) -> RingContext:
    if a.field != b.field:
        raise ContextMismatchError("fiber sums need a common coefficient field")
    if len(a.blocks) != 1 or len(b.blocks) != 1:
        raise PreconditionError("fiber sums are built from single-block rings")
    names = ["%s1" % v for v in a.variables] + ["%s2" % v for v in b.variables]
    blocks = (
        tuple(range(a.nvars)),
        tuple(range(a.nvars, a.nvars + b.nvars)),
    )
    return RingContext(a.field, names, blocks, order="grevlex")


def fiber_sum(a: Ideal, b: Ideal, target: RingContext | None = None):
    """Sum of the block extensions of two ideals in the product ring.

    Returns (ideal, map_for_a, map_for_b); the maps expose the embedding
    used, which callers need to move witnesses into the product ring.
    """
    if target is None:
        target = _combined_product_context(a.context, b.context)
    ma = ProductRingMap(a.context, target, 0)
    mb = ProductRingMap(b.context, target, 1)
    gens = [ma.apply(g) for g in a.generators] + [mb.apply(g) for g in b.generators]
    return Ideal(target, canonical_generators(target, gens)), ma, mb


def kfold(ideal: Ideal, k: int) -> Ideal:
    """Defining ideal of the k-fold product: one renamed copy per block."""
    if k < 1:
        raise PreconditionError("k-fold products need k >= 1")
    if k == 1:
        return ideal
    target = product_context(ideal.context, k)
    gens = []
    for i in range(k):
        pmap = ProductRingMap(ideal.context, target, i)
        gens.extend(pmap.apply(g) for g in ideal.generators)
    return Ideal(target, canonical_generators(target, gens))


# ---------------------------------------------------------------------------
# Fermat configurations
# ---------------------------------------------------------------------------

def _check_fermat_field(n: int, field: FieldSpec):
    if field.is_prime_field and field.characteristic == 2:
        raise PreconditionError("the Fermat configuration needs characteristic != 2")
    return find_root_of_unity(field, n)  # raises when no n-th roots exist


def fermat_ideal(n: int, field: FieldSpec) -> Ideal:
    """The ideal (x*(y^n - z^n), y*(z^n - x^n), z*(x^n - y^n))."""
    if n < 1:
        raise PreconditionError("the Fermat family needs n >= 1")
    _check_fermat_field(n, field)
    ctx = RingContext(field, ("x", "y", "z"))
    x, y, z = ctx.gens()
    gens = (
        x * (y**n - z**n),
        y * (z**n - x**n),
        z * (x**n - y**n),
    )
    return Ideal(ctx, gens)


def fermat_points(n: int, field: FieldSpec) -> PointSet:
    """The n^2 + 3 points cut out by the Fermat ideal's generators.

    The three coordinate points come first, then (1 : e^i : e^j) over all
    n-th roots of unity e^i, e^j, in ascending power order.
    """
    if n < 1:
        raise PreconditionError("the Fermat family needs n >= 1")
    root = _check_fermat_field(n, field)
    ctx = RingContext(field, ("x", "y", "z"))
    one, zero = field.one, field.zero
    pts = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    powers = []
    acc = one
    for _ in range(n):
        powers.append(acc)
        acc = field.mul(acc, root)
    for a in powers:
        for b in powers:
            pts.append((one, a, b))
    return PointSet(ctx, pts)
