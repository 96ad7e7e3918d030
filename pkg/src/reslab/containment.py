"""Containment experiments: symbolic-vs-ordinary verdicts, resurgence
grids with dominance pruning, the union-basis / product-witness / k-fold
verifiers, the binomial-expansion equality check, and the closed-form
bound calculators for sums and k-fold products.

Verdict polarity is documented per function because the verifiers differ:
verify_union_groebner and kfold_noncontainment return True when the
expected statement holds, while product_witness_check returns the raw
membership verdict (so False is the expected outcome and True signals a
defect).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .algebra import Polynomial, TermOrder
from .config import DEFAULT_CONFIG, EngineConfig
from .errors import (
    ContextMismatchError,
    MacaulaySizeError,
    PreconditionError,
    ResourceLimitError,
)
from .groebner import (
    Ideal,
    graded_membership,
    ideal_equal,
    ideal_membership,
    verify_spair_reduction,
)
from .ideals import (
    PointSet,
    ProductRingMap,
    fiber_sum,
    ideal_power,
    ideal_product,
    ideal_sum,
    kfold,
    point_ideal,
    symbolic_power_saturation,
)
from .groebner import intersect

METHOD_GROEBNER = "groebner"
METHOD_GRADED = "graded-linear-algebra"
METHOD_INFERRED = "inferred"


@dataclass(frozen=True)
class ContainmentRecord:
    """One (m, r) verdict: is the m-th symbolic power inside the r-th
    ordinary power? contained=None marks an indeterminate (resource-abort)
    verdict, which is distinct from a failure."""

    m: int
    r: int
    contained: bool | None
    witness: Polynomial | None
    method: str
    elapsed: float
    inferred: bool = False
    inferred_from: tuple | None = None
    note: str = ""

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.m, self.r)

    @property
    def failed(self) -> bool:
        return self.contained is False

    @property
    def indeterminate(self) -> bool:
        return self.contained is None


@dataclass
class GridReport:
    """All (m, r) records over [1..M] x [1..R] plus the derived bound."""

    max_m: int
    max_r: int
    records: dict
    rho_lower_bound: Fraction | None
    indeterminate_count: int
    consistent_upper_witnessed: bool | None  # None when no reference supplied

    def cell(self, m: int, r: int) -> ContainmentRecord:
        return self.records[(m, r)]

    def failing(self):
        return [rec for rec in self.records.values() if rec.failed]

    def recompute_lower_bound(self) -> Fraction | None:
        ratios = [rec.ratio for rec in self.failing()]
        return max(ratios) if ratios else None

    def monotonicity_violations(self):
        """Dominance violations; a nonempty result is an engine defect.

        Containment must persist as m grows (same r), failure must persist
        as r grows (same m). Indeterminate cells are skipped.
        """
        bad = []
        for r in range(1, self.max_r + 1):
            for m in range(1, self.max_m):
                a, b = self.records[(m, r)], self.records[(m + 1, r)]
                if a.contained is True and b.contained is False:
                    bad.append(((m, r), (m + 1, r)))
        for m in range(1, self.max_m + 1):
            for r in range(1, self.max_r):
                a, b = self.records[(m, r)], self.records[(m, r + 1)]
                if a.contained is False and b.contained is True:
                    bad.append(((m, r), (m, r + 1)))
        return bad


@dataclass(frozen=True)
class BoundRow:
    label: str
    value: str
    rule: str
    source: str = ""


@dataclass
class BoundSheet:
    """Closed-form resurgence bounds derived from user-supplied component
    values; each row records the rule it came from, and sources are
    whatever provenance text the user attached to the inputs."""

    rho_components: dict = field(default_factory=dict)
    rhoa_components: dict = field(default_factory=dict)
    sources: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)

    def add_component(self, name, rho=None, rhoa=None, source=""):
        if rho is not None:
            self.rho_components[name] = Fraction(rho)
        if rhoa is not None:
            self.rhoa_components[name] = Fraction(rhoa)
        if source:
            self.sources[name] = source

    def _source_text(self, *names):
        return "; ".join(self.sources[n] for n in names if n in self.sources)

    def derive_sum(self, name_a: str, name_b: str):
        if name_a in self.rhoa_components and name_b in self.rhoa_components:
            val = rhoa_of_sum(
                self.rhoa_components[name_a], self.rhoa_components[name_b]
            )
            self.rows.append(
                BoundRow(
                    "rhoa(%s + %s)" % (name_a, name_b),
                    str(val),
                    "max rule for the asymptotic resurgence of a sum",
                    self._source_text(name_a, name_b),
                )
            )
        if name_a in self.rho_components and name_b in self.rho_components:
            lo, hi = rho_bounds_of_sum(
                self.rho_components[name_a], self.rho_components[name_b]
            )
            self.rows.append(
                BoundRow(
                    "rho(%s + %s)" % (name_a, name_b),
                    "[%s, %s]" % (lo, hi),
                    "max lower bound and additive upper bound for a sum",
                    self._source_text(name_a, name_b),
                )
            )

    def derive_kfold(self, h: int, r: int, k: int, name: str = "I"):
        val = kfold_lower_bound(h, r, k)
        self.rows.append(
            BoundRow(
                "rho(%s^[%d])" % (name, k),
                ">= %s" % val,
                "k-fold witness bound k*h / (k*(r-1)+1) from a "
                "non-containment at (h, r) = (%d, %d)" % (h, r),
                self._source_text(name),
            )
        )


# ---------------------------------------------------------------------------
# Closed-form calculators
# ---------------------------------------------------------------------------

def kfold_lower_bound(h: int, r: int, k: int) -> Fraction:
    """Exact rational k*h / (k*(r-1) + 1)."""
    if h < 1 or r < 1 or k < 1:
        raise PreconditionError("kfold_lower_bound needs h, r, k >= 1")
    return Fraction(k * h, k * (r - 1) + 1)


def _as_resurgence(value) -> Fraction:
    v = Fraction(value)
    if v < 1:
        raise PreconditionError(
            "resurgence values of proper nonzero ideals are >= 1, got %s" % v
        )
    return v


def rhoa_of_sum(a, b) -> Fraction:
    """Asymptotic resurgence of a sum of extensions: max of the parts."""
    return max(_as_resurgence(a), _as_resurgence(b))


def rho_bounds_of_sum(a, b):
    """Interval [max(a, b), a + b] bounding the resurgence of the sum."""
    a, b = _as_resurgence(a), _as_resurgence(b)
    return (max(a, b), a + b)


# ---------------------------------------------------------------------------
# Membership with method selection
# ---------------------------------------------------------------------------

def _membership(f: Polynomial, target: Ideal, method: str, config: EngineConfig):
    """(verdict, method actually used); auto prefers the Macaulay route when
    everything is homogeneous, no basis is cached yet, and the matrix fits."""
    if method == METHOD_GROEBNER:
        return ideal_membership(f, target, config=config), METHOD_GROEBNER
    homogeneous = f.is_homogeneous() and all(
        g.is_homogeneous() for g in target.generators
    )
    if method == METHOD_GRADED:
        if not homogeneous:
            raise PreconditionError("the graded method needs homogeneous input")
        if not f.terms:
            return True, METHOD_GRADED
        d = f.total_degree()
        return graded_membership(f, target, d, config), METHOD_GRADED
    # auto
    if homogeneous and f.terms and not target.has_cached_basis():
        try:
            d = f.total_degree()
            return graded_membership(f, target, d, config), METHOD_GRADED
        except MacaulaySizeError:
            pass
    return ideal_membership(f, target, config=config), METHOD_GROEBNER


def _subject_ideal(subject, config: EngineConfig) -> Ideal:
    if isinstance(subject, PointSet):
        return subject.defining_ideal(config)
    if isinstance(subject, Ideal):
        return subject
    raise PreconditionError("subject must be a PointSet or a radical Ideal")


def _subject_symbolic(subject, m: int, config: EngineConfig) -> Ideal:
    if isinstance(subject, PointSet):
        return subject.symbolic_power(m, config)
    return symbolic_power_saturation(subject, m, config)


def symbolic_containment_check(
    subject,
    m: int,
    r: int,
    *,
    ideal: Ideal | None = None,
    ordinary_power: Ideal | None = None,
    method: str = "auto",
    config: EngineConfig = DEFAULT_CONFIG,
) -> ContainmentRecord:
    """Is the m-th symbolic power of the subject inside its r-th ordinary
    power? On failure the witness is the first failing generator of the
    symbolic power in canonical order. Resource aborts yield an
    indeterminate record rather than an exception."""
    if m < 1 or r < 1:
        raise PreconditionError("containment checks need m, r >= 1")
    start = time.monotonic()
    base = ideal if ideal is not None else _subject_ideal(subject, config)
    try:
        symbolic = _subject_symbolic(subject, m, config)
        target = (
            ordinary_power if ordinary_power is not None else ideal_power(base, r)
        )
        used = method if method != "auto" else None
        for g in symbolic.generators:
            verdict, used_now = _membership(g, target, method, config)
            used = used or used_now
            if not verdict:
                return ContainmentRecord(
                    m, r, False, g, used_now, time.monotonic() - start
                )
        return ContainmentRecord(
            m, r, True, None, used or METHOD_GROEBNER, time.monotonic() - start
        )
    except ResourceLimitError as exc:
        return ContainmentRecord(
            m,
            r,
            None,
            None,
            method if method != "auto" else METHOD_GROEBNER,
            time.monotonic() - start,
            note=str(exc),
        )


def resurgence_grid(
    subject,
    max_m: int,
    max_r: int,
    *,
    ideal: Ideal | None = None,
    method: str = "auto",
    rho_reference=None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> GridReport:
    """Evaluate the full (m, r) table with dominance pruning.

    Cells are scanned column by column (r ascending, then m ascending).
    A computed containment marks the rest of its column inferred-contained;
    a computed failure marks the rest of its row inferred-failed. Inferred
    cells carry the coordinates of the computed cell they came from.
    Indeterminate cells never infer anything and never join the bound.
    """
    if max_m < 1 or max_r < 1:
        raise PreconditionError("grids need M, R >= 1")
    base = ideal if ideal is not None else _subject_ideal(subject, config)
    powers = {}

    def power_of(r):
        if r not in powers:
            powers[r] = ideal_power(base, r)
        return powers[r]

    records = {}
    inferred = {}  # (m, r) -> (contained flag, origin cell)
    for r in range(1, max_r + 1):
        for m in range(1, max_m + 1):
            if (m, r) in inferred:
                flag, origin = inferred[(m, r)]
                records[(m, r)] = ContainmentRecord(
                    m, r, flag, None, METHOD_INFERRED, 0.0,
                    inferred=True, inferred_from=origin,
                )
                continue
            rec = symbolic_containment_check(
                subject,
                m,
                r,
                ideal=base,
                ordinary_power=power_of(r),
                method=method,
                config=config,
            )
            records[(m, r)] = rec
            if rec.contained is True:
                for m2 in range(m + 1, max_m + 1):
                    if (m2, r) not in records:
                        inferred.setdefault((m2, r), (True, (m, r)))
            elif rec.contained is False:
                for r2 in range(r + 1, max_r + 1):
                    if (m, r2) not in records:
                        inferred.setdefault((m, r2), (False, (m, r)))
    ratios = [rec.ratio for rec in records.values() if rec.failed]
    bound = max(ratios) if ratios else None
    indeterminate = sum(1 for rec in records.values() if rec.indeterminate)
    consistent = None
    if rho_reference is not None:
        ref = Fraction(rho_reference)
        consistent = all(ratio <= ref for ratio in ratios)
    return GridReport(max_m, max_r, records, bound, indeterminate, consistent)


def witness_integrity(
    subject,
    record: ContainmentRecord,
    *,
    ideal: Ideal | None = None,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Re-verify a failing record by both routes where feasible.

    The witness must lie in the symbolic power and outside the ordinary
    power; both facts are re-checked with the Groebner route and, when the
    input is homogeneous and fits, with the graded route as well.
    """
    if record.contained is not False or record.witness is None:
        raise PreconditionError("witness integrity applies to failing records")
    w = record.witness
    base = ideal if ideal is not None else _subject_ideal(subject, config)
    symbolic = _subject_symbolic(subject, record.m, config)
    target = ideal_power(base, record.r)
    if not ideal_membership(w, symbolic, config=config):
        return False
    if ideal_membership(w, target, config=config):
        return False
    if w.is_homogeneous() and all(g.is_homogeneous() for g in target.generators):
        try:
            d = w.total_degree()
            if not graded_membership(w, symbolic, d, config):
                return False
            if graded_membership(w, target, d, config):
                return False
        except MacaulaySizeError:
            pass
    return True


# ---------------------------------------------------------------------------
# Verifiers for the structural statements
# ---------------------------------------------------------------------------

def verify_union_groebner(
    q: Ideal,
    h: Ideal,
    order_q: TermOrder | None = None,
    order_h: TermOrder | None = None,
    *,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Compute bases of q and h in their own rings, unite them in the
    two-block product ring, and re-check every S-pair reduces to zero
    under the combined order. True means the union is a basis of the sum;
    False is a defect signal."""
    if q.is_zero or h.is_zero:
        return True
    order_q = order_q or q.context.order
    order_h = order_h or h.context.order
    gq = q.groebner_basis(order_q, config)
    gh = h.groebner_basis(order_h, config)
    combined, map_q, map_h = fiber_sum(q, h)
    target = combined.context
    union = [map_q.apply(g) for g in gq.elements]
    union += [map_h.apply(g) for g in gh.elements]
    block_order = TermOrder.block(target.blocks, (order_q, order_h))
    return verify_spair_reduction(union, block_order, config)


def product_witness_check(
    f: Polynomial,
    g: Polynomial,
    ideal_a: Ideal,
    ideal_b: Ideal,
    r: int,
    s: int,
    *,
    method: str = "auto",
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Membership verdict for f*g in the (r+s-1)-st power of the fiber sum.

    The preconditions f not in ideal_a^r and g not in ideal_b^s are
    machine-checked first (violations raise, they are not a False). The
    expected verdict is False; True contradicts the product-witness
    statement and should be treated as a defect signal.
    """
    if r < 1 or s < 1:
        raise PreconditionError("powers r, s must be >= 1")
    if f.context != ideal_a.context or g.context != ideal_b.context:
        raise ContextMismatchError("witnesses must live in their ideals' rings")
    if ideal_membership(f, ideal_power(ideal_a, r), config=config):
        raise PreconditionError("precondition failed: f lies in the r-th power")
    if ideal_membership(g, ideal_power(ideal_b, s), config=config):
        raise PreconditionError("precondition failed: g lies in the s-th power")
    combined, map_a, map_b = fiber_sum(ideal_a, ideal_b)
    product = map_a.apply(f) * map_b.apply(g)
    target = ideal_power(combined, r + s - 1)
    verdict, _ = _membership(product, target, method, config)
    return verdict


def kfold_noncontainment(
    subject,
    witness: Polynomial,
    h: int,
    r: int,
    k: int,
    *,
    ideal: Ideal | None = None,
    method: str = "auto",
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Certify the k-fold jump: with witness in I^(h) minus I^r, the
    product of one witness copy per block must avoid the k*(r-1)+1 power
    of the k-fold ideal. True certifies rho >= k*h / (k*(r-1)+1); False is
    a defect signal."""
    if witness is None:
        raise PreconditionError("a witness polynomial is required")
    if h < 1 or r < 1 or k < 1:
        raise PreconditionError("kfold_noncontainment needs h, r, k >= 1")
    base = ideal if ideal is not None else _subject_ideal(subject, config)
    if witness.context != base.context:
        raise ContextMismatchError("witness lives in a different ring")
    symbolic = _subject_symbolic(subject, h, config)
    if not ideal_membership(witness, symbolic, config=config):
        raise PreconditionError("precondition failed: witness not in the symbolic power")
    if ideal_membership(witness, ideal_power(base, r), config=config):
        raise PreconditionError("precondition failed: witness lies in the ordinary power")
    if k == 1:
        return True  # the verified precondition is already the statement
    folded = kfold(base, k)
    product = None
    for i in range(k):
        copy = ProductRingMap(base.context, folded.context, i).apply(witness)
        product = copy if product is None else product * copy
    target = ideal_power(folded, k * (r - 1) + 1)
    verdict, _ = _membership(product, target, method, config)
    return not verdict


def verify_binomial_expansion(
    points_a: PointSet,
    points_b: PointSet,
    h: int,
    *,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Check the symbolic-power binomial expansion of a fiber sum of two
    point configurations at exponent h.

    The left side is realized as the fat-point ideal of the pair
    configuration (the meet over all point pairs of the h-th power of the
    pair's prime); the right side is the sum over k of products of the
    k-th and (h-k)-th symbolic powers, extended to the product ring.
    """
    if h < 1:
        raise PreconditionError("the expansion needs h >= 1")
    sum_ideal, map_a, map_b = fiber_sum(
        points_a.defining_ideal(config), points_b.defining_ideal(config)
    )
    target = sum_ideal.context
    left = None
    for p in points_a.points:
        for q in points_b.points:
            pair_prime = ideal_sum(
                map_a.apply_ideal(point_ideal(points_a.context, p)),
                map_b.apply_ideal(point_ideal(points_b.context, q)),
            )
            power = ideal_power(pair_prime, h)
            left = power if left is None else intersect(left, power, config)
    right = Ideal(target, ())
    unit = Ideal(target, (target.one,))
    for k in range(h + 1):
        part_a = unit if k == 0 else map_a.apply_ideal(points_a.symbolic_power(k, config))
        part_b = unit if k == h else map_b.apply_ideal(points_b.symbolic_power(h - k, config))
        right = ideal_sum(right, ideal_product(part_a, part_b))
    return ideal_equal(left, right, config)
