"""Exact coefficient fields, monomials, term orders and polynomial arithmetic.

Coefficients are either integers reduced mod a prime p (prime fields) or
`fractions.Fraction` values (rationals); nothing here is ever floating
point. Monomials are plain tuples of non-negative exponents, one slot per
ring variable, so the hot loops in the Groebner engine can work on native
tuples and dicts. A Polynomial is an immutable wrapper around a
monomial -> nonzero coefficient dict tied to a RingContext.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    ContextMismatchError,
    NoRootOfUnityError,
    PreconditionError,
    ZeroPolynomialError,
)

NEG_INFINITY = float("-inf")  # degree of the zero polynomial

_PRIME_LIMIT = 1 << 63


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n < 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A coefficient field: GF(p) for a prime p, or the rationals."""

    kind: str  # "prime" | "rationals"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "prime":
            p = self.characteristic
            if p >= _PRIME_LIMIT:
                raise PreconditionError("prime characteristic must be < 2^63")
            if not _is_prime(p):
                raise PreconditionError("characteristic %d is not prime" % p)
        elif self.kind == "rationals":
            if self.characteristic != 0:
                raise PreconditionError("rationals have characteristic 0")
        else:
            raise PreconditionError("unknown field kind %r" % (self.kind,))

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec("prime", p)

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("rationals")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    # Element protocol: prime-field elements are ints in [0, p); rational
    # elements are Fractions. normalize() is the single entry point that
    # coerces int/Fraction literals into that representation.
    def normalize(self, value):
        if self.kind == "prime":
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return value.numerator % self.characteristic
                return (
                    value.numerator
                    * self.inv(value.denominator % self.characteristic)
                ) % self.characteristic
            return int(value) % self.characteristic
        return Fraction(value)

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.characteristic if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.characteristic if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.characteristic if self.kind == "prime" else a * b

    def neg(self, a):
        return (-a) % self.characteristic if self.kind == "prime" else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.kind == "prime":
            return pow(a, self.characteristic - 2, self.characteristic)
        return Fraction(1) / a

    def element_text(self, a) -> str:
        if self.kind == "prime":
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)

    def __str__(self):
        return "GF(%d)" % self.characteristic if self.kind == "prime" else "QQ"


def find_root_of_unity(field: FieldSpec, n: int):
    """Smallest prime-field element of multiplicative order exactly n.

    Requires p = 1 (mod n) so that n distinct n-th roots of unity exist
    (the n = 1 case degenerates to 1 over any field).
    """
    if n < 1:
        raise PreconditionError("order n must be >= 1")
    if n == 1:
        return field.one
    if field.kind == "rationals":
        if n == 2:
            return Fraction(-1)
        raise NoRootOfUnityError("the rationals contain no %d-th roots of unity" % n)
    p = field.characteristic
    if (p - 1) % n != 0:
        raise NoRootOfUnityError("GF(%d) has no element of order %d" % (p, n))
    prime_divisors = []
    m, q = n, 2
    while q * q <= m:
        if m % q == 0:
            prime_divisors.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        prime_divisors.append(m)
    for a in range(2, p):
        if pow(a, n, p) != 1:
            continue
        if all(pow(a, n // q, p) != 1 for q in prime_divisors):
            return a
    raise NoRootOfUnityError("GF(%d) has no element of order %d" % (p, n))


# ---------------------------------------------------------------------------
# Monomials: tuples of exponents. Kept as free functions on tuples so the
# division loops pay no attribute/dispatch cost.
# ---------------------------------------------------------------------------

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when a | b, i.e. every exponent of a is <= that of b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(b: tuple, a: tuple) -> tuple:
    """Quotient b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, d: int):
    """Yield all exponent tuples of total degree d, lexicographically."""
    if nvars == 1:
        yield (d,)
        return
    # Stars and bars via combinations of bar positions.
    for bars in combinations(range(d + nvars - 1), nvars - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + nvars - 2 - prev)
        yield tuple(exps)


# ---------------------------------------------------------------------------
# Term orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """A total multiplicative order on monomials of a fixed arity.

    kind is "lex", "grevlex" or "block". A block order carries an ordered
    partition of the variable indices plus one sub-order per block; any
    monomial with support in an earlier block beats every monomial
    supported only in later blocks. key() maps a monomial to a flat int
    tuple that sorts in the same direction as the order, so comparisons in
    hot loops are native tuple comparisons.
    """

    kind: str
    nvars: int
    groups: tuple = ()  # block kind only: tuple of tuples of variable indices
    subs: tuple = ()    # block kind only: one TermOrder per group

    @staticmethod
    def lex(nvars: int) -> "TermOrder":
        return TermOrder("lex", nvars)

    @staticmethod
    def grevlex(nvars: int) -> "TermOrder":
        return TermOrder("grevlex", nvars)

    @staticmethod
    def block(groups, subs) -> "TermOrder":
        groups = tuple(tuple(g) for g in groups)
        subs = tuple(subs)
        if len(groups) != len(subs):
            raise PreconditionError("one sub-order per block is required")
        seen = [i for g in groups for i in g]
        if sorted(seen) != list(range(len(seen))):
            raise PreconditionError("blocks must partition the variable indices")
        for g, sub in zip(groups, subs):
            if sub.nvars != len(g):
                raise ContextMismatchError("sub-order arity differs from its block")
            if sub.kind == "block":
                raise PreconditionError("nested block orders are not supported")
        return TermOrder("block", len(seen), groups, subs)

    @staticmethod
    def elimination(first: tuple, nvars: int, inner: str = "grevlex") -> "TermOrder":
        """Block order that eliminates the variables listed in `first`."""
        rest = tuple(i for i in range(nvars) if i not in set(first))
        make = TermOrder.grevlex if inner == "grevlex" else TermOrder.lex
        return TermOrder.block(
            (tuple(first), rest), (make(len(first)), make(len(rest)))
        )

    def key(self, mono: tuple) -> tuple:
        """Flat integer tuple, increasing with the order."""
        kind = self.kind
        if kind == "grevlex":
            return (sum(mono),) + tuple(-e for e in reversed(mono))
        if kind == "lex":
            return mono
        parts = []
        for g, sub in zip(self.groups, self.subs):
            parts.extend(sub.key(tuple(mono[i] for i in g)))
        return tuple(parts)

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        if self.kind != "block":
            return self.kind
        return "block(%s)" % ", ".join(str(s) for s in self.subs)


def monomial_compare(a: tuple, b: tuple, order: TermOrder) -> int:
    """-1, 0 or 1 as a <, = or > b under the order."""
    if len(a) != len(b) or len(a) != order.nvars:
        raise ContextMismatchError(
            "monomial arity %d/%d does not match order arity %d"
            % (len(a), len(b), order.nvars)
        )
    return order.compare(a, b)


# ---------------------------------------------------------------------------
# Ring contexts
# ---------------------------------------------------------------------------

class RingContext:
    """A polynomial ring: field, named variables, ordered variable blocks.

    Plain rings have one block; a k-fold product ring has k blocks, and
    its ambient order is the block order combining per-block sub-orders
    (earlier blocks dominate). Contexts compare by value and are
    immutable, so they are safe to share between threads.
    """

    __slots__ = ("field", "variables", "blocks", "order", "_var_index")

    def __init__(self, field: FieldSpec, variables, blocks=None, order: str | TermOrder = "grevlex"):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PreconditionError("variable names must be unique")
        if not variables:
            raise PreconditionError("a ring needs at least one variable")
        if blocks is None:
            blocks = (tuple(range(len(variables))),)
        else:
            blocks = tuple(tuple(b) for b in blocks)
            flat = sorted(i for b in blocks for i in b)
            if flat != list(range(len(variables))):
                raise PreconditionError("blocks must partition the variables")
        if isinstance(order, TermOrder):
            if order.nvars != len(variables):
                raise ContextMismatchError("order arity differs from variable count")
            ambient = order
        else:
            make = TermOrder.grevlex if order == "grevlex" else TermOrder.lex
            if len(blocks) == 1:
                ambient = make(len(variables))
            else:
                ambient = TermOrder.block(blocks, tuple(make(len(b)) for b in blocks))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "order", ambient)
        object.__setattr__(self, "_var_index", {v: i for i, v in enumerate(variables)})

    def __setattr__(self, name, value):
        raise AttributeError("RingContext is immutable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self._var_index[name]
        except KeyError:
            raise PreconditionError("unknown variable %r" % name) from None

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.var_index(name)] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self) -> tuple:
        return tuple(self.variable(v) for v in self.variables)

    def const(self, value) -> "Polynomial":
        c = self.field.normalize(value)
        return Polynomial(self, {} if c == 0 else {(0,) * self.nvars: c})

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.field == other.field
            and self.variables == other.variables
            and self.blocks == other.blocks
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.blocks, self.order))

    def __repr__(self):
        return "%s[%s]" % (self.field, ",".join(self.variables))


def _require_same_context(f: "Polynomial", g: "Polynomial") -> None:
    if f.context != g.context:
        raise ContextMismatchError(
            "operands live in %r and %r" % (f.context, g.context)
        )


class Polynomial:
    """Sparse exact polynomial: monomial tuple -> nonzero coefficient."""

    __slots__ = ("context", "terms")

    def __init__(self, context: RingContext, terms: dict, _checked: bool = False):
        object.__setattr__(self, "context", context)
        if not _checked:
            n = context.nvars
            clean = {}
            for mono, coeff in terms.items():
                if len(mono) != n or any(e < 0 for e in mono):
                    raise PreconditionError("bad exponent vector %r" % (mono,))
                c = context.field.normalize(coeff)
                if c != 0:
                    clean[tuple(mono)] = c
            terms = clean
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.context.const(other)
        _require_same_context(self, other)
        field = self.context.field
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = field.add(out.get(mono, field.zero), coeff)
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return Polynomial(self.context, out, _checked=True)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        field = self.context.field
        return Polynomial(
            self.context,
            {m: field.neg(c) for m, c in self.terms.items()},
            _checked=True,
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.context.const(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.context.const(other).__sub__(self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.context.field.normalize(other)
            if c == 0:
                return self.context.zero
            field = self.context.field
            return Polynomial(
                self.context,
                {m: field.mul(co, c) for m, co in self.terms.items()},
                _checked=True,
            )
        _require_same_context(self, other)
        field = self.context.field
        out: dict = {}
        if len(self.terms) > len(other.terms):
            longer, shorter = self.terms, other.terms
        else:
            longer, shorter = other.terms, self.terms
        for m1, c1 in shorter.items():
            for m2, c2 in longer.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                c = field.add(out.get(mono, field.zero), field.mul(c1, c2))
                if c == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = c
        return Polynomial(self.context, out, _checked=True)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise PreconditionError("negative polynomial powers are undefined")
        result = self.context.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def leading_term(self, order: TermOrder | None = None):
        """(monomial, coefficient) maximal under the order; errors on zero."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        order = order or self.context.order
        if order.nvars != self.context.nvars:
            raise ContextMismatchError("order arity differs from ring arity")
        key = order.key
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def leading_monomial(self, order: TermOrder | None = None) -> tuple:
        return self.leading_term(order)[0]

    def total_degree(self):
        """Max term degree; the zero polynomial gets the -infinity sentinel."""
        if not self.terms:
            return NEG_INFINITY
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degrees = {sum(m) for m in self.terms}
        return len(degrees) == 1

    def monic(self, order: TermOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        if lc == self.context.field.one:
            return self
        inv = self.context.field.inv(lc)
        return self * inv

    def coefficient(self, mono: tuple):
        return self.terms.get(tuple(mono), self.context.field.zero)

    def sorted_terms(self, order: TermOrder | None = None, reverse: bool = True):
        order = order or self.context.order
        key = order.key
        return sorted(self.terms.items(), key=lambda kv: key(kv[0]), reverse=reverse)

    def to_text(self) -> str:
        """Canonical text: terms in decreasing ambient order, ^ powers, * products."""
        if not self.terms:
            return "0"
        field = self.context.field
        names = self.context.variables
        pieces = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            sign = ""
            if field.kind == "rationals" and coeff < 0:
                sign, coeff = "-", -coeff
            coeff_text = field.element_text(coeff)
            if factors and coeff == field.one:
                body = "*".join(factors)
            elif factors:
                body = coeff_text + "*" + "*".join(factors)
            else:
                body = coeff_text
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign else "") + first_body
        for sign, body in pieces[1:]:
            out += " - " + body if sign else " + " + body
        return out

    def __repr__(self):
        return self.to_text()


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g
