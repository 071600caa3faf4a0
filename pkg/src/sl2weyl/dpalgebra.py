"""Divided-power polynomial algebra in m variables over the rationals or a
prime field.

Elements are kept in reduced exponent-vector form, so the defining relations
between divided powers of one variable hold by construction: multiplying two
monomials just adds exponent vectors and picks up the structure constant
prod_i C(a_i + b_i, a_i), which may vanish in positive characteristic.

Two monomial orders are provided.  DPLEX compares exponent vectors
lexicographically with x_0 the most significant variable (larger exponent at
the smallest differing index wins).  DPDEGREVLEX grades by total degree and
breaks ties so that the smaller exponent at the largest differing index wins.
Both are total, multiplicative well-orders with 1 minimal.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoeffRing:
    """char == 0 means the rationals, otherwise the prime field F_char."""

    char: int = 0

    def __post_init__(self):
        if self.char and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")

    def convert(self, c):
        if self.char:
            if isinstance(c, Fraction):
                den = c.denominator % self.char
                if den == 0:
                    raise ZeroDivisionError("denominator not invertible mod p")
                return c.numerator * pow(den, -1, self.char) % self.char
            return c % self.char
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def add(self, a, b):
        return (a + b) % self.char if self.char else self.convert(a + b)

    def mul(self, a, b):
        return (a * b) % self.char if self.char else self.convert(a * b)

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if self.char:
            return pow(a, -1, self.char)
        return Fraction(1, 1) / Fraction(a)

    def __str__(self):
        return f"F_{self.char}" if self.char else "QQ"


RATIONALS = CoeffRing(0)


def prime_field(p: int) -> CoeffRing:
    return CoeffRing(p)


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by base-p digits (Lucas)."""
    if k < 0 or k > n:
        return 0
    r = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        r = r * comb(nd, kd) % p
        n //= p
        k //= p
    return r


def ring_binom(ring: CoeffRing, n: int, k: int):
    return binom_mod_p(n, k, ring.char) if ring.char else comb(n, k)


# ---------------------------------------------------------------------------
# monomials: plain exponent tuples

Mono = tuple  # tuple[int, ...]


def mono_degree(a: Mono) -> int:
    return sum(a)


def mono_weight(a: Mono) -> int:
    return sum(i * e for i, e in enumerate(a))


def mono_mul(a: Mono, b: Mono, ring: CoeffRing):
    """(structure constant, a+b).  The constant is prod_i C(a_i+b_i, a_i)."""
    if len(a) != len(b):
        raise ValueError("variable count mismatch")
    c = 1
    for x, y in zip(a, b):
        if x and y:
            c *= ring_binom(ring, x + y, x)
            if c == 0:
                break
    return ring.convert(c), tuple(x + y for x, y in zip(a, b))


def try_divide(target: Mono, divisor: Mono, ring: CoeffRing):
    """(target - divisor, c) with mono_mul(quotient, divisor) = (c, target),
    or None when divisor does not divide target with a unit-free nonzero
    constant prod_i C(target_i, divisor_i)."""
    if len(target) != len(divisor):
        raise ValueError("variable count mismatch")
    if any(t < d for t, d in zip(target, divisor)):
        return None
    c = 1
    for t, d in zip(target, divisor):
        if d:
            c *= ring_binom(ring, t, d)
            if c == 0:
                return None
    return tuple(t - d for t, d in zip(target, divisor)), ring.convert(c)


class MonomialOrder(enum.Enum):
    DPLEX = "dplex"
    DPDEGREVLEX = "dpdegrevlex"

    def key(self, a: Mono):
        if self is MonomialOrder.DPLEX:
            return a
        return (sum(a), tuple(-e for e in reversed(a)))


def compare(order: MonomialOrder, a: Mono, b: Mono) -> int:
    if len(a) != len(b):
        raise ValueError("variable count mismatch")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# sparse polynomials


class DPoly:
    """Finitely supported map from divided-power monomials to coefficients."""

    __slots__ = ("ring", "m", "terms")

    def __init__(self, ring: CoeffRing, m: int, terms=None):
        self.ring = ring
        self.m = m
        self.terms = {}
        for mono, c in (terms or {}).items():
            if len(mono) != m:
                raise ValueError("monomial length mismatch")
            c = ring.convert(c)
            if c:
                self.terms[mono] = c

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring, m):
        return cls(ring, m)

    @classmethod
    def monomial(cls, ring, m, mono, coeff=1):
        return cls(ring, m, {tuple(mono): coeff})

    @classmethod
    def variable(cls, ring, m, i, power=1):
        mono = tuple(power if j == i else 0 for j in range(m))
        return cls(ring, m, {mono: 1})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def leading_monomial(self, order: MonomialOrder) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    def degrees(self) -> set[int]:
        return {mono_degree(a) for a in self.terms}

    def weights(self) -> set[int]:
        return {mono_weight(a) for a in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1 and len(self.weights()) <= 1

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring or self.m != other.m:
            raise ValueError("ring or variable count mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for mono, c in other.terms.items():
            t[mono] = t.get(mono, 0) + c
        return DPoly(self.ring, self.m, t)

    def __neg__(self):
        return DPoly(self.ring, self.m, {a: self.ring.neg(c) for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.convert(c)
        return DPoly(self.ring, self.m, {a: self.ring.mul(v, c) for a, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        t = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                s, mono = mono_mul(a, b, self.ring)
                if s:
                    t[mono] = t.get(mono, 0) + ca * cb * s
        return DPoly(self.ring, self.m, t)

    def mono_shift(self, mono: Mono):
        """Product with a single monomial (structure constants applied)."""
        t = {}
        for a, c in self.terms.items():
            s, prod = mono_mul(a, mono, self.ring)
            if s:
                t[prod] = t.get(prod, 0) + c * s
        return DPoly(self.ring, self.m, t)

    def to_ring(self, ring: CoeffRing) -> "DPoly":
        return DPoly(ring, self.m, dict(self.terms))

    def __eq__(self, other):
        return (
            isinstance(other, DPoly)
            and self.ring == other.ring
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.m, frozenset(self.terms.items())))

    def __str__(self):
        return format_dpoly(self)

    def __repr__(self):
        return f"DPoly({self.ring}, m={self.m}, {format_dpoly(self)})"


def format_monomial(a: Mono, divided: bool = True) -> str:
    bits = []
    for i, e in enumerate(a):
        if e == 0:
            continue
        if e == 1:
            bits.append(f"x{i}")
        elif divided:
            bits.append(f"x{i}^({e})")
        else:
            bits.append(f"x{i}^{e}")
    return "*".join(bits) if bits else "1"


def format_dpoly(f: DPoly) -> str:
    if not f.terms:
        return "0"
    bits = []
    for mono in sorted(f.terms, key=MonomialOrder.DPLEX.key, reverse=True):
        c = f.terms[mono]
        mtxt = format_monomial(mono)
        if c == 1 and mtxt != "1":
            term = mtxt
        elif c == -1 and mtxt != "1" and not f.ring.char:
            term = f"-{mtxt}"
        else:
            term = f"{c}" if mtxt == "1" else f"{c}*{mtxt}"
        if bits and not term.startswith("-"):
            bits.append(f"+ {term}")
        elif bits:
            bits.append(f"- {term[1:]}")
        else:
            bits.append(term)
    return " ".join(bits)


_TERM_RE = re.compile(r"x(\d+)(?:\^(?:\((\d+)\)|(\d+)))?")


def parse_monomial(text: str, m: int):
    """Parse `x0^(2)*x2` style text; classic powers x0^2 mean the ordinary
    power and carry the factorial scalar.  Returns (mono, int scalar)."""
    mono = [0] * m
    scalar = 1
    for factor in text.split("*"):
        factor = factor.strip()
        if factor in ("", "1"):
            continue
        mm = _TERM_RE.fullmatch(factor)
        if not mm:
            raise ValueError(f"bad monomial factor {factor!r}")
        i = int(mm.group(1))
        if i >= m:
            raise ValueError(f"variable x{i} out of range for m={m}")
        if mm.group(2) is not None:  # divided power
            k, extra = int(mm.group(2)), 1
        elif mm.group(3) is not None:  # classic power: x^k = k! x^(k)
            k = int(mm.group(3))
            extra = 1
            for j in range(2, k + 1):
                extra *= j
        else:
            k, extra = 1, 1
        # combining with an existing power of the same variable multiplies by
        # the divided-power structure constant
        scalar *= extra * comb(mono[i] + k, k)
        mono[i] += k
    return tuple(mono), scalar


def parse_dpoly(text: str, m: int, ring: CoeffRing) -> DPoly:
    """Parse a signed sum of coefficient*monomial terms."""
    text = text.strip()
    if not text or text == "0":
        return DPoly.zero(ring, m)
    chunks = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    terms = {}
    for chunk in chunks:
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign, chunk = -1, chunk[1:]
        coeff = Fraction(1)
        parts = chunk.split("*")
        head = parts[0]
        if re.fullmatch(r"\d+(/\d+)?", head):
            coeff = Fraction(head)
            parts = parts[1:]
        mono, scalar = parse_monomial("*".join(parts), m) if parts else ((0,) * m, 1)
        terms[mono] = terms.get(mono, 0) + sign * coeff * scalar
    return DPoly(ring, m, terms)


def normal_form(f: DPoly, gens, order: MonomialOrder, with_cofactors: bool = False):
    """Reduce f against gens: repeatedly rewrite the order-greatest reducible
    term by the first generator (descending leading monomials, ties kept in
    the given sequence order) whose leading monomial divides it with a nonzero
    structure constant.  The result has no reducible term.

    With with_cofactors=True also returns [(gen index, multiplier monomial,
    coefficient)] such that f = result + sum coeff * (monomial * gen).
    """
    gens = list(gens)
    if any(g.is_zero() for g in gens):
        raise ValueError("generators must be nonzero")
    for g in gens:
        if g.ring != f.ring or g.m != f.m:
            raise ValueError("ring or variable count mismatch")
    ring = f.ring
    indexed = sorted(
        range(len(gens)),
        key=lambda i: order.key(gens[i].leading_monomial(order)),
        reverse=True,
    )
    lms = {i: gens[i].leading_monomial(order) for i in indexed}
    work = DPoly(ring, f.m, dict(f.terms))
    cofactors = []
    while True:
        fired = False
        for mono in sorted(work.terms, key=order.key, reverse=True):
            for i in indexed:
                q = try_divide(mono, lms[i], ring)
                if q is None:
                    continue
                quot, c = q
                lc = gens[i].terms[lms[i]]
                factor = (
                    work.terms[mono] * ring.inv(ring.mul(c, lc))
                    if ring.char
                    else Fraction(work.terms[mono]) / (Fraction(c) * Fraction(lc))
                )
                work = work - gens[i].mono_shift(quot).scale(factor)
                if with_cofactors:
                    cofactors.append((i, quot, ring.convert(factor)))
                fired = True
                break
            if fired:
                break
        if not fired:
            break
    return (work, cofactors) if with_cofactors else work
