"""Symmetric-function data over the rationals: Kostka numbers, the signed
multiplicities relating the forgotten and monomial bases, and normal forms in
the coinvariant algebra.

The coinvariant computations use the complete homogeneous polynomials
h_{m-r+1}(t_1, ..., t_r), 1 <= r <= m, which form a Groebner basis of the
ideal of positive-degree symmetric polynomials for the lexicographic order
with t_1 < t_2 < ... < t_m; the leading monomial of the r-th one is
t_r^(m-r+1).  Everything is integral: the basis is monic, so division never
leaves the integers.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from .partitions import Partition, dominates, enumerate_partitions


# ---------------------------------------------------------------------------
# transition numbers


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not lam else 0
    c = content[-1]
    if c == 0:
        return _kostka(lam, content[:-1])
    # peel a horizontal strip of size c carrying the largest entry
    total = 0
    for nu in _horizontal_substrips(lam, c):
        total += _kostka(nu, content[:-1])
    return total


def _horizontal_substrips(lam, size):
    """Shapes nu <= lam with lam/nu a horizontal strip of `size` cells."""
    k = len(lam)

    def rec(i, remaining, acc):
        if i == k:
            if remaining == 0:
                yield tuple(x for x in acc if x > 0)
            return
        below = lam[i + 1] if i + 1 < k else 0
        lo = max(below, lam[i] - remaining)
        # strip condition: nu_i >= lam_{i+1}
        for nu_i in range(lam[i], lo - 1, -1):
            if acc and nu_i > acc[-1]:
                continue
            acc.append(nu_i)
            yield from rec(i + 1, remaining - (lam[i] - nu_i), acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard Young tableaux of shape lam and content mu."""
    if lam.size != mu.size:
        return 0
    return _kostka(lam.parts, mu.parts)


def _multiset_weight(eta: tuple[int, ...]) -> int:
    """l(eta)! / prod_j m_j(eta)! -- the number of orderings of the parts."""
    w = factorial(len(eta))
    for v in set(eta):
        w //= factorial(eta.count(v))
    return w


def _sub_partitions(counts: dict[int, int], target: int):
    """Distinct sub-multisets of the given part multiset summing to target,
    yielded as dicts value -> chosen count."""
    values = sorted(counts, reverse=True)

    def rec(idx, remaining, acc):
        if remaining == 0:
            yield dict(acc)
            return
        if idx == len(values):
            return
        v = values[idx]
        top = min(counts[v], remaining // v)
        for c in range(top, -1, -1):
            if c:
                acc[v] = c
            yield from rec(idx + 1, remaining - c * v, acc)
            acc.pop(v, None)

    yield from rec(0, target, {})


def forgotten_coeff(lam: Partition, mu: Partition) -> int:
    """Signed multiplicity of the monomial basis element mu in the forgotten
    polynomial attached to lam:

        (-1)^(|mu| - l(lam)) * sum over sequences (eta^1, ..., eta^l(mu))
        with eta^i a partition of mu_i whose disjoint union is lam, of
        prod_i l(eta^i)! / prod_j m_j(eta^i)!

    Zero pads of mu force empty eta^i and do not change the value.  Returns 0
    when no sequence exists (in particular when |lam| != |mu|).
    """
    if lam.zeros or any(p <= 0 for p in lam.parts):
        raise ValueError("lam must have positive parts and no padding")
    if lam.size != mu.size:
        return 0
    parts = mu.parts  # pads dropped: they contribute empty factors
    counts0 = {v: lam.parts.count(v) for v in set(lam.parts)}

    def rec(i, counts):
        if i == len(parts):
            return 1 if not counts else 0
        total = 0
        for chosen in _sub_partitions(counts, parts[i]):
            eta = tuple(
                itertools.chain.from_iterable([v] * c for v, c in chosen.items())
            )
            rest = dict(counts)
            for v, c in chosen.items():
                rest[v] -= c
                if rest[v] == 0:
                    del rest[v]
            total += _multiset_weight(eta) * rec(i + 1, rest)
        return total

    s = rec(0, counts0)
    sign = -1 if (mu.size - lam.length) % 2 else 1
    return sign * s


# ---------------------------------------------------------------------------
# polynomials in t_1..t_r


class OPoly:
    """Sparse polynomial in t_1..t_r with exact integer coefficients."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict[tuple[int, ...], int] | None = None):
        self.r = r
        self.terms = {}
        for e, c in (terms or {}).items():
            if c:
                if len(e) != r:
                    raise ValueError("exponent length mismatch")
                self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def embed(self, r: int) -> "OPoly":
        if r < self.r:
            raise ValueError("cannot shrink variable count")
        pad = (0,) * (r - self.r)
        return OPoly(r, {e + pad: c for e, c in self.terms.items()})

    def __add__(self, other: "OPoly") -> "OPoly":
        if self.r != other.r:
            raise ValueError("variable count mismatch")
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return OPoly(self.r, t)

    def scale(self, c: int) -> "OPoly":
        return OPoly(self.r, {e: c * v for e, v in self.terms.items()})

    def __sub__(self, other: "OPoly") -> "OPoly":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, OPoly) and self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=_lex_key, reverse=True):
            mono = "*".join(
                f"t{i+1}" + (f"^{k}" if k > 1 else "")
                for i, k in enumerate(e)
                if k
            ) or "1"
            bits.append(f"{self.terms[e]}*{mono}")
        return " + ".join(bits)


def _lex_key(e: tuple[int, ...]) -> tuple[int, ...]:
    # lex with t_1 < t_2 < ... : the highest variable is most significant
    return tuple(reversed(e))


def _distinct_perms(vec):
    seen = set()
    for p in itertools.permutations(vec):
        if p not in seen:
            seen.add(p)
            yield p


def mono_sym(lam: Partition, r: int) -> OPoly:
    """Monomial symmetric polynomial of lam in r variables."""
    if r < 1:
        raise ValueError("need at least one variable")
    if lam.length > r:
        return OPoly(r)
    vec = lam.padded(max(r, lam.total_length))[:r]
    return OPoly(r, {p: 1 for p in _distinct_perms(vec)})


def complete_h(k: int, r: int) -> OPoly:
    """Complete homogeneous symmetric polynomial of degree k in r variables."""
    if r < 1:
        raise ValueError("need at least one variable")
    terms = {}
    for bars in itertools.combinations(range(k + r - 1), r - 1):
        prev, e = -1, []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(k + r - 2 - prev)
        terms[tuple(e)] = 1
    return OPoly(r, terms)


def schur_poly(lam: Partition, r: int) -> OPoly:
    """Schur polynomial in r variables: sum of K_{lam,mu} M_mu over mu
    dominated by lam (terms with more than r parts vanish)."""
    if lam.length > r:
        raise ValueError("shape longer than the variable count")
    if lam.size == 0:
        return OPoly(r, {(0,) * r: 1})
    out = OPoly(r)
    for mu in enumerate_partitions(lam.size, lam.largest, r):
        if dominates(lam, mu):
            out = out + mono_sym(mu, r).scale(kostka(lam, mu))
    return out


# ---------------------------------------------------------------------------
# coinvariant algebra


@lru_cache(maxsize=None)
def _coinvariant_basis(m: int):
    """[(r, lead exponent, h_{m-r+1}(t_1..t_r) embedded in m vars)]."""
    out = []
    for r in range(1, m + 1):
        h = complete_h(m - r + 1, r).embed(m)
        lead = max(h.terms, key=_lex_key)
        out.append((lead, h))
    return tuple(out)


def coinvariant_reduce(f: OPoly, m: int) -> OPoly:
    """Normal form of f modulo {h_{m-r+1}(t_1..t_r)} under lex, t_1 < ... < t_m.

    The result has no term divisible by any t_r^(m-r+1); it is zero exactly
    when f lies in the coinvariant ideal (the basis is a Groebner basis).
    """
    if f.r > m:
        raise ValueError("f uses more variables than the coinvariant algebra")
    work = dict(f.embed(m).terms)
    basis = _coinvariant_basis(m)
    while True:
        cand = None
        for e in work:
            for lead, h in basis:
                if all(e[i] >= lead[i] for i in range(m)):
                    if cand is None or _lex_key(e) > _lex_key(cand[0]):
                        cand = (e, lead, h)
                    break
        if cand is None:
            break
        e, lead, h = cand
        c = work[e]
        shift = tuple(e[i] - lead[i] for i in range(m))
        for he, hc in h.terms.items():
            key = tuple(shift[i] + he[i] for i in range(m))
            nv = work.get(key, 0) - c * hc
            if nv:
                work[key] = nv
            else:
                work.pop(key, None)
    return OPoly(m, work)


def schur_nonvanishing(lam: Partition, k: int, m: int) -> bool:
    """Whether the Schur polynomial of lam in k variables survives in the
    m-variable coinvariant algebra.  Under the stated hypotheses
    (lam_1 <= m-k and l(lam) <= k <= m) the answer is always True."""
    if not (lam.length <= k <= m):
        raise ValueError(f"need l(lam) <= k <= m, got l={lam.length}, k={k}, m={m}")
    if lam.largest > m - k:
        raise ValueError(f"need lam_1 <= m-k, got {lam.largest} > {m - k}")
    if k == 0:
        poly = OPoly(m, {(0,) * m: 1})  # the empty product
    else:
        poly = schur_poly(lam, k)
    return not coinvariant_reduce(poly, m).is_zero()
