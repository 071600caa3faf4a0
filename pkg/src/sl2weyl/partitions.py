"""Integer partitions with explicit zero padding, their orders, and the
stretch/level constructions used to locate leading monomials.

A partition is a weakly decreasing sequence of positive integers; we keep an
explicit count of trailing zero parts because several formulas pad partitions
to a prescribed length before comparing them.  All comparisons pad both sides
to a common total length first, so they are padding-stable.

Reverse lexicographic convention (pinned here once and for all): comparing the
zero-padded part sequences front to back, the partition with the SMALLER part
at the first differing index is the greater one.  This is the unique choice
under which (a) dominance refines revlex the right way round (mu dominating
lam forces mu <= lam in revlex), (b) the stretching algorithm below computes
the revlex-least partition above its input, and (c) comparing x^(lam) against
x^(mu) in the graded reverse lexicographic monomial order agrees with
comparing lam against mu here.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Partition:
    """Positive parts (weakly decreasing) plus a count of explicit zero pads."""

    parts: tuple[int, ...] = ()
    zeros: int = 0

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive; encode zeros in `zeros`")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        if self.zeros < 0:
            raise ValueError("zeros must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total_length(self) -> int:
        return len(self.parts) + self.zeros

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to i (i = 0 counts the explicit pads)."""
        if i == 0:
            return self.zeros
        return sum(1 for p in self.parts if p == i)

    def multiplicities(self, upto: int) -> tuple[int, ...]:
        """(m_1, ..., m_upto) as a fixed-length vector."""
        out = [0] * upto
        for p in self.parts:
            if p <= upto:
                out[p - 1] += 1
        return tuple(out)

    def padded(self, n: int) -> tuple[int, ...]:
        """Part sequence extended by zeros to length n (n >= total_length)."""
        if n < self.total_length:
            raise ValueError(f"cannot pad to length {n} < {self.total_length}")
        return self.parts + (0,) * (n - len(self.parts))

    def strip_zeros(self) -> "Partition":
        return Partition(self.parts, 0)

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def make_partition(values) -> Partition:
    """Sort values decreasingly, splitting zeros into the padding counter."""
    vals = list(values)
    if any(v < 0 for v in vals):
        raise ValueError(f"negative part in {vals!r}")
    vals.sort(reverse=True)
    nz = sum(1 for v in vals if v == 0)
    return Partition(tuple(v for v in vals if v > 0), nz)


def parse_partition(text: str) -> Partition:
    """Parse "3,1,1" or "3,1,1|+2z"; "-" or "" is the empty partition."""
    text = text.strip()
    zeros = 0
    if "|" in text:
        text, pad = text.split("|", 1)
        mm = re.fullmatch(r"\+(\d+)z", pad.strip())
        if not mm:
            raise ValueError(f"bad padding suffix {pad!r}")
        zeros = int(mm.group(1))
    text = text.strip()
    if text in ("", "-"):
        p = EMPTY
    else:
        try:
            p = make_partition(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition text {text!r}: {exc}") from None
    return Partition(p.parts, p.zeros + zeros)


def format_partition(p: Partition) -> str:
    body = ",".join(str(x) for x in p.parts) if p.parts else "-"
    return body + (f"|+{p.zeros}z" if p.zeros else "")


def transpose(lam: Partition) -> Partition:
    """Conjugate partition (rows and columns of the Ferrers diagram swapped)."""
    if lam.zeros:
        raise ValueError("transpose requires an unpadded partition")
    if not lam.parts:
        return EMPTY
    cols = tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))
    return Partition(cols, 0)


def dominates(mu: Partition, lam: Partition) -> bool:
    """True iff mu >= lam in dominance order (prefix sums of mu at least
    those of lam).  Partitions of different sizes are never comparable."""
    if mu.size != lam.size:
        return False
    n = max(mu.length, lam.length)
    a = mu.padded(max(n, mu.total_length))
    b = lam.padded(max(n, lam.total_length))
    sa = sb = 0
    for j in range(n):
        sa += a[j] if j < len(a) else 0
        sb += b[j] if j < len(b) else 0
        if sa < sb:
            return False
    return True


def cmp_revlex(lam: Partition, mu: Partition) -> int:
    """-1, 0, or 1 as lam <, =, > mu in reverse lexicographic order.

    Both sides are padded to a common length; the smaller part at the first
    differing index wins.  Only defined for partitions of equal size.
    """
    if lam.size != mu.size:
        raise ValueError(f"revlex needs equal sizes, got {lam.size} != {mu.size}")
    n = max(lam.total_length, mu.total_length)
    a, b = lam.padded(n), mu.padded(n)
    for i in range(n):
        if a[i] != b[i]:
            return 1 if a[i] < b[i] else -1
    return 0


revlex_key = functools.cmp_to_key(cmp_revlex)


def uplus(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of parts, rearranged decreasingly; pads add up."""
    merged = tuple(sorted(lam.parts + mu.parts, reverse=True))
    return Partition(merged, lam.zeros + mu.zeros)


def enumerate_partitions(size: int, max_part: int, max_len: int) -> list[Partition]:
    """All partitions of `size` with parts <= max_part and length <= max_len,
    in decreasing lexicographic order of part sequences."""
    if size < 0 or max_part < 0 or max_len < 0:
        raise ValueError("size, max_part, max_len must be nonnegative")
    out: list[Partition] = []

    def rec(remaining, cap, slots, acc):
        if remaining == 0:
            out.append(Partition(tuple(acc), 0))
            return
        if slots == 0 or cap == 0 or cap * slots < remaining:
            return
        for p in range(min(cap, remaining), 0, -1):
            acc.append(p)
            rec(remaining - p, p, slots - 1, acc)
            acc.pop()

    rec(size, max_part, max_len, [])
    return out


def eta_stretch(mu: Partition, m: int) -> Partition | None:
    """Least partition (revlex) of |mu| with length m - l(mu) + 1 lying at or
    above mu in revlex, or None when |mu| is too small for that length.

    Computed by the stretching algorithm: walk the parts of mu from the last
    one, converting each part into a column of ones while the budget
    r = m - 2*l(mu) + 1 allows, and splitting the first oversized part as
    (part - r) followed by r ones.  The split appends exactly r ones so that
    the size |mu| is preserved (appending one fewer would lose a box).
    """
    if mu.zeros:
        raise ValueError("eta_stretch requires an unpadded partition")
    k = mu.length
    if not (2 <= k and 2 * k <= m):
        raise ValueError(f"need 2 <= l(mu) <= m/2, got l={k}, m={m}")
    if mu.largest > m - 1:
        raise ValueError(f"parts of mu must be <= m-1 = {m - 1}")
    target_len = m - k + 1
    if mu.size < target_len:
        return None
    r = m - 2 * k + 1
    eta = list(mu.parts)
    tail: list[int] = []
    for i in range(k - 1, -1, -1):
        if mu.parts[i] <= r:
            r = r - mu.parts[i] + 1
            tail.extend([1] * (mu.parts[i] - 1))
            eta[i] = 1
        else:
            eta[i] = mu.parts[i] - r
            tail.extend([1] * r)
            break
    result = Partition(tuple(sorted(eta + tail, reverse=True)), 0)
    assert result.size == mu.size and result.length == target_len
    return result


def nu_greatest(eta: Partition, length: int) -> Partition:
    """Greatest partition (revlex) of |eta| with the given length that is
    <= eta in revlex.  Definitional search; desk-scale sizes only."""
    cands = [
        p
        for p in enumerate_partitions(eta.size, eta.size, length)
        if p.length == length and cmp_revlex(p, eta) <= 0
    ]
    if not cands:
        raise ValueError(f"no partition of {eta.size} with length {length} below eta")
    return max(cands, key=revlex_key)


def check_mu_equals_nu(mu: Partition, m: int) -> bool:
    """Whether mu equals the greatest length-l(mu) partition below its
    stretch, decided by the boxing criterion mu_{i*} - mu_{l(mu)} <= 1 where
    i* is the least index with eta_{i*} < mu_{i*}."""
    eta = eta_stretch(mu, m)
    if eta is None:
        raise ValueError("stretch of mu does not exist for this m")
    istar = next(i for i in range(mu.length) if eta.parts[i] < mu.parts[i])
    return mu.parts[istar] - mu.parts[mu.length - 1] <= 1
