"""Assumption-free verification of dimensions and candidate bases by exact
graded linear algebra.

For each bidegree (degree d, weight w) the slice of the ideal is the span of
all monomial multiples of generators landing there.  Two equivalent ways to
produce a spanning row set are used:

* `build_slice` materializes the defining rows literally: one row per pair
  (generator, multiplier monomial) with matching degree and weight.  This is
  the reference construction.

* the engine builds slices bottom-up.  Writing any multiplier as
  u = x_i^(j) * u'' with u''_i = 0 splits off the full x_i-power of u, and
  the structure constant of that split is C(j, j) = 1 in every ring, so

      rowspace(d, w) = span( generators in the slice
                             + x_i^(j) * rowspace(d - j, w - i*j) )

  where it suffices to apply the shifts to an echelon basis of the lower
  slice.  Over the rationals j = 1 suffices (the constant C(e+1, 1) = e+1
  never vanishes); over F_p the shifts x_i^(p^e) are used, because every
  divided power factors through p-th-power divided powers up to units there.
  The two constructions span the same space; the tests cross-check their
  ranks.

Rank computations are exact: integer rows with gcd-normalized fraction-free
elimination over the rationals, ordinary elimination over prime fields.
Floating point never appears.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .basis_enum import BasisSet, truncated_basis
from .dpalgebra import (
    CoeffRing,
    DPoly,
    MonomialOrder,
    mono_degree,
    mono_weight,
    ring_binom,
)
from .partitions import enumerate_partitions
from .weyl_ideal import GeneratorSet, defining_generators


class ConfigurationError(ValueError):
    """Generator bounds do not cover the requested slice."""


class MustVerifyFirstError(RuntimeError):
    """reduce_element called with a candidate basis that was not verified."""


THREADS_ENV = "SL2WEYL_THREADS"


@lru_cache(maxsize=None)
def slice_monomials(m: int, d: int, w: int) -> tuple:
    """Monomials of degree d and weight w, sorted descending in DPLEX.

    Exponent vectors correspond to partitions of w with parts <= m-1 and
    length <= d; the x_0 exponent absorbs the slack d - length.
    """
    if m == 0:
        return ((),) if d == 0 and w == 0 else ()
    out = []
    for lam in enumerate_partitions(w, m - 1, d):
        exps = [0] * m
        exps[0] = d - lam.length
        for p in lam.parts:
            exps[p] += 1
        out.append(tuple(exps))
    out.sort(key=MonomialOrder.DPLEX.key, reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# exact echelon forms (sparse rows: dict column -> coefficient)


class _EchelonQ:
    """Integer rows, fraction-free; pivot rows kept gcd-normalized."""

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, row):
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            ca, cb = b // g, a // g
            new = {}
            for c, v in row.items():
                new[c] = v * cb
            for c, v in piv.items():
                nv = new.get(c, 0) - v * ca
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = new
        return row

    def add(self, row) -> bool:
        row = self._reduce(dict(row))
        if not row:
            return False
        g = 0
        for v in row.values():
            g = gcd(g, v)
        lead = min(row)
        if row[lead] < 0:
            g = -g
        self.pivots[lead] = {c: v // g for c, v in row.items()}
        return True

    def residue(self, row):
        """Normal form against the pivot rows (every pivot-lead component is
        eliminated, so the map is linear), with Fraction values."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        while True:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                return row
            lead = min(hits)
            piv = self.pivots[lead]
            f = row[lead] / piv[lead]
            for c, v in piv.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)


class _EchelonP:
    """Rows over F_p; pivots normalized to 1."""

    def __init__(self, ncols, p):
        self.ncols = ncols
        self.p = p
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self):
        return len(self.pivots)

    def _reduce(self, row):
        p = self.p
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def add(self, row) -> bool:
        p = self.p
        row = self._reduce({c: v % p for c, v in row.items() if v % p})
        if not row:
            return False
        lead = min(row)
        inv = pow(row[lead], -1, p)
        self.pivots[lead] = {c: v * inv % p for c, v in row.items()}
        return True

    def residue(self, row):
        """Normal form against the pivot rows; linear, see _EchelonQ."""
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        while True:
            hits = [c for c in row if c in self.pivots]
            if not hits:
                return row
            lead = min(hits)
            piv = self.pivots[lead]
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)


def _new_echelon(ring: CoeffRing, ncols: int):
    return _EchelonP(ncols, ring.char) if ring.char else _EchelonQ(ncols)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class SliceReport:
    degree: int
    weight: int
    slice_dim: int
    quotient_dim: int
    candidate_count: int
    independent: bool
    spanning: bool

    @property
    def passed(self) -> bool:
        return self.independent and self.spanning


@dataclass
class DimReport:
    m: int
    char: int
    degree_bound: int
    dims: dict[tuple[int, int], int]
    total: int
    elapsed_seconds: float = 0.0


@dataclass
class VerificationReport:
    m: int
    char: int
    provenance: str
    degree_bound: int
    slices: list[SliceReport] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.slices)

    @property
    def total_quotient_dim(self) -> int:
        return sum(s.quotient_dim for s in self.slices)

    @property
    def total_candidates(self) -> int:
        return sum(s.candidate_count for s in self.slices)


@dataclass(frozen=True)
class GradedSlice:
    m: int
    ring: CoeffRing
    degree: int
    weight: int
    monomials: tuple
    ideal_rows: tuple  # rows as coefficient tuples in the monomial coordinates


# ---------------------------------------------------------------------------
# literal slice construction


def build_slice(m, ring, d, w, gens: GeneratorSet) -> GradedSlice:
    """Rows {u * g : g in gens, deg u + deg g = d, wt u + wt g = w} in the
    coordinates of the (d, w) monomials."""
    if d > gens.degree_bound or w > gens.weight_bound:
        raise ConfigurationError(
            f"slice ({d},{w}) outside generator bounds "
            f"({gens.degree_bound},{gens.weight_bound})"
        )
    monos = slice_monomials(m, d, w)
    index = {a: i for i, a in enumerate(monos)}
    rows = []
    for entry in gens.entries:
        gd, gw = entry.degree, entry.weight
        if gd > d or gw > w:
            continue
        for u in slice_monomials(m, d - gd, w - gw):
            prod = entry.poly.mono_shift(u)
            if prod.is_zero():
                continue
            vec = [0] * len(monos)
            for a, c in prod.terms.items():
                vec[index[a]] = c
            rows.append(tuple(vec))
    return GradedSlice(m, ring, d, w, monos, tuple(rows))


def slice_rank(sl: GradedSlice) -> int:
    ech = _new_echelon(sl.ring, len(sl.monomials))
    for vec in sl.ideal_rows:
        ech.add({i: c for i, c in enumerate(vec) if c})
    return ech.rank


# ---------------------------------------------------------------------------
# the cascading engine


class OracleSession:
    """Holds the echelonized ideal slices for one (m, ring, degree bound) and
    answers dimension, basis-verification, and reduction queries.

    extra_degree_one: indices j whose variables x_j are adjoined to the ideal
    (used for truncations).
    """

    def __init__(self, m, ring, degree_bound, gens=None, extra_degree_one=()):
        if degree_bound < m:
            raise ValueError(f"degree_bound must be >= m = {m}")
        self.m = m
        self.ring = ring
        self.degree_bound = degree_bound
        self.weight_bound = degree_bound * max(m - 1, 0)
        if gens is None and m >= 1:
            gens = defining_generators(
                m, ring, max(degree_bound, m + 1), self.weight_bound
            )
        self.gens = gens
        if gens is not None and (
            gens.degree_bound < degree_bound or gens.weight_bound < self.weight_bound
        ):
            raise ConfigurationError("generator bounds do not cover the degree box")
        self.extra = tuple(sorted(set(extra_degree_one)))
        self._spaces: dict[tuple[int, int], object] = {}
        self._by_slice: dict[tuple[int, int], list] = {}
        if gens is not None:
            for e in gens.entries:
                self._by_slice.setdefault((e.degree, e.weight), []).append(e.poly)
        for j in self.extra:
            mono = tuple(1 if i == j else 0 for i in range(m))
            self._by_slice.setdefault((1, j), []).append(
                DPoly.monomial(ring, m, mono)
            )
        self._mult_powers = (
            [1]
            if not ring.char
            else [ring.char**e for e in range(12) if ring.char**e <= degree_bound]
        )
        self.verified: set[str] = set()

    # -- slice spaces ------------------------------------------------------

    def space(self, d, w):
        key = (d, w)
        if key in self._spaces:
            return self._spaces[key]
        monos = slice_monomials(self.m, d, w)
        index = {a: i for i, a in enumerate(monos)}
        ech = _new_echelon(self.ring, len(monos))
        rows = []
        for poly in self._by_slice.get(key, ()):
            rows.append({index[a]: c for a, c in poly.terms.items()})
        for j in self._mult_powers:
            if j > d:
                break
            for i in range(self.m):
                if w - i * j < 0:
                    continue
                lower = self.space(d - j, w - i * j)
                lmonos = slice_monomials(self.m, d - j, w - i * j)
                for piv in lower.pivots.values():
                    row = {}
                    for col, c in piv.items():
                        a = lmonos[col]
                        s = ring_binom(self.ring, a[i] + j, j)
                        if s == 0:
                            continue
                        b = list(a)
                        b[i] += j
                        row[index[tuple(b)]] = c * s
                    if row:
                        rows.append(row)
        rows.sort(key=lambda r: min(r))
        ncols = len(monos)
        for row in rows:
            if ech.rank == ncols:
                break
            ech.add(row)
        self._spaces[key] = ech
        return ech

    def _slice_keys(self):
        for d in range(self.degree_bound + 1):
            for w in range(d * max(self.m - 1, 0) + 1):
                if slice_monomials(self.m, d, w):
                    yield (d, w)

    def _ensure_all(self):
        nthreads = int(os.environ.get(THREADS_ENV, "1") or "1")
        if nthreads <= 1:
            for d, w in self._slice_keys():
                self.space(d, w)
            return
        # slices at one degree level only depend on lower levels
        for d in range(self.degree_bound + 1):
            keys = [(dd, ww) for dd, ww in self._slice_keys() if dd == d]
            with ThreadPoolExecutor(max_workers=nthreads) as pool:
                list(pool.map(lambda k: self.space(*k), keys))

    # -- queries -----------------------------------------------------------

    def dims(self) -> DimReport:
        t0 = time.monotonic()
        self._ensure_all()
        dims = {}
        total = 0
        for d, w in self._slice_keys():
            q = len(slice_monomials(self.m, d, w)) - self.space(d, w).rank
            dims[(d, w)] = q
            total += q
        return DimReport(
            self.m, self.ring.char, self.degree_bound, dims, total,
            time.monotonic() - t0,
        )

    def verify_basis(self, candidate: BasisSet) -> VerificationReport:
        t0 = time.monotonic()
        if candidate.m != self.m:
            raise ValueError("candidate basis is for a different m")
        cand = candidate.by_slice()
        if any(d > self.degree_bound for d, _ in cand):
            raise ValueError("candidate monomials exceed the degree bound")
        self._ensure_all()
        report = VerificationReport(
            self.m, self.ring.char, candidate.provenance, self.degree_bound
        )
        for d, w in self._slice_keys():
            monos = slice_monomials(self.m, d, w)
            index = {a: i for i, a in enumerate(monos)}
            ech = self.space(d, w)
            cands = cand.get((d, w), [])
            overlay = _new_echelon(self.ring, len(monos))
            indep = True
            for a in cands:
                res = ech.residue({index[a]: 1})
                if not res or not overlay.add(
                    {c: v for c, v in res.items()}
                    if self.ring.char
                    else _clear_denominators(res)
                ):
                    indep = False
                    break
            q = len(monos) - ech.rank
            report.slices.append(
                SliceReport(d, w, len(monos), q, len(cands), indep, q == len(cands))
            )
        report.elapsed_seconds = time.monotonic() - t0
        if report.passed:
            self.verified.add(candidate.provenance)
        return report

    def reduce_element(self, f: DPoly, candidate: BasisSet):
        """Coordinates of the residue of f in the verified candidate basis."""
        if candidate.provenance not in self.verified:
            raise MustVerifyFirstError(
                "verify_basis must pass for this candidate before reducing"
            )
        if f.m != self.m or f.ring != self.ring:
            raise ValueError("element does not match the session")
        cand = candidate.by_slice()
        coords: dict[tuple, object] = {}
        by_slice: dict[tuple[int, int], dict] = {}
        for a, c in f.terms.items():
            by_slice.setdefault((mono_degree(a), mono_weight(a)), {})[a] = c
        for (d, w), terms in sorted(by_slice.items()):
            if d > self.degree_bound:
                raise ValueError("element exceeds the session degree bound")
            monos = slice_monomials(self.m, d, w)
            index = {a: i for i, a in enumerate(monos)}
            ech = self.space(d, w)
            res_f = ech.residue({index[a]: c for a, c in terms.items()})
            basis_monos = cand.get((d, w), [])
            # solve res_f = sum coords_b * residue(b) by eliminating with
            # augmented unit tags
            p = self.ring.char
            solver = _new_echelon(self.ring, len(monos) + len(basis_monos))
            for t, b in enumerate(basis_monos):
                res_b = ech.residue({index[b]: 1})
                row = dict(res_b)
                row[len(monos) + t] = 1
                solver.add(row if p else _clear_denominators(row))
            rem = solver.residue(res_f)
            main = {c: v for c, v in rem.items() if c < len(monos)}
            if main:
                raise ValueError("element does not reduce into the candidate span")
            for t, b in enumerate(basis_monos):
                v = rem.get(len(monos) + t, 0)
                if v:
                    coords[b] = (-v) % p if p else -v
        return coords


def _clear_denominators(row):
    """Fraction row -> integer row (rank-preserving scaling)."""
    denom = 1
    for v in row.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    return {c: int(v * denom) for c, v in row.items()}


# ---------------------------------------------------------------------------
# module-level one-shot wrappers


def quotient_dim(m, ring, degree_bound, gens=None) -> DimReport:
    """Per-slice quotient dimensions and their total for degrees up to the
    bound."""
    return OracleSession(m, ring, degree_bound, gens).dims()


def verify_basis(m, ring, candidate: BasisSet, degree_bound) -> VerificationReport:
    return OracleSession(m, ring, degree_bound).verify_basis(candidate)


@dataclass
class TruncationReport:
    m: int
    n_trunc: int
    char: int
    dims: DimReport
    basis_size: int
    verification: VerificationReport

    @property
    def passed(self) -> bool:
        return self.dims.total == self.basis_size and self.verification.passed


def truncated_quotient(m, n_trunc, ring, degree_bound) -> TruncationReport:
    """Quotient with the variables x_N..x_{m-1} adjoined to the ideal,
    compared against the truncated basis."""
    if n_trunc < 1:
        raise ValueError("truncation level must be >= 1")
    extra = tuple(range(min(n_trunc, m), m))
    session = OracleSession(m, ring, degree_bound, extra_degree_one=extra)
    dims = session.dims()
    basis = truncated_basis(m, n_trunc)
    verification = session.verify_basis(basis)
    return TruncationReport(m, n_trunc, ring.char, dims, len(basis), verification)


def reduce_element(f: DPoly, m, ring, candidate: BasisSet, degree_bound=None):
    """One-shot reduction; verifies the candidate first (and raises if that
    fails), then returns the coordinate dict."""
    if degree_bound is None:
        degree_bound = max(
            [m] + [mono_degree(a) for a in f.terms]
        )
    session = OracleSession(m, ring, degree_bound)
    report = session.verify_basis(candidate)
    if not report.passed:
        raise MustVerifyFirstError("candidate basis failed verification")
    return session.reduce_element(f, candidate)
