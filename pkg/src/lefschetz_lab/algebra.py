"""Graded polynomial algebra over GF(p).

Everything is degree-local: the degree-m piece of a homogeneous ideal is the
span of ``R_1 * J_{m-1}`` and the degree-m generators, so no Groebner basis
is ever needed.  Monomials of a fixed degree are indexed in graded reverse
lexicographic order, largest first, with variable 0 the largest variable.
That makes the leading columns of an echelon form the initial monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import gf
from .errors import BadParameters, NotArtinian
from .sequences import IntSeq


class PolyRing:
    """``k[x_0, ..., x_{n-1}]`` over GF(p) with ``x_0 > x_1 > ... > x_{n-1}``."""

    def __init__(self, n: int, p: int = gf.DEFAULT_PRIME, labels: Sequence | None = None):
        self.n = int(n)
        self.p = gf.check_prime(p)
        self.labels = tuple(labels) if labels is not None else tuple(range(self.n))
        if len(self.labels) != self.n:
            raise BadParameters("need one label per variable")
        bits = 62 // max(self.n, 1)
        self.base = 1 << min(bits, 62)
        self.max_degree = self.base - 1
        self.var_keys = np.array([self.base ** i for i in range(self.n)], dtype=np.int64)
        self._bases: dict[int, MonomialBasis] = {}

    def __repr__(self):
        return f"PolyRing(n={self.n}, p={self.p}, labels={list(self.labels)})"

    def name(self, i: int) -> str:
        lab = self.labels[i]
        return lab if isinstance(lab, str) else f"x{lab}"

    def key(self, exps) -> int:
        return int(np.dot(np.asarray(exps, dtype=np.int64), self.var_keys)) if self.n else 0

    def basis(self, m: int) -> "MonomialBasis":
        b = self._bases.get(m)
        if b is None:
            if m > self.max_degree:
                raise BadParameters(f"degree {m} exceeds the key range of a {self.n}-variable ring")
            b = MonomialBasis(self, m)
            self._bases[m] = b
        return b

    def dim(self, m: int) -> int:
        if m < 0:
            return 0
        if self.n == 0:
            return 1 if m == 0 else 0
        return comb(m + self.n - 1, self.n - 1)

    # -- element constructors ----------------------------------------------

    def zero(self) -> "HomogPoly":
        return HomogPoly(self, {})

    def one(self) -> "HomogPoly":
        return HomogPoly(self, {(0,) * self.n: 1})

    def var(self, i: int) -> "HomogPoly":
        e = [0] * self.n
        e[i] = 1
        return HomogPoly(self, {tuple(e): 1})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "HomogPoly":
        return HomogPoly(self, {tuple(int(e) for e in exps): coeff})

    def linear_form(self, coeffs: Sequence[int]) -> "HomogPoly":
        terms = {}
        for i, c in enumerate(coeffs):
            if int(c) % self.p:
                e = [0] * self.n
                e[i] = 1
                terms[tuple(e)] = int(c)
        return HomogPoly(self, terms)

    def squarefree(self, indices: Iterable[int]) -> "HomogPoly":
        e = [0] * self.n
        for i in indices:
            e[i] += 1
        return self.monomial(e)

    def index_of_label(self, label) -> int:
        return self.labels.index(label)


class MonomialBasis:
    """All monomials of one degree, sorted largest first in graded revlex."""

    def __init__(self, ring: PolyRing, m: int):
        self.ring = ring
        self.degree = m
        n = ring.n
        if m < 0:
            exps = np.zeros((0, n), dtype=np.int64)
        elif n == 0:
            exps = np.zeros((1 if m == 0 else 0, 0), dtype=np.int64)
        elif m == 0:
            exps = np.zeros((1, n), dtype=np.int64)
        else:
            combos = np.array(list(combinations_with_replacement(range(n), m)), dtype=np.int64)
            exps = np.zeros((combos.shape[0], n), dtype=np.int64)
            rows = np.repeat(np.arange(combos.shape[0]), m)
            np.add.at(exps, (rows, combos.ravel()), 1)
        keys = exps @ ring.var_keys if n else np.zeros(exps.shape[0], dtype=np.int64)
        order = np.argsort(keys, kind="stable")
        self.exps = exps[order]
        self.keys = keys[order]
        self.size = self.exps.shape[0]

    def index(self, keys) -> np.ndarray:
        keys = np.asarray(keys, dtype=np.int64)
        idx = np.searchsorted(self.keys, keys)
        if np.any(idx >= self.size) or np.any(self.keys[np.minimum(idx, self.size - 1)] != keys):
            raise KeyError("monomial not in this degree")
        return idx

    def index_of(self, exps: Sequence[int]) -> int:
        return int(self.index([self.ring.key(exps)])[0])

    def monomial(self, i: int) -> tuple[int, ...]:
        return tuple(int(e) for e in self.exps[i])

    def shifted_index(self, source: "MonomialBasis", exps) -> np.ndarray:
        """Column of ``u * e`` here for every monomial ``u`` of ``source``."""
        return self.index(source.keys + self.ring.key(exps))


class HomogPoly:
    """A homogeneous polynomial stored as ``{exponent tuple: coefficient}``."""

    __slots__ = ("ring", "terms", "degree")

    def __init__(self, ring: PolyRing, terms: dict):
        p = ring.p
        self.ring = ring
        self.terms = {tuple(e): int(c) % p for e, c in terms.items() if int(c) % p}
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            raise BadParameters(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        self.degree = degs.pop() if degs else None
        for e in self.terms:
            if len(e) != ring.n:
                raise BadParameters("exponent vector length does not match the ring")

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        return isinstance(other, HomogPoly) and self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return HomogPoly(self.ring, t)

    def __neg__(self):
        return HomogPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def scale(self, c: int) -> "HomogPoly":
        return HomogPoly(self.ring, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "HomogPoly") -> "HomogPoly":
        if isinstance(other, int):
            return self.scale(other)
        p = self.ring.p
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = (t.get(e, 0) + c1 * c2) % p
        return HomogPoly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomogPoly":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def to_row(self) -> dict[int, int]:
        """Sparse coordinates in the monomial basis of its degree."""
        if self.is_zero():
            return {}
        b = self.ring.basis(self.degree)
        es = list(self.terms)
        idx = b.index(np.array(es, dtype=np.int64) @ self.ring.var_keys) if self.ring.n else np.zeros(1, int)
        return {int(i): self.terms[e] for i, e in zip(idx, es)}

    @classmethod
    def from_row(cls, ring: PolyRing, m: int, row) -> "HomogPoly":
        b = ring.basis(m)
        if isinstance(row, dict):
            items = row.items()
        else:
            row = np.asarray(row)
            items = ((int(i), int(row[i])) for i in np.flatnonzero(row))
        return cls(ring, {b.monomial(i): c for i, c in items})

    def linear_coefficients(self) -> list[int]:
        if self.degree not in (1, None):
            raise BadParameters("not a linear form")
        out = [0] * self.ring.n
        for e, c in self.terms.items():
            out[e.index(1)] = c
        return out

    def to_dict(self) -> dict:
        terms = sorted(([list(e), c] for e, c in self.terms.items()), key=lambda t: t[0], reverse=True)
        return {"degree": self.degree if self.degree is not None else 0, "terms": terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                self.ring.name(i) + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def poly_from_dict(ring: PolyRing, data: dict) -> HomogPoly:
    return HomogPoly(ring, {tuple(int(x) for x in e): int(c) for e, c in data["terms"]})


@dataclass
class DegreeSlice:
    """Degree-m piece of ``R/J``: echelon span of ``J_m`` plus standard monomials."""

    degree: int
    span: gf.Span
    basis_columns: np.ndarray
    ring: PolyRing

    @property
    def dim(self) -> int:
        return int(self.basis_columns.size)

    @property
    def standard_monomials(self) -> list[tuple[int, ...]]:
        b = self.ring.basis(self.degree)
        return [b.monomial(int(i)) for i in self.basis_columns]

    def coordinates(self, rows: np.ndarray) -> np.ndarray:
        """Normal forms of full degree-m vectors, written in the standard basis."""
        return self.span.reduce_dense(rows)[:, self.basis_columns]

    def lift(self, coords: np.ndarray) -> np.ndarray:
        coords = np.array(coords, dtype=np.int64, ndmin=2)
        full = np.zeros((coords.shape[0], self.ring.basis(self.degree).size), dtype=np.int64)
        full[:, self.basis_columns] = coords
        return full


class GradedIdeal:
    """A homogeneous ideal given by generators, with cached degree spans."""

    def __init__(self, ring: PolyRing, generators: Iterable[HomogPoly] = ()):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring is not ring:
                raise BadParameters("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        self.generators: list[HomogPoly] = gens
        self._spans: dict[int, gf.Span] = {}

    def __repr__(self):
        return f"GradedIdeal(n={self.ring.n}, generators={len(self.generators)})"

    @property
    def n(self) -> int:
        return self.ring.n

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.generators)

    def min_degree(self) -> int | None:
        return min((g.degree for g in self.generators), default=None)

    def plus(self, extra: Iterable[HomogPoly]) -> "GradedIdeal":
        return GradedIdeal(self.ring, list(self.generators) + list(extra))

    # -- per-degree spans ---------------------------------------------------

    def span(self, m: int) -> gf.Span:
        """Echelon form of ``J_m`` in the revlex column order."""
        if m in self._spans:
            return self._spans[m]
        start = max([d for d in self._spans if d < m], default=-1)
        for d in range(start + 1, m + 1):
            self._spans[d] = self._build_span(d)
        return self._spans[m]

    def _build_span(self, m: int) -> gf.Span:
        ring = self.ring
        p = ring.p
        cur = ring.basis(m)
        # monomial and binomial generators keep rows short: stay sparse
        sparse = all(len(g.terms) <= 2 for g in self.generators)
        span = gf.Span(cur.size, p, dense=False if sparse else None)
        gens = [g for g in self.generators if g.degree == m]
        mono_cols = [next(iter(g.to_row())) for g in gens if g.is_monomial()]
        other_rows = [g.to_row() for g in gens if not g.is_monomial()]
        prev = self._spans.get(m - 1) if m > 0 else None
        if prev is not None and prev.rank and ring.n:
            pb = ring.basis(m - 1)
            tables = [cur.index(pb.keys + ring.var_keys[v]) for v in range(ring.n)]
            if span.dense:
                basis = prev.basis_dense()
                span.add_monomials(mono_cols)
                for t in tables:
                    block = np.zeros((basis.shape[0], cur.size), dtype=np.int64)
                    block[:, t] = basis
                    span.add_dense(block)
                span.add_rows(other_rows)
                return span
            if prev.dense:
                prev_mono = np.zeros(0, dtype=np.int64)
                prev_rows = list(prev.basis_sparse())
            else:
                prev_mono = np.flatnonzero(prev.mono)
                prev_rows = list(prev.rows.values())
            mono_cols = list(mono_cols) + [t[prev_mono] for t in tables]
            mono_cols = np.concatenate([np.atleast_1d(np.asarray(c, dtype=np.int64)) for c in mono_cols]) if mono_cols else []
            span.add_monomials(mono_cols)
            span.add_rows(other_rows)
            for row in prev_rows:
                cols = np.fromiter(row.keys(), dtype=np.int64)
                vals = list(row.values())
                for t in tables:
                    span.add_row(dict(zip(t[cols].tolist(), vals)))
            return span
        span.add_monomials(mono_cols)
        span.add_rows(other_rows)
        return span

    def quotient_slice(self, m: int) -> DegreeSlice:
        s = self.span(m)
        return DegreeSlice(m, s, s.free_columns(), self.ring)

    def hilbert_function(self, m_max: int, method: str = "auto") -> IntSeq:
        """Hilbert function of ``R/J`` on ``0..m_max``.

        ``method`` is ``"macaulay"`` (rank of degree spans), ``"series"``
        (monomial Hilbert series, monomial ideals only) or ``"auto"``.
        A zero value ends the computation: later values vanish too.
        """
        if method == "auto":
            method = "series" if self.is_monomial() else "macaulay"
        if method == "series":
            if not self.is_monomial():
                raise BadParameters("series method needs a monomial ideal")
            return monomial_hilbert_function(
                [next(iter(g.terms)) for g in self.generators], self.ring.n, m_max
            )
        vals = []
        for m in range(m_max + 1):
            v = self.ring.basis(m).size - self.span(m).rank
            vals.append(v)
            if v == 0:
                return IntSeq(tuple(vals)).trimmed()
        return IntSeq(tuple(vals), 0, False)

    def contains(self, f: HomogPoly) -> bool:
        if f.is_zero():
            return True
        return not self.span(f.degree).reduce_sparse(f.to_row())

    def normal_form(self, f: HomogPoly) -> HomogPoly:
        if f.is_zero():
            return f
        return HomogPoly.from_row(self.ring, f.degree, self.span(f.degree).reduce_sparse(f.to_row()))

    def initial_span(self, m: int) -> set[tuple[int, ...]]:
        """Leading monomials of ``J_m`` under graded revlex in the ring's variable order."""
        b = self.ring.basis(m)
        return {b.monomial(int(i)) for i in self.span(m).lead_columns()}

    def monomial_span(self, m: int) -> set[tuple[int, ...]]:
        """Degree-m monomials of a monomial ideal (all multiples of generators)."""
        if not self.is_monomial():
            raise BadParameters("monomial_span needs a monomial ideal")
        b = self.ring.basis(m)
        if b.size == 0:
            return set()
        mask = np.zeros(b.size, dtype=bool)
        for g in self.generators:
            e = np.asarray(next(iter(g.terms)), dtype=np.int64)
            if g.degree <= m:
                mask |= np.all(b.exps >= e, axis=1)
        return {b.monomial(int(i)) for i in np.flatnonzero(mask)}

    def socle_degree(self, cap: int = 40) -> int:
        """Last degree with a nonzero quotient; raises NotArtinian beyond ``cap``."""
        for m in range(cap + 1):
            if self.ring.basis(m).size - self.span(m).rank == 0:
                return m - 1
        raise NotArtinian(f"quotient has no zero slice up to degree {cap}")

    def same_degree_span(self, other: "GradedIdeal", m: int) -> bool:
        return self.span(m).equals(other.span(m))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.ring.n,
            "prime": self.ring.p,
            "generators": [g.to_dict() for g in self.generators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict, p: int | None = None) -> "GradedIdeal":
        try:
            n = int(data["n"])
            prime = int(p if p is not None else data.get("prime", gf.DEFAULT_PRIME))
            ring = PolyRing(n, prime, data.get("labels"))
            gens = []
            for g in data["generators"]:
                poly = poly_from_dict(ring, g)
                if not poly.is_zero() and "degree" in g and int(g["degree"]) != poly.degree:
                    raise BadParameters("declared degree does not match the terms")
                gens.append(poly)
        except (KeyError, TypeError, ValueError) as exc:
            raise BadParameters(f"malformed ideal document: {exc}") from exc
        return cls(ring, gens)

    @classmethod
    def from_json(cls, text: str, p: int | None = None) -> "GradedIdeal":
        return cls.from_dict(json.loads(text), p)


# -- monomial Hilbert series ---------------------------------------------------


def _minimalize(gens: list[tuple]) -> list[tuple]:
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int], shift: int = 0) -> list[int]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for j, y in enumerate(b):
        out[j + shift] += y
    return out


def _numerator_squarefree(gens: list[int], cache: dict) -> list[int]:
    """Hilbert series numerator of a squarefree monomial ideal given as bitmasks."""
    key = frozenset(gens)
    hit = cache.get(key)
    if hit is not None:
        return hit
    gens = sorted(set(gens), key=lambda g: bin(g).count("1"))
    mins: list[int] = []
    for g in gens:
        if not any(h & g == h for h in mins):
            mins.append(g)
    if not mins:
        res = [1]
    else:
        seen = 0
        clash = 0
        for g in mins:
            clash |= seen & g
            seen |= g
        if not clash:
            res = [1]
            for g in mins:
                d = bin(g).count("1")
                res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
        else:
            # pivot on the variable shared by most generators
            best, bestc = 0, -1
            b = clash
            while b:
                low = b & -b
                c = sum(1 for g in mins if g & low)
                if c > bestc:
                    best, bestc = low, c
                b ^= low
            plus = [g for g in mins if not g & best] + [best]
            colon = [g & ~best for g in mins]
            if 0 in colon:
                colon_num = [0]
            else:
                colon_num = _numerator_squarefree(colon, cache)
            res = _poly_add(_numerator_squarefree(plus, cache), colon_num, 1)
    cache[key] = res
    return res


def _numerator_general(gens: list[tuple]) -> list[int]:
    gens = _minimalize(gens)
    if not gens:
        return [1]
    n = len(gens[0])
    if any(sum(g) == 0 for g in gens):
        return [0]
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    counts = [sum(1 for s in supports if i in s) for i in range(n)]
    if max(counts) <= 1:
        res = [1]
        for g in gens:
            d = sum(g)
            res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
        return res
    v = max(range(n), key=lambda i: counts[i])
    e = min(g[v] for g in gens if g[v])
    piv = tuple(e if i == v else 0 for i in range(n))
    plus = [g for g in gens if g[v] < e] + [piv]
    colon = [tuple(max(0, a - b) for a, b in zip(g, piv)) for g in gens]
    return _poly_add(_numerator_general(plus), _numerator_general(colon), e)


def hilbert_numerator(gens: Sequence[Sequence[int]], n: int) -> list[int]:
    """Numerator K(t) with ``HS(R/J) = K(t) / (1-t)^n`` for a monomial ideal J."""
    gens = [tuple(int(x) for x in g) for g in gens]
    if gens and all(max(g) <= 1 for g in gens):
        masks = [sum(1 << i for i, e in enumerate(g) if e) for g in gens]
        if 0 in masks:
            return [0]
        return _numerator_squarefree(masks, {})
    return _numerator_general(gens)


def monomial_hilbert_function(gens, n: int, m_max: int) -> IntSeq:
    num = hilbert_numerator(gens, n)
    vals = []
    for m in range(m_max + 1):
        if n == 0:
            v = num[m] if m < len(num) else 0
        else:
            v = sum(c * comb(m - k + n - 1, n - 1) for k, c in enumerate(num) if k <= m)
        vals.append(v)
        if v == 0 and m >= len(num):
            return IntSeq(tuple(vals)).trimmed()
    return IntSeq(tuple(vals), 0, False)


# -- Stanley-Reisner ideals ----------------------------------------------------


def stanley_reisner_ideal(D, p: int = gf.DEFAULT_PRIME, order: Sequence[int] | None = None,
                          ring: PolyRing | None = None) -> GradedIdeal:
    """Squarefree monomial ideal of the minimal non-faces of ``D``.

    ``order`` lists the vertex labels from largest to smallest variable; by
    default the ascending vertex labels.  A vertex outside the support of
    ``D`` contributes a linear generator.
    """
    if ring is None:
        labels = tuple(order) if order is not None else tuple(D.vertices)
        if sorted(labels) != sorted(D.vertices):
            raise BadParameters("variable order must list every vertex exactly once")
        ring = PolyRing(len(labels), p, labels)
    pos = {lab: i for i, lab in enumerate(ring.labels)}
    gens = [ring.squarefree(pos[v] for v in nf) for nf in D.minimal_nonfaces()]
    return GradedIdeal(ring, gens)


def sr_hilbert_function_from_f(f_vector: Sequence[int], m_max: int) -> IntSeq:
    """``HF(m, k[D]) = sum_i f_{i-1} C(m-1, i-1)`` for m >= 1."""
    vals = [1]
    for m in range(1, m_max + 1):
        vals.append(sum(f_vector[i] * comb(m - 1, i - 1) for i in range(1, len(f_vector))))
    exact = len(f_vector) == 1
    return IntSeq(tuple(vals), 0, exact).trimmed() if exact else IntSeq(tuple(vals), 0, False)


# -- colon ideals ----------------------------------------------------------------


def product_matrix(u: HomogPoly, m: int) -> np.ndarray:
    """Rows: ``u * mono`` for every degree-m monomial, in the basis of degree ``m + deg u``."""
    ring = u.ring
    src = ring.basis(m)
    dst = ring.basis(m + u.degree)
    out = np.zeros((src.size, dst.size), dtype=np.int64)
    rows = np.arange(src.size)
    for e, c in u.terms.items():
        out[rows, dst.shifted_index(src, e)] += c
    return out % ring.p


def colon_span(J: GradedIdeal, u: HomogPoly, m: int) -> gf.Span:
    """``(J : u)_m`` as a subspace of ``R_m``, computed as a kernel."""
    ring = J.ring
    src = ring.basis(m)
    span = gf.Span(src.size, ring.p)
    if src.size == 0:
        return span
    if u.is_zero():
        span.add_dense(np.eye(src.size, dtype=np.int64))
        return span
    target = J.quotient_slice(m + u.degree)
    if target.dim == 0:
        span.add_dense(np.eye(src.size, dtype=np.int64))
        return span
    images = target.coordinates(product_matrix(u, m))
    kernel = gf.left_kernel(images, ring.p)
    span.add_dense(kernel)
    return span


def ideal_quotient_slice(J: GradedIdeal, u: HomogPoly, m: int) -> DegreeSlice:
    """Degree-m slice of ``R/(J : u)``."""
    s = colon_span(J, u, m)
    return DegreeSlice(m, s, s.free_columns(), J.ring)


def _monomial_colon(J: GradedIdeal, u: HomogPoly) -> GradedIdeal:
    ue = next(iter(u.terms))
    gens = []
    for g in J.generators:
        ge = next(iter(g.terms))
        gens.append(tuple(max(0, a - b) for a, b in zip(ge, ue)))
    ring = J.ring
    return GradedIdeal(ring, [ring.monomial(e) for e in _minimalize(gens)])


def generators_from_spans(ring: PolyRing, spans: Sequence[gf.Span]) -> list[HomogPoly]:
    """Minimal homogeneous generators of the ideal whose degree-m piece is ``spans[m]``."""
    gens: list[HomogPoly] = []
    for m, s in enumerate(spans):
        if s.rank == 0:
            continue
        sofar = GradedIdeal(ring, gens)
        have = gf.Span(s.ncols, ring.p)
        if gens:
            have.add_dense(sofar.span(m).basis_dense())
        for row in s.basis_dense():
            if have.rank == s.ncols:
                break
            if not have.contains_dense(row):
                have.add_dense(row[None, :])
                gens.append(HomogPoly.from_row(ring, m, row))
        if m == 0:
            break
    return gens


def ideal_quotient(J: GradedIdeal, u: HomogPoly, m_max: int | None = None) -> GradedIdeal:
    """The colon ideal ``(J : u)``.

    Monomial by monomial is exact.  Otherwise generators are collected up to
    ``m_max``; for an Artinian ``J`` the default bound is the degree past
    which the colon is all of ``R``.
    """
    if J.is_monomial() and u.is_monomial():
        return _monomial_colon(J, u)
    if m_max is None:
        r = J.socle_degree()
        m_max = max(r - u.degree + 1, 0)
    spans = [colon_span(J, u, m) for m in range(m_max + 1)]
    return GradedIdeal(J.ring, generators_from_spans(J.ring, spans))


# -- linear forms and quotients by them ----------------------------------------


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_linear_forms(ring: PolyRing, count: int, rng, variables: Sequence[int] | None = None,
                        max_tries: int = 100) -> list[HomogPoly]:
    """``count`` linearly independent random linear forms.

    Only the variables listed in ``variables`` (default: all) receive
    coefficients.  Dependent draws are discarded and redrawn.
    """
    rng = make_rng(rng)
    if count == 0:
        return []
    cols = list(range(ring.n)) if variables is None else list(variables)
    if count > len(cols):
        raise BadParameters(f"cannot draw {count} independent forms in {len(cols)} variables")
    for _ in range(max_tries):
        coeffs = np.zeros((count, ring.n), dtype=np.int64)
        coeffs[:, cols] = rng.integers(0, ring.p, size=(count, len(cols)))
        if gf.rank(coeffs, ring.p) == count:
            return [ring.linear_form(row) for row in coeffs]
    raise BadParameters("could not draw independent linear forms")


class LinearSection:
    """Presentation of ``R/(l_1, ..., l_t)`` as a polynomial ring in the free variables.

    The forms are put in reduced echelon form; each pivot variable is solved
    for in terms of the remaining ones.  Pivots are the largest variables
    occurring, so a variable no form involves always survives.
    """

    def __init__(self, ring: PolyRing, forms: Sequence[HomogPoly]):
        self.source = ring
        self.forms = list(forms)
        p = ring.p
        if forms:
            coeffs = np.array([f.linear_coefficients() for f in forms], dtype=np.int64)
            red, piv = gf.rref(coeffs, p)
            if len(piv) < len(forms):
                raise BadParameters("linear forms are dependent")
        else:
            red, piv = np.zeros((0, ring.n), dtype=np.int64), []
        self.pivots = list(piv)
        self.free = [v for v in range(ring.n) if v not in set(piv)]
        self.target = PolyRing(len(self.free), p, [ring.labels[v] for v in self.free])
        pos = {v: i for i, v in enumerate(self.free)}
        img = np.zeros((ring.n, len(self.free)), dtype=np.int64)
        for v in self.free:
            img[v, pos[v]] = 1
        for i, v in enumerate(piv):
            for f in self.free:
                img[v, pos[f]] = (-red[i, f]) % p
        self.images = img
        self._pow_cache: dict = {}

    def _var_power(self, v: int, k: int) -> HomogPoly:
        key = (v, k)
        hit = self._pow_cache.get(key)
        if hit is None:
            if k == 0:
                hit = self.target.one()
            else:
                hit = self._var_power(v, k - 1) * self.target.linear_form(self.images[v])
            self._pow_cache[key] = hit
        return hit

    def map(self, f: HomogPoly) -> HomogPoly:
        out = self.target.zero()
        acc: dict = {}
        p = self.source.p
        for e, c in f.terms.items():
            term = self.target.one()
            for v, k in enumerate(e):
                if k:
                    term = term * self._var_power(v, k)
            for te, tc in term.terms.items():
                acc[te] = (acc.get(te, 0) + c * tc) % p
        if acc:
            out = HomogPoly(self.target, acc)
        return out

    def map_ideal(self, J: GradedIdeal) -> GradedIdeal:
        return GradedIdeal(self.target, [self.map(g) for g in J.generators])


def embed(f: HomogPoly, ring: PolyRing, positions: Sequence[int]) -> HomogPoly:
    """Copy ``f`` into a larger ring; variable i goes to ``positions[i]``."""
    out = {}
    for e, c in f.terms.items():
        ne = [0] * ring.n
        for i, k in enumerate(e):
            ne[positions[i]] += k
        out[tuple(ne)] = c
    return HomogPoly(ring, out)
