"""Exact linear algebra over a prime field GF(p).

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``.  Column
index 0 is the *leading* position: echelon forms pick the leftmost nonzero
entry of a row as its pivot, so callers order columns from largest to
smallest monomial.
"""

from __future__ import annotations

import heapq

import numpy as np

from .errors import BadPrime

DEFAULT_PRIME = 32003

# inner-product length that keeps sum of products of residues below 2**62
def _chunk(p: int) -> int:
    return max(1, (1 << 62) // ((p - 1) ** 2 + 1))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def check_prime(p: int) -> int:
    p = int(p)
    if not is_prime(p):
        raise BadPrime(f"{p} is not prime")
    if p >= 1 << 31:
        raise BadPrime(f"{p} is too large for int64 residue arithmetic")
    return p


def inv(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` without int64 overflow."""
    a, b = np.asarray(a), np.asarray(b)
    k = a.shape[1]
    if k * (p - 1) ** 2 < 1 << 53:
        # float64 products and sums are exact below 2**53
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.fmod(out, p).astype(np.int64)
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    step = _chunk(p)
    if k <= step:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, k, step):
        out = (out + a[:, s:s + step] @ b[s:s + step]) % p
    return out


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.

    Returns the nonzero rows of the RREF and the list of pivot columns.
    """
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r, c:] = (a[r, c:] * inv(piv, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : m x = 0}``, in RREF."""
    m = np.asarray(m, dtype=np.int64)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, piv = rref(m, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-r[i, f]) % p
    if basis.shape[0]:
        basis, _ = rref(basis, p)
    return basis


def left_kernel(m: np.ndarray, p: int) -> np.ndarray:
    """Rows ``v`` with ``v @ m == 0``."""
    return nullspace(np.asarray(m).T, p)


class Span:
    """A subspace of GF(p)^ncols maintained in echelon form.

    Two storage modes.  Narrow spaces keep a dense reduced echelon matrix and
    take rows in batches.  Wide spaces (full polynomial rings in high degree)
    keep a boolean mask of unit-vector rows plus sparse dict rows, which stays
    cheap for monomial and binomial ideals.
    """

    DENSE_LIMIT = 2500
    BATCH = 1500

    def __init__(self, ncols: int, p: int, dense: bool | None = None):
        self.ncols = int(ncols)
        self.p = p
        self.dense = self.ncols <= self.DENSE_LIMIT if dense is None else dense
        if self.dense:
            self.matrix = np.zeros((0, self.ncols), dtype=np.int64)
            self.pivots: list[int] = []
        else:
            self.mono = np.zeros(self.ncols, dtype=bool)
            self.rows: dict[int, dict[int, int]] = {}

    # -- construction -------------------------------------------------------

    def add_dense(self, m: np.ndarray):
        m = np.asarray(m, dtype=np.int64) % self.p
        if m.size == 0:
            return
        if not self.dense:
            for row in m:
                nz = np.flatnonzero(row)
                if nz.size:
                    self.add_row({int(c): int(row[c]) for c in nz})
            return
        for s in range(0, m.shape[0], self.BATCH):
            if len(self.pivots) == self.ncols:
                break
            block = m[s:s + self.BATCH]
            if self.pivots:
                block = self.reduce_dense(block)
                block = block[np.any(block, axis=1)]
            if block.shape[0] == 0:
                continue
            new, piv = rref(block, self.p)
            if not piv:
                continue
            if self.pivots:
                # clear the new pivot columns from the old rows, then merge
                old = self.matrix
                old = (old - matmul(old[:, piv], new, self.p)) % self.p
                rows = np.vstack([old, new])
                pivs = self.pivots + piv
                order = np.argsort(pivs, kind="stable")
                self.matrix = rows[order]
                self.pivots = [pivs[i] for i in order]
            else:
                self.matrix, self.pivots = new, list(piv)

    def add_monomials(self, cols):
        """Add the unit vectors e_c for every c in ``cols``."""
        cols = np.unique(np.asarray(cols, dtype=np.int64))
        if cols.size == 0:
            return
        if self.dense:
            m = np.zeros((cols.size, self.ncols), dtype=np.int64)
            m[np.arange(cols.size), cols] = 1
            self.add_dense(m)
            return
        fresh = cols[~self.mono[cols]]
        if fresh.size == 0:
            return
        self.mono[fresh] = True
        fresh_set = set(fresh.tolist())
        reinsert = []
        for lead in list(self.rows):
            row = self.rows[lead]
            if lead in fresh_set:
                del self.rows[lead]
                reinsert.append(row)
            elif fresh_set.intersection(row):
                for c in fresh_set.intersection(row):
                    del row[c]
        for row in reinsert:
            self.add_row(row)

    def add_row(self, row: dict[int, int]) -> bool:
        """Insert one sparse row; returns True if the rank grew."""
        p = self.p
        if self.dense:
            before = len(self.pivots)
            v = np.zeros((1, self.ncols), dtype=np.int64)
            for c, x in row.items():
                v[0, c] = x
            self.add_dense(v)
            return len(self.pivots) > before
        mono = self.mono
        r = {c: x % p for c, x in row.items() if x % p and not mono[c]}
        if not r:
            return False
        heap = list(r)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            x = r.get(c)
            if not x:
                continue
            prow = self.rows.get(c)
            if prow is None:
                # c is now the leading column of r
                if len(r) == 1:
                    self.add_monomials([c])
                    return True
                s = inv(x, p)
                self.rows[c] = {k: (v * s) % p for k, v in r.items() if v}
                return True
            for k, v in prow.items():
                nv = (r.get(k, 0) - x * v) % p
                if nv:
                    if k not in r:
                        heapq.heappush(heap, k)
                    r[k] = nv
                else:
                    r.pop(k, None)
        return False

    def add_rows(self, rows):
        if self.dense:
            rows = list(rows)
            if not rows:
                return
            m = np.zeros((len(rows), self.ncols), dtype=np.int64)
            for i, row in enumerate(rows):
                for c, x in row.items():
                    m[i, c] = x
            self.add_dense(m)
        else:
            for row in rows:
                self.add_row(row)

    # -- queries ------------------------------------------------------------

    @property
    def rank(self) -> int:
        if self.dense:
            return len(self.pivots)
        return int(self.mono.sum()) + len(self.rows)

    def lead_columns(self) -> np.ndarray:
        if self.dense:
            return np.asarray(self.pivots, dtype=np.int64)
        leads = np.flatnonzero(self.mono)
        if self.rows:
            leads = np.union1d(leads, np.fromiter(self.rows, dtype=np.int64))
        return leads

    def free_columns(self) -> np.ndarray:
        mask = np.ones(self.ncols, dtype=bool)
        mask[self.lead_columns()] = False
        return np.flatnonzero(mask)

    def reduce_dense(self, v: np.ndarray) -> np.ndarray:
        """Normal forms of the rows of ``v``; the result vanishes on lead columns."""
        v = np.array(v, dtype=np.int64, ndmin=2) % self.p
        if self.dense:
            if not self.pivots:
                return v
            coeff = v[:, self.pivots]
            return (v - matmul(coeff, self.matrix, self.p)) % self.p
        out = np.empty_like(v)
        for i, row in enumerate(v):
            nz = np.flatnonzero(row)
            red = self.reduce_sparse({int(c): int(row[c]) for c in nz})
            out[i] = 0
            for c, x in red.items():
                out[i, c] = x
        return out

    def reduce_sparse(self, row: dict[int, int]) -> dict[int, int]:
        p = self.p
        if self.dense:
            v = np.zeros((1, self.ncols), dtype=np.int64)
            for c, x in row.items():
                v[0, c] = x
            red = self.reduce_dense(v)[0]
            return {int(c): int(red[c]) for c in np.flatnonzero(red)}
        mono = self.mono
        r = {c: x % p for c, x in row.items() if x % p and not mono[c]}
        heap = [c for c in r if c in self.rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            x = r.pop(c, 0)
            if not x:
                continue
            for k, v in self.rows[c].items():
                if k == c:
                    continue
                nv = (r.get(k, 0) - x * v) % p
                if nv:
                    if k not in r and k in self.rows:
                        heapq.heappush(heap, k)
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def contains_dense(self, v: np.ndarray) -> bool:
        v = np.array(v, dtype=np.int64, ndmin=2)
        if v.size == 0:
            return True
        return not np.any(self.reduce_dense(v))

    def basis_sparse(self):
        """Yield the echelon basis as sparse dict rows."""
        if self.dense:
            for row in self.matrix:
                nz = np.flatnonzero(row)
                yield {int(c): int(row[c]) for c in nz}
            return
        for c in np.flatnonzero(self.mono):
            yield {int(c): 1}
        for row in self.rows.values():
            yield row

    def basis_dense(self) -> np.ndarray:
        if self.dense:
            return self.matrix.copy()
        m = np.zeros((self.rank, self.ncols), dtype=np.int64)
        for i, row in enumerate(self.basis_sparse()):
            for c, x in row.items():
                m[i, c] = x
        return m

    def canonical(self) -> tuple[tuple[int, ...], np.ndarray]:
        """Pivot columns and reduced echelon matrix; equal spans give equal output."""
        m, piv = rref(self.basis_dense(), self.p) if self.rank else (np.zeros((0, self.ncols), np.int64), [])
        return tuple(piv), m

    def equals(self, other: "Span") -> bool:
        if self.rank != other.rank:
            return False
        return self.contains_span(other)

    def contains_span(self, other: "Span") -> bool:
        if other.rank == 0:
            return True
        if not self.dense and not other.dense:
            if np.any(other.mono & ~self.mono):
                return False
            return all(not self.reduce_sparse(r) for r in other.rows.values())
        return self.contains_dense(other.basis_dense())
