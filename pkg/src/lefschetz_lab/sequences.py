"""Integer sequences indexed by the integers, with finite support on the left.

An :class:`IntSeq` stores the values on a window ``start .. start+len-1``.
Below the window it is zero.  Above the window it is either zero
(``exact=True``) or simply unknown (``exact=False``), which is how Hilbert
functions of non-Artinian quotients are represented after truncation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnboundedSupport


@dataclass(frozen=True)
class IntSeq:
    values: tuple[int, ...]
    start: int = 0
    exact: bool = True

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def from_mapping(cls, data: Mapping[int, int], exact: bool = True) -> "IntSeq":
        if not data:
            return cls((), 0, exact)
        lo, hi = min(data), max(data)
        return cls(tuple(data.get(m, 0) for m in range(lo, hi + 1)), lo, exact)

    @property
    def stop(self) -> int:
        return self.start + len(self.values)

    def __getitem__(self, m: int) -> int:
        if m < self.start:
            return 0
        if m >= self.stop:
            if self.exact:
                return 0
            raise IndexError(f"value at {m} lies beyond the truncation point {self.stop - 1}")
        return self.values[m - self.start]

    def known(self, m: int) -> bool:
        return self.exact or m < self.stop

    def window(self, lo: int, hi: int) -> list[int]:
        return [self[m] for m in range(lo, hi + 1)]

    def trimmed(self) -> "IntSeq":
        """Drop trailing zeros of an exact sequence."""
        vals = list(self.values)
        if self.exact:
            while vals and vals[-1] == 0:
                vals.pop()
        return IntSeq(tuple(vals), self.start, self.exact)

    def truncate(self, hi: int) -> "IntSeq":
        """Keep indices ``<= hi``; the result no longer claims anything beyond."""
        return IntSeq(tuple(self[m] for m in range(self.start, hi + 1)), self.start, False)

    def __add__(self, other: "IntSeq") -> "IntSeq":
        return _combine(self, other, lambda a, b: a + b)

    def __sub__(self, other: "IntSeq") -> "IntSeq":
        return _combine(self, other, lambda a, b: a - b)

    def shift(self, k: int) -> "IntSeq":
        """``m -> h(m - k)``."""
        return IntSeq(self.values, self.start + k, self.exact)

    def total(self) -> int:
        if not self.exact:
            raise UnboundedSupport("total of a truncated sequence is undefined")
        return sum(self.values)

    def agrees(self, other: "IntSeq", lo: int, hi: int) -> bool:
        return self.window(lo, hi) == other.window(lo, hi)

    def is_symmetric(self) -> bool:
        t = self.trimmed()
        return t.exact and list(t.values) == list(reversed(t.values))

    def is_unimodal(self) -> bool:
        vals = list(self.trimmed().values)
        i = 0
        while i + 1 < len(vals) and vals[i + 1] >= vals[i]:
            i += 1
        while i + 1 < len(vals) and vals[i + 1] <= vals[i]:
            i += 1
        return i >= len(vals) - 1

    def to_list(self) -> list[int]:
        return list(self.values)


def _combine(a: IntSeq, b: IntSeq, op) -> IntSeq:
    lo = min(a.start, b.start)
    exact = a.exact and b.exact
    if exact:
        hi = max(a.stop, b.stop)
    else:
        hi = min(x.stop for x in (a, b) if not x.exact)
    return IntSeq(tuple(op(a[m], b[m]) for m in range(lo, hi)), lo, exact)


def _as_seq(h) -> IntSeq:
    if isinstance(h, IntSeq):
        return h
    if isinstance(h, Mapping):
        return IntSeq.from_mapping(h)
    if callable(h):
        raise UnboundedSupport("cannot certify a left-finite support for an arbitrary function")
    return IntSeq(tuple(h))


def delta(h) -> IntSeq:
    """``m -> h(m) - h(m-1)``."""
    h = _as_seq(h)
    stop = h.stop + 1 if h.exact else h.stop
    return IntSeq(tuple(h[m] - h[m - 1] for m in range(h.start, stop)), h.start, h.exact)


def delta_plus(h) -> IntSeq:
    """``m -> max(0, h(m) - h(m-1))``."""
    d = delta(h)
    return IntSeq(tuple(max(0, v) for v in d.values), d.start, d.exact)


def gamma(h) -> IntSeq:
    """Partial sums ``m -> sum_{i <= m} h(i)``.

    The result of summing a finitely supported sequence is eventually
    constant, not eventually zero, so it is returned truncated at the last
    index where ``h`` is known.
    """
    h = _as_seq(h)
    out, acc = [], 0
    for v in h.values:
        acc += v
        out.append(acc)
    return IntSeq(tuple(out), h.start, False)


def delta_power(h, q: int) -> IntSeq:
    h = _as_seq(h)
    for _ in range(q):
        h = delta(h)
    return h


def gamma_power(h, q: int, length: int | None = None) -> IntSeq:
    """Iterated summation; ``length`` pads an exact input with zeros first."""
    h = _as_seq(h)
    if length is not None and h.exact and len(h.values) < length:
        h = IntSeq(h.values + (0,) * (length - len(h.values)), h.start, True)
    for _ in range(q):
        h = gamma(h)
    return h


def point_mass(m: int = 0) -> IntSeq:
    return IntSeq((1,), m, True)


def as_intseq(values: Iterable[int], start: int = 0, exact: bool = True) -> IntSeq:
    return IntSeq(tuple(values), start, exact)
