"""Highest weights, partitions and their elementary operations.

A weight of U(inf) is an integer sequence ``lambda_1, lambda_2, ...``.  Only
eventually constant sequences have a finite description, so a :class:`Weight`
stores a finite prefix together with the constant value of the tail.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError

__all__ = [
    "Weight",
    "Partition",
    "FiniteWeight",
    "parse_weight",
    "parse_tuple",
    "conjugate",
    "split_signs",
    "dual_weight",
]

_INT = re.compile(r"^[+-]?\d+$")


def _strip_tail(prefix: Sequence[int], tail: int) -> tuple[int, ...]:
    entries = list(prefix)
    while entries and entries[-1] == tail:
        entries.pop()
    return tuple(entries)


@dataclass(frozen=True)
class Weight:
    """Eventually constant integer sequence ``prefix + (tail, tail, ...)``.

    Instances are always canonical: the prefix never ends with an entry equal
    to the tail.  Use :meth:`make` to build one from arbitrary data.
    """

    prefix: tuple[int, ...] = ()
    tail: int = 0

    def __post_init__(self):
        if self.prefix and self.prefix[-1] == self.tail:
            raise ValueError("non-canonical Weight; use Weight.make")

    @classmethod
    def make(cls, prefix: Iterable[int] = (), tail: int = 0) -> "Weight":
        tail = int(tail)
        return cls(_strip_tail([int(x) for x in prefix], tail), tail)

    def __getitem__(self, j: int) -> int:
        """1-based entry ``lambda_j``."""
        if j < 1:
            raise IndexError("weights are indexed from 1")
        return self.prefix[j - 1] if j <= len(self.prefix) else self.tail

    def truncate(self, k: int) -> tuple[int, ...]:
        """The first ``k`` entries, i.e. the U(k) weight ``lambda^(k)``."""
        return tuple(self[j] for j in range(1, k + 1))

    @property
    def is_zero(self) -> bool:
        return not self.prefix and self.tail == 0

    @property
    def finitely_supported(self) -> bool:
        return self.tail == 0

    def to_finite(self) -> "FiniteWeight":
        if not self.finitely_supported:
            raise ValueError(f"weight {self} has infinite support")
        return FiniteWeight.make(self.prefix)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.prefix) + f";{self.tail}"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers (a Young diagram)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.parts, self.parts[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")
        if any(p <= 0 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")

    @classmethod
    def make(cls, parts: Iterable[int]) -> "Partition":
        """Sort descending and drop zeros."""
        return cls(tuple(sorted((int(p) for p in parts if p != 0), reverse=True)))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < self.length:
            raise ValueError(f"cannot pad {self.parts} to length {n}")
        return self.parts + (0,) * (n - self.length)


@dataclass(frozen=True)
class FiniteWeight:
    """Finitely supported integer sequence, trailing zeros trimmed."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.entries and self.entries[-1] == 0:
            raise ValueError("non-canonical FiniteWeight; use FiniteWeight.make")

    @classmethod
    def make(cls, entries: Iterable[int] = ()) -> "FiniteWeight":
        return cls(_strip_tail([int(x) for x in entries], 0))

    @property
    def plus(self) -> Partition:
        return split_signs(self)[0]

    @property
    def minus(self) -> Partition:
        return split_signs(self)[1]

    @property
    def size(self) -> int:
        """``|lambda| = |lambda^+| + |lambda^-|``."""
        return sum(abs(x) for x in self.entries)

    @property
    def nonzero_count(self) -> int:
        return sum(1 for x in self.entries if x != 0)

    def highest_weight(self, n: int) -> tuple[int, ...]:
        """Dominant U(n) weight ``(lambda^+, 0, ..., 0, -reversed(lambda^-))``."""
        plus, minus = split_signs(self)
        if plus.length + minus.length > n:
            raise ValueError(
                f"{self.entries} has {plus.length + minus.length} nonzero entries; "
                f"no U({n}) highest weight")
        zeros = n - plus.length - minus.length
        return plus.parts + (0,) * zeros + tuple(-x for x in reversed(minus.parts))

    def to_weight(self) -> Weight:
        return Weight.make(self.entries, 0)


def _parse_ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not _INT.match(tok):
            raise ParseError(f"not an integer: {tok!r}")
        out.append(int(tok))
    return out


def parse_weight(text: str) -> Weight:
    """Parse ``"a,b,c;t"`` (tail ``t``) or ``"a,b,c"`` (tail 0).

    >>> parse_weight("1,1;1")
    Weight(prefix=(), tail=1)
    """
    if text.count(";") > 1:
        raise ParseError(f"at most one ';' allowed: {text!r}")
    head, sep, tail_text = text.partition(";")
    prefix = _parse_ints(head)
    if sep:
        tail_text = tail_text.strip()
        if not _INT.match(tail_text):
            raise ParseError(f"tail must be an integer: {tail_text!r}")
        tail = int(tail_text)
    else:
        tail = 0
    return Weight.make(prefix, tail)


def parse_tuple(text: str) -> tuple[int, ...]:
    """Parse a literal finite integer tuple ``"a,b,c"`` (no canonicalization).

    A trailing ``";0"`` is accepted for symmetry with :func:`parse_weight`.
    """
    head, sep, tail_text = text.partition(";")
    if sep and tail_text.strip() not in ("0", "+0", "-0"):
        raise ParseError(f"finite tuple cannot carry a nonzero tail: {text!r}")
    return tuple(_parse_ints(head))


def conjugate(p: Partition) -> Partition:
    """Transposed Young diagram: ``p'_i = #{j : p_j >= i}``."""
    if not p.parts:
        return Partition(())
    return Partition(tuple(sum(1 for x in p.parts if x >= i)
                           for i in range(1, p.parts[0] + 1)))


def split_signs(w: FiniteWeight) -> tuple[Partition, Partition]:
    plus = Partition.make(x for x in w.entries if x > 0)
    minus = Partition.make(-x for x in w.entries if x < 0)
    return plus, minus


def dual_weight(w: Weight) -> Weight:
    """Weight of the dual representation (entrywise negation)."""
    return Weight.make((-x for x in w.prefix), -w.tail)
