"""Exact elements of c and l1, their base norms, and the c/l1 pairing.

Elements of ``c`` are eventually constant: an explicit prefix followed by a
constant tail equal to the limit.  Elements of ``l1`` are finitely supported.
Every coordinate is a :class:`fractions.Fraction`; nothing here rounds.

Indices are 1-based throughout, as in the usual sequence notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "Rational",
    "as_rational",
    "parse_rational",
    "format_rational",
    "ConvergentSeq",
    "SummableSeq",
    "basis",
    "pair",
    "direct_pair",
    "sup_norm",
    "l1_norm",
    "split_at",
    "pos_neg",
]

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused: a float has already been rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("invalid rational ''")
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"invalid rational {text!r}") from None
    if q == 0:
        raise ValueError(f"invalid rational {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


@dataclass(frozen=True)
class ConvergentSeq:
    """An eventually constant sequence ``x(1..N), limit, limit, ...``.

    The prefix is stored trimmed: trailing entries equal to ``limit`` are
    dropped, so two sequences are equal exactly when their fields are.
    """

    prefix: tuple = ()
    limit: Fraction = Fraction(0)

    def __post_init__(self):
        prefix = [as_rational(v) for v in self.prefix]
        limit = as_rational(self.limit)
        while prefix and prefix[-1] == limit:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "limit", limit)

    @classmethod
    def zero(cls) -> "ConvergentSeq":
        return cls((), Fraction(0))

    def __getitem__(self, i: int) -> Fraction:
        if i < 1:
            raise IndexError("sequence indices start at 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.limit

    def coords(self, length: int) -> list:
        """First ``length`` coordinates, padded with the limit."""
        return [self[i] for i in range(1, length + 1)]

    def __len__(self):
        return len(self.prefix)

    def _binary(self, other, op):
        m = max(len(self.prefix), len(other.prefix))
        return ConvergentSeq(
            tuple(op(self[i], other[i]) for i in range(1, m + 1)),
            op(self.limit, other.limit),
        )

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return ConvergentSeq(tuple(-v for v in self.prefix), -self.limit)

    def scale(self, c) -> "ConvergentSeq":
        c = as_rational(c)
        return ConvergentSeq(tuple(c * v for v in self.prefix), c * self.limit)

    def __str__(self):
        body = ", ".join(format_rational(v) for v in self.prefix)
        return f"({body}; limit {format_rational(self.limit)})"


@dataclass(frozen=True)
class SummableSeq:
    """A finitely supported element of l1, stored as sorted (index, value) pairs."""

    entries: tuple = ()

    def __post_init__(self):
        clean = {}
        for i, v in self.entries:
            if int(i) != i or i < 1:
                raise ValueError(f"l1 index must be a positive integer, got {i!r}")
            v = as_rational(v)
            clean[int(i)] = clean.get(int(i), Fraction(0)) + v
        items = tuple(sorted((i, v) for i, v in clean.items() if v != 0))
        object.__setattr__(self, "entries", items)

    @classmethod
    def from_list(cls, values: Iterable) -> "SummableSeq":
        """Build from coordinates listed from index 1 on."""
        return cls(tuple((i, v) for i, v in enumerate(values, start=1)))

    @classmethod
    def from_dict(cls, mapping: Mapping) -> "SummableSeq":
        return cls(tuple(mapping.items()))

    def __getitem__(self, i: int) -> Fraction:
        for k, v in self.entries:
            if k == i:
                return v
        return Fraction(0)

    def items(self):
        return iter(self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def to_list(self, length: int | None = None) -> list:
        length = self.max_index if length is None else length
        return [self[i] for i in range(1, length + 1)]

    @property
    def max_index(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other):
        return SummableSeq(self.entries + other.entries)

    def __sub__(self, other):
        return SummableSeq(self.entries + tuple((i, -v) for i, v in other.entries))

    def __neg__(self):
        return SummableSeq(tuple((i, -v) for i, v in self.entries))

    def scale(self, c) -> "SummableSeq":
        c = as_rational(c)
        return SummableSeq(tuple((i, c * v) for i, v in self.entries))

    def head(self, n: int) -> "SummableSeq":
        """P_n f: coordinates 1..n kept, the rest zeroed."""
        return SummableSeq(tuple((i, v) for i, v in self.entries if i <= n))

    def tail(self, n: int) -> "SummableSeq":
        """R_n f = f - P_n f."""
        return SummableSeq(tuple((i, v) for i, v in self.entries if i > n))

    def positive(self) -> "SummableSeq":
        return SummableSeq(tuple((i, v) for i, v in self.entries if v > 0))

    def negative(self) -> "SummableSeq":
        return SummableSeq(tuple((i, -v) for i, v in self.entries if v < 0))

    def shifted(self, k: int = 1) -> "SummableSeq":
        """Move every coordinate k places to the right."""
        return SummableSeq(tuple((i + k, v) for i, v in self.entries))

    def __str__(self):
        return "{" + ", ".join(f"{i}: {format_rational(v)}" for i, v in self.entries) + "}"


def basis(k: int) -> SummableSeq:
    """The unit vector e*_k of l1."""
    return SummableSeq(((k, 1),))


def pair(f: SummableSeq, x: ConvergentSeq) -> Fraction:
    """Standard c/l1 duality: f(1) pairs with lim x, f(j+1) with x(j)."""
    total = Fraction(0)
    for i, v in f.items():
        total += v * (x.limit if i == 1 else x[i - 1])
    return total


def direct_pair(f: SummableSeq, x: ConvergentSeq) -> Fraction:
    """Coordinatewise pairing sum_j f(j) x(j).

    This is how l1 acts on a hyperplane W_alpha of c; the limit functional is
    not needed there because it is a combination of coordinates.
    """
    return sum((v * x[i] for i, v in f.items()), Fraction(0))


def sup_norm(x: ConvergentSeq) -> Fraction:
    return max([abs(x.limit)] + [abs(v) for v in x.prefix])


def l1_norm(f: SummableSeq) -> Fraction:
    return sum((abs(v) for _, v in f.items()), Fraction(0))


def split_at(x: ConvergentSeq, n: int) -> tuple[ConvergentSeq, ConvergentSeq]:
    """Return (P_n x, R_n x)."""
    if n < 0:
        raise ValueError("split index must be non-negative")
    head = ConvergentSeq(tuple(x[i] for i in range(1, n + 1)), Fraction(0))
    length = max(n, len(x.prefix))
    tail = ConvergentSeq(
        tuple(Fraction(0) if i <= n else x[i] for i in range(1, length + 1)), x.limit
    )
    return head, tail


def pos_neg(x: ConvergentSeq) -> tuple[ConvergentSeq, ConvergentSeq]:
    pos = ConvergentSeq(tuple(max(v, 0) for v in x.prefix), max(x.limit, 0))
    neg = ConvergentSeq(tuple(max(-v, 0) for v in x.prefix), max(-x.limit, 0))
    return pos, neg
