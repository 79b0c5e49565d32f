"""Characteristic sequences of plane branches and their derived numerical data.

A singular plane branch is encoded up to equisingularity by its characteristic
``(b0, ..., bh)``: ``b0`` is the multiplicity and each later entry is the
smallest exponent numerator that breaks the running gcd.  Everything the rest
of the package needs (gcd chain ``e_i``, the coprime pairs ``(m_i, n_i)``,
semiroot degrees, intersection numbers with semiroots) is precomputed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    GcdChainViolation,
    IndexOutOfRange,
    InvalidCharacteristic,
    NotStrictlyIncreasing,
    TrailingGcdNotOne,
)

__all__ = ["CharSequence", "new_char_sequence", "bbar", "semiroot_degree", "parse_char"]


@dataclass(frozen=True)
class CharSequence:
    """A validated characteristic (b0,...,bh) with its derived sequences.

    Attributes
    ----------
    b     : the characteristic itself, b0 > 1, strictly increasing
    e     : gcd chain, e_i = gcd(b0,...,bi); strictly decreasing with e_h = 1
    n_seq : n_i = e_{i-1}/e_i for i = 1..h
    m_seq : m_i = b_i/e_i for i = 1..h
    bbar  : intersection numbers with the semiroots,
            bbar_l = b_l + sum_{i<l} ((e_{i-1}-e_i)/e_{l-1}) * b_i
    """

    b: tuple[int, ...]
    e: tuple[int, ...]
    n_seq: tuple[int, ...]
    m_seq: tuple[int, ...]
    bbar: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.b) - 1

    @property
    def b0(self) -> int:
        return self.b[0]

    def char_exponents(self) -> tuple[Fraction, ...]:
        """The characteristic exponents b_i/b0 for i = 1..h."""
        return tuple(Fraction(bi, self.b0) for bi in self.b[1:])

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.b) + ")"


def new_char_sequence(b) -> CharSequence:
    """Validate ``b`` and return it with all derived data computed.

    Raises NotStrictlyIncreasing, GcdChainViolation (an entry fails to lower
    the running gcd) or TrailingGcdNotOne (the chain does not reach 1).
    """
    b = tuple(int(v) for v in b)
    if not b:
        raise InvalidCharacteristic("characteristic must be nonempty")
    if b[0] <= 1:
        raise InvalidCharacteristic(f"multiplicity b0 must exceed 1, got {b[0]}")
    if any(x >= y for x, y in zip(b, b[1:])):
        raise NotStrictlyIncreasing(f"characteristic must be strictly increasing: {b}")
    if len(b) == 1:
        raise TrailingGcdNotOne(f"gcd chain of {b} ends at {b[0]}, not 1")

    e = [b[0]]
    for i, bi in enumerate(b[1:], start=1):
        g = gcd(e[-1], bi)
        if g == e[-1]:
            raise GcdChainViolation(
                f"b_{i} = {bi} does not lower the gcd e_{i - 1} = {e[-1]}"
            )
        e.append(g)
    if e[-1] != 1:
        raise TrailingGcdNotOne(f"gcd chain of {b} ends at {e[-1]}, not 1")

    n_seq = tuple(e[i - 1] // e[i] for i in range(1, len(b)))
    m_seq = tuple(b[i] // e[i] for i in range(1, len(b)))

    bbar_seq = []
    for l in range(1, len(b)):
        acc = b[l] * e[l - 1]
        for i in range(1, l):
            acc += (e[i - 1] - e[i]) * b[i]
        q, r = divmod(acc, e[l - 1])
        assert r == 0, f"bbar_{l} of {b} is not an integer"
        bbar_seq.append(q)

    return CharSequence(b, tuple(e), n_seq, m_seq, tuple(bbar_seq))


def bbar(cs: CharSequence, l: int) -> int:
    """Intersection number of the branch with its l-th semiroot, 1 <= l <= h."""
    if not 1 <= l <= cs.h:
        raise IndexOutOfRange(f"semiroot index {l} not in 1..{cs.h}")
    return cs.bbar[l - 1]


def semiroot_degree(cs: CharSequence, l: int) -> int:
    """Degree b0/e_{l-1} = n_1 * ... * n_{l-1} of the l-th semiroot."""
    if not 1 <= l <= cs.h:
        raise IndexOutOfRange(f"semiroot index {l} not in 1..{cs.h}")
    return cs.b0 // cs.e[l - 1]


def parse_char(text: str) -> CharSequence:
    """Parse a comma-separated characteristic such as "12,16,31"."""
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidCharacteristic(f"cannot parse characteristic {text!r}") from exc
    return new_char_sequence(entries)
