"""Hirzebruch-Jung continued fractions and the integer series attached to them.

Everything here is exact integer (or ``Fraction``) arithmetic.  A cyclic
quotient singularity of type 1/r(1,a) is encoded by the pair ``(r, a)``; its
minimal resolution is a chain of rational curves whose self-intersections are
the negated entries of the continued fraction r/a = [alpha_1, ..., alpha_n].

Three integer sequences govern the combinatorics downstream:

* the I-series (r, a, ..., 1, 0), decreasing, whose middle entries are the
  special weights;
* the J-series (0, 1, ..., r), its mirror for the inverse weight;
* the two-sided H(s) family interpolating between them, which packages the
  coefficients of pullback and fiber divisors on the resolution.

All sequences are stored with both endpoints (indices 0 and n+1) so positions
in formulas can be used verbatim with no off-by-one shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


class ValidationError(ValueError):
    """A value failed its construction invariants."""


@dataclass(frozen=True)
class CyclicType:
    """The singularity type 1/r(1,a): coprime integers with 1 <= a < r.

    The smooth case r = 1 is rejected on purpose; callers that need to
    handle smooth points should branch before constructing a ``CyclicType``.
    Every chain-indexed formula in this package needs n >= 1 exceptional
    curves.
    """

    r: int
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.a, int):
            raise ValidationError(f"(r, a) must be integers, got ({self.r!r}, {self.a!r})")
        if self.r < 2:
            raise ValidationError(f"need r >= 2, got r={self.r}")
        if not 1 <= self.a < self.r:
            raise ValidationError(f"need 1 <= a < r, got (r, a)=({self.r}, {self.a})")
        if gcd(self.r, self.a) != 1:
            raise ValidationError(f"r and a must be coprime, got ({self.r}, {self.a})")

    def __str__(self) -> str:
        return f"1/{self.r}({1},{self.a})"


@dataclass(frozen=True)
class HJExpansion:
    """The continued fraction r/a = [alpha_1, ..., alpha_n], every alpha >= 2."""

    alphas: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.alphas:
            raise ValidationError("expansion must be nonempty")
        if any(al < 2 for al in self.alphas):
            raise ValidationError(f"every entry must be >= 2, got {self.alphas}")

    @property
    def n(self) -> int:
        return len(self.alphas)

    def value(self) -> Fraction:
        """Evaluate [alpha_1, ..., alpha_n] as an exact rational."""
        acc = Fraction(self.alphas[-1])
        for al in reversed(self.alphas[:-1]):
            acc = al - 1 / acc
        return acc


@dataclass(frozen=True)
class Series:
    """An integer sequence indexed 0..n+1, of kind "I", "J", or "H".

    For kind "H" the defining index ``s`` (the position of the zero entry)
    is recorded; it is None for "I" and "J".
    """

    kind: str
    values: tuple[int, ...]
    s: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("I", "J", "H"):
            raise ValidationError(f"unknown series kind {self.kind!r}")
        if (self.kind == "H") != (self.s is not None):
            raise ValidationError("index s is set exactly for H-series")

    def __getitem__(self, t: int) -> int:
        return self.values[t]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def hj_expand(t: CyclicType) -> HJExpansion:
    """Expand r/a as a continued fraction with all entries >= 2.

    Runs the descending recursion i_{t+1} = alpha_t * i_t - i_{t-1} with
    alpha_t the ceiling of i_{t-1}/i_t, which terminates at 1 then 0.
    """
    prev, cur = t.r, t.a
    alphas = []
    while cur > 0:
        al = -(-prev // cur)  # ceiling division
        prev, cur = cur, al * cur - prev
        alphas.append(al)
    return HJExpansion(tuple(alphas))


@lru_cache(maxsize=None)
def i_series(t: CyclicType) -> Series:
    """The decreasing series r, a, ..., 1, 0 with i_t = alpha_{t-1} i_{t-1} - i_{t-2}."""
    alphas = hj_expand(t).alphas
    vals = [t.r, t.a]
    for al in alphas:
        vals.append(al * vals[-1] - vals[-2])
    assert vals[-1] == 0 and vals[-2] == 1, (t, vals)
    return Series("I", tuple(vals))


@lru_cache(maxsize=None)
def j_series(t: CyclicType) -> Series:
    """The increasing series 0, 1, ..., r with j_t = alpha_{t-1} j_{t-1} - j_{t-2}."""
    alphas = hj_expand(t).alphas
    vals = [0, 1]
    for al in alphas:
        vals.append(al * vals[-1] - vals[-2])
    # the recursion consumes alpha_1..alpha_n and lands exactly on r
    assert vals[-1] == t.r, (t, vals)
    return Series("J", tuple(vals[: hj_expand(t).n + 2]))


@lru_cache(maxsize=None)
def h_series(t: CyclicType, s: int) -> Series:
    """The two-sided series H(s): zero at position s, 1 beside it.

    Entries below s follow the downward recursion
    h_t = alpha_{t+1} h_{t+1} - h_{t+2}, entries above follow the upward one
    h_t = alpha_{t-1} h_{t-1} - h_{t-2}.  H(0) is the J-series and H(n+1)
    the I-series.
    """
    alphas = hj_expand(t).alphas
    n = len(alphas)
    if not 0 <= s <= n + 1:
        raise ValidationError(f"s must lie in 0..{n + 1}, got {s}")
    vals: list[int | None] = [None] * (n + 2)
    vals[s] = 0
    if s - 1 >= 0:
        vals[s - 1] = 1
    if s + 1 <= n + 1:
        vals[s + 1] = 1
    for pos in range(s - 2, -1, -1):
        vals[pos] = alphas[pos] * vals[pos + 1] - vals[pos + 2]
    for pos in range(s + 2, n + 2):
        vals[pos] = alphas[pos - 2] * vals[pos - 1] - vals[pos - 2]
    return Series("H", tuple(vals), s=s)


def inverse_weight(t: CyclicType) -> CyclicType:
    """Return (r, a') with a*a' = 1 mod r.

    The expansion of (r, a') is the reversal of the expansion of (r, a),
    matching the two normal forms of the same two-dimensional cone.
    """
    return CyclicType(t.r, pow(t.a, -1, t.r))


def all_types(max_r: int, min_r: int = 2):
    """Yield every valid CyclicType with min_r <= r <= max_r."""
    for r in range(min_r, max_r + 1):
        for a in range(1, r):
            if gcd(r, a) == 1:
                yield CyclicType(r, a)
