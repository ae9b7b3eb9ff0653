"""Exact big-integer base-k arithmetic.

Everything here is integer-only: repunits, the height index of a chip pile,
fixed-width digit expansions, trailing-zero valuations, and the map from a
chip count to its unique stable per-layer configuration.  No floating point
appears anywhere on a numeric path.
"""

from __future__ import annotations

from dataclasses import dataclass

_DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _require_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"branching factor must be >= 2, got {k}")


def exact_div(num: int, den: int) -> int:
    """Divide, insisting on a zero remainder."""
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class DigitString:
    """A fixed-width digit sequence, most significant digit first.

    Leading zeros are allowed; `value()` reconstructs the integer exactly.
    """

    radix: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.radix < 2:
            raise ValueError(f"radix must be >= 2, got {self.radix}")
        for d in self.digits:
            if not 0 <= d < self.radix:
                raise ValueError(f"digit {d} out of range for radix {self.radix}")

    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = v * self.radix + d
        return v

    def __str__(self) -> str:
        if self.radix <= len(_DIGIT_CHARS):
            return "".join(_DIGIT_CHARS[d] for d in self.digits)
        return ".".join(str(d) for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class StableConfig:
    """Chips per vertex, by layer, in the unique stable configuration.

    `c[i]` is the chip count on every vertex of layer i+1 (root = layer 1);
    each entry lies in 1..k and sum(c[i] * k^i) recovers the initial pile.
    """

    k: int
    n: int
    c: tuple[int, ...]

    def __post_init__(self) -> None:
        _require_k(self.k)
        if self.n != len(self.c):
            raise ValueError("height index does not match layer count")
        for ci in self.c:
            if not 1 <= ci <= self.k:
                raise ValueError(f"per-vertex count {ci} outside 1..{self.k}")

    def total_chips(self) -> int:
        return sum(ci * self.k**i for i, ci in enumerate(self.c))


def repunit(n: int, k: int) -> int:
    """1 + k + ... + k^(n-1), i.e. n ones in base k.  repunit(0, k) == 0."""
    if n < 0:
        raise ValueError(f"repunit index must be >= 0, got {n}")
    _require_k(k)
    r = 0
    for _ in range(n):
        r = r * k + 1
    return r


def height_index(N: int, k: int) -> int:
    """The unique n with repunit(n, k) <= N < repunit(n+1, k).

    Computed by exact comparison against successive repunits; the boundary
    N == repunit(n, k) is where all downstream formulas switch, so no
    logarithm approximation is acceptable.
    """
    _require_k(k)
    if N < 1:
        raise ValueError(f"height index is undefined for N = {N}; need N >= 1")
    n = 1
    nxt = k + 1  # repunit(2, k)
    while nxt <= N:
        n += 1
        nxt = nxt * k + 1
    return n


def to_base(x: int, k: int, width: int) -> DigitString:
    """Base-k expansion of x with exactly `width` digits (leading zeros ok)."""
    _require_k(k)
    if x < 0:
        raise ValueError(f"cannot expand negative value {x}")
    if width < 0:
        raise ValueError(f"width must be >= 0, got {width}")
    digits = []
    for _ in range(width):
        x, d = divmod(x, k)
        digits.append(d)
    if x != 0:
        raise ValueError(f"width {width} too small for value in base {k}")
    digits.reverse()
    return DigitString(radix=k, digits=tuple(digits))


def nu(x: int, k: int) -> int:
    """Largest e with k^e dividing x; the count of trailing zeros of x in base k."""
    _require_k(k)
    if x < 1:
        raise ValueError(f"trailing-zero count is undefined for x = {x}")
    e = 0
    while x % k == 0:
        e += 1
        x //= k
    return e


def stable_config(N: int, k: int) -> StableConfig:
    """Stable per-layer chip counts for a pile of N chips dropped on the root.

    Layer i+1 carries one more chip per vertex than digit i of N - repunit(n, k)
    in base k, where n is the height index of N.
    """
    n = height_index(N, k)
    a = to_base(N - repunit(n, k), k, n)
    c = tuple(d + 1 for d in reversed(a.digits))
    return StableConfig(k=k, n=n, c=c)
