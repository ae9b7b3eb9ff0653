"""Digit dumps of square roots of the a-sequence and their repeated-digit blocks.

Square roots of the odd-indexed a(n, k) are irrational yet open with long
runs of repeated digits separated by growing chaotic stretches; their
reciprocals show the same pattern with blocks of zeros.  Everything here is
exact integer arithmetic: a dump of p fractional digits is the floor of the
true value scaled by 10^p, so raising the precision extends the digits and
never rewrites them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .formulas import a_seq
from .numerics import DigitString

DEFAULT_MIN_RUN = 4


@dataclass(frozen=True)
class DigitDump:
    """Truncated positional expansion of an irrational (or integer) value."""

    subject: str
    int_part: DigitString
    frac_part: DigitString
    precision: int

    def __str__(self) -> str:
        return f"{self.int_part}.{self.frac_part}"


@dataclass(frozen=True)
class Block:
    digit: int
    start: int  # offset from the decimal point; 0 = first fractional digit,
    length: int  # negative starts reach back into the integer part


@dataclass(frozen=True)
class BlockReport:
    blocks: tuple[Block, ...]


def _natural_digits(x: int, radix: int) -> DigitString:
    digits = []
    while x:
        x, d = divmod(x, radix)
        digits.append(d)
    if not digits:
        digits.append(0)
    digits.reverse()
    return DigitString(radix=radix, digits=tuple(digits))


def _fixed_digits(x: int, radix: int, width: int) -> DigitString:
    digits = []
    for _ in range(width):
        x, d = divmod(x, radix)
        digits.append(d)
    digits.reverse()
    return DigitString(radix=radix, digits=tuple(digits))


def _split_dump(subject: str, scaled: int, precision: int, radix: int) -> DigitDump:
    scale = radix**precision
    int_value, frac_value = divmod(scaled, scale)
    return DigitDump(subject=subject,
                     int_part=_natural_digits(int_value, radix),
                     frac_part=_fixed_digits(frac_value, radix, precision),
                     precision=precision)


def sqrt_digits(x: int, precision: int, radix: int = 10) -> DigitDump:
    """First `precision` fractional digits of sqrt(x), truncated never rounded.

    Computes isqrt(x * radix^(2p)), which is exactly floor(sqrt(x) * radix^p).
    """
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    if precision < 1:
        raise ValueError(f"need precision >= 1, got {precision}")
    scale = radix**precision
    scaled = isqrt(x * scale * scale)
    return _split_dump(f"sqrt({x})", scaled, precision, radix)


def inv_sqrt_digits(x: int, precision: int, radix: int = 10) -> DigitDump:
    """First `precision` fractional digits of 1/sqrt(x), truncated.

    floor(radix^p / sqrt(x)) equals isqrt(floor(radix^(2p) / x)) because
    floor(sqrt(floor(y))) == floor(sqrt(y)) for y >= 0.
    """
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    if precision < 1:
        raise ValueError(f"need precision >= 1, got {precision}")
    scale = radix**precision
    scaled = isqrt(scale * scale // x)
    return _split_dump(f"1/sqrt({x})", scaled, precision, radix)


def block_report(dump: DigitDump, min_run: int = DEFAULT_MIN_RUN) -> BlockReport:
    """Maximal repeated-digit runs of length >= min_run, in position order.

    Runs are found in the combined integer-and-fraction digit stream, so a
    block may begin left of the decimal point (negative start).  A run that
    reaches the last computed digit is withheld: it may continue at higher
    precision, so its maximality cannot be certified.  In particular a
    perfect square dumps as x.000...0 and reports no blocks.
    """
    if min_run < 2:
        raise ValueError(f"need min_run >= 2, got {min_run}")
    stream = dump.int_part.digits + dump.frac_part.digits
    point = len(dump.int_part.digits)
    blocks = []
    i = 0
    while i < len(stream):
        j = i
        while j < len(stream) and stream[j] == stream[i]:
            j += 1
        if j == len(stream):
            break
        if j - i >= min_run:
            blocks.append(Block(digit=stream[i], start=i - point, length=j - i))
        i = j
    return BlockReport(blocks=tuple(blocks))


@dataclass(frozen=True)
class SurveyEntry:
    n: int
    value: int
    root: DigitDump
    root_blocks: BlockReport
    inverse: DigitDump
    inverse_blocks: BlockReport


def schizo_survey(k: int, n_max: int, precision: int,
                  min_run: int = DEFAULT_MIN_RUN,
                  radix: int = 10) -> tuple[SurveyEntry, ...]:
    """Digit dumps and block reports for sqrt(a(n,k)) and its reciprocal.

    Covers odd n up to n_max; in base 10 those are the odd a-values, the
    schizophrenic candidates.  Purely observational: nothing here asserts a
    pattern, it only records one.  Pass radix=k to inspect the expansions in
    the tree's own base.
    """
    if k < 2:
        raise ValueError(f"branching factor must be >= 2, got {k}")
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    entries = []
    for n in range(1, n_max + 1, 2):
        value = a_seq(n, k)
        root = sqrt_digits(value, precision, radix=radix)
        inverse = inv_sqrt_digits(value, precision, radix=radix)
        entries.append(SurveyEntry(
            n=n, value=value,
            root=root, root_blocks=block_report(root, min_run),
            inverse=inverse, inverse_blocks=block_report(inverse, min_run)))
    return tuple(entries)
