"""Bijective base-k numeration, specialized to lowercase strings and atoms.

Digit sequences are least-significant-first with surface digits in
[0, base-1]; arithmetic uses the shifted digits 1..base, which is what makes
the map bijective (a leading zero digit is significant, so "a" and "aa" get
different codes where ordinary positional notation would collapse them).
"""

from __future__ import annotations

from .errors import CodecError

_A = ord("a")
_Z = ord("z")
ALPHABET_BASE = _Z - _A + 1


def _check_base(op: str, base: int) -> None:
    if base < 2:
        raise CodecError(f"{op}: base must be >= 2 (got {base})")


def from_bbase(base: int, digits: list[int]) -> int:
    """Value of a least-significant-first digit sequence in bijective base-k."""
    _check_base("from_bbase", base)
    r = 0
    for d in reversed(digits):
        if not 0 <= d < base:
            raise CodecError(f"from_bbase: digit {d} is outside [0, {base - 1}]")
        r = r * base + d + 1
    return r


def to_bbase(base: int, n: int) -> list[int]:
    """The unique digit sequence whose from_bbase value is n; empty iff n == 0."""
    _check_base("to_bbase", base)
    if n < 0:
        raise CodecError(f"to_bbase: argument must be >= 0 (got {n})")
    digits = []
    while n > 0:
        d = n % base
        if d == 0:
            digits.append(base - 1)
            n = n // base - 1
        else:
            digits.append(d - 1)
            n = n // base
    return digits


def string2nat(s: str) -> int:
    """Encode a string over 'a'..'z' (first character least significant)."""
    digits = []
    for i, ch in enumerate(s):
        d = ord(ch) - _A
        if not 0 <= d < ALPHABET_BASE:
            raise CodecError(
                f"string2nat: character {ch!r} at index {i} is outside 'a'..'z'"
            )
        digits.append(d)
    return from_bbase(ALPHABET_BASE, digits)


def nat2string(n: int) -> str:
    return "".join(chr(_A + d) for d in to_bbase(ALPHABET_BASE, n))


def atom2nat(name: str) -> int:
    """Encode a symbol name; numerically identical to string2nat."""
    return string2nat(name)


def nat2atom(n: int) -> str:
    return nat2string(n)
