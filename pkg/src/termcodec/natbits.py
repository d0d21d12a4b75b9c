"""Primitive operations on unbounded non-negative integers.

Python ints are already arbitrary-precision, so the primitives below are
thin wrappers whose value is the explicit domain checking: operations that
are undefined on 0 (or on negatives) fail loudly instead of wrapping.
"""

from __future__ import annotations

from .errors import CodecError


def first_bit(n: int) -> int:
    return n & 1


def shift_left(n: int, k: int) -> int:
    return n << k


def shift_right(n: int, k: int) -> int:
    return n >> k


def successor(n: int) -> int:
    return n + 1


def predecessor(n: int) -> int:
    if n < 1:
        raise CodecError(f"predecessor: argument must be >= 1 (got {n})")
    return n - 1


def lsb(n: int) -> int:
    """Index of the lowest set bit, i.e. the largest e with 2^e dividing n."""
    if n < 1:
        raise CodecError(f"lsb: argument must be >= 1 (got {n})")
    return (n & -n).bit_length() - 1


def cons(x: int, y: int) -> int:
    """Fuse two naturals into one positive natural: 2^x * (2y + 1)."""
    if x < 0 or y < 0:
        raise CodecError(f"cons: arguments must be >= 0 (got {x}, {y})")
    return ((y << 1) | 1) << x


def decons(z: int) -> tuple[int, int]:
    """Split a positive natural into the unique (x, y) with cons(x, y) == z."""
    if z < 1:
        raise CodecError(f"decons: argument must be >= 1 (got {z})")
    x = (z & -z).bit_length() - 1
    return x, z >> (x + 1)
