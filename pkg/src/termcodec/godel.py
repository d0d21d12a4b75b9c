"""Bijective numbering of the terms over a finite signature.

Codes are laid out in three bands: variables map to [0, LV), constants to
[LV, LV+LC), and every larger code c encodes a compound term. For compounds,
c - (LV+LC) splits by divmod into a functor index (mod the functor count)
and a payload, and the payload splits into one code per argument via the
tuple codec at the functor's arity. Decoding is total on the naturals
whenever at least one functor is declared, and every argument code is
strictly smaller than its parent's, so decoding always terminates.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .errors import CodecError
from .terms import Compound, Const, Signature, Term, Var, validate_signature
from .tuples import from_tuple, to_tuple


@lru_cache(maxsize=None)
def _index_maps(sig: Signature):
    validate_signature(sig)
    var_ix = {v: i for i, v in enumerate(sig.vars)}
    const_ix = {c: i for i, c in enumerate(sig.consts)}
    fun_ix = {fk: i for i, fk in enumerate(sig.funs)}
    return var_ix, const_ix, fun_ix


def term2nat(sig: Signature, t: Term) -> int:
    """Encode a term whose symbols all occur in the signature."""
    var_ix, const_ix, fun_ix = _index_maps(sig)
    lv, lvc, lf = sig.lv, sig.lvc, sig.lf
    codes: list[int] = []
    work: list[tuple[Term, bool]] = [(t, False)]
    while work:
        node, ready = work.pop()
        if isinstance(node, Var):
            i = var_ix.get(node.name)
            if i is None:
                raise CodecError(f"term2nat: variable {node.name} is not in the signature")
            codes.append(i)
        elif isinstance(node, Const):
            i = const_ix.get(node.symbol)  # int leaves never match declared symbols
            if i is None:
                raise CodecError(f"term2nat: constant {node.symbol!r} is not in the signature")
            codes.append(lv + i)
        elif isinstance(node, Compound):
            if not ready:
                work.append((node, True))
                for arg in reversed(node.args):
                    work.append((arg, False))
            else:
                k = len(node.args)
                label = fun_ix.get((node.functor, k))
                if label is None:
                    raise CodecError(
                        f"term2nat: functor {node.functor}/{k} is not in the signature"
                    )
                args = codes[-k:]
                del codes[-k:]
                codes.append(lvc + lf * from_tuple(args) + label)
        else:
            raise CodecError(f"term2nat: not a term: {node!r}")
    return codes[0]


def nat2term(sig: Signature, n: int) -> Term:
    """Decode any natural to a term; inverse of term2nat.

    Uses an explicit work stack: a signature with a unary functor yields
    nesting depth proportional to the code's bitsize.
    """
    _index_maps(sig)
    if n < 0:
        raise CodecError(f"nat2term: code must be >= 0 (got {n})")
    lv, lvc, lf = sig.lv, sig.lvc, sig.lf
    vars_, consts, funs = sig.vars, sig.consts, sig.funs
    # frame: [functor or None, argument codes, decoded children]
    frames: list[list] = [[None, (n,), []]]
    while True:
        functor, codes, kids = frames[-1]
        if len(kids) == len(codes):
            frames.pop()
            node: Term = kids[0] if functor is None else Compound(functor, tuple(kids))
            if not frames:
                return node
            frames[-1][2].append(node)
            continue
        c = codes[len(kids)]
        if c < lv:
            kids.append(Var(vars_[c]))
        elif c < lvc:
            kids.append(Const(consts[c - lv]))
        else:
            if lf == 0:
                raise CodecError(
                    f"nat2term: code {c} requires a function symbol but the "
                    f"signature declares none (codes beyond {lvc - 1} are undecodable)"
                )
            x0 = c - lvc
            name, arity = funs[x0 % lf]
            frames.append([name, to_tuple(arity, x0 // lf), []])


def ranterm(sig: Signature, bits: int, rng: random.Random) -> Term:
    """Decode a code drawn uniformly from [0, 2^bits).

    The draw is uniform over codes, not over term shapes. Deterministic for
    a given rng state (rng is a random.Random, i.e. seeded Mersenne Twister).
    """
    if bits < 1:
        raise CodecError(f"ranterm: bits must be >= 1 (got {bits})")
    _index_maps(sig)
    if sig.lf == 0:
        raise CodecError("ranterm: signature declares no function symbols")
    return nat2term(sig, rng.getrandbits(bits))
