"""Structure/content split for terms, and the codecs built on top of it.

term2bitpars separates a term into a balanced-parenthesis skeleton (a list
over {0, 1}, 0 = open, 1 = close) and the list of atoms stripped from it:
functor names and leaves, in left-to-right emission order. Two number codecs
aggregate the skeleton: inj_code reads it as bijective base-2 digits
(injective only: most naturals are not balanced), while term2code goes
through the Nat <-> balanced-sequence bijection nat2pars/pars2nat, itself
built on the Nat <-> [Nat] bijection nat2nats/nats2nat.

Skeleton decoding is partial: it accepts exactly the image of term2bitpars.
A group with fewer than two children is rejected (a compound needs a functor
and at least one argument; accepting [0,0,1,1] would collide with the leaf
skeleton [0,1]). The atom filling a functor slot must be a lowercase symbol.

All tree walks use explicit stacks; skeleton depth can reach len(ps) // 2.
"""

from __future__ import annotations

from .bbase import from_bbase, to_bbase
from .errors import CodecError
from .natbits import cons, decons
from .terms import SYMBOL_NAME, VAR_NAME, Compound, Const, Term, Var
from .tuples import from_tuple, to_tuple

Atom = str | int


def _leaf_atom(t: Term) -> Atom:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return t.symbol
    raise CodecError(f"term2bitpars: not a term: {t!r}")


def _atom_term(a: Atom) -> Term:
    if isinstance(a, int):
        if a < 0:
            raise CodecError(f"bitpars2term: negative integer leaf {a}")
        return Const(a)
    if isinstance(a, str):
        if VAR_NAME.match(a):
            return Var(a)
        if SYMBOL_NAME.match(a):
            return Const(a)
    raise CodecError(f"bitpars2term: {a!r} is not a variable, symbol, or integer")


def _functor_name(t: Term) -> str:
    if isinstance(t, Const) and isinstance(t.symbol, str):
        return t.symbol
    if isinstance(t, Var):
        raise CodecError(f"bitpars2term: variable {t.name} cannot fill a functor slot")
    if isinstance(t, Const):
        raise CodecError(f"bitpars2term: integer {t.symbol} cannot fill a functor slot")
    raise CodecError("bitpars2term: a nested group cannot fill a functor slot")


def term2bitpars(t: Term) -> tuple[list[int], list[Atom]]:
    """Split a term into its skeleton and its atom list.

    A leaf maps to ([0, 1], [leaf]). A compound renders as an outer group
    holding one inner group per member of [functor, arg1, ..., argK]: leaf
    members render as the empty body, compound members recurse.
    """
    if not isinstance(t, Compound):
        return [0, 1], [_leaf_atom(t)]
    ps: list[int] = []
    atoms: list[Atom] = []
    work: list[tuple[str, object]] = [("group", t)]
    while work:
        op, payload = work.pop()
        if op == "bit":
            ps.append(payload)
        elif op == "atom":
            atoms.append(payload)
        else:
            node = payload
            items: list[tuple[str, object]] = [("bit", 0)]
            items.append(("bit", 0))
            items.append(("atom", node.functor))
            items.append(("bit", 1))
            for arg in node.args:
                items.append(("bit", 0))
                if isinstance(arg, Compound):
                    items.append(("group", arg))
                else:
                    items.append(("atom", _leaf_atom(arg)))
                items.append(("bit", 1))
            items.append(("bit", 1))
            work.extend(reversed(items))
    return ps, atoms


def bitpars2term(ps, atoms) -> Term:
    """Rebuild a term from its skeleton and atom list; inverse of term2bitpars.

    Accepts exactly the image of term2bitpars: one balanced group spanning
    the whole sequence, every inner group holding at least two children, and
    exactly one atom per leaf slot.
    """
    ps = list(ps)
    atoms = list(atoms)
    for s in ps:
        if s not in (0, 1):
            raise CodecError(f"bitpars2term: skeleton symbol {s!r} is not 0 or 1")
    if ps == [0, 1]:
        if len(atoms) != 1:
            raise CodecError(
                f"bitpars2term: leaf skeleton names 1 atom but {len(atoms)} were given"
            )
        return _atom_term(atoms[0])
    if not ps or ps[0] != 0:
        raise CodecError("bitpars2term: skeleton must be a single group opened by 0")
    n = len(ps)
    ai = 0
    i = 1
    stack: list[list[Term]] = [[]]
    result: Term | None = None
    while result is None:
        if i >= n:
            raise CodecError("bitpars2term: skeleton ends inside an open group")
        if ps[i] == 0:
            if i + 1 >= n:
                raise CodecError("bitpars2term: skeleton ends inside an open group")
            if ps[i + 1] == 1:
                if ai >= len(atoms):
                    raise CodecError(
                        f"bitpars2term: skeleton holds more leaves than the "
                        f"{len(atoms)} atoms given"
                    )
                stack[-1].append(_atom_term(atoms[ai]))
                ai += 1
            else:
                stack.append([])
            i += 2  # member open plus either its close or the nested group open
        else:
            kids = stack.pop()
            if len(kids) < 2:
                raise CodecError(
                    "bitpars2term: a group must hold a functor and at least one argument"
                )
            node = Compound(_functor_name(kids[0]), tuple(kids[1:]))
            i += 1
            if stack:
                if i >= n or ps[i] != 1:
                    raise CodecError("bitpars2term: unbalanced skeleton")
                i += 1  # close of the member wrapping this group
                stack[-1].append(node)
            else:
                result = node
    if i != n:
        raise CodecError(f"bitpars2term: {n - i} trailing symbols after the skeleton")
    if ai != len(atoms):
        raise CodecError(
            f"bitpars2term: skeleton holds {ai} leaves but {len(atoms)} atoms were given"
        )
    return result


def term2inj_code(t: Term) -> tuple[int, list[Atom]]:
    """Aggregate a term's skeleton into one natural, bijective-base-2 style.

    Injective only: naturals whose bijective-base-2 digits are unbalanced
    decode to nothing.
    """
    ps, atoms = term2bitpars(t)
    return from_bbase(2, ps), atoms


def inj_code2term(n: int, atoms) -> Term:
    """Partial inverse of term2inj_code; rejects codes with unbalanced digits."""
    return bitpars2term(to_bbase(2, n), atoms)


def nat2nats(n: int) -> list[int]:
    """Map a natural to a list of naturals, bijectively.

    0 is the empty list; otherwise decons splits n into a length part and a
    content part, and the tuple codec splits the content into the items.
    """
    if n < 0:
        raise CodecError(f"nat2nats: expected a natural number (got {n})")
    if n == 0:
        return []
    length_less_one, content = decons(n)
    return to_tuple(length_less_one + 1, content)


def nats2nat(ns) -> int:
    """Inverse of nat2nats."""
    ns = list(ns)
    if not ns:
        return 0
    return cons(len(ns) - 1, from_tuple(ns))


def nat2pars(n: int) -> list[int]:
    """Map a natural to a balanced parenthesis sequence, bijectively.

    The group for n wraps the groups for nat2nats(n), recursively. Every
    child value is strictly smaller than its parent, so this terminates;
    the walk is iterative because depth is only bounded by that descent.
    """
    if n < 0:
        raise CodecError(f"nat2pars: expected a natural number (got {n})")
    out: list[int] = []
    work: list[int | None] = [n]
    while work:
        x = work.pop()
        if x is None:
            out.append(1)
        else:
            out.append(0)
            work.append(None)
            for item in reversed(nat2nats(x)):
                work.append(item)
    return out


def pars2nat(ps) -> int:
    """Inverse of nat2pars on single balanced groups."""
    ps = list(ps)
    for s in ps:
        if s not in (0, 1):
            raise CodecError(f"pars2nat: symbol {s!r} is not 0 or 1")
    if not ps:
        raise CodecError("pars2nat: empty sequence")
    if ps[0] != 0:
        raise CodecError("pars2nat: sequence must open with 0")
    n = len(ps)
    i = 1
    stack: list[list[int]] = [[]]
    result: int | None = None
    while result is None:
        if i >= n:
            raise CodecError("pars2nat: unbalanced sequence, a group is never closed")
        if ps[i] == 0:
            stack.append([])
        else:
            value = nats2nat(stack.pop())
            if stack:
                stack[-1].append(value)
            else:
                result = value
        i += 1
    if i != n:
        raise CodecError(f"pars2nat: {n - i} trailing symbols after the closing 1")
    return result


def term2code(t: Term) -> tuple[int, list[Atom]]:
    """Encode a term as (skeleton code, atom list).

    The skeleton code side is a bijection between naturals and balanced
    sequences; the composite decode is partial in (code, atoms) because not
    every skeleton is a term skeleton.
    """
    ps, atoms = term2bitpars(t)
    return pars2nat(ps), atoms


def code2term(n: int, atoms) -> Term:
    """Partial inverse of term2code."""
    return bitpars2term(nat2pars(n), atoms)
