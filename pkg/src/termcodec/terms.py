"""First-order terms, signatures, and their textual form.

Grammar for term text:

    term    := VAR | NAME | INT | NAME '(' term (',' term)* ')'
    VAR     := [A-Z][A-Za-z0-9_]*
    NAME    := [a-z][a-z0-9_]*
    INT     := [0-9]+

Whitespace between tokens is insignificant. Two occurrences of the same
variable name denote the same variable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CodecError, ParseError, SignatureError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    symbol: str | int


@dataclass(frozen=True)
class Compound:
    functor: str
    args: tuple["Term", ...]


Term = Var | Const | Compound

VAR_NAME = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
SYMBOL_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")

_TOKEN = re.compile(
    r"\s*(?:(?P<VAR>[A-Z][A-Za-z0-9_]*)"
    r"|(?P<NAME>[a-z][a-z0-9_]*)"
    r"|(?P<INT>[0-9]+)"
    r"|(?P<LPAR>\()|(?P<COMMA>,)|(?P<RPAR>\)))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.lastgroup is None:
            at = pos + len(text[pos:]) - len(text[pos:].lstrip())
            if at >= len(text):
                break
            raise ParseError(f"unexpected character {text[at]!r}", at)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        pos = m.end()
    tokens.append(("END", "", len(text)))
    return tokens


def parse_term(text: str) -> Term:
    """Parse term text; raises ParseError with the offending position."""
    tokens = _tokenize(text)
    i = 0
    frames: list[tuple[str, list[Term]]] = []
    while True:
        kind, value, pos = tokens[i]
        if kind == "VAR":
            node: Term = Var(value)
            i += 1
        elif kind == "INT":
            node = Const(int(value))
            i += 1
        elif kind == "NAME":
            if tokens[i + 1][0] == "LPAR":
                frames.append((value, []))
                i += 2
                continue
            node = Const(value)
            i += 1
        else:
            what = "end of input" if kind == "END" else repr(value)
            raise ParseError(f"expected a term, found {what}", pos)
        while True:
            kind, value, pos = tokens[i]
            if not frames:
                if kind != "END":
                    raise ParseError(f"unexpected {value!r} after the term", pos)
                return node
            if kind == "COMMA":
                frames[-1][1].append(node)
                i += 1
                break
            if kind == "RPAR":
                functor, args = frames.pop()
                args.append(node)
                node = Compound(functor, tuple(args))
                i += 1
                continue
            what = "end of input" if kind == "END" else repr(value)
            raise ParseError(f"expected ',' or ')', found {what}", pos)


def print_term(t: Term) -> str:
    """Canonical rendering: functor(arg,...,arg) with no extra whitespace.

    Iterative so that decoded terms of arbitrary nesting depth print without
    exhausting the call stack.
    """
    parts: list[str] = []
    stack: list[Term | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, Var):
            parts.append(item.name)
        elif isinstance(item, Const):
            parts.append(str(item.symbol))
        elif isinstance(item, Compound):
            parts.append(item.functor + "(")
            stack.append(")")
            for j in range(len(item.args) - 1, -1, -1):
                stack.append(item.args[j])
                if j:
                    stack.append(",")
        else:
            raise CodecError(f"print_term: not a term: {item!r}")
    return "".join(parts)


@dataclass(frozen=True)
class Signature:
    """Ordered inventories of variables, constants, and functor/arity pairs.

    Order is significant: it defines the numeric index of every symbol.
    """

    vars: tuple[str, ...] = ()
    consts: tuple[str, ...] = ()
    funs: tuple[tuple[str, int], ...] = ()

    @property
    def lv(self) -> int:
        return len(self.vars)

    @property
    def lc(self) -> int:
        return len(self.consts)

    @property
    def lf(self) -> int:
        return len(self.funs)

    @property
    def lvc(self) -> int:
        return len(self.vars) + len(self.consts)


def validate_signature(sig: Signature) -> None:
    """Check every Signature invariant; raises SignatureError naming the
    violated one."""
    if len(sig.vars) + len(sig.consts) == 0:
        raise SignatureError(
            "signature must declare at least one variable or constant"
        )
    for v in sig.vars:
        if not isinstance(v, str) or not VAR_NAME.match(v):
            raise SignatureError(f"invalid variable name {v!r} (expected [A-Z][A-Za-z0-9_]*)")
    if len(set(sig.vars)) != len(sig.vars):
        raise SignatureError("duplicate variable names")
    for c in sig.consts:
        if not isinstance(c, str) or not SYMBOL_NAME.match(c):
            raise SignatureError(f"invalid constant name {c!r} (expected [a-z][a-z0-9_]*)")
    if len(set(sig.consts)) != len(sig.consts):
        raise SignatureError("duplicate constant names")
    for entry in sig.funs:
        if not (isinstance(entry, tuple) and len(entry) == 2):
            raise SignatureError(f"invalid functor entry {entry!r}")
        name, arity = entry
        if not isinstance(name, str) or not SYMBOL_NAME.match(name):
            raise SignatureError(f"invalid functor name {name!r} (expected [a-z][a-z0-9_]*)")
        if not isinstance(arity, int) or arity < 1:
            raise SignatureError(f"functor {name} has arity {arity}; arity must be >= 1")
    if len(set(sig.funs)) != len(sig.funs):
        raise SignatureError("duplicate functor/arity pairs")


def parse_signature(text: str) -> Signature:
    """Parse signature text: one 'vars:'/'consts:'/'funs:' declaration per
    line, '#' comments, order significant. Repeated lines extend a section."""
    vars_: list[str] = []
    consts: list[str] = []
    funs: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("vars", "consts", "funs"):
            raise SignatureError(
                f"line {lineno}: expected 'vars:', 'consts:' or 'funs:' (got {raw.strip()!r})"
            )
        tokens = rest.split()
        if key == "vars":
            vars_.extend(tokens)
        elif key == "consts":
            consts.extend(tokens)
        else:
            for tok in tokens:
                name, sep, arity = tok.partition("/")
                if not sep or not arity.isdigit():
                    raise SignatureError(
                        f"line {lineno}: functor {tok!r} must be written name/arity"
                    )
                funs.append((name, int(arity)))
    sig = Signature(tuple(vars_), tuple(consts), tuple(funs))
    validate_signature(sig)
    return sig


def load_signature(path: str) -> Signature:
    with open(path, encoding="utf-8") as fh:
        return parse_signature(fh.read())
