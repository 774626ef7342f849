"""Operator monomials, Dyck words, and the ordered monomial basis.

A monomial over one binary product and one unary operator L is stored as a
non-empty sequence of factors, each factor either the argument symbol or an
application of L to a nested sequence.  Monomials of degree p (arguments)
and multiplicity q (L's) biject with Dyck words of p+q balanced pairs of
which p are nestings "()"; the induced word order (with '(' before ')') is
the basis order used everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb

ARG = "*"  # leaf node

# An App node is a tuple ("L", child, ...) with at least one child; children
# are ARG or further App nodes.


def narayana(i: int, j: int) -> int:
    """Number of Dyck words of length 2i with j nestings: C(i,j)*C(i,j-1)/i."""
    if j < 1 or j > i:
        raise ValueError(f"narayana requires 1 <= j <= i, got ({i}, {j})")
    num = comb(i, j) * comb(i, j - 1)
    assert num % i == 0
    return num // i


def catalan(i: int) -> int:
    return comb(2 * i, i) // (i + 1)


def is_dyck(word: str) -> bool:
    depth = 0
    for ch in word:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
        else:
            return False
    return depth == 0


def nestings(word: str) -> int:
    return word.count("()")


class OperatorMonomial:
    """Immutable planar tree: factors over {ARG, ("L", ...)} at top level."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("a monomial has at least one factor")
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorMonomial is immutable")

    @property
    def degree(self) -> int:
        return _count_args(self.factors)

    @property
    def multiplicity(self) -> int:
        return _count_apps(self.factors)

    def __eq__(self, other):
        if not isinstance(other, OperatorMonomial):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __lt__(self, other):
        return self.dyck() < other.dyck()

    def dyck(self) -> str:
        """The Dyck word of this monomial (inverse of from_dyck)."""
        return _seq_to_word(self.factors)

    @staticmethod
    def from_dyck(word: str) -> "OperatorMonomial":
        """Decode a balanced word: nestings become arguments, every other
        '(' becomes an application of L."""
        if not is_dyck(word):
            raise ValueError(f"not a balanced word: {word!r}")
        if nestings(word) == 0:
            raise ValueError("monomial needs at least one argument (no nestings)")
        seq, rest = _parse_word_seq(word, 0)
        assert rest == len(word)
        return OperatorMonomial(seq)

    @staticmethod
    def parse(text: str) -> "OperatorMonomial":
        return parse_monomial(text)

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"OperatorMonomial({format_monomial(self)!r})"


def _count_args(seq) -> int:
    n = 0
    for node in seq:
        if node == ARG:
            n += 1
        else:
            n += _count_args(node[1:])
    return n


def _count_apps(seq) -> int:
    n = 0
    for node in seq:
        if node != ARG:
            n += 1 + _count_apps(node[1:])
    return n


def _seq_to_word(seq) -> str:
    out = []
    for node in seq:
        if node == ARG:
            out.append("()")
        else:
            out.append("(")
            out.append(_seq_to_word(node[1:]))
            out.append(")")
    return "".join(out)


def _parse_word_seq(word: str, pos: int):
    """Parse a maximal sequence of balanced groups starting at pos; returns
    (nodes, end)."""
    nodes = []
    n = len(word)
    while pos < n and word[pos] == "(":
        if pos + 1 < n and word[pos + 1] == ")":
            nodes.append(ARG)
            pos += 2
        else:
            inner, after = _parse_word_seq(word, pos + 1)
            assert pos < n and word[after] == ")"
            nodes.append(("L", *inner))
            pos = after + 1
    return nodes, pos


# -- formatting and parsing ---------------------------------------------------


def format_monomial(m: OperatorMonomial) -> str:
    """Render with unary chains collapsed to powers: L(L(x)) -> L^2(x)."""
    return _format_seq(m.factors)


def _format_seq(seq) -> str:
    return "".join(_format_node(node) for node in seq)


def _format_node(node) -> str:
    if node == ARG:
        return ARG
    # collapse nested single-child applications into a power
    power = 1
    children = node[1:]
    while len(children) == 1 and children[0] != ARG:
        power += 1
        children = children[0][1:]
    head = "L" if power == 1 else f"L^{power}"
    return f"{head}({_format_seq(children)})"


class MonomialSyntaxError(ValueError):
    """Raised on malformed monomial text; carries the failing position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def parse_monomial(text: str) -> OperatorMonomial:
    """Parse the grammar  Monomial := Factor+ ;
    Factor := "*" | "L" ["^" int] "(" Monomial ")".  Whitespace is ignored."""
    stripped = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
    pos = 0

    def fail(msg, at=None):
        where = stripped[at][1] if at is not None and at < len(stripped) else len(text)
        raise MonomialSyntaxError(msg, where)

    def parse_seq(depth):
        nonlocal pos
        nodes = []
        while pos < len(stripped):
            ch, _ = stripped[pos]
            if ch == ARG:
                nodes.append(ARG)
                pos += 1
            elif ch == "L":
                start = pos
                pos += 1
                power = 1
                if pos < len(stripped) and stripped[pos][0] == "^":
                    pos += 1
                    digits = ""
                    while pos < len(stripped) and stripped[pos][0].isdigit():
                        digits += stripped[pos][0]
                        pos += 1
                    if not digits:
                        fail("expected integer after '^'", pos)
                    power = int(digits)
                    if power < 1:
                        fail("operator power must be >= 1", start)
                if pos >= len(stripped) or stripped[pos][0] != "(":
                    fail("expected '(' after operator", pos)
                pos += 1
                inner = parse_seq(depth + 1)
                if not inner:
                    fail("empty parentheses", pos)
                if pos >= len(stripped) or stripped[pos][0] != ")":
                    fail("unbalanced parenthesis", pos)
                pos += 1
                node = ("L", *inner)
                for _ in range(power - 1):
                    node = ("L", node)
                nodes.append(node)
            elif ch == ")":
                if depth == 0:
                    fail("unbalanced ')'", pos)
                return nodes
            else:
                fail(f"unexpected character {ch!r}", pos)
        if depth != 0:
            fail("unbalanced parenthesis", pos)
        return nodes

    nodes = parse_seq(0)
    if not nodes:
        fail("empty monomial", 0)
    return OperatorMonomial(nodes)


# -- enumeration and ranking --------------------------------------------------


@dataclass(frozen=True)
class BasisIndex:
    p: int
    q: int
    rank: int  # 1-based position in the ordered basis

    def __post_init__(self):
        if not 1 <= self.rank <= narayana(self.p + self.q, self.p):
            raise ValueError(
                f"rank {self.rank} out of range for basis ({self.p},{self.q})"
            )


def _gen_dyck_words(pairs: int):
    """All balanced words with `pairs` pairs, in increasing word order
    ('(' sorts before ')')."""
    word = []

    def rec(opens, closes):
        if opens == pairs and closes == pairs:
            yield "".join(word)
            return
        if opens < pairs:
            word.append("(")
            yield from rec(opens + 1, closes)
            word.pop()
        if closes < opens:
            word.append(")")
            yield from rec(opens, closes + 1)
            word.pop()

    yield from rec(0, 0)


@lru_cache(maxsize=None)
def enumerate_basis(p: int, q: int) -> tuple[OperatorMonomial, ...]:
    """The ordered basis of all monomials of degree p, multiplicity q."""
    if p < 1:
        raise ValueError(f"degree must be >= 1, got {p}")
    if q < 0:
        raise ValueError(f"multiplicity must be >= 0, got {q}")
    out = tuple(
        OperatorMonomial.from_dyck(w)
        for w in _gen_dyck_words(p + q)
        if nestings(w) == p
    )
    assert len(out) == narayana(p + q, p)
    return out


@lru_cache(maxsize=None)
def _rank_table(p: int, q: int) -> dict:
    return {m.dyck(): k for k, m in enumerate(enumerate_basis(p, q), start=1)}


def rank_of(m: OperatorMonomial) -> BasisIndex:
    """Position of m in its basis; inverse of monomial_at."""
    p, q = m.degree, m.multiplicity
    return BasisIndex(p, q, _rank_table(p, q)[m.dyck()])


def monomial_at(idx: BasisIndex) -> OperatorMonomial:
    return enumerate_basis(idx.p, idx.q)[idx.rank - 1]
