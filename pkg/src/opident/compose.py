"""Partial compositions and the consequence construction.

Four grafting moves act on a monomial of degree p, multiplicity q: split an
argument into a product (degree +1), append or prepend a fresh argument
(degree +1), wrap one argument in L (multiplicity +1), or wrap the whole
monomial in L (multiplicity +1).  A consequence of an element is the image
under a two-step path raising degree and multiplicity by one each, taken in
either order; paths whose linear extensions coincide are deduplicated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .monomials import ARG, OperatorMonomial, enumerate_basis, narayana, rank_of


def _replace_nth_arg(seq, i, repl):
    """Replace the i-th ARG leaf (1-based, left to right) by the node list
    `repl`; returns (new_seq, remaining_count)."""
    out = []
    for node in seq:
        if i > 0 and node == ARG:
            i -= 1
            if i == 0:
                out.extend(repl)
                continue
            out.append(node)
        elif node == ARG:
            out.append(node)
        else:
            inner, i = _replace_nth_arg(node[1:], i, repl)
            out.append(("L", *inner))
    return tuple(out), i


def _splice_arg(m: OperatorMonomial, i: int, repl) -> OperatorMonomial:
    if not 1 <= i <= m.degree:
        raise ValueError(f"argument index {i} out of range 1..{m.degree}")
    factors, left = _replace_nth_arg(m.factors, i, repl)
    assert left == 0
    return OperatorMonomial(factors)


def compose_deg_at(m: OperatorMonomial, i: int) -> OperatorMonomial:
    """Split the i-th argument into a product of two arguments."""
    return _splice_arg(m, i, (ARG, ARG))


def compose_deg_outer(m: OperatorMonomial, side: str) -> OperatorMonomial:
    """Multiply by a fresh argument on the given side of the whole monomial."""
    if side == "right":
        return OperatorMonomial(m.factors + (ARG,))
    if side == "left":
        return OperatorMonomial((ARG,) + m.factors)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def compose_mult_at(m: OperatorMonomial, i: int) -> OperatorMonomial:
    """Apply L to the i-th argument."""
    return _splice_arg(m, i, (("L", ARG),))


def compose_mult_outer(m: OperatorMonomial) -> OperatorMonomial:
    """Apply L to the whole monomial."""
    return OperatorMonomial((("L", *m.factors),))


@dataclass(frozen=True)
class Label:
    """One composition move; `arg` is the argument position for the *_at
    moves, the side for deg_outer, and None for mult_outer."""

    kind: str  # deg_at | deg_outer | mult_at | mult_outer
    arg: int | str | None = None

    def apply(self, m: OperatorMonomial) -> OperatorMonomial:
        if self.kind == "deg_at":
            return compose_deg_at(m, self.arg)
        if self.kind == "deg_outer":
            return compose_deg_outer(m, self.arg)
        if self.kind == "mult_at":
            return compose_mult_at(m, self.arg)
        if self.kind == "mult_outer":
            return compose_mult_outer(m)
        raise ValueError(f"unknown label kind {self.kind!r}")

    def __str__(self):
        if self.kind == "deg_at":
            return f"o{self.arg} B"
        if self.kind == "deg_outer":
            return "B o1" if self.arg == "right" else "B o2"
        if self.kind == "mult_at":
            return f"o{self.arg} L"
        return "L o"


Path = tuple[Label, Label]


def format_path(path: Path) -> str:
    return f"({path[0]}, {path[1]})"


class OperatorElement:
    """Linear combination of basis monomials of one (p, q), as a sparse map
    from 1-based basis rank to a nonzero ring coefficient."""

    __slots__ = ("p", "q", "coeffs")

    def __init__(self, p: int, q: int, coeffs=None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        dim = narayana(p + q, p)
        clean = {}
        for rank, c in (coeffs or {}).items():
            if not 1 <= rank <= dim:
                raise ValueError(f"rank {rank} out of range 1..{dim}")
            if c:
                clean[rank] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorElement is immutable")

    @staticmethod
    def zero(p: int, q: int) -> "OperatorElement":
        return OperatorElement(p, q)

    @staticmethod
    def from_monomial(m: OperatorMonomial, coeff=1) -> "OperatorElement":
        idx = rank_of(m)
        return OperatorElement(idx.p, idx.q, {idx.rank: coeff})

    def __eq__(self, other):
        if not isinstance(other, OperatorElement):
            return NotImplemented
        return (
            self.p == other.p and self.q == other.q and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.q, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if self.p != other.p or self.q != other.q:
            raise ValueError("cannot add elements of different (p, q)")
        coeffs = dict(self.coeffs)
        for r, c in other.coeffs.items():
            s = coeffs.get(r)
            if s is None:
                coeffs[r] = c
            else:
                s = s + c
                if s:
                    coeffs[r] = s
                else:
                    del coeffs[r]
        return OperatorElement(self.p, self.q, coeffs)

    def scale(self, c) -> "OperatorElement":
        return OperatorElement(
            self.p, self.q, {r: v * c for r, v in self.coeffs.items()}
        )

    def map_coeffs(self, f: Callable) -> "OperatorElement":
        return OperatorElement(
            self.p, self.q, {r: f(v) for r, v in self.coeffs.items()}
        )

    def map_monomials(self, f: Callable[[OperatorMonomial], OperatorMonomial]):
        """Linear extension of a monomial map; the image lands in one basis."""
        basis = enumerate_basis(self.p, self.q)
        out: dict = {}
        new_pq = None
        for rank, c in self.coeffs.items():
            img = f(basis[rank - 1])
            idx = rank_of(img)
            if new_pq is None:
                new_pq = (idx.p, idx.q)
            s = out.get(idx.rank)
            if s is None:
                out[idx.rank] = c
            else:
                s = s + c
                if s:
                    out[idx.rank] = s
                else:
                    del out[idx.rank]
        if new_pq is None:
            # the zero element: degree bookkeeping must still be supplied
            raise ValueError("cannot infer target (p, q) of an empty element")
        return OperatorElement(new_pq[0], new_pq[1], out)

    def terms(self):
        basis = enumerate_basis(self.p, self.q)
        for rank in sorted(self.coeffs):
            yield rank, basis[rank - 1], self.coeffs[rank]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for _, mono, c in self.terms():
            ctxt = str(c)
            if ctxt == "1":
                parts.append(str(mono))
            elif " " in ctxt or "+" in ctxt[1:] or "-" in ctxt[1:]:
                parts.append(f"({ctxt})*{mono}")
            else:
                parts.append(f"{ctxt}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"OperatorElement({self.p},{self.q}; {self})"


def consequence_paths(p: int) -> list[Path]:
    """All two-step paths from (p, q) to (p+1, q+1) in canonical order:
    the degree-raising moves each followed by every multiplicity-raising
    move on the intermediate element, then the multiplicity-first pairs."""
    deg_ops = [Label("deg_at", i) for i in range(1, p + 1)]
    deg_ops += [Label("deg_outer", "right"), Label("deg_outer", "left")]
    mult_ops_after = [Label("mult_at", i) for i in range(1, p + 2)]
    mult_ops_after.append(Label("mult_outer"))
    mult_ops_first = [Label("mult_at", i) for i in range(1, p + 1)]
    mult_ops_first.append(Label("mult_outer"))

    paths: list[Path] = []
    for d in deg_ops:
        for l in mult_ops_after:
            paths.append((d, l))
    for l in mult_ops_first:
        for d in deg_ops:
            paths.append((l, d))
    return paths


def apply_path(elem: OperatorElement, path: Path) -> OperatorElement:
    if not elem:
        # linearity: the zero element maps to zero one degree/multiplicity up
        return OperatorElement.zero(elem.p + 1, elem.q + 1)
    first, second = path
    return elem.map_monomials(lambda m: second.apply(first.apply(m)))


def consequences(elem: OperatorElement):
    """All distinct consequences of `elem`, as (path, element) pairs in
    canonical path order; a path is dropped when an earlier path produced
    the identical element."""
    seen: dict = {}
    out = []
    for path in consequence_paths(elem.p):
        img = apply_path(elem, path)
        key = (frozenset(img.coeffs.items()),)
        if key in seen:
            continue
        seen[key] = path
        out.append((path, img))
    return out
