"""Exact arithmetic kernels: Gaussian rationals and sparse polynomials in a1..a10.

Rational scalars are `fractions.Fraction` throughout.  `GaussRat` adjoins the
imaginary unit; `MultiPoly` is a sparse polynomial over the rationals in the
ten fixed coefficient variables a1..a10, ordered by total degree with ties
broken so that a smaller exponent on the smallest differing variable wins
(the order under which a3^2 > a2*a4).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

NVARS = 10

Mono = tuple  # length-NVARS tuple of non-negative ints

_ZERO_MONO: Mono = (0,) * NVARS


def mono_degree(m: Mono) -> int:
    return sum(m)


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    return tuple(a + b for a, b in zip(m1, m2))


def mono_divides(m1: Mono, m2: Mono) -> bool:
    """True if m1 divides m2."""
    return all(a <= b for a, b in zip(m1, m2))


def mono_div(m1: Mono, m2: Mono) -> Mono:
    """Quotient m1 / m2; caller guarantees divisibility."""
    return tuple(a - b for a, b in zip(m1, m2))


def mono_lcm(m1: Mono, m2: Mono) -> Mono:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def deglex_key(m: Mono):
    """Sort key: higher total degree first; on ties the monomial with the
    smaller exponent at the first differing variable is the larger one."""
    return (sum(m), tuple(-e for e in m))


class GaussRat:
    """Gaussian rational re + im*i with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    @staticmethod
    def coerce(x) -> "GaussRat":
        if isinstance(x, GaussRat):
            return x
        return GaussRat(x)

    def __add__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussRat.coerce(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRat.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return GaussRat(1) / self ** (-n)
        out = GaussRat(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussRat(other)
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRat({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            if self.im == 1:
                imtxt = "I"
            elif self.im == -1:
                imtxt = "-I"
            else:
                imtxt = f"{self.im}*I"
            if parts and not imtxt.startswith("-"):
                parts.append("+ " + imtxt)
            elif parts:
                parts.append("- " + imtxt[1:])
            else:
                parts.append(imtxt)
        return " ".join(parts)

    @staticmethod
    def parse(text: str) -> "GaussRat":
        """Parse literals like '3', '-1/2', 'I', '-I', '2*I', '1/2+3/4*I'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty GaussRat literal")
        # split into signed chunks
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if not chunks or "".join(chunks) != s:
            raise ValueError(f"bad GaussRat literal: {text!r}")
        re_part = Fraction(0)
        im_part = Fraction(0)
        for chunk in chunks:
            sign = -1 if chunk.startswith("-") else 1
            body = chunk.lstrip("+-")
            if body in ("I", "i"):
                im_part += sign
            elif body.endswith(("*I", "*i")):
                im_part += sign * Fraction(body[:-2])
            elif body.endswith(("I", "i")):
                im_part += sign * Fraction(body[:-1])
            else:
                re_part += sign * Fraction(body)
        return GaussRat(re_part, im_part)


I_UNIT = GaussRat(0, 1)


class MultiPoly:
    """Sparse polynomial in a1..a10 with Fraction coefficients.

    Instances are treated as immutable; all constructors normalize (no zero
    coefficients stored).
    """

    __slots__ = ("terms", "_hash", "_lt")

    def __init__(self, terms: Mapping[Mono, Fraction] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, Fraction) else Fraction(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_lt", None)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "MultiPoly":
        return _P_ZERO

    @staticmethod
    def const(c) -> "MultiPoly":
        return MultiPoly({_ZERO_MONO: Fraction(c)})

    @staticmethod
    def var(i: int) -> "MultiPoly":
        """The variable a_i, 1-based, 1 <= i <= 10."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index out of range: {i}")
        mono = tuple(1 if k == i - 1 else 0 for k in range(NVARS))
        return MultiPoly({mono: Fraction(1)})

    @staticmethod
    def monomial(mono: Mono, coeff=1) -> "MultiPoly":
        return MultiPoly({tuple(mono): Fraction(coeff)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m)
            if s is None:
                res[m] = c
            else:
                s = s + c
                if s:
                    res[m] = s
                else:
                    del res[m]
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", res)
        object.__setattr__(out, "_hash", None)
        object.__setattr__(out, "_lt", None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", {m: -c for m, c in self.terms.items()})
        object.__setattr__(out, "_hash", None)
        object.__setattr__(out, "_lt", None)
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        res: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = res.get(m)
                if s is None:
                    res[m] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        res[m] = s
                    else:
                        del res[m]
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", res)
        object.__setattr__(out, "_hash", None)
        object.__setattr__(out, "_lt", None)
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return _P_ZERO
        out = MultiPoly.__new__(MultiPoly)
        object.__setattr__(out, "terms", {m: v * c for m, v in self.terms.items()})
        object.__setattr__(out, "_hash", None)
        object.__setattr__(out, "_lt", None)
        return out

    def __pow__(self, n: int):
        out = MultiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    # -- order-dependent queries -------------------------------------------

    def leading_term(self) -> tuple[Mono, Fraction]:
        """Largest term under the graded order; rejects the zero polynomial."""
        lt = self._lt
        if lt is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self.terms, key=deglex_key)
            lt = (m, self.terms[m])
            object.__setattr__(self, "_lt", lt)
        return lt

    def leading_mono(self) -> Mono:
        return self.leading_term()[0]

    def make_monic(self) -> "MultiPoly":
        _, c = self.leading_term()
        if c == 1:
            return self
        return self.scale(1 / c)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(m) for m in self.terms)

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in strictly decreasing order."""
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def sort_key(self):
        """Deterministic total order on polynomials: leading term first,
        then the remaining term sequence."""
        return tuple((deglex_key(m), c) for m, c in self.sorted_terms())

    def is_constant(self) -> bool:
        return all(m == _ZERO_MONO for m in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[_ZERO_MONO]

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, assign: Mapping[int, Fraction]) -> "MultiPoly":
        """Substitute rational values for some variables (1-based indices);
        the rest stay symbolic."""
        if not assign:
            return self
        res: dict = {}
        for m, c in self.terms.items():
            coeff = c
            mono = list(m)
            for i, val in assign.items():
                e = mono[i - 1]
                if e:
                    coeff = coeff * Fraction(val) ** e
                    mono[i - 1] = 0
                    if not coeff:
                        break
            if not coeff:
                continue
            key = tuple(mono)
            s = res.get(key)
            if s is None:
                res[key] = coeff
            else:
                s = s + coeff
                if s:
                    res[key] = s
                else:
                    del res[key]
        return MultiPoly(res)

    def evaluate(self, point: Sequence[GaussRat]) -> GaussRat:
        """Evaluate at a length-10 Gaussian-rational point."""
        total = GaussRat(0)
        for m, c in self.terms.items():
            v = GaussRat(c)
            for i, e in enumerate(m):
                if e:
                    v = v * point[i] ** e
            total = total + v
        return total

    # -- text form -----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            vars_txt = "*".join(
                f"a{i + 1}^{e}" if e > 1 else f"a{i + 1}"
                for i, e in enumerate(m)
                if e
            )
            if not vars_txt:
                body = str(abs(c))
            elif abs(c) == 1:
                body = vars_txt
            else:
                body = f"{abs(c)}*{vars_txt}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self):
        return f"MultiPoly({self})"


_P_ZERO = MultiPoly()

_TOKEN = re.compile(r"\s*(?:(a\d+)|(\d+/\d+|\d+)|(\^)|(\*)|(\+)|(-))")


def parse_poly(text: str) -> MultiPoly:
    """Parse the text form produced by MultiPoly.__str__.

    Grammar: poly := ['-'] term (('+'|'-') term)* ;
    term := factor ('*' factor)* ; factor := rational | var ['^' int].
    """
    pos = 0
    n = len(text)

    def error(msg):
        return ValueError(f"{msg} at position {pos} in {text!r}")

    tokens = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise error("unexpected character")
            break
        tok = next(g for g in m.groups() if g is not None)
        tokens.append((tok, m.start()))
        pos = m.end()
    if not tokens:
        raise ValueError(f"empty polynomial: {text!r}")

    result = MultiPoly.zero()
    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    while idx < len(tokens):
        sign = 1
        while peek() in ("+", "-"):
            if peek() == "-":
                sign = -sign
            idx += 1
        if peek() is None:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = Fraction(sign)
        mono = [0] * NVARS
        expect_factor = True
        while expect_factor:
            tok = peek()
            if tok is None:
                raise ValueError(f"missing factor in {text!r}")
            if tok.startswith("a") and tok[1:].isdigit():
                v = int(tok[1:])
                if not 1 <= v <= NVARS:
                    raise ValueError(f"unknown variable {tok} in {text!r}")
                idx += 1
                exp = 1
                if peek() == "^":
                    idx += 1
                    t2 = peek()
                    if t2 is None or not t2.replace("/", "").isdigit():
                        raise ValueError(f"bad exponent in {text!r}")
                    exp = int(t2)
                    idx += 1
                mono[v - 1] += exp
            else:
                coeff *= Fraction(tok)
                idx += 1
            if peek() == "*":
                idx += 1
            else:
                expect_factor = False
        result = result + MultiPoly.monomial(tuple(mono), coeff)
    return result
