"""Exact sparse arithmetic in Z[x,y] for bigraded Poincare polynomials.

The bivariate polynomials here record free bigraded modules: a summand in
bidegree (a, b) contributes the monomial x^a y^b.  Everything downstream
(tension, shift stories, the relaxation filters) reduces to arithmetic in
this ring, to the two substitution operators

    underlying:   f(x, y) -> f(x, 1)      (Poincare polynomial of the
                                            underlying space)
    fixed_points: f(x, y) -> f(x, 1/x)    (Poincare polynomial of the
                                            fixed set; may be Laurent)

and to exact division by the fundamental shift polynomial

    K_{1,1} = (1 - xy)(y - 1).

Coefficients are plain Python integers, so arithmetic is exact at any size
and can never wrap.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping


class PolynomialParseError(ValueError):
    """Raised when a polynomial string cannot be parsed."""


def _graded_lex_key(exps: tuple[int, int]) -> tuple[int, int]:
    i, j = exps
    return (i + j, i)


class BiPoly:
    """A sparse polynomial in Z[x,y], kept in canonical form.

    Zero coefficients are never stored and exponents are nonnegative, so
    two equal polynomials always hold identical term maps.  Instances are
    immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term x^{i}y^{j}")
                if c:
                    clean[(i, j)] = clean.get((i, j), 0) + c
                    if clean[(i, j)] == 0:
                        del clean[(i, j)]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self._terms,))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BiPoly":
        return cls({(i, j): coeff})

    # -- ring structure ------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            elif e in terms:
                del terms[e]
        return BiPoly(terms)

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                elif e in terms:
                    del terms[e]
        return BiPoly(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Terms in descending graded-lex order (x before y)."""
        for e in sorted(self._terms, key=_graded_lex_key, reverse=True):
            yield e, self._terms[e]

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def coefficients(self) -> Iterable[int]:
        return self._terms.values()

    def is_nonnegative(self) -> bool:
        """True iff no stored coefficient is negative.

        The zero polynomial counts as nonnegative: a zero shift story
        means the two modules are equal, and "can relax to" is taken
        reflexively.
        """
        return all(c > 0 for c in self._terms.values())

    def evaluate(self, x0: int, y0: int) -> int:
        return sum(c * x0**i * y0**j for (i, j), c in self._terms.items())

    # -- the two substitution operators ---------------------------------

    def underlying(self) -> "UniPoly":
        """Substitute y = 1 (forget the weight grading)."""
        terms: dict[int, int] = {}
        for (i, _), c in self._terms.items():
            new = terms.get(i, 0) + c
            if new:
                terms[i] = new
            elif i in terms:
                del terms[i]
        return UniPoly(terms)

    def fixed_points(self) -> "UniPoly":
        """Substitute y = 1/x; the result may be a Laurent polynomial."""
        terms: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            e = i - j
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            elif e in terms:
                del terms[e]
        return UniPoly(terms)

    # -- division by the fundamental shift ------------------------------

    def divide_by_k11(self) -> "BiPoly | None":
        """Exact quotient self / K_{1,1}, or None when not divisible.

        Membership test: self lies in (K_{1,1}) = ker(underlying) cap
        ker(fixed_points).  The quotient is then computed by two exact
        univariate-style passes, dividing by (y - 1) with x scalar and
        then by (1 - xy) along increasing y-degree, and verified by
        re-multiplication.
        """
        if self.is_zero():
            return BiPoly.zero()
        if not self.underlying().is_zero():
            return None
        if not self.fixed_points().is_zero():
            return None
        # Pass 1: divide by (y - 1).  Collect coefficients of y^j as
        # dicts x-exponent -> coefficient and run synthetic division from
        # the top y-degree down: if f = sum f_j y^j and f = (y-1) g with
        # g = sum g_j y^j then g_{j-1} = f_j + g_j.
        by_y: dict[int, dict[int, int]] = {}
        for (i, j), c in self._terms.items():
            by_y.setdefault(j, {})[i] = c
        top = max(by_y)
        g_by_y: dict[int, dict[int, int]] = {}
        carry: dict[int, int] = {}
        for j in range(top, 0, -1):
            row = dict(carry)
            for i, c in by_y.get(j, {}).items():
                new = row.get(i, 0) + c
                if new:
                    row[i] = new
                elif i in row:
                    del row[i]
            if row:
                g_by_y[j - 1] = row
            carry = row
        # Pass 2: divide g by (1 - xy) along increasing y-degree:
        # q_j = g_j + x * q_{j-1}.
        q_by_y: dict[int, dict[int, int]] = {}
        prev: dict[int, int] = {}
        gtop = max(g_by_y) if g_by_y else 0
        for j in range(0, gtop + 1):
            row: dict[int, int] = {i + 1: c for i, c in prev.items()}
            for i, c in g_by_y.get(j, {}).items():
                new = row.get(i, 0) + c
                if new:
                    row[i] = new
                elif i in row:
                    del row[i]
            if row:
                q_by_y[j] = row
            prev = row
        terms = {(i, j): c for j, rows in q_by_y.items() for i, c in rows.items()}
        if any(i < 0 or j < 0 for (i, j) in terms):
            return None
        quotient = BiPoly(terms)
        if quotient * K11 != self:
            return None
        return quotient

    # -- text form -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j), c in self.terms():
            mono = ""
            if i:
                mono += "x" if i == 1 else f"x^{i}"
            if j:
                mono += "y" if j == 1 else f"y^{j}"
            mag = abs(c)
            body = (str(mag) if (mag != 1 or not mono) else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({self!s})"


class UniPoly:
    """A sparse Laurent polynomial in Z[x, 1/x].

    Negative exponents occur only as images of the fixed-point
    substitution; ordinary Poincare polynomials stay in Z[x].
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if clean[e] == 0:
                        del clean[e]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self._terms,))

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def monomial(cls, e: int, coeff: int = 1) -> "UniPoly":
        return cls({e: coeff})

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            new = terms.get(e, 0) + c
            if new:
                terms[e] = new
            elif e in terms:
                del terms[e]
        return UniPoly(terms)

    def __neg__(self) -> "UniPoly":
        return UniPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                new = terms.get(e, 0) + c1 * c2
                if new:
                    terms[e] = new
                elif e in terms:
                    del terms[e]
        return UniPoly(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, UniPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def evaluate(self, x0: int) -> int:
        if any(e < 0 for e in self._terms):
            raise ValueError("cannot integer-evaluate a Laurent polynomial")
        return sum(c * x0**e for e, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "x"
            else:
                mono = f"x^{e}"
            mag = abs(c)
            body = (str(mag) if (mag != 1 or not mono) else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self!s})"


class PointCone:
    """The bigraded cohomology of a point, as a pair of cone predicates.

    The ring is nonzero exactly on a positive cone 0 <= i <= j (generated
    by tau at (0,1) and rho at (1,1)) and a negative cone i <= 0,
    j <= i - 2 (around theta at (0,-2)).  No bidegree lies in both.
    Only the support matters for bookkeeping: each nonzero bidegree holds
    a single copy of F_2.
    """

    ONE = (0, 0)
    RHO = (1, 1)
    TAU = (0, 1)
    THETA = (0, -2)
    THETA_OVER_RHO = (-1, -3)
    THETA_OVER_TAU = (0, -3)

    @staticmethod
    def in_positive_cone(i: int, j: int) -> bool:
        return 0 <= i <= j

    @staticmethod
    def in_negative_cone(i: int, j: int) -> bool:
        return i <= 0 and j <= i - 2

    @classmethod
    def is_nonzero(cls, i: int, j: int) -> bool:
        return cls.in_positive_cone(i, j) or cls.in_negative_cone(i, j)


def kronholm_poly(n: int, s: int) -> BiPoly:
    """The shift polynomial K_{n,s} = (1 - x^n y^n)(y^s - 1).

    Records a summand shifting up in weight by s while a summand n
    topological degrees higher shifts down by s.
    """
    if n <= 0 or s <= 0:
        raise ValueError(f"kronholm_poly requires n >= 1 and s >= 1, got ({n}, {s})")
    left = BiPoly({(0, 0): 1, (n, n): -1})
    right = BiPoly({(0, s): 1, (0, 0): -1})
    return left * right


#: The fundamental shift polynomial K_{1,1}; it generates the ideal of
#: all shift polynomials.
K11 = kronholm_poly(1, 1)


_TERM_RE = re.compile(
    r"^(?P<coef>\d+)?(?:x(?:\^(?P<xe>\d+))?)?(?:y(?:\^(?P<ye>\d+))?)?$"
)


def parse_bipoly(text: str) -> BiPoly:
    """Parse the polynomial grammar used by the CLI and JSON encodings.

    Terms are joined by '+' or '-'; a term is [coef][x[^int]][y[^int]],
    e.g. ``x^9y^5 + 2x^7y^4 + 1``.  Whitespace and '*' are accepted and
    ignored.
    """
    compact = text.replace("*", "").replace(" ", "").replace("\t", "")
    if not compact:
        raise PolynomialParseError("empty polynomial text")
    chunks = re.split(r"(?=[+-])", compact)
    terms: dict[tuple[int, int], int] = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        body = chunk
        if body[0] == "+":
            body = body[1:]
        elif body[0] == "-":
            sign = -1
            body = body[1:]
        if not body:
            raise PolynomialParseError(f"dangling sign in {text!r}")
        m = _TERM_RE.match(body)
        if not m or not (m.group("coef") or "x" in body or "y" in body):
            raise PolynomialParseError(f"unparseable term {chunk!r}")
        coef = int(m.group("coef") or 1) * sign
        xe = m.group("xe")
        ye = m.group("ye")
        i = int(xe) if xe is not None else (1 if "x" in body else 0)
        j = int(ye) if ye is not None else (1 if "y" in body else 0)
        e = (i, j)
        new = terms.get(e, 0) + coef
        if new:
            terms[e] = new
        elif e in terms:
            del terms[e]
    return BiPoly(terms)
