"""Sparse Laurent polynomials with integer coefficients over indexed variables.

Every variable is keyed by a triple ``(family, i, r)``: ``Y_{i,r}``, ``z_{i,r}``,
``v_{i,r}`` and the ``x_i`` / ``y_i`` of a finite-type seed (``r`` is then a
plain label, normally 0).  Monomials and polynomials are immutable values.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Iterator, Mapping
from typing import Union

FAMILIES = ("Y", "z", "v", "x", "y_frozen")
_FAMILY_RANK = {f: k for k, f in enumerate(FAMILIES)}

VarKey = tuple  # (family, i, r)


def var_sort_key(key: VarKey) -> tuple[int, int, int]:
    """Total order on variables: family, then node, then degree descending."""
    family, i, r = key
    return (_FAMILY_RANK[family], i, -r)


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist."""


class Monomial:
    """A Laurent monomial: a finite map from variables to nonzero exponents."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[VarKey, int] | Iterable[tuple[VarKey, int]] = ()):
        if isinstance(exponents, Mapping):
            pairs = exponents.items()
        else:
            pairs = exponents
        merged: dict[VarKey, int] = {}
        for key, e in pairs:
            if key[0] not in _FAMILY_RANK:
                raise ValueError(f"unknown variable family {key[0]!r}")
            merged[key] = merged.get(key, 0) + e
        self._items = tuple(
            sorted(((k, e) for k, e in merged.items() if e), key=lambda kv: var_sort_key(kv[0]))
        )
        self._hash = hash(self._items)

    @classmethod
    def _raw(cls, items: tuple) -> Monomial:
        obj = cls.__new__(cls)
        obj._items = items
        obj._hash = hash(items)
        return obj

    @classmethod
    def var(cls, family: str, i: int, r: int = 0, e: int = 1) -> Monomial:
        return cls({(family, i, r): e})

    # -- inspection ---------------------------------------------------------
    def items(self) -> tuple[tuple[VarKey, int], ...]:
        return self._items

    def as_dict(self) -> dict[VarKey, int]:
        return dict(self._items)

    def keys(self) -> list[VarKey]:
        return [k for k, _ in self._items]

    def exponent(self, key: VarKey) -> int:
        for k, e in self._items:
            if k == key:
                return e
        return 0

    def is_one(self) -> bool:
        return not self._items

    def families(self) -> set[str]:
        return {k[0] for k, _ in self._items}

    def total_degree(self) -> int:
        return sum(e for _, e in self._items)

    def positive_part(self) -> Monomial:
        return Monomial._raw(tuple((k, e) for k, e in self._items if e > 0))

    def negative_part(self) -> Monomial:
        """The monomial of negated negative exponents (a denominator)."""
        return Monomial._raw(tuple((k, -e) for k, e in self._items if e < 0))

    def sort_key(self) -> tuple:
        return tuple(var_sort_key(k) + (e,) for k, e in self._items)

    # -- arithmetic ---------------------------------------------------------
    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other._items:
            return self
        if not self._items:
            return other
        d = dict(self._items)
        for k, e in other._items:
            d[k] = d.get(k, 0) + e
        return Monomial(d)

    def inverse(self) -> Monomial:
        return Monomial._raw(tuple((k, -e) for k, e in self._items))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> Monomial:
        if n == 0:
            return ONE
        return Monomial._raw(tuple((k, e * n) for k, e in self._items))

    def divides(self, other: Monomial) -> bool:
        """True if ``other / self`` has no negative exponents."""
        return all(e >= 0 for _, e in (other / self).items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        if not self._items:
            return "1"
        parts = []
        for (f, i, r), e in self._items:
            name = "y" if f == "y_frozen" else f
            sub = f"{i}" if f in ("x", "y_frozen") and r == 0 else f"{i},{r}"
            parts.append(f"{name}_{{{sub}}}" + ("" if e == 1 else f"^{{{e}}}"))
        return "".join(parts)


ONE = Monomial()

Scalar = Union[int, Monomial, "LaurentPoly"]


class LaurentPoly:
    """Integer-coefficient Laurent polynomial, canonical (no zero coefficients)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in pairs:
            acc[m] = acc.get(m, 0) + c
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Monomial, int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def lift(cls, value: Scalar) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Monomial):
            return cls._raw({value: 1})
        if isinstance(value, int):
            return cls._raw({ONE: value} if value else {})
        raise TypeError(f"cannot lift {type(value).__name__} to LaurentPoly")

    @classmethod
    def var(cls, family: str, i: int, r: int = 0) -> LaurentPoly:
        return cls._raw({Monomial.var(family, i, r): 1})

    # -- inspection ---------------------------------------------------------
    def terms(self) -> list[tuple[Monomial, int]]:
        """Terms in the deterministic monomial order."""
        return sorted(self._terms.items(), key=lambda mc: mc[0].sort_key())

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms()]

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> set[VarKey]:
        out: set[VarKey] = set()
        for m in self._terms:
            out.update(m.keys())
        return out

    def constant_term(self) -> int:
        return self._terms.get(ONE, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Monomial)):
            other = LaurentPoly.lift(other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: Scalar) -> LaurentPoly:
        other = LaurentPoly.lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        return self + (-LaurentPoly.lift(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.lift(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()} if other else {})
        if isinstance(other, Monomial):
            return LaurentPoly._raw({m * other: c for m, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            (m, c), = self._terms.items()
            if c not in (1, -1):
                raise NotDivisible("non-unit coefficient")
            return LaurentPoly._raw({m ** n: c ** (-n)})
        result = LaurentPoly.lift(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_monomials(self, fn: Callable[[Monomial], Monomial | None]) -> LaurentPoly:
        """Apply ``fn`` termwise; terms mapped to ``None`` are dropped."""
        out: dict[Monomial, int] = {}
        for m, c in self._terms.items():
            m2 = fn(m)
            if m2 is not None:
                out[m2] = out.get(m2, 0) + c
        return LaurentPoly._raw({m: c for m, c in out.items() if c})

    def filter(self, keep: Callable[[Monomial], bool]) -> LaurentPoly:
        return LaurentPoly._raw({m: c for m, c in self._terms.items() if keep(m)})

    def substitute(self, mapping: Mapping[VarKey, Scalar] | Callable[[VarKey], Scalar | None]) -> LaurentPoly:
        """Replace variables by Laurent polynomials; unmapped variables are kept.

        Negative exponents require the image to be a monomial.
        """
        lookup = mapping if callable(mapping) else mapping.get
        cache: dict[VarKey, LaurentPoly | None] = {}

        def image(key: VarKey) -> LaurentPoly | None:
            if key not in cache:
                val = lookup(key)
                cache[key] = None if val is None else LaurentPoly.lift(val)
            return cache[key]

        if all(
            image(k) is None or image(k).is_monomial()  # type: ignore[union-attr]
            for m in self._terms
            for k in m.keys()
        ):
            # fast path: monomial images
            def mono(m: Monomial) -> tuple[Monomial, int]:
                coeff = 1
                acc: dict[VarKey, int] = {}
                for k, e in m.items():
                    img = image(k)
                    if img is None:
                        acc[k] = acc.get(k, 0) + e
                        continue
                    (im, ic), = img._terms.items()
                    if e < 0 and ic not in (1, -1):
                        raise NotDivisible(f"cannot invert coefficient {ic}")
                    coeff *= ic ** abs(e)
                    for k2, e2 in im.items():
                        acc[k2] = acc.get(k2, 0) + e2 * e
                return Monomial(acc), coeff

            out: dict[Monomial, int] = {}
            for m, c in self._terms.items():
                m2, c2 = mono(m)
                out[m2] = out.get(m2, 0) + c * c2
            return LaurentPoly._raw({m: c for m, c in out.items() if c})

        total = LaurentPoly()
        for m, c in self._terms.items():
            term = LaurentPoly.lift(c)
            rest: dict[VarKey, int] = {}
            for k, e in m.items():
                img = image(k)
                if img is None:
                    rest[k] = e
                else:
                    term = term * (img ** e)
            total = total + term * Monomial(rest)
        return total

    def denominator(self) -> Monomial:
        """Least monomial ``d`` with ``d * self`` a polynomial."""
        need: dict[VarKey, int] = {}
        for m in self._terms:
            for k, e in m.items():
                if e < 0 and -e > need.get(k, 0):
                    need[k] = -e
        return Monomial(need)

    def monomial_content(self) -> Monomial:
        """Componentwise minimum exponent over all terms (Laurent gcd of the terms)."""
        if not self._terms:
            return ONE
        terms = list(self._terms)
        keys: set[VarKey] = set()
        for m in terms:
            keys.update(m.keys())
        content = {}
        for k in keys:
            content[k] = min(m.exponent(k) for m in terms)
        return Monomial(content)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for m, c in self.terms():
            body = "" if m.is_one() else str(m)
            if c == 1 and body:
                chunks.append(body)
            elif c == -1 and body:
                chunks.append("-" + body)
            else:
                chunks.append(f"{c}{body}")
        return " + ".join(chunks).replace("+ -", "- ")


ZERO_POLY = LaurentPoly()


def as_poly(value: Scalar) -> LaurentPoly:
    return LaurentPoly.lift(value)


# -- exact division ----------------------------------------------------------

def divide_exact(num: Scalar, den: Scalar) -> LaurentPoly:
    """Return ``q`` with ``q * den == num`` exactly, or raise :class:`NotDivisible`.

    The denominator's monomial content is removed first; what remains has no
    variable factor, so divisibility in the Laurent ring reduces to polynomial
    division under lex order.
    """
    num = LaurentPoly.lift(num)
    den = LaurentPoly.lift(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO_POLY
    if den.is_monomial():
        (dm, dc), = den.as_dict().items()
        out = {}
        inv = dm.inverse()
        for m, c in num.as_dict().items():
            q, rem = divmod(c, dc)
            if rem:
                raise NotDivisible(f"coefficient {c} not divisible by {dc}")
            out[m * inv] = q
        return LaurentPoly._raw(out)

    mu = den.monomial_content()
    den0 = den * mu.inverse()
    num1 = num * mu.inverse()
    shift = num1.denominator()
    n_poly = num1 * shift

    keys = sorted(n_poly.variables() | den0.variables(), key=var_sort_key)
    index = {k: j for j, k in enumerate(keys)}
    width = len(keys)

    def to_vec(m: Monomial) -> tuple[int, ...]:
        v = [0] * width
        for k, e in m.items():
            v[index[k]] = e
        return tuple(v)

    rem = {to_vec(m): c for m, c in n_poly.as_dict().items()}
    dvec = {to_vec(m): c for m, c in den0.as_dict().items()}
    lead = max(dvec)
    lead_c = dvec[lead]
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        top = max(rem)
        diff = tuple(a - b for a, b in zip(top, lead))
        if min(diff) < 0:
            raise NotDivisible("leading term not divisible")
        qc, r = divmod(rem[top], lead_c)
        if r:
            raise NotDivisible("leading coefficient not divisible")
        quot[diff] = quot.get(diff, 0) + qc
        for dv, dc in dvec.items():
            key = tuple(a + b for a, b in zip(dv, diff))
            val = rem.get(key, 0) - qc * dc
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)

    def from_vec(v: tuple[int, ...]) -> Monomial:
        return Monomial({keys[j]: e for j, e in enumerate(v) if e})

    q = LaurentPoly({from_vec(v): c for v, c in quot.items()})
    return q * shift.inverse()


# -- parsing -----------------------------------------------------------------

_LETTER_FAMILY = {"Y": "Y", "z": "z", "v": "v", "x": "x", "y": "y_frozen"}

_STRIP = re.compile(r"\\left|\\right|\\,|\\;|\\!|\\\\|&|\\cdot|\s+")


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, symbols: Mapping[str, Scalar],
                 resolver: Callable[[str, int, int], Scalar] | None):
        self.s = _STRIP.sub("", text)
        self.pos = 0
        self.symbols = symbols
        self.resolver = resolver

    def peek(self) -> str:
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def expect(self, token: str) -> None:
        if not self.s.startswith(token, self.pos):
            raise ParseError(f"expected {token!r} at offset {self.pos}: {self.s[self.pos:self.pos + 20]!r}")
        self.pos += len(token)

    def integer(self) -> int:
        m = re.compile(r"[+-]?\d+").match(self.s, self.pos)
        if not m:
            raise ParseError(f"expected integer at offset {self.pos}")
        self.pos = m.end()
        return int(m.group())

    def power(self) -> int:
        self.expect("^")
        if self.peek() == "{":
            self.pos += 1
            n = self.integer()
            self.expect("}")
            return n
        return self.integer()

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        total = self.term() * sign
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            total = total + self.term() * sign
        return total

    def term(self) -> LaurentPoly:
        acc = self.factor()
        while self.peek() and self.peek() not in "+-)}":
            acc = acc * self.factor()
        return acc

    def factor(self) -> LaurentPoly:
        c = self.peek()
        if c == "(":
            self.pos += 1
            val = self.expr()
            self.expect(")")
        elif c == "{":
            self.pos += 1
            val = self.expr()
            self.expect("}")
        elif c.isdigit():
            val = LaurentPoly.lift(self.integer())
        elif self.s.startswith("\\frac", self.pos):
            self.pos += len("\\frac")
            self.expect("{")
            top = self.expr()
            self.expect("}")
            self.expect("{")
            bottom = self.expr()
            self.expect("}")
            val = divide_exact(top, bottom)
        elif c.isalpha():
            val = self.atom()
        else:
            raise ParseError(f"unexpected {c!r} at offset {self.pos}")
        if self.peek() == "^":
            val = val ** self.power()
        return val

    def atom(self) -> LaurentPoly:
        letter = self.s[self.pos]
        self.pos += 1
        pre = 1
        if self.peek() == "^":
            pre = self.power()
        if self.peek() != "_":
            if letter in self.symbols:
                return LaurentPoly.lift(self.symbols[letter]) ** pre
            raise ParseError(f"unknown symbol {letter!r}")
        self.expect("_")
        self.expect("{")
        i = self.integer()
        r = 0
        if self.peek() == ",":
            self.pos += 1
            r = self.integer()
        self.expect("}")
        if letter in _LETTER_FAMILY:
            base = LaurentPoly.var(_LETTER_FAMILY[letter], i, r)
        elif self.resolver is not None:
            base = LaurentPoly.lift(self.resolver(letter, i, r))
        else:
            raise ParseError(f"no resolver for {letter!r}")
        return base ** pre


def parse_laurent(text: str, symbols: Mapping[str, Scalar] | None = None,
                  resolver: Callable[[str, int, int], Scalar] | None = None) -> LaurentPoly:
    """Parse a TeX-style expression such as ``m(1+v_{2,-3}v_{1,-2})`` or
    ``\\frac{z_{1,-1}+z^2_{2,0}}{z_{2,0}}``.

    Juxtaposition multiplies; ``symbols`` binds bare letters (e.g. ``m``);
    ``resolver(letter, i, r)`` handles indexed letters other than Y, z, v, x, y.
    """
    p = _Parser(text, symbols or {}, resolver)
    val = p.expr()
    if p.pos != len(p.s):
        raise ParseError(f"trailing input at offset {p.pos}: {p.s[p.pos:p.pos + 20]!r}")
    return val
