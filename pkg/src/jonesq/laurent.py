"""Exact Laurent polynomials in q with quarter-integer exponents.

Every scalar in the package lives here.  A value is stored as a mapping
from an integer ``e`` (meaning ``q**(e/4)``) to a nonzero coefficient.
Coefficients are plain ints, or :class:`GaussianInt` in Gaussian mode.

>>> q = LaurentQ.qpow(1)
>>> str((-q - q**-1) * (-q - q**-1))
'q^2 + 2 + q^-2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "GaussianInt",
    "LaurentQ",
    "ParseError",
    "parse",
    "quantum_integer",
    "unit_pow",
    "ZERO",
    "ONE",
    "Q",
    "DELTA",
]


class GaussianInt:
    """Exact a + b*i with integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @classmethod
    def coerce(cls, x) -> "GaussianInt":
        if isinstance(x, GaussianInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to GaussianInt")

    def __add__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        if isinstance(other, GaussianInt):
            return GaussianInt(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def is_unit(self) -> bool:
        return self.re * self.re + self.im * self.im == 1

    def unit_inverse(self) -> "GaussianInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit")
        return GaussianInt(self.re, -self.im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0 and self.im in (1, -1):
            return "i" if self.im == 1 else "-i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        return f"({self.re}{sign}{'' if mag == 1 else mag}i)"


Coeff = Union[int, GaussianInt]


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _frac_to_quarters(exp) -> int:
    e = Fraction(exp) * 4
    if e.denominator != 1:
        raise ValueError(f"exponent {exp} is not a multiple of 1/4")
    return int(e)


class LaurentQ:
    """Immutable Laurent polynomial in ``q^(1/4)``.

    ``terms`` maps quarter-exponents to coefficients; zero coefficients are
    dropped on construction.  Arithmetic between an integer-mode and a
    Gaussian-mode value promotes the result to Gaussian mode.
    """

    __slots__ = ("_terms", "_gaussian", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None, gaussian: bool = False):
        clean: dict[int, Coeff] = {}
        if terms:
            if not gaussian and any(isinstance(c, GaussianInt) for c in terms.values()):
                gaussian = True
            for e, c in terms.items():
                if gaussian:
                    c = GaussianInt.coerce(c)
                elif not isinstance(c, int):
                    raise TypeError(f"coefficient {c!r} is not an integer")
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._gaussian = gaussian
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict, gaussian: bool) -> "LaurentQ":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._gaussian = gaussian
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Coeff) -> "LaurentQ":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: Coeff, exponent) -> "LaurentQ":
        """``coeff * q**exponent``; exponent may be an int, Fraction or "3/2"."""
        return cls({_frac_to_quarters(exponent): coeff})

    @classmethod
    def qpow(cls, exponent) -> "LaurentQ":
        return cls.monomial(1, exponent)

    @classmethod
    def coerce(cls, x) -> "LaurentQ":
        if isinstance(x, LaurentQ):
            return x
        if isinstance(x, (int, GaussianInt)):
            return cls.const(x)
        raise TypeError(f"cannot coerce {x!r} to LaurentQ")

    # accessors -------------------------------------------------------------

    @property
    def gaussian(self) -> bool:
        return self._gaussian

    @property
    def terms(self) -> dict[int, Coeff]:
        """Copy of the quarter-exponent -> coefficient mapping."""
        return dict(self._terms)

    def items(self) -> list[tuple[Fraction, Coeff]]:
        """Terms as (exponent, coefficient), highest exponent first."""
        return [(Fraction(e, 4), self._terms[e]) for e in sorted(self._terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c.is_unit() if isinstance(c, GaussianInt) else c in (1, -1)

    def to_gaussian(self) -> "LaurentQ":
        if self._gaussian:
            return self
        return LaurentQ._raw({e: GaussianInt(c) for e, c in self._terms.items()}, True)

    # ring operations ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentQ):
            if isinstance(other, (int, GaussianInt)):
                other = LaurentQ.const(other)
            else:
                return NotImplemented
        if not other._terms:
            return self if self._gaussian or not other._gaussian else self.to_gaussian()
        gaussian = self._gaussian or other._gaussian
        a = self.to_gaussian()._terms if gaussian else self._terms
        b = other.to_gaussian()._terms if gaussian else other._terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentQ._raw(out, gaussian)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw({e: -c for e, c in self._terms.items()}, self._gaussian)

    def __sub__(self, other):
        if not isinstance(other, LaurentQ):
            if isinstance(other, (int, GaussianInt)):
                other = LaurentQ.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentQ):
            if isinstance(other, (int, GaussianInt)):
                if not other:
                    return LaurentQ._raw({}, self._gaussian or isinstance(other, GaussianInt))
                gaussian = self._gaussian or isinstance(other, GaussianInt)
                src = self.to_gaussian()._terms if gaussian else self._terms
                return LaurentQ._raw({e: c * other for e, c in src.items()}, gaussian)
            return NotImplemented
        gaussian = self._gaussian or other._gaussian
        a = self.to_gaussian()._terms if gaussian and not self._gaussian else self._terms
        b = other.to_gaussian()._terms if gaussian and not other._gaussian else other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, Coeff] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentQ._raw(out, gaussian)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = LaurentQ._raw({0: GaussianInt(1) if self._gaussian else 1}, self._gaussian)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> "LaurentQ":
        """Inverse of a unit monomial (coefficient +-1, or +-i in Gaussian mode)."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        ((e, c),) = self._terms.items()
        inv = c.unit_inverse() if isinstance(c, GaussianInt) else c
        return LaurentQ._raw({-e: inv}, self._gaussian)

    def divexact(self, other: "LaurentQ") -> "LaurentQ":
        """Exact quotient ``self / other``; raises ArithmeticError if not divisible."""
        other = LaurentQ.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_unit():
            return self * other.unit_inverse()
        lead_e = max(other._terms)
        lead_c = other._terms[lead_e]
        if not (lead_c in (1, -1) or (isinstance(lead_c, GaussianInt) and lead_c.is_unit())):
            raise ArithmeticError("divexact needs a unit leading coefficient")
        lead_inv = LaurentQ({-lead_e: lead_c.unit_inverse() if isinstance(lead_c, GaussianInt) else lead_c})
        rem = self
        quot = LaurentQ()
        low = min(other._terms)
        while rem:
            e = max(rem._terms)
            if e - lead_e < min(rem._terms) - low:
                break
            t = LaurentQ._raw({e: rem._terms[e]}, rem._gaussian) * lead_inv
            quot = quot + t
            rem = rem - t * other
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    # comparisons -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, GaussianInt)):
            other = LaurentQ.const(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # substitutions -----------------------------------------------------------

    def at_one(self) -> Coeff:
        """Value at q = 1 (sum of coefficients)."""
        return sum(self._terms.values(), GaussianInt(0) if self._gaussian else 0)

    def bar(self) -> "LaurentQ":
        """Substitute q -> q^-1 (so q^(1/2) -> q^(-1/2))."""
        return LaurentQ._raw({-e: c for e, c in self._terms.items()}, self._gaussian)

    # text form ------------------------------------------------------------

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"LaurentQ({to_string(self)!r})"


def _format_exponent(e: int) -> str:
    f = Fraction(e, 4)
    if f.denominator == 1:
        return "" if f == 1 else f"^{f.numerator}"
    return f"^({f.numerator}/{f.denominator})"


def to_string(a: LaurentQ) -> str:
    """Canonical text: descending exponents, e.g. ``-q - q^-1`` or ``q^(3/2)``."""
    if not a._terms:
        return "0"
    parts = []
    for i, e in enumerate(sorted(a._terms, reverse=True)):
        c = a._terms[e]
        if isinstance(c, GaussianInt) and c.im == 0:
            c = c.re
        if isinstance(c, int):
            neg = c < 0
            mag = -c if neg else c
            body = str(mag) if e == 0 or mag != 1 else ""
        elif c.re == 0 and c.im in (1, -1):
            neg = c.im < 0
            body = "i"
        else:
            neg = False
            sign = "+" if c.im > 0 else "-"
            mag = abs(c.im)
            body = f"({c.re}{sign}{'' if mag == 1 else mag}i)"
        if e != 0:
            mono = "q" + _format_exponent(e)
            body = f"{body}*{mono}" if body else mono
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<op>[+-])
      | (?P<gauss>\(\s*-?\d+\s*[+-]\s*\d*\s*i\s*\))
      | (?P<num>\d+)
      | (?P<i>i(?![A-Za-z0-9]))
      | (?P<star>\*)
      | (?P<q>q)
      | (?P<exp>\^\s*(?:\(\s*-?\d+(?:\s*/\s*\d+)?\s*\)|-?\d+))
    )""",
    re.VERBOSE,
)


def _parse_gauss(text: str) -> GaussianInt:
    m = re.fullmatch(r"\(\s*(-?\d+)\s*([+-])\s*(\d*)\s*i\s*\)", text)
    re_part = int(m.group(1))
    im = int(m.group(3) or 1)
    return GaussianInt(re_part, -im if m.group(2) == "-" else im)


def parse(text: str) -> LaurentQ:
    """Inverse of :func:`to_string`.  Accepts ``2q`` and ``2*q`` alike."""
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", pos + stripped)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()

    terms: dict[int, Coeff] = {}
    gaussian = False
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        if tokens[i][0] == "op":
            sign = -1 if tokens[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ParseError("expected '+' or '-' between terms", tokens[i][2])
        first = False
        if i >= len(tokens):
            raise ParseError("dangling sign", len(text))
        coeff: Coeff | None = None
        kind, val, at = tokens[i]
        if kind == "num":
            coeff = int(val)
            i += 1
        elif kind == "gauss":
            coeff = _parse_gauss(val)
            gaussian = True
            i += 1
        elif kind == "i":
            coeff = GaussianInt(0, 1)
            gaussian = True
            i += 1
        if i < len(tokens) and tokens[i][0] == "star":
            if coeff is None:
                raise ParseError("'*' without coefficient", tokens[i][2])
            i += 1
            if i >= len(tokens) or tokens[i][0] != "q":
                raise ParseError("expected 'q' after '*'", tokens[i][2] if i < len(tokens) else len(text))
        exponent = 0
        if i < len(tokens) and tokens[i][0] == "q":
            i += 1
            exponent = 4
            if i < len(tokens) and tokens[i][0] == "exp":
                raw = re.sub(r"[\s^()]", "", tokens[i][1])
                try:
                    exponent = _frac_to_quarters(Fraction(raw))
                except (ValueError, ZeroDivisionError):
                    raise ParseError(f"bad exponent {raw!r}", tokens[i][2]) from None
                i += 1
        elif coeff is None:
            raise ParseError("expected a coefficient or 'q'", at)
        if coeff is None:
            coeff = 1
        terms[exponent] = terms.get(exponent, 0) + sign * coeff
    return LaurentQ(terms, gaussian=gaussian)


def unit_pow(base_sign: int, base_exp, k: int) -> LaurentQ:
    """``(base_sign * q**base_exp) ** k`` for any integer k."""
    if base_sign not in (1, -1):
        raise ValueError("base_sign must be +1 or -1")
    e = _frac_to_quarters(base_exp)
    return LaurentQ._raw({e * k: base_sign ** (k % 2)}, False)


def quantum_integer(n: int) -> LaurentQ:
    """[n] = q^(n-1) + q^(n-3) + ... + q^(1-n); [0] = 0."""
    if n < 0:
        raise ValueError("quantum_integer needs n >= 0")
    return LaurentQ({4 * (n - 1 - 2 * k): 1 for k in range(n)})


def from_terms(pairs: Iterable[tuple[object, Coeff]]) -> LaurentQ:
    """Build from (exponent, coefficient) pairs with rational exponents."""
    out: dict[int, Coeff] = {}
    for exp, c in pairs:
        e = _frac_to_quarters(exp)
        out[e] = out.get(e, 0) + c
    return LaurentQ(out)


ZERO = LaurentQ()
ONE = LaurentQ.const(1)
Q = LaurentQ.qpow(1)
# value of a closed loop
DELTA = LaurentQ({4: -1, -4: -1})
