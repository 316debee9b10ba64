"""Degrees, half-integer indices, generators and exact linear combinations.

Indices are stored as *twice* their value so that every index in
``Z + 1/2`` is an ordinary Python int.  ``L(3)`` therefore carries ``i=6``
and ``P(-1/2)`` carries ``i=-1``.
"""
from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Union


class ParamError(ValueError):
    """Invalid algebra parameters, or a generator that does not exist for them."""


class DomainError(ValueError):
    """Operation requested outside its domain (e.g. an inadmissible involution)."""


# --------------------------------------------------------------------------
# scalars

class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return GaussianRational(x, 0)
        if isinstance(x, complex):
            raise TypeError("float complex numbers are not exact")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return scalar(GaussianRational(self.re + o.re, self.im + o.im))

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return scalar(GaussianRational(self.re - o.re, self.im - o.im))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return scalar(GaussianRational(self.re * o.re - self.im * o.im,
                                       self.re * o.im + self.im * o.re))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        num = self._coerce(num)
        return scalar(GaussianRational(num.re / den, num.im / den))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


I = GaussianRational(0, 1)

Scalar = Union[int, Fraction, GaussianRational]


def scalar(x) -> Union[Fraction, GaussianRational]:
    """Normalise a scalar: real values become ``Fraction``."""
    if isinstance(x, GaussianRational):
        if x.im == 0:
            return x.re
        return x
    if isinstance(x, (float, complex)):
        raise TypeError(f"inexact scalar {x!r}")
    return Fraction(x)


def conj(x):
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


# --------------------------------------------------------------------------
# half integers

def parse_half(value) -> Fraction:
    """Parse ``"3/2"``, ``"-1"``, ints or Fractions into a half-integer."""
    if isinstance(value, str):
        text = value.strip()
        try:
            x = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParamError(f"not a fraction: {value!r}") from exc
    elif isinstance(value, float):
        raise ParamError(f"floats are not accepted as indices: {value!r}")
    else:
        x = Fraction(value)
    if (2 * x).denominator != 1:
        raise ParamError(f"{value!r} is not a half-integer")
    return x


def twice(value) -> int:
    return int(2 * parse_half(value))


def fmt_half(t: int) -> str:
    """Format a twice-value as fraction text (``3 -> "3/2"``)."""
    if t % 2 == 0:
        return str(t // 2)
    return f"{t}/2"


# --------------------------------------------------------------------------
# degrees

class Degree(NamedTuple):
    a1: int
    a2: int

    def __add__(self, other):  # type: ignore[override]
        return Degree((self.a1 + other.a1) % 2, (self.a2 + other.a2) % 2)

    def dot(self, other: "Degree") -> int:
        return (self.a1 * other.a1 + self.a2 * other.a2) % 2

    def __str__(self):
        return f"({self.a1},{self.a2})"


D00, D01, D10, D11 = Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)
DEGREES = (D00, D01, D10, D11)


def dot(a: Degree, b: Degree) -> int:
    return (a[0] * b[0] + a[1] * b[1]) % 2


# --------------------------------------------------------------------------
# parameters and generators

CENTRAL_KINDS = ("C", "Cp", "Cx", "Ch", "Ceta", "CkapA", "CkapS", "CzetA", "CzetS")
KINDS = ("L", "P", "X", "P2", "X2", "T") + CENTRAL_KINDS
RHO_MODES = ("corrected", "theorem-verbatim")

CENTRAL_DEGREE = {
    "C": D00,
    "Cp": D01, "Ch": D01, "CzetA": D01, "CzetS": D01,
    "Cx": D11, "Ceta": D11, "CkapA": D11, "CkapS": D11,
}

_DEGREE = {"L": D00, "P2": D00, "X2": D00, "P": D01, "T": D10, "X": D11}
_DEGREE.update(CENTRAL_DEGREE)


@dataclasses.dataclass(frozen=True)
class AlgebraParams:
    """Spin weights (l1, l2) and whether the central extension is switched on."""

    l1: Fraction
    l2: Fraction
    extended: bool = False
    rho_mode: str = "corrected"

    def __post_init__(self):
        for name in ("l1", "l2"):
            x = parse_half(getattr(self, name))
            if x < 0:
                raise ParamError(f"{name} must be a non-negative spin value, got {x}")
            object.__setattr__(self, name, x)
        if self.rho_mode not in RHO_MODES:
            raise ParamError(f"unknown rho mode {self.rho_mode!r}")

    @property
    def l1x2(self) -> int:
        return int(2 * self.l1)

    @property
    def l2x2(self) -> int:
        return int(2 * self.l2)

    def admits(self, kind: str) -> bool:
        """Whether central symbol ``kind`` occurs at these (l1, l2)."""
        l1, l2 = self.l1, self.l2
        half = Fraction(1, 2)
        if kind == "C":
            return True
        if not self.extended:
            return False
        if kind == "Cp":
            return l1 in (0, 1)
        if kind == "Cx":
            return l2 in (0, 1)
        if kind == "Ch":
            return l1 == 0
        if kind == "Ceta":
            return l2 == 0
        if kind == "CkapA":
            return (l1, l2) in ((0, 0), (half, 0))
        if kind == "CkapS":
            return (l1, l2) in ((0, 0), (0, 1))
        if kind == "CzetA":
            return (l1, l2) in ((0, 0), (0, half))
        if kind == "CzetS":
            return (l1, l2) in ((0, 0), (1, 0))
        raise ParamError(f"not a central symbol: {kind!r}")

    def central_symbols(self) -> list:
        return [Generator(k) for k in CENTRAL_KINDS if self.admits(k)]

    def with_(self, **changes) -> "AlgebraParams":
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict:
        return {"l1": str(self.l1), "l2": str(self.l2),
                "extended": self.extended, "rhoMode": self.rho_mode}


def params(l1, l2, extended=False, rho_mode="corrected") -> AlgebraParams:
    return AlgebraParams(parse_half(l1), parse_half(l2), extended, rho_mode)


class Generator(NamedTuple):
    """Basis symbol; ``i``/``j`` are twice-values of the indices (0 if unused).

    Arithmetic operators build :class:`Element` values, so ``3 * L(1)``
    is a linear combination rather than tuple repetition.
    """

    kind: str
    i: int = 0
    j: int = 0

    @property
    def indices(self) -> tuple:
        n = _ARITY.get(self.kind, 0)
        return tuple(Fraction(t, 2) for t in (self.i, self.j)[:n])

    @property
    def weight2(self) -> int:
        """Twice the total mode index (the L_0 weight)."""
        return self.i + self.j

    @property
    def is_central(self) -> bool:
        return self.kind in CENTRAL_DEGREE

    def __str__(self):
        n = _ARITY.get(self.kind, 0)
        if n == 0:
            return self.kind
        return f"{self.kind}({','.join(fmt_half(t) for t in (self.i, self.j)[:n])})"

    # linear-combination sugar
    def __add__(self, other):  # type: ignore[override]
        return Element.of(self) + other

    def __radd__(self, other):
        return other + Element.of(self)

    def __sub__(self, other):
        return Element.of(self) - other

    def __rsub__(self, other):
        return other - Element.of(self)

    def __neg__(self):
        return Element.of(self, -1)

    def __mul__(self, c):  # type: ignore[override]
        return Element.of(self, c)

    __rmul__ = __mul__


_ARITY = {"L": 1, "P": 1, "X": 1, "P2": 2, "X2": 2, "T": 2}
_FAMILY_ORDER = {k: n for n, k in enumerate(KINDS)}


def sort_key(g: Generator) -> tuple:
    return (_FAMILY_ORDER[g.kind], g.i, g.j)


def L(m) -> Generator:
    x = parse_half(m)
    if x.denominator != 1:
        raise ParamError(f"L index must be an integer, got {m!r}")
    return Generator("L", int(2 * x))


def P(r) -> Generator:
    return Generator("P", twice(r))


def X(u) -> Generator:
    return Generator("X", twice(u))


def P2(r, s) -> Generator:
    """Composite ``P_{rs}`` (not canonicalised; see :func:`canonicalize`)."""
    return Generator("P2", twice(r), twice(s))


def X2(u, v) -> Generator:
    return Generator("X2", twice(u), twice(v))


def T(r, u) -> Generator:
    return Generator("T", twice(r), twice(u))


C = Generator("C")
Cp = Generator("Cp")
Cx = Generator("Cx")
Ch = Generator("Ch")
Ceta = Generator("Ceta")
CkapA = Generator("CkapA")
CkapS = Generator("CkapS")
CzetA = Generator("CzetA")
CzetS = Generator("CzetS")


def canonicalize(g: Generator) -> tuple:
    """Return ``(generator, sign)``; sign 0 means the generator is zero."""
    if g.kind == "P2" and g.i > g.j:
        return Generator("P2", g.j, g.i), 1
    if g.kind == "X2":
        if g.i == g.j:
            return None, 0
        if g.i > g.j:
            return Generator("X2", g.j, g.i), -1
    return g, 1


def check_generator(g: Generator, p: AlgebraParams) -> None:
    """Raise :class:`ParamError` unless ``g`` is a basis element under ``p``."""
    k = g.kind
    if k not in _DEGREE:
        raise ParamError(f"unknown generator kind {k!r}")
    if g.is_central:
        if not p.admits(k):
            raise ParamError(f"central symbol {k} does not occur at (l1,l2)=({p.l1},{p.l2})"
                             + ("" if p.extended else " without the extension"))
        return
    if k == "L":
        if g.i % 2:
            raise ParamError(f"{g}: L index must be an integer")
        return
    first_ok = {"P": p.l1x2, "P2": p.l1x2, "T": p.l1x2, "X": p.l2x2, "X2": p.l2x2}[k]
    if (g.i - first_ok) % 2:
        raise ParamError(f"{g}: index parity does not match spin weight")
    if k in ("P2", "X2"):
        if (g.j - first_ok) % 2:
            raise ParamError(f"{g}: index parity does not match spin weight")
    if k == "T" and (g.j - p.l2x2) % 2:
        raise ParamError(f"{g}: second index parity does not match l2")
    if k == "X2" and g.i == g.j:
        raise ParamError(f"{g} is the zero element")


def degree_of(g: Generator, p: Optional[AlgebraParams] = None) -> Degree:
    if p is not None:
        check_generator(g, p)
    try:
        return _DEGREE[g.kind]
    except KeyError:
        raise ParamError(f"unknown generator kind {g.kind!r}") from None


def gdeg(g: Generator) -> Degree:
    return _DEGREE[g.kind]


# --------------------------------------------------------------------------
# elements

class Element:
    """Finite linear combination of canonical generators with exact scalars."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        acc: dict = {}
        if terms:
            for g, c in terms.items():
                g, sign = canonicalize(g)
                if sign == 0:
                    continue
                c = scalar(c)
                if sign < 0:
                    c = -c
                acc[g] = acc.get(g, 0) + c
        self._terms = {g: scalar(c) for g, c in acc.items() if c != 0}

    @classmethod
    def of(cls, g: Generator, c=1) -> "Element":
        return cls({g: c})

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        # terms must already be canonical with non-zero normalised scalars
        e = cls.__new__(cls)
        e._terms = terms
        return e

    @property
    def terms(self) -> Mapping:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def generators(self) -> list:
        return sorted(self._terms, key=sort_key)

    def coeff(self, g: Generator):
        g, sign = canonicalize(g)
        if sign == 0:
            return Fraction(0)
        return sign * self._terms.get(g, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __iter__(self) -> Iterator:
        return iter(self.generators())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Generator):
            other = Element.of(other)
        if isinstance(other, Element):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, Generator):
            other = Element.of(other)
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for g, c in other._terms.items():
            v = out.get(g, 0) + c
            if v == 0:
                out.pop(g, None)
            else:
                out[g] = scalar(v)
        return Element._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw({g: -c for g, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Generator):
            other = Element.of(other)
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        if isinstance(c, (Element, Generator)):
            return NotImplemented
        c = scalar(c)
        if c == 0:
            return Element()
        return Element._raw({g: scalar(v * c) for g, v in self._terms.items()})

    __rmul__ = __mul__

    def conjugate_scalars(self) -> "Element":
        return Element._raw({g: conj(c) for g, c in self._terms.items()})

    def degree(self, p: Optional[AlgebraParams] = None) -> Optional[Degree]:
        """The common degree of all terms, or ``None`` for mixed/zero elements."""
        degs = {degree_of(g, p) for g in self._terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def central_part(self) -> "Element":
        return Element._raw({g: c for g, c in self._terms.items() if g.is_central})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for g in self.generators():
            c = self._terms[g]
            parts.append(str(g) if c == 1 else f"{c}*{g}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[str(g), str(self._terms[g])] for g in self.generators()]


ZERO = Element()


def add(a: Element, b: Element) -> Element:
    return a + b


def scale(c, a: Element) -> Element:
    return c * a


def conjugate_scalars(a: Element) -> Element:
    return a.conjugate_scalars()


# --------------------------------------------------------------------------
# truncation windows

@dataclasses.dataclass(frozen=True)
class Window:
    """Mode truncation ``|m| <= m_max``, ``|r| <= r_max``, ``|u| <= u_max``."""

    m_max: int
    r_max: Fraction
    u_max: Fraction

    def __post_init__(self):
        if int(self.m_max) != self.m_max or self.m_max < 0:
            raise ParamError(f"m_max must be a non-negative integer, got {self.m_max!r}")
        object.__setattr__(self, "m_max", int(self.m_max))
        for name in ("r_max", "u_max"):
            x = parse_half(getattr(self, name))
            if x < 0:
                raise ParamError(f"{name} must be non-negative")
            object.__setattr__(self, name, x)

    @classmethod
    def square(cls, size) -> "Window":
        return cls(int(size), parse_half(size), parse_half(size))

    def contains(self, g: Generator) -> bool:
        k = g.kind
        if k in CENTRAL_DEGREE:
            return True
        m2, r2, u2 = 2 * self.m_max, 2 * self.r_max, 2 * self.u_max
        if k == "L":
            return abs(g.i) <= m2
        if k == "P":
            return abs(g.i) <= r2
        if k == "X":
            return abs(g.i) <= u2
        if k == "P2":
            return abs(g.i) <= r2 and abs(g.j) <= r2
        if k == "X2":
            return abs(g.i) <= u2 and abs(g.j) <= u2
        return abs(g.i) <= r2 and abs(g.j) <= u2

    __contains__ = contains

    def generators(self, p: AlgebraParams, kinds: Iterable[str] = KINDS,
                   central: bool = True) -> list:
        """All basis elements of the algebra ``p`` inside the window, sorted."""
        kinds = tuple(kinds)
        ms = [2 * m for m in range(-self.m_max, self.m_max + 1)]
        rs = _modes(p.l1x2, int(2 * self.r_max))
        us = _modes(p.l2x2, int(2 * self.u_max))
        out = []
        if "L" in kinds:
            out += [Generator("L", m) for m in ms]
        if "P" in kinds:
            out += [Generator("P", r) for r in rs]
        if "X" in kinds:
            out += [Generator("X", u) for u in us]
        if "P2" in kinds:
            out += [Generator("P2", r, s) for r, s in itertools.combinations_with_replacement(rs, 2)]
        if "X2" in kinds:
            out += [Generator("X2", u, v) for u, v in itertools.combinations(us, 2)]
        if "T" in kinds:
            out += [Generator("T", r, u) for r in rs for u in us]
        if central:
            out += [g for g in p.central_symbols() if g.kind in kinds]
        return sorted(out, key=sort_key)

    def to_json(self) -> dict:
        return {"mMax": self.m_max, "rMax": str(self.r_max), "uMax": str(self.u_max)}


def _modes(l_x2: int, bound_x2: int) -> list:
    """Twice-values t with t = l_x2 (mod 2) and |t| <= bound_x2."""
    start = -bound_x2
    if (start - l_x2) % 2:
        start += 1
    return list(range(start, bound_x2 + 1, 2))
