"""Normal ordering in U(v(l1,l2)) and the realization of g(l1,l2) inside it.

A word is a tuple of generators of v (``L``, ``P``, ``X``, ``C``).  The
PBW-style normal order is ``C < L < P < X`` with ascending indices inside a
family; X factors must be strictly ascending since ``X_u X_u = 0``.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .brackets import bracket_elements, super_raw
from .core import (AlgebraParams, DomainError, Element, Generator, ParamError, Window,
                   check_generator, dot, gdeg, scalar)

_ORDER = {"C": 0, "L": 1, "P": 2, "X": 3}
STRATEGIES = ("left", "right")


def _key(g: Generator) -> tuple:
    return (_ORDER[g.kind], g.i)


def _odd(g: Generator) -> bool:
    return g.kind == "X"


def is_normal(word: tuple) -> bool:
    for x, y in zip(word, word[1:]):
        kx, ky = _key(x), _key(y)
        if kx > ky or (kx == ky and _odd(x)):
            return False
    return True


class NormalForm:
    """Linear combination of normal-ordered words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        acc = {}
        for w, c in (terms or {}).items():
            c = scalar(c)
            if c != 0:
                acc[tuple(w)] = acc.get(tuple(w), 0) + c
        self._terms = {w: c for w, c in acc.items() if c != 0}

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "NormalForm") -> "NormalForm":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return NormalForm(out)

    def __neg__(self):
        return NormalForm({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = scalar(c)
        return NormalForm({w: c * v for w, v in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        words = sorted(self._terms, key=lambda w: (len(w), [_key(g) for g in w]))
        parts = []
        for w in words:
            c, text = self._terms[w], "·".join(map(str, w)) or "1"
            parts.append(text if c == 1 else f"{c}*{text}")
        return " + ".join(parts)


def normal_order(word: Iterable[Generator], prm: AlgebraParams, coeff=1,
                 strategy: str = "left") -> NormalForm:
    """Rewrite ``coeff * word`` into normal order.

    ``strategy`` picks which out-of-order adjacent pair is swapped first;
    the result does not depend on it (the confluence tests check this).
    """
    word = tuple(word)
    for g in word:
        if g.kind not in _ORDER:
            raise ParamError(f"{g} is not a generator of v(l1,l2)")
        check_generator(g, prm.with_(extended=False))
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    raw = _normal(word, prm.l1x2, prm.l2x2, strategy)
    c = scalar(coeff)
    return NormalForm({w: c * v for w, v in raw.items()})


@lru_cache(maxsize=None)
def _super_params(l1x2: int, l2x2: int) -> AlgebraParams:
    return AlgebraParams(Fraction(l1x2, 2), Fraction(l2x2, 2))


@lru_cache(maxsize=200_000)
def _normal(word: tuple, l1x2: int, l2x2: int, strategy: str) -> dict:
    bad = []
    for k in range(len(word) - 1):
        x, y = word[k], word[k + 1]
        kx, ky = _key(x), _key(y)
        if kx == ky and _odd(x):
            return {}
        if kx > ky:
            bad.append(k)
            if strategy == "left":
                break
    if not bad:
        return {word: Fraction(1)}
    k = bad[0] if strategy == "left" else bad[-1]
    x, y = word[k], word[k + 1]
    head, tail = word[:k], word[k + 2:]
    out: dict = {}
    # xy = (-1)^{|x||y|} yx + [x, y]
    sign = -1 if _odd(x) and _odd(y) else 1
    for w, c in _normal(head + (y, x) + tail, l1x2, l2x2, strategy).items():
        out[w] = out.get(w, 0) + sign * c
    prm = _super_params(l1x2, l2x2)
    for g, cg in super_raw(x, y, prm).items():
        for w, c in _normal(head + (g,) + tail, l1x2, l2x2, strategy).items():
            out[w] = out.get(w, 0) + cg * c
    return {w: c for w, c in out.items() if c != 0}


def multiply(A: NormalForm, B: NormalForm, prm: AlgebraParams) -> NormalForm:
    acc: dict = {}
    for wa, ca in A.items():
        for wb, cb in B.items():
            c = ca * cb
            for w, v in _normal(wa + wb, prm.l1x2, prm.l2x2, "left").items():
                acc[w] = acc.get(w, 0) + c * v
    return NormalForm(acc)


def realize(g: Generator, prm: AlgebraParams | None = None) -> NormalForm:
    """Image of a basis element of g(l1,l2) in U(v): ``P_rs -> 2 P_r P_s`` etc."""
    if prm is not None:
        check_generator(g, prm.with_(extended=False) if g.kind == "C" else prm)
    k = g.kind
    if k in ("L", "P", "X", "C"):
        return NormalForm({(Generator(k, g.i),) if k != "C" else (g,): 1})
    if k == "P2":
        a, b = sorted((g.i, g.j))
        return NormalForm({(Generator("P", a), Generator("P", b)): 2})
    if k == "X2":
        if g.i == g.j:
            return NormalForm()
        a, b = sorted((g.i, g.j))
        sign = 1 if g.i < g.j else -1
        return NormalForm({(Generator("X", a), Generator("X", b)): 2 * sign})
    if k == "T":
        return NormalForm({(Generator("P", g.i), Generator("X", g.j)): 2})
    raise DomainError(f"central symbol {k} has no realization in U(v)")


def realize_element(A: Element) -> NormalForm:
    out = NormalForm()
    for g, c in A.items():
        out = out + c * realize(g)
    return out


def color_bracket_uea(a: Generator, b: Generator, prm: AlgebraParams) -> NormalForm:
    """``a b - (-1)^{deg a . deg b} b a`` evaluated in U(v)."""
    if prm.extended:
        prm = prm.with_(extended=False)
    ra, rb = realize(a, prm), realize(b, prm)
    sign = -1 if dot(gdeg(a), gdeg(b)) else 1
    return multiply(ra, rb, prm) - sign * multiply(rb, ra, prm)


@dataclasses.dataclass
class RealizationReport:
    params: AlgebraParams
    window: Window
    pairs_checked: int
    mismatches: list  # of ((a, b), uea NormalForm, table NormalForm)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "window": self.window.to_json(),
            "pairsChecked": self.pairs_checked,
            "mismatchCount": len(self.mismatches),
            "mismatches": [{"pair": [str(a), str(b)], "uea": repr(u), "table": repr(t)}
                           for (a, b), u, t in self.mismatches],
        }


def verify_realization(prm: AlgebraParams, w: Window,
                       kinds: tuple = ("L", "P", "X", "P2", "X2", "T", "C")) -> RealizationReport:
    """Compare the UEA graded commutator with the abstract table on all pairs."""
    if prm.extended:
        raise DomainError("the realization covers g(l1,l2) only, not its extension")
    gens = w.generators(prm, kinds=kinds)
    mismatches = []
    count = 0
    for n, a in enumerate(gens):
        for b in gens[n:]:
            count += 1
            lhs = color_bracket_uea(a, b, prm)
            rhs = realize_element(bracket_elements(a, b, prm))
            if lhs != rhs:
                mismatches.append(((a, b), lhs, rhs))
    return RealizationReport(prm, w, count, mismatches)


def word_str(word: tuple) -> str:
    return "·".join(str(g) for g in word)

