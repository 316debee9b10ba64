"""General Lie brackets of Vir, v(l1,l2), g(l1,l2) and the extended g^(l1,l2).

The workhorse is :func:`raw_bracket`, which returns a plain
``{Generator: Fraction}`` dict of canonical generators.  All structure
constants are real, so the hot loops of the verifiers never touch
Gaussian scalars; :func:`color_bracket` and :func:`bracket_elements`
wrap the result as :class:`~colorvir.core.Element`.
"""
from __future__ import annotations

from fractions import Fraction

from .core import (AlgebraParams, Element, Generator, ParamError, canonicalize,
                   check_generator, dot, gdeg)

HALF = Fraction(1, 2)

# orientation in which the bracket table is written down; pairs are
# evaluated with rank(a) <= rank(b) and flipped by graded antisymmetry
_RANK = {"L": 0, "P2": 1, "X2": 2, "T": 3, "P": 4, "X": 5}


def _put(out: dict, g: Generator, c) -> None:
    if c == 0:
        return
    g, sign = canonicalize(g)
    if sign == 0:
        return
    v = out.get(g, 0) + sign * c
    if v == 0:
        out.pop(g, None)
    else:
        out[g] = v


# --------------------------------------------------------------------------
# central cocycle tables

def p_func(m: Fraction, prm: AlgebraParams) -> Fraction:
    if prm.l1 == 0:
        return m * m
    if prm.l1 == 1:
        return m ** 3
    return Fraction(0)


def x_func(m: Fraction, prm: AlgebraParams) -> Fraction:
    if prm.l2 == 0:
        return m * m
    if prm.l2 == 1:
        return m ** 3
    return Fraction(0)


def cocycle_terms(kind: str, a: Fraction, b: Fraction, prm: AlgebraParams) -> dict:
    """Central part of the Theorem tables as ``{central symbol: coefficient}``.

    ``kind`` is one of ``h, eta, rho, q, kappa, zeta``; ``(a, b)`` are the two
    index arguments of the table function.
    """
    l1, l2 = prm.l1, prm.l2
    out: dict = {}

    def add(sym, c):
        if c:
            out[Generator(sym)] = out.get(Generator(sym), 0) + c

    if kind == "h":
        if l1 == 0:
            add("Ch", a + b)
    elif kind == "eta":
        if l2 == 0:
            add("Ceta", a - b)
    elif kind == "kappa":
        if (l1, l2) == (0, 0):
            add("CkapS", a + b)
            add("CkapA", a - b)
        elif (l1, l2) == (HALF, 0):
            add("CkapA", a * a - b * b)
        elif (l1, l2) == (0, 1):
            add("CkapS", a * b)
    elif kind == "zeta":
        if (l1, l2) == (0, 0):
            add("CzetS", a + b)
            add("CzetA", a - b)
        elif (l1, l2) == (0, HALF):
            add("CzetA", a * a - b * b)
        elif (l1, l2) == (1, 0):
            add("CzetS", a * b)
    elif kind == "q":
        # q(u,v) = -2 * antisymmetric part of zeta
        if (l1, l2) == (0, 0):
            add("CzetA", -2 * (a - b))
        elif (l1, l2) == (0, HALF):
            add("CzetA", -2 * (a * a - b * b))
    elif kind == "rho":
        if prm.rho_mode == "theorem-verbatim":
            if (l1, l2) == (0, 0):
                add("CkapA", -2 * (a - b))
            elif (l1, l2) == (HALF, 0):
                add("CkapA", -2 * (a * a - b * b))
        else:
            # rho(r,s) = -2 * symmetric part of kappa
            if (l1, l2) == (0, 0):
                add("CkapS", -2 * (a + b))
            elif (l1, l2) == (0, 1):
                add("CkapS", -2 * a * b)
    else:
        raise ValueError(f"unknown cocycle table {kind!r}")
    return out


# --------------------------------------------------------------------------
# the table

def raw_bracket(a: Generator, b: Generator, prm: AlgebraParams,
                virasoro: bool = True) -> dict:
    """Bracket of two canonical basis elements as ``{Generator: Fraction}``.

    ``virasoro=False`` drops the central term of ``[L_m, L_n]`` (the Witt
    baseline used by the extension classifier).
    """
    if a.kind not in _RANK or b.kind not in _RANK:
        return {}
    if _RANK[a.kind] > _RANK[b.kind]:
        out = _oriented(b, a, prm, virasoro)
        if not out:
            return out
        flip = 1 if dot(gdeg(a), gdeg(b)) else -1
        return {g: flip * c for g, c in out.items()}
    return _oriented(a, b, prm, virasoro)


def _oriented(a: Generator, b: Generator, prm: AlgebraParams, virasoro: bool) -> dict:
    ka, kb = a.kind, b.kind
    out: dict = {}
    ext = prm.extended
    if ka == "L":
        m2 = a.i
        m = Fraction(m2, 2)
        l1, l2 = prm.l1, prm.l2
        if kb == "L":
            n = Fraction(b.i, 2)
            _put(out, Generator("L", m2 + b.i), m - n)
            if virasoro and m2 + b.i == 0 and m != 0:
                _put(out, Generator("C"), m * (m * m - 1) / 12)
        elif kb == "P":
            r = Fraction(b.i, 2)
            _put(out, Generator("P", m2 + b.i), m * l1 - r)
            if ext and m2 + b.i == 0:
                c = p_func(m, prm)
                if c:
                    out[Generator("Cp")] = c
        elif kb == "X":
            u = Fraction(b.i, 2)
            _put(out, Generator("X", m2 + b.i), m * l2 - u)
            if ext and m2 + b.i == 0:
                c = x_func(m, prm)
                if c:
                    out[Generator("Cx")] = c
        elif kb in ("P2", "X2", "T"):
            la = l1 if kb in ("P2", "T") else l2
            lb = l1 if kb == "P2" else l2
            r, s = Fraction(b.i, 2), Fraction(b.j, 2)
            _put(out, Generator(kb, m2 + b.i, b.j), m * la - r)
            _put(out, Generator(kb, b.i, m2 + b.j), m * lb - s)
        return out
    if ka == "P" and kb == "P":
        _put(out, Generator("P2", a.i, b.i), 1)
        return out
    if ka == "P" and kb == "X":
        out[Generator("T", a.i, b.i)] = Fraction(1)
        return out
    if ka == "X" and kb == "X":
        _put(out, Generator("X2", a.i, b.i), 1)
        return out
    if not ext or kb not in ("P", "X") or a.i + a.j + b.i != 0:
        return out
    # extended: composite with P or X, total index zero
    table = {("P2", "P"): "h", ("X2", "X"): "eta", ("P2", "X"): "rho",
             ("X2", "P"): "q", ("T", "P"): "kappa", ("T", "X"): "zeta"}[(ka, kb)]
    x, y = Fraction(a.i, 2), Fraction(a.j, 2)
    if table == "kappa":
        # [T_{ru}, P_s] = kappa(r, s)
        y = Fraction(b.i, 2)
    elif table == "zeta":
        # {T_{ru}, X_v} = zeta(u, v)
        x, y = Fraction(a.j, 2), Fraction(b.i, 2)
    return cocycle_terms(table, x, y, prm)


# --------------------------------------------------------------------------
# public operations

def vir_bracket(m: int, n: int) -> Element:
    """``[L_m, L_n] = (m-n) L_{m+n} + m(m^2-1)/12 delta_{m+n,0} c``."""
    m, n = int(m), int(n)
    out: dict = {}
    _put(out, Generator("L", 2 * (m + n)), Fraction(m - n))
    if m + n == 0:
        _put(out, Generator("C"), Fraction(m * (m * m - 1), 12))
    return Element(out)


_SUPER_KINDS = ("L", "P", "X", "C")


def super_bracket(a: Generator, b: Generator, prm: AlgebraParams) -> Element:
    """Bracket of the Z2-graded superalgebra v(l1, l2)."""
    for g in (a, b):
        if g.kind not in _SUPER_KINDS:
            raise ParamError(f"{g} is not a generator of v(l1,l2)")
        check_generator(g, prm)
    return Element(super_raw(a, b, prm))


def super_raw(a: Generator, b: Generator, prm: AlgebraParams) -> dict:
    ka, kb = a.kind, b.kind
    if ka == "C" or kb == "C":
        return {}
    if ka == "L" or kb == "L":
        if ka != "L":
            # [Y, L] = -[L, Y]: L is even, so the super sign is always -
            return {g: -c for g, c in super_raw(b, a, prm).items()}
        out: dict = {}
        m = Fraction(a.i, 2)
        if kb == "L":
            n = Fraction(b.i, 2)
            _put(out, Generator("L", a.i + b.i), m - n)
            if a.i + b.i == 0:
                _put(out, Generator("C"), m * (m * m - 1) / 12)
        else:
            weight = prm.l1 if kb == "P" else prm.l2
            _put(out, Generator(kb, a.i + b.i), m * weight - Fraction(b.i, 2))
        return out
    # [P,P] = [P,X] = {X,X} = 0
    return {}


def color_bracket(a: Generator, b: Generator, prm: AlgebraParams) -> Element:
    """Bracket of g(l1,l2), or of its central extension when ``prm.extended``."""
    a, sa = canonicalize(a)
    b, sb = canonicalize(b)
    if sa == 0 or sb == 0:
        return Element()
    check_generator(a, prm)
    check_generator(b, prm)
    out = raw_bracket(a, b, prm)
    if sa * sb < 0:
        out = {g: -c for g, c in out.items()}
    return Element(out)


def bracket_elements(A, B, prm: AlgebraParams) -> Element:
    """Bilinear extension of :func:`color_bracket` to linear combinations."""
    if isinstance(A, Generator):
        A = Element.of(A)
    if isinstance(B, Generator):
        B = Element.of(B)
    acc: dict = {}
    for a, ca in A.items():
        for b, cb in B.items():
            check_generator(a, prm)
            check_generator(b, prm)
            c = ca * cb
            for g, v in raw_bracket(a, b, prm).items():
                acc[g] = acc.get(g, 0) + c * v
    return Element(acc)


def graded_sign(a: Generator, b: Generator) -> int:
    """``(-1)^{deg a . deg b}``."""
    return -1 if dot(gdeg(a), gdeg(b)) else 1
