"""Adjoint and superadjoint operations on g^(l1,l2)."""
from __future__ import annotations

import dataclasses
import random
from fractions import Fraction

from .brackets import bracket_elements, raw_bracket
from .core import (AlgebraParams, DomainError, Element, GaussianRational, Generator, Window,
                   check_generator, dot, gdeg)

KINDS = ("adjoint", "superadjoint")
HALF = Fraction(1, 2)


def admits(kind: str, prm: AlgebraParams) -> bool:
    if kind == "adjoint":
        return True
    if kind == "superadjoint":
        return prm.l1x2 % 2 == 1 and prm.l2x2 % 2 == 0
    raise ValueError(f"unknown involution {kind!r}")


def _sign(exponent: Fraction) -> int:
    if exponent.denominator != 1:
        raise DomainError(f"sign exponent {exponent} is not an integer")
    return -1 if exponent.numerator % 2 else 1


def _central_sign(kind: str, sym: str, prm: AlgebraParams) -> int:
    l1, l2 = prm.l1, prm.l2
    if kind == "adjoint":
        fixed = {"C": 1, "Ch": 1, "Ceta": -1}
        if sym in fixed:
            return fixed[sym]
        cases = {
            "Cp": {(l1 == 0): -1, (l1 == 1): 1},
            "Cx": {(l2 == 0): -1, (l2 == 1): 1},
            "CkapA": {((l1, l2) == (0, 0)): 1, ((l1, l2) == (HALF, 0)): -1},
            "CkapS": {((l1, l2) == (0, 0)): 1, ((l1, l2) == (0, 1)): -1},
            "CzetA": {((l1, l2) == (0, 0)): -1, ((l1, l2) == (0, HALF)): 1},
            "CzetS": {((l1, l2) == (0, 0)): -1, ((l1, l2) == (1, 0)): 1},
        }[sym]
        if True in cases:
            return cases[True]
    else:
        if sym == "C":
            return 1
        if sym in ("Ceta", "CkapA"):
            return -1
        if sym == "Cx" and l2 in (0, 1):
            return -1 if l2 == 0 else 1
    raise DomainError(f"no {kind} image for {sym} at (l1,l2)=({l1},{l2})")


def image(kind: str, g: Generator, prm: AlgebraParams) -> Element:
    """Image of one basis element (a signed basis element)."""
    if not admits(kind, prm):
        raise DomainError(f"{kind} needs l1 in N+1/2 and l2 in N, got ({prm.l1},{prm.l2})")
    check_generator(g, prm)
    k = g.kind
    if g.is_central:
        return Element.of(g, _central_sign(kind, k, prm))
    flipped = Generator(k, -g.i, -g.j)
    if kind == "adjoint":
        return Element.of(flipped, -1 if k == "X2" else 1)
    a, b = Fraction(g.i, 2), Fraction(g.j, 2)
    l1 = prm.l1
    exponent = {
        "L": a,
        "P": l1 + a,
        "X": a,
        "P2": a + b,
        "X2": a + b + 1,
        "T": l1 + a + b + 1,
    }[k]
    return Element.of(flipped, _sign(exponent))


def apply(kind: str, A, prm: AlgebraParams) -> Element:
    """Antilinear extension of :func:`image` to linear combinations."""
    if isinstance(A, Generator):
        A = Element.of(A)
    out = Element()
    for g, c in A.items():
        c = c.conjugate() if isinstance(c, GaussianRational) else c
        out = out + c * image(kind, g, prm)
    return out


def adjoint(A, prm: AlgebraParams) -> Element:
    return apply("adjoint", A, prm)


def superadjoint(A, prm: AlgebraParams) -> Element:
    return apply("superadjoint", A, prm)


@dataclasses.dataclass
class InvolutionReport:
    kind: str
    params: AlgebraParams
    window: Window
    generators: int
    pairs: int
    samples: int
    failures: dict  # condition name -> list of offending descriptions

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params.to_json(),
            "window": self.window.to_json(),
            "generators": self.generators,
            "pairs": self.pairs,
            "samples": self.samples,
            "conditions": {name: {"ok": not bad, "failures": bad[:20]}
                           for name, bad in self.failures.items()},
        }


def _random_scalar(rng: random.Random) -> GaussianRational:
    return GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
                            Fraction(rng.randint(-9, 9), rng.randint(1, 5)))


def verify_involution(kind: str, prm: AlgebraParams, w: Window, seed: int = 0,
                      samples: int = 64) -> InvolutionReport:
    """Check the four defining conditions on every in-window generator and pair."""
    if not admits(kind, prm):
        raise DomainError(f"{kind} is not defined at (l1,l2)=({prm.l1},{prm.l2})")
    gens = w.generators(prm)
    img = {g: image(kind, g, prm) for g in gens}
    fail = {"degree": [], "antilinear": [], "bracket": [], "involutive": [], "central": []}

    for g in gens:
        if img[g].degree(prm) != gdeg(g):
            fail["degree"].append(str(g))
        twice_applied = apply(kind, img[g], prm)
        expected = Element.of(g, -1 if kind == "superadjoint" and dot(gdeg(g), gdeg(g)) else 1)
        if twice_applied != expected:
            fail["involutive"].append(f"{g} -> {twice_applied}")

    rng = random.Random(seed)
    by_degree: dict = {}
    for g in gens:
        by_degree.setdefault(gdeg(g), []).append(g)
    pools = [by_degree[d] for d in sorted(by_degree)]
    for _ in range(samples):
        pool = rng.choice(pools)
        x, y = rng.choice(pool), rng.choice(pool)
        alpha, beta = _random_scalar(rng), _random_scalar(rng)
        lhs = apply(kind, alpha * x + beta * y, prm)
        rhs = alpha.conjugate() * img[x] + beta.conjugate() * img[y]
        if lhs != rhs:
            fail["antilinear"].append(f"{alpha}*{x} + {beta}*{y}")

    reachable = set()
    pairs = 0
    for n, a in enumerate(gens):
        for b in gens[n:]:
            pairs += 1
            out = raw_bracket(a, b, prm)
            reachable.update(g for g in out if g.is_central)
            lhs = apply(kind, Element(out), prm)
            rhs = bracket_elements(img[b], img[a], prm)
            if kind == "superadjoint" and dot(gdeg(a), gdeg(b)):
                rhs = -rhs
            if lhs != rhs:
                fail["bracket"].append(f"[{a},{b}]: {lhs} != {rhs}")
    for g in sorted(reachable):
        try:
            _central_sign(kind, g.kind, prm)
        except DomainError as exc:
            fail["central"].append(str(exc))
    return InvolutionReport(kind, prm, w, len(gens), pairs, samples, fail)

