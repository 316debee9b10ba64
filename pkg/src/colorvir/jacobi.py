"""Exhaustive graded-Jacobi verification over a truncation window."""
from __future__ import annotations

import dataclasses
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from math import comb

from .brackets import raw_bracket, super_raw
from .core import (AlgebraParams, Element, Generator, Window, check_generator, dot,
                   gdeg, sort_key)

ALGEBRAS = ("color", "super")


def _parity(g: Generator) -> int:
    return 1 if g.kind == "X" else 0


class _Table:
    """Memoised structure constants plus the sign rule of one algebra."""

    def __init__(self, prm: AlgebraParams, algebra: str = "color"):
        if algebra not in ALGEBRAS:
            raise ValueError(f"unknown algebra {algebra!r}")
        self.prm = prm
        self.algebra = algebra
        self._cache: dict = {}

    def bracket(self, a: Generator, b: Generator) -> dict:
        key = (a, b)
        out = self._cache.get(key)
        if out is None:
            if self.algebra == "color":
                out = raw_bracket(a, b, self.prm)
            else:
                out = super_raw(a, b, self.prm)
            self._cache[key] = out
        return out

    def sign(self, a: Generator, b: Generator) -> int:
        if self.algebra == "color":
            return -1 if dot(gdeg(a), gdeg(b)) else 1
        return -1 if _parity(a) & _parity(b) else 1

    def residual(self, a: Generator, b: Generator, c: Generator) -> dict:
        out: dict = {}
        br = self.bracket
        for x, y, z, e in ((a, b, c, self.sign(a, c)),
                           (b, c, a, self.sign(b, a)),
                           (c, a, b, self.sign(c, b))):
            for g, cg in br(y, z).items():
                for h, v in br(x, g).items():
                    out[h] = out.get(h, 0) + e * cg * v
        return {h: v for h, v in out.items() if v != 0}


def jacobi_residual(a: Generator, b: Generator, c: Generator, prm: AlgebraParams,
                    algebra: str = "color") -> Element:
    """``(-1)^{a.c}[a,[b,c]] + (-1)^{b.a}[b,[c,a]] + (-1)^{c.b}[c,[a,b]]``."""
    for g in (a, b, c):
        check_generator(g, prm)
    return Element(_Table(prm, algebra).residual(a, b, c))


@dataclasses.dataclass
class JacobiReport:
    params: AlgebraParams
    window: Window
    algebra: str
    triples_total: int
    triples_checked: int
    escaped: int
    failures: list  # of ((a, b, c), Element)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failure_shapes(self) -> Counter:
        return Counter(tuple(g.kind for g in t) for t, _ in self.failures)

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "window": self.window.to_json(),
            "algebra": self.algebra,
            "triplesTotal": self.triples_total,
            "triplesChecked": self.triples_checked,
            "escaped": self.escaped,
            "failureCount": len(self.failures),
            "failureShapes": {",".join(k): v for k, v in sorted(self.failure_shapes().items())},
            "failures": [{"triple": [str(g) for g in t], "residual": r.to_json()}
                         for t, r in self.failures],
        }


def window_generators(prm: AlgebraParams, w: Window, algebra: str = "color") -> list:
    if algebra == "super":
        return w.generators(prm.with_(extended=False), kinds=("L", "P", "X", "C"))
    return w.generators(prm)


def _escapes(out: dict, w: Window) -> bool:
    return any(not w.contains(g) for g in out)


def _active_pairs(gens: list, table: _Table, w: Window) -> tuple:
    """Pairs whose bracket has a non-central term (or leaves the window)."""
    active = set()
    escaping = set()
    n = len(gens)
    for i in range(n):
        gi = gens[i]
        for j in range(i, n):
            out = table.bracket(gi, gens[j])
            if not out:
                continue
            if _escapes(out, w):
                escaping.add((i, j))
                active.add((i, j))
            elif any(not g.is_central for g in out):
                active.add((i, j))
    return active, escaping


def _run(prm, w, algebra, pairs, active, escaping, gens):
    table = _Table(prm, algebra)
    n = len(gens)
    escaped = 0
    failures = []
    for i, j in pairs:
        for k in range(n):
            t = tuple(sorted((i, j, k)))
            first = next(pq for pq in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))
                         if pq in active)
            if first != (i, j):
                continue
            if ((t[0], t[1]) in escaping or (t[0], t[2]) in escaping
                    or (t[1], t[2]) in escaping):
                escaped += 1
                continue
            a, b, c = gens[t[0]], gens[t[1]], gens[t[2]]
            res = table.residual(a, b, c)
            if res:
                failures.append((t, res))
    return escaped, failures


def _run_star(args):
    return _run(*args)


def verify_window(prm: AlgebraParams, w: Window, algebra: str = "color",
                  workers: int = 1) -> JacobiReport:
    """Check graded Jacobi on every unordered triple (with repetition) in ``w``.

    Triples in which some inner bracket leaves the window are counted as
    escaped and not asserted.  Triples whose pairwise brackets are all zero
    or central have identically vanishing residual and are counted as
    checked without expansion.
    """
    gens = window_generators(prm, w, algebra)
    table = _Table(prm, algebra)
    active, escaping = _active_pairs(gens, table, w)
    pairs = sorted(active)
    n = len(gens)
    total = comb(n + 2, 3)
    if workers > 1 and len(pairs) > 1:
        chunks = [pairs[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_star, [(prm, w, algebra, ch, active, escaping, gens)
                                              for ch in chunks]))
    else:
        parts = [_run(prm, w, algebra, pairs, active, escaping, gens)]
    escaped = sum(p[0] for p in parts)
    raw = sorted((f for p in parts for f in p[1]), key=lambda f: f[0])
    failures = [(tuple(gens[k] for k in t), Element(res)) for t, res in raw]
    return JacobiReport(prm, w, algebra, total, total - escaped, escaped, failures)


def check_antisymmetry(prm: AlgebraParams, w: Window) -> list:
    """Pairs violating ``[a,b] + (-1)^{a.b}[b,a] = 0`` (expected empty)."""
    gens = w.generators(prm)
    bad = []
    for a in gens:
        for b in gens:
            if sort_key(b) < sort_key(a):
                continue
            lhs = raw_bracket(a, b, prm)
            rhs = raw_bracket(b, a, prm)
            s = -1 if dot(gdeg(a), gdeg(b)) else 1
            keys = set(lhs) | set(rhs)
            if any(lhs.get(g, 0) + s * rhs.get(g, 0) != 0 for g in keys):
                bad.append((a, b))
    return bad
