"""Windowed classification of central extensions of g(l1,l2).

A central extension in degree sector ``S`` is a scalar 2-cochain ``w`` on
pairs of generators with ``deg a + deg b = S``.  It must satisfy the graded
Jacobi identity of the extended bracket,

    (-1)^{a.c} w(a,[b,c]) + (-1)^{b.a} w(b,[c,a]) + (-1)^{c.b} w(c,[a,b]) = 0,

and is trivial when it equals ``f([a,b])`` for a linear functional ``f``
supported on generators of degree ``S`` (a redefinition ``g -> g + f(g) K``).

The baseline bracket is the Witt-based table (no Virasoro term), so the
(0,0) sector rediscovers the Virasoro cocycle.  Cochains are restricted to
total mode index 0: ``[L_0, .]`` multiplies a generator by minus its index,
so every cocycle of non-zero index is a coboundary.
"""
from __future__ import annotations

import dataclasses
from collections import defaultdict
from fractions import Fraction

from .brackets import raw_bracket
from .core import (DEGREES, AlgebraParams, Degree, Generator, Window, dot, gdeg, sort_key)
from .linalg import Echelon, dot as row_dot, integer_row


@dataclasses.dataclass
class CocycleSystem:
    params: AlgebraParams
    window: Window
    sector: Degree
    unknowns: list          # canonical pairs (a, b), sort_key(a) <= sort_key(b)
    constraints: list       # integer rows {column: int}
    coboundaries: dict      # generator -> integer row
    triples: int = 0        # triples that produced a constraint row
    aborted: int = 0        # triples dropped because an inner bracket left the window

    @property
    def ncols(self) -> int:
        return len(self.unknowns)

    def column(self) -> dict:
        return {pair: n for n, pair in enumerate(self.unknowns)}


@dataclasses.dataclass
class SectorResult:
    sector: Degree
    unknowns: int
    constraints: int
    cocycle_dim: int
    coboundary_rank: int
    quotient_dim: int
    representatives: list   # integer dicts over the unknowns
    theorem_match: bool | None = None
    theorem_symbols: tuple = ()

    def to_json(self, system: CocycleSystem | None = None) -> dict:
        out = {
            "degree": [self.sector.a1, self.sector.a2],
            "unknowns": self.unknowns,
            "constraintRows": self.constraints,
            "cocycleDim": self.cocycle_dim,
            "coboundaryRank": self.coboundary_rank,
            "quotientDim": self.quotient_dim,
            "theoremSymbols": list(self.theorem_symbols),
            "theoremMatch": self.theorem_match,
        }
        if system is not None:
            out["representatives"] = [
                [[str(system.unknowns[c][0]), str(system.unknowns[c][1]), str(v)]
                 for c, v in sorted(rep.items())]
                for rep in self.representatives]
        return out


def _canonical_pair(a: Generator, b: Generator) -> tuple:
    """``(pair, sign)`` with ``w(a,b) = sign * w(pair)``; sign 0 if forced zero."""
    if a == b:
        return ((a, b), 1) if dot(gdeg(a), gdeg(a)) else (None, 0)
    if sort_key(a) <= sort_key(b):
        return (a, b), 1
    return (b, a), (1 if dot(gdeg(a), gdeg(b)) else -1)


class _Builder:
    """Shared enumeration for all four sectors of one (params, window)."""

    def __init__(self, prm: AlgebraParams, w: Window):
        self.prm = prm.with_(extended=False)
        self.window = w
        self.gens = w.generators(self.prm, central=False)
        self._cache: dict = {}

    def bracket(self, a, b) -> dict:
        key = (a, b)
        out = self._cache.get(key)
        if out is None:
            out = raw_bracket(a, b, self.prm, virasoro=False)
            self._cache[key] = out
        return out

    def unknowns(self, sector: Degree) -> list:
        by_weight = defaultdict(list)
        for g in self.gens:
            by_weight[g.weight2].append(g)
        pairs = []
        for a in self.gens:
            for b in by_weight.get(-a.weight2, ()):
                if sort_key(b) < sort_key(a) or gdeg(a) + gdeg(b) != sector:
                    continue
                pair, sign = _canonical_pair(a, b)
                if sign:
                    pairs.append(pair)
        return sorted(set(pairs), key=lambda p: (sort_key(p[0]), sort_key(p[1])))

    def triples(self):
        """Weight-0 triples (sorted index tuples) with a non-zero inner bracket."""
        gens = self.gens
        n = len(gens)
        bucket = defaultdict(list)
        for k, g in enumerate(gens):
            bucket[g.weight2].append(k)
        seen = set()
        for i in range(n):
            for j in range(i, n):
                if not self.bracket(gens[i], gens[j]):
                    continue
                for k in bucket.get(-(gens[i].weight2 + gens[j].weight2), ()):
                    t = tuple(sorted((i, j, k)))
                    if t not in seen:
                        seen.add(t)
        return sorted(seen)

    def row(self, t: tuple, col: dict):
        """Constraint row of triple ``t``; ``None`` if it leaves the window."""
        a, b, c = (self.gens[k] for k in t)
        w = self.window
        row: dict = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            e = -1 if dot(gdeg(x), gdeg(z)) else 1
            for g, cg in self.bracket(y, z).items():
                if not w.contains(g):
                    return None
                pair, sign = _canonical_pair(x, g)
                if not sign:
                    continue
                k = col[pair]
                v = row.get(k, 0) + e * sign * cg
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)
        return row


def build_system(prm: AlgebraParams, w: Window, sector: Degree,
                 _builder: _Builder | None = None, _triples=None) -> CocycleSystem:
    """Assemble unknowns, Jacobi constraint rows and coboundaries for one sector."""
    sector = Degree(*sector)
    b = _builder or _Builder(prm, w)
    unknowns = b.unknowns(sector)
    col = {pair: n for n, pair in enumerate(unknowns)}
    rows = []
    aborted = used = 0
    for t in (_triples if _triples is not None else b.triples()):
        gs = [b.gens[k] for k in t]
        if gdeg(gs[0]) + gdeg(gs[1]) + gdeg(gs[2]) != sector:
            continue
        r = b.row(t, col)
        if r is None:
            aborted += 1
            continue
        used += 1
        if r:
            rows.append(integer_row(r))
    cob: dict = {}
    for n, (x, y) in enumerate(unknowns):
        for g, c in b.bracket(x, y).items():
            cob.setdefault(g, {})[n] = c
    cob = {g: integer_row(v) for g, v in sorted(cob.items(), key=lambda kv: sort_key(kv[0]))
           if gdeg(g) == sector and w.contains(g)}
    return CocycleSystem(b.prm, w, sector, unknowns, rows, cob, used, aborted)


def solve(sys: CocycleSystem) -> SectorResult:
    """Exact cocycle dimension, coboundary rank and quotient representatives.

    Representatives span the cocycles orthogonal to every coboundary, which
    is a complement of the coboundary space inside the cocycle space.
    """
    ech = Echelon()
    # sparsest rows first: singleton rows pin unknowns to zero before the
    # dense Virasoro-type rows arrive, which keeps fill-in negligible
    for r in sorted(sys.constraints, key=lambda r: (len(r), min(r))):
        ech.add(r)
    cocycle_dim = sys.ncols - ech.rank
    cob_rank = 0
    cob = Echelon()
    for v in sys.coboundaries.values():
        if cob.add(v):
            cob_rank += 1
    for v in sys.coboundaries.values():
        ech.add(v)
    reps = ech.nullspace(sys.ncols)
    quotient = cocycle_dim - cob_rank
    if len(reps) != quotient:
        raise ArithmeticError("complement dimension disagrees with cocycle/coboundary count")
    return SectorResult(sys.sector, sys.ncols, len(sys.constraints), cocycle_dim,
                        cob_rank, quotient, reps)


# --------------------------------------------------------------------------
# closed forms

def theorem_cocycles(sys: CocycleSystem, rho_mode: str = "corrected") -> dict:
    """The closed-form cocycles of the classification, one per central symbol.

    Each is read off the extended bracket table: ``w_K(a,b)`` is the
    coefficient of ``K`` in ``[a,b]`` (``K = c`` gives the Virasoro cocycle).
    """
    ext = sys.params.with_(extended=True, rho_mode=rho_mode)
    symbols = [g for g in ext.central_symbols() if gdeg(g) == sys.sector]
    out = {g: {} for g in symbols}
    for n, (a, b) in enumerate(sys.unknowns):
        for g, c in raw_bracket(a, b, ext).items():
            if g in out:
                out[g][n] = c
    return {g: integer_row(v) for g, v in out.items()}


def check_theorem(sys: CocycleSystem, res: SectorResult,
                  rho_mode: str = "corrected") -> tuple:
    """(a) closed forms are cocycles, (b) independent mod coboundaries, (c) spanning."""
    closed = theorem_cocycles(sys, rho_mode)
    vecs = [v for v in closed.values()]
    in_kernel = all(row_dot(r, v) == 0 for v in vecs for r in sys.constraints)
    ech = Echelon()
    for v in sys.coboundaries.values():
        ech.add(v)
    independent = all(v and ech.add(v) for v in vecs)
    spanning = ech.rank == res.cocycle_dim
    return in_kernel, independent, spanning, tuple(g.kind for g in closed)


@dataclasses.dataclass
class ExtensionReport:
    params: AlgebraParams
    window: Window
    sectors: list           # SectorResult, in DEGREES order
    systems: list

    @property
    def dims(self) -> tuple:
        return tuple(s.quotient_dim for s in self.sectors)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def theorem_match(self) -> bool:
        return all(s.theorem_match for s in self.sectors)

    def to_json(self, representatives: bool = True) -> dict:
        return {
            "params": self.params.to_json(),
            "window": self.window.to_json(),
            "totalQuotientDim": self.total,
            "theoremMatch": self.theorem_match,
            "sectors": [s.to_json(sys if representatives else None)
                        for s, sys in zip(self.sectors, self.systems)],
        }


def classify(prm: AlgebraParams, w: Window, rho_mode: str = "corrected") -> ExtensionReport:
    """Solve every sector and compare with the closed forms."""
    b = _Builder(prm, w)
    triples = b.triples()
    sectors, systems = [], []
    for d in DEGREES:
        sys = build_system(prm, w, d, _builder=b, _triples=triples)
        res = solve(sys)
        in_kernel, independent, spanning, symbols = check_theorem(sys, res, rho_mode)
        res.theorem_match = in_kernel and independent and spanning
        res.theorem_symbols = symbols
        sectors.append(res)
        systems.append(sys)
    return ExtensionReport(prm.with_(extended=False), w, sectors, systems)


def verify_theorem_basis(prm: AlgebraParams, w: Window, rho_mode: str = "corrected") -> bool:
    return classify(prm, w, rho_mode).theorem_match


@dataclasses.dataclass
class ScanResult:
    params: AlgebraParams
    windows: list
    dims: list              # per window: tuple of per-sector quotient dims
    reports: list

    @property
    def stable_from(self):
        """Smallest window from which the dims stay constant (None if never)."""
        if not self.dims:
            return None
        k = len(self.dims) - 1
        while k > 0 and self.dims[k - 1] == self.dims[-1]:
            k -= 1
        if k == len(self.dims) - 1 and len(self.dims) > 1:
            return None
        return self.windows[k]

    def to_json(self) -> dict:
        stable = self.stable_from
        return {
            "params": self.params.to_json(),
            "scan": [{"window": w.to_json(), "quotientDims": list(d), "total": sum(d),
                      "theoremMatch": r.theorem_match}
                     for w, d, r in zip(self.windows, self.dims, self.reports)],
            "stableFrom": None if stable is None else stable.to_json(),
        }


def stabilization_scan(prm: AlgebraParams, windows: list,
                       rho_mode: str = "corrected") -> ScanResult:
    for w0, w1 in zip(windows, windows[1:]):
        if not (w1.m_max >= w0.m_max and w1.r_max >= w0.r_max and w1.u_max >= w0.u_max
                and w1 != w0):
            raise ValueError("windows must be strictly increasing")
    reports = [classify(prm, w, rho_mode) for w in windows]
    return ScanResult(prm.with_(extended=False), list(windows), [r.dims for r in reports],
                      reports)


def cocycle_value(sys: CocycleSystem, vec: dict, a: Generator, b: Generator) -> Fraction:
    """Evaluate a cochain vector on an arbitrary ordered pair."""
    pair, sign = _canonical_pair(a, b)
    if not sign:
        return Fraction(0)
    n = sys.column().get(pair)
    if n is None:
        return Fraction(0)
    return sign * Fraction(vec.get(n, 0))
