from fractions import Fraction

import pytest

from colorvir.classify import (build_system, check_theorem, classify, solve,
                               stabilization_scan, theorem_cocycles, verify_theorem_basis)
from colorvir.core import DEGREES, Degree, L, Window, params, sort_key
from colorvir.linalg import Echelon, dot, nullspace

SPINS = ["0", "1/2", "1", "3/2"]
GRID = [(a, b) for a in SPINS for b in SPINS]


def test_unknowns_include_virasoro_pairs():
    sys = build_system(params(1, 0), Window.square(3), Degree(0, 0))
    for m in range(1, 4):
        assert (L(-m), L(m)) in sys.unknowns
    for a, b in sys.unknowns:
        assert sort_key(a) <= sort_key(b)
        assert a.weight2 + b.weight2 == 0


def test_empty_sectors():
    assert solve(build_system(params(0, 0), Window.square(4), Degree(1, 0))).quotient_dim == 0
    assert solve(build_system(params("1/2", 0), Window.square(4), Degree(0, 1))).quotient_dim == 0


@pytest.mark.parametrize("lp,dims", [
    (("0", "0"), (1, 4, 0, 4)),
    (("1/2", "0"), (1, 0, 0, 3)),
    (("0", "1/2"), (1, 3, 0, 0)),
    (("1", "0"), (1, 2, 0, 2)),
    (("0", "1"), (1, 2, 0, 2)),
    (("1", "1"), (1, 1, 0, 1)),
    (("3/2", "2"), (1, 0, 0, 0)),
])
def test_dimensions_window_four(lp, dims):
    rep = classify(params(*lp), Window.square(4))
    assert rep.dims == dims
    assert rep.theorem_match


@pytest.mark.parametrize("lp", [("0", "1"), ("1", "0"), ("1/2", "1/2")])
def test_theorem_basis(lp):
    assert verify_theorem_basis(params(*lp), Window.square(4))


@pytest.mark.parametrize("size", [1, 2, 3])
def test_closed_forms_are_cocycles_at_every_window(size):
    for lp in GRID:
        for sector in DEGREES:
            sys = build_system(params(*lp), Window.square(size), sector)
            for vec in theorem_cocycles(sys).values():
                assert all(dot(r, vec) == 0 for r in sys.constraints)


def test_verbatim_closed_form_is_not_a_cocycle():
    sys = build_system(params(0, 0), Window.square(3), Degree(1, 1))
    closed = theorem_cocycles(sys, rho_mode="theorem-verbatim")
    assert any(any(dot(r, v) for r in sys.constraints) for v in closed.values())
    res = solve(sys)
    assert not all(check_theorem(sys, res, "theorem-verbatim")[:3])


def test_representatives_normalized():
    rep = classify(params(0, 0), Window.square(3))
    for res in rep.sectors:
        for v in res.representatives:
            assert v[min(v)] > 0
            assert all(isinstance(c, int) for c in v.values())


@pytest.mark.parametrize("lp", [("0", "0"), ("1/2", "1"), ("3/2", "0")])
def test_quotient_dims_non_increasing(lp):
    scan = stabilization_scan(params(*lp), [Window.square(n) for n in (3, 4, 5)])
    for before, after in zip(scan.dims, scan.dims[1:]):
        assert all(b >= a for b, a in zip(before, after))
    assert scan.stable_from == Window.square(3) or scan.stable_from == Window.square(2)


def test_tiny_window_overcounts():
    small = classify(params(0, 0), Window.square(1))
    assert small.total > 9
    assert not small.theorem_match


def test_scan_rejects_unordered_windows():
    with pytest.raises(ValueError):
        stabilization_scan(params(0, 0), [Window.square(3), Window.square(2)])


TRIVIAL_SHAPES = {
    # pairs whose values are forced to zero by the Jacobi identity
    ("P2", "P2"), ("X2", "X2"), ("P2", "X2"), ("P2", "T"), ("X2", "T"), ("T", "T"),
    # pairs absorbed by redefining the composites
    ("P", "P"), ("X", "X"), ("P", "X"), ("L", "P2"), ("L", "X2"), ("L", "T"),
}


def test_composite_shape_cocycles_are_trivial():
    prm, w = params(0, 0), Window.square(5)
    for sector in DEGREES:
        sys = build_system(prm, w, sector)
        rows = list(sys.constraints)
        for n, (a, b) in enumerate(sys.unknowns):
            if (a.kind, b.kind) not in TRIVIAL_SHAPES:
                rows.append({n: 1})
        cob = Echelon()
        for v in sys.coboundaries.values():
            cob.add(v)
        for vec in nullspace(sorted(rows, key=lambda r: (len(r), min(r))), sys.ncols):
            assert cob.contains(vec)


@pytest.mark.parametrize("l1", ["2", "3"])
def test_lp_cocycles_linear_in_mode(l1):
    prm = params(l1, "1/2")
    sys = build_system(prm, Window.square(5), Degree(0, 1))
    cols = {a.i // 2: n for n, (a, b) in enumerate(sys.unknowns)
            if a.kind == "L" and b.kind == "P"}
    assert len(cols) == 11
    rows = sorted(sys.constraints, key=lambda r: (len(r), min(r)))
    for vec in nullspace(rows, sys.ncols):
        slope = Fraction(vec.get(cols[1], 0))
        for m, n in cols.items():
            assert vec.get(n, 0) == m * slope
