import pytest
from hypothesis import given, settings, strategies as st

from colorvir.core import C, CkapA, Cp, Element, L, P, ParamError, Window, X, params
from colorvir.jacobi import jacobi_residual, verify_window

SPINS = ["0", "1/2", "1", "3/2"]
GRID = [(a, b) for a in SPINS for b in SPINS]


def test_residual_examples():
    assert jacobi_residual(L(1), L(2), L(-3), params(0, 0)) == 0
    prm = params(0, 0, extended=True)
    for r in range(-3, 4):
        for s in range(-3, 4):
            assert jacobi_residual(P(r), P(s), X(-r - s), prm) == 0


def test_verbatim_rho_residual():
    # brute-force expansion with the as-printed rho: kappa_S(1,-1) = 0, so
    # only the antisymmetric symbol survives
    prm = params(0, 0, extended=True, rho_mode="theorem-verbatim")
    assert jacobi_residual(P(1), P(-1), X(0), prm) == Element.of(CkapA, 4)


def test_residual_with_central_generator():
    prm = params(0, 0, extended=True)
    assert jacobi_residual(C, L(1), P(-1), prm) == 0
    assert jacobi_residual(Cp, P(2), X(1), prm) == 0


def test_residual_validates_inputs():
    with pytest.raises(ParamError):
        jacobi_residual(P("1/2"), L(0), L(0), params(0, 0))


def test_window_only_l0():
    rep = verify_window(params("1/2", "1/2"), Window(0, 0, 0))
    assert rep.ok
    assert rep.escaped == 0


@pytest.mark.parametrize("lp", GRID)
@pytest.mark.parametrize("extended", [False, True])
def test_small_window_closed(lp, extended):
    rep = verify_window(params(*lp, extended=extended), Window.square(3))
    assert rep.failures == []
    assert rep.triples_checked > 0


def test_half_spin_window_four():
    rep = verify_window(params("1/2", "1/2"), Window.square(4))
    assert rep.ok


@pytest.mark.parametrize("lp", GRID)
def test_superalgebra_closed(lp):
    rep = verify_window(params(*lp), Window.square(3), algebra="super")
    assert rep.ok


@pytest.mark.parametrize("lp", [("0", "0"), ("1/2", "0"), ("0", "1")])
def test_verbatim_fails_with_ppx(lp):
    prm = params(*lp, extended=True, rho_mode="theorem-verbatim")
    rep = verify_window(prm, Window.square(3))
    assert ("P", "P", "X") in rep.failure_shapes()


@pytest.mark.parametrize("lp", [lp for lp in GRID if lp not in
                                [("0", "0"), ("1/2", "0"), ("0", "1")]])
def test_verbatim_agrees_elsewhere(lp):
    prm = params(*lp, extended=True, rho_mode="theorem-verbatim")
    assert verify_window(prm, Window.square(3)).ok


def test_worker_count_does_not_change_report():
    prm = params(0, 0, extended=True, rho_mode="theorem-verbatim")
    w = Window.square(2)
    one = verify_window(prm, w, workers=1).to_json()
    two = verify_window(prm, w, workers=2).to_json()
    assert one == two


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GRID), st.data())
def test_random_triples_in_extension(lp, data):
    prm = params(*lp, extended=True)
    gens = Window.square(3).generators(prm)
    a, b, c = (data.draw(st.sampled_from(gens)) for _ in range(3))
    assert jacobi_residual(a, b, c, prm) == 0
