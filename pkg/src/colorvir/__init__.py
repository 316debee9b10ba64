"""Exact structure computations for Z2xZ2-graded color extensions of the
Virasoro algebra: brackets, Jacobi checks, central-extension classification,
enveloping-algebra realization and involutions.
"""
# flake8: noqa: F401
from .core import (AlgebraParams, Degree, DomainError, Element, Generator, GaussianRational,
                   ParamError, Window, C, Ceta, Ch, CkapA, CkapS, Cp, Cx, CzetA, CzetS, I,
                   L, P, P2, T, X, X2, degree_of, params)
from .brackets import bracket_elements, color_bracket, super_bracket, vir_bracket
from .jacobi import JacobiReport, jacobi_residual, verify_window
from .uea import NormalForm, normal_order, realize, verify_realization
from .classify import (ExtensionReport, build_system, classify, solve, stabilization_scan,
                       verify_theorem_basis)
from .involutions import adjoint, apply, superadjoint, verify_involution

__version__ = "0.1.0"
