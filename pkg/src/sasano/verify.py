"""Verification engine: exact residual checks, Laurent/residue/Hamiltonian
integrality invariants, and an independent floating-point ODE cross-check.

The invariant report extracts, for a rational B4 solution in the affine
chart, the constant Laurent coefficients of x at infinity and at zero,
the t**-1 coefficients of y and w at infinity, the constant terms of the
Hamiltonian at infinity and zero, and the residues of x at its finite
rational poles.  For genuine rational solutions the two constant-term
differences are integers, the y/w residue coefficients cancel, and each
finite residue of x is an integer multiple of the pole location.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp

from .exactmath import (
    INFINITY,
    RationalFunction,
    ZERO_POINT,
    is_integer,
    laurent_expand,
    rat,
    rat_str,
    residue,
)
from .systems import (
    Chart,
    ChartMismatch,
    ParameterTuple,
    SolutionTuple,
    System,
    hamiltonian,
    residual,
)


class PoleOnPath(ValueError):
    """The integration interval touches a pole of the exact solution."""


def verify_solution(params: ParameterTuple, sol: SolutionTuple) -> bool:
    """True iff all four residuals vanish identically (exact check)."""
    return all(r.is_zero() for r in residual(params, sol))


def _constant_coefficient_at_infinity(f: RationalFunction) -> Fraction:
    return laurent_expand(f, INFINITY, order=1).coefficient(0)


def _constant_coefficient_at_zero(f: RationalFunction) -> Fraction:
    return laurent_expand(f, ZERO_POINT, order=0).coefficient(0)


def _inverse_t_coefficient_at_infinity(f: RationalFunction) -> Fraction:
    return laurent_expand(f, INFINITY, order=1).coefficient(-1)


@dataclass(frozen=True)
class InvariantReport:
    a_inf_0: Fraction
    a_0_0: Fraction
    integrality_a: bool
    b_inf_m1_plus_d_inf_m1: Fraction
    h_inf_0: Fraction
    h_0_0: Fraction
    integrality_h: bool
    finite_pole_residues: Tuple[Tuple[Fraction, Fraction, bool], ...]
    # x may also have irrational poles; their residue condition is not
    # checkable in exact rational arithmetic and is reported as such
    unchecked_irrational_poles: bool = False

    def all_invariants_hold(self) -> bool:
        return (
            self.integrality_a
            and self.b_inf_m1_plus_d_inf_m1 == 0
            and self.integrality_h
            and all(flag for _, _, flag in self.finite_pole_residues)
        )

    def to_json(self) -> dict:
        return {
            "a_inf_0": rat_str(self.a_inf_0),
            "a_0_0": rat_str(self.a_0_0),
            "integrality_a": self.integrality_a,
            "b_inf_m1_plus_d_inf_m1": rat_str(self.b_inf_m1_plus_d_inf_m1),
            "h_inf_0": rat_str(self.h_inf_0),
            "h_0_0": rat_str(self.h_0_0),
            "integrality_h": self.integrality_h,
            "finite_pole_residues": [
                {"c": rat_str(c), "res": rat_str(r), "multiple_of_c": flag}
                for c, r, flag in self.finite_pole_residues
            ],
            "unchecked_irrational_poles": self.unchecked_irrational_poles,
        }


def invariant_report(params: ParameterTuple, sol: SolutionTuple) -> InvariantReport:
    """Exact Laurent/residue/Hamiltonian invariants of a B4 affine solution."""
    if params.system is not System.B4:
        raise ValueError("invariant report is defined for the B4 system")
    if sol.chart is not Chart.AFFINE:
        raise ChartMismatch("invariant report needs the affine chart")

    a_inf_0 = _constant_coefficient_at_infinity(sol.x)
    a_0_0 = _constant_coefficient_at_zero(sol.x)
    bd = _inverse_t_coefficient_at_infinity(sol.y) + _inverse_t_coefficient_at_infinity(sol.w)

    h = hamiltonian(params, sol)
    h_inf_0 = _constant_coefficient_at_infinity(h)
    h_0_0 = _constant_coefficient_at_zero(h)

    pole_rows = []
    rational_pole_degree = 0
    poles = sol.x.poles()
    for c in sorted(poles):
        rational_pole_degree += poles[c]
        if c == 0:
            continue  # t = 0 is a fixed singular point, not a movable pole
        res = residue(sol.x, c)
        pole_rows.append((c, res, is_integer(res / c)))

    return InvariantReport(
        a_inf_0=a_inf_0,
        a_0_0=a_0_0,
        integrality_a=is_integer(a_inf_0 - a_0_0),
        b_inf_m1_plus_d_inf_m1=bd,
        h_inf_0=h_inf_0,
        h_0_0=h_0_0,
        integrality_h=is_integer(h_inf_0 - h_0_0),
        finite_pole_residues=tuple(pole_rows),
        unchecked_irrational_poles=rational_pole_degree < sol.x.den.degree,
    )


# -- numeric cross-check ------------------------------------------------------

def _rhs(system: System, alphas):
    a0, a1, a2, a3, a4 = (float(a) for a in alphas)

    if system is System.B4:
        beta = 1 - 2 * a2 - 2 * a3 - 2 * a4

        def f(t, v):
            x, y, z, w = v
            return np.array([
                2 * x * x * y - x * x + beta * x + 2 * a3 * z + 2 * z * z * w + t,
                -2 * x * y * y + 2 * x * y - beta * y + a1,
                2 * z * z * w - z * z + (1 - 2 * a4) * z + 2 * y * z * z + t,
                -2 * z * w * w + 2 * z * w - (1 - 2 * a4) * w - 2 * a3 * y - 4 * y * z * w + a3,
            ]) / t

    elif system is System.D4:

        def f(t, v):
            x, y, z, w = v
            return np.array([
                2 * x * x * y - x * x + (a0 + a1) * x - 2 * w + t,
                -2 * x * y * y + 2 * x * y - (a0 + a1) * y + a1,
                2 * z * z * w - t * z * z - (1 - a3 - a4) * z + 1 - 2 * y,
                -2 * z * w * w + 2 * t * z * w + (1 - a3 - a4) * w + a3 * t,
            ]) / t

    else:

        def f(t, v):
            x, y, z, w = v
            zz = z * (z * w + a3)
            xx = x * (x * y + a1)
            return np.array([
                2 * x * x * y - t * x * x - 2 * a0 * x + 1 - 2 * x * x * zz,
                -2 * x * y * y + 2 * t * x * y + 2 * a0 * y + a1 * t + 2 * zz * (2 * x * y + a1),
                2 * z * z * w - z * z + (1 - 2 * a4) * z + t - 2 * xx * z * z,
                -2 * z * w * w + 2 * z * w - (1 - 2 * a4) * w + a3 + 2 * xx * (2 * z * w + a3),
            ]) / t

    return f


def _rational_poles_in(sol: SolutionTuple, t0: Fraction, t1: Fraction) -> list:
    hits = []
    for comp in sol.components():
        for c in comp.poles():
            if t0 <= c <= t1:
                hits.append(c)
    return hits


def _real_denominator_roots(sol: SolutionTuple) -> list:
    """Approximate real roots of all component denominators (for interval
    selection only; exactness is not needed to steer clear of blow-ups,
    and irrational poles break the integrator just as rational ones do)."""
    hits = []
    for comp in sol.components():
        den = comp.den
        if den.degree < 1:
            continue
        scale = max(abs(c) for c in den.coeffs)
        coeffs = [float(c / scale) for c in reversed(den.coeffs)]
        for r in np.roots(coeffs):
            if abs(r.imag) < 1e-6:
                hits.append(float(r.real))
    return hits


def pole_free_interval(sol: SolutionTuple, width: int = 1) -> Tuple[Fraction, Fraction]:
    """[1, 1+width] shifted right by integers until clear of every real
    pole of the solution (with a small safety margin)."""
    real_poles = _real_denominator_roots(sol)
    t0 = Fraction(1)
    for _ in range(1000):
        t1 = t0 + width
        if not _rational_poles_in(sol, t0, t1) and not any(
            float(t0) - 1e-3 <= r <= float(t1) + 1e-3 for r in real_poles
        ):
            return t0, t1
        t0 += 1
    raise PoleOnPath("no pole-free interval of the requested width found")


def numeric_crosscheck(
    params: ParameterTuple,
    sol: SolutionTuple,
    t0,
    t1,
    steps: int = 64,
    initial_offset=None,
) -> float:
    """Max deviation between the exact solution and an adaptive RK45 run.

    Integrates t*X' = RHS from the exact initial condition sol(t0) (plus
    an optional perturbation, used for power checks) and samples the
    deviation at `steps` points of [t0, t1].
    """
    if sol.chart is not Chart.AFFINE:
        raise ChartMismatch("numeric cross-check needs the affine chart")
    t0, t1 = rat(t0), rat(t1)
    if t0 <= 0 or t1 <= t0:
        raise ValueError("need 0 < t0 < t1 to stay clear of the fixed singularity")
    hits = _rational_poles_in(sol, t0, t1)
    if hits:
        raise PoleOnPath(f"solution has poles at {[rat_str(c) for c in hits]} in the interval")

    start = np.array([float(c.evaluate(t0)) for c in sol.components()])
    if initial_offset is not None:
        start = start + np.asarray(initial_offset, dtype=float)

    samples = np.linspace(float(t0), float(t1), steps)
    run = solve_ivp(
        _rhs(params.system, params.alphas),
        (float(t0), float(t1)),
        start,
        method="RK45",
        rtol=1e-12,
        atol=1e-12,
        dense_output=True,
    )
    if not run.success:
        raise RuntimeError(f"integrator failed: {run.message}")

    deviation = 0.0
    clamp = 1e6  # documents the check's domain; fixture components are small
    for t in samples:
        exact = np.clip([c.evaluate_float(t) for c in sol.components()], -clamp, clamp)
        numeric = np.clip(run.sol(t), -clamp, clamp)
        deviation = max(deviation, float(np.max(np.abs(numeric - exact))))
    return deviation
