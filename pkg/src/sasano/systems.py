"""The three coupled Painlevé-III type systems (B4, D4, D5), their
alternative coordinate charts, parameter normalizations, residual
evaluation and the B4 Hamiltonian.

Every system is written in the form t * X' = RHS(X, t); the residual of
a candidate solution is the tuple of the four exact rational functions
t*X' - RHS, which vanish identically precisely on solutions.

Charts: the affine chart carries (x, y, z, w) directly.  Solutions with
a component identically infinite live in an alternative chart:

  * B4  m3:  x3 = x, y3 = y, z3 = 1/z, w3 = -(z*w + a3)*z       (z == inf)
  * D5  r1:  x1 = 1/x, y1 = -(x*y + a1)*x, z1 = z, w1 = w       (x == inf)
  * D5  r3:  x3 = x, y3 = y, z3 = 1/z, w3 = -z*(z*w + a3)       (z == inf)
  * D5  r5 = r1 r3                                          (x == z == inf)

D4 needs no extra chart.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exactmath import (
    RF,
    RationalFunction,
    rat,
    rat_str,
    rf_from_json,
    rf_to_json,
)


class System(enum.Enum):
    B4 = "b4"
    D4 = "d4"
    D5 = "d5"


class Chart(enum.Enum):
    AFFINE = "affine"
    M3 = "m3"
    R1 = "r1"
    R3 = "r3"
    R5 = "r5"


VALID_CHARTS = {
    System.B4: (Chart.AFFINE, Chart.M3),
    System.D4: (Chart.AFFINE,),
    System.D5: (Chart.AFFINE, Chart.R1, Chart.R3, Chart.R5),
}


def parse_system(name: str) -> System:
    try:
        return System(name.strip().lower())
    except ValueError:
        raise ValueError(f"unknown system {name!r}; expected b4, d4 or d5") from None


class ChartMismatch(ValueError):
    """Raised when a solution chart is invalid for the requested system."""


@dataclass(frozen=True)
class ParameterTuple:
    """The five parameters a0..a4 of one system, with its affine constraint."""

    system: System
    alphas: Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        alphas = tuple(rat(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if len(alphas) != 5:
            raise ValueError("expected five parameters")
        if constraint_sum(self.system, alphas) != constraint_level(self.system):
            raise ValueError(
                f"parameters violate the {self.system.value} normalization: "
                f"{[rat_str(a) for a in alphas]}"
            )

    def __iter__(self):
        return iter(self.alphas)

    def __getitem__(self, i):
        return self.alphas[i]

    def replace_alphas(self, alphas) -> "ParameterTuple":
        return ParameterTuple(self.system, tuple(rat(a) for a in alphas))

    def to_json(self) -> dict:
        return {
            "system": self.system.name,
            "alphas": [rat_str(a) for a in self.alphas],
        }

    @staticmethod
    def from_json(data) -> "ParameterTuple":
        return ParameterTuple(
            parse_system(data["system"]), tuple(rat(a) for a in data["alphas"])
        )


def constraint_sum(system: System, a) -> Fraction:
    a0, a1, a2, a3, a4 = a
    if system is System.B4:
        return a0 + a1 + 2 * a2 + 2 * a3 + 2 * a4
    if system is System.D4:
        return a0 + a1 + 2 * a2 + a3 + a4
    return a0 + a1 + a2 + a3 + a4


def constraint_level(system: System) -> Fraction:
    return Fraction(1, 2) if system is System.D5 else Fraction(1)


def solve_last_alpha(system: System, first_four) -> Fraction:
    """The a4 forced by the normalization, given a0..a3."""
    a0, a1, a2, a3 = (rat(a) for a in first_four)
    if system is System.B4:
        return (1 - a0 - a1 - 2 * a2 - 2 * a3) / 2
    if system is System.D4:
        return 1 - a0 - a1 - 2 * a2 - a3
    return Fraction(1, 2) - a0 - a1 - a2 - a3


@dataclass(frozen=True)
class SolutionTuple:
    """Four rational functions of t plus the chart they live in."""

    chart: Chart
    x: RationalFunction
    y: RationalFunction
    z: RationalFunction
    w: RationalFunction

    def components(self):
        return (self.x, self.y, self.z, self.w)

    def replace(self, **kw) -> "SolutionTuple":
        fields = {"chart": self.chart, "x": self.x, "y": self.y, "z": self.z, "w": self.w}
        fields.update(kw)
        return SolutionTuple(**fields)

    def substitute_negate(self) -> "SolutionTuple":
        return SolutionTuple(
            self.chart,
            self.x.substitute_negate(),
            self.y.substitute_negate(),
            self.z.substitute_negate(),
            self.w.substitute_negate(),
        )

    def to_json(self) -> dict:
        return {
            "chart": self.chart.value,
            "x": rf_to_json(self.x),
            "y": rf_to_json(self.y),
            "z": rf_to_json(self.z),
            "w": rf_to_json(self.w),
        }

    @staticmethod
    def from_json(data) -> "SolutionTuple":
        return SolutionTuple(
            Chart(data.get("chart", "affine")),
            rf_from_json(data["x"]),
            rf_from_json(data["y"]),
            rf_from_json(data["z"]),
            rf_from_json(data["w"]),
        )


T = RF.t()


def _check_chart(system: System, chart: Chart):
    if chart not in VALID_CHARTS[system]:
        raise ChartMismatch(f"chart {chart.value} is not a {system.value} chart")


def residual(params: ParameterTuple, sol: SolutionTuple):
    """The four exact residuals t*X' - RHS of the system/chart pair.

    All four are identically zero iff sol solves the selected system in
    the selected chart.
    """
    system = params.system
    _check_chart(system, sol.chart)
    a0, a1, a2, a3, a4 = params.alphas
    x, y, z, w = sol.components()
    dx, dy, dz, dw = (c.derivative() for c in sol.components())

    if system is System.B4 and sol.chart is Chart.AFFINE:
        beta = 1 - 2 * a2 - 2 * a3 - 2 * a4
        return (
            T * dx - (2 * x * x * y - x * x + beta * x + 2 * a3 * z + 2 * z * z * w + T),
            T * dy - (-2 * x * y * y + 2 * x * y - beta * y + a1),
            T * dz - (2 * z * z * w - z * z + (1 - 2 * a4) * z + 2 * y * z * z + T),
            T * dw - (-2 * z * w * w + 2 * z * w - (1 - 2 * a4) * w - 2 * a3 * y - 4 * y * z * w + a3),
        )

    if system is System.B4 and sol.chart is Chart.M3:
        beta = 1 - 2 * a2 - 2 * a3 - 2 * a4
        gamma = 1 - 2 * a3 - 2 * a4
        return (
            T * dx - (2 * x * x * y - x * x + beta * x - 2 * w + T),
            T * dy - (-2 * x * y * y + 2 * x * y - beta * y + a1),
            T * dz - (2 * z * z * w + 1 - gamma * z - 2 * y - T * z * z),
            T * dw - (-2 * z * w * w + 2 * T * z * w + a3 * T + gamma * w),
        )

    if system is System.D4:
        return (
            T * dx - (2 * x * x * y - x * x + (a0 + a1) * x - 2 * w + T),
            T * dy - (-2 * x * y * y + 2 * x * y - (a0 + a1) * y + a1),
            T * dz - (2 * z * z * w - T * z * z - (1 - a3 - a4) * z + 1 - 2 * y),
            T * dw - (-2 * z * w * w + 2 * T * z * w + (1 - a3 - a4) * w + a3 * T),
        )

    if system is System.D5 and sol.chart is Chart.AFFINE:
        return (
            T * dx - (2 * x * x * y - T * x * x - 2 * a0 * x + 1 - 2 * x * x * z * (z * w + a3)),
            T * dy - (-2 * x * y * y + 2 * T * x * y + 2 * a0 * y + a1 * T
                      + 2 * z * (z * w + a3) * (2 * x * y + a1)),
            T * dz - (2 * z * z * w - z * z + (1 - 2 * a4) * z + T - 2 * x * z * z * (x * y + a1)),
            T * dw - (-2 * z * w * w + 2 * z * w - (1 - 2 * a4) * w + a3
                      + 2 * x * (x * y + a1) * (2 * z * w + a3)),
        )

    if system is System.D5 and sol.chart is Chart.R1:
        return (
            T * dx - (2 * x * x * y + 2 * a1 * x + T + 2 * a0 * x - x * x + 2 * z * (z * w + a3)),
            T * dy - (-2 * x * y * y - 2 * a0 * y + 2 * x * y - 2 * a1 * y + a1),
            T * dz - (2 * z * z * w - z * z + (1 - 2 * a4) * z + T + 2 * y * z * z),
            T * dw - (-2 * z * w * w + 2 * z * w - (1 - 2 * a4) * w + a3 - 2 * y * (2 * z * w + a3)),
        )

    if system is System.D5 and sol.chart is Chart.R3:
        return (
            T * dx - (2 * x * x * y - T * x * x - 2 * a0 * x + 1 + 2 * x * x * w),
            T * dy - (-2 * x * y * y + 2 * T * x * y + 2 * a0 * y + a1 * T - 2 * w * (2 * x * y + a1)),
            T * dz - (2 * z * z * w + 2 * a3 * z + 1 - (1 - 2 * a4) * z - T * z * z + 2 * x * (x * y + a1)),
            T * dw - (-2 * z * w * w - 2 * T * z * w + (1 - 2 * a3 - 2 * a4) * w + a3 * T),
        )

    if system is System.D5 and sol.chart is Chart.R5:
        gamma = 1 - 2 * a3 - 2 * a4
        return (
            T * dx - (2 * x * x * y - x * x + (2 * a0 + 2 * a1) * x + T - 2 * w),
            T * dy - (-2 * x * y * y - (2 * a0 + 2 * a1) * y + 2 * x * y + a1),
            T * dz - (2 * z * z * w - gamma * z + 1 - T * z * z - 2 * y),
            T * dw - (-2 * z * w * w + gamma * w + 2 * T * z * w + a3 * T),
        )

    raise ChartMismatch(f"unsupported system/chart pair {system.value}/{sol.chart.value}")


def is_solution(params: ParameterTuple, sol: SolutionTuple) -> bool:
    return all(r.is_zero() for r in residual(params, sol))


def hamiltonian(params: ParameterTuple, sol: SolutionTuple) -> RationalFunction:
    """The B4 Hamiltonian evaluated along an affine-chart solution."""
    if params.system is not System.B4:
        raise ValueError("the Hamiltonian is only defined for the B4 system")
    if sol.chart is not Chart.AFFINE:
        raise ChartMismatch("Hamiltonian evaluation needs the affine chart")
    a0, a1, a2, a3, a4 = params.alphas
    x, y, z, w = sol.components()
    beta = 1 - 2 * a2 - 2 * a3 - 2 * a4
    return (
        x * x * y * (y - 1)
        + x * (beta * y - a1)
        + T * y
        + z * z * w * (w - 1)
        + z * ((1 - 2 * a4) * w - a3)
        + T * w
        + 2 * y * z * (z * w + a3)
    )


def hamiltonian_constant_oracle(params: ParameterTuple, pole_order_one: bool) -> Fraction:
    """Closed form of the constant term of the B4 Hamiltonian at t = infinity.

    The two cases correspond to z having a pole of order one (True) or of
    order at least two (False) at infinity.
    """
    if params.system is not System.B4:
        raise ValueError("oracle defined for B4 parameters only")
    a0, a1, a2, a3, a4 = params.alphas
    base = Fraction(1, 4) * (a0 - a1) ** 2
    if pole_order_one:
        return base + (a3 + a4) ** 2 - (a3 + a4)
    return base + a3 * (a3 + 2 * a4 - 1)
