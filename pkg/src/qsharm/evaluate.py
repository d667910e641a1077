"""Floating-point evaluation of Theta, Phi and the full harmonic.

Exactness is dropped only at this boundary: polynomial evaluation runs
an exact rational Horner pass on the (exactly representable) float
cos(theta), converts once, and applies a single power of sin(theta).
Phi is exp(i*m*phi) with phi reduced modulo its period, which is 4*pi
for half-odd-integer m (single-valued on the double circle) and 2*pi
for integer m.

theta lives on [0, pi] and is never reduced; outside values are domain
errors, not wrapped angles.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .norms import norm_theta
from .numerics import HalfInt, PiScaled
from .series import (
    LegendreFunction,
    QuantumPair,
    eigenvalue,
    legendre_function,
    poly_add,
    poly_derivative,
    poly_eval,
    poly_scale,
    poly_shift,
    poly_sub,
    poly_trim,
)

# Numeric residuals blow up inside this many steps of the interval ends,
# where half-odd-integer orders have unbounded theta-gradients.
ENDPOINT_EXCLUSION_STEPS = 10


class DomainError(ValueError):
    """Angle outside the domain of the requested evaluation."""


def phi_period(m: HalfInt) -> float:
    """Period of exp(i*m*phi): 4*pi when m is half-odd-integer, else 2*pi."""
    return 4 * math.pi if m.is_half_odd else 2 * math.pi


def eval_theta(f: LegendreFunction, theta: float) -> float:
    """Theta factor sin(theta)^|m| * poly(cos(theta)) at a point of [0, pi]."""
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta={theta} outside [0, pi]")
    x = Fraction(math.cos(theta))
    poly = float(poly_eval(list(f.coeffs), x))
    return math.sin(theta) ** (f.m_abs.twice / 2) * poly


def eval_phi(m: HalfInt, phi: float) -> complex:
    """Phi factor exp(i*m*phi); unit modulus for every real phi."""
    reduced = phi % phi_period(m) if m else 0.0
    return cmath.exp(1j * (m.twice / 2) * reduced)


@dataclass(frozen=True)
class QuasiHarmonic:
    """Y(theta, phi) = Theta(theta) * exp(i*m*phi) for one lattice point.

    ``norm`` carries the exact theta factor of the squared norm when the
    harmonic may be evaluated unit-normalized; the phi factor is folded
    in as a float at evaluation time.
    """

    pair: QuantumPair
    theta_part: LegendreFunction
    norm: Optional[PiScaled] = None


def harmonic(l: HalfInt, m: HalfInt) -> QuasiHarmonic:
    """Build the harmonic for (l, m), including its exact theta norm."""
    pair = QuantumPair(l=l, m=m)
    f = legendre_function(l, m)
    return QuasiHarmonic(pair=pair, theta_part=f, norm=norm_theta(f))


def eval_harmonic(
    h: QuasiHarmonic,
    theta: float,
    phi: float,
    unit_normalized: bool = False,
    phi_range: str = "2pi",
) -> complex:
    """Evaluate Theta(theta) * Phi(phi), optionally unit-normalized.

    Unit normalization divides by sqrt(phi_factor * norm_theta) where
    the phi factor is 2*pi, or 4*pi for half-odd-integer m under the
    doubled phi range.
    """
    value = eval_theta(h.theta_part, theta) * eval_phi(h.pair.m, phi)
    if not unit_normalized:
        return value
    if h.norm is None:
        raise ValueError("harmonic carries no norm; build it with harmonic()")
    if phi_range not in ("2pi", "4pi"):
        raise ValueError(f"phi_range must be '2pi' or '4pi', got {phi_range!r}")
    doubled = phi_range == "4pi" and h.pair.m.is_half_odd
    phi_factor = 4 * math.pi if doubled else 2 * math.pi
    return value / math.sqrt(phi_factor * float(h.norm))


def ode_residual_exact(f: LegendreFunction) -> list[Fraction]:
    """Symbolic residual of the polynomial-factor equation.

    Substitutes the polynomial u into

        (1-x^2) u'' - 2(|m|+1) x u' + [A - |m|(|m|+1)] u

    with A = eigenvalue(|m|, degree) and returns the residual polynomial
    (trimmed; correctly constructed functions give []).
    """
    u = list(f.coeffs)
    tm = f.m_abs.twice
    du = poly_derivative(u)
    d2u = poly_derivative(du)
    a_shift = eigenvalue(f.m_abs, f.degree) - Fraction(tm * (tm + 2), 4)
    residual = poly_sub(d2u, poly_shift(d2u, 2))                 # (1-x^2) u''
    residual = poly_sub(residual, poly_scale(poly_shift(du, 1), tm + 2))
    residual = poly_add(residual, poly_scale(u, a_shift))
    return poly_trim(residual)


def ode_residual_numeric(h: QuasiHarmonic, theta: float, step: float) -> float:
    """Central-difference residual of the theta equation at one angle.

    Checks Theta'' + cot(theta) Theta' + [A - m^2/sin^2(theta)] Theta,
    which is O(step^2) times the local derivative scale for a true
    eigenfunction.  Angles within ENDPOINT_EXCLUSION_STEPS * step of the
    interval ends are rejected: half-odd-integer gradients diverge there.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    margin = ENDPOINT_EXCLUSION_STEPS * step
    if not margin <= theta <= math.pi - margin:
        raise DomainError(
            f"theta={theta} within the endpoint exclusion zone (margin {margin})"
        )
    f = h.theta_part
    t_minus = eval_theta(f, theta - step)
    t_mid = eval_theta(f, theta)
    t_plus = eval_theta(f, theta + step)
    d1 = (t_plus - t_minus) / (2 * step)
    d2 = (t_plus - 2 * t_mid + t_minus) / (step * step)
    a_val = float(eigenvalue(f.m_abs, f.degree))
    m_sq = (h.pair.m.twice / 2) ** 2
    s = math.sin(theta)
    return d2 + (math.cos(theta) / s) * d1 + (a_val - m_sq / (s * s)) * t_mid


def quadrature_norm(f: LegendreFunction, nodes: int) -> float:
    """Composite-Simpson estimate of the squared theta norm.

    Integrates Theta(theta)^2 sin(theta) = sin(theta)^(2|m|+1) *
    poly(cos(theta))^2 over [0, pi] on ``nodes`` equal subintervals.
    The theta-form integrand is endpoint-smooth for every |m|, unlike
    the x-form whose weight has singular derivatives at +-1 for
    half-odd-integer orders.
    """
    if nodes < 16:
        raise ValueError("need at least 16 subintervals")
    if nodes % 2 != 0:
        raise ValueError("composite Simpson needs an even subinterval count")
    coeffs = [float(c) for c in f.coeffs]
    sin_power = f.m_abs.twice + 1

    def integrand(t: float) -> float:
        c = math.cos(t)
        acc = 0.0
        for a in reversed(coeffs):
            acc = acc * c + a
        return math.sin(t) ** sin_power * acc * acc

    h = math.pi / nodes
    total = integrand(0.0) + integrand(math.pi)
    total += 4 * sum(integrand(j * h) for j in range(1, nodes, 2))
    total += 2 * sum(integrand(j * h) for j in range(2, nodes, 2))
    return total * h / 3
