"""Spherical-wave fields, diffraction amplitudes, and the half-period-zone
evaluation rule for radial oscillatory integrals.

A photon path amplitude picks up no phase in flight (the phase of a
light-like propagator vanishes); the spatial interference structure comes
entirely from the source-state propagator evaluated at the emission time
each path geometry forces.  The resulting field on the far side of a
diffracting screen is a spherical wave, and summing paths over a transverse
plane reproduces rectilinear propagation provided the forward diffraction
amplitude equals -i*kappa/(2 pi).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from pathamp.core_num import CONSTANTS, DomainError, PreconditionError
from pathamp.oracle import quad_oscillatory
from pathamp.propagators import EmitterSpec


@dataclass(frozen=True)
class DiffractionGeometry:
    """Source -> hole -> detector geometry.

    r: source-to-hole distance (m), r1: hole-to-detector distance (m),
    alpha/alpha1: angles of the two legs to the screen normal (rad),
    hole_area: area of the hole (m^2), used as the path-counting weight.
    """

    r: float
    r1: float
    alpha: float = 0.0
    alpha1: float = 0.0
    hole_area: float = 1e-12

    def __post_init__(self):
        if min(self.r, self.r1, self.hole_area) <= 0:
            raise DomainError("r, r1 and hole_area must be positive")
        for a in (self.alpha, self.alpha1):
            if not 0.0 <= a < math.pi / 2:
                raise DomainError("angles must lie in [0, pi/2)")


def spherical_wave(kappa: float, r1: float) -> complex:
    """Outgoing spherical wave e^{i kappa r1}/r1 (1/m)."""
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    if r1 <= 0:
        raise DomainError("r1 must be positive")
    return cmath.exp(1j * kappa * r1) / r1


def helmholtz_residual(kappa: float, r1: float, step: float) -> float:
    """Relative residual |lap U + kappa^2 U| / |kappa^2 U| of the spherical
    wave, with the radial Laplacian (1/r) d^2(r U)/dr^2 evaluated by a
    second-order central difference of step ``step``.
    """
    if step <= 0:
        raise DomainError("step must be positive")
    if step >= 0.1 / kappa:
        raise PreconditionError("step must be well below 1/kappa")
    if step >= r1:
        raise PreconditionError("step must be well below r1")
    u0 = spherical_wave(kappa, r1)
    num = ((r1 + step) * spherical_wave(kappa, r1 + step)
           - 2.0 * r1 * u0
           + (r1 - step) * spherical_wave(kappa, r1 - step))
    lap = num / (r1 * step * step)
    return abs(lap + kappa * kappa * u0) / abs(kappa * kappa * u0)


def diffraction_amplitude(kappa: float, alpha: float, alpha1: float) -> complex:
    """Forward diffraction amplitude -(i kappa/4 pi)(cos alpha + cos alpha1),
    in 1/m.  At normal incidence both cosines are 1 and the value reduces to
    -i/lambda.
    """
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    return -1j * kappa / (4.0 * math.pi) * (math.cos(alpha) + math.cos(alpha1))


def half_period_zone_integral(kappa: float, x1: float) -> complex:
    """Contribution of the first half-period zone of the radial integral
    int e^{i kappa r1} dr1 starting at x1:  (2i/kappa) e^{i kappa x1}.

    Modulus 2/kappa, phase kappa*x1 + pi/2.  The evaluation rule for the
    full (boundary-regularised) radial integral is one half of this value;
    see ``huygens_zone_value``.
    """
    if kappa <= 0 or x1 <= 0:
        raise DomainError("kappa and x1 must be positive")
    return 2j * cmath.exp(1j * kappa * x1) / kappa


def huygens_zone_value(kappa: float, x1: float) -> complex:
    """Half the first half-period zone: the value assigned to the full
    radial integral int_{x1}^{inf} e^{i kappa r1} dr1."""
    return 0.5 * half_period_zone_integral(kappa, x1)


def damped_radial_integral(kappa: float, x1: float, rho: float) -> complex:
    """Brute-force value of int_{x1}^{inf} e^{i kappa r1} e^{-rho (r1-x1)} dr1.

    The physical regularisation: relative to the direct path, a detour of
    extra length (r1 - x1) forces the source to decay earlier, damping the
    amplitude by e^{-rho (r1-x1)}.  For rho << kappa this agrees with
    ``huygens_zone_value`` to O(rho/kappa).
    """
    if rho <= 0:
        raise DomainError("rho must be positive (declared damping envelope)")

    def integrand(r):
        import numpy as np
        return np.exp(1j * kappa * r - rho * (r - x1))

    res = quad_oscillatory(integrand, x1, math.inf, kappa,
                           damping_scale=1.0 / rho)
    return res.value


def hole_path_amplitude(emitter: EmitterSpec, geom: DiffractionGeometry,
                        t_d: float, scale: float = 1.0) -> complex:
    """Path amplitude (1/m) for source -> hole -> detector at detection
    time t_d.

    The product of the free-flight factors, the diffraction amplitude
    weighted by the hole area, and the source propagator evaluated at the
    emission time the geometry forces:

        scale/(r r1) * A_diff * dS * exp[-(i kappa + rho)(c(t_d - t0) - r - r1)]

    Paths that would require emission before the source existed
    (c(t_d - t0) < r + r1) have exactly zero amplitude.
    """
    budget = CONSTANTS.c * (t_d - emitter.t_production) - geom.r - geom.r1
    if budget < 0:
        return 0.0 + 0.0j
    adiff = diffraction_amplitude(emitter.kappa, geom.alpha, geom.alpha1)
    geom_factor = scale * adiff * geom.hole_area / (geom.r * geom.r1)
    return geom_factor * cmath.exp(-(1j * emitter.kappa + emitter.rho) * budget)


def plane_sum_factor(kappa: float, x1: float, method: str = "analytic",
                     rho: float | None = None) -> complex:
    """Net factor from summing diffracted paths over a full transverse plane
    at distance x1 short of the detector.

    Writing the plane sum as 2 pi A_diff(0,0) times the radial integral, the
    analytic half-period-zone rule gives exactly e^{i kappa x1}: the plane of
    secondary sources reproduces direct rectilinear propagation over the
    remaining distance.  method="damped" evaluates the radial integral by
    brute force with the physical damping rho instead.
    """
    adiff = diffraction_amplitude(kappa, 0.0, 0.0)
    if method == "analytic":
        radial = huygens_zone_value(kappa, x1)
    elif method == "damped":
        if rho is None:
            raise PreconditionError("damped method requires rho")
        radial = damped_radial_integral(kappa, x1, rho)
    else:
        raise DomainError(f"unknown method {method!r}")
    return 2.0 * math.pi * adiff * radial


def direct_factor(kappa: float, x1: float) -> complex:
    """Phase factor e^{i kappa x1} of the direct path over the same distance."""
    return cmath.exp(1j * kappa * x1)
