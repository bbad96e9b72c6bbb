"""Refractive index from multiple-scattering path sums.

A transparent medium acts on a traversing photon through elastic forward
scattering off its atoms.  Summing the path amplitudes order by order in
the number of scatterings gives, for an unconstrained block, the phase
factor of ordinary refraction.  When the detection time fixes a finite
path-length budget delta_s (the distance light could travel between
excitation and detection, minus the direct source-detector separation),
each scattering order acquires a budget-dependent kernel; the resulting
complex factor multiplying the vacuum amplitude is computed here by two
independent routes and can suppress refraction entirely ("refraction
annulment") when the budget phase kappa*delta_s is small compared to the
scattering strength beta_l.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

from pathamp.core_num import (
    CONSTANTS,
    ApproximationWarning,
    DiscrepancyFlag,
    DomainError,
    PreconditionError,
    truncated_cos,
    truncated_sin,
)

# Above this scattering strength the float64 series is meaningless
# (terms reach exp(beta_l) before cancelling); direct summation is refused.
BETA_L_SUMMATION_LIMIT = 50.0

# Commonly quoted prompt-transmission fraction for the benchmark annulment
# geometry; disagrees with delta_s_max/(c tau_s) by about a factor 10.
_REFERENCE_PROMPT_FRACTION = 4e-4


class SeriesDisagreement(RuntimeError):
    """The two independent series evaluations failed to agree."""


class ConvergenceError(RuntimeError):
    """Series summation failed to converge; carries the last partial sums."""

    def __init__(self, message: str, partials=()):
        super().__init__(message)
        self.partials = tuple(partials)


@dataclass(frozen=True)
class RectangularBoundary:
    """Rectangular transverse boundary of sides (l_y, l_z); the beam axis
    pierces the plane at (y, z) relative to the centre."""

    l_y: float
    l_z: float
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        if self.l_y <= 0 or self.l_z <= 0:
            raise DomainError("sides must be positive")
        if abs(self.y) >= self.l_y / 2 or abs(self.z) >= self.l_z / 2:
            raise DomainError("axis must pierce the interior of the rectangle")


@dataclass(frozen=True)
class CircularBoundary:
    """Circular transverse boundary of radius ``radius``; the beam axis is
    displaced ``y`` from its centre."""

    radius: float
    y: float = 0.0

    def __post_init__(self):
        if self.radius <= 0:
            raise DomainError("radius must be positive")
        if abs(self.y) >= self.radius:
            raise DomainError("axis must pierce the interior of the circle")


class InfiniteBoundary:
    """Transversely unbounded medium."""


@dataclass(frozen=True)
class MediumSpec:
    """A uniform transparent medium.

    density: scatterer number density (1/m^3); scattering_length: real
    elastic photon-atom forward scattering amplitude (m); thickness (m);
    boundary: transverse boundary geometry.
    """

    density: float
    scattering_length: float
    thickness: float
    boundary: object = field(default_factory=InfiniteBoundary)

    def __post_init__(self):
        if self.density <= 0 or self.thickness <= 0:
            raise DomainError("density and thickness must be positive")

    def index(self, wavelength: float) -> float:
        """Refractive index at the given vacuum wavelength."""
        return refractive_index(self.density, self.scattering_length, wavelength)

    def beta_coefficient(self, kappa: float) -> float:
        """Scattering strength per unit length, 2 pi N a / kappa (1/m)."""
        return 2.0 * math.pi * self.density * self.scattering_length / kappa

    def beta_l(self, kappa: float) -> float:
        """Dimensionless scattering strength of the full thickness."""
        return self.beta_coefficient(kappa) * self.thickness


@dataclass(frozen=True)
class TimeBudget:
    """Spare path length delta_s = c(t_D - t0) - x_SD available for detours."""

    delta_s: float

    def __post_init__(self):
        if self.delta_s < 0:
            raise DomainError("delta_s must be >= 0 (causality)")

    def phase(self, kappa: float) -> float:
        return kappa * self.delta_s


def thin_sheet_phase_shift(medium: MediumSpec, kappa: float) -> float:
    """Phase advance 2 pi N a delta / kappa from single forward scattering
    in a sheet much thinner than the wavelength.

    Valid only while the result is << 1 (the linearised single-scattering
    amplitude is exponentiated); a result >= 0.1 warns.
    """
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    dphi = 2.0 * math.pi * medium.density * medium.scattering_length \
        * medium.thickness / kappa
    if dphi >= 0.1:
        warnings.warn(
            f"thin-sheet phase shift {dphi:.3g} >= 0.1: single-scattering"
            " linearisation invalid at this thickness",
            ApproximationWarning, stacklevel=2)
    return dphi


def refractive_index(density: float, scattering_length: float,
                     wavelength: float) -> float:
    """n = 1 + lambda^2 N a / (2 pi)."""
    if density <= 0 or wavelength <= 0:
        raise DomainError("density and wavelength must be positive")
    return 1.0 + wavelength ** 2 * density * scattering_length / (2.0 * math.pi)


class EffectiveVelocity(NamedTuple):
    """Apparent signal velocity when a fraction f of the source-detector
    line is filled with medium, by the two bookkeeping routes."""

    linear: float        # (1-f) c + f c/n: single-scattering (thin sheet) form
    reciprocal: float    # c / (1 + (n-1) f): multiple-scattering (thick block) form
    relative_difference: float
    regime: str


def effective_velocity(filling_fraction: float, n: float) -> EffectiveVelocity:
    """Both closed forms of the effective velocity and which regime each
    derivation covers; they agree to first order in (n-1)*f."""
    f = filling_fraction
    if not 0.0 <= f <= 1.0:
        raise DomainError("filling fraction must lie in [0, 1]")
    if n < 1.0:
        raise DomainError("n must be >= 1")
    linear = (1.0 - f) * CONSTANTS.c + f * CONSTANTS.c / n
    reciprocal = CONSTANTS.c / (1.0 + (n - 1.0) * f)
    rel = abs(linear - reciprocal) / reciprocal
    regime = "thin-sheet" if (n - 1.0) * f < 1e-3 else "thick-block"
    return EffectiveVelocity(linear, reciprocal, rel, regime)


def nested_volume_integral(order: int, length: float) -> float:
    """Volume L^n/n! of the ordered region x_1 >= x_2 >= ... >= x_n in a
    block of thickness L; computed in log space above order 20."""
    if order < 1:
        raise DomainError("order must be >= 1")
    if length <= 0:
        raise DomainError("length must be positive")
    if order <= 20:
        return length ** order / math.factorial(order)
    return math.exp(order * math.log(length) - math.lgamma(order + 1))


class SeriesValue(NamedTuple):
    value: complex
    n_terms: int


def unconstrained_block_amplitude(beta_l: float,
                                  n_max: int | None = None) -> SeriesValue:
    """Multiple-forward-scattering sum sum_n (i beta_l)^n / n! for a block
    with no time constraint; converges to e^{i beta_l}, i.e. pure refraction
    phase (n-1) kappa L.

    Returns the value and the number of terms needed for the running term
    to drop below 1e-12 of the partial sum.
    """
    if beta_l < 0:
        raise DomainError("beta_l must be >= 0")
    if beta_l > BETA_L_SUMMATION_LIMIT:
        raise PreconditionError(
            f"beta_l = {beta_l:g} exceeds float64 summation limit"
            f" {BETA_L_SUMMATION_LIMIT:g}")
    cap = n_max if n_max is not None else 100000
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    n = 0
    while n < cap:
        n += 1
        term *= 1j * beta_l / n
        total += term
        if abs(term) < 1e-12 * abs(total):
            return SeriesValue(total, n)
    raise ConvergenceError(
        f"no convergence after {cap} terms", partials=(total - term, total))


def scattering_order_kernel(order: int, delta_phi: float) -> complex:
    """Budget kernel of the n-th scattering order:

        1 - e^{i dphi} * sum_{k=0}^{n-1} (-i dphi)^k / k!

    The '1' is the lower-limit (budget-saturating) contribution of the
    nested radial integrals; the subtracted partial exponential collects
    their upper limits.  At dphi = 0 the kernel vanishes for every order:
    with no spare path length, scattered paths cannot contribute and the
    medium has no effect.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    if delta_phi < 0:
        raise DomainError("delta_phi must be >= 0")
    esum = 0.0 + 0.0j
    epow = 1.0 + 0.0j
    for k in range(order):
        esum += epow
        epow *= -1j * delta_phi / (k + 1)
    return 1.0 - cmath.exp(1j * delta_phi) * esum


def _factor_kernel_route(delta_phi: float, beta_l: float, cap: int):
    """Sum over orders of (i beta_l)^n/n! times the order kernel, with the
    kernel's partial exponential carried incrementally.  Terms are collected
    and reduced with exact summation (math.fsum)."""
    eid = cmath.exp(1j * delta_phi)
    term = 1.0 + 0.0j
    esum = 0.0 + 0.0j
    epow = 1.0 + 0.0j
    re = [1.0]
    im = [0.0]
    running = 1.0 + 0.0j
    last = None
    for n in range(1, cap + 1):
        term *= 1j * beta_l / n
        esum += epow
        epow *= -1j * delta_phi / n
        t = term * (1.0 - eid * esum)
        re.append(t.real)
        im.append(t.imag)
        running += t
        if n > max(beta_l + delta_phi, 4) and abs(t) < 1e-14 * max(abs(running), 1e-300):
            return complex(math.fsum(re), math.fsum(im)), n
        last = (running - t, running)
    raise ConvergenceError(
        f"kernel-route series not converged after {cap} orders",
        partials=last or ())


def _factor_trig_route(delta_phi: float, beta_l: float, n_terms: int) -> complex:
    """Re/Im series built from sin/cos of the budget phase and their
    truncated partial sums; algebraically identical to the kernel route but
    evaluated through entirely real trigonometric quantities."""
    s = math.sin(delta_phi)
    c = math.cos(delta_phi)
    re = [1.0]
    im = [0.0]
    fact = 1.0
    for m in range(1, n_terms + 1):
        fact *= beta_l / m
        if m % 2 == 0:
            n = m // 2
            sgn = -1.0 if n % 2 else 1.0
            cn1 = truncated_cos(n - 1, delta_phi)
            sn = truncated_sin(n, delta_phi)
            re.append(sgn * fact * (1.0 - c * cn1 - s * sn))
            im.append(sgn * fact * (c * sn - s * cn1))
        else:
            n = (m - 1) // 2
            sgn = -1.0 if n % 2 else 1.0
            cn = truncated_cos(n, delta_phi)
            sn = truncated_sin(n, delta_phi)
            re.append(sgn * fact * (s * cn - c * sn))
            im.append(sgn * fact * (1.0 - c * cn - s * sn))
    return complex(math.fsum(re), math.fsum(im))


class MediumFactor(NamedTuple):
    value: complex
    n_terms: int
    kernel_route: complex
    trig_route: complex


def time_budget_factor(delta_phi: float, beta_l: float,
                       n_max: int | None = None,
                       route_tolerance: float = 1e-10) -> MediumFactor:
    """Complex factor multiplying the vacuum amplitude for a block traversal
    with path-length-budget phase delta_phi = kappa*delta_s and scattering
    strength beta_l = (n-1)*kappa*L.

    Evaluated two independent ways (complex order kernels, and real
    trigonometric series with truncated partial sums); the routes must agree
    to ``route_tolerance`` relative or SeriesDisagreement is raised.  At
    delta_phi = 0 the factor is exactly 1 for any beta_l: refraction is
    annulled outright when the detection time forbids any detour.
    """
    if delta_phi < 0:
        raise DomainError("delta_phi must be >= 0")
    if beta_l < 0:
        raise DomainError("beta_l must be >= 0")
    if beta_l > BETA_L_SUMMATION_LIMIT:
        raise PreconditionError(
            f"beta_l = {beta_l:g} exceeds float64 summation limit"
            f" {BETA_L_SUMMATION_LIMIT:g}; regime: {regime_classification(delta_phi, beta_l)}")
    cap = n_max if n_max is not None else 100000
    kernel_val, n_used = _factor_kernel_route(delta_phi, beta_l, cap)
    trig_val = _factor_trig_route(delta_phi, beta_l, n_used)
    scale = max(abs(kernel_val), abs(trig_val))
    if scale > 0 and abs(kernel_val - trig_val) / scale > route_tolerance:
        raise SeriesDisagreement(
            f"independent routes disagree: {kernel_val!r} vs {trig_val!r}")
    return MediumFactor(kernel_val, n_used, kernel_val, trig_val)


def regime_classification(delta_phi: float, beta_l: float) -> str:
    """Coarse physical regime of the (budget phase, scattering strength) pair."""
    if delta_phi == 0.0:
        return "fully-annulled (factor exactly 1)"
    if beta_l >= 100.0 * delta_phi and delta_phi >= 10.0:
        return "annulment-dominated (budget phase << scattering strength)"
    if delta_phi >= 100.0 * beta_l:
        return "boundary-dominated (normal refraction, factor exp(i beta_l))"
    return "intermediate"


def boundary_averaged_factor(beta_l: float) -> complex:
    """Block factor when the budget is irrelevant and transverse boundaries
    regularise the path sum: the upper-limit contributions of the radial
    integrals average to zero over azimuth (their phase varies by many turns
    around any realistic boundary), leaving exactly e^{i beta_l} -- the
    ordinary refraction phase (n-1) kappa L."""
    if beta_l < 0:
        raise DomainError("beta_l must be >= 0")
    return cmath.exp(1j * beta_l)


@dataclass(frozen=True)
class AnnulmentReport:
    """Quantitative annulment estimate for an oblique-cut cylinder geometry."""

    delta_s_max: float        # m, largest budget still free of the boundary
    delta_phi_max: float      # rad
    beta_l: float             # dimensionless scattering strength
    prompt_time: float        # s, decay window for unrefracted transit
    prompt_fraction: float    # fraction of decays inside that window
    flags: tuple

    def as_dict(self) -> dict:
        return {
            "delta_s_max_m": self.delta_s_max,
            "delta_phi_max_rad": self.delta_phi_max,
            "beta_l": self.beta_l,
            "prompt_time_s": self.prompt_time,
            "prompt_fraction": self.prompt_fraction,
            "flags": [f.as_dict() for f in self.flags],
        }


def annulment_report(radius: float, axis_distance: float, wavelength: float,
                     block_length: float, n: float, tau_s: float) -> AnnulmentReport:
    """Annulment figures for a cylindrical block of the given radius, viewed
    by a detector at ``axis_distance`` beyond it.

    delta_s_max = R^2/(2 l) is the largest spare path length for which all
    detour paths stay clear of the transverse boundary; photons from decays
    within delta_s_max/c of production cross unrefracted.
    """
    if radius >= axis_distance:
        raise PreconditionError("requires radius << axis distance")
    if min(radius, axis_distance, wavelength, block_length, tau_s) <= 0:
        raise DomainError("all lengths and times must be positive")
    if n < 1.0:
        raise DomainError("n must be >= 1")
    ds_max = radius ** 2 / (2.0 * axis_distance)
    dphi_max = 2.0 * math.pi * ds_max / wavelength
    beta_l = 2.0 * math.pi * (n - 1.0) * block_length / wavelength
    prompt_time = ds_max / CONSTANTS.c
    prompt_fraction = 1.0 - math.exp(-prompt_time / tau_s)
    flags = (DiscrepancyFlag(
        "prompt_fraction", prompt_fraction, _REFERENCE_PROMPT_FRACTION,
        "commonly quoted figure is ~10x the computed delta_s_max/(c tau_s)"),)
    return AnnulmentReport(ds_max, dphi_max, beta_l, prompt_time,
                           prompt_fraction, flags)


def boundary_radial_limit(boundary, x1: float, phi1: float) -> float:
    """Largest radial path length r1_max(phi1) before a detour at azimuth
    phi1 leaves the medium, for a detection plane x1 past the scattering
    plane.  Small-angle form x1 + R1(phi1)^2/(2 x1).

    For a rectangle the azimuth selects which side is hit (sectors bounded
    by the corner directions); for a circle displaced by y the limit loses
    its phi1 dependence only when y = 0.
    """
    if x1 <= 0:
        raise DomainError("x1 must be positive")
    phi = math.fmod(phi1, 2.0 * math.pi)
    if phi < 0:
        phi += 2.0 * math.pi

    if isinstance(boundary, CircularBoundary):
        rad = boundary.radius ** 2 - (boundary.y * math.cos(phi)) ** 2
        transverse = math.sqrt(rad) - boundary.y * math.sin(phi)
        if transverse <= 0:
            raise DomainError("boundary point behind the axis plane")
        return x1 + transverse ** 2 / (2.0 * x1)

    if isinstance(boundary, RectangularBoundary):
        hz_plus = boundary.l_z / 2 - boundary.z
        hz_minus = boundary.l_z / 2 + boundary.z
        hy_plus = boundary.l_y / 2 - boundary.y
        hy_minus = boundary.l_y / 2 + boundary.y
        # corner azimuths, anticlockwise from the +z direction
        c1 = math.atan2(hy_plus, hz_plus)
        c2 = math.atan2(hy_plus, -hz_minus)
        c3 = math.atan2(-hy_minus, -hz_minus) + 2.0 * math.pi
        c4 = math.atan2(-hy_minus, hz_plus) + 2.0 * math.pi
        if c1 <= phi < c2:
            transverse = hy_plus / math.sin(phi)
        elif c2 <= phi < c3:
            transverse = -hz_minus / math.cos(phi)
        elif c3 <= phi < c4:
            transverse = -hy_minus / math.sin(phi)
        else:
            transverse = hz_plus / math.cos(phi)
        if transverse <= 0:
            raise DomainError("boundary point behind the axis plane")
        return x1 + transverse ** 2 / (2.0 * x1)

    if isinstance(boundary, InfiniteBoundary):
        raise DomainError("an infinite boundary has no radial limit")
    raise DomainError(f"unsupported boundary {boundary!r}")
