"""Two-amplitude interference: double-slit experiments, neutral-kaon
mixing and neutrino oscillations.

Every experiment here sums exactly two probability amplitudes,
|A|e^{i phi_A} + |B|e^{i phi_B}; what differs is where the phase difference
comes from.  For a photon double slit it is the source propagator (the
photon must be emitted at different times for different path lengths); for
an electron double slit it is the electron's own propagator under the
equal-production-time condition; for kaons it is the mass splitting of the
propagating eigenstates; for neutrinos both the decaying source and the
mass eigenstates contribute, which is why the predicted oscillation phase
differs from the standard kinematic one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from pathamp.core_num import CONSTANTS, DiscrepancyFlag, DomainError

# Stored reference figures (with provenance) that the library cannot derive
# from its own formulas; each is reported next to the computed value.
KAON_RADIATIVE_SMEARING = 4.2e-2          # <dp_rad>/p for the 194 MeV/c benchmark
NEUTRINO_RADIATIVE_SMEARING = 3.5e-4      # <dp_rad>/p for pion decay at rest
ELECTRON_SLIT_REFERENCE_DAMPING = (1.7e-9, 1.9e-6)  # quoted per-fringe coefficients
NEUTRINO_REFERENCE_DAMPING_EXP = 4.0e-16  # quoted lifetime damping at unit phase
PHOTON_SLIT_REFERENCE_DAMPING = 1.8e-11   # quoted per-fringe damping coefficient


class InterferenceBreakdown(NamedTuple):
    probability: float
    direct_a: float
    direct_b: float
    interference: float


def combine_two_amplitudes(a: complex, b: complex) -> InterferenceBreakdown:
    """|a + b|^2 decomposed into |a|^2 + |b|^2 + 2|a||b|cos(phi_b - phi_a)."""
    pa, pb = abs(a) ** 2, abs(b) ** 2
    inter = 2.0 * (a.conjugate() * b).real
    return InterferenceBreakdown(abs(a + b) ** 2, pa, pb, inter)


@dataclass(frozen=True)
class TwoAmplitudeExperiment:
    """A generic experiment whose probability amplitude is the sum of two
    histories, together with its space-time classification."""

    amplitude_a: complex
    amplitude_b: complex
    kind: str     # photon-ydse | electron-ydse | kaon | neutrino

    def probability(self) -> InterferenceBreakdown:
        return combine_two_amplitudes(self.amplitude_a, self.amplitude_b)

    def classification(self) -> "ClassificationRow":
        return classify_experiment(self.kind)


# --------------------------------------------------------------------------
# Young double slit


@dataclass(frozen=True)
class SlitGeometry:
    """Double-slit layout: source-to-slits distance ``l``, slits-to-screen
    distance ``r_prime``, half separation ``d`` between inner slit edges,
    slit height ``h`` and width ``w``; fringes run along the screen
    coordinate y."""

    l: float
    r_prime: float
    d: float
    h: float
    w: float

    def __post_init__(self):
        if min(self.l, self.r_prime, self.d, self.h, self.w) <= 0:
            raise DomainError("all slit-geometry lengths must be positive")

    @property
    def effective_separation(self) -> float:
        """d + h/2, the lever arm that sets the fringe spacing."""
        return self.d + self.h / 2.0

    def path_difference(self, y: float) -> float:
        """Small-angle path-length difference between the two slits."""
        return 2.0 * self.effective_separation * y / self.l


@dataclass(frozen=True)
class PhotonSlitResult:
    """Photon double-slit pattern with source-lifetime damping."""

    geometry: SlitGeometry
    kappa: float
    tau_s: float
    fringe_spacing: float
    damping_per_fringe: float
    flags: tuple

    def probability(self, y, include_damping: bool = True):
        """Detection probability (arbitrary scale) at screen position y."""
        y = np.asarray(y, dtype=float)
        dr = 2.0 * self.geometry.effective_separation * y / self.geometry.l
        damp = np.exp(-np.abs(dr) / (2.0 * CONSTANTS.c * self.tau_s)) \
            if include_damping else 1.0
        return 1.0 + damp * np.cos(self.kappa * dr)


def photon_double_slit(geom: SlitGeometry, kappa: float,
                       tau_s: float) -> PhotonSlitResult:
    """Photon double-slit pattern.

    Fringe spacing lambda*l/(2(d + h/2)); the interference term carries the
    source-propagator damping exp(-|dr|/(2 c tau_s)), i.e. a coefficient
    lambda/(2 c tau_s) per fringe order -- negligible for any desk-scale
    layout.  The commonly quoted per-fringe coefficient for the sodium
    benchmark is ~1e4 smaller than this formula gives; both are reported.
    """
    if kappa <= 0 or tau_s <= 0:
        raise DomainError("kappa and tau_s must be positive")
    lam = 2.0 * math.pi / kappa
    spacing = lam * geom.l / (2.0 * geom.effective_separation)
    per_fringe = lam / (2.0 * CONSTANTS.c * tau_s)
    flags = ()
    if abs(lam - CONSTANTS.lambda_na_d) / CONSTANTS.lambda_na_d < 0.01 \
            and abs(tau_s - CONSTANTS.tau_na_fringe) / CONSTANTS.tau_na_fringe < 0.2:
        flags = (DiscrepancyFlag(
            "damping_per_fringe", per_fringe, PHOTON_SLIT_REFERENCE_DAMPING,
            "quoted benchmark coefficient is ~1e4 below lambda/(2 c tau_s)"),)
    return PhotonSlitResult(geom, kappa, tau_s, spacing, per_fringe, flags)


@dataclass(frozen=True)
class ElectronBeam:
    """Electron beam with Gaussian momentum profile (MeV/c)."""

    mean_p: float
    sigma_p: float
    mass: float = CONSTANTS.m_electron

    def __post_init__(self):
        if self.mean_p <= 0 or self.mass <= 0:
            raise DomainError("momentum and mass must be positive")
        if self.sigma_p <= 0:
            raise DomainError(
                "sigma_p must be positive: interference requires a"
                " non-vanishing momentum spread")

    @property
    def energy(self) -> float:
        return math.hypot(self.mean_p, self.mass)

    @property
    def gamma_sq(self) -> float:
        return (self.energy / self.mass) ** 2

    @property
    def de_broglie(self) -> float:
        """h/p in metres (momentum in MeV/c)."""
        return 2.0 * math.pi * CONSTANTS.hbarc_ev_m / (self.mean_p * 1e6)


def electron_phase_difference(beam: ElectronBeam, r_prime: float,
                              r_a: float, r_b: float, mode: str) -> float:
    """Interference phase phi_B - phi_A between the two slit paths, to
    first order in (r_b - r_a)/r_prime.

    mode="equal-times": the electron leaves the source at the same time in
    both histories, so it needs different velocities; the phase reduces to
    p*dr/hbar = 2 pi dr / lambda_dB -- the de Broglie fringe rule.
    mode="equal-velocities": same speed in both histories (different
    emission times); the phase collapses to -(m c)^2 dr/(p hbar), smaller
    by (m c / p)^2 in the relativistic limit and larger for slow particles.
    """
    dr = r_b - r_a
    if abs(dr) > 0.1 * r_prime:
        raise DomainError("first-order treatment needs |dr| << r_prime")
    hbarc_mev_m = CONSTANTS.hbarc_ev_m * 1e-6  # MeV m
    if mode == "equal-times":
        return beam.mean_p * dr / hbarc_mev_m
    if mode == "equal-velocities":
        return -beam.mass ** 2 * dr / (beam.mean_p * hbarc_mev_m)
    raise DomainError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ElectronSlitResult:
    """Electron double-slit pattern with the two damping exponents of the
    Gaussian-beam calculation."""

    geometry: SlitGeometry
    beam: ElectronBeam
    r_bar: float
    fringe_spacing: float
    equal_time_coeff: float   # Delta p/(2 sigma_p) per fringe order
    spread_coeff: float       # sigma_p dr/(2 hbar) per fringe order
    flags: tuple

    def probability(self, y, include_damping: bool = True):
        """Detection probability (scale 1/(sqrt(pi) sigma_p)) at position y."""
        y = np.asarray(y, dtype=float)
        dr = 2.0 * self.geometry.effective_separation * y / self.geometry.l
        n = np.abs(dr) / self.beam.de_broglie
        if include_damping:
            damp = np.exp(-((self.equal_time_coeff * n) ** 2
                            + (self.spread_coeff * n) ** 2))
        else:
            damp = 1.0
        lam = self.beam.de_broglie
        return (1.0 + damp * np.cos(2.0 * math.pi * dr / lam)) \
            / (math.sqrt(math.pi) * self.beam.sigma_p)


def electron_double_slit(geom: SlitGeometry, beam: ElectronBeam,
                         r_bar: float | None = None) -> ElectronSlitResult:
    """Electron double-slit pattern for a Gaussian beam.

    Identical fringe term to a photon pattern of the same wavelength; the
    damping exponents per fringe order n are

        equal-time:  n * gamma^2 h / (2 sigma_p (r' + r_bar))
        spread:      n * pi sigma_p / p

    The first enforces the equal-production-time condition through the
    momentum offset dp = p gamma^2 dr/(r' + r_bar) it requires; the second
    is the coherence cost of the momentum width itself.  The quoted
    benchmark pair for the 229 MeV/c inputs is reported alongside; its
    first coefficient is not reproducible from those inputs (see flags).
    """
    if beam.sigma_p / beam.mean_p > 0.1:
        raise DomainError("Gaussian treatment needs sigma_p << p")
    rb = geom.r_prime if r_bar is None else r_bar
    lam = beam.de_broglie
    spacing = lam * geom.l / (2.0 * geom.effective_separation)
    h_mev_m = 2.0 * math.pi * CONSTANTS.hbarc_ev_m * 1e-6  # MeV m (h c / c)
    equal_time = beam.gamma_sq * h_mev_m \
        / (2.0 * beam.sigma_p * (geom.r_prime + rb))
    spread = math.pi * beam.sigma_p / beam.mean_p
    flags = (DiscrepancyFlag(
        "equal_time_coeff", equal_time, ELECTRON_SLIT_REFERENCE_DAMPING[0],
        "quoted benchmark coefficient is not reproducible from its stated"
        " inputs under the Gaussian-beam formula; stored for reference"),)
    return ElectronSlitResult(geom, beam, rb, spacing, equal_time,
                              spread, flags)


def gaussian_interference_integral(sigma_p: float, mean_p: float,
                                   dr: float, dp: float) -> complex:
    """Closed form of the momentum-averaged interference integral

        (1/(pi sigma^2)) int e^{-i(p + dp/2) dr} e^{-(p-<p>)^2/(2 s^2)}
                             e^{-(p+dp-<p>)^2/(2 s^2)} dp
      = (1/(sqrt(pi) s)) e^{-(dp/2s)^2} e^{-(s dr/2)^2} e^{-i <p> dr}

    in hbar = 1 units (momenta and 1/dr in the same scale).  The real part
    is the interference term of the two-slit probability.
    """
    if sigma_p <= 0:
        raise DomainError("sigma_p must be positive")
    return (math.exp(-(dp / (2.0 * sigma_p)) ** 2)
            * math.exp(-(sigma_p * dr / 2.0) ** 2)
            * cmath.exp(-1j * mean_p * dr)
            / (math.sqrt(math.pi) * sigma_p))


# --------------------------------------------------------------------------
# Neutral kaons


@dataclass(frozen=True)
class KaonSystem:
    """Neutral-kaon mass eigenstates: mean pole mass (MeV/c^2), splitting
    dm = m_L - m_S, widths (MeV) and mean laboratory momentum (MeV/c)."""

    mean_mass: float = CONSTANTS.m_k0_mean
    dm: float = CONSTANTS.dm_ls
    gamma_s: float = CONSTANTS.hbar_mev_s / CONSTANTS.tau_ks
    gamma_l: float = CONSTANTS.hbar_mev_s / CONSTANTS.tau_kl
    mean_p: float = 194.0

    def __post_init__(self):
        if self.dm <= 0:
            raise DomainError("m_L must exceed m_S")
        if not self.gamma_s > self.gamma_l > 0:
            raise DomainError("need gamma_s > gamma_l > 0")

    @property
    def mean_energy(self) -> float:
        return math.hypot(self.mean_mass, self.mean_p)

    def proper_time(self, distance: float) -> float:
        """Proper flight time (s) to a detector at ``distance`` metres."""
        gamma_beta = self.mean_p / self.mean_mass
        return distance / (gamma_beta * CONSTANTS.c)


def kaon_detection_probability(sys: KaonSystem, charge: str,
                               tau: float | None = None,
                               distance: float | None = None,
                               scale: float = 1.0) -> float:
    """Semileptonic detection probability at proper time tau (s), or at a
    lab distance (m) converted through the mean momentum:

      scale * { e^{-G_S tau/hbar} + e^{-G_L tau/hbar}
                +/- 2 e^{-(G_S+G_L) tau/(2 hbar)} cos(dm c^2 tau/hbar) }

    with + for positrons and - for electrons: the interference term flips
    sign between the charge modes and cancels in their sum.
    """
    if (tau is None) == (distance is None):
        raise DomainError("give exactly one of tau or distance")
    if tau is None:
        tau = sys.proper_time(distance)
    if tau < 0:
        raise DomainError("tau must be >= 0")
    if charge not in ("e+", "e-"):
        raise DomainError("charge must be 'e+' or 'e-'")
    sign = 1.0 if charge == "e+" else -1.0
    hbar = CONSTANTS.hbar_mev_s
    direct = math.exp(-sys.gamma_s * tau / hbar) + math.exp(-sys.gamma_l * tau / hbar)
    inter = 2.0 * math.exp(-(sys.gamma_s + sys.gamma_l) * tau / (2.0 * hbar)) \
        * math.cos(sys.dm * tau / hbar)
    return scale * (direct + sign * inter)


def kaon_oscillation_phase_lab(sys: KaonSystem, distance: float) -> float:
    """Interference phase in lab variables, mbar c^2 dm L/(hbar p c):
    identical to dm c^2 tau/hbar under the equal-velocity proper-time map
    and to the d(m^2)/2p structure of the standard oscillation formula."""
    return sys.mean_mass * sys.dm * distance \
        / (CONSTANTS.hbar_mev_s * sys.mean_p * CONSTANTS.c)


def kaon_oscillation_period(sys: KaonSystem) -> float:
    """Proper-time period 2 pi hbar/(dm c^2) of the flavour oscillation."""
    return 2.0 * math.pi * CONSTANTS.hbar_mev_s / sys.dm


class EqualVelocityReport(NamedTuple):
    """How strongly the equal-velocity configuration is preferred for kaons."""

    dp_over_p: float          # momentum offset required for equal velocities
    dp_rad_over_p: float      # radiative momentum smearing (stored reference)
    dt_production: float      # s, production-time offset for equal momenta
    flags: tuple


def kaon_equal_velocity_report(sys: KaonSystem,
                               tau_s: float = CONSTANTS.tau_ks) -> EqualVelocityReport:
    """Equal-velocity bookkeeping for the kaon pair.

    dp/p = dm c/p is the momentum offset that equalises the velocities --
    ~12 orders below the radiative smearing, so both eigenstates populate
    it freely.  dt = dm c^2 tau_S / E is the production-time offset needed
    for equal-momentum eigenstates to arrive together at a typical decay
    distance; commonly tabulated values are ~1e3 times larger than this
    expression gives, so the computed value is flagged.
    """
    dp_over_p = sys.dm / sys.mean_p
    dt = sys.dm * tau_s / sys.mean_energy
    flags = (DiscrepancyFlag(
        "dt_production", dt, dt * 1e3,
        "commonly tabulated absolute values are ~1e3 larger; their"
        " momentum dependence (ratios) matches this expression"),)
    return EqualVelocityReport(dp_over_p, KAON_RADIATIVE_SMEARING, dt, flags)


def kaon_curve(sys: KaonSystem, tau_grid) -> list[tuple]:
    """Rows (tau_ns, P_plus, P_minus, interference) over a proper-time grid (s)."""
    rows = []
    for tau in tau_grid:
        p_plus = kaon_detection_probability(sys, "e+", tau=float(tau))
        p_minus = kaon_detection_probability(sys, "e-", tau=float(tau))
        rows.append((float(tau) * 1e9, p_plus, p_minus, (p_plus - p_minus) / 2.0))
    return rows


# --------------------------------------------------------------------------
# Neutrinos


@dataclass(frozen=True)
class NeutrinoExperiment:
    """Two-flavour oscillation experiment with a stationary decaying source.

    source_mass/source_width in MeV; recoil_mass is the effective mass of
    everything recoiling against the neutrino (the muon for pi -> mu nu);
    dm2_ev2 = m_1^2 - m_2^2 in (eV/c^2)^2; baseline in m.  mode="two-body"
    derives the monochromatic momentum from the decay kinematics;
    mode="beta" needs the neutrino momentum and total energy release
    explicitly.
    """

    source_mass: float
    source_width: float
    recoil_mass: float
    dm2_ev2: float
    theta_12: float
    baseline: float
    mode: str = "two-body"
    beta_energy_mev: float | None = None
    neutrino_p_mev: float | None = None

    def __post_init__(self):
        if self.dm2_ev2 <= 0:
            raise DomainError("dm2 must be positive")
        if self.baseline <= 0:
            raise DomainError("baseline must be positive")
        if self.mode == "two-body":
            if not 0.0 < self.recoil_mass < self.source_mass:
                raise DomainError(
                    "kinematically forbidden: need 0 < recoil mass < source mass")
        elif self.mode == "beta":
            if self.beta_energy_mev is None or self.neutrino_p_mev is None:
                raise DomainError("beta mode needs beta_energy_mev and neutrino_p_mev")
        else:
            raise DomainError(f"unknown mode {self.mode!r}")

    @property
    def mass_ratio(self) -> float:
        """R_m = recoil mass / source mass."""
        return self.recoil_mass / self.source_mass

    @property
    def p0(self) -> float:
        """Neutrino momentum (MeV/c): two-body value (m_S^2 - m_R^2)/(2 m_S)
        or the explicit beta-mode momentum."""
        if self.mode == "beta":
            return self.neutrino_p_mev
        return (self.source_mass ** 2 - self.recoil_mass ** 2) \
            / (2.0 * self.source_mass)


def pion_neutrino_experiment(dm2_ev2: float, theta_12: float,
                             baseline: float) -> NeutrinoExperiment:
    """pi -> mu nu at rest."""
    return NeutrinoExperiment(CONSTANTS.m_pi,
                              CONSTANTS.hbar_mev_s / CONSTANTS.tau_pi,
                              CONSTANTS.m_mu, dm2_ev2, theta_12, baseline)


def kaon_neutrino_experiment(dm2_ev2: float, theta_12: float,
                             baseline: float) -> NeutrinoExperiment:
    """K -> mu nu at rest."""
    tau_k = 1.2385e-8  # s, charged-kaon lifetime
    return NeutrinoExperiment(CONSTANTS.m_k_charged,
                              CONSTANTS.hbar_mev_s / tau_k,
                              CONSTANTS.m_mu, dm2_ev2, theta_12, baseline)


@dataclass(frozen=True)
class NeutrinoOscillationResult:
    probability: float          # P_e-mu up to the overall rate scale
    phi_path: float             # rad, from the source+propagator phase chain
    phi_standard: float         # rad, kinematic dm^2 c^2 L/(2 p hbar)
    phi_compact: float          # rad, compact (R_m/(1-R_m^2))^2 form
    losc_path: float            # m, oscillation length of the compact form
    losc_standard: float        # m
    dt_21: float                # s, emission-time offset for joint arrival
    damping_factor: float       # source-lifetime damping of the interference
    damping_exponent_unit_phase: float  # exponent at dm^2 c^2 L/(p0 hbar) = 1
    flags: tuple

    def as_dict(self) -> dict:
        d = {k: getattr(self, k) for k in (
            "probability", "phi_path", "phi_standard", "phi_compact",
            "losc_path", "losc_standard", "dt_21", "damping_factor",
            "damping_exponent_unit_phase")}
        d["flags"] = [f.as_dict() for f in self.flags]
        return d


def neutrino_oscillation(exp: NeutrinoExperiment) -> NeutrinoOscillationResult:
    """Appearance probability and phase bookkeeping for a two-flavour
    oscillation experiment with a stationary source.

    The authoritative phase follows the full chain (source propagator up to
    each emission time plus neutrino propagator over the baseline):

        phi_path = (dm^2 c^2 / p0) (c m_S/(2 p0) - 1) L / hbar

    The compact published form with coefficient (R_m/(1-R_m^2))^2 is
    exactly half of this when specialised to two-body decay at rest; both
    are returned, along with the standard kinematic phase, rather than
    silently choosing one.  The interference term is damped by the source
    lifetime as exp[-Gamma c dm^2 L/(4 hbar p0^2)], utterly negligible for
    any realistic source.
    """
    p0_ev = exp.p0 * 1e6
    hbarc = CONSTANTS.hbarc_ev_m
    l = exp.baseline
    dm2 = exp.dm2_ev2

    if exp.mode == "beta":
        e_beta_ev = exp.beta_energy_mev * 1e6
        phi_path = (dm2 / p0_ev) * (e_beta_ev / (2.0 * p0_ev) - 1.0) * l / hbarc
    else:
        ms_ev = exp.source_mass * 1e6
        phi_path = (dm2 / p0_ev) * (ms_ev / (2.0 * p0_ev) - 1.0) * l / hbarc
    phi_standard = dm2 * l / (2.0 * p0_ev * hbarc)
    if exp.mode == "two-body":
        rm = exp.mass_ratio
        ms_ev = exp.source_mass * 1e6
        phi_compact = (dm2 / ms_ev) * (rm / (1.0 - rm ** 2)) ** 2 * l / hbarc
        losc_path = 2.0 * math.pi * hbarc * ms_ev \
            * ((1.0 - rm ** 2) / rm) ** 2 / dm2
    else:
        # the compact two-body coefficient has no beta-decay analogue;
        # the oscillation length then follows the full phase chain
        phi_compact = math.nan
        losc_path = 2.0 * math.pi * l / abs(phi_path)
    losc_standard = 4.0 * math.pi * hbarc * p0_ev / dm2

    gamma_ev = exp.source_width * 1e6
    damping_exponent = gamma_ev * dm2 * l / (4.0 * hbarc * p0_ev ** 2)
    damping = math.exp(-damping_exponent)
    dt21 = (l / CONSTANTS.c) * dm2 / (2.0 * p0_ev ** 2)

    # normalised so that zero damping gives sin^2(2 theta) sin^2(phi/2)
    s2, c2 = math.sin(exp.theta_12) ** 2, math.cos(exp.theta_12) ** 2
    prob = 2.0 * s2 * c2 * (1.0 - damping * math.cos(phi_path))

    unit_phase_exponent = gamma_ev / (4.0 * p0_ev)
    flags = (
        DiscrepancyFlag(
            "phi_compact/phi_path", 0.5, 1.0,
            "compact published coefficient is exactly half the full phase"
            " chain for two-body decay at rest; unresolved, both reported"),
        DiscrepancyFlag(
            "damping_exponent_unit_phase", unit_phase_exponent,
            NEUTRINO_REFERENCE_DAMPING_EXP,
            "quoted benchmark exponent is ~2x the computed"
            " Gamma/(4 p0) at unit reduced phase"),
    )
    return NeutrinoOscillationResult(prob, phi_path, phi_standard,
                                     phi_compact, losc_path, losc_standard,
                                     dt21, damping, unit_phase_exponent, flags)


def half_oscillation_distance(exp: NeutrinoExperiment) -> float:
    """Baseline at which the path-chain interference phase reaches pi (m)."""
    res = neutrino_oscillation(exp)
    return math.pi * exp.baseline / abs(res.phi_path)


def emission_time_offset_closed_form(exp: NeutrinoExperiment) -> tuple[float, tuple]:
    """Emission-time offset at the half-oscillation baseline, which depends
    only on the production kinematics: h/(4 c (m_S c/2 - p0)) in natural
    units.  The commonly quoted figure for the pion benchmark is smaller by
    a factor pi and is flagged."""
    p0_ev = exp.p0 * 1e6
    ms_ev = exp.source_mass * 1e6
    h_ev_s = CONSTANTS.h_ev_s
    dt = h_ev_s / (4.0 * (ms_ev / 2.0 - p0_ev))
    flags = (DiscrepancyFlag(
        "dt_21_at_half_oscillation", dt, dt / math.pi,
        "quoted benchmark value equals this expression divided by pi"),)
    return dt, flags


def oscillation_length_ratio(exp_a: NeutrinoExperiment,
                             exp_b: NeutrinoExperiment) -> float:
    """Ratio of path-chain oscillation lengths for the two experiments when
    both are normalised to the same neutrino momentum:

        [m_S ((1-R_m^2)/R_m)^2 / p0]_A / [same]_B

    ~28 for a kaon source versus a pion source; the standard kinematic
    formula instead predicts 1 at equal momentum.
    """
    def figure(e: NeutrinoExperiment) -> float:
        rm = e.mass_ratio
        return e.source_mass * ((1.0 - rm ** 2) / rm) ** 2 / e.p0

    return figure(exp_a) / figure(exp_b)


def neutrino_curve(exp: NeutrinoExperiment, baselines) -> list[tuple]:
    """Rows (L_m, P_appear, P_survive, interference_term) over baselines (m)."""
    rows = []
    for l in baselines:
        e = NeutrinoExperiment(exp.source_mass, exp.source_width,
                               exp.recoil_mass, exp.dm2_ev2, exp.theta_12,
                               float(l), exp.mode, exp.beta_energy_mev,
                               exp.neutrino_p_mev)
        res = neutrino_oscillation(e)
        s2c2 = math.sin(e.theta_12) ** 2 * math.cos(e.theta_12) ** 2
        inter = -2.0 * s2c2 * res.damping_factor * math.cos(res.phi_path)
        rows.append((float(l), res.probability, 1.0 - res.probability, inter))
    return rows


# --------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class ClassificationRow:
    """Space-time classification of a two-amplitude experiment: which of
    the path length, flight time, velocity, source phase and particle phase
    differ between the two interfering histories, the interference phase,
    and the effective wavelength 2 pi L/|dphi| relative to de Broglie."""

    experiment: str
    path_difference: bool        # delta r != 0
    time_difference: bool        # delta t != 0
    velocity_difference: bool    # delta v != 0
    source_phase_difference: bool
    particle_phase_difference: bool
    phase_formula: str
    wavelength_ratio: str

    def as_dict(self) -> dict:
        return self.__dict__.copy()


_TABLE = {
    "photon-ydse": ClassificationRow(
        "photon-ydse", True, True, False, True, False,
        "-p_bar * dr / hbar", "1"),
    "electron-ydse": ClassificationRow(
        "electron-ydse", True, False, True, False, True,
        "-p_bar * dr / hbar", "1"),
    "kaon": ClassificationRow(
        "kaon", False, False, False, False, True,
        "-d(m^2) c^2 L / (2 p_bar hbar)",
        "2 (p_bar/(m_S c))^2"),
    "neutrino": ClassificationRow(
        "neutrino", False, True, True, True, True,
        "-(d(m^2) c/m_S) (R_m/(1-R_m^2))^2 L / hbar",
        "(p_bar/(m_S c)) ((1-R_m^2)/R_m)^2"),
}


def classify_experiment(kind: str) -> ClassificationRow:
    """Space-time classification row for one of the four experiments:
    photon-ydse, electron-ydse, kaon, neutrino."""
    try:
        return _TABLE[kind]
    except KeyError:
        raise DomainError(f"unknown experiment kind {kind!r}") from None
