"""Complex-amplitude helpers, frozen physical constants and truncated
trigonometric series.

Amplitudes are plain Python ``complex`` numbers throughout the package;
``modulus`` and ``phase`` give the polar pieces with phase in (-pi, pi].
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, fields

ComplexAmp = complex


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(ValueError):
    """Inputs are individually valid but mutually inconsistent."""


class ApproximationWarning(UserWarning):
    """A result was produced outside the validity window of its approximation."""


@dataclass(frozen=True)
class DiscrepancyFlag:
    """A computed value that disagrees with a commonly quoted reference figure.

    The library never silently substitutes the reference figure for the
    computed one; both are carried so reports can show the disagreement.
    """

    quantity: str
    computed: float
    reference: float
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "computed": self.computed,
            "reference": self.reference,
            "note": self.note,
        }


def modulus(z: complex) -> float:
    """|z|, always >= 0."""
    return abs(z)


def phase(z: complex) -> float:
    """Argument of z in (-pi, pi]."""
    return cmath.phase(z)


def from_polar(mod: float, ph: float) -> complex:
    """Complex number with the given modulus and phase."""
    return mod * cmath.exp(1j * ph)


@dataclass(frozen=True)
class ConstantsTable:
    """Physical constants frozen to the values used by the reproduced
    benchmark tables (PDG-2004-era particle data, exact SI definitions).

    Deliberately not refreshed to current PDG fits: the benchmark numbers
    this package reproduces were computed with these inputs.
    """

    c: float = 2.99792458e8                 # m/s, exact
    hbar_mev_s: float = 6.582119569e-22     # MeV s
    hbar_ev_s: float = 6.582119569e-16      # eV s
    h_ev_s: float = 4.135667696e-15         # eV s
    k_boltzmann: float = 1.380649e-23       # J/K, exact
    ev_joule: float = 1.602176634e-19       # J per eV, exact

    m_electron: float = 0.51099895          # MeV/c^2
    m_pi: float = 139.57018                 # MeV/c^2, charged pion
    m_mu: float = 105.658369                # MeV/c^2
    m_k_charged: float = 493.677            # MeV/c^2
    m_k0_mean: float = 497.7                # MeV/c^2, (m_L + m_S)/2
    dm_ls: float = 3.49e-12                 # MeV/c^2, m_L - m_S
    tau_ks: float = 0.8954e-10              # s
    tau_kl: float = 5.116e-8                # s
    tau_pi: float = 2.6033e-8               # s

    lambda_na_d: float = 589.3e-9           # m, sodium D doublet centre
    tau_na_annulment: float = 5.4e-8        # s, lifetime used in the annulment benchmark
    tau_na_fringe: float = 5.4e-9           # s, lifetime used in the double-slit damping benchmark

    atomic_mass_unit: float = 1.66053906660e-27  # kg
    mass_na_u: float = 22.98976928          # u
    mass_h_u: float = 1.008                 # u

    notes: dict = field(default_factory=lambda: {
        "c": "exact SI definition",
        "hbar_mev_s": "CODATA, exact since 2019 SI",
        "k_boltzmann": "exact SI definition",
        "m_pi": "PDG 2004",
        "m_mu": "PDG 2004",
        "m_k_charged": "PDG 2004",
        "m_k0_mean": "frozen benchmark input (497.7 MeV/c^2)",
        "dm_ls": "frozen benchmark input (3.49e-12 MeV/c^2)",
        "tau_ks": "frozen benchmark input (0.8954e-10 s)",
        "tau_kl": "PDG 2004",
        "tau_pi": "PDG 2004",
        "lambda_na_d": "sodium D doublet centre, 5893 A",
        "tau_na_annulment": "frozen benchmark input; differs from tau_na_fringe, both kept",
        "tau_na_fringe": "frozen benchmark input; differs from tau_na_annulment, both kept",
        "atomic_mass_unit": "CODATA 2018",
    })

    def validate(self) -> None:
        """Raise if any constant is non-positive or h != 2*pi*hbar."""
        for f in fields(self):
            if f.name == "notes":
                continue
            if getattr(self, f.name) <= 0:
                raise DomainError(f"constant {f.name} must be positive")
        rel = abs(self.h_ev_s - 2.0 * math.pi * self.hbar_ev_s) / self.h_ev_s
        if rel > 1e-9:
            raise DomainError(f"h and hbar inconsistent: relative error {rel:.2e}")

    @property
    def hbarc_ev_m(self) -> float:
        """hbar*c in eV m, derived so unit conversions stay self-consistent."""
        return self.hbar_ev_s * self.c

    @property
    def hc_ev_m(self) -> float:
        """h*c in eV m, derived."""
        return self.h_ev_s * self.c

    @property
    def mass_na_kg(self) -> float:
        return self.mass_na_u * self.atomic_mass_unit

    @property
    def mass_h_kg(self) -> float:
        return self.mass_h_u * self.atomic_mass_unit


CONSTANTS = ConstantsTable()
CONSTANTS.validate()


def _check_finite(x: float, name: str) -> None:
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def truncated_sin(order: int, x: float) -> float:
    """Partial sum of the sine series: sum_{k=0}^{order-1} (-1)^k x^(2k+1)/(2k+1)!.

    order 0 is identically 0, order 1 is x.  Terms are accumulated by the
    stable recurrence term *= -x^2/((n+1)(n+2)) so large arguments do not
    overflow intermediate factorials.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    _check_finite(x, "x")
    total = 0.0
    term = x
    for k in range(order):
        total += term
        term *= -x * x / ((2 * k + 2) * (2 * k + 3))
    return total


def truncated_cos(order: int, x: float) -> float:
    """Partial sum of the cosine series: sum_{k=0}^{order} (-1)^k x^(2k)/(2k)!.

    order 0 is identically 1; note the sum runs to ``order`` inclusive, one
    term more than ``truncated_sin`` of the same order.
    """
    if order < 0:
        raise DomainError("order must be >= 0")
    _check_finite(x, "x")
    total = 0.0
    term = 1.0
    for k in range(order + 1):
        total += term
        term *= -x * x / ((2 * k + 1) * (2 * k + 2))
    return total
