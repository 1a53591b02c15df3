"""Screened-Coulomb ring model: parameters, effective potential, spectrum.

A charged particle moves in a plane with a conical defect (deficit
parameter alpha), threaded by a flux line (xi, in flux quanta) and an
exponentially screened magnetic field, and bound by the screened Coulomb
well -v1 * exp(-delta*r)/r. After the Greene-Aldrich replacement
1/r**2 -> delta**2/(1 - exp(-delta*r))**2 the radial problem is solvable
in closed form; this module carries both the closed-form spectrum and an
independent bisection oracle on the quantization condition so the two can
be checked against each other.

Default units: hbar = mass = charge = light_speed = 1, so omega_c equals
the field strength b_field and one flux quantum is 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .numerics import DomainError, bisect


class NoBoundStateError(RuntimeError):
    """Requested state does not exist; carries the rejection reason."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters.

    mass        -- effective mass (> 0)
    hbar        -- action quantum (> 0)
    delta       -- screening constant, 1/length (> 0)
    v1          -- screened-Coulomb coupling, energy*length (>= 0)
    b_field     -- magnetic field strength (>= 0); omega_c = charge*b_field/(mass*c)
    xi          -- flux through the ring in flux quanta (real; sign = orientation)
    alpha       -- conical deficit parameter (> 0; < 1 means a deficit angle,
                   > 1 accepted as a surplus)
    charge, light_speed -- unit-system knobs, default 1
    """

    mass: float = 1.0
    hbar: float = 1.0
    delta: float = 0.1
    v1: float = 1.0
    b_field: float = 0.0
    xi: float = 0.0
    alpha: float = 1.0
    charge: float = 1.0
    light_speed: float = 1.0

    def __post_init__(self):
        if self.mass <= 0 or self.hbar <= 0:
            raise DomainError("mass and hbar must be > 0")
        if self.delta <= 0:
            raise DomainError("screening delta must be > 0")
        if self.v1 < 0:
            raise DomainError("coupling v1 must be >= 0")
        if self.b_field < 0:
            raise DomainError("b_field must be >= 0")
        if self.alpha <= 0:
            raise DomainError("deficit parameter alpha must be > 0")

    @property
    def omega_c(self) -> float:
        """Cyclotron frequency charge*B/(mass*c)."""
        return self.charge * self.b_field / (self.mass * self.light_speed)

    @property
    def flux_quantum(self) -> float:
        """One flux quantum, 2*pi*hbar*c/charge."""
        return 2.0 * math.pi * self.hbar * self.light_speed / self.charge

    def with_flux(self, phi_ab: float) -> "ModelParams":
        """Copy with xi set from a raw flux value phi_ab."""
        return replace(self, xi=phi_ab / self.flux_quantum)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial index n >= 0 and integer angular momentum label m."""

    n: int
    m: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("radial index n must be >= 0")


@dataclass(frozen=True)
class DimensionlessSet:
    """Dimensionless constants of the reduced radial problem at energy ratio
    epsilon = -2*mass*E/(hbar*delta)**2.

    beta0 -- well-strength ratio   2*mass*v1/(hbar**2*delta)
    beta1 -- field-angular cross coupling
    beta2 -- field-strength ratio  (mass*omega_c/(hbar*delta))**2
    eta   -- angular barrier constant (m/alpha + xi)**2 - 1/4
    lam   -- large-r decay exponent sqrt(epsilon + eta)   (NaN if complex)
    nu    -- small-r exponent 1/2 + sqrt(1/4 + beta1 + beta2 + eta) (NaN if complex)
    """

    epsilon: float
    beta0: float
    beta1: float
    beta2: float
    eta: float
    lam: float
    nu: float

    @property
    def is_normalizable(self) -> bool:
        return math.isfinite(self.lam) and math.isfinite(self.nu)


@dataclass(frozen=True)
class BoundStateReport:
    """Outcome of the closed-form spectrum for one (params, n, m)."""

    exists: bool
    reason: str = ""
    energy: float = math.nan
    epsilon: float = math.nan
    dimensionless: DimensionlessSet | None = None


def coupling_constants(params: ModelParams, qn: QuantumNumbers):
    """(beta0, beta1, beta2, eta) for the reduced radial equation."""
    mass, hbar, delta = params.mass, params.hbar, params.delta
    wc, alpha, xi, m = params.omega_c, params.alpha, params.xi, qn.m
    beta0 = 2.0 * mass * params.v1 / (hbar * hbar * delta)
    beta1 = (2.0 * mass * wc / (hbar * delta)) * (m / alpha**2 + xi / alpha)
    beta2 = (mass * wc / (hbar * delta)) ** 2
    eta = (m / alpha + xi) ** 2 - 0.25
    return beta0, beta1, beta2, eta


def dimensionless(params: ModelParams, qn: QuantumNumbers, epsilon: float) -> DimensionlessSet:
    """Dimensionless constants evaluated at the given energy ratio.

    Complex exponents (epsilon + eta < 0 or 1/4 + beta1 + beta2 + eta < 0)
    flag a non-normalizable state by NaN in lam/nu rather than raising.
    """
    beta0, beta1, beta2, eta = coupling_constants(params, qn)
    lam_sq = epsilon + eta
    nu_disc = 0.25 + beta1 + beta2 + eta
    lam = math.sqrt(lam_sq) if lam_sq >= 0.0 else math.nan
    nu = 0.5 + math.sqrt(nu_disc) if nu_disc >= 0.0 else math.nan
    return DimensionlessSet(epsilon, beta0, beta1, beta2, eta, lam, nu)


def epsilon_from_energy(params: ModelParams, energy: float) -> float:
    return -2.0 * params.mass * energy / (params.hbar * params.delta) ** 2


def energy_from_epsilon(params: ModelParams, epsilon: float) -> float:
    return -(params.hbar * params.delta) ** 2 * epsilon / (2.0 * params.mass)


def effective_potential(params: ModelParams, qn: QuantumNumbers, r):
    """Effective radial potential (exact form, before any approximation).

    Four terms: the screened Coulomb well, the field-angular cross term,
    the screened-field quadratic term, and the angular/centrifugal barrier.
    The barrier here carries the (m/alpha**2 + xi) combination of the raw
    radial reduction; the spectrum path uses the eta of `dimensionless`
    instead (see package docs for the distinction).
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("effective_potential requires r > 0")
    mass, hbar, delta = params.mass, params.hbar, params.delta
    wc, alpha, xi, m = params.omega_c, params.alpha, params.xi, qn.m
    em = np.exp(-delta * r)
    one_minus = -np.expm1(-delta * r)
    yukawa = -params.v1 * em / r
    cross = hbar * wc * (m / alpha**2 + xi / alpha) * em / (one_minus * r)
    quad = 0.5 * mass * wc * wc * em * em / one_minus**2
    barrier = (hbar * hbar / (2.0 * mass)) * ((m / alpha**2 + xi) ** 2 - 0.25) / r**2
    out = yukawa + cross + quad + barrier
    return float(out) if out.ndim == 0 else out


def vector_potential_phi(params: ModelParams, r):
    """Azimuthal components (A1, A2) of the two-part gauge field.

    A1 carries the screened field b_field*exp(-delta r)/(alpha*(1-exp(-delta r))),
    A2 the flux line phi_ab/(2*pi*r).
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("vector_potential_phi requires r > 0")
    one_minus = -np.expm1(-params.delta * r)
    a1 = params.b_field * np.exp(-params.delta * r) / (params.alpha * one_minus)
    phi_ab = params.xi * params.flux_quantum
    a2 = phi_ab / (2.0 * math.pi * r)
    if a1.ndim == 0:
        return float(a1), float(a2)
    return a1, a2


def greene_aldrich_ratio(delta: float, r):
    """Approximation-to-exact ratio of the 1/r**2 replacement.

    Returns [delta**2/(1-exp(-delta r))**2] / (1/r**2); 1 means exact. Only
    close to 1 for delta*r << 1 -- the replacement is a small-screening tool.
    """
    if delta <= 0.0:
        raise DomainError("delta must be > 0")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be > 0")
    x = delta * r
    out = (x / (-np.expm1(-x))) ** 2
    return float(out) if out.ndim == 0 else out


def energy_closed_form(params: ModelParams, qn: QuantumNumbers) -> BoundStateReport:
    """Closed-form bound-state energy for quantum numbers (n, m).

    Solves the quantization condition (lam + nu) - sqrt(epsilon+beta0+beta2)
    = -n for the energy ratio epsilon; non-existence (complex exponents,
    non-positive decay exponent, or epsilon <= 0 meaning E >= 0) is reported,
    never raised.
    """
    beta0, beta1, beta2, eta = coupling_constants(params, qn)
    nu_disc = 0.25 + beta1 + beta2 + eta
    if nu_disc < 0.0:
        return BoundStateReport(False, "small-r exponent complex (angular/field couplings too negative)")
    big_n = qn.n + 0.5 + math.sqrt(nu_disc)
    lam = (beta0 + beta2 - eta - big_n * big_n) / (2.0 * big_n)
    if lam <= 0.0:
        return BoundStateReport(False, "state not bound by the screened well (decay exponent <= 0)")
    epsilon = lam * lam - eta
    if epsilon <= 0.0:
        return BoundStateReport(False, "energy not negative (epsilon <= 0)")
    ds = DimensionlessSet(epsilon, beta0, beta1, beta2, eta, lam, 0.5 + math.sqrt(nu_disc))
    return BoundStateReport(True, "", energy_from_epsilon(params, epsilon), epsilon, ds)


def quantization_residual(ds: DimensionlessSet, n: int) -> float:
    """Residual (lam + nu) - sqrt(epsilon + beta0 + beta2) + n at ds.epsilon.

    Zero at a bound state; strictly increasing in epsilon on its domain.
    """
    if not ds.is_normalizable:
        raise DomainError("epsilon outside the real-exponent region")
    return (ds.lam + ds.nu) - math.sqrt(ds.epsilon + ds.beta0 + ds.beta2) + n


def quantization_root_bisection(params: ModelParams, qn: QuantumNumbers,
                                rtol: float = 1e-13) -> float | None:
    """Independent oracle: bisect the quantization condition for epsilon.

    Does not use the closed form. The residual is monotone in epsilon and
    tends to n + nu > 0, so the upper bracket edge is grown geometrically
    from beta0 + beta2 until it changes sign. Returns None when no root
    exists (no bound state).
    """
    beta0, beta1, beta2, eta = coupling_constants(params, qn)
    nu_disc = 0.25 + beta1 + beta2 + eta
    if nu_disc < 0.0:
        return None
    nu = 0.5 + math.sqrt(nu_disc)

    def residual(eps: float) -> float:
        return math.sqrt(eps + eta) + nu - math.sqrt(eps + beta0 + beta2) + qn.n

    lo = max(0.0, -eta) + 1e-12 * max(1.0, abs(eta))
    if residual(lo) >= 0.0:
        return None
    hi = max(1.0, beta0 + beta2)
    for _ in range(200):
        if residual(hi) > 0.0:
            break
        hi *= 2.0
    else:
        return None
    return bisect(residual, lo, hi, tol=1e-14, rtol=rtol)
