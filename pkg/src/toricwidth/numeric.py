"""Floating point checks for the Kaehler potential of a monomial embedding.

The embedding xi -> [xi^{J_1} : ... : xi^{J_N}] pulls the ambient form back
to (i/2) del delbar Phi with Phi(xi) = 2 log sum_k |xi|^{2 J_k}.  Writing
x_l = |xi_l|^2 and Phi~(x) = 2 log sum_k x^{J_k}, the map

    Psi(xi)_k = sqrt(dPhi~/dx_k at x) * xi_k

is a symplectomorphism onto its image wherever the partials are positive.
This module evaluates those quantities and verifies the pullback identity
by central finite differences.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .embedding import MonomialEmbedding

GRADIENT_STEP = 1e-6
HESSIAN_STEP = 1e-4
# central differences with step 1e-6 leave ~1e-10 of noise in an exactly
# singular determinant, while honest Jacobians here have |det| of order 1
DEGENERATE_JACOBIAN_TOL = 1e-8
ZERO_DENOMINATOR_BUMP = 1e-12


class DegenerateJacobianWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ToricPotential:
    """Phi~(x) = 2 log sum_k x^{J_k} for a fixed exponent set."""

    embedding: MonomialEmbedding

    @property
    def dim(self) -> int:
        return self.embedding.dim

    @property
    def exponents(self) -> tuple:
        return self.embedding.exponents


def _monomial(x: Sequence[float], J: Sequence[int]) -> float:
    v = 1.0
    for xi, e in zip(x, J):
        if e:
            v *= xi**e
    return v


def potential_value(T: ToricPotential, x: Sequence[float]) -> float:
    if len(x) != T.dim:
        raise ValueError(f"need {T.dim} coordinates")
    if any(c < 0 for c in x):
        raise ValueError("coordinates must be nonnegative")
    s = sum(_monomial(x, J) for J in T.exponents)
    if s <= 0:
        raise ValueError("potential undefined: monomial sum vanishes")
    return 2.0 * math.log(s)


def potential_partial(T: ToricPotential, x: Sequence[float], j: int) -> float:
    """dPhi~/dx_j = 2 sum_k (J_k)_j x^{J_k - e_j} / sum_k x^{J_k}.

    The reduced exponent J_k - e_j keeps the numerator finite on the
    coordinate hyperplanes, but callers must still pass positive x here.
    """
    if len(x) != T.dim:
        raise ValueError(f"need {T.dim} coordinates")
    if not 0 <= j < T.dim:
        raise ValueError("axis out of range")
    if any(c <= 0 for c in x):
        raise ValueError("coordinates must be positive")
    return _partial_extended(T, x, j)


def _partial_extended(T: ToricPotential, x: Sequence[float], j: int) -> float:
    num = 0.0
    den = 0.0
    for J in T.exponents:
        den += _monomial(x, J)
        if J[j]:
            reduced = list(J)
            reduced[j] -= 1
            num += J[j] * _monomial(x, reduced)
    if den == 0.0:
        raise ZeroDivisionError
    return 2.0 * num / den


def psi_map(T: ToricPotential, xi: Sequence[complex]) -> tuple[complex, ...]:
    """Psi(xi)_k = sqrt(dPhi~/dx_k at |xi|^2) * xi_k, extended continuously
    to the coordinate hyperplanes; raises if some partial is nonpositive."""
    if len(xi) != T.dim:
        raise ValueError(f"need {T.dim} coordinates")
    x = [abs(complex(c)) ** 2 for c in xi]
    partials = []
    try:
        partials = [_partial_extended(T, x, k) for k in range(T.dim)]
    except ZeroDivisionError:
        # the monomial sum vanishes on this hyperplane; step just inside
        x = [c if c > 0 else ZERO_DENOMINATOR_BUMP for c in x]
        warnings.warn(
            "potential degenerates on a coordinate hyperplane; evaluated "
            f"at distance {ZERO_DENOMINATOR_BUMP} instead",
            DegenerateJacobianWarning,
        )
        partials = [_partial_extended(T, x, k) for k in range(T.dim)]
    if any(p <= 0 for p in partials):
        raise ValueError("a partial is nonpositive; the map is not defined here")
    return tuple(math.sqrt(p) * complex(c) for p, c in zip(partials, xi))


def _xi_from_real(p: Sequence[float], n: int) -> list[complex]:
    return [complex(p[k], p[n + k]) for k in range(n)]


def _psi_real(T: ToricPotential, p: Sequence[float]) -> np.ndarray:
    n = T.dim
    out = psi_map(T, _xi_from_real(p, n))
    return np.array([w.real for w in out] + [w.imag for w in out])


def _potential_real(T: ToricPotential, p: Sequence[float]) -> float:
    n = T.dim
    x = [p[k] ** 2 + p[n + k] ** 2 for k in range(n)]
    return potential_value(T, x)


def _standard_form(n: int) -> np.ndarray:
    O = np.zeros((2 * n, 2 * n))
    O[:n, n:] = np.eye(n)
    O[n:, :n] = -np.eye(n)
    return O


def pullback_check(T: ToricPotential, xi: Sequence[complex]) -> float:
    """Max entrywise deviation between J^T Omega0 J for the real Jacobian J
    of Psi and the form matrix of (i/2) del delbar Phi at xi.

    Both sides are built by central finite differences; a numerically
    singular Jacobian is reported as a warning.
    """
    n = T.dim
    if len(xi) != n:
        raise ValueError(f"need {n} coordinates")
    p0 = np.array([complex(c).real for c in xi] + [complex(c).imag for c in xi])
    jac = np.zeros((2 * n, 2 * n))
    for b in range(2 * n):
        h = GRADIENT_STEP * max(1.0, abs(p0[b]))
        e = np.zeros(2 * n)
        e[b] = h
        jac[:, b] = (_psi_real(T, p0 + e) - _psi_real(T, p0 - e)) / (2 * h)
    if abs(np.linalg.det(jac)) < DEGENERATE_JACOBIAN_TOL:
        warnings.warn("Jacobian of Psi is numerically singular", DegenerateJacobianWarning)
    lhs = jac.T @ _standard_form(n) @ jac

    h = HESSIAN_STEP

    def second(a: int, b: int) -> float:
        ea = np.zeros(2 * n)
        eb = np.zeros(2 * n)
        ea[a] = h
        eb[b] = h
        return (
            _potential_real(T, p0 + ea + eb)
            - _potential_real(T, p0 + ea - eb)
            - _potential_real(T, p0 - ea + eb)
            + _potential_real(T, p0 - ea - eb)
        ) / (4 * h * h)

    H = np.zeros((n, n), dtype=complex)
    for k in range(n):
        for l in range(n):
            H[k, l] = 0.25 * (
                second(k, l) + second(n + k, n + l) + 1j * (second(k, n + l) - second(n + k, l))
            )
    phases = [1.0 + 0.0j] * n + [1.0j] * n
    axes = list(range(n)) + list(range(n))
    rhs = np.zeros((2 * n, 2 * n))
    for a in range(2 * n):
        for b in range(2 * n):
            rhs[a, b] = -(H[axes[a], axes[b]] * phases[a] * np.conj(phases[b])).imag
    return float(np.max(np.abs(lhs - rhs)))


def radial_quantity(T: ToricPotential, x: Sequence[float], j: int) -> float:
    """sqrt(x_j * dPhi~/dx_j) = |Psi(xi)_j| at x = |xi|^2; bounded above by
    sqrt(2 max_k (J_k)_j)."""
    if any(c <= 0 for c in x):
        raise ValueError("coordinates must be positive")
    return math.sqrt(x[j] * potential_partial(T, x, j))


def axis_radius_bound(T: ToricPotential, j: int) -> float:
    return math.sqrt(2 * max(J[j] for J in T.exponents))


def suggested_path_exponent(T: ToricPotential, j: int) -> int:
    """Smallest s certain to make the axis-j terms dominate along the path
    x = (t^s on axis j, t elsewhere): one more than the largest complementary
    degree appearing in the exponent set."""
    return 1 + max(sum(J) - J[j] for J in T.exponents)


def sup_along_path(T: ToricPotential, j: int, s: int, t_max: float) -> float:
    """radial_quantity along x_j = t^s, x_i = t (i != j), evaluated at t_max
    in log space so that huge powers like t^60 cannot overflow."""
    if t_max <= 1:
        raise ValueError("t_max must exceed 1")
    L = math.log(t_max)
    weights = [(J[j] * s + (sum(J) - J[j])) for J in T.exponents]
    m = max(weights)
    num = 0.0
    den = 0.0
    for J, w in zip(T.exponents, weights):
        e = math.exp((w - m) * L)
        den += e
        num += J[j] * e
    return math.sqrt(2 * num / den)


def fs_diastasis(u: Sequence[complex]) -> float:
    """log(1 + sum |u_j|^2): the distance-like potential of the ambient
    metric between the origin chart point and u; always >= 0."""
    return math.log1p(sum(abs(complex(c)) ** 2 for c in u))
