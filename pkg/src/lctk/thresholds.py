"""Exact log canonical thresholds of monomial ideals.

The primal route maximizes the refined Lelong number over the standard
simplex by exact LP; the dual route asks for the largest scaling of the
Newton polyhedron containing the all-ones point.  Both are rational and
must agree exactly, which the test suite enforces on every ideal it sees.
A numeric quadrature probe gives a heuristic integrability check; it is
never a certificate.
"""

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DegenerateMinorantError, UnitIdealError
from .simplex import OPTIMAL, solve_min

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LctCertificate:
    """Threshold c, the maximizing simplex point, and its Lelong value.

    Invariants: sum(x0) == 1, c * nu == 1, and nu equals
    refined_lelong(ideal, x0).  `isolated` records whether the ideal has an
    isolated zero; non-isolated ideals still get a valid threshold.
    """

    c: Fraction
    x0: tuple
    nu: Fraction
    isolated: bool = True


@dataclass(frozen=True)
class DiagonalWeights:
    """Ascending positive weights a_1 <= ... <= a_n of a diagonal ideal.

    `axis_order[k]` is the original axis whose weight landed in slot k
    after sorting (None when the order never mattered).
    """

    a: tuple
    axis_order: tuple = field(default=None)

    def __post_init__(self):
        if not self.a:
            raise ValueError("need at least one weight")
        if any(w <= 0 for w in self.a):
            raise ValueError("weights must be positive")
        if any(x > y for x, y in zip(self.a, self.a[1:])):
            raise ValueError("weights must be sorted ascending")


class UnitIdealWarning(UserWarning):
    """The weight of the unit ideal is bounded; its Lelong data is zero."""


def refined_lelong(ideal, x):
    """min over generators of <alpha, x>: the directional slope at x.

    Positively homogeneous of degree 1 and concave on the positive orthant.
    Returns 0 with a warning for the unit ideal.
    """
    x = tuple(Fraction(v) for v in x)
    if len(x) != ideal.n:
        raise ValueError(f"point has length {len(x)}, expected {ideal.n}")
    if any(v < 0 for v in x):
        raise ValueError("x must be componentwise nonnegative")
    if ideal.is_unit:
        warnings.warn("refined Lelong number of the unit ideal is 0",
                      UnitIdealWarning, stacklevel=2)
        return _ZERO
    return min(sum((Fraction(a) * v for a, v in zip(g, x)), _ZERO)
               for g in ideal.generators)


def _lex_min_optimal_point(gens, n, s_star):
    """Lexicographically smallest x on the optimal face of the Kiselman LP.

    Minimizes x_1, then x_2 with x_1 pinned, and so on; the result is a
    vertex of the optimal face and is unique, which makes every certificate
    deterministic.
    """
    k = len(gens)
    fixed = []
    for axis in range(n):
        # variables: x_1..x_n, u_1..u_k with <alpha, x> - u = s*
        rows = []
        rhs = []
        for idx, g in enumerate(gens):
            slack = [_ZERO] * k
            slack[idx] = -_ONE
            rows.append([Fraction(g[j]) for j in range(n)] + slack)
            rhs.append(s_star)
        rows.append([_ONE] * n + [_ZERO] * k)
        rhs.append(_ONE)
        for j, v in enumerate(fixed):
            row = [_ZERO] * (n + k)
            row[j] = _ONE
            rows.append(row)
            rhs.append(v)
        cost = [_ZERO] * (n + k)
        cost[axis] = _ONE
        res = solve_min(rows, rhs, cost)
        assert res.status == OPTIMAL
        fixed.append(res.x[axis])
    return tuple(fixed)


def kiselman_lct(ideal):
    """Exact threshold certificate via max over the simplex of the refined
    Lelong number.

    Solves max s subject to <alpha, x> >= s for every generator, x in the
    standard simplex, as an exact LP; then c = 1/s.  Ties among optimal
    vertices break to the lexicographically smallest point.
    """
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no threshold")
    from .lattice import is_isolated_zero

    gens = ideal.generators
    n = ideal.n
    k = len(gens)
    # variables: x_1..x_n, s, u_1..u_k
    rows = []
    rhs = []
    for idx, g in enumerate(gens):
        slack = [_ZERO] * k
        slack[idx] = -_ONE
        rows.append([Fraction(g[j]) for j in range(n)] + [-_ONE] + slack)
        rhs.append(_ZERO)
    rows.append([_ONE] * n + [_ZERO] * (k + 1))
    rhs.append(_ONE)
    cost = [_ZERO] * n + [-_ONE] + [_ZERO] * k
    res = solve_min(rows, rhs, cost)
    assert res.status == OPTIMAL
    s_star = res.x[n]
    if s_star == 0:
        # unreachable for non-unit ideals: every generator has positive
        # pairing with the barycenter
        raise UnitIdealError("degenerate zero slope")
    x0 = _lex_min_optimal_point(gens, n, s_star)
    return LctCertificate(c=_ONE / s_star, x0=x0, nu=s_star,
                          isolated=is_isolated_zero(ideal))


def howald_lct(ideal):
    """Dual route: 1 / min over convex generator combinations of the max
    coordinate.

    The all-ones point enters c * P(J) exactly when the scaled polyhedron
    reaches it, and LP duality makes this agree with kiselman_lct.
    """
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no threshold")
    gens = ideal.generators
    n = ideal.n
    k = len(gens)
    # variables: lambda_1..lambda_k, y, slack_1..slack_n
    rows = []
    rhs = []
    for i in range(n):
        slack = [_ZERO] * n
        slack[i] = _ONE
        rows.append([Fraction(g[i]) for g in gens] + [-_ONE] + slack)
        rhs.append(_ZERO)
    rows.append([_ONE] * k + [_ZERO] * (n + 1))
    rhs.append(_ONE)
    cost = [_ZERO] * k + [_ONE] + [_ZERO] * n
    res = solve_min(rows, rhs, cost)
    assert res.status == OPTIMAL
    y_star = res.objective
    return _ONE / y_star


def diagonal_lct(weights):
    """Threshold of a diagonal ideal: the sum of inverse weights."""
    a = weights.a if isinstance(weights, DiagonalWeights) else tuple(
        Fraction(w) for w in weights)
    if any(w <= 0 for w in a):
        raise ValueError("weights must be positive")
    return sum((_ONE / Fraction(w) for w in a), _ZERO)


def worst_diagonal_minorant(ideal):
    """Diagonal weights nu/x0_j of the threshold-preserving comparison ideal.

    The associated diagonal weight dominates the ideal's weight function and
    has the same threshold, because sum(x0_j) / nu = 1 / nu.  Fails when the
    maximizing point touches the simplex boundary.
    """
    cert = kiselman_lct(ideal)
    if any(v == 0 for v in cert.x0):
        raise DegenerateMinorantError(
            f"maximizing point {cert.x0} has a zero coordinate")
    paired = sorted(
        ((cert.nu / v, axis) for axis, v in enumerate(cert.x0)),
        key=lambda p: (p[0], p[1]))
    return DiagonalWeights(a=tuple(p[0] for p in paired),
                           axis_order=tuple(p[1] for p in paired))


@dataclass(frozen=True)
class ProbeConfig:
    grid: int = 128               # quadrature points per axis
    schedule: tuple = (4, 8, 16, 32)  # doubling box sizes R
    theta: float = 0.05           # ratio tolerance
    max_points: int = 1 << 24     # resource cap on grid size


@dataclass(frozen=True)
class ProbeResult:
    verdict: str                  # converges | diverges | inconclusive
    trail: tuple                  # (R, integral, ratio-or-None) triples
    note: str = ""


def numeric_integrability_probe(ideal, c, config=ProbeConfig()):
    """Heuristic quadrature check of e^{-2c phi} integrability.

    Evaluates I(c, R) = int_{[0,R]^n} exp(2c nu_min(x) - 2 sum x_j) dx by
    trapezoid quadrature for growing R.  Ratios of successive integrals
    near 1 indicate convergence; ratios bounded away from 1 indicate
    divergence.  Never a certificate: near the exact threshold the verdict
    is unreliable.
    """
    if ideal.is_unit:
        raise UnitIdealError("probe undefined for the unit ideal")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    n = ideal.n
    if config.grid ** n > config.max_points:
        return ProbeResult("inconclusive", (),
                           note="grid exceeds max_points cap")
    cf = float(c)
    gens = [tuple(float(e) for e in g) for g in ideal.generators]
    trail = []
    prev = None
    for R in config.schedule:
        axes = [np.linspace(0.0, float(R), config.grid) for _ in range(n)]
        shape = [1] * n
        nu = None
        tot = None
        for axis, ax in enumerate(axes):
            shape_a = shape.copy()
            shape_a[axis] = config.grid
            ax = ax.reshape(shape_a)
            tot = ax if tot is None else tot + ax
        for g in gens:
            val = None
            for axis, ax in enumerate(axes):
                shape_a = shape.copy()
                shape_a[axis] = config.grid
                term = (g[axis] * ax).reshape(shape_a)
                val = term if val is None else val + term
            nu = val if nu is None else np.minimum(nu, val)
        integrand = np.exp(2.0 * cf * nu - 2.0 * tot)
        w = np.ones(config.grid)
        w[0] = w[-1] = 0.5
        for axis in range(n):
            shape_a = shape.copy()
            shape_a[axis] = config.grid
            integrand = integrand * w.reshape(shape_a)
        h = float(R) / (config.grid - 1)
        val = float(np.sum(integrand)) * h ** n
        ratio = None if prev is None else val / prev
        trail.append((R, val, ratio))
        prev = val
    last_ratio = trail[-1][2]
    if last_ratio is None:
        return ProbeResult("inconclusive", tuple(trail),
                           note="schedule too short")
    if last_ratio <= 1.0 + config.theta:
        verdict = "converges"
    elif last_ratio >= 1.0 + 2.0 * config.theta:
        verdict = "diverges"
    else:
        verdict = "inconclusive"
    return ProbeResult(verdict, tuple(trail))
