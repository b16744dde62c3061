"""Per-ideal verification reports and seeded random sweeps.

A report runs every exact cross-check the package knows about on one
isolated-zero monomial ideal: primal/dual threshold agreement, certificate
identities, sequence inequalities, the bound chain, the covolume oracle,
and the diagonal-minorant chain.  A single failing check would indict the
implementation, not the mathematics, so the CLI turns any failure into a
dedicated exit code.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import bounds as bounds_mod
from .bounds import EQ, GT, build_bounds_report, f_value
from .lattice import is_isolated_zero, normalize_generators
from .multiplicities import (
    covolume_times_factorial,
    first_multiplicity,
    mixed_multiplicities,
    validate_sequence,
)
from .thresholds import (
    diagonal_lct,
    howald_lct,
    kiselman_lct,
    refined_lelong,
    worst_diagonal_minorant,
)


@dataclass(frozen=True)
class IdealReport:
    ideal: object
    certificate: object
    howald: Fraction
    mults: object                # MultiplicitySequence or None
    bounds: object               # BoundsReport or None
    checks: dict
    sharp: object                # bool or None
    slack: object                # Fraction (c - main bound) or None

    @property
    def all_ok(self):
        return all(self.checks.values())


def build_ideal_report(ideal):
    """Full verification report; requires an isolated zero."""
    if not is_isolated_zero(ideal):
        raise ValueError(f"report requires an isolated zero: {ideal}")
    cert = kiselman_lct(ideal)
    dual = howald_lct(ideal)
    checks = {}
    checks["duality"] = cert.c == dual
    checks["certificate_identities"] = (
        sum(cert.x0) == 1
        and cert.c * cert.nu == 1
        and refined_lelong(ideal, cert.x0) == cert.nu)
    n = ideal.n
    uniform = (Fraction(1, n),) * n
    min_degree = min(sum(g) for g in ideal.generators)
    checks["lelong_degree_identity"] = (
        n * refined_lelong(ideal, uniform) == min_degree)

    seq = mixed_multiplicities(ideal)
    e = seq.e
    checks["e1_is_min_degree"] = e[1] == first_multiplicity(ideal) \
        and e[1] == min_degree
    checks["sequence_inequalities"] = validate_sequence(seq).all_ok
    brep = build_bounds_report(seq, cert.c)
    checks["in_cone"] = brep.in_cone
    checks["main_bound_le_c"] = brep.main <= cert.c
    checks["skoda_interval"] = brep.skoda_low <= cert.c <= brep.skoda_high
    checks["geometric_bound_le_c"] = brep.geometric_cmp in (GT, EQ)
    if n >= 2:
        checks["mixed_bound_le_c"] = brep.mixed_cmp in (GT, EQ)
    checks["chain"] = brep.chain.ok
    if n <= 3:
        checks["covolume_matches_top"] = (
            covolume_times_factorial(ideal) == e[n])
    if all(v > 0 for v in cert.x0):
        psi = worst_diagonal_minorant(ideal)
        cumulative = []
        acc = Fraction(1)
        for w in psi.a:
            acc *= w
            cumulative.append(acc)
        # the minorant has the same threshold, and the bound functional
        # is monotone between the two sequences
        checks["minorant_chain"] = (
            diagonal_lct(psi) == cert.c
            and f_value(cumulative) == cert.c
            and f_value(e[1:]) == brep.main
            and f_value(e[1:]) <= f_value(cumulative))
    slack = cert.c - brep.main
    return IdealReport(
        ideal=ideal, certificate=cert, howald=dual, mults=seq,
        bounds=brep, checks=checks, sharp=brep.main == cert.c, slack=slack)


@dataclass(frozen=True)
class RunConfig:
    """Parameters of a seeded random verification sweep."""

    seed: int = 0
    dim: int = 2
    max_degree: int = 5
    count: int = 100
    probe_grid: int = 128
    probe_theta: float = 0.05
    workers: int = 1
    base_cap: int = 64

    def __post_init__(self):
        if self.dim < 1 or self.count < 1:
            raise ValueError("dim and count must be >= 1")
        if not 0 < self.probe_theta < 1:
            raise ValueError("theta must lie in (0, 1)")


def random_isolated_ideal(rng, dim, max_degree):
    """Pure powers on every axis plus up to 2*dim random extra generators."""
    gens = []
    for axis in range(dim):
        k = rng.randint(1, max_degree)
        gens.append(tuple(k if i == axis else 0 for i in range(dim)))
    for _ in range(rng.randint(0, 2 * dim)):
        v = tuple(rng.randint(0, max_degree) for _ in range(dim))
        if any(v):
            gens.append(v)
    return normalize_generators(gens, dim)


@dataclass
class SweepSummary:
    config: RunConfig
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    min_slack: object = None
    min_slack_index: int = -1
    f_trials: int = 0
    f_passed: int = 0
    failures: list = field(default_factory=list)
    items: list = field(default_factory=list)

    @property
    def all_ok(self):
        return self.failed == 0 and self.f_passed == self.f_trials


def _sweep_item(args):
    index, ideal = args
    from .errors import ResourceCapError

    try:
        rep = build_ideal_report(ideal)
    except ResourceCapError:
        return index, ideal, None
    return index, ideal, rep


def run_random_sweep(config, *, keep_items=False):
    """Seeded bulk verification; reproducible item by item from the seed.

    Ideals draw first, so the stream does not depend on worker scheduling;
    a worker pool may evaluate items concurrently but results aggregate in
    input order.
    """
    rng = random.Random(config.seed)
    ideals = [random_isolated_ideal(rng, config.dim, config.max_degree)
              for _ in range(config.count)]
    summary = SweepSummary(config=config)
    tasks = list(enumerate(ideals))
    if config.workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_sweep_item, tasks))
    else:
        results = [_sweep_item(t) for t in tasks]
    for index, ideal, rep in results:
        if rep is None:
            summary.skipped += 1
            continue
        if rep.all_ok:
            summary.passed += 1
        else:
            summary.failed += 1
            bad = [name for name, ok in rep.checks.items() if not ok]
            summary.failures.append((index, ideal, bad))
        if summary.min_slack is None or rep.slack < summary.min_slack:
            summary.min_slack = rep.slack
            summary.min_slack_index = index
        if keep_items:
            summary.items.append((index, ideal, rep))
    # monotonicity trials for the bound functional on dominating pairs
    for _ in range(config.count):
        a, b = bounds_mod.random_dominating_pair(rng, config.dim)
        summary.f_trials += 1
        if f_value(a) <= f_value(b):
            summary.f_passed += 1
    return summary
