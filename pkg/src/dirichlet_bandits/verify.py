"""Randomized property suites certifying the solver's structural guarantees.

Every suite draws instances from a seeded generator, evaluates an inequality
margin per instance (positive = satisfied with room, negative = violated),
and reports every instance whose margin falls below the slack.  Float-mode
assertions use a slack of 1e-9; exact-mode runs use zero slack, since all
generated numerics are dyadic rationals (multiples of 1/64) and therefore
representable without error in both arithmetic backends.

Instances are reproducible: instance ``i`` of a suite seeded with ``s`` uses
an rng spawned from ``SeedSequence(s, spawn_key=(i,))``, so suites can run
across processes in any order and still produce identical reports.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

import numpy as np

from .discount import (
    DiscountSeq,
    drop_first,
    is_regular,
    make_discount,
    make_truncated_geometric,
    make_uniform,
)
from .errors import GeneratorFailedError, InvalidParameterError
from .index import RESIDUAL_TOL, break_even_value
from .index import break_even_observation
from .measures import (
    DiscreteMeasure,
    leq_icx,
    make_measure,
    mean_preserving_spread,
    mix,
    point_mass,
    scale,
    shift,
)
from .oracle import brute_force_value
from .solver import (
    Action,
    BanditSolver,
    BanditState,
    DEFAULT_OPTIONS,
    EXACT_OPTIONS,
    SolverOptions,
    value,
)

#: Resolution of generated numerics: multiples of 1/GRID are dyadic, hence
#: exactly representable as floats and as rationals.
GRID = 64

SLACK_FLOAT = 1e-9
STRICT_MARGIN = 1e-7

DEFAULT_TRIALS = {
    "lemma1": 100,
    "thm1": 200,
    "thm2": 200,
    "lemma3": 100,
    "lemma4": 100,
    "prop1": 100,
    "strictness": 100,
    "oracle": 100,
    "montecarlo": 50,
}


@dataclass(frozen=True)
class InstanceGen:
    """Seeded instance generator; every derived instance satisfies the
    bandit-state type invariants by construction."""

    seed: int = 0
    max_horizon: int = 6
    max_atoms: int = 3
    location_range: tuple[float, float] = (0.0, 1.0)
    mass_range: tuple[float, float] = (0.5, 4.0)

    def rng(self, index: int) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(self.seed, spawn_key=(index,)))


def _dyadic(rng, lo, hi) -> Fraction:
    """Dyadic rational (multiple of 1/GRID) in [lo, hi]."""
    k0 = math.ceil(lo * GRID)
    k1 = max(k0, math.floor(hi * GRID))
    return Fraction(int(rng.integers(k0, k1 + 1)), GRID)


def _dyadic_positive(rng, hi) -> Fraction:
    """Dyadic rational in (0, hi]."""
    k1 = max(1, math.floor(hi * GRID))
    return Fraction(int(rng.integers(1, k1 + 1)), GRID)


def random_measure(
    gen: InstanceGen,
    rng,
    *,
    atoms: int | None = None,
    min_atoms: int = 1,
    normalized: bool = False,
    exact: bool = False,
) -> DiscreteMeasure:
    """Random measure with distinct dyadic locations and dyadic weights."""
    s = atoms if atoms is not None else int(rng.integers(min_atoms, gen.max_atoms + 1))
    lo, hi = gen.location_range
    k0 = math.ceil(lo * GRID)
    k1 = math.floor(hi * GRID)
    ks = rng.choice(np.arange(k0, k1 + 1), size=s, replace=False)
    locs = [Fraction(int(k), GRID) for k in sorted(ks.tolist())]
    if normalized:
        if s == 1:
            weights = [Fraction(1)]
        else:
            cuts = sorted(int(c) for c in rng.choice(np.arange(1, GRID), size=s - 1, replace=False))
            edges = [0] + cuts + [GRID]
            weights = [Fraction(edges[i + 1] - edges[i], GRID) for i in range(s)]
    else:
        wlo, whi = gen.mass_range
        weights = [
            _dyadic(rng, max(1.0 / GRID, wlo / s), max(2.0 / GRID, whi / s))
            for _ in range(s)
        ]
    return make_measure(zip(locs, weights), exact=exact)


def random_discount(
    gen: InstanceGen,
    rng,
    *,
    kind: str = "any",
    min_n: int = 1,
    max_n: int | None = None,
    exact: bool = False,
) -> DiscountSeq:
    """Random discount sequence.

    kind "any" mixes uniform, truncated geometric, arbitrary nonnegative
    (zeros allowed, possibly not regular), and ratio-built sequences;
    "regular_positive" draws only from the families that are regular with
    strictly positive weights.  Ratio-built sequences have nonincreasing
    tail ratios, which forces regularity.
    """
    hi_n = max_n if max_n is not None else gen.max_horizon
    n = int(rng.integers(min_n, hi_n + 1))
    if kind == "any":
        fam = ("uniform", "geometric", "arbitrary", "ratio")[int(rng.integers(0, 4))]
    elif kind in ("regular", "regular_positive"):
        fam = ("uniform", "geometric", "ratio")[int(rng.integers(0, 3))]
    else:
        raise InvalidParameterError(f"unknown discount kind {kind!r}")
    if fam == "uniform":
        return make_uniform(n, exact=exact)
    if fam == "geometric":
        beta = Fraction(int(rng.integers(1, GRID)), GRID)
        return make_truncated_geometric(beta, n, exact=exact)
    if fam == "arbitrary":
        ks = [int(k) for k in rng.integers(0, GRID + 1, size=n)]
        if not any(ks):
            ks[int(rng.integers(0, n))] = 1
        return make_discount([Fraction(k, GRID) for k in ks], exact=exact)
    ratios = sorted((int(k) for k in rng.integers(1, GRID, size=n - 1)), reverse=True)
    tails = [Fraction(1)]
    for k in ratios:
        tails.append(tails[-1] * Fraction(k, GRID))
    vals = [tails[i] - tails[i + 1] for i in range(n - 1)] + [tails[-1]]
    return make_discount(vals, exact=exact)


def random_state(
    gen: InstanceGen,
    rng,
    *,
    kind: str = "any",
    min_n: int = 1,
    max_n: int | None = None,
    exact: bool = False,
) -> BanditState:
    arm1 = random_measure(gen, rng, exact=exact)
    arm2 = random_measure(gen, rng, exact=exact)
    A = random_discount(gen, rng, kind=kind, min_n=min_n, max_n=max_n, exact=exact)
    return BanditState(arm1, arm2, A)


# ---------------------------------------------------------------------------
# suite plumbing
# ---------------------------------------------------------------------------


@dataclass
class SuiteReport:
    """Outcome of one property suite.

    ``violations`` lists every instance whose margin fell below the slack;
    ``worst_margin`` is the minimum margin over all instances.
    """

    suite_name: str
    seed: int
    trials: int
    violations: list[tuple[int, float]]
    worst_margin: float
    elapsed: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        # Wall-clock time stays out so that report files are byte-stable
        # for a fixed seed and trial count.
        return {
            "suite": self.suite_name,
            "seed": self.seed,
            "trials": self.trials,
            "violations": [
                {"instance": i, "margin": m} for i, m in self.violations
            ],
            "worst_margin": self.worst_margin,
            "details": self.details,
        }


def format_reports(reports) -> str:
    """Fixed-width human-readable table, one row per suite."""
    lines = [
        f"{'suite':<12} {'trials':>7} {'violations':>11} {'worst_margin':>14} {'elapsed':>9}"
    ]
    for r in reports:
        lines.append(
            f"{r.suite_name:<12} {r.trials:>7} {len(r.violations):>11} "
            f"{r.worst_margin:>14.4g} {r.elapsed:>8.2f}s"
        )
        for i, m in r.violations:
            lines.append(f"    violation: instance={i} margin={m:.4g}")
        for k, v in r.details.items():
            lines.append(f"    {k} = {v}")
    return "\n".join(lines)


def _map_instances(worker, trials, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunk = max(1, trials // (4 * jobs))
            return list(ex.map(worker, range(trials), chunksize=chunk))
    return [worker(i) for i in range(trials)]


def _collect(name, gen, trials, worker, slack, jobs, details=None) -> SuiteReport:
    t0 = time.perf_counter()
    margins = [float(m) for m in _map_instances(worker, trials, jobs)]
    violations = [(i, m) for i, m in enumerate(margins) if m < -slack]
    report = SuiteReport(
        name,
        gen.seed,
        trials,
        violations,
        min(margins),
        time.perf_counter() - t0,
    )
    if details:
        report.details.update(details(margins))
    return report


def _slack(slack, exact):
    if slack is not None:
        return slack
    return 0.0 if exact else SLACK_FLOAT


def _opts(exact: bool) -> SolverOptions:
    return EXACT_OPTIONS if exact else DEFAULT_OPTIONS


# ---------------------------------------------------------------------------
# suite workers (module level so process pools can pickle them)
# ---------------------------------------------------------------------------


def _convexity_margin(gen, index, *, grid_points, exact):
    rng = gen.rng(index)
    base = random_measure(gen, rng, exact=exact)
    arm2 = random_measure(gen, rng, exact=exact)
    A = random_discount(gen, rng, kind="any", exact=exact)
    u = _dyadic(rng, *gen.location_range)
    v = _dyadic(rng, *gen.location_range)
    r = _dyadic_positive(rng, 2.0)
    opts = _opts(exact)
    values = []
    for k in range(grid_points):
        rho = Fraction(k, grid_points - 1) * r
        arm1 = mix(
            [(1, base), (rho, point_mass(u, exact=exact)), (r - rho, point_mass(v, exact=exact))],
            exact=exact,
        )
        values.append(value(BanditState(arm1, arm2, A), opts).w)
    return min(
        values[k + 1] - 2 * values[k] + values[k - 1]
        for k in range(1, grid_points - 1)
    )


def _icx_pair(gen, rng, exact):
    """A pair F, Ft with F below Ft in the increasing convex order, built by
    composing upward shifts with mean-preserving spreads."""
    F = random_measure(gen, rng, normalized=True, exact=exact)
    Ft = F
    for _ in range(int(rng.integers(1, 4))):
        if rng.random() < 0.5:
            Ft = shift(Ft, _dyadic(rng, 0.0, 0.5))
        else:
            idx = int(rng.integers(0, len(Ft)))
            Ft = mean_preserving_spread(Ft, idx, _dyadic_positive(rng, 0.5))
    chk = leq_icx(F, Ft)
    if not chk.holds:
        raise GeneratorFailedError(
            f"constructed pair fails the icx self-check at t={chk.witness}"
        )
    return F, Ft


def _icx_margin(gen, index, *, exact):
    rng = gen.rng(index)
    F, Ft = _icx_pair(gen, rng, exact)
    M = _dyadic(rng, *gen.mass_range)
    arm2 = random_measure(gen, rng, exact=exact)
    A = random_discount(gen, rng, kind="any", exact=exact)
    opts = _opts(exact)
    w_lo = value(BanditState(scale(F, M), arm2, A), opts).w
    w_hi = value(BanditState(scale(Ft, M), arm2, A), opts).w
    return w_hi - w_lo


def _weight_margin(gen, index, *, exact):
    rng = gen.rng(index)
    F = random_measure(gen, rng, normalized=True, exact=exact)
    M = _dyadic(rng, *gen.mass_range)
    Mt = M + _dyadic_positive(rng, 2.0)
    arm2 = random_measure(gen, rng, exact=exact)
    A = random_discount(gen, rng, kind="any", exact=exact)
    opts = _opts(exact)
    w_small = value(BanditState(scale(F, M), arm2, A), opts).w
    w_large = value(BanditState(scale(F, Mt), arm2, A), opts).w
    margins = [w_small - w_large]
    if is_regular(A):
        lam_small = break_even_value(scale(F, M), A, tol=1e-10)
        lam_large = break_even_value(scale(F, Mt), A, tol=1e-10)
        margins.append(lam_small.value - lam_large.value)
        margins.append(RESIDUAL_TOL - max(lam_small.residual, lam_large.residual))
    return min(margins)


def _dilution_margin(gen, index, *, exact):
    rng = gen.rng(index)
    alpha = random_measure(gen, rng, exact=exact)
    lam = _dyadic(rng, *gen.location_range)
    A = random_discount(gen, rng, kind="any", exact=exact)
    known = point_mass(lam, exact=exact)
    opts = _opts(exact)
    base_w = value(BanditState(alpha, known, A), opts).w
    margins = []
    for c in (Fraction(1, 2), Fraction(1), Fraction(2)):
        diluted = mix([(1, alpha), (c, point_mass(lam, exact=exact))], exact=exact)
        margins.append(base_w - value(BanditState(diluted, known, A), opts).w)
    return min(margins)


def _smoothing_margin(gen, index, *, theta_grid, exact):
    rng = gen.rng(index)
    alpha = random_measure(gen, rng, exact=exact)
    F = random_measure(gen, rng, normalized=True, exact=exact)
    arm2 = random_measure(gen, rng, exact=exact)
    A1 = drop_first(random_discount(gen, rng, kind="any", min_n=2, exact=exact))
    L = _dyadic_positive(rng, 2.0)
    opts = _opts(exact)

    def expected_value(theta):
        terms = []
        for x, p in F.atoms:
            arm1 = mix(
                [(1, alpha), (theta, F), (L - theta, point_mass(x, exact=exact))],
                exact=exact,
            )
            terms.append(p * value(BanditState(arm1, arm2, A1), opts).w)
        return sum(terms) if exact else math.fsum(terms)

    values = [
        expected_value(Fraction(k, theta_grid - 1) * L) for k in range(theta_grid)
    ]
    return min(values[k] - values[k + 1] for k in range(theta_grid - 1))


def _breakeven_margin(gen, index, *, tol):
    rng = gen.rng(index)
    arm = random_measure(gen, rng)
    A = random_discount(gen, rng, kind="regular_positive", min_n=2)
    lam = break_even_value(arm, A, tol)
    b = break_even_observation(arm, A, tol)
    return min(b.value - lam.value, RESIDUAL_TOL - lam.residual)


def _strictness_gap(gen, index):
    rng = gen.rng(index)
    F = random_measure(gen, rng, normalized=True, min_atoms=2)
    M = _dyadic(rng, *gen.mass_range)
    Mt = M + _dyadic_positive(rng, 2.0)
    n = int(rng.integers(2, gen.max_horizon + 1))
    A = make_uniform(n)
    lam_small = break_even_value(scale(F, M), A, tol=1e-10)
    lam_large = break_even_value(scale(F, Mt), A, tol=1e-10)
    return lam_small.value - lam_large.value


def _strictness_margin(gen, index, *, strict_margin):
    return _strictness_gap(gen, index) - strict_margin


def _oracle_margin(gen, index, *, tol):
    rng = gen.rng(index)
    n = int(rng.integers(1, 5))
    arm1 = random_measure(gen, rng, atoms=int(rng.integers(1, 4)))
    arm2 = random_measure(gen, rng, atoms=int(rng.integers(1, 4)))
    A = random_discount(gen, rng, kind="any", min_n=n, max_n=n)
    state = BanditState(arm1, arm2, A)
    dp = value(state).w
    bf = brute_force_value(state)
    return tol - abs(dp - bf)


def _montecarlo_margin(gen, index, *, samples):
    rng = gen.rng(index)
    state = random_state(gen, rng, kind="any")
    dp = value(state).w
    seed = int(rng.integers(0, 2**63))
    mean_v, se = simulate_policy(state, samples, seed)
    # The absolute floor absorbs summation-order rounding when the standard
    # error is exactly zero (both arms degenerate).
    return 4.0 * se + 1e-12 - abs(mean_v - dp)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def check_reallocation_convexity(
    gen=None, trials=None, *, grid_points=9, slack=None, exact=False, jobs=1
) -> SuiteReport:
    """Value is convex in the amount of point mass moved between two
    locations of one arm's prior, checked by second differences on a grid."""
    gen = gen or InstanceGen()
    if grid_points < 3:
        raise InvalidParameterError("convexity grid needs at least 3 points")
    trials = trials or DEFAULT_TRIALS["lemma1"]
    worker = partial(_convexity_margin, gen, grid_points=grid_points, exact=exact)
    return _collect("lemma1", gen, trials, worker, _slack(slack, exact), jobs)


def check_icx_monotonicity(gen=None, trials=None, *, slack=None, exact=False, jobs=1) -> SuiteReport:
    """Raising one arm's prior mean distribution in the increasing convex
    order never lowers the value."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["thm1"]
    worker = partial(_icx_margin, gen, exact=exact)
    return _collect("thm1", gen, trials, worker, _slack(slack, exact), jobs)


def check_weight_monotonicity(gen=None, trials=None, *, slack=None, exact=False, jobs=1) -> SuiteReport:
    """Raising an arm's prior weight (same mean distribution) never raises
    the value; with regular discounts the break-even value drops too."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["thm2"]
    worker = partial(_weight_margin, gen, exact=exact)
    return _collect("thm2", gen, trials, worker, _slack(slack, exact), jobs)


def check_known_atom_dilution(gen=None, trials=None, *, slack=None, exact=False, jobs=1) -> SuiteReport:
    """Adding prior mass at the known arm's payoff level never raises the
    value of playing against that known arm."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["lemma3"]
    worker = partial(_dilution_margin, gen, exact=exact)
    return _collect("lemma3", gen, trials, worker, _slack(slack, exact), jobs)


def check_mass_smoothing(
    gen=None, trials=None, *, theta_grid=5, slack=None, exact=False, jobs=1
) -> SuiteReport:
    """Replacing a random unit of added prior mass by its average measure
    (same total, no information) never raises the expected value."""
    gen = gen or InstanceGen()
    if theta_grid < 2:
        raise InvalidParameterError("smoothing grid needs at least 2 points")
    trials = trials or DEFAULT_TRIALS["lemma4"]
    worker = partial(_smoothing_margin, gen, theta_grid=theta_grid, exact=exact)
    return _collect("lemma4", gen, trials, worker, _slack(slack, exact), jobs)


def check_breakeven_bound(gen=None, trials=None, *, slack=1e-8, tol=1e-9, jobs=1) -> SuiteReport:
    """The break-even observation never falls below the break-even value
    (regular, strictly positive discounts, at least two stages)."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["prop1"]
    worker = partial(_breakeven_margin, gen, tol=tol)
    return _collect("prop1", gen, trials, worker, slack, jobs)


def check_strict_weight_gaps(
    gen=None, trials=None, *, strict_margin=STRICT_MARGIN, jobs=1
) -> SuiteReport:
    """Reporting-grade suite: under uniform discounting with a nondegenerate
    prior mean, the break-even value should drop strictly as the prior
    weight grows.  Instances whose gap falls below ``strict_margin`` are
    listed for review; no quantitative lower bound exists, so callers treat
    this suite as informational rather than pass/fail."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["strictness"]
    worker = partial(_strictness_margin, gen, strict_margin=strict_margin)

    def details(margins):
        gaps = sorted(m + strict_margin for m in margins)
        return {
            "strict_margin": strict_margin,
            "min_gap": gaps[0],
            "median_gap": gaps[len(gaps) // 2],
            "max_gap": gaps[-1],
        }

    return _collect("strictness", gen, trials, worker, 0.0, jobs, details)


def check_oracle_equivalence(gen=None, trials=None, *, tol=1e-10, jobs=1) -> SuiteReport:
    """Memoized solver agrees with the exhaustive history-tree oracle."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["oracle"]
    worker = partial(_oracle_margin, gen, tol=tol)
    return _collect("oracle", gen, trials, worker, 0.0, jobs)


def check_monte_carlo(gen=None, trials=None, *, samples=100_000, jobs=1) -> SuiteReport:
    """Simulated optimal play agrees with the solver value within four
    standard errors."""
    gen = gen or InstanceGen()
    trials = trials or DEFAULT_TRIALS["montecarlo"]
    worker = partial(_montecarlo_margin, gen, samples=samples)
    return _collect("montecarlo", gen, trials, worker, 0.0, jobs)


SUITES = {
    "lemma1": check_reallocation_convexity,
    "thm1": check_icx_monotonicity,
    "thm2": check_weight_monotonicity,
    "lemma3": check_known_atom_dilution,
    "lemma4": check_mass_smoothing,
    "prop1": check_breakeven_bound,
    "strictness": check_strict_weight_gaps,
    "oracle": check_oracle_equivalence,
    "montecarlo": check_monte_carlo,
}

SUITE_ORDER = tuple(SUITES)

#: Suites whose violations are informational, not failures.
REPORT_ONLY_SUITES = frozenset({"strictness"})


def run_suites(names, gen=None, trials=None, *, jobs=1) -> list[SuiteReport]:
    """Run the named suites (or all of them) and return their reports."""
    gen = gen or InstanceGen()
    if names == "all" or names == ["all"]:
        names = SUITE_ORDER
    reports = []
    for name in names:
        if name not in SUITES:
            raise InvalidParameterError(f"unknown suite {name!r}")
        reports.append(SUITES[name](gen, trials, jobs=jobs))
    return reports


# ---------------------------------------------------------------------------
# Monte Carlo policy evaluation
# ---------------------------------------------------------------------------


def simulate_policy(
    state: BanditState, trials: int, seed: int, *, options=None
) -> tuple[float, float]:
    """Estimate the value by simulating optimal play.

    At each stage the action comes from the solver's report at the current
    posterior, the pulled arm's observation is drawn from its predictive
    (ties break toward arm 1), and discounted payoffs accumulate.  Returns
    (mean, standard error); deterministic given the seed.
    """
    if trials < 1:
        raise InvalidParameterError("trials must be at least 1")
    opts = options or DEFAULT_OPTIONS
    if opts.exact:
        opts = SolverOptions("float", opts.tie_tol, opts.memo_cap, opts.parallel)
    n = len(state.discount.values)
    if n == 0:
        return 0.0, 0.0
    solver = BanditSolver(state, opts)
    a = [float(v) for v in solver.discounts]

    node_of: dict = {}
    locs_tab: list = []
    cum_tab: list = []
    kids_tab: list = []

    def build(c1, c2, stage):
        key = (c1, c2)
        if key in node_of:
            return node_of[key]
        idx = len(locs_tab)
        node_of[key] = idx
        locs_tab.append(None)
        cum_tab.append(None)
        kids_tab.append(None)
        if stage < n:
            rep = solver.report(c1, c2)
            arm = 2 if rep.action is Action.ARM2 else 1
            counts = c1 if arm == 1 else c2
            locs, weights, mass = solver.posterior_rows(arm, counts)
            kids = []
            for j in range(len(locs)):
                child = counts[:j] + (counts[j] + 1,) + counts[j + 1 :]
                if arm == 1:
                    kids.append(build(child, c2, stage + 1))
                else:
                    kids.append(build(c1, child, stage + 1))
            cum = np.cumsum(np.asarray([float(w) for w in weights])) / float(mass)
            cum[-1] = 1.0
            locs_tab[idx] = np.asarray([float(x) for x in locs])
            cum_tab[idx] = cum
            kids_tab[idx] = np.asarray(kids, dtype=np.int64)
        else:
            locs_tab[idx] = np.zeros(0)
            cum_tab[idx] = np.ones(1)
            kids_tab[idx] = np.zeros(0, dtype=np.int64)
        return idx

    z1, z2 = solver.root_counts()
    root = build(z1, z2, 0)

    rng = np.random.default_rng(seed)
    cur = np.full(trials, root, dtype=np.int64)
    payoff = np.zeros(trials)
    for t in range(n):
        u = rng.random(trials)
        obs = np.empty(trials)
        nxt = np.empty(trials, dtype=np.int64)
        for node in np.unique(cur):
            mask = cur == node
            k = np.searchsorted(cum_tab[node], u[mask], side="right")
            np.clip(k, 0, len(cum_tab[node]) - 1, out=k)
            obs[mask] = locs_tab[node][k]
            nxt[mask] = kids_tab[node][k]
        payoff += a[t] * obs
        cur = nxt
    mean_v = float(payoff.mean())
    if trials == 1 or payoff.min() == payoff.max():
        return mean_v, 0.0  # a constant sample has zero standard error
    return mean_v, float(payoff.std(ddof=1) / math.sqrt(trials))
