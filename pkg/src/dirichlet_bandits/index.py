"""Break-even value and break-even observation for the one-armed bandit.

The break-even value is the smallest known-arm rate ``lam`` at which
retiring to the known arm is optimal, i.e. the smallest root of

    g(lam) = W(arm vs known lam) - lam * T_1 <= 0.

Per strategy the payoff is affine in ``lam`` with slope at most ``T_1``, so
``g`` is convex, nonincreasing where positive, identically zero beyond the
break-even point: bisection on the sign of ``g`` is robust, and every probe
is the expensive part anyway, so no cleverer root finder is used.  The same
applies to the break-even observation, found as the crossing of the
nondecreasing map  x -> break_even(posterior after x, remaining discounts).

Both computations run in float arithmetic only: the root of a piecewise
linear equation with combinatorially many pieces has no useful exact form,
so the residual of the defining equation is reported instead.
"""
from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from .discount import DiscountSeq, drop_first, is_regular
from .errors import (
    DegenerateHorizonError,
    HorizonTooShortError,
    InvalidParameterError,
    NonPositiveDiscountError,
    NotRegularError,
)
from .measures import DiscreteMeasure, mean, posterior_update, to_float
from .solver import _coerce_discount, stopping_value

DEFAULT_TOL = 1e-9
#: Residual of the defining equation is expected below this (one order looser
#: than the bisection tolerance, absorbing DP float noise).
RESIDUAL_TOL = 1e-8
#: Adjacent sweep entries moving against the expected direction by more than
#: this are flagged.
SWEEP_MONOTONE_TOL = 1e-8


@dataclass(frozen=True)
class IndexResult:
    """A bracketed root: final value, enclosing bracket, number of objective
    evaluations, and the residual of the defining equation at the value."""

    value: float
    bracket: tuple[float, float]
    iterations: int
    residual: float


def _validated_float_inputs(arm: DiscreteMeasure, A: DiscountSeq, tol: float):
    if tol <= 0:
        raise InvalidParameterError(f"tolerance must be positive, got {tol}")
    if len(A.values) == 0 or A.tails[0] <= 0:
        raise DegenerateHorizonError("total discount weight must be positive")
    if not is_regular(A):
        raise NotRegularError(
            "break-even quantities are only defined for regular discount sequences"
        )
    return to_float(arm), _coerce_discount(A, exact=False)


def break_even_value(
    arm: DiscreteMeasure, A: DiscountSeq, tol: float = DEFAULT_TOL
) -> IndexResult:
    """Smallest known-arm rate at which retiring immediately is optimal.

    Bisection over [mean(arm), max atom location]: constant play of the
    unknown arm earns its mean per pull, so the break-even rate is at least
    the mean; the value never exceeds the best possible observation per
    pull, which caps it at the top of the support.
    """
    arm_f, A_f = _validated_float_inputs(arm, A, tol)
    T1 = A_f.tails[0]
    evals = 0

    def crossed(lam: float) -> bool:
        # The stopping-form value equals lam * T1 bit for bit wherever
        # retirement is optimal, so this predicate is free of the rounding
        # noise a max-of-two-recursions objective would carry.
        nonlocal evals
        evals += 1
        return stopping_value(arm_f, lam, A_f) - lam * T1 <= 0.0

    lo = mean(arm_f)
    hi = arm_f.max_location
    lo = min(lo, hi)
    if crossed(lo):
        hi = lo
    else:
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if not lo < mid < hi:
                break  # float resolution exhausted
            if crossed(mid):
                hi = mid
            else:
                lo = mid
    val = hi
    residual = abs(stopping_value(arm_f, val, A_f) - val * T1)
    return IndexResult(val, (lo, hi), evals, residual)


def break_even_observation(
    arm: DiscreteMeasure, A: DiscountSeq, tol: float = DEFAULT_TOL
) -> IndexResult:
    """Observation threshold at which the unknown arm stays optimal.

    Root of  h(x) = break_even(arm + unit mass at x, dropped-first discounts)
    minus break_even(arm, full discounts); h is nondecreasing since adding
    mass higher up moves the posterior mean distribution up in the
    increasing convex order.  The search starts at the break-even value
    itself (the threshold is never below it) and expands the upper end
    geometrically past the support when needed.
    """
    n = len(A.values)
    if n == 0 or A.tails[0] <= 0:
        raise DegenerateHorizonError("total discount weight must be positive")
    if n < 2:
        raise HorizonTooShortError(
            "break-even observation needs at least two stages"
        )
    if any(v <= 0 for v in A.values):
        raise NonPositiveDiscountError(
            "break-even observation requires strictly positive discount weights"
        )
    arm_f, A_f = _validated_float_inputs(arm, A, tol)
    base = break_even_value(arm_f, A_f, tol)
    A1 = drop_first(A_f)
    probes: list[tuple[float, float]] = []

    def h(x: float) -> float:
        v = break_even_value(posterior_update(arm_f, x), A1, tol).value - base.value
        probes.append((x, v))
        return v

    lo = base.value
    h_lo = h(lo)
    if h_lo >= 0:
        return IndexResult(lo, (lo, lo), len(probes), abs(h_lo))
    hi = max(arm_f.max_location, lo)
    step = max(1.0, abs(hi))
    while h(hi) < 0:
        lo = hi
        hi = hi + step
        step *= 2
        if step > 2.0**64:
            raise InvalidParameterError("break-even observation search diverged")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        if h(mid) >= 0:
            hi = mid
        else:
            lo = mid
    residual = abs(h(hi))
    _warn_if_not_monotone(probes, tol)
    return IndexResult(hi, (lo, hi), len(probes), residual)


def _warn_if_not_monotone(probes, tol) -> None:
    """The crossing objective should be nondecreasing in the observation;
    bisection still returns its lowest crossing, but any decrease across the
    evaluated points (beyond the probes' own error budget) is reported."""
    probes = sorted(probes)
    noise = 4 * tol
    for (x0, v0), (x1, v1) in zip(probes, probes[1:]):
        if v1 < v0 - noise:
            warnings.warn(
                f"break-even objective decreased from {v0:.3g} to {v1:.3g} "
                f"between observations {x0:.6g} and {x1:.6g}; the returned "
                "value is the lowest crossing",
                RuntimeWarning,
                stacklevel=3,
            )
            return


@dataclass(frozen=True)
class SweepRow:
    param: float
    value: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class SweepResult:
    """Break-even values over a parameter grid plus monotonicity flags.

    Each flag is ``(param_prev, param, delta)`` for an adjacent pair moving
    against the expected direction by more than SWEEP_MONOTONE_TOL.
    """

    rows: tuple[SweepRow, ...]
    flags: tuple[tuple[float, float, float], ...]
    expected: str | None


def _sweep_row(family, A, tol, p) -> SweepRow:
    res = break_even_value(family(p), A, tol)
    return SweepRow(float(p), res.value, res.residual, res.iterations)


def index_sweep(
    family,
    A: DiscountSeq,
    grid,
    *,
    expected: str | None = None,
    tol: float = DEFAULT_TOL,
    jobs: int = 1,
) -> SweepResult:
    """Break-even value of ``family(p)`` for each grid parameter ``p``.

    ``expected`` may be "nonincreasing" or "nondecreasing"; adjacent pairs
    violating that direction beyond SWEEP_MONOTONE_TOL are flagged.
    """
    grid = list(grid)
    if not grid:
        raise InvalidParameterError("sweep grid must be nonempty")
    if expected not in (None, "nonincreasing", "nondecreasing"):
        raise InvalidParameterError(f"unknown expected direction {expected!r}")
    worker = partial(_sweep_row, family, A, tol)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(worker, grid))
    else:
        rows = [worker(p) for p in grid]
    flags = []
    if expected is not None:
        for prev, cur in zip(rows, rows[1:]):
            delta = cur.value - prev.value
            if expected == "nonincreasing" and delta > SWEEP_MONOTONE_TOL:
                flags.append((prev.param, cur.param, delta))
            if expected == "nondecreasing" and delta < -SWEEP_MONOTONE_TOL:
                flags.append((prev.param, cur.param, delta))
    return SweepResult(tuple(rows), tuple(flags), expected)


def sweep_csv(result: SweepResult) -> str:
    """CSV rendering with the fixed header ``param,lambda,residual,iterations``."""
    lines = ["param,lambda,residual,iterations"]
    for r in result.rows:
        lines.append(
            f"{r.param:.10g},{r.value:.10g},{r.residual:.10g},{r.iterations}"
        )
    return "\n".join(lines) + "\n"
