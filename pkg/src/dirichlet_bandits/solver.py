"""Backward-induction evaluation of finite-horizon Dirichlet bandits.

The solver never materializes posterior measures.  Observations are drawn
from the current predictive, whose support never leaves the root atom set,
so every posterior reachable from a root instance is that root's base
measure plus an integer number of unit point masses per atom slot.  States
are therefore identified by two integer count vectors, which collapses
exponentially many observation histories onto a small lattice and is the
solver's core performance lever.

Stages with zero discount weight still consume a stage and still update the
posterior of the pulled arm: with general nonnegative discounting the
optimal policy may pull purely for information, so no stage is skipped.
"""
from __future__ import annotations

import math
import os
import zlib
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .discount import DiscountSeq, is_regular
from .errors import InvalidParameterError, ResourceBudgetExceededError
from .measures import DiscreteMeasure, Numeric, point_mass, to_exact, to_float

#: Environment variable overriding SolverOptions.memo_cap.
MEMO_CAP_ENV = "BANDIT_MEMO_CAP"


class Action(Enum):
    ARM1 = "arm1"
    ARM2 = "arm2"
    TIE = "tie"


@dataclass(frozen=True)
class BanditState:
    """A two-armed instance: prior base measures for both arms plus the
    remaining discount sequence."""

    arm1: DiscreteMeasure
    arm2: DiscreteMeasure
    discount: DiscountSeq


@dataclass(frozen=True)
class SolverOptions:
    """Arithmetic mode and resource knobs for a solve.

    A single solve is evaluated sequentially (which trivially satisfies the
    determinism contract); ``parallel`` is honoured one level up, across
    instances in sweeps and verification suites.
    """

    mode: str = "float"  # "float" | "exact"
    tie_tol: float = 1e-11
    memo_cap: int = 50_000_000
    parallel: bool = False

    @property
    def exact(self) -> bool:
        return self.mode == "exact"


DEFAULT_OPTIONS = SolverOptions()
EXACT_OPTIONS = SolverOptions(mode="exact")


@dataclass(frozen=True)
class StateKey:
    """Canonical identity of a DP node: root instance id plus the number of
    added unit masses per atom slot of each arm."""

    base_id: int
    counts1: tuple[int, ...]
    counts2: tuple[int, ...]
    stage: int


@dataclass(frozen=True)
class ValueReport:
    """Maximum expected payoff of a state, its two pull-first payoffs, and
    the initial action (Tie when the payoffs agree within tie_tol)."""

    w: Numeric
    w1: Numeric
    w2: Numeric
    action: Action


@dataclass(frozen=True)
class PolicyNode:
    """One node of an optimal-policy tree.

    ``branches`` pairs each observation in the selected arm's predictive
    support with the follow-up node (ties branch on arm 1).
    """

    key: StateKey
    action: Action
    report: ValueReport
    branches: tuple[tuple[Numeric, "PolicyNode"], ...]


def _effective_memo_cap(options: SolverOptions) -> int:
    env = os.environ.get(MEMO_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as e:
            raise InvalidParameterError(f"bad {MEMO_CAP_ENV} value {env!r}") from e
    return options.memo_cap


def _coerce_discount(A: DiscountSeq, exact: bool) -> DiscountSeq:
    if len(A.values) == 0:
        return A
    if exact and A.exact:
        return A
    if not exact and not A.exact and isinstance(A.values[0], float):
        return A
    # Rebuild tails in the target arithmetic; skips make_discount validation
    # because drop_first suffixes may legitimately have zero total.
    from .discount import _tail_sums

    if exact:
        vals = tuple(v if isinstance(v, Fraction) else Fraction(v) for v in A.values)
    else:
        vals = tuple(float(v) for v in A.values)
    return DiscountSeq(vals, _tail_sums(vals, exact))


class BanditSolver:
    """Memoized depth-first evaluator for one root instance.

    The memo maps ``(counts1, counts2)`` to the node value; the stage is the
    count total.  Values are deterministic functions of the key, so the
    table may be shared freely.
    """

    def __init__(self, state: BanditState, options: Optional[SolverOptions] = None):
        opts = options or DEFAULT_OPTIONS
        if opts.mode not in ("float", "exact"):
            raise InvalidParameterError(f"unknown arithmetic mode {opts.mode!r}")
        exact = opts.exact
        arm1 = to_exact(state.arm1) if exact else to_float(state.arm1)
        arm2 = to_exact(state.arm2) if exact else to_float(state.arm2)
        disc = _coerce_discount(state.discount, exact)
        self.options = opts
        self._exact = exact
        self._a = disc.values
        self._n = len(disc.values)
        self._locs = (arm1.locations, arm2.locations)
        self._bw = (arm1.weights, arm2.weights)
        self._mass = (arm1.total_mass, arm2.total_mass)
        self._zero = Fraction(0) if exact else 0.0
        self._memo: dict = {}
        self._cap = _effective_memo_cap(opts)
        self._tie = opts.tie_tol
        self._base_id = zlib.crc32(repr((arm1.atoms, arm2.atoms, disc.values)).encode())
        self._z1 = (0,) * len(arm1.atoms)
        self._z2 = (0,) * len(arm2.atoms)

    @property
    def horizon(self) -> int:
        return self._n

    @property
    def discounts(self) -> tuple[Numeric, ...]:
        return self._a

    def root_counts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self._z1, self._z2

    def state_key(self, counts1=None, counts2=None) -> StateKey:
        c1 = self._z1 if counts1 is None else tuple(counts1)
        c2 = self._z2 if counts2 is None else tuple(counts2)
        return StateKey(self._base_id, c1, c2, sum(c1) + sum(c2))

    def report(self, counts1=None, counts2=None) -> ValueReport:
        """Value report at a reachable node (default: the root)."""
        c1 = self._z1 if counts1 is None else tuple(counts1)
        c2 = self._z2 if counts2 is None else tuple(counts2)
        stage = sum(c1) + sum(c2)
        if stage >= self._n:
            z = self._zero
            return ValueReport(z, z, z, Action.TIE)
        w1 = self._pull(c1, c2, stage, 0)
        w2 = self._pull(c1, c2, stage, 1)
        return self._make_report(w1, w2)

    def posterior_rows(self, arm: int, counts) -> tuple[tuple, list, Numeric]:
        """Locations, posterior weights, and mass of one arm at given counts."""
        if arm not in (1, 2):
            raise InvalidParameterError(f"arm must be 1 or 2, got {arm}")
        locs = self._locs[arm - 1]
        bw = self._bw[arm - 1]
        weights = [bw[j] + counts[j] for j in range(len(locs))]
        return locs, weights, self._mass[arm - 1] + sum(counts)

    def _make_report(self, w1, w2) -> ValueReport:
        diff = w1 - w2
        if abs(diff) <= self._tie:
            action = Action.TIE
        elif diff > 0:
            action = Action.ARM1
        else:
            action = Action.ARM2
        return ValueReport(w1 if w1 >= w2 else w2, w1, w2, action)

    def _value(self, c1, c2, stage):
        if stage == self._n:
            return self._zero
        memo = self._memo
        key = (c1, c2)
        v = memo.get(key)
        if v is None:
            w1 = self._pull(c1, c2, stage, 0)
            w2 = self._pull(c1, c2, stage, 1)
            v = w1 if w1 >= w2 else w2
            if len(memo) >= self._cap:
                raise ResourceBudgetExceededError(
                    f"memo table exceeded cap of {self._cap} entries"
                )
            memo[key] = v
        return v

    def _pull(self, c1, c2, stage, arm):
        """Payoff of pulling ``arm`` now and continuing optimally.

        Equals  a_t * (posterior mean)  plus the predictive expectation of
        the child values; both are fused into one weighted sum normalized
        once per node.
        """
        locs = self._locs[arm]
        bw = self._bw[arm]
        counts = c1 if arm == 0 else c2
        a_t = self._a[stage]
        mass = self._mass[arm] + sum(counts)
        nxt = stage + 1
        terms = []
        for j in range(len(locs)):
            child = counts[:j] + (counts[j] + 1,) + counts[j + 1 :]
            if arm == 0:
                cv = self._value(child, c2, nxt)
            else:
                cv = self._value(c1, child, nxt)
            terms.append((bw[j] + counts[j]) * (a_t * locs[j] + cv))
        total = sum(terms) if self._exact else math.fsum(terms)
        return total / mass


def value(state: BanditState, options: Optional[SolverOptions] = None) -> ValueReport:
    """Maximum expected payoff of a two-armed instance, with both pull-first
    payoffs and the initial action.  Horizon zero yields zero."""
    return BanditSolver(state, options).report()


def policy_tree(
    state: BanditState, depth: int, options: Optional[SolverOptions] = None
) -> PolicyNode:
    """Optimal-policy tree expanded for the first ``depth`` stages.

    Each node's action agrees with :func:`value` at that node; branches
    enumerate the selected arm's predictive support.
    """
    solver = BanditSolver(state, options)
    n = solver.horizon
    if depth < 1 or depth > n:
        raise InvalidParameterError(f"policy depth must be in [1, {n}], got {depth}")

    def build(c1, c2, stage):
        rep = solver.report(c1, c2)
        branches = ()
        if stage + 1 < depth:
            arm = 1 if rep.action is Action.ARM2 else 0
            counts = c1 if arm == 0 else c2
            out = []
            for j, loc in enumerate(solver._locs[arm]):
                child = counts[:j] + (counts[j] + 1,) + counts[j + 1 :]
                if arm == 0:
                    out.append((loc, build(child, c2, stage + 1)))
                else:
                    out.append((loc, build(c1, child, stage + 1)))
            branches = tuple(out)
        return PolicyNode(solver.state_key(c1, c2), rep.action, rep, branches)

    z1, z2 = solver.root_counts()
    return build(z1, z2, 0)


class _StoppingSolver:
    """Pruned recursion for the one-armed bandit under regular discounting.

    The problem is an optimal stopping problem: once the known arm is
    optimal it stays optimal, so each node compares pulling the unknown arm
    against retiring for ``lam * T_stage``.  Only the unknown arm's counts
    enter the state, which shrinks the lattice dramatically.  Whenever
    retirement is optimal the node value *is* the retirement expression, so
    the root value equals ``lam * T_1`` bit for bit -- the property the
    break-even bisection relies on.
    """

    def __init__(self, arm: DiscreteMeasure, lam, A: DiscountSeq, opts: SolverOptions):
        exact = opts.exact
        arm_c = to_exact(arm) if exact else to_float(arm)
        disc = _coerce_discount(A, exact)
        self._exact = exact
        self._lam = Fraction(lam) if exact else float(lam)
        self._a = disc.values
        self._tails = disc.tails
        self._n = len(disc.values)
        self._locs = arm_c.locations
        self._bw = arm_c.weights
        self._mass = arm_c.total_mass
        self._zero = Fraction(0) if exact else 0.0
        self._cap = _effective_memo_cap(opts)
        self._memo: dict = {}
        self._z = (0,) * len(arm_c.atoms)

    def pull(self, counts, stage):
        a_t = self._a[stage]
        bw = self._bw
        locs = self._locs
        mass = self._mass + sum(counts)
        nxt = stage + 1
        terms = []
        for j in range(len(locs)):
            child = counts[:j] + (counts[j] + 1,) + counts[j + 1 :]
            terms.append((bw[j] + counts[j]) * (a_t * locs[j] + self.rec(child, nxt)))
        total = sum(terms) if self._exact else math.fsum(terms)
        return total / mass

    def rec(self, counts, stage):
        if stage == self._n:
            return self._zero
        memo = self._memo
        key = (counts, stage)
        v = memo.get(key)
        if v is None:
            p = self.pull(counts, stage)
            r = self._lam * self._tails[stage]
            v = p if p >= r else r
            if len(memo) >= self._cap:
                raise ResourceBudgetExceededError(
                    f"memo table exceeded cap of {self._cap} entries"
                )
            memo[key] = v
        return v

    def root_value(self):
        return self.rec(self._z, 0)

    def report(self, tie_tol) -> ValueReport:
        z = self._z
        w1 = self.pull(z, 0)
        w2 = self._a[0] * self._lam + self.rec(z, 1)
        diff = w1 - w2
        if abs(diff) <= tie_tol:
            action = Action.TIE
        elif diff > 0:
            action = Action.ARM1
        else:
            action = Action.ARM2
        return ValueReport(w1 if w1 >= w2 else w2, w1, w2, action)


def value_one_armed(
    arm: DiscreteMeasure,
    lam,
    A: DiscountSeq,
    options: Optional[SolverOptions] = None,
) -> ValueReport:
    """Value of the one-armed bandit against a known arm paying ``lam``.

    Equals :func:`value` with a point mass at ``lam`` as arm 2; with a
    regular discount sequence the pruned stopping recursion is used instead
    of the two-armed lattice.
    """
    opts = options or DEFAULT_OPTIONS
    n = len(A.values)
    if n == 0:
        zero = Fraction(0) if opts.exact else 0.0
        return ValueReport(zero, zero, zero, Action.TIE)
    if not is_regular(A):
        known = point_mass(lam, exact=opts.exact)
        return value(BanditState(arm, known, A), opts)
    return _StoppingSolver(arm, lam, A, opts).report(opts.tie_tol)


def stopping_value(
    arm: DiscreteMeasure,
    lam,
    A: DiscountSeq,
    options: Optional[SolverOptions] = None,
):
    """Root value of the stopping-form recursion (regular discounts only).

    Mathematically equal to ``value_one_armed(...).w``; numerically it
    reproduces ``lam * T_1`` exactly whenever immediate retirement is
    optimal, which makes it the preferred objective for root-finding on the
    retirement boundary.
    """
    opts = options or DEFAULT_OPTIONS
    if len(A.values) == 0:
        return Fraction(0) if opts.exact else 0.0
    if not is_regular(A):
        raise InvalidParameterError(
            "the stopping-form value requires a regular discount sequence"
        )
    return _StoppingSolver(arm, lam, A, opts).root_value()
