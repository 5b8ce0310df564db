"""Stochastic orders on finite-support distributions, and what they do to values.

Three orders drive the monotonicity results: the usual stochastic order
(being to the right), the convex order (being more spread out with the same
mean), and the increasing convex order (implied by either).  For discrete
distributions all three reduce to finitely many comparisons: CDFs at atom
locations, or stop-loss transforms at atom locations plus one probe below
the support.
"""
from dirichlet_bandits import (
    BanditState,
    leq_cx,
    leq_icx,
    leq_st,
    make_measure,
    make_uniform,
    mean,
    mean_preserving_spread,
    point_mass,
    scale,
    shift,
    stop_loss,
    value,
)

center = point_mass(0.5)
spread = make_measure([(0, 0.5), (1, 0.5)])

# ---------------------------------------------------------------------------
# Stop-loss transforms: t -> E(X - t)+.  The spread-out distribution keeps
# more upside everywhere, so it dominates pointwise: a convex-order pair.
# ---------------------------------------------------------------------------
print("stop-loss at a few thresholds (point mass vs fair spread):")
for t in (-0.5, 0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"  t={t:+.2f}: {stop_loss(center, t):.4f} <= {stop_loss(spread, t):.4f}")

print("\norder checks:")
print("  same mean:", mean(center) == mean(spread))
print("  center <=cx spread:", leq_cx(center, spread).holds)
rev = leq_cx(spread, center)
print(f"  spread <=cx center: {rev.holds} (witness t={rev.witness}, "
      f"margin {float(rev.margin):.3f})")

moved = shift(spread, 0.25)
print("  spread <=st spread+0.25:", leq_st(spread, moved).holds)
print("  spread <=icx spread+0.25:", leq_icx(spread, moved).holds, "(st implies icx)")
print("  center <=icx spread:", leq_icx(center, spread).holds, "(cx implies icx)")

# ---------------------------------------------------------------------------
# Mean-preserving spreads generate convex-order chains mechanically.
# ---------------------------------------------------------------------------
chain = [center]
for delta in (0.5, 0.25):
    chain.append(mean_preserving_spread(chain[-1], 0, delta))
for lo, hi in zip(chain, chain[1:]):
    assert leq_cx(lo, hi).holds
print("\nspread chain means stay at 1/2:", [f"{mean(m):.3f}" for m in chain])

# ---------------------------------------------------------------------------
# Why these orders matter here: pushing one arm's prior mean up in the
# increasing convex order never lowers the bandit's value.  More dispersion
# is genuinely valuable: observations can be followed up or abandoned.
# ---------------------------------------------------------------------------
opponent = make_measure([(0.3, 1), (0.6, 1)])
A = make_uniform(5)
M = 2.0

w_center = value(BanditState(scale(center, M), opponent, A)).w
w_spread = value(BanditState(scale(spread, M), opponent, A)).w
w_moved = value(BanditState(scale(moved, M), opponent, A)).w
print("\nvalue against a fixed opponent, five uniform stages:")
print(f"  prior mean = point mass at 1/2 : W = {w_center:.6f}")
print(f"  prior mean = fair spread       : W = {w_spread:.6f}")
print(f"  fair spread shifted up by 1/4  : W = {w_moved:.6f}")
assert w_center <= w_spread <= w_moved
