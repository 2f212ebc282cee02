#!/usr/bin/env python3
"""The three diameter regimes of a dense graph under random edges.

A dense graph can start disconnected (two cliques, or two random
blocks).  The worst-case diameter then drops in jumps as random edges
arrive: a handful of edges already give diameter at most 5, about log n
edges give diameter 3, and diameter 2 costs on the order of n log n.
"""

import math

from sprinkle.harness import estimate_threshold, run_sweep, theorem_preset

# --- diameter <= 5 from a bounded number of edges --------------------
n = 100
cfg5 = theorem_preset("thm3", n, {"d": "0.15", "trials": 100, "master_seed": 7})
res5 = run_sweep(cfg5)
print("diameter <= 5 on two random blocks (n=100, d=0.15):")
for pt in res5.points[:6]:
    print(f"  m={pt.value:4d}  Pr = {pt.p_hat:.2f}")
print("  ... a single cross edge already joins two low-diameter blocks\n")

# --- diameter <= 3 around (1-d)/d^2 log n ----------------------------
cfg3 = theorem_preset("thm4", n, {"d": "0.2", "trials": 100, "master_seed": 7})
res3 = run_sweep(cfg3)
est3 = estimate_threshold(res3)
ref3 = (1 - 0.2) / 0.04 * math.log(n)
print(f"diameter <= 3: crossing m_half = {est3.m_half:.0f}, "
      f"reference (1-d)/d^2 * ln n = {ref3:.0f}")

# --- diameter >= 5 persists below log n / (-2 log(1-2d)) -------------
cfg5b = theorem_preset(
    "thm4", n, {"d": "0.2", "side": "diam5", "trials": 100, "master_seed": 7}
)
res5b = run_sweep(cfg5b)
est5b = estimate_threshold(res5b)
ref5b = math.log(n) / (-2 * math.log(1 - 0.4))
print(f"diameter >= 5: persists up to m_half = {est5b.m_half:.0f}, "
      f"reference ln n / (-2 ln(1-2d)) = {ref5b:.0f}")

# --- diameter <= 2 needs about n log n edges -------------------------
cfg2 = theorem_preset("thm5", n, {"trials": 100, "master_seed": 7})
res2 = run_sweep(cfg2)
est2 = estimate_threshold(res2)
lo = 0.5 * n * math.log(n)
print(f"diameter <= 2 on two cliques: m_half = {est2.m_half:.0f}, "
      f"on the n log n scale (n/2 ln n = {lo:.0f}, n ln n = {2 * lo:.0f}; "
      "finite-n crossings sit slightly below the asymptotic bracket)")
