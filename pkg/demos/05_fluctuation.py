"""
The periodic fluctuation of A_b
===============================

A_b(n) / (2b-1)^(log_b n) does not converge; it oscillates with period 1 in
log_b n.  Sampling one period shows the shape of that oscillation, and the
samples settle down quickly as the index grows.
"""

import sys
from pathlib import Path

from subwords.asymptotics import convergence_gaps, max_gap, sample_h, scaling_identity_check, series_to_csv

b, n, res = 3, 12, 512
series = sample_h(b, n, res)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)
path = out / "h3.csv"
path.write_text(series_to_csv(series))
print("wrote", path)

# coarse text plot, one column per 8 grid points
vals = [v for _, v in series][::8]
lo, hi = min(vals), max(vals)
rows = 12
for r in range(rows, -1, -1):
    level = lo + (hi - lo) * r / rows
    print(f"{level:7.4f} " + "".join("*" if v >= level else " " for v in vals))

print("value at x=0:", series[0][1])
gaps = convergence_gaps(b, range(4, 13), 64)
for k, g in gaps.items():
    print(f"max gap between n={k - 1} and n={k}: {g:.2e}")
print("n=12 vs n=11:", max_gap(sample_h(b, 12, 64), sample_h(b, 11, 64)))
print(scaling_identity_check(b, 50))
