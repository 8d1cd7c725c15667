"""
The generalized Pascal triangle
===============================

Entry (m, n) is the number of occurrences of rep_b(n) as a subword of
rep_b(m).  Row m has exactly S_b(m) positive entries.
"""

import sys
from pathlib import Path

from subwords import compressed_profile, render_triangle, triangle_entry
from subwords.pascal import profile_to_csv, triangle_matrix

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

t = triangle_matrix(3, 12)
for row in t:
    print(" ".join(str(x) if x else "." for x in row))

# white = 0, gray = 1, black = 2 or more
(out / "pascal_b3.pgm").write_bytes(render_triangle(3, 81, cap=2))
(out / "pascal_b2_mask.pgm").write_bytes(render_triangle(2, 64, cap=1))
(out / "profile_b3.csv").write_text(profile_to_csv(compressed_profile(3, 81)))
print("images and profile written to", out)

# the rows 1^m hold the ordinary binomial coefficients
print([triangle_entry(3, (3**8 - 1) // 2, (3**k - 1) // 2) for k in range(9)])
