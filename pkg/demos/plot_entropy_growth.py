"""
Entropy along the exchange family
=================================

Iterate a braid on integer curve coordinates and watch the log of the norm
grow. The reduced Burau matrix at t = -1 gives a lower bound for free.
"""

import math

import numpy as np

from braidforge.burau_rep import burau, entropy_lower_bound
from braidforge.exchange import ExchangePresentation, iterated_exchange
from braidforge.lamination import entropy_estimate
from braidforge.words import BraidWord

# calibration: sigma1 sigma2^-1 is the golden-ratio-squared map
w = BraidWord(3, (1, -2))
M = np.array(burau(w).evaluate(-1), dtype=float)
print(M)
print(np.linalg.eigvals(M))
print(entropy_estimate(w).value, entropy_lower_bound(w), math.log((3 + math.sqrt(5)) / 2))

P = ExchangePresentation.from_text(4, "1", "3")
print(" k   estimate   burau   iters")
ests = []
for k in range(0, 9):
    e = entropy_estimate(iterated_exchange(P, k))
    lb = entropy_lower_bound(iterated_exchange(P, k))
    ests.append(e.value)
    print(f"{k:2d}  {e.value:9.6f} {lb:9.6f}  {e.iterations:5d}")

# growth looks logarithmic in k
ks = np.arange(2, 9)
slope, icpt = np.polyfit(np.log(ks), ests[2:], 1)
print(f"ent(ex^k) ~ {slope:.3f} log k + {icpt:.3f}")
