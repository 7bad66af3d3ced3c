"""Independent reference values frozen into the C++ tests.

Run: python3 scripts/oracles.py
"""
from fractions import Fraction
from collections import Counter
import math

import scipy.special as sp
import scipy.stats as st

A, C, M = 25173, 13849, 1 << 16


def short_cycle(key, n):
    s, out = key, 0
    for t in range(n):
        s = (A * s + C) % M
        out |= ((s >> 15) & 1) << t
    return out


print("short_cycle(0xa5, 16) =", hex(short_cycle(0xA5, 16)))
print("short_cycle(0, 8) =", hex(short_cycle(0, 8)))
print("short_cycle(0xffff, 12) =", hex(short_cycle(0xFFFF, 12)))

# Pad distribution for l=8, N=4 and the resulting TV to uniform.
pads = Counter(short_cycle(k, 4) for k in range(256))
tv = sum(abs(Fraction(pads[y], 256) - Fraction(1, 16)) for y in range(16)) / 2
print("short_cycle l=8 N=4 reachable:", len(pads), "tv:", tv)
print("pad counts:", [pads[y] for y in range(16)])

# Chi-square p-values.
print("p(4.0, 1) =", repr(sp.gammaincc(0.5, 2.0)), repr(math.erfc(math.sqrt(2.0))))
print("p(32, 2) =", repr(st.chi2.sf(32.0, 2)))
for x, k in [(0.5, 3), (10.0, 5), (300.0, 255), (120.0, 127), (1e-3, 1), (50.0, 10)]:
    print(f"p({x}, {k}) =", repr(st.chi2.sf(x, k)))
