"""
Doubly stochastic matrices as mixtures of permutations
======================================================
"""

from fractions import Fraction as F

from revmealy import birkhoff_decompose
from revmealy.permutation import format_rational

m = [
    [F(1, 2), F(1, 3), F(1, 6)],
    [F(1, 6), F(1, 2), F(1, 3)],
    [F(1, 3), F(1, 6), F(1, 2)],
]

dec = birkhoff_decompose(m)
for w, p in dec.terms:
    print(format_rational(w), p.target)

# exact, no rounding anywhere
print(dec.total_weight(), dec.matrix() == m)
