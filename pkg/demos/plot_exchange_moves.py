"""
Iterated exchange moves
=======================

A braid split as beta = A B, with A missing the last generator and B missing
the first, can be twisted along the strands in between. The result keeps the
closure's component count and permutation but may leave the conjugacy class.
"""

from braidforge import garside
from braidforge.exchange import (
    ExchangePresentation,
    is_degenerate,
    iterated_exchange,
    markov_invariants_check,
    tau,
)
from braidforge.lamination import curve_family, exchange_curve, geometric_nondegeneracy
from braidforge.words import format_word

P = ExchangePresentation.from_text(4, "1", "3")
print("tau =", format_word(tau(4)))
for k in range(-2, 3):
    w = iterated_exchange(P, k)
    print(f"ex^{k:+d}:", format_word(w), " markov ok:", markov_invariants_check(P, k))

# Neither piece commutes with tau, so the move is non-degenerate. The same
# answer comes from asking whether A and B move the curve around strands 2..3.
print(is_degenerate(P), geometric_nondegeneracy(P))
print("c =", exchange_curve(4))
for c in curve_family(P, 2):
    print("   ", c)

# Moving A onto the middle strand makes it commute with tau.
Q = ExchangePresentation.from_text(4, "2", "3")
print(is_degenerate(Q))
print("ex^2 ~ ex^-1 :", garside.conjugate_test(iterated_exchange(Q, 2), iterated_exchange(Q, -1))[0])

# The headline family has a hidden symmetry: conjugating by Delta swaps
# sigma1 and sigma3, which turns ex^-k into a rotation of ex^k.
for k in (1, 2):
    ok, g = garside.conjugate_test(iterated_exchange(P, k), iterated_exchange(P, -k))
    print(f"ex^{k} ~ ex^-{k}:", ok, format_word(g))
print("ex^1 ~ ex^2:", garside.conjugate_test(iterated_exchange(P, 1), iterated_exchange(P, 2))[0])
