"""
Normal forms and the word problem
=================================

Two braid words name the same braid exactly when their left normal forms
agree. We compare that verdict against the action on curve coordinates.
"""

import random

from braidforge import garside
from braidforge.lamination import act, random_lamination
from braidforge.words import BraidWord, parse_word

# the braid relation in B_3, written two ways
u = parse_word("1,2,1", 3)
v = parse_word("2,1,2", 3)
print(garside.normal_form(u).serialize())
print(garside.normal_form(v).serialize())
print("equal:", garside.equal(u, v))

# a negative letter pulls a Delta^-1 out front
nf = garside.normal_form(parse_word("-1,2", 3))
print(nf.serialize(), " inf =", nf.inf, " sup =", nf.sup)

# the normal form is itself a word; reading it back gives the same braid
print("round trip:", garside.equal(nf.word(), parse_word("-1,2", 3)))

# Curves on the punctured disk see the difference too. The full twist acts
# trivially on curves, so pair the action with the exponent sum.
rng = random.Random(3)
L = random_lamination(4, rng)
a = parse_word("1,3,2,-1", 4)
b = parse_word("3,1,2,-1", 4)
c = parse_word("1,2,3,-1", 4)
print(L)
print(act(a, L), act(b, L), act(c, L))
print("a == b:", garside.equal(a, b), " a == c:", garside.equal(a, c))

# conjugacy: the witness g satisfies g^-1 u g = v
ok, g = garside.conjugate_test(BraidWord(3, (1,)), BraidWord(3, (2,)))
print("sigma1 ~ sigma2:", ok, "via", g.letters)
