import itertools
import random

import pytest

from braidforge import burau_rep, garside
from braidforge.garside import (
    NormalForm,
    SuperSummitOverflow,
    conjugate_by_simple,
    conjugate_test,
    cycling,
    decycling,
    equal,
    is_normal,
    normal_form,
    summit_invariant,
    super_summit_set,
    to_summit,
)
from braidforge.words import BraidError, BraidWord, concat, exponent_sum, invert, permutation
from helpers import rword, scramble


def W(n, *letters):
    return BraidWord(n, letters)


def words_up_to(n, length):
    gens = [i for i in range(1, n)] + [-i for i in range(1, n)]
    for L in range(length + 1):
        for xs in itertools.product(gens, repeat=L):
            yield BraidWord(n, xs)


def test_normal_form_examples():
    assert normal_form(W(3, 1, 2, 1)) == NormalForm(3, 1, ())
    assert normal_form(W(3)) == NormalForm(3, 0, ())
    nf = normal_form(W(3, -1))
    assert nf.inf == -1 and nf.canonical_length == 1
    # the single factor is Delta * sigma_1^-1 = sigma_1 sigma_2
    assert nf.factors[0] == normal_form(W(3, 1, 2)).factors[0]


def test_normal_form_against_burau_in_b3():
    # Burau is faithful on B_3, so matrices are a complete oracle there.
    by_matrix = {}
    for w in words_up_to(3, 4):
        key = tuple(map(tuple, burau_rep.burau(w).rows))
        nf = normal_form(w)
        assert is_normal(nf)
        by_matrix.setdefault(key, set()).add(nf)
    assert all(len(s) == 1 for s in by_matrix.values())
    assert len({next(iter(s)) for s in by_matrix.values()}) == len(by_matrix)


def test_normal_form_word_round_trip(rng):
    for _ in range(200):
        n = rng.choice([3, 4, 5, 6])
        w = rword(n, rng.randint(0, 14), rng)
        nf = normal_form(w)
        assert is_normal(nf)
        assert normal_form(nf.word()) == nf


def test_serialization():
    assert normal_form(W(3)).serialize() == "D^0 |"
    nf = normal_form(W(3, -1))
    # factor sigma_1 sigma_2, images as in words.permutation
    assert nf.serialize() == "D^-1 | 3 1 2"
    assert permutation(W(3, 1, 2)).images == (3, 1, 2)
    assert NormalForm.parse(nf.serialize()) == nf
    nf = normal_form(W(4, 1, -2, 3, 3, -1))
    assert NormalForm.parse(nf.serialize()) == nf
    with pytest.raises(BraidError):
        NormalForm.parse("D^0 | 2 1 3 ; 1 3 2 ; 2 1 3 ; 3 2 1")


def test_equal_examples():
    assert equal(W(3, 1, 2, 1), W(3, 2, 1, 2))
    assert equal(W(4, 1, 3), W(4, 3, 1))
    assert not equal(W(3, 1), W(3, 2))
    with pytest.raises(BraidError):
        equal(W(3, 1), W(4, 1))


def test_equal_on_scrambled_words(rng):
    for _ in range(100):
        n = rng.choice([3, 4, 5])
        w = rword(n, rng.randint(0, 10), rng)
        assert equal(w, scramble(w, rng))


def test_cycling_fixes_delta_powers():
    for p in (-2, -1, 0, 1, 3):
        nf = NormalForm(4, p, ())
        assert cycling(nf) == nf
        assert decycling(nf) == nf


def test_cycling_is_conjugation(rng):
    for _ in range(30):
        w = rword(4, rng.randint(1, 10), rng)
        nf = normal_form(w)
        for out in (cycling(nf), decycling(nf)):
            assert conjugate_test(w, out.word())[0]
            assert out.inf >= nf.inf and out.sup <= nf.sup


def test_cycling_reaches_max_inf():
    w = W(3, 1, -2)
    # oracle: best inf over all conjugators of length <= 4
    best = max(
        normal_form(concat(3, invert(g), w, g)).inf for g in itertools.chain(
            *(words_up_to(3, L) for L in range(5))
        )
    )
    assert best == -1
    nf = normal_form(w)
    for _ in range(3):
        nf = cycling(nf)
    assert nf.inf == -1
    assert to_summit(normal_form(w))[0].inf == -1


def _sss_oracle(w):
    # close under conjugation by simples, via words and normal_form only
    summit, _ = to_summit(normal_form(w))
    simples = [s for s in itertools.permutations(range(w.n)) if s != tuple(range(w.n))]
    seen = {summit}
    frontier = [summit]
    while frontier:
        y = frontier.pop()
        for s in simples:
            sw = BraidWord(w.n, garside._simple_letters(s))
            z = normal_form(concat(w.n, invert(sw), y.word(), sw))
            if (z.inf, z.sup) == (summit.inf, summit.sup) and z not in seen:
                seen.add(z)
                frontier.append(z)
    return seen


def test_super_summit_set_examples():
    assert super_summit_set(W(3, 1)) == {normal_form(W(3, 1)), normal_form(W(3, 2))}
    assert super_summit_set(W(3, 1, 2, 1)) == {normal_form(W(3, 1, 2, 1))}
    assert super_summit_set(W(3)) == {normal_form(W(3))}


def test_super_summit_set_against_word_oracle(rng):
    for _ in range(15):
        n = rng.choice([3, 4])
        w = rword(n, rng.randint(1, 8), rng)
        assert super_summit_set(w, cache=None) == _sss_oracle(w)


def test_super_summit_set_closed(rng):
    w = W(4, 1, 2, 2, 3, -2, -2, 1, -3)
    sss = super_summit_set(w)
    inf, sup = next(iter(sss)).inf, next(iter(sss)).sup
    for y in sss:
        for s in garside.all_simples(4):
            z = conjugate_by_simple(y, s)
            if (z.inf, z.sup) == (inf, sup):
                assert z in sss


def test_summit_invariant_examples():
    assert summit_invariant(W(3, 1)) == garside.SummitInvariant(0, 1, 2)
    assert summit_invariant(W(3, 1, 2, 1, 1, 2, 1)) == garside.SummitInvariant(2, 2, 1)
    assert summit_invariant(W(3)) == garside.SummitInvariant(0, 0, 1)


def test_conjugate_examples():
    ok, g = conjugate_test(W(3, 1), W(3, 2))
    assert ok and equal(concat(3, invert(g), W(3, 1), g), W(3, 2))
    assert conjugate_test(W(3, 1), W(3, -1)) == (False, None)


def test_conjugate_random_conjugates(rng):
    for _ in range(60):
        n = rng.choice([3, 4, 5])
        u = rword(n, rng.randint(0, 10), rng)
        g = rword(n, rng.randint(0, 8), rng)
        v = concat(n, invert(g), u, g)
        ok, h = conjugate_test(u, v)
        assert ok
        assert equal(concat(n, invert(h), u, h), v)


def test_conjugate_test_symmetric_and_reflexive(rng):
    for _ in range(40):
        n = rng.choice([3, 4])
        u = rword(n, rng.randint(0, 8), rng)
        v = rword(n, rng.randint(0, 8), rng)
        assert conjugate_test(u, u)[0]
        a, b = conjugate_test(u, v)[0], conjugate_test(v, u)[0]
        assert a == b
        if a:
            assert exponent_sum(u) == exponent_sum(v)
            assert permutation(u).cycle_type() == permutation(v).cycle_type()


def test_cap_is_reported_not_answered():
    w = W(4, 1, 2, 2, 2, 2, 2, 2, 3, -2, -2, -2, -2, -2, -2)
    with pytest.raises(SuperSummitOverflow) as exc:
        super_summit_set(w, cap=10, cache=None)
    assert len(exc.value.partial) > 10
    with pytest.raises(SuperSummitOverflow):
        conjugate_test(w, W(4, 1, -2, -2, -2, -2, -2, -2, 3, 2, 2, 2, 2, 2, 2), cap=10, cache=None)


def test_cache_reuses_sets():
    cache = garside.SummitCache()
    w = W(4, 1, 2, 2, 3, -2, -2)
    a = super_summit_set(w, cache=cache)
    b = super_summit_set(W(4, 2, 2, 3, -2, -2, 1), cache=cache)
    assert a == b and len(cache) == 1
