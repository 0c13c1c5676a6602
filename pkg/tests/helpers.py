"""Word generators shared by the test modules."""

import random

from braidforge.words import BraidWord, free_reduce


def random_letters(n, length, rng):
    return [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)]


def rword(n, length, rng):
    return BraidWord(n, tuple(random_letters(n, length, rng)))


def scramble(w: BraidWord, rng: random.Random, moves: int = 6) -> BraidWord:
    """Rewrite w by braid relations; the result is equal to w in B_n."""
    n = w.n
    letters = list(w.letters)
    for _ in range(moves):
        pos = rng.randint(0, len(letters))
        choice = rng.randrange(4)
        if choice == 0:
            i = rng.choice((1, -1)) * rng.randint(1, n - 1)
            letters[pos:pos] = [i, -i]
        elif choice == 1 and n > 2:
            # replace an occurrence of i, i+1, i by i+1, i, i+1 (or insert the relator)
            i = rng.randint(1, n - 2)
            letters[pos:pos] = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
        elif choice == 2 and n > 3:
            i = rng.randint(1, n - 3)
            j = rng.randint(i + 2, n - 1)
            letters[pos:pos] = [i, j, -i, -j]
        else:
            for k in range(len(letters) - 1):
                a, b = letters[k], letters[k + 1]
                if abs(abs(a) - abs(b)) >= 2:
                    letters[k], letters[k + 1] = b, a
                    break
    return BraidWord(n, free_reduce(letters))


def random_presentation(rng: random.Random, ns=(4, 5), max_len: int = 4):
    """A avoids the last generator, B the first; short words so degenerate cases turn up."""
    from braidforge.exchange import ExchangePresentation

    n = rng.choice(ns)

    def side(lo, hi):
        k = rng.randint(0, max_len)
        return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(lo, hi) for _ in range(k)))

    return ExchangePresentation(n, side(1, n - 2), side(2, n - 1))
