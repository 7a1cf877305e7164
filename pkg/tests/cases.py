"""Deterministic case generators shared by the test modules."""

import random
from fractions import Fraction

from l1fpp.hyperplane import lift, renormed
from l1fpp.seqcore import SummableSeq

SEED = 1729
CONFIGS = [(n, r) for n in (1, 2, 3) for r in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))]


def alpha_for(n, r):
    """Alternating-sign alpha on 1..n with |alpha|_1 = r."""
    return SummableSeq(tuple((i, (-1) ** (i + 1) * r / n) for i in range(1, n + 1)))


def spec_for(n, r):
    return renormed(alpha_for(n, r), n)


def random_rational(rng, num=9, den=6):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_f(rng, support=6):
    """Random functional; about a third of the entries in range are zero."""
    size = rng.randint(0, support)
    return SummableSeq.from_dict({
        i: random_rational(rng) for i in range(1, size + 1) if rng.random() > 0.3
    })


def random_member(rng, spec, max_len=8):
    length = rng.randint(max(spec.n, 1), max_len)
    return lift(spec, [random_rational(rng) for _ in range(length)])


def rng(offset=0):
    return random.Random(SEED + offset)
