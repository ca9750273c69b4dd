import random

import pytest

from fstchar.fermionic import NSequences

# identities below are polynomial in q with exponents linear in the sequence
# entries; this order comfortably exceeds any exponent they can reach
POLY_ORDER = 2000

ENTRY_MAX = 30


def random_nsequences(k, rng, entry_max=ENTRY_MAX):
    n1 = tuple(sorted((rng.randint(0, entry_max) for _ in range(k)), reverse=True))
    n2 = tuple(sorted(rng.randint(0, entry_max) for _ in range(k)))
    return NSequences(n1, n2)


def nsequence_battery(k, count=20, seed=None):
    """`count` random instances plus the all-zero and all-equal edge cases."""
    rng = random.Random(1000 * k if seed is None else seed)
    out = [NSequences((0,) * k, (0,) * k), NSequences((7,) * k, (7,) * k)]
    out.extend(random_nsequences(k, rng) for _ in range(count))
    return out


@pytest.fixture
def rng():
    return random.Random(12345)
