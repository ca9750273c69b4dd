"""Pattern calculus on {0,1}^k and the closed fermionic character formula.

Conventions.  A pattern p = (p_1, ..., p_k) carries explicit boundary bits
p_0 (left) and p_{k+1} (right), both 0 unless a construction says otherwise;
they are part of the value because the delta-products below consult them.
The two families of integer sequences are

    N_{1,1} >= N_{1,2} >= ... >= N_{1,k} >= 0     (axis 1, read decreasing)
    N_{2,k} >= N_{2,k-1} >= ... >= N_{2,1} >= 0   (axis 2, read increasing)

with phantom entries N_{1,k+1} = 0 and N_{2,0} = 0.  The building blocks:

    l^1_p = q^{sum p_i N_{1,i}}
    d^1_p = prod_{i=1..k} (1 - q^{N_{1,i}-N_{1,i+1}}  if p_i = 0, p_{i+1} = 1)
    l^2_p = q^{sum p_i N_{2,i}}
    d^2_p = prod_{i=1..k} (1 - q^{N_{2,i}-N_{2,i-1}}  if p_i = 0, p_{i-1} = 1)

All functions are pure; coefficient computations for distinct (n_1, n_2)
are independent and may run in parallel.
"""

import itertools
import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .charseries import CharSeries
from .qseries import QSeries, inv_pochhammer
from .reporting import CheckReport


@dataclass(frozen=True)
class BinaryPattern:
    bits: tuple
    left: int = 0    # boundary bit p_0
    right: int = 0   # boundary bit p_{k+1}

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        if len(self.bits) < 1:
            raise ValueError("patterns need length k >= 1")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("pattern entries must be bits")
        if self.left not in (0, 1) or self.right not in (0, 1):
            raise ValueError("boundary bits must be 0 or 1")

    @property
    def k(self):
        return len(self.bits)

    def ones(self):
        return sum(self.bits)


@dataclass(frozen=True)
class NSequences:
    """The two monotone integer sequences a fermionic summand is built from."""

    n1: tuple  # (N_{1,1}, ..., N_{1,k}), weakly decreasing
    n2: tuple  # (N_{2,1}, ..., N_{2,k}), weakly increasing

    def __post_init__(self):
        object.__setattr__(self, "n1", tuple(self.n1))
        object.__setattr__(self, "n2", tuple(self.n2))
        if len(self.n1) != len(self.n2) or not self.n1:
            raise ValueError("n1 and n2 must have equal positive length")
        if any(x < 0 for x in self.n1 + self.n2):
            raise ValueError("entries must be >= 0")
        if any(self.n1[i] < self.n1[i + 1] for i in range(len(self.n1) - 1)):
            raise ValueError(f"n1 must be weakly decreasing: {self.n1}")
        if any(self.n2[i] > self.n2[i + 1] for i in range(len(self.n2) - 1)):
            raise ValueError(f"n2 must be weakly increasing by index: {self.n2}")

    @property
    def k(self):
        return len(self.n1)

    def N1(self, i):
        """N_{1,i} with the phantom N_{1,k+1} = 0."""
        return self.n1[i - 1] if i <= self.k else 0

    def N2(self, i):
        """N_{2,i} with the phantom N_{2,0} = 0."""
        return self.n2[i - 1] if i >= 1 else 0


def patterns(k, ones):
    """All of {0,1}^k with the given number of ones, in lexicographic order."""
    if not 0 <= ones <= k:
        return []
    out = []
    for positions in itertools.combinations(range(k), ones):
        bits = [0] * k
        for pos in positions:
            bits[pos] = 1
        out.append(BinaryPattern(tuple(bits)))
    return out


def pattern_le(p, p2):
    """p <= p2 iff every prefix sum of p is >= the matching prefix sum of p2."""
    if p.k != p2.k:
        raise ValueError("patterns must have equal length")
    acc1 = acc2 = 0
    for b1, b2 in zip(p.bits, p2.bits):
        acc1 += b1
        acc2 += b2
        if acc1 < acc2:
            return False
    return True


def flip_first(i, j, p):
    """Flip the first i occurrences of bit value j; boundaries reset to 0."""
    return _flip(i, j, p, range(p.k))


def flip_last(i, j, p):
    """Flip the last i occurrences of bit value j; boundaries reset to 0."""
    return _flip(i, j, p, range(p.k - 1, -1, -1))


def _flip(i, j, p, order):
    if j not in (0, 1):
        raise ValueError("bit value must be 0 or 1")
    if i < 0:
        raise ValueError("flip count must be >= 0")
    bits = list(p.bits)
    left = i
    for m in order:
        if left == 0:
            break
        if bits[m] == j:
            bits[m] = 1 - j
            left -= 1
    if left:
        raise ValueError(f"pattern {p.bits} has fewer than {i} entries equal to {j}")
    return BinaryPattern(tuple(bits))


def pos(value, j, p):
    """1-based position of the j-th occurrence of `value` in p."""
    if j < 1:
        raise ValueError("occurrence index is 1-based")
    seen = 0
    for m, b in enumerate(p.bits, start=1):
        if b == value:
            seen += 1
            if seen == j:
                return m
    raise ValueError(f"pattern {p.bits} has fewer than {j} entries equal to {value}")


def l_term(axis, p, N, q_order):
    """The pure power q^{sum p_i N_{axis,i}}."""
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    if p.k != N.k:
        raise ValueError("pattern/sequence length mismatch")
    seq = N.n1 if axis == 1 else N.n2
    return QSeries.monomial(sum(b * x for b, x in zip(p.bits, seq)), q_order)


def _one_minus_q(exponent, q_order):
    # not a dict literal: a zero exponent must yield 1 - q^0 = 0, not -1
    return QSeries.one(q_order) - QSeries.monomial(exponent, q_order)


def delta_term(axis, p, N, q_order):
    """Product of the fired factors (1 - q^{gap}).

    Axis 1 fires factor i when p_i = 0, p_{i+1} = 1 (the right boundary bit
    stands in for p_{k+1}); axis 2 fires when p_i = 0, p_{i-1} = 1 (the left
    boundary bit stands in for p_0).  A zero gap makes the factor vanish.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    if p.k != N.k:
        raise ValueError("pattern/sequence length mismatch")
    k = p.k
    out = QSeries.one(q_order)
    for i in range(1, k + 1):
        here = p.bits[i - 1]
        if axis == 1:
            neighbor = p.bits[i] if i < k else p.right
            gap = N.N1(i) - N.N1(i + 1)
        else:
            neighbor = p.bits[i - 2] if i >= 2 else p.left
            gap = N.N2(i) - N.N2(i - 1)
        if here == 0 and neighbor == 1:
            out = out * _one_minus_q(gap, q_order)
    return out


def _check_weight3(w):
    k0, k1, k2 = (int(x) for x in w)
    if min(k0, k1, k2) < 0 or k0 + k1 + k2 < 1:
        raise ValueError(f"need a level >= 1 weight triple, got {w}")
    return k0, k1, k2


def linear_term(w, N, q_order):
    """Sum over patterns with k_1+k_2 ones of l^1_p d^1_p l^2_{g(p)}.

    g moves the last k_1 ones to zeros before the axis-2 power is read off.
    Default boundary bits throughout.
    """
    k0, k1, k2 = _check_weight3(w)
    k = k0 + k1 + k2
    if N.k != k:
        raise ValueError("sequence length must equal the level")
    total = QSeries.zero(q_order)
    for p in patterns(k, k1 + k2):
        term = l_term(1, p, N, q_order) * delta_term(1, p, N, q_order)
        term = term * l_term(2, flip_last(k1, 1, p), N, q_order)
        total = total + term
    return total


def linear_term_alt(w, N, q_order):
    """Equivalent form indexed by patterns with k_2 ones (axis-2 deltas)."""
    k0, k1, k2 = _check_weight3(w)
    k = k0 + k1 + k2
    if N.k != k:
        raise ValueError("sequence length must equal the level")
    total = QSeries.zero(q_order)
    for p in patterns(k, k2):
        term = l_term(1, flip_last(k1, 0, p), N, q_order)
        term = term * l_term(2, p, N, q_order) * delta_term(2, p, N, q_order)
        total = total + term
    return total


def linear_term_star(w, N, q_order):
    """Variant with right boundary bit 1 and one extra fired factor per summand.

    Each summand for p gains (1 - q^{N_{2,pos}}) where pos locates the
    (k_2+1)-th one of p; defined for strictly positive triples only.
    """
    k0, k1, k2 = _check_weight3(w)
    if min(k0, k1, k2) < 1:
        raise ValueError("all three weight entries must be >= 1")
    k = k0 + k1 + k2
    if N.k != k:
        raise ValueError("sequence length must equal the level")
    total = QSeries.zero(q_order)
    for p in patterns(k, k1 + k2):
        bumped = replace(p, right=1)
        extra = _one_minus_q(N.N2(pos(1, k2 + 1, p)), q_order)
        term = l_term(1, p, N, q_order) * delta_term(1, bumped, N, q_order)
        term = term * l_term(2, flip_last(k1, 1, p), N, q_order) * extra
        total = total + term
    return total


def m_term(w, N, q_order):
    """Sum over patterns with k_0+k_2 ones, axis-2 deltas with left bit 1."""
    k0, k1, k2 = _check_weight3(w)
    if min(k0, k1, k2) < 1:
        raise ValueError("all three weight entries must be >= 1")
    k = k0 + k1 + k2
    if N.k != k:
        raise ValueError("sequence length must equal the level")
    total = QSeries.zero(q_order)
    for p in patterns(k, k0 + k2):
        bumped = replace(p, left=1)
        term = l_term(1, flip_first(k2, 1, p), N, q_order)
        term = term * l_term(2, p, N, q_order) * delta_term(2, bumped, N, q_order)
        total = total + term
    return total


def n_term(w, N, q_order):
    """Sum over patterns with k_0 ones; equals m_term (tested identity)."""
    k0, k1, k2 = _check_weight3(w)
    if min(k0, k1, k2) < 1:
        raise ValueError("all three weight entries must be >= 1")
    k = k0 + k1 + k2
    if N.k != k:
        raise ValueError("sequence length must equal the level")
    total = QSeries.zero(q_order)
    for p in patterns(k, k0):
        flipped = flip_first(k2, 0, p)
        extra = _one_minus_q(N.N2(pos(0, 1, flipped)), q_order)
        term = l_term(1, p, N, q_order) * delta_term(1, p, N, q_order)
        term = term * l_term(2, flipped, N, q_order) * extra
        total = total + term
    return total


@lru_cache(maxsize=None)
def _partitions_bounded(total, parts, largest):
    """Weakly decreasing tuples of length `parts` with entries <= largest
    summing to `total` (zero-padded)."""
    if parts == 0:
        return ((),) if total == 0 else ()
    if total > parts * largest:
        return ()
    out = []
    for first in range(min(total, largest), -1, -1):
        for rest in _partitions_bounded(total - first, parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def n_sequence_pairs(k, n1, n2):
    """All NSequences with sum N_{1,*} = n1 and sum N_{2,*} = n2."""
    firsts = _partitions_bounded(n1, k, n1)
    seconds = _partitions_bounded(n2, k, n2)
    return [
        NSequences(f, tuple(reversed(s))) for f in firsts for s in seconds
    ]


def a_coefficient(w, n1, n2, q_order):
    """Weight-(n1, n2) coefficient of the closed character formula.

    Sums q^{sum N1_i^2 + N2_i^2 + N1_i N2_i} * linear term over all
    NSequences with the given row sums, divided by the Pochhammer factors of
    the successive differences on both axes.
    """
    k0, k1, k2 = _check_weight3(w)
    k = k0 + k1 + k2
    if n1 < 0 or n2 < 0:
        raise ValueError("weights must be >= 0")
    total = QSeries.zero(q_order)
    for N in n_sequence_pairs(k, n1, n2):
        base = sum(
            a * a + b * b + a * b for a, b in zip(N.n1, N.n2)
        )
        if base > q_order:
            continue
        term = QSeries.monomial(base, q_order) * linear_term(w, N, q_order)
        if term.is_zero():
            continue
        for i in range(1, k + 1):
            term = term * inv_pochhammer(N.N1(i) - N.N1(i + 1), q_order)
            term = term * inv_pochhammer(N.N2(i) - N.N2(i - 1), q_order)
        total = total + term
    return total


def character_fermionic(w, q_order, caps):
    """Assemble the closed-formula character over an explicit window (l = 2)."""
    k0, k1, k2 = _check_weight3(w)
    caps = tuple(caps)
    if len(caps) != 2:
        raise ValueError("the closed formula is two-variable: caps must be a pair")
    coeffs = {}
    for n1 in range(caps[0] + 1):
        for n2 in range(caps[1] + 1):
            coeffs[(n1, n2)] = a_coefficient((k0, k1, k2), n1, n2, q_order)
    return CharSeries(2, caps, q_order, coeffs)


# -- identity battery ---------------------------------------------------------


def random_instances(k, count=20, entry_max=30, seed=None):
    """Random monotone sequence pairs plus the all-zero and all-equal cases.

    The identities these feed are polynomial in q with exponents linear in
    the entries; agreement on well-spread integer instances is the working
    evidence standard here, not symbolic proof.
    """
    rng = random.Random(20_000 + k if seed is None else seed)
    out = [NSequences((0,) * k, (0,) * k), NSequences((5,) * k, (5,) * k)]
    for _ in range(count):
        n1 = tuple(sorted((rng.randint(0, entry_max) for _ in range(k)),
                          reverse=True))
        n2 = tuple(sorted(rng.randint(0, entry_max) for _ in range(k)))
        out.append(NSequences(n1, n2))
    return out


def identity_battery(k, instance_count=20, entry_max=30, seed=None):
    """Exercise every pattern-calculus identity at level k; returns a report.

    Covers, for each instance: both prefix-sum expansions l_p = sum of
    l.delta over comparable patterns, the axis interchange for all (i, j)
    with i + j <= k, agreement of the two linear-term forms for every weight
    triple, and for strictly positive triples the four-term difference
    against the starred variant and the equality of the two flipped sums.
    """
    instances = random_instances(k, instance_count, entry_max, seed)
    q_order = 2 * k * entry_max + 2 * entry_max + 16  # above any exponent used
    report = CheckReport(
        name=f"lemmas[k={k}]",
        window={"instances": len(instances), "entry_max": entry_max},
    )

    def check(tag, where, lhs, rhs):
        report.checked += 1
        if lhs != rhs:
            report.add_violation(
                where={"identity": tag, **where}, expected=rhs, actual=lhs
            )

    for N in instances:
        for i in range(k + 1):
            for p in patterns(k, i):
                rhs1 = QSeries.zero(q_order)
                rhs2 = QSeries.zero(q_order)
                for p2 in patterns(k, i):
                    if pattern_le(p2, p):
                        rhs1 = rhs1 + l_term(1, p2, N, q_order) * delta_term(
                            1, p2, N, q_order
                        )
                    if pattern_le(p, p2):
                        rhs2 = rhs2 + l_term(2, p2, N, q_order) * delta_term(
                            2, p2, N, q_order
                        )
                check("prefix-sum-expansion-axis1", {"p": p.bits},
                      l_term(1, p, N, q_order), rhs1)
                check("prefix-sum-expansion-axis2", {"p": p.bits},
                      l_term(2, p, N, q_order), rhs2)
        for i in range(k + 1):
            for j in range(k - i + 1):
                lhs = QSeries.zero(q_order)
                for p in patterns(k, i + j):
                    lhs = lhs + (
                        l_term(1, p, N, q_order)
                        * delta_term(1, p, N, q_order)
                        * l_term(2, flip_last(i, 1, p), N, q_order)
                    )
                rhs = QSeries.zero(q_order)
                for p in patterns(k, j):
                    rhs = rhs + (
                        l_term(1, flip_last(i, 0, p), N, q_order)
                        * l_term(2, p, N, q_order)
                        * delta_term(2, p, N, q_order)
                    )
                check("axis-interchange", {"i": i, "j": j}, lhs, rhs)
        for k0 in range(k + 1):
            for k1 in range(k - k0 + 1):
                w = (k0, k1, k - k0 - k1)
                check("linear-term-two-forms", {"w": w},
                      linear_term(w, N, q_order), linear_term_alt(w, N, q_order))
                if min(w) >= 1:
                    k2 = w[2]
                    four = (
                        linear_term(w, N, q_order)
                        - linear_term((k0 - 1, k1 + 1, k2), N, q_order)
                        - linear_term((k0, k1 - 1, k2 + 1), N, q_order)
                        + linear_term((k0 - 1, k1, k2 + 1), N, q_order)
                    )
                    check("four-term-difference", {"w": w},
                          four, linear_term_star(w, N, q_order))
                    check("flip-expansion-match", {"w": w},
                          m_term(w, N, q_order), n_term(w, N, q_order))
    return report
