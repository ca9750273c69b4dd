"""Known one-variable character forms and the specialization cross-checks.

Two specializations collapse the two-variable characters:

    spec_1:  q -> q^2,  z_1 -> q^{-2} z,  z_2 -> q^{-1} z      (z survives)
    spec_2:  q -> q^2,  z_1 -> q^{-2},    z_2 -> q^{-1}        (scalar)

Under spec_2 a configuration of degree d and weight (n_1, n_2) lands on
q^{2d - 2n_1 - n_2}, and 2d - 2n_1 - n_2 equals its first moment
sum_i i*a_i, which is why spec_2 outputs match first-moment censuses.

The comparison targets are two previously known closed forms: a principally
specialized double sum over (q^2)-Pochhammer denominators (k_2 = 0 only,
"fjmmt" below) and a level-k fermionic sum with Gaussian-binomial factors
("fjmmt2" below, finite or stabilized infinite site count).
"""

from .admissible import HighestWeight, character_oracle, energy, enumerate_configs
from .charseries import SpecializedSeries, specialize
from .fermionic import character_fermionic
from .qseries import QSeries, gaussian_binomial, inv_pochhammer
from .reporting import CheckReport

SPEC1_VARS = ((-2, "z"), (-1, "z"))
SPEC2_VARS = ((-2, "one"), (-1, "one"))


def spec1(char):
    """Apply spec_1 to a two-variable character."""
    return specialize(char, 2, SPEC1_VARS)


def spec2(char):
    """Apply spec_2 to a two-variable character; returns the scalar form."""
    return specialize(char, 2, SPEC2_VARS)


# -- principal specialization sum (k_2 = 0) ---------------------------------


def fjmmt_matrix(k):
    """2k x 2k block matrix ((A2 B3) (B3 A2)), A2_ab = 2min(a,b), B3_ab = max(0, a+b-k)."""
    a2 = [[2 * min(a, b) for b in range(1, k + 1)] for a in range(1, k + 1)]
    b3 = [[max(0, a + b - k) for b in range(1, k + 1)] for a in range(1, k + 1)]
    top = [a2[i] + b3[i] for i in range(k)]
    bottom = [b3[i] + a2[i] for i in range(k)]
    return top + bottom


def fjmmt_c_vector(k, k0):
    """(0,...,0, 1, 2, ..., k-k0, 0,...,0): k0 leading zeros, then a zero block."""
    return tuple([0] * k0 + list(range(1, k - k0 + 1)) + [0] * k)


def fjmmt_linear_coeffs(k, k0):
    """Effective linear exponent per unit of m, with the overall q^{l_2} folded in."""
    matrix = fjmmt_matrix(k)
    c = fjmmt_c_vector(k, k0)
    coeffs = []
    for i in range(2 * k):
        value = -matrix[i][i] + 2 * c[i]
        if i >= k:
            value += i - k + 1  # q^{l_2} contributes the part size per unit
        coeffs.append(value)
    return tuple(coeffs)


def _parts_by_multiplicity(total, k):
    """All (m_1, ..., m_k) >= 0 with sum j*m_j = total."""
    out = []

    def rec(prefix, j, remaining):
        if j > k:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for count in range(remaining // j + 1):
            rec(prefix + [count], j + 1, remaining - j * count)

    rec([], 1, total)
    return out


def chi_fjmmt(k0, k1, z_cap, q_order):
    """Principally specialized character for weights with k_2 = 0.

    Coefficient of z^n sums over l_1 + l_2 = n and exponent vectors m with
    sum_j j*m_{ij} = l_i the term
    q^{m.A.m - diag(A).m + 2c.m + l_2} / prod (q^2)_{m_{ij}}.
    """
    if k0 < 0 or k1 < 0 or k0 + k1 < 1:
        raise ValueError("need k0, k1 >= 0 with level k0 + k1 >= 1")
    k = k0 + k1
    matrix = fjmmt_matrix(k)
    c = fjmmt_c_vector(k, k0)
    diag = [matrix[i][i] for i in range(2 * k)]
    terms = {}
    for n in range(z_cap + 1):
        total = QSeries.zero(q_order)
        for l1 in range(n + 1):
            l2 = n - l1
            for m1 in _parts_by_multiplicity(l1, k):
                for m2 in _parts_by_multiplicity(l2, k):
                    m = m1 + m2
                    quad = sum(
                        matrix[i][j] * m[i] * m[j]
                        for i in range(2 * k)
                        for j in range(2 * k)
                        if m[i] and m[j]
                    )
                    expo = quad + sum(
                        (2 * c[i] - diag[i]) * m[i] for i in range(2 * k)
                    ) + l2
                    if expo > q_order:
                        continue
                    term = QSeries.monomial(expo, q_order)
                    for mi in m:
                        if mi:
                            term = term * inv_pochhammer(mi, q_order, scale=2)
                    total = total + term
        terms[n] = total
    return SpecializedSeries(terms=terms)


# -- level-k fermionic sum with Gaussian binomials ---------------------------


def fjmmt2_matrix(k):
    """k x k matrix with entries 2min(i,j) + max(i+j-k, 0), 1-based."""
    return [
        [2 * min(i, j) + max(i + j - k, 0) for j in range(1, k + 1)]
        for i in range(1, k + 1)
    ]


def fjmmt2_r_vector(k, a, b):
    """(0,...,0 | 1,...,b | b+2, b+4, ..., 2k-2a-b): blocks of sizes a, b, k-a-b."""
    if a < 0 or b < 0 or a + b > k:
        raise ValueError(f"need a, b >= 0 with a + b <= {k}")
    return tuple(
        [0] * a + list(range(1, b + 1)) + list(range(b + 2, 2 * k - 2 * a - b + 1, 2))
    )


def _fjmmt2_terms(k, a, b, q_order):
    """Contributing m-vectors with their base exponents Q(m) + r.m <= q_order."""
    matrix = fjmmt2_matrix(k)
    r = fjmmt2_r_vector(k, a, b)

    def base(m):
        quad = sum(
            matrix[i][j] * m[i] * m[j] for i in range(k) for j in range(k)
        ) - sum(matrix[j][j] * m[j] for j in range(k))
        return quad // 2 + sum(r[i] * m[i] for i in range(k))

    found = []
    m = [0] * k

    def rec(j):
        if j == k:
            found.append((tuple(m), base(m)))
            return
        v = 0
        while True:
            m[j] = v
            if base(m) > q_order:
                m[j] = 0
                break
            rec(j + 1)
            v += 1
        m[j] = 0

    rec(0)
    return matrix, r, found


def stabilization_sites(k, a, b, q_order):
    """Smallest site count N making every contributing binomial q_order-stable.

    Stability means the binomial's top argument exceeds its bottom one by at
    least q_order, at which point it agrees with 1/(q)_m to the working order.
    """
    matrix, r, found = _fjmmt2_terms(k, a, b, q_order)
    needed = 0
    for m, _ in found:
        for j in range(k):
            if m[j]:
                num = q_order + sum(matrix[j][i] * m[i] for i in range(k))
                num += r[j] - matrix[j][j]
                needed = max(needed, -(-num // (j + 1)))
    return needed


def chi_fjmmt2(a, b, k, n_sites, q_order):
    """The level-k fermionic sum with Gaussian-binomial factors.

    n_sites = None means unbounded site count: every binomial is replaced by
    its stabilized value, realized by evaluating at stabilization_sites(...)
    (the result is independent of any larger choice).

    For a + b > k the pair is saturated to (a, k - a): the configuration
    constraint encoded by b is already slack there, and larger b values
    describe the same set.  This matches the out-of-range terms produced by
    the alternating-sum identity for weights with k_2 = 0.
    """
    if not 0 <= a <= k or b < 0:
        raise ValueError(f"need 0 <= a <= {k} and b >= 0")
    if a + b > k:
        b = k - a
    if n_sites is None:
        n_sites = stabilization_sites(k, a, b, q_order)
    matrix, r, found = _fjmmt2_terms(k, a, b, q_order)
    total = QSeries.zero(q_order)
    for m, base in found:
        term = QSeries.monomial(base, q_order)
        for j in range(k):
            if m[j]:
                top = (
                    (j + 1) * n_sites
                    - sum(matrix[j][i] * m[i] for i in range(k))
                    + matrix[j][j]
                    - r[j]
                    + m[j]
                )
                term = term * gaussian_binomial(top, m[j], q_order)
                if term.is_zero():
                    break
        total = total + term
    return total


def chi_fjmmt2_alternating(weight, q_order):
    """The two-diagonal alternating combination attached to a weight triple."""
    k0, k1, _ = HighestWeight.coerce(weight).parts
    k = HighestWeight.coerce(weight).level
    s = k0 + k1
    total = QSeries.zero(q_order)
    for j in range(k0 + 1):
        total = total + chi_fjmmt2(j, s - j, k, None, q_order)
    for j in range(k0):
        total = total - chi_fjmmt2(j, s + 1 - j, k, None, q_order)
    return total


# -- censuses (brute-force side of the comparisons) --------------------------


def prefix_census(k, a, b, energy_max):
    """sum q^{first moment} over admissible configs with exact prefix a_0=a, a_1=b."""
    terms = {}
    for config in enumerate_configs(
        2, (k, 0, 0), init_prefix=(a, b), energy_max=energy_max
    ):
        e = energy(config)
        terms[e] = terms.get(e, 0) + 1
    return QSeries(terms, energy_max)


def bounded_census(k, a, b, energy_max):
    """Census of the set the fermionic sum counts: a_0 <= a, a_1 <= b + 2(a - a_0)."""
    total = QSeries.zero(energy_max)
    for a0 in range(a + 1):
        for a1 in range(min(b + 2 * (a - a0), k - a0) + 1):
            total = total + prefix_census(k, a0, a1, energy_max)
    return total


# -- executable comparisons ---------------------------------------------------


def spec2_window(level, q_order):
    """Window on which spec_2 of a level-`level` character is exact to q_order.

    A configuration with weight (n_1, n_2) has first moment at least
    max(2(n_1 - level), n_2), so vectors beyond these caps only feed
    exponents above q_order; the input q-order then keeps the truncation
    guarantee at or above q_order as well.
    """
    caps = (level + q_order // 2, q_order)
    q_in = (3 * q_order + 2 * level + 1) // 2
    return caps, q_in


def verify_spec1(k0, k1, z_cap, q_order):
    """spec_1 of the closed-formula character against the principal sum.

    Both sides are compared per z-exponent on the guaranteed-valid order of
    the specialized side (2*q_order - 2n at z^n for n within the caps).
    """
    fer = character_fermionic((k0, k1, 0), q_order, (z_cap, z_cap))
    left = spec1(fer)
    right = chi_fjmmt(k0, k1, z_cap, 2 * q_order)
    report = CheckReport(
        name=f"spec1[{k0},{k1}]",
        window={"z_cap": z_cap, "q_order": q_order},
    )
    for n in range(z_cap + 1):
        lhs = left.terms[n]
        rhs = right.terms[n].truncate(lhs.trunc)
        report.checked += 1
        if lhs.min_exponent() is not None and lhs.min_exponent() < 0:
            report.add_violation(
                where={"z": n, "issue": "negative exponent"}, expected="", actual=lhs
            )
        if lhs != rhs:
            report.add_violation(where={"z": n}, expected=rhs, actual=lhs)
    return report


def verify_spec2(weight, q_order):
    """spec_2 of the closed-formula character against the fermionic sums.

    Checks the alternating two-diagonal combination for every weight, and
    additionally the single-term form when k_0 = 0 or k_2 = 0.
    """
    weight = HighestWeight.coerce(weight)
    k0, k1, k2 = weight.parts
    caps, q_in = spec2_window(weight.level, q_order)
    left = spec2(character_fermionic(weight.parts, q_in, caps)).series
    if left.trunc < q_order:
        raise AssertionError("window derivation failed to reach the target order")
    left = left.truncate(q_order)
    report = CheckReport(
        name=f"spec2[{k0},{k1},{k2}]",
        window={"q_order": q_order, "caps": list(caps), "q_in": q_in},
    )
    if left.min_exponent() is not None and left.min_exponent() < 0:
        report.add_violation(
            where={"issue": "negative exponent"}, expected="", actual=left
        )
    alternating = chi_fjmmt2_alternating(weight.parts, q_order)
    report.checked += 1
    if left != alternating:
        report.add_violation(
            where={"form": "alternating"}, expected=alternating, actual=left
        )
    if k0 == 0 or k2 == 0:
        single = chi_fjmmt2(k0, k1, weight.level, None, q_order)
        report.checked += 1
        if left != single:
            report.add_violation(
                where={"form": "single-term"}, expected=single, actual=left
            )
    return report


def verify_union_identity(weight, q_order):
    """spec_2 of the brute-force character equals the sum of prefix censuses.

    The admissible set for a weight decomposes by the exact values of
    (a_0, a_1) into the prefixes with a_0 <= k_0, a_0 + a_1 <= k_0 + k_1.
    """
    weight = HighestWeight.coerce(weight)
    k0, k1, _ = weight.parts
    caps, q_in = spec2_window(weight.level, q_order)
    left = spec2(character_oracle(2, weight, q_in, caps)).series.truncate(q_order)
    total = QSeries.zero(q_order)
    for a in range(k0 + 1):
        for b in range(k0 + k1 - a + 1):
            total = total + prefix_census(weight.level, a, b, q_order).truncate(q_order)
    report = CheckReport(
        name=f"spec2-union[{','.join(map(str, weight.parts))}]",
        window={"q_order": q_order, "caps": list(caps), "q_in": q_in},
    )
    report.checked += 1
    if left != total:
        report.add_violation(where={"form": "prefix-union"}, expected=total, actual=left)
    return report
