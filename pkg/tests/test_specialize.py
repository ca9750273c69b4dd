import json
from importlib import resources

import pytest

from fstchar.admissible import character_oracle
from fstchar.qseries import QSeries
from fstchar.specialize import (
    bounded_census,
    chi_fjmmt,
    chi_fjmmt2,
    chi_fjmmt2_alternating,
    fjmmt2_matrix,
    fjmmt2_r_vector,
    fjmmt_linear_coeffs,
    fjmmt_matrix,
    prefix_census,
    spec2,
    stabilization_sites,
    verify_spec1,
    verify_spec2,
    verify_union_identity,
)


class TestExponentData:
    def test_level2_golden(self):
        golden = json.loads(
            resources.files("fstchar.data").joinpath("fjmmt_k2.json").read_text()
        )
        assert fjmmt_matrix(2) == golden["matrix"]
        for key, coeffs in golden["linear"].items():
            k0 = int(key.split(",")[0])
            assert list(fjmmt_linear_coeffs(2, k0)) == coeffs

    def test_matrix_symmetry(self):
        for k in (1, 2, 3):
            m = fjmmt_matrix(k)
            assert all(m[i][j] == m[j][i] for i in range(2 * k) for j in range(2 * k))

    def test_level_k_matrix(self):
        assert fjmmt2_matrix(2) == [[2, 3], [3, 6]]
        assert fjmmt2_matrix(1) == [[3]]

    def test_r_vector_blocks(self):
        assert fjmmt2_r_vector(3, 1, 1) == (0, 1, 3)
        assert fjmmt2_r_vector(3, 0, 0) == (2, 4, 6)
        assert fjmmt2_r_vector(2, 1, 0) == (0, 2)
        assert fjmmt2_r_vector(4, 1, 2) == (0, 1, 2, 4)

    def test_r_vector_validates(self):
        with pytest.raises(ValueError):
            fjmmt2_r_vector(2, 2, 1)


class TestChiFjmmt:
    def test_empty_exponent_term(self):
        out = chi_fjmmt(2, 0, 3, 12)
        assert out.terms[0] == QSeries.one(12)

    def test_rejects_level_zero(self):
        with pytest.raises(ValueError):
            chi_fjmmt(0, 0, 2, 8)


class TestChiFjmmt2:
    def test_zero_vector_term(self):
        assert chi_fjmmt2(0, 0, 2, None, 0) == QSeries.one(0)

    def test_validates_range(self):
        with pytest.raises(ValueError):
            chi_fjmmt2(-1, 0, 2, None, 8)
        with pytest.raises(ValueError):
            chi_fjmmt2(3, 0, 2, None, 8)

    def test_level1_matches_spec2_of_oracle(self):
        # the single-term form at weight (1,0,0)
        q_order = 20
        from fstchar.specialize import spec2_window

        caps, q_in = spec2_window(1, q_order)
        left = spec2(character_oracle(2, (1, 0, 0), q_in, caps)).series.truncate(
            q_order
        )
        assert left == chi_fjmmt2(1, 0, 1, None, q_order)

    @pytest.mark.parametrize("k", [1, 2])
    def test_census_oracle(self, k):
        # independent brute force for the closed sum: it counts admissible
        # configurations with a_0 <= a and a_1 <= b + 2(a - a_0)
        q_order = 16
        for a in range(k + 1):
            for b in range(k - a + 1):
                formula = chi_fjmmt2(a, b, k, None, q_order)
                census = bounded_census(k, a, b, q_order)
                assert formula == census, (k, a, b)

    def test_prefix_census_is_finer(self):
        # summing exact-prefix censuses over the bounded range reproduces
        # bounded_census by construction; spot-check one prefix directly
        got = prefix_census(1, 1, 0, 8)
        # a_0 = 1 forces gaps >= 3: one config per energy 0, 3, 4, ..., 8
        assert got == QSeries({0: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1}, 8)

    def test_stabilization_doubling(self):
        for (a, b, k) in [(1, 0, 1), (1, 1, 2), (0, 2, 2), (2, 0, 2)]:
            q_order = 16
            sites = stabilization_sites(k, a, b, q_order)
            at_sites = chi_fjmmt2(a, b, k, sites, q_order)
            doubled = chi_fjmmt2(a, b, k, 2 * sites, q_order)
            infinite = chi_fjmmt2(a, b, k, None, q_order)
            assert at_sites == doubled == infinite

    def test_finite_site_count_truncates_census(self):
        # small site counts cut off configurations supported past them
        full = chi_fjmmt2(1, 0, 1, None, 6)
        small = chi_fjmmt2(1, 0, 1, 3, 6)
        assert small != full
        assert small.coeffs[0] == full.coeffs[0]

    def test_saturated_pairs_collapse(self):
        assert chi_fjmmt2(1, 2, 2, None, 12) == chi_fjmmt2(1, 1, 2, None, 12)


class TestVerifiers:
    def test_spec1_level1(self):
        report = verify_spec1(1, 0, 5, 14)
        assert report.ok, report.violations[:1]

    def test_spec1_level2_pair(self):
        report = verify_spec1(1, 1, 5, 14)
        assert report.ok, report.violations[:1]

    @pytest.mark.parametrize("w", [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    def test_spec2_level1(self, w):
        report = verify_spec2(w, 14)
        assert report.ok, report.violations[:1]

    def test_spec2_alternating_mixed_weight(self):
        # both k_0 and k_2 nonzero: only the alternating form applies
        report = verify_spec2((1, 0, 1), 12)
        assert report.ok, report.violations[:1]
        assert report.checked == 1

    def test_spec2_single_term_weight(self):
        report = verify_spec2((0, 1, 1), 12)
        assert report.ok
        assert report.checked == 2  # alternating and single-term forms

    def test_union_identity_level1(self):
        for w in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
            report = verify_union_identity(w, 12)
            assert report.ok, (w, report.violations[:1])

    def test_specialized_oracle_exponents_nonnegative(self):
        # every generator raises the degree enough that both collapses keep
        # all q-exponents at or above zero
        from fstchar.specialize import spec1

        for w in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 0, 1), (0, 0, 2)]:
            ch = character_oracle(2, w, 12, (5, 5))
            graded = spec1(ch)
            for series in graded.terms.values():
                assert series.min_exponent() is None or series.min_exponent() >= 0
            scalar = spec2(ch).series
            assert scalar.min_exponent() is None or scalar.min_exponent() >= 0

    def test_alternating_equals_sum_of_prefixes(self):
        # directly: the alternating combination reproduces the weight's census
        q_order = 12
        for w in [(1, 1, 0), (1, 0, 1), (2, 0, 0)]:
            k0, k1, _ = w
            total = QSeries.zero(q_order)
            for a in range(k0 + 1):
                for b in range(k0 + k1 - a + 1):
                    total = total + prefix_census(sum(w), a, b, q_order).truncate(
                        q_order
                    )
            assert chi_fjmmt2_alternating(w, q_order) == total, w
