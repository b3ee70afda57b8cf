import numpy as np
import pytest

import oracles
from boolfn import (
    Anf,
    BoolFnError,
    DegreeError,
    ParityError,
    SizeCapError,
    TruthTable,
    VectorialBf,
    anf_to_tt,
    bent_component_count,
    component,
    components,
    ddt,
    derivative,
    first_order_moment,
    is_ab,
    is_apn_ddt,
    is_apn_via_m,
    is_balanced,
    is_partially_bent,
    is_permutation,
    linear_space,
    m_a,
    m_profile,
    m_total,
    m_value,
    parse_anf,
    parse_vbf,
    power_moment_L4,
    second_order_moment,
    tt_to_anf,
    weight,
    z_a_structure,
)
from boolfn import vbf as V
from helpers import all_low_degree, bits, random_anf, random_table

EXAMPLE = parse_vbf("n=3\nx1*x3 + x2*x3 + x1\nx2*x3 + x1 + x2\nx1*x2 + x1 + x2 + x3\n")


def T(text, n):
    return anf_to_tt(parse_anf(text, n))


def random_vbf(rng, n, max_deg, p=0.5):
    return VectorialBf.from_anfs([random_anf(rng, n, max_deg, p) for _ in range(n)])


def pure_quadratic(rng, n):
    return VectorialBf.from_anfs([random_anf(rng, n, 2).part(2) for _ in range(n)])


def affine_bijection(rng, n):
    from boolfn import AffineMap

    phi = AffineMap.random(n, rng)
    return VectorialBf.from_lut(phi.images())


class TestComponents:
    def test_examples(self):
        f1, f2, _ = EXAMPLE.coordinates
        assert component(EXAMPLE, 1) == f1
        assert component(EXAMPLE, (1, 1, 0)) == f1 ^ f2
        with pytest.raises(BoolFnError):
            component(EXAMPLE, 0)

    def test_all_components_match_oracle(self, rng):
        F = random_vbf(rng, 4, 4)
        lut = F.lut().tolist()
        for lam, c in enumerate(components(F), start=1):
            assert bits(c) == oracles.component_table(lut, lam)

    def test_degree_over_components(self):
        # two cubic coordinates whose sum is quadratic; the max is still 3
        F = VectorialBf([T("x1*x2*x3 + x1*x2", 3), T("x1*x2*x3", 3), T("x1", 3)])
        assert V.degree(F) == 3
        G = VectorialBf([T("x1*x2", 3), T("x1*x2 + x3", 3), T("x2", 3)])
        assert V.degree(G) == 2


class TestPermutation:
    def test_examples(self):
        assert is_permutation(VectorialBf.identity(3))
        assert not is_permutation(VectorialBf.from_lut([5] * 8))
        assert is_permutation(EXAMPLE)

    def test_matches_balanced_components(self, rng):
        for _ in range(30):
            lut = rng.permutation(16) if rng.random() < 0.5 else rng.integers(0, 16, 16)
            F = VectorialBf.from_lut(lut)
            assert is_permutation(F) == all(is_balanced(c) for c in components(F))
            assert is_permutation(F) == oracles.is_permutation(lut.tolist())


class TestDdt:
    def test_examples(self, rng):
        assert ddt(affine_bijection(rng, 4)).delta == 16
        assert ddt(EXAMPLE).delta == 2 and is_apn_ddt(EXAMPLE)

    def test_table_invariants(self, rng):
        for n in (3, 4, 5):
            t = ddt(random_vbf(rng, n, n))
            assert (t.row_sums() == 1 << n).all()
            assert (t.table % 2 == 0).all()
            assert t.delta >= 2

    def test_oracle(self, rng):
        for _ in range(20):
            F = random_vbf(rng, 4, 3)
            assert ddt(F).delta == oracles.ddt_delta(F.lut().tolist(), 4)

    def test_cap(self):
        with pytest.raises(SizeCapError):
            ddt(VectorialBf.identity(13))


class TestMoments:
    def test_l4_examples(self):
        assert power_moment_L4(EXAMPLE) == 7168 == V.l4_bound(3)
        assert power_moment_L4(VectorialBf.identity(3)) == 28672

    def test_l4_oracle(self, rng):
        for n in (3, 4):
            for _ in range(5):
                F = random_vbf(rng, n, n)
                assert power_moment_L4(F) == oracles.l4(F.lut().tolist(), n)

    def test_l4_exact_large_values(self):
        # constant map: every component constant, |W(0)| = 2^14 at n = 14
        F = VectorialBf([TruthTable.constant(14, 0)] * 14)
        assert power_moment_L4(F) == ((1 << 14) - 1) * (1 << 56)

    def test_first_order_examples(self):
        assert first_order_moment(EXAMPLE) == 896 == V.moment_bound(3)
        ident = first_order_moment(VectorialBf.identity(3))
        assert ident == oracles.first_moment(list(range(8)), 3) and ident > 896

    def test_first_order_oracle(self, rng):
        for _ in range(6):
            F = random_vbf(rng, 3, 3)
            assert first_order_moment(F) == oracles.first_moment(F.lut().tolist(), 3)

    def test_first_order_zero_shift_term(self, rng):
        # the a = 0 terms alone contribute 2^(2n) (2^n - 1)
        F = random_vbf(rng, 4, 3)
        rest = sum(
            sum((-1) ** v for v in bits(derivative(c, a))) ** 2
            for c in components(F)
            for a in range(1, 16)
        )
        assert first_order_moment(F) - rest == (1 << 8) * 15

    def test_second_order(self, rng):
        assert second_order_moment(EXAMPLE) == 896
        assert second_order_moment(EXAMPLE, "generic") == 896
        ident = VectorialBf.identity(3)
        assert second_order_moment(ident, "generic") > V.moment_bound(3)
        for _ in range(6):
            F = random_vbf(rng, 3, 3)
            s = second_order_moment(F, "generic")
            assert s == oracles.second_moment(F.lut().tolist(), 3)
            assert (s << 3) == power_moment_L4(F)
            assert second_order_moment(F, "algebraic") == s

    def test_second_order_identity_high_degree(self, rng):
        for _ in range(3):
            F = random_vbf(rng, 4, 4)
            assert second_order_moment(F, "generic") << 4 == power_moment_L4(F)

    def test_workers_deterministic(self, rng):
        F = random_vbf(rng, 6, 3)
        assert power_moment_L4(F, workers=3) == power_moment_L4(F)
        assert first_order_moment(F, workers=3) == first_order_moment(F)
        assert m_total(F, workers=3) == m_total(F)


class TestM:
    def test_examples(self):
        t = T("x1 + x3", 3)
        assert all(v == 8 for v in m_profile(t).values.values())
        assert m_value(t) == 8 * 7
        assert m_value(T("x1*x2", 2)) == 0
        assert m_value(T("x1*x2 + x3", 3)) == 8

    def test_paths_agree(self, rng):
        for n in (2, 3, 4, 5, 6):
            for _ in range(10):
                t = anf_to_tt(random_anf(rng, n, 3, 0.4))
                assert m_profile(t, "generic") == m_profile(t, "algebraic")

    def test_oracle(self, rng):
        for n in (3, 4):
            for _ in range(8):
                t = anf_to_tt(random_anf(rng, n, 3, 0.4))
                for a in range(1, 1 << n):
                    assert m_a(t, a) == oracles.m_a(bits(t), n, a)

    def test_generic_handles_high_degree(self, rng):
        t = random_table(rng, 4)
        assert m_value(t, "generic") == oracles.m_f(bits(t), 4)
        if t.degree() > 3:
            with pytest.raises(DegreeError):
                m_value(t, "algebraic")

    def test_caps(self):
        with pytest.raises(SizeCapError):
            m_a(TruthTable.constant(9, 0), 1, "generic")
        with pytest.raises(BoolFnError):
            m_a(TruthTable.constant(3, 0), 1, "fast")

    def test_value_set_exhaustive_n3(self):
        n = 3
        for f in all_low_degree(n, 3):
            t = anf_to_tt(f)
            for a in range(1, 1 << n):
                v = m_a(t, a)
                d = derivative(t, a)
                allowed = {0, 1 << n} | {1 << (n - j) for j in range(0, n, 2)}
                assert v in allowed
                assert (v == 1 << n) == d.is_constant()
                assert (v == 0) == is_balanced(d)

    def test_value_set_cubic_n6(self, rng):
        n = 6
        seen_j = set()
        for _ in range(30):
            t = anf_to_tt(random_anf(rng, n, 3, 0.3))
            for a, v in m_profile(t).values.items():
                d = derivative(t, a)
                assert (v == 1 << n) == d.is_constant()
                assert (v == 0) == is_balanced(d)
                if v not in (0, 1 << n):
                    j = n - v.bit_length() + 1
                    assert v == 1 << (n - j) and j % 2 == 0 and j > 0
                    seen_j.add(j)
        assert seen_j

    def test_total_examples(self, rng):
        assert m_total(EXAMPLE) == 56
        assert m_total(affine_bijection(rng, 3)) == 8 * 7 * 7

    def test_m_zero_iff_bent(self, rng):
        for _ in range(30):
            t = anf_to_tt(random_anf(rng, 4, 3, 0.4))
            from boolfn import is_bent

            assert (m_value(t) == 0) == is_bent(t)

    def test_m_2n_iff_semi_bent_quadratic(self, rng):
        from boolfn import is_semi_bent

        for _ in range(30):
            t = anf_to_tt(random_anf(rng, 5, 2))
            if t.degree() == 2:
                assert (m_value(t) == 32) == is_semi_bent(t)
                assert m_value(t) == 32 * ((1 << linear_space(tt_to_anf(t)).dim) - 1)


class TestApnViaM:
    def test_example(self):
        assert is_apn_via_m(EXAMPLE)
        assert V.apn_m_witness(EXAMPLE) is not None

    def test_degree_checked(self):
        with pytest.raises(DegreeError):
            is_apn_via_m(VectorialBf.identity(3))

    def test_non_apn_quadratic(self, rng):
        found = 0
        while found < 5:
            F = pure_quadratic(rng, 4)
            if V.degree(F) != 2 or is_apn_ddt(F):
                continue
            found += 1
            assert not is_apn_via_m(F)
            assert m_total(F) > V.apn_m_value(4)

    @pytest.mark.parametrize("n", [3, 4])
    def test_oracle_triangle(self, rng, n):
        for _ in range(60):
            F = random_vbf(rng, n, 2 if rng.random() < 0.6 else 3)
            if V.degree(F) not in (2, 3):
                continue
            apn = is_apn_ddt(F)
            L4 = power_moment_L4(F)
            M = m_total(F)
            assert L4 == (1 << (3 * n)) * ((1 << n) - 1) + (1 << (2 * n)) * M
            assert apn == (L4 == V.l4_bound(n)) == (M == V.apn_m_value(n)) == is_apn_via_m(F)
            if n == 3:
                assert apn == (second_order_moment(F, "generic") == V.moment_bound(3))
            if apn:
                lam = V.apn_m_witness(F)
                assert m_value(component(F, lam)) <= 1 << n

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_linear_space_formula_pure_quadratic(self, rng, n):
        for _ in range(10):
            F = pure_quadratic(rng, n)
            assert m_total(F) == V.m_total_from_linear_spaces(F)
            dims = [linear_space(tt_to_anf(c)).dim for c in components(F)]
            s = sum((1 << d) - 1 for d in dims)
            assert s >= (1 << n) - 1
            assert (s == (1 << n) - 1) == is_apn_ddt(F)

    @pytest.mark.parametrize("n", [3, 5])
    def test_odd_apn_iff_ab(self, rng, n):
        hits = 0
        for _ in range(80 if n == 3 else 40):
            F = pure_quadratic(rng, n)
            apn = is_apn_ddt(F)
            hits += apn
            every_2n = all(m_value(c) == 1 << n for c in components(F))
            assert apn == every_2n == is_ab(F)
        assert hits > 0 or n == 5


class TestPredicates:
    def test_partially_bent(self, rng):
        assert is_partially_bent(T("x1*x2 + x3*x4", 4))
        assert not is_partially_bent(T("x1*x2*x3", 3))
        for _ in range(20):
            assert is_partially_bent(anf_to_tt(random_anf(rng, 5, 2)))

    def test_bent_components(self, rng):
        assert bent_component_count(affine_bijection(rng, 4)) == 0
        with pytest.raises(ParityError):
            bent_component_count(EXAMPLE)
        with pytest.raises(ParityError):
            is_ab(VectorialBf.identity(4))

    def test_ab_example(self):
        assert is_ab(EXAMPLE)
        from boolfn import nonlinearity

        assert all(nonlinearity(c) == 2 for c in components(EXAMPLE))


class TestZa:
    def test_examples(self):
        t = T("x1*x2", 2)
        s = z_a_structure(t, 0)
        assert sorted(s.z_elements()) == [0, 1, 2, 3] and s.u_elements() == []
        s = z_a_structure(t, (1, 0))
        assert sorted(s.z_elements()) == [0, 1]
        assert sorted(s.u_elements()) == [2, 3]

    def test_paths_match_oracle(self, rng):
        for n in (3, 4):
            for _ in range(15):
                t = anf_to_tt(random_anf(rng, n, 3, 0.4))
                for a in range(1 << n):
                    zs, us = oracles.z_a(bits(t), n, a)
                    for method in ("generic", "algebraic"):
                        s = z_a_structure(t, a, method)
                        assert sorted(s.z_elements()) == zs
                        assert sorted(s.u_elements()) == us
                        assert len(s.basis) >= 1
