import pytest

import oracles
from boolfn import (
    AffineFunctionError,
    Anf,
    Kind,
    NotQuadraticError,
    SizeCapError,
    TruthTable,
    anf_to_tt,
    bilinear_rank,
    classify_quadratic,
    fourier,
    is_semi_bent,
    linear_space,
    nonlinearity,
    parse_anf,
    quadratic_nl,
    quadratic_weight,
    quadratics_affine_equivalent,
    weight,
)
from boolfn.quadratic import QuadraticClass, classify_low_degree, linear_space_quadratic
from helpers import all_low_degree, bits, monos, random_anf, random_exact_degree


def A(text, n):
    return parse_anf(text, n)


class TestBilinearRank:
    def test_examples(self):
        k, rad = bilinear_rank(A("x1*x2 + x3*x4", 4))
        assert k == 2 and rad == []
        k, rad = bilinear_rank(A("x1*x2 + x5", 5))
        assert k == 1 and len(rad) == 3
        k, rad = bilinear_rank(A("x1 + x3 + 1", 3))
        assert k == 0 and len(rad) == 3

    def test_rejects_cubic(self):
        with pytest.raises(NotQuadraticError):
            bilinear_rank(A("x1*x2*x3", 3))


class TestLinearSpace:
    def test_examples(self):
        assert linear_space(anf_to_tt(A("x1*x2 + x3*x4", 4))).dim == 0
        ls = linear_space(anf_to_tt(A("x1*x2 + x3", 3)))
        assert ls.dim == 1 and ls.elements() == [0, 4]
        assert linear_space(anf_to_tt(A("x1 + x2", 3))).dim == 3

    def test_matches_oracle_scan(self, rng):
        for n in (3, 4, 5):
            for _ in range(30):
                f = random_anf(rng, n, 3, 0.3)
                t = anf_to_tt(f)
                ls = linear_space(t)
                assert sorted(ls.elements()) == oracles.linear_structures(bits(t), n)
                for a in ls.elements():
                    d = oracles.derivative(bits(t), a)
                    assert set(d) == {ls.constant_at(a)}

    def test_quadratic_path_equals_scan(self, rng):
        for n in (2, 4, 6):
            for _ in range(30):
                f = random_anf(rng, n, 2)
                fast = linear_space(f)
                slow = linear_space(anf_to_tt(f))
                assert sorted(fast.elements()) == sorted(slow.elements())
                assert all(fast.constant_at(a) == slow.constant_at(a) for a in fast.elements())

    def test_scan_cap(self):
        with pytest.raises(SizeCapError):
            linear_space(TruthTable.constant(13, 0))

    def test_quadratic_path_uncapped(self):
        f = A("x1*x2 + x19*x20 + x3", 20)
        assert linear_space_quadratic(f).dim == 16


class TestClassify:
    def test_examples(self):
        c = classify_quadratic(A("x1*x2 + x3", 3))
        assert (c.kind, c.k) == (Kind.BALANCED, 1)
        c = classify_quadratic(A("x1*x2 + x3*x4", 4))
        assert (c.kind, c.k, quadratic_weight(c)) == (Kind.PLUS, 2, 6)
        c = classify_quadratic(A("x1*x2 + 1", 2))
        assert (c.kind, c.k, quadratic_weight(c)) == (Kind.MINUS, 1, 3)

    def test_errors(self):
        with pytest.raises(NotQuadraticError):
            classify_quadratic(A("x1*x2*x3", 3))
        with pytest.raises(AffineFunctionError):
            classify_quadratic(A("x1 + 1", 3))

    def test_low_degree_constants(self):
        assert classify_low_degree(Anf(3)).kind is Kind.PLUS
        assert classify_low_degree(Anf.constant(3, 1)).kind is Kind.MINUS
        assert classify_low_degree(A("x2", 3)).kind is Kind.BALANCED

    def test_exhaustive_n4(self):
        n = 4
        count = 0
        for f in all_low_degree(n, 2):
            if f.degree < 2:
                continue
            count += 1
            c = classify_quadratic(f)
            t = anf_to_tt(f)
            assert c.dim_v == n - 2 * c.k
            assert c.fourier == fourier(t)
            assert quadratic_weight(c) == weight(t)
            assert quadratic_nl(c) == nonlinearity(t)
        assert count == (1 << 11) - (1 << 5)

    def test_against_oracle_n5(self, rng):
        for _ in range(40):
            f = random_exact_degree(rng, 5, 2)
            c = classify_quadratic(f)
            tt = oracles.table(monos(f), 5)
            assert quadratic_weight(c) == oracles.weight(tt)
            assert quadratic_nl(c) == oracles.nonlinearity(tt, 5)

    def test_large_n_symbolic(self, rng):
        for _ in range(5):
            f = random_exact_degree(rng, 16, 2, 0.2)
            c = classify_quadratic(f)
            assert c.fourier == fourier(anf_to_tt(f))


class TestClosedForms:
    def test_examples(self):
        assert quadratic_weight(QuadraticClass(1, Kind.BALANCED, 3), 5) == 16
        plus = QuadraticClass(2, Kind.PLUS, 0)
        assert (quadratic_weight(plus), quadratic_nl(plus)) == (6, 6)
        minus = QuadraticClass(1, Kind.MINUS, 0)
        assert (quadratic_weight(minus), quadratic_nl(minus)) == (3, 1)


class TestEquivalence:
    def test_examples(self):
        assert quadratics_affine_equivalent(A("x1*x2", 3), A("x1*x3", 3))
        assert not quadratics_affine_equivalent(A("x1*x2", 3), A("x1*x2 + 1", 3))
        f = A("x1*x2 + x3*x4 + x1", 4)
        assert quadratics_affine_equivalent(f, f)


class TestStructure:
    @pytest.mark.parametrize("n", [3, 4])
    def test_dim_v_parity(self, n):
        for f in all_low_degree(n, 2):
            if f.degree == 2:
                assert linear_space(f).dim % 2 == n % 2

    def test_semi_bent_dim_one_n3(self):
        for f in all_low_degree(3, 2):
            if f.degree == 2:
                dim = linear_space(f).dim
                assert dim >= 1
                assert (dim == 1) == is_semi_bent(anf_to_tt(f))

    def test_semi_bent_dim_one_n5(self, rng):
        for _ in range(100):
            f = random_exact_degree(rng, 5, 2)
            dim = linear_space(f).dim
            assert dim >= 1
            assert (dim == 1) == is_semi_bent(anf_to_tt(f))
