import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from masseycrit.algebra import (
    F2,
    QQ,
    Field,
    LocalMatrix,
    LocalRingElem,
    SparseMatrix,
    dvr_elementary_divisors,
    local_valuation,
    matrix_rank_kernel_image,
    rank,
    rational_function_rank,
    saturated_kernel_basis,
)
from masseycrit.algebra import poly as P
from masseycrit.complex import SimplicialComplex, coboundary_matrix

F5 = Field(5)
S = (0, 1)  # the polynomial s


def L(F, *coeffs, den=0):
    return LocalRingElem(F, tuple(F(c) for c in coeffs), den)


class TestFields:
    def test_prime_field_product(self):
        assert F5.mul(3, 4) == 2

    def test_rational_sum(self):
        assert QQ.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)

    def test_f2_one_plus_one(self):
        assert F2.add(1, 1) == 0

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            F5.div(1, 0)
        with pytest.raises(ZeroDivisionError):
            QQ.inv(Fraction(0))

    @pytest.mark.parametrize("text,p", [("Q", 0), ("F2", 2), ("F101", 101)])
    def test_parse(self, text, p):
        assert Field.parse(text).p == p

    @pytest.mark.parametrize("bad", ["F4", "F1", "R", "F"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            Field.parse(bad)

    def test_rational_image_in_prime_field(self):
        assert F5(Fraction(1, 2)) == 3

    @given(st.integers(-50, 50), st.integers(1, 50).filter(lambda x: x % 7))
    def test_inverse_roundtrip(self, a, b):
        F = Field(7)
        assert F.mul(F.div(F(a), F(b)), F(b)) == F(a)


class TestPoly:
    def test_trim_and_zero(self):
        assert P.trim((1, 0, 0)) == (1,)
        assert P.trim((0, 0)) == ()

    def test_valuation(self):
        assert P.valuation((0, 0, 1, 1)) == 2
        assert P.valuation(()) == math.inf

    def test_one_plus_s_power_binomials(self):
        assert P.one_plus_s_pow(QQ, 3) == (1, 3, 3, 1)
        assert P.one_plus_s_pow(F2, 2) == (1, 0, 1)

    def test_inverse_series(self):
        s = P.inv_one_plus_s_series(QQ, 1, 4)
        assert s == (1, -1, 1, -1)

    def test_gcd_is_monic(self):
        a = P.mul(QQ, (1, 1), (2, 1))
        b = P.mul(QQ, (1, 1), (3, 1))
        assert P.gcd(QQ, a, b) == (1, 1)

    @given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), min_size=1, max_size=4))
    def test_divmod(self, a, b):
        a, b = P.trim(tuple(map(Fraction, a))), P.trim(tuple(map(Fraction, b)))
        if not b:
            return
        q, r = P.divmod_poly(QQ, a, b)
        assert P.add(QQ, P.mul(QQ, q, b), r) == a
        assert P.degree(r) < P.degree(b)


class TestLocalRing:
    def test_valuation_examples(self):
        assert local_valuation(L(QQ, 0, 0, 1, 1)) == 2
        assert local_valuation(LocalRingElem(QQ, (Fraction(1),), 3)) == 0
        assert local_valuation(LocalRingElem(QQ)) == math.inf

    def test_normalisation_strips_one_plus_s(self):
        x = LocalRingElem(QQ, P.one_plus_s_pow(QQ, 2), 3)
        assert x.numerator == (1,) and x.den_exp == 1

    def test_monodromy_inverse(self):
        a = LocalRingElem.monodromy(F5, 3)
        b = LocalRingElem.monodromy(F5, -3)
        assert a * b == LocalRingElem.const(F5, 1)

    def test_series_of_unit(self):
        x = LocalRingElem.monodromy(QQ, -1)
        assert x.series(3) == (1, -1, 1)

    def test_units(self):
        assert L(QQ, 2, 1).is_unit()
        assert not L(QQ, 0, 1).is_unit()


class TestFieldMatrices:
    def test_identity(self):
        M = SparseMatrix.from_dense(QQ, [[1, 0], [0, 1]])
        r, ker, img = matrix_rank_kernel_image(M)
        assert r == 2 and ker == [] and len(img) == 2

    def test_zero(self):
        M = SparseMatrix.from_dense(QQ, [[0] * 4 for _ in range(3)])
        r, ker, _ = matrix_rank_kernel_image(M)
        assert r == 0 and len(ker) == 4

    def test_circle_coboundary_rank(self):
        K = SimplicialComplex.from_labels([("a", "b"), ("b", "c"), ("a", "c")])
        assert rank(coboundary_matrix(K, 0, QQ)) == 2

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from([0, 2, 3, 7]))
    def test_rank_nullity_and_oracle(self, seed, p):
        rng = random.Random(seed)
        F = Field(p)
        nr, nc = rng.randint(0, 6), rng.randint(0, 6)
        dense = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(nc)] for _ in range(nr)]
        cols = [{i: F(dense[i][j]) for i in range(nr) if dense[i][j]} for j in range(nc)]
        M = SparseMatrix(F, nr, nc, cols)
        r, ker, img = matrix_rank_kernel_image(M)
        assert r + len(ker) == nc and len(img) == r
        for v in ker:
            assert not M.apply(v)
        if p == 0 and nr and nc:
            assert r == sympy.Matrix(dense).rank()


class TestLocalMatrices:
    def test_rank_examples(self):
        assert rational_function_rank(LocalMatrix.from_dense(QQ, [[S]])) == 1
        assert rational_function_rank(LocalMatrix.from_dense(QQ, [[0]])) == 0

    def test_elementary_divisors_examples(self):
        diag = [[1, 0, 0], [0, S, 0], [0, 0, (0, 0, 0, 1)]]
        assert dvr_elementary_divisors(LocalMatrix.from_dense(QQ, diag)) == [0, 1, 3]
        assert dvr_elementary_divisors(LocalMatrix.from_dense(QQ, [[S, S], [S, S]])) == [1]
        assert dvr_elementary_divisors(LocalMatrix.from_dense(QQ, [[0, 0], [0, 0]])) == []

    def test_kernel_examples(self):
        assert saturated_kernel_basis(LocalMatrix.from_dense(QQ, [[S]])) == []
        (v,) = saturated_kernel_basis(LocalMatrix.from_dense(QQ, [[S, (0, -1)]]))
        assert v[0].is_unit() and v[1].is_unit()
        assert v[0].at_zero() == v[1].at_zero()
        assert len(saturated_kernel_basis(LocalMatrix.from_dense(QQ, [[0, 0], [0, 0]]))) == 2

    def test_non_diagonal_divisors_match_sympy_smith(self):
        # [[s, s^2], [s^2, s]] has determinant s^2 (1 - s^2); over the local ring: {1, 1}
        M = [[S, (0, 0, 1)], [(0, 0, 1), S]]
        assert dvr_elementary_divisors(LocalMatrix.from_dense(QQ, M)) == [1, 1]


def _random_local_matrix(rng, F, nr, nc):
    rows = []
    for _ in range(nr):
        row = []
        for _ in range(nc):
            if rng.random() < 0.5:
                row.append(0)
            else:
                v = rng.randint(0, 2)
                coeffs = [0] * v + [rng.choice([1, -1, 2])] + [rng.randint(-1, 1) for _ in range(rng.randint(0, 2))]
                row.append(tuple(coeffs))
        rows.append(row)
    return rows


def _sympy_rank(rows):
    s = sympy.Symbol("s")
    M = sympy.Matrix([[sum(sympy.Integer(c) * s**k for k, c in enumerate(x)) if isinstance(x, tuple) else x
                       for x in r] for r in rows])
    return M.rank(simplify=True)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_divisor_count_equals_rank_over_rational_functions(seed):
    rng = random.Random(seed)
    rows = _random_local_matrix(rng, QQ, rng.randint(1, 4), rng.randint(1, 4))
    M = LocalMatrix.from_dense(QQ, rows)
    r = rational_function_rank(M)
    assert len(dvr_elementary_divisors(M)) == r
    assert r == _sympy_rank(rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 2, 3]))
def test_kernel_basis_is_exact_and_saturated(seed, p):
    rng = random.Random(seed)
    F = Field(p)
    rows = _random_local_matrix(rng, F, rng.randint(1, 4), rng.randint(1, 5))
    M = LocalMatrix.from_dense(F, rows)
    ker = saturated_kernel_basis(M)
    assert len(ker) == M.ncols - rational_function_rank(M)
    for v in ker:
        assert not M.apply(v)
        assert any(x.at_zero() for x in v.values())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([0, 3]))
def test_unit_scaling_keeps_divisors(seed, p):
    rng = random.Random(seed)
    F = Field(p)
    rows = _random_local_matrix(rng, F, rng.randint(1, 4), rng.randint(1, 4))
    M = LocalMatrix.from_dense(F, rows)
    unit = LocalRingElem(F, (F(rng.choice([1, 2])), F(1)), rng.randint(0, 2))  # (c + s)/(1+s)^e
    i, j = rng.randrange(M.nrows), rng.randrange(M.ncols)
    scaled_row = [[unit * M[r, c] if r == i else M[r, c] for c in range(M.ncols)] for r in range(M.nrows)]
    scaled_col = [[unit * M[r, c] if c == j else M[r, c] for c in range(M.ncols)] for r in range(M.nrows)]
    base = dvr_elementary_divisors(M)
    assert dvr_elementary_divisors(LocalMatrix.from_dense(F, scaled_row)) == base
    assert dvr_elementary_divisors(LocalMatrix.from_dense(F, scaled_col)) == base


def _sympy_local_exponents(rows):
    """s-adic valuations of the invariant factors over Q[s] (sympy oracle)."""
    from sympy.matrices.normalforms import smith_normal_form

    s = sympy.Symbol("s")
    M = sympy.Matrix([[sum(sympy.Integer(c) * s**k for k, c in enumerate(x)) if isinstance(x, tuple) else x
                       for x in r] for r in rows])
    D = smith_normal_form(M, domain=sympy.QQ[s])
    out = []
    for i in range(min(D.shape)):
        d = sympy.Poly(D[i, i], s)
        if not d.is_zero:
            coeffs = d.all_coeffs()[::-1]
            out.append(next(k for k, c in enumerate(coeffs) if c != 0))
    return sorted(out)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_divisors_match_smith_form_oracle(seed):
    rng = random.Random(seed)
    rows = _random_local_matrix(rng, QQ, rng.randint(1, 3), rng.randint(1, 3))
    assert dvr_elementary_divisors(LocalMatrix.from_dense(QQ, rows)) == _sympy_local_exponents(rows)
