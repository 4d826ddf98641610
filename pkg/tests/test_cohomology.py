import random
from fractions import Fraction

import pytest
import sympy

from helpers import random_cochain
from masseycrit.algebra.fields import F2, QQ, Field
from masseycrit.cohomology import (
    Cochain,
    CocycleError,
    IntegerCocycle,
    LineBundle,
    class_of,
    cohomology_basis,
    cup,
    cup_into_bundle,
    cup_length,
    parse_bundle,
    parse_cochain,
    parse_integer_cocycle,
    pullback,
    tensor_bundles,
    twisted_coboundary,
    twisted_cohomology_basis,
    write_bundle,
    write_cochain,
    write_integer_cocycle,
)
from masseycrit.complex import (
    SimplicialComplex,
    VertexMap,
    coboundary_columns,
    coboundary_matrix,
    parse_complex,
    product_complex,
)
from masseycrit.library import load_example

CIRCLE = parse_complex("simplex a b\nsimplex b c\nsimplex a c\n")
F3 = Field(3)


def sympy_betti(K, p=0):
    """Betti numbers from sympy ranks of the integer coboundary matrices (oracle)."""
    ranks = []
    for q in range(K.dim):
        M = sympy.zeros(K.n(q + 1), K.n(q))
        for j, c in enumerate(coboundary_columns(K, q)):
            for i, v in c.items():
                M[i, j] = v
        if p:
            ranks.append(_rank_mod_p(M, p))
        else:
            ranks.append(M.rank())
    r = lambda q: ranks[q] if 0 <= q < len(ranks) else 0  # noqa: E731
    return tuple(K.n(q) - r(q) - r(q - 1) for q in range(K.dim + 1))


def _rank_mod_p(M, p):
    rows = [[int(x) % p for x in M.row(i)] for i in range(M.rows)]
    rank, ncols = 0, M.cols
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def fundamental_cycle(K):
    """Integer top cycle spanning ker(boundary) on a closed orientable surface (sympy)."""
    M = sympy.zeros(K.n(2), K.n(1))
    for j, c in enumerate(coboundary_columns(K, 1)):
        for i, v in c.items():
            M[i, j] = v
    (z,) = M.T.nullspace()
    return [int(x * sympy.ilcm(*[sympy.fraction(y)[1] for y in z])) for x in z]


def evaluate(c: Cochain, cycle):
    K = c.complex
    return sum(Fraction(c(t)) * a for t, a in zip(K.simplices[c.degree], cycle))


# ---------------------------------------------------------------------------
# bases


@pytest.mark.parametrize("name,field,betti", [
    ("circle3", QQ, (1, 1)),
    ("rp2", F2, (1, 1, 1)),
    ("rp2", QQ, (1, 0, 0)),
    ("sigma2", QQ, (1, 4, 1)),
    ("torus9", F3, (1, 2, 1)),
    ("klein", QQ, (1, 1, 0)),
    ("klein", F2, (1, 2, 1)),
])
def test_betti(name, field, betti):
    K = load_example(name).complex
    assert cohomology_basis(K, field).betti == betti
    assert sympy_betti(K, field.p) == betti


def test_class_of_coboundary_is_zero():
    K = load_example("torus9").complex
    rng = random.Random(1)
    B = cohomology_basis(K, QQ)
    for _ in range(5):
        b = random_cochain(rng, K, QQ, 0)
        assert class_of(b.coboundary(), B).is_zero()


def test_class_of_representatives_and_sums():
    K = load_example("sigma2").complex
    B = cohomology_basis(K, QQ)
    for i in range(4):
        assert B.class_of(B.representative(1, i)) == B.basis_class(1, i)
    s = B.class_of(B.representative(1, 0) + B.representative(1, 2))
    assert s.coords == (1, 0, 1, 0)


def test_class_of_rejects_non_cocycle():
    K = load_example("torus9").complex
    c = Cochain(K, QQ, 1, {K.simplices[1][0]: 1})
    with pytest.raises(CocycleError):
        class_of(c)


# ---------------------------------------------------------------------------
# products


def test_unit_law():
    K = load_example("torus9").complex
    one = Cochain.constant(K, QQ)
    a = load_example("torus9").cocycle("a").to_field(QQ)
    assert cup(one, a) == a and cup(a, one) == a


def test_torus_fundamental_pairing():
    ex = load_example("torus9")
    K = ex.complex
    a, b = ex.cocycle("a").to_field(QQ), ex.cocycle("b").to_field(QQ)
    z = fundamental_cycle(K)
    ab = cup(a, b)
    # brute force: a(v0 v1) b(v1 v2) over all 18 triangles
    brute = {t: a(t[:2]) * b(t[1:]) for t in K.triangles() if a(t[:2]) * b(t[1:])}
    assert ab.values == brute
    assert evaluate(ab, z) != 0
    assert evaluate(cup(b, a), z) == -evaluate(ab, z)
    B = cohomology_basis(K, QQ)
    assert B.class_of(cup(b, a)) == B.class_of(ab).scale(-1)


def test_rp2_w_squared():
    ex = load_example("rp2")
    w = ex.cochain("w", F2)
    ww = cup(w, w)
    assert sum(ww(t) for t in ex.complex.triangles()) % 2 == 1
    assert not class_of(ww).is_zero()


def test_pullback_identity_and_point():
    K = load_example("torus9").complex
    a = load_example("torus9").cocycle("a").to_field(QQ)
    assert pullback(VertexMap.identity(K), a) == a
    pt = SimplicialComplex(["o"], [[0]])
    f = VertexMap(CIRCLE, pt, (0, 0, 0))
    g = pullback(f, Cochain.constant(pt, QQ))
    assert g == Cochain.constant(CIRCLE, QQ)


def test_pullback_commutes_with_cup():
    T = load_example("torus9")
    X, p1, p2 = product_complex(CIRCLE, T.complex)
    a, b = T.cocycle("a").to_field(QQ), T.cocycle("b").to_field(QQ)
    lhs = pullback(p2, cup(a, b))
    rhs = cup(pullback(p2, a), pullback(p2, b))
    B = cohomology_basis(X, QQ)
    assert B.class_of(lhs) == B.class_of(rhs)
    assert not B.class_of(lhs).is_zero()


def test_product_classes_on_sigma2_times_rp2():
    ex = load_example("sigma2xrp2")
    v1, v2, w = (ex.cochain(n, F2) for n in ("v1", "v2", "w"))
    prod = cup(cup(cup(v1, v2), w), w)
    assert not class_of(prod).is_zero()


# ---------------------------------------------------------------------------
# local coefficients


def circle_bundle(F, vals):
    return LineBundle(CIRCLE, F, vals)


def test_trivial_bundle_recovers_coboundary():
    mu = circle_bundle(QQ, {})
    assert twisted_coboundary(CIRCLE, mu, 0, QQ).to_dense() == coboundary_matrix(CIRCLE, 0, QQ).to_dense()


def test_circle_nontrivial_holonomy():
    mu = circle_bundle(QQ, {(0, 1): 2})
    assert twisted_cohomology_basis(CIRCLE, mu).betti == (0, 0)
    assert mu.holonomy([0, 1, 2, 0]) == 2


def test_circle_gauge_trivial_holonomy():
    mu = circle_bundle(QQ, {(0, 1): 2, (1, 2): Fraction(1, 2)})
    assert mu.holonomy([0, 1, 2, 0]) == 1
    assert twisted_cohomology_basis(CIRCLE, mu).betti == (1, 1)


def test_trivial_bundle_matches_untwisted():
    K = load_example("rp2").complex
    B = twisted_cohomology_basis(K, LineBundle.trivial(K, F2), F2)
    assert B.betti == (1, 1, 1) and B is cohomology_basis(K, F2)


def test_nonflat_bundle_names_triangle():
    K = load_example("torus9").complex
    e = K.simplices[1][0]
    with pytest.raises(CocycleError, match="2-simplex"):
        LineBundle(K, QQ, {e: 2})


def test_invalid_integer_cocycle_names_triangle():
    K = load_example("torus9").complex
    with pytest.raises(CocycleError, match="2-simplex"):
        IntegerCocycle(K, {K.simplices[1][0]: 1})


def test_module_product():
    mu = circle_bundle(QQ, {(0, 1): 3})
    e = random_cochain(random.Random(2), CIRCLE, QQ, 1, mu)
    one = Cochain.constant(CIRCLE, QQ)
    assert cup_into_bundle(one, e) == e
    c = random_cochain(random.Random(3), CIRCLE, QQ, 0)
    triv = Cochain(CIRCLE, QQ, 1, e.values)
    assert cup_into_bundle(c, Cochain(CIRCLE, QQ, 1, e.values, circle_bundle(QQ, {}))) == cup(c, triv)


def test_tensor_bundles():
    t = circle_bundle(QQ, {(0, 1): 2})
    u = circle_bundle(QQ, {(1, 2): 5})
    assert tensor_bundles(t, None) == t
    assert tensor_bundles(t, LineBundle.trivial(CIRCLE, QQ)) == t
    assert tensor_bundles(t, t.inverse()) is None
    loop = [0, 1, 2, 0]
    assert tensor_bundles(t, u).holonomy(loop) == t.holonomy(loop) * u.holonomy(loop)


# ---------------------------------------------------------------------------
# cup-length


def test_cup_length_examples():
    pt = SimplicialComplex(["o"], [[0]])
    assert cup_length(pt, QQ) == 0
    assert cup_length(load_example("rp2").complex, F2) == 2
    assert cup_length(load_example("torus9").complex, QQ) == 2


def test_cup_length_superadditive_on_products():
    R = load_example("rp2").complex
    X = load_example("s1xrp2").complex
    assert cup_length(X, F2) >= cup_length(CIRCLE, F2) + cup_length(R, F2)


# ---------------------------------------------------------------------------
# file formats


def test_cochain_file_round_trip_and_orientation():
    K = load_example("torus9").complex
    c = random_cochain(random.Random(4), K, QQ, 1)
    assert parse_cochain(write_cochain(c), K, QQ) == c
    a, b = K.label(K.simplices[1][0])
    flipped = parse_cochain(f"coch 1 {b} {a} 3/2\n", K, QQ)
    assert flipped(K.simplices[1][0]) == Fraction(-3, 2)


def test_bundle_and_integer_files():
    mu = circle_bundle(F3, {(0, 1): 2})
    assert parse_bundle(write_bundle(mu), CIRCLE, F3) == mu
    assert parse_bundle("edge b a 2\n", CIRCLE, F3)(0, 1) == 2  # inverse of 2 in F3
    z = IntegerCocycle(CIRCLE, {(0, 1): 4})
    assert parse_integer_cocycle(write_integer_cocycle(z), CIRCLE).values == z.values
    assert parse_integer_cocycle("edge b a 4\n", CIRCLE).values == {(0, 1): -4}


@pytest.mark.parametrize("text", ["coch 1 a\n", "coch 1 a a 1\n", "coch 1 a zz 1\n",
                                  "coch 1 a b 1\ncoch 0 a 1\n"])
def test_cochain_file_errors(text):
    with pytest.raises(ValueError):
        parse_cochain(text, CIRCLE, QQ)


def test_bundle_zero_value_rejected():
    with pytest.raises(CocycleError):
        parse_bundle("edge a b 0\n", CIRCLE, QQ)
