"""Seeded random inputs shared by the property tests and the acceptance suite."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import lcm

import sympy

from masseycrit.algebra.fields import Field
from masseycrit.cohomology import Cochain, IntegerCocycle, LineBundle, pullback_integer_cocycle
from masseycrit.complex import SimplicialComplex, coboundary_columns, product_complex
from masseycrit.library import load_example

FIELDS = [Field(0), Field(2), Field(3), Field(5)]


def random_complex(rng: random.Random, max_simplices: int = 50, max_dim: int = 3,
                   n_vertices: int | None = None) -> SimplicialComplex:
    """A random complex with at most ``max_simplices`` simplices in total."""
    while True:
        nv = n_vertices or rng.randint(3, 8)
        tops = []
        if n_vertices is None and rng.random() < 0.4:
            tops = _base_surface(rng)
            nv = max(max(t) for t in tops) + 1
        # mostly edges and triangles, so that holes survive
        for _ in range(rng.randint(0 if tops else 1, 10 - 6 * bool(tops))):
            k = min(rng.choice((2, 2, 3, 3, 3, 4)), max_dim + 1, nv)
            tops.append(rng.sample(range(nv), k))
        K = SimplicialComplex([f"v{i}" for i in range(nv)], tops)
        if sum(K.f_vector) <= max_simplices:
            return K


def _base_surface(rng: random.Random) -> list:
    """Annulus, Moebius strip (3 or 4 squares) or the 6-vertex RP^2."""
    kind = rng.choice(("annulus", "moebius", "rp2"))
    if kind == "rp2":
        return [list(t) for t in RP2_TRIANGLES]
    n = rng.choice((3, 4))
    a = list(range(n))
    b = list(range(n, 2 * n))
    tops = []
    for i in range(n):
        j = (i + 1) % n
        a1, b1 = (b[j], a[j]) if kind == "moebius" and j == 0 else (a[j], b[j])
        tops += [[a[i], b[i], a1], [b[i], a1, b1]]
    return tops


RP2_TRIANGLES = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4),
                 (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5)]


_BASES: dict = {}


def integer_cocycle_basis(K: SimplicialComplex) -> list[dict]:
    """Integral cocycles whose classes form a basis of H^1(K; Q) (sympy oracle)."""
    hit = _BASES.get(id(K))
    if hit is not None and hit[0] is K:
        return hit[1]
    out = _integer_cocycle_basis(K)
    _BASES[id(K)] = (K, out)
    return out


def _integer_cocycle_basis(K: SimplicialComplex) -> list[dict]:
    n1 = K.n(1)
    if K.dim < 2:
        kernel = [sympy.Matrix([1 if i == j else 0 for i in range(n1)]) for j in range(n1)]
    else:
        M = sympy.zeros(K.n(2), n1)
        for j, c in enumerate(coboundary_columns(K, 1)):
            for i, v in c.items():
                M[i, j] = v
        kernel = M.nullspace()
    # drop kernel vectors already in the span of coboundaries and earlier picks
    span = sympy.zeros(n1, K.n(0))
    for j, c in enumerate(coboundary_columns(K, 0)):
        for i, v in c.items():
            span[i, j] = v
    rank = span.rank()
    out = []
    for v in kernel:
        trial = span.row_join(v)
        if trial.rank() > rank:
            span, rank = trial, rank + 1
            den = lcm(*[Fraction(str(x)).denominator for x in v])
            out.append({j: int(x * den) for j, x in enumerate(v) if x != 0})
    return out


def random_zeta(rng: random.Random, K: SimplicialComplex, spread: int = 2) -> IntegerCocycle:
    """Random integer combination of the cocycle basis plus a random coboundary."""
    vals: dict = {}
    for vec in integer_cocycle_basis(K):
        a = rng.randint(-spread, spread)
        for j, x in vec.items():
            e = K.simplices[1][j]
            vals[e] = vals.get(e, 0) + a * x
    f = {v: rng.randint(-spread, spread) for v in range(len(K.vertices))}
    for u, v in K.edges():
        vals[(u, v)] = vals.get((u, v), 0) + f[v] - f[u]
    return IntegerCocycle(K, {e: x for e, x in vals.items() if x})


def random_cochain(rng: random.Random, K: SimplicialComplex, F: Field, q: int,
                   bundle=None, density: float = 0.5) -> Cochain:
    vals = {}
    for s in K.simplices.get(q, ()):
        if rng.random() < density:
            vals[s] = F(rng.randint(-3, 3))
    return Cochain(K, F, q, vals, bundle)


def random_bundle(rng: random.Random, K: SimplicialComplex, F: Field) -> LineBundle:
    """Flat bundle ``g(u)/g(v) * t**zeta(u,v)`` for a random gauge g and unit t."""
    def unit():
        while True:
            x = F(rng.randint(1, 6) * rng.choice([1, -1]))
            if x:
                return x

    t = unit()
    z = random_zeta(rng, K, 1)
    g = [unit() for _ in K.vertices]
    vals = {}
    for u, v in K.edges():
        vals[(u, v)] = F.mul(F.div(g[u], g[v]), F.pow(t, z(u, v)))
    return LineBundle(K, F, vals)


def cocycle_from(rng: random.Random, K, F, q: int, basis) -> Cochain:
    """Random cocycle: random class plus a random coboundary."""
    coords = [F(rng.randint(-2, 2)) for _ in range(basis.dim(q))]
    c = basis.combination(q, coords)
    if q > 0:
        c = c + random_cochain(rng, K, F, q - 1, basis.bundle).coboundary()
    return c


# bundled products and the factor carrying all of H^1 (H^1(RP^2; Z) = 0)
PRODUCT_FACTORS = {"sigma2xrp2": ("sigma2", "rp2"), "s1xrp2": ("circle3", "rp2")}


@lru_cache(maxsize=None)
def _first_projection(name: str):
    a, b = (load_example(n).complex for n in PRODUCT_FACTORS[name])
    X, p1, _ = product_complex(a, b)
    assert X == load_example(name).complex
    return a, p1


def random_example_zeta(rng: random.Random, name: str, spread: int = 2) -> IntegerCocycle:
    """Random integer 1-cocycle on a bundled example.

    On products the cohomology part is pulled back from the first factor,
    which avoids a nullspace computation on the large product complex.
    """
    K = load_example(name).complex
    if name not in PRODUCT_FACTORS:
        return random_zeta(rng, K, spread)
    A, p1 = _first_projection(name)
    z = pullback_integer_cocycle(p1, random_zeta(rng, A, spread))
    f = {v: rng.randint(-spread, spread) for v in range(len(K.vertices))}
    return IntegerCocycle(K, z.values) + IntegerCocycle.coboundary_of(K, f)
