#!/usr/bin/env python3
"""Regenerate the bundled example data under src/masseycrit/data/.

Every surface is checked to be a closed combinatorial surface (each edge in
exactly two triangles, each vertex link a single cycle) before it is written.
"""
from __future__ import annotations

import sys
from collections import defaultdict
from pathlib import Path

from masseycrit.algebra.fields import F2
from masseycrit.cohomology import (
    Cochain, IntegerCocycle, cohomology_basis, write_cochain, write_integer_cocycle,
)
from masseycrit.complex import SimplicialComplex, connected_sum, write_complex

DATA = Path(__file__).resolve().parents[1] / "src" / "masseycrit" / "data"


def check_closed_surface(K: SimplicialComplex) -> None:
    assert K.dim == 2 and K.is_pure()
    count = defaultdict(int)
    for t in K.triangles():
        for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            count[e] += 1
    assert all(c == 2 for c in count.values()), "edge not in exactly two triangles"
    assert set(count) == set(K.edges())
    for v in range(len(K.vertices)):
        link = [tuple(x for x in t if x != v) for t in K.triangles() if v in t]
        adj = defaultdict(list)
        for a, b in link:
            adj[a].append(b)
            adj[b].append(a)
        assert all(len(n) == 2 for n in adj.values()), f"bad link at {K.vertices[v]}"
        start = next(iter(adj))
        seen, prev, cur = {start}, None, start
        while True:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            if nxt == start:
                break
            seen.add(nxt)
            prev, cur = cur, nxt
        assert len(seen) == len(adj), f"link of {K.vertices[v]} is not one cycle"


def grid_surface(m: int, n: int, twist: bool, prefix: str):
    """m x n grid on the square with x-periodic sides; the y-sides glue with x -> -x if twist."""
    def vert(i, j):
        if j == n:
            j = 0
            if twist:
                i = -i
        return f"{prefix}{i % m}{j % n}"

    tops = []
    for i in range(m):
        for j in range(n):
            a, b = vert(i, j), vert(i + 1, j)
            c, d = vert(i + 1, j + 1), vert(i, j + 1)
            tops += [(a, b, c), (a, d, c)]
    order = [f"{prefix}{i}{j}" for i in range(m) for j in range(n)]
    return SimplicialComplex.from_labels(tops, order)


def winding(K: SimplicialComplex, coord: int, period: int) -> IntegerCocycle:
    """Integer cocycle counting crossings of the grid seam in one coordinate."""
    vals = {}
    for u, v in K.edges():
        a = int(K.vertices[u][1 + coord])
        b = int(K.vertices[v][1 + coord])
        d = b - a
        step = ((d + 1) % period) - 1
        vals[(u, v)] = (step - d) // period
    return IntegerCocycle(K, vals)


def gauge_zero_on(c: Cochain, tri) -> Cochain:
    """Add a coboundary so the F2 1-cocycle vanishes on the edges of ``tri``."""
    x, y, z = tri
    f = {x: 0, y: c((x, y)), z: c((x, z))}
    K = c.complex
    g = Cochain(K, c.field, 0, {(v,): a for v, a in f.items()})
    return c + g.coboundary()


def write(name: str, text: str) -> None:
    (DATA / name).write_text(text)
    print("wrote", name)


def main() -> int:
    DATA.mkdir(parents=True, exist_ok=True)

    circle = SimplicialComplex.from_labels([("a", "b"), ("b", "c"), ("a", "c")])
    write("circle3.cx", "# boundary of a triangle\n" + write_complex(circle))
    write("circle3.gen.zeta", write_integer_cocycle(IntegerCocycle(circle, {(0, 1): 1})))

    torus = grid_surface(3, 3, False, "x")
    check_closed_surface(torus)
    assert torus.f_vector == (9, 27, 18)
    write("torus9.cx", "# 3x3 grid torus, vertices x<i><j>\n" + write_complex(torus))
    write("torus9.a.zeta", write_integer_cocycle(winding(torus, 0, 3)))
    write("torus9.b.zeta", write_integer_cocycle(winding(torus, 1, 3)))

    klein = grid_surface(3, 3, True, "k")
    check_closed_surface(klein)
    assert klein.euler_characteristic == 0
    write("klein.cx", "# 3x3 grid Klein bottle, y-seam glued with x -> -x\n"
          + write_complex(klein))
    write("klein.a.zeta", write_integer_cocycle(winding(klein, 1, 3)))

    rp2 = SimplicialComplex.from_labels([
        ("1", "2", "3"), ("1", "3", "4"), ("1", "4", "5"), ("1", "5", "6"), ("1", "2", "6"),
        ("2", "3", "5"), ("2", "4", "5"), ("2", "4", "6"), ("3", "4", "6"), ("3", "5", "6"),
    ])
    check_closed_surface(rp2)
    assert rp2.f_vector == (6, 15, 10)
    write("rp2.cx", "# minimal 6-vertex real projective plane\n" + write_complex(rp2))
    B = cohomology_basis(rp2, F2)
    w = gauge_zero_on(B.representative(1, 0), rp2.simplices[2][0])
    assert not B.class_of(w).is_zero()
    write("rp2.w.coch", "# generator of H^1(RP^2; F2), zero on the edges of 1 2 3\n"
          + write_cochain(w))

    # genus two: two tori glued along the triangle x00 x10 x11, which misses both seams
    tA = grid_surface(3, 3, False, "a")
    tB = grid_surface(3, 3, False, "b")
    sigma2, ren = connected_sum(tA, tB, ("a00", "a10", "a11"), ("b00", "b10", "b11"))
    check_closed_surface(sigma2)
    assert sigma2.euler_characteristic == -2
    write("sigma2.cx", "# genus-2 surface: 3x3 grid tori a and b glued along a00 a10 a11\n"
          + write_complex(sigma2))

    def transfer(K, z, rename=None):
        vals = {}
        for (u, v), x in z.values.items():
            lu, lv = K.vertices[u], K.vertices[v]
            if rename:
                lu, lv = rename[lu], rename[lv]
            iu, iv = sigma2.vertex_index(lu), sigma2.vertex_index(lv)
            vals[(min(iu, iv), max(iu, iv))] = x if iu < iv else -x
        return IntegerCocycle(sigma2, vals)

    v1 = transfer(tA, winding(tA, 0, 3))
    v2 = transfer(tA, winding(tA, 1, 3))
    xi = transfer(tB, winding(tB, 0, 3), ren)
    write("sigma2.fig1.xi.zeta", "# curve cutting handle b\n" + write_integer_cocycle(xi))
    for name, z in (("v1", v1), ("v2", v2)):
        write(f"sigma2.fig1.{name}.coch", f"# handle-a class {name}, supported on handle a\n"
              + "".join(line for line in write_cochain_int(z)))
    return 0


def write_cochain_int(z: IntegerCocycle):
    K = z.complex
    for e, x in sorted(z.values.items()):
        yield f"coch 1 {' '.join(K.label(e))} {x}\n"


if __name__ == "__main__":
    sys.exit(main())
