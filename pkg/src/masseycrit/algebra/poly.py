"""Univariate polynomials in the deformation parameter ``s``.

A polynomial is a tuple of field elements, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.  Functions take the
:class:`~masseycrit.algebra.fields.Field` explicitly.
"""
from __future__ import annotations

from math import comb

from .fields import Field

INF = float("inf")

Poly = tuple


def trim(c) -> Poly:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def const(F: Field, a) -> Poly:
    a = F(a)
    return (a,) if a else ()


def add(F: Field, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = F.add(out[i], x)
    return trim(out)


def sub(F: Field, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def neg(F: Field, a: Poly) -> Poly:
    return tuple(F.neg(x) for x in a)


def scale(F: Field, a: Poly, k) -> Poly:
    if not k:
        return ()
    return tuple(F.mul(x, k) for x in a)


def mul(F: Field, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(F, b, a[0])
    if len(b) == 1:
        return scale(F, a, b[0])
    out = [F.zero] * (len(a) + len(b) - 1)
    p = F.p
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p:
        out = [v % p for v in out]
    return trim(out)


def valuation(a: Poly):
    """s-adic valuation; ``inf`` for the zero polynomial."""
    for i, x in enumerate(a):
        if x:
            return i
    return INF


def shift_down(a: Poly, v: int) -> Poly:
    """Exact division by ``s**v`` (caller guarantees divisibility)."""
    return a[v:]


def evaluate(F: Field, a: Poly, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def divmod_poly(F: Field, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [F.zero] * max(len(a) - len(b) + 1, 0)
    lead_inv = F.inv(b[-1])
    db = len(b) - 1
    for k in range(len(a) - len(b), -1, -1):
        c = F.mul(r[k + db], lead_inv)
        if c:
            q[k] = c
            for j, y in enumerate(b):
                r[k + j] = F.sub(r[k + j], F.mul(c, y))
    return trim(q), trim(r[:db] if db else [])


def exact_div(F: Field, a: Poly, b: Poly) -> Poly:
    q, r = divmod_poly(F, a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def monic(F: Field, a: Poly) -> Poly:
    if not a:
        return a
    return scale(F, a, F.inv(a[-1]))


def gcd(F: Field, a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, divmod_poly(F, a, b)[1]
    return monic(F, a)


def unit_part(a: Poly) -> Poly:
    """Strip the s-power factor: ``a = s**v * unit_part(a)``."""
    v = valuation(a)
    return a if v == INF else a[v:]


ONE_PLUS_S_CACHE: dict[tuple[int, int], Poly] = {}


def one_plus_s_pow(F: Field, n: int) -> Poly:
    """``(1+s)**n`` for ``n >= 0``."""
    key = (F.p, n)
    hit = ONE_PLUS_S_CACHE.get(key)
    if hit is None:
        hit = trim([F(comb(n, k)) for k in range(n + 1)])
        ONE_PLUS_S_CACHE[key] = hit
    return hit


def inv_one_plus_s_series(F: Field, e: int, order: int) -> Poly:
    """Power series of ``(1+s)**(-e)`` truncated below ``s**order``."""
    if e == 0:
        return const(F, 1)[:order]
    return trim([F((-1) ** j * comb(e + j - 1, j)) for j in range(order)])


def divisible_by_one_plus_s(F: Field, a: Poly) -> bool:
    return bool(a) and not evaluate(F, a, F(-1))


def degree(a: Poly) -> int:
    return len(a) - 1


def to_str(F: Field, a: Poly) -> str:
    if not a:
        return "0"
    terms = []
    for i, c in enumerate(a):
        if not c:
            continue
        cs = F.format_elem(c)
        if i == 0:
            terms.append(cs)
        else:
            mono = "s" if i == 1 else f"s^{i}"
            terms.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(terms)
