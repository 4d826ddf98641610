"""Pure-Python reference kernels.

These are the fallback for the compiled ``_ckernels`` module and must
produce identical output.  Columns are ``dict[row, value]`` holding
nonzero entries only.
"""
from __future__ import annotations

import heapq

from .algebra import poly as P
from .algebra.fields import Field


def _axpy(F: Field, x: dict, y: dict, a) -> None:
    """x <- x + a*y, dropping zeros."""
    p = F.p
    for r, v in y.items():
        if p:
            t = (x.get(r, 0) + a * v) % p
        else:
            t = x.get(r, 0) + a * v
        if t:
            x[r] = t
        else:
            x.pop(r, None)


def reduce_columns(cols, F: Field, track: bool = True):
    """Left-to-right column reduction by the largest row index ("low").

    Returns ``(R, V)`` with ``R = M V``; every nonzero column of ``R`` has a
    distinct low row whose entry is 1, and ``V`` is unit upper triangular
    up to the scaling of pivot columns.  ``V`` is ``None`` unless ``track``.
    """
    pivot_of: dict[int, int] = {}
    R: list[dict] = []
    V: list[dict] | None = [] if track else None
    one = F.one
    for j, col in enumerate(cols):
        c = dict(col)
        v = {j: one} if track else None
        while c:
            low = max(c)
            k = pivot_of.get(low)
            if k is None:
                break
            a = F.neg(c[low])
            _axpy(F, c, R[k], a)
            if track:
                _axpy(F, v, V[k], a)
        if c:
            low = max(c)
            lead = c[low]
            if lead != one:
                s = F.inv(lead)
                c = {r: F.mul(x, s) for r, x in c.items()}
                if track:
                    v = {r: F.mul(x, s) for r, x in v.items()}
            pivot_of[low] = j
        R.append(c)
        if track:
            V.append(v)
    return R, V


# ---------------------------------------------------------------------------
# Local ring k[s]_(s): valuation-pivoted column elimination.

_CONTENT_DEGREE = 3


def _pcomb(F: Field, u, x: dict, b, y: dict) -> dict:
    """Return u*x - b*y for polynomial scalars u, b and polynomial columns."""
    out = {}
    if u == (F.one,):
        out.update(x)
    else:
        for r, v in x.items():
            out[r] = P.mul(F, u, v)
    for r, v in y.items():
        t = P.sub(F, out.get(r, ()), P.mul(F, b, v))
        if t:
            out[r] = t
        else:
            out.pop(r, None)
    return out


def _strip_content(F: Field, col: dict, tcol: dict | None):
    """Divide a column (and its transform column) by the unit part of its content."""
    entries = list(col.values())
    if tcol is not None:
        entries += list(tcol.values())
    if max(len(e) for e in entries) <= _CONTENT_DEGREE:
        return col, tcol
    g = ()
    for e in entries:
        g = P.gcd(F, g, e) if g else P.monic(F, e)
        if len(g) == 1:
            return col, tcol
    g = P.unit_part(g)
    if len(g) <= 1:
        return col, tcol
    col = {r: P.exact_div(F, v, g) for r, v in col.items()}
    if tcol is not None:
        tcol = {r: P.exact_div(F, v, g) for r, v in tcol.items()}
    return col, tcol


def _colmin(col: dict):
    """``(valuation, -row)`` of the column's pivot candidate."""
    best = None
    for r, v in col.items():
        key = (P.valuation(v), -r)
        if best is None or key < best:
            best = key
    return best


def dvr_reduce(cols, F: Field, track: bool = False):
    """Column elimination over the local ring at s = 0.

    ``cols`` holds polynomial entries (every denominator already cleared).
    The pivot is always an entry of minimal valuation, ties broken by the
    highest row and then the lowest column (the persistence "low" rule,
    which keeps fill-in small on coboundary matrices).  Returns ``(exponents, kernel)`` where
    ``exponents`` lists pivot valuations in pivot order and ``kernel`` (when
    ``track``) is a list of transform columns spanning the kernel as a
    saturated module.
    """
    n = len(cols)
    cols = [dict(c) for c in cols]
    T = [{j: (F.one,)} for j in range(n)] if track else None
    rowcols: dict[int, set] = {}
    for j, c in enumerate(cols):
        for r in c:
            rowcols.setdefault(r, set()).add(j)
    version = [0] * n
    heap = []
    for j, c in enumerate(cols):
        if c:
            v, r = _colmin(c)
            heap.append((v, r, j, 0))  # r is the negated row
    heapq.heapify(heap)
    active = [True] * n
    exps: list[int] = []
    while heap:
        v, i, j, ver = heapq.heappop(heap)
        i = -i
        if not active[j] or ver != version[j]:
            continue
        active[j] = False
        exps.append(v)
        pcol = cols[j]
        u = P.shift_down(pcol[i], v)
        uconst = len(u) == 1
        uinv = F.inv(u[0]) if uconst else None
        for k in sorted(rowcols.get(i, ())):
            if k == j or not active[k]:
                continue
            b = P.shift_down(cols[k][i], v)
            old = cols[k]
            if uconst:
                b = P.scale(F, b, uinv)
                new = _pcomb(F, (F.one,), old, b, pcol)
                tnew = _pcomb(F, (F.one,), T[k], b, T[j]) if track else None
            else:
                new = _pcomb(F, u, old, b, pcol)
                tnew = _pcomb(F, u, T[k], b, T[j]) if track else None
                if new:
                    new, tnew = _strip_content(F, new, tnew)
            for r in old:
                if r not in new:
                    rowcols[r].discard(k)
            for r in new:
                if r not in old:
                    rowcols.setdefault(r, set()).add(k)
            cols[k] = new
            if track:
                T[k] = tnew
            version[k] += 1
            if new:
                mv, mr = _colmin(new)
                heapq.heappush(heap, (mv, mr, k, version[k]))
    kernel = [T[j] for j in range(n) if active[j]] if track else None
    return exps, kernel


def fraction_free_rank(cols, F: Field) -> int:
    """Rank over k(s) by division-free column reduction with content removal.

    Independent of :func:`dvr_reduce`: left-to-right, pivots on the largest
    row index regardless of valuation, and divides a column by its polynomial
    content once some entry has more than three coefficients.
    """
    pivot_of: dict[int, dict] = {}
    for col in cols:
        c = dict(col)
        while c:
            low = max(c)
            other = pivot_of.get(low)
            if other is None:
                break
            a, b = c[low], other[low]
            g = P.gcd(F, a, b)
            a, b = P.exact_div(F, a, g), P.exact_div(F, b, g)
            c = _pcomb(F, b, c, a, other)
            if c and max(map(len, c.values())) > 3:
                g = ()
                for e in c.values():
                    g = P.gcd(F, g, e) if g else P.monic(F, e)
                    if len(g) == 1:
                        break
                if len(g) > 1:
                    c = {r: P.exact_div(F, e, g) for r, e in c.items()}
        if c:
            pivot_of[max(c)] = c
    return len(pivot_of)
