# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled elimination kernels over F_p (p < 2**31).

Mirrors ``_pykernels`` operation for operation, so both backends return
identical results: same pivot order, same content normalisation.
"""
from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from libcpp.queue cimport priority_queue
from libcpp.unordered_map cimport unordered_map
from libcpp.algorithm cimport sort as cpp_sort, unique

ctypedef vector[int64_t] Poly

cdef struct SCol:
    vector[int] rows
    vector[int64_t] vals

cdef inline int64_t modinv(int64_t a, int64_t p):
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


# ---------------------------------------------------------------------------
# field columns

cdef SCol to_scol(dict col, int64_t p):
    cdef SCol c
    cdef vector[pair[int, int64_t]] tmp
    cdef int64_t v
    for r, x in col.items():
        v = (<int64_t> x) % p
        if v:
            tmp.push_back(pair[int, int64_t](<int> r, v))
    cpp_sort(tmp.begin(), tmp.end())
    for i in range(tmp.size()):
        c.rows.push_back(tmp[i].first)
        c.vals.push_back(tmp[i].second)
    return c


cdef dict from_scol(SCol& c):
    cdef dict d = {}
    for i in range(c.rows.size()):
        d[c.rows[i]] = c.vals[i]
    return d


cdef void s_axpy(SCol& x, SCol& y, int64_t a, int64_t p):
    """x <- x + a*y."""
    cdef SCol out
    cdef size_t i = 0, j = 0
    cdef int64_t t
    out.rows.reserve(x.rows.size() + y.rows.size())
    out.vals.reserve(x.rows.size() + y.rows.size())
    while i < x.rows.size() or j < y.rows.size():
        if j >= y.rows.size() or (i < x.rows.size() and x.rows[i] < y.rows[j]):
            out.rows.push_back(x.rows[i])
            out.vals.push_back(x.vals[i])
            i += 1
        elif i >= x.rows.size() or y.rows[j] < x.rows[i]:
            t = (a * y.vals[j]) % p
            if t:
                out.rows.push_back(y.rows[j])
                out.vals.push_back(t)
            j += 1
        else:
            t = (x.vals[i] + a * y.vals[j]) % p
            if t:
                out.rows.push_back(x.rows[i])
                out.vals.push_back(t)
            i += 1
            j += 1
    x.rows.swap(out.rows)
    x.vals.swap(out.vals)


cdef void s_scale(SCol& x, int64_t a, int64_t p):
    for i in range(x.vals.size()):
        x.vals[i] = (x.vals[i] * a) % p


def reduce_columns_modp(list cols, int64_t p, bint track=True):
    """Column reduction by largest row index; see ``_pykernels.reduce_columns``."""
    cdef int n = len(cols)
    cdef vector[SCol] R
    cdef vector[SCol] V
    cdef unordered_map[int, int] pivot_of
    cdef SCol c, v
    cdef int j, low, k
    cdef int64_t a, s
    R.resize(n)
    if track:
        V.resize(n)
    for j in range(n):
        c = to_scol(cols[j], p)
        v.rows.clear()
        v.vals.clear()
        if track:
            v.rows.push_back(j)
            v.vals.push_back(1)
        while c.rows.size():
            low = c.rows.back()
            if pivot_of.count(low) == 0:
                break
            k = pivot_of[low]
            a = (p - c.vals.back()) % p
            s_axpy(c, R[k], a, p)
            if track:
                s_axpy(v, V[k], a, p)
        if c.rows.size():
            low = c.rows.back()
            if c.vals.back() != 1:
                s = modinv(c.vals.back(), p)
                s_scale(c, s, p)
                if track:
                    s_scale(v, s, p)
            pivot_of[low] = j
        R[j] = c
        if track:
            V[j] = v
    outR = [from_scol(R[j]) for j in range(n)]
    outV = [from_scol(V[j]) for j in range(n)] if track else None
    return outR, outV


# ---------------------------------------------------------------------------
# polynomials mod p (small dense vectors, used for pivots and gcds)

cdef inline void ptrim(Poly& a):
    while a.size() and a.back() == 0:
        a.pop_back()


cdef Poly pscale(const Poly& a, int64_t k, int64_t p):
    cdef Poly out
    if k == 0:
        return out
    out.resize(a.size())
    for i in range(a.size()):
        out[i] = (a[i] * k) % p
    ptrim(out)
    return out


cdef Poly pmod(Poly a, const Poly& b, int64_t p):
    """Remainder of a by b (b nonzero)."""
    cdef int64_t inv = modinv(b.back(), p), c
    cdef size_t db = b.size() - 1, k, j
    cdef long kk
    if a.size() < b.size():
        return a
    kk = <long> (a.size() - b.size())
    while kk >= 0:
        k = <size_t> kk
        c = (a[k + db] * inv) % p
        if c:
            for j in range(b.size()):
                a[k + j] = (a[k + j] - c * b[j]) % p
                if a[k + j] < 0:
                    a[k + j] += p
        kk -= 1
    a.resize(db)
    ptrim(a)
    return a


cdef Poly pquot(Poly a, const Poly& b, int64_t p):
    """Exact quotient a / b."""
    cdef int64_t inv = modinv(b.back(), p), c
    cdef size_t db = b.size() - 1, k, j
    cdef long kk
    cdef Poly q
    if a.size() < b.size():
        return q
    q.assign(a.size() - b.size() + 1, 0)
    kk = <long> (a.size() - b.size())
    while kk >= 0:
        k = <size_t> kk
        c = (a[k + db] * inv) % p
        if c:
            q[k] = c
            for j in range(b.size()):
                a[k + j] = (a[k + j] - c * b[j]) % p
                if a[k + j] < 0:
                    a[k + j] += p
        kk -= 1
    ptrim(q)
    return q


cdef Poly pmonic(Poly a, int64_t p):
    if a.size() == 0:
        return a
    return pscale(a, modinv(a.back(), p), p)


cdef Poly pgcd(Poly a, Poly b, int64_t p):
    cdef Poly r
    while b.size():
        r = pmod(a, b, p)
        a = b
        b = r
    return pmonic(a, p)


# ---------------------------------------------------------------------------
# polynomial columns: entry t is co[off[t] : off[t+1]], rows ascending

cdef struct PCol:
    vector[int] rows
    vector[int] off
    vector[int64_t] co


cdef inline void pc_init(PCol& c):
    c.rows.clear()
    c.off.clear()
    c.co.clear()
    c.off.push_back(0)


cdef inline void pc_swap(PCol& a, PCol& b):
    a.rows.swap(b.rows)
    a.off.swap(b.off)
    a.co.swap(b.co)


cdef inline int pc_len(const PCol& c, size_t t):
    return c.off[t + 1] - c.off[t]


cdef inline Poly pc_entry(const PCol& c, size_t t):
    cdef Poly a
    a.assign(c.co.begin() + c.off[t], c.co.begin() + c.off[t + 1])
    return a


cdef inline int pc_find(const PCol& c, int row):
    """Position of ``row`` in the column, or -1."""
    cdef int lo = 0, hi = <int> c.rows.size(), mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if c.rows[mid] < row:
            lo = mid + 1
        else:
            hi = mid
    if lo < <int> c.rows.size() and c.rows[lo] == row:
        return lo
    return -1


cdef inline int pc_val(const PCol& c, size_t t):
    cdef int k
    for k in range(c.off[t], c.off[t + 1]):
        if c.co[k]:
            return k - c.off[t]
    return -1


cdef inline void pc_close(PCol& out, int row, int64_t p):
    """Reduce and trim the open tail entry; commit it unless it vanished."""
    cdef size_t start = out.off.back(), n = out.co.size(), k
    if p == 2:
        for k in range(start, n):
            out.co[k] &= 1
    else:
        for k in range(start, n):
            out.co[k] %= p
    while n > start and out.co[n - 1] == 0:
        n -= 1
    out.co.resize(n)
    if n > start:
        out.rows.push_back(row)
        out.off.push_back(<int> n)


cdef inline void put_copy(PCol& out, const PCol& x, size_t t, int row):
    """Append a (reduced, trimmed) entry of x unchanged."""
    out.co.insert(out.co.end(), x.co.begin() + x.off[t], x.co.begin() + x.off[t + 1])
    out.rows.push_back(row)
    out.off.push_back(<int> out.co.size())


# Products are accumulated unreduced while p < 2**16 (each term < 2**32) and
# reduced once in pc_close; larger p reduces every term.
cdef enum:
    LAZY_P = 1 << 16


cdef inline void put_mul(PCol& out, const Poly& u, const PCol& x, size_t t, int64_t p):
    cdef size_t start = out.co.size(), i, j
    cdef int a0 = x.off[t], na = x.off[t + 1] - x.off[t]
    cdef int64_t ui
    cdef int64_t* o
    out.co.resize(start + u.size() + na - 1, 0)
    o = &out.co[start]
    for i in range(u.size()):
        ui = u[i]
        if ui == 0:
            continue
        if p < LAZY_P:
            for j in range(<size_t> na):
                o[i + j] += ui * x.co[a0 + j]
        else:
            for j in range(<size_t> na):
                o[i + j] = (o[i + j] + ui * x.co[a0 + j]) % p


cdef inline void sub_mul(PCol& out, const Poly& b, const PCol& y, size_t t, int64_t p):
    """Subtract b * y[t] from the open tail entry."""
    cdef size_t start = out.off.back(), i, j
    cdef int a0 = y.off[t], na = y.off[t + 1] - y.off[t]
    cdef size_t need = b.size() + na - 1
    cdef int64_t nb
    cdef int64_t* o
    if out.co.size() - start < need:
        out.co.resize(start + need, 0)
    o = &out.co[start]
    for i in range(b.size()):
        if b[i] == 0:
            continue
        nb = p - b[i]
        if p < LAZY_P:
            for j in range(<size_t> na):
                o[i + j] += nb * y.co[a0 + j]
        else:
            for j in range(<size_t> na):
                o[i + j] = (o[i + j] + nb * y.co[a0 + j]) % p


cdef void pcomb(PCol& out, const Poly& u, bint u_one, const PCol& x, const Poly& b,
                const PCol& y, int64_t p):
    """out <- u*x - b*y."""
    cdef size_t i = 0, j = 0, nx = x.rows.size(), ny = y.rows.size()
    pc_init(out)
    out.rows.reserve(nx + ny)
    out.off.reserve(nx + ny + 1)
    while i < nx or j < ny:
        if j >= ny or (i < nx and x.rows[i] < y.rows[j]):
            if u_one:
                put_copy(out, x, i, x.rows[i])
            else:
                put_mul(out, u, x, i, p)
                pc_close(out, x.rows[i], p)
            i += 1
        elif i >= nx or y.rows[j] < x.rows[i]:
            sub_mul(out, b, y, j, p)
            pc_close(out, y.rows[j], p)
            j += 1
        else:
            if u_one:
                out.co.insert(out.co.end(), x.co.begin() + x.off[i], x.co.begin() + x.off[i + 1])
            else:
                put_mul(out, u, x, i, p)
            sub_mul(out, b, y, j, p)
            pc_close(out, x.rows[i], p)
            i += 1
            j += 1


cdef PCol to_pcol(dict col, int64_t p):
    cdef PCol c
    cdef vector[pair[int, int]] order
    cdef list items = list(col.items())
    cdef int64_t v
    pc_init(c)
    for idx in range(len(items)):
        order.push_back(pair[int, int](<int> items[idx][0], idx))
    cpp_sort(order.begin(), order.end())
    for i in range(order.size()):
        for x in items[order[i].second][1]:
            v = (<int64_t> x) % p
            c.co.push_back(v + p if v < 0 else v)
        pc_close(c, order[i].first, p)
    return c


cdef dict from_pcol(PCol& c):
    cdef dict d = {}
    for t in range(c.rows.size()):
        d[c.rows[t]] = tuple([c.co[k] for k in range(c.off[t], c.off[t + 1])])
    return d


cdef void pc_divide(PCol& c, const Poly& g, int64_t p):
    cdef PCol out
    cdef Poly q
    pc_init(out)
    for t in range(c.rows.size()):
        q = pquot(pc_entry(c, t), g, p)
        out.co.insert(out.co.end(), q.begin(), q.end())
        pc_close(out, c.rows[t], p)
    pc_swap(c, out)


cdef enum:
    CONTENT_LEN = 3


cdef inline int pc_maxlen(const PCol& c):
    cdef int m = 0
    for t in range(c.rows.size()):
        if pc_len(c, t) > m:
            m = pc_len(c, t)
    return m


cdef bint pc_gcd_into(Poly& g, const PCol& c, int64_t p):
    """Fold the entries of c into g; False once g is a constant."""
    for t in range(c.rows.size()):
        g = pgcd(g, pc_entry(c, t), p) if g.size() else pmonic(pc_entry(c, t), p)
        if g.size() == 1:
            return False
    return True


cdef void strip_content(PCol& col, PCol& tcol, bint track, int64_t p):
    cdef int m = pc_maxlen(col), v = 0
    cdef Poly g
    if track and pc_maxlen(tcol) > m:
        m = pc_maxlen(tcol)
    if m <= CONTENT_LEN:
        return
    if not pc_gcd_into(g, col, p):
        return
    if track and not pc_gcd_into(g, tcol, p):
        return
    while v < <int> g.size() and g[v] == 0:
        v += 1
    if v:
        g.erase(g.begin(), g.begin() + v)
    if g.size() <= 1:
        return
    pc_divide(col, g, p)
    if track:
        pc_divide(tcol, g, p)


cdef pair[int, int] colmin(const PCol& c):
    """(valuation, row) of the pivot candidate: minimal valuation, highest row."""
    cdef pair[int, int] best = pair[int, int](-1, -1)
    cdef int v
    for t in range(c.rows.size()):
        v = pc_val(c, t)
        if best.first < 0 or v <= best.first:
            best = pair[int, int](v, c.rows[t])
    return best


ctypedef pair[pair[int, int], pair[int, int]] HeapItem  # ((-val,row),(-col,version))


def dvr_reduce_modp(list cols, int64_t p, bint track=False):
    """Valuation-pivoted column elimination; see ``_pykernels.dvr_reduce``."""
    cdef int n = len(cols)
    cdef vector[PCol] C
    cdef vector[PCol] T
    cdef vector[int] version
    cdef vector[char] active
    cdef vector[vector[int]] rowcols  # lazy: may hold stale column ids
    cdef priority_queue[HeapItem] heap  # max-heap: smallest val, highest row, lowest col
    cdef HeapItem item
    cdef pair[int, int] mn
    cdef int j, k, i, v, ver, t, nrows = 0
    cdef size_t a, b_
    cdef Poly u, b, one
    cdef bint uconst
    cdef int64_t uinv
    cdef PCol newc, newt
    cdef vector[int] ks
    cdef list exps = []
    one.push_back(1)
    C.resize(n)
    version.assign(n, 0)
    active.assign(n, 1)
    if track:
        T.resize(n)
    pc_init(newt)
    for j in range(n):
        C[j] = to_pcol(cols[j], p)
        if C[j].rows.size() and C[j].rows.back() + 1 > nrows:
            nrows = C[j].rows.back() + 1
    rowcols.resize(nrows)
    for j in range(n):
        if track:
            pc_init(T[j])
            T[j].co.push_back(1)
            pc_close(T[j], j, p)
        for a in range(C[j].rows.size()):
            rowcols[C[j].rows[a]].push_back(j)
        if C[j].rows.size():
            mn = colmin(C[j])
            heap.push(HeapItem(pair[int, int](-mn.first, mn.second), pair[int, int](-j, 0)))
    while not heap.empty():
        item = heap.top()
        heap.pop()
        v = -item.first.first
        i = item.first.second
        j = -item.second.first
        ver = item.second.second
        if not active[j] or ver != version[j]:
            continue
        active[j] = 0
        exps.append(v)
        u = pc_entry(C[j], pc_find(C[j], i))
        u.erase(u.begin(), u.begin() + v)
        uconst = u.size() == 1
        uinv = modinv(u[0], p) if uconst else 0
        ks.clear()
        for k in rowcols[i]:
            if k != j and active[k] and pc_find(C[k], i) >= 0:
                ks.push_back(k)
        cpp_sort(ks.begin(), ks.end())
        ks.erase(unique(ks.begin(), ks.end()), ks.end())
        rowcols[i].clear()
        for k in ks:
            b = pc_entry(C[k], pc_find(C[k], i))
            b.erase(b.begin(), b.begin() + v)
            if uconst:
                b = pscale(b, uinv, p)
                pcomb(newc, one, True, C[k], b, C[j], p)
                if track:
                    pcomb(newt, one, True, T[k], b, T[j], p)
            else:
                pcomb(newc, u, False, C[k], b, C[j], p)
                if track:
                    pcomb(newt, u, False, T[k], b, T[j], p)
                if newc.rows.size():
                    strip_content(newc, newt, track, p)
            # register rows that are new to column k
            a = 0
            b_ = 0
            while b_ < newc.rows.size():
                if a < C[k].rows.size() and C[k].rows[a] < newc.rows[b_]:
                    a += 1
                elif a < C[k].rows.size() and C[k].rows[a] == newc.rows[b_]:
                    a += 1
                    b_ += 1
                else:
                    rowcols[newc.rows[b_]].push_back(k)
                    b_ += 1
            pc_swap(C[k], newc)
            if track:
                pc_swap(T[k], newt)
            version[k] += 1
            if C[k].rows.size():
                mn = colmin(C[k])
                heap.push(HeapItem(pair[int, int](-mn.first, mn.second),
                                   pair[int, int](-k, version[k])))
    kernel = None
    if track:
        kernel = [from_pcol(T[j]) for j in range(n) if active[j]]
    return exps, kernel


def fraction_free_rank_modp(list cols, int64_t p):
    """Rank over F_p(s); see ``_pykernels.fraction_free_rank``."""
    cdef vector[PCol] piv
    cdef unordered_map[int, int] pivot_of
    cdef PCol c, tmp
    cdef Poly a, b, g
    cdef int low, k
    cdef size_t last
    pc_init(tmp)
    for col in cols:
        c = to_pcol(col, p)
        while c.rows.size():
            low = c.rows.back()
            if pivot_of.count(low) == 0:
                break
            k = pivot_of[low]
            last = c.rows.size() - 1
            a = pc_entry(c, last)
            b = pc_entry(piv[k], piv[k].rows.size() - 1)
            g = pgcd(a, b, p)
            a = pquot(a, g, p)
            b = pquot(b, g, p)
            pcomb(tmp, b, False, c, a, piv[k], p)
            pc_swap(c, tmp)
            if c.rows.size() and pc_maxlen(c) > CONTENT_LEN:
                g.clear()
                if pc_gcd_into(g, c, p) and g.size() > 1:
                    pc_divide(c, g, p)
        if c.rows.size():
            pivot_of[c.rows.back()] = <int> piv.size()
            piv.push_back(c)
    return <int> piv.size()
