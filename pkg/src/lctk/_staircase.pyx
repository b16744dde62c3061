# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled staircase kernels.

Same functions and semantics as ``lctk._staircase_py`` (the reference
implementation); see that module for the algorithm notes.  Dimensions up to
3 pack exponent vectors into int64 keys so sorting and dominance filtering
run entirely in C; dimension 4 slices down to the 3D core.  The Python-side
dispatcher guarantees every coordinate, cut, and count fits in int64.
"""

from libc.stdlib cimport free, malloc, qsort
from libc.string cimport memmove

from .errors import DegreeCapError, NonIsolatedError

cdef long long INF = <long long>1 << 62
cdef long long PACK = 1 << 21          # coordinate packing stride
cdef long long PMASK = PACK - 1


cdef int _cmp_ll(const void* pa, const void* pb) noexcept nogil:
    cdef long long a = (<const long long*>pa)[0]
    cdef long long b = (<const long long*>pb)[0]
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


cdef long long* _alloc(Py_ssize_t count) except NULL:
    cdef long long* ptr = <long long*>malloc(count * sizeof(long long))
    if ptr == NULL:
        raise MemoryError()
    return ptr


# ---------------------------------------------------------------------------
# minimalization

cdef Py_ssize_t _sweep_min_2d(long long* keys, Py_ssize_t count) noexcept:
    """keys sorted ascending encode (x, y); keep the strict staircase.
    Returns the number of surviving keys, compacted in place."""
    cdef long long best = INF
    cdef Py_ssize_t out = 0
    cdef Py_ssize_t i
    cdef long long y
    for i in range(count):
        y = keys[i] & PMASK
        if y < best:
            keys[out] = keys[i]
            out += 1
            best = y
    return out


cdef Py_ssize_t _sweep_min_3d(long long* keys, Py_ssize_t count,
                              long long* fx, long long* fy) noexcept:
    """keys sorted ascending encode (z, x, y); filter to the minimal
    antichain using a 2D staircase frontier (fx ascending, fy descending).
    Returns survivors compacted into keys."""
    cdef Py_ssize_t out = 0, fsize = 0
    cdef Py_ssize_t i = 0, j, g, lo, hi, mid, pos, end
    cdef long long z, x, y, best
    while i < count:
        j = i
        z = keys[i] >> 42
        while j < count and (keys[j] >> 42) == z:
            j += 1
        # group with equal z: 2D-minimalize, then consult the frontier
        best = INF
        for g in range(i, j):
            x = (keys[g] >> 21) & PMASK
            y = keys[g] & PMASK
            if y >= best:
                continue
            best = y
            # frontier query: largest fx <= x
            lo = 0
            hi = fsize
            while lo < hi:
                mid = (lo + hi) >> 1
                if fx[mid] <= x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo > 0 and fy[lo - 1] <= y:
                continue  # dominated by an earlier-z accepted vector
            keys[out] = keys[g]
            out += 1
            # insert (x, y) into the frontier
            pos = lo
            if pos > 0 and fx[pos - 1] == x:
                pos -= 1  # same x, smaller y replaces it
            end = pos
            while end < fsize and fy[end] >= y:
                end += 1
            if end > pos:
                memmove(fx + pos + 1, fx + end,
                        (fsize - end) * sizeof(long long))
                memmove(fy + pos + 1, fy + end,
                        (fsize - end) * sizeof(long long))
                fsize -= end - pos
            else:
                memmove(fx + pos + 1, fx + pos,
                        (fsize - pos) * sizeof(long long))
                memmove(fy + pos + 1, fy + pos,
                        (fsize - pos) * sizeof(long long))
            fx[pos] = x
            fy[pos] = y
            fsize += 1
        i = j
    return out


cdef list _unpack(long long* keys, Py_ssize_t count, int n):
    cdef list out = []
    cdef Py_ssize_t i
    cdef long long k
    for i in range(count):
        k = keys[i]
        if n == 2:
            out.append(((k >> 21) & PMASK, k & PMASK))
        else:
            # packed as (z, x, y); tuples are (x, y, z)
            out.append(((k >> 21) & PMASK, k & PMASK, k >> 42))
    if n == 3:
        out.sort()
    return out


cdef long long _pack2(long long x, long long y) noexcept nogil:
    return (x << 21) | y


cdef long long _pack3(long long z, long long x, long long y) noexcept nogil:
    return (z << 42) | (x << 21) | y


def _minimalize_generic(vs, n):
    out = []
    for v in sorted(vs, key=lambda w: (sum(w), w)):
        dominated = False
        for g in out:
            ok = True
            for a, b in zip(g, v):
                if a > b:
                    ok = False
                    break
            if ok:
                dominated = True
                break
        if not dominated:
            out.append(v)
    out.sort()
    return out


def minimalize(vecs, n):
    """Inclusion-minimal antichain, lexicographically sorted."""
    vs = set(tuple(v) for v in vecs)
    if not vs:
        return []
    if n == 1:
        return [min(vs)]
    if n > 3:
        return _minimalize_generic(vs, n)
    cdef Py_ssize_t count = len(vs)
    cdef long long* keys = _alloc(count)
    cdef long long* fx = NULL
    cdef long long* fy = NULL
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t kept
    try:
        if n == 2:
            for x, y in vs:
                keys[i] = _pack2(x, y)
                i += 1
            qsort(keys, count, sizeof(long long), _cmp_ll)
            kept = _sweep_min_2d(keys, count)
        else:
            for x, y, z in vs:
                keys[i] = _pack3(z, x, y)
                i += 1
            qsort(keys, count, sizeof(long long), _cmp_ll)
            fx = _alloc(count)
            fy = _alloc(count)
            kept = _sweep_min_3d(keys, count, fx, fy)
        return _unpack(keys, kept, n)
    finally:
        free(keys)
        free(fx)
        free(fy)


def product_minimal(gens_a, gens_b, n, degree_cap):
    """Minimal generators of the product of two monomial ideals."""
    cdef Py_ssize_t ka = len(gens_a), kb = len(gens_b)
    cdef long long cap = degree_cap
    if n > 3:
        sums = set()
        for a in gens_a:
            for b in gens_b:
                v = tuple(x + y for x, y in zip(a, b))
                if sum(v) > degree_cap:
                    raise DegreeCapError(
                        f"monomial of total degree {sum(v)} exceeds cap "
                        f"{degree_cap}")
                sums.add(v)
        return _minimalize_generic(sums, n)
    cdef long long* ax = _alloc(ka)
    cdef long long* ay = _alloc(ka)
    cdef long long* az = _alloc(ka)
    cdef long long* bx = _alloc(kb)
    cdef long long* by = _alloc(kb)
    cdef long long* bz = _alloc(kb)
    cdef long long* keys = _alloc(ka * kb if ka * kb > 0 else 1)
    cdef long long* fx = NULL
    cdef long long* fy = NULL
    cdef Py_ssize_t i, j, idx = 0
    cdef Py_ssize_t kept
    cdef long long x, y, z
    cdef int nn = n
    cdef bint over = False
    try:
        for i in range(ka):
            g = gens_a[i]
            ax[i] = g[0]
            ay[i] = g[1] if nn >= 2 else 0
            az[i] = g[2] if nn >= 3 else 0
        for i in range(kb):
            g = gens_b[i]
            bx[i] = g[0]
            by[i] = g[1] if nn >= 2 else 0
            bz[i] = g[2] if nn >= 3 else 0
        with nogil:
            for i in range(ka):
                if over:
                    break
                for j in range(kb):
                    x = ax[i] + bx[j]
                    y = ay[i] + by[j]
                    z = az[i] + bz[j]
                    if x + y + z > cap:
                        over = True
                        break
                    if nn == 1:
                        keys[idx] = x
                    elif nn == 2:
                        keys[idx] = _pack2(x, y)
                    else:
                        keys[idx] = _pack3(z, x, y)
                    idx += 1
        if over:
            raise DegreeCapError(
                f"monomial total degree exceeds cap {degree_cap}")
        qsort(keys, idx, sizeof(long long), _cmp_ll)
        if nn == 1:
            return [(keys[0],)]
        if nn == 2:
            kept = _sweep_min_2d(keys, idx)
        else:
            fx = _alloc(idx)
            fy = _alloc(idx)
            kept = _sweep_min_3d(keys, idx, fx, fy)
        return _unpack(keys, kept, nn)
    finally:
        free(ax)
        free(ay)
        free(az)
        free(bx)
        free(by)
        free(bz)
        free(keys)
        free(fx)
        free(fy)


# ---------------------------------------------------------------------------
# cut-family counting

cdef struct Heap:
    long long* m
    long long* b
    Py_ssize_t size


cdef inline void _heap_push(Heap* h, long long m, long long b) noexcept nogil:
    cdef Py_ssize_t i = h.size, p
    h.m[i] = m
    h.b[i] = b
    h.size += 1
    while i > 0:
        p = (i - 1) >> 1
        if h.m[p] <= h.m[i]:
            break
        h.m[p], h.m[i] = h.m[i], h.m[p]
        h.b[p], h.b[i] = h.b[i], h.b[p]
        i = p


cdef inline void _heap_pop(Heap* h) noexcept nogil:
    cdef Py_ssize_t i = 0, c
    h.size -= 1
    h.m[0] = h.m[h.size]
    h.b[0] = h.b[h.size]
    while True:
        c = 2 * i + 1
        if c >= h.size:
            break
        if c + 1 < h.size and h.m[c + 1] < h.m[c]:
            c += 1
        if h.m[i] <= h.m[c]:
            break
        h.m[i], h.m[c] = h.m[c], h.m[i]
        h.b[i], h.b[c] = h.b[c], h.b[i]
        i = c


cdef long long _count3_core(long long* a, long long* b, long long* c,
                            long long* m, Py_ssize_t* order,
                            Py_ssize_t count, Heap* heap) noexcept nogil:
    """Slice the last axis; each slice is the 2D sweep with cut m - v."""
    cdef long long cover = INF, total = 0, sub
    cdef Py_ssize_t i
    cdef long long v, x
    for i in range(count):
        if a[i] == 0 and b[i] == 0:
            x = c[i] if c[i] > m[i] else m[i]
            if x < cover:
                cover = x
    if cover == INF:
        return -1
    for v in range(cover):
        sub = _count2_core_sliced(a, b, c, m, order, count, v, heap)
        if sub < 0:
            return -1
        total += sub
    return total


cdef long long _count2_core_sliced(long long* a, long long* b,
                                   long long* c, long long* m,
                                   Py_ssize_t* order, Py_ssize_t count,
                                   long long v, Heap* heap) noexcept nogil:
    """2D sweep over terms with c[i] <= v, cuts shifted by -v."""
    cdef long long cover = INF, best_flat = INF
    cdef long long x, f, cut, total = 0
    cdef Py_ssize_t k = 0, i
    for i in range(count):
        if c[i] > v:
            continue
        cut = m[i] - v
        if b[i] == 0:
            x = a[i] if a[i] > cut else cut
            if x < cover:
                cover = x
    if cover == INF:
        return -1
    heap.size = 0
    for x in range(cover):
        while k < count:
            i = order[k]
            if c[i] > v:
                k += 1
                continue
            if a[i] > x:
                break
            k += 1
            cut = m[i] - v
            if cut - x <= b[i]:
                if b[i] < best_flat:
                    best_flat = b[i]
            else:
                _heap_push(heap, cut, b[i])
        while heap.size > 0 and heap.m[0] - heap.b[0] <= x:
            if heap.b[0] < best_flat:
                best_flat = heap.b[0]
            _heap_pop(heap)
        f = best_flat
        if heap.size > 0 and heap.m[0] - x < f:
            f = heap.m[0] - x
        if f == 0:
            break
        if f >= INF:
            return -1
        total += f
    return total


def count_cut_complement(terms, n):
    """Lattice points outside the union of {beta >= mu, |beta| >= m}."""
    cdef Py_ssize_t count = len(terms)
    if count == 0:
        raise NonIsolatedError("empty family has infinite complement")
    cdef int nn = n
    cdef long long best, v, total, sub
    if nn == 1:
        best = INF
        for mu, m in terms:
            v = max(mu[0], m)
            if v < best:
                best = v
        return best
    cdef long long* a = _alloc(count)
    cdef long long* b = _alloc(count)
    cdef long long* c = _alloc(count)
    cdef long long* d = _alloc(count)
    cdef long long* m_arr = _alloc(count)
    cdef Py_ssize_t* order = <Py_ssize_t*>malloc(
        count * sizeof(Py_ssize_t))
    cdef Heap heap
    heap.m = _alloc(count)
    heap.b = _alloc(count)
    heap.size = 0
    cdef Py_ssize_t i
    cdef long long cover
    try:
        for i, (mu, m) in enumerate(terms):
            a[i] = mu[0]
            b[i] = mu[1] if nn >= 2 else 0
            c[i] = mu[2] if nn >= 3 else 0
            d[i] = mu[3] if nn >= 4 else 0
            m_arr[i] = m
        for i, j in enumerate(
                sorted(range(count), key=lambda k: terms[k][0][0])):
            order[i] = j
        if nn == 2:
            total = _count2_core_sliced(a, b, c, m_arr, order, count, 0,
                                        &heap)
            # c[] is all zeros here, so the v=0 slice is the plain count
        elif nn == 3:
            total = _count3_core(a, b, c, m_arr, order, count, &heap)
        elif nn == 4:
            cover = INF
            for i in range(count):
                if a[i] == 0 and b[i] == 0 and c[i] == 0:
                    v = d[i] if d[i] > m_arr[i] else m_arr[i]
                    if v < cover:
                        cover = v
            if cover == INF:
                raise NonIsolatedError("no pure power on the last axis")
            total = 0
            for v in range(cover):
                sub = _count4_slice(a, b, c, d, m_arr, order, count, v,
                                    &heap)
                if sub < 0:
                    raise NonIsolatedError("infinite complement")
                total += sub
            return total
        else:
            raise ValueError("compiled kernel supports n <= 4")
        if total < 0:
            raise NonIsolatedError("infinite complement")
        return total
    finally:
        free(a)
        free(b)
        free(c)
        free(d)
        free(m_arr)
        free(order)
        free(heap.m)
        free(heap.b)


cdef long long _count4_slice(long long* a, long long* b, long long* c,
                             long long* d, long long* m,
                             Py_ssize_t* order, Py_ssize_t count,
                             long long v4, Heap* heap) noexcept nogil:
    """3D count over terms with d[i] <= v4, cuts shifted by -v4."""
    cdef long long cover = INF, total = 0, sub
    cdef Py_ssize_t i
    cdef long long v, x, cut
    for i in range(count):
        if d[i] > v4:
            continue
        cut = m[i] - v4
        if a[i] == 0 and b[i] == 0:
            x = c[i] if c[i] > cut else cut
            if x < cover:
                cover = x
    if cover == INF:
        return -1
    for v in range(cover):
        sub = _count2_core_sliced4(a, b, c, d, m, order, count, v, v4,
                                   heap)
        if sub < 0:
            return -1
        total += sub
    return total


cdef long long _count2_core_sliced4(long long* a, long long* b,
                                    long long* c, long long* d,
                                    long long* m, Py_ssize_t* order,
                                    Py_ssize_t count, long long v,
                                    long long v4,
                                    Heap* heap) noexcept nogil:
    """2D sweep over terms with c[i] <= v and d[i] <= v4."""
    cdef long long cover = INF, best_flat = INF
    cdef long long x, f, cut, total = 0
    cdef Py_ssize_t k = 0, i
    for i in range(count):
        if c[i] > v or d[i] > v4:
            continue
        cut = m[i] - v - v4
        if b[i] == 0:
            x = a[i] if a[i] > cut else cut
            if x < cover:
                cover = x
    if cover == INF:
        return -1
    heap.size = 0
    for x in range(cover):
        while k < count:
            i = order[k]
            if c[i] > v or d[i] > v4:
                k += 1
                continue
            if a[i] > x:
                break
            k += 1
            cut = m[i] - v - v4
            if cut - x <= b[i]:
                if b[i] < best_flat:
                    best_flat = b[i]
            else:
                _heap_push(heap, cut, b[i])
        while heap.size > 0 and heap.m[0] - heap.b[0] <= x:
            if heap.b[0] < best_flat:
                best_flat = heap.b[0]
            _heap_pop(heap)
        f = best_flat
        if heap.size > 0 and heap.m[0] - x < f:
            f = heap.m[0] - x
        if f == 0:
            break
        if f >= INF:
            return -1
        total += f
    return total


# ---------------------------------------------------------------------------
# diagonal fast path

def diagonal_cell(a, long long r, long long t):
    """Colength of m^r * J^t for the diagonal ideal with ascending weights."""
    cdef int n = len(a)
    cdef long long* w = _alloc(n)
    cdef long long* qbar = _alloc(n)
    cdef long long* prefix = NULL
    cdef long long* by_sum = NULL
    cdef long long* nxt = NULL
    cdef long long* h = NULL
    cdef long long* sp = NULL
    cdef long long full_box = 1, s_cap = 0, an
    cdef Py_ssize_t i, tot, s
    cdef long long total = 0
    cdef Py_ssize_t blen, nlen
    cdef long long acc, m_val
    try:
        for i in range(n):
            w[i] = a[i]
            full_box *= w[i]
            s_cap += w[i] - 1
        an = w[n - 1]
        for i in range(n):
            qbar[i] = (r + t * w[i] + w[i] - 1) // w[i]
        # box-bounded counts by coordinate sum, then h and strided prefixes
        by_sum = _alloc(s_cap + 2)
        nxt = _alloc(s_cap + 2)
        h = _alloc(s_cap + 2)
        sp = _alloc(s_cap + 2)
        by_sum[0] = 1
        blen = 1
        for i in range(n):
            nlen = blen + w[i] - 1
            for tot in range(nlen):
                nxt[tot] = 0
            for tot in range(blen):
                for s in range(w[i]):
                    nxt[tot + s] += by_sum[tot]
            for tot in range(nlen):
                by_sum[tot] = nxt[tot]
            blen = nlen
        acc = 0
        for m_val in range(s_cap + 2):
            h[m_val] = acc
            if m_val <= s_cap:
                acc += by_sum[m_val]
        for m_val in range(s_cap + 2):
            if m_val == 0:
                sp[m_val] = 0
            else:
                sp[m_val] = h[m_val] + (sp[m_val - an]
                                        if m_val - an >= 1 else 0)
        prefix = _alloc(n if n > 1 else 1)
        for i in range(n - 1):
            prefix[i] = 0
        with nogil:
            total = _diagonal_loop(w, qbar, prefix, h, sp, n, r, t,
                                   full_box, s_cap, an)
        return total
    finally:
        free(w)
        free(qbar)
        free(prefix)
        free(by_sum)
        free(nxt)
        free(h)
        free(sp)


cdef long long _diagonal_loop(long long* w, long long* qbar,
                              long long* prefix, long long* h,
                              long long* sp, int n, long long r,
                              long long t, long long full_box,
                              long long s_cap, long long an) noexcept nogil:
    cdef long long total = 0, trem, cost, wsum, tau, take, m0
    cdef long long count, k_full, m1, low, part
    cdef int i
    while True:
        trem = t
        cost = 0
        wsum = 0
        for i in range(n - 1):
            take = prefix[i] if prefix[i] < trem else trem
            cost += take * w[i]
            trem -= take
            wsum += w[i] * prefix[i]
        tau = trem
        total += tau * full_box
        # sum of h(m0 - k*an) for k in [0, count)
        m0 = r + cost - wsum
        count = qbar[n - 1] - tau
        if count > 0 and m0 > 0:
            k_full = 0
            if m0 > s_cap:
                k_full = (m0 - s_cap + an - 1) // an
                if k_full > count:
                    k_full = count
            part = k_full * full_box
            m1 = m0 - k_full * an
            if k_full < count and m1 >= 1:
                low = m1 - (count - k_full) * an
                part += sp[m1] - (sp[low] if low >= 1 else 0)
            total += part
        i = n - 2
        while i >= 0:
            prefix[i] += 1
            if prefix[i] < qbar[i]:
                break
            prefix[i] = 0
            i -= 1
        if i < 0:
            break
    return total
