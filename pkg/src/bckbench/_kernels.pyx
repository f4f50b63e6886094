# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

cdef int UNKNOWN = -1
cdef int _OK = -1
cdef int _FAIL = -2


cdef int* _to_c(object t, int size) except NULL:
    cdef int* buf = <int*>malloc(size * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(size):
        buf[i] = t[i]
    return buf


cdef inline int _ax1(int* t, int n, int x, int y, int z) nogil:
    return t[t[t[x * n + y] * n + t[z * n + y]] * n + t[x * n + z]]


def axiom_violations(t, int n, int cap=16):
    found = []
    seen = set()
    counts = dict.fromkeys(range(1, 6), 0)

    def report(axiom, witness, observed):
        key = (axiom, witness)
        if key in seen or counts[axiom] >= cap:
            return
        seen.add(key)
        counts[axiom] += 1
        found.append((axiom, witness, observed))

    cdef int* c = _to_c(t, n * n)
    cdef int x, y, z, v
    try:
        for x in range(n):
            if c[x * n] != x:
                report(3, (x,), c[x * n])
        for x in range(n):
            if c[x] != 0:
                report(4, (x,), c[x])
        for x in range(n):
            if c[x * n + x] != 0:
                v = c[c[x * n + c[x * n]] * n]
                if v != 0:
                    report(2, (x, 0), v)
                v = _ax1(c, n, x, 0, 0)
                if v != 0:
                    report(1, (x, 0, 0), v)
        for x in range(n):
            for y in range(x + 1, n):
                if c[x * n + y] == 0 and c[y * n + x] == 0:
                    report(5, (x, y), 0)
        for x in range(n):
            for y in range(n):
                v = c[c[x * n + c[x * n + y]] * n + y]
                if v != 0:
                    report(2, (x, y), v)
        for x in range(n):
            if counts[1] >= cap:
                break
            for y in range(n):
                for z in range(n):
                    v = _ax1(c, n, x, y, z)
                    if v != 0:
                        report(1, (x, y, z), v)
    finally:
        free(c)
    return found


cdef bint _is_bck(int* t, int n) nogil:
    cdef int x, y, z, row, xy
    for x in range(n):
        if t[x * n] != x or t[x] != 0 or t[x * n + x] != 0:
            return False
    for x in range(n):
        for y in range(x + 1, n):
            if t[x * n + y] == 0 and t[y * n + x] == 0:
                return False
    for x in range(n):
        row = x * n
        for y in range(n):
            if t[t[row + t[row + y]] * n + y] != 0:
                return False
    for x in range(n):
        row = x * n
        for y in range(n):
            xy = t[row + y] * n
            for z in range(n):
                if t[t[xy + t[z * n + y]] * n + t[row + z]] != 0:
                    return False
    return True


def is_bck(t, int n):
    cdef int* c = _to_c(t, n * n)
    cdef bint ok = _is_bck(c, n)
    free(c)
    return ok


cdef bint _next_perm(int* a, int m) nogil:
    # lexicographic successor of a[0..m), False after the last one
    cdef int i = m - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = m - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def canonical(t, int n):
    cdef int size = n * n
    cdef int* c = _to_c(t, size)
    cdef int* best = <int*>malloc(size * sizeof(int))
    cdef int* p = <int*>malloc(n * sizeof(int))
    cdef int* q = <int*>malloc(n * sizeof(int))
    cdef int i, idx, v, cand
    try:
        for i in range(size):
            best[i] = c[i]
        for i in range(n):
            p[i] = i
        while n > 2 and _next_perm(p + 1, n - 1):
            for i in range(n):
                q[p[i]] = i
            cand = -1
            for idx in range(size):
                v = q[c[p[idx // n] * n + p[idx % n]]]
                if v != best[idx]:
                    if v < best[idx]:
                        cand = idx
                    break
            if cand < 0:
                continue
            for idx in range(cand, size):
                best[idx] = q[c[p[idx // n] * n + p[idx % n]]]
        return tuple([best[i] for i in range(size)])
    finally:
        free(c)
        free(best)
        free(p)
        free(q)


cdef inline int _step(int* t, int n, int a, int b) nogil:
    return t[a * n + t[a * n + b]]


cdef int _pair_depth(int* t, int n, int x, int y, int* seen,
                     int* xs, int* ys, int* out) nogil:
    # seen has n**4 slots set to -1; xs/ys hold at least 3 * n**4 + 2 terms.
    # Returns 1 with out = (link, chain, a, b, product) when bounded, else 0.
    cdef int k = 0, pre, period, key, limit, a, b, prod, m
    xs[0] = x
    xs[1] = _step(t, n, y, x)
    ys[0] = y
    ys[1] = _step(t, n, x, y)
    while True:
        key = ((xs[k] * n + xs[k + 1]) * n + ys[k]) * n + ys[k + 1]
        if seen[key] >= 0:
            pre = seen[key]
            period = k - pre
            break
        seen[key] = k
        xs[k + 2] = _step(t, n, xs[k], xs[k + 1])
        ys[k + 2] = _step(t, n, ys[k], ys[k + 1])
        k += 1
    # reset only the slots touched
    for m in range(k):
        seen[((xs[m] * n + xs[m + 1]) * n + ys[m]) * n + ys[m + 1]] = -1
    limit = pre + 2 * period
    m = k + 2
    while m <= limit:
        xs[m] = _step(t, n, xs[m - 2], xs[m - 1])
        ys[m] = _step(t, n, ys[m - 2], ys[m - 1])
        m += 1
    for k in range(limit):
        for m in range(2):
            if (k % 2 == 0) == (m == 0):
                a = xs[k]
                b = ys[k + 1]
            else:
                a = ys[k]
                b = xs[k + 1]
            prod = t[b * n + a]
            if prod != 0:
                out[0] = k
                out[1] = 8 if m == 0 else 9
                out[2] = a
                out[3] = b
                out[4] = prod
                return 1
    return 0


cdef class _DepthScratch:
    cdef int* seen
    cdef int* xs
    cdef int* ys
    cdef int n

    def __cinit__(self, int n):
        cdef int n4 = n * n * n * n, i
        self.n = n
        self.seen = <int*>malloc(n4 * sizeof(int))
        self.xs = <int*>malloc((3 * n4 + 4) * sizeof(int))
        self.ys = <int*>malloc((3 * n4 + 4) * sizeof(int))
        if self.seen == NULL or self.xs == NULL or self.ys == NULL:
            raise MemoryError()
        for i in range(n4):
            self.seen[i] = -1

    def __dealloc__(self):
        free(self.seen)
        free(self.xs)
        free(self.ys)


def pair_depth(t, int n, int x, int y):
    cdef int* c = _to_c(t, n * n)
    cdef _DepthScratch s = _DepthScratch(n)
    cdef int out[5]
    cdef int r = _pair_depth(c, n, x, y, s.seen, s.xs, s.ys, out)
    free(c)
    if r:
        return (out[0], out[1], out[2], out[3], out[4])
    return None


def first_bounded_pair(t, int n):
    cdef int* c = _to_c(t, n * n)
    cdef _DepthScratch s = _DepthScratch(n)
    cdef int out[5]
    cdef int x, y
    try:
        for x in range(n):
            for y in range(n):
                if _pair_depth(c, n, x, y, s.seen, s.xs, s.ys, out):
                    return (x, y)
        return None
    finally:
        free(c)


def free_cells(int n):
    return [x * n + y for x in range(1, n) for y in range(1, n) if x != y]


cdef struct Ctx:
    int n
    int n3
    int ncells
    int stop_depth
    int nfixed
    int* t
    int* domain
    int* cells
    int* prefix
    int* values
    int* watch        # n*n lists of capacity wcap
    int* wlen
    int wcap
    int* trail        # triples (cell, old domain or -1 for a watch push)
    int tlen
    long long nodes


cdef inline int _evaluate(int* t, int n, int n3, int inst) nogil:
    cdef int p, q, r, rem, c1, c2, c3, c4, c5, a, b, c, d, e
    if inst < n3:
        p = inst // (n * n)
        rem = inst % (n * n)
        q = rem // n
        r = rem % n
        c1 = p * n + q
        c2 = r * n + q
        c3 = p * n + r
        a = t[c1]
        b = t[c2]
        c = t[c3]
        if a < 0 or b < 0 or c < 0:
            e = n * n
            if a < 0 and c1 < e:
                e = c1
            if b < 0 and c2 < e:
                e = c2
            if c < 0 and c3 < e:
                e = c3
            return e
        c4 = a * n + b
        d = t[c4]
        if d < 0:
            return c4
        c5 = d * n + c
        e = t[c5]
        if e < 0:
            return c5
        return _OK if e == 0 else _FAIL
    p = (inst - n3) // n
    q = (inst - n3) % n
    c1 = p * n + q
    a = t[c1]
    if a < 0:
        return c1
    c2 = p * n + a
    b = t[c2]
    if b < 0:
        return c2
    c3 = b * n + q
    c = t[c3]
    if c < 0:
        return c3
    return _OK if c == 0 else _FAIL


cdef inline int _allowed(int* t, int n, int n3, int inst, int cell) nogil:
    cdef int v, mask = 0
    for v in range(n):
        t[cell] = v
        if _evaluate(t, n, n3, inst) != _FAIL:
            mask |= 1 << v
    t[cell] = UNKNOWN
    return mask


cdef inline void _undo(Ctx* ctx, int c, int mark) nogil:
    cdef int cell, old
    while ctx.tlen > mark:
        ctx.tlen -= 2
        cell = ctx.trail[ctx.tlen]
        old = ctx.trail[ctx.tlen + 1]
        if old < 0:
            ctx.wlen[cell] -= 1
        else:
            ctx.domain[cell] = old
    ctx.t[c] = UNKNOWN


cdef inline void _push(Ctx* ctx, int cell, int old) nogil:
    ctx.trail[ctx.tlen] = cell
    ctx.trail[ctx.tlen + 1] = old
    ctx.tlen += 2


cdef inline bint _assign(Ctx* ctx, int c, int v) nogil:
    cdef int n = ctx.n, i, inst, res, old, allowed, tc, mark = ctx.tlen
    cdef int* t = ctx.t
    cdef int* wl
    t[c] = v
    if v == 0:
        tc = (c % n) * n + c // n
        if t[tc] == 0:
            t[c] = UNKNOWN
            return False
        if t[tc] < 0 and ctx.domain[tc] & 1:
            _push(ctx, tc, ctx.domain[tc])
            ctx.domain[tc] &= ~1
            if ctx.domain[tc] == 0:
                _undo(ctx, c, mark)
                return False
    wl = ctx.watch + c * ctx.wcap
    for i in range(ctx.wlen[c]):
        inst = wl[i]
        res = _evaluate(t, n, ctx.n3, inst)
        if res >= 0:
            ctx.watch[res * ctx.wcap + ctx.wlen[res]] = inst
            ctx.wlen[res] += 1
            _push(ctx, res, -1)
            old = ctx.domain[res]
            allowed = _allowed(t, n, ctx.n3, inst, res)
            if old & allowed != old:
                _push(ctx, res, old)
                ctx.domain[res] = old & allowed
                if ctx.domain[res] == 0:
                    _undo(ctx, c, mark)
                    return False
        elif res == _FAIL:
            _undo(ctx, c, mark)
            return False
    return True


cdef int _dfs(Ctx* ctx, int depth, list results) except -1:
    cdef int c, v, lo, hi, mark, i, size = ctx.n * ctx.n
    if depth == ctx.stop_depth:
        if ctx.stop_depth < ctx.ncells:
            results.append(tuple([ctx.values[i] for i in range(depth)]))
        else:
            results.append(tuple([ctx.t[i] for i in range(size)]))
        return 0
    c = ctx.cells[depth]
    if depth < ctx.nfixed:
        lo = ctx.prefix[depth]
        hi = lo + 1
    else:
        lo = 0
        hi = ctx.n
    for v in range(lo, hi):
        if not (ctx.domain[c] >> v) & 1:
            continue
        mark = ctx.tlen
        if not _assign(ctx, c, v):
            continue
        if depth >= ctx.nfixed:
            ctx.nodes += 1
        ctx.values[depth] = v
        _dfs(ctx, depth + 1, results)
        _undo(ctx, c, mark)
    return 0


def search(int n, prefix=(), int stop_depth=-1, bint monotone=False):
    cdef Ctx ctx
    cdef int i, inst, res, x, ninst
    cdef list results = []
    if n > 30:
        raise ValueError("order too large for bitmask domains")
    cells = free_cells(n)
    ctx.n = n
    ctx.n3 = n * n * n
    ctx.ncells = len(cells)
    if stop_depth < 0 or stop_depth > ctx.ncells:
        stop_depth = ctx.ncells
    ctx.stop_depth = stop_depth
    ctx.nfixed = len(prefix)
    ninst = ctx.n3 + n * n
    ctx.wcap = ninst
    ctx.tlen = 0
    ctx.nodes = 0
    ctx.t = <int*>malloc(n * n * sizeof(int))
    ctx.domain = <int*>malloc(n * n * sizeof(int))
    ctx.cells = <int*>malloc((ctx.ncells + 1) * sizeof(int))
    ctx.prefix = <int*>malloc((ctx.nfixed + 1) * sizeof(int))
    ctx.values = <int*>malloc((ctx.ncells + 1) * sizeof(int))
    ctx.watch = <int*>malloc(n * n * ctx.wcap * sizeof(int))
    ctx.wlen = <int*>malloc(n * n * sizeof(int))
    # per path: at most 5 watch pushes per instance, domain entries bounded by cells * n
    ctx.trail = <int*>malloc(2 * (6 * ninst + n * n * (n + 2) + 8) * sizeof(int))
    try:
        if (ctx.t == NULL or ctx.domain == NULL or ctx.cells == NULL
                or ctx.prefix == NULL or ctx.values == NULL or ctx.watch == NULL
                or ctx.wlen == NULL or ctx.trail == NULL):
            raise MemoryError()
        for i in range(ctx.ncells):
            ctx.cells[i] = cells[i]
        for i in range(ctx.nfixed):
            ctx.prefix[i] = prefix[i]
        for i in range(n * n):
            ctx.t[i] = UNKNOWN
            ctx.wlen[i] = 0
            ctx.domain[i] = (1 << n) - 1
        for x in range(n):
            ctx.t[x] = 0
            ctx.t[x * n] = x
            ctx.t[x * n + x] = 0
        if monotone:
            for i in range(ctx.ncells):
                if ctx.cells[i] // n > ctx.cells[i] % n:
                    ctx.domain[ctx.cells[i]] &= ~1
        for inst in range(ninst):
            res = _evaluate(ctx.t, n, ctx.n3, inst)
            if res == _FAIL:
                return [], 0
            if res >= 0:
                ctx.watch[res * ctx.wcap + ctx.wlen[res]] = inst
                ctx.wlen[res] += 1
                ctx.domain[res] &= _allowed(ctx.t, n, ctx.n3, inst, res)
        for i in range(ctx.ncells):
            if ctx.domain[ctx.cells[i]] == 0:
                return [], 0
        _dfs(&ctx, 0, results)
        return results, ctx.nodes
    finally:
        free(ctx.t)
        free(ctx.domain)
        free(ctx.cells)
        free(ctx.prefix)
        free(ctx.values)
        free(ctx.watch)
        free(ctx.wlen)
        free(ctx.trail)


def automorphism_count(t, int n):
    cdef int size = n * n
    cdef int* c = _to_c(t, size)
    cdef int* p = <int*>malloc(n * sizeof(int))
    cdef int i, x, y, count = 0
    cdef bint ok
    try:
        for i in range(n):
            p[i] = i
        while True:
            ok = True
            for x in range(n):
                for y in range(n):
                    if p[c[x * n + y]] != c[p[x] * n + p[y]]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
            if n <= 2 or not _next_perm(p + 1, n - 1):
                break
        return count
    finally:
        free(c)
        free(p)
