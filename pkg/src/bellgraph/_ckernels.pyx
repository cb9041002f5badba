# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels on 64-bit adjacency masks.

Signatures and results match ``bellgraph._pykernels`` exactly.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc, realloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "cython"


cdef inline u64 _bit(int i) nogil:
    return (<u64>1) << i


cdef inline u64 _full(int n) nogil:
    if n >= 64:
        return ~(<u64>0)
    return _bit(n) - 1


cdef long long _embed_core(int k, int hn, u64* P, u64* H, u64* NH, u64* dom,
                           u64* freem, u64* cand, int* var, int* mapping,
                           int* order, long long limit, bint count_only,
                           int** res, long long* rescap) nogil:
    cdef long long count = 0
    cdef int depth = 0, u, v, h, best
    cdef u64 rest, m, fa, hb, nbr, non, pu
    cdef u64* D
    cdef u64* N
    cdef int* grown
    cdef bint ok

    freem[0] = _full(k)
    for v in range(k):
        if dom[v] == 0:
            return 0
    # choose the first variable
    if order != NULL:
        u = order[0]
    else:
        u = -1
        best = 65
        rest = freem[0]
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            if __builtin_popcountll(dom[v]) < best:
                best = __builtin_popcountll(dom[v])
                u = v
    var[0] = u
    cand[0] = dom[u]

    while depth >= 0:
        if cand[depth] == 0:
            depth -= 1
            continue
        h = __builtin_ctzll(cand[depth])
        cand[depth] &= cand[depth] - 1
        u = var[depth]
        fa = freem[depth] & ~_bit(u)
        D = dom + depth * k
        N = dom + (depth + 1) * k
        hb = ~_bit(h)
        nbr = H[h]
        non = NH[h]
        pu = P[u]
        ok = True
        rest = fa
        while rest:
            v = __builtin_ctzll(rest)
            rest &= rest - 1
            if (pu >> v) & 1:
                m = D[v] & hb & nbr
            else:
                m = D[v] & hb & non
            if m == 0:
                ok = False
                break
            N[v] = m
        if not ok:
            continue
        mapping[u] = h
        if depth + 1 == k:
            if not count_only:
                if (count + 1) * k > rescap[0]:
                    rescap[0] = 2 * rescap[0] + k
                    grown = <int*> realloc(res[0], rescap[0] * sizeof(int))
                    if grown == NULL:
                        return -1
                    res[0] = grown
                for v in range(k):
                    res[0][count * k + v] = mapping[v]
            count += 1
            if limit > 0 and count >= limit:
                break
            continue
        depth += 1
        freem[depth] = fa
        if order != NULL:
            u = order[depth]
        else:
            u = -1
            best = 65
            rest = fa
            while rest:
                v = __builtin_ctzll(rest)
                rest &= rest - 1
                if __builtin_popcountll(N[v]) < best:
                    best = __builtin_popcountll(N[v])
                    u = v
        var[depth] = u
        cand[depth] = N[u]
    return count


def search_embeddings(prow, hrow, int hn, allowed, order, long long limit,
                      bint count_only=False):
    cdef int k = len(prow)
    cdef int i, j
    cdef long long count
    if k == 0:
        return 1 if count_only else [()]
    if k > 64 or hn > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    cdef u64 full = _full(hn)
    cdef u64* P = <u64*> malloc(k * sizeof(u64))
    cdef u64* H = <u64*> malloc(hn * sizeof(u64))
    cdef u64* NH = <u64*> malloc(hn * sizeof(u64))
    cdef u64* dom = <u64*> malloc((k + 1) * k * sizeof(u64))
    cdef u64* freem = <u64*> malloc((k + 1) * sizeof(u64))
    cdef u64* cand = <u64*> malloc((k + 1) * sizeof(u64))
    cdef int* var = <int*> malloc((k + 1) * sizeof(int))
    cdef int* mapping = <int*> malloc(k * sizeof(int))
    cdef int* ordp = NULL
    cdef long long rescap = 0
    cdef int* res = NULL
    try:
        for i in range(k):
            P[i] = <u64> prow[i]
            dom[i] = (<u64> allowed[i]) & full
            mapping[i] = -1
        for i in range(hn):
            H[i] = <u64> hrow[i]
            NH[i] = ~H[i] & full
        if order is not None:
            ordp = <int*> malloc(k * sizeof(int))
            for i in range(k):
                ordp[i] = order[i]
        if not count_only:
            rescap = k * (limit if 0 < limit < 1024 else 1024)
            res = <int*> malloc(rescap * sizeof(int))
        with nogil:
            count = _embed_core(k, hn, P, H, NH, dom, freem, cand, var, mapping,
                                ordp, limit, count_only, &res, &rescap)
        if count < 0:
            raise MemoryError()
        if count_only:
            return count
        return [tuple([res[i * k + j] for j in range(k)]) for i in range(count)]
    finally:
        free(P)
        free(H)
        free(NH)
        free(dom)
        free(freem)
        free(cand)
        free(var)
        free(mapping)
        free(ordp)
        free(res)


cdef struct CanonState:
    int n
    u64* rows
    int* colour
    int* poscolour
    u64* twin
    int* order
    u64* cur
    u64* best
    int* best_order
    bint has_best


cdef void _canon_rec(CanonState* s, int i, u64 placed) nogil:
    cdef int v, j, c
    cdef u64 row, r
    cdef bint tied, less
    if i == s.n:
        less = not s.has_best
        if not less:
            for j in range(s.n):
                if s.cur[j] != s.best[j]:
                    less = s.cur[j] < s.best[j]
                    break
        if less:
            for j in range(s.n):
                s.best[j] = s.cur[j]
                s.best_order[j] = s.order[j]
            s.has_best = True
        return
    c = s.poscolour[i]
    for v in range(s.n):
        if s.colour[v] != c or (placed >> v) & 1 or (s.twin[v] & ~placed):
            continue
        r = s.rows[v]
        row = 0
        for j in range(i):
            row = (row << 1) | ((r >> s.order[j]) & 1)
        if s.has_best and row > s.best[i]:
            tied = True
            for j in range(i):
                if s.cur[j] != s.best[j]:
                    tied = False
                    break
            if tied:
                continue
        s.order[i] = v
        s.cur[i] = row
        _canon_rec(s, i + 1, placed | _bit(v))


def canonical_order(rows, colour, twin_lower):
    cdef int n = len(rows)
    cdef int i
    cdef CanonState s
    if n == 0:
        return []
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    s.n = n
    s.rows = <u64*> malloc(n * sizeof(u64))
    s.colour = <int*> malloc(n * sizeof(int))
    s.poscolour = <int*> malloc(n * sizeof(int))
    s.twin = <u64*> malloc(n * sizeof(u64))
    s.order = <int*> malloc(n * sizeof(int))
    s.cur = <u64*> malloc(n * sizeof(u64))
    s.best = <u64*> malloc(n * sizeof(u64))
    s.best_order = <int*> malloc(n * sizeof(int))
    s.has_best = False
    try:
        pos = sorted(colour)
        for i in range(n):
            s.rows[i] = <u64> rows[i]
            s.colour[i] = colour[i]
            s.poscolour[i] = pos[i]
            s.twin[i] = <u64> twin_lower[i]
        with nogil:
            _canon_rec(&s, 0, 0)
        return [s.best_order[i] for i in range(n)]
    finally:
        free(s.rows)
        free(s.colour)
        free(s.poscolour)
        free(s.twin)
        free(s.order)
        free(s.cur)
        free(s.best)
        free(s.best_order)


cdef class _PwhSearch:
    cdef int k, p, a
    cdef u64 full
    cdef u64[64] prow
    cdef int[64] base
    cdef u64[64] hadj
    cdef u64[64] by_letter
    cdef set failed

    cdef bint rec(self, u64 placed, int last_u, int last_r):
        cdef int gap, r, letter, b, u, last_letter
        cdef u64 nonc, want, free_, pu, adj
        cdef bint consec_edge = False
        if placed == self.full:
            return True
        key = (PyBytes_FromStringAndSize(<char*> self.by_letter, self.a * sizeof(u64)),
               last_u, last_r)
        if key in self.failed:
            return False
        last_letter = self.base[last_r]
        for gap in range(1, self.p + 2):
            r = (last_r + gap) % self.p
            letter = self.base[r]
            if gap == 1:
                nonc = placed & ~_bit(last_u)
                consec_edge = not ((self.hadj[letter] >> last_letter) & 1)
            else:
                nonc = placed
            adj = self.hadj[letter]
            want = 0
            for b in range(self.a):
                if (adj >> b) & 1:
                    want |= self.by_letter[b]
            want &= nonc
            free_ = self.full & ~placed
            while free_:
                u = __builtin_ctzll(free_)
                free_ &= free_ - 1
                pu = self.prow[u]
                if (pu & nonc) != want:
                    continue
                if gap == 1 and (<bint> ((pu >> last_u) & 1)) != consec_edge:
                    continue
                self.by_letter[letter] |= _bit(u)
                if self.rec(placed | _bit(u), u, r):
                    return True
                self.by_letter[letter] &= ~_bit(u)
        self.failed.add(key)
        return False


def pwh_search(prow, base, hadj):
    cdef int k = len(prow)
    cdef int i, r0, u, letter
    cdef _PwhSearch s
    if k == 0:
        return True
    if k > 64 or len(base) > 64 or len(hadj) > 64:
        raise ValueError("compiled kernel supports at most 64 vertices and letters")
    s = _PwhSearch()
    s.k = k
    s.p = len(base)
    s.a = len(hadj)
    s.full = _full(k)
    s.failed = set()
    for i in range(k):
        s.prow[i] = <u64> prow[i]
    for i in range(s.p):
        s.base[i] = base[i]
    for i in range(s.a):
        s.hadj[i] = <u64> hadj[i]
        s.by_letter[i] = 0
    for r0 in range(s.p):
        letter = s.base[r0]
        for u in range(k):
            s.by_letter[letter] |= _bit(u)
            if s.rec(_bit(u), u, r0):
                return True
            s.by_letter[letter] &= ~_bit(u)
    return False
