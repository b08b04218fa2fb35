# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Mirrors ``_pykernels`` exactly."""

from libc.stdint cimport uint64_t, uint32_t, int32_t, uint8_t
from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t FNV_OFFSET = 0xCBF29CE484222325ULL
cdef uint64_t FNV_PRIME = 0x100000001B3ULL


cdef inline uint64_t _mix(uint64_t h, uint64_t x) nogil:
    return (h ^ x) * FNV_PRIME


cdef inline uint64_t _scramble(uint64_t x) nogil:
    cdef uint64_t z = x + 0x9E3779B97F4A7C15ULL
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
    return z ^ (z >> 31)


def mix(h, x):
    return _mix(<uint64_t>h, <uint64_t>(x & 0xFFFFFFFFFFFFFFFF))


def scramble(x):
    return _scramble(<uint64_t>x)


cdef uint64_t* _to_array(rows) except NULL:
    cdef Py_ssize_t k = len(rows)
    cdef uint64_t* a = <uint64_t*>malloc((k + 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        a[i] = <uint64_t>rows[i]
    return a


def weight_distribution(rows, int n, offset=0):
    cdef Py_ssize_t k = len(rows)
    cdef uint64_t* a = _to_array(rows)
    cdef long long* dist = <long long*>calloc(n + 1, sizeof(long long))
    cdef uint64_t x = <uint64_t>offset
    cdef uint64_t i, total = (<uint64_t>1) << k
    with nogil:
        dist[__builtin_popcountll(x)] += 1
        for i in range(1, total):
            x ^= a[__builtin_ctzll(i)]
            dist[__builtin_popcountll(x)] += 1
    out = [dist[j] for j in range(n + 1)]
    free(a)
    free(dist)
    return out


def collect_words(rows, int n, int wmin, int wmax):
    cdef Py_ssize_t k = len(rows)
    cdef uint64_t* a = _to_array(rows)
    cdef uint64_t x = 0
    cdef uint64_t i, total = (<uint64_t>1) << k
    cdef int w
    out = []
    if wmin <= 0:
        out.append(0)
    for i in range(1, total):
        x ^= a[__builtin_ctzll(i)]
        w = __builtin_popcountll(x)
        if wmin <= w <= wmax:
            out.append(x)
    free(a)
    out.sort()
    return out


def covering_radius(cols, int r):
    cdef uint64_t size = (<uint64_t>1) << r
    cdef Py_ssize_t m = len(cols)
    cdef uint64_t* steps = _to_array(cols)
    cdef uint8_t* seen = <uint8_t*>calloc(size, 1)
    cdef uint32_t* queue = <uint32_t*>malloc(size * sizeof(uint32_t))
    cdef uint64_t head = 0, tail = 0, level_end, v, w
    cdef Py_ssize_t j
    cdef int depth = 0
    if seen == NULL or queue == NULL:
        free(steps); free(seen); free(queue)
        raise MemoryError()
    with nogil:
        seen[0] = 1
        queue[tail] = 0
        tail += 1
        while True:
            level_end = tail
            while head < level_end:
                v = queue[head]
                head += 1
                for j in range(m):
                    w = v ^ steps[j]
                    if not seen[w]:
                        seen[w] = 1
                        queue[tail] = <uint32_t>w
                        tail += 1
            if tail == level_end:
                break
            depth += 1
    free(steps); free(seen); free(queue)
    if tail != size:
        raise ValueError("syndrome columns do not span F_2^r")
    return depth


cdef inline int32_t _find(int32_t* parent, int32_t v) nogil:
    cdef int32_t root = v, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        nxt = parent[v]
        parent[v] = root
        v = nxt
    return root


def orbits(mats, int k):
    cdef int32_t size = (<int32_t>1) << k
    cdef int32_t* parent = <int32_t*>malloc(size * sizeof(int32_t))
    cdef uint64_t cols[64]
    cdef int32_t v, w, x, a, b
    cdef int i, j
    cdef uint64_t row
    for v in range(size):
        parent[v] = v
    for mat in mats:
        for j in range(k):
            cols[j] = 0
        for i in range(k):
            row = <uint64_t>mat[i]
            for j in range(k):
                if (row >> j) & 1:
                    cols[j] |= (<uint64_t>1) << i
        with nogil:
            for v in range(size):
                w = 0
                x = v
                j = 0
                while x:
                    if x & 1:
                        w ^= <int32_t>cols[j]
                    x >>= 1
                    j += 1
                a = _find(parent, v)
                b = _find(parent, w)
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    counts = {}
    for v in range(size):
        a = _find(parent, v)
        counts[a] = counts.get(a, 0) + 1
    free(parent)
    reps = sorted(counts)
    return reps, [counts[r] for r in reps]


cdef void _sort_cell(int* items, int cnt, uint64_t* key) nogil:
    # insertion sort by (key, coordinate); cells never exceed 64 entries
    cdef int i, j, t
    for i in range(1, cnt):
        t = items[i]
        j = i - 1
        while j >= 0 and (key[items[j]] > key[t] or
                          (key[items[j]] == key[t] and items[j] > t)):
            items[j + 1] = items[j]
            j -= 1
        items[j + 1] = t


def refine(words, int n, cells):
    cdef Py_ssize_t nw = len(words)
    cdef uint64_t* W = _to_array(words)
    cdef int lab[64]
    cdef int start[65]
    cdef int nstart[65]
    cdef int ncells = 0, newcount, ci, s, e, t, pos, i, groups
    cdef uint64_t masks[64]
    cdef uint64_t ckey[64]
    cdef uint64_t h = FNV_OFFSET, key, g, wsum, x, low
    cdef Py_ssize_t wi
    cdef bint changed
    pos = 0
    for c in cells:
        start[ncells] = pos
        for i in sorted(c):
            lab[pos] = i
            pos += 1
        ncells += 1
    start[ncells] = pos
    with nogil:
        while True:
            for ci in range(ncells):
                masks[ci] = 0
                for t in range(start[ci], start[ci + 1]):
                    masks[ci] |= (<uint64_t>1) << lab[t]
            for i in range(n):
                ckey[i] = 0
            wsum = 0
            for wi in range(nw):
                key = FNV_OFFSET
                for ci in range(ncells):
                    key = _mix(key, <uint64_t>__builtin_popcountll(W[wi] & masks[ci]))
                g = _scramble(key)
                wsum += g
                x = W[wi]
                while x:
                    i = __builtin_ctzll(x)
                    ckey[i] += g
                    x &= x - 1
            h = _mix(h, wsum)
            changed = False
            newcount = 0
            for ci in range(ncells):
                s = start[ci]
                e = start[ci + 1]
                if e - s == 1:
                    nstart[newcount] = s
                    newcount += 1
                    continue
                _sort_cell(&lab[s], e - s, ckey)
                groups = 1
                for t in range(s + 1, e):
                    if ckey[lab[t]] != ckey[lab[t - 1]]:
                        groups += 1
                if groups > 1:
                    changed = True
                    h = _mix(h, <uint64_t>ci)
                    h = _mix(h, <uint64_t>groups)
                nstart[newcount] = s
                newcount += 1
                for t in range(s + 1, e + 1):
                    if t == e or ckey[lab[t]] != ckey[lab[t - 1]]:
                        if groups > 1:
                            h = _mix(h, ckey[lab[t - 1]])
                            h = _mix(h, <uint64_t>(t - nstart[newcount - 1]))
                        if t < e:
                            nstart[newcount] = t
                            newcount += 1
            for ci in range(newcount):
                start[ci] = nstart[ci]
            ncells = newcount
            start[ncells] = n
            if not changed:
                break
    free(W)
    out = []
    for ci in range(ncells):
        out.append(sorted(lab[t] for t in range(start[ci], start[ci + 1])))
    return out, h


def rref_words(rows, int n):
    cdef int k = len(rows)
    cdef uint64_t* a = _to_array(rows)
    cdef int rank = 0, col, t
    cdef uint64_t bit, tmp
    piv = []
    for col in range(n):
        bit = (<uint64_t>1) << col
        t = rank
        while t < k and not (a[t] & bit):
            t += 1
        if t == k:
            continue
        tmp = a[t]; a[t] = a[rank]; a[rank] = tmp
        for t in range(k):
            if t != rank and (a[t] & bit):
                a[t] ^= a[rank]
        piv.append(col)
        rank += 1
        if rank == k:
            break
    out = [a[t] for t in range(rank)]
    free(a)
    return out, piv


def permuted_rref(rows, lab):
    cdef int n = len(lab)
    cdef int k = len(rows)
    cdef uint64_t a[64]
    cdef int L[64]
    cdef int j, t, rank = 0, col
    cdef uint64_t r, y, bit, tmp
    for j in range(n):
        L[j] = lab[j]
    for t in range(k):
        r = <uint64_t>rows[t]
        y = 0
        for j in range(n):
            if (r >> L[j]) & 1:
                y |= (<uint64_t>1) << j
        a[t] = y
    for col in range(n):
        bit = (<uint64_t>1) << col
        t = rank
        while t < k and not (a[t] & bit):
            t += 1
        if t == k:
            continue
        tmp = a[t]; a[t] = a[rank]; a[rank] = tmp
        for t in range(k):
            if t != rank and (a[t] & bit):
                a[t] ^= a[rank]
        rank += 1
        if rank == k:
            break
    return tuple([a[t] for t in range(rank)])
