# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled scan kernels; semantics and output order match _kernels.pure."""

from libc.stdlib cimport calloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "compiled"


cdef u64* _pack_rows(list rows, Py_ssize_t words) except NULL:
    # Copy Python int bitmasks into a flat row-major u64 buffer.
    cdef Py_ssize_t nrows = len(rows)
    cdef u64* buf = <u64*> calloc(nrows * words + 1, sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, w
    cdef object m
    for i in range(nrows):
        m = rows[i]
        w = 0
        while m:
            buf[i * words + w] = <u64> (m & 0xFFFFFFFFFFFFFFFF)
            m >>= 64
            w += 1
    return buf


cdef inline bint _testbit(u64* row, Py_ssize_t v) nogil:
    return (row[v >> 6] >> (v & 63)) & 1ULL


cdef object _unpack_mask(u64* row, Py_ssize_t words):
    cdef object m = 0
    cdef Py_ssize_t w
    for w in range(words):
        if row[w]:
            m |= (<object> row[w]) << (64 * w)
    return m


def first_tk_violation(int n, int k, list color_adj):
    """Lexicographically first k-subset that is a clique in no color, or None."""
    cdef int t = len(color_adj)
    if k > n:
        return None
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef list flat = []
    cdef int ci
    for ci in range(t):
        flat.extend(color_adj[ci])
    cdef u64* adj = _pack_rows(flat, words)  # row index = ci * n + v
    cdef u64* common = <u64*> calloc((k + 1) * t * words + 1, sizeof(u64))
    cdef int* alive_ids = <int*> calloc((k + 1) * t + 1, sizeof(int))
    cdef int* alive_cnt = <int*> calloc(k + 2, sizeof(int))
    cdef int* cand = <int*> calloc(k + 2, sizeof(int))
    cdef int* chosen = <int*> calloc(k + 2, sizeof(int))
    if common == NULL or alive_ids == NULL or alive_cnt == NULL \
            or cand == NULL or chosen == NULL:
        free(adj); free(common); free(alive_ids)
        free(alive_cnt); free(cand); free(chosen)
        raise MemoryError()

    cdef int depth = 0, v, cnt, slot, cid, limit, j
    cdef Py_ssize_t w
    cdef object result = None
    # depth 0: every color alive, common mask = all n vertices
    alive_cnt[0] = t
    for ci in range(t):
        alive_ids[ci] = ci
        for w in range(words):
            common[ci * words + w] = 0xFFFFFFFFFFFFFFFFULL
        if n & 63:
            common[ci * words + (words - 1)] = (1ULL << (n & 63)) - 1
    cand[0] = 0

    while True:
        limit = n - (k - depth - 1)
        v = cand[depth]
        if v >= limit:
            depth -= 1
            if depth < 0:
                break
            continue
        cand[depth] = v + 1
        cnt = 0
        for slot in range(alive_cnt[depth]):
            cid = alive_ids[depth * t + slot]
            if _testbit(common + (depth * t + slot) * words, v):
                alive_ids[(depth + 1) * t + cnt] = cid
                for w in range(words):
                    common[((depth + 1) * t + cnt) * words + w] = \
                        common[(depth * t + slot) * words + w] \
                        & adj[(<Py_ssize_t> cid * n + v) * words + w]
                cnt += 1
        chosen[depth] = v
        if cnt == 0:
            result = tuple([chosen[j] for j in range(depth + 1)]) + \
                tuple(range(v + 1, v + k - depth))
            break
        if depth + 1 < k:
            alive_cnt[depth + 1] = cnt
            cand[depth + 1] = v + 1
            depth += 1

    free(adj); free(common); free(alive_ids)
    free(alive_cnt); free(cand); free(chosen)
    return result


def find_induced_c4(int n, list adj):
    """Lexicographically first 4-subset inducing a 4-cycle, or None."""
    cdef unsigned char* A = <unsigned char*> calloc(n * n + 1, 1)
    if A == NULL:
        raise MemoryError()
    cdef Py_ssize_t u
    cdef object m, low
    cdef int vbit
    for u in range(n):
        m = adj[u]
        while m:
            low = m & -m
            vbit = low.bit_length() - 1
            m ^= low
            A[u * n + vbit] = 1
    cdef int a, b, c, d, eab, eac, ebc, ead, ebd, ecd
    cdef object result = None
    for a in range(n - 3):
        if result is not None:
            break
        for b in range(a + 1, n - 2):
            if result is not None:
                break
            eab = A[a * n + b]
            for c in range(b + 1, n - 1):
                if result is not None:
                    break
                eac = A[a * n + c]
                ebc = A[b * n + c]
                if eab + eac + ebc != 2:
                    continue
                for d in range(c + 1, n):
                    ead = A[a * n + d]
                    ebd = A[b * n + d]
                    ecd = A[c * n + d]
                    if ead + ebd + ecd != 2:
                        continue
                    if (eab + eac + ead == 2 and eab + ebc + ebd == 2
                            and eac + ebc + ecd == 2):
                        result = (a, b, c, d)
                        break
    free(A)
    return result


cdef void _set_candidates(u64* P, u64* X, u64* C, u64* A, int n,
                          Py_ssize_t words, int depth) nogil:
    # candidates = P \ N(pivot); pivot maximizes |P & N(u)| over P|X,
    # ties to the smallest vertex, matching the pure backend.
    cdef int best_u = -1, best_c = -1, u, c
    cdef Py_ssize_t w
    for u in range(n):
        if ((P[depth * words + (u >> 6)] | X[depth * words + (u >> 6)])
                >> (u & 63)) & 1ULL:
            c = 0
            for w in range(words):
                c += __builtin_popcountll(P[depth * words + w]
                                          & A[(<Py_ssize_t> u) * words + w])
            if c > best_c:
                best_c = c
                best_u = u
    if best_u < 0:
        for w in range(words):
            C[depth * words + w] = 0
        return
    for w in range(words):
        C[depth * words + w] = P[depth * words + w] \
            & ~A[(<Py_ssize_t> best_u) * words + w]


cdef int _pop_lowest(u64* mask, Py_ssize_t words) nogil:
    cdef Py_ssize_t w
    cdef u64 word
    for w in range(words):
        word = mask[w]
        if word:
            mask[w] = word & (word - 1)
            return <int> (w * 64 + __builtin_ctzll(word))
    return -1


def maximal_cliques(int n, list adj):
    """All maximal cliques as bitmasks (pivoted Bron-Kerbosch)."""
    if n == 0:
        return []
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef u64* A = _pack_rows(adj, words)
    # Per-level state: current P and X plus the candidate snapshot
    # P \ N(pivot), consumed one vertex at a time.  R is a single bitset
    # edited on push/pop; lvl_v remembers the vertex added at each level.
    cdef int levels = n + 2
    cdef u64* P = <u64*> calloc(levels * words, sizeof(u64))
    cdef u64* X = <u64*> calloc(levels * words, sizeof(u64))
    cdef u64* C = <u64*> calloc(levels * words, sizeof(u64))
    cdef u64* R = <u64*> calloc(words, sizeof(u64))
    cdef int* lvl_v = <int*> calloc(levels, sizeof(int))
    if P == NULL or X == NULL or C == NULL or R == NULL or lvl_v == NULL:
        free(A); free(P); free(X); free(C); free(R); free(lvl_v)
        raise MemoryError()

    cdef list out = []
    cdef int depth = 0, v
    cdef Py_ssize_t w
    cdef u64 word, childp_or, childx_or

    for w in range(words):
        P[w] = 0xFFFFFFFFFFFFFFFFULL
    if n & 63:
        P[words - 1] = (1ULL << (n & 63)) - 1
    lvl_v[0] = -1
    _set_candidates(P, X, C, A, n, words, 0)

    while depth >= 0:
        v = _pop_lowest(C + depth * words, words)
        if v < 0:
            if lvl_v[depth] >= 0:
                R[lvl_v[depth] >> 6] &= ~(1ULL << (lvl_v[depth] & 63))
            depth -= 1
            continue
        childp_or = 0
        childx_or = 0
        for w in range(words):
            word = P[depth * words + w] & A[(<Py_ssize_t> v) * words + w]
            P[(depth + 1) * words + w] = word
            childp_or |= word
            word = X[depth * words + w] & A[(<Py_ssize_t> v) * words + w]
            X[(depth + 1) * words + w] = word
            childx_or |= word
        if childp_or == 0 and childx_or == 0:
            R[v >> 6] |= 1ULL << (v & 63)
            out.append(_unpack_mask(R, words))
            R[v >> 6] &= ~(1ULL << (v & 63))
        # move v from P to X at the current level
        P[depth * words + (v >> 6)] &= ~(1ULL << (v & 63))
        X[depth * words + (v >> 6)] |= 1ULL << (v & 63)
        if childp_or == 0:
            continue
        R[v >> 6] |= 1ULL << (v & 63)
        depth += 1
        lvl_v[depth] = v
        _set_candidates(P, X, C, A, n, words, depth)

    free(A); free(P); free(X); free(C); free(R); free(lvl_v)
    return out
