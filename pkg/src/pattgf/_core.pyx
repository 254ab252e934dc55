# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel; semantic twin of ``pattgf._kernel_py``.

Same enumeration (recursive maximum placement over S_n(132)) and the
same capped occurrence search, in C buffers.  Limits: n <= 20, pattern
length <= 16, at most 8 avoided patterns.
"""

BACKEND_NAME = "cython"

DEF MAX_N = 20
DEF MAX_K = 16
DEF MAX_AVOID = 8


cdef struct Block:
    int pos
    int lo
    int size


cdef struct Constraints:
    int n_avoid
    int avoid_len[MAX_AVOID]
    int avoid_pat[MAX_AVOID][MAX_K]
    bint has_contain
    int contain_len
    int contain_pat[MAX_K]
    int t
    bint at_least


cdef int _occ_extend(int* perm, int n, int* pat, int k, int cap,
                     int j, int start, int* chosen, int* count) noexcept:
    # Returns 1 once *count hit cap (early exit), else 0.
    cdef int p, a, v, ok, pj
    pj = pat[j]
    for p in range(start, n - (k - j) + 1):
        v = perm[p]
        ok = 1
        for a in range(j):
            if (v > chosen[a]) != (pj > pat[a]):
                ok = 0
                break
        if ok:
            if j + 1 == k:
                count[0] += 1
                if count[0] >= cap:
                    return 1
            else:
                chosen[j] = v
                if _occ_extend(perm, n, pat, k, cap, j + 1, p + 1, chosen, count):
                    return 1
    return 0


cdef int _occurrences_capped(int* perm, int n, int* pat, int k, int cap) noexcept:
    cdef int chosen[MAX_K]
    cdef int count = 0
    if k == 0:
        return 1 if cap > 0 else 1
    if k > n:
        return 0
    _occ_extend(perm, n, pat, k, cap, 0, 0, chosen, &count)
    return count


cdef bint _satisfies(int* perm, int n, Constraints* c) noexcept:
    cdef int i, occ
    for i in range(c.n_avoid):
        if _occurrences_capped(perm, n, c.avoid_pat[i], c.avoid_len[i], 1) > 0:
            return False
    if c.has_contain:
        if c.at_least:
            return _occurrences_capped(perm, n, c.contain_pat, c.contain_len, c.t) >= c.t
        occ = _occurrences_capped(perm, n, c.contain_pat, c.contain_len, c.t + 1)
        return occ == c.t
    return True


cdef long _fill(int* perm, int n, Block* stack, int sp, Constraints* c) noexcept:
    cdef int pos, lo, size, top, left, nsp
    cdef long total = 0
    while sp > 0 and stack[sp - 1].size == 0:
        sp -= 1
    if sp == 0:
        return 1 if _satisfies(perm, n, c) else 0
    sp -= 1
    pos = stack[sp].pos
    lo = stack[sp].lo
    size = stack[sp].size
    top = lo + size - 1
    for left in range(size):
        perm[pos + left] = top
        nsp = sp
        if size - 1 - left:
            stack[nsp].pos = pos + left + 1
            stack[nsp].lo = lo
            stack[nsp].size = size - 1 - left
            nsp += 1
        if left:
            stack[nsp].pos = pos
            stack[nsp].lo = top - left
            stack[nsp].size = left
            nsp += 1
        total += _fill(perm, n, stack, nsp, c)
    # restore the popped block so sibling branches see a consistent stack
    stack[sp].pos = pos
    stack[sp].lo = lo
    stack[sp].size = size
    return total


def count_constrained(int n, avoid, contain, int t, bint at_least):
    """Number of 132-avoiding permutations of length n meeting the constraints."""
    cdef int perm[MAX_N]
    cdef Block stack[MAX_N]
    cdef Constraints c
    cdef int i, j
    if n < 0 or n > MAX_N:
        raise ValueError(f"n out of compiled-kernel range [0, {MAX_N}]: {n}")
    if len(avoid) > MAX_AVOID:
        raise ValueError(f"too many avoided patterns for the compiled kernel: {len(avoid)}")
    c.n_avoid = len(avoid)
    for i, pat in enumerate(avoid):
        if len(pat) > MAX_K:
            raise ValueError("pattern too long for the compiled kernel")
        c.avoid_len[i] = len(pat)
        for j, v in enumerate(pat):
            c.avoid_pat[i][j] = v
    c.has_contain = contain is not None
    c.t = t
    c.at_least = at_least
    if c.has_contain:
        if len(contain) > MAX_K:
            raise ValueError("pattern too long for the compiled kernel")
        c.contain_len = len(contain)
        for j, v in enumerate(contain):
            c.contain_pat[j] = v
    else:
        c.contain_len = 0
    if n == 0:
        stack[0].pos = 0
        stack[0].lo = 1
        stack[0].size = 0
        return _fill(perm, 0, stack, 1, &c)
    stack[0].pos = 0
    stack[0].lo = 1
    stack[0].size = n
    return _fill(perm, n, stack, 1, &c)
