"""Pure-Python counting kernel; semantic twin of the compiled core.

Enumerates S_n(132) by recursive placement of the maximum (the left
part takes the values directly below the maximum, the right part the
rest, both 132-avoiding) and evaluates the avoid/contain constraints on
each permutation.  Occurrence counting is exhaustive subsequence search
pruned by partial order-isomorphism, with an early-exit cap.
"""

from __future__ import annotations

BACKEND_NAME = "python"


def _occurrences_capped(perm: list[int], n: int, pat: tuple[int, ...], cap: int) -> int:
    k = len(pat)
    if k == 0:
        return min(1, cap) if cap else 1
    if k > n:
        return 0
    chosen_vals: list[int] = []
    count = 0

    def extend(j: int, start: int) -> bool:
        nonlocal count
        last = n - (k - j)
        pj = pat[j]
        for p in range(start, last + 1):
            v = perm[p]
            ok = True
            for a in range(j):
                if (v > chosen_vals[a]) != (pj > pat[a]):
                    ok = False
                    break
            if ok:
                if j + 1 == k:
                    count += 1
                    if count >= cap:
                        return True
                else:
                    chosen_vals.append(v)
                    done = extend(j + 1, p + 1)
                    chosen_vals.pop()
                    if done:
                        return True
        return False

    extend(0, 0)
    return count


def _satisfies(
    perm: list[int],
    n: int,
    avoid: tuple[tuple[int, ...], ...],
    contain: tuple[int, ...] | None,
    t: int,
    at_least: bool,
) -> bool:
    for pat in avoid:
        if _occurrences_capped(perm, n, pat, 1) > 0:
            return False
    if contain is not None:
        if at_least:
            return _occurrences_capped(perm, n, contain, t) >= t
        return _occurrences_capped(perm, n, contain, t + 1) == t
    return True


def count_constrained(
    n: int,
    avoid: tuple[tuple[int, ...], ...],
    contain: tuple[int, ...] | None,
    t: int,
    at_least: bool,
) -> int:
    """Number of 132-avoiding permutations of length n meeting the constraints."""
    perm = [0] * n

    def fill(blocks: tuple[tuple[int, int, int], ...]) -> int:
        if not blocks:
            return 1 if _satisfies(perm, n, avoid, contain, t, at_least) else 0
        (pos, lo, size), rest = blocks[0], blocks[1:]
        if size == 0:
            return fill(rest)
        total = 0
        top = lo + size - 1
        for left in range(size):  # elements placed before the maximum
            perm[pos + left] = top
            sub = rest
            if size - 1 - left:
                sub = ((pos + left + 1, lo, size - 1 - left),) + sub
            if left:
                sub = ((pos, top - left, left),) + sub
            total += fill(sub)
        return total

    return fill(((0, 1, n),))
