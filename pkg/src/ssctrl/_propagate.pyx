# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled color propagation kernel; see _propagate_py for the contract."""

BACKEND = "cython"


def run(int n, int[::1] indptr, int[::1] tails, unsigned char[::1] star,
        int[::1] wdeg, unsigned char[::1] black, bint require_black,
        unsigned char[::1] forbid):
    cdef int i, j, k, k2
    cdef bint fired
    changes = []
    while True:
        fired = False
        for j in range(n):
            if black[j]:
                continue
            for k in range(indptr[j], indptr[j + 1]):
                i = tails[k]
                if not star[k]:
                    continue
                if require_black and not black[i]:
                    continue
                if i == j and forbid[i]:
                    continue
                if wdeg[i] != 1:
                    continue
                black[j] = 1
                for k2 in range(indptr[j], indptr[j + 1]):
                    wdeg[tails[k2]] -= 1
                changes.append((i, j))
                fired = True
                break
            if fired:
                break
        if not fired:
            return changes
