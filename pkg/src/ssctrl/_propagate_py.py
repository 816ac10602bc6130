"""Pure-Python color propagation kernel.

Same contract as the compiled kernel in ``_propagate.pyx``; used as a
fallback when the extension is unavailable (or forced via SSCTRL_PURE=1).
"""

from __future__ import annotations

BACKEND = "python"


def run(n, indptr, tails, star, wdeg, black, require_black, forbid):
    """Run the color change rule to a fixpoint.

    The graph is given as a CSR over incoming edges: for head node ``j`` the
    incoming tails are ``tails[indptr[j]:indptr[j+1]]`` with ``star`` edge
    flags.  ``wdeg[i]`` holds the current number of white out-neighbors of
    ``i`` and ``black`` the node colors; both are updated in place.  A change
    ``i -> j`` fires when ``j`` is white, the edge is in the star set,
    ``wdeg[i] == 1``, ``i`` is black if ``require_black``, and the change is
    not a forbidden self-force.  The lowest forceable ``j`` fires first, ties
    on the forcer broken by the lowest ``i``; the scan restarts after every
    change.  Returns the chronological change list as (forcer, forced) pairs.
    """
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
