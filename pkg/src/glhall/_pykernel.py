"""Pure-Python folding-tree kernel.

Works on rank-encoded letters (ints ordered like the alphabet) and reflections
given as involution tables ``perm[rank]``.  Returns the histogram of
``(pr, pf)`` over root-to-leaf paths of the folding tree.
"""

from __future__ import annotations


class KernelError(RuntimeError):
    pass


class MixedMovementError(KernelError):
    pass


class PathGuardExceeded(KernelError):
    pass


def _classify(perm, col):
    present = set(col)
    up = down = False
    for x in col:
        y = perm[x]
        if y == x or y in present:
            continue
        if y > x:
            up = True
        else:
            down = True
    if up and down:
        raise MixedMovementError(f"mixed movement on column {col}")
    return 1 if up else (-1 if down else 0)


def _apply(perm, col):
    return tuple(sorted(perm[x] for x in col))


def _semistandard(left, right):
    for a, b in zip(left, right):
        if a > b:
            return False
    return True


def path_stats(left, right, perms, guard=1_000_000):
    """Histogram ``{(pr, pf): count}`` of the folding tree rooted at ``(left, right)``."""
    memo = {}
    choice = {}

    def choose(col):
        if col not in choice:
            pick = None
            for idx, perm in enumerate(perms):
                if _classify(perm, col) > 0:
                    pick = idx
                    break
            choice[col] = pick
        return choice[col]

    def rec(L, R):
        key = (L, R)
        if key in memo:
            return memo[key]
        idx = choose(L)
        if idx is None:
            out = {(0, 0): 1}
        else:
            perm = perms[idx]
            L2 = _apply(perm, L)
            R2 = _apply(perm, R)
            out = {}
            if _semistandard(L2, R2):
                if _classify(perm, R) >= 0:
                    for (pr, pf), c in rec(L2, R2).items():
                        out[(pr + 1, pf)] = out.get((pr + 1, pf), 0) + c
                else:
                    for k, c in rec(L2, R2).items():
                        out[k] = out.get(k, 0) + c
                    if not _semistandard(L2, R):
                        raise KernelError(f"id child ({L2}, {R}) is not semistandard")
                    for (pr, pf), c in rec(L2, R).items():
                        out[(pr, pf + 1)] = out.get((pr, pf + 1), 0) + c
            else:
                if not _semistandard(L2, R):
                    raise KernelError(f"id child ({L2}, {R}) is not semistandard")
                for (pr, pf), c in rec(L2, R).items():
                    out[(pr, pf + 1)] = out.get((pr, pf + 1), 0) + c
        if sum(out.values()) > guard:
            raise PathGuardExceeded(f"more than {guard} root-to-leaf paths")
        memo[key] = out
        return out

    return rec(tuple(left), tuple(right))


def greedy_steps(col, perms):
    """Number of greedy increasing steps until no reflection increases ``col``."""
    col = tuple(col)
    k = 0
    while True:
        for perm in perms:
            if _classify(perm, col) > 0:
                col = _apply(perm, col)
                k += 1
                break
        else:
            return k
