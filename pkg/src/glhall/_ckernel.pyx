# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled folding-tree kernel; same contract as ``glhall._pykernel``."""

from glhall._pykernel import KernelError, MixedMovementError, PathGuardExceeded

cdef enum:
    MAXLEN = 64
    MAXREFL = 32
    MAXRANK = 130


cdef int _classify(int* perm, int* col, int n) except -2:
    cdef int i, k, x, y, found
    cdef bint up = False, down = False
    for i in range(n):
        x = col[i]
        y = perm[x]
        if y == x:
            continue
        found = 0
        for k in range(n):
            if col[k] == y:
                found = 1
                break
        if found:
            continue
        if y > x:
            up = True
        else:
            down = True
    if up and down:
        raise MixedMovementError("mixed movement on column %r" % ([col[i] for i in range(n)],))
    if up:
        return 1
    if down:
        return -1
    return 0


cdef void _apply(int* perm, int* col, int n, int* out):
    cdef int i, j, v
    for i in range(n):
        out[i] = perm[col[i]]
    # insertion sort, columns are short
    for i in range(1, n):
        v = out[i]
        j = i - 1
        while j >= 0 and out[j] > v:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = v


cdef bint _semistandard(int* left, int nl, int* right, int nr):
    cdef int i, m = nl if nl < nr else nr
    for i in range(m):
        if left[i] > right[i]:
            return False
    return True


cdef class _Tree:
    cdef int perms[MAXREFL][MAXRANK]
    cdef int nperms
    cdef dict memo
    cdef dict choice
    cdef object guard

    def __init__(self, perms, guard):
        cdef int i, k
        if len(perms) > MAXREFL:
            raise ValueError("too many reflections")
        self.nperms = len(perms)
        for i in range(self.nperms):
            if len(perms[i]) > MAXRANK:
                raise ValueError("alphabet too large")
            for k in range(len(perms[i])):
                self.perms[i][k] = perms[i][k]
        self.memo = {}
        self.choice = {}
        self.guard = guard

    cdef int choose(self, tuple L, int* col, int n) except -2:
        cdef int idx
        got = self.choice.get(L)
        if got is not None:
            return got
        for idx in range(self.nperms):
            if _classify(self.perms[idx], col, n) > 0:
                self.choice[L] = idx
                return idx
        self.choice[L] = -1
        return -1

    cdef dict rec(self, tuple L, tuple R):
        cdef int l[MAXLEN]
        cdef int r[MAXLEN]
        cdef int l2[MAXLEN]
        cdef int r2[MAXLEN]
        cdef int nl = len(L), nr = len(R), i, idx, cls
        cdef dict out, sub
        key = (L, R)
        got = self.memo.get(key)
        if got is not None:
            return got
        for i in range(nl):
            l[i] = L[i]
        for i in range(nr):
            r[i] = R[i]
        idx = self.choose(L, l, nl)
        if idx < 0:
            out = {(0, 0): 1}
        else:
            _apply(self.perms[idx], l, nl, l2)
            _apply(self.perms[idx], r, nr, r2)
            L2 = tuple([l2[i] for i in range(nl)])
            out = {}
            if _semistandard(l2, nl, r2, nr):
                R2 = tuple([r2[i] for i in range(nr)])
                cls = _classify(self.perms[idx], r, nr)
                sub = self.rec(L2, R2)
                if cls >= 0:
                    for (pr, pf), c in sub.items():
                        k = (pr + 1, pf)
                        out[k] = out.get(k, 0) + c
                else:
                    for k, c in sub.items():
                        out[k] = out.get(k, 0) + c
                    if not _semistandard(l2, nl, r, nr):
                        raise KernelError("id child (%r, %r) is not semistandard" % (L2, R))
                    for (pr, pf), c in self.rec(L2, R).items():
                        k = (pr, pf + 1)
                        out[k] = out.get(k, 0) + c
            else:
                if not _semistandard(l2, nl, r, nr):
                    raise KernelError("id child (%r, %r) is not semistandard" % (L2, R))
                for (pr, pf), c in self.rec(L2, R).items():
                    k = (pr, pf + 1)
                    out[k] = out.get(k, 0) + c
        if sum(out.values()) > self.guard:
            raise PathGuardExceeded("more than %d root-to-leaf paths" % self.guard)
        self.memo[key] = out
        return out


def path_stats(left, right, perms, guard=1_000_000):
    """Histogram ``{(pr, pf): count}`` of the folding tree rooted at ``(left, right)``."""
    if len(left) > MAXLEN or len(right) > MAXLEN:
        raise ValueError("column too long")
    return _Tree(perms, guard).rec(tuple(left), tuple(right))


def greedy_steps(col, perms):
    cdef int c[MAXLEN]
    cdef int tmp[MAXLEN]
    cdef int n = len(col), i, k = 0, p
    cdef _Tree t = _Tree(perms, 0)
    for i in range(n):
        c[i] = col[i]
    while True:
        for p in range(t.nperms):
            if _classify(t.perms[p], c, n) > 0:
                _apply(t.perms[p], c, n, tmp)
                for i in range(n):
                    c[i] = tmp[i]
                k += 1
                break
        else:
            return k
