# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer elimination kernels.

A line-for-line twin of ``_kernels_py`` with typed loop indices; results
are identical.  Entries stay Python ints so nothing can overflow.
"""

from math import gcd


def det_bareiss(a):
    """Determinant of a square integer matrix (list of rows)."""
    cdef Py_ssize_t n, k, i, j
    cdef list m, rk, ri
    cdef int sign
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        rk = m[k]
        if rk[k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    rk = m[k]
                    sign = -sign
                    break
            else:
                return 0
        p = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            a_ik = ri[k]
            if a_ik:
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j] - a_ik * rk[j]) // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j]) // prev
            ri[k] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def pivot_columns(a, Py_ssize_t ncols):
    """Pivot columns of the fraction-free echelon form (rows in given order)."""
    cdef Py_ssize_t nrows, r, c, i, j, piv
    cdef list m, rr, ri, pivots
    m = [list(row) for row in a if any(row)]
    nrows = len(m)
    r = 0
    prev = 1
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        rr = m[r]
        p = rr[c]
        for i in range(r + 1, nrows):
            ri = m[i]
            a_ic = ri[c]
            if a_ic:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j] - a_ic * rr[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    ri[j] = (p * ri[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
        pivots.append(c)
    return pivots


def rank_bareiss(a, Py_ssize_t ncols):
    """Rank of an integer matrix by fraction-free echelon form."""
    return len(pivot_columns(a, ncols))


cdef dict _make_primitive(dict row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        for k in row:
            row[k] //= g
    return row


def _forward(rows, Py_ssize_t ncols):
    """Fraction-free forward elimination, sparsest pivot row first."""
    cdef Py_ssize_t c, i, best, best_len, n, k, j
    cdef list todo, keep, pivots, prows
    cdef dict prow, r, new, pk
    todo = [dict(row) for row in rows if row]
    pivots = []
    prows = []
    for c in range(ncols):
        best = -1
        best_len = 0
        for i, r in enumerate(todo):
            if c in r:
                n = len(r)
                if best < 0 or n < best_len:
                    best, best_len = i, n
        if best < 0:
            continue
        prow = todo.pop(best)
        p = prow[c]
        keep = []
        for r in todo:
            a = r.get(c)
            if a is None:
                keep.append(r)
                continue
            # r <- (p*r - a*prow) / gcd(p, a)
            g = gcd(p, a)
            pg = p // g
            ag = a // g
            new = {}
            for k, v in r.items():
                new[k] = pg * v
            for k, v in prow.items():
                w = new.get(k, 0) - ag * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            if new:
                keep.append(_make_primitive(new))
        todo = keep
        pivots.append(c)
        prows.append(prow)
        if not todo:
            break
    return pivots, prows


def sparse_rank(rows, Py_ssize_t ncols):
    """Rank of a sparse integer matrix (dict rows)."""
    return len(_forward(rows, ncols)[0])


def sparse_rref(rows, Py_ssize_t ncols):
    """Reduced row echelon form of a sparse integer matrix.

    ``rows`` is a list of dicts ``col -> nonzero int``.  Returns
    ``(pivots, prows)`` where ``prows[k]`` is a primitive integer row whose
    only nonzero entry among pivot columns sits at ``pivots[k]``.
    """
    cdef Py_ssize_t k, j
    cdef list todo, keep, pivots, prows
    cdef dict prow, r, new, pk
    pivots, prows = _forward(rows, ncols)
    # back substitution, last pivot first
    for k in range(len(prows) - 1, -1, -1):
        pk = prows[k]
        ck = pivots[k]
        p = pk[ck]
        for j in range(k):
            r = prows[j]
            a = r.get(ck)
            if a is None:
                continue
            new = {}
            for kk, v in r.items():
                new[kk] = p * v
            for kk, v in pk.items():
                w = new.get(kk, 0) - a * v
                if w:
                    new[kk] = w
                else:
                    new.pop(kk, None)
            prows[j] = _make_primitive(new)
    for k in range(len(prows)):
        r = _make_primitive(prows[k])
        if r[pivots[k]] < 0:
            r = {kk: -v for kk, v in r.items()}
        prows[k] = r
    return pivots, prows


def kernel_from_rref(pivots, prows, ncols):
    """Primitive integer kernel vectors, one per free column in ascending order."""
    pivset = set(pivots)
    free = [f for f in range(ncols) if f not in pivset]
    d = [prows[k][pivots[k]] for k in range(len(pivots))]
    # which pivot rows touch each free column
    touch = {}
    for k, r in enumerate(prows):
        for col in r:
            if col not in pivset:
                touch.setdefault(col, []).append(k)
    out = []
    for f in free:
        ks = touch.get(f, [])
        L = 1
        for k in ks:
            L = L * d[k] // gcd(L, d[k])
        v = {f: L}
        for k in ks:
            v[pivots[k]] = -prows[k][f] * (L // d[k])
        g = 0
        for x in v.values():
            g = gcd(g, x)
        if g > 1:
            v = {kk: x // g for kk, x in v.items()}
        out.append(v)
    return out
