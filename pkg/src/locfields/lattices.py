"""Integer row-lattice computations: Hermite and Smith normal forms.

A lattice is a list of integer row vectors. All arithmetic is exact, so
these routines stay correct for the enormous moduli produced by composita;
sizes here are small (rank = number of cyclic components, rarely above 40).
"""

from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _row_sub(target: list[int], source: list[int], q: int) -> None:
    for j in range(len(target)):
        target[j] -= q * source[j]


def hnf_with_transform(rows: list[list[int]],
                       ncols: int) -> tuple[Matrix, Matrix, int]:
    """Row Hermite normal form.

    Returns (H, U, rank) where U is unimodular, U * rows == H up to the
    zero rows, pivots are positive, entries above each pivot are reduced
    into [0, pivot). H keeps all len(rows) rows; rows rank.. are zero.
    """
    a = [list(row) + [0] * (ncols - len(row)) for row in rows]
    n = len(a)
    u = identity(n)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, n):
            if a[i][c] and (piv is None or abs(a[i][c]) < abs(a[piv][c])):
                piv = i
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        u[r], u[piv] = u[piv], u[r]
        while True:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            nxt = None
            for i in range(r + 1, n):
                if a[i][c]:
                    q = a[i][c] // a[r][c]
                    if q:
                        _row_sub(a[i], a[r], q)
                        _row_sub(u[i], u[r], q)
                    if a[i][c] and (nxt is None
                                    or abs(a[i][c]) < abs(a[nxt][c])):
                        nxt = i
            if nxt is None:
                break
            a[r], a[nxt] = a[nxt], a[r]
            u[r], u[nxt] = u[nxt], u[r]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                _row_sub(a[i], a[r], q)
                _row_sub(u[i], u[r], q)
        r += 1
        if r == n:
            break
    return a, u, r


def hnf(rows: list[list[int]], ncols: int) -> Matrix:
    """Nonzero rows of the Hermite normal form."""
    h, _, rank = hnf_with_transform(rows, ncols)
    return h[:rank]


def kernel(rows: list[list[int]], ncols: int) -> Matrix:
    """Basis (in HNF) of the left kernel {x : x * rows == 0}."""
    n = len(rows)
    _, u, rank = hnf_with_transform(rows, ncols)
    return hnf(u[rank:], n)


def det_from_hnf(h: Matrix) -> int:
    """Determinant of a full-rank square HNF basis (pivots on the diagonal)."""
    out = 1
    for i, row in enumerate(h):
        out *= row[i]
    return out


def in_lattice(h: Matrix, v: list[int]) -> bool:
    """Membership of v in the row span of a full-rank square HNF basis."""
    w = list(v)
    for i in range(len(h)):
        if w[i] % h[i][i]:
            return False
        q = w[i] // h[i][i]
        if q:
            for j in range(i, len(w)):
                w[j] -= q * h[i][j]
    return not any(w)


def solve_triangular(h: Matrix, v: list[int]) -> list[int]:
    """Coefficients x with x * h == v for a full-rank square HNF basis.

    Requires v to lie in the row span; entries of x are exact integers.
    """
    w = list(v)
    x = [0] * len(h)
    for i in range(len(h)):
        if w[i] % h[i][i]:
            raise ValueError("vector not in lattice")
        q = w[i] // h[i][i]
        x[i] = q
        if q:
            for j in range(i, len(w)):
                w[j] -= q * h[i][j]
    if any(w):
        raise ValueError("vector not in lattice")
    return x


def stack_hnf(a: Matrix, b: Matrix, ncols: int) -> Matrix:
    """HNF basis of the lattice generated by the rows of both inputs."""
    return hnf([list(r) for r in a] + [list(r) for r in b], ncols)


def intersect(a: Matrix, b: Matrix, ncols: int) -> Matrix:
    """HNF basis of the intersection of two row lattices."""
    rows = [list(r) for r in a] + [list(r) for r in b]
    ker = kernel(rows, ncols)
    base = []
    for krow in ker:
        vec = [0] * ncols
        for coef, arow in zip(krow[:len(a)], a):
            if coef:
                for j in range(ncols):
                    vec[j] += coef * arow[j]
        base.append(vec)
    return hnf(base, ncols)


def preimage(phi: Matrix, target: Matrix, ncols_domain: int) -> Matrix:
    """Rows v with v * phi inside the row span of target.

    phi maps Z^ncols_domain to Z^s by right multiplication; target is a
    lattice in Z^s. The result omits nothing but is not yet saturated by
    any ambient relations; callers stack their own diagonal rows.
    """
    s = len(phi[0]) if phi else 0
    if s == 0:
        return identity(ncols_domain)
    rows = [list(r) for r in phi] + [list(r) for r in target]
    ker = kernel(rows, s)
    return [krow[:ncols_domain] for krow in ker]


def snf_with_transforms(mat: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns (s, p, q, qinv) with p * mat * q == s, s diagonal with
    s[i][i] dividing s[i+1][i+1], and qinv the exact inverse of q.
    """
    s = [list(row) for row in mat]
    n = len(s)
    m = len(s[0]) if n else 0
    p = identity(n)
    q = identity(m)
    qinv = identity(m)
    t = 0
    while t < min(n, m):
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if s[i][j] and (piv is None
                                or abs(s[i][j]) < abs(s[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            p[t], p[i0] = p[i0], p[t]
        if j0 != t:
            _swap_cols(s, t, j0)
            _swap_cols(q, t, j0)
            qinv[t], qinv[j0] = qinv[j0], qinv[t]
        while True:
            if s[t][t] < 0:
                for i in range(n):
                    s[i][t] = -s[i][t]
                for i in range(m):
                    q[i][t] = -q[i][t]
                qinv[t] = [-x for x in qinv[t]]
            dirty = False
            for i in range(t + 1, n):
                if s[i][t]:
                    qq = s[i][t] // s[t][t]
                    if qq:
                        _row_sub(s[i], s[t], qq)
                        _row_sub(p[i], p[t], qq)
                    if s[i][t]:
                        s[t], s[i] = s[i], s[t]
                        p[t], p[i] = p[i], p[t]
                        dirty = True
            for j in range(t + 1, m):
                if s[t][j]:
                    qq = s[t][j] // s[t][t]
                    if qq:
                        _col_sub(s, j, t, qq)
                        _col_sub(q, j, t, qq)
                        _row_sub(qinv[t], qinv[j], -qq)
                    if s[t][j]:
                        _swap_cols(s, t, j)
                        _swap_cols(q, t, j)
                        qinv[t], qinv[j] = qinv[j], qinv[t]
                        dirty = True
            if not dirty:
                break
        # enforce the divisibility chain
        offender = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if s[i][j] % s[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(m):
                s[t][j] += s[offender][j]
            for j in range(n):
                p[t][j] += p[offender][j]
            continue
        t += 1
    return s, p, q, qinv


def _swap_cols(mat: Matrix, a: int, b: int) -> None:
    for row in mat:
        row[a], row[b] = row[b], row[a]


def _col_sub(mat: Matrix, target: int, source: int, q: int) -> None:
    for row in mat:
        row[target] -= q * row[source]
