"""Small exact matrix helpers.

Matrices are tuples of tuples (rows) over any ring whose elements support
+, -, *, and for field routines also /.  Used with CycloNum entries for
point computations and MultiPoly entries for symbolic relator evaluation.
"""


def mat(rows):
    return tuple(tuple(r) for r in rows)


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for t in range(1, k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(A, e, one):
    if e == 0:
        return identity(len(A), one)
    result = A
    for _ in range(e - 1):
        result = mat_mul(result, A)
    return result


def identity(n, one):
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_scale(A, c):
    return tuple(tuple(c * x for x in row) for row in A)


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_apply(A, f):
    return tuple(tuple(f(x) for x in row) for row in A)


def transpose(A):
    return tuple(zip(*A))


def conj_transpose(A):
    return tuple(tuple(A[j][i].conj() for j in range(len(A))) for i in range(len(A[0])))


def mat_trace(A):
    acc = A[0][0]
    for i in range(1, len(A)):
        acc = acc + A[i][i]
    return acc


def det3(A):
    (a, b, c), (d, e, f), (g, h, i) = A
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def e2_3(A):
    """Second elementary symmetric function of eigenvalues (sum of 2x2 principal minors)."""
    (a, b, c), (d, e, f), (g, h, i) = A
    return (a * e - b * d) + (a * i - c * g) + (e * i - f * h)


def charpoly3(A):
    """Coefficients (c0, c1, c2) of det(tI - A) = t^3 + c2 t^2 + c1 t + c0."""
    tr = mat_trace(A)
    return (-det3(A), e2_3(A), -tr)


def is_scalar_mat(A, zero_test):
    """Scalar multiple of the identity?  Returns the scalar or None."""
    n = len(A)
    for i in range(n):
        for j in range(n):
            if i != j and not zero_test(A[i][j]):
                return None
        if i and not zero_test(A[i][i] - A[0][0]):
            return None
    return A[0][0]


def rref(M, nrows=None, ncols=None):
    """Reduced row echelon form over a field; returns (rref_rows, pivot_cols).

    M is a list of lists, modified copy; entries need +,-,*,/ and truthiness
    (nonzero test).
    """
    rows = [list(r) for r in M]
    if not rows:
        return [], []
    nrows = len(rows)
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv_p = rows[r][c]
        rows[r] = [x / inv_p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def mat_rank(M):
    _, p = rref(M)
    return len(p)


def kernel_basis(M, zero, one):
    """Basis of the right kernel of M over a field."""
    rows, pivots = rref(M)
    ncols = len(M[0]) if M else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for i, pc in enumerate(pivots):
            v[pc] = zero - rows[i][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(M, rhs):
    """One solution of M x = rhs over a field, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(M, rhs)]
    rows, pivots = rref(aug)
    ncols = len(M[0])
    for row in rows:
        if all(not row[c] for c in range(ncols)) and row[ncols]:
            return None
    x = [rhs[0] - rhs[0]] * ncols  # zeros of the right type
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = rows[i][ncols]
    return tuple(x)


def mat_inverse(A, one):
    n = len(A)
    zero = one - one
    aug = [list(A[i]) + [one if j == i else zero for j in range(n)] for i in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(rows[i][n:]) for i in range(n))
