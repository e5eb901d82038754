"""Exact dense linear algebra over the scalar rings.

Matrices are lists of payload rows.  Sizes in this library never exceed
27, so the algorithms optimize for exactness, not asymptotics:
fraction-free Bareiss over ZZ, ordinary elimination over fields,
cofactor expansion for rings with zero divisors.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ZZ, QQ


def identity(R, n):
    return [[R.one if i == j else R.zero for j in range(n)] for i in range(n)]


def mat_mul(R, A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        [R.sum(R.mul(A[i][k], B[k][j]) for k in range(m)) for j in range(p)]
        for i in range(n)
    ]


def mat_vec(R, A, x):
    return [R.dot(row, x) for row in A]


def vec_mat(R, x, A):
    n = len(A)
    m = len(A[0])
    return [R.sum(R.mul(x[i], A[i][j]) for i in range(n)) for j in range(m)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def det(R, A):
    n = len(A)
    if n == 0:
        return R.one
    if R == ZZ:
        return _det_bareiss(A)
    if R.is_field:
        return _det_field(R, A)
    if R == QQ:
        return _det_field(R, A)
    return _det_cofactor(R, A)


def _det_bareiss(A):
    n = len(A)
    m = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_field(R, A):
    n = len(A)
    m = [row[:] for row in A]
    d = R.one
    for c in range(n):
        piv = None
        for r in range(c, n):
            if not R.is_zero(m[r][c]):
                piv = r
                break
        if piv is None:
            return R.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = R.neg(d)
        d = R.mul(d, m[c][c])
        inv = R.inv(m[c][c])
        for r in range(c + 1, n):
            if R.is_zero(m[r][c]):
                continue
            f = R.mul(m[r][c], inv)
            for k in range(c, n):
                m[r][k] = R.sub(m[r][k], R.mul(f, m[c][k]))
    return d


def _det_cofactor(R, A):
    n = len(A)
    if n == 1:
        return A[0][0]
    if n == 2:
        return R.sub(R.mul(A[0][0], A[1][1]), R.mul(A[0][1], A[1][0]))
    acc = R.zero
    rest = A[1:]
    for j in range(n):
        if R.is_zero(A[0][j]):
            continue
        minor = [row[:j] + row[j + 1 :] for row in rest]
        term = R.mul(A[0][j], _det_cofactor(R, minor))
        acc = R.add(acc, term) if j % 2 == 0 else R.sub(acc, term)
    return acc


def solve_rational(A, b):
    """Solve A x = b over QQ; returns x or None if inconsistent/singular.

    A is n x n with Fraction entries, b length n.
    """
    n = len(A)
    m = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(n)]
    col = 0
    for c in range(n):
        piv = None
        for r in range(col, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][c]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        col += 1
    return [m[i][n] for i in range(n)]


def inverse_rational(A):
    n = len(A)
    m = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]
