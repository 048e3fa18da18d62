"""Shared test utilities: random exact-rational generators and a tiny cofactor oracle."""

from __future__ import annotations

from fractions import Fraction

from wheelecc.ratq import MatrixQ, VectorQ


def rand_fraction(rng, lo: int = -6, hi: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_vector(rng, n: int, **kw) -> VectorQ:
    return VectorQ([rand_fraction(rng, **kw) for _ in range(n)])


def rand_matrix(rng, rows: int, cols: int, **kw) -> MatrixQ:
    return MatrixQ([[rand_fraction(rng, **kw) for _ in range(cols)] for _ in range(rows)])


def rand_symmetric(rng, n: int, **kw) -> MatrixQ:
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rand_fraction(rng, **kw)
    return MatrixQ(a)


def rand_nonsingular(rng, n: int) -> MatrixQ:
    """Unit lower triangular times unit upper triangular: determinant exactly 1."""
    lower = [[Fraction(1) if i == j else rand_fraction(rng) if i > j else Fraction(0)
              for j in range(n)] for i in range(n)]
    upper = [[Fraction(1) if i == j else rand_fraction(rng) if i < j else Fraction(0)
              for j in range(n)] for i in range(n)]
    from wheelecc.ratq import mat_mul

    return mat_mul(MatrixQ(lower), MatrixQ(upper))


def cofactor_det(m: MatrixQ) -> Fraction:
    """Laplace expansion along the first row; fine for order <= 6."""
    n = m.rows
    assert n == m.cols
    if n == 1:
        return m[0, 0]
    total = Fraction(0)
    for j in range(n):
        if m[0, j] == 0:
            continue
        minor = MatrixQ(
            [row[:j] + row[j + 1 :] for row in (list(r) for r in list(m.iter_rows())[1:])]
        )
        sign = 1 if j % 2 == 0 else -1
        total += sign * m[0, j] * cofactor_det(minor)
    return total
