"""Independent definitional verifiers for the closed-form layer.

Nothing here reuses a formula from `closedform`: determinants come from
fraction-free elimination, ranks and inverses from row reduction, inertia
from symmetric congruence pivoting, the spectral radius from floating-point
power iteration, and irreducibility from strong connectivity of the support
digraph.  These are the second route of every dual-route check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circulant import CirculantQ, to_dense
from .closedform import InertiaTriple, ecc_matrix_wheel, laplacian_hat
from .ratq import MatrixQ, ShapeError, VectorQ, identity, mat_mul

PIVOT_POS = "pos"
PIVOT_NEG = "neg"
PIVOT_HYPERBOLIC = "hyperbolic"
PIVOT_ZERO = "zero"


class SingularMatrixError(ValueError):
    """Inversion was requested for an exactly singular matrix."""


class PowerIterationError(RuntimeError):
    """Power iteration failed to converge; carries the last iterate."""

    def __init__(self, message: str, last: float):
        super().__init__(message)
        self.last = last


@dataclass(frozen=True)
class CongruenceReport:
    """Inertia plus the ordered log of congruence pivots that produced it."""

    inertia: InertiaTriple
    pivot_log: tuple[str, ...]

    def counts_consistent(self) -> bool:
        plus = self.pivot_log.count(PIVOT_POS) + self.pivot_log.count(PIVOT_HYPERBOLIC)
        minus = self.pivot_log.count(PIVOT_NEG) + self.pivot_log.count(PIVOT_HYPERBOLIC)
        zero = self.pivot_log.count(PIVOT_ZERO)
        return (plus, minus, zero) == self.inertia.as_tuple()


def bareiss_det(m: MatrixQ) -> Fraction:
    """Exact determinant by fraction-free elimination.

    Pivots on the first nonzero entry in each column (no magnitude pivoting
    is needed over exact rationals) and tracks row swaps for the sign.  On
    all-integer input the intermediate values stay integers, so a fast
    integer path with exact floor division is used.
    """
    if m.rows != m.cols:
        raise ShapeError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    integral = all(x.denominator == 1 for row in m.iter_rows() for x in row)
    if integral:
        a = [[x.numerator for x in row] for row in m.iter_rows()]
        one = 1
    else:
        a = [list(row) for row in m.iter_rows()]
        one = Fraction(1)
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            if integral:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) / prev
            row_i[k] = one - one
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1])


def rank_exact(m: MatrixQ) -> int:
    """Rank over the rationals by exact row reduction."""
    a = [list(row) for row in m.iter_rows()]
    rows, cols = m.rows, m.cols
    r = 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        pv = a[r][c]
        for i in range(r + 1, rows):
            if a[i][c] != 0:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse_exact(m: MatrixQ) -> MatrixQ:
    """Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting."""
    if m.rows != m.cols:
        raise ShapeError(f"inversion needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(m.iter_rows())]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(f"matrix of order {n} is singular")
        a[c], a[pivot_row] = a[pivot_row], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return MatrixQ(row[n:] for row in a)


def inertia_exact(m: MatrixQ) -> CongruenceReport:
    """Inertia of a symmetric matrix by exact congruence diagonalization.

    Repeatedly takes a nonzero diagonal pivot (simultaneous row and column
    elimination, contributing its sign) and, when the remaining diagonal is
    entirely zero but some off-diagonal entry is not, a 2x2 hyperbolic pivot
    contributing one positive and one negative eigenvalue.  What remains at
    the end is the zero matrix, counted as zero eigenvalues.  Congruence
    preserves inertia, so the pivot counts are the eigenvalue sign counts.
    """
    if not m.is_symmetric():
        raise ShapeError("inertia needs a symmetric matrix")
    a = [list(row) for row in m.iter_rows()]
    active = list(range(m.rows))
    plus = minus = 0
    log: list[str] = []
    while active:
        i = next((k for k in active if a[k][k] != 0), None)
        if i is not None:
            pivot = a[i][i]
            if pivot > 0:
                plus += 1
                log.append(PIVOT_POS)
            else:
                minus += 1
                log.append(PIVOT_NEG)
            active.remove(i)
            coef = {k: a[k][i] / pivot for k in active if a[k][i] != 0}
            for k, fk in coef.items():
                row_k, row_i = a[k], a[i]
                for l in active:
                    if row_i[l] != 0:
                        row_k[l] -= fk * row_i[l]
            for k in coef:
                a[k][i] = Fraction(0)
            continue
        pair = next(
            ((p, q) for p in active for q in active if p < q and a[p][q] != 0), None
        )
        if pair is None:
            log.extend([PIVOT_ZERO] * len(active))
            zero = len(active)
            return CongruenceReport(
                inertia=InertiaTriple(plus, minus, zero), pivot_log=tuple(log)
            )
        i, j = pair
        b = a[i][j]
        plus += 1
        minus += 1
        log.append(PIVOT_HYPERBOLIC)
        active.remove(i)
        active.remove(j)
        # Schur complement of the block [[0, b], [b, 0]] on rows/cols {i, j}
        cols_i = {k: a[k][i] for k in active if a[k][i] != 0}
        cols_j = {k: a[k][j] for k in active if a[k][j] != 0}
        for k in active:
            ki, kj = a[k][i], a[k][j]
            if ki == 0 and kj == 0:
                continue
            row_k = a[k]
            for l in active:
                li, lj = cols_i.get(l, Fraction(0)), cols_j.get(l, Fraction(0))
                row_k[l] -= (ki * lj + kj * li) / b
        for k in active:
            a[k][i] = a[k][j] = Fraction(0)
    return CongruenceReport(inertia=InertiaTriple(plus, minus, 0), pivot_log=tuple(log))


def penrose_check(e: MatrixQ, x: MatrixQ) -> tuple[bool, bool, bool, bool]:
    """Exact evaluation of the four Moore-Penrose conditions for the pair (e, x)."""
    if e.cols != x.rows or x.cols != e.rows:
        raise ShapeError(
            f"shape mismatch: {e.rows}x{e.cols} against candidate {x.rows}x{x.cols}"
        )
    ex = mat_mul(e, x)
    xe = mat_mul(x, e)
    return (
        mat_mul(ex, e) == e,
        mat_mul(xe, x) == x,
        ex == ex.transpose(),
        xe == xe.transpose(),
    )


def _strongly_connected(m: MatrixQ) -> bool:
    n = m.rows
    forward = [[j for j in range(n) if j != i and m[i, j] != 0] for i in range(n)]
    backward = [[j for j in range(n) if j != i and m[j, i] != 0] for i in range(n)]
    for adj in (forward, backward):
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def _literal_power_positive(m: MatrixQ) -> bool:
    n = m.rows
    acc = identity(n)
    base = identity(n) + m
    for _ in range(n - 1):
        acc = mat_mul(acc, base)
    return all(x > 0 for row in acc.iter_rows() for x in row)


def is_irreducible(m: MatrixQ) -> bool:
    """Irreducibility of a non-negative square matrix.

    Decided as strong connectivity of the digraph on the nonzero off-diagonal
    support, which is equivalent to the positivity of (I + A)^(n-1) for
    non-negative A.  For order <= 12 both routes are computed and must agree;
    at larger orders the matrix power would blow up entry sizes for no gain.
    """
    if m.rows != m.cols:
        raise ShapeError(f"need a square matrix, got {m.rows}x{m.cols}")
    if any(x < 0 for row in m.iter_rows() for x in row):
        raise ValueError("irreducibility test requires entrywise non-negative input")
    connected = _strongly_connected(m)
    if m.rows <= 12:
        literal = _literal_power_positive(m)
        if literal != connected:
            raise AssertionError(
                "strong-connectivity and literal power tests disagree; "
                f"connectivity={connected}, power={literal}"
            )
    return connected


def power_iteration_rho(m: MatrixQ, tol: float = 1e-12, max_iters: int = 10000) -> float:
    """Float spectral radius of a non-negative irreducible matrix.

    Deterministic all-ones start (never orthogonal to the dominant
    eigenvector of a non-negative irreducible matrix); stops when the
    Rayleigh quotient's relative change drops below tol.
    """
    if m.rows != m.cols:
        raise ShapeError(f"need a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    a = [[float(x) for x in row] for row in m.iter_rows()]
    x = [1.0] * n
    lam_prev = 0.0
    for _ in range(max_iters):
        y = [sum(ai[j] * x[j] for j in range(n)) for ai in a]
        norm = max(abs(v) for v in y)
        if norm == 0.0:
            return 0.0
        x_new = [v / norm for v in y]
        num = sum(xi * yi for xi, yi in zip(x, y))
        den = sum(xi * xi for xi in x)
        lam = num / den
        if lam != 0 and abs(lam - lam_prev) <= tol * abs(lam):
            return lam
        lam_prev = lam
        x = x_new
    raise PowerIterationError(
        f"no convergence after {max_iters} iterations (last estimate {lam_prev!r})",
        last=lam_prev,
    )


def rank_certificate_vectors(n: int) -> tuple[VectorQ, VectorQ, VectorQ]:
    """The three padding rows of the rank certificate's target matrix.

    Each has length n-3: a leading -1 followed by repeated blocks of
    (-3,0,0), (0,-3,0) and (0,0,-3) respectively.
    """
    if n % 3 != 1 or n < 10:
        raise ValueError(f"rank certificate needs n % 3 == 1 and n >= 10, got {n}")
    blocks = (n - 4) // 3
    p = VectorQ([-1] + [-3, 0, 0] * blocks)
    q = VectorQ([-1] + [0, -3, 0] * blocks)
    r = VectorQ([-1] + [0, 0, -3] * blocks)
    return p, q, r


def rank_certificate_check(n: int) -> bool:
    """Verify the rank-(n-3) certificate of the singular-case Laplacian.

    Assembles the n x (n-3) matrices X (bordered cyclic construction, three
    zero rows at the bottom) and C (3I stacked over the three padding rows),
    then checks Lhat * E * X == C exactly and rank(C) == n-3.
    """
    if n % 3 != 1 or n < 10:
        raise ValueError(f"rank certificate needs n % 3 == 1 and n >= 10, got {n}")
    s = VectorQ([-2, 0, 0] + [-1, 0, 0] * ((n - 7) // 3))
    sdense = to_dense(CirculantQ(s))
    half = Fraction(1, 2)
    x_rows = [[half * (n - 10)] + [half * (n - 7)] * (n - 4)]
    for i in range(n - 4):
        x_rows.append([-half] + [3 * half * v for v in sdense.row(i)])
    x_rows.extend([[Fraction(0)] * (n - 3) for _ in range(3)])
    x = MatrixQ(x_rows)

    p, q, r = rank_certificate_vectors(n)
    c_rows = [[Fraction(3) if i == j else Fraction(0) for j in range(n - 3)] for i in range(n - 3)]
    c_rows.extend([list(p.entries), list(q.entries), list(r.entries)])
    c = MatrixQ(c_rows)

    lhs = mat_mul(mat_mul(laplacian_hat(n), ecc_matrix_wheel(n)), x)
    return lhs == c and rank_exact(c) == n - 3
