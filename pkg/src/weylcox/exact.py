"""Exact linear algebra over the rationals for small dense matrices.

Everything in this package runs on integer or Fraction entries; matrices
are immutable tuples of row tuples, vectors are plain tuples.  Sizes never
exceed a few hundred rows (root lists) by at most nine columns, so simple
fraction-free-ish Gaussian elimination is both exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vector = tuple
Matrix = tuple


def intify(x):
    """Collapse an integral Fraction back to int (cosmetic, keeps hashing cheap)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def vec(values) -> Vector:
    return tuple(intify(x) for x in values)


def mat(rows) -> Matrix:
    return tuple(tuple(intify(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(intify(sum(x * y for x, y in zip(row, v))) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(intify(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a
    )


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(intify(x + y) for x, y in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(intify(x - y) for x, y in zip(u, v))


def vec_neg(u: Vector) -> Vector:
    return tuple(-x for x in u)


def vec_scale(c, u: Vector) -> Vector:
    return tuple(intify(c * x) for x in u)


def dot(u: Vector, v: Vector):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return intify(sum(x * y for x, y in zip(u, v)))


def is_zero(u: Vector) -> bool:
    return all(x == 0 for x in u)


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place row echelon form; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(vectors) -> int:
    """Rank of the span of the given row vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    _, pivots = _echelon(rows)
    return len(pivots)


def nullspace(a: Matrix) -> list[Vector]:
    """Basis of the right null space of a (list of Fraction vectors)."""
    if not a:
        return []
    n_cols = len(a[0])
    rows = [[Fraction(x) for x in row] for row in a]
    rows, pivots = _echelon(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(vec(v))
    return basis


def solve(a: Matrix, b: Vector) -> Vector | None:
    """Solve a x = b exactly; None if inconsistent (a need not be square)."""
    n_cols = len(a[0]) if a else 0
    rows = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    rows, pivots = _echelon(rows)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][n_cols]
    return vec(x)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse of a square matrix."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    rows, pivots = _echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return mat(row[n:] for row in rows)


def det(a: Matrix):
    """Exact determinant via fraction Gaussian elimination."""
    n = len(a)
    rows = [[Fraction(x) for x in row] for row in a]
    sign = 1
    d = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            sign = -sign
        d *= rows[c][c]
        inv = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return intify(sign * d)


def char_poly(a: Matrix) -> tuple:
    """Characteristic polynomial det(tI - a), coefficients leading-first.

    Uses the Faddeev-LeVerrier recursion; exact over Fractions.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c = -Fraction(sum(am[i][i] for i in range(n)), k)
        coeffs.append(c)
        m = tuple(
            tuple(am[i][j] + (c if i == j else 0) for j in range(n)) for i in range(n)
        )
    return tuple(intify(c) for c in coeffs)


def poly_mul(p: tuple, q: tuple) -> tuple:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return tuple(out)


def poly_eval(p: tuple, t):
    acc = 0
    for c in p:
        acc = acc * t + c
    return intify(acc)


def primitive_positive(v: Vector) -> Vector:
    """Scale a rational vector to coprime positive integers.

    Raises ValueError when the entries do not share a strict sign.
    """
    fracs = [Fraction(x) for x in v]
    if all(x < 0 for x in fracs):
        fracs = [-x for x in fracs]
    if not all(x > 0 for x in fracs):
        raise ValueError("vector has mixed or zero signs")
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def leading_minors_positive(a: Matrix) -> bool:
    """All leading principal minors strictly positive (positive definiteness)."""
    n = len(a)
    return all(det(tuple(row[: k + 1] for row in a[: k + 1])) > 0 for k in range(n))


def permutation_similar(a: Matrix, b: Matrix) -> bool:
    """Whether p a p^T == b for some simultaneous row/column permutation p.

    Backtracking on rows, pruning with (diagonal, sorted row multiset)
    signatures; fine for the rank <= 9 matrices used here.
    """
    n = len(a)
    if len(b) != n:
        return False

    def signature(m: Matrix, i: int):
        return (m[i][i], tuple(sorted(m[i])), tuple(sorted(r[i] for r in m)))

    sig_a = [signature(a, i) for i in range(n)]
    sig_b = [signature(b, i) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return False

    assign: list[int | None] = [None] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for j in range(n):
            if used[j] or sig_a[i] != sig_b[j]:
                continue
            ok = True
            for k in range(i):
                jk = assign[k]
                if a[i][k] != b[j][jk] or a[k][i] != b[jk][j]:
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                assign[i] = None
                used[j] = False
        return False

    return extend(0)
