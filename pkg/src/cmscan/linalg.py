"""Exact linear algebra over cyclotomic fields.

Matrices are tuples of row tuples of CycloNumber, all sharing one
modulus.  Sizes here are tiny (2n x 2n for rank <= 5 groups), so the
implementations favour clarity: plain Gauss-Jordan with exact division.
"""
from __future__ import annotations

from .cyclo import CycloNumber

Matrix = tuple[tuple[CycloNumber, ...], ...]
Vector = tuple[CycloNumber, ...]


def identity(n: int, m: int) -> Matrix:
    one, zero = CycloNumber.one(m), CycloNumber.zero(m)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(_dot(row, col) for col in bt)
        for row in a
    )


def _dot(u, v) -> CycloNumber:
    it = iter(zip(u, v))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(_dot(row, v) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def scalar_mul(c: CycloNumber, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def invert(a: Matrix, m: int) -> Matrix:
    """Gauss-Jordan inverse; raises ValueError on singular input."""
    n = len(a)
    aug = [list(row) + list(idrow) for row, idrow in zip(a, identity(n, m))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(a: Matrix) -> tuple[tuple[tuple[CycloNumber, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [list(r) for r in a]
    nrows, ncols = len(rows), len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        pivot = next((i for i in range(r, nrows) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(a: Matrix, stop_at: int | None = None) -> int:
    rows = [{j: x for j, x in enumerate(row) if not x.is_zero()} for row in a]
    return sparse_rank(rows, stop_at)


def sparse_rank(rows: list[dict[int, CycloNumber]], stop_at: int | None = None) -> int:
    """Rank by elimination on sparse rows; stops early at stop_at."""
    pending = [r for r in rows if r]
    rnk = 0
    while pending:
        row = pending.pop(0)
        rnk += 1
        if stop_at is not None and rnk >= stop_at:
            return rnk
        p = min(row)
        pv = row[p]
        nxt = []
        for r in pending:
            if p in r:
                f = r[p] / pv
                merged = dict(r)
                for c, v in row.items():
                    w = merged.get(c, None)
                    w = (w - f * v) if w is not None else (-f * v)
                    if w.is_zero():
                        merged.pop(c, None)
                    else:
                        merged[c] = w
                if merged:
                    nxt.append(merged)
            else:
                nxt.append(r)
        pending = nxt
    return rnk


def kernel_basis(a: Matrix, m: int) -> list[Vector]:
    """Basis of the right kernel, from the reduced echelon form."""
    reduced, pivots = rref(a)
    ncols = len(a[0])
    free = [j for j in range(ncols) if j not in pivots]
    zero, one = CycloNumber.zero(m), CycloNumber.one(m)
    basis: list[Vector] = []
    for j in free:
        vec = [zero] * ncols
        vec[j] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][j]
        basis.append(tuple(vec))
    return basis


def column_space_basis(a: Matrix) -> list[Vector]:
    """The pivot columns of a, as vectors."""
    _, pivots = rref(a)
    cols = list(zip(*a))
    return [tuple(cols[j]) for j in pivots]


def projection_onto_image(b: Matrix, m: int) -> Matrix:
    """Projection onto Im(b) along Ker(b), by exact solve.

    Valid whenever Im(b) and Ker(b) are complementary, which holds for
    b = 1 - s with s of finite order.
    """
    n = len(b)
    image = column_space_basis(b)
    kernel = kernel_basis(b, m)
    if len(image) + len(kernel) != n:
        raise ValueError("image and kernel do not span")
    cols = image + kernel
    basis = tuple(zip(*cols))  # columns -> matrix
    binv = invert(basis, m)
    zero = CycloNumber.zero(m)
    # P = [image | 0] * basis^-1
    padded = tuple(
        tuple(image[j][i] if j < len(image) else zero for j in range(n))
        for i in range(n)
    )
    return mat_mul(padded, binv)


def symplectic_form_matrix(n: int, m: int) -> Matrix:
    """Gram matrix of omega on h + h*: omega(x, y) = x^T J y with
    J = [[0, -I], [I, 0]] in the (h coords, h* coords) basis."""
    zero, one = CycloNumber.zero(m), CycloNumber.one(m)
    rows = []
    for i in range(2 * n):
        row = [zero] * (2 * n)
        if i < n:
            row[n + i] = -one
        else:
            row[i - n] = one
        rows.append(tuple(row))
    return tuple(rows)


def symplectic_extension(a: Matrix, m: int) -> Matrix:
    """Block action on h + h*: diag(a, (a^-1)^T)."""
    n = len(a)
    dual = transpose(invert(a, m))
    zero = CycloNumber.zero(m)
    rows = []
    for i in range(n):
        rows.append(tuple(a[i]) + (zero,) * n)
    for i in range(n):
        rows.append((zero,) * n + tuple(dual[i]))
    return tuple(rows)


def restricted_form_matrix(s: Matrix, m: int) -> Matrix:
    """Gram matrix of omega_s = omega(pi_s ., pi_s .) on h + h*,
    where pi_s projects onto Im(1 - s) along Ker(1 - s)."""
    two_n = len(s)
    b = mat_sub(identity(two_n, m), s)
    p = projection_onto_image(b, m)
    j = symplectic_form_matrix(two_n // 2, m)
    return mat_mul(transpose(p), mat_mul(j, p))


def proportionality_scalar(a: Matrix, b: Matrix) -> CycloNumber | None:
    """The exact scalar c with a == c * b, or None if there is none."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y.is_zero():
                if not x.is_zero():
                    return None
                continue
            ratio = x / y
            if c is None:
                c = ratio
            elif c != ratio:
                return None
    if c is None:
        c = CycloNumber.zero(a[0][0].m)
    return c
