"""Low-level exact matrix arithmetic on flat integer tuples.

Matrices are row-major tuples of length dim*dim with entries reduced mod
some modulus (or arbitrary integers for the exact-determinant routines).
Tuples hash fast, which the BFS layers rely on; the typed wrappers in
group.py / lie.py sit on top of these kernels.
"""

from __future__ import annotations

from fractions import Fraction

Mat = tuple[int, ...]


def identity_mat(dim: int) -> Mat:
    return tuple(1 if i == j else 0 for i in range(dim) for j in range(dim))


def zero_mat(dim: int) -> Mat:
    return (0,) * (dim * dim)


def mat_mul(a: Mat, b: Mat, dim: int, mod: int) -> Mat:
    if dim == 2:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            (a0 * b0 + a1 * b2) % mod,
            (a0 * b1 + a1 * b3) % mod,
            (a2 * b0 + a3 * b2) % mod,
            (a2 * b1 + a3 * b3) % mod,
        )
    out = []
    rng = range(dim)
    for i in rng:
        row = a[i * dim : (i + 1) * dim]
        for j in rng:
            s = 0
            for k in rng:
                s += row[k] * b[k * dim + j]
            out.append(s % mod)
    return tuple(out)


def mat_add(a: Mat, b: Mat, mod: int) -> Mat:
    return tuple((x + y) % mod for x, y in zip(a, b))


def mat_sub(a: Mat, b: Mat, mod: int) -> Mat:
    return tuple((x - y) % mod for x, y in zip(a, b))


def mat_scale(a: Mat, c: int, mod: int) -> Mat:
    return tuple((c * x) % mod for x in a)


def mat_trace(a: Mat, dim: int, mod: int) -> int:
    return sum(a[i * dim + i] for i in range(dim)) % mod


def from_rows(rows) -> Mat:
    return tuple(x for row in rows for x in row)


def to_rows(a: Mat, dim: int) -> list[list[int]]:
    return [list(a[i * dim : (i + 1) * dim]) for i in range(dim)]


def int_det(a: Mat, dim: int) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    if dim == 1:
        return a[0]
    if dim == 2:
        return a[0] * a[3] - a[1] * a[2]
    m = [list(a[i * dim : (i + 1) * dim]) for i in range(dim)]
    sign = 1
    prev = 1
    for k in range(dim - 1):
        if m[k][k] == 0:
            for r in range(k + 1, dim):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, dim):
            for j in range(k + 1, dim):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[dim - 1][dim - 1]


def minor_det(a: Mat, dim: int, row: int, col: int) -> int:
    """Exact determinant of the submatrix with one row and column removed."""
    sub = tuple(
        a[i * dim + j]
        for i in range(dim)
        if i != row
        for j in range(dim)
        if j != col
    )
    return int_det(sub, dim - 1)


def _inv_mod_p(a: Mat, dim: int, p: int) -> Mat | None:
    """Inverse over the field F_p by Gauss-Jordan, or None if singular."""
    m = [[a[i * dim + j] % p for j in range(dim)] for i in range(dim)]
    inv = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for col in range(dim):
        piv = None
        for r in range(col, dim):
            if m[r][col] % p != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        s = pow(m[col][col], -1, p)
        m[col] = [x * s % p for x in m[col]]
        inv[col] = [x * s % p for x in inv[col]]
        for r in range(dim):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
                inv[r] = [(x - f * y) % p for x, y in zip(inv[r], inv[col])]
    return tuple(x for row in inv for x in row)


def mat_inv_mod(a: Mat, dim: int, p: int, n: int) -> Mat | None:
    """Inverse mod p^n: invert over F_p, then Newton-lift X <- X(2I - AX).

    Each lift step doubles the precision at which AX = I holds, so
    ceil(log2 n) steps reach p^n.  Returns None when a is singular mod p.
    """
    x = _inv_mod_p(a, dim, p)
    if x is None:
        return None
    if n == 1:
        return x
    mod = p**n
    ident2 = tuple(2 if i == j else 0 for i in range(dim) for j in range(dim))
    e = 1
    while e < n:
        ax = mat_mul(a, x, dim, mod)
        x = mat_mul(x, mat_sub(ident2, ax, mod), dim, mod)
        e *= 2
    return x


def rational_solve(columns: list[list[int]], target: list[int]) -> list[Fraction] | None:
    """Solve sum_j c_j * columns[j] = target exactly over Q.

    Used to expand roots over a simple-root basis; columns need not span,
    and None is returned when the system is inconsistent.
    """
    rows = len(target)
    cols = len(columns)
    m = [[Fraction(columns[j][i]) for j in range(cols)] + [Fraction(target[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for rr in range(r, rows):
            if m[rr][c] != 0:
                piv = rr
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = m[r][c]
        m[r] = [x / s for x in m[r]]
        for rr in range(rows):
            if rr != r and m[rr][c] != 0:
                f = m[rr][c]
                m[rr] = [x - f * y for x, y in zip(m[rr], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for rr in range(r, rows):
        if m[rr][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for idx, c in enumerate(pivots):
        sol[c] = m[idx][cols]
    return sol
