"""Exact linear algebra over Z, Q and F_p.

Everything here works on plain lists/tuples of Python ints or Fractions;
no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = list[list[int]]


def _copy_int(matrix) -> IntMatrix:
    return [[int(x) for x in row] for row in matrix]


def bareiss_rank(matrix) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination."""
    m = _copy_int(matrix)
    if not m or not m[0]:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        rank += 1
        r += 1
        if r == rows:
            break
    return rank


def modp_reduce(matrix, p: int) -> IntMatrix:
    return [[x % p for x in row] for row in matrix]


def modp_echelon(matrix, p: int) -> tuple[IntMatrix, list[int]]:
    """Reduced row echelon form mod p; returns (rref, pivot column list)."""
    m = modp_reduce(matrix, p)
    if not m or not m[0]:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] % p != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def modp_rank(matrix, p: int) -> int:
    return len(modp_echelon(matrix, p)[1])


def modp_kernel_basis(matrix, p: int) -> list[list[int]]:
    """Echelonized basis of the right kernel of `matrix` over F_p."""
    if not matrix or not matrix[0]:
        return []
    cols = len(matrix[0])
    rref, pivots = modp_echelon(matrix, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % p
        basis.append(v)
    return basis


def smith_normal_form(matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonzero elementary divisors d_1 | d_2 | ..., all positive.
    """
    m = _copy_int(matrix)
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    divisors: list[int] = []
    t = 0
    while t < min(rows, cols):
        # find the entry of smallest absolute value to pivot on
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        for row in m:
            row[t], row[bj] = row[bj], row[t]
        pivot = m[t][t]
        clean = True
        for i in range(t + 1, rows):
            q = m[i][t] // pivot
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[t])]
            if m[i][t] != 0:
                clean = False
        for j in range(t + 1, cols):
            q = m[t][j] // pivot
            if q:
                for row in m:
                    row[j] -= q * row[t]
            if m[t][j] != 0:
                clean = False
        if not clean:
            continue
        # divisibility: pivot must divide every remaining entry
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[t] = [a + b for a, b in zip(m[t], m[offender])]
            continue
        divisors.append(abs(pivot))
        t += 1
    return divisors


def snf_rank_modp(matrix, p: int) -> int:
    """Rank over F_p read off the Smith normal form (independent oracle)."""
    return sum(1 for d in smith_normal_form(matrix) if d % p != 0)


def elementary_divisors(matrix) -> list[int]:
    """Smith divisors greater than 1 (the torsion of the cokernel)."""
    return [d for d in smith_normal_form(matrix) if d > 1]


def row_hermite(matrix) -> list[list[int]]:
    """Canonical row Hermite normal form of the lattice spanned by the rows.

    Rows of the result form a basis in echelon shape with positive pivots
    and entries above each pivot reduced to [0, pivot).
    """
    m = [list(map(int, row)) for row in matrix if any(row)]
    if not m:
        return []
    cols = len(m[0])
    basis: list[list[int]] = []
    r = 0
    for c in range(cols):
        # gcd-reduce column c over rows >= r
        while True:
            nz = [i for i in range(r, len(m)) if m[i][c] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][c] // m[i0][c]
                m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
        nz = [i for i in range(r, len(m)) if m[i][c] != 0]
        if not nz:
            continue
        i0 = nz[0]
        m[r], m[i0] = m[i0], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    basis = [row for row in m[:r]]
    return basis


def in_row_lattice(hnf: list[list[int]], vector) -> bool:
    """Membership of an integer vector in the lattice with row-HNF basis `hnf`."""
    v = list(map(int, vector))
    for row in hnf:
        c = next((j for j, x in enumerate(row) if x != 0), None)
        if c is None:
            continue
        if v[c] % row[c] != 0:
            return False
        q = v[c] // row[c]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def frac_matrix_inverse(matrix) -> list[list[Fraction]]:
    """Exact inverse of a square matrix, by Gauss-Jordan over Q."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = aug[c][c]
        aug[c] = [x / inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def frac_solve(matrix, rhs) -> list[Fraction] | None:
    """Solve matrix @ x = rhs exactly; None when inconsistent.

    For underdetermined systems returns one solution (free variables 0).
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [[Fraction(matrix[i][j]) for j in range(cols)] + [Fraction(rhs[i])] for i in range(rows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in pivots:
        x[c] = aug[i][cols]
    return x


def frac_rank(matrix) -> int:
    """Rank of a matrix with Fraction (or int) entries."""
    rows = [list(map(Fraction, row)) for row in matrix]
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, nrows):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank
