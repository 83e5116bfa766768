"""Exact dense linear algebra over the scalar rings.

Everything works on lists of row lists.  Rational routines use Fraction;
the generic routines take a ScalarRing with field operations (used for
finite fields).  Sizes here are tiny (dimension <= ~100), so plain
Gaussian elimination is the right tool.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ScalarRing


def rref_rational(rows: list[list[Fraction]]):
    """Reduced row echelon form; returns (rref rows, pivot column list)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_rational(rows) -> int:
    return len(rref_rational(rows)[1])


def nullspace_rational(rows: list[list[Fraction]], ncols: int | None = None):
    """Basis of the right kernel of the matrix, as lists of Fractions."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = rref_rational(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def solve_upper_triangular(matrix, rhs):
    """Solve M x = rhs for square upper-triangular M with nonzero diagonal."""
    n = len(matrix)
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rhs[i])
        for j in range(i + 1, n):
            acc -= Fraction(matrix[i][j]) * x[j]
        if matrix[i][i] == 0:
            raise ZeroDivisionError("zero diagonal entry in triangular solve")
        x[i] = acc / Fraction(matrix[i][i])
    return x


def mat_mul(a, b):
    nb = len(b)
    ncols = len(b[0]) if nb else 0
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def rank_field(rows, ring: ScalarRing) -> int:
    return len(_echelon_field(rows, ring)[0])


def _echelon_field(rows, ring: ScalarRing):
    """Row echelon over a field ring; returns (reduced rows, pivot cols)."""
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if not ring.is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ring.inv(m[r][c])
        m[r] = [ring.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and not ring.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [ring.sub(a, ring.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace_field(rows, ring: ScalarRing, ncols: int | None = None):
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    red, pivots = _echelon_field(rows, ring)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ring.zero] * ncols
        vec[fc] = ring.one
        for r, pc in enumerate(pivots):
            vec[pc] = ring.neg(red[r][fc])
        basis.append(vec)
    return basis


def in_row_span_field(rows, vector, ring: ScalarRing) -> bool:
    """True if vector is a linear combination of the given rows."""
    base = rank_field(rows, ring)
    return rank_field(list(rows) + [list(vector)], ring) == base


def _clear_denominators(vec) -> list[int]:
    from math import gcd, lcm

    denoms = [Fraction(v).denominator for v in vec]
    m = 1
    for d in denoms:
        m = lcm(m, d)
    ints = [int(Fraction(v) * m) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def nullspace_int(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Right kernel of an integer matrix, as primitive integer vectors.

    Forward elimination is fraction-free (gcd-reduced integer rows); back
    substitution is rational and the result cleared of denominators.
    """
    from math import gcd

    m = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                row = [p * a - f * b for a, b in zip(m[i], m[r])]
                g = 0
                for v in row:
                    g = gcd(g, v)
                if g > 1:
                    row = [v // g for v in row]
                m[i] = row
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    m = m[:r]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            acc = Fraction(0)
            for c in range(pc + 1, ncols):
                if m[i][c]:
                    acc += m[i][c] * vec[c]
            vec[pc] = -acc / m[i][pc]
        basis.append(_clear_denominators(vec))
    return basis


def kernel_intersection_int(dim: int, operators):
    """Common right kernel of integer operator matrices, over Q.

    operators yields dim x dim integer matrices; a deterministic weighted
    combination of all of them is applied first so the working dimension
    collapses in one elimination, then every individual kernel is
    intersected exactly.  Returns primitive integer basis vectors.
    """
    ops = list(operators)
    basis = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]

    def intersect(op):
        nonlocal basis
        if not basis:
            return
        applied = []
        for vec in basis:
            out = [0] * dim
            for i, row in enumerate(op):
                acc = 0
                for j, x in enumerate(row):
                    if x:
                        acc += x * vec[j]
                out[i] = acc
            applied.append(out)
        columns = [[applied[k][i] for k in range(len(basis))] for i in range(dim)]
        coeffs = nullspace_int(columns, ncols=len(basis))
        basis = [
            [sum(c[k] * basis[k][j] for k in range(len(basis))) for j in range(dim)]
            for c in coeffs
        ]

    if len(ops) > 1:
        combined = [[0] * dim for _ in range(dim)]
        for w, op in enumerate(ops, start=1):
            for i in range(dim):
                row = op[i]
                crow = combined[i]
                for j in range(dim):
                    if row[j]:
                        crow[j] += w * row[j]
        intersect(combined)
    for op in ops:
        intersect(op)
    return basis


def kernel_intersection_field(dim: int, operators, ring: ScalarRing):
    """Same as kernel_intersection_int but over a finite field ring."""
    ops = [[[ring.coerce(x) for x in row] for row in op] for op in operators]
    basis = [
        [ring.one if i == j else ring.zero for j in range(dim)] for i in range(dim)
    ]

    def intersect(op):
        nonlocal basis
        if not basis:
            return
        applied = []
        for vec in basis:
            out = [ring.zero] * dim
            for i, row in enumerate(op):
                acc = ring.zero
                for j, x in enumerate(row):
                    if not ring.is_zero(x):
                        acc = ring.add(acc, ring.mul(x, vec[j]))
                out[i] = acc
            applied.append(out)
        columns = [[applied[k][i] for k in range(len(basis))] for i in range(dim)]
        coeffs = nullspace_field(columns, ring, ncols=len(basis))
        new_basis = []
        for c in coeffs:
            vec = [ring.zero] * dim
            for k in range(len(basis)):
                if not ring.is_zero(c[k]):
                    vec = [
                        ring.add(v, ring.mul(c[k], basis[k][j]))
                        for j, v in enumerate(vec)
                    ]
            new_basis.append(vec)
        basis = new_basis

    if len(ops) > 1:
        combined = [[ring.zero] * dim for _ in range(dim)]
        w = ring.zero
        for op in ops:
            w = ring.add(w, ring.one)
            for i in range(dim):
                row = op[i]
                crow = combined[i]
                for j in range(dim):
                    if not ring.is_zero(row[j]):
                        crow[j] = ring.add(crow[j], ring.mul(w, row[j]))
        intersect(combined)
    for op in ops:
        intersect(op)
    return basis
