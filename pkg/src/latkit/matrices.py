"""Exact integer and rational matrices: normal forms, determinants, signatures.

Entries are Python ints or ``fractions.Fraction``; arithmetic never rounds
and never overflows.  All matrices are immutable after construction.
"""

from fractions import Fraction

from .errors import DegenerateForm, ShapeMismatch


def _canon(x):
    """Collapse integral Fractions to int; reject everything non-exact."""
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable exact matrix over Z or Q.

    Integral matrices keep int entries; rational entries are Fractions in
    lowest terms with positive denominator (guaranteed by Fraction itself).
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        data = tuple(tuple(_canon(x) for x in row) for row in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise ShapeMismatch("ragged rows")
        self.rows = data
        self.nrows = len(data)
        self.ncols = len(data[0]) if data else 0

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diagonal(cls, *blocks):
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        rows = [[0] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.nrows):
                rows[i0 + i][j0 : j0 + b.ncols] = list(b.rows[i])
            i0 += b.nrows
            j0 += b.ncols
        return cls(rows)

    @classmethod
    def stack_rows(cls, *mats):
        if len({m.ncols for m in mats}) > 1:
            raise ShapeMismatch("column counts differ")
        rows = []
        for m in mats:
            rows.extend(m.rows)
        return cls(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[list(r) for r in self.rows]})"

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def __add__(self, other):
        self._require_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._require_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(
            [[_dot(r, c) for c in cols] for r in self.rows]
        )

    def scale(self, factor):
        return Matrix([[factor * x for x in r] for r in self.rows])

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.ncols)])

    @property
    def is_square(self):
        return self.nrows == self.ncols

    @property
    def is_symmetric(self):
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    @property
    def is_integral(self):
        return all(isinstance(x, int) for r in self.rows for x in r)

    def apply(self, vec):
        """Matrix times column vector, returned as a tuple."""
        if len(vec) != self.ncols:
            raise ShapeMismatch("vector length")
        return tuple(_dot(r, vec) for r in self.rows)

    def det(self):
        if not self.is_square:
            raise ShapeMismatch("determinant of a non-square matrix")
        if self.is_integral:
            return _det_bareiss([list(r) for r in self.rows])
        return _det_fraction([[Fraction(x) for x in r] for r in self.rows])

    def inverse(self):
        """Exact inverse over Q; raises DegenerateForm when singular."""
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise DegenerateForm("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [x / p for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def _require_same_shape(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ShapeMismatch("shapes differ")


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _det_bareiss(a):
    """Fraction-free determinant of an integer matrix (Bareiss)."""
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_fraction(a):
    n = len(a)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return _canon(sign * det)


def smith_normal_form(m):
    """Smith normal form with transforms: U * m * V = D.

    U and V are unimodular; D is diagonal with d1 | d2 | ... | dr, all
    di >= 0, nonzero entries first.  Pivoting always selects the entry of
    minimal absolute value, so the reduction is deterministic.
    """
    nr, nc = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def add_col(i, j, q):
        # col_i += q * col_j
        for row in a:
            row[i] += q * row[j]
        for row in v:
            row[i] += q * row[j]

    def min_abs_position(t):
        best = None
        pos = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pos = (i, j)
        return pos

    t = 0
    while t < min(nr, nc):
        pos = min_abs_position(t)
        if pos is None:
            break
        while True:
            pi, pj = min_abs_position(t)
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            # pivot must divide the whole remaining block
            offender = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if offender is not None:
                add_row(t, offender, 1)
                continue
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return Matrix(u), Matrix(a), Matrix(v)


def invariant_factors(m):
    """Nonzero diagonal of the Smith normal form."""
    _, d, _ = smith_normal_form(m)
    return tuple(d[i, i] for i in range(min(d.nrows, d.ncols)) if d[i, i] != 0)


def rank(m):
    return len(invariant_factors(m))


def kernel_basis(m):
    """Rows spanning the right kernel {v : m v = 0} over Z; always saturated."""
    _, d, v = smith_normal_form(m)
    r = len([i for i in range(min(d.nrows, d.ncols)) if d[i, i] != 0])
    return Matrix([v.column(j) for j in range(r, m.ncols)])


def saturate_rows(b):
    """Smallest saturated sublattice of Z^n containing the row span of b."""
    _, d, v = smith_normal_form(b)
    r = len([i for i in range(min(d.nrows, d.ncols)) if d[i, i] != 0])
    vinv = v.inverse()
    return Matrix([vinv.row(i) for i in range(r)])


def is_unimodular(m):
    return m.is_square and m.is_integral and m.det() in (1, -1)


def signature(g):
    """Inertia (t_plus, t_minus, t_zero) of a symmetric matrix, exactly.

    Rational symmetric elimination; whenever every remaining diagonal entry
    vanishes, a 2x2 block pivot [[0,b],[b,c]] with b != 0 is eliminated and
    contributes (1, 1).
    """
    if not g.is_symmetric:
        raise ShapeMismatch("signature of a non-symmetric matrix")
    n = g.nrows
    a = [[Fraction(x) for x in r] for r in g.rows]
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is not None:
            p = a[k][k]
            if p > 0:
                pos += 1
            else:
                neg += 1
            active.remove(k)
            for i in active:
                if a[i][k] != 0:
                    f = a[i][k] / p
                    for j in active:
                        a[i][j] -= f * a[k][j]
                    a[i][k] = Fraction(0)
            for j in active:
                a[k][j] = Fraction(0)
            continue
        pair = next(
            ((i, j) for x, i in enumerate(active) for j in active[x + 1 :] if a[i][j] != 0),
            None,
        )
        if pair is None:
            zero += len(active)
            break
        i, j = pair
        b = a[i][j]
        c = a[j][j]
        pos += 1
        neg += 1
        active.remove(i)
        active.remove(j)
        # Schur complement of the block [[0, b], [b, c]]
        det = -b * b
        binv = ((c / det, -b / det), (-b / det, Fraction(0)))
        for k1 in active:
            ui = (a[k1][i], a[k1][j])
            for k2 in active:
                wj = (a[i][k2], a[j][k2])
                corr = sum(ui[s] * binv[s][t] * wj[t] for s in range(2) for t in range(2))
                a[k1][k2] -= corr
    return (pos, neg, zero)


def det_and_inverse(g):
    """Exact determinant and inverse of a nondegenerate symmetric matrix."""
    if not g.is_symmetric:
        raise ShapeMismatch("expected a symmetric matrix")
    d = g.det()
    if d == 0:
        raise DegenerateForm("determinant is zero")
    return d, g.inverse()
