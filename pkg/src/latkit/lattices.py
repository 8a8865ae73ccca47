"""Integral lattices presented by Gram matrices.

Provides the named lattices used throughout the workbench, rescaling and
direct sums, discriminant groups with their quadratic forms, and the
sublattice machinery (complements, saturation, overlattices).
"""

import re
from fractions import Fraction
from math import lcm

from .errors import (
    BadParams,
    DegenerateForm,
    NotIsotropic,
    OddLattice,
    ShapeMismatch,
    UnknownName,
    ZeroScale,
)
from .finite_forms import FiniteQuadraticForm, _mod1, _mod2
from .matrices import (
    Matrix,
    invariant_factors,
    kernel_basis,
    saturate_rows,
    signature as matrix_signature,
    smith_normal_form,
)


class Lattice:
    """Free Z-module of finite rank with a nondegenerate symmetric pairing.

    Odd lattices are allowed; operations that need evenness check
    ``is_even`` and raise.
    """

    __slots__ = ("gram", "label", "_det", "_sig", "_snf", "_disc")

    def __init__(self, gram, label=None):
        if not isinstance(gram, Matrix):
            gram = Matrix(gram)
        if not gram.is_square:
            raise ShapeMismatch("Gram matrix must be square")
        if not gram.is_integral:
            raise ShapeMismatch("Gram matrix must be integral")
        if not gram.is_symmetric:
            raise ShapeMismatch("Gram matrix must be symmetric")
        self.gram = gram
        self.label = label
        self._det = None
        self._sig = None
        self._snf = None
        self._disc = None
        if self.det == 0:
            raise DegenerateForm("Gram matrix is degenerate")

    @property
    def rank(self):
        return self.gram.nrows

    @property
    def det(self):
        if self._det is None:
            self._det = self.gram.det()
        return self._det

    @property
    def signature(self):
        """(t_plus, t_minus); the degenerate count is always zero."""
        if self._sig is None:
            pos, neg, _ = matrix_signature(self.gram)
            self._sig = (pos, neg)
        return self._sig

    @property
    def is_even(self):
        return all(self.gram[i, i] % 2 == 0 for i in range(self.rank))

    @property
    def is_positive_definite(self):
        return self.signature == (self.rank, 0)

    @property
    def is_negative_definite(self):
        return self.signature == (0, self.rank)

    @property
    def is_definite(self):
        return self.is_positive_definite or self.is_negative_definite

    @property
    def is_hyperbolic(self):
        return self.signature == (1, self.rank - 1)

    def bilinear(self, v, w):
        return sum(
            vi * self.gram[i, j] * wj
            for i, vi in enumerate(v)
            if vi
            for j, wj in enumerate(w)
            if wj
        )

    def norm(self, v):
        return self.bilinear(v, v)

    def rescale(self, factor):
        if factor == 0:
            raise ZeroScale("cannot rescale by zero")
        label = f"{self.label}({factor})" if self.label else None
        return Lattice(self.gram.scale(factor), label)

    def direct_sum(self, other):
        return Lattice(Matrix.block_diagonal(self.gram, other.gram))

    def sublattice(self, basis_rows):
        return Sublattice(self, basis_rows)

    def _smith(self):
        if self._snf is None:
            self._snf = smith_normal_form(self.gram)
        return self._snf

    def discriminant_form(self):
        """The finite form on L*/L, with generator lifts in L-coordinates.

        Generators come from the Smith normal form of the Gram matrix
        (columns of V divided by the invariant factors), so the cyclic
        orders follow the divisibility chain.  For odd lattices only the
        bilinear part is produced.
        """
        if self._disc is not None:
            return self._disc
        u, d, v = self._smith()
        n = self.rank
        factors = [d[i, i] for i in range(n)]
        kept = [i for i in range(n) if factors[i] > 1]
        lifts = []
        for i in kept:
            col = v.column(i)
            lifts.append(tuple(Fraction(x, factors[i]) for x in col))
        bvals = [
            [_mod1(self._pair(lifts[a], lifts[b])) for b in range(len(kept))]
            for a in range(len(kept))
        ]
        qvals = None
        if self.is_even:
            qvals = [_mod2(self._pair(lifts[a], lifts[a])) for a in range(len(kept))]
        self._disc = FiniteQuadraticForm(
            [factors[i] for i in kept], qvals, bvals, lifts=lifts
        )
        return self._disc

    def discriminant_class(self, vec):
        """Class of a dual vector (rational, L-coordinates) in d(L)."""
        gv = [self.bilinear_rational(vec, j) for j in range(self.rank)]
        if any(Fraction(x).denominator != 1 for x in gv):
            raise ValueError("vector is not in the dual lattice")
        u, d, _ = self._smith()
        w = u.apply([int(x) for x in gv])
        factors = [d[i, i] for i in range(self.rank)]
        return tuple(w[i] % factors[i] for i in range(self.rank) if factors[i] > 1)

    def bilinear_rational(self, v, j):
        return sum(Fraction(v[i]) * self.gram[i, j] for i in range(self.rank))

    def _pair(self, v, w):
        return sum(
            Fraction(v[i]) * self.gram[i, j] * Fraction(w[j])
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        name = self.label or f"rank {self.rank}"
        return f"Lattice({name}, det={self.det})"


class Sublattice:
    """Sublattice given by generator rows in the coordinates of an ambient lattice."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis):
        if not isinstance(basis, Matrix):
            basis = Matrix(basis)
        if not basis.is_integral:
            raise ShapeMismatch("sublattice basis must be integral")
        if basis.nrows and basis.ncols != ambient.rank:
            raise ShapeMismatch("basis width must match ambient rank")
        if basis.nrows and len(invariant_factors(basis)) != basis.nrows:
            raise ShapeMismatch("basis rows must be independent")
        self.ambient = ambient
        self.basis = basis

    @property
    def rank(self):
        return self.basis.nrows

    @property
    def gram(self):
        if self.rank == 0:
            return Matrix([])
        return self.basis * self.ambient.gram * self.basis.transpose()

    def lattice(self, label=None):
        return Lattice(self.gram, label)

    def __repr__(self):
        return f"Sublattice(rank {self.rank} in rank {self.ambient.rank})"


# -- named lattices ------------------------------------------------------

_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


def _cartan_a(n):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return g


def _cartan_d(n):
    # chain 1-2-...-(n-1) with node n attached to node n-2
    g = _cartan_a(n)
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][n - 3] = g[n - 3][n - 1] = -1
    return g


def _cartan_e8():
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    for i, j in _E8_EDGES:
        g[i - 1][j - 1] = g[j - 1][i - 1] = -1
    return g


def _nikulin_gram():
    # basis N1..N7, Nhat with Nhat = (N1 + ... + N8) / 2
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i in range(7):
        g[i][7] = g[7][i] = -1
    g[7][7] = -4
    return g


_NAME_RE = re.compile(r"^(?P<base>.*?)\s*(?:\(\s*(?P<scale>-?\d+)\s*\))?$")


def standard_lattice(name, *, n=None, d=None, k=None, scale=None):
    """Construct a named lattice.

    Recognized names (case-insensitive): U, V2, A (n), D (n), E8,
    2d (d), minus1 (k), Nikulin, M, N, K3, Mukai.  A parenthesized integer
    in the name and/or the ``scale`` keyword rescales the form, e.g.
    ``standard_lattice("E8(-2)")``.
    """
    match = _NAME_RE.match(name.strip())
    base = match.group("base").strip().lower()
    total_scale = 1 if scale is None else scale
    if match.group("scale") is not None:
        total_scale *= int(match.group("scale"))
    if total_scale == 0:
        raise BadParams("scale must be nonzero")

    if base == "u":
        gram = [[0, 1], [1, 0]]
    elif base == "v2":
        gram = [[4, 2], [2, 4]]
    elif base == "a":
        if n is None or n < 1:
            raise BadParams("A_n needs n >= 1")
        gram = _cartan_a(n)
    elif base == "d":
        if n is None or n < 2:
            raise BadParams("D_n needs n >= 2")
        gram = _cartan_d(n)
    elif base == "e8":
        gram = _cartan_e8()
    elif base == "2d":
        if d is None or d < 1:
            raise BadParams("<2d> needs d >= 1")
        gram = [[2 * d]]
    elif base == "minus1":
        if k is None or k < 1:
            raise BadParams("<-1>^k needs k >= 1")
        gram = [[-1 if i == j else 0 for j in range(k)] for i in range(k)]
    elif base == "nikulin":
        gram = _nikulin_gram()
    elif base == "m":
        gram = Matrix.block_diagonal(
            Matrix([[0, 1], [1, 0]]), Matrix(_cartan_e8()).scale(-1)
        ).rows
    elif base == "n":
        gram = Matrix.block_diagonal(
            Matrix([[0, 1], [1, 0]]),
            Matrix([[0, 2], [2, 0]]),
            Matrix(_cartan_e8()).scale(-2),
        ).rows
    elif base == "k3":
        u = Matrix([[0, 1], [1, 0]])
        e8m = Matrix(_cartan_e8()).scale(-1)
        gram = Matrix.block_diagonal(u, u, u, e8m, e8m).rows
    elif base == "mukai":
        u = Matrix([[0, 1], [1, 0]])
        e8m = Matrix(_cartan_e8()).scale(-1)
        gram = Matrix.block_diagonal(u, u, u, u, e8m, e8m).rows
    else:
        raise UnknownName(f"unknown lattice name {name!r}")

    lat = Lattice(gram, label=name.strip())
    if total_scale != 1:
        lat = Lattice(lat.gram.scale(total_scale), label=name.strip())
    return lat


def rescale(lattice, factor):
    return lattice.rescale(factor)


def direct_sum(*lattices):
    if not lattices:
        raise BadParams("direct sum needs at least one summand")
    return Lattice(Matrix.block_diagonal(*(l.gram for l in lattices)))


def discriminant_form(lattice):
    return lattice.discriminant_form()


# -- sublattice machinery ------------------------------------------------


def orthogonal_complement(sub):
    """Everything in the ambient lattice orthogonal to the given rows; saturated."""
    ambient = sub.ambient
    if sub.rank == 0:
        return Sublattice(ambient, Matrix.identity(ambient.rank))
    pairing = sub.basis * ambient.gram
    return Sublattice(ambient, kernel_basis(pairing))


def is_saturated(sub):
    """True when ambient / (row span) is torsion free."""
    if sub.rank == 0:
        return True
    return all(f == 1 for f in invariant_factors(sub.basis))


def saturation(sub):
    """The smallest saturated sublattice containing the given one."""
    if sub.rank == 0 or is_saturated(sub):
        return sub
    return Sublattice(sub.ambient, saturate_rows(sub.basis))


def overlattice_from_isotropic(lattice, classes):
    """Adjoin rational lifts of isotropic discriminant classes to an even lattice.

    ``classes`` lists elements of d(L) as coefficient tuples on the
    discriminant generators.  The subgroup they span must be isotropic for
    both b (mod Z) and q (mod 2Z).
    """
    if not lattice.is_even:
        raise OddLattice("overlattice construction needs an even lattice")
    form = lattice.discriminant_form()
    classes = [form.reduce(c) for c in classes]
    subgroup = {(0,) * form.ngens}
    frontier = [(0,) * form.ngens]
    while frontier:
        cur = frontier.pop()
        for g in classes:
            nxt = form.reduce(tuple(a + b for a, b in zip(cur, g)))
            if nxt not in subgroup:
                subgroup.add(nxt)
                frontier.append(nxt)
    for x in subgroup:
        if form.q(x) != 0:
            raise NotIsotropic(f"q does not vanish on class {x}")
        for y in subgroup:
            if form.b(x, y) != 0:
                raise NotIsotropic(f"b does not vanish on pair {x}, {y}")

    n = lattice.rank
    if len(subgroup) == 1:
        return Lattice(lattice.gram, lattice.label)
    lifts = []
    for c in classes:
        vec = [Fraction(0)] * n
        for i, ci in enumerate(c):
            if ci:
                for j in range(n):
                    vec[j] += ci * Fraction(form.lifts[i][j])
        lifts.append(vec)
    denom = lcm(*(Fraction(x).denominator for v in lifts for x in v), 1)
    rows = [[denom if i == j else 0 for j in range(n)] for i in range(n)]
    rows.extend([[int(x * denom) for x in v] for v in lifts])
    _, dmat, vmat = smith_normal_form(Matrix(rows))
    vinv = vmat.inverse()
    basis = Matrix(
        [[Fraction(dmat[i, i], denom) * x for x in vinv.row(i)] for i in range(n)]
    )
    new_gram = basis * lattice.gram * basis.transpose()
    if not new_gram.is_integral:
        raise NotIsotropic("lifted subgroup does not yield an integral lattice")
    result = Lattice(new_gram)
    assert abs(result.det) * len(subgroup) ** 2 == abs(lattice.det)
    assert result.is_even
    return result


# -- JSON interchange ----------------------------------------------------

_JSON_INT_LIMIT = 1 << 53


def _encode_entry(x):
    return x if abs(x) < _JSON_INT_LIMIT else str(x)


def _decode_entry(x):
    if isinstance(x, str):
        return int(x)
    if isinstance(x, int):
        return x
    raise ValueError(f"matrix entries must be integers or decimal strings, got {x!r}")


def lattice_to_json(lattice):
    return {
        "label": lattice.label,
        "gram": [[_encode_entry(x) for x in row] for row in lattice.gram.rows],
    }


def lattice_from_json(obj):
    if not isinstance(obj, dict) or "gram" not in obj:
        raise ValueError("expected an object with a 'gram' field")
    gram = [[_decode_entry(x) for x in row] for row in obj["gram"]]
    return Lattice(gram, label=obj.get("label"))
