"""Cohomological transform matrices on the rank-3 slice (1,0,0), (0,f,0), (0,0,1).

The slice pairing is <(r, D, s), (r', D', s')> = 2d D D' - r s' - r' s with
f^2 = 2d = 2 r0 s, i.e. Gram matrix [[0,0,-1],[0,2d,0],[-1,0,0]].  All
matrices act on column vectors; columns are images of the basis vectors.
"""

from dataclasses import dataclass
from math import gcd

from .errors import BadParameters, ShapeMismatch
from .matrices import Matrix, kernel_basis


@dataclass(frozen=True)
class FMParameters:
    """Moduli-kernel parameters: coprime positive r0, s and a Bezout pair
    (d1, ell) for s*d0*d1 - r0*ell = 1."""

    r0: int
    s: int
    d0: int
    d1: int
    ell: int

    def __post_init__(self):
        if self.r0 < 1 or self.s < 1:
            raise BadParameters("r0 and s must be positive")
        if gcd(self.r0, self.s) != 1:
            raise BadParameters("r0 and s must be coprime")
        if self.s * self.d0 * self.d1 - self.r0 * self.ell != 1:
            raise BadParameters("need s*d0*d1 - r0*ell = 1")

    @property
    def degree(self):
        return 2 * self.r0 * self.s


def slice_gram(r0, s):
    """Pairing matrix of the rank-3 slice for polarization degree 2*r0*s."""
    return Matrix([[0, 0, -1], [0, 2 * r0 * s, 0], [-1, 0, 0]])


def fm_matrix(params):
    """Transform matrix induced by a universal sheaf with the given parameters."""
    r0, s, d0, d1, ell = params.r0, params.s, params.d0, params.d1, params.ell
    return Matrix(
        [
            [d0 * d0 * s, 2 * d0 * s * r0, r0],
            [d0 * ell, 2 * d0 * d1 * s - 1, d1],
            [ell * ell * r0, 2 * d1 * s * ell * r0, d1 * d1 * s],
        ]
    )


def fm_matrix_inverse(params):
    """Inverse transform: middle basis vector negated, d0 and d1 interchanged."""
    r0, s, d0, d1, ell = params.r0, params.s, params.d0, params.d1, params.ell
    return Matrix(
        [
            [d1 * d1 * s, -2 * d1 * s * r0, r0],
            [-d1 * ell, 2 * d0 * d1 * s - 1, -d0],
            [ell * ell * r0, -2 * d0 * s * ell * r0, d0 * d0 * s],
        ]
    )


def twist_matrix(n, r0, s):
    """Tensoring by the n-th power of the polarization, on the slice."""
    return Matrix([[1, 0, 0], [n, 1, 0], [n * n * r0 * s, 2 * n * r0 * s, 1]])


def orientation_slice_report(m):
    """(determinant, basis of the integral fixed space ker(m - 1))."""
    if not m.is_square:
        raise ShapeMismatch("expected a square matrix")
    fixed = kernel_basis(m - Matrix.identity(m.nrows))
    return m.det(), fixed


def verify_skew_functional(phi, iota1, iota2, degree2_block):
    """Check the duality functional equation phi io1 D1 = D2 io2 phi.

    ``degree2_block`` is a (start, stop) index range; the duality operator
    D is -1 there and +1 elsewhere, on both sides.  The equation holds for
    phi exactly when it holds for -phi.
    """
    if not (phi.is_square and iota1.is_square and iota2.is_square):
        raise ShapeMismatch("all matrices must be square")
    n = phi.nrows
    if iota1.nrows != n or iota2.nrows != n:
        raise ShapeMismatch("sizes must agree")
    start, stop = degree2_block
    if not 0 <= start <= stop <= n:
        raise ShapeMismatch("block range out of bounds")
    for iota in (iota1, iota2):
        if iota * iota != Matrix.identity(n):
            raise ShapeMismatch("iota must be an involution")
    duality = Matrix.diagonal(
        [-1 if start <= i < stop else 1 for i in range(n)]
    )
    return phi * iota1 * duality == duality * iota2 * phi
