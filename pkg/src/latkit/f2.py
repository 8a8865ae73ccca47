"""Quadratic spaces over the two-element field.

Vectors are bitmasks; a space of dimension n carries q(x) in F2 given by an
upper-triangular coefficient matrix, q(x) = sum of Q[i][j] x_i x_j over
i <= j.  The polarization b(x, y) = q(x+y) + q(x) + q(y) is alternating.
"""

from fractions import Fraction

from .errors import CoparityOne, NotTwoElementary


class F2QuadraticSpace:
    """Quadratic form on F2^dim, with vectors encoded as ints (bit i = coord i)."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim, coeffs):
        coeffs = tuple(tuple(int(x) % 2 for x in row) for row in coeffs)
        if len(coeffs) != dim or any(len(r) != dim for r in coeffs):
            raise ValueError("coefficient matrix must be dim x dim")
        if any(coeffs[i][j] for i in range(dim) for j in range(i)):
            raise ValueError("coefficient matrix must be upper triangular")
        self.dim = dim
        self.coeffs = coeffs

    def q(self, v):
        total = 0
        for i in range(self.dim):
            if v >> i & 1:
                row = self.coeffs[i]
                if row[i]:
                    total ^= 1
                for j in range(i + 1, self.dim):
                    if row[j] and v >> j & 1:
                        total ^= 1
        return total

    def b(self, x, y):
        return self.q(x ^ y) ^ self.q(x) ^ self.q(y)

    def vectors(self):
        return range(1, 1 << self.dim)

    def __repr__(self):
        return f"F2QuadraticSpace(dim={self.dim})"


def from_discriminant(lattice):
    """The discriminant form of a 2-elementary even lattice as an F2 space.

    Requires every quadratic value to be integral (coparity zero), so that
    q mod 2Z lands in {0, 1}.
    """
    form = lattice.discriminant_form()
    if not form.is_two_elementary:
        raise NotTwoElementary(f"discriminant orders {form.orders} are not all 2")
    if form.qvals is None:
        raise CoparityOne("odd lattice: no quadratic part")
    n = form.ngens
    coeffs = [[0] * n for _ in range(n)]
    for i in range(n):
        if Fraction(form.qvals[i]).denominator != 1:
            raise CoparityOne(f"q value {form.qvals[i]} is not integral")
        coeffs[i][i] = int(form.qvals[i]) % 2
        for j in range(i + 1, n):
            two_b = 2 * Fraction(form.bvals[i][j])
            coeffs[i][j] = int(two_b) % 2
    return F2QuadraticSpace(n, coeffs)


def element_counts(space):
    """(number of nonzero vectors with q = 0, number with q = 1)."""
    zeros = ones = 0
    for v in space.vectors():
        if space.q(v):
            ones += 1
        else:
            zeros += 1
    return zeros, ones


def classify_2d_subspaces(space):
    """Counts of 2-dimensional subspaces by the restriction of q.

    A plane {0, x, y, x+y} is classified by how many of its three nonzero
    vectors have q = 0: three -> "isotropic", one -> "rank1_kernel" (like
    q = x^2), none -> "minus_line" (like x^2 + xy + y^2), two -> "split"
    (like xy).  Each plane is counted once via its two smallest nonzero
    members.
    """
    counts = {"isotropic": 0, "rank1_kernel": 0, "minus_line": 0, "split": 0}
    qcache = [0] + [space.q(v) for v in space.vectors()]
    top = 1 << space.dim
    for x in range(1, top):
        for y in range(x + 1, top):
            z = x ^ y
            if z < y:
                continue
            zeros = (qcache[x] == 0) + (qcache[y] == 0) + (qcache[z] == 0)
            if zeros == 3:
                counts["isotropic"] += 1
            elif zeros == 1:
                counts["rank1_kernel"] += 1
            elif zeros == 0:
                counts["minus_line"] += 1
            else:
                counts["split"] += 1
    return counts


def grassmannian_count(k, n, q=2):
    """Gaussian binomial: the number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den
