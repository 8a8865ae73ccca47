"""Binary quadratic forms: Gauss reduction, cycles, equivalence, representation.

A form (a, b, c) means a x^2 + b xy + c y^2 with discriminant D = b^2 - 4ac.
Transforms act on the right: ``f.apply(P)`` is the form with doubled Gram
matrix P^T (2a b; b 2c) P, and all returned transforms have determinant +1
unless improper equivalence was explicitly requested.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import (
    BadParams,
    DegenerateForm,
    DiscriminantMismatch,
    NotDefinite,
    NotIndefinite,
    OutOfMethodRange,
    SquareDiscriminant,
)
from .matrices import Matrix


@dataclass(frozen=True)
class BinaryForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def apply(self, p):
        """Right action of a 2x2 integer matrix."""
        p00, p01 = p[0, 0], p[0, 1]
        p10, p11 = p[1, 0], p[1, 1]
        a = self(p00, p10)
        c = self(p01, p11)
        b = (
            2 * self.a * p00 * p01
            + self.b * (p00 * p11 + p01 * p10)
            + 2 * self.c * p10 * p11
        )
        return BinaryForm(a, b, c)

    def tuple(self):
        return (self.a, self.b, self.c)


def from_gram(g):
    """Classical (a, b, c) form of a symmetric 2x2 Gram matrix."""
    if not isinstance(g, Matrix):
        g = Matrix(g)
    if g.nrows != 2 or g.ncols != 2:
        raise DegenerateForm("expected a 2x2 matrix")
    if g.det() == 0:
        raise DegenerateForm("Gram matrix is degenerate")
    return BinaryForm(g[0, 0], 2 * g[0, 1], g[1, 1])


_SWAP = Matrix([[0, -1], [1, 0]])


def _translate(m):
    return Matrix([[1, m], [0, 1]])


def reduce_definite(form):
    """Gauss-reduce a positive definite form; returns (reduced, transform).

    Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    if form.discriminant >= 0 or form.a <= 0:
        raise NotDefinite("reduction needs D < 0 and a > 0")
    f = form
    p = Matrix.identity(2)
    while not (abs(f.b) <= f.a <= f.c):
        if abs(f.b) > f.a:
            m = (f.a - f.b) // (2 * f.a)  # brings b into (-a, a]
            step = _translate(m)
        else:
            step = _SWAP
        f = f.apply(step)
        p = p * step
    if f.b < 0 and (f.b == -f.a or f.a == f.c):
        step = _translate(1) if f.b == -f.a else _SWAP
        f = f.apply(step)
        p = p * step
    assert form.apply(p) == f
    return f, p


def canonical_class_form(form):
    """Representative of the GL2-class of a definite form: reduced with b >= 0.

    Unlike ``reduce_definite`` this identifies (a, b, c) with (a, -b, c),
    which is the right notion when comparing Gram matrices of rank-2
    lattices up to isometry.
    """
    sign = -1 if form.a < 0 else 1
    f = BinaryForm(sign * form.a, sign * form.b, sign * form.c)
    reduced, _ = reduce_definite(f)
    result = BinaryForm(reduced.a, abs(reduced.b), reduced.c)
    return BinaryForm(sign * result.a, sign * result.b, sign * result.c)


def _sqrt_floor(d):
    return isqrt(d)


def _is_reduced_indefinite(f, sq):
    # |sqrt(D) - 2|a|| < b < sqrt(D), with D a nonsquare
    b = f.b
    if b <= 0 or b > sq:
        return False
    twoa = 2 * abs(f.a)
    d = f.discriminant
    if (b + twoa) ** 2 <= d:
        return False  # need sqrt(D) < b + 2|a|
    if twoa > b and (twoa - b) ** 2 >= d:
        return False  # need 2|a| - b < sqrt(D)
    return True


def _rho(f, sq):
    """One cycle step (a,b,c) -> (c, r, (r^2-D)/4c) with its det-1 transform."""
    d = f.discriminant
    c = f.c
    ac = abs(c)
    if ac > sq:
        # normalization range (-|c|, |c|]
        r = (-f.b) % (2 * ac)
        if r > ac:
            r -= 2 * ac
    else:
        # reduction range (sq - 2|c|, sq]
        r = (-f.b - (sq - 2 * ac + 1)) % (2 * ac) + (sq - 2 * ac + 1)
    nxt = BinaryForm(c, r, (r * r - d) // (4 * c))
    step = Matrix([[0, -1], [1, (f.b + r) // (2 * c)]])
    return nxt, step


def _reduce_indefinite(form):
    d = form.discriminant
    sq = _sqrt_floor(d)
    f = form
    p = Matrix.identity(2)
    while not _is_reduced_indefinite(f, sq):
        f, step = _rho(f, sq)
        p = p * step
    return f, p


def _cycle_with_transforms(reduced):
    """All reduced forms reachable from a reduced start, with cumulative transforms."""
    sq = _sqrt_floor(reduced.discriminant)
    out = [(reduced, Matrix.identity(2))]
    f, p = reduced, Matrix.identity(2)
    while True:
        f, step = _rho(f, sq)
        p = p * step
        if f == reduced:
            return out
        out.append((f, p))


def _check_indefinite_nonsquare(form):
    d = form.discriminant
    if d <= 0:
        raise NotIndefinite("cycle methods need D > 0")
    if isqrt(d) ** 2 == d:
        raise SquareDiscriminant("cycle methods need a nonsquare discriminant")


def gauss_cycle(form):
    """The cycle of reduced forms of an indefinite form, as a rotated list.

    The list starts at its lexicographically least member; any member of
    the cycle reproduces the same list.
    """
    _check_indefinite_nonsquare(form)
    reduced, _ = _reduce_indefinite(form)
    cycle = [f for f, _ in _cycle_with_transforms(reduced)]
    start = min(range(len(cycle)), key=lambda i: cycle[i].tuple())
    return cycle[start:] + cycle[:start]


def _inverse_unimodular(p):
    det = p[0, 0] * p[1, 1] - p[0, 1] * p[1, 0]
    assert det in (1, -1)
    return Matrix(
        [[p[1, 1] * det, -p[0, 1] * det], [-p[1, 0] * det, p[0, 0] * det]]
    )


def equivalent(f1, f2, allow_improper=False):
    """Proper equivalence transform from f1 to f2, or None.

    Definite forms are compared through their Gauss reductions, indefinite
    nonsquare forms through their cycles.  With ``allow_improper`` a
    determinant -1 transform may be returned when no proper one exists.
    """
    if f1.discriminant != f2.discriminant:
        raise DiscriminantMismatch(
            f"discriminants differ: {f1.discriminant} vs {f2.discriminant}"
        )
    d = f1.discriminant
    if d < 0:
        result = _equivalent_definite(f1, f2)
    else:
        _check_indefinite_nonsquare(f1)
        result = _equivalent_indefinite(f1, f2)
    if result is None and allow_improper:
        flip = Matrix([[1, 0], [0, -1]])
        proper = equivalent(f1, f2.apply(flip))
        if proper is not None:
            result = proper * flip  # det -1 overall
    if result is not None:
        assert f1.apply(result) == f2
    return result


def _equivalent_definite(f1, f2):
    neg = f1.a < 0
    if neg != (f2.a < 0):
        return None
    if neg:
        f1 = BinaryForm(-f1.a, -f1.b, -f1.c)
        f2 = BinaryForm(-f2.a, -f2.b, -f2.c)
    r1, p1 = reduce_definite(f1)
    r2, p2 = reduce_definite(f2)
    if r1 != r2:
        return None
    return p1 * _inverse_unimodular(p2)


def _equivalent_indefinite(f1, f2):
    r1, p1 = _reduce_indefinite(f1)
    r2, p2 = _reduce_indefinite(f2)
    for f, q in _cycle_with_transforms(r1):
        if f == r2:
            return p1 * q * _inverse_unimodular(p2)
    return None


def represents(form, value, cross_check_height=50):
    """Whether the form represents ``value`` by a nonzero integer vector.

    Definite forms are decided by exact enumeration of the finite ellipse.
    Indefinite nonsquare forms use the cycle criterion, valid for
    |value| < sqrt(D)/2, and a negative answer is double-checked against a
    brute-force search up to the given coefficient height.
    """
    d = form.discriminant
    if d < 0:
        if form.a < 0:
            return _represents_posdef(
                BinaryForm(-form.a, -form.b, -form.c), -value
            )
        return _represents_posdef(form, value)
    _check_indefinite_nonsquare(form)
    if 4 * value * value >= d:
        raise OutOfMethodRange(
            f"|{value}| is not below sqrt({d})/2; the cycle criterion does not apply"
        )
    found = False
    if value != 0:  # zero is never represented: nonsquare D is anisotropic over Q
        reduced, p0 = _reduce_indefinite(form)
        cycle = _cycle_with_transforms(reduced)
        t = 1
        while t * t <= abs(value) and not found:
            if value % (t * t) == 0:
                target = value // (t * t)
                for member, q in cycle:
                    if member.a == target:
                        # explicit witness: scaled first column of the transform
                        p = p0 * q
                        x, y = t * p[0, 0], t * p[1, 0]
                        assert form(x, y) == value
                        found = True
                        break
            t += 1
    if not found:
        h = cross_check_height
        brute = any(
            form(x, y) == value
            for x in range(-h, h + 1)
            for y in range(-h, h + 1)
            if x or y
        )
        assert not brute, "cycle criterion disagrees with brute force"
    return found


def _represents_posdef(form, value):
    if value <= 0:
        return False
    f, _ = reduce_definite(form)
    dabs = -f.discriminant
    bx = isqrt(4 * f.c * value // dabs)
    by = isqrt(4 * f.a * value // dabs)
    for x in range(-bx, bx + 1):
        for y in range(-by, by + 1):
            if (x or y) and f(x, y) == value:
                return True
    return False


def fm_partner_count(d):
    """Number of distinct partner classes for polarization parameter d."""
    if d < 1:
        raise BadParams("d must be positive")
    if d == 1:
        return 1
    tau = 0
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            tau += 1
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        tau += 1
    return 2 ** (tau - 1)


def square_roots_of_unity(modulus):
    """Solutions of x^2 = 1 mod ``modulus``, one per pair {x, modulus - x}."""
    if modulus < 1:
        raise BadParams("modulus must be positive")
    if modulus == 1:
        return [0]
    out = [
        x for x in range(1, modulus) if (x * x) % modulus == 1 and x <= modulus - x
    ]
    return sorted(out)
