"""Lattices with involution: eigenlattices, fixed-locus invariants, and the
standard constructions around symplectic and fixed-point-free involutions.

Coordinate conventions for the fixed quotient lattices are frozen here:

* ``quotient_maps`` uses the rank-30 source U^3 + E8(-1) + E8(-1) + <-1>^8
  (blocks in that order) and the rank-22 target U(2)^3 + Nikulin + E8(-1),
  the Nikulin lattice in its basis N1..N7, Nhat.
* ``nikulin_invariant_overlattice`` returns rank-9 lattices in the basis
  (f, e1..e8) for odd polarization half-degree d, and ((f+e)/2, e1..e8)
  for even d, so the E8(-2) summand always sits in rows 1..8.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .binary_forms import BinaryForm, canonical_class_form, from_gram
from .definite import definite_isomorphic, has_minus_two_class, short_vectors
from .errors import (
    ComplementNotDefinite,
    DiscriminantMismatch,
    NonIntegralGK,
    NoSuitableVector,
    NotEvenDefinite,
    NotHyperbolic,
    NotPositiveDefinite,
    NotPrimitive,
    NotTwoElementary,
    OddLattice,
    RankMismatch,
    SearchExhausted,
    ShapeMismatch,
)
from .finite_forms import two_elementary_invariants
from .lattices import (
    Lattice,
    Sublattice,
    is_saturated,
    orthogonal_complement,
    standard_lattice,
)
from .matrices import Matrix, kernel_basis


class InvolutiveLattice:
    """A lattice together with an isometric involution matrix."""

    __slots__ = ("lattice", "action")

    def __init__(self, lattice, action):
        if not isinstance(action, Matrix):
            action = Matrix(action)
        n = lattice.rank
        if action.nrows != n or action.ncols != n or not action.is_integral:
            raise ShapeMismatch("action must be an integral rank x rank matrix")
        if action * action != Matrix.identity(n):
            raise ShapeMismatch("action must square to the identity")
        if action.transpose() * lattice.gram * action != lattice.gram:
            raise ShapeMismatch("action must preserve the pairing")
        self.lattice = lattice
        self.action = action

    def __repr__(self):
        return f"InvolutiveLattice(rank {self.lattice.rank})"


def eigenlattices(il):
    """Saturated (+1)- and (-1)-eigenlattices of an involutive lattice."""
    n = il.lattice.rank
    ident = Matrix.identity(n)
    plus = kernel_basis(il.action - ident)
    minus = kernel_basis(il.action + ident)
    return Sublattice(il.lattice, plus), Sublattice(il.lattice, minus)


@dataclass(frozen=True)
class InvolutionInvariants:
    """(r, a, delta) of the invariant lattice plus the fixed-locus data (g, k)."""

    r: int
    a: int
    delta: int
    g: int
    k: int
    is_enriques: bool


def nikulin_triple(invariant_lattice, ambient_rank=22):
    """Invariants of the invariant lattice of an anti-symplectic involution.

    r is the rank, (a, delta) come from the 2-elementary discriminant form,
    and the fixed curve has k+1 components of total genus g, where
    g = ambient_rank/2 - (r+a)/2 and k = (r-a)/2.  The flag marks the
    fixed-point-free case (r, a, delta) = (10, 10, 0).
    """
    s = invariant_lattice
    if not s.is_even:
        raise OddLattice("invariant lattice must be even")
    r = s.rank
    if r > 1 and s.signature != (1, r - 1):
        raise NotHyperbolic(f"signature {s.signature} is not hyperbolic")
    if ambient_rank % 2:
        raise ShapeMismatch("ambient rank must be even")
    a, delta = two_elementary_invariants(s.discriminant_form())
    if (r + a) % 2:
        raise NonIntegralGK(f"r + a = {r + a} is odd")
    g = ambient_rank // 2 - (r + a) // 2
    k = (r - a) // 2
    return InvolutionInvariants(r, a, delta, g, k, (r, a, delta) == (10, 10, 0))


_E8 = standard_lattice("E8")


def nikulin_invariant_overlattice(d):
    """Rank-9 Picard lattice of a symplectic involution with polarization f^2 = 2d.

    Odd d gives <2d> + E8(-2) in the basis (f, e1..e8).  Even d gives the
    index-two overlattice adjoined by (f + e)/2, in the basis
    ((f+e)/2, e1..e8), where e is the first E8 vector of norm 2 (d = 2 mod 4)
    or norm 4 (d = 0 mod 4) in the short-vector ordering.
    """
    if d < 1:
        raise NoSuitableVector("d must be a positive integer")
    e8m2 = _E8.gram.scale(-2)
    if d % 2 == 1:
        gram = Matrix.block_diagonal(Matrix([[2 * d]]), e8m2)
        return Lattice(gram, label=f"<{2 * d}> + E8(-2)")
    target = 2 if d % 4 == 2 else 4
    vectors = short_vectors(_E8, target).get(target)
    if not vectors:
        raise NoSuitableVector(f"E8 has no vector of norm {target}")
    e = vectors[0]
    e8_e = _E8.gram.apply(e)
    half_norm = (d - target) // 2
    rows = [[half_norm] + [-x for x in e8_e]]
    for i in range(8):
        rows.append([-e8_e[i]] + list(e8m2.row(i)))
    lat = Lattice(rows, label=f"overlattice of <{2 * d}> + E8(-2)")
    assert lat.is_even
    assert abs(lat.det) == 2 * d * 256 // 4
    return lat


def e8_rows_in_overlattice():
    """Rows picking out the E8(-2) summand in ``nikulin_invariant_overlattice`` bases."""
    ident = Matrix.identity(9)
    return Matrix([ident.row(i) for i in range(1, 9)])


def quotient_maps():
    """Push-forward and pull-back matrices of the degree-two quotient by a
    symplectic involution, on the fixed bases described in the module docstring.

    Returns (push, pull) with push 22x30 and pull 30x22, acting on column
    vectors.  They satisfy push * pull = 2 * identity, pull^T G_src pull =
    2 * G_dst, and the adjunction pull^T G_src = G_dst push.
    """
    push = [[0] * 30 for _ in range(22)]
    pull = [[0] * 22 for _ in range(30)]
    # source blocks: u 0..5, first E8(-1) 6..13, second E8(-1) 14..21, <-1>^8 22..29
    # target blocks: u 0..5 (now U(2)^3), Nikulin 6..13 (N1..N7, Nhat), E8(-1) 14..21
    for i in range(6):
        push[i][i] = 1
        pull[i][i] = 2
    for i in range(8):
        push[14 + i][6 + i] = 1
        push[14 + i][14 + i] = 1
        pull[6 + i][14 + i] = 1
        pull[14 + i][14 + i] = 1
    # exceptional classes E1..E7 map to N1..N7; E8 = 2*Nhat - (N1 + ... + N7)
    for i in range(7):
        push[6 + i][22 + i] = 1
        push[6 + i][29] = -1
    push[13][29] = 2
    # N1..N7 pull back to 2*E1..2*E7; Nhat pulls back to E1 + ... + E8
    for i in range(7):
        pull[22 + i][6 + i] = 2
    for i in range(8):
        pull[22 + i][13] = 1
    return Matrix(push), Matrix(pull)


def quotient_source_lattice():
    u = standard_lattice("U")
    e8m1 = standard_lattice("E8(-1)")
    mones = standard_lattice("minus1", k=8)
    gram = Matrix.block_diagonal(u.gram, u.gram, u.gram, e8m1.gram, e8m1.gram, mones.gram)
    return Lattice(gram, label="U^3 + E8(-1)^2 + <-1>^8")


def quotient_target_lattice():
    u2 = standard_lattice("U(2)")
    nik = standard_lattice("Nikulin")
    e8m1 = standard_lattice("E8(-1)")
    gram = Matrix.block_diagonal(u2.gram, u2.gram, u2.gram, nik.gram, e8m1.gram)
    return Lattice(gram, label="U(2)^3 + Nikulin + E8(-1)")


_N_GRAM = standard_lattice("N").gram


def enriques_exists_embedding(transcendental):
    """Existence test for a fixed-point-free involution with the given
    transcendental sublattice of the rank-12 lattice U + U(2) + E8(-2).

    True when the orthogonal complement contains no vector of norm -2.
    The complement must be negative definite (or trivial); indefinite
    complements are out of scope for the root search and raise.
    """
    if transcendental.ambient.gram != _N_GRAM:
        raise ShapeMismatch("ambient must be U + U(2) + E8(-2) in the standard basis")
    if not is_saturated(transcendental):
        raise NotPrimitive("transcendental sublattice must be primitive")
    comp = orthogonal_complement(transcendental)
    if comp.rank == 0:
        return True
    comp_lat = comp.lattice()
    if not comp_lat.is_negative_definite:
        raise ComplementNotDefinite(
            f"complement signature {comp_lat.signature} is not negative definite"
        )
    return not has_minus_two_class(comp_lat)


_SINGULAR_EXCEPTIONS = (
    BinaryForm(2, 0, 2),
    BinaryForm(2, 0, 4),
    BinaryForm(2, 0, 8),
)


def enriques_exists_singular(t_gram):
    """Existence of a fixed-point-free involution on a singular surface with
    the given rank-2 transcendental Gram matrix.

    False exactly when det = 3 mod 8 or the form is equivalent to one of
    diag(2,2), diag(2,4), diag(2,8).
    """
    if not isinstance(t_gram, Matrix):
        t_gram = Matrix(t_gram)
    form = from_gram(t_gram)
    if form.discriminant >= 0 or form.a <= 0 or form.a % 2 or form.c % 2:
        raise NotEvenDefinite("expected an even positive definite binary form")
    det = t_gram.det()
    if det % 8 == 3:
        return False
    if canonical_class_form(form) in _SINGULAR_EXCEPTIONS:
        return False
    return True


# -- stable isometry certificates -----------------------------------------


def _hyperbolic_extension(lattice):
    u = Matrix([[0, 1], [1, 0]])
    return Matrix.block_diagonal(lattice.gram, u)


def _bounded_vectors_of_norm(gram, norm, bound):
    """All integer vectors with coefficients in [-bound, bound] of given norm.

    Exhaustive over the box; the last coordinate is solved exactly from the
    quadratic it satisfies.  Results are sorted by (max abs entry, tuple).
    """
    n = gram.nrows
    out = []

    def q(prefix):
        return sum(
            prefix[i] * gram[i, j] * prefix[j]
            for i in range(len(prefix))
            for j in range(len(prefix))
        )

    def rec(prefix):
        k = len(prefix)
        if k == n - 1:
            a = gram[n - 1, n - 1]
            b = 2 * sum(gram[n - 1, j] * prefix[j] for j in range(k))
            c = q(prefix) - norm
            for x in _solve_quadratic(a, b, c, bound):
                out.append(tuple(prefix) + (x,))
            return
        for v in range(-bound, bound + 1):
            rec(prefix + [v])

    if n == 0:
        return []
    rec([])
    return sorted(set(out), key=lambda v: (max(abs(x) for x in v), v))


def _solve_quadratic(a, b, c, bound):
    """Integer roots of a x^2 + b x + c = 0 within [-bound, bound]."""
    if a == 0:
        if b == 0:
            return range(-bound, bound + 1) if c == 0 else ()
        if c % b:
            return ()
        x = -c // b
        return (x,) if abs(x) <= bound else ()
    disc = b * b - 4 * a * c
    if disc < 0:
        return ()
    from math import isqrt

    root = isqrt(disc)
    if root * root != disc:
        return ()
    xs = []
    for numer in (-b + root, -b - root):
        if numer % (2 * a) == 0:
            x = numer // (2 * a)
            if abs(x) <= bound and x not in xs:
                xs.append(x)
    return xs


def skew_pair_certificate(a1, a2, bound=20, node_cap=None):
    """Explicit isometry between a1 + U and a2 + U found by bounded search.

    a1 and a2 must be even positive definite lattices of equal determinant.
    Returns P with P^T G2 P = G1 (columns are images of the basis of
    a1 + U), or None when no isometry with coefficients up to ``bound``
    exists.  A ``node_cap`` (candidate trials) aborts long searches with
    SearchExhausted instead of answering.
    """
    if not (a1.is_even and a2.is_even):
        raise OddLattice("expected even lattices")
    if not (a1.is_positive_definite and a2.is_positive_definite):
        raise NotPositiveDefinite("expected positive definite summands")
    if a1.rank != a2.rank:
        raise RankMismatch(f"ranks differ: {a1.rank} vs {a2.rank}")
    if a1.det != a2.det:
        raise DiscriminantMismatch(f"determinants differ: {a1.det} vs {a2.det}")
    g1 = _hyperbolic_extension(a1)
    g2 = _hyperbolic_extension(a2)
    n = g1.nrows
    needed_norms = {g1[i, i] for i in range(n)}
    candidates = {
        norm: [(v, g2.apply(v)) for v in _bounded_vectors_of_norm(g2, norm, bound)]
        for norm in needed_norms
    }
    chosen = []
    nodes = 0

    def dfs(i):
        nonlocal nodes
        if i == n:
            return True
        for vec, image in candidates[g1[i, i]]:
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise SearchExhausted(f"node cap {node_cap} reached")
            if all(_dot(chosen[j][0], image) == g1[i, j] for j in range(i)):
                chosen.append((vec, image))
                if dfs(i + 1):
                    return True
                chosen.pop()
        return False

    if not dfs(0):
        return None
    p = Matrix([chosen[i][0] for i in range(n)]).transpose()
    assert p.transpose() * g2 * p == g1
    return p


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))
