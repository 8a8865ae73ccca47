"""Definite-lattice algorithms: short vectors, (-2)-classes, isometry testing.

Everything runs in exact rational arithmetic; no floats, no LLL.  The
enumeration is Fincke-Pohst from an exact LDL^T decomposition, which keeps
it exhaustive and deterministic.  Sizes in scope are rank <= 10 with small
norm bounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import NotNegativeDefinite, NotPositiveDefinite
from .lattices import Lattice
from .matrices import Matrix


def _ldl(gram):
    """G = U^T D U with U unit upper triangular; raises unless G is positive definite."""
    n = gram.nrows
    a = [[Fraction(x) for x in row] for row in gram.rows]
    d = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = a[i][i]
        if di <= 0:
            raise NotPositiveDefinite("Gram matrix is not positive definite")
        d[i] = di
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / di
        for j in range(i + 1, n):
            for k in range(j, n):
                a[j][k] -= di * u[i][j] * u[i][k]
    return d, u


def _floor_sqrt(f):
    # floor of sqrt(p/q) for a nonnegative Fraction
    return isqrt(f.numerator * f.denominator) // f.denominator


def _range_around(center, radius_sq):
    """Integers n with (n - center)^2 <= radius_sq, exactly (possibly empty)."""
    if radius_sq < 0:
        return range(0)
    center = Fraction(center)
    r = _floor_sqrt(radius_sq)
    cfloor = center.numerator // center.denominator
    hi = cfloor + r + 1
    while not (hi <= center or (hi - center) ** 2 <= radius_sq):
        hi -= 1
    lo = cfloor - r - 1
    while not (lo >= center or (lo - center) ** 2 <= radius_sq):
        lo += 1
    return range(lo, hi + 1)


def short_vectors(lattice, bound):
    """All nonzero vectors of norm <= bound, one per +-pair, grouped by norm.

    Returns {norm: sorted list of coefficient tuples}; the representative
    of each pair has positive first nonzero coordinate.
    """
    if not isinstance(lattice, Lattice):
        lattice = Lattice(lattice)
    n = lattice.rank
    d, u = _ldl(lattice.gram)
    found = {}
    xs = [0] * n

    def descend(i, budget):
        # budget = bound - sum of completed layers, as a Fraction
        if i < 0:
            vec = tuple(xs)
            if any(vec):
                norm = lattice.norm(vec)
                rep = vec if _canonical_sign(vec) else tuple(-x for x in vec)
                found.setdefault(norm, set()).add(rep)
            return
        center = -sum(u[i][j] * xs[j] for j in range(i + 1, n))
        for xi in _range_around(center, budget / d[i]):
            xs[i] = xi
            used = d[i] * (xi - center) ** 2
            descend(i - 1, budget - used)
        xs[i] = 0

    descend(n - 1, Fraction(bound))
    return {norm: sorted(vecs) for norm, vecs in sorted(found.items())}


def _canonical_sign(vec):
    for x in vec:
        if x:
            return x > 0
    return True


def has_minus_two_class(lattice):
    """True when a negative definite lattice contains a vector of norm -2."""
    if not lattice.is_negative_definite:
        raise NotNegativeDefinite("expected a negative definite lattice")
    flipped = Lattice(lattice.gram.scale(-1))
    return bool(short_vectors(flipped, 2).get(2))


def theta_prefix(lattice, bound):
    """Vector counts by norm 0..bound, counting both members of each +-pair."""
    sv = short_vectors(lattice, bound)
    return [1] + [2 * len(sv.get(m, ())) for m in range(1, bound + 1)]


@dataclass(frozen=True)
class IsometryResult:
    """Outcome of an isometry search.

    ``status`` is one of: "found"; "distinct_invariants" (rank, determinant
    or theta prefixes differ); "exhausted" (complete search, no isometry);
    "inconclusive" (node cap hit).  Only "exhausted" and
    "distinct_invariants" prove nonexistence.
    """

    matrix: Optional[Matrix]
    status: str
    nodes: int = 0

    def __bool__(self):
        return self.matrix is not None

    @property
    def proves_nonexistence(self):
        return self.status in ("distinct_invariants", "exhausted")


class _NodeCapHit(Exception):
    pass


def definite_isomorphic(l1, l2, node_cap=10_000_000, theta_bound=None):
    """Search for P with P^T G2 P = G1 between positive definite lattices.

    Cheap invariants (rank, determinant, theta prefix) run first;
    otherwise a Plesken-Souvignier style backtracking maps the basis of l1
    onto short vectors of l2, ordered by ascending norm.  The search is
    exhaustive, so an "exhausted" result proves the lattices inequivalent.
    """
    if not l1.is_positive_definite or not l2.is_positive_definite:
        raise NotPositiveDefinite("isometry testing needs positive definite lattices")
    if l1.rank != l2.rank or l1.det != l2.det:
        return IsometryResult(None, "distinct_invariants")
    n = l1.rank
    g1, g2 = l1.gram, l2.gram
    max_norm = max(g1[i, i] for i in range(n))
    tb = theta_bound if theta_bound is not None else max_norm
    if theta_prefix(l1, tb) != theta_prefix(l2, tb):
        return IsometryResult(None, "distinct_invariants")

    sv2 = short_vectors(l2, max_norm)
    by_norm = {}
    for norm, vecs in sv2.items():
        signed = sorted(vecs + [tuple(-x for x in v) for v in vecs])
        by_norm[norm] = [(v, g2.apply(v)) for v in signed]

    order = sorted(range(n), key=lambda i: (g1[i, i], i))
    chosen = []  # (vector, g2 * vector) pairs, in `order` positions
    nodes = 0

    def dfs(k):
        nonlocal nodes
        if k == n:
            return True
        i = order[k]
        for vec, image in by_norm.get(g1[i, i], ()):
            nodes += 1
            if nodes > node_cap:
                raise _NodeCapHit
            if all(
                _dot(chosen[t][0], image) == g1[i, order[t]] for t in range(k)
            ):
                chosen.append((vec, image))
                if dfs(k + 1):
                    return True
                chosen.pop()
        return False

    try:
        ok = dfs(0)
    except _NodeCapHit:
        return IsometryResult(None, "inconclusive", nodes)
    if not ok:
        return IsometryResult(None, "exhausted", nodes)
    rows = [None] * n
    for k, i in enumerate(order):
        rows[i] = chosen[k][0]
    p = Matrix(rows).transpose()
    assert p.transpose() * g2 * p == g1
    return IsometryResult(p, "found", nodes)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))
