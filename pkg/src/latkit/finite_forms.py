"""Finite quadratic forms: the targets of discriminant constructions.

A form lives on a finite abelian group presented as a direct sum of cyclic
factors Z/d1 x ... x Z/dk (all di > 1).  The bilinear part takes values in
Q/Z, the quadratic part in Q/2Z; both are stored as Fractions reduced into
[0,1) and [0,2).  Elements are coefficient tuples modulo the orders.
"""

from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .errors import NotTwoElementary, OddLattice, TooLarge


def _mod1(x):
    x = Fraction(x)
    r = x - (x.numerator // x.denominator)
    return int(r) if r.denominator == 1 else r


def _mod2(x):
    x = Fraction(x)
    floor2 = (x.numerator // (2 * x.denominator)) * 2
    r = x - floor2
    return int(r) if r.denominator == 1 else r


class FiniteQuadraticForm:
    """Finite abelian group with a Q/Z bilinear and optional Q/2Z quadratic form.

    ``qvals`` is None for forms coming from odd lattices, where only the
    bilinear part is well defined.
    """

    __slots__ = ("orders", "qvals", "bvals", "lifts")

    def __init__(self, orders, qvals, bvals, lifts=None):
        orders = tuple(int(d) for d in orders)
        if any(d < 2 for d in orders):
            raise ValueError("cyclic factor orders must be >= 2")
        k = len(orders)
        bvals = tuple(tuple(_mod1(x) for x in row) for row in bvals)
        if len(bvals) != k or any(len(r) != k for r in bvals):
            raise ValueError("bilinear matrix shape mismatch")
        if any(bvals[i][j] != bvals[j][i] for i in range(k) for j in range(k)):
            raise ValueError("bilinear matrix must be symmetric")
        for i in range(k):
            for j in range(k):
                if _mod1(orders[i] * Fraction(bvals[i][j])) != 0:
                    raise ValueError("bilinear values incompatible with orders")
        if qvals is not None:
            qvals = tuple(_mod2(x) for x in qvals)
            if len(qvals) != k:
                raise ValueError("quadratic vector length mismatch")
            for i in range(k):
                if _mod2(orders[i] ** 2 * Fraction(qvals[i])) != 0:
                    raise ValueError("quadratic values incompatible with orders")
                if _mod1(Fraction(qvals[i]) - Fraction(bvals[i][i])) != 0:
                    # q(x) reduces to b(x,x) mod Z
                    raise ValueError("quadratic and bilinear parts disagree mod Z")
        self.orders = orders
        self.qvals = qvals
        self.bvals = bvals
        self.lifts = tuple(tuple(v) for v in lifts) if lifts is not None else None

    # -- basic structure -------------------------------------------------

    @property
    def ngens(self):
        return len(self.orders)

    @property
    def order(self):
        n = 1
        for d in self.orders:
            n *= d
        return n

    @property
    def is_trivial(self):
        return not self.orders

    @property
    def has_quadratic(self):
        return self.qvals is not None

    @property
    def is_two_elementary(self):
        return all(d == 2 for d in self.orders)

    def elements(self):
        """All coefficient tuples, including zero."""
        return product(*(range(d) for d in self.orders))

    def element_order(self, coeffs):
        return lcm(1, *(d // gcd(d, c) for d, c in zip(self.orders, coeffs)))

    def reduce(self, coeffs):
        return tuple(c % d for c, d in zip(coeffs, self.orders))

    # -- evaluation ------------------------------------------------------

    def b(self, x, y):
        """Bilinear value b(x, y) in Q/Z."""
        total = Fraction(0)
        for i, ci in enumerate(x):
            if ci:
                for j, cj in enumerate(y):
                    if cj:
                        total += ci * cj * Fraction(self.bvals[i][j])
        return _mod1(total)

    def q(self, x):
        """Quadratic value q(x) in Q/2Z."""
        if self.qvals is None:
            raise OddLattice("this form has no quadratic refinement")
        total = Fraction(0)
        for i, ci in enumerate(x):
            if ci:
                total += ci * ci * Fraction(self.qvals[i])
                for j in range(i + 1, self.ngens):
                    if x[j]:
                        total += 2 * ci * x[j] * Fraction(self.bvals[i][j])
        return _mod2(total)

    # -- constructions ---------------------------------------------------

    def direct_sum(self, other):
        orders = self.orders + other.orders
        k1, k2 = self.ngens, other.ngens
        bvals = [
            [self.bvals[i][j] if j < k1 else 0 for j in range(k1 + k2)]
            for i in range(k1)
        ] + [
            [0 if j < k1 else other.bvals[i][j - k1] for j in range(k1 + k2)]
            for i in range(k2)
        ]
        if self.qvals is not None and other.qvals is not None:
            qvals = self.qvals + other.qvals
        else:
            qvals = None
        return FiniteQuadraticForm(orders, qvals, bvals)

    def negated(self):
        qvals = None
        if self.qvals is not None:
            qvals = tuple(_mod2(-Fraction(x)) for x in self.qvals)
        bvals = [[_mod1(-Fraction(x)) for x in row] for row in self.bvals]
        return FiniteQuadraticForm(self.orders, qvals, bvals)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteQuadraticForm)
            and self.orders == other.orders
            and self.qvals == other.qvals
            and self.bvals == other.bvals
        )

    def __hash__(self):
        return hash((self.orders, self.qvals, self.bvals))

    def __repr__(self):
        return f"FiniteQuadraticForm(orders={self.orders}, q={self.qvals})"


def trivial_form():
    return FiniteQuadraticForm((), (), ())


def min_generators(form, p=None):
    """Minimal number of generators of the group (of its p-primary part).

    With ``p`` a prime this is the number of cyclic factors divisible by p;
    with ``p=None`` it is the maximum over primes dividing the group order.
    """
    if p is not None:
        return sum(1 for d in form.orders if d % p == 0)
    best = 0
    n = form.order
    q = 2
    while q * q <= n:
        if n % q == 0:
            best = max(best, min_generators(form, q))
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        best = max(best, min_generators(form, n))
    return best


def two_elementary_invariants(form):
    """(a, delta) for a form on (Z/2)^a: delta = 0 iff q is integer valued."""
    if not form.is_two_elementary:
        raise NotTwoElementary(f"orders {form.orders} are not all 2")
    if not form.has_quadratic:
        raise OddLattice("coparity needs the quadratic part")
    a = form.ngens
    delta = 0
    for x in form.elements():
        if Fraction(form.q(x)).denominator != 1:
            delta = 1
            break
    return a, delta


def has_z2_cubed_summand(form):
    """True when at least three cyclic factors have even order."""
    return sum(1 for d in form.orders if d % 2 == 0) >= 3


def forms_isomorphic(q1, q2, bound=1 << 16):
    """Search for a group isomorphism preserving b and q.

    Returns the images of q1's generators as coefficient tuples in q2, or
    None.  Generators are processed by (order desc, q-value); candidate
    images are tried in lexicographic order, so the first witness found is
    the least one in that ordering.
    """
    if not (q1.has_quadratic and q2.has_quadratic):
        raise OddLattice("isomorphism testing needs quadratic parts")
    if q1.order != q2.order:
        return None
    if q1.order > bound:
        raise TooLarge(f"group order {q1.order} exceeds bound {bound}")
    if q1.is_trivial:
        return []

    table2 = {}
    fingerprint2 = {}
    for x in q2.elements():
        if any(x):
            key = (q2.element_order(x), q2.q(x))
            fingerprint2.setdefault(key, []).append(x)
            table2[x] = key
    fingerprint1 = {}
    for x in q1.elements():
        if any(x):
            key = (q1.element_order(x), q1.q(x))
            fingerprint1[key] = fingerprint1.get(key, 0) + 1
    if fingerprint1 != {k: len(v) for k, v in fingerprint2.items()}:
        return None

    gen_order = sorted(
        range(q1.ngens), key=lambda i: (-q1.orders[i], q1.qvals[i], i)
    )
    candidates = [
        sorted(fingerprint2.get((q1.orders[i], q1.qvals[i]), []))
        for i in gen_order
    ]

    images = [None] * q1.ngens

    def generates_all(chosen):
        seen = {(0,) * q2.ngens}
        frontier = [(0,) * q2.ngens]
        gens = [tuple(g) for g in chosen]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = q2.reduce(tuple(a + b for a, b in zip(cur, g)))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
                    if len(seen) == q2.order:
                        return True
        return len(seen) == q2.order

    def search(depth):
        if depth == q1.ngens:
            return generates_all([images[i] for i in gen_order])
        i = gen_order[depth]
        for y in candidates[depth]:
            ok = True
            for prev_depth in range(depth):
                j = gen_order[prev_depth]
                if q2.b(y, images[j]) != q1.bvals[i][j]:
                    ok = False
                    break
            if ok:
                images[i] = y
                if search(depth + 1):
                    return True
                images[i] = None
        return False

    if search(0):
        return [images[i] for i in range(q1.ngens)]
    return None
