"""Finite example rings: zero rings, ideals, B_l / B_r, the twisted semigroup
ring, direct sums and full matrix rings."""
from __future__ import annotations

import itertools
import math
from typing import Sequence

from .core import (FiniteRing, RingElement, additive_closure,
                   element_order, make_finite_ring)
from .errors import BaseNotUnital, TooLarge, UnsupportedParameter

SMALL_PRIMES = (2, 3, 5, 7)
MAX_SIZE = 4096


def _check_prime(p):
    if p not in SMALL_PRIMES:
        raise UnsupportedParameter(f"p must be one of {SMALL_PRIMES}, got {p}")


def zero_ring(orders: Sequence[int], name: str | None = None) -> FiniteRing:
    k = len(orders)
    table = [[(0,) * k for _ in range(k)] for _ in range(k)]
    return make_finite_ring(orders, table, name or f"zero{list(orders)}")


def cyclic_ring(n: int) -> FiniteRing:
    """Z/n with its usual (unital) multiplication."""
    return make_finite_ring([n], [[(1,)]], f"Z{n}")


def b_l(p: int = 2) -> FiniteRing:
    """(a,b)(c,d) = (ac, ad) on F_p x F_p."""
    _check_prime(p)
    # generators u = (1,0), w = (0,1)
    return make_finite_ring([p, p], [[(1, 0), (0, 1)], [(0, 0), (0, 0)]], f"B_l(F{p})")


def b_r(p: int = 2) -> FiniteRing:
    """(a,b)(c,d) = (ac, bc) on F_p x F_p."""
    _check_prime(p)
    return make_finite_ring([p, p], [[(1, 0), (0, 0)], [(0, 1), (0, 0)]], f"B_r(F{p})")


def twisted_product(p, x, y):
    """(x1 + x2 g)(y1 + y2 g) = x1 y1 + (x1 y2 e2 + x2 y1 e1) g over K = F_p.

    Elements are flat 4-tuples (x1a, x1b, x2a, x2b) with e1 = (1,0), e2 = (0,1).
    """
    x1a, x1b, x2a, x2b = x
    y1a, y1b, y2a, y2b = y
    return ((x1a * y1a) % p, (x1b * y1b) % p,
            (x2a * y1a) % p,     # x2 y1 e1 keeps the first K-coordinate
            (x1b * y2b) % p)     # x1 y2 e2 keeps the second


def twisted_semigroup_ring(p: int = 2) -> FiniteRing:
    _check_prime(p)
    basis = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    table = [[twisted_product(p, a, b) for b in basis] for a in basis]
    return make_finite_ring([p] * 4, table, f"(F{p}xF{p})[G]")


def direct_sum(components: Sequence[FiniteRing], name: str | None = None) -> FiniteRing:
    if not components:
        raise TooLarge("direct_sum needs at least one component")
    if len(components) > 4 or math.prod(c.size for c in components) > MAX_SIZE:
        raise TooLarge(f"direct sum limited to 4 components and {MAX_SIZE} elements")
    if len(components) == 1:
        c = components[0]
        return FiniteRing(c.group, c.table, name or c.name, c.names)
    orders = [n for c in components for n in c.orders]
    k = len(orders)
    table = [[(0,) * k for _ in range(k)] for _ in range(k)]
    offset = 0
    for c in components:
        for i, j in itertools.product(range(c.rank), repeat=2):
            row = [0] * k
            row[offset:offset + c.rank] = c.table[i][j].coords
            table[offset + i][offset + j] = tuple(row)
        offset += c.rank
    return make_finite_ring(orders, table, name or "+".join(c.name for c in components))


def split(ring: FiniteRing, components: Sequence[FiniteRing], r: RingElement):
    """Coordinates of `r` in a direct sum, cut per component."""
    out, offset = [], 0
    for c in components:
        out.append(c.element(r.coords[offset:offset + c.rank]))
        offset += c.rank
    return out


def find_identity(ring: FiniteRing) -> RingElement | None:
    for e in ring:
        if all(ring.mul(e, r) == r and ring.mul(r, e) == r for r in ring):
            return e
    return None


def _identity_from_generators(ring: FiniteRing) -> RingElement | None:
    # enough to fix every generator on both sides
    gens = [ring.generator(i) for i in range(ring.rank)]
    for e in ring:
        if all(ring.mul(e, g) == g and ring.mul(g, e) == g for g in gens):
            return e
    return None


def matrix_ring(base: FiniteRing, n: int, name: str | None = None) -> FiniteRing:
    """M_n(base). Generators are E_ij (x) b_g, ordered row-major over (i, j, g)."""
    one = _identity_from_generators(base)
    if one is None:
        raise BaseNotUnital(f"{base.name} has no identity")
    if n < 1 or base.size ** (n * n) > MAX_SIZE:
        raise TooLarge(f"M_{n}({base.name}) exceeds {MAX_SIZE} elements")
    kb = base.rank
    index = {}
    for i, j, g in itertools.product(range(n), range(n), range(kb)):
        index[i, j, g] = len(index)
    k = len(index)
    table = [[(0,) * k for _ in range(k)] for _ in range(k)]
    for (i, j, g), a in index.items():
        for (jj, l, h), b in index.items():
            if j != jj:
                continue
            prod = base.table[g][h].coords
            row = [0] * k
            for t, c in enumerate(prod):
                row[index[i, l, t]] = c
            table[a][b] = tuple(row)
    orders = [base.orders[g] for (_, _, g) in index]
    names = None
    if kb == 1 and base.table[0][0].coords == (1,):
        names = [f"E{i}{j}" for (i, j, _) in index]
    return make_finite_ring(orders, table, name or f"M{n}({base.name})", names)


def matrix_entries(n: int, base: FiniteRing, r: RingElement):
    """n x n list of base elements for an element of matrix_ring(base, n)."""
    kb = base.rank
    return [[base.element(r.coords[(i * n + j) * kb:(i * n + j + 1) * kb]) for j in range(n)]
            for i in range(n)]


def _cyclic_basis(members: frozenset[RingElement]) -> list[RingElement] | None:
    """Elements g_1..g_m whose cyclic subgroups sum directly to `members`.

    Greedy on element order with backtracking; fine at desk scale.
    """
    target = len(members)
    cands = sorted((x for x in members if not x.is_zero()),
                   key=lambda x: (-element_order(x), x.coords))

    def span_size(basis):
        return math.prod(element_order(b) for b in basis)

    def search(basis, span):
        if len(span) == target:
            return basis
        for x in cands:
            if x in span:
                continue
            cyc = {x.scale(m) for m in range(element_order(x))}
            if len(cyc & span) != 1:
                continue
            new_basis = basis + [x]
            new_span = {a + b for a in span for b in cyc}
            if len(new_span) != span_size(new_basis):
                continue
            found = search(new_basis, frozenset(new_span))
            if found is not None:
                return found
        return None

    if not members:
        return None
    zero = next(iter(members)).scale(0)
    return search([], frozenset({zero}))


def subring_on(ring: FiniteRing, members: frozenset[RingElement], name: str) -> FiniteRing:
    """Re-present a multiplicatively closed subgroup as a standalone ring."""
    basis = _cyclic_basis(members)
    orders = [element_order(b) for b in basis]
    coords_of = {}
    for combo in itertools.product(*(range(n) for n in orders)):
        x = ring.zero()
        for c, b in zip(combo, basis):
            x = x + b.scale(c)
        coords_of[x] = combo
    table = [[coords_of[ring.mul(a, b)] for b in basis] for a in basis]
    sub = make_finite_ring(orders, table, name)
    sub.embedding = tuple(basis)
    return sub


def ideal_generated(ring: FiniteRing, g: RingElement) -> frozenset[RingElement]:
    """Two-sided ideal generated by g, by fixpoint iteration."""
    elems = list(ring)
    members = additive_closure(ring, [g])
    while True:
        seed = set(members)
        for x in members:
            for r in elems:
                seed.add(ring.mul(r, x))
                seed.add(ring.mul(x, r))
        closed = additive_closure(ring, seed)
        if closed == members:
            return members
        members = closed


def principal_ideal_subring(ring: FiniteRing, g: RingElement) -> FiniteRing:
    return subring_on(ring, ideal_generated(ring, g), f"<{g}> in {ring.name}")


def finite_corpus() -> dict[str, FiniteRing]:
    """Every finite example ring used by the deciders' property suites."""
    f2 = cyclic_ring(2)
    rings = [
        zero_ring([2]), zero_ring([4]), zero_ring([2, 2]),
        f2, cyclic_ring(4), cyclic_ring(8), cyclic_ring(6),
        b_l(2), b_r(2), b_l(3), b_r(3),
        twisted_semigroup_ring(2),
        direct_sum([f2, f2], "F2xF2"),
        direct_sum([b_l(2), b_l(2)]),
        direct_sum([b_l(2), b_r(2)]),
        direct_sum([zero_ring([2]), f2]),
        direct_sum([cyclic_ring(4), b_l(2)]),
        matrix_ring(f2, 1),
        matrix_ring(f2, 2),
        principal_ideal_subring(cyclic_ring(4), cyclic_ring(4).element([2])),
        principal_ideal_subring(cyclic_ring(8), cyclic_ring(8).element([2])),
    ]
    return {r.name: r for r in rings}


def large_corpus() -> dict[str, FiniteRing]:
    """Finite rings above the 64-element direct-search cap."""
    rings = [twisted_semigroup_ring(3), matrix_ring(cyclic_ring(3), 2)]
    return {r.name: r for r in rings}
