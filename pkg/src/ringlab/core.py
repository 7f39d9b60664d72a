"""Finite rings given by structure constants over a finite abelian group.

The additive group is Z_{n_1} x ... x Z_{n_k}; an element is its coordinate
vector, reduced eagerly. Multiplication is the bilinear extension of the
k x k table of generator products.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import BadShape, GroupMismatch, NonAssociative, OrderIncompatible


@dataclass(frozen=True)
class FiniteAbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if any(n < 2 for n in orders):
            raise BadShape(f"cyclic factor orders must be >= 2, got {list(orders)}")
        object.__setattr__(self, "orders", orders)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def element(self, coords: Iterable[int]) -> RingElement:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise BadShape(f"expected {self.rank} coordinates, got {len(coords)}")
        return RingElement(tuple(c % n for c, n in zip(coords, self.orders)), self.orders)

    def zero(self) -> RingElement:
        return RingElement((0,) * self.rank, self.orders)

    def generator(self, i: int) -> RingElement:
        coords = [0] * self.rank
        coords[i] = 1
        return RingElement(tuple(coords), self.orders)

    def __iter__(self) -> Iterator[RingElement]:
        for coords in itertools.product(*(range(n) for n in self.orders)):
            yield RingElement(coords, self.orders)


@dataclass(frozen=True, order=True)
class RingElement:
    """Canonically reduced coordinate vector; `orders` names the owning group."""

    coords: tuple[int, ...]
    orders: tuple[int, ...] = field(repr=False)

    def _check(self, other: RingElement):
        if not isinstance(other, RingElement) or other.orders != self.orders:
            raise GroupMismatch(f"{other!r} does not belong to Z{list(self.orders)}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(
            tuple((a + b) % n for a, b, n in zip(self.coords, other.coords, self.orders)),
            self.orders,
        )

    def __neg__(self) -> RingElement:
        return RingElement(tuple(-a % n for a, n in zip(self.coords, self.orders)), self.orders)

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(
            tuple((a - b) % n for a, b, n in zip(self.coords, other.coords, self.orders)),
            self.orders,
        )

    def scale(self, m: int) -> RingElement:
        return RingElement(tuple(m * a % n for a, n in zip(self.coords, self.orders)), self.orders)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


class FiniteRing:
    """A validated finite ring.

    `table[i][j]` is the product of generators i and j. Construction checks
    that the table respects the generator orders and that generator triples
    associate; bilinearity then gives associativity everywhere.
    """

    def __init__(self, group: FiniteAbelianGroup, table, name: str = "R",
                 names: Sequence[str] | None = None):
        self.group = group
        self.name = name
        k = group.rank
        if len(table) != k or any(len(row) != k for row in table):
            raise BadShape(f"structure table must be {k}x{k}")
        rows = []
        for i, row in enumerate(table):
            out = []
            for j, c in enumerate(row):
                try:
                    c = tuple(c.coords) if isinstance(c, RingElement) else tuple(c)
                except TypeError:
                    raise BadShape(f"product e{i + 1}*e{j + 1} is not a coordinate vector") from None
                if len(c) != k:
                    raise BadShape(f"product e{i + 1}*e{j + 1} has {len(c)} coordinates, expected {k}")
                for v, n in zip(c, group.orders):
                    if not 0 <= v < n:
                        raise BadShape(
                            f"product e{i + 1}*e{j + 1}: coordinate {v} not in [0, {n})")
                out.append(RingElement(c, group.orders))
            rows.append(tuple(out))
        self.table: tuple[tuple[RingElement, ...], ...] = tuple(rows)
        if names is not None and len(names) != k:
            raise BadShape("one name per generator required")
        self.names = tuple(names) if names is not None else None
        self._mul_cache: dict = {}
        self._validate()

    def _validate(self):
        orders = self.group.orders
        for i, j in itertools.product(range(self.rank), repeat=2):
            c = self.table[i][j]
            if not c.scale(orders[i]).is_zero() or not c.scale(orders[j]).is_zero():
                raise OrderIncompatible(i, j)
        gens = [self.group.generator(i) for i in range(self.rank)]
        for i, j, l in itertools.product(range(self.rank), repeat=3):
            if self.mul(self.table[i][j], gens[l]) != self.mul(gens[i], self.table[j][l]):
                raise NonAssociative((i, j, l))

    # --- group side -----------------------------------------------------

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def size(self) -> int:
        return self.group.size

    @property
    def orders(self) -> tuple[int, ...]:
        return self.group.orders

    def zero(self) -> RingElement:
        return self.group.zero()

    def element(self, coords) -> RingElement:
        return self.group.element(coords)

    def generator(self, i: int) -> RingElement:
        return self.group.generator(i)

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.group)

    def __len__(self):
        return self.size

    def __contains__(self, r) -> bool:
        return isinstance(r, RingElement) and r.orders == self.orders

    def add(self, r: RingElement, s: RingElement) -> RingElement:
        self._own(r)
        return r + s

    def neg(self, r: RingElement) -> RingElement:
        self._own(r)
        return -r

    def sub(self, r: RingElement, s: RingElement) -> RingElement:
        self._own(r)
        return r - s

    def _own(self, r):
        if r not in self:
            raise GroupMismatch(f"{r!r} is not an element of {self.name}")

    # --- multiplication -------------------------------------------------

    def mul(self, r: RingElement, s: RingElement) -> RingElement:
        key = (r, s)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        self._own(r)
        self._own(s)
        orders = self.orders
        acc = [0] * self.rank
        for i, ri in enumerate(r.coords):
            if not ri:
                continue
            row = self.table[i]
            for j, sj in enumerate(s.coords):
                if not sj:
                    continue
                m = ri * sj
                for l, c in enumerate(row[j].coords):
                    if c:
                        acc[l] += m * c
        out = RingElement(tuple(a % n for a, n in zip(acc, orders)), orders)
        if len(self._mul_cache) < 1 << 20:
            self._mul_cache[key] = out
        return out

    def mul_many(self, *factors: RingElement) -> RingElement:
        out = factors[0]
        for f in factors[1:]:
            out = self.mul(out, f)
        return out

    def eq(self, r, s) -> bool:
        return r == s

    # --- presentation ---------------------------------------------------

    def format(self, r: RingElement) -> str:
        """Coordinates, or a sum of named generators when names are set."""
        if self.names is None:
            return str(r)
        terms = []
        for c, nm in zip(r.coords, self.names):
            if c == 1:
                terms.append(nm)
            elif c:
                terms.append(f"{c}{nm}")
        return "+".join(terms) if terms else "0"

    render = format

    def table_key(self):
        """Hashable description of the ring up to its name."""
        return self.orders, tuple(tuple(c.coords for c in row) for row in self.table)

    def __repr__(self):
        return f"FiniteRing({self.name!r}, orders={list(self.orders)})"


def make_finite_ring(orders: Sequence[int], table, name: str = "R",
                     names: Sequence[str] | None = None) -> FiniteRing:
    """Validate a structure-constant table and build the ring.

    `table` is k x k; entries are coordinate sequences or RingElements.
    """
    return FiniteRing(FiniteAbelianGroup(tuple(orders)), table, name, names)


def add(r: RingElement, s: RingElement) -> RingElement:
    return r + s


def mul(ring: FiniteRing, r: RingElement, s: RingElement) -> RingElement:
    return ring.mul(r, s)


def enumerate_elements(ring: FiniteRing) -> Iterator[RingElement]:
    """All elements exactly once, lexicographic in the coordinates."""
    return iter(ring)


def additive_closure(ring: FiniteRing, seed: Iterable[RingElement]) -> frozenset[RingElement]:
    """Smallest additive subgroup containing `seed`."""
    gens = {s for s in seed if not s.is_zero()}
    for s in gens:
        ring._own(s)
    members = {ring.zero()}
    frontier = [ring.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(members)


def is_subgroup(ring: FiniteRing, members) -> bool:
    members = set(members)
    if ring.zero() not in members:
        return False
    return all(a + b in members and -a in members for a in members for b in members)


def products_span(ring: FiniteRing) -> frozenset[RingElement]:
    """R^2: by bilinearity it is spanned by the generator products."""
    return additive_closure(ring, (c for row in ring.table for c in row))


def idempotents(ring: FiniteRing) -> list[RingElement]:
    return [e for e in ring if ring.mul(e, e) == e]


def element_order(r: RingElement) -> int:
    return math.lcm(1, *(n // math.gcd(c, n) for c, n in zip(r.coords, r.orders)))
