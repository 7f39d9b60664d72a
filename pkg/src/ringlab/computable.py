"""Infinite rings with finitely representable elements.

A ComputableRing exposes the ring operations plus optional capabilities
(unit providers, probes beyond a support bound, quasi-inverses). A
capability that returns None has refuted the request; one that is missing
raises NotImplementedError and the classifier reports "unknown".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .constructions import cyclic_ring, find_identity
from .core import FiniteRing, RingElement
from .errors import BaseNotUnital

SIDES = ("left", "right", "both")


def fixes(ring, e, m, side) -> bool:
    """e*m == m (left), m*e == m (right), or both."""
    if side in ("left", "both") and ring.mul(e, m) != m:
        return False
    if side in ("right", "both") and ring.mul(m, e) != m:
        return False
    return True


class ComputableRing:
    name = "computable ring"
    capabilities: frozenset[str] = frozenset()

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        return a == b

    def render(self, a) -> str:
        return str(a)

    format = render

    def supports(self, capability: str) -> bool:
        return capability in self.capabilities

    # capabilities; subclasses override what they support

    def s_unit_for(self, elements, side="both"):
        raise NotImplementedError("s_unit_for")

    def idempotent_unit_for(self, elements, side="both"):
        raise NotImplementedError("idempotent_unit_for")

    def probe_outside(self, bound: int):
        raise NotImplementedError("probe_outside")

    def atoms(self, bound: int) -> Iterator:
        """Elements supported at a single position <= bound; they span every
        element of support <= bound additively."""
        raise NotImplementedError("atoms")

    def sample_elements(self, bound: int) -> list:
        raise NotImplementedError("sample_elements")

    def quasi_inverse(self, r):
        raise NotImplementedError("quasi_inverse")

    def complete_idempotents(self, bound: int) -> list:
        raise NotImplementedError("complete_idempotents")

    def is_local_unit(self, e) -> bool:
        raise NotImplementedError("is_local_unit")

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r})"


# --- direct sums over N ---------------------------------------------------


@dataclass(frozen=True)
class SupportedElement:
    """Finitely supported element of a direct sum; zero components are never stored."""

    parts: tuple[tuple[int, RingElement], ...]

    @classmethod
    def from_map(cls, mapping) -> SupportedElement:
        return cls(tuple(sorted((int(i), x) for i, x in dict(mapping).items() if not x.is_zero())))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.parts)

    def as_dict(self) -> dict[int, RingElement]:
        return dict(self.parts)

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"{x}@{i}" for i, x in self.parts)


def _first_unit(ring: FiniteRing, comps, side, idempotent=False):
    for e in ring:
        if idempotent and ring.mul(e, e) != e:
            continue
        if all(fixes(ring, e, x, side) for x in comps):
            return e
    return None


class SupportedDirectSum(ComputableRing):
    """The direct sum of countably many copies of a finite ring, indexed from 0."""

    def __init__(self, component: FiniteRing, name: str | None = None):
        self.component = component
        self.name = name or f"(+)_N {component.name}"
        self.identity = find_identity(component)
        caps = {"s_unit_for", "idempotent_unit_for", "probe_outside", "atoms",
                "sample_elements", "quasi_inverse"}
        if self.identity is not None:
            caps |= {"complete_idempotents", "local_units"}
        self.capabilities = frozenset(caps)

    def element(self, mapping) -> SupportedElement:
        return SupportedElement.from_map(
            {i: x if isinstance(x, RingElement) else self.component.element(x)
             for i, x in dict(mapping).items()})

    def inject(self, i: int, x) -> SupportedElement:
        return self.element({i: x})

    def zero(self):
        return SupportedElement(())

    def add(self, a, b):
        out = a.as_dict()
        for i, x in b.parts:
            out[i] = out[i] + x if i in out else x
        return SupportedElement.from_map(out)

    def neg(self, a):
        return SupportedElement(tuple((i, -x) for i, x in a.parts))

    def mul(self, a, b):
        bd = b.as_dict()
        return SupportedElement.from_map(
            {i: self.component.mul(x, bd[i]) for i, x in a.parts if i in bd})

    def _assemble(self, elements, side, idempotent):
        per_index: dict[int, list[RingElement]] = {}
        for m in elements:
            for i, x in m.parts:
                per_index.setdefault(i, []).append(x)
        units = {}
        for i, comps in per_index.items():
            e = _first_unit(self.component, comps, side, idempotent)
            if e is None:
                return None
            units[i] = e
        return SupportedElement.from_map(units)

    def s_unit_for(self, elements, side="both"):
        return self._assemble(elements, side, idempotent=False)

    def idempotent_unit_for(self, elements, side="both"):
        return self._assemble(elements, side, idempotent=True)

    def probe_outside(self, bound):
        x = next(x for x in self.component if not x.is_zero())
        return self.inject(bound + 1, x)

    def atoms(self, bound):
        for i in range(bound + 1):
            for x in self.component:
                if not x.is_zero():
                    yield self.inject(i, x)

    def sample_elements(self, bound):
        out = list(self.atoms(bound))
        nonzero = [x for x in self.component if not x.is_zero()]
        out.append(self.element({i: nonzero[i % len(nonzero)] for i in range(bound + 1)}))
        return out

    def quasi_inverse(self, r):
        out = {}
        c = self.component
        for i, x in r.parts:
            s = next((s for s in c if c.mul_many(x, s, x) == x), None)
            if s is None:
                return None
            out[i] = s
        return SupportedElement.from_map(out)

    def complete_idempotents(self, bound):
        return [self.inject(i, self.identity) for i in range(bound + 1)]

    def is_local_unit(self, e):
        # E = elements whose every stored component is the identity
        return all(x == self.identity for _, x in e.parts)

    def render(self, a):
        return str(a)


def supported_direct_sum(component: FiniteRing, name: str | None = None) -> SupportedDirectSum:
    return SupportedDirectSum(component, name)


def abrams_ideal() -> SupportedDirectSum:
    """The ideal I of finitely supported 0/1 functions N -> F_2."""
    return SupportedDirectSum(cyclic_ring(2), "I = (+)_N F2")


# --- finite-rank matrices ------------------------------------------------


@dataclass(frozen=True)
class SparseMatrix:
    entries: tuple[tuple[tuple[int, int], RingElement], ...]

    @classmethod
    def from_map(cls, mapping) -> SparseMatrix:
        return cls(tuple(sorted(((int(i), int(j)), x) for (i, j), x in dict(mapping).items()
                                if not x.is_zero())))

    @property
    def rows(self) -> frozenset[int]:
        return frozenset(i for (i, _), _ in self.entries)

    @property
    def cols(self) -> frozenset[int]:
        return frozenset(j for (_, j), _ in self.entries)

    @property
    def indices(self) -> frozenset[int]:
        return self.rows | self.cols

    def as_dict(self):
        return dict(self.entries)

    def __str__(self):
        if not self.entries:
            return "0"
        terms = []
        for (i, j), x in self.entries:
            c = "" if x.coords == (1,) else f"{x}*"
            terms.append(f"{c}E{i},{j}")
        return " + ".join(terms)


def _is_prime_field(ring: FiniteRing) -> bool:
    if ring.rank != 1 or ring.table[0][0].coords != (1,):
        return False
    p = ring.orders[0]
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class FiniteRankMatrixRing(ComputableRing):
    """N x N matrices over a unital finite ring with finitely many nonzero entries."""

    def __init__(self, base: FiniteRing, name: str | None = None):
        one = find_identity(base)
        if one is None:
            raise BaseNotUnital(f"{base.name} has no identity")
        self.base = base
        self.one = one
        self.name = name or f"M_fin({base.name})"
        caps = {"s_unit_for", "idempotent_unit_for", "probe_outside", "atoms",
                "sample_elements", "complete_idempotents", "local_units"}
        if _is_prime_field(base):
            caps.add("quasi_inverse")
        self.capabilities = frozenset(caps)

    def element(self, mapping) -> SparseMatrix:
        return SparseMatrix.from_map(
            {k: x if isinstance(x, RingElement) else self.base.element(x if isinstance(x, (list, tuple)) else [x])
             for k, x in dict(mapping).items()})

    def unit(self, i: int, j: int, value=None) -> SparseMatrix:
        return SparseMatrix.from_map({(i, j): self.one if value is None else value})

    def diagonal(self, indices: Iterable[int]) -> SparseMatrix:
        return SparseMatrix.from_map({(i, i): self.one for i in indices})

    def zero(self):
        return SparseMatrix(())

    def add(self, a, b):
        out = a.as_dict()
        for k, x in b.entries:
            out[k] = out[k] + x if k in out else x
        return SparseMatrix.from_map(out)

    def neg(self, a):
        return SparseMatrix(tuple((k, -x) for k, x in a.entries))

    def mul(self, a, b):
        by_row: dict[int, list] = {}
        for (j, l), y in b.entries:
            by_row.setdefault(j, []).append((l, y))
        out: dict = {}
        mul = self.base.mul
        for (i, j), x in a.entries:
            for l, y in by_row.get(j, ()):
                p = mul(x, y)
                out[i, l] = out[i, l] + p if (i, l) in out else p
        return SparseMatrix.from_map(out)

    def _projection(self, elements, side):
        idx = set()
        for m in elements:
            if side == "left":
                idx |= m.rows
            elif side == "right":
                idx |= m.cols
            else:
                idx |= m.indices
        return self.diagonal(sorted(idx))

    def s_unit_for(self, elements, side="both"):
        return self._projection(elements, side)

    def idempotent_unit_for(self, elements, side="both"):
        return self._projection(elements, side)

    def probe_outside(self, bound):
        return self.unit(bound + 1, bound + 1)

    def atoms(self, bound):
        for i in range(bound + 1):
            for j in range(bound + 1):
                for x in self.base:
                    if not x.is_zero():
                        yield self.unit(i, j, x)

    def sample_elements(self, bound):
        out = [self.unit(i, j) for i in range(bound + 1) for j in range(bound + 1)]
        out.append(self.element({(i, (i + 1) % (bound + 1)): self.one for i in range(bound + 1)}))
        return out

    def quasi_inverse(self, r):
        if not _is_prime_field(self.base):
            raise NotImplementedError("quasi_inverse needs a prime-field base")
        return generalized_inverse(self, r)

    def complete_idempotents(self, bound):
        return [self.unit(i, i) for i in range(bound + 1)]

    def is_local_unit(self, e):
        # E = diagonal projections onto finite index sets
        return all(i == j and x == self.one for (i, j), x in e.entries)


def generalized_inverse(ring: FiniteRankMatrixRing, a: SparseMatrix) -> SparseMatrix:
    """G with a G a = a, over a prime field, by Gauss-Jordan elimination.

    With P a = R in reduced row echelon form and J the matrix sending pivot
    row k back to pivot column c_k, G = J P satisfies a G a = a.
    """
    p = ring.base.orders[0]
    idx = sorted(a.indices)
    if not idx:
        return ring.zero()
    pos = {v: t for t, v in enumerate(idx)}
    m = len(idx)
    mat = [[0] * m for _ in range(m)]
    for (i, j), x in a.entries:
        mat[pos[i]][pos[j]] = x.coords[0]
    P = [[int(r == c) for c in range(m)] for r in range(m)]
    pivots = []
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, m) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        P[row], P[piv] = P[piv], P[row]
        inv = pow(mat[row][col], -1, p)
        mat[row] = [v * inv % p for v in mat[row]]
        P[row] = [v * inv % p for v in P[row]]
        for r in range(m):
            if r != row and mat[r][col] % p:
                f = mat[r][col]
                mat[r] = [(u - f * v) % p for u, v in zip(mat[r], mat[row])]
                P[r] = [(u - f * v) % p for u, v in zip(P[r], P[row])]
        pivots.append(col)
        row += 1
    out = {}
    for k, c in enumerate(pivots):
        for t in range(m):
            if P[k][t]:
                out[idx[c], idx[t]] = ring.base.element([P[k][t]])
    return SparseMatrix.from_map(out)


def finite_rank_matrix_ring(base: FiniteRing, name: str | None = None) -> FiniteRankMatrixRing:
    return FiniteRankMatrixRing(base, name)
