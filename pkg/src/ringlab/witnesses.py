"""Constructive unit-finding arguments as algorithms.

Every function takes a ring object with zero/add/sub/mul (a FiniteRing or a
ComputableRing) plus, where the argument needs one, an oracle. Intermediate
identities of each argument are checked at runtime unless Python runs with
-O; a failed check raises ProofStepFailed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .computable import fixes
from .core import FiniteRing
from .errors import (HypothesisFailed, NotCommuting, NotIdempotentInput, NotRegularAt,
                     OracleFailed, ProofStepFailed)

UnitOracle = Callable[[object, str], object]


def _require(cond, what):
    if not cond:
        raise ProofStepFailed(what)


def vee(ring, a, b):
    """a v b = a + b - ab."""
    return ring.sub(ring.add(a, b), ring.mul(a, b))


def is_idempotent(ring, e) -> bool:
    return ring.mul(e, e) == e


@dataclass
class JoinReport:
    e_prime: object
    e_dprime: object
    e: object
    square: object
    square_defect: object
    expansion_holds: bool
    conditions: dict

    @property
    def idempotent(self) -> bool:
        return self.square == self.e

    def as_dict(self, render=str) -> dict:
        return {
            "e_prime": render(self.e_prime),
            "e_dprime": render(self.e_dprime),
            "e": render(self.e),
            "e_squared": render(self.square),
            "square_defect": render(self.square_defect),
            "expansion_holds": self.expansion_holds,
            "conditions": dict(self.conditions),
            "idempotent": self.idempotent,
        }


def join_analysis(ring, e1, e2) -> JoinReport:
    """Analyse e = e2 v e1 for idempotents e1 (e') and e2 (e'')."""
    for name, x in (("e'", e1), ("e''", e2)):
        if not is_idempotent(ring, x):
            raise NotIdempotentInput(f"{name} = {ring.render(x)} is not idempotent")
    mul, add, sub = ring.mul, ring.add, ring.sub
    e = vee(ring, e2, e1)
    square = mul(e, e)
    p12 = mul(e1, e2)
    p21 = mul(e2, e1)
    # e + e'e'' - e'e''e' - e''e'e'' + e''e'e''e'
    expansion = add(sub(sub(add(e, p12), mul(p12, e1)), mul(p21, e2)), mul(mul(p21, e2), e1))
    conditions = {
        "i": p12 == e1,
        "ii": p12 == e2,
        "iii": p21 == e2,
        "iv": p21 == e1,
        "v": p12 == p21,
    }
    report = JoinReport(e1, e2, e, square, sub(square, e), square == expansion, conditions)
    if __debug__:
        _require(report.expansion_holds, "e^2 expansion identity")
        if any(conditions.values()):
            _require(report.square_defect == ring.zero(), "condition implies idempotent join")
    return report


# --- common units ---------------------------------------------------------


@dataclass
class Trace:
    """Steps of an induction, outermost call last."""

    steps: list = field(default_factory=list)

    def record(self, **kw):
        self.steps.append(kw)

    def as_list(self, render=str):
        def conv(v):
            if isinstance(v, (list, tuple)):
                return [conv(x) for x in v]
            if isinstance(v, (str, int, bool)) or v is None:
                return v
            return render(v)
        return [{k: conv(v) for k, v in step.items()} for step in self.steps]


def brute_unit_oracle(ring: FiniteRing) -> UnitOracle:
    """First element (enumeration order) fixing m on the given side."""
    def oracle(m, side):
        return next((e for e in ring if fixes(ring, e, m, side)), None)
    return oracle


def capability_unit_oracle(ring) -> UnitOracle:
    def oracle(m, side):
        return ring.s_unit_for([m], side)
    return oracle


def _ask(oracle, m, side, ring):
    e = oracle(m, side)
    if e is None or not fixes(ring, e, m, side):
        raise OracleFailed(ring.render(m), f"no {side} unit")
    return e


def common_one_sided_unit(ring, elements: Sequence, side: str, oracle: UnitOracle,
                          trace: Trace | None = None):
    """e with e m = m (left) or m e = m (right) for every m in `elements`.

    Induction on n: take e_n for m_n, recurse on v_i = m_i - e_n m_i, and
    join as e' v e_n (left) or e_n v e' (right).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, got {side!r}")
    elements = list(elements)
    if not elements:
        return ring.zero()
    *rest, last = elements
    e_n = _ask(oracle, last, side, ring)
    if side == "left":
        vs = [ring.sub(m, ring.mul(e_n, m)) for m in rest]
    else:
        vs = [ring.sub(m, ring.mul(m, e_n)) for m in rest]
    e_prev = common_one_sided_unit(ring, vs, side, oracle, trace)
    if __debug__:
        _require(all(fixes(ring, e_prev, v, side) for v in vs), "e' fixes every v_i")
    e = vee(ring, e_prev, e_n) if side == "left" else vee(ring, e_n, e_prev)
    if trace is not None:
        trace.record(side=side, n=len(elements), m=elements, m_n=last, e_n=e_n, v=vs,
                     e_prime=e_prev, e=e)
    if __debug__:
        _require(all(fixes(ring, e, m, side) for m in elements), f"{side} unit fixes all inputs")
    return e


def common_two_sided_unit(ring, elements: Sequence, oracle: UnitOracle,
                          trace: Trace | None = None):
    """Left unit e', right unit e'', then e = e'' v e' fixes both sides."""
    elements = list(elements)
    left = common_one_sided_unit(ring, elements, "left", oracle, trace)
    right = common_one_sided_unit(ring, elements, "right", oracle, trace)
    e = vee(ring, right, left)
    if trace is not None:
        trace.record(side="both", left_unit=left, right_unit=right, e=e)
    if __debug__:
        _require(all(fixes(ring, e, m, "both") for m in elements), "two-sided unit fixes all inputs")
    return e


def merge_local_units(ring, e1, e2, first: Sequence = (), second: Sequence = ()):
    """e1 v e2 for commuting idempotents; it fixes first + second on both sides."""
    if ring.mul(e1, e2) != ring.mul(e2, e1):
        raise NotCommuting(f"{ring.render(e1)} and {ring.render(e2)} do not commute")
    for e, xs in ((e1, first), (e2, second)):
        if not is_idempotent(ring, e):
            raise NotIdempotentInput(f"{ring.render(e)} is not idempotent")
        bad = next((x for x in xs if not fixes(ring, e, x, "both")), None)
        if bad is not None:
            raise HypothesisFailed(f"{ring.render(e)} does not fix {ring.render(bad)}")
    e = vee(ring, e1, e2)
    if __debug__:
        _require(is_idempotent(ring, e), "join of commuting idempotents is idempotent")
        _require(all(fixes(ring, e, x, "both") for x in list(first) + list(second)),
                 "merged unit fixes the union")
    return e


def common_local_unit(ring, elements: Sequence, member_oracle: Callable):
    """Fold merge_local_units over a list; member_oracle(r) returns a member
    of a set of local units fixing r."""
    elements = list(elements)
    e = ring.zero()
    done = []
    for r in elements:
        u = member_oracle(r)
        if u is None:
            raise OracleFailed(ring.render(r), "no local unit")
        e = merge_local_units(ring, e, u, done, [r])
        done.append(r)
    return e


# --- regular rings -------------------------------------------------------


def quasi_inverse(ring: FiniteRing, r):
    """First s (enumeration order) with r s r = r."""
    for s in ring:
        if ring.mul(ring.mul(r, s), r) == r:
            return s
    raise NotRegularAt(ring.render(r))


def brute_quasi_inverse_oracle(ring: FiniteRing):
    return lambda r: quasi_inverse(ring, r)


def capability_quasi_inverse_oracle(ring):
    def oracle(r):
        t = ring.quasi_inverse(r)
        if t is None:
            raise NotRegularAt(ring.render(r))
        return t
    return oracle


def regular_local_unit(ring, side: str, elements: Sequence, oracle: Callable,
                       trace: Trace | None = None):
    """Idempotent e fixing every element on `side`, for a regular ring.

    With e_1 built for r_1..r_{n-1}: s = r_n - e_1 r_n, t = oracle(s),
    f = st, g = f - f e_1, e = e_1 + g (mirrored on the right).
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, got {side!r}")
    elements = list(elements)
    if not elements:
        return ring.zero()
    *rest, r_n = elements
    e1 = regular_local_unit(ring, side, rest, oracle, trace)
    mul, sub, add = ring.mul, ring.sub, ring.add
    zero = ring.zero()
    if side == "left":
        s = sub(r_n, mul(e1, r_n))
    else:
        s = sub(r_n, mul(r_n, e1))
    t = oracle(s)
    if mul(mul(s, t), s) != s:
        raise OracleFailed(ring.render(s), "returned t with sts != s")
    if side == "left":
        f = mul(s, t)
        g = sub(f, mul(f, e1))
    else:
        f = mul(t, s)
        g = sub(f, mul(e1, f))
    e = add(e1, g)
    if __debug__:
        _require(is_idempotent(ring, f), "f is idempotent")
        if side == "left":
            _require(mul(e1, f) == zero, "e1 f = 0")
        else:
            _require(mul(f, e1) == zero, "f e1 = 0")
        _require(mul(e1, g) == zero and mul(g, e1) == zero, "e1 g = g e1 = 0")
        _require(is_idempotent(ring, g), "g^2 = g")
        _require(is_idempotent(ring, e), "e^2 = e")
        _require(all(fixes(ring, e, r, side) for r in elements), f"{side} unit fixes all inputs")
    if trace is not None:
        trace.record(side=side, n=len(elements), r_n=r_n, e1=e1, s=s, t=t, f=f, g=g, e=e)
    return e


# --- idempotent two-sided units ------------------------------------------


def brute_idempotent_oracle(ring: FiniteRing, side: str):
    def oracle(elements):
        return next((e for e in ring if is_idempotent(ring, e)
                     and all(fixes(ring, e, m, side) for m in elements)), None)
    return oracle


def capability_idempotent_oracle(ring, side: str):
    return lambda elements: ring.idempotent_unit_for(list(elements), side)


def two_sided_idempotent_unit(ring, elements: Sequence, left_oracle: Callable,
                              right_oracle: Callable):
    """Right idempotent unit e', left idempotent unit e'' for elements + [e'];
    then e = e' v e'' is an idempotent two-sided unit."""
    elements = list(elements)
    e1 = right_oracle(elements)
    if e1 is None or not is_idempotent(ring, e1) or \
            not all(fixes(ring, e1, m, "right") for m in elements):
        raise OracleFailed(", ".join(map(ring.render, elements)), "no right idempotent unit")
    e2 = left_oracle(elements + [e1])
    if e2 is None or not is_idempotent(ring, e2) or \
            not all(fixes(ring, e2, m, "left") for m in elements + [e1]):
        raise OracleFailed(", ".join(map(ring.render, elements)), "no left idempotent unit")
    report = join_analysis(ring, e2, e1)   # forms e1 v e2
    e = report.e
    if __debug__:
        _require(report.conditions["ii"], "e'' e' = e'")
        _require(report.idempotent, "joined unit is idempotent")
        _require(all(fixes(ring, e, m, "both") for m in elements), "two-sided unit fixes all inputs")
    return e


# --- identity promotion --------------------------------------------------


def one_sided_identities(ring: FiniteRing, side: str) -> list:
    elems = list(ring)
    return [e for e in elems if all(fixes(ring, e, r, side) for r in elems)]


def promote_to_identity(ring: FiniteRing, side: str = "right"):
    """Given that `ring` is unital on `side` and s-unital on the other side,
    return its (unique) two-sided identity."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be left or right, got {side!r}")
    other = "left" if side == "right" else "right"
    ids = one_sided_identities(ring, side)
    if not ids:
        raise HypothesisFailed(f"{ring.name} is not {side} unital")
    f = ids[0]
    oracle = brute_unit_oracle(ring)
    elems = list(ring)
    bad = next((r for r in elems if oracle(r, other) is None), None)
    if bad is not None:
        raise HypothesisFailed(f"{ring.name} is not {other} s-unital: {ring.render(bad)} is not fixed")
    for r in elems:
        e = common_one_sided_unit(ring, [r, f], other, oracle)
        # f is a one-sided identity, so the product e f (or f e) equals e
        ef = ring.mul(e, f) if other == "left" else ring.mul(f, e)
        if __debug__:
            _require(ef == e and ef == f, "unit coincides with the one-sided identity")
        _require(fixes(ring, f, r, other), f"f fixes {ring.render(r)} on the {other}")
    lefts = one_sided_identities(ring, "left")
    rights = one_sided_identities(ring, "right")
    _require(lefts == [f] and rights == [f], "identity is unique")
    return f
