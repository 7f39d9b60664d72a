"""Membership deciders for the hierarchy of ring classes.

Finite rings are decided by exhaustive search. ComputableRings are decided
through their capabilities; facts that would need all of an infinite ring
are reported as refutations up to a support bound, or as unknown.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .computable import ComputableRing, fixes
from .core import FiniteRing, products_span
from .errors import NotIdempotent, NotOrthogonal, RingError
from .witnesses import is_idempotent, vee

CLASSES = (
    "idempotent_ring",
    "left_s_unital", "right_s_unital", "s_unital",
    "left_locally_unital", "right_locally_unital", "locally_unital",
    "has_local_unit_set", "has_enough_idempotents",
    "left_unital", "right_unital", "unital",
    "regular",
)

# every rule reads: all premises yes => conclusion yes
IMPLICATIONS = (
    (("unital",), "has_enough_idempotents"),
    (("has_enough_idempotents",), "has_local_unit_set"),
    (("has_local_unit_set",), "locally_unital"),
    (("locally_unital",), "s_unital"),
    (("s_unital",), "idempotent_ring"),
    (("unital",), "left_unital"),
    (("unital",), "right_unital"),
    (("left_unital",), "left_locally_unital"),
    (("right_unital",), "right_locally_unital"),
    (("left_locally_unital",), "left_s_unital"),
    (("right_locally_unital",), "right_s_unital"),
    (("left_s_unital",), "idempotent_ring"),
    (("right_s_unital",), "idempotent_ring"),
    (("locally_unital",), "left_locally_unital"),
    (("locally_unital",), "right_locally_unital"),
    (("left_locally_unital", "right_locally_unital"), "locally_unital"),
    (("s_unital",), "left_s_unital"),
    (("s_unital",), "right_s_unital"),
    (("left_s_unital", "right_s_unital"), "s_unital"),
    (("regular",), "locally_unital"),
    (("left_unital", "right_unital"), "unital"),
    (("left_s_unital", "right_unital"), "unital"),
    (("right_s_unital", "left_unital"), "unital"),
)

DIRECT_SEARCH_CAP = 64
DEFAULT_SAMPLE_BOUND = 3


class InconsistentClassification(RingError):
    pass


@dataclass
class Verdict:
    status: str  # "yes" | "no" | "unknown"
    witness: object = None
    counterexample: object = None
    bound: int | None = None
    reason: str | None = None
    refuted: list = field(default_factory=list, repr=False)

    def __bool__(self):
        raise TypeError("use .status; a verdict is tri-state")


def yes(witness=None, reason=None, bound=None):
    return Verdict("yes", witness=witness, reason=reason, bound=bound)


def no(counterexample=None, reason=None, bound=None, refuted=()):
    return Verdict("no", counterexample=counterexample, reason=reason, bound=bound,
                   refuted=list(refuted))


def unknown(reason):
    return Verdict("unknown", reason=reason)


CLASSIFICATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["ring", "size", "classes"],
    "additionalProperties": False,
    "properties": {
        "ring": {"type": "string"},
        "size": {"type": ["integer", "null"]},
        "bound": {"type": ["integer", "null"]},
        "classes": {
            "type": "object",
            "required": list(CLASSES),
            "additionalProperties": False,
            "properties": {
                c: {
                    "type": "object",
                    "required": ["verdict"],
                    "additionalProperties": False,
                    "properties": {
                        "verdict": {"enum": ["yes", "no", "unknown"]},
                        "witness": {},
                        "counterexample": {},
                        "bound": {"type": "integer"},
                        "reason": {"type": "string"},
                    },
                }
                for c in CLASSES
            },
        },
    },
}


def _render_value(v, render):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, dict):
        return {(k if isinstance(k, str) else render(k)): _render_value(x, render) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_render_value(x, render) for x in v]
    return render(v)


@dataclass
class Classification:
    ring_name: str
    size: int | None
    verdicts: dict
    bound: int | None = None

    def __getitem__(self, name) -> Verdict:
        return self.verdicts[name]

    def status(self, name) -> str:
        return self.verdicts[name].status

    def to_json(self, render=str) -> dict:
        classes = {}
        for c in CLASSES:
            v = self.verdicts[c]
            out = {"verdict": v.status}
            if v.witness is not None:
                out["witness"] = _render_value(v.witness, render)
            if v.counterexample is not None:
                out["counterexample"] = _render_value(v.counterexample, render)
            if v.bound is not None:
                out["bound"] = v.bound
            if v.reason:
                out["reason"] = v.reason
            classes[c] = out
        return {"ring": self.ring_name, "size": self.size, "bound": self.bound, "classes": classes}


def check_consistency(verdicts: dict):
    """Raise if the verdicts break any inclusion of the hierarchy."""
    implied = {k for k, v in verdicts.items() if v.status == "yes"}
    changed = True
    while changed:
        changed = False
        for premises, concl in IMPLICATIONS:
            if concl not in implied and all(p in implied for p in premises):
                implied.add(concl)
                changed = True
                if verdicts[concl].status == "no":
                    raise InconsistentClassification(f"{' & '.join(premises)} = yes but {concl} = no")


def propagate(verdicts: dict):
    """Fill unknown verdicts implied by the hierarchy (yes forwards, no backwards)."""
    changed = True
    while changed:
        changed = False
        for premises, concl in IMPLICATIONS:
            if all(verdicts[p].status == "yes" for p in premises) and verdicts[concl].status == "unknown":
                verdicts[concl] = yes(reason=f"implied by {' & '.join(premises)}")
                changed = True
            if verdicts[concl].status == "no":
                open_ = [p for p in premises if verdicts[p].status != "yes"]
                if len(open_) == 1 and verdicts[open_[0]].status == "unknown":
                    verdicts[open_[0]] = no(reason=f"{concl} = no", bound=verdicts[concl].bound)
                    changed = True
    check_consistency(verdicts)
    return verdicts


# --- finite deciders -----------------------------------------------------


def is_idempotent_ring(ring: FiniteRing) -> Verdict:
    span = products_span(ring)
    if len(span) == ring.size:
        return yes(reason="the products span R")
    outside = [r for r in ring if r not in span]
    return no(outside[0], reason=f"|R^2| = {len(span)} < {ring.size}", refuted=outside)


def s_unit_search(ring: FiniteRing, r, side: str):
    """First e with e r = r (left) / r e = r (right), or None."""
    return next((e for e in ring if fixes(ring, e, r, side)), None)


def _common_fixer(ring: FiniteRing, side: str, idempotent=False):
    elems = list(ring)
    for e in elems:
        if idempotent and not is_idempotent(ring, e):
            continue
        if all(fixes(ring, e, r, side) for r in elems):
            return e
    return None


def is_one_sided_s_unital(ring: FiniteRing, side: str) -> Verdict:
    table, failures = {}, []
    for r in ring:
        e = s_unit_search(ring, r, side)
        if e is None:
            failures.append(r)
        else:
            table[r] = e
    if failures:
        return no(failures[0], reason=f"no {side} s-unit for this element", refuted=failures)
    return yes({"unit": _common_fixer(ring, side), "table": table})


def is_s_unital(ring: FiniteRing) -> Verdict:
    left, right = is_one_sided_s_unital(ring, "left"), is_one_sided_s_unital(ring, "right")
    for v, side in ((left, "left"), (right, "right")):
        if v.status == "no":
            return no(v.counterexample, reason=f"not {side} s-unital", refuted=v.refuted)
    return yes({"unit": _common_fixer(ring, "both")})


def is_one_sided_locally_unital(ring: FiniteRing, side: str) -> Verdict:
    e = _common_fixer(ring, side, idempotent=True)
    if e is None:
        return no(reason=f"no idempotent fixes every element on the {side}")
    return yes(e)


def is_locally_unital_am(ring: FiniteRing) -> Verdict:
    e = _common_fixer(ring, "both", idempotent=True)
    if e is None:
        return no(reason="no idempotent fixes every element on both sides")
    return yes(e)


def is_one_sided_unital(ring: FiniteRing, side: str) -> Verdict:
    elems = list(ring)
    ids = [e for e in elems if all(fixes(ring, e, r, side) for r in elems)]
    if not ids:
        return no(reason=f"no {side} identity")
    return yes(ids)


def is_unital(ring: FiniteRing) -> Verdict:
    left, right = is_one_sided_unital(ring, "left"), is_one_sided_unital(ring, "right")
    if left.status == "yes" and right.status == "yes":
        # a left identity and a right identity coincide: e' = e'e'' = e''
        if left.witness != right.witness or len(left.witness) != 1:
            raise InconsistentClassification("two-sided identity is not unique")
        return yes(left.witness[0])
    return no(reason="no two-sided identity")


def is_regular(ring: FiniteRing) -> Verdict:
    table, failures = {}, []
    elems = list(ring)
    for r in elems:
        s = next((s for s in elems if ring.mul(ring.mul(r, s), r) == r), None)
        if s is None:
            failures.append(r)
        else:
            table[r] = s
    if failures:
        return no(failures[0], reason="no s with r s r = r", refuted=failures)
    return yes(table)


def commuting_idempotent_graph(ring: FiniteRing) -> nx.Graph:
    idem = [e for e in ring if is_idempotent(ring, e)]
    g = nx.Graph()
    g.add_nodes_from(idem)
    for i, a in enumerate(idem):
        for b in idem[i + 1:]:
            if ring.mul(a, b) == ring.mul(b, a):
                g.add_edge(a, b)
    return g


def is_local_unit_set(ring: FiniteRing, members) -> bool:
    members = set(members)
    for a in members:
        if not is_idempotent(ring, a):
            return False
        for b in members:
            if ring.mul(a, b) != ring.mul(b, a) or vee(ring, a, b) not in members:
                return False
    return all(any(fixes(ring, e, r, "both") for e in members) for r in ring)


def _local_units_direct(ring: FiniteRing) -> Verdict:
    # singletons first (smallest answers), then maximal commuting cliques:
    # a maximal clique is closed under v and contains every commuting set
    graph = commuting_idempotent_graph(ring)
    for e in sorted(graph.nodes):
        if is_local_unit_set(ring, [e]):
            return yes(sorted([e]), reason="direct search")
    for clique in nx.find_cliques(graph):
        if is_local_unit_set(ring, clique):
            return yes(sorted(clique), reason="direct search")
    return no(reason="no commuting v-closed idempotent set covers R (direct search)")


def has_set_of_local_units(ring: FiniteRing) -> Verdict:
    unital = is_unital(ring)
    if unital.status == "yes":
        shortcut = yes([unital.witness], reason="finite collapse: {1} is a set of local units")
    else:
        shortcut = no(reason="finite collapse: a finite set of local units joins to an identity")
    if ring.size > DIRECT_SEARCH_CAP:
        shortcut.reason += f" (|R| = {ring.size} > {DIRECT_SEARCH_CAP}, direct search skipped)"
        return shortcut
    direct = _local_units_direct(ring)
    if direct.status != shortcut.status:
        raise InconsistentClassification("local-unit search disagrees with the finite collapse")
    return direct


def verify_complete_idempotents(ring, family, probes=None) -> bool:
    """Orthogonal nonzero idempotents with r = sum r e_i = sum e_i r for every probe."""
    family = list(family)
    zero = ring.zero()
    for i, e in enumerate(family):
        if e == zero:
            raise NotIdempotent(i, "zero is not allowed in a complete family")
        if not is_idempotent(ring, e):
            raise NotIdempotent(i)
    for i, a in enumerate(family):
        for j in range(i + 1, len(family)):
            b = family[j]
            if ring.mul(a, b) != zero or ring.mul(b, a) != zero:
                raise NotOrthogonal(i, j)
    if probes is None:
        probes = list(ring)
    for r in probes:
        right, left = zero, zero
        for e in family:
            right = ring.add(right, ring.mul(r, e))
            left = ring.add(left, ring.mul(e, r))
        if right != r or left != r:
            return False
    return True


def _prime_factor_count(n: int) -> int:
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (n > 1)


def find_complete_family(ring: FiniteRing):
    """Depth-first search over orthogonal families in enumeration order."""
    zero = ring.zero()
    idem = [e for e in ring if e != zero and is_idempotent(ring, e)]
    elems = list(ring)
    max_size = _prime_factor_count(ring.size)

    def orth(a, b):
        return ring.mul(a, b) == zero and ring.mul(b, a) == zero

    def complete(fam):
        return verify_complete_idempotents(ring, fam, elems)

    def dfs(fam, start):
        if fam and complete(fam):
            return fam
        if len(fam) >= max_size:
            return None
        for t in range(start, len(idem)):
            e = idem[t]
            if all(orth(e, f) for f in fam):
                found = dfs(fam + [e], t + 1)
                if found is not None:
                    return found
        return None

    if ring.size == 1:
        return []
    return dfs([], 0)


def has_enough_idempotents(ring: FiniteRing) -> Verdict:
    family = find_complete_family(ring)
    unital = is_unital(ring).status
    found = "yes" if family is not None else "no"
    if found != unital:
        raise InconsistentClassification("complete-family search disagrees with unitality")
    if family is None:
        return no(reason="no complete orthogonal idempotent family (cross-checked: not unital)")
    return yes(family, reason="complete family found (cross-checked: unital)")


def classify_finite(ring: FiniteRing) -> Classification:
    v = {
        "idempotent_ring": is_idempotent_ring(ring),
        "left_s_unital": is_one_sided_s_unital(ring, "left"),
        "right_s_unital": is_one_sided_s_unital(ring, "right"),
        "s_unital": is_s_unital(ring),
        "left_locally_unital": is_one_sided_locally_unital(ring, "left"),
        "right_locally_unital": is_one_sided_locally_unital(ring, "right"),
        "locally_unital": is_locally_unital_am(ring),
        "has_local_unit_set": has_set_of_local_units(ring),
        "has_enough_idempotents": has_enough_idempotents(ring),
        "left_unital": is_one_sided_unital(ring, "left"),
        "right_unital": is_one_sided_unital(ring, "right"),
        "unital": is_unital(ring),
        "regular": is_regular(ring),
    }
    check_consistency(v)
    return Classification(ring.name, ring.size, v)


# --- computable rings ----------------------------------------------------


def _one_sided_s_unital(ring: ComputableRing, samples, side):
    try:
        for m in samples:
            if ring.s_unit_for([m], side) is None:
                return no(m, reason=f"capability refuted a {side} s-unit (component-level certificate)")
        e = ring.s_unit_for(samples, side)
    except NotImplementedError:
        return unknown("no s_unit_for capability")
    if e is None or not all(fixes(ring, e, m, side) for m in samples):
        return unknown("capability unit failed verification")
    return yes(e, reason=f"s_unit_for capability, verified on {len(samples)} sample elements")


def _idempotent_unit(ring: ComputableRing, samples, side):
    try:
        for m in samples:
            if ring.idempotent_unit_for([m], side) is None:
                note = getattr(ring, "idempotent_note", None) or "capability refuted an idempotent unit"
                return no(m, reason=note)
        e = ring.idempotent_unit_for(samples, side)
    except NotImplementedError:
        return unknown("no idempotent_unit_for capability")
    if e is None or not is_idempotent(ring, e) or not all(fixes(ring, e, m, side) for m in samples):
        return unknown("capability unit failed verification")
    return yes(e, reason=f"idempotent_unit_for capability, verified on {len(samples)} sample elements")


def refute_one_sided_identity(ring: ComputableRing, side: str, bound: int) -> Verdict:
    """No `side` identity is supported within `bound`.

    The probe p sits beyond the bound; every single-position element a within
    the bound has a p = 0 (left) or p a = 0 (right). Elements supported within
    the bound are sums of such atoms, so by additivity none of them fixes p.
    """
    try:
        p = ring.probe_outside(bound)
        atoms = list(ring.atoms(bound))
    except NotImplementedError:
        return unknown("no probe_outside/atoms capability")
    zero = ring.zero()
    if p == zero:
        return unknown("probe is zero")
    for a in atoms:
        prod = ring.mul(a, p) if side == "left" else ring.mul(p, a)
        if prod != zero:
            return unknown(f"atom {ring.render(a)} does not annihilate the probe")
    return no(p, bound=bound,
              reason=f"refuted up to N={bound}: every element supported in [0,{bound}] "
                     f"sends the probe to 0 ({len(atoms)} atoms checked)")


def _local_units(ring: ComputableRing, samples) -> Verdict:
    if not ring.supports("local_units"):
        return unknown("no local-unit set capability")
    members = []
    for m in samples:
        e = ring.idempotent_unit_for([m], "both")
        if e is None or not ring.is_local_unit(e):
            return unknown("capability unit outside the designated set")
        members.append(e)
    for a in members:
        if not is_idempotent(ring, a):
            return unknown("designated unit is not idempotent")
        for b in members:
            if ring.mul(a, b) != ring.mul(b, a) or not ring.is_local_unit(vee(ring, a, b)):
                return unknown("designated set not commuting / v-closed on samples")
    return yes(members[:4], reason=f"designated set of local units verified on {len(samples)} samples "
                                   "(idempotent, commuting, v-closed, covering)")


def _enough_idempotents(ring: ComputableRing, samples, sample_bound) -> Verdict:
    if not ring.supports("complete_idempotents"):
        return unknown("no complete-family capability")
    family = ring.complete_idempotents(sample_bound)
    if not verify_complete_idempotents(ring, family, samples):
        return unknown("family failed verification on samples")
    return yes(family, reason=f"family truncated to support <= {sample_bound}, verified on samples")


def _regular(ring: ComputableRing, samples) -> Verdict:
    try:
        for r in samples:
            t = ring.quasi_inverse(r)
            if t is None:
                return no(r, reason="capability refuted a quasi-inverse (component-level certificate)")
            if ring.mul(ring.mul(r, t), r) != r:
                return unknown("quasi-inverse failed verification")
    except NotImplementedError:
        return unknown("no quasi_inverse capability")
    return yes(reason=f"quasi_inverse capability, verified on {len(samples)} samples")


def classify_computable(ring: ComputableRing, bound: int = 8,
                        sample_bound: int = DEFAULT_SAMPLE_BOUND) -> Classification:
    try:
        samples = ring.sample_elements(sample_bound)
    except NotImplementedError:
        samples = []
    v = {c: unknown("not decided") for c in CLASSES}
    if samples:
        v["left_s_unital"] = _one_sided_s_unital(ring, samples, "left")
        v["right_s_unital"] = _one_sided_s_unital(ring, samples, "right")
        if "no" not in (v["left_s_unital"].status, v["right_s_unital"].status):
            v["s_unital"] = _one_sided_s_unital(ring, samples, "both")
        v["left_locally_unital"] = _idempotent_unit(ring, samples, "left")
        v["right_locally_unital"] = _idempotent_unit(ring, samples, "right")
        v["locally_unital"] = _idempotent_unit(ring, samples, "both")
        v["has_local_unit_set"] = _local_units(ring, samples)
        v["has_enough_idempotents"] = _enough_idempotents(ring, samples, sample_bound)
        v["regular"] = _regular(ring, samples)
    for side in ("left", "right"):
        r = refute_one_sided_identity(ring, side, bound)
        if r.status == "no":
            v[f"{side}_unital"] = r
    for c in CLASSES:
        if v[c].status == "unknown" and v[c].reason == "not decided":
            v[c] = unknown("no capability decides this class")
    propagate(v)
    return Classification(ring.name, None, v, bound)


def classify(ring, bound: int = 8) -> Classification:
    if isinstance(ring, FiniteRing):
        return classify_finite(ring)
    return classify_computable(ring, bound)


def collapse_classes(c: Classification) -> dict:
    """The five classes that coincide on finite rings."""
    return {k: c.status(k) for k in ("s_unital", "locally_unital", "has_local_unit_set",
                                     "has_enough_idempotents", "unital")}


def hierarchy_chain():
    return ("unital", "has_enough_idempotents", "has_local_unit_set", "locally_unital",
            "s_unital", "idempotent_ring")

