"""Guided tour of the strict inclusions

    unital < enough idempotents < local units < locally unital
           < s-unital < idempotent < all rings
"""
from __future__ import annotations

from .classify import classify
from .computable import abrams_ideal, finite_rank_matrix_ring, supported_direct_sum
from .constructions import b_l, b_r, cyclic_ring, matrix_ring, twisted_semigroup_ring, zero_ring
from .funring import function_ring

# (larger class, smaller class, how the separation is exhibited)
INCLUSIONS = (
    ("rings", "idempotent rings", "computed", "zero ring on Z2 (stage 1)"),
    ("idempotent rings", "s-unital rings", "computed", "twisted semigroup ring over F2 (stage 2)"),
    ("s-unital rings", "locally unital rings", "computed",
     "piecewise-polynomial C_c surrogate (stage 4)"),
    ("locally unital rings", "rings with sets of local units", "documented",
     "regular rings without sets of local units are cited, not constructed"),
    ("rings with sets of local units", "rings with enough idempotents", "documented",
     "needs a Zorn's-lemma maximal ideal M containing I; I itself is shown in stage 5"),
    ("rings with enough idempotents", "unital rings", "computed (bounded)",
     "finite-rank matrices over F2 (stage 5)"),
)


def _row(c, classes):
    return "  ".join(f"{k}={c.status(k)}" for k in classes)


def _expect(c, want: dict, failures: list, label: str):
    for k, v in want.items():
        if c.status(k) != v:
            failures.append(f"{label}: {k} is {c.status(k)}, expected {v}")


def hierarchy_report(bound: int = 8) -> tuple[str, bool]:
    lines = [f"hierarchy demo (probe bound N = {bound})", ""]
    failures: list[str] = []

    def stage(n, title, ring, want, show):
        c = classify(ring, bound)
        _expect(c, want, failures, ring.name)
        lines.append(f"[stage {n}] {title}")
        lines.append(f"  {ring.name}: {_row(c, show)}")
        for k in show:
            v = c[k]
            if v.status == "no" and v.bound is not None:
                lines.append(f"    {k}: refuted up to N={v.bound}")
            elif v.status == "no" and v.counterexample is not None:
                lines.append(f"    {k}: counterexample {ring.render(v.counterexample)}")
        return c

    stage(1, "rings that are not idempotent", zero_ring([2]),
          {"idempotent_ring": "no"}, ("idempotent_ring",))
    lines.append("")
    stage(2, "idempotent but neither left nor right s-unital", twisted_semigroup_ring(2),
          {"idempotent_ring": "yes", "left_s_unital": "no", "right_s_unital": "no"},
          ("idempotent_ring", "left_s_unital", "right_s_unital"))
    lines.append("")
    one_sided = ("left_s_unital", "right_s_unital", "left_unital", "right_unital")
    stage(3, "one-sided s-unital but not one-sided unital (C and D)",
          supported_direct_sum(b_l(2), "C = (+)_N B_l(F2)"),
          {"left_s_unital": "yes", "right_s_unital": "no", "left_unital": "no"}, one_sided)
    c = classify(supported_direct_sum(b_r(2), "D = (+)_N B_r(F2)"), bound)
    _expect(c, {"right_s_unital": "yes", "left_s_unital": "no", "right_unital": "no"}, failures, "D")
    lines.append(f"  {c.ring_name}: {_row(c, one_sided)}")
    lines.append("")
    stage(4, "s-unital but neither left nor right locally unital", function_ring(),
          {"s_unital": "yes", "left_locally_unital": "no", "right_locally_unital": "no"},
          ("s_unital", "left_locally_unital", "right_locally_unital"))
    lines.append("")
    rich = ("locally_unital", "has_local_unit_set", "has_enough_idempotents", "unital")
    stage(5, "local units and enough idempotents, not unital", finite_rank_matrix_ring(cyclic_ring(2)),
          {"has_local_unit_set": "yes", "has_enough_idempotents": "yes", "unital": "no"}, rich)
    c = classify(abrams_ideal(), bound)
    _expect(c, {"has_local_unit_set": "yes", "unital": "no"}, failures, "I")
    lines.append(f"  {c.ring_name}: {_row(c, rich)}")
    lines.append("  the maximal ideal M containing I (local units, not enough idempotents) "
                 "is non-constructive: documented only")
    lines.append("")
    stage(6, "unital", matrix_ring(cyclic_ring(2), 2),
          {"unital": "yes", "has_enough_idempotents": "yes", "s_unital": "yes"}, rich)
    lines.append("")
    lines.append("strict inclusions:")
    for big, small, how, note in INCLUSIONS:
        flag = "DOCUMENTED" if how == "documented" else how
        lines.append(f"  {small} < {big}: {flag} -- {note}")
    lines.append("")
    if failures:
        lines.append("FAILED:")
        lines.extend(f"  {f}" for f in failures)
    else:
        lines.append("all six stages reproduced")
    return "\n".join(lines) + "\n", not failures
