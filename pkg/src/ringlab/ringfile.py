"""Line-oriented ring description files and element syntax.

    # comment
    ring B_l
    additive 2 2
    gens u w                  # optional generator names
    default zero              # optional: undeclared products are 0
    mul e1 e1 = (1,0)
    mul e1 e2 = (0,1)
"""
from __future__ import annotations

import re

from .core import FiniteRing, RingElement, make_finite_ring
from .errors import ArityMismatch, MissingProduct, RingFileSyntaxError

_INT = re.compile(r"-?\d+")
_MUL = re.compile(r"^mul\s+e(\d+)\s+e(\d+)\s*=\s*\(([^)]*)\)\s*$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _col(raw: str, token: str) -> int:
    idx = raw.find(token)
    return idx + 1 if idx >= 0 else 1


def _coords(text: str, lineno: int, raw: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        if not _INT.fullmatch(part):
            raise RingFileSyntaxError(lineno, _col(raw, part) if part else 1,
                                      f"expected an integer coordinate, got {part!r}")
        out.append(int(part))
    return tuple(out)


def parse_ring_file(text: str) -> FiniteRing:
    name = None
    orders = None
    names = None
    default_zero = False
    products: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        if head == "ring":
            parts = line.split()
            if len(parts) != 2 or name is not None:
                raise RingFileSyntaxError(lineno, 1, "expected exactly one 'ring NAME' line")
            name = parts[1]
        elif head == "additive":
            if orders is not None:
                raise RingFileSyntaxError(lineno, 1, "duplicate 'additive' line")
            vals = line.split()[1:]
            for v in vals:
                if not v.isdigit() or int(v) < 2:
                    raise RingFileSyntaxError(lineno, _col(raw, v), f"bad cyclic order {v!r}")
            orders = [int(v) for v in vals]
        elif head == "gens":
            vals = line.split()[1:]
            for v in vals:
                if not _NAME.match(v):
                    raise RingFileSyntaxError(lineno, _col(raw, v), f"bad generator name {v!r}")
            names = vals
        elif head == "default":
            if line.split() != ["default", "zero"]:
                raise RingFileSyntaxError(lineno, 1, "only 'default zero' is supported")
            default_zero = True
        elif head == "mul":
            if orders is None:
                raise RingFileSyntaxError(lineno, 1, "'mul' before 'additive'")
            m = _MUL.match(line)
            if m is None:
                raise RingFileSyntaxError(lineno, 1, "expected 'mul e<i> e<j> = (c1,...,ck)'")
            i, j = int(m.group(1)), int(m.group(2))
            for g in (i, j):
                if not 1 <= g <= len(orders):
                    raise RingFileSyntaxError(lineno, _col(raw, f"e{g}"), f"no generator e{g}")
            if (i, j) in products:
                raise RingFileSyntaxError(lineno, 1, f"duplicate product e{i} e{j}")
            products[i, j] = _coords(m.group(3), lineno, raw)
        else:
            raise RingFileSyntaxError(lineno, _col(raw, head), f"unknown directive {head!r}")
    if name is None:
        raise RingFileSyntaxError(1, 1, "missing 'ring NAME' line")
    if orders is None:
        raise RingFileSyntaxError(1, 1, "missing 'additive' line")
    k = len(orders)
    table = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, k + 1):
            if (i, j) in products:
                row.append(products[i, j])
            elif default_zero:
                row.append((0,) * k)
            else:
                raise MissingProduct(i, j)
        table.append(row)
    return make_finite_ring(orders, table, name, names)


def export_ring(ring: FiniteRing) -> str:
    lines = [f"ring {ring.name.replace(' ', '_')}",
             "additive" + "".join(f" {n}" for n in ring.orders)]
    if ring.names is not None:
        lines.append("gens " + " ".join(ring.names))
    for i, row in enumerate(ring.table, 1):
        for j, c in enumerate(row, 1):
            lines.append(f"mul e{i} e{j} = ({','.join(map(str, c.coords))})")
    return "\n".join(lines) + "\n"


_TERM = re.compile(r"^(-?\d*)\*?([A-Za-z_][A-Za-z0-9_]*)$")


def parse_element(ring: FiniteRing, text: str) -> RingElement:
    """`(c1,...,ck)` in coordinates, or `(E01+2E10)` in generator names."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise RingFileSyntaxError(1, 1, f"element must be parenthesised: {text!r}")
    body = s[1:-1].strip()
    if body and not re.fullmatch(r"[-\d,\s]+", body):
        return _parse_named(ring, body, text)
    coords = _coords(body, 1, s)
    if len(coords) != ring.rank:
        raise ArityMismatch(f"{text!r} has {len(coords)} coordinates, ring has {ring.rank}")
    return ring.element(coords)


def _parse_named(ring: FiniteRing, body: str, text: str) -> RingElement:
    names = ring.names or tuple(f"e{i + 1}" for i in range(ring.rank))
    index = {n: i for i, n in enumerate(names)}
    acc = ring.zero()
    for term in body.replace(" ", "").split("+"):
        m = _TERM.match(term)
        if m is None or m.group(2) not in index:
            raise RingFileSyntaxError(1, _col(text, term) if term else 1,
                                      f"unknown generator term {term!r}")
        c = m.group(1)
        coef = 1 if c in ("", "+") else -1 if c == "-" else int(c)
        acc = acc + ring.generator(index[m.group(2)]).scale(coef)
    return acc


def parse_elements(ring: FiniteRing, text: str) -> list[RingElement]:
    return [parse_element(ring, part) for part in text.split(";") if part.strip()]
