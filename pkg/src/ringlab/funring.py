"""Continuous, compactly supported piecewise polynomials with rational data.

This ring is closed under pointwise + and x, has exact equality, is
s-unital (trapezoid bumps act as local units) and has no nonzero
idempotents: on each piece p^2 = p forces p in {0, 1}, and continuity
together with compact support then forces the function to vanish.
"""
from __future__ import annotations

import bisect
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .computable import ComputableRing
from .errors import BadInterval, Discontinuous, EmptyInput, RingFileSyntaxError

Poly = tuple  # coefficients, constant term first, no trailing zeros


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_eval(p: Poly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class PiecewisePolynomial:
    """Piece i lives on [breakpoints[i], breakpoints[i+1]]; zero outside.

    Construction checks continuity (including the zero boundary values) and
    stores the canonical form: equal neighbours merged, zero ends trimmed.
    """

    breakpoints: tuple
    pieces: tuple

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        pieces = tuple(_trim(p) for p in self.pieces)
        if bps and len(pieces) != len(bps) - 1:
            raise Discontinuous("need exactly one piece per interval")
        if not bps and pieces:
            raise Discontinuous("pieces without breakpoints")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise BadInterval("breakpoints must be strictly increasing")
        if pieces:
            if poly_eval(pieces[0], bps[0]) != 0 or poly_eval(pieces[-1], bps[-1]) != 0:
                raise Discontinuous("function must vanish at both ends of its support")
            for i in range(1, len(pieces)):
                if poly_eval(pieces[i - 1], bps[i]) != poly_eval(pieces[i], bps[i]):
                    raise Discontinuous(f"jump at x = {bps[i]}")
        bps, pieces = _canonical(bps, pieces)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def zero(cls) -> PiecewisePolynomial:
        return cls((), ())

    def is_zero(self) -> bool:
        return not self.pieces

    @property
    def support(self):
        """(start, end) of the closed hull of the support, or None for 0."""
        if not self.pieces:
            return None
        return self.breakpoints[0], self.breakpoints[-1]

    def piece_at(self, lo, hi) -> Poly:
        """The polynomial on [lo, hi], which must sit inside one interval."""
        bps = self.breakpoints
        if not bps or hi <= bps[0] or lo >= bps[-1]:
            return ()
        i = bisect.bisect_right(bps, lo) - 1
        return self.pieces[i]

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        bps = self.breakpoints
        if not bps or x < bps[0] or x > bps[-1]:
            return Fraction(0)
        i = min(bisect.bisect_right(bps, x) - 1, len(self.pieces) - 1)
        return poly_eval(self.pieces[i], x)

    def _combine(self, other, op) -> PiecewisePolynomial:
        bps = sorted(set(self.breakpoints) | set(other.breakpoints))
        pieces = [op(self.piece_at(a, b), other.piece_at(a, b)) for a, b in zip(bps, bps[1:])]
        return PiecewisePolynomial(tuple(bps), tuple(pieces))

    def __add__(self, other):
        return self._combine(other, poly_add)

    def __mul__(self, other):
        return self._combine(other, poly_mul)

    def __neg__(self):
        return PiecewisePolynomial(self.breakpoints, tuple(poly_neg(p) for p in self.pieces))

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return format_pp(self)


def _canonical(bps, pieces):
    bps, pieces = list(bps), list(pieces)
    while pieces and not pieces[0]:
        pieces.pop(0)
        bps.pop(0)
    while pieces and not pieces[-1]:
        pieces.pop()
        bps.pop()
    if not pieces:
        return (), ()
    out_b, out_p = [bps[0]], [pieces[0]]
    for b, p in zip(bps[1:], pieces[1:]):
        if p == out_p[-1]:
            continue  # same polynomial continues; drop breakpoint b
        out_b.append(b)
        out_p.append(p)
    out_b.append(bps[-1])
    return tuple(out_b), tuple(out_p)


def pp_add(f: PiecewisePolynomial, g: PiecewisePolynomial) -> PiecewisePolynomial:
    return f + g


def pp_mul(f: PiecewisePolynomial, g: PiecewisePolynomial) -> PiecewisePolynomial:
    return f * g


def pp_is_idempotent(f: PiecewisePolynomial) -> bool:
    return f * f == f


def bump(a, b) -> PiecewisePolynomial:
    """Trapezoid: 0 at a-1, 1 on [a, b], 0 again at b+1."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise BadInterval(f"bump needs a < b, got [{a}, {b}]")
    return PiecewisePolynomial((a - 1, a, b, b + 1), ((1 - a, 1), (1,), (b + 1, -1)))


def tent(a, b) -> PiecewisePolynomial:
    """Piecewise linear hat on [a, b] peaking with value 1 at the midpoint."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise BadInterval(f"tent needs a < b, got [{a}, {b}]")
    m = (a + b) / 2
    s = 1 / (m - a)
    return PiecewisePolynomial((a, m, b), ((-a * s, s), (b * s, -s)))


def polynomial_on(a, b, coeffs) -> PiecewisePolynomial:
    """One polynomial on [a, b], zero elsewhere (must vanish at a and b)."""
    return PiecewisePolynomial((a, b), (tuple(coeffs),))


def s_unit_for(elements) -> PiecewisePolynomial:
    """A bump that fixes every given function (the ring is commutative)."""
    elements = list(elements)
    if not elements:
        raise EmptyInput("s_unit_for needs at least one element")
    spans = [f.support for f in elements if not f.is_zero()]
    if not spans:
        return bump(0, 1)
    lo = min(s[0] for s in spans)
    hi = max(s[1] for s in spans)
    if lo == hi:
        hi = lo + 1
    return bump(lo, hi)


# --- text syntax --------------------------------------------------------

_NUM = r"-?\d+(?:/\d+)?"
_PIECE = re.compile(rf"^piece\s*\[\s*({_NUM})\s*,\s*({_NUM})\s*\]((?:\s+{_NUM})*)\s*$")


def parse_pp(text: str) -> PiecewisePolynomial:
    """Lines `piece [a,b] c0 c1 ...`; gaps between pieces are zero."""
    spans = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _PIECE.match(line)
        if m is None:
            raise RingFileSyntaxError(lineno, 1, f"expected 'piece [a,b] c0 c1 ...', got {line!r}")
        a, b = Fraction(m.group(1)), Fraction(m.group(2))
        coeffs = tuple(Fraction(c) for c in m.group(3).split())
        spans.append((a, b, coeffs))
    spans.sort()
    bps, pieces = [], []
    for a, b, coeffs in spans:
        if bps and a < bps[-1]:
            raise BadInterval(f"piece [{a},{b}] overlaps its predecessor")
        if bps and a > bps[-1]:
            pieces.append(())
            bps.append(a)
        elif not bps:
            bps.append(a)
        pieces.append(coeffs)
        bps.append(b)
    return PiecewisePolynomial(tuple(bps), tuple(pieces))


def format_pp(f: PiecewisePolynomial) -> str:
    if f.is_zero():
        return ""
    lines = []
    for a, b, p in zip(f.breakpoints, f.breakpoints[1:], f.pieces):
        coeffs = " ".join(str(c) for c in p) if p else "0"
        lines.append(f"piece [{a},{b}] {coeffs}")
    return "\n".join(lines)


def random_pp(rng: random.Random, max_pieces: int = 4, max_degree: int = 2,
              lo: int = -6, hi: int = 6) -> PiecewisePolynomial:
    """Random continuous compactly supported element.

    Values at breakpoints are interpolated linearly, plus a bubble term that
    vanishes at both ends of each piece.
    """
    m = rng.randint(1, max_pieces)
    denom = rng.choice([1, 2, 3, 4])
    cuts = sorted(rng.sample(range(lo * denom, hi * denom), m + 1))
    bps = [Fraction(c, denom) for c in cuts]
    vals = [Fraction(0)] + [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(m - 1)] + [Fraction(0)]
    pieces = []
    for i in range(m):
        a, b = bps[i], bps[i + 1]
        slope = (vals[i + 1] - vals[i]) / (b - a)
        line = (vals[i] - slope * a, slope)
        deg = rng.randint(0, max_degree)
        q = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(deg))
        bubble = poly_mul(poly_mul((-a, 1), (-b, 1)), q)
        pieces.append(poly_add(line, bubble))
    return PiecewisePolynomial(tuple(bps), tuple(pieces))


class FunctionRing(ComputableRing):
    """The piecewise-polynomial ring behind the ComputableRing interface."""

    name = "C_c surrogate (piecewise polynomials)"
    capabilities = frozenset({"s_unit_for", "idempotent_unit_for", "sample_elements"})
    idempotent_note = ("on every piece p^2 = p forces p = 0 or 1; continuity and "
                       "compact support then force f = 0")

    def zero(self):
        return PiecewisePolynomial.zero()

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def render(self, a):
        return format_pp(a).replace("\n", "; ") or "0"

    def s_unit_for(self, elements, side="both"):
        return s_unit_for(elements)

    def idempotent_unit_for(self, elements, side="both"):
        # 0 is the only idempotent, and it fixes only 0
        if all(f.is_zero() for f in elements):
            return self.zero()
        return None

    def sample_elements(self, bound):
        out = []
        for k in range(-bound, bound + 1):
            out.append(tent(k, k + 2))
            out.append(polynomial_on(k, k + 1, (-k * (k + 1), 2 * k + 1, -1)))
        out.append(bump(-bound, bound))
        return out


def function_ring() -> FunctionRing:
    return FunctionRing()
