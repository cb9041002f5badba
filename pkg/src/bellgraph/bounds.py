"""Exact or symbolic natural numbers for astronomically large bounds.

A bound is either a Python ``int`` (exact) or a :class:`Sym` node built from
``add``, ``mul`` and ``pow``. Nodes collapse to ``int`` whenever the result
has fewer than :data:`EXACT_BITS` bits, so small cases stay exact. Every
bound supports ``log2`` estimates (mpmath, arbitrary exponent range) and
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Union

import mpmath

EXACT_BITS = 10**6
# log2(x) is materialised only while log2(log2(x)) stays below this, which
# keeps the mpmath exponent under MAX_LOG_LEVEL bits
MAX_LOG_LEVEL = 10**5

Bound = Union[int, "Sym"]


def log2(x: Bound) -> mpmath.mpf:
    """Base-2 logarithm (``-inf`` for zero)."""
    if isinstance(x, Sym):
        return x.log2()
    if x < 0:
        raise ValueError("bounds are natural numbers")
    if x == 0:
        return mpmath.mpf("-inf")
    shift = max(0, x.bit_length() - 100)
    return mpmath.log(mpmath.mpf(x >> shift), 2) + shift


def _log2_sum_exp2(logs) -> mpmath.mpf:
    """``log2(sum 2^l)``, dropping terms too small to matter."""
    logs = [l for l in logs if l != mpmath.ninf]
    if not logs:
        return mpmath.ninf
    top = max(logs)
    rest = [l - top for l in logs if l - top > -200]
    return top + mpmath.log(mpmath.fsum(mpmath.power(2, d) for d in rest), 2)


def log2log2(x: Bound) -> mpmath.mpf:
    """``log2(log2(x))`` for ``x >= 1``, computed without forming ``log2(x)`` when that is huge."""
    if isinstance(x, int):
        if x < 1:
            raise ValueError("log2log2 needs x >= 1")
        return mpmath.log(log2(x), 2) if x > 1 else mpmath.ninf
    if x.op == "add":
        parts = [log2log2(a) for a in x.args]
        if max(parts) <= MAX_LOG_LEVEL:
            return mpmath.log(_log2_sum_exp2([log2(a) for a in x.args]), 2)
        return max(parts)
    if x.op == "mul":
        return _log2_sum_exp2([log2log2(a) for a in x.args])
    base, exp = x.args
    return log2log2(base) + log2(exp)


def log2log2log2(x: Bound) -> mpmath.mpf:
    """Third iterated logarithm; lower-order terms are dropped once they cannot matter."""
    try:
        return mpmath.log(log2log2(x), 2)
    except OverflowError:
        pass
    if x.op in ("add", "mul"):
        return max(log2log2log2(a) for a in x.args if not (isinstance(a, int) and a < 4))
    base, exp = x.args
    return log2log2(exp)


def magnitude(x: Bound) -> tuple[int, mpmath.mpf]:
    """``(level, value)`` with ``value`` the ``level``-fold iterated log2 of ``x``,
    using the smallest level that can be held."""
    for level, fn in ((1, log2), (2, log2log2), (3, log2log2log2)):
        try:
            return level, fn(x)
        except OverflowError:
            continue
    raise OverflowError(f"{render(x)} is beyond a triple-log estimate")


@total_ordering
@dataclass(frozen=True, eq=False)
class Sym:
    """Symbolic ``op(args)`` with ``op`` one of ``add``, ``mul``, ``pow``."""

    op: str
    args: tuple

    def log2(self) -> mpmath.mpf:
        if log2log2(self) > MAX_LOG_LEVEL:
            raise OverflowError(f"log2 of {render(self)} is too large to hold; use log2log2")
        if self.op == "add":
            return _log2_sum_exp2([log2(a) for a in self.args])
        if self.op == "mul":
            return mpmath.fsum(log2(a) for a in self.args)
        base, exp = self.args
        return log2(base) * to_mpf(exp)

    def log2log2(self) -> mpmath.mpf:
        return log2log2(self)

    def __eq__(self, other):
        if isinstance(other, Sym):
            return self.op == other.op and self.args == other.args
        return False

    def __hash__(self):
        return hash((self.op, self.args))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Sym({render(self)})"


def to_mpf(x: Bound) -> mpmath.mpf:
    if isinstance(x, int):
        return mpmath.mpf(x)
    return mpmath.power(2, x.log2())


def is_exact(x: Bound) -> bool:
    return isinstance(x, int)


def add(*xs: Bound) -> Bound:
    if all(isinstance(x, int) for x in xs):
        return sum(xs)
    return Sym("add", tuple(xs))


def mul(*xs: Bound) -> Bound:
    if all(isinstance(x, int) for x in xs):
        out = 1
        for x in xs:
            out *= x
        return out
    if any(isinstance(x, int) and x == 0 for x in xs):
        return 0
    return Sym("mul", tuple(xs))


def power(base: Bound, exp: Bound) -> Bound:
    if isinstance(exp, int) and exp == 0:
        return 1
    if isinstance(base, int) and base in (0, 1):
        return base
    if isinstance(base, int) and isinstance(exp, int):
        if exp * base.bit_length() < EXACT_BITS or exp * log2(base) < EXACT_BITS:
            return base**exp
    return Sym("pow", (base, exp))


def compare(a: Bound, b: Bound) -> int:
    """-1, 0 or 1; exact when both sides are ``int``, by log2 estimate otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        return (a > b) - (a < b)
    if isinstance(a, Sym) and a == b:
        return 0
    for fn in (log2, log2log2, log2log2log2):
        try:
            la, lb = fn(a), fn(b)
            break
        except OverflowError:
            continue
    else:
        raise OverflowError("bounds too large to compare")
    return (la > lb) - (la < lb)


def greater(a: Bound, b: Bound) -> bool:
    return compare(a, b) > 0


def render(x: Bound) -> str:
    """Exact decimal for ints, nested ``2^(...)`` style for symbolic nodes."""
    if isinstance(x, int):
        if x.bit_length() > 256:
            if x & (x - 1) == 0:
                return f"2^({x.bit_length() - 1})"
            return f"~2^({_short_log(x)})"
        return str(x)
    if x.op == "add":
        return " + ".join(_wrap(a) for a in x.args)
    if x.op == "mul":
        return "*".join(_wrap(a) for a in x.args)
    base, exp = x.args
    return f"{_wrap(base)}^({render(exp)})"


def _short_log(x: int) -> str:
    return mpmath.nstr(log2(x), 12)


def _wrap(x: Bound) -> str:
    if isinstance(x, Sym) and x.op in ("add", "mul"):
        return f"({render(x)})"
    return render(x)


def describe(x: Bound) -> str:
    """Rendering plus a floating log2 (exact ints) or log2(log2) estimate."""
    if isinstance(x, int) and x.bit_length() <= 256:
        return str(x)
    level, value = magnitude(x)
    if level == 1:
        value, level = mpmath.log(value, 2), 2
    label = "log2(" * level + "x" + ")" * level
    return f"{render(x)}  [{label} ~ {mpmath.nstr(value, 10)}]"
