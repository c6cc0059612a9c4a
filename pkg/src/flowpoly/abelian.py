"""Finite Abelian groups as direct products of cyclic groups.

A group is described structurally by the tuple of cyclic orders; two
descriptions with the same order but different factors (say Z4 and Z2xZ2)
are deliberately kept distinct.  Elements are tuples of reduced residues,
one per cyclic factor.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BudgetError, InputError, ParseError

GroupElement = tuple[int, ...]

# Index-level add/negate tables are only built for groups small enough that a
# quadratic table is sane; brute-force enumeration is hopeless beyond this.
_TABLE_ORDER_LIMIT = 2048

_FACTOR_RE = re.compile(r"Z(\d+)")


@dataclass(frozen=True)
class GroupSpec:
    """A finite Abelian group given as a product of cyclic groups Z_n."""

    cyclic_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = tuple(self.cyclic_orders)
        if not orders:
            raise InputError("a group needs at least one cyclic factor")
        if any(not isinstance(o, int) or o < 1 for o in orders):
            raise InputError(f"cyclic orders must be integers >= 1, got {orders!r}")
        object.__setattr__(self, "cyclic_orders", orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def zero(self) -> GroupElement:
        return (0,) * len(self.cyclic_orders)

    def validate(self, x: GroupElement) -> None:
        """Raise InputError unless x is a reduced element of this group."""
        if len(x) != len(self.cyclic_orders):
            raise InputError(
                f"element {x!r} has {len(x)} residues, expected {len(self.cyclic_orders)}"
            )
        for residue, order in zip(x, self.cyclic_orders):
            if not isinstance(residue, int) or not 0 <= residue < order:
                raise InputError(f"residue {residue!r} out of range for Z{order}")

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        self.validate(x)
        self.validate(y)
        return tuple((a + b) % o for a, b, o in zip(x, y, self.cyclic_orders))

    def negate(self, x: GroupElement) -> GroupElement:
        self.validate(x)
        return tuple((-a) % o for a, o in zip(x, self.cyclic_orders))

    def is_zero(self, x: GroupElement) -> bool:
        return all(a == 0 for a in x)

    def elements(self) -> Iterator[GroupElement]:
        """All elements exactly once, zero first, lexicographic on residues."""
        return itertools.product(*(range(o) for o in self.cyclic_orders))

    def index_of(self, x: GroupElement) -> int:
        """Position of x in the elements() stream (zero maps to 0)."""
        self.validate(x)
        index = 0
        for residue, order in zip(x, self.cyclic_orders):
            index = index * order + residue
        return index

    def element_at(self, index: int) -> GroupElement:
        if not 0 <= index < self.order:
            raise InputError(f"element index {index} out of range for group of order {self.order}")
        residues = []
        for order in reversed(self.cyclic_orders):
            residues.append(index % order)
            index //= order
        return tuple(reversed(residues))

    def __str__(self) -> str:
        return "x".join(f"Z{o}" for o in self.cyclic_orders)


@lru_cache(maxsize=256)
def residue_strides(spec: GroupSpec) -> tuple[int, ...]:
    """Mixed-radix strides turning a residue tuple into its element index."""
    strides = []
    stride = 1
    for o in reversed(spec.cyclic_orders):
        strides.append(stride)
        stride *= o
    strides.reverse()
    return tuple(strides)


@lru_cache(maxsize=64)
def index_tables(spec: GroupSpec) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Addition and negation tables on element indices.

    add_table[i][j] is the index of element_at(i) + element_at(j), and
    neg_table[i] the index of the inverse.  Built once per spec and shared;
    the hot enumeration loops run entirely on these small integers.
    """
    order = spec.order
    if order > _TABLE_ORDER_LIMIT:
        raise BudgetError(f"group of order {order} is too large for table-based enumeration")
    elems = list(spec.elements())
    strides = residue_strides(spec)

    def idx(x: GroupElement) -> int:
        return sum(r * s for r, s in zip(x, strides))

    add_table = tuple(
        tuple(idx(tuple((a + b) % o for a, b, o in zip(x, y, spec.cyclic_orders))) for y in elems)
        for x in elems
    )
    neg_table = tuple(idx(tuple((-a) % o for a, o in zip(x, spec.cyclic_orders))) for x in elems)
    return add_table, neg_table


def parse_group(text: str) -> GroupSpec:
    """Parse a group description such as "Z4" or "Z2xZ2".

    The grammar is Z<int> separated by literal lowercase "x"; factors are
    kept verbatim, so "Z2xZ3" and "Z6" give distinct specs of equal order.
    """
    parts = text.split("x")
    orders = []
    for part in parts:
        match = _FACTOR_RE.fullmatch(part)
        if match is None:
            raise ParseError(f"bad group {text!r}: expected Z<int> factors joined by 'x'")
        order = int(match.group(1))
        if order < 1:
            raise ParseError(f"bad group {text!r}: cyclic order must be >= 1")
        orders.append(order)
    return GroupSpec(tuple(orders))
