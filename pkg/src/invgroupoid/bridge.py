"""Validated groupoids and inverse semigroups, and the constructions between them.

``s_of_g`` adjoins a zero to a groupoid and sends every non-composable
product to it.  ``g_of_s`` removes the zero from an inverse semigroup whose
nonzero idempotents are mutually orthogonal, keeping the nonzero products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import axioms
from .axioms import CheckResult, PreconditionError, Witness
from .tables import (
    TABLE_DTYPE,
    UNDEFINED,
    DesignatedElements,
    FiniteMagma,
    FinitePartialMagma,
)

__all__ = [
    "FiniteGroupoid",
    "FiniteInverseSemigroup",
    "RoundTripReport",
    "g_of_s",
    "range_",
    "roundtrip_g",
    "roundtrip_s",
    "s_of_g",
    "source",
    "unit_space",
    "zero_name",
]


@dataclass(frozen=True)
class FiniteGroupoid:
    """A partial magma that passed :func:`axioms.check_groupoid_axioms`.

    Build with :meth:`from_partial`; the raw constructor trusts its input.
    """

    carrier: FinitePartialMagma
    units: frozenset

    @classmethod
    def from_partial(cls, pm: FinitePartialMagma) -> "FiniteGroupoid":
        result = axioms.check_groupoid_axioms(pm)
        if not result:
            raise PreconditionError("groupoid axioms fail", result.witness)
        t, inv = pm.table, pm.inverse
        idx = np.arange(pm.order)
        d_image = frozenset(t[inv, idx].tolist())
        r_image = frozenset(t[idx, inv].tolist())
        if d_image != r_image:
            raise AssertionError("image of d differs from image of r")
        return cls(pm, d_image)

    names = property(lambda self: self.carrier.names)
    table = property(lambda self: self.carrier.table)
    inverse = property(lambda self: self.carrier.inverse)
    designated = property(lambda self: self.carrier.designated)
    order = property(lambda self: self.carrier.order)

    def composable(self, x: int, y: int) -> bool:
        return self.carrier.composable(x, y)


@dataclass(frozen=True)
class FiniteInverseSemigroup:
    """An associative table with unique inverses, its star map and designated elements."""

    carrier: FiniteMagma
    star: np.ndarray
    designated: DesignatedElements

    @classmethod
    def from_magma(cls, m: FiniteMagma, designated: Optional[DesignatedElements] = None):
        """Validate ``m``.  Designated elements default to the magma's own
        headers, falling back to the detected zero and unit."""
        assoc = axioms.is_associative(m)
        if not assoc:
            raise PreconditionError("table is not associative", assoc.witness)
        star = axioms.star_map(m)
        if designated is None:
            zero, unit = m.designated.zero, m.designated.unit
            if zero is None:
                zero = axioms.find_zero(m)
            if unit is None:
                unit = axioms.find_unit(m)
            designated = DesignatedElements(zero, unit)
        t = m.table
        if designated.zero is not None:
            z = designated.zero
            if not (np.all(t[z, :] == z) and np.all(t[:, z] == z)):
                raise PreconditionError(f"designated zero {m.names[z]!r} is not absorbing")
        if designated.unit is not None:
            u = designated.unit
            idx = np.arange(m.order)
            if not (np.all(t[u, :] == idx) and np.all(t[:, u] == idx)):
                raise PreconditionError(f"designated unit {m.names[u]!r} is not neutral")
        star.flags.writeable = False
        return cls(m, star, designated)

    names = property(lambda self: self.carrier.names)
    table = property(lambda self: self.carrier.table)
    order = property(lambda self: self.carrier.order)

    def __eq__(self, other):
        if not isinstance(other, FiniteInverseSemigroup):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.designated == other.designated
            and np.array_equal(self.star, other.star)
        )

    def __hash__(self):
        return hash((self.carrier, self.designated))

    def magma(self) -> FiniteMagma:
        """The carrier table with this semigroup's designated elements attached."""
        return FiniteMagma(self.carrier.names, self.carrier.table, self.designated)


def source(g: FiniteGroupoid, x: int) -> int:
    """``d(x) = x^-1 x``."""
    return int(g.table[g.inverse[x], x])


def range_(g: FiniteGroupoid, x: int) -> int:
    """``r(x) = x x^-1``."""
    return int(g.table[x, g.inverse[x]])


def unit_space(g: FiniteGroupoid) -> frozenset:
    return frozenset(source(g, x) for x in range(g.order))


def zero_name(taken) -> str:
    name = "0"
    taken = set(taken)
    while name in taken:
        name += "'"
    return name


def s_of_g(g: FiniteGroupoid) -> FiniteInverseSemigroup:
    """Adjoin a zero (appended last) and send non-composable products to it."""
    if not isinstance(g, FiniteGroupoid):
        g = FiniteGroupoid.from_partial(g)
    n = g.order
    z = n
    table = np.full((n + 1, n + 1), z, dtype=TABLE_DTYPE)
    table[:n, :n] = np.where(g.table == UNDEFINED, z, g.table)
    star = np.append(np.asarray(g.inverse, dtype=TABLE_DTYPE), TABLE_DTYPE(z))
    star.flags.writeable = False
    units = g.units
    unit = next(iter(units)) if len(units) == 1 else None
    designated = DesignatedElements(zero=z, unit=unit)
    names = g.names + (zero_name(g.names),)
    return FiniteInverseSemigroup(FiniteMagma(names, table, designated), star, designated)


def _orthogonality_or_raise(s: FiniteInverseSemigroup) -> int:
    z = s.designated.zero
    if z is None:
        raise PreconditionError("g_of_s requires a designated zero")
    result = axioms.nonzero_idempotents_orthogonal(s, z)
    if not result:
        raise PreconditionError("nonzero idempotents are not mutually orthogonal", result.witness)
    return z


def g_of_s(s) -> FiniteGroupoid:
    """Remove the zero; ``(x, y)`` is composable iff ``xy != 0``."""
    if not isinstance(s, FiniteInverseSemigroup):
        s = FiniteInverseSemigroup.from_magma(s)
    z = _orthogonality_or_raise(s)
    keep = np.array([i for i in range(s.order) if i != z], dtype=np.int64)
    position = np.full(s.order, UNDEFINED, dtype=TABLE_DTYPE)
    position[keep] = np.arange(keep.size)
    t = s.table
    star = s.star
    sub = t[np.ix_(keep, keep)]
    nonzero = sub != z
    table = np.where(nonzero, position[sub], UNDEFINED).astype(TABLE_DTYPE)

    # composability equals x*x = yy*
    left_idem = t[star[keep], keep]  # x*x
    right_idem = t[keep, star[keep]]  # yy*
    if not np.array_equal(nonzero, left_idem[:, None] == right_idem[None, :]):
        raise AssertionError("composability differs from x*x = yy*")
    # no zero divisors along composable chains: xy, yz nonzero implies xyz nonzero
    chains = nonzero[:, :, None] & nonzero[None, :, :]
    xyz = t[sub[:, :, None], keep[None, None, :]]
    if np.any(chains & (xyz == z)):
        raise AssertionError("composable chain multiplies to zero")

    pm = FinitePartialMagma(
        tuple(s.names[i] for i in keep),
        table,
        position[star[keep]],
    )
    g = FiniteGroupoid.from_partial(pm)
    # composability equals d(x) = r(y)
    d = np.array([source(g, x) for x in range(g.order)], dtype=np.int64)
    r = np.array([range_(g, x) for x in range(g.order)], dtype=np.int64)
    if not np.array_equal(nonzero, d[:, None] == r[None, :]):
        raise AssertionError("composability differs from d(x) = r(y)")
    return g


@dataclass(frozen=True)
class RoundTripReport:
    """``mismatch`` names the first differing cell ``(i, j)``, or ``(i,)`` for
    an inverse/star or name mismatch at element ``i``."""

    identical: bool
    mismatch: Optional[tuple] = None
    detail: str = ""

    def __bool__(self):
        return self.identical


def roundtrip_g(g: FiniteGroupoid) -> RoundTripReport:
    """Check ``g_of_s(s_of_g(g)) == g`` table-for-table."""
    if not isinstance(g, FiniteGroupoid):
        g = FiniteGroupoid.from_partial(g)
    back = g_of_s(s_of_g(g))
    if back.order != g.order:
        return RoundTripReport(False, None, f"order {back.order} != {g.order}")
    for i, (a, b) in enumerate(zip(back.names, g.names)):
        if a != b:
            return RoundTripReport(False, (i,), f"name {a!r} != {b!r}")
    cells = np.argwhere(back.table != g.table)
    if cells.size:
        i, j = (int(v) for v in cells[0])
        return RoundTripReport(False, (i, j), "product differs")
    bad = np.flatnonzero(back.inverse != g.inverse)
    if bad.size:
        return RoundTripReport(False, (int(bad[0]),), "inverse differs")
    return RoundTripReport(True)


def roundtrip_s(s) -> RoundTripReport:
    """Check ``s_of_g(g_of_s(s)) == s`` up to renaming and relocating the zero.

    The comparison bijection keeps the nonzero elements in their order and
    sends the zero of ``s`` to the zero appended by ``s_of_g``.
    """
    if not isinstance(s, FiniteInverseSemigroup):
        s = FiniteInverseSemigroup.from_magma(s)
    z = _orthogonality_or_raise(s)
    back = s_of_g(g_of_s(s))
    n = s.order
    if back.order != n:
        return RoundTripReport(False, None, f"order {back.order} != {n}")
    to_back = np.empty(n, dtype=np.int64)
    to_back[[i for i in range(n) if i != z]] = np.arange(n - 1)
    to_back[z] = back.designated.zero
    for i in range(n):
        if i != z and s.names[i] != back.names[to_back[i]]:
            return RoundTripReport(False, (i,), "name differs")
    mapped = to_back[s.table]
    expected = back.table[np.ix_(to_back, to_back)]
    cells = np.argwhere(mapped != expected)
    if cells.size:
        i, j = (int(v) for v in cells[0])
        return RoundTripReport(False, (i, j), "product differs")
    bad = np.flatnonzero(to_back[s.star] != back.star[to_back])
    if bad.size:
        return RoundTripReport(False, (int(bad[0]),), "star differs")
    return RoundTripReport(True)
