"""Finite structures given by (partial) multiplication tables, and their text format.

File format (UTF-8, ``#`` comments to end of line)::

    elements: a b c
    zero: a                  # optional
    unit: b                  # optional
    inverse: a->a b->c c->b  # optional; required if any entry is "."
    table:
    a b c
    b c a
    c a b

Row ``i``, column ``j`` holds ``i*j``.  A table without an ``inverse:`` header
is a :class:`FiniteMagma` (every entry must be defined).  With an ``inverse:``
header it is a :class:`FinitePartialMagma`, a groupoid candidate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

__all__ = [
    "MAX_ORDER",
    "UNDEFINED",
    "DesignatedElements",
    "FiniteMagma",
    "FinitePartialMagma",
    "ParseError",
    "Structure",
    "parse_structure",
    "product",
    "serialize_structure",
]

MAX_ORDER = 4096
UNDEFINED = -1
TABLE_DTYPE = np.int32

_HEADERS = ("elements", "zero", "unit", "inverse", "table")


class ParseError(ValueError):
    """Malformed structure text.  ``line`` is 1-based, or None if not tied to a line."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class DesignatedElements:
    zero: Optional[int] = None
    unit: Optional[int] = None


def _frozen_array(values, shape=None) -> np.ndarray:
    arr = np.array(values, dtype=TABLE_DTYPE)
    if shape is not None:
        arr = arr.reshape(shape)
    arr.flags.writeable = False
    return arr


def _check_names(names: Sequence[str]) -> tuple:
    names = tuple(names)
    if len(names) > MAX_ORDER:
        raise ValueError(f"order {len(names)} exceeds the cap of {MAX_ORDER}")
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise ValueError(f"element names must be non-empty strings, got {name!r}")
        if name == "." or "->" in name or "#" in name or any(c.isspace() for c in name):
            raise ValueError(f"invalid element name {name!r}")
        if name in seen:
            raise ValueError(f"duplicate element name {name!r}")
        seen.add(name)
    return names


def _check_designated(designated: DesignatedElements, n: int) -> None:
    for label in ("zero", "unit"):
        idx = getattr(designated, label)
        if idx is not None and not 0 <= idx < n:
            raise ValueError(f"designated {label} index {idx} out of range for order {n}")


@dataclass(frozen=True, eq=False)
class FiniteMagma:
    """A set with a total binary operation.  Associativity is not assumed."""

    names: tuple
    table: np.ndarray
    designated: DesignatedElements = field(default_factory=DesignatedElements)

    def __post_init__(self):
        names = _check_names(self.names)
        n = len(names)
        table = _frozen_array(self.table)
        if table.size == 0:
            table = _frozen_array(np.zeros((n, n)), (n, n))
        if table.shape != (n, n):
            raise ValueError(f"table shape {table.shape} does not match order {n}")
        if n and (table.min() < 0 or table.max() >= n):
            raise ValueError("table entries must be element indices in [0, n)")
        _check_designated(self.designated, n)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __eq__(self, other):
        if not isinstance(other, FiniteMagma):
            return NotImplemented
        return (
            self.names == other.names
            and self.designated == other.designated
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.names, self.table.tobytes(), self.designated))

    def __repr__(self):
        return f"FiniteMagma(order={self.order}, names={list(self.names)})"


@dataclass(frozen=True, eq=False)
class FinitePartialMagma:
    """A set with a partially defined product and an involutive inverse map.

    Undefined products are stored as ``UNDEFINED`` (-1) in ``table``.
    """

    names: tuple
    table: np.ndarray
    inverse: np.ndarray
    designated: DesignatedElements = field(default_factory=DesignatedElements)

    def __post_init__(self):
        names = _check_names(self.names)
        n = len(names)
        table = _frozen_array(self.table)
        if table.size == 0:
            table = _frozen_array(np.zeros((n, n)), (n, n))
        inverse = _frozen_array(self.inverse).reshape(-1)
        if table.shape != (n, n):
            raise ValueError(f"table shape {table.shape} does not match order {n}")
        if n and (table.min() < UNDEFINED or table.max() >= n):
            raise ValueError("table entries must be element indices or UNDEFINED")
        if inverse.shape != (n,):
            raise ValueError("inverse map must have one entry per element")
        if n:
            if inverse.min() < 0 or inverse.max() >= n:
                raise ValueError("inverse map entries must be element indices")
            bad = np.flatnonzero(inverse[inverse] != np.arange(n))
            if bad.size:
                raise ValueError(f"inverse map is not an involution at {names[bad[0]]!r}")
        _check_designated(self.designated, n)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "inverse", inverse)

    @property
    def order(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def composable(self, a: int, b: int) -> bool:
        return bool(self.table[a, b] != UNDEFINED)

    def __eq__(self, other):
        if not isinstance(other, FinitePartialMagma):
            return NotImplemented
        return (
            self.names == other.names
            and self.designated == other.designated
            and np.array_equal(self.table, other.table)
            and np.array_equal(self.inverse, other.inverse)
        )

    def __hash__(self):
        return hash((self.names, self.table.tobytes(), self.inverse.tobytes(), self.designated))

    def __repr__(self):
        return f"FinitePartialMagma(order={self.order}, names={list(self.names)})"


Structure = Union[FiniteMagma, FinitePartialMagma]


def product(s, a: int, b: int) -> Optional[int]:
    """Table lookup of ``a*b``; None when the product is undefined."""
    value = int(s.table[a, b])
    return None if value == UNDEFINED else value


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_structure(text: str) -> Structure:
    """Parse the line-oriented table format.

    Raises
    ------
    ParseError
        With the offending line number for duplicate names, unknown symbols,
        row/column count mismatches, non-involutive inverse maps, or a partial
        table without an ``inverse:`` header.
    """
    lines = [(no, _strip_comment(raw)) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, body) for no, body in lines if body]

    headers = {}
    rows = []
    table_line = None
    for no, body in lines:
        if table_line is not None:
            rows.append((no, body.split()))
            continue
        key, sep, rest = body.partition(":")
        key = key.strip()
        if not sep or key not in _HEADERS:
            raise ParseError(f"expected a header ({', '.join(_HEADERS)}), got {body!r}", no)
        if key in headers:
            raise ParseError(f"repeated header {key!r}", no)
        if key == "table":
            if rest.strip():
                raise ParseError("'table:' must be followed by rows on separate lines", no)
            table_line = no
        headers[key] = (no, rest.split())

    if "elements" not in headers:
        raise ParseError("missing 'elements:' header", lines[0][0] if lines else None)
    if table_line is None:
        raise ParseError("missing 'table:' block", lines[-1][0] if lines else None)

    el_line, names = headers["elements"]
    index = {}
    for name in names:
        if name in index:
            raise ParseError(f"duplicate element name {name!r}", el_line)
        if name == "." or "->" in name:
            raise ParseError(f"invalid element name {name!r}", el_line)
        index[name] = len(index)
    n = len(names)
    if n > MAX_ORDER:
        raise ParseError(f"order {n} exceeds the cap of {MAX_ORDER}", el_line)

    def lookup(symbol, no):
        try:
            return index[symbol]
        except KeyError:
            raise ParseError(f"unknown element symbol {symbol!r}", no) from None

    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else table_line)
        raise ParseError(f"expected {n} table rows, found {len(rows)}", where)
    table = np.empty((n, n), dtype=TABLE_DTYPE)
    first_undefined = None
    for i, (no, entries) in enumerate(rows):
        if len(entries) != n:
            raise ParseError(f"expected {n} entries in row, found {len(entries)}", no)
        for j, symbol in enumerate(entries):
            if symbol == ".":
                table[i, j] = UNDEFINED
                if first_undefined is None:
                    first_undefined = no
            else:
                table[i, j] = lookup(symbol, no)

    designated = {}
    for label in ("zero", "unit"):
        if label in headers:
            no, values = headers[label]
            if len(values) != 1:
                raise ParseError(f"'{label}:' takes exactly one element symbol", no)
            designated[label] = lookup(values[0], no)
    designated = DesignatedElements(**designated)

    if "inverse" not in headers:
        if first_undefined is not None:
            raise ParseError("partial table requires inverse map", first_undefined)
        return FiniteMagma(tuple(names), table, designated)

    inv_line, pairs = headers["inverse"]
    inverse = np.full(n, -1, dtype=TABLE_DTYPE)
    for pair in pairs:
        left, arrow, right = pair.partition("->")
        if not arrow or not left or not right:
            raise ParseError(f"inverse entries look like 'a->b', got {pair!r}", inv_line)
        a, b = lookup(left, inv_line), lookup(right, inv_line)
        if inverse[a] != -1:
            raise ParseError(f"inverse of {left!r} given twice", inv_line)
        inverse[a] = b
    missing = [names[i] for i in np.flatnonzero(inverse == -1)]
    if missing:
        raise ParseError(f"inverse map missing element {missing[0]!r}", inv_line)
    bad = np.flatnonzero(inverse[inverse] != np.arange(n))
    if bad.size:
        raise ParseError(f"inverse map is not an involution at {names[bad[0]]!r}", inv_line)
    return FinitePartialMagma(tuple(names), table, inverse, designated)


def serialize_structure(s) -> str:
    """Canonical text form; ``parse_structure`` inverts it exactly.

    Accepts anything exposing ``names``/``table``/``designated`` (and
    ``inverse`` for partial structures), including the validated wrappers in
    :mod:`invgroupoid.bridge`.
    """
    s = getattr(s, "carrier", s)
    names = s.names
    out = ["elements: " + " ".join(names) if names else "elements:"]
    designated = getattr(s, "designated", DesignatedElements())
    if designated.zero is not None:
        out.append(f"zero: {names[designated.zero]}")
    if designated.unit is not None:
        out.append(f"unit: {names[designated.unit]}")
    inverse = getattr(s, "inverse", None)
    if inverse is not None:
        body = " ".join(f"{names[a]}->{names[b]}" for a, b in enumerate(inverse.tolist()))
        out.append("inverse: " + body if body else "inverse:")
    out.append("table:")
    for row in s.table.tolist():
        out.append(" ".join("." if v == UNDEFINED else names[v] for v in row))
    return "\n".join(out) + "\n"
