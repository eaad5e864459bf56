"""Axiom checks for finite (partial) magmas, each failure backed by a witness.

Witnesses always name the lexicographically first offending elements,
scanning row-major, so reports are reproducible.  :func:`reproduces`
re-evaluates a witness against a structure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import kernels
from .tables import UNDEFINED

__all__ = [
    "CheckResult",
    "Classification",
    "GroupoidReport",
    "PreconditionError",
    "VagnerReport",
    "Witness",
    "WitnessKind",
    "check_groupoid_axioms",
    "check_vagner",
    "classify",
    "find_unit",
    "find_zero",
    "has_unique_inverses",
    "idempotents",
    "idempotents_commute",
    "inverses_of",
    "is_associative",
    "is_regular",
    "nonzero_idempotents_orthogonal",
    "reproduces",
]


class WitnessKind(enum.Enum):
    NON_ASSOCIATIVE = "non-associative"
    NO_INVERSE = "no-inverse"
    MULTIPLE_INVERSES = "multiple-inverses"
    NONCOMMUTING_IDEMPOTENTS = "noncommuting-idempotents"
    NONORTHOGONAL_IDEMPOTENTS = "nonorthogonal-idempotents"
    GROUPOID_AXIOM = "groupoid-axiom"
    COMPOSABILITY_MISMATCH = "composability-mismatch"


@dataclass(frozen=True)
class Witness:
    """Concrete evidence that a check failed.

    ``clause`` is only set for groupoid-axiom witnesses ("i", "ii", "iii");
    composability mismatches are clause "iv".
    """

    kind: WitnessKind
    elements: tuple
    clause: Optional[str] = None

    def describe(self, names) -> str:
        parts = ",".join(names[e] for e in self.elements)
        text = f"{self.kind.value}:{parts}"
        return f"{text} clause={self.clause}" if self.clause else text


class CheckResult(NamedTuple):
    ok: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.ok


PASS = CheckResult(True)


class PreconditionError(ValueError):
    """Input does not meet an operation's precondition; carries a witness when one exists."""

    def __init__(self, message: str, witness: Optional[Witness] = None):
        super().__init__(message)
        self.witness = witness


def _table(s) -> np.ndarray:
    return s if isinstance(s, np.ndarray) else s.table


def _require_associative(s, what):
    result = is_associative(s)
    if not result:
        raise PreconditionError(f"{what} requires an associative table", result.witness)


# --- total tables ----------------------------------------------------------------


def is_associative(s) -> CheckResult:
    t = _table(s)
    a, b, c = kernels.first_nonassociative(np.ascontiguousarray(t, dtype=np.int64))
    if a < 0:
        return PASS
    return CheckResult(False, Witness(WitnessKind.NON_ASSOCIATIVE, (int(a), int(b), int(c))))


def _inverse_matrix(t: np.ndarray) -> np.ndarray:
    # m[x, y]: y is an inverse of x, i.e. xyx = x and yxy = y
    n = t.shape[0]
    idx = np.arange(n)
    xyx = t[t, idx[:, None]]  # t[t[x, y], x]
    yxy = t[t.T, idx[None, :]]  # t[t[y, x], y]
    return (xyx == idx[:, None]) & (yxy == idx[None, :])


def inverses_of(s, x: int) -> frozenset:
    t = _table(s)
    return frozenset(int(y) for y in np.flatnonzero(_inverse_matrix(t)[x]))


def is_regular(s) -> CheckResult:
    t = _table(s)
    counts = _inverse_matrix(t).sum(axis=1)
    missing = np.flatnonzero(counts == 0)
    if missing.size:
        return CheckResult(False, Witness(WitnessKind.NO_INVERSE, (int(missing[0]),)))
    return PASS


def has_unique_inverses(s) -> CheckResult:
    """Every element has exactly one inverse.

    The witness for an element with several inverses is ``(x, y1, y2)`` with
    ``y1 < y2`` its two smallest inverses.
    """
    inv = _inverse_matrix(_table(s))
    counts = inv.sum(axis=1)
    bad = np.flatnonzero(counts != 1)
    if not bad.size:
        return PASS
    x = int(bad[0])
    if counts[x] == 0:
        return CheckResult(False, Witness(WitnessKind.NO_INVERSE, (x,)))
    y1, y2 = np.flatnonzero(inv[x])[:2]
    return CheckResult(False, Witness(WitnessKind.MULTIPLE_INVERSES, (x, int(y1), int(y2))))


def star_map(s) -> np.ndarray:
    """The unique-inverse map ``x -> x*``; raises if some inverse is missing or not unique."""
    result = has_unique_inverses(s)
    if not result:
        raise PreconditionError("inverses are not unique", result.witness)
    return np.argmax(_inverse_matrix(_table(s)), axis=1).astype(np.int32)


def idempotents(s) -> frozenset:
    t = _table(s)
    n = t.shape[0]
    found = frozenset(int(e) for e in np.flatnonzero(t[np.arange(n), np.arange(n)] == np.arange(n)))
    if n and has_unique_inverses(s):
        star = np.argmax(_inverse_matrix(t), axis=1)
        right = frozenset(t[np.arange(n), star].tolist())
        left = frozenset(t[star, np.arange(n)].tolist())
        if not (found == right == left):
            raise AssertionError("idempotent set differs from {xx*} or {x*x}")
    return found


def idempotents_commute(s) -> CheckResult:
    t = _table(s)
    n = t.shape[0]
    idem = t[np.arange(n), np.arange(n)] == np.arange(n)
    bad = np.argwhere(np.outer(idem, idem) & (t != t.T))
    if bad.size:
        e, f = bad[0]
        return CheckResult(False, Witness(WitnessKind.NONCOMMUTING_IDEMPOTENTS, (int(e), int(f))))
    return PASS


@dataclass(frozen=True)
class VagnerReport:
    unique_inverses: CheckResult
    idempotents_commute: CheckResult

    @property
    def vagner_consistent(self) -> bool:
        return self.unique_inverses.ok == self.idempotents_commute.ok


def check_vagner(s) -> VagnerReport:
    """Compare uniqueness of inverses with commutation of idempotents.

    ``vagner_consistent`` must come out true for every associative regular
    table; a false value means a bug in one of the two checks.
    """
    _require_associative(s, "check_vagner")
    regular = is_regular(s)
    if not regular:
        raise PreconditionError("check_vagner requires a regular semigroup", regular.witness)
    return VagnerReport(has_unique_inverses(s), idempotents_commute(s))


def find_zero(s) -> Optional[int]:
    t = _table(s)
    n = t.shape[0]
    idx = np.arange(n)
    hits = np.flatnonzero(np.all(t == idx[:, None], axis=1) & np.all(t == idx[None, :], axis=0))
    if hits.size > 1:
        raise AssertionError("a magma cannot have two zeros")
    return int(hits[0]) if hits.size else None


def find_unit(s) -> Optional[int]:
    t = _table(s)
    n = t.shape[0]
    idx = np.arange(n)
    hits = np.flatnonzero(np.all(t == idx[None, :], axis=1) & np.all(t == idx[:, None], axis=0))
    if hits.size > 1:
        raise AssertionError("a magma cannot have two units")
    return int(hits[0]) if hits.size else None


def _designated_zero(s, zero):
    if zero is not None:
        return zero
    designated = getattr(s, "designated", None)
    if designated is not None and designated.zero is not None:
        return designated.zero
    raise PreconditionError("structure has no designated zero")


def nonzero_idempotents_orthogonal(s, zero: Optional[int] = None) -> CheckResult:
    """Distinct nonzero idempotents ``e, f`` satisfy ``ef = fe = 0``.

    Both orders are checked so corrupt tables are caught even without
    commutation.
    """
    z = _designated_zero(s, zero)
    t = _table(s)
    n = t.shape[0]
    idem = (t[np.arange(n), np.arange(n)] == np.arange(n)) & (np.arange(n) != z)
    pairs = np.outer(idem, idem) & ~np.eye(n, dtype=bool)
    bad = np.argwhere(pairs & ((t != z) | (t.T != z)))
    if bad.size:
        e, f = bad[0]
        return CheckResult(False, Witness(WitnessKind.NONORTHOGONAL_IDEMPOTENTS, (int(e), int(f))))
    return PASS


# --- partial tables (groupoid candidates) ----------------------------------------


def _first(mask: np.ndarray):
    hit = np.argwhere(mask)
    return tuple(int(v) for v in hit[0]) if hit.size else None


@dataclass(frozen=True)
class GroupoidReport:
    """Outcome of :func:`check_groupoid_axioms`.

    ``failures`` maps each failing clause to its witness; ``witness`` is the
    one for the earliest clause.
    """

    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def witness(self) -> Optional[Witness]:
        return self.failures[0] if self.failures else None

    def clause(self, name: str) -> Optional[Witness]:
        return next((w for w in self.failures if w.clause == name), None)

    def __bool__(self):
        return self.ok


def check_groupoid_axioms(g) -> GroupoidReport:
    """Check the groupoid axioms on a partial table with an inverse map.

    Clauses, all evaluated:

    i.   ``(a,b), (b,c)`` composable implies ``(ab,c), (a,bc)`` composable and equal
    ii.  ``(b, b^-1)`` composable for every ``b``
    iii. ``a^-1 (ab) = b`` and ``(ab) b^-1 = a`` for composable ``(a,b)``
    iv.  ``(x,y)`` composable exactly when ``d(x) = r(y)``, with
         ``d(x) = x^-1 x`` and ``r(x) = x x^-1`` (an undefined ``d`` or ``r``
         matches nothing)
    """
    t = np.asarray(g.table)
    inv = np.asarray(g.inverse)
    n = t.shape[0]
    if n == 0:
        return GroupoidReport()
    idx = np.arange(n)
    defined = t != UNDEFINED
    safe = np.where(defined, t, 0)
    failures = []

    # i: indices [a, b, c]
    both = defined[:, :, None] & defined[None, :, :]
    left = np.where(both, t[safe, :], UNDEFINED)  # t[ab, c]
    right = np.where(both, t[idx[:, None, None], safe[None, :, :]], UNDEFINED)  # t[a, bc]
    hit = _first(both & ((left == UNDEFINED) | (right == UNDEFINED) | (left != right)))
    if hit:
        failures.append(Witness(WitnessKind.GROUPOID_AXIOM, hit, "i"))

    hit = _first(~defined[idx, inv])
    if hit:
        failures.append(Witness(WitnessKind.GROUPOID_AXIOM, hit, "ii"))

    # iii: indices [a, b]
    left = np.where(defined, t[inv[:, None], safe], UNDEFINED)  # a^-1 (ab)
    right = np.where(defined, t[safe, inv[None, :]], UNDEFINED)  # (ab) b^-1
    hit = _first(defined & ((left != idx[None, :]) | (right != idx[:, None])))
    if hit:
        failures.append(Witness(WitnessKind.GROUPOID_AXIOM, hit, "iii"))

    d = t[inv, idx]
    r = t[idx, inv]
    criterion = (d[:, None] != UNDEFINED) & (d[:, None] == r[None, :])
    hit = _first(defined != criterion)
    if hit:
        failures.append(Witness(WitnessKind.COMPOSABILITY_MISMATCH, hit, "iv"))
    return GroupoidReport(tuple(failures))


# --- witness re-evaluation ---------------------------------------------------------


def _p(t, a, b):
    v = int(t[a, b])
    return None if v == UNDEFINED else v


def reproduces(s, w: Witness, zero: Optional[int] = None) -> bool:
    """True when the clause named by ``w`` really fails on ``w.elements``."""
    t = _table(s)
    k = w.kind
    if k is WitnessKind.NON_ASSOCIATIVE:
        a, b, c = w.elements
        return t[t[a, b], c] != t[a, t[b, c]]
    if k is WitnessKind.NO_INVERSE:
        (x,) = w.elements
        return not inverses_of(s, x)
    if k is WitnessKind.MULTIPLE_INVERSES:
        x, y1, y2 = w.elements
        found = inverses_of(s, x)
        return y1 != y2 and y1 in found and y2 in found
    if k is WitnessKind.NONCOMMUTING_IDEMPOTENTS:
        e, f = w.elements
        return t[e, e] == e and t[f, f] == f and t[e, f] != t[f, e]
    if k is WitnessKind.NONORTHOGONAL_IDEMPOTENTS:
        z = _designated_zero(s, zero)
        e, f = w.elements
        return (
            e != f
            and z not in (e, f)
            and t[e, e] == e
            and t[f, f] == f
            and (t[e, f] != z or t[f, e] != z)
        )
    inv = s.inverse
    if k is WitnessKind.GROUPOID_AXIOM:
        if w.clause == "i":
            a, b, c = w.elements
            ab, bc = _p(t, a, b), _p(t, b, c)
            if ab is None or bc is None:
                return False
            left, right = _p(t, ab, c), _p(t, a, bc)
            return left is None or right is None or left != right
        if w.clause == "ii":
            (b,) = w.elements
            return _p(t, b, inv[b]) is None
        if w.clause == "iii":
            a, b = w.elements
            ab = _p(t, a, b)
            if ab is None:
                return False
            return _p(t, inv[a], ab) != b or _p(t, ab, inv[b]) != a
    if k is WitnessKind.COMPOSABILITY_MISMATCH:
        x, y = w.elements
        d_x = _p(t, inv[x], x)
        r_y = _p(t, y, inv[y])
        return (_p(t, x, y) is not None) != (d_x is not None and d_x == r_y)
    raise ValueError(f"unknown witness {w!r}")


# --- aggregate ------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    """Flags for a total table.  ``None`` marks a flag that does not apply
    because an earlier one failed (e.g. everything after non-associativity)."""

    is_associative: CheckResult
    is_regular: Optional[CheckResult] = None
    has_unique_inverses: Optional[CheckResult] = None
    idempotents_commute: Optional[CheckResult] = None
    has_zero: Optional[bool] = None
    has_unit: Optional[bool] = None
    nonzero_idempotents_orthogonal: Optional[CheckResult] = None
    zero: Optional[int] = None
    unit: Optional[int] = None

    @property
    def is_inverse_semigroup(self) -> bool:
        return bool(self.is_associative) and bool(self.has_unique_inverses)


def classify(s) -> Classification:
    assoc = is_associative(s)
    if not assoc:
        return Classification(assoc)
    regular = is_regular(s)
    unique = has_unique_inverses(s) if regular else CheckResult(False, regular.witness)
    zero, unit = find_zero(s), find_unit(s)
    orthogonal = None
    if unique and zero is not None:
        orthogonal = nonzero_idempotents_orthogonal(s, zero)
    return Classification(
        is_associative=assoc,
        is_regular=regular,
        has_unique_inverses=unique,
        idempotents_commute=idempotents_commute(s),
        has_zero=zero is not None,
        has_unit=unit is not None,
        nonzero_idempotents_orthogonal=orthogonal,
        zero=zero,
        unit=unit,
    )
