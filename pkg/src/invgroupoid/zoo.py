"""Canonical example structures and exhaustive enumeration of small semigroups."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Optional, Sequence

import numpy as np

from . import axioms, kernels
from .bridge import FiniteGroupoid, FiniteInverseSemigroup
from .tables import TABLE_DTYPE, UNDEFINED, DesignatedElements, FiniteMagma, FinitePartialMagma

__all__ = [
    "ENUMERATION_FILTERS",
    "VagnerSurvey",
    "enumerate_semigroups",
    "enumerate_tables",
    "gen_cyclic_group",
    "gen_disjoint_union",
    "gen_pair_groupoid",
    "gen_symmetric_inverse_monoid",
    "symmetric_inverse_monoid_order",
    "vagner_survey",
]

ENUMERATION_FILTERS = ("all", "regular", "inverse", "inverse-with-zero-orthogonal")
ENUMERATION_MODES = ("exhaustive", "backtracking")
SEMIGROUP_NAMES = "abcd"


def _positive(n, what):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"{what} needs n >= 1, got {n!r}")


def gen_cyclic_group(n: int) -> FiniteGroupoid:
    _positive(n, "gen_cyclic_group")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    inverse = (n - idx) % n
    names = tuple(f"g{i}" for i in range(n))
    return FiniteGroupoid.from_partial(FinitePartialMagma(names, table, inverse))


def gen_pair_groupoid(n: int) -> FiniteGroupoid:
    """Pairs ``i:j`` (1-based) with ``(i,j)(j,l) = (i,l)``; other products undefined."""
    _positive(n, "gen_pair_groupoid")
    pairs = [(i, j) for i in range(n) for j in range(n)]
    size = n * n
    table = np.full((size, size), UNDEFINED, dtype=TABLE_DTYPE)
    for x, (i, j) in enumerate(pairs):
        for y, (k, l) in enumerate(pairs):
            if j == k:
                table[x, y] = i * n + l
    inverse = [j * n + i for i, j in pairs]
    names = tuple(f"{i + 1}:{j + 1}" for i, j in pairs)
    return FiniteGroupoid.from_partial(FinitePartialMagma(names, table, inverse))


def symmetric_inverse_monoid_order(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def _partial_injections(n):
    # image words over {-1, 0..n-1}; -1 = undefined; lexicographic with -1 first
    for word in itertools.product(range(-1, n), repeat=n):
        images = [v for v in word if v >= 0]
        if len(images) == len(set(images)):
            yield word


def gen_symmetric_inverse_monoid(n: int) -> FiniteInverseSemigroup:
    """All partial injections of ``{1..n}``, composed right to left.

    ``x*y`` means "apply ``y`` first, then ``x``", matching matrix
    multiplication of the corresponding rook matrices.  Element names list the
    image of each point, ``_`` where undefined: ``"2_"`` sends 1 to 2 and
    leaves 2 undefined.
    """
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= 4:
        raise ValueError(f"gen_symmetric_inverse_monoid supports 1 <= n <= 4, got {n!r}")
    maps = list(_partial_injections(n))
    index = {w: k for k, w in enumerate(maps)}

    def compose(x, y):
        return tuple(-1 if y[p] < 0 else x[y[p]] for p in range(n))

    def invert(x):
        out = [-1] * n
        for p, v in enumerate(x):
            if v >= 0:
                out[v] = p
        return tuple(out)

    table = [[index[compose(x, y)] for y in maps] for x in maps]
    names = tuple("".join("_" if v < 0 else str(v + 1) for v in w) for w in maps)
    designated = DesignatedElements(zero=index[(-1,) * n], unit=index[tuple(range(n))])
    s = FiniteInverseSemigroup.from_magma(FiniteMagma(names, table, designated))
    expected_star = np.array([index[invert(w)] for w in maps])
    if not np.array_equal(s.star, expected_star):
        raise AssertionError("star differs from partial-function inverse")
    return s


def gen_disjoint_union(parts: Sequence[FiniteGroupoid]) -> FiniteGroupoid:
    """Blockwise product; cross-block pairs are not composable.

    A single part is returned unchanged.  With several parts every name is
    tagged ``name@k`` with the 0-based block number.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("gen_disjoint_union needs at least one part")
    parts = [p if isinstance(p, FiniteGroupoid) else FiniteGroupoid.from_partial(p) for p in parts]
    if len(parts) == 1:
        return parts[0]
    size = sum(p.order for p in parts)
    table = np.full((size, size), UNDEFINED, dtype=TABLE_DTYPE)
    inverse = np.empty(size, dtype=TABLE_DTYPE)
    names = []
    offset = 0
    for k, p in enumerate(parts):
        m = p.order
        block = np.asarray(p.table)
        table[offset : offset + m, offset : offset + m] = np.where(block == UNDEFINED, UNDEFINED, block + offset)
        inverse[offset : offset + m] = np.asarray(p.inverse) + offset
        names.extend(f"{name}@{k}" for name in p.names)
        offset += m
    return FiniteGroupoid.from_partial(FinitePartialMagma(tuple(names), table, inverse))


def empty_groupoid() -> FiniteGroupoid:
    empty = np.zeros((0, 0), dtype=TABLE_DTYPE)
    return FiniteGroupoid.from_partial(FinitePartialMagma((), empty, np.zeros(0, dtype=TABLE_DTYPE)))


def standard_groupoids() -> list:
    """The groupoid corpus used by the acceptance checks, in a fixed order."""
    corpus = [empty_groupoid()]
    corpus += [gen_pair_groupoid(n) for n in range(1, 6)]
    corpus += [gen_cyclic_group(n) for n in range(1, 13)]
    corpus += [
        gen_disjoint_union([gen_cyclic_group(2), gen_cyclic_group(3)]),
        gen_disjoint_union([gen_pair_groupoid(2), gen_cyclic_group(2)]),
        gen_disjoint_union([gen_pair_groupoid(2), gen_pair_groupoid(3), gen_cyclic_group(4)]),
        gen_disjoint_union([gen_cyclic_group(1), gen_cyclic_group(1), gen_cyclic_group(1)]),
    ]
    return corpus


# --- enumeration -----------------------------------------------------------------


def _check_order_mode(order, mode):
    if mode not in ENUMERATION_MODES:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= 4:
        raise ValueError(f"enumeration supports orders 1..4, got {order!r}")
    if order == 4 and mode != "backtracking":
        raise ValueError("order 4 requires backtracking mode")


def _exhaustive_block(n, prefix):
    block = n ** (n * n - n)
    start = prefix * block
    tables = kernels.all_tables(n, start, start + block)
    return tables[kernels.associative_mask(tables)]


def _backtrack_block(n, prefix):
    return kernels.backtrack_semigroups(n, np.array(prefix, dtype=np.int64))


def enumerate_tables(order: int, mode: str = "exhaustive", workers: int = 1) -> np.ndarray:
    """All associative labeled tables of ``order``, shape ``(k, order, order)``.

    The search is split by first row; blocks run on ``workers`` threads and
    are concatenated in first-row order, so the result does not depend on the
    worker count.
    """
    _check_order_mode(order, mode)
    n = order
    if mode == "exhaustive":
        jobs = [(n, p) for p in range(n**n)]
        run = _exhaustive_block
    else:
        jobs = [(n, row) for row in itertools.product(range(n), repeat=n)]
        run = _backtrack_block
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda job: run(*job), jobs))
    else:
        blocks = [run(*job) for job in jobs]
    return np.concatenate(blocks, axis=0) if blocks else np.zeros((0, n, n), dtype=np.int64)


def _as_magma(table) -> FiniteMagma:
    n = table.shape[0]
    return FiniteMagma(tuple(SEMIGROUP_NAMES[:n]), table)


def enumerate_semigroups(
    order: int, filter: str = "all", mode: str = "exhaustive", workers: int = 1
) -> Iterator[FiniteMagma]:
    """Yield associative tables of ``order`` passing ``filter``, in lexicographic order."""
    if filter not in ENUMERATION_FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    tables = enumerate_tables(order, mode, workers)
    if filter != "all":
        regular, unique, _ = kernels.vagner_flags(tables)
        tables = tables[regular if filter == "regular" else unique]
    for t in tables:
        m = _as_magma(t)
        if filter == "inverse-with-zero-orthogonal":
            zero = axioms.find_zero(m)
            if zero is None or not axioms.nonzero_idempotents_orthogonal(m, zero):
                continue
        yield m


@dataclass(frozen=True)
class VagnerSurvey:
    order: int
    mode: str
    tables_scanned: Optional[int]
    associative: int
    regular: int
    inverse: int
    counterexamples: tuple

    @property
    def vagner_consistent(self) -> bool:
        return not self.counterexamples

    def items(self) -> list:
        out = [("order", self.order), ("mode", self.mode)]
        if self.tables_scanned is not None:
            out.append(("tables_scanned", self.tables_scanned))
        out += [
            ("associative", self.associative),
            ("regular", self.regular),
            ("inverse", self.inverse),
            ("vagner_consistent", self.vagner_consistent),
        ]
        out += [("counterexample", k) for k in self.counterexamples]
        return out


def vagner_survey(order: int, mode: str = "exhaustive", workers: int = 1) -> VagnerSurvey:
    """Count associative/regular/inverse tables of ``order`` and test Vagner's
    equivalence on every regular one.

    Each regular table goes through :func:`axioms.check_vagner`; the batch
    kernel flags are cross-checked against it.  ``counterexamples`` lists the
    positions (in enumeration order) of any inconsistent table.
    """
    tables = enumerate_tables(order, mode, workers)
    regular, unique, commute = kernels.vagner_flags(tables)
    bad = []
    for k in np.flatnonzero(regular):
        report = axioms.check_vagner(tables[k])
        if report.unique_inverses.ok != bool(unique[k]) or report.idempotents_commute.ok != bool(commute[k]):
            raise AssertionError(f"kernel flags disagree with axioms on table {k}")
        if not report.vagner_consistent:
            bad.append(int(k))
    scanned = order ** (order * order) if mode == "exhaustive" else None
    return VagnerSurvey(
        order=order,
        mode=mode,
        tables_scanned=scanned,
        associative=int(tables.shape[0]),
        regular=int(regular.sum()),
        inverse=int(unique.sum()),
        counterexamples=tuple(bad),
    )
