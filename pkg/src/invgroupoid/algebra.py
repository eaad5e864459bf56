"""Structure-constant algebras and 0/1 matrix representations.

The groupoid algebra of ``G`` has basis ``G`` with ``x*y`` the groupoid
product when composable and 0 otherwise.  The contracted algebra of an
inverse semigroup with zero has basis ``S - {0}`` and sends products equal to
the semigroup zero to 0.  For ``S = s_of_g(G)`` the two coincide under the
identity of basis positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .axioms import PreconditionError
from .bridge import FiniteGroupoid, FiniteInverseSemigroup
from .tables import UNDEFINED

__all__ = [
    "ConstantMismatch",
    "RepresentationWitness",
    "StarRepresentationReport",
    "StructureConstantAlgebra",
    "algebras_identical",
    "canonical_bijection",
    "check_star_representation",
    "contracted_semigroup_algebra",
    "extend_by_zero",
    "groupoid_algebra",
    "is_partial_permutation",
    "regular_representation",
]


@dataclass(frozen=True, eq=False)
class StructureConstantAlgebra:
    """Basis labels plus ``constants[i, j]``: the basis index of ``b_i b_j``, or -1 for 0."""

    basis: tuple
    constants: np.ndarray

    def __post_init__(self):
        k = len(self.basis)
        c = np.array(self.constants, dtype=np.int64).reshape(k, k)
        if k and (c.min() < UNDEFINED or c.max() >= k):
            raise ValueError("structure constants must be basis indices or -1")
        c.flags.writeable = False
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "constants", c)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def first_nonassociative(self) -> Optional[tuple]:
        """First basis triple where ``(b_i b_j) b_k != b_i (b_j b_k)``, zero included."""
        c = self.constants
        k = self.dimension
        if k == 0:
            return None
        z = k  # extend with an absorbing zero row/column
        ext = np.full((k + 1, k + 1), z, dtype=np.int64)
        ext[:k, :k] = np.where(c == UNDEFINED, z, c)
        left = ext[ext[:k, :k], :k]
        right = ext[np.arange(k)[:, None, None], ext[None, :k, :k]]
        bad = np.argwhere(left != right)
        return tuple(int(v) for v in bad[0]) if bad.size else None

    def is_associative(self) -> bool:
        return self.first_nonassociative() is None


def groupoid_algebra(g: FiniteGroupoid) -> StructureConstantAlgebra:
    return StructureConstantAlgebra(g.names, np.asarray(g.table))


def contracted_semigroup_algebra(s: FiniteInverseSemigroup) -> StructureConstantAlgebra:
    z = s.designated.zero
    if z is None:
        raise PreconditionError("contracted algebra needs a designated zero")
    keep = np.array([i for i in range(s.order) if i != z], dtype=np.int64)
    position = np.full(s.order, UNDEFINED, dtype=np.int64)
    position[keep] = np.arange(keep.size)
    sub = np.asarray(s.table)[np.ix_(keep, keep)]
    return StructureConstantAlgebra(tuple(s.names[i] for i in keep), position[sub])


def canonical_bijection(g: FiniteGroupoid) -> np.ndarray:
    """Basis map ``G -> S(G) - {0}``; ``s_of_g`` keeps positions, so it is the identity."""
    return np.arange(g.order)


class ConstantMismatch(NamedTuple):
    i: int
    j: int
    left: int
    right: int


def algebras_identical(a: StructureConstantAlgebra, b: StructureConstantAlgebra, bijection: Sequence[int]):
    """Compare constants of ``a`` and ``b`` after relabelling ``a``'s basis by ``bijection``.

    Returns ``(True, None)`` or ``(False, ConstantMismatch)`` for the first
    pair ``(i, j)`` of ``a``-indices where ``phi(a_i a_j) != phi(a_i) phi(a_j)``.
    """
    if a.dimension != b.dimension:
        raise ValueError(f"basis sizes differ: {a.dimension} != {b.dimension}")
    phi = np.asarray(bijection, dtype=np.int64)
    k = a.dimension
    if phi.shape != (k,) or (k and sorted(phi.tolist()) != list(range(k))):
        raise ValueError("bijection must be a permutation of basis indices")
    if k == 0:
        return True, None
    ca = a.constants
    mapped = np.where(ca == UNDEFINED, UNDEFINED, phi[np.maximum(ca, 0)])
    expected = b.constants[np.ix_(phi, phi)]
    bad = np.argwhere(mapped != expected)
    if bad.size:
        i, j = (int(v) for v in bad[0])
        return False, ConstantMismatch(i, j, int(mapped[i, j]), int(expected[i, j]))
    return True, None


def regular_representation(g: FiniteGroupoid) -> np.ndarray:
    """``pi[a]`` sends basis vector ``e_b`` to ``e_{ab}`` when composable, else to 0.

    Returned as an int64 stack of shape ``(n, n, n)`` with ``pi[a][row, col]``.
    """
    n = g.order
    pi = np.zeros((n, n, n), dtype=np.int64)
    a, b = np.nonzero(np.asarray(g.table) != UNDEFINED)
    pi[a, np.asarray(g.table)[a, b], b] = 1
    return pi


def extend_by_zero(pi: np.ndarray, s: FiniteInverseSemigroup) -> np.ndarray:
    """Insert the zero matrix at the position of ``s``'s designated zero."""
    z = s.designated.zero
    if z is None:
        raise PreconditionError("extension needs a designated zero")
    d = pi.shape[1]
    return np.insert(pi, z, np.zeros((d, d), dtype=pi.dtype), axis=0)


def is_partial_permutation(m: np.ndarray) -> bool:
    m = np.asarray(m)
    return bool(
        np.isin(m, (0, 1)).all()
        and (m.sum(axis=0) <= 1).all()
        and (m.sum(axis=1) <= 1).all()
    )


class RepresentationWitness(NamedTuple):
    """``law`` is "product" (elements ``(x, y)``), "star" (``(x,)``) or "zero" (``(z,)``)."""

    law: str
    elements: tuple


@dataclass(frozen=True)
class StarRepresentationReport:
    multiplicative: bool
    star: bool
    zero_to_zero: bool
    witness: Optional[RepresentationWitness] = None

    @property
    def ok(self) -> bool:
        return self.multiplicative and self.star and self.zero_to_zero

    def __bool__(self):
        return self.ok


def check_star_representation(s: FiniteInverseSemigroup, pi) -> StarRepresentationReport:
    """Verify ``pi(x)pi(y) = pi(xy)`` for all pairs, ``pi(x*) = pi(x)^T``, and ``pi(0) = 0``.

    Exact integer arithmetic.  The witness is the first failing pair or
    element, multiplicativity first.
    """
    pi = np.asarray(pi)
    if pi.ndim != 3 or pi.shape[0] != s.order or pi.shape[1] != pi.shape[2]:
        raise ValueError(f"expected {s.order} square matrices of equal size, got shape {pi.shape}")
    pi = pi.astype(np.int64, copy=False)
    t = np.asarray(s.table)
    z = s.designated.zero

    zero_ok = z is None or not pi[z].any()
    products = np.einsum("xij,yjk->xyik", pi, pi)
    mult_bad = np.argwhere(np.any(products != pi[t], axis=(2, 3)))
    star_bad = np.flatnonzero(np.any(pi[np.asarray(s.star)] != pi.transpose(0, 2, 1), axis=(1, 2)))

    witness = None
    if mult_bad.size:
        witness = RepresentationWitness("product", tuple(int(v) for v in mult_bad[0]))
    elif star_bad.size:
        witness = RepresentationWitness("star", (int(star_bad[0]),))
    elif not zero_ok:
        witness = RepresentationWitness("zero", (z,))
    return StarRepresentationReport(
        multiplicative=not mult_bad.size,
        star=not star_bad.size,
        zero_to_zero=zero_ok,
        witness=witness,
    )
