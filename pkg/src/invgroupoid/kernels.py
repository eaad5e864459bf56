"""Hot loops over multiplication tables.

Every kernel exists twice: a loop version compiled with numba (``*_numba``)
and a vectorised numpy version (``*_numpy``).  The unsuffixed names dispatch
to one of them according to :data:`invgroupoid._jit.USE_NUMBA`.

Tables handed to kernels are int64 arrays.  Partial tables in the
backtracking search mark unfilled cells with -1.
"""

import numpy as np

from ._jit import USE_NUMBA, njit

__all__ = [
    "all_tables",
    "associative_mask",
    "backtrack_semigroups",
    "first_nonassociative",
    "vagner_flags",
]

_NONE3 = (-1, -1, -1)


# --- single-table associativity -------------------------------------------------


@njit
def first_nonassociative_numba(t):
    n = t.shape[0]
    for a in range(n):
        for b in range(n):
            ab = t[a, b]
            for c in range(n):
                if t[ab, c] != t[a, t[b, c]]:
                    return a, b, c
    return -1, -1, -1


def first_nonassociative_numpy(t):
    """Row-major first triple with ``(ab)c != a(bc)``, or ``(-1, -1, -1)``."""
    n = t.shape[0]
    if n == 0:
        return _NONE3
    left = t[t, :]  # left[a, b, c] = t[t[a, b], c]
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # t[a, t[b, c]]
    bad = np.argwhere(left != right)
    if bad.size == 0:
        return _NONE3
    a, b, c = bad[0]
    return int(a), int(b), int(c)


# --- batch associativity --------------------------------------------------------


def _triple_indices(n):
    a, b, c = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    return a.ravel(), b.ravel(), c.ravel()


@njit
def associative_mask_numba(tables):
    m, n = tables.shape[0], tables.shape[1]
    out = np.ones(m, dtype=np.bool_)
    for k in range(m):
        t = tables[k]
        ok = True
        for a in range(n):
            if not ok:
                break
            for b in range(n):
                if not ok:
                    break
                ab = t[a, b]
                for c in range(n):
                    if t[ab, c] != t[a, t[b, c]]:
                        ok = False
                        break
        out[k] = ok
    return out


def associative_mask_numpy(tables):
    m, n = tables.shape[0], tables.shape[1]
    if m == 0 or n == 0:
        return np.ones(m, dtype=bool)
    flat = tables.reshape(m, n * n)
    a, b, c = _triple_indices(n)
    ab = flat[:, a * n + b]
    bc = flat[:, b * n + c]
    left = np.take_along_axis(flat, ab * n + c, axis=1)
    right = np.take_along_axis(flat, a * n + bc, axis=1)
    return np.all(left == right, axis=1)


# --- inverse / idempotent statistics for associative tables ------------------


@njit
def vagner_flags_numba(tables):
    m, n = tables.shape[0], tables.shape[1]
    regular = np.ones(m, dtype=np.bool_)
    unique = np.ones(m, dtype=np.bool_)
    commute = np.ones(m, dtype=np.bool_)
    for k in range(m):
        t = tables[k]
        for x in range(n):
            count = 0
            for y in range(n):
                if t[t[x, y], x] == x and t[t[y, x], y] == y:
                    count += 1
            if count == 0:
                regular[k] = False
            if count != 1:
                unique[k] = False
        for e in range(n):
            if t[e, e] != e:
                continue
            for f in range(n):
                if t[f, f] == f and t[e, f] != t[f, e]:
                    commute[k] = False
    return regular, unique, commute


def vagner_flags_numpy(tables):
    """Per table: (every element has an inverse, inverses are unique, idempotents commute)."""
    m, n = tables.shape[0], tables.shape[1]
    if m == 0 or n == 0:
        ones = np.ones(m, dtype=bool)
        return ones, ones.copy(), ones.copy()
    flat = tables.reshape(m, n * n)
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    x, y = x.ravel(), y.ravel()
    xy = flat[:, x * n + y]
    yx = flat[:, y * n + x]
    xyx = np.take_along_axis(flat, xy * n + x, axis=1)
    yxy = np.take_along_axis(flat, yx * n + y, axis=1)
    is_inverse = ((xyx == x) & (yxy == y)).reshape(m, n, n)
    counts = is_inverse.sum(axis=2)
    regular = np.all(counts >= 1, axis=1)
    unique = np.all(counts == 1, axis=1)
    diag = flat[:, np.arange(n) * (n + 1)]
    idem = diag == np.arange(n)
    pair_idem = idem[:, x] & idem[:, y]
    commute = ~np.any(pair_idem & (xy != yx), axis=1)
    return regular, unique, commute


# --- exhaustive table generation ----------------------------------------------


def all_tables(n, start=0, stop=None):
    """Tables ``start..stop-1`` of order ``n`` in lexicographic (row-major digit) order."""
    total = n ** (n * n)
    stop = total if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((idx.size, n * n), dtype=np.int64)
    for pos in range(n * n - 1, -1, -1):
        digits[:, pos] = idx % n
        idx //= n
    return digits.reshape(-1, n, n)


# --- backtracking enumeration --------------------------------------------------


@njit
def _consistent(t, n):
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            if ab < 0:
                continue
            for c in range(n):
                left = t[ab * n + c]
                if left < 0:
                    continue
                bc = t[b * n + c]
                if bc < 0:
                    continue
                right = t[a * n + bc]
                if right >= 0 and left != right:
                    return False
    return True


@njit
def _backtrack_into(n, prefix, out):
    size = n * n
    p = prefix.shape[0]
    t = -np.ones(size, dtype=np.int64)
    for k in range(p):
        t[k] = prefix[k]
    if not _consistent(t, n):
        return 0
    if p == size:
        if out.shape[0] == 0:
            return -1
        out[0, :] = t
        return 1
    count = 0
    pos = p
    while pos >= p:
        v = t[pos] + 1
        if v == n:
            t[pos] = -1
            pos -= 1
            continue
        t[pos] = v
        if not _consistent(t, n):
            continue
        if pos == size - 1:
            if count == out.shape[0]:
                return -1
            out[count, :] = t
            count += 1
        else:
            pos += 1
    return count


def backtrack_semigroups_numba(n, prefix=None):
    prefix = np.zeros(0, dtype=np.int64) if prefix is None else np.asarray(prefix, dtype=np.int64)
    capacity = 1024
    while True:
        out = np.empty((capacity, n * n), dtype=np.int64)
        count = _backtrack_into(n, prefix, out)
        if count >= 0:
            return out[:count].reshape(-1, n, n).copy()
        capacity *= 4


def backtrack_semigroups_numpy(n, prefix=None):
    """Breadth-first version of the same search, one cell per level.

    Children are appended candidate-major, value-minor, so each level stays
    in lexicographic order and the result matches the depth-first kernel.
    """
    size = n * n
    prefix = [] if prefix is None else list(prefix)
    frontier = -np.ones((1, size), dtype=np.int64)
    frontier[0, : len(prefix)] = prefix
    a, b, c = _triple_indices(n)

    def keep(front):
        ab = front[:, a * n + b]
        bc = front[:, b * n + c]
        left = np.where(ab >= 0, np.take_along_axis(front, np.maximum(ab, 0) * n + c, axis=1), -1)
        right = np.where(bc >= 0, np.take_along_axis(front, a * n + np.maximum(bc, 0), axis=1), -1)
        bad = (left >= 0) & (right >= 0) & (left != right)
        return ~np.any(bad, axis=1)

    frontier = frontier[keep(frontier)]
    for pos in range(len(prefix), size):
        m = frontier.shape[0]
        if m == 0:
            break
        children = np.repeat(frontier, n, axis=0)
        children[:, pos] = np.tile(np.arange(n), m)
        frontier = children[keep(children)]
    return frontier.reshape(-1, n, n)


if USE_NUMBA:
    first_nonassociative = first_nonassociative_numba
    associative_mask = associative_mask_numba
    vagner_flags = vagner_flags_numba
    backtrack_semigroups = backtrack_semigroups_numba
else:
    first_nonassociative = first_nonassociative_numpy
    associative_mask = associative_mask_numpy
    vagner_flags = vagner_flags_numpy
    backtrack_semigroups = backtrack_semigroups_numpy
