"""Generation of all n x n semi-canonical matrices and their count tables.

Candidates are nondecreasing row-code tuples <x_0, ..., x_{n-1}>.  The
first row of a semi-canonical matrix is always a block of zeros followed
by a block of ones, so x_0 only ever takes the values 2^s - 1 for
s = 0..n; the walk seeds every row with that value and then repeatedly
increments the last incrementable position, copying the new value into
all later positions.  That visits every nondecreasing tuple with an
admissible first element exactly once, in strictly increasing
lexicographic order.  A candidate survives when its column codes are
also nondecreasing, checked left to right with an early exit.

Counting keeps per-prefix column codes so that the common case (only the
last row changed) re-derives just one level; the matrix stream uses the
plain full scan.  Both engines are cross-checked against each other and
against brute force in the test suite.

Count tables can be computed in parallel: candidates are partitioned by
their first two row codes into independent slices and the per-slice
tables are merged by addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canonical import _exists_smaller_in_orbit, is_canonical
from .matrix import BinaryMatrix, CapExceededError

DEFAULT_ORDER_CAP = 7
CANONICAL_ORDER_CAP = 6


@dataclass(frozen=True)
class CountTable:
    """counts[i] = number of matrices of order n with exactly i ones."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n * self.n + 1:
            raise ValueError(f"count table for order {self.n} needs {self.n * self.n + 1} entries")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative count")
        object.__setattr__(self, "counts", tuple(self.counts))

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts)


def _require_order(n: int, cap: int):
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n > min(cap, 63):
        raise CapExceededError(f"order {n} above the cap {min(cap, 63)}")


def _column_scan(x: list[int], n: int) -> int:
    """Ones count of the matrix with rows x, or -1 if columns decrease."""
    y_prev = -1
    k = 0
    for j in range(n - 1, -1, -1):  # bit j = column n-1-j, so left to right
        bit = 1 << j
        y = 0
        for i in range(n):
            if x[i] & bit:
                y |= 1 << (n - 1 - i)
                k += 1
        if y < y_prev:
            return -1
        y_prev = y
    return k


def _iter_semi_tuples(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All semi-canonical row tuples of order n with their ones count."""
    xmax = (1 << n) - 1
    for s in range(n + 1):
        x = [(1 << s) - 1] * n
        while True:
            k = _column_scan(x, n)
            if k >= 0:
                yield tuple(x), k
            p = n - 1
            while p > 0 and x[p] == xmax:
                p -= 1
            if p == 0:
                break
            x[p] += 1
            v = x[p]
            for i in range(p + 1, n):
                x[i] = v
    return


def enumerate_semi_canonical(n: int, cap: int = DEFAULT_ORDER_CAP) -> Iterator[BinaryMatrix]:
    """Yield every n x n semi-canonical matrix, in increasing row-code order."""
    _require_order(n, cap)
    for rows, _ in _iter_semi_tuples(n):
        yield BinaryMatrix(n, n, rows)


def _survivors_in_slice(n: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Semi-canonical candidates whose first row codes equal `prefix`.

    Walks the nondecreasing tuples extending the prefix and yields
    (ones, rows) for each survivor.  Column codes are cached per prefix
    depth: a successor that only touches the last row re-derives a
    single level instead of rescanning the whole matrix.
    """
    f = len(prefix)
    xmax = (1 << n) - 1
    x = list(prefix) + [prefix[-1]] * (n - f)
    # cols[d][j] = code of bit-column j over rows 0..d; pops[d] = ones so far
    cols = [[0] * n for _ in range(n)]
    pops = [0] * n
    prev = [0] * n
    total = 0
    for d in range(n):
        xv = x[d]
        cd = cols[d]
        for j in range(n):
            cd[j] = (prev[j] << 1) | ((xv >> j) & 1)
        total += xv.bit_count()
        pops[d] = total
        prev = cd
    last = n - 1
    while True:
        top = cols[last]
        ok = True
        prevc = top[last]
        for j in range(last - 1, -1, -1):  # bit columns right to left = grid left to right
            c = top[j]
            if c < prevc:
                ok = False
                break
            prevc = c
        if ok:
            yield pops[last], tuple(x)
        p = last
        while p >= f and x[p] == xmax:
            p -= 1
        if p < f:
            return
        x[p] += 1
        v = x[p]
        for i in range(p + 1, n):
            x[i] = v
        prev = cols[p - 1] if p else [0] * n
        vpop = v.bit_count()
        total = pops[p - 1] if p else 0
        for d in range(p, n):
            cd = cols[d]
            for j in range(n):
                cd[j] = (prev[j] << 1) | ((v >> j) & 1)
            total += vpop
            pops[d] = total
            prev = cd


def _slice_prefixes(n: int) -> list[tuple[int, ...]]:
    """Disjoint prefixes covering the whole candidate space."""
    seeds = [(1 << s) - 1 for s in range(n + 1)]
    if n == 1:
        return [(v,) for v in seeds]
    xmax = (1 << n) - 1
    return [(v0, v1) for v0 in seeds for v1 in range(v0, xmax + 1)]


def _count_slice(args: tuple[int, tuple[int, ...]]) -> list[int]:
    n, prefix = args
    counts = [0] * (n * n + 1)
    for ones, _ in _survivors_in_slice(n, prefix):
        counts[ones] += 1
    return counts


def _count_canonical_slice(args: tuple[int, tuple[int, ...]]) -> list[int]:
    n, prefix = args
    counts = [0] * (n * n + 1)
    for ones, rows in _survivors_in_slice(n, prefix):
        if not _exists_smaller_in_orbit(rows, n, n, rows):
            counts[ones] += 1
    return counts


def _run_slices(n: int, worker, jobs: int) -> CountTable:
    tasks = [(n, prefix) for prefix in _slice_prefixes(n)]
    counts = [0] * (n * n + 1)
    if jobs > 1 and len(tasks) > 1:
        from multiprocessing import Pool

        chunk = max(1, len(tasks) // (8 * jobs))
        with Pool(jobs) as pool:
            for part in pool.imap_unordered(worker, tasks, chunksize=chunk):
                for i, c in enumerate(part):
                    counts[i] += c
    else:
        for task in tasks:
            for i, c in enumerate(worker(task)):
                counts[i] += c
    return CountTable(n, tuple(counts))


def count_semi_canonical(n: int, cap: int = DEFAULT_ORDER_CAP, jobs: int = 1) -> CountTable:
    """Count semi-canonical matrices of order n by number of ones."""
    _require_order(n, cap)
    return _run_slices(n, _count_slice, jobs)


def enumerate_canonical(n: int, cap: int = CANONICAL_ORDER_CAP) -> Iterator[BinaryMatrix]:
    """Yield one representative per equivalence class of order n.

    Canonical matrices are semi-canonical, so the stream filters the
    semi-canonical walk instead of scanning all 2^(n*n) matrices.
    """
    _require_order(n, cap)
    for a in enumerate_semi_canonical(n, cap=cap):
        if is_canonical(a):
            yield a


def count_canonical(n: int, cap: int = CANONICAL_ORDER_CAP, jobs: int = 1) -> CountTable:
    """Count equivalence classes of order n by number of ones.

    Also counts bipartite graphs with n + n vertices and a given number
    of edges up to isomorphism of the two sides.
    """
    _require_order(n, cap)
    return _run_slices(n, _count_canonical_slice, jobs)
