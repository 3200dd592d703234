"""Semi-canonical and canonical matrices under row/column permutation.

Two matrices are equivalent when one can be turned into the other by
permuting rows and permuting columns.  A matrix is *semi-canonical* when
both its row codes and its column codes are nondecreasing, and
*canonical* when its row code tuple is the lexicographic minimum over
its whole equivalence class.  Every class contains exactly one canonical
matrix (row codes determine the matrix), but may contain several
semi-canonical ones, so sorting rows and columns is not enough to
canonicalize: a genuine orbit search is required.

The search here enumerates row orders depth-first.  For a fixed order of
the chosen rows, the best column arrangement is simply "columns sorted
ascending by their code", and the first p row codes depend only on the
chosen p rows, which gives an exact prefix bound: any partial row order
whose prefix codes already exceed the best-known result can be pruned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from typing import Literal

from .matrix import (
    BinaryMatrix,
    CapExceededError,
    Transposition,
    apply_col_transposition,
    apply_row_transposition,
    col_code,
    compare_lex,
    row_code,
)

MAX_CANONICAL_DIM = 8
MAX_CLASS_DIM = 4


def is_semi_canonical(a: BinaryMatrix) -> bool:
    """True when row codes and column codes are both nondecreasing."""
    rows = a.rows
    for i in range(a.n - 1):
        if rows[i] > rows[i + 1]:
            return False
    ys = col_code(a).values
    for j in range(a.m - 1):
        if ys[j] > ys[j + 1]:
            return False
    return True


def structural_profile(a: BinaryMatrix) -> tuple[int, int]:
    """The (s, t) with first row code 2^s - 1 and first column code 2^t - 1.

    Semi-canonical matrices always have this shape: the first row is all
    zeros followed by all ones, and so is the first column.
    """
    if not is_semi_canonical(a):
        raise ValueError("structural profile is only defined for semi-canonical matrices")
    x1 = a.rows[0]
    y1 = col_code(a).values[0]
    s = x1.bit_length()
    t = y1.bit_length()
    # guaranteed by semi-canonicity; guards against representation bugs
    if x1 != (1 << s) - 1 or y1 != (1 << t) - 1:
        raise AssertionError(f"semi-canonical matrix with non-block first row/column: {x1}, {y1}")
    return s, t


def _sorted_prefix_last_code(cols: list[int], m: int) -> int:
    """Row code contributed by the newest row once columns are sorted."""
    sc = sorted(cols)
    x = 0
    for k in range(m):
        if sc[k] & 1:
            x |= 1 << (m - 1 - k)
    return x


def _children(cols: list[int], remaining: list[int], m: int):
    """Distinct next-row choices with their column prefixes and row codes."""
    out = []
    seen = set()
    for idx, v in enumerate(remaining):
        if v in seen:
            continue
        seen.add(v)
        new_cols = [(c << 1) | ((v >> (m - 1 - j)) & 1) for j, c in enumerate(cols)]
        out.append((_sorted_prefix_last_code(new_cols, m), idx, new_cols))
    out.sort(key=lambda item: item[0])
    return out


def _min_orbit_row_code(rows: tuple[int, ...], n: int, m: int) -> list[int]:
    """Lexicographically minimal row code tuple over the whole orbit."""
    best: list[int] | None = None

    def rec(prefix: list[int], cols: list[int], remaining: list[int]):
        nonlocal best
        p = len(prefix)
        if p == n:
            if best is None or prefix < best:
                best = list(prefix)
            return
        for x_next, idx, new_cols in _children(cols, remaining, m):
            cand = prefix + [x_next]
            if best is not None and cand > best[: p + 1]:
                break  # children are sorted; the rest are no better
            rec(cand, new_cols, remaining[:idx] + remaining[idx + 1 :])

    rec([], [0] * m, list(rows))
    assert best is not None
    return best


def _exists_smaller_in_orbit(rows: tuple[int, ...], n: int, m: int, bound: tuple[int, ...]) -> bool:
    """True when some row/column permutation beats `bound` lexicographically."""

    def rec(p: int, cols: list[int], remaining: list[int]) -> bool:
        for x_next, idx, new_cols in _children(cols, remaining, m):
            if x_next < bound[p]:
                return True  # any completion of this prefix wins
            if x_next > bound[p]:
                break  # sorted children: all later ones exceed the bound too
            if p + 1 < n and rec(p + 1, new_cols, remaining[:idx] + remaining[idx + 1 :]):
                return True
        return False

    return rec(0, [0] * m, list(rows))


def _check_canonical_dims(a: BinaryMatrix):
    if a.n > MAX_CANONICAL_DIM or a.m > MAX_CANONICAL_DIM:
        raise CapExceededError(
            f"canonical-form search supports at most {MAX_CANONICAL_DIM}x{MAX_CANONICAL_DIM}, got {a.n}x{a.m}"
        )


def canonical_form(a: BinaryMatrix) -> BinaryMatrix:
    """The unique equivalent matrix with lexicographically minimal row code."""
    _check_canonical_dims(a)
    return BinaryMatrix(a.n, a.m, tuple(_min_orbit_row_code(a.rows, a.n, a.m)))


def is_canonical(a: BinaryMatrix) -> bool:
    """True when no equivalent matrix has a smaller row code."""
    _check_canonical_dims(a)
    return not _exists_smaller_in_orbit(a.rows, a.n, a.m, a.rows)


def equivalent(a: BinaryMatrix, b: BinaryMatrix) -> bool:
    """True when b is reachable from a by permuting rows and columns."""
    if a.n != b.n or a.m != b.m:
        raise ValueError(f"dimension mismatch: {a.n}x{a.m} vs {b.n}x{b.m}")
    if a.ones() != b.ones():
        return False
    return canonical_form(a) == canonical_form(b)


def equivalence_class(a: BinaryMatrix) -> list[BinaryMatrix]:
    """All distinct matrices equivalent to a, sorted by row code.

    Walks the full orbit by applying every row and column permutation,
    so it is restricted to small matrices.
    """
    if a.n > MAX_CLASS_DIM or a.m > MAX_CLASS_DIM:
        raise CapExceededError(
            f"orbit enumeration supports at most {MAX_CLASS_DIM}x{MAX_CLASS_DIM}, got {a.n}x{a.m}"
        )
    m = a.m
    seen = set()
    for rho in permutations(range(a.n)):
        reordered = [a.rows[i] for i in rho]
        for sigma in permutations(range(m)):
            rows = tuple(
                sum(((r >> (m - 1 - j)) & 1) << (m - 1 - sigma[j]) for j in range(m))
                for r in reordered
            )
            seen.add(rows)
    return [BinaryMatrix(a.n, a.m, rows) for rows in sorted(seen)]


@dataclass(frozen=True)
class EquivalenceClassReport:
    """Orbit summary: canonical representative, size, semi-canonical members."""

    representative: BinaryMatrix
    class_size: int
    semi_canonical_members: tuple[BinaryMatrix, ...]


def class_report(a: BinaryMatrix) -> EquivalenceClassReport:
    """Summarize the orbit of `a` by exhaustive walk (independent of the search)."""
    members = equivalence_class(a)
    return EquivalenceClassReport(
        representative=members[0],
        class_size=len(members),
        semi_canonical_members=tuple(x for x in members if is_semi_canonical(x)),
    )


def monotone_transposition_chain(
    a: BinaryMatrix,
    rng: random.Random,
    axis: Literal["row", "col"] = "row",
    direction: int = -1,
    max_proposals: int | None = None,
) -> tuple[BinaryMatrix, list[Transposition]]:
    """Random chain of row or column swaps, each moving the code one way.

    Proposes random transpositions and keeps one only if it moves the row
    code (axis="row") or the column code (axis="col") strictly in
    `direction` (-1 decreasing, +1 increasing); at most `max_proposals`
    proposals are made (default n*m).

    These chains exercise the monotone-swap laws: a chain of row swaps
    that strictly lowers the row code at every step lowers the column
    code overall, and symmetrically a chain of column swaps that strictly
    lowers the column code at every step lowers the row code overall.
    The increasing variants hold with every inequality reversed.
    """
    if direction not in (-1, 1):
        raise ValueError("direction must be -1 or +1")
    size = a.n if axis == "row" else a.m
    if axis not in ("row", "col"):
        raise ValueError(f"unknown axis {axis!r}")
    if max_proposals is None:
        max_proposals = a.n * a.m
    current = a
    chain: list[Transposition] = []
    if size < 2:
        return current, chain
    for _ in range(max_proposals):
        u = rng.randrange(size)
        v = rng.randrange(size - 1)
        if v >= u:
            v += 1
        t = Transposition(u, v)
        if axis == "row":
            candidate = apply_row_transposition(current, t)
            moved = compare_lex(row_code(candidate).values, row_code(current).values)
        else:
            candidate = apply_col_transposition(current, t)
            moved = compare_lex(col_code(candidate).values, col_code(current).values)
        if moved == direction:
            current = candidate
            chain.append(t)
    return current, chain
