"""S-permutation matrices and Sudoku grids built from disjoint families.

An S-permutation matrix of base n is an n^2 x n^2 permutation matrix
that also has exactly one 1 in every aligned n x n block.  Two such
matrices are disjoint when no cell carries a 1 in both.  Stacking n^2
pairwise disjoint S-permutation matrices with weights 1..n^2 yields a
Sudoku grid, and every Sudoku grid arises this way, so family search
and grid construction are two views of the same structure.

Base 2 is fully enumerable at desk scale.  Base 3 has 46656
S-permutation matrices and an astronomical number of disjoint families;
the family stream for base 3 is a lazy depth-first walk meant to be
consumed as a prefix, and is gated behind an explicit opt-in.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import isqrt
from typing import Iterator, Sequence

from .matrix import BinaryMatrix, CapExceededError, FormatError, format_matrix, parse_matrices


@dataclass(frozen=True)
class SPermCandidate:
    """A base-n candidate: an n^2 x n^2 binary matrix, not yet validated."""

    base: int
    matrix: BinaryMatrix

    def __post_init__(self):
        size = self.base * self.base
        if self.matrix.n != size or self.matrix.m != size:
            raise ValueError(
                f"base {self.base} needs a {size}x{size} matrix, got {self.matrix.n}x{self.matrix.m}"
            )


def first_s_permutation_violation(a: BinaryMatrix, base: int) -> str | None:
    """Reason the matrix is not an S-permutation matrix, or None if it is."""
    size = base * base
    if a.n != size or a.m != size:
        raise ValueError(f"expected a {size}x{size} matrix for base {base}, got {a.n}x{a.m}")
    for i, r in enumerate(a.rows):
        if r.bit_count() != 1:
            return f"row {i + 1} has {r.bit_count()} ones"
    for j in range(size):
        ones = sum((r >> (size - 1 - j)) & 1 for r in a.rows)
        if ones != 1:
            return f"column {j + 1} has {ones} ones"
    for bk in range(base):
        for bl in range(base):
            mask = ((1 << base) - 1) << (size - base * (bl + 1))
            ones = sum((a.rows[i] & mask).bit_count() for i in range(base * bk, base * bk + base))
            if ones != 1:
                return f"block ({bk + 1}, {bl + 1}) has {ones} ones"
    return None


def is_s_permutation(a: BinaryMatrix, base: int) -> bool:
    """True when every row, column and aligned base x base block has one 1."""
    return first_s_permutation_violation(a, base) is None


def disjoint(a: SPermCandidate, b: SPermCandidate) -> bool:
    """True when no position carries a 1 in both matrices."""
    if a.matrix.n != b.matrix.n or a.matrix.m != b.matrix.m:
        raise ValueError("dimension mismatch")
    return all(x & y == 0 for x, y in zip(a.matrix.rows, b.matrix.rows))


def enumerate_s_permutations(base: int) -> Iterator[SPermCandidate]:
    """Yield every S-permutation matrix of the given base exactly once.

    Each matrix is determined by one permutation per block row (which
    block column each row hits) and one per block column (which column
    inside the block each block row hits), giving (n!)^(2n) matrices.
    """
    if base not in (2, 3):
        raise CapExceededError(f"enumeration supports bases 2 and 3, got {base}")
    n = base
    size = n * n
    perms = list(permutations(range(n)))
    for alphas in product(perms, repeat=n):
        # invert once: rows_in_block[k][l] = row inside block row k hitting block column l
        inv = [[0] * n for _ in range(n)]
        for k in range(n):
            for i in range(n):
                inv[k][alphas[k][i]] = i
        for betas in product(perms, repeat=n):
            rows = [0] * size
            for k in range(n):
                for l in range(n):
                    i = inv[k][l]
                    c = betas[l][k]
                    rows[n * k + i] = 1 << (size - 1 - (n * l + c))
            yield SPermCandidate(base, BinaryMatrix(size, size, tuple(rows)))


def find_disjoint_families(base: int, allow_slow: bool = False) -> Iterator[tuple[SPermCandidate, ...]]:
    """Yield families of n^2 mutually disjoint S-permutation matrices.

    Families come out as tuples sorted by row code, each set exactly
    once.  Base 2 completes quickly; base 3 is a practically endless
    stream (take a prefix) and must be opted into with allow_slow.
    """
    if base not in (2, 3):
        raise CapExceededError(f"family search supports bases 2 and 3, got {base}")
    if base == 3 and not allow_slow:
        raise CapExceededError("base-3 family search is long-running; pass allow_slow=True")
    members = sorted(enumerate_s_permutations(base), key=lambda sp: sp.matrix.rows)
    want = base * base

    def extend(chosen: list[SPermCandidate], candidates: list[SPermCandidate]):
        if len(chosen) == want:
            yield tuple(chosen)
            return
        # candidates are already mutually disjoint with everything chosen
        for idx, cand in enumerate(candidates):
            narrowed = [c for c in candidates[idx + 1 :] if disjoint(cand, c)]
            if len(narrowed) < want - len(chosen) - 1:
                continue
            chosen.append(cand)
            yield from extend(chosen, narrowed)
            chosen.pop()

    yield from extend([], members)


@dataclass(frozen=True)
class SudokuMatrix:
    """An n^2 x n^2 grid over 1..n^2 with valid rows, columns and blocks."""

    base: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        size = self.base * self.base
        want = set(range(1, size + 1))
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"expected a {size}x{size} grid")
        for i, row in enumerate(self.entries):
            if set(row) != want:
                raise ValueError(f"row {i + 1} is not a permutation of 1..{size}")
        for j in range(size):
            if {row[j] for row in self.entries} != want:
                raise ValueError(f"column {j + 1} is not a permutation of 1..{size}")
        for bk in range(self.base):
            for bl in range(self.base):
                block = {
                    self.entries[i][j]
                    for i in range(self.base * bk, self.base * bk + self.base)
                    for j in range(self.base * bl, self.base * bl + self.base)
                }
                if block != want:
                    raise ValueError(f"block ({bk + 1}, {bl + 1}) is not a permutation of 1..{size}")


def compose_sudoku(parts: Sequence[SPermCandidate]) -> SudokuMatrix:
    """Stack n^2 pairwise disjoint S-permutation matrices into a grid.

    Part k (1-based) contributes the symbol k at each of its 1 cells.
    The first violated precondition is reported: a part that is not an
    S-permutation matrix by index, or the first overlapping pair.
    """
    if not parts:
        raise ValueError("empty family")
    base = parts[0].base
    size = base * base
    if len(parts) != size:
        raise ValueError(f"base {base} needs {size} parts, got {len(parts)}")
    for idx, part in enumerate(parts):
        if part.base != base:
            raise ValueError(f"part {idx + 1} has base {part.base}, expected {base}")
        reason = first_s_permutation_violation(part.matrix, base)
        if reason is not None:
            raise ValueError(f"part {idx + 1} is not an S-permutation matrix: {reason}")
    for (i, p), (j, q) in combinations(enumerate(parts), 2):
        if not disjoint(p, q):
            raise ValueError(f"parts {i + 1} and {j + 1} overlap")
    grid = [[0] * size for _ in range(size)]
    for k, part in enumerate(parts, start=1):
        for i, r in enumerate(part.matrix.rows):
            for j in range(size):
                if (r >> (size - 1 - j)) & 1:
                    grid[i][j] = k
    return SudokuMatrix(base, tuple(tuple(row) for row in grid))


def decompose_sudoku(m: SudokuMatrix) -> list[SPermCandidate]:
    """Split a grid into the indicator matrices of its symbols 1..n^2."""
    size = m.base * m.base
    parts = []
    for k in range(1, size + 1):
        rows = tuple(
            sum(1 << (size - 1 - j) for j in range(size) if m.entries[i][j] == k)
            for i in range(size)
        )
        parts.append(SPermCandidate(m.base, BinaryMatrix(size, size, rows)))
    return parts


def format_family(parts: Sequence[SPermCandidate]) -> str:
    """One member per line, compact row-code format."""
    return "\n".join(format_matrix(p.matrix, "compact") for p in parts)


def parse_family(text: str) -> list[SPermCandidate]:
    """Parse a family file: a token stream of compact matrices."""
    matrices = parse_matrices(text)
    parts = []
    for a in matrices:
        if a.n != a.m:
            raise FormatError(f"family members must be square, got {a.n}x{a.m}")
        base = isqrt(a.n)
        if base * base != a.n:
            raise FormatError(f"family member order {a.n} is not a perfect square")
        parts.append(SPermCandidate(base, a))
    return parts


def format_sudoku(m: SudokuMatrix) -> str:
    """Base on the first line, then the grid row by row."""
    lines = [str(m.base)]
    lines += [" ".join(str(v) for v in row) for row in m.entries]
    return "\n".join(lines)
