"""Binary matrices as tuples of machine-word rows.

A matrix over {0,1} is stored as one unsigned integer per row, with the
leftmost column in the most significant bit.  Read this way, each row IS
the natural number its bits spell out, so the "row code" of a matrix is
literally its storage.  The column code is the same reading applied to
the transpose: column j, scanned top to bottom, with row 0 as the most
significant bit.

Conventions used throughout the package:

    bit of entry a[i][j]  =  (rows[i] >> (m - 1 - j)) & 1
    row code  r(A) = <x_0, ..., x_{n-1}>,  x_i = rows[i]
    col code  c(A) = <y_0, ..., y_{m-1}>,  y_j = column j read MSB-first

Column counts are capped at 63 so row codes always fit a single machine
word; matrices wider than that are rejected outright instead of silently
degrading to big-integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

MAX_COLUMNS = 63


class CapExceededError(ValueError):
    """A size limit (column width, enumeration order, search bound) was exceeded."""


class FormatError(ValueError):
    """Malformed matrix / edge-list / family text."""


@dataclass(frozen=True)
class BinaryMatrix:
    """An n x m matrix over {0,1}; immutable, hashable, rows as integers."""

    n: int
    m: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"matrix dimensions must be positive, got {self.n}x{self.m}")
        if self.m > MAX_COLUMNS:
            raise CapExceededError(f"at most {MAX_COLUMNS} columns supported, got {self.m}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        limit = 1 << self.m
        for i, r in enumerate(self.rows):
            if not 0 <= r < limit:
                raise ValueError(f"row {i} value {r} out of range for width {self.m}")
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int], m: int) -> "BinaryMatrix":
        return cls(len(rows), m, tuple(rows))

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "BinaryMatrix":
        """Build from a list of 0/1 lists (row-major)."""
        n = len(bits)
        m = len(bits[0])
        rows = []
        for row in bits:
            if len(row) != m:
                raise ValueError("ragged bit rows")
            acc = 0
            for b in row:
                acc = (acc << 1) | (b & 1)
            rows.append(acc)
        return cls(n, m, tuple(rows))

    @classmethod
    def from_strings(cls, lines: Sequence[str]) -> "BinaryMatrix":
        """Build from '0'/'1' strings, one per row."""
        return cls.from_bits([[int(ch) for ch in line] for line in lines])

    @classmethod
    def zeros(cls, n: int, m: int) -> "BinaryMatrix":
        return cls(n, m, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> (self.m - 1 - j)) & 1

    def ones(self) -> int:
        """Total number of 1 entries."""
        return sum(r.bit_count() for r in self.rows)

    def to_strings(self) -> list[str]:
        return [format(r, f"0{self.m}b") for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class RowTuple:
    """Ordered row codes <x_0, ..., x_{n-1}>, each an m-bit integer."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("empty row tuple")
        limit = 1 << self.m
        for v in self.values:
            if not 0 <= v < limit:
                raise ValueError(f"value {v} out of range for width {self.m}")
        object.__setattr__(self, "values", tuple(self.values))

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class ColTuple:
    """Ordered column codes <y_0, ..., y_{m-1}>, each an n-bit integer."""

    values: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.values) < 1:
            raise ValueError("empty column tuple")
        limit = 1 << self.n
        for v in self.values:
            if not 0 <= v < limit:
                raise ValueError(f"value {v} out of range for height {self.n}")
        object.__setattr__(self, "values", tuple(self.values))

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., size-1}; mapping[i] is the image of i."""

    size: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if sorted(self.mapping) != list(range(self.size)):
            raise ValueError(f"not a bijection on 0..{self.size - 1}: {self.mapping}")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(size, tuple(range(size)))

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def compose(self, inner: "Permutation") -> "Permutation":
        """self after inner: (self.compose(inner))(i) == self(inner(i))."""
        if inner.size != self.size:
            raise ValueError("size mismatch in composition")
        return Permutation(self.size, tuple(self.mapping[inner.mapping[i]] for i in range(self.size)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.mapping):
            inv[img] = i
        return Permutation(self.size, tuple(inv))


@dataclass(frozen=True)
class Transposition:
    """A swap of two distinct indices."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("transposition indices must differ")
        if self.u < 0 or self.v < 0:
            raise ValueError("transposition indices must be non-negative")

    def as_permutation(self, size: int) -> Permutation:
        mapping = list(range(size))
        mapping[self.u], mapping[self.v] = self.v, self.u
        return Permutation(size, tuple(mapping))


def row_code(a: BinaryMatrix) -> RowTuple:
    """Row reading of a matrix; identical to its row storage."""
    return RowTuple(a.rows, a.m)


def col_code(a: BinaryMatrix) -> ColTuple:
    """Column reading of a matrix: column j scanned top-down, row 0 as MSB."""
    n, m = a.n, a.m
    ys = []
    for j in range(m):
        shift = m - 1 - j
        y = 0
        for i in range(n):
            y = (y << 1) | ((a.rows[i] >> shift) & 1)
        ys.append(y)
    return ColTuple(tuple(ys), n)


def from_row_code(t: RowTuple) -> BinaryMatrix:
    """Inverse of row_code; total because row codes determine the matrix."""
    return BinaryMatrix(len(t.values), t.m, t.values)


def transpose(a: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix(a.m, a.n, tuple(col_code(a).values))


def permute(a: BinaryMatrix, rho: Permutation, sigma: Permutation) -> BinaryMatrix:
    """Relocate entries: entry (i, j) of `a` lands at (rho(i), sigma(j))."""
    if rho.size != a.n:
        raise ValueError(f"row permutation size {rho.size} != {a.n}")
    if sigma.size != a.m:
        raise ValueError(f"column permutation size {sigma.size} != {a.m}")
    m = a.m
    new_rows = [0] * a.n
    for i, r in enumerate(a.rows):
        acc = 0
        for j in range(m):
            if (r >> (m - 1 - j)) & 1:
                acc |= 1 << (m - 1 - sigma(j))
        new_rows[rho(i)] = acc
    return BinaryMatrix(a.n, a.m, tuple(new_rows))


def apply_row_transposition(a: BinaryMatrix, t: Transposition) -> BinaryMatrix:
    """Swap two rows."""
    if t.u >= a.n or t.v >= a.n:
        raise ValueError(f"row index out of range for {a.n} rows: {t}")
    rows = list(a.rows)
    rows[t.u], rows[t.v] = rows[t.v], rows[t.u]
    return BinaryMatrix(a.n, a.m, tuple(rows))


def apply_col_transposition(a: BinaryMatrix, t: Transposition) -> BinaryMatrix:
    """Swap two columns."""
    if t.u >= a.m or t.v >= a.m:
        raise ValueError(f"column index out of range for {a.m} columns: {t}")
    pu = a.m - 1 - t.u
    pv = a.m - 1 - t.v
    rows = []
    for r in a.rows:
        bu = (r >> pu) & 1
        bv = (r >> pv) & 1
        if bu != bv:
            r ^= (1 << pu) | (1 << pv)
        rows.append(r)
    return BinaryMatrix(a.n, a.m, tuple(rows))


def compare_lex(a: Sequence[int], b: Sequence[int]) -> int:
    """Lexicographic comparison of equal-length integer tuples: -1, 0 or 1."""
    ta, tb = tuple(a), tuple(b)
    if len(ta) != len(tb):
        raise ValueError(f"length mismatch: {len(ta)} vs {len(tb)}")
    if ta < tb:
        return -1
    if ta > tb:
        return 1
    return 0


# ---------------------------------------------------------------------------
# Text formats.
#
# Grid format: one line of '0'/'1' characters per row.
# Compact format: whitespace-separated tokens  n m x_0 ... x_{n-1}
# (decimal row codes).  The compact parser is token-based, so a matrix
# may be written on one line or spread over several.


def format_matrix(a: BinaryMatrix, style: str = "grid") -> str:
    if style == "grid":
        return str(a)
    if style == "compact":
        return f"{a.n} {a.m} " + " ".join(str(r) for r in a.rows)
    raise ValueError(f"unknown matrix format style: {style!r}")


def _take_matrix(tokens: list[str], pos: int) -> tuple[BinaryMatrix, int]:
    if pos + 2 > len(tokens):
        raise FormatError("compact matrix: missing dimensions")
    try:
        n = int(tokens[pos])
        m = int(tokens[pos + 1])
    except ValueError as exc:
        raise FormatError(f"compact matrix: bad dimension token: {exc}") from None
    if n < 1 or m < 1:
        raise FormatError(f"compact matrix: bad dimensions {n}x{m}")
    if pos + 2 + n > len(tokens):
        raise FormatError(f"compact matrix: expected {n} row codes, file ends early")
    try:
        rows = tuple(int(t) for t in tokens[pos + 2 : pos + 2 + n])
    except ValueError as exc:
        raise FormatError(f"compact matrix: bad row code token: {exc}") from None
    try:
        return BinaryMatrix(n, m, rows), pos + 2 + n
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse a single matrix in grid or compact format (auto-detected)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    if len(lines[0].split()) == 1 and set(lines[0]) <= {"0", "1"}:
        width = len(lines[0])
        for ln in lines:
            if len(ln) != width or not set(ln) <= {"0", "1"}:
                raise FormatError(f"bad grid line: {ln!r}")
        return BinaryMatrix.from_strings(lines)
    tokens = text.split()
    matrix, pos = _take_matrix(tokens, 0)
    if pos != len(tokens):
        raise FormatError("trailing tokens after matrix")
    return matrix


def parse_matrices(text: str) -> list[BinaryMatrix]:
    """Parse a concatenation of compact-format matrices."""
    tokens = text.split()
    out = []
    pos = 0
    while pos < len(tokens):
        matrix, pos = _take_matrix(tokens, pos)
        out.append(matrix)
    if not out:
        raise FormatError("no matrices in text")
    return out
