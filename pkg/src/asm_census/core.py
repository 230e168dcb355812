"""Alternating sign matrices: validation, symmetry actions, center classification.

An alternating sign matrix (ASM) is a square matrix over {-1, 0, 1} in which
every row and column prefix sum lies in {0, 1} and every full row and column
sum equals 1.  That prefix-sum form is equivalent to the usual description
(nonzero entries alternate in sign along each line, first and last nonzero
entry of each line is +1) and is what `validate` checks directly.

All indices reported in error messages are 1-based, matching the usual
matrix convention.  Internally rows are stored 0-based as tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

ENGINE_VERSION = "1.0.0"


# ---------------------------------------------------------------------------
# errors


class AsmError(Exception):
    """Base class for every error raised by this package."""


class NotSquareError(AsmError):
    pass


class EntryOutOfRangeError(AsmError):
    def __init__(self, row: int, col: int):
        super().__init__(row, col)
        self.row = row
        self.col = col

    def __str__(self):
        return f"entry at ({self.row}, {self.col}) is not in {{-1, 0, 1}}"


class PartialSumViolationError(AsmError):
    def __init__(self, axis: str, index: int, position: int):
        super().__init__(axis, index, position)
        self.axis = axis
        self.index = index
        self.position = position

    def __str__(self):
        return (f"{self.axis} {self.index}: prefix sum at position "
                f"{self.position} is outside {{0, 1}}")


class FullSumViolationError(AsmError):
    def __init__(self, axis: str, index: int):
        super().__init__(axis, index)
        self.axis = axis
        self.index = index

    def __str__(self):
        return f"{self.axis} {self.index}: entries do not sum to 1"


class EvenOrderError(AsmError):
    pass


class NotSymmetricError(AsmError):
    pass


class UnsupportedClassError(AsmError):
    pass


class StateFullError(AsmError):
    pass


class CapExceededError(AsmError):
    pass


class NotApplicableError(AsmError):
    pass


class CenterSignMismatchError(AsmError):
    """Internal bug guard: quarter-turn matrix with the wrong central sign."""


class NeighborMismatchError(AsmError):
    """Internal bug guard: the four cells around the center disagree."""


# ---------------------------------------------------------------------------
# domain types


class SymmetryClass(enum.Enum):
    """Symmetry classes of interest.  Values double as the short CLI codes."""

    PLAIN = "plain"
    HALF_TURN = "ht"
    QUARTER_TURN = "qt"
    DOUBLE_DIAGONAL = "dd"

    @classmethod
    def from_code(cls, code: str) -> "SymmetryClass":
        for member in cls:
            if member.value == code:
                return member
        raise UnsupportedClassError(f"unknown symmetry class {code!r}")


@dataclass(frozen=True)
class CenterStructure:
    """Classification of the center of a symmetric matrix of odd order.

    `center` is the sign of the central entry.  `neighbor` is present only
    for quarter-turn matrices of order >= 3: the common value of the four
    orthogonally adjacent cells of the center (the quarter turn cycles those
    four cells, so a single value describes them all).
    """

    center: int
    neighbor: int | None = None

    def __post_init__(self):
        if self.center not in (-1, 1):
            raise ValueError(f"center must be -1 or +1, got {self.center}")
        if self.neighbor is not None:
            allowed = (0, -1) if self.center == 1 else (1, 0)
            if self.neighbor not in allowed:
                raise ValueError(
                    f"neighbor {self.neighbor} impossible next to center "
                    f"{self.center:+d}")

    def key(self) -> str:
        """Stable serialization key: "center:+1", "center:-1,adj:0", ..."""
        base = f"center:{self.center:+d}"
        if self.neighbor is None:
            return base
        adj = f"{self.neighbor:+d}" if self.neighbor else "0"
        return f"{base},adj:{adj}"


class AsmMatrix:
    """A validated, immutable alternating sign matrix.

    Construct through `validate`.  The direct constructor trusts its input
    (the enumeration engine uses it on rows it generated itself).
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: tuple[tuple[int, ...], ...]):
        self._rows = rows

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def n(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j, 1-based."""
        return self._rows[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, AsmMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"AsmMatrix({self._rows!r})"

    def __str__(self):
        return render_grid(self)


# ---------------------------------------------------------------------------
# validation


def _check_line(axis: str, index: int, line: tuple[int, ...]) -> None:
    total = 0
    last = len(line)
    for pos, v in enumerate(line, start=1):
        total += v
        if pos < last and total not in (0, 1):
            raise PartialSumViolationError(axis, index, pos)
    if total != 1:
        raise FullSumViolationError(axis, index)


def validate(raw) -> AsmMatrix:
    """Check the prefix-sum characterization and return an immutable matrix.

    Raises NotSquareError, EntryOutOfRangeError, PartialSumViolationError or
    FullSumViolationError (1-based indices).  Rows are checked before
    columns; within an axis, lines are checked in order.
    """
    rows = [tuple(r) for r in raw]
    n = len(rows)
    if n == 0:
        raise NotSquareError("matrix is empty")
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            raise NotSquareError(f"row {i} has {len(row)} entries, expected {n}")
    clean = []
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=1):
            if v not in (-1, 0, 1):
                raise EntryOutOfRangeError(i, j)
        clean.append(tuple(int(v) for v in row))
    for i, row in enumerate(clean, start=1):
        _check_line("row", i, row)
    for j in range(n):
        _check_line("column", j + 1, tuple(row[j] for row in clean))
    return AsmMatrix(tuple(clean))


def identity(n: int) -> AsmMatrix:
    """The n x n identity permutation matrix."""
    return AsmMatrix(tuple(tuple(1 if i == j else 0 for j in range(n))
                           for i in range(n)))


_GLYPHS = {1: "+", 0: ".", -1: "-"}


def render_grid(a: AsmMatrix) -> str:
    """Text grid with '+' for 1, '.' for 0, '-' for -1."""
    return "\n".join("".join(_GLYPHS[v] for v in row) for row in a.rows)


# ---------------------------------------------------------------------------
# symmetry group actions


def half_turn(a: AsmMatrix) -> AsmMatrix:
    """Rotate by 180 degrees."""
    return AsmMatrix(tuple(tuple(reversed(row)) for row in reversed(a.rows)))


def quarter_turn(a: AsmMatrix) -> AsmMatrix:
    """Rotate by 90 degrees; applying it twice equals half_turn."""
    n = a.n
    g = a.rows
    return AsmMatrix(tuple(tuple(g[n - 1 - j][i] for j in range(n))
                           for i in range(n)))


def transpose(a: AsmMatrix) -> AsmMatrix:
    """Flip in the main diagonal."""
    return AsmMatrix(tuple(zip(*a.rows)))


def antitranspose(a: AsmMatrix) -> AsmMatrix:
    """Flip in the antidiagonal; antitranspose(transpose(a)) == half_turn(a)."""
    n = a.n
    g = a.rows
    return AsmMatrix(tuple(tuple(g[n - 1 - j][n - 1 - i] for j in range(n))
                           for i in range(n)))


def is_symmetric(a: AsmMatrix, symmetry: SymmetryClass) -> bool:
    if symmetry is SymmetryClass.PLAIN:
        return True
    if symmetry is SymmetryClass.HALF_TURN:
        return a == half_turn(a)
    if symmetry is SymmetryClass.QUARTER_TURN:
        return a == quarter_turn(a)
    if symmetry is SymmetryClass.DOUBLE_DIAGONAL:
        return a == transpose(a) and a == antitranspose(a)
    raise UnsupportedClassError(f"unknown symmetry class {symmetry!r}")


# ---------------------------------------------------------------------------
# center classification (odd order)


def _require_odd(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise EvenOrderError(f"positive odd order required, got {n}")


def forced_center_sign(n: int) -> int:
    """The central entry every quarter-turn symmetric matrix of order n has.

    For n = 2m+1 the sign is +1 when m is even (n = 1 mod 4) and -1 when m
    is odd (n = 3 mod 4).
    """
    _require_odd(n)
    m = (n - 1) // 2
    return 1 if m % 2 == 0 else -1


def noncentral_counts(a: AsmMatrix) -> tuple[int, int]:
    """Counts (kplus, kminus) of noncentral entries equal to +1 / -1.

    Always kplus + kminus + center == n; on quarter-turn symmetric matrices
    both counts are divisible by 4.
    """
    _require_odd(a.n)
    m = a.n // 2
    kplus = sum(row.count(1) for row in a.rows)
    kminus = sum(row.count(-1) for row in a.rows)
    center = a.rows[m][m]
    if center == 1:
        kplus -= 1
    elif center == -1:
        kminus -= 1
    return kplus, kminus


def center_structure(a: AsmMatrix, symmetry: SymmetryClass) -> CenterStructure:
    """Classify the center of a symmetric matrix of odd order.

    Half-turn and double-diagonal matrices are classified by the sign of the
    central entry alone.  Quarter-turn matrices carry a second datum: the
    common value of the four orthogonal neighbors of the center.  The
    quarter turn permutes those four cells cyclically, so they must agree;
    disagreement (NeighborMismatchError) or a central sign other than
    forced_center_sign(n) (CenterSignMismatchError) can only come from a bug
    upstream.  At n = 1 there are no neighbor cells and neighbor is absent.
    """
    if symmetry is SymmetryClass.PLAIN:
        raise UnsupportedClassError("center_structure requires ht, qt or dd")
    n = a.n
    _require_odd(n)
    if not is_symmetric(a, symmetry):
        raise NotSymmetricError(f"matrix is not {symmetry.value}-symmetric")
    m = n // 2
    center = a.rows[m][m]
    if symmetry is not SymmetryClass.QUARTER_TURN:
        return CenterStructure(center)
    if center != forced_center_sign(n):
        raise CenterSignMismatchError(
            f"qt matrix of order {n} has center {center:+d}, "
            f"expected {forced_center_sign(n):+d}")
    if n == 1:
        return CenterStructure(center)
    around = (a.rows[m - 1][m], a.rows[m][m - 1],
              a.rows[m][m + 1], a.rows[m + 1][m])
    if any(v != around[0] for v in around[1:]):
        raise NeighborMismatchError(
            f"cells around the center disagree: {around}")
    return CenterStructure(center, around[0])
