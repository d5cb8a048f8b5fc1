"""Finite universal algebras (G, alpha, beta, mu, iota; G0) and the staged
groupoid verification cascade.

Elements are the integers 1..n with the units occupying 1..m (units-first
numbering). Structure maps are stored as flat tuples and the partial
multiplication as an n x n table in which 0 means "product not defined".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Optional, Sequence


class Level(IntEnum):
    """Highest verification stage passed, in cascade order."""

    MALFORMED = 0
    STRUCTURE = 1
    SEMIGROUPOID = 2
    MONOIDOID = 3
    GROUPOID = 4

    def __str__(self) -> str:
        return self.name.capitalize()


class DiagnosticCode(str, Enum):
    INCOMPLETE_STRUCTURE = "IncompleteStructure"
    UNIT_OUT_OF_RANGE = "UnitOutOfRange"
    NON_INJECTIVE_INVERSION = "NonInjectiveInversion"
    UNIT_NOT_SURJECTIVE = "UnitNotSurjective"
    PRODUCT_ON_NON_COMPOSABLE = "ProductOnNonComposable"
    UNIT_SELF_MAP_VIOLATION = "UnitSelfMapViolation"
    NOT_ASSOCIATIVE = "NotAssociative"
    NO_UNIT = "NoUnit"
    NO_INVERSE = "NoInverse"


@dataclass(frozen=True)
class Diagnostic:
    """First failed condition of a check stage, with its witness elements."""

    code: DiagnosticCode
    witness: tuple[int, ...]

    def message(self) -> str:
        w = self.witness
        code = self.code
        if code is DiagnosticCode.INCOMPLETE_STRUCTURE:
            if len(w) == 1:
                return f"structure incomplete at element {w[0]}"
            return f"structure incomplete: no product for composable pair ({w[0]}, {w[1]})"
        if code is DiagnosticCode.UNIT_OUT_OF_RANGE:
            return f"unit assignment of element {w[0]} is not a unit"
        if code is DiagnosticCode.NON_INJECTIVE_INVERSION:
            return f"inversion is not injective: elements {w[0]} and {w[1]} collide"
        if code is DiagnosticCode.UNIT_NOT_SURJECTIVE:
            return f"unit {w[0]} is not attained by the unit maps"
        if code is DiagnosticCode.PRODUCT_ON_NON_COMPOSABLE:
            return f"product defined on non-composable pair ({w[0]}, {w[1]})"
        if code is DiagnosticCode.UNIT_SELF_MAP_VIOLATION:
            return f"unit {w[0]} is not fixed by the structure maps"
        if code is DiagnosticCode.NOT_ASSOCIATIVE:
            if len(w) == 2:
                return f"pair ({w[0]}, {w[1]}): product leaves its unit fibres (not associative)"
            return f"triple ({w[0]}, {w[1]}, {w[2]}) not associative"
        if code is DiagnosticCode.NO_UNIT:
            return f"element {w[0]} has no unit"
        if code is DiagnosticCode.NO_INVERSE:
            return f"element {w[0]} has no inverse"
        raise AssertionError(code)


@dataclass(frozen=True)
class CheckVerdict:
    """Outcome of the full cascade: achieved level plus first failure."""

    level: Level
    diagnostic: Optional[Diagnostic]

    @property
    def is_groupoid(self) -> bool:
        return self.level is Level.GROUPOID

    def describe(self) -> str:
        if self.is_groupoid:
            return "G is a groupoid"
        return f"G is not a groupoid (level {self.level}): {self.diagnostic.message()}"


def _as_int_tuple(values: Iterable[int], what: str, n: int) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    if len(out) != n:
        raise ValueError(f"{what} must have length {n}, got {len(out)}")
    for v in out:
        if not 0 <= v <= n:
            raise ValueError(f"{what} entries must lie in 0..{n}, got {v}")
    return out


@dataclass(frozen=True)
class FiniteAlgebra:
    """Structure-table record of a finite universal algebra.

    Construction only enforces shape and value ranges (0..n everywhere,
    1 <= m <= n); whether the data actually satisfies the algebra axioms
    is the job of the verification cascade.
    """

    n: int
    m: int
    u_left: tuple[int, ...]
    u_right: tuple[int, ...]
    inv: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n, m = self.n, self.m
        if n < 1:
            raise ValueError(f"element count must be positive, got {n}")
        if not 1 <= m <= n:
            raise ValueError(f"unit count must lie in 1..{n}, got {m}")
        object.__setattr__(self, "u_left", _as_int_tuple(self.u_left, "u_left", n))
        object.__setattr__(self, "u_right", _as_int_tuple(self.u_right, "u_right", n))
        object.__setattr__(self, "inv", _as_int_tuple(self.inv, "inv", n))
        rows = tuple(self.table)
        if len(rows) != n:
            raise ValueError(f"table must have {n} rows, got {len(rows)}")
        object.__setattr__(
            self, "table", tuple(_as_int_tuple(row, "table row", n) for row in rows)
        )

    @property
    def type_pair(self) -> tuple[int, int]:
        return (self.n, self.m)

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    @property
    def units(self) -> range:
        return range(1, self.m + 1)

    def _check_element(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"element index {i} out of range 1..{self.n}")

    def left_unit(self, i: int) -> int:
        self._check_element(i)
        return self.u_left[i - 1]

    def right_unit(self, i: int) -> int:
        self._check_element(i)
        return self.u_right[i - 1]

    def inverse(self, i: int) -> int:
        self._check_element(i)
        return self.inv[i - 1]

    def product(self, i: int, j: int) -> int:
        """Table entry for (i, j); 0 when the product is not defined."""
        self._check_element(i)
        self._check_element(j)
        return self.table[i - 1][j - 1]

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """Lexicographic stream of pairs (i, j) with beta(i) = alpha(j)."""
        ur, ul = self.u_right, self.u_left
        for i in self.elements:
            for j in self.elements:
                if ur[i - 1] == ul[j - 1]:
                    yield (i, j)


def composable(algebra: FiniteAlgebra, i: int, j: int) -> bool:
    """True iff the right unit of i equals the left unit of j."""
    return algebra.right_unit(i) == algebra.left_unit(j)


def validate_structure(algebra: FiniteAlgebra) -> Optional[Diagnostic]:
    """Well-formedness stage: assignments complete and in range, units fixed,
    unit maps surjective, inversion injective, and the table defined exactly
    on composable pairs.

    Scans in a fixed order (per-element assignments, unit self-maps,
    surjectivity/injectivity, then the table row-major) and reports the
    first violated condition.
    """
    n, m = algebra.n, algebra.m
    ul, ur, inv = algebra.u_left, algebra.u_right, algebra.inv
    for i in range(1, n + 1):
        for arr in (ul, ur):
            v = arr[i - 1]
            if v == 0:
                return Diagnostic(DiagnosticCode.INCOMPLETE_STRUCTURE, (i,))
            if v > m:
                return Diagnostic(DiagnosticCode.UNIT_OUT_OF_RANGE, (i,))
        if inv[i - 1] == 0:
            return Diagnostic(DiagnosticCode.INCOMPLETE_STRUCTURE, (i,))
    for k in range(1, m + 1):
        if not (ul[k - 1] == k and ur[k - 1] == k and inv[k - 1] == k):
            return Diagnostic(DiagnosticCode.UNIT_SELF_MAP_VIOLATION, (k,))
    # Unreachable once unit self-maps hold (units already cover 1..m), kept
    # so the scan order matches the documented contract.
    for arr in (ul, ur):
        image = set(arr)
        for u in range(1, m + 1):
            if u not in image:
                return Diagnostic(DiagnosticCode.UNIT_NOT_SURJECTIVE, (u,))
    seen: dict[int, int] = {}
    for i in range(1, n + 1):
        v = inv[i - 1]
        if v in seen:
            return Diagnostic(DiagnosticCode.NON_INJECTIVE_INVERSION, (seen[v], i))
        seen[v] = i
    table = algebra.table
    for i in range(1, n + 1):
        row = table[i - 1]
        ri = ur[i - 1]
        for j in range(1, n + 1):
            t = row[j - 1]
            if ri == ul[j - 1]:
                if t == 0:
                    return Diagnostic(DiagnosticCode.INCOMPLETE_STRUCTURE, (i, j))
            elif t != 0:
                return Diagnostic(DiagnosticCode.PRODUCT_ON_NON_COMPOSABLE, (i, j))
    return None


def check_associativity(algebra: FiniteAlgebra) -> Optional[Diagnostic]:
    """Semigroupoid stage. Assumes validate_structure passed.

    First verifies that every product stays in the unit fibres of its
    factors (alpha(xy) = alpha(x), beta(xy) = beta(y)); without that the
    nested table lookups of the triple scan would be meaningless. Then
    scans all composable triples in lexicographic order.
    """
    n = algebra.n
    ul, ur, table = algebra.u_left, algebra.u_right, algebra.table
    for i in range(1, n + 1):
        ri = ur[i - 1]
        for j in range(1, n + 1):
            if ri != ul[j - 1]:
                continue
            t = table[i - 1][j - 1]
            if ul[t - 1] != ul[i - 1] or ur[t - 1] != ur[j - 1]:
                return Diagnostic(DiagnosticCode.NOT_ASSOCIATIVE, (i, j))
    for i in range(1, n + 1):
        ri = ur[i - 1]
        row_i = table[i - 1]
        for j in range(1, n + 1):
            if ri != ul[j - 1]:
                continue
            ij = row_i[j - 1]
            rj = ur[j - 1]
            row_j = table[j - 1]
            row_ij = table[ij - 1]
            for k in range(1, n + 1):
                if rj != ul[k - 1]:
                    continue
                if row_ij[k - 1] != row_i[row_j[k - 1] - 1]:
                    return Diagnostic(DiagnosticCode.NOT_ASSOCIATIVE, (i, j, k))
    return None


def check_identities(algebra: FiniteAlgebra) -> Optional[Diagnostic]:
    """Monoidoid stage: alpha(x) x = x beta(x) = x for every x."""
    table, ul, ur = algebra.table, algebra.u_left, algebra.u_right
    for i in range(1, algebra.n + 1):
        if table[ul[i - 1] - 1][i - 1] != i or table[i - 1][ur[i - 1] - 1] != i:
            return Diagnostic(DiagnosticCode.NO_UNIT, (i,))
    return None


def check_inverses(algebra: FiniteAlgebra) -> Optional[Diagnostic]:
    """Groupoid stage: x and iota(x) compose both ways, with
    x iota(x) = alpha(x) and iota(x) x = beta(x).

    A pair (x, iota(x)) that is not even composable counts as a failure
    here rather than being skipped.
    """
    table, ul, ur, inv = algebra.table, algebra.u_left, algebra.u_right, algebra.inv
    for i in range(1, algebra.n + 1):
        j = inv[i - 1]
        if ur[i - 1] != ul[j - 1] or ur[j - 1] != ul[i - 1]:
            return Diagnostic(DiagnosticCode.NO_INVERSE, (i,))
        if table[i - 1][j - 1] != ul[i - 1] or table[j - 1][i - 1] != ur[i - 1]:
            return Diagnostic(DiagnosticCode.NO_INVERSE, (i,))
    return None


_STAGES = (
    (validate_structure, Level.MALFORMED),
    (check_associativity, Level.STRUCTURE),
    (check_identities, Level.SEMIGROUPOID),
    (check_inverses, Level.MONOIDOID),
)


def classify_structure(algebra: FiniteAlgebra) -> CheckVerdict:
    """Run the full cascade, stopping at the first failing stage."""
    for stage, level_on_fail in _STAGES:
        diagnostic = stage(algebra)
        if diagnostic is not None:
            return CheckVerdict(level_on_fail, diagnostic)
    return CheckVerdict(Level.GROUPOID, None)
