"""Upper diagrams as 0/1 fillings of Young shapes, and the involution
that swaps maximal chain statistics by local moves on the filling.

Write the closers of a diagram as i_1 < ... < i_c and the openers as
j_1 < ... < j_c (a transient or fixed vertex appears in both lists).
Give each closer i the width p(i) = number of openers left of i, plus
one when i is a positive vertex that is itself an opener.  Stacking the
widths from the largest closer down yields a weakly decreasing shape;
the arc from opener j_s to closer i_r marks the cell in column s and
row c - r + 1.  Under this encoding a crossing chain of size k appears
as an anti-identity pattern of k cells whose spanning rectangle fits in
the shape, and a nesting chain as an identity pattern, so the maximal
chain statistics become pattern sizes in the filling.

The interchange map repeatedly takes a maximal pattern and unwinds it
cell by cell into the opposite pattern on the same rows and columns,
until the two maximal sizes have traded places.  Termination is not
guaranteed in general; a step budget cuts the iteration off and the
trace of moves is surfaced for diagnosis.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .core import (
    Arc,
    SignedPermutation,
    UpperDiagram,
    permutation_from_upper,
    upper_diagram,
)
from .errors import (
    CellOutsideShape,
    InfeasibleSums,
    InvalidOccurrence,
    MissingDiagramLists,
    RowColumnSumViolation,
    StepBudgetExhausted,
)

Cell = tuple[int, int]   # (row, column), 1-indexed, row 1 on top


class ShapeData(NamedTuple):
    shape: tuple[int, ...]
    openers: tuple[int, ...]
    closers: tuple[int, ...]


@dataclass(frozen=True)
class YoungFilling:
    """A 0/1 filling with one 1 per row and at most one per column.

    openers/closers record which diagram vertices the columns and rows
    stand for; fillings parsed from text lack them and support only the
    pattern operations, not the way back to a diagram.
    """

    shape: tuple[int, ...]
    ones: frozenset[Cell]
    openers: tuple[int, ...] | None = None
    closers: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(self.shape))
        object.__setattr__(self, "ones", frozenset(self.ones))
        if not self.shape or any(w <= 0 for w in self.shape):
            raise CellOutsideShape(f"bad shape {self.shape}")
        if any(a < b for a, b in zip(self.shape, self.shape[1:])):
            raise CellOutsideShape(f"shape {self.shape} is not weakly decreasing")
        rows_seen: set[int] = set()
        cols_seen: set[int] = set()
        for r, c in self.ones:
            if not (1 <= r <= len(self.shape)) or not (1 <= c <= self.shape[r - 1]):
                raise CellOutsideShape(f"cell ({r},{c}) outside shape {self.shape}")
            if r in rows_seen:
                raise RowColumnSumViolation(f"two 1s in row {r}")
            if c in cols_seen:
                raise RowColumnSumViolation(f"two 1s in column {c}")
            rows_seen.add(r)
            cols_seen.add(c)
        if len(rows_seen) != len(self.shape):
            raise RowColumnSumViolation("every row needs exactly one 1")
        if (self.openers is None) != (self.closers is None):
            raise MissingDiagramLists("openers and closers come together")
        if self.openers is not None:
            if len(self.openers) != len(self.shape) or len(self.closers) != len(self.shape):
                raise MissingDiagramLists("opener/closer lists must match the row count")

    def sorted_cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(self.ones, key=lambda rc: rc[1]))


def young_shape(d: UpperDiagram) -> ShapeData:
    """Shape and vertex lists of the filling encoding of d."""
    openers = tuple(sorted(a.start for a in d.arcs))
    closers = tuple(sorted(a.end for a in d.arcs))
    opener_set = set(openers)

    def width(i: int) -> int:
        w = bisect.bisect_left(openers, i)
        if i > 0 and i in opener_set:
            w += 1
        return w

    shape = tuple(width(i) for i in reversed(closers))
    return ShapeData(shape, openers, closers)


def xi(d: UpperDiagram) -> YoungFilling:
    """Encode a diagram as a filling: the arc j_s -> i_r fills the cell
    in column s and row c - r + 1."""
    shape, openers, closers = young_shape(d)
    col_of = {v: s for s, v in enumerate(openers, start=1)}
    row_of = {v: len(closers) - r + 1 for r, v in enumerate(closers, start=1)}
    ones = set()
    for a in d.arcs:
        r, c = row_of[a.end], col_of[a.start]
        if c > shape[r - 1]:
            raise CellOutsideShape(
                f"arc {a} maps to ({r},{c}) outside shape {shape}"
            )
        ones.add((r, c))
    return YoungFilling(shape, frozenset(ones), openers, closers)


def xi_inverse(f: YoungFilling) -> UpperDiagram:
    """Rebuild the diagram from a filling that carries its vertex lists."""
    if f.openers is None or f.closers is None:
        raise MissingDiagramLists("this filling has no opener/closer lists")
    c = len(f.shape)
    arcs = set()
    for r, col in f.ones:
        arcs.add(Arc(f.openers[col - 1], f.closers[c - r]))
    n = max(abs(v) for v in f.openers)
    return UpperDiagram(n, frozenset(arcs))


class PatternKind(Enum):
    IDENTITY = "identity"            # rows grow with columns; nesting side
    ANTI_IDENTITY = "anti_identity"  # rows shrink as columns grow; crossing side


@dataclass(frozen=True)
class PatternOccurrence:
    kind: PatternKind
    cells: tuple[Cell, ...]   # sorted by column

    @property
    def k(self) -> int:
        return len(self.cells)


def _occurrence_ok(cells: Sequence[Cell], shape: tuple[int, ...], kind: PatternKind) -> bool:
    cols = [c for _, c in cells]
    rows = [r for r, _ in cells]
    if any(c2 <= c1 for c1, c2 in zip(cols, cols[1:])):
        return False
    if kind is PatternKind.IDENTITY:
        if any(r2 <= r1 for r1, r2 in zip(rows, rows[1:])):
            return False
        # spanning rectangle closes at the last cell, inside by assumption
        return True
    if any(r2 >= r1 for r1, r2 in zip(rows, rows[1:])):
        return False
    # deepest row and rightmost column must meet inside the shape
    return cols[-1] <= shape[rows[0] - 1]


def _all_occurrences(f: YoungFilling, kind: PatternKind) -> list[tuple[Cell, ...]]:
    """Every occurrence of the pattern, as column-sorted cell tuples.
    Fillings here carry at most one 1 per row and column, so the chain
    count stays tiny."""
    cells = f.sorted_cells()
    found: list[tuple[Cell, ...]] = []

    def extend(chain: list[Cell], rest: tuple[Cell, ...]):
        found.append(tuple(chain))
        for idx, nxt in enumerate(rest):
            r, c = nxt
            lr, lc = chain[-1]
            if c <= lc:
                continue
            if kind is PatternKind.IDENTITY and r <= lr:
                continue
            if kind is PatternKind.ANTI_IDENTITY:
                if r >= lr:
                    continue
                if c > f.shape[chain[0][0] - 1]:   # rectangle corner left the shape
                    continue
            chain.append(nxt)
            extend(chain, rest[idx + 1:])
            chain.pop()

    for i, cell in enumerate(cells):
        extend([cell], cells[i + 1:])
    return found


def find_max_pattern(f: YoungFilling, kind: PatternKind) -> PatternOccurrence:
    """Largest occurrence; ties prefer the rightmost column set, then the
    topmost row set, both read from the right."""
    best: tuple[Cell, ...] | None = None
    best_key = None
    for occ in _all_occurrences(f, kind):
        key = (
            len(occ),
            tuple(c for _, c in reversed(occ)),
            tuple(-r for r, _ in reversed(occ)),
        )
        if best_key is None or key > best_key:
            best, best_key = occ, key
    assert best is not None   # every filling has a 1, hence a size-1 occurrence
    return PatternOccurrence(kind, best)


def max_pattern_size(cells: Iterable[Cell], shape: tuple[int, ...], kind: PatternKind) -> int:
    """Size of the largest pattern among arbitrary cells; used where the
    occurrence itself is not needed."""
    cs = sorted(cells, key=lambda rc: (rc[1], rc[0]))
    m = len(cs)
    if m == 0:
        return 0
    if kind is PatternKind.IDENTITY:
        top = [1] * m
        for j in range(m):
            rj, cj = cs[j]
            for i in range(j):
                ri, ci = cs[i]
                if ci < cj and ri < rj:
                    top[j] = max(top[j], top[i] + 1)
        return max(top)
    best = 1
    for first in range(m):
        r0, c0 = cs[first]
        limit = shape[r0 - 1]
        top = [0] * m
        top[first] = 1
        for j in range(first + 1, m):
            rj, cj = cs[j]
            if cj > limit or cj <= c0 or rj >= r0:
                continue
            top[j] = 2
            for i in range(first + 1, j):
                ri, ci = cs[i]
                if top[i] and ci < cj and ri > rj:
                    top[j] = max(top[j], top[i] + 1)
        best = max(best, max(top))
    return best


def _replace_cells(f: YoungFilling, old: Iterable[Cell], new: Iterable[Cell]) -> YoungFilling:
    ones = set(f.ones)
    for cell in old:
        ones.remove(cell)
    for cell in new:
        ones.add(cell)
    return YoungFilling(f.shape, frozenset(ones), f.openers, f.closers)


def _check_occurrence(f: YoungFilling, occ: PatternOccurrence, kind: PatternKind):
    if occ.kind is not kind:
        raise InvalidOccurrence(f"expected a {kind.value} occurrence")
    if not set(occ.cells) <= f.ones:
        raise InvalidOccurrence("occurrence cells are not all filled")
    if not _occurrence_ok(occ.cells, f.shape, kind):
        raise InvalidOccurrence(f"cells {occ.cells} do not form a {kind.value}")


def anti_to_identity_step(f: YoungFilling, occ: PatternOccurrence) -> YoungFilling:
    """One unwinding move on an anti-identity: with cells (l_1,c_1), ...,
    (l_k,c_k) read from bottom-left to top-right, the 1s move to
    (l_2,c_1), ..., (l_k,c_{k-1}) and (l_1,c_k), leaving an anti-identity
    of size k-1 beside a settled corner cell."""
    _check_occurrence(f, occ, PatternKind.ANTI_IDENTITY)
    if occ.k == 1:
        return f
    rows = [r for r, _ in occ.cells]
    cols = [c for _, c in occ.cells]
    new = [(rows[i + 1], cols[i]) for i in range(occ.k - 1)]
    new.append((rows[0], cols[-1]))
    return _replace_cells(f, occ.cells, new)


def identity_to_anti_step(f: YoungFilling, occ: PatternOccurrence) -> YoungFilling:
    """One unwinding move on an identity: with cells (a_1,b_1), ...,
    (a_k,b_k) read from top-left, the first two rows trade columns and
    the rest stay."""
    _check_occurrence(f, occ, PatternKind.IDENTITY)
    if occ.k == 1:
        return f
    rows = [r for r, _ in occ.cells]
    cols = [c for _, c in occ.cells]
    new = [(rows[1], cols[0]), (rows[0], cols[1])]
    new.extend(occ.cells[2:])
    return _replace_cells(f, occ.cells, new)


class TraceStep(NamedTuple):
    op: str
    before: tuple[Cell, ...]
    after: tuple[Cell, ...]


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self, trace):
        self.used += 1
        if self.used > self.limit:
            raise StepBudgetExhausted(
                f"no interchange after {self.limit} moves", trace
            )


def _unwind_anti(f: YoungFilling, occ: PatternOccurrence, budget: _Budget, trace: list) -> YoungFilling:
    cells = list(occ.cells)
    cur = f
    while len(cells) >= 2:
        step_occ = PatternOccurrence(PatternKind.ANTI_IDENTITY, tuple(cells))
        nxt = anti_to_identity_step(cur, step_occ)
        rows = [r for r, _ in cells]
        cols = [c for _, c in cells]
        moved = [(rows[i + 1], cols[i]) for i in range(len(cells) - 1)]
        moved.append((rows[0], cols[-1]))
        trace.append(TraceStep("anti_to_identity", tuple(cells), tuple(sorted(moved))))
        budget.tick(trace)
        cells = moved[:-1]
        cur = nxt
    return cur


def _unwind_identity(f: YoungFilling, occ: PatternOccurrence, budget: _Budget, trace: list) -> YoungFilling:
    # rotating ever longer prefixes reverses the row assignment in the end
    cols = [c for _, c in occ.cells]
    state = [r for r, _ in occ.cells]
    cur = f
    for m in range(1, len(cols)):
        if m == 1:
            nxt = identity_to_anti_step(cur, occ)
            new_state = [state[1], state[0]] + state[2:]
        else:
            old_cells = [(state[i], cols[i]) for i in range(len(cols))]
            new_state = [state[m]] + state[:m] + state[m + 1:]
            new_cells = [(new_state[i], cols[i]) for i in range(len(cols))]
            nxt = _replace_cells(cur, old_cells, new_cells)
        trace.append(TraceStep(
            "identity_to_anti",
            tuple((state[i], cols[i]) for i in range(len(cols))),
            tuple((new_state[i], cols[i]) for i in range(len(cols))),
        ))
        budget.tick(trace)
        state = new_state
        cur = nxt
    return cur


def default_step_budget(f: YoungFilling) -> int:
    return 4 ** len(f.shape)


def interchange_patterns(
    f: YoungFilling, max_steps: int | None = None
) -> tuple[YoungFilling, tuple[TraceStep, ...]]:
    """Trade the maximal anti-identity and identity sizes.

    Whichever side exceeds its target gets its maximal occurrence fully
    unwound into the opposite pattern; repeat until the sizes have
    swapped.  Raises StepBudgetExhausted, trace attached, if the budget
    runs out or the iteration stalls short of the target.
    """
    budget = _Budget(default_step_budget(f) if max_steps is None else max_steps)
    a = find_max_pattern(f, PatternKind.ANTI_IDENTITY).k
    b = find_max_pattern(f, PatternKind.IDENTITY).k
    trace: list[TraceStep] = []
    cur = f
    while True:
        j = find_max_pattern(cur, PatternKind.ANTI_IDENTITY).k
        i = find_max_pattern(cur, PatternKind.IDENTITY).k
        if (j, i) == (b, a):
            return cur, tuple(trace)
        if j > b:
            occ = find_max_pattern(cur, PatternKind.ANTI_IDENTITY)
            cur = _unwind_anti(cur, occ, budget, trace)
        elif i > a:
            occ = find_max_pattern(cur, PatternKind.IDENTITY)
            cur = _unwind_identity(cur, occ, budget, trace)
        else:
            raise StepBudgetExhausted(
                f"stalled at pattern maxima ({j},{i}), target ({b},{a})", trace
            )


def max_chain_involution(p: SignedPermutation, max_steps: int | None = None) -> SignedPermutation:
    """Swap the maximal crossing/nesting chain sizes through the filling
    encoding; degree sequence and negative-entry count ride along
    untouched because the shape and its vertex lists never change."""
    f = xi(upper_diagram(p))
    g, _ = interchange_patterns(f, max_steps)
    return permutation_from_upper(xi_inverse(g))


def filling_to_text(f: YoungFilling) -> str:
    """Shape line, then one "row,col" line per filled cell."""
    lines = [",".join(str(w) for w in f.shape)]
    lines.extend(f"{r},{c}" for r, c in sorted(f.ones))
    return "\n".join(lines) + "\n"


def parse_filling_text(text: str) -> YoungFilling:
    """Inverse of filling_to_text; the result has no vertex lists."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise CellOutsideShape("empty filling text")
    shape = tuple(int(tok) for tok in lines[0].split(","))
    ones = set()
    for ln in lines[1:]:
        r, c = (int(tok) for tok in ln.split(","))
        ones.add((r, c))
    return YoungFilling(shape, frozenset(ones))


# --- exact pattern-avoidance counting ------------------------------------

def _column_heights(shape: tuple[int, ...]) -> list[int]:
    return [sum(1 for w in shape if w >= c) for c in range(1, shape[0] + 1)]


def count_avoiders(
    shape: Sequence[int],
    row_sums: Sequence[int],
    col_sums: Sequence[int],
    k: int,
    kind: PatternKind,
) -> int:
    """Number of 0/1 fillings with the prescribed row and column sums
    containing no pattern occurrence of size k.  Exact backtracking over
    rows; meant for desk-scale shapes."""
    shape = tuple(int(w) for w in shape)
    if not shape or any(w <= 0 for w in shape) or any(
        a < b for a, b in zip(shape, shape[1:])
    ):
        raise InfeasibleSums(f"bad shape {shape}")
    row_sums = tuple(int(s) for s in row_sums)
    col_sums = tuple(int(s) for s in col_sums)
    if len(row_sums) != len(shape):
        raise InfeasibleSums("one row sum per row")
    if len(col_sums) != shape[0]:
        raise InfeasibleSums("one column sum per column")
    if any(s < 0 for s in row_sums + col_sums):
        raise InfeasibleSums("sums are nonnegative")
    if any(s > w for s, w in zip(row_sums, shape)):
        raise InfeasibleSums("row sum exceeds row length")
    heights = _column_heights(shape)
    if any(s > h for s, h in zip(col_sums, heights)):
        raise InfeasibleSums("column sum exceeds column height")
    if sum(row_sums) != sum(col_sums):
        raise InfeasibleSums("row and column totals differ")
    if k < 1:
        raise InfeasibleSums("pattern size must be at least 1")

    remaining = list(col_sums)
    cells: list[Cell] = []
    total = 0

    def place(r: int) -> None:
        nonlocal total
        # occurrences only grow as cells are added, so prune early
        if max_pattern_size(cells, shape, kind) >= k:
            return
        if r > len(shape):
            if all(v == 0 for v in remaining):
                total += 1
            return
        width = shape[r - 1]
        open_cols = [c for c in range(1, width + 1) if remaining[c - 1] > 0]
        need = row_sums[r - 1]
        if need > len(open_cols):
            return
        for chosen in combinations(open_cols, need):
            for c in chosen:
                remaining[c - 1] -= 1
                cells.append((r, c))
            place(r + 1)
            for c in chosen:
                remaining[c - 1] += 1
                cells.pop()

    place(1)
    return total
