"""Entry-for-entry reproduction of the published Hom tables.

The expected values are written out here as literal grids, separately from
the rule engine, so the comparison actually checks something: the engine
derives dimensions through images and support arguments, the tables state
the final numbers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .excoll import (
    A_MATRIX,
    IMAGE_DEGREES,
    SymbolicObject,
    a_o,
    a_o_one,
    a_t_twist,
    b_sheaf,
    build,
    hom_dims,
    mutation_bundle,
    o_line,
    phi,
    stack_p,
    stack_pi,
)


@dataclass(frozen=True)
class TableEntry:
    table: str
    row: str
    col: str
    expected: tuple[int, int, int]
    got: tuple[int, int, int]

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass(frozen=True)
class TableReport:
    k: int
    entries: tuple[TableEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def mismatches(self):
        return [e for e in self.entries if not e.ok]

    def count(self, table: str) -> int:
        return sum(1 for e in self.entries if e.table == table)


def _mut_expected(x: SymbolicObject, y: SymbolicObject) -> tuple[int, int, int]:
    """The mutated resolution collection grid (hom, ext1 pairs as printed)."""
    order = ["aO", "aT(-1)", "M", "aO(1)", "OL", "B"]
    px, py = order.index(x.kind), order.index(y.kind)
    if px > py:
        return (0, 0, 0)
    if x.kind == y.kind:
        if x.kind == "OL":
            return (1, 0, 0) if x.j == y.j else (0, 0, 0)
        if x.kind == "B":
            if x.i != y.i:
                return (0, 0, 0)
            if x.j == y.j:
                return (1, 0, 0)
            return (1, 1, 0) if x.j < y.j else (0, 0, 0)
        return (1, 0, 0)
    grid = {
        ("aO", "aT(-1)"): 3,
        ("aO", "M"): 2,
        ("aO", "aO(1)"): 3,
        ("aO", "OL"): 1,
        ("aO", "B"): 1,
        ("aT(-1)", "M"): 1,
        ("aT(-1)", "aO(1)"): 3,
        ("aT(-1)", "OL"): 2,
        ("aT(-1)", "B"): 2,
        ("M", "aO(1)"): 1,
        ("M", "OL"): 1,
        ("M", "B"): 1,
        ("aO(1)", "OL"): 1,
        ("aO(1)", "B"): 1,
        ("OL", "B"): 0,
    }
    return (grid[(x.kind, y.kind)], 0, 0)


def verify_tables(k: int) -> TableReport:
    """Check the three parameterized tables, plus the strong one at k = 1."""
    entries: list[TableEntry] = []

    def check(table: str, x: SymbolicObject, y: SymbolicObject, expected) -> None:
        got = hom_dims(k, x, y).triple()
        entries.append(TableEntry(table, x.label(), y.label(), tuple(expected), got))

    mut = build(k, "sigma_mut").objects
    for x in mut:
        for y in mut:
            check("mutated_resolution", x, y, _mut_expected(x, y))

    # shifted central block and its maps into the embedded collection
    phi_cols = [
        phi(a_o()),
        phi(a_t_twist()),
        phi(mutation_bundle()),
        phi(a_o_one()),
        *[phi(o_line(t)) for t in range(1, 8)],
        *[phi(b_sheaf(k, i, l)) for i in range(1, 5) for l in range(1, k + 1)],
    ]
    central = [stack_p(k, j).shifted(j - (4 * k + 1)) for j in range(2, 4 * k + 1)]
    for x in central:
        for y in central:
            lx, ly = x.j, y.j
            if ly == lx:
                hom = 1
            elif ly == lx + 1:
                hom = 2
            elif ly == lx + 2:
                hom = 1
            else:
                hom = 0
            check("shifted_central_block", x, y, (hom, 0, 0))
        for y in phi_cols:
            key = y.inner.kind
            if x.j <= 4 * k - 2:
                expected = (0, 0, 0)
            elif x.j == 4 * k - 1:
                expected = {
                    "aO": (1, 0, 0),
                    "aT(-1)": (2, 0, 0),
                    "M": (2, 0, 0),
                    "aO(1)": (1, 0, 0),
                    "OL": (0, 0, 0),
                    "B": (1, 0, 0),
                }[key]
            else:
                expected = {
                    "aO": (0, 0, 0),
                    "aT(-1)": (0, 0, 0),
                    "M": (1, 0, 0),
                    "aO(1)": (0, 0, 0),
                    "OL": (0, 0, 0),
                    "B": (1, 0, 0),
                }[key]
            check("shifted_central_block", x, y, expected)

    # tower blocks, unshifted, and their degree-0/1 maps into the embedding
    towers = [stack_pi(k, i, j) for i in range(1, 5) for j in range(k + 1, 2 * k + 1)]
    for x in towers:
        for y in towers:
            if x.i != y.i:
                expected = (0, 0, 0)
            elif x.j == y.j:
                expected = (1, 0, 0)
            elif y.j == x.j + 1:
                expected = (0, 1, 0)
            else:
                expected = (0, 0, 0)
            check("tower_blocks", x, y, expected)
        for y in phi_cols:
            key = y.inner.kind
            if x.j < 2 * k:
                if key == "B" and y.inner.i == x.i and y.inner.j == 2 * k - x.j:
                    expected = (1, 0, 0)
                elif key == "B" and y.inner.i == x.i and y.inner.j == 2 * k - x.j + 1:
                    expected = (0, 1, 0)
                else:
                    expected = (0, 0, 0)
            else:
                deg = IMAGE_DEGREES[x.i - 1]
                if key in ("aT(-1)", "aO(1)"):
                    expected = (0, deg, 0)
                elif key == "M":
                    expected = (0, 0, 0) if x.i in (1, 2) else (0, 1, 0)
                elif key == "OL":
                    expected = (0, A_MATRIX[x.i - 1][y.inner.j - 1], 0)
                elif key == "B":
                    at = y.inner.i == x.i and y.inner.j == 1
                    expected = (0, 1, 0) if at else (0, 0, 0)
                else:
                    expected = (0, 0, 0)
            check("tower_blocks", x, y, expected)
    # the central and tower simples sit at different points
    for x in central:
        for y in towers:
            check("tower_blocks", x, y, (0, 0, 0))
            check("tower_blocks", y, x, (0, 0, 0))

    if k == 1:
        entries.extend(_strong_table_entries())
    return TableReport(k, tuple(entries))


def _strong_table_entries() -> list[TableEntry]:
    """The 22-object strong arrangement at k = 1: every pair pure degree 0."""
    k = 1
    objs = (
        [stack_p(1, j).shifted(j - 5) for j in (2, 3, 4)]
        + [stack_pi(1, i, 2).shifted(-1) for i in range(1, 5)]
        + [phi(o) for o in build(1, "sigma_mut").objects]
    )
    n = len(objs)

    def expected_hom(r: int, c: int) -> int:
        x, y = objs[r], objs[c]
        if c < r:
            return 0
        if r < 3 and c < 3:
            return ((1, 2, 1), (0, 1, 2), (0, 0, 1))[r][c]
        if r < 3 and c < 7:
            return 0
        if r < 3:
            inner = objs[c].inner
            if x.j == 2:
                return 0
            table_e3 = {"aO": 1, "aT(-1)": 2, "M": 2, "aO(1)": 1, "OL": 0, "B": 1}
            table_e4 = {"aO": 0, "aT(-1)": 0, "M": 1, "aO(1)": 0, "OL": 0, "B": 1}
            return (table_e3 if x.j == 3 else table_e4)[inner.kind]
        if r < 7 and c < 7:
            return 1 if r == c else 0
        if r < 7:
            i = x.i
            inner = objs[c].inner
            if inner.kind == "aO":
                return 0
            if inner.kind in ("aT(-1)", "aO(1)"):
                return IMAGE_DEGREES[i - 1]
            if inner.kind == "M":
                return 0 if i in (1, 2) else 1
            if inner.kind == "OL":
                return A_MATRIX[i - 1][inner.j - 1]
            if inner.kind == "B":
                return 1 if inner.i == i else 0
            return 0
        return _mut_expected(x.inner, y.inner)[0]

    out = []
    for r in range(n):
        for c in range(n):
            got = hom_dims(k, objs[r], objs[c]).triple()
            expected = (expected_hom(r, c), 0, 0)
            out.append(
                TableEntry("strong_k1", objs[r].label(), objs[c].label(), expected, got)
            )
    return out
