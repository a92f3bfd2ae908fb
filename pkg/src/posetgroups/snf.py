"""Exact Smith normal form for sparse integer matrices.

Pure Python on arbitrary-precision ints: no floating point, no overflow.
The elimination prefers unit pivots with low fill (Markowitz-style), which
keeps boundary-matrix reductions near-linear in practice.

``want_transform`` additionally tracks the left transform ``U`` and its
inverse, maintained incrementally as dense integer matrices: ``U @ A @ V``
is diagonal with the returned pivots, so cokernel coordinates of a column
vector ``x`` can be read off ``U @ x``, and preimages of unit vectors off
the columns of ``U^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class SNFResult:
    """Outcome of a Smith reduction.

    ``diag`` holds the (positive) diagonal entries in pivot order, matching
    ``pivot_rows``; ``invariants`` is the same multiset normalized into a
    divisibility chain.  ``u``/``u_inv`` are present only when requested.
    """

    nrows: int
    ncols: int
    diag: tuple[int, ...]
    pivot_rows: tuple[int, ...]
    u: tuple[tuple[int, ...], ...] | None = None
    u_inv: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.diag)

    @property
    def invariants(self) -> tuple[int, ...]:
        values = list(self.diag)
        changed = True
        while changed:
            changed = False
            for i in range(len(values)):
                for j in range(i + 1, len(values)):
                    if values[j] % values[i]:
                        g = gcd(values[i], values[j])
                        values[i], values[j] = g, values[i] * values[j] // g
                        changed = True
        return tuple(sorted(values))

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(v for v in self.invariants if v > 1)

    def free_rows(self) -> tuple[int, ...]:
        taken = set(self.pivot_rows)
        return tuple(r for r in range(self.nrows) if r not in taken)


def smith_normal_form(
    triples, nrows: int, ncols: int, *, want_transform: bool = False
) -> SNFResult:
    """Reduce a sparse integer matrix given as ``(row, col, value)`` triples."""
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for r, c, v in triples:
        if v == 0:
            continue
        if not (0 <= r < nrows and 0 <= c < ncols):
            raise ValueError(f"entry ({r}, {c}) out of range")
        row = rows.setdefault(r, {})
        row[c] = row.get(c, 0) + v
        if row[c] == 0:
            del row[c]
            if not row:
                del rows[r]
        else:
            col_rows.setdefault(c, set()).add(r)
    for c in list(col_rows):
        col_rows[c] = {r for r in col_rows[c] if c in rows.get(r, {})}
        if not col_rows[c]:
            del col_rows[c]

    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if want_transform else None
    u_inv = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if want_transform else None

    def row_add(dst: int, src: int, q: int):
        """row[dst] += q * row[src] (and mirror on the transforms)."""
        if q == 0:
            return
        drow = rows.setdefault(dst, {})
        for c, v in rows.get(src, {}).items():
            new = drow.get(c, 0) + q * v
            if new:
                drow[c] = new
                col_rows.setdefault(c, set()).add(dst)
            elif c in drow:
                del drow[c]
                col_rows[c].discard(dst)
                if not col_rows[c]:
                    del col_rows[c]
        if not drow:
            rows.pop(dst, None)
        if u is not None:
            urow_d, urow_s = u[dst], u[src]
            for k in range(nrows):
                urow_d[k] += q * urow_s[k]
            for k in range(nrows):  # u_inv: col[src] -= q * col[dst]
                u_inv[k][src] -= q * u_inv[k][dst]

    def col_add(dst: int, src: int, q: int):
        """col[dst] += q * col[src] (right transform; not tracked)."""
        if q == 0:
            return
        for r in list(col_rows.get(src, ())):
            v = rows[r].get(src, 0)
            new = rows[r].get(dst, 0) + q * v
            if new:
                rows[r][dst] = new
                col_rows.setdefault(dst, set()).add(r)
            else:
                rows[r].pop(dst, None)
                if dst in col_rows:
                    col_rows[dst].discard(r)
                    if not col_rows[dst]:
                        del col_rows[dst]

    def negate_row(r: int):
        for c in rows.get(r, {}):
            rows[r][c] = -rows[r][c]
        if u is not None:
            u[r] = [-v for v in u[r]]
            for k in range(nrows):
                u_inv[k][r] = -u_inv[k][r]

    diag: list[int] = []
    pivot_rows: list[int] = []
    done_cols: set[int] = set()

    # Columns are consumed left to right; the pointer stalls on a column
    # until it is emptied or hosts a pivot.  Within a column the pivot row
    # favours units, small magnitude, then sparsity — all deterministic.
    next_col = 0
    while True:
        while next_col < ncols and (next_col in done_cols or not col_rows.get(next_col)):
            next_col += 1
        if next_col == ncols:
            break
        c = next_col
        r = min(
            col_rows[c],
            key=lambda rr: (abs(rows[rr][c]) != 1, abs(rows[rr][c]), len(rows[rr]), rr),
        )
        while True:
            p = rows[r][c]
            # Clear the pivot column with row operations.
            dirty = False
            for r2 in sorted(col_rows.get(c, set()) - {r}):
                v = rows[r2][c]
                row_add(r2, r, -(v // p))
                if rows.get(r2, {}).get(c):
                    # Non-zero remainder: it is strictly smaller, swap roles.
                    r = r2
                    dirty = True
                    break
            if dirty:
                continue
            # Clear the pivot row with column operations.
            dirty = False
            for c2 in sorted(set(rows.get(r, {})) - {c}):
                v = rows[r][c2]
                col_add(c2, c, -(v // p))
                if rows.get(r, {}).get(c2):
                    c = c2
                    dirty = True
                    break
            if not dirty:
                break
        if rows[r][c] < 0:
            negate_row(r)
        diag.append(rows[r][c])
        pivot_rows.append(r)
        done_cols.add(c)

    return SNFResult(
        nrows,
        ncols,
        tuple(diag),
        tuple(pivot_rows),
        tuple(tuple(row) for row in u) if u is not None else None,
        tuple(tuple(row) for row in u_inv) if u_inv is not None else None,
    )
