"""Exact dense linear systems with certified solutions.

Row reduction over ExactScalar entries (rational or quadratic, where the
zero test is exact).  Solutions are certified by back-substitution, and
"this unknown is forced to value v in every solution" is decided by the
row-space criterion: the unknown's coordinate functional must be a linear
combination y^T A of the constraint rows, in which case the forced value
is y^T b.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import IdentityCheckError
from .exact import ExactScalar, ZERO, ONE, scalar

__all__ = ["LinearSystem", "LinearSolution"]


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of exact elimination.

    kind is "unique", "underdetermined" or "inconsistent"; particular maps
    labels to one solution (empty when inconsistent), kernel_basis spans
    the solution space's direction vectors.
    """

    kind: str
    labels: Tuple[str, ...]
    particular: Dict[str, ExactScalar]
    kernel_basis: Tuple[Dict[str, ExactScalar], ...]

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel_basis)


class LinearSystem:
    """A @ x = b with labelled unknowns and exact entries."""

    def __init__(
        self,
        rows: Sequence[Sequence[object]],
        rhs: Sequence[object],
        labels: Sequence[str],
    ) -> None:
        if len(rows) != len(rhs):
            raise ValueError("row/rhs count mismatch")
        self.labels = tuple(labels)
        self.rows = [[scalar(x) for x in row] for row in rows]
        for row in self.rows:
            if len(row) != len(self.labels):
                raise ValueError("row width does not match label count")
        self.rhs = [scalar(x) for x in rhs]

    # -- elimination ----------------------------------------------------

    @staticmethod
    def _reduce(matrix: List[List[ExactScalar]]) -> Tuple[List[List[ExactScalar]], List[int]]:
        """Reduced row echelon form; returns (rref, pivot column indices)."""
        m = [row[:] for row in matrix]
        n_rows = len(m)
        n_cols = len(m[0]) if m else 0
        pivots: List[int] = []
        r = 0
        for col in range(n_cols):
            pivot_row = next(
                (i for i in range(r, n_rows) if m[i][col].sign() != 0), None
            )
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = ONE / m[r][col]
            m[r] = [inv * x for x in m[r]]
            for i in range(n_rows):
                if i != r and m[i][col].sign() != 0:
                    factor = m[i][col]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
            if r == n_rows:
                break
        return m, pivots

    def solve(self) -> LinearSolution:
        n = len(self.labels)
        augmented = [row + [b] for row, b in zip(self.rows, self.rhs)]
        rref, pivots = self._reduce(augmented)
        if n in pivots:  # pivot in the rhs column
            return LinearSolution("inconsistent", self.labels, {}, ())
        particular_vec = [ZERO] * n
        for r, col in enumerate(pivots):
            particular_vec[col] = rref[r][n]
        free_cols = [c for c in range(n) if c not in pivots]
        basis: List[Dict[str, ExactScalar]] = []
        for free in free_cols:
            vec = [ZERO] * n
            vec[free] = ONE
            for r, col in enumerate(pivots):
                vec[col] = -rref[r][free]
            basis.append({lab: v for lab, v in zip(self.labels, vec)})
        particular = {lab: v for lab, v in zip(self.labels, particular_vec)}
        self._certify(particular_vec, [
            [vec[lab] for lab in self.labels] for vec in basis
        ])
        kind = "unique" if not free_cols else "underdetermined"
        return LinearSolution(kind, self.labels, particular, tuple(basis))

    def _certify(
        self, particular: List[ExactScalar], kernel: List[List[ExactScalar]]
    ) -> None:
        """Exact back-substitution of the particular and kernel vectors."""
        for row, b in zip(self.rows, self.rhs):
            acc = ZERO
            for a, x in zip(row, particular):
                acc = acc + a * x
            if (acc - b).sign() != 0:
                raise IdentityCheckError("particular solution failed back-substitution", [acc - b])
            for vec in kernel:
                acc_k = ZERO
                for a, x in zip(row, vec):
                    acc_k = acc_k + a * x
                if acc_k.sign() != 0:
                    raise IdentityCheckError("kernel vector failed back-substitution", [acc_k])

    # -- forced values ----------------------------------------------------

    def forced_functional(
        self, functional: Dict[str, object]
    ) -> Optional[ExactScalar]:
        """Value of sum_i functional_i * x_i if it is constant across all
        solutions, else None.

        Solves y^T A = functional exactly; when solvable the constant is
        y^T b, which every solution x must attain.
        """
        n = len(self.labels)
        m = len(self.rows)
        target = [scalar(functional.get(lab, 0)) for lab in self.labels]
        # transpose system: columns of A become rows
        transposed = [[self.rows[r][c] for r in range(m)] + [target[c]] for c in range(n)]
        rref, pivots = self._reduce(transposed)
        if m in pivots:  # functional outside the row space
            return None
        y = [ZERO] * m
        for r, col in enumerate(pivots):
            y[col] = rref[r][m]
        value = ZERO
        for yi, b in zip(y, self.rhs):
            value = value + yi * b
        return value

    def forced_value(self, label: str) -> Optional[ExactScalar]:
        """The unknown's value if identical in every solution, else None."""
        return self.forced_functional({label: 1})
