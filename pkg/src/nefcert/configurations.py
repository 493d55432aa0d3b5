"""Configurations: integer matrices whose columns lie on a common affine
hyperplane missing the origin, plus the derived matrix constructions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import EmptyInput, NotAConfiguration, RepeatedColumns
from .linalg import IntMatrix, solve_rational


@dataclass(frozen=True)
class Configuration:
    """A d x n integer matrix with a rational witness c, <a_i, c> = 1 for
    every column a_i.  Columns are pairwise distinct."""

    matrix: IntMatrix
    witness: tuple[Fraction, ...]

    def __post_init__(self):
        cols = self.matrix.columns()
        if len(set(cols)) != len(cols):
            raise RepeatedColumns("configuration columns must be distinct")
        if len(self.witness) != self.matrix.rows:
            raise ValueError("witness length must equal the row count")
        for a in cols:
            if sum(Fraction(x) * c for x, c in zip(a, self.witness)) != 1:
                raise NotAConfiguration("witness fails <a_i, c> = 1")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def ncols(self) -> int:
        return self.matrix.cols

    def columns(self) -> list[tuple[int, ...]]:
        return self.matrix.columns()


@dataclass(frozen=True)
class CentrallySymmetric:
    """The (d+1) x (2n+1) centrally symmetric configuration built from a
    base configuration: columns (a_i, 1), (-a_i, 1), (0, 1).

    Column j binds to variable names[j]; the order is x_1..x_n, y_1..y_n, z.
    """

    base: Configuration
    full: IntMatrix
    names: tuple[str, ...]

    def __post_init__(self):
        d1, m = self.full.rows, self.full.cols
        n = self.base.ncols
        if (d1, m) != (self.base.dim + 1, 2 * n + 1):
            raise ValueError("centrally symmetric matrix has the wrong shape")
        if self.full.column(2 * n) != (0,) * self.base.dim + (1,):
            raise ValueError("last column must be (0, ..., 0, 1)")
        target = (0,) * self.base.dim + (2,)
        for i in range(n):
            s = tuple(a + b for a, b in zip(self.full.column(i), self.full.column(n + i)))
            if s != target:
                raise ValueError("columns i and n+i must be opposite")


def as_configuration(M: IntMatrix) -> Configuration:
    """Certify M as a configuration by solving A^T c = 1 exactly."""
    cols = M.columns()
    if len(set(cols)) != len(cols):
        raise RepeatedColumns("matrix has repeated columns")
    c = solve_rational(M, [1] * M.cols)
    if c is None:
        raise NotAConfiguration("columns do not lie on a common affine hyperplane")
    return Configuration(M, c)


def centrally_symmetric(A: Configuration) -> CentrallySymmetric:
    """Stack (a_i, 1), (-a_i, 1) and (0, 1) into one configuration."""
    d, n = A.dim, A.ncols
    cols = A.columns()
    full_cols = [c + (1,) for c in cols]
    full_cols += [tuple(-x for x in c) + (1,) for c in cols]
    full_cols.append((0,) * d + (1,))
    names = tuple(f"x{i}" for i in range(1, n + 1)) + \
        tuple(f"y{i}" for i in range(1, n + 1)) + ("z",)
    return CentrallySymmetric(A, IntMatrix.from_columns(full_cols), names)


def append_origin(A: Configuration) -> IntMatrix:
    """The d x (n+1) matrix (A, 0).

    The result is deliberately a raw matrix: the zero column breaks the
    hyperplane witness, and downstream constructions homogenize the polytope
    of (A, 0) instead of treating it as a configuration.
    """
    cols = A.columns() + [(0,) * A.dim]
    return IntMatrix.from_columns(cols)


def homogenize(points) -> IntMatrix:
    """Append a row of ones under the given lattice points (as columns)."""
    points = [tuple(int(x) for x in p) for p in points]
    if not points:
        raise EmptyInput("no points to homogenize")
    if len(set(points)) != len(points):
        raise RepeatedColumns("points must be pairwise distinct")
    return IntMatrix.from_columns([p + (1,) for p in points])
