from fractions import Fraction

import pytest

from nefcert.configurations import (
    append_origin,
    as_configuration,
    centrally_symmetric,
    homogenize,
)
from nefcert.exceptions import EmptyInput, NotAConfiguration, RepeatedColumns
from nefcert.linalg import IntMatrix, rank

A_C3 = IntMatrix.from_rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]])


def test_as_configuration_examples():
    conf = as_configuration(IntMatrix.identity(2))
    assert conf.witness == (Fraction(1), Fraction(1))
    assert as_configuration(A_C3).witness == (Fraction(1, 2),) * 3
    with pytest.raises(NotAConfiguration):
        as_configuration(IntMatrix.from_rows([[1, 2]]))
    with pytest.raises(RepeatedColumns):
        as_configuration(IntMatrix.from_rows([[1, 1], [0, 0]]))


def test_witness_identity_holds_exactly():
    skew = IntMatrix.from_columns([(2, -1), (0, 1), (1, 0)])
    for M in (IntMatrix.identity(3), A_C3, skew):
        conf = as_configuration(M)
        for col in conf.columns():
            assert sum(Fraction(x) * c for x, c in zip(col, conf.witness)) == 1


def test_centrally_symmetric_shape():
    conf = as_configuration(IntMatrix.identity(2))
    cs = centrally_symmetric(conf)
    assert (cs.full.rows, cs.full.cols) == (3, 5)
    assert cs.full.columns() == [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (0, 0, 1)]
    assert cs.names == ("x1", "x2", "y1", "y2", "z")


def test_centrally_symmetric_single_column():
    conf = as_configuration(IntMatrix.from_rows([[1]]))
    cs = centrally_symmetric(conf)
    assert cs.full.row_list() == [[1, -1, 0], [1, 1, 1]]


def test_centrally_symmetric_is_a_configuration():
    # witness (0, ..., 0, 1) certifies the stacked matrix
    for M in (IntMatrix.identity(3), A_C3):
        cs = centrally_symmetric(as_configuration(M))
        full_conf = as_configuration(cs.full)
        w = (Fraction(0),) * M.rows + (Fraction(1),)
        for col in cs.full.columns():
            assert sum(Fraction(x) * c for x, c in zip(col, w)) == 1
        assert full_conf is not None


def test_append_origin():
    conf = as_configuration(IntMatrix.identity(2))
    A0 = append_origin(conf)
    assert A0.columns() == [(1, 0), (0, 1), (0, 0)]
    A0 = append_origin(as_configuration(A_C3))
    assert A0.cols == 4
    assert A0.column(3) == (0, 0, 0)


def test_homogenize():
    M = homogenize([(0,), (1,)])
    assert M.columns() == [(0, 1), (1, 1)]
    simplex = homogenize([(0, 0), (1, 0), (0, 1)])
    assert (simplex.rows, simplex.cols) == (3, 3)
    with pytest.raises(EmptyInput):
        homogenize([])
    with pytest.raises(RepeatedColumns):
        homogenize([(0, 0), (0, 0)])


def test_homogenize_rank_matches_configuration_rank():
    skew = IntMatrix.from_columns([(2, -1), (0, 1), (1, 0)])
    for M in (IntMatrix.identity(3), A_C3, skew):
        conf = as_configuration(M)
        assert rank(homogenize(conf.columns())) == rank(M)
