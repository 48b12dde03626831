from fractions import Fraction

import pytest

import deltak


def three_singletons():
    return deltak.DeltaMatroid(3, [[1, 2, 3], [1], [2], [3]])


def test_interlace_and_r_poly():
    d = three_singletons()
    assert deltak.interlace(d) == [4, 4]
    assert deltak.r_poly(d) == [4, 8, 4]
    assert deltak.r_poly(d, mode="orbit") == [4, 8, 4]


def test_star_failure_orbit_mode():
    d = deltak.DeltaMatroid(4, [[], [1], [2], [3], [4], [2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]])
    assert deltak.r_poly(d, mode="orbit") == [9, 16, 6, -1, 1, 1]
    assert deltak.r_poly(d, mode="y") == [9, 16, 7]


def test_euler_characteristics():
    d = three_singletons()
    assert deltak.euler_char(d) == len(d) == 4
    assert isinstance(deltak.euler_char(d, doubled=True), Fraction)


def test_interlace_integral_at_one():
    d = three_singletons()
    coeffs = deltak.interlace_via_integral(d)
    assert sum(coeffs) == 32


def test_validation_and_errors():
    ok, edge = deltak.validate(3, [[], [1, 2, 3]])
    assert not ok and edge == ([], [1, 2, 3])
    with pytest.raises(ValueError):
        deltak.DeltaMatroid(3, [[], [1, 2, 3]])


def test_json_and_graphs():
    g = deltak.from_json('{"n": 7, "edges": [[1,2],[1,3],[2,3],[3,4],[4,5],[5,6],[5,7],[6,7]]}')
    assert len(g) == 32
    assert deltak.from_graph(2, [(1, 2)]).feasible == [[], [1, 2]]


def test_very_ample_witness():
    very_ample, gaps = deltak.is_very_ample(three_singletons())
    assert not very_ample
    assert ([1], [-1, 1, 1]) in gaps
    assert not deltak.member([-1, 1, 1], [[-1, 1, 0], [-1, 0, 1], [0, 1, 1]])


def test_enumeration():
    assert len(deltak.all_delta_matroids(2)) == 15
