import random
from itertools import combinations

import pytest

from degentensor.canonical import canonical, example_3_10, example_3_11
from degentensor.errors import DimensionError, FormatError
from degentensor.polyalg import MPoly, PolyMatrix, linalg, variable_names
from degentensor.schemes import (DetScheme, ProjPoint, classify_detn_quadric, diagnose_point,
                                 expected_codim, jacobian_by_rows, points_on_p1, tensor_scheme)
from degentensor.tensor_core import Axis, combine_slices

from helpers import parse_poly, random_invertible, random_tensor

JAC_310 = [
    "6*z1^2 - 4*z1*z2 - 2*z2^2 + 6*z1*z4 - 6*z2*z4 - 3*z3*z4",
    "-2*z1^2 - 4*z1*z2 + 3*z2^2 - z3^2 - 6*z1*z4 + 2*z2*z4 + 3*z3*z4 - z4^2",
    "-2*z2*z3 - 3*z1*z4 + 3*z2*z4 + 2*z3*z4",
    "3*z1^2 - 6*z1*z2 + z2^2 - 3*z1*z3 + 3*z2*z3 + z3^2 - 2*z2*z4",
]


def test_projpoint_normalization():
    assert ProjPoint([0, 2, 4]) == ProjPoint([0, 1, 2])
    assert ProjPoint.parse("0, -3, 6").coords == (0, 1, -2)
    assert str(ProjPoint([2, 1])) == "(1,1/2)"
    with pytest.raises(ValueError):
        ProjPoint([0, 0])


def test_expected_codim_examples():
    a = canonical("223", "VI")
    assert expected_codim(tensor_scheme(a, Axis.X)) == 2
    assert expected_codim(tensor_scheme(a, Axis.Z)) == 1
    assert expected_codim(tensor_scheme(example_3_10(), Axis.Z)) == 1


def test_example_3_10_jacobian_and_point():
    s = tensor_scheme(example_3_10(), Axis.Z)
    partials = [s.minors[0].partial(k) for k in range(4)]
    assert partials == [parse_poly(g, s.variables) for g in JAC_310]
    d = diagnose_point(s, ProjPoint([1, 1, 0, -1]))
    assert (d.on_scheme, d.rank_at, d.bidegenerate, d.degenerate) == (True, 1, True, True)
    assert s.matrix.evaluate([1, 1, 0, -1]) == [[0, 0, 2], [0, 0, 1], [0, 0, 2]]


def test_example_3_11_points():
    s = tensor_scheme(example_3_11(), Axis.Z)
    d = s.diagnose([0, 1, 1, 0])
    assert (d.degenerate, d.bidegenerate) == (True, False)
    assert s.diagnose([0, 0, 1, 0]).bidegenerate
    # x-scheme: (1,0,-1) is the double point, degenerate, not bi-degenerate
    dx = tensor_scheme(example_3_11(), Axis.X).diagnose([1, 0, -1])
    assert (dx.degenerate, dx.bidegenerate) == (True, False)
    # y-scheme: the double point is (1,0,0); (0,1,0) is a simple point
    sy = tensor_scheme(example_3_11(), Axis.Y)
    dy = sy.diagnose([1, 0, 0])
    assert (dy.rank_at, dy.degenerate, dy.bidegenerate) == (2, True, False)
    simple = sy.diagnose([0, 1, 0])
    assert (simple.on_scheme, simple.degenerate) == (True, False)


def test_diagnose_wrong_length():
    s = tensor_scheme(example_3_11(), Axis.Z)
    with pytest.raises(DimensionError):
        s.diagnose([1, 0, 0])


def test_non_linear_matrix_rejected():
    x = variable_names("x", 2)
    with pytest.raises(ValueError):
        DetScheme(PolyMatrix([[parse_poly("x1^2", x), parse_poly("x2", x)]]))


def test_diagnosis_implications_random():
    rng = random.Random(41)
    for _ in range(60):
        a = random_tensor(rng, (rng.randint(2, 3), rng.randint(2, 3), rng.randint(2, 4)), -1, 1)
        axis = Axis(rng.randint(0, 2))
        s = tensor_scheme(a, axis)
        point = [rng.randint(-1, 1) for _ in range(s.n)]
        if not any(point):
            continue
        d = s.diagnose(point)
        assert not d.bidegenerate or d.degenerate
        assert not d.degenerate or d.on_scheme
        assert d.degenerate == (d.on_scheme and d.jacobian_rank < d.expected_codim)


def test_jacobian_by_rows_agrees_with_symbolic():
    rng = random.Random(43)
    for _ in range(30):
        a = random_tensor(rng, (rng.randint(1, 3), rng.randint(2, 3), rng.randint(2, 4)))
        axis = Axis(rng.randint(0, 2))
        s = tensor_scheme(a, axis)
        point = [rng.randint(-2, 2) for _ in range(s.n)]
        if not any(point):
            continue
        point = ProjPoint(point).coords
        assert jacobian_by_rows(s.matrix, point) == s.jacobian_at(point)


def test_first_row_zero_gives_zero_partial():
    # P = (1,0,...,0) with the first row of B(P) zero: d_1 B_alpha(P) = 0
    rng = random.Random(47)
    for _ in range(30):
        u, v, n = rng.randint(2, 3), rng.randint(3, 4), rng.randint(2, 4)
        if u > v:
            continue
        names = variable_names("x", n)
        rows = []
        for i in range(u):
            row = []
            for _ in range(v):
                coeffs = [rng.randint(-2, 2) for _ in range(n)]
                if i == 0:
                    coeffs[0] = 0
                row.append(MPoly.linear_form(names, coeffs))
            rows.append(row)
        b = PolyMatrix(rows, names)
        point = [1] + [0] * (n - 1)
        s = DetScheme(b)
        assert all(row[0] == 0 for row in s.jacobian_at(point))
        assert all(row[0] == 0 for row in jacobian_by_rows(b, point))


def test_minor_rank_bound():
    # first row generic values, remaining rows fixed: rank of the matrix of
    # maximal minors over t specializations is at most n - m + 1
    rng = random.Random(53)
    for _ in range(30):
        m, n = rng.randint(2, 3), rng.randint(3, 5)
        fixed = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(m - 1)]
        t = rng.randint(2, 8)
        big = []
        for _ in range(t):
            d = [[rng.randint(-3, 3) for _ in range(n)]] + fixed
            big.append([linalg.det([[row[c] for c in cols] for row in d])
                        for cols in combinations(range(n), m)])
        assert linalg.rank(big) <= n - m + 1


def test_points_on_p1_examples():
    iv = points_on_p1(tensor_scheme(canonical("222", "IV"), Axis.X))
    assert iv.describe() == "two simple points"
    assert sorted(iv.rational_points, key=lambda p: p.coords) == [ProjPoint([0, 1]), ProjPoint([1, 0])]
    va = points_on_p1(tensor_scheme(canonical("223", "Va"), Axis.X))
    assert va.describe() == "one simple point"
    assert va.gcd == parse_poly("x1", va.gcd.variables)
    assert points_on_p1(tensor_scheme(canonical("222", "III"), Axis.X)).describe() == "double point"
    assert points_on_p1(tensor_scheme(canonical("223", "I"), Axis.X)).whole_line
    assert points_on_p1(tensor_scheme(canonical("223", "VI"), Axis.X)).is_empty
    with pytest.raises(DimensionError):
        points_on_p1(tensor_scheme(example_3_10(), Axis.Z))


def test_points_on_p1_invariant_under_substitution():
    rng = random.Random(59)
    for _ in range(40):
        a = random_tensor(rng, (2, 2, rng.randint(2, 3)), -2, 2)
        before = points_on_p1(tensor_scheme(a, Axis.X))
        b = combine_slices(a, Axis.X, random_invertible(rng, 2))
        after = points_on_p1(tensor_scheme(b, Axis.X))
        assert before.whole_line == after.whole_line
        assert before.multiplicities == after.multiplicities
        if not before.whole_line:
            assert sum(before.multiplicities) == before.gcd.degree()


def test_detn_quadric_examples():
    assert classify_detn_quadric(canonical("224", "concise")).gram_rank == 4
    assert classify_detn_quadric(canonical("223", "VI")).label == "smooth-quadric-rank-3"
    assert classify_detn_quadric(canonical("223", "IIa")).label == "double-hyperplane"
    with pytest.raises(FormatError):
        classify_detn_quadric(example_3_10())


def test_detn_quadric_invariant_under_z_change():
    rng = random.Random(61)
    for _ in range(30):
        a = random_tensor(rng, (2, 2, rng.randint(2, 4)))
        b = combine_slices(a, Axis.Z, random_invertible(rng, a.r))
        assert classify_detn_quadric(a).label == classify_detn_quadric(b).label
