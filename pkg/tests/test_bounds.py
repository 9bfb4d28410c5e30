import random
from fractions import Fraction

import pytest

from flagbound.bounds import (
    BoundProblem,
    BoundsError,
    UniformProblem,
    bound_problem,
    codim_conclusion,
    conditions_at,
    conditions_hold,
    lv_parameters,
    n0_certificate,
    n0_search,
    power_problem,
    ss_inequality,
    theorem_inequalities,
    uniform_problem,
)
from flagbound.building import dominant_representative, parabolic_stats
from flagbound.polygon import AdjointPolygon, adjoint_polygon
from flagbound.root_data import datum

F = Fraction


def linear_n0(up, limit=10_000):
    for N in range(1, limit):
        if conditions_hold(up, N):
            return N
    return None


def random_problem(rng):
    spec = rng.choice(["gl:2", "gl:3", "gl:4", "gsp:4", "gsp:6", "go:5", "go:6", "go:7"])
    D = datum(spec)
    while True:
        x = tuple(F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(D.coords))
        y, _ = dominant_representative(D, x)
        up = uniform_problem(D, y, rng.randint(1, 12))
        if n0_certificate(up) is not None:
            return up


def test_theorem_inequalities_examples():
    D = datum("gl:2")
    assert theorem_inequalities(bound_problem(D, (1, 0), 1))
    assert not theorem_inequalities(bound_problem(D, (1, 0), 2))
    assert not theorem_inequalities(bound_problem(D, (0, 0), 1))


def test_theorem_inequalities_domain():
    bp = BoundProblem(AdjointPolygon((0, 0)), dim_flag_bar=1, dim_p_ss_bar=9, rank_bar=1, n=1)
    with pytest.raises(BoundsError, match="outside its domain"):
        theorem_inequalities(bp)
    with pytest.raises(BoundsError):
        BoundProblem(AdjointPolygon((0,)), 0, 1, 1, n=0)
    with pytest.raises(BoundsError):
        BoundProblem(AdjointPolygon((0,)), 0, 1, 1, n=1, dim_centralizer=-1)


@pytest.mark.parametrize("n, dim_c, expected", [(7, 4, 3), (3, 3, 0), (10, 0, 10)])
def test_codim_conclusion(n, dim_c, expected):
    up = uniform_problem(datum("gl:3"), (2, 1, 0), n)
    bp = power_problem(up, n0_search(up))
    bp = BoundProblem(bp.polygon, bp.dim_flag_bar, bp.dim_p_ss_bar, bp.rank_bar, n, dim_c)
    assert theorem_inequalities(bp)
    assert codim_conclusion(bp) == expected


def test_codim_conclusion_refuses_failing_problem():
    with pytest.raises(BoundsError, match="inequalities fail"):
        codim_conclusion(bound_problem(datum("gl:2"), (1, 0), 2))


@pytest.mark.parametrize("spec, x, expected", [
    ("gl:2", (1, 0), True),
    ("gl:2", (0, 0), False),
    ("gl:3", (1, 0, 0), True),
])
def test_ss_inequality_examples(spec, x, expected):
    D = datum(spec)
    s = parabolic_stats(D, x)
    assert ss_inequality(D.dim_group, D.rank, s.dim_p_ss) is expected


def test_ss_inequality_numbers():
    assert ss_inequality(4, 2, 2)
    assert not ss_inequality(4, 2, 4)
    assert ss_inequality(9, 3, 5)
    assert not ss_inequality(9, 3, 6)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 5), (4, 7)])
def test_n0_gl2(n, expected):
    assert n0_search(uniform_problem(datum("gl:2"), (1, 0), n)) == expected


def test_n0_gl2_closed_form():
    D = datum("gl:2")
    for n in range(1, 40):
        assert n0_search(uniform_problem(D, (1, 0), n)) == max(n, 2 * n - 1)


def test_n0_none_cases():
    D = datum("gl:2")
    assert n0_search(uniform_problem(D, (0, 0), 1)) is None
    # central point: P = G, empty flag variety
    assert n0_search(uniform_problem(datum("gl:3"), (1, 1, 1), 2)) is None


def test_n0_matches_linear_scan():
    rng = random.Random(11)
    for _ in range(60):
        up = random_problem(rng)
        assert n0_search(up) == linear_n0(up)


def test_n0_boundary_conditions():
    rng = random.Random(12)
    for _ in range(200):
        up = random_problem(rng)
        n0 = n0_search(up)
        assert all(conditions_at(up, n0))
        if n0 > 1:
            assert not all(conditions_at(up, n0 - 1))


def test_n0_monotone_in_n():
    D = datum("gsp:4")
    values = [n0_search(uniform_problem(D, (1, 0), n)) for n in range(1, 15)]
    assert values == sorted(values)


def test_conditions_agree_with_power_theorem():
    rng = random.Random(13)
    for _ in range(40):
        up = random_problem(rng)
        for N in range(1, 8):
            if not conditions_at(up, N)[0]:
                continue
            assert theorem_inequalities(power_problem(up, N)) == conditions_hold(up, N)


def test_large_power_works_iff_ss():
    rng = random.Random(14)
    specs = ["gl:2", "gl:3", "gl:4", "gsp:4", "gsp:6", "go:5", "go:6", "go:7", "go:8"]
    for _ in range(150):
        D = datum(rng.choice(specs))
        x = tuple(F(rng.randint(-2, 2)) for _ in range(D.coords))
        y, _ = dominant_representative(D, x)
        up = uniform_problem(D, y, rng.randint(1, 5))
        s = parabolic_stats(D, y)
        ss = ss_inequality(D.dim_group, D.rank, s.dim_p_ss)
        if s.dim_flag == 0:
            assert n0_search(up) is None
        else:
            assert (n0_search(up) is not None) == ss


def test_uniform_problem_validation():
    D = datum("gl:2")
    with pytest.raises(BoundsError, match="not differences"):
        uniform_problem(D, (2, 0), 1, slopes_allowed=[0, 1])
    up = uniform_problem(D, (2, 0), 1, slopes_allowed=[0, 1, 2])
    assert up.slopes_allowed == {0, 1, 2}
    with pytest.raises(BoundsError):
        UniformProblem(frozenset({F(0)}), 1, 5, adjoint_polygon(D, (0, 0)), 0, 4, 2)
    with pytest.raises(BoundsError):
        uniform_problem(D, (1, 0), 0)


def test_power_problem_shape():
    up = uniform_problem(datum("gl:2"), (1, 0), 2)
    bp = power_problem(up, 3)
    assert bp.polygon.dim == 12
    assert (bp.dim_flag_bar, bp.dim_p_ss_bar, bp.rank_bar, bp.n) == (3, 6, 6, 2)


def test_lv_parameters():
    assert lv_parameters(3, 4) == (7, 4)
    assert lv_parameters(0, 11) == (11, 11)
