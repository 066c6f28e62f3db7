import math

import numpy as np
import pytest

from lambert_tsallis.errors import DegenerateABError, NoSolution, RangeError
from lambert_tsallis.expo import (
    PHI,
    PHIBAR,
    SQRT5,
    FibonacciQuery,
    FermatProblem,
    fibonacci_number,
    fibonacci_sweep,
    solve_fermat,
    solve_fibonacci,
)
from lambert_tsallis.oracle import Bracket, bisect
from lambert_tsallis.trinomial import Formula

# bisection oracle on (22/121)**x + (4/121)**x = 1, xtol 1e-16
FERMAT_22_4_121 = 0.28227738001322333


@pytest.mark.parametrize("abc", [(4, 3, 5), (3, 4, 5)])
def test_pythagorean_triple(abc):
    assert solve_fermat(*abc).real_roots() == pytest.approx([2.0], abs=1e-12)


def test_fermat_non_integer_solution():
    rs = solve_fermat(22, 4, 121)
    real = rs.real_roots()
    assert real == pytest.approx([FERMAT_22_4_121], abs=1e-12)
    x = real[0]
    assert abs((22 / 121) ** x + (4 / 121) ** x - 1) <= 1e-10


def test_fermat_equal_bases():
    rs = solve_fermat(2, 2, 4)
    assert rs.real_roots() == pytest.approx([1.0])
    assert rs[0].formula is Formula.SPECIAL
    assert rs.warnings


def test_fermat_degenerate_inputs():
    with pytest.raises(DegenerateABError):
        solve_fermat(3, 3, 3)
    with pytest.raises(NoSolution):
        solve_fermat(5, 2, 5)
    with pytest.raises(ValueError):
        FermatProblem(-1, 2, 3)


def test_fermat_accepts_problem_object():
    assert solve_fermat(FermatProblem(4, 3, 5)).real_roots() == pytest.approx([2.0])


def test_fermat_unique_root_matches_bisection():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 500:
        C = rng.uniform(1.5, 200.0)
        A = rng.uniform(0.05, 0.98) * C
        B = rng.uniform(0.05, 0.98) * C
        if abs(A - B) < 1e-9 * C:
            continue
        p = FermatProblem(A, B, C)
        real = solve_fermat(p).real_roots()
        assert len(real) == 1, (A, B, C)
        f = lambda x: p.lhs(x).real  # noqa: E731
        lo, hi = -1.0, 1.0
        while f(lo) < 0:
            lo *= 2.0
        while f(hi) > 0:
            hi *= 2.0
        ref = bisect(f, Bracket(lo, hi, f(lo), f(hi)), xtol=1e-15)
        assert real[0] == pytest.approx(ref, abs=1e-9)
        assert abs(p.lhs(real[0])) <= 1e-10 * max(1.0, (max(A, B) / C) ** real[0])
        checked += 1


@pytest.mark.parametrize("y, x", [(1, 2.0), (3, 4.0), (-1, -2.0)])
def test_fibonacci_examples(y, x):
    assert solve_fibonacci(y).real_roots()[0] == pytest.approx(x, abs=1e-9)


def test_fibonacci_at_zero_warns():
    rs = solve_fibonacci(0)
    assert rs.real_roots() == [0.0]
    assert rs.warnings


def test_fibonacci_prefers_orientation_by_sign():
    assert solve_fibonacci(5)[0].formula is Formula.X1
    assert solve_fibonacci(-5)[0].formula is Formula.X2


@pytest.mark.parametrize("n", range(2, 41, 2))
def test_even_index_round_trip(n):
    assert solve_fibonacci(fibonacci_number(n)).real_roots()[0] == pytest.approx(n, abs=1e-9)


def test_odd_symmetry_and_round_trip():
    for y in range(1, 501):
        xp = solve_fibonacci(y).real_roots()[0]
        xm = solve_fibonacci(-y).real_roots()[0]
        assert abs(xp + xm) <= 1e-9
        back = (PHI ** xp - PHIBAR ** xp) / SQRT5
        assert abs(back - y) <= 1e-9 * max(1, y)


def test_fibonacci_query_lhs():
    assert abs(FibonacciQuery(1).lhs(2.0)) < 1e-14


def test_fibonacci_numbers():
    assert [fibonacci_number(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fibonacci_number(92) == 7540113804746346429
    with pytest.raises(RangeError):
        fibonacci_number(93)
    with pytest.raises(TypeError):
        fibonacci_number(2.5)


def test_sweep_rows():
    rows = fibonacci_sweep(-20, 20)
    assert [r.y for r in rows] == list(range(-20, 21))
    assert all(r.ok for r in rows)
    xs = [r.x for r in rows]
    assert all(b > a for a, b in zip(xs, xs[1:]))
    skipped = fibonacci_sweep(-3, 3, include_zero=False)
    assert 0 not in [r.y for r in skipped]
    with pytest.raises(ValueError):
        fibonacci_sweep(3, -3)


def test_large_y_does_not_overflow():
    x = solve_fibonacci(1e300).real_roots()[0]
    assert x == pytest.approx(math.log(1e300 * SQRT5) / math.log(PHI), rel=1e-12)
