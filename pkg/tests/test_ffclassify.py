"""Factorization types, point counts, and their invariance properties."""

import itertools
import random

import pytest

from biforms import ffclassify as fc
from biforms.fields import field


def test_factorization_examples():
    F3 = field(3)
    # (X0^2+X1^2)(Y0^2+Y1^2)
    assert fc.factorization_type(F3, (1, 0, 1, 0, 0, 0, 1, 0, 1)).tag == fc.T_20_02
    assert fc.factorization_type(F3, (1, 0, 0, 0, 0, 0, 0, 0, 0)).tag == fc.T_10SQ_01SQ
    F2 = field(2)
    # f(X0 Y1, X1 Y0) with f = Z0^2 + Z0 Z1 + Z1^2
    ft = fc.factorization_type(F2, (0, 0, 1, 0, 1, 0, 1, 0, 0))
    assert ft.tag == fc.T_CONJ11 and ft.sub == fc.SUB_RATIONAL_PAIR
    assert fc.factorization_type(F2, (0,) * 9).zero


def test_points_on_curve_examples():
    F3, F2 = field(3), field(2)
    assert fc.points_on_curve(F3, (1, 0, 1, 0, 0, 0, 1, 0, 1)) == []
    pts = fc.points_on_curve(F2, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    assert len(pts) == 5 and not any(p.smooth for p in pts)
    pts = fc.points_on_curve(F3, (0, 0, 0, 0, 1, 0, 0, 0, 0))  # X0X1Y0Y1
    assert len(pts) == 12
    assert sum(1 for p in pts if not p.smooth) == 4


def test_has_smooth_point_by_type():
    F3 = field(3)
    # (1,1)^2: (X0 Y1 - X1 Y0)^2 has no smooth point
    sq = (0, 0, 1, 0, 1, 0, 1, 0, 0)
    assert fc.factorization_type(F3, sq).tag == fc.T_11SQ
    assert fc.has_smooth_point(F3, sq) is None
    # a (1,1)(1,1) product always has one
    prod = _pair_of_graphs(F3)
    assert fc.factorization_type(F3, prod).tag == fc.T_1111
    assert fc.has_smooth_point(F3, prod) is not None


def _pair_of_graphs(F):
    # (X0 Y1 - X1 Y0) * (X0 Y0 - X1 Y1): two distinct Moebius graphs
    a = {(0, 1): 1, (1, 0): F.neg[1]}
    b = {(0, 0): 1, (1, 1): F.neg[1]}
    grid = [[0] * 3 for _ in range(3)]
    for (i, j), u in a.items():
        for (k, l), v in b.items():
            grid[i + k][j + l] = F.add[grid[i + k][j + l]][F.mul[u][v]]
    return tuple(grid[i][j] for i in range(3) for j in range(3))


@pytest.mark.parametrize("q", (5, 7))
def test_absolutely_irreducible_has_smooth_point(q):
    # random irreducible forms: every smooth/singular-irreducible type
    # must expose a smooth rational point
    F = field(q)
    rng = random.Random(q)
    seen = 0
    while seen < 40:
        form = tuple(rng.randrange(q) for _ in range(9))
        if not any(form):
            continue
        ft = fc.factorization_type(F, form)
        if ft.tag in (fc.T_SMOOTH, fc.T_ABSING):
            assert fc.has_smooth_point(F, form) is not None
            seen += 1


def _random_gl2(F, rng):
    while True:
        m = ((rng.randrange(F.q), rng.randrange(F.q)),
             (rng.randrange(F.q), rng.randrange(F.q)))
        if F.sub[F.mul[m[0][0]][m[1][1]]][F.mul[m[0][1]][m[1][0]]] != 0:
            return m


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_type_invariance_under_coordinate_changes(q):
    F = field(q)
    rng = random.Random(100 + q)
    for _ in range(60):
        form = tuple(rng.randrange(q) for _ in range(9))
        if not any(form):
            continue
        ft = fc.factorization_type(F, form)
        M, N = _random_gl2(F, rng), _random_gl2(F, rng)
        ft2 = fc.factorization_type(F, fc.act(F, form, M, N))
        assert (ft.tag, ft.sub) == (ft2.tag, ft2.sub)


@pytest.mark.parametrize("q", (2, 3, 5))
def test_type_invariance_under_factor_swap(q):
    # the merged tag classes are symmetric under swapping the two P^1s
    F = field(q)
    rng = random.Random(200 + q)
    for _ in range(60):
        form = tuple(rng.randrange(q) for _ in range(9))
        if not any(form):
            continue
        swapped = tuple(form[3 * (k % 3) + k // 3] for k in range(9))
        ft, ft2 = fc.factorization_type(F, form), fc.factorization_type(F, swapped)
        assert (ft.tag, ft.sub) == (ft2.tag, ft2.sub)


@pytest.mark.parametrize("q", (2, 3))
def test_signature_matches_trial_division_exhaustively(q):
    # the census fast path must agree with full trial division on every
    # form without linear factors
    F = field(q)
    for lead in range(9):
        for rest in itertools.product(range(q), repeat=8 - lead):
            form = (0,) * lead + (1,) + rest
            ft = fc.factorization_type(F, form)
            pts = fc.points_on_curve(F, form)
            n = len(pts)
            s = sum(1 for p in pts if not p.smooth)
            grid = fc.to_grid(form)
            xroots, g2 = fc._extract_x_linears(F, grid)
            yroots, _ = fc._extract_x_linears(F, fc._transpose(g2))
            if xroots or yroots:
                continue
            sig = fc.residual_signature_type(q, fc._is_rank_one(F, grid), s, n)
            assert sig is not None
            assert (sig.tag, sig.sub) == (ft.tag, ft.sub)
