"""Exact real solubility against sign-scan oracles."""

import random
from fractions import Fraction

from biforms.realsol import (
    corner_signs_agree,
    grid_search_soluble,
    quartic_g,
    real_soluble,
    sturm_distinct_real_roots,
)


def test_spec_examples():
    assert real_soluble((1, 0, 1, 0, 0, 0, 1, 0, 1)) is False
    assert real_soluble((1, 0, 0, 0, 0, 0, 0, 0, -1)) is True


def test_sturm_counts():
    assert sturm_distinct_real_roots([-1, 0, 1]) == 2       # t^2 - 1
    assert sturm_distinct_real_roots([1, 0, 1]) == 0        # t^2 + 1
    assert sturm_distinct_real_roots([0, 0, 1]) == 1        # t^2
    assert sturm_distinct_real_roots([1, -2, 1]) == 1       # (t-1)^2
    assert sturm_distinct_real_roots([-1, 0, 2, 0, -1]) == 2  # -(t^2-1)^2
    assert sturm_distinct_real_roots([0, 1]) == 1


def test_touching_quartic_is_soluble():
    # G = -(stuff)^2 with a real double root: the curve meets R at the touch
    # F = (X0 Y1 - X1 Y0)^2 has G identically 0
    assert real_soluble((0, 0, 1, 0, -2, 0, 1, 0, 0)) is True


def test_rational_coefficients():
    form = (Fraction(1, 3), 0, Fraction(1, 7), 0, 0, 0, Fraction(2, 5), 0, 1)
    assert real_soluble(form) is False  # positive corners, G negative definite


def test_grid_oracle_agreement():
    rng = random.Random(42)
    sign_change_cases = 0
    for _ in range(300):
        form = tuple(rng.randint(-9, 9) for _ in range(9))
        gs = grid_search_soluble(form, n=40)
        if gs == "soluble":
            sign_change_cases += 1
            assert real_soluble(form)
        elif real_soluble(form):
            # oracle blind spot: exact decision says a touching zero exists;
            # audit with the Sturm chain of G directly
            g = quartic_g(form)
            assert (g[4] >= 0 or g[0] >= 0 or not any(g)
                    or sturm_distinct_real_roots(list(g)) > 0
                    or max(k for k in range(5) if g[k]) % 2 == 1
                    or g[max(k for k in range(5) if g[k])] > 0)
    assert sign_change_cases > 200


def test_corner_signs():
    assert corner_signs_agree((1, 5, 2, 0, 0, 0, 3, -1, 4))
    assert not corner_signs_agree((1, 0, -2, 0, 0, 0, 3, 0, 4))


def test_insoluble_implies_same_sign_corners():
    rng = random.Random(7)
    found_insoluble = 0
    while found_insoluble < 25:
        form = tuple(rng.randint(-9, 9) for _ in range(9))
        if any(v == 0 for v in (form[0], form[2], form[6], form[8])):
            continue
        if not real_soluble(form):
            found_insoluble += 1
            assert corner_signs_agree(form)
