import pytest

from biforms.els import (
    ELSResult,
    SingularDiscriminantZero,
    els_decide,
    els_decide_with_fallback,
    els_rate,
    factor_primes,
)


def test_corner_form_fails_at_real_place():
    r = els_decide((1, 0, 1, 0, 0, 0, 1, 0, 1))
    assert r.status == "not_els" and r.place == "real"


def test_singular_raises():
    with pytest.raises(SingularDiscriminantZero):
        els_decide((1, 0, 0, 0, 0, 0, 0, 0, -1))


def test_fallback_on_singular():
    r = els_decide_with_fallback((1, 0, 0, 0, 0, 0, 0, 0, -1))
    assert r.status == "els"  # rational point (1,1),(1,1)


def test_smooth_soluble_form_is_els():
    r = els_decide((1, 1, 0, 0, 1, 0, 0, 1, 1))
    assert r.status in ("els", "not_els")
    assert r.discriminant != 0
    assert all(p == 2 or r.discriminant % p == 0 for p in r.primes_checked)


def test_factor_primes():
    assert factor_primes(2 * 3**4 * 17) == [2, 3, 17]
    assert factor_primes(-30) == [2, 3, 5]
    # a semiprime beyond the trial bound
    assert factor_primes(1_000_003 * 1_000_033) == [1_000_003, 1_000_033]


def test_els_rate_small():
    out = els_rate(60, 10, seed=5)
    assert out.els + out.not_els + out.undetermined == 60
    assert out.undetermined == 0
    assert 0.7 < out.rate <= 1.0


def test_exit_codes():
    assert ELSResult("els").exit_code() == 0
    assert ELSResult("not_els").exit_code() == 1
    assert ELSResult("undetermined").exit_code() == 2
