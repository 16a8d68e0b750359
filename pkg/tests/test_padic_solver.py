"""The p-adic layer and the Q_p solver against the brute-force oracle."""

import random

import pytest

from biforms.padic import (
    AllZeroForm,
    PadicApprox,
    PrecisionExhausted,
    ZpForm,
    act,
    normalize,
    parse_form_line,
    valuation_grid,
)
from biforms.solver import certify_witness, decide_qp, decide_qp_ints

from oracles import oracle_decide_qp


def test_valuation_grid_examples():
    f = ZpForm.from_ints(3, (1, 1, 1, 1, 1, 1, 1, 1, 1))
    assert valuation_grid(f) == ((0,) * 3,) * 3
    f = ZpForm.from_ints(2, (4, 1, 1, 1, 1, 1, 1, 1, 1))
    assert valuation_grid(f)[0][0] == 2
    f = ZpForm(5, [PadicApprox(5, 1, 6)] * 8 + [PadicApprox(5, 0, 6)])
    assert valuation_grid(f)[2][2] == ("ge", 6)


def test_normalize():
    f = ZpForm.from_ints(3, tuple(3 * v for v in (1, 2, 0, 0, 1, 0, 0, 0, 2)))
    g, scale = normalize(f)
    assert scale == 1
    assert g.coeffs[0].value == 1
    f2 = ZpForm.from_ints(3, (1, 0, 0, 0, 0, 0, 0, 0, 0))
    _, scale = normalize(f2)
    assert scale == 0
    with pytest.raises(AllZeroForm):
        normalize(ZpForm.from_ints(3, (0,) * 9))


def test_act_examples():
    ident = ((1, 0), (0, 1))
    swap = ((0, 1), (1, 0))
    f = ZpForm.from_ints(7, (1, 0, 0, 0, 0, 0, 0, 0, 0))  # X0^2 Y0^2
    assert [c.value for c in act(f, ident, ident).coeffs] == [1, 0, 0, 0, 0, 0, 0, 0, 0]
    out = act(f, swap, swap).coeffs
    assert [c.value for c in out] == [0, 0, 0, 0, 0, 0, 0, 0, 1]  # X1^2 Y1^2
    out = act(f, ((7, 0), (0, 1)), ident).coeffs
    assert [c.value for c in out] == [49, 0, 0, 0, 0, 0, 0, 0, 0]


def test_stream_extension_is_stable():
    rng = random.Random(5)
    a = PadicApprox.stream(3, lambda: rng.randrange(3))
    a.ensure(4)
    v4 = a.value
    a.ensure(9)
    assert a.value % 3**4 == v4


def test_precision_exhausted():
    a = PadicApprox(3, 5, 2)
    with pytest.raises(PrecisionExhausted):
        a.ensure(3)


def test_parse_form_line():
    assert parse_form_line("1 0 0 0 0 0 0 0 -1") == (1, 0, 0, 0, 0, 0, 0, 0, -1)
    with pytest.raises(ValueError):
        parse_form_line("1 2 3")


def test_decide_examples():
    v = decide_qp_ints(5, (1, 0, 0, 0, 0, 0, 0, 0, -1))
    assert v.outcome == "soluble"
    assert v.witness.x == (1, 1) and v.witness.y == (1, 1)
    assert decide_qp_ints(3, (1, 0, 1, 0, 0, 0, 1, 0, 1)).outcome == "insoluble"


def test_decide_zero_form_raises():
    with pytest.raises(AllZeroForm):
        decide_qp_ints(3, (0,) * 9)


def test_scaling_invariance():
    rng = random.Random(11)
    for p in (2, 3, 5):
        for _ in range(25):
            nine = tuple(rng.randint(-40, 40) for _ in range(9))
            if not any(nine):
                continue
            a = decide_qp_ints(p, nine)
            b = decide_qp_ints(p, tuple(p * p * v for v in nine))
            assert a.outcome == b.outcome
            assert b.scale == a.scale + 2


def test_undetermined_depth_on_square_form():
    # (X0 Y1 - X1 Y0)^2 is a double curve: no decision at any depth
    v = decide_qp_ints(3, (0, 0, 1, 0, -2, 0, 1, 0, 0), max_depth=6)
    assert v.outcome == "undetermined" and v.reason == "depth"


def test_fixed_precision_returns_precision_undetermined():
    # all digits zero at precision 2 and no streams: cannot normalize
    form = ZpForm(3, [PadicApprox(3, 0, 2) for _ in range(9)])
    v = decide_qp(form)
    assert v.outcome == "undetermined" and v.reason == "precision"


def test_certify_witness_semantics():
    form = ZpForm.from_ints(5, (1, 0, 0, 0, 0, 0, 0, 0, -1))
    assert certify_witness(form, (1, 1), (1, 1), (0, 0), 10)
    # a non-zero of the form fails
    assert not certify_witness(form, (1, 1), (1, 2), (0, 0), 10)


@pytest.mark.parametrize("p", (2, 3, 5))
def test_oracle_agreement_fixed_precision(p):
    rng = random.Random(60 + p)
    agreed = 0
    for _ in range(80):
        N = 8
        nine = tuple(rng.randrange(p**N) for _ in range(9))
        form = ZpForm(p, [PadicApprox(p, v, N) for v in nine])
        v = decide_qp(form, max_depth=40)
        if v.outcome == "undetermined":
            continue
        o = oracle_decide_qp(p, nine, n_max=12)
        if o is None:
            continue
        assert o == v.outcome, (p, nine)
        agreed += 1
    assert agreed >= 60


@pytest.mark.parametrize("p", (2, 3, 5))
def test_restricted_search_matches_oracle(p):
    # allowed = affine x affine, mirrored by the oracle's restriction
    rng = random.Random(90 + p)
    for _ in range(40):
        nine = tuple(rng.randrange(p**6) for _ in range(6)) + tuple(
            rng.randrange(p**6) for _ in range(3))
        form = ZpForm(p, [PadicApprox(p, v, 6) for v in nine])
        v = decide_qp(form, allowed=("affine", "affine"), max_depth=30)
        if v.outcome == "undetermined":
            continue
        o = oracle_decide_qp(p, nine, n_max=10, restrict_affine=True)
        if o is None:
            continue
        assert o == v.outcome, (p, nine)


def test_soluble_verdicts_carry_certified_witness():
    for p in (2, 3, 5):
        for i in range(60):
            rng = random.Random((p, i, "wit"))
            form = ZpForm.haar(p, rng)
            v = decide_qp(form)
            if v.outcome == "soluble":
                w = v.witness
                assert w is not None
                assert certify_witness(form, w.x, w.y, w.patch, w.prec)
