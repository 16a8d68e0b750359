"""Monte Carlo estimators with reproducible per-sample seeding.

A single 64-bit seed expands to one independent generator per sample
index through a keyed hash, so aggregate counts are identical at any
parallelism and outputs are bit-identical for a fixed configuration.
Estimators: the Haar-random solubility rate over Z_p (validating the
closed-form density), conditional rates over constrained residue
classes (validating the case analysis), and the real-coefficient rate.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .padic import PadicApprox, ZpForm
from .solver import decide_qp
from .realsol import corner_signs_agree, real_soluble
from .fields import field as ff_field
from .binforms import classify_binary_quadratic, IRREDUCIBLE
from .ffclassify import act as ff_act


@dataclass
class MCEstimate:
    estimate: float
    samples: int
    stderr: float
    seed: int
    extras: dict = field(default_factory=dict)

    @classmethod
    def from_counts(cls, hits, samples, seed, **extras):
        est = hits / samples
        se = (est * (1 - est) / samples) ** 0.5
        return cls(est, samples, se, seed, dict(extras))

    def as_tsv(self):
        cols = [f"{self.estimate:.6f}", f"{self.stderr:.6f}",
                str(self.samples), str(self.seed)]
        for k in sorted(self.extras):
            cols.append(f"{k}={self.extras[k]}")
        return "\t".join(cols)


def sample_rng(seed: int, idx: int, tag: str = "") -> random.Random:
    """Deterministic per-sample generator, independent of parallelism."""
    h = hashlib.blake2b(f"{seed}:{tag}:{idx}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(h, "big"))


def mc_rho(p: int, samples: int, seed: int, max_depth: int = 64,
           threads: int = 1) -> MCEstimate:
    """Fraction of Haar-random forms over Z_p that are Q_p-soluble."""
    if threads > 1:
        return _parallel_counts(_rho_chunk, (p, seed, max_depth),
                                samples, seed, threads)
    sol, undet = _rho_chunk((p, seed, max_depth), 0, samples)
    return MCEstimate.from_counts(sol, samples, seed, undetermined=undet)


def _rho_chunk(args, lo, hi):
    p, seed, max_depth = args
    sol = undet = 0
    for i in range(lo, hi):
        rng = sample_rng(seed, i, f"rho{p}")
        v = decide_qp(ZpForm.haar(p, rng), max_depth=max_depth)
        if v.outcome == "soluble":
            sol += 1
        elif v.outcome == "undetermined":
            undet += 1
    return sol, undet


# ----------------------------------------------------------------------
# conditional classes
# ----------------------------------------------------------------------

SELECTORS = ("case1i", "case1iii", "case3", "case4", "case5",
             "lemma42-s", "lemma42-t", "line")

_ALIASES = {
    "case1i": "case1i", "case1iii": "case1iii", "case3": "case3",
    "case4": "case4", "case5": "case5",
    "lemma42-s": "lemma42-s", "lemma42s": "lemma42-s",
    "lemma42-t": "lemma42-t", "lemma42t": "lemma42-t",
    "line": "line", "linecondition": "line",
}


class UnknownSelector(ValueError):
    pass


def _coeff(p, rng, vmin=0, vexact=None):
    """Haar coefficient conditioned on its valuation class."""
    draw = lambda: rng.randrange(p)  # noqa: E731
    if vexact is not None:
        prefix = (0,) * vexact + (rng.randrange(1, p),)
        return PadicApprox.stream(p, draw, prefix)
    if vmin:
        return PadicApprox.stream(p, draw, (0,) * vmin)
    return PadicApprox.stream(p, draw)


def _random_irreducible(p, rng):
    F = ff_field(p)
    while True:
        f = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
        if classify_binary_quadratic(F, f) == IRREDUCIBLE:
            return f


def _random_gl2(p, rng):
    while True:
        m = ((rng.randrange(p), rng.randrange(p)),
             (rng.randrange(p), rng.randrange(p)))
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p:
            return m


def _case_reduction(selector, p, rng):
    """A uniform mod-p reduction for the selected case (up to the
    coordinate moves that leave the conditional rate invariant)."""
    F = ff_field(p)
    grid = [0] * 9
    if selector == "case1i":
        a, b, c = _random_irreducible(p, rng)
        grid[2], grid[4], grid[6] = a, b, c          # f(X0 Y1, X1 Y0)
    elif selector == "case1iii":
        a, b, c = _random_irreducible(p, rng)
        grid[0], grid[1], grid[2] = a, b, c          # f(X0 Y0, X0 Y1 + X1 Y0)
        grid[3], grid[4], grid[6] = b, (2 * c) % p, c
    elif selector == "case3":
        a, b, c = _random_irreducible(p, rng)
        grid[0], grid[3], grid[6] = a, b, c          # f(X0, X1) Y0^2
    elif selector == "case4":
        grid[2], grid[4], grid[6] = 1, (-2) % p, 1   # (X0 Y1 - X1 Y0)^2
    elif selector == "case5":
        grid[0] = 1                                   # X0^2 Y0^2
    else:
        raise UnknownSelector(selector)
    M, N = _random_gl2(p, rng), _random_gl2(p, rng)
    return ff_act(F, tuple(grid), M, N)


def _conditional_form(selector, p, rng):
    """(ZpForm, allowed) for one conditional sample."""
    if selector in ("lemma42-s", "lemma42-t"):
        deep = selector == "lemma42-t"
        coeffs = [
            _coeff(p, rng, vmin=2),            # a00
            _coeff(p, rng, vmin=2),            # a01
            _coeff(p, rng, vexact=1),          # a02
            _coeff(p, rng, vmin=1),            # a10
            _coeff(p, rng, vmin=1),            # a11
            _coeff(p, rng, vmin=1),            # a12
            _coeff(p, rng, vexact=0),          # a20
            _coeff(p, rng, vmin=1 if deep else 0),  # a21
            _coeff(p, rng, vmin=1 if deep else 0),  # a22
        ]
        return ZpForm(p, coeffs), ("affine", "affine")
    if selector == "line":
        f = _random_irreducible(p, rng)
        coeffs = []
        for k in range(9):
            if k in (0, 3, 6):
                draw = lambda: rng.randrange(p)  # noqa: E731
                coeffs.append(PadicApprox.stream(p, draw, (f[(0, 3, 6).index(k)],)))
            else:
                coeffs.append(_coeff(p, rng))
        return ZpForm(p, coeffs), ("all", "all")
    red = _case_reduction(selector, p, rng)
    draw = lambda: rng.randrange(p)  # noqa: E731
    coeffs = [PadicApprox.stream(p, draw, (red[k],)) for k in range(9)]
    return ZpForm(p, coeffs), ("all", "all")


def mc_conditional(p: int, selector: str, samples: int, seed: int,
                   max_depth: int = 64, threads: int = 1) -> MCEstimate:
    """Solubility rate over a constrained residue/valuation class."""
    key = _ALIASES.get(selector.lower().replace("_", "-"))
    if key is None:
        raise UnknownSelector(selector)
    if threads > 1:
        return _parallel_counts(_cond_chunk, (p, key, seed, max_depth),
                                samples, seed, threads)
    sol, undet = _cond_chunk((p, key, seed, max_depth), 0, samples)
    return MCEstimate.from_counts(sol, samples, seed, undetermined=undet,
                                  selector=key)


def _cond_chunk(args, lo, hi):
    p, key, seed, max_depth = args
    sol = undet = 0
    for i in range(lo, hi):
        rng = sample_rng(seed, i, f"cond{p}:{key}")
        form, allowed = _conditional_form(key, p, rng)
        v = decide_qp(form, max_depth=max_depth, allowed=allowed)
        if v.outcome == "soluble":
            sol += 1
        elif v.outcome == "undetermined":
            undet += 1
    return sol, undet


# ----------------------------------------------------------------------
# real place
# ----------------------------------------------------------------------

def mc_real_density(samples: int, seed: int, bits: int = 53,
                    threads: int = 1) -> MCEstimate:
    """Fraction of real-soluble forms, coefficients uniform dyadic in
    [-1, 1] at the given resolution (scale invariance makes the box
    irrelevant).  Also reports the corner-sign audit of the insoluble
    samples, which must all have same-sign corner coefficients."""
    if threads > 1:
        return _parallel_counts(_real_chunk, (seed, bits), samples, seed,
                                threads, extra_name="corner_violations")
    sol, viol = _real_chunk((seed, bits), 0, samples)
    return MCEstimate.from_counts(sol, samples, seed, corner_violations=viol)


def _real_chunk(args, lo, hi):
    seed, bits = args
    top = 1 << bits
    sol = viol = 0
    for i in range(lo, hi):
        rng = sample_rng(seed, i, "real")
        nine = tuple(rng.randint(-top, top) for _ in range(9))
        if real_soluble(nine):
            sol += 1
        elif not corner_signs_agree(nine):
            viol += 1
    return sol, viol


def _parallel_counts(chunk_fn, args, samples, seed, threads, extra_name="undetermined"):
    from concurrent.futures import ProcessPoolExecutor

    bounds = []
    step = (samples + threads - 1) // threads
    for lo in range(0, samples, step):
        bounds.append((lo, min(lo + step, samples)))
    hits = extra = 0
    with ProcessPoolExecutor(max_workers=threads) as ex:
        futs = [ex.submit(chunk_fn, args, lo, hi) for lo, hi in bounds]
        for f in futs:
            h, e = f.result()
            hits += h
            extra += e
    return MCEstimate.from_counts(hits, samples, seed, **{extra_name: extra})


def global_constant(p_max: int = 100_000, real_samples: int = 1_000_000,
                    seed: int = 1, threads: int = 1):
    """Interval for the everywhere-locally-soluble probability: Euler
    product over finite primes times the real-place rate (4 standard
    errors of Monte Carlo width)."""
    from .densities import prime_product_interval

    lo_p, hi_p = prime_product_interval(p_max)
    est = mc_real_density(real_samples, seed, threads=threads)
    lo_r = max(0.0, est.estimate - 4 * est.stderr)
    hi_r = min(1.0, est.estimate + 4 * est.stderr)
    return (lo_p * lo_r, hi_p * hi_r), est
