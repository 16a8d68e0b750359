"""Everywhere-locally-soluble decision for integer (2,2)-forms.

For a form with nonzero discriminant the only primes that can obstruct
are those dividing 2 * disc: at any other prime the reduction is a
smooth genus-one curve, which has a rational point by Hasse-Weil
(q + 1 - 2 sqrt(q) > 0) and hence a Q_p-point by Hensel.  The real
place is decided exactly, then each bad prime by the p-adic solver.
Discriminant-zero forms are out of the fast path: callers fall back to
a rational-point search plus solver checks over small primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

from .densities import primes_up_to
from .gbq import discriminant
from .realsol import real_soluble
from .solver import decide_qp_ints

ELS = "els"
NOT_ELS = "not_els"
UNDETERMINED = "undetermined"


class SingularDiscriminantZero(ValueError):
    """The form is singular; the bad-prime shortcut does not apply."""


@dataclass
class ELSResult:
    status: str
    place: object = None          # 'real' or the failing/undecided prime
    primes_checked: tuple = ()
    discriminant: int = 0

    def exit_code(self):
        return {ELS: 0, NOT_ELS: 1, UNDETERMINED: 2}[self.status]

    def as_tsv(self):
        return "\t".join([
            self.status, str(self.place) if self.place is not None else "-",
            ",".join(map(str, self.primes_checked)) or "-",
            str(self.discriminant),
        ])


_TRIAL_PRIMES = None


def _trial_primes():
    global _TRIAL_PRIMES
    if _TRIAL_PRIMES is None:
        _TRIAL_PRIMES = primes_up_to(1_000_000)
    return _TRIAL_PRIMES


def factor_primes(n: int):
    """Distinct prime divisors: trial division to 1e6, then sympy."""
    n = abs(n)
    out = set()
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
    if n > 1:
        if n < 10**12:
            out.add(n)  # below the trial bound squared: n is prime
        else:
            from sympy import factorint

            out.update(factorint(n).keys())
    return sorted(out)


def els_decide(nine, max_depth: int = 64) -> ELSResult:
    """ELS status of an integer form with nonzero discriminant.

    Real insolubility is sound for any nonzero form, so the real place
    is decided before the discriminant gate; the bad-prime shortcut
    itself requires disc != 0.
    """
    nine = tuple(int(v) for v in nine)
    if not any(nine):
        raise ValueError("zero form")
    disc = discriminant(nine)
    if not real_soluble(nine):
        return ELSResult(NOT_ELS, place="real", discriminant=disc)
    if disc == 0:
        raise SingularDiscriminantZero("discriminant vanishes")
    bad = factor_primes(2 * disc)
    for p in bad:
        v = decide_qp_ints(p, nine, max_depth=max_depth)
        if v.outcome == "insoluble":
            return ELSResult(NOT_ELS, place=p, primes_checked=tuple(bad),
                             discriminant=disc)
        if v.outcome == "undetermined":
            return ELSResult(UNDETERMINED, place=p, primes_checked=tuple(bad),
                             discriminant=disc)
    return ELSResult(ELS, primes_checked=tuple(bad), discriminant=disc)


def _small_rational_point(nine, bound=16):
    """Search for a rational point by scanning x and solving the fibre
    quadratic exactly (and symmetrically in y)."""
    def fibre_has_point(c0, c1, c2):
        if c0 == 0 or c2 == 0:
            return True
        d = c1 * c1 - 4 * c0 * c2
        if d < 0:
            return False
        r = isqrt(d)
        return r * r == d

    for a in range(-bound, bound + 1):
        for b in range(bound + 1):
            if gcd(a, b) != 1:
                continue
            m = (a * a, a * b, b * b)
            c = [sum(nine[3 * i + j] * m[i] for i in range(3)) for j in range(3)]
            if not any(c):
                return True
            if fibre_has_point(*c):
                return True
            n = [sum(nine[3 * i + j] * m[j] for j in range(3)) for i in range(3)]
            if not any(n):
                return True
            if fibre_has_point(*n):
                return True
    return False


def els_decide_with_fallback(nine, max_depth: int = 64,
                             singular_prime_bound: int = 100) -> ELSResult:
    """els_decide, with the documented fallback for singular forms:
    a rational point certifies ELS; otherwise the real place and all
    primes up to the bound are checked with the solver (sound for
    NOT_ELS; the ELS answer on this measure-zero set is best-effort)."""
    try:
        return els_decide(nine, max_depth=max_depth)
    except SingularDiscriminantZero:
        pass
    if _small_rational_point(nine):
        return ELSResult(ELS, discriminant=0)
    if not real_soluble(nine):
        return ELSResult(NOT_ELS, place="real", discriminant=0)
    checked = []
    for p in primes_up_to(singular_prime_bound):
        checked.append(p)
        v = decide_qp_ints(p, nine, max_depth=max_depth)
        if v.outcome == "insoluble":
            return ELSResult(NOT_ELS, place=p, primes_checked=tuple(checked),
                             discriminant=0)
        if v.outcome == "undetermined":
            return ELSResult(UNDETERMINED, place=p, primes_checked=tuple(checked),
                             discriminant=0)
    return ELSResult(ELS, primes_checked=tuple(checked), discriminant=0)


@dataclass
class ELSRate:
    els: int = 0
    not_els: int = 0
    undetermined: int = 0
    singular: int = 0
    samples: int = 0
    seed: int = 0
    by_place: dict = field(default_factory=dict)

    @property
    def rate(self):
        return self.els / self.samples if self.samples else 0.0


def els_rate(samples: int, height: int, seed: int, max_depth: int = 64) -> ELSRate:
    """ELS fraction over uniform integer coefficients in [-height, height]."""
    from .mc import sample_rng

    out = ELSRate(samples=samples, seed=seed)
    for i in range(samples):
        rng = sample_rng(seed, i, f"els{height}")
        nine = tuple(rng.randint(-height, height) for _ in range(9))
        if not any(nine):
            nine = (1,) + nine[1:]
        if discriminant(nine) == 0:
            out.singular += 1
        res = els_decide_with_fallback(nine, max_depth=max_depth)
        if res.status == ELS:
            out.els += 1
        elif res.status == NOT_ELS:
            out.not_els += 1
            key = str(res.place)
            out.by_place[key] = out.by_place.get(key, 0) + 1
        else:
            out.undetermined += 1
    return out
