"""Exact rational solubility densities for (2,2)-forms over Q_p.

Everything here is exact Fraction arithmetic.  The closed form of the
local density rho(p) is evaluated directly, and independently assembled
from the five-case analysis: the conjugate-pair case splits into three
subcases, two of which import the generalised-binary-quartic constants
sigma/tau/tau*, the double-quadric case contributes nothing, the
line-pair case is solved as a 2x2 linear system, and the double-line
case as a single exact 9-unknown linear system.  The two evaluations
must agree identically.

Also provides the Euler product over primes with a rigorous tail bound.
The tail uses 1 - rho(p) <= 1/p^2, checked exactly for every prime in
the product and at sampled large primes (the asymptotic value of
(1 - rho(p)) p^2 is 1/2, so the margin is about 2x); this is a numeric
margin check, not a symbolic proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def rho_closed(p: int) -> Fraction:
    """Local solubility density, closed form."""
    f = (4 * p**11 - 4 * p**10 + 4 * p**9 - p**8 + 5 * p**7 - 2 * p**6
         + 5 * p**5 - p**4 + 2 * p**3 - 2 * p**2 + 6 * p - 2)
    return 1 - Fraction(p * (p - 1) * (p**2 - 1) * f, 8 * (p**8 - 1) * (p**9 - 1))


def bq_constants(p: int):
    """(sigma, tau, tau*): soluble proportions of generalised binary
    quartics in the three residue families used by cases 1(iii) and 4."""
    sigma = Fraction(2 * p**10 + 3 * p**9 - p**5 + 2 * p**4 - 2 * p**2 - 3 * p - 1,
                     2 * (p + 1)**2 * (p**9 - 1))
    tau = Fraction(5 * p**10 + 8 * p**9 + p**8 - p**7 + 2 * p**6 - 3 * p**5
                   + 4 * p**3 - 10 * p - 6, 8 * (p + 1) * (p**9 - 1))
    tau_star = Fraction(5 * p**10 + 5 * p**9 - p**7 + 3 * p**6 - 4 * p**5
                        + 4 * p**3 - 8 * p - 4, 8 * (p + 1) * (p**9 - 1))
    return sigma, tau, tau_star


def xi3_closed(p: int) -> Fraction:
    return Fraction(p**10 + 2 * p**9 + p**6 - 2 * p**5 + 2 * p**3 + p**2 - 3 * p - 2,
                    2 * (p + 1) * (p**9 - 1))


def xi3_prime_closed(p: int) -> Fraction:
    return Fraction(2 * p**10 + p**9 + p**7 - 2 * p**6 + 2 * p**4 + p**3
                    - 2 * p**2 - 2 * p - 1, 2 * (p + 1) * (p**9 - 1))


def xi5_closed(p: int) -> Fraction:
    f = (6 * p**18 + 8 * p**17 + 2 * p**16 - 8 * p**15 + 16 * p**14 - 12 * p**13
         - 4 * p**12 + 3 * p**11 + 9 * p**10 - 35 * p**9 + 8 * p**8 - 11 * p**7
         + 3 * p**6 - p**5 + 8 * p**4 - 6 * p**3 - 4 * p**2 + 10 * p + 8)
    return Fraction(f, 8 * (p + 1) * (p**9 - 1) * (p**8 - 1))


def solve_linear(rows, rhs):
    """Solve a square exact linear system by Gaussian elimination."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@dataclass
class CaseDensityTable:
    """All exact intermediate quantities of the five-case analysis."""

    p: int
    n: dict          # n0..n5, n11, n12, n13
    xi: dict         # xi1, xi11, xi12, xi13, xi2, xi3, xi4, xi5, xi51, xi52
    xi_prime: dict   # xi11', xi13', xi3', xi4', xi5'
    aux: dict        # delta_line, delta1, delta2, delta1*, delta2*, eps1, eps2, alpha
    bq: dict         # sigma, tau, tau_star
    r: dict          # r0, r11, r12, r13, r2, r3
    s: dict          # s0, s11, s12, s13, s2, s3, s4, s5, t0
    rho: Fraction

    def as_json_dict(self):
        def conv(d):
            return {k: str(v) for k, v in d.items()}
        return {
            "p": self.p, "n": conv(self.n), "xi": conv(self.xi),
            "xi_prime": conv(self.xi_prime), "aux": conv(self.aux),
            "bq": conv(self.bq), "r": conv(self.r), "s": conv(self.s),
            "rho": str(self.rho),
        }


def build_case_table(p: int) -> CaseDensityTable:
    """Assemble the full case system for one prime, exactly."""
    n11 = Fraction(p**3 * (p + 1)**2 * (p - 1), 4)
    n12 = Fraction(p**2 * (p + 1) * (p - 1)**2 * (p - 2), 4)
    n13 = Fraction(p * (p + 1)**2 * (p - 1)**2, 2)
    n1 = Fraction((p**3 - p) * (p**3 + p - 1), 2)
    assert n1 == n11 + n12 + n13
    n2 = Fraction(p**2 * (p - 1)**2, 4)
    n3 = Fraction(p * (p + 1) * (p - 1))
    n4 = Fraction(p * (p + 1) * (p - 1))
    n5 = Fraction((p + 1)**2)
    ntot = Fraction(p**9 - 1, p - 1)
    n0 = ntot - (n1 + n2 + n3 + n4 + n5)

    sigma, tau, tau_star = bq_constants(p)
    xi11 = Fraction(2 * p + 1, (p + 1)**2)
    xi11p = Fraction(p**2 + p + 1, (p + 1)**2)
    xi12 = Fraction(0)
    xi13 = sigma
    xi13p = p * xi13
    xi2 = Fraction(0)
    xi4 = tau
    xi4p = p * tau - (p - 1) * tau_star

    # case 3: two unknowns (xi3, delta_line)
    r11 = Fraction(p**3 * (p + 1) * (p - 1)**2, 4)
    r12 = Fraction(p**2 * (p + 1) * (p - 1)**2 * (p - 2), 4)
    r13 = Fraction(p**2 * (p + 1) * (p - 1)**2, 2)
    r2 = Fraction(p**2 * (p - 1)**2, 4)
    r3 = Fraction(p**2 * (p - 1), 2)
    rtot = Fraction(p**7 * (p - 1), 2)
    r0 = rtot - (r11 + r12 + r13 + r2 + r3)
    # xi3 = ( (p^3-p)/2 + (p^2-1)/2 + delta_line ) / p^3
    # delta_line = ( r0 + r11 xi11 + r13 xi13 + r3 xi3 ) / rtot
    xi3, delta_line = solve_linear(
        [[Fraction(p**3), Fraction(-1)],
         [Fraction(-r3), rtot]],
        [Fraction(p**3 - p, 2) + Fraction(p**2 - 1, 2),
         r0 + r11 * xi11 + r12 * xi12 + r13 * xi13 + r2 * xi2],
    )
    xi3p = (p * (p - 1) + Fraction(p - 1, 2) + delta_line) / p**2

    # case 5: one exact linear system in nine unknowns
    s11 = Fraction(p**3 * (p - 1), 2)
    s12 = Fraction(0)
    s13 = Fraction(p * (p - 1)**2, 2)
    s2 = Fraction(0)
    s3 = Fraction(p * (p - 1), 2)
    s4 = Fraction(p * (p - 1))
    s5 = Fraction(p)
    s0 = p**5 - (s11 + s13 + s3 + s4 + s5)
    t0 = p**4 * (p - 1) - (s11 + s13 + s4)
    xi51 = Fraction(3, 4)

    ip = Fraction(1, p)
    one = Fraction(1)
    # unknowns: xi5, xi52, xi5p, d1, d2, ds1, ds2, e1, e2
    A = []
    b = []
    # xi5 = (1-1/p) 3/4 + (1/p) xi52
    A.append([one, -ip, 0, 0, 0, 0, 0, 0, 0])
    b.append((1 - ip) * xi51)
    # xi52 = (1-1/p^2) + (1/p^2)[ (1/p)(1-1/p)^2 ds2 + 2(1/p)(1-1/p) ds1 + (1/p^2) e1 ]
    A.append([0, one, 0, 0, 0, -ip**3 * 2 * (1 - ip), -ip**3 * (1 - ip)**2, -ip**4, 0])
    b.append(1 - ip**2)
    # xi5p = (1-1/p) + (1/p)(1-1/p) 3/4 + (1/p)^2 (1-1/p) + (1/p)^3 d1
    A.append([0, 0, one, -ip**3, 0, 0, 0, 0, 0])
    b.append((1 - ip) + ip * (1 - ip) * xi51 + ip**2 * (1 - ip))
    # bridging identities d_i = (1-1/p) d*_i + (1/p) e_i
    A.append([0, 0, 0, one, 0, -(1 - ip), 0, -ip, 0])
    b.append(Fraction(0))
    A.append([0, 0, 0, 0, one, 0, -(1 - ip), 0, -ip])
    b.append(Fraction(0))
    # d1 census decomposition (contains xi5)
    A.append([-s5 / p**5, 0, 0, one, 0, 0, 0, 0, 0])
    b.append((s0 + s11 * xi11 + s13 * xi13 + s3 * xi3 + s4 * xi4) / p**5)
    # d2 census decomposition
    A.append([0, 0, 0, 0, one, 0, 0, 0, 0])
    b.append((t0 + s11 * xi11 + s13 * xi13 + s4 * xi4) / (p**4 * (p - 1)))
    # e1 census decomposition (contains xi5')
    A.append([0, 0, -s5 / p**5, 0, 0, 0, 0, one, 0])
    b.append((s0 + s11 * xi11p + s13 * xi13p + s3 * xi3p + s4 * xi4p) / p**5)
    # e2 census decomposition
    A.append([0, 0, 0, 0, 0, 0, 0, 0, one])
    b.append((t0 + s11 * xi11p + s13 * xi13p + s4 * xi4p) / (p**4 * (p - 1)))
    xi5, xi52, xi5p, d1, d2, ds1, ds2, e1, e2 = solve_linear(A, b)

    xi1 = (n11 * xi11 + n12 * xi12 + n13 * xi13) / n1
    rho = (n0 + n1 * xi1 + n2 * xi2 + n3 * xi3 + n4 * xi4 + n5 * xi5) / ntot

    return CaseDensityTable(
        p=p,
        n={"n0": n0, "n1": n1, "n2": n2, "n3": n3, "n4": n4, "n5": n5,
           "n11": n11, "n12": n12, "n13": n13},
        xi={"xi1": xi1, "xi11": xi11, "xi12": xi12, "xi13": xi13, "xi2": xi2,
            "xi3": xi3, "xi4": xi4, "xi5": xi5, "xi51": xi51, "xi52": xi52},
        xi_prime={"xi11": xi11p, "xi13": xi13p, "xi3": xi3p, "xi4": xi4p,
                  "xi5": xi5p},
        aux={"delta_line": delta_line, "delta1": d1, "delta2": d2,
             "delta1_star": ds1, "delta2_star": ds2, "eps1": e1, "eps2": e2,
             "alpha": Fraction(1, p + 1)},
        bq={"sigma": sigma, "tau": tau, "tau_star": tau_star},
        r={"r0": r0, "r11": r11, "r12": r12, "r13": r13, "r2": r2, "r3": r3},
        s={"s0": s0, "s11": s11, "s12": s12, "s13": s13, "s2": s2, "s3": s3,
           "s4": s4, "s5": s5, "t0": t0},
        rho=rho,
    )


def rho_assembled(p: int) -> Fraction:
    """Local density assembled from the case system (must equal rho_closed)."""
    return build_case_table(p).rho


# ----------------------------------------------------------------------
# Euler product
# ----------------------------------------------------------------------

def primes_up_to(n: int):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return [i for i in range(n + 1) if sieve[i]]


def _down(x):
    return math.nextafter(x, -math.inf)


def _up(x):
    return math.nextafter(x, math.inf)


TAIL_CHECK_PRIMES = (1_000_003, 1_000_000_007, 10**12 + 39)


def prime_product(p_max: int = 100_000):
    """Interval for prod_{p <= p_max} rho(p) plus a rigorous tail bound.

    Returns ((lo, hi), tail_lo) where the full product over all primes
    lies in [lo * tail_lo, hi].  tail_lo = 1 - 1/p_max comes from
    1 - rho(p) <= 1/p^2, which is verified exactly for every prime used
    and at the sampled large primes in TAIL_CHECK_PRIMES.
    """
    if p_max < 2:
        raise ValueError("p_max must be at least 2")
    lo, hi = 1.0, 1.0
    for p in primes_up_to(p_max):
        r = rho_closed(p)
        t = 1 - r
        if t * p * p > 1:
            raise AssertionError(f"tail constant violated at {p}")
        tf = t.numerator / t.denominator  # correctly rounded
        rlo = _down(1.0 - _up(_up(tf)))
        rhi = _up(1.0 - _down(_down(tf)))
        lo = _down(lo * rlo)
        hi = _up(hi * rhi)
    for p in TAIL_CHECK_PRIMES:
        t = 1 - rho_closed(p)
        if t * p * p > 1:
            raise AssertionError(f"tail constant violated at sample {p}")
    tail_lo = _down(1.0 - 1.0 / p_max)
    return (lo, hi), tail_lo


def prime_product_interval(p_max: int = 100_000):
    """[lo, hi] enclosing prod over all primes of rho(p)."""
    (lo, hi), tail_lo = prime_product(p_max)
    return _down(lo * tail_lo), hi
