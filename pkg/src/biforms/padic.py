"""Truncated p-adic integers and (2,2)-forms over Z_p.

A PadicApprox is a residue known mod p^prec, optionally backed by a
digit source so the precision can be extended on demand; extending
never changes the already-known residue.  Exact integers use a large
sentinel precision.  Forms are nine coefficients sharing one prime.
"""

from __future__ import annotations

PREC_EXACT = 10**9


class PrecisionExhausted(Exception):
    """A digit beyond the known precision was required and no source exists."""


class AllZeroForm(ValueError):
    """Every coefficient vanishes at the known precision."""


class PadicApprox:
    __slots__ = ("p", "value", "prec", "draw")

    def __init__(self, p, value, prec=PREC_EXACT, draw=None):
        self.p = p
        self.prec = prec
        self.value = value if prec >= PREC_EXACT else value % p**prec
        self.draw = draw

    @classmethod
    def exact(cls, p, n):
        return cls(p, n)

    @classmethod
    def stream(cls, p, draw, prefix=()):
        """Approximation with the given known low digits and a digit source."""
        value = 0
        for i, d in enumerate(prefix):
            value += d * p**i
        return cls(p, value, len(prefix), draw)

    def is_exact(self):
        return self.prec >= PREC_EXACT

    def ensure(self, n):
        while self.prec < n and self.prec < PREC_EXACT:
            if self.draw is None:
                raise PrecisionExhausted(n)
            self.value += self.draw() * self.p**self.prec
            self.prec += 1

    def residue(self, n):
        self.ensure(n)
        return self.value % self.p**n

    def valuation(self):
        """Exact valuation, or ('ge', prec) when 0 at known precision."""
        v = self.value if self.is_exact() else self.value % self.p**self.prec
        if v == 0:
            if self.is_exact():
                return ("ge", PREC_EXACT)
            return ("ge", self.prec)
        k = 0
        while v % self.p == 0:
            v //= self.p
            k += 1
        if not self.is_exact() and k >= self.prec:
            return ("ge", self.prec)
        return k

    def shifted(self, k):
        """The approximation divided by p^k (requires valuation >= k)."""
        p = self.p
        if self.is_exact():
            if self.value % p**k:
                raise ValueError("not divisible")
            return PadicApprox(p, self.value // p**k)
        if (self.value % p**self.prec) % p**k:
            raise ValueError("not divisible")
        parent = self

        def draw():
            parent.ensure(child.prec + k + 1)
            return (parent.value // p**(child.prec + k)) % p

        child = PadicApprox(p, (self.value % p**self.prec) // p**k,
                            self.prec - k, draw if self.draw else None)
        return child

    def __repr__(self):
        if self.is_exact():
            return f"PadicApprox({self.value} exact, p={self.p})"
        return f"PadicApprox({self.value} + O({self.p}^{self.prec}))"


class ZpForm:
    """A (2,2)-form with coefficients in Z_p, row-major grid order."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        if len(coeffs) != 9:
            raise ValueError("nine coefficients required")
        self.p = p
        self.coeffs = list(coeffs)

    @classmethod
    def from_ints(cls, p, ints):
        return cls(p, [PadicApprox.exact(p, int(n)) for n in ints])

    @classmethod
    def haar(cls, p, rng):
        """Haar-random form backed by lazily drawn digits."""
        return cls(p, [PadicApprox.stream(p, lambda: rng.randrange(p)) for _ in range(9)])

    def has_streams(self):
        return all(c.draw is not None or c.is_exact() for c in self.coeffs)

    def ensure(self, n):
        for c in self.coeffs:
            c.ensure(n)

    def snapshot(self):
        return (tuple(c.value for c in self.coeffs),
                tuple(c.prec for c in self.coeffs))

    def serialize(self):
        """Nine whitespace-separated integers, row-major grid order."""
        return " ".join(str(c.value) for c in self.coeffs)


def valuation_grid(form: ZpForm):
    """3x3 grid of exact valuations or ('ge', N) markers."""
    vs = [c.valuation() for c in form.coeffs]
    return tuple(tuple(vs[3 * i + j] for j in range(3)) for i in range(3))


def normalize(form: ZpForm):
    """(form / p^scale with unit content, scale); AllZeroForm if 0 mod p^N."""
    vals = [c.valuation() for c in form.coeffs]
    known = [v for v in vals if not isinstance(v, tuple)]
    if not known:
        raise AllZeroForm("every coefficient is 0 at the known precision")
    scale = min(known)
    bound_ok = all(isinstance(v, int) or v[1] >= scale for v in vals)
    if not bound_ok:
        raise PrecisionExhausted("content undetermined at known precision")
    if scale == 0:
        return form, 0
    return ZpForm(form.p, [c.shifted(scale) for c in form.coeffs]), scale


def act_ints(vals, precs, M, N, p):
    """Substitute (X,Y) <- (M X, N Y) on a coefficient snapshot.

    M, N are integer 2x2 matrices.  Returns new (vals, precs); the
    precision of each output entry is the min over contributing inputs
    of prec + v_p(integer multiplier).
    """
    SM = _sub_matrix_int(M)
    SN = _sub_matrix_int(N)
    out_vals = []
    out_precs = []
    for k in range(3):
        for l in range(3):
            acc = 0
            prec = PREC_EXACT
            for i in range(3):
                smik = SM[i][k]
                if smik == 0:
                    continue
                for j in range(3):
                    snjl = SN[j][l]
                    c = vals[3 * i + j]
                    if snjl == 0:
                        continue
                    mult = smik * snjl
                    acc += mult * c
                    pij = precs[3 * i + j]
                    if pij < PREC_EXACT:
                        prec = min(prec, pij + vp(mult, p))
            out_vals.append(acc)
            out_precs.append(prec)
    return tuple(out_vals), tuple(out_precs)


def act(form: ZpForm, M, N) -> ZpForm:
    """Public substitution operator; the result carries no digit source."""
    vals, precs = form.snapshot()
    nv, np_ = act_ints(vals, precs, M, N, form.p)
    return ZpForm(form.p, [PadicApprox(form.p, v, pr) for v, pr in zip(nv, np_)])


def vp(n, p):
    if n == 0:
        return PREC_EXACT
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _sub_matrix_int(M):
    (a, b), (c, d) = M
    return (
        (a * a, 2 * a * b, b * b),
        (a * c, a * d + b * c, b * d),
        (c * c, 2 * c * d, d * d),
    )


def parse_form_line(line: str):
    """Nine whitespace-separated integers, row-major per the grid layout."""
    parts = line.split()
    if len(parts) != 9:
        raise ValueError(f"expected 9 integers, got {len(parts)}")
    return tuple(int(x) for x in parts)
