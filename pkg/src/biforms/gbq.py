"""Generalised binary quartics over Z_p and the map from (2,2)-forms.

A generalised binary quartic is a pair (G2, G4) of binary forms of
degrees 2 and 4; it is soluble over Q_p when z^2 + G2(x) z = G4(x) has
a solution with x primitive.  Completing the square (legitimately at
every prime, since z ranges over Q_p) reduces solubility to the binary
quartic H = G2^2 + 4 G4 taking a square value: the decision recurses
over residue discs of P^1(Z_p), with quadratic-residue tests on discs
where H is a unit (mod-8 tests at p = 2) and disc subdivision at the
roots of the reduction.  For primes beyond the enumeration cutoff the
roots are found by polynomial gcds with X^p - X and the residue search
by a short scan backed by the c*(square) structure test.

The map phi sends F0 Y0^2 + F1 Y0 Y1 + F2 Y1^2 to (F1, -F0 F2) and
preserves Q_p-solubility, which also gives the large-prime route for
the (2,2)-form solver.  The discriminant of a (2,2)-form is the
classical polynomial discriminant of the associated binary quartic
F1^2 - 4 F0 F2 (degree 6 in the quartic coefficients, hence degree 12
in the form's coefficients); both projections give the same value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import PREC_EXACT, AllZeroForm, ZpForm, vp
from .realsol import quartic_g
from . import solver as _solver
from .solver import (
    ENUM_MAX_P,
    INSOLUBLE,
    SOLUBLE,
    UNDETERMINED,
    NeedDigits,
    Verdict,
    Witness,
    certify_witness,
)

_SOL, _INSOL, _UNDET = 0, 1, 2


def phi_ints(nine):
    """(G2, G4) = (F1, -F0 F2) for an integer coefficient grid."""
    c0 = (nine[0], nine[3], nine[6])
    c1 = (nine[1], nine[4], nine[7])
    c2 = (nine[2], nine[5], nine[8])
    g4 = [0] * 5
    for i, a in enumerate(c0):
        for j, b in enumerate(c2):
            g4[i + j] -= a * b
    return tuple(c1), tuple(g4)


class GenBinaryQuartic:
    """A pair of binary forms of degrees 2 and 4 over Z_p."""

    def __init__(self, p, g2, g4, source_form: ZpForm = None):
        self.p = p
        self._g2 = tuple(g2) if source_form is None else None
        self._g4 = tuple(g4) if source_form is None else None
        self.source = source_form

    @classmethod
    def from_ints(cls, p, g2, g4):
        return cls(p, g2, g4)

    def extendable(self):
        if self.source is None:
            return True  # exact integers
        return all(c.draw is not None or c.is_exact() for c in self.source.coeffs)

    def snapshot(self, n):
        """(g2 vals, g4 vals, g2 precs, g4 precs) at >= n known digits."""
        if self.source is None:
            return (self._g2, self._g4,
                    (PREC_EXACT,) * 3, (PREC_EXACT,) * 5)
        from .padic import PrecisionExhausted

        try:
            self.source.ensure(n)
        except PrecisionExhausted:
            pass
        vals, precs = self.source.snapshot()
        g2 = (vals[1], vals[4], vals[7])
        g2p = (precs[1], precs[4], precs[7])
        c0 = (vals[0], vals[3], vals[6])
        c0p = (precs[0], precs[3], precs[6])
        c2 = (vals[2], vals[5], vals[8])
        c2p = (precs[2], precs[5], precs[8])
        g4 = [0] * 5
        g4p = [PREC_EXACT] * 5
        for i in range(3):
            for j in range(3):
                g4[i + j] -= c0[i] * c2[j]
                g4p[i + j] = min(g4p[i + j], c0p[i], c2p[j])
        return g2, tuple(g4), g2p, tuple(g4p)


def phi(form: ZpForm) -> GenBinaryQuartic:
    """The solubility-preserving image of a (2,2)-form over Z_p."""
    return GenBinaryQuartic(form.p, None, None, source_form=form)


@dataclass
class GbqWitness:
    x: tuple          # primitive integer 2-vector
    z_num: int        # z = z_num / z_den known mod p^prec (numerator scale)
    z_den: int
    prec: int


# ----------------------------------------------------------------------
# quartic helpers
# ----------------------------------------------------------------------

def _quartic_eval(h, x0, x1):
    m = (x0**4, x0**3 * x1, x0**2 * x1**2, x0 * x1**3, x1**4)
    return sum(hk * mk for hk, mk in zip(h, m))


def _subst_quartic(h, precs, A, p):
    """H(A X) with per-coefficient precision tracking."""
    (a, b), (c, d) = A
    n0 = (a, b)
    n1 = (c, d)
    # B[k] = coefficients of n0^(4-k) n1^k
    pow0 = [(1,)]
    pow1 = [(1,)]
    for _ in range(4):
        pow0.append(_conv_int(pow0[-1], n0))
        pow1.append(_conv_int(pow1[-1], n1))
    out = [0] * 5
    outp = [PREC_EXACT] * 5
    for k in range(5):
        hk = h[k]
        pk = precs[k]
        basis = _conv_int(pow0[4 - k], pow1[k])
        for t, coef in enumerate(basis):
            if coef == 0:
                continue
            out[t] += hk * coef
            if pk < PREC_EXACT:
                outp[t] = min(outp[t], pk + vp(coef, p))
    return tuple(out), tuple(outp)


def _conv_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _content5(p, vals, precs):
    cont = None
    exact_only = True
    for v, pr in zip(vals, precs):
        if pr < PREC_EXACT:
            exact_only = False
            v %= p**pr
        if v:
            cont = vp(v, p) if cont is None else min(cont, vp(v, p))
    if cont is None:
        if exact_only:
            return None  # exactly the zero quartic
        raise NeedDigits
    for v, pr in zip(vals, precs):
        if pr < PREC_EXACT and v % p**pr == 0 and pr < cont:
            raise NeedDigits
    return cont


_QR_CACHE = {}


def _is_qr(a, p):
    if p <= ENUM_MAX_P:
        qr = _QR_CACHE.get(p)
        if qr is None:
            qr = frozenset(x * x % p for x in range(1, p))
            _QR_CACHE[p] = qr
        return a % p in qr
    return pow(a, (p - 1) // 2, p) == 1


def _qsol(p, h, precs, x_aff, vpar, depth, max_depth):
    """Does H take a square value (times p^vpar) on the allowed discs?"""
    cont = _content5(p, h, precs)
    if cont is None:
        return _SOL, ("zero", None)
    if cont:
        q = p**cont
        h = tuple(((v % p**pr) // q if pr < PREC_EXACT else v // q)
                  for v, pr in zip(h, precs))
        precs = tuple(pr - cont if pr < PREC_EXACT else pr for pr in precs)
        vpar ^= cont & 1
    if any(pr < 1 for pr in precs):
        raise NeedDigits
    h = tuple(v % p**pr if pr < PREC_EXACT else v for v, pr in zip(h, precs))
    if p > ENUM_MAX_P:
        return _qsol_big(p, h, precs, x_aff, vpar, depth, max_depth)
    hbar = [v % p for v in h]
    xs = [(t, 1) for t in range(p)]
    if not x_aff:
        xs.append((1, 0))
    roots = []
    for x in xs:
        hv = _quartic_eval(hbar, x[0], x[1]) % p
        if hv:
            if vpar:
                continue
            if p > 2:
                if _is_qr(hv, p):
                    return _SOL, ("disc", x)
            else:
                if min(precs) < 3:
                    raise NeedDigits
                reps = [(x[0] + 2 * s, 1) for s in range(4)] if x[1] else \
                    [(1, 2 * s) for s in range(4)]
                for rep in reps:
                    if _quartic_eval(h, rep[0], rep[1]) % 8 == 1:
                        return _SOL, ("disc", rep)
        else:
            roots.append(x)
    if not roots:
        return _INSOL, None
    if depth >= max_depth:
        return _UNDET, "depth"
    saw_undet = False
    for x in roots:
        A = ((p, x[0]), (0, 1)) if x[1] else ((0, 1), (p, 0))
        nh, npr = _subst_quartic(h, precs, A, p)
        code, payload = _qsol(p, nh, npr, True, vpar, depth + 1, max_depth)
        if code == _SOL:
            kind, pt = payload
            if kind == "disc":
                pt = (A[0][0] * pt[0] + A[0][1] * pt[1],
                      A[1][0] * pt[0] + A[1][1] * pt[1])
            return _SOL, (kind, pt)
        if code == _UNDET:
            saw_undet = True
    return (_UNDET, "depth") if saw_undet else (_INSOL, None)


# ----------------------------------------------------------------------
# large primes: no point enumeration
# ----------------------------------------------------------------------

def _poly_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_mod(a, f, p):
    a = [x % p for x in a]
    df = _deg(f)
    inv = pow(f[df], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            c = c * inv % p
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return a[:df] if df > 0 else [0]


def _deg(a):
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _poly_gcd(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    while _deg(b) >= 0:
        a, b = b, _poly_rem(a, b, p)
    d = _deg(a)
    if d < 0:
        return [0]
    inv = pow(a[d], -1, p)
    return [x * inv % p for x in a[:d + 1]]


def _poly_rem(a, b, p):
    a = [x % p for x in a]
    db = _deg(b)
    inv = pow(b[db], -1, p)
    while _deg(a) >= db:
        da = _deg(a)
        c = a[da] * inv % p
        for j in range(db + 1):
            a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        a = a[:da]
        if not a:
            a = [0]
    return a


def _poly_powmod(base, e, f, p):
    result = [1]
    base = _poly_mod(list(base), f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _fp_roots(f, p):
    """Distinct roots in F_p of a nonzero polynomial (ascending coeffs)."""
    f = [x % p for x in f]
    roots = []
    while f[0] == 0 and _deg(f) >= 0:
        roots.append(0)
        f = f[1:]
        if not f:
            return sorted(set(roots))
    if _deg(f) < 1:
        return sorted(set(roots))
    xp = _poly_powmod([0, 1], p, f, p)
    xp_minus_x = list(xp) + [0] * (len(f) - len(xp))
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    g = _poly_gcd(f, xp_minus_x, p)
    roots.extend(_split_linear(g, p))
    return sorted(set(roots))


def _split_linear(g, p, shift=1):
    d = _deg(g)
    if d <= 0:
        return []
    if d == 1:
        return [(-g[0] * pow(g[1], -1, p)) % p]
    if d == 2:
        disc = (g[1] * g[1] - 4 * g[0] * g[2]) % p
        s = sqrt_mod_p(disc, p)
        inv = pow(2 * g[2], -1, p)
        return [((-g[1] + s) * inv) % p, ((-g[1] - s) * inv) % p]
    a = shift
    while True:
        probe = _poly_powmod([a, 1], (p - 1) // 2, g, p)
        probe = list(probe) + [0] * (_deg(g) + 1 - len(probe))
        probe[0] = (probe[0] - 1) % p
        h = _poly_gcd(g, probe, p)
        if 0 < _deg(h) < d:
            rest = _poly_quo(g, h, p)
            return _split_linear(h, p, a + 1) + _split_linear(rest, p, a + 1)
        a += 1


def _poly_quo(a, b, p):
    a = [x % p for x in a]
    db = _deg(b)
    inv = pow(b[db], -1, p)
    out = [0] * (_deg(a) - db + 1)
    while _deg(a) >= db:
        da = _deg(a)
        c = a[da] * inv % p
        out[da - db] = c
        for j in range(db + 1):
            a[da - db + j] = (a[da - db + j] - c * b[j]) % p
        a = a[:da] if da > 0 else [0]
        if not a:
            a = [0]
    return out


def sqrt_mod_p(a, p):
    """Tonelli-Shanks square root mod an odd prime (a must be a QR)."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # general case
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def _square_shape(hbar, p):
    """If hbar = c * S(t)^2 up to the point at infinity, return c, else None.

    hbar is given by ascending-in-X1 homogeneous coefficients h0..h4; the
    criterion is that every root (including X0 = 0) has even multiplicity.
    """
    # infinity multiplicity: leading zeros of (h0, h1, ...) viewed at X0^4
    e_inf = 0
    while e_inf <= 4 and hbar[e_inf] % p == 0:
        e_inf += 1
    if e_inf % 2 == 1:
        return None
    f = [hbar[4 - k] % p for k in range(5)]  # f(t) = H(t, 1), ascending in t
    d = _deg(f)
    if d < 0:
        return None
    if d + e_inf != 4:
        return None
    lc = f[d]
    if d == 0:
        return lc
    g = _poly_gcd(f, [(i * f[i]) % p for i in range(1, d + 1)], p)
    sqfree = _poly_quo(f, g, p)
    ds = _deg(sqfree)
    if 2 * (ds if ds > 0 else 0) != d and not (d % 2 == 0 and ds == d // 2):
        return None
    # verify f == lc * (sqfree/lc')^2 with sqfree monic-normalized
    sq = _conv_int(tuple(sqfree), tuple(sqfree))
    sq = [x % p for x in sq]
    if _deg(sq) != d:
        return None
    scale = lc * pow(sq[d], -1, p) % p
    for i in range(d + 1):
        if (sq[i] * scale - f[i]) % p:
            return None
    return lc


def _qsol_big(p, h, precs, x_aff, vpar, depth, max_depth):
    hbar = [v % p for v in h]
    f = [hbar[4 - k] for k in range(5)]  # ascending in t for x = (t, 1)
    roots = [(t, 1) for t in _fp_roots(f, p)]
    if not x_aff and hbar[0] % p == 0:
        roots.append((1, 0))
    if vpar == 0:
        if not x_aff and hbar[0] % p and _is_qr(hbar[0], p):
            return _SOL, ("disc", (1, 0))
        scanned = 0
        t = 0
        limit = 4 * int(3 * p**0.5) + 64
        while t < p:
            hv = _quartic_eval(hbar, t, 1) % p
            if hv and _is_qr(hv, p):
                return _SOL, ("disc", (t, 1))
            t += 1
            scanned += 1
            if scanned == limit:
                c = _square_shape(hbar, p)
                if c is not None and not _is_qr(c, p):
                    break  # constant non-residue off the roots: no unit disc
    if not roots:
        return _INSOL, None
    if depth >= max_depth:
        return _UNDET, "depth"
    saw_undet = False
    for x in roots:
        A = ((p, x[0]), (0, 1)) if x[1] else ((0, 1), (p, 0))
        nh, npr = _subst_quartic(h, precs, A, p)
        code, payload = _qsol(p, nh, npr, True, vpar, depth + 1, max_depth)
        if code == _SOL:
            kind, pt = payload
            if kind == "disc":
                pt = (A[0][0] * pt[0] + A[0][1] * pt[1],
                      A[1][0] * pt[0] + A[1][1] * pt[1])
            return _SOL, (kind, pt)
        if code == _UNDET:
            saw_undet = True
    return (_UNDET, "depth") if saw_undet else (_INSOL, None)


# ----------------------------------------------------------------------
# public deciders
# ----------------------------------------------------------------------

def _sqrt_padic(u, p, k):
    """sqrt of a unit square u mod p^k (p odd: Tonelli + Hensel; p = 2
    requires u = 1 mod 8 and k >= 3)."""
    if p > 2:
        w = sqrt_mod_p(u, p)
        mod = p
        while mod < p**k:
            mod = min(mod * mod, p**k)
            w = (w - (w * w - u) * pow(2 * w, -1, mod)) % mod
        return w % p**k
    assert u % 8 == 1
    w = 1
    for j in range(3, k):
        if (w * w - u) % 2**(j + 1):
            w += 1 << (j - 1)
    return w % 2**k


def decide_gbq(gbq: GenBinaryQuartic, max_depth: int = 64) -> Verdict:
    """Solubility of z^2 + G2 z = G4 over Q_p, with witness data."""
    p = gbq.p
    n = 4
    while True:
        g2, g4, g2p, g4p = gbq.snapshot(n)
        if not any(v % p**pr if pr < PREC_EXACT else v for v, pr in
                   zip(list(g2) + list(g4), list(g2p) + list(g4p))):
            if all(pr >= PREC_EXACT for pr in list(g2p) + list(g4p)):
                raise AllZeroForm("both forms vanish")
            if not gbq.extendable():
                return Verdict(UNDETERMINED, reason="precision")
            n *= 2
            continue
        h = [0] * 5
        hp = [PREC_EXACT] * 5
        for i in range(3):
            for j in range(3):
                h[i + j] += g2[i] * g2[j]
                hp[i + j] = min(hp[i + j], g2p[i], g2p[j])
        for k in range(5):
            h[k] += 4 * g4[k]
            hp[k] = min(hp[k], g4p[k] + (2 if p == 2 else 0))
        try:
            code, payload = _qsol(p, tuple(h), tuple(hp), False, 0, 0, max_depth)
        except NeedDigits:
            if not gbq.extendable():
                return Verdict(UNDETERMINED, reason="precision")
            n *= 2
            if n > 1 << 14:
                return Verdict(UNDETERMINED, reason="precision")
            continue
        if code == _INSOL:
            return Verdict(INSOLUBLE)
        if code == _UNDET:
            return Verdict(UNDETERMINED, reason=payload)
        kind, x = payload
        if kind == "zero":
            # H = 0 identically: z = -G2(x)/2 for any x
            wit = GbqWitness((1, 0), -g2[0], 2, min(g2p[0], 64))
            return Verdict(SOLUBLE, witness=wit)
        wit = _build_witness(gbq, x, max(n, 32))
        if wit is not None:
            return Verdict(SOLUBLE, witness=wit)
        if not gbq.extendable():
            return Verdict(UNDETERMINED, reason="precision")
        n *= 2
        if n > 1 << 14:
            return Verdict(UNDETERMINED, reason="precision")


def _build_witness(gbq: GenBinaryQuartic, x, n):
    """z with z^2 + G2(x) z = G4(x) to the available precision."""
    p = gbq.p
    g2, g4, g2p, g4p = gbq.snapshot(n)
    kmin = min(min(g2p), min(g4p))
    k = min(kmin, n)
    x0, x1 = x
    common = min(vp(x0, p) if x0 else PREC_EXACT, vp(x1, p) if x1 else PREC_EXACT)
    x = (x0 // p**common, x1 // p**common)
    hval = _quartic_eval(_h_coeffs(g2, g4), x[0], x[1])
    if k < PREC_EXACT:
        hval %= p**k
    if hval == 0:
        if k >= PREC_EXACT:
            g2x = _bf_eval_int(g2, x)
            return GbqWitness(x, -g2x, 2, 64)
        return None
    v = vp(hval, p)
    if v >= 2 * k // 3:
        return None  # not enough digits to split the square root
    if v % 2:
        return None
    u = hval // p**v
    if p > 2:
        if not _is_qr(u, p):
            return None
        kk = k - v
        w = p**(v // 2) * _sqrt_padic(u, p, kk)
        g2x = _bf_eval_int(g2, x)
        z = (w - g2x) * pow(2, -1, p**kk) % p**kk
        return GbqWitness(x, z, 1, kk)
    if u % 8 != 1:
        return None
    kk = k - v
    if kk < 4:
        return None
    w = p**(v // 2) * _sqrt_padic(u, 2, kk)
    g2x = _bf_eval_int(g2, x)
    return GbqWitness(x, w - g2x, 2, kk - 1)


def _h_coeffs(g2, g4):
    h = [4 * c for c in g4]
    for i in range(3):
        for j in range(3):
            h[i + j] += g2[i] * g2[j]
    return h


def _bf_eval_int(coeffs, x):
    d = len(coeffs) - 1
    return sum(c * x[0]**(d - i) * x[1]**i for i, c in enumerate(coeffs))


def decide_gbq_ints(p, g2, g4, max_depth: int = 64) -> Verdict:
    return decide_gbq(GenBinaryQuartic.from_ints(p, g2, g4), max_depth=max_depth)


def decide_qp_via_phi(form: ZpForm, max_depth: int = 64) -> Verdict:
    """Large-prime route for the (2,2) solver through phi."""
    p = form.p
    v = decide_gbq(phi(form), max_depth=max_depth)
    if v.outcome != SOLUBLE:
        return v
    wit = v.witness
    vals, precs = form.snapshot()
    x = wit.x
    c0x = _bf_eval_int((vals[0], vals[3], vals[6]), x)
    kmin = min(precs)
    for k in (64, 128, 256, 512):
        w2 = _build_witness(phi(form), x, k)
        if w2 is None:
            w2 = wit
        z_num, z_den = w2.z_num, w2.z_den
        # y = (z : C0(x)) lies on the curve; z = z_num / z_den
        y = (z_num, z_den * c0x)
        if y[0] == 0 and y[1] == 0:
            y = (1, 0)
        yv = (vp(y[0], p) if y[0] else PREC_EXACT,
              vp(y[1], p) if y[1] else PREC_EXACT)
        common = min(yv)
        if common >= PREC_EXACT:
            y = (1, 0)
        else:
            y = (y[0] // p**common, y[1] // p**common)
        xs, _ = _strip(x, p)
        patch = (0 if xs[1] % p else 1, 0 if y[1] % p else 1)
        wprec = min(w2.prec, kmin if kmin < PREC_EXACT else w2.prec)
        if certify_witness(form, xs, y, patch, wprec):
            e = _solver._certified_e(form, xs, y, patch)
            return Verdict(SOLUBLE, witness=Witness(patch, xs, y, wprec, e))
    return Verdict(UNDETERMINED, reason="precision")


def _strip(vec, p):
    a, b = vec
    k = min(vp(a, p) if a else PREC_EXACT, vp(b, p) if b else PREC_EXACT)
    return (a // p**k, b // p**k), k


# ----------------------------------------------------------------------
# discriminant and the derivative rank check
# ----------------------------------------------------------------------

def quartic_disc(g):
    """Classical polynomial discriminant of a binary quartic (g0..g4)."""
    a, b, c, d, e = g
    return (256 * a**3 * e**3 - 192 * a**2 * b * d * e**2
            - 128 * a**2 * c**2 * e**2 + 144 * a**2 * c * d**2 * e
            - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
            - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e
            + 18 * a * b * c * d**3 + 16 * a * c**4 * e - 4 * a * c**3 * d**2
            - 27 * b**4 * e**2 + 18 * b**3 * c * d * e - 4 * b**3 * d**3
            - 4 * b**2 * c**3 * e + b**2 * c**2 * d**2)


def discriminant(nine):
    """Discriminant of a (2,2)-form: the quartic discriminant of
    F1^2 - 4 F0 F2 under the first projection."""
    return quartic_disc(quartic_g(nine))


def discriminant_second(nine):
    """Same, via the second projection (equal to the first; see tests)."""
    swapped = tuple(nine[3 * (k % 3) + k // 3] for k in range(9))
    return quartic_disc(quartic_g(swapped))


def phi_derivative_rank(case: str, p: int, f=None) -> int:
    """Rank over F_p of the linearized phi at the two special fibres.

    case 'case4': (F0,F1,F2) -> (F1, -X0^2 F0 - X1^2 F2)
    case 'case1iii': (F0,F1,F2) -> (F1, -f(0,1) X0^2 F0 - f(X0,X1) F2)
    with f an irreducible binary quadratic (a, b, c) over F_p.
    """
    if case == "case4":
        w0 = (1, 0, 0)   # X0^2 multiplier for F0
        w2 = (0, 0, 1)   # X1^2 multiplier for F2
    elif case == "case1iii":
        a, b, c = f
        w0 = (c % p, 0, 0)
        w2 = (a % p, b % p, c % p)
    else:
        raise ValueError("case must be 'case4' or 'case1iii'")
    rows = []
    for comp in range(3):
        for i in range(3):
            # basis element: F_comp has X0^(2-i) X1^i, others zero
            out = [0] * 8
            if comp == 1:
                out[i] = 1
            elif comp == 0:
                for j, wj in enumerate(w0):
                    out[3 + i + j] = (-wj) % p
            else:
                for j, wj in enumerate(w2):
                    out[3 + i + j] = (-wj) % p
            rows.append(out)
    # rank of the 9 x 8 matrix over F_p
    mat = [row[:] for row in rows]
    rank = 0
    ncols = 8
    row_used = [False] * len(mat)
    for col in range(ncols):
        piv = None
        for r in range(len(mat)):
            if not row_used[r] and mat[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        row_used[piv] = True
        rank += 1
        inv = pow(mat[piv][col], -1, p)
        mat[piv] = [v * inv % p for v in mat[piv]]
        for r in range(len(mat)):
            if r != piv and mat[r][col] % p:
                fmul = mat[r][col]
                mat[r] = [(v - fmul * w) % p for v, w in zip(mat[r], mat[piv])]
    return rank
