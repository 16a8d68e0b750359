"""Exact decision procedure for Q_p-solubility of (2,2)-forms.

The solver works on the residue tree: reduce the (unit-content) form
mod p, lift any smooth rational point of the reduction by Hensel's
lemma, rule the branch out if the reduction has no allowed points, and
otherwise recurse into each allowed singular point after translating it
to ((0:1),(0:1)) and substituting X0 <- p X0, Y0 <- p Y0.  The allowed
set is always a product of {whole line, affine patch}; it starts as the
full product and becomes affine x affine after every substitution.

Coefficients are integers known to per-entry precision, optionally
backed by digit streams; whenever a branch condition needs an unknown
digit, the search restarts with a longer snapshot (decisions depend
only on already-drawn digits, so replays follow the same path).  Every
Soluble verdict carries a witness checked by the quantitative Hensel
certificate on the input form; for primes beyond the enumeration cutoff
the decision is delegated to the generalised-binary-quartic solver
through the solubility-preserving map phi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import (
    PREC_EXACT,
    AllZeroForm,
    PadicApprox,
    PrecisionExhausted,
    ZpForm,
    act_ints,
    vp,
)

ENUM_MAX_P = 257          # point enumeration for p <= this; phi route beyond
_SOL, _INSOL, _UNDET = 0, 1, 2

SOLUBLE = "soluble"
INSOLUBLE = "insoluble"
UNDETERMINED = "undetermined"


class NeedDigits(Exception):
    """Internal: the decision needs digits beyond the current snapshot."""


@dataclass
class Witness:
    patch: tuple       # (xi, yi): affine variable index per factor
    x: tuple           # integer 2-vector, primitive
    y: tuple
    prec: int          # claimed witness precision N
    hensel_e: int      # certified exponent e, v(F(w)) > 2e


@dataclass
class Verdict:
    outcome: str
    reason: str = None        # 'precision' | 'depth' for undetermined
    witness: Witness = None
    scale: int = 0            # p-power content removed before deciding

    @property
    def soluble(self):
        return self.outcome == SOLUBLE

    def exit_code(self):
        return {SOLUBLE: 0, INSOLUBLE: 1, UNDETERMINED: 2}[self.outcome]

    def as_json_dict(self):
        d = {"outcome": self.outcome, "scale": self.scale}
        if self.reason:
            d["reason"] = self.reason
        if self.witness:
            d["witness"] = {
                "patch": list(self.witness.patch),
                "x": list(self.witness.x),
                "y": list(self.witness.y),
                "prec": self.witness.prec,
                "hensel_e": self.witness.hensel_e,
            }
        return d

    def as_tsv(self):
        w = self.witness
        return "\t".join([
            self.outcome, self.reason or "-", str(self.scale),
            "-" if not w else f"{w.patch[0]}{w.patch[1]}",
            "-" if not w else f"{w.x[0]},{w.x[1]}",
            "-" if not w else f"{w.y[0]},{w.y[1]}",
            "-" if not w else str(w.hensel_e),
        ])


_PT_CACHE = {}


def _points(p):
    """Static per-prime tables: affine+infinity points with monomials and
    the recursion matrices translate-then-scale."""
    tab = _PT_CACHE.get(p)
    if tab is None:
        aff = [(t, 1) for t in range(p)]
        inf = (1, 0)
        pts = aff + [inf]
        mono = {pt: (pt[0] * pt[0] % p, pt[0] * pt[1] % p, pt[1] * pt[1] % p)
                for pt in pts}
        trans = {pt: ((p, pt[0]), (0, 1)) for pt in aff}
        trans[inf] = ((0, 1), (p, 0))
        tab = (aff, pts, mono, trans)
        _PT_CACHE[p] = tab
    return tab


def _content(p, vals, precs):
    """Exact content, or raise NeedDigits when undetermined."""
    cont = None
    exact_only = True
    for v, pr in zip(vals, precs):
        if pr < PREC_EXACT:
            exact_only = False
            v %= p**pr
        if v:
            k = vp(v, p)
            cont = k if cont is None else min(cont, k)
    if cont is None:
        if exact_only:
            raise AllZeroForm("zero form")
        raise NeedDigits
    for v, pr in zip(vals, precs):
        if pr < PREC_EXACT and v % p**pr == 0 and pr < cont:
            raise NeedDigits
    return cont


def _decide(p, vals, precs, x_aff, y_aff, depth, max_depth, lift_target):
    cont = _content(p, vals, precs)
    if cont:
        q = p**cont
        vals = tuple(((v % p**pr) // q if pr < PREC_EXACT else v // q)
                     for v, pr in zip(vals, precs))
        precs = tuple(pr - cont if pr < PREC_EXACT else pr for pr in precs)
    if any(pr < 1 for pr in precs):
        raise NeedDigits
    vals = tuple(v % p**pr if pr < PREC_EXACT else v for v, pr in zip(vals, precs))
    R = [v % p for v in vals]

    aff, pts, mono, trans = _points(p)
    xs = aff if x_aff else pts
    ys = aff if y_aff else pts

    cols = {}
    for x in xs:
        m0, m1, m2 = mono[x]
        cols[x] = (
            (R[0] * m0 + R[3] * m1 + R[6] * m2) % p,
            (R[1] * m0 + R[4] * m1 + R[7] * m2) % p,
            (R[2] * m0 + R[5] * m1 + R[8] * m2) % p,
        )
    singular = []
    for y in ys:
        n0, n1, n2 = mono[y]
        r0 = (R[0] * n0 + R[1] * n1 + R[2] * n2) % p
        r1 = (R[3] * n0 + R[4] * n1 + R[5] * n2) % p
        r2 = (R[6] * n0 + R[7] * n1 + R[8] * n2) % p
        for x in xs:
            c0, c1, c2 = cols[x]
            if (c0 * n0 + c1 * n1 + c2 * n2) % p:
                continue
            px = (2 * r0 * x[0] + r1 * x[1]) % p if x[1] else (r1 * x[0] + 2 * r2 * x[1]) % p
            py = (2 * c0 * y[0] + c1 * y[1]) % p if y[1] else (c1 * y[0] + 2 * c2 * y[1]) % p
            if px or py:
                wx, wy, lift_mod = _lift_point(p, vals, precs, x, y, bool(px), bool(py),
                                               lift_target)
                return _SOL, (wx, wy, lift_mod)
            singular.append((x, y))
    if not singular:
        return _INSOL, None
    if depth >= max_depth:
        return _UNDET, "depth"
    saw_undet = False
    for x, y in singular:
        A, B = trans[x], trans[y]
        nv, npr = act_ints(vals, precs, A, B, p)
        code, payload = _decide(p, nv, npr, True, True, depth + 1, max_depth, lift_target)
        if code == _SOL:
            wx, wy, lift_mod = payload
            wx = (A[0][0] * wx[0] + A[0][1] * wx[1], A[1][0] * wx[0] + A[1][1] * wx[1])
            wy = (B[0][0] * wy[0] + B[0][1] * wy[1], B[1][0] * wy[0] + B[1][1] * wy[1])
            return _SOL, (wx, wy, lift_mod)
        if code == _UNDET:
            saw_undet = True
    return (_UNDET, "depth") if saw_undet else (_INSOL, None)


def _newton(vals3, v, mod, ascending, steps):
    """Newton iteration on a quadratic with unit derivative at v mod p."""
    a, b, c = vals3
    for _ in range(steps):
        if ascending:  # g(v) = a + b v + c v^2
            g = (a + b * v + c * v * v) % mod
            dg = (b + 2 * c * v) % mod
        else:          # g(v) = a v^2 + b v + c
            g = (a * v * v + b * v + c) % mod
            dg = (2 * a * v + b) % mod
        if g == 0:
            break
        v = (v - g * pow(dg, -1, mod)) % mod
    return v


def _lift_point(p, vals, precs, x, y, px_unit, py_unit, target):
    """Hensel-lift a smooth mod-p point of the current form as far as the
    snapshot precision allows, up to p^target; returns (x, y, modulus)."""
    eff = min(target, min(precs))
    if eff < 1:
        raise NeedDigits
    mod = p**eff
    steps = eff.bit_length() + 2
    if py_unit:
        c = _col_values(p, vals, x, mod)
        if y[1]:  # y = (t, 1): local variable Y0
            return x, (_newton(c, y[0], mod, False, steps), 1), eff
        return x, (1, _newton(c, y[1], mod, True, steps)), eff
    r = _row_values(p, vals, y, mod)
    if x[1]:  # x = (t, 1): local variable X0
        return (_newton(r, x[0], mod, False, steps), 1), y, eff
    return (1, _newton(r, x[1], mod, True, steps)), y, eff


def _col_values(p, vals, x, mod):
    m0, m1, m2 = x[0] * x[0], x[0] * x[1], x[1] * x[1]
    return tuple((vals[j] * m0 + vals[3 + j] * m1 + vals[6 + j] * m2) % mod
                 for j in range(3))


def _row_values(p, vals, y, mod):
    n0, n1, n2 = y[0] * y[0], y[0] * y[1], y[1] * y[1]
    return tuple((vals[3 * i] * n0 + vals[3 * i + 1] * n1 + vals[3 * i + 2] * n2) % mod
                 for i in range(3))


def evaluate_int(vals, x, y):
    m = (x[0] * x[0], x[0] * x[1], x[1] * x[1])
    n = (y[0] * y[0], y[0] * y[1], y[1] * y[1])
    return sum(vals[3 * i + j] * m[i] * n[j] for i in range(3) for j in range(3))


def partials_int(vals, x, y):
    """The four formal bihomogeneous partials at an integer point."""
    n = (y[0] * y[0], y[0] * y[1], y[1] * y[1])
    m = (x[0] * x[0], x[0] * x[1], x[1] * x[1])
    r = [sum(vals[3 * i + j] * n[j] for j in range(3)) for i in range(3)]
    c = [sum(vals[3 * i + j] * m[i] for i in range(3)) for j in range(3)]
    return (
        2 * r[0] * x[0] + r[1] * x[1],
        r[1] * x[0] + 2 * r[2] * x[1],
        2 * c[0] * y[0] + c[1] * y[1],
        c[1] * y[0] + 2 * c[2] * y[1],
    )


def _val_or_ge(n, p, prec):
    if prec < PREC_EXACT:
        n %= p**prec
    if n == 0:
        return ("ge", prec)
    return vp(n, p)


def certify_witness(form: ZpForm, x, y, patch, prec) -> bool:
    """Quantitative Hensel certificate on the given form.

    True iff v(F(w)) > 2e with e the minimum of the two affine-patch
    partial valuations at w and e < prec/2.  An exact zero of an exact
    form passes for any finite e.
    """
    p = form.p
    vals, cprecs = form.snapshot()
    kmin = min(cprecs)
    xi, yi = patch
    dx0, dx1, dy0, dy1 = partials_int(vals, x, y)
    dx = dx0 if xi == 0 else dx1
    dy = dy0 if yi == 0 else dy1
    ex = _val_or_ge(dx, p, kmin)
    ey = _val_or_ge(dy, p, kmin)
    if isinstance(ex, tuple) and isinstance(ey, tuple):
        return False  # partials indistinguishable from zero: no certificate
    e = min(v for v in (ex, ey) if not isinstance(v, tuple))
    if not e * 2 < prec:
        return False
    fv = _val_or_ge(evaluate_int(vals, x, y), p, kmin)
    if isinstance(fv, tuple):
        return fv[1] > 2 * e
    return fv > 2 * e


def _strip_p(vec, p):
    a, b = vec
    if a == 0 and b == 0:
        raise ValueError("zero witness vector")
    k = min(vp(a, p) if a else PREC_EXACT, vp(b, p) if b else PREC_EXACT)
    return (a // p**k, b // p**k), k


def decide_qp(form: ZpForm, max_depth: int = 64, allowed=("all", "all")) -> Verdict:
    """Decide Q_p-solubility; sound in both directions when determined."""
    p = form.p
    x_aff = allowed[0] == "affine"
    y_aff = allowed[1] == "affine"
    if p > ENUM_MAX_P:
        if x_aff or y_aff:
            raise ValueError("restricted residue sets need p <= enumeration cutoff")
        from .gbq import decide_qp_via_phi

        return decide_qp_via_phi(form, max_depth=max_depth)

    extendable = all(c.draw is not None or c.is_exact() for c in form.coeffs)
    n = 1
    lift_target = 24
    scale = 0
    while True:
        try:
            try:
                form.ensure(n)
            except PrecisionExhausted:
                pass  # run with whatever precision the form has
            vals, precs = form.snapshot()
            scale = _content(p, vals, precs)
            code, payload = _decide(p, vals, precs, x_aff, y_aff, 0, max_depth, lift_target)
            if code == _INSOL:
                return Verdict(INSOLUBLE, scale=scale)
            if code == _UNDET:
                return Verdict(UNDETERMINED, reason=payload, scale=scale)
            wx, wy, wprec = payload
            wx, _ = _strip_p(wx, p)
            wy, _ = _strip_p(wy, p)
            patch = (0 if wx[1] % p else 1, 0 if wy[1] % p else 1)
            if certify_witness(form, wx, wy, patch, wprec):
                e = _certified_e(form, wx, wy, patch)
                return Verdict(SOLUBLE, witness=Witness(patch, wx, wy, wprec, e),
                               scale=scale)
            if lift_target >= 512:
                return Verdict(UNDETERMINED, reason="precision", scale=scale)
            lift_target *= 2
            n = max(n, lift_target)
        except NeedDigits:
            if not extendable:
                return Verdict(UNDETERMINED, reason="precision", scale=scale)
            n *= 2
            if n > 1 << 14:
                return Verdict(UNDETERMINED, reason="precision", scale=scale)


def _certified_e(form, x, y, patch):
    vals, precs = form.snapshot()
    p = form.p
    kmin = min(precs)
    dx0, dx1, dy0, dy1 = partials_int(vals, x, y)
    dx = dx0 if patch[0] == 0 else dx1
    dy = dy0 if patch[1] == 0 else dy1
    cands = []
    for d in (dx, dy):
        v = _val_or_ge(d, p, kmin)
        if not isinstance(v, tuple):
            cands.append(v)
    return min(cands)


def decide_qp_ints(p, nine, max_depth: int = 64, allowed=("all", "all")) -> Verdict:
    return decide_qp(ZpForm.from_ints(p, nine), max_depth=max_depth, allowed=allowed)
