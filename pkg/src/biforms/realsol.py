"""Exact decision of real solubility for (2,2)-forms.

Viewing the form as a quadratic in (Y0:Y1), a real point exists iff the
binary quartic G = F1^2 - 4 F0 F2 is somewhere nonnegative on the real
projective line, i.e. iff G is not negative definite.  The decision is
exact over the rationals: sign checks at the two ends of the line plus
a Sturm count of distinct real roots of the dehomogenized quartic
(Sturm's chain counts distinct roots also for non-squarefree input, and
a touching root means G reaches 0, hence soluble).
"""

from __future__ import annotations

from fractions import Fraction


def quartic_g(form):
    """Coefficients g0..g4 of G = F1^2 - 4 F0 F2, g_k on X0^(4-k) X1^k."""
    c0 = (form[0], form[3], form[6])
    c1 = (form[1], form[4], form[7])
    c2 = (form[2], form[5], form[8])
    g = [0] * 5
    for i, a in enumerate(c1):
        for j, b in enumerate(c1):
            g[i + j] += a * b
    for i, a in enumerate(c0):
        for j, b in enumerate(c2):
            g[i + j] -= 4 * a * b
    return tuple(g)


def _poly_deg(c):
    for k in range(len(c) - 1, -1, -1):
        if c[k]:
            return k
    return -1


def _poly_rem(a, b):
    """Remainder of a by b, Fraction coefficients, ascending order."""
    a = [Fraction(x) for x in a]
    db = _poly_deg(b)
    lead = Fraction(b[db])
    while _poly_deg(a) >= db:
        da = _poly_deg(a)
        f = a[da] / lead
        for i in range(db + 1):
            a[da - db + i] -= f * b[i]
        a[da] = Fraction(0)
    return a[:max(db, 1)]


def sturm_distinct_real_roots(coeffs) -> int:
    """Number of distinct real roots of the polynomial (ascending coeffs)."""
    p0 = [Fraction(c) for c in coeffs]
    d = _poly_deg(p0)
    if d <= 0:
        return 0
    p1 = [i * p0[i] for i in range(1, d + 1)]
    chain = [p0, p1]
    while _poly_deg(chain[-1]) > 0:
        r = _poly_rem(chain[-2], chain[-1])
        r = [-x for x in r]
        if _poly_deg(r) < 0:
            break
        chain.append(r)
    if _poly_deg(chain[-1]) < 0:
        chain.pop()

    def variations(at_plus):
        signs = []
        for poly in chain:
            dd = _poly_deg(poly)
            if dd < 0:
                continue
            s = 1 if poly[dd] > 0 else -1
            if not at_plus and dd % 2 == 1:
                s = -s
            signs.append(s)
        v = 0
        for a, b in zip(signs, signs[1:]):
            if a * b < 0:
                v += 1
        return v

    return variations(False) - variations(True)


def real_soluble(form) -> bool:
    """Exact real solubility of a (2,2)-form with rational coefficients."""
    g = quartic_g(form)
    if not any(g):
        return True
    if g[4] >= 0 or g[0] >= 0:
        return True
    d = _poly_deg(g)
    if d % 2 == 1 or g[d] > 0:
        return True
    return sturm_distinct_real_roots(g) > 0


def corner_signs_agree(form) -> bool:
    """True iff a00, a02, a20, a22 are all positive or all negative."""
    corners = (form[0], form[2], form[6], form[8])
    return all(c > 0 for c in corners) or all(c < 0 for c in corners)


def grid_search_soluble(form, n: int = 200):
    """Sign-scan oracle: 'soluble' if an exact zero or sign change of F is
    seen on n x n rational grids over all four affine patches, else None."""
    steps = [Fraction(-1) + Fraction(2 * i, n - 1) for i in range(n)]
    saw_pos = saw_neg = False
    for xpatch in (0, 1):
        for ypatch in (0, 1):
            for sv in steps:
                x = (1, sv) if xpatch == 0 else (sv, 1)
                mx = (x[0] * x[0], x[0] * x[1], x[1] * x[1])
                c0 = form[0] * mx[0] + form[3] * mx[1] + form[6] * mx[2]
                c1 = form[1] * mx[0] + form[4] * mx[1] + form[7] * mx[2]
                c2 = form[2] * mx[0] + form[5] * mx[1] + form[8] * mx[2]
                for tv in steps:
                    y = (1, tv) if ypatch == 0 else (tv, 1)
                    v = c0 * y[0] * y[0] + c1 * y[0] * y[1] + c2 * y[1] * y[1]
                    if v == 0:
                        return "soluble"
                    if v > 0:
                        saw_pos = True
                    else:
                        saw_neg = True
                    if saw_pos and saw_neg:
                        return "soluble"
    return None
