"""Independent brute-force oracles used by the test suite.

The p-adic oracle enumerates primitive residue pairs level by level
(BFS on the residue tree, pruning pairs where the form is nonzero at
the current modulus) and certifies solubility with its own quantitative
Hensel check; it shares no code with the solver's case analysis.
"""

from __future__ import annotations


def _vp_cap(n, p, cap):
    if n == 0:
        return cap
    k = 0
    while n % p == 0 and k < cap:
        n //= p
        k += 1
    return k


def _eval9(vals, x, y):
    m = (x[0] * x[0], x[0] * x[1], x[1] * x[1])
    n = (y[0] * y[0], y[0] * y[1], y[1] * y[1])
    return sum(vals[3 * i + j] * m[i] * n[j] for i in range(3) for j in range(3))


def _patch_partials(vals, x, y):
    n = (y[0] * y[0], y[0] * y[1], y[1] * y[1])
    m = (x[0] * x[0], x[0] * x[1], x[1] * x[1])
    r = [sum(vals[3 * i + j] * n[j] for j in range(3)) for i in range(3)]
    c = [sum(vals[3 * i + j] * m[i] for i in range(3)) for j in range(3)]
    # the affine-variable partial per normalization of the rep
    dx = (2 * r[0] * x[0] + r[1] * x[1]) if _is_affine(x) else (r[1] * x[0] + 2 * r[2] * x[1])
    dy = (2 * c[0] * y[0] + c[1] * y[1]) if _is_affine(y) else (c[1] * y[0] + 2 * c[2] * y[1])
    return dx, dy


def _is_affine(v):
    # representatives are (t, 1) [affine] or (1, p*t) [near infinity]
    return v[1] == 1


def oracle_decide_qp(p, nine, n_max=12, width_cap=200_000, restrict_affine=False):
    """'soluble' / 'insoluble' / None (undecided) for an integer form.

    Level k keeps the primitive pairs (x, y) mod p^k on which the form
    vanishes mod p^k; a pair certifying v(F) > 2e with e < k/2 via its
    patch partials proves solubility, an empty level proves insolubility.
    With restrict_affine, only pairs with unit x1 and y1 are explored.
    """
    if all(v == 0 for v in nine):
        raise ValueError("zero form")
    xs0 = [(t, 1) for t in range(p)]
    if not restrict_affine:
        xs0.append((1, 0))
    level = [(x, y) for x in xs0 for y in xs0]
    for k in range(1, n_max + 1):
        mod = p**k
        survivors = []
        for x, y in level:
            if _eval9(nine, x, y) % mod:
                continue
            fv = _vp_cap(_eval9(nine, x, y), p, 4 * k + 8)
            dx, dy = _patch_partials(nine, x, y)
            e = min(_vp_cap(dx, p, 4 * k + 8), _vp_cap(dy, p, 4 * k + 8))
            if 2 * e < k and fv > 2 * e:
                return "soluble"
            survivors.append((x, y))
        if not survivors:
            return "insoluble"
        if k == n_max:
            return None
        if len(survivors) * p * p > width_cap:
            return None
        nxt = []
        for x, y in survivors:
            for dx_ in range(p):
                x2 = (x[0] + dx_ * mod, x[1]) if _is_affine(x) else (x[0], x[1] + dx_ * mod)
                for dy_ in range(p):
                    y2 = (y[0] + dy_ * mod, y[1]) if _is_affine(y) else (y[0], y[1] + dy_ * mod)
                    nxt.append((x2, y2))
        level = nxt
    return None


def oracle_decide_gbq(p, g2, g4, n_max=12, width_cap=100_000):
    """Same idea for z^2 + G2(x) z = G4(x): enumerate (x, z) residues.

    z is scaled as z = w / 2 with w = 2z + G2(x), so the equation
    becomes w^2 = H(x); w runs over residues including odd p-powers via
    the valuation scaling w = p^j u.
    """
    h = [4 * c for c in g4]
    for i in range(3):
        for j in range(3):
            h[i + j] += g2[i] * g2[j]

    def H(x):
        m = (x[0]**4, x[0]**3 * x[1], x[0]**2 * x[1]**2, x[0] * x[1]**3, x[1]**4)
        return sum(a * b for a, b in zip(h, m))

    if all(v == 0 for v in h):
        return "soluble"
    xs0 = [(t, 1) for t in range(p)] + [(1, 0)]
    level = [(x, w) for x in xs0 for w in range(p)]
    for k in range(1, n_max + 1):
        mod = p**k
        survivors = []
        for x, w in level:
            val = (w * w - H(x)) % mod
            if val:
                continue
            fv = _vp_cap(w * w - H(x), p, 4 * k + 8)
            e = _vp_cap(2 * w, p, 4 * k + 8)
            if 2 * e < k and fv > 2 * e:
                return "soluble"
            survivors.append((x, w))
        if not survivors:
            return "insoluble"
        if k == n_max:
            return None
        if len(survivors) * p * p > width_cap:
            return None
        nxt = []
        for x, w in survivors:
            for dx_ in range(p):
                x2 = (x[0] + dx_ * mod, x[1]) if _is_affine(x) else (x[0], x[1] + dx_ * mod)
                for dw in range(p):
                    nxt.append((x2, w + dw * mod))
        level = nxt
    return None
