"""Binary forms over the small finite fields.

A binary form of degree d is a tuple of d+1 field codes, entry i being
the coefficient of X0^(d-i) X1^i.  Provides the root-behaviour
classifications used throughout, a precomputed quadratic-root lookup
per field, and resultants for irreducibility tests.
"""

from __future__ import annotations

from .fields import FiniteField

SPLIT = "split"
IRREDUCIBLE = "irreducible"
DOUBLE = "double"
ZERO = "zero"

TWO_DISTINCT = "two_distinct"
CONJUGATE = "conjugate"
DOUBLE_ROOT = "double_root"


def bf_eval(F: FiniteField, coeffs, pt):
    """Evaluate a binary form at a projective point (x0, x1)."""
    x0, x1 = pt
    d = len(coeffs) - 1
    mul, add = F.mul, F.add
    acc = 0
    for i, c in enumerate(coeffs):
        if c:
            term = c
            for _ in range(d - i):
                term = mul[term][x0]
            for _ in range(i):
                term = mul[term][x1]
            acc = add[acc][term]
    return acc


def bf_roots(F: FiniteField, coeffs):
    """All projective roots of a nonzero binary form over F_q."""
    return tuple(pt for pt in F.points if bf_eval(F, coeffs, pt) == 0)


def bf_mul(F: FiniteField, a, b):
    """Product of two binary forms (coefficient convolution)."""
    out = [0] * (len(a) + len(b) - 1)
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][mul[x][y]]
    return tuple(out)


def bf_scale(F: FiniteField, c, a):
    mul = F.mul
    return tuple(mul[c][x] for x in a)


def bf_add(F: FiniteField, a, b):
    add = F.add
    return tuple(add[x][y] for x, y in zip(a, b))


_QROOT_CACHE = {}


def quadratic_roots(F: FiniteField, a, b, c):
    """Projective roots of a X0^2 + b X0 X1 + c X1^2 over F_q.

    Table-backed for q <= 25, direct scan above that.
    """
    q = F.q
    if q <= 25:
        tab = _QROOT_CACHE.get(q)
        if tab is None:
            tab = [None] * (q * q * q)
            for aa in range(q):
                for bb in range(q):
                    base = (aa * q + bb) * q
                    for cc in range(q):
                        tab[base + cc] = bf_roots(F, (aa, bb, cc))
            _QROOT_CACHE[q] = tab
        return tab[(a * q + b) * q + c]
    return bf_roots(F, (a, b, c))


def classify_monic_quadratic(F: FiniteField, b, c):
    """Root behaviour of the monic polynomial X^2 + b X + c over F_q.

    A monic quadratic with one root in F_q splits completely, so the
    affine root count 2/0/1 decides two_distinct/conjugate/double_root.
    """
    add, mul = F.add, F.mul
    n = sum(1 for x in range(F.q) if add[add[mul[x][x]][mul[b][x]]][c] == 0)
    if n == 2:
        return TWO_DISTINCT
    if n == 0:
        return CONJUGATE
    return DOUBLE_ROOT


def classify_binary_quadratic(F: FiniteField, coeffs):
    """Projective zero-set type of a binary quadratic form.

    Returns one of split / irreducible / double / zero.
    """
    a, b, c = coeffs
    if a == 0 and b == 0 and c == 0:
        return ZERO
    n = len(quadratic_roots(F, a, b, c))
    if n == 2:
        return SPLIT
    if n == 0:
        return IRREDUCIBLE
    return DOUBLE


def resultant_22(F: FiniteField, a, b):
    """Resultant of two binary quadratics (4x4 Sylvester determinant)."""
    a0, a1, a2 = a
    b0, b1, b2 = b
    rows = [
        [a0, a1, a2, 0],
        [0, a0, a1, a2],
        [b0, b1, b2, 0],
        [0, b0, b1, b2],
    ]
    return _det(F, rows)


def _det(F: FiniteField, rows):
    """Determinant over F_q by Gaussian elimination with pivoting."""
    n = len(rows)
    m = [list(r) for r in rows]
    mul, sub, neg = F.mul, F.sub, F.neg
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = neg[det]
        pv = m[col][col]
        det = mul[det][pv]
        inv = F.inv[pv]
        for r in range(col + 1, n):
            f = m[r][col]
            if f:
                f = mul[f][inv]
                for cidx in range(col, n):
                    m[r][cidx] = sub[m[r][cidx]][mul[f][m[col][cidx]]]
    return det


def divide_linear(F: FiniteField, coeffs, root):
    """Exact division of a binary form by the linear form with the given root.

    The linear form vanishing at (x0:x1) is x1*X0 - x0*X1.  Returns the
    quotient coefficients, or None if the division is not exact.
    """
    x0, x1 = root
    u, v = x1, F.neg[x0]
    d = len(coeffs) - 1
    mul, sub = F.mul, F.sub
    if u != 0:
        uinv = F.inv[u]
        out = []
        rem = list(coeffs)
        for i in range(d):
            qc = mul[rem[i]][uinv]
            out.append(qc)
            rem[i + 1] = sub[rem[i + 1]][mul[qc][v]]
        if rem[d] != 0:
            return None
        return tuple(out)
    # u == 0: dividing by v*X1
    if coeffs[0] != 0:
        return None
    vinv = F.inv[v]
    return tuple(mul[c][vinv] for c in coeffs[1:])
