"""Classification of bidegree (2,2)-forms over small finite fields.

A (2,2)-form is a 9-tuple (a00, a01, a02, a10, a11, a12, a20, a21, a22)
of field codes, entry (i, j) multiplying X0^(2-i) X1^i Y0^(2-j) Y1^j.

Factorization types are found by structured trial division: linear
factors in either variable group by evaluation, the rank-1 test for a
product of two quadratics, bidegree (1,1) factors by solving for the
graph of a Moebius map through three base fibres, and the same Moebius
search over F_{q^2} to separate the conjugate-pair type from the
absolutely irreducible forms.  Subtypes of the conjugate-pair type are
read off the rational singular points (the intersection of the two
components).
"""

from __future__ import annotations

from collections import namedtuple

from .binforms import bf_eval, divide_linear, quadratic_roots
from .fields import FiniteField, quadratic_extension

# factorization-type tags (Lemma-style multiset notation; dual rows merged)
T_1111 = "(1,1)(1,1)"
T_21_01 = "(2,1)(0,1)|(1,2)(1,0)"
T_11_10_01 = "(1,1)(1,0)(0,1)"
T_10_10_01_01 = "(1,0)(1,0)(0,1)(0,1)"
T_20_01_01 = "(2,0)(0,1)(0,1)|(0,2)(1,0)(1,0)"
T_20_02 = "(2,0)(0,2)"
T_10SQ_01_01 = "(1,0)^2(0,1)(0,1)|(0,1)^2(1,0)(1,0)"
T_20_01SQ = "(2,0)(0,1)^2|(0,2)(1,0)^2"
T_11SQ = "(1,1)^2"
T_10SQ_01SQ = "(1,0)^2(0,1)^2"
T_SMOOTH = "smooth"
T_ABSING = "absirred_singular"
T_CONJ11 = "(1,1)bar(1,1)"
T_ZERO = "zero"

SUB_RATIONAL_PAIR = "rational_pair"
SUB_CONJUGATE_PAIR = "conjugate_pair"
SUB_SINGLE_POINT = "single_point"

ALL_TAGS = (
    T_1111, T_21_01, T_11_10_01, T_10_10_01_01, T_20_01_01, T_20_02,
    T_10SQ_01_01, T_20_01SQ, T_11SQ, T_10SQ_01SQ,
    T_SMOOTH, T_ABSING, T_CONJ11,
)

# tags whose curves always carry a smooth rational point (Lemma rows + the
# irreducible types outside the conjugate-pair subdivision)
SMOOTH_POINT_TAGS = frozenset(
    {T_1111, T_21_01, T_11_10_01, T_10_10_01_01, T_20_01_01, T_10SQ_01_01,
     T_SMOOTH, T_ABSING}
)

FactorType = namedtuple("FactorType", ["tag", "sub", "zero"])
FactorType.__new__.__defaults__ = (None, False)

PointPair = namedtuple("PointPair", ["x", "y", "smooth"])


def to_grid(form):
    return (tuple(form[0:3]), tuple(form[3:6]), tuple(form[6:9]))


def from_grid(grid):
    return tuple(grid[i][j] for i in range(3) for j in range(3))


def _transpose(grid):
    return tuple(tuple(row[j] for row in grid) for j in range(len(grid[0])))


def _monomials(F: FiniteField):
    mul = F.mul
    return tuple((x0, x1, mul[x0][x0], mul[x0][x1], mul[x1][x1]) for x0, x1 in F.points)


_MONO_CACHE = {}


def point_monomials(F: FiniteField):
    tab = _MONO_CACHE.get(F.q)
    if tab is None:
        tab = _monomials(F)
        _MONO_CACHE[F.q] = tab
    return tab


def evaluate(F: FiniteField, form, x, y):
    """Value of the form at a pair of projective points."""
    mul, add = F.mul, F.add
    mx = (mul[x[0]][x[0]], mul[x[0]][x[1]], mul[x[1]][x[1]])
    my = (mul[y[0]][y[0]], mul[y[0]][y[1]], mul[y[1]][y[1]])
    acc = 0
    for i in range(3):
        for j in range(3):
            c = form[3 * i + j]
            if c:
                acc = add[acc][mul[mul[c][mx[i]]][my[j]]]
    return acc


def act(F: FiniteField, form, M, N):
    """Substitute (X0,X1) <- M (X0,X1) and (Y0,Y1) <- N (Y0,Y1)."""
    SM = _sub_matrix(F, M)
    SN = _sub_matrix(F, N)
    add, mul = F.add, F.mul
    out = [0] * 9
    for k in range(3):
        for l in range(3):
            acc = 0
            for i in range(3):
                smik = SM[i][k]
                if not smik:
                    continue
                for j in range(3):
                    c = form[3 * i + j]
                    if c and SN[j][l]:
                        acc = add[acc][mul[mul[smik][c]][SN[j][l]]]
            out[3 * k + l] = acc
    return tuple(out)


def _sub_matrix(F: FiniteField, M):
    # m_i(M x) = sum_k S[i][k] m_k(x) for the degree-2 monomials
    (a, b), (c, d) = M
    mul, add = F.mul, F.add
    two_ab = add[mul[a][b]][mul[a][b]]
    two_cd = add[mul[c][d]][mul[c][d]]
    return (
        (mul[a][a], two_ab, mul[b][b]),
        (mul[a][c], add[mul[a][d]][mul[b][c]], mul[b][d]),
        (mul[c][c], two_cd, mul[d][d]),
    )


def points_on_curve(F: FiniteField, form):
    """All rational points of the curve with smoothness flags.

    A point on the curve is smooth iff some formal bihomogeneous partial
    is nonzero there; on the curve this agrees with the affine-patch
    Jacobian criterion in every characteristic.
    """
    if not any(form):
        raise ValueError("zero form has no curve")
    mono = point_monomials(F)
    mul, add = F.mul, F.add
    colv = []
    for x0, x1, m0, m1, m2 in mono:
        colv.append(tuple(
            add[add[mul[form[j]][m0]][mul[form[3 + j]][m1]]][mul[form[6 + j]][m2]]
            for j in range(3)
        ))
    out = []
    for iy, (y0, y1, n0, n1, n2) in enumerate(mono):
        r0 = add[add[mul[form[0]][n0]][mul[form[1]][n1]]][mul[form[2]][n2]]
        r1 = add[add[mul[form[3]][n0]][mul[form[4]][n1]]][mul[form[5]][n2]]
        r2 = add[add[mul[form[6]][n0]][mul[form[7]][n1]]][mul[form[8]][n2]]
        for ix, (x0, x1, m0, m1, m2) in enumerate(mono):
            v = add[add[mul[r0][m0]][mul[r1][m1]]][mul[r2][m2]]
            if v:
                continue
            c0, c1, c2 = colv[ix]
            dx0 = add[add[mul[r0][x0]][mul[r0][x0]]][mul[r1][x1]]
            dx1 = add[mul[r1][x0]][add[mul[r2][x1]][mul[r2][x1]]]
            dy0 = add[add[mul[c0][y0]][mul[c0][y0]]][mul[c1][y1]]
            dy1 = add[mul[c1][y0]][add[mul[c2][y1]][mul[c2][y1]]]
            smooth = bool(dx0 or dx1 or dy0 or dy1)
            out.append(PointPair((x0, x1), (y0, y1), smooth))
    return out


def has_smooth_point(F: FiniteField, form):
    """A smooth rational point of the curve, or None."""
    for pt in points_on_curve(F, form):
        if pt.smooth:
            return pt
    return None


# ----------------------------------------------------------------------
# structured trial division
# ----------------------------------------------------------------------

def _extract_x_linears(F: FiniteField, grid):
    roots = []
    for pt in F.points:
        while len(grid) > 1:
            cols = _transpose(grid)
            if any(bf_eval(F, col, pt) != 0 for col in cols):
                break
            newcols = [divide_linear(F, col, pt) for col in cols]
            grid = _transpose(newcols)
            roots.append(pt)
    return roots, grid


def _is_rank_one(F: FiniteField, grid):
    mul, sub = F.mul, F.sub
    for i in range(3):
        for k in range(i + 1, 3):
            for j in range(3):
                for l in range(j + 1, 3):
                    if sub[mul[grid[i][j]][grid[k][l]]][mul[grid[i][l]][grid[k][j]]]:
                        return False
    return True


def _cross(F, u, v):
    return F.sub[F.mul[u[0]][v[1]]][F.mul[u[1]][v[0]]]


def _bf_mul(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add[out[i + j]][mul[x][y]]
    return out


def mobius_factors(F: FiniteField, grid):
    """Irreducible (1,1)-factors of a (2,2)-grid with no linear factors.

    Any such factor is the graph of a Moebius map, determined by its
    values over three base fibres; candidates come from the roots of the
    fibre quadratics and are confirmed by a vanishing pullback.
    """
    cols = _transpose(grid)
    base = ((1, 0), (0, 1), (1, 1))
    roots = []
    for x in base:
        qy = tuple(bf_eval(F, col, x) for col in cols)
        rs = quadratic_roots(F, *qy)
        if not rs:
            return []
        roots.append(rs)
    mul, add, div = F.mul, F.add, F.div
    found = []
    seen = set()
    for y1 in roots[0]:
        for y2 in roots[1]:
            det = _cross(F, y1, y2)
            if det == 0:
                continue
            for y3 in roots[2]:
                a = div(_cross(F, y3, y2), det)
                b = div(_cross(F, y1, y3), det)
                if a == 0 or b == 0:
                    continue
                # columns of M are a*y1 and b*y2; phi(x) = M x
                n0 = (mul[a][y1[0]], mul[b][y2[0]])
                n1 = (mul[a][y1[1]], mul[b][y2[1]])
                # pullback F(X, M X) = C0 n0^2 + C1 n0 n1 + C2 n1^2
                p00 = _bf_mul(F, n0, n0)
                p01 = _bf_mul(F, n0, n1)
                p11 = _bf_mul(F, n1, n1)
                quart = [0] * 5
                for qsrc, col in ((p00, cols[0]), (p01, cols[1]), (p11, cols[2])):
                    prod = _bf_mul(F, qsrc, col)
                    for k, v in enumerate(prod):
                        quart[k] = add[quart[k]][v]
                if any(quart):
                    continue
                # graph form n1(X) Y0 - n0(X) Y1, grid b[i][j] on X_i Y_j
                bg = (
                    (n1[0], F.neg[n0[0]]),
                    (n1[1], F.neg[n0[1]]),
                )
                key = _normalize_proportional(F, bg)
                if key not in seen:
                    seen.add(key)
                    found.append(bg)
    return found


def _normalize_proportional(F, bg):
    flat = (bg[0][0], bg[0][1], bg[1][0], bg[1][1])
    for c in flat:
        if c:
            inv = F.inv[c]
            return tuple(F.mul[inv][v] for v in flat)
    return flat


def divide_11(F: FiniteField, grid, bg):
    """Cofactor C with grid = B*C for a (1,1)-factor B, or None."""
    # unknowns c[k][l]; equations over the nine grid entries
    rows = []
    rhs = []
    for m in range(3):
        for n in range(3):
            row = []
            for k in range(2):
                for l in range(2):
                    i, j = m - k, n - l
                    row.append(bg[i][j] if 0 <= i <= 1 and 0 <= j <= 1 else 0)
            rows.append(row)
            rhs.append(grid[m][n])
    sol = _solve_exact(F, rows, rhs, 4)
    if sol is None:
        return None
    return ((sol[0], sol[1]), (sol[2], sol[3]))


def _solve_exact(F, rows, rhs, nunk):
    mul, sub = F.mul, F.sub
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    nr = len(m)
    piv_rows = []
    col = 0
    r0 = 0
    for col in range(nunk):
        piv = None
        for r in range(r0, nr):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[r0], m[piv] = m[piv], m[r0]
        inv = F.inv[m[r0][col]]
        m[r0] = [mul[inv][v] for v in m[r0]]
        for r in range(nr):
            if r != r0 and m[r][col]:
                f = m[r][col]
                m[r] = [sub[v][mul[f][w]] for v, w in zip(m[r], m[r0])]
        piv_rows.append((r0, col))
        r0 += 1
    sol = [0] * nunk
    for r, c in piv_rows:
        sol[c] = m[r][nunk]
    # consistency: every equation must hold
    for r in range(nr):
        if all(m[r][c] == 0 for c in range(nunk)) and m[r][nunk] != 0:
            return None
    # verify exactly (guards free columns)
    for idx, (row, b) in enumerate(zip(rows, rhs)):
        acc = 0
        for a, x in zip(row, sol):
            acc = F.add[acc][mul[a][x]]
        if acc != b:
            return None
    return sol


def _point_signature(F: FiniteField, form):
    pts = points_on_curve(F, form)
    n = len(pts)
    s = sum(1 for p in pts if not p.smooth)
    return n, s


def _embed_grid(grid):
    # base-field codes embed into the quadratic extension unchanged
    return grid


def residual_signature_type(q, rank1, s, n):
    """Type of a no-linear-factor (2,2)-form from (rank1, #sing, #points).

    Returns a FactorType, or None if the signature is not recognized
    (callers then fall back to full trial division).
    """
    if rank1:
        return FactorType(T_20_02)
    if s == q + 1 and n == q + 1:
        return FactorType(T_11SQ)
    if s == 2:
        if n == 2 * q:
            return FactorType(T_1111)
        if n == 2:
            return FactorType(T_CONJ11, SUB_RATIONAL_PAIR)
        return None
    if s == 1:
        if n == 2 * q + 1:
            return FactorType(T_1111)
        if n == 1:
            return FactorType(T_CONJ11, SUB_SINGLE_POINT)
        if q <= n <= q + 2:
            return FactorType(T_ABSING)
        return None
    if s == 0:
        if n == 2 * q + 2:
            return FactorType(T_1111)
        if n == 0:
            return FactorType(T_CONJ11, SUB_CONJUGATE_PAIR)
        if 1 <= n <= q + 1 + int(2 * q**0.5):
            return FactorType(T_SMOOTH)
        return None
    return None


def factorization_type(F: FiniteField, form) -> FactorType:
    """Factorization type of a (2,2)-form over F_q (zero form flagged)."""
    if not any(form):
        return FactorType(T_ZERO, zero=True)
    grid = to_grid(form)
    xroots, grid = _extract_x_linears(F, grid)
    yroots, gridT = _extract_x_linears(F, _transpose(grid))
    grid = _transpose(gridT)
    ex, ey = len(xroots), len(yroots)
    e1, e2 = len(grid) - 1, len(grid[0]) - 1
    if (e1, e2) == (0, 0):
        xdouble = len(set(xroots)) == 1
        ydouble = len(set(yroots)) == 1
        if xdouble and ydouble:
            return FactorType(T_10SQ_01SQ)
        if xdouble or ydouble:
            return FactorType(T_10SQ_01_01)
        return FactorType(T_10_10_01_01)
    if (e1, e2) in ((2, 0), (0, 2)):
        lin = xroots if (e1, e2) == (0, 2) else yroots
        if len(set(lin)) == 1:
            return FactorType(T_20_01SQ)
        return FactorType(T_20_01_01)
    if (e1, e2) == (1, 1):
        return FactorType(T_11_10_01)
    if (e1, e2) in ((2, 1), (1, 2)):
        return FactorType(T_21_01)
    # residual is the full (2,2)-form with no linear factors
    if _is_rank_one(F, grid):
        return FactorType(T_20_02)
    facs = mobius_factors(F, grid)
    if facs:
        bg = facs[0]
        cg = divide_11(F, grid, bg)
        if cg is None:
            raise AssertionError("confirmed (1,1)-factor fails to divide")
        if _normalize_proportional(F, bg) == _normalize_proportional(F, cg):
            return FactorType(T_11SQ)
        return FactorType(T_1111)
    # irreducible over F_q: split conjugate-pair type from absolutely
    # irreducible via the Moebius search over F_{q^2}
    n, s = _point_signature(F, form)
    E = quadratic_extension(F.q)
    if mobius_factors(E, grid):
        if s == 2:
            return FactorType(T_CONJ11, SUB_RATIONAL_PAIR)
        if s == 1:
            return FactorType(T_CONJ11, SUB_SINGLE_POINT)
        if s == 0:
            return FactorType(T_CONJ11, SUB_CONJUGATE_PAIR)
        raise AssertionError(f"conjugate-pair form with {s} singular points")
    return FactorType(T_SMOOTH if s == 0 else T_ABSING)
