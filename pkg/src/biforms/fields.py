"""Small finite fields F_q (q <= 9) with full lookup tables.

Elements are plain integers 0..q-1.  For prime q the integer is the
residue; for prime powers it encodes the coefficient vector of the
element in the polynomial basis, base-p digits with the constant term
as least significant digit.  Multiplication tables are derived from
log/antilog tables over a generator of F_q^x, addition tables from
digit-wise sums mod p.  Field axioms are checked exhaustively once at
construction.

Quadratic extensions F_{q^2} (pairs a + b*t over the base field, coded
as a + q*b) are available for any supported base field; the base field
embeds as the codes 0..q-1.
"""

from __future__ import annotations

from functools import lru_cache

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# monic irreducible polynomials over F_p used for the prime-power fields,
# given as tuples of base-p coefficient codes (constant term first)
_MIN_POLY = {
    4: (1, 1),      # t^2 + t + 1 over F_2
    8: (1, 1, 0),   # t^3 + t + 1 over F_2
    9: (1, 0),      # t^2 + 1 over F_3
}


class FieldError(ValueError):
    pass


class FiniteField:
    """Arithmetic tables for F_q, q = p^k with q <= 81.

    Public attributes: q, p, add, sub, mul, neg, inv, sqrt, points
    (the q+1 points of P^1(F_q) with first nonzero coordinate 1).
    """

    def __init__(self, q, p, add, mul):
        self.q = q
        self.p = p
        self.add = add
        self.mul = mul
        self._check_axioms()
        self.neg = tuple(self._find_neg(a) for a in range(q))
        self.sub = tuple(tuple(add[a][self.neg[b]] for b in range(q)) for a in range(q))
        self.inv = tuple(self._find_inv(a) for a in range(q))
        sq = [[] for _ in range(q)]
        for a in range(q):
            sq[mul[a][a]].append(a)
        self.sqrt = tuple(tuple(r) for r in sq)
        self.squares = frozenset(mul[a][a] for a in range(1, q))
        # P^1(F_q), normalized with first nonzero coordinate = 1
        self.points = tuple([(1, t) for t in range(q)] + [(0, 1)])

    def _find_neg(self, a):
        for b in range(self.q):
            if self.add[a][b] == 0:
                return b
        raise FieldError(f"no additive inverse for {a}")

    def _find_inv(self, a):
        if a == 0:
            return 0
        for b in range(self.q):
            if self.mul[a][b] == 1:
                return b
        raise FieldError(f"no multiplicative inverse for {a}")

    def _check_axioms(self):
        q, add, mul = self.q, self.add, self.mul
        rng = range(q)
        for a in rng:
            if add[a][0] != a or mul[a][1] != a or mul[a][0] != 0:
                raise FieldError("identity axiom fails")
            for b in rng:
                if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                    raise FieldError("commutativity fails")
                for c in rng:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise FieldError("additive associativity fails")
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise FieldError("multiplicative associativity fails")
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                        raise FieldError("distributivity fails")

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero field element")
        return self.mul[a][self.inv[b]]

    def pow(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self.mul[r][a]
            a = self.mul[a][a]
            n >>= 1
        return r

    def __repr__(self):
        return f"FiniteField(q={self.q})"


def _digits(n, p, k):
    return tuple((n // p**i) % p for i in range(k))


def _from_digits(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def _poly_field_tables(p, minpoly):
    """Build add/mul tables for F_{p^k} = F_p[t]/(minpoly)."""
    k = len(minpoly)
    q = p**k
    add = tuple(
        tuple(
            _from_digits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)
            for b in range(q)
        )
        for a in range(q)
    )

    def poly_mul(a, b):
        da, db = _digits(a, p, k), _digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce: t^k = -minpoly
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(minpoly):
                    prod[i - k + j] = (prod[i - k + j] - c * m) % p
        return _from_digits(prod[:k], p)

    # multiplication via log/antilog over a generator
    gen = None
    for g in range(2, q):
        seen, x = set(), 1
        for _ in range(q - 1):
            x = poly_mul(x, g)
            seen.add(x)
        if len(seen) == q - 1:
            gen = g
            break
    if gen is None:
        raise FieldError("no generator found; minpoly not irreducible?")
    exp = [1] * (q - 1)
    for i in range(1, q - 1):
        exp[i] = poly_mul(exp[i - 1], gen)
    log = [0] * q
    for i, v in enumerate(exp):
        log[v] = i
    mul = tuple(
        tuple(0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % (q - 1)] for b in range(q))
        for a in range(q)
    )
    return add, mul


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    """The field F_q for q in SUPPORTED_Q."""
    if q not in SUPPORTED_Q:
        raise FieldError(f"unsupported field size {q}; supported: {SUPPORTED_Q}")
    if q in (2, 3, 5, 7):
        add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
        return FiniteField(q, q, add, mul)
    p = 2 if q in (4, 8) else 3
    add, mul = _poly_field_tables(p, _MIN_POLY[q])
    return FiniteField(q, p, add, mul)


@lru_cache(maxsize=None)
def quadratic_extension(q: int) -> FiniteField:
    """F_{q^2} as pairs over F_q, element a + q*b for a + b*t.

    The base field embeds as the codes 0..q-1.  Requires an irreducible
    t^2 + r t + s over F_q, found by search.
    """
    base = field(q)
    rs = None
    for r in range(q):
        for s in range(q):
            # irreducible iff no root in F_q
            if all(base.add[base.add[base.mul[x][x]][base.mul[r][x]]][s] != 0 for x in range(q)):
                rs = (r, s)
                break
        if rs:
            break
    if rs is None:
        raise FieldError("no irreducible quadratic found")
    r, s = rs
    Q = q * q
    badd, bmul, bneg = base.add, base.mul, base.neg

    def enc(a, b):
        return a + q * b

    add = tuple(
        tuple(enc(badd[x % q][y % q], badd[x // q][y // q]) for y in range(Q)) for x in range(Q)
    )

    def ext_mul(x, y):
        a, b = x % q, x // q
        c, d = y % q, y // q
        # (a+bt)(c+dt) with t^2 = -r t - s
        bd = bmul[b][d]
        const = badd[bmul[a][c]][bneg[bmul[s][bd]]]
        lin = badd[badd[bmul[a][d]][bmul[b][c]]][bneg[bmul[r][bd]]]
        return enc(const, lin)

    mul = tuple(tuple(ext_mul(x, y) for y in range(Q)) for x in range(Q))
    ext = FiniteField(Q, base.p, add, mul)
    ext.base_q = q
    ext.conj = tuple(ext.pow(x, q) for x in range(Q))
    return ext
