"""Checker and scanner for the binomial-product inequality.

For positive n_i, d_i and 0 <= r_i <= d_i with 0 < sum r_i < sum d_i,
the claim is

    prod C(n_i + r_i, n_i) + prod C(n_i + d_i - r_i, n_i)
        < prod C(n_i + d_i, n_i)

whenever (1) k = 1 with n1, d1 >= 2 but (n1, d1) != (2, 2), or
(2) k = 2 and d1, d2 >= 2 if n1 = n2 = 1, or (3) k >= 3.  The scanner
enumerates instances up to index permutation (the inequality is
symmetric in the indices) and reports hypothesis-satisfying failures
(expected: none) together with the hypothesis-violating failures
(expected to include the (n, d) = (2, 2) boundary at k = 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb


class InvalidInstance(ValueError):
    pass


@dataclass(frozen=True)
class InequalityInstance:
    n: tuple
    d: tuple
    r: tuple

    @property
    def k(self):
        return len(self.n)

    def validate(self):
        if not (len(self.n) == len(self.d) == len(self.r)) or not self.n:
            raise InvalidInstance("length mismatch")
        if any(x < 1 for x in self.n) or any(x < 1 for x in self.d):
            raise InvalidInstance("n_i, d_i must be positive")
        if any(not (0 <= ri <= di) for ri, di in zip(self.r, self.d)):
            raise InvalidInstance("need 0 <= r_i <= d_i")
        if not (0 < sum(self.r) < sum(self.d)):
            raise InvalidInstance("need 0 < sum r < sum d")


def inequality_holds(inst: InequalityInstance) -> bool:
    """Exact big-integer evaluation of the strict inequality."""
    inst.validate()
    lhs1 = lhs2 = rhs = 1
    for ni, di, ri in zip(inst.n, inst.d, inst.r):
        lhs1 *= comb(ni + ri, ni)
        lhs2 *= comb(ni + di - ri, ni)
        rhs *= comb(ni + di, ni)
    return lhs1 + lhs2 < rhs


def hypothesis_holds(inst: InequalityInstance) -> bool:
    k = inst.k
    if k == 1:
        return inst.n[0] >= 2 and inst.d[0] >= 2 and (inst.n[0], inst.d[0]) != (2, 2)
    if k == 2:
        if inst.n[0] == 1 and inst.n[1] == 1:
            return inst.d[0] >= 2 and inst.d[1] >= 2
        return True
    return k >= 3


def set_counts(inst: InequalityInstance):
    """|S|, |S1|, |S2| by the product formulas (the proof's counting)."""
    S = S1 = S2 = 1
    for ni, di, ri in zip(inst.n, inst.d, inst.r):
        S *= comb(ni + di, ni)
        S1 *= comb(ni + di - ri, ni)
        S2 *= comb(ni + ri, ni)
    return S, S1, S2


def scan(k_max: int = 3, n_max: int = 6, d_max: int = 6):
    """Exhaustive scan up to index permutation.

    Returns (hypothesis_failures, boundary_failures): instances where
    the inequality fails, split by whether the hypotheses hold.
    """
    hypothesis_failures = []
    boundary_failures = []
    pairs = [(n, d) for n in range(1, n_max + 1) for d in range(1, d_max + 1)]
    for k in range(1, k_max + 1):
        for nd in combinations_with_replacement(pairs, k):
            n = tuple(x[0] for x in nd)
            d = tuple(x[1] for x in nd)
            for r in product(*[range(di + 1) for di in d]):
                if not 0 < sum(r) < sum(d):
                    continue
                inst = InequalityInstance(n, d, r)
                if inequality_holds(inst):
                    continue
                if hypothesis_holds(inst):
                    hypothesis_failures.append(inst)
                else:
                    boundary_failures.append(inst)
    return hypothesis_failures, boundary_failures
