"""Exact 3x3 matrices over cyclotomic fields.

A Mat3 keeps all nine entries at one conductor over one common positive
denominator, as integer coefficient tuples on the power basis.  Products
then run in pure integer arithmetic (convolution + one reduction per
entry + one gcd pass per matrix), which is what makes breadth-first group
closure affordable in Python.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .cyclotomic import (
    CycloNum,
    euler_phi,
    log_root_of_unity,
    reduce_power_coeffs,
    root_of_unity,
)


class SingularMatrixError(ZeroDivisionError):
    pass


class SpectrumError(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class Mat3:
    __slots__ = ("n", "den", "nums")

    def __init__(self, n: int, nums: Sequence[Sequence[int]], den: int = 1,
                 _normalized: bool = False):
        d = euler_phi(n)
        nums = tuple(tuple(e) for e in nums)
        if len(nums) != 9 or any(len(e) != d for e in nums):
            raise ValueError("Mat3 needs 9 entries of length phi(n)")
        if _normalized:
            self.n, self.den, self.nums = n, den, nums
            return
        if den < 0:
            den = -den
            nums = tuple(tuple(-c for c in e) for e in nums)
        g = den
        for e in nums:
            for c in e:
                g = gcd(g, c)
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            den //= g
            nums = tuple(tuple(c // g for c in e) for e in nums)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.n, self.den, self.nums = n, den, nums

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_entries(entries: Sequence[Sequence[CycloNum]]) -> "Mat3":
        flat = [entries[i][j] for i in range(3) for j in range(3)]
        n = 1
        for e in flat:
            n = _lcm(n, e.n)
        flat = [e.lift(n) for e in flat]
        den = 1
        for e in flat:
            den = _lcm(den, e.den)
        nums = [tuple(c * (den // e.den) for c in e.nums) for e in flat]
        return Mat3(n, nums, den)

    @staticmethod
    def from_rationals(rows: Sequence[Sequence] ) -> "Mat3":
        cy = [[CycloNum.from_rational(Fraction(v)) for v in row] for row in rows]
        return Mat3.from_entries(cy)

    @staticmethod
    def identity(n: int = 1) -> "Mat3":
        d = euler_phi(n)
        one = (1,) + (0,) * (d - 1)
        zero = (0,) * d
        return Mat3(n, [one, zero, zero, zero, one, zero, zero, zero, one], 1,
                    _normalized=True)

    @staticmethod
    def zero(n: int = 1) -> "Mat3":
        d = euler_phi(n)
        z = (0,) * d
        return Mat3(n, [z] * 9, 1, _normalized=True)

    @staticmethod
    def diag(a: CycloNum, b: CycloNum, c: CycloNum) -> "Mat3":
        zero = CycloNum.zero(1)
        return Mat3.from_entries([[a, zero, zero], [zero, b, zero], [zero, zero, c]])

    @staticmethod
    def permutation(perm: Sequence[int]) -> "Mat3":
        """Matrix sending e_j to e_perm[j] (perm is a 0-based image list)."""
        rows = [[0] * 3 for _ in range(3)]
        for j, i in enumerate(perm):
            rows[i][j] = 1
        return Mat3.from_rationals(rows)

    # -- access -----------------------------------------------------------

    def entry(self, i: int, j: int) -> CycloNum:
        return CycloNum(self.n, self.nums[3 * i + j], self.den)

    def entries(self) -> List[List[CycloNum]]:
        return [[self.entry(i, j) for j in range(3)] for i in range(3)]

    def lift(self, m: int) -> "Mat3":
        if m == self.n:
            return self
        return Mat3.from_entries([[self.entry(i, j).lift(m) for j in range(3)]
                                  for i in range(3)])

    def key(self):
        """Hashable canonical key among matrices at the same conductor."""
        return (self.n, self.den, self.nums)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat3):
            return NotImplemented
        if self.n == other.n:
            return self.den == other.den and self.nums == other.nums
        m = _lcm(self.n, other.n)
        return self.lift(m).key() == other.lift(m).key()

    def __hash__(self):
        return hash(tuple(self.entry(i, j).key() for i in range(3) for j in range(3)))

    def __repr__(self):
        rows = self.entries()
        return "Mat3[" + "; ".join(", ".join(repr(e) for e in row) for row in rows) + "]"

    # -- arithmetic --------------------------------------------------------

    def _match(self, other: "Mat3") -> Tuple["Mat3", "Mat3"]:
        if self.n == other.n:
            return self, other
        m = _lcm(self.n, other.n)
        return self.lift(m), other.lift(m)

    def __mul__(self, other: "Mat3") -> "Mat3":
        a, b = self._match(other)
        n = a.n
        d = len(a.nums[0])
        width = 2 * d - 1
        an, bn = a.nums, b.nums
        out = []
        for i in (0, 3, 6):
            for j in (0, 1, 2):
                conv = [0] * width
                for k in range(3):
                    x = an[i + k]
                    y = bn[3 * k + j]
                    for p, xp in enumerate(x):
                        if xp:
                            for q, yq in enumerate(y):
                                if yq:
                                    conv[p + q] += xp * yq
                out.append(reduce_power_coeffs(n, conv))
        return Mat3(n, out, a.den * b.den)

    def __add__(self, other: "Mat3") -> "Mat3":
        a, b = self._match(other)
        da, db = a.den, b.den
        nums = [tuple(x * db + y * da for x, y in zip(ea, eb))
                for ea, eb in zip(a.nums, b.nums)]
        return Mat3(a.n, nums, da * db)

    def __sub__(self, other: "Mat3") -> "Mat3":
        a, b = self._match(other)
        da, db = a.den, b.den
        nums = [tuple(x * db - y * da for x, y in zip(ea, eb))
                for ea, eb in zip(a.nums, b.nums)]
        return Mat3(a.n, nums, da * db)

    def __neg__(self) -> "Mat3":
        return Mat3(self.n, tuple(tuple(-c for c in e) for e in self.nums),
                    self.den, _normalized=True)

    def scale(self, c: CycloNum) -> "Mat3":
        return Mat3.from_entries([[self.entry(i, j) * c for j in range(3)]
                                  for i in range(3)])

    def transpose(self) -> "Mat3":
        n = [self.nums[3 * j + i] for i in range(3) for j in range(3)]
        return Mat3(self.n, n, self.den, _normalized=True)

    def trace(self) -> CycloNum:
        d = len(self.nums[0])
        s = [self.nums[0][k] + self.nums[4][k] + self.nums[8][k] for k in range(d)]
        return CycloNum(self.n, s, self.den)

    def trace_of_product(self, other: "Mat3") -> CycloNum:
        """Tr(self * other) without forming the product matrix."""
        a, b = self._match(other)
        d = len(a.nums[0])
        conv = [0] * (2 * d - 1)
        for i in range(3):
            for j in range(3):
                x = a.nums[3 * i + j]
                y = b.nums[3 * j + i]
                for p, xp in enumerate(x):
                    if xp:
                        for q, yq in enumerate(y):
                            if yq:
                                conv[p + q] += xp * yq
        return CycloNum(a.n, reduce_power_coeffs(a.n, conv), a.den * b.den)

    def det(self) -> CycloNum:
        e = self.entries()
        return (e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1])
                - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0])
                + e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]))

    def charpoly(self) -> Tuple[CycloNum, CycloNum, CycloNum, CycloNum]:
        """Coefficients (c0, c1, c2, c3) of det(z - M) = c3 z^3 + c2 z^2 + c1 z + c0."""
        e = self.entries()
        tr = e[0][0] + e[1][1] + e[2][2]
        e2 = (e[0][0] * e[1][1] - e[0][1] * e[1][0]
              + e[0][0] * e[2][2] - e[0][2] * e[2][0]
              + e[1][1] * e[2][2] - e[1][2] * e[2][1])
        d = self.det()
        one = CycloNum.one(1)
        return (-d, e2, -tr, one)

    def inverse(self) -> "Mat3":
        d = self.det()
        if d.is_zero():
            raise SingularMatrixError("matrix is singular")
        e = self.entries()
        cof = [[e[1][1] * e[2][2] - e[1][2] * e[2][1],
                e[0][2] * e[2][1] - e[0][1] * e[2][2],
                e[0][1] * e[1][2] - e[0][2] * e[1][1]],
               [e[1][2] * e[2][0] - e[1][0] * e[2][2],
                e[0][0] * e[2][2] - e[0][2] * e[2][0],
                e[0][2] * e[1][0] - e[0][0] * e[1][2]],
               [e[1][0] * e[2][1] - e[1][1] * e[2][0],
                e[0][1] * e[2][0] - e[0][0] * e[2][1],
                e[0][0] * e[1][1] - e[0][1] * e[1][0]]]
        dinv = d.inverse()
        return Mat3.from_entries([[cof[i][j] * dinv for j in range(3)] for i in range(3)])

    def __pow__(self, k: int) -> "Mat3":
        if k < 0:
            return self.inverse() ** (-k)
        result = Mat3.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def rank(self) -> int:
        # Division-free via minors: cheap and exact for 3x3.
        if not self.det().is_zero():
            return 3
        e = self.entries()
        for r1, r2 in ((0, 1), (0, 2), (1, 2)):
            for c1, c2 in ((0, 1), (0, 2), (1, 2)):
                if not (e[r1][c1] * e[r2][c2] - e[r1][c2] * e[r2][c1]).is_zero():
                    return 2
        if any(c for entry in self.nums for c in entry):
            return 1
        return 0

    def to_complex(self):
        return [[self.entry(i, j).to_complex() for j in range(3)] for i in range(3)]

    def order(self, bound: int = 10000) -> int:
        ident = Mat3.identity(self.n)
        power = self
        for m in range(1, bound + 1):
            if power == ident:
                return m
            power = power * self
        raise ValueError(f"element order exceeds bound {bound}")


def is_pseudo_reflection(m: Mat3) -> Optional[CycloNum]:
    """The non-unit eigenvalue t if rank(M - I) = 1 and det(M) != 0, else None."""
    d = m.det()
    if d.is_zero():
        return None
    if (m - Mat3.identity(m.n)).rank() != 1:
        return None
    # eigenvalues are (1, 1, t), so t equals the determinant
    return d


class Spectrum:
    """Multiset of three eigenvalue exponents in [0,1) for a finite-order matrix."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Sequence[Fraction]):
        exps = tuple(sorted(Fraction(e) for e in exponents))
        if len(exps) != 3 or any(e < 0 or e >= 1 for e in exps):
            raise ValueError("spectrum needs three exponents in [0,1)")
        self.exponents = exps

    def __eq__(self, other):
        return isinstance(other, Spectrum) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __repr__(self):
        return f"Spectrum({self.exponents})"


def finite_order_spectrum(m: Mat3, order: int) -> Spectrum:
    """Exponents (k1, k2, k3)/order with charpoly(M) = prod (z - zeta_order^ki).

    Verifies M^order = I and matches trace and determinant candidates first,
    then the full characteristic polynomial, all exactly.
    """
    if order < 1:
        raise SpectrumError("order must be positive")
    if m ** order != Mat3.identity(1):
        raise SpectrumError("matrix does not have the claimed order")
    c0, c1, c2, _ = m.charpoly()
    tr = -c2
    e2 = c1
    det = -c0
    det_log = log_root_of_unity(det)
    zpow = [root_of_unity(order, k) for k in range(order)]
    for ks in combinations_with_replacement(range(order), 3):
        if Fraction(sum(ks) % order, order) != det_log:
            continue
        if zpow[ks[0]] + zpow[ks[1]] + zpow[ks[2]] != tr:
            continue
        s2 = (zpow[ks[0]] * zpow[ks[1]] + zpow[ks[0]] * zpow[ks[2]]
              + zpow[ks[1]] * zpow[ks[2]])
        if s2 != e2:
            continue
        return Spectrum([Fraction(k, order) for k in ks])
    raise SpectrumError("no exponent triple matches the characteristic polynomial")


def nullspace(rows: List[List[CycloNum]]) -> List[List[CycloNum]]:
    """Basis of the right nullspace of a small exact matrix over a cyclotomic field."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    piv_of_col = {}
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if not mat[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_of_col[col] = r
        r += 1
    free_cols = [c for c in range(ncols) if c not in piv_of_col]
    basis = []
    zero = CycloNum.zero(1)
    one = CycloNum.one(1)
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for col, prow in piv_of_col.items():
            vec[col] = -mat[prow][fc]
        basis.append(vec)
    return basis
