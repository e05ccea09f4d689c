"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the reduced power basis {zeta_N^0, ..., zeta_N^(phi(N)-1)}
modulo the N-th cyclotomic polynomial, with a common integer denominator.  The
canonical form makes equality a plain coefficient comparison, so every quantum
dimension, twist and S-matrix entry downstream is compared exactly.

Orders are capped at ORDER_CAP; everything the library needs lives inside
Q(zeta_72).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import gcd

ORDER_CAP = 72


class CapExceeded(Exception):
    """Requested a cyclotomic order beyond the configured cap."""


class BadAutomorphism(Exception):
    """galois(a, j) with gcd(j, N) != 1."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def phi(n: int) -> int:
    """Euler totient."""
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, ascending coefficients
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert not any(num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, monic."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the basis expansion of zeta_n^e for 0 <= e < n."""
    deg = phi(n)
    cyc = cyclotomic_poly(n)
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        nxt = [0] + cur[: deg - 1]
        lead = cur[deg - 1]
        if lead:
            for i in range(deg):
                nxt[i] -= lead * cyc[i]
        cur = nxt
    return tuple(rows)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = den
    for x in num:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


class CycNum:
    """An exact element of Q(zeta_order).

    Immutable; all arithmetic returns new instances.  Mixed-order operands are
    coerced into the lcm of the two orders.
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num, den: int = 1):
        if order < 1:
            raise ValueError("order must be positive")
        if order > ORDER_CAP:
            raise CapExceeded(f"cyclotomic order {order} exceeds cap {ORDER_CAP}")
        deg = phi(order)
        if len(num) != deg:
            raise ValueError(f"expected {deg} coefficients for order {order}")
        self.order = order
        self.num, self.den = _normalize([int(x) for x in num], int(den))

    # ---- constructors -------------------------------------------------

    @staticmethod
    def from_rational(q) -> "CycNum":
        q = Fraction(q)
        return CycNum(1, [q.numerator], q.denominator)

    @staticmethod
    def from_fractions(order: int, coeffs) -> "CycNum":
        coeffs = [Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        return CycNum(order, [c.numerator * (den // c.denominator) for c in coeffs], den)

    @staticmethod
    def zero() -> "CycNum":
        return CycNum(1, [0])

    @staticmethod
    def one() -> "CycNum":
        return CycNum(1, [1])

    # ---- coercion -----------------------------------------------------

    def lift(self, order: int) -> "CycNum":
        """Re-express in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError("can only lift to a multiple of the current order")
        step = order // self.order
        table = _power_table(order)
        deg = phi(order)
        out = [0] * deg
        for i, c in enumerate(self.num):
            if c:
                row = table[(i * step) % order]
                for j in range(deg):
                    out[j] += c * row[j]
        return CycNum(order, out, self.den)

    def demote(self, order: int) -> "CycNum | None":
        """Express in Q(zeta_order) if possible (order | self.order), else None."""
        if order == self.order:
            return self
        if self.order % order != 0:
            return None
        cols = []
        for i in range(phi(order)):
            basis = CycNum.root_of_unity(order, i).lift(self.order)
            cols.append([Fraction(x, basis.den) for x in basis.num])
        target = [Fraction(x, self.den) for x in self.num]
        sol = _solve_exact(cols, target)
        if sol is None:
            return None
        return CycNum.from_fractions(order, sol)

    def reduced(self) -> "CycNum":
        """Canonical copy at the smallest order containing the element."""
        for d in sorted(_divisors(self.order)):
            low = self.demote(d)
            if low is not None:
                return low
        return self

    def _pair(self, other) -> tuple["CycNum", "CycNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented, NotImplemented
        n = _lcm(self.order, other.order)
        if n > ORDER_CAP:
            # a smaller common field may exist (e.g. both rational)
            a, b = self.reduced(), other.reduced()
            n = _lcm(a.order, b.order)
            return a.lift(n), b.lift(n)
        return self.lift(n), other.lift(n)

    # ---- ring operations ----------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is NotImplemented:
            return NotImplemented
        den = _lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        return CycNum(a.order, [x * fa + y * fb for x, y in zip(a.num, b.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycNum) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycNum(self.order, [x * q.numerator for x in self.num], self.den * q.denominator)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        deg = phi(a.order)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        table = _power_table(a.order)
        out = conv[:deg]
        for e in range(deg, 2 * deg - 1):
            c = conv[e]
            if c:
                row = table[e % a.order]
                for j in range(deg):
                    out[j] += c * row[j]
        return CycNum(a.order, out, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Multiplicative inverse via the product of Galois conjugates.

        inv(a) = (prod of nontrivial conjugates) / Norm(a); the norm is the
        rational number obtained by multiplying back with a itself.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        n = self.order
        prod = CycNum.one()
        for j in range(2, n + 1):
            if gcd(j, n) == 1:
                prod = prod * self.galois(j)
        norm = self * prod
        q = norm.as_rational()
        assert q is not None and q != 0
        return prod * (1 / q)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = CycNum.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # ---- Galois -------------------------------------------------------

    def galois(self, j: int) -> "CycNum":
        """The automorphism zeta_N -> zeta_N^j (gcd(j, N) = 1)."""
        n = self.order
        j %= n
        if gcd(j, n) != 1:
            raise BadAutomorphism(f"gcd({j}, {n}) != 1")
        table = _power_table(n)
        deg = phi(n)
        out = [0] * deg
        for i, c in enumerate(self.num):
            if c:
                row = table[(i * j) % n]
                for m in range(deg):
                    out[m] += c * row[m]
        return CycNum(n, out, self.den)

    def conj(self) -> "CycNum":
        """Complex conjugation zeta_N -> zeta_N^(N-1)."""
        if self.order <= 2:
            return self
        return self.galois(self.order - 1)

    # ---- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def as_rational(self) -> Fraction | None:
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def embed(self) -> complex:
        """Double-precision evaluation at e^(2 pi i / N)."""
        z = 0j
        for i, c in enumerate(self.num):
            if c:
                z += c * cmath.exp(2j * math.pi * i / self.order)
        return z / self.den

    def as_quadratic(self, disc: int) -> tuple[Fraction, Fraction] | None:
        """Write self = p + q*sqrt(disc) if possible (disc in {2, 3})."""
        rt = sqrt_of(disc)
        n = _lcm(self.order, rt.order)
        if n > ORDER_CAP:
            return None
        one = CycNum.one().lift(n)
        rt = rt.lift(n)
        cols = [
            [Fraction(x, one.den) for x in one.num],
            [Fraction(x, rt.den) for x in rt.num],
        ]
        me = self.lift(n)
        sol = _solve_exact(cols, [Fraction(x, me.den) for x in me.num])
        if sol is None:
            return None
        return sol[0], sol[1]

    def root_of_unity_log(self) -> Fraction | None:
        """If self is a root of unity, return the exponent t with self = e^(2 pi i t)."""
        for k in range(self.order):
            if self == CycNum.root_of_unity(self.order, k):
                return Fraction(k, self.order)
        return None

    # ---- dunder plumbing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.as_rational() == Fraction(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        a, b = self._pair(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        r = self.reduced()
        return hash((r.order, r.num, r.den))

    def __repr__(self):
        return f"CycNum({self.order}, {list(self.num)}, {self.den})"

    def __str__(self):
        return render(self)

    # ---- named elements -----------------------------------------------

    @staticmethod
    def root_of_unity(n: int, k: int) -> "CycNum":
        """zeta_n^k in canonical form."""
        if n < 1:
            raise ValueError("order must be positive")
        if n > ORDER_CAP:
            raise CapExceeded(f"cyclotomic order {n} exceeds cap {ORDER_CAP}")
        row = _power_table(n)[k % n]
        return CycNum(n, list(row))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _solve_exact(cols: list[list[Fraction]], target: list[Fraction]) -> list[Fraction] | None:
    """Solve sum_j x_j cols[j] = target exactly; None when inconsistent."""
    m = len(target)
    k = len(cols)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    row = 0
    pivots = []
    for col in range(k):
        piv = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for r, col in enumerate(pivots):
        sol[col] = aug[r][k]
    return sol


def zeta(n: int, k: int = 1) -> CycNum:
    return CycNum.root_of_unity(n, k)


@lru_cache(maxsize=None)
def sqrt_of(disc: int) -> CycNum:
    """Exact sqrt(2) or sqrt(3) as a cyclotomic element."""
    if disc == 2:
        return zeta(8, 1) + zeta(8, 7)
    if disc == 3:
        return zeta(12, 1) + zeta(12, 11)
    raise ValueError("only sqrt(2) and sqrt(3) are provided")


def sin_pi(a: int, b: int) -> CycNum:
    """Exact sin(a*pi/b) = (zeta_{2b}^a - zeta_{2b}^{-a}) * (-zeta_4) / 2."""
    n = _lcm(4, 2 * b)
    za = zeta(2 * b, a % (2 * b)).lift(n)
    zb = zeta(2 * b, (-a) % (2 * b)).lift(n)
    return (za - zb) * (-zeta(4, 1).lift(n)) * Fraction(1, 2)


def root_of_unity_from_exponent(t) -> CycNum:
    """e^(2 pi i t) for a rational t, reduced mod 1 first."""
    t = Fraction(t)
    t -= math.floor(t)
    return zeta(t.denominator, t.numerator)


def quadratic(a, b, disc: int = 3) -> CycNum:
    """a + b*sqrt(disc) as an exact element."""
    return CycNum.from_rational(a) + sqrt_of(disc) * Fraction(b)


def render(x: CycNum) -> str:
    """Canonical human-readable string: rational, a+b*sqrt(D), zeta power, or coeffs."""
    q = x.as_rational()
    if q is not None:
        return str(q)
    for disc in (3, 2):
        pq = x.as_quadratic(disc)
        if pq is not None:
            p, s = pq
            if s == 0:
                continue
            head = f"{p}" if p else ""
            mid = "+" if (s > 0 and head) else ""
            coeff = "" if abs(s) == 1 else f"{abs(s)}"
            sign = "-" if s < 0 else mid
            return f"{head}{sign}{coeff}√{disc}"
    t = x.root_of_unity_log()
    if t is not None:
        return f"ζ_{t.denominator}^{t.numerator}" if t.numerator != 1 else f"ζ_{t.denominator}"
    r = x.reduced()
    return f"cyc({r.order};{','.join(str(Fraction(c, r.den)) for c in r.num)})"
