"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as rational coefficient vectors in the power basis
1, z, ..., z^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial, so
equality is coefficientwise.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Coefficient lists are lowest degree first; ``den`` is monic.
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coordinates of z^k for k = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce z^deg = -(phi_0 + ... + phi_{deg-1} z^{deg-1})
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


class Cyclotomic:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    # constructors -------------------------------------------------------------

    @classmethod
    def from_int(cls, n: int, value) -> "Cyclotomic":
        deg = len(cyclotomic_polynomial(n)) - 1
        return cls(n, [value] + [0] * (deg - 1))

    @classmethod
    def root_of_unity(cls, n: int, k: int) -> "Cyclotomic":
        return cls(n, _power_table(n)[k % n])

    @classmethod
    def from_exponents(cls, n: int, mult) -> "Cyclotomic":
        """``sum_k mult[k] * z^k`` for a length-n multiplicity vector."""
        table = _power_table(n)
        deg = len(table[0])
        acc = [0] * deg
        for k, m in enumerate(mult):
            if m:
                row = table[k % n]
                for i in range(deg):
                    acc[i] += m * row[i]
        return cls(n, acc)

    # field operations -----------------------------------------------------------

    def lift(self, n: int) -> "Cyclotomic":
        """The same number viewed in Q(zeta_n); requires self.n | n."""
        if n == self.n:
            return self
        if n % self.n:
            raise ValueError(f"Q(zeta_{self.n}) is not contained in Q(zeta_{n})")
        step = n // self.n
        mult = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            mult[k * step] += c
        return Cyclotomic.from_exponents(n, mult)

    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.from_int(self.n, other)
        if other.n == self.n:
            return self, other
        n = self.n * other.n // gcd(self.n, other.n)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        a, b = self._common(other)
        return Cyclotomic(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Cyclotomic) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            return Cyclotomic(self.n, [x * other for x in self.coeffs])
        a, b = self._common(other)
        mult = [Fraction(0)] * a.n
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        mult[(i + j) % a.n] += x * y
        return Cyclotomic.from_exponents(a.n, mult)

    __rmul__ = __mul__

    def conjugate(self) -> "Cyclotomic":
        mult = [Fraction(0)] * self.n
        for k, c in enumerate(self.coeffs):
            mult[(-k) % self.n] += c
        return Cyclotomic.from_exponents(self.n, mult)

    # comparison ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Cyclotomic):
            try:
                other = Cyclotomic.from_int(self.n, Fraction(other))
            except (TypeError, ValueError):
                return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equal numbers may live in different fields; only the rational part is canonical
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash("cyclotomic")

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def key(self, n: int) -> tuple:
        """Sort key in Q(zeta_n), used for canonical orderings."""
        return tuple(self.lift(n).coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.n}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.n}^{k}" if k > 1 else f"z{self.n}"
                terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"
