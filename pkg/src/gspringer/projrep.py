"""Finite groups given by multiplication tables, 2-cocycles with values in
roots of unity, exact character tables, and irreducibles of twisted group
algebras C[G, kappa].

Character tables are computed with Dixon's modular variant of the
Burnside algorithm: common eigenvectors of the class multiplication
matrices are found over GF(p) for a prime p = 1 mod exp(G), and character
values are lifted to Q(zeta_exp(G)) through eigenvalue multiplicities.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

import numpy as np
from sympy import isprime, primitive_root

from .cyclotomic import Cyclotomic

DEFAULT_BOUND = 2000


class GroupTooLarge(ValueError):
    pass


# -- finite groups --------------------------------------------------------------


class FiniteGroup:
    """A finite group on elements 0..n-1 given by its multiplication table.

    ``table[g, h]`` is the index of ``g*h``.
    """

    def __init__(self, table, validate: bool = True, name: str = ""):
        self.table = np.asarray(table, dtype=np.int64)
        n = self.table.shape[0]
        if self.table.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a nonempty square array")
        self.name = name
        self.order = n
        ids = [e for e in range(n) if (self.table[e] == np.arange(n)).all()
               and (self.table[:, e] == np.arange(n)).all()]
        if not ids:
            raise ValueError("no identity element")
        self.identity = ids[0]
        rows, cols = np.nonzero(self.table == self.identity)
        self.inverse = np.full(n, -1, dtype=np.int64)
        self.inverse[rows] = cols
        if validate:
            self._validate()

    def _validate(self):
        n = self.order
        t = self.table
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries out of range")
        for row in t:
            if len(set(row.tolist())) != n:
                raise ValueError("table is not a Latin square")
        if (self.inverse < 0).any():
            raise ValueError("missing inverses")
        # associativity: (gh)k == g(hk) for all triples, vectorized per g
        for g in range(n):
            if not (t[t[g]][:, :] == t[g][t]).all():
                raise ValueError("multiplication is not associative")

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def power(self, g: int, k: int) -> int:
        x = self.identity
        for _ in range(k % self.element_order(g)):
            x = self.mul(x, g)
        return x

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def element_orders(self) -> np.ndarray:
        return np.array([self.element_order(g) for g in range(self.order)])

    def exponent(self) -> int:
        e = 1
        for o in set(self.element_orders().tolist()):
            e = e * o // gcd(e, o)
        return e

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def conjugate(self, g: int, h: int) -> int:
        """h g h^-1."""
        return self.mul(self.mul(h, g), int(self.inverse[h]))

    def centralizer(self, g: int) -> list[int]:
        return [h for h in range(self.order) if self.table[g, h] == self.table[h, g]]

    def subgroup(self, elements: Sequence[int]) -> tuple["FiniteGroup", list[int]]:
        """The subgroup on ``elements`` (sorted) and its embedding list."""
        elems = sorted(set(int(x) for x in elements))
        pos = {g: i for i, g in enumerate(elems)}
        try:
            table = [[pos[self.mul(g, h)] for h in elems] for g in elems]
        except KeyError:
            raise ValueError("elements are not closed under multiplication") from None
        return FiniteGroup(table, validate=False), elems

    def generated_subgroup(self, gens: Sequence[int]) -> list[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mul(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        current = {self.identity}
        for g in range(self.order):
            if g not in current:
                gens.append(g)
                current = set(self.generated_subgroup(gens))
                if len(current) == self.order:
                    break
        return gens

    def to_json(self) -> dict:
        return {"table": self.table.tolist()}

    @classmethod
    def from_json(cls, data) -> "FiniteGroup":
        if "table" in data:
            return cls(data["table"])
        if "generators" in data:
            return cls.from_permutations(data["generators"])
        raise ValueError("group JSON needs 'table' or 'generators'")

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], name: str = "") -> "FiniteGroup":
        """Group generated by permutations (lists of images); element 0 is the identity."""
        gens = [tuple(int(x) for x in g) for g in gens]
        degree = len(gens[0]) if gens else 1
        ident = tuple(range(degree))
        elems = [ident]
        index = {ident: 0}
        queue = deque([ident])
        while queue:
            p = queue.popleft()
            for s in gens:
                q = tuple(p[i] for i in s)  # apply s first, then p
                if q not in index:
                    index[q] = len(elems)
                    elems.append(q)
                    queue.append(q)
        n = len(elems)
        table = np.empty((n, n), dtype=np.int64)
        arr = np.array(elems)
        for i, p in enumerate(elems):
            composed = np.array(p)[arr]  # p o q for every q
            for j in range(n):
                table[i, j] = index[tuple(composed[j])]
        g = cls(table, validate=False, name=name)
        g.permutations = elems
        return g

    def __repr__(self):
        return f"FiniteGroup(order={self.order}{', ' + self.name if self.name else ''})"


def cyclic_group(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, validate=False, name=f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Elements (a, b) are indexed a * |h| + b."""
    m = h.order
    a = np.arange(g.order * m)
    ga, hb = a // m, a % m
    table = g.table[ga[:, None], ga[None, :]] * m + h.table[hb[:, None], hb[None, :]]
    return FiniteGroup(table, validate=False, name=f"{g.name}x{h.name}")


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup([[0]], name="S1")
    gens = [[1, 0] + list(range(2, n)), list(range(1, n)) + [0]]
    return FiniteGroup.from_permutations(gens, name=f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    gens = [[(i + 1) % 3 if i < 3 else i for i in range(n)]]
    for k in range(3, n):
        p = list(range(n))
        p[0], p[1], p[k] = p[1], p[k], p[0]
        gens.append(p)
    return FiniteGroup.from_permutations(gens, name=f"A{n}")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return FiniteGroup.from_permutations([rot, ref], name=f"D{2 * n}")


def klein_four() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2))


def quaternion_group() -> FiniteGroup:
    # i, j as permutations of {+-1, +-i, +-j, +-k} in the regular representation
    names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]
    mult = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def prod(a, b):
        sa, a0 = (a[0] == "-"), a.lstrip("-")
        sb, b0 = (b[0] == "-"), b.lstrip("-")
        if a0 == "1":
            r = b0
        elif b0 == "1":
            r = a0
        else:
            r = mult[(a0, b0)]
        neg = (sa ^ sb) ^ r.startswith("-")
        r = r.lstrip("-")
        return ("-" + r) if neg else r

    table = [[names.index(prod(a, b)) for b in names] for a in names]
    return FiniteGroup(table, name="Q8")


# -- conjugacy classes ---------------------------------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Conjugacy classes, each sorted, ordered by their minimal element."""
    n = G.order
    label = np.full(n, -1, dtype=np.int64)
    classes = []
    inv = G.inverse
    for g in range(n):
        if label[g] >= 0:
            continue
        members = np.unique(G.table[G.table[:, g], inv])  # h g h^-1 over all h
        label[members] = len(classes)
        classes.append(members.tolist())
    return classes


def class_labels(G: FiniteGroup, classes=None) -> np.ndarray:
    classes = classes if classes is not None else conjugacy_classes(G)
    label = np.empty(G.order, dtype=np.int64)
    for i, c in enumerate(classes):
        label[c] = i
    return label


# -- modular linear algebra -------------------------------------------------------


def _rref_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    a = a.copy() % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _nullspace_mod(a: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the right nullspace of ``a`` over GF(p), in RREF."""
    cols = a.shape[1]
    r, pivots = _rref_mod(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = (-r[i, f]) % p
    if len(basis):
        basis, _ = _rref_mod(basis, p)
    return basis


def _eigenspaces_mod(m: np.ndarray, p: int, rng) -> list[np.ndarray]:
    """Eigenspaces of a diagonalizable matrix whose eigenvalues lie in GF(p)."""
    d = m.shape[0]
    spaces: dict[int, np.ndarray] = {}
    found = 0
    xs = np.arange(p, dtype=np.int64)
    for _ in range(50):
        u = rng.integers(0, p, size=d)
        krylov = [u]
        while True:
            nxt = (m @ krylov[-1]) % p
            mat = np.array(krylov + [nxt]).T
            null = _nullspace_mod(mat, p)
            if len(null):
                coeffs = null[-1]  # relation with the highest Krylov vector
                coeffs = (coeffs * pow(int(coeffs[len(krylov)]), -1, p)) % p
                break
            krylov.append(nxt)
        # roots of the minimal polynomial of u
        vals = np.zeros(p, dtype=np.int64)
        for c in coeffs[::-1]:
            vals = (vals * xs + c) % p
        for lam in np.nonzero(vals == 0)[0].tolist():
            if lam in spaces:
                continue
            basis = _nullspace_mod((m - lam * np.eye(d, dtype=np.int64)) % p, p)
            spaces[lam] = basis
            found += len(basis)
        if found == d:
            return [spaces[k] for k in sorted(spaces)]
    raise ArithmeticError("matrix is not diagonalizable over GF(p)")


def _dixon_prime(order: int, exponent: int) -> int:
    p = exponent + 1
    while not (isprime(p) and p > 2 * isqrt(order) + 2):
        p += exponent
    return p


# -- character tables ------------------------------------------------------------


@dataclass
class CharacterTable:
    group: FiniteGroup
    classes: list
    exponent: int
    characters: list  # characters[i][k] = value on class k, as Cyclotomic

    @property
    def dims(self) -> list[int]:
        return [int(ch[self.identity_class].coeffs[0]) for ch in self.characters]

    @property
    def identity_class(self) -> int:
        return next(k for k, c in enumerate(self.classes) if self.group.identity in c)

    @property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def value(self, i: int, g: int) -> Cyclotomic:
        label = class_labels(self.group, self.classes)
        return self.characters[i][label[g]]


def character_table(G: FiniteGroup, bound: int = DEFAULT_BOUND, seed: int = 0) -> CharacterTable:
    """Exact ordinary character table of ``G``.

    Rows are sorted by degree and then by their values; the trivial
    character comes first.
    """
    if G.order > bound:
        raise GroupTooLarge(f"|G| = {G.order} exceeds the bound {bound}")
    rng = np.random.default_rng(seed)
    classes = conjugacy_classes(G)
    r = len(classes)
    label = class_labels(G, classes)
    sizes = np.array([len(c) for c in classes], dtype=np.int64)
    reps = [c[0] for c in classes]
    e = G.exponent()
    p = _dixon_prime(G.order, e)

    # M_j[i, k] = c_{jik} where K_j K_i = sum_k c_{jik} K_k; counting gives
    # c_{jik} = |C_i| #{y in C_j : r_i y in C_k} / |C_k|
    mats = []
    rows = np.arange(r)
    for j in range(r):
        counts = np.zeros((r, r), dtype=np.int64)
        for y in classes[j]:
            counts[rows, label[G.table[reps, y]]] += 1
        mats.append((sizes[:, None] * counts) // sizes[None, :])
    inv_class = label[G.inverse[reps]]

    spaces = [np.eye(r, dtype=np.int64)]
    for j in range(r):
        if len(spaces) == r:
            break
        new_spaces = []
        mj = mats[j] % p
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            basis, piv = _rref_mod(basis, p)
            image = (mj @ basis.T) % p  # columns M b_t
            restricted = image[piv, :]  # coordinates in the basis
            for sub in _eigenspaces_mod(restricted, p, rng):
                new_spaces.append((sub @ basis) % p)
        spaces = new_spaces
    if len(spaces) != r:
        raise ArithmeticError("failed to split the class algebra")

    ident = int(label[G.identity])
    # power maps of class representatives
    powers = np.empty((r, e), dtype=np.int64)
    for k, g in enumerate(reps):
        x = G.identity
        for l in range(e):
            powers[k, l] = label[x]
            x = G.mul(x, g)
    z = pow(primitive_root(p), (p - 1) // e, p)
    zinv = pow(z, -1, p)
    inv_e = pow(e, -1, p)
    zpow = np.array([pow(zinv, t, p) for t in range(e)], dtype=np.int64)
    fourier = zpow[np.outer(np.arange(e), np.arange(e)) % e]
    chars = []
    for basis in spaces:
        v = basis[0] % p
        v = (v * pow(int(v[ident]), -1, p)) % p  # omega(identity class) = 1
        s = sum(int(v[k]) * int(v[inv_class[k]]) * pow(int(sizes[k]), -1, p) for k in range(r)) % p
        target = (G.order * pow(s, -1, p)) % p
        dim = next(d for d in range(1, isqrt(G.order) + 1) if (d * d - target) % p == 0)
        values_mod = [(int(v[k]) * dim * pow(int(sizes[k]), -1, p)) % p for k in range(r)]
        values_mod = np.array(values_mod, dtype=np.int64)
        row = []
        for k in range(r):
            mult = (fourier @ values_mod[powers[k]]) % p
            mult = (mult * inv_e) % p
            if (mult > dim).any():
                raise ArithmeticError("character lift failed")
            row.append(Cyclotomic.from_exponents(e, mult.tolist()))
        chars.append(row)
    chars.sort(key=lambda ch: (ch[ident].coeffs[0], [x.key(e) for x in ch]))
    triv = [i for i, ch in enumerate(chars) if all(x == 1 for x in ch)]
    chars.insert(0, chars.pop(triv[0]))
    return CharacterTable(G, classes, e, chars)


def inner_product(table: CharacterTable, a: Sequence[Cyclotomic], b: Sequence[Cyclotomic]):
    total = Cyclotomic.from_int(table.exponent, 0)
    for k, size in enumerate(table.class_sizes):
        total = total + a[k] * b[k].conjugate() * size
    return total * Fraction(1, table.group.order)


# -- cocycles -----------------------------------------------------------------------


@dataclass
class Cocycle:
    """A 2-cocycle with values in the m-th roots of unity, stored as exponents mod m."""

    modulus: int
    table: np.ndarray

    def __post_init__(self):
        self.table = np.asarray(self.table, dtype=np.int64) % self.modulus

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data) -> "Cocycle":
        return cls(int(data["modulus"]), data["table"])


def trivial_cocycle(G: FiniteGroup, modulus: int = 1) -> Cocycle:
    return Cocycle(modulus, np.zeros((G.order, G.order), dtype=np.int64))


def cocycle_violations(G: FiniteGroup, kappa: Cocycle) -> list[tuple]:
    """Triples (g, h, k) failing the cocycle identity, plus normalization failures."""
    t, k, m = G.table, kappa.table, kappa.modulus
    bad = []
    if kappa.table.shape != (G.order, G.order):
        return [("shape",)]
    e = G.identity
    if k[e].any() or k[:, e].any():
        bad.append(("normalization",))
    n = G.order
    for g in range(n):
        # kappa(g,h) + kappa(gh,l) - kappa(g,hl) - kappa(h,l)
        lhs = (k[g][:, None] + k[t[g]][:, :]) % m
        rhs = (k[g][t] + k) % m
        hs, ls = np.nonzero(lhs != rhs)
        bad.extend((g, int(h), int(l)) for h, l in zip(hs, ls))
    return bad


def validate_cocycle(G: FiniteGroup, kappa: Cocycle) -> bool:
    return not cocycle_violations(G, kappa)


def coboundary_twist(G: FiniteGroup, kappa: Cocycle, eta: Sequence[int]) -> Cocycle:
    """kappa'(g, h) = kappa(g, h) + eta(g) + eta(h) - eta(gh)."""
    eta = np.asarray(eta, dtype=np.int64) % kappa.modulus
    if eta[G.identity] != 0:
        raise ValueError("eta must vanish at the identity")
    new = kappa.table + eta[:, None] + eta[None, :] - eta[G.table]
    return Cocycle(kappa.modulus, new)


def _solve_prime_power(a: np.ndarray, b: np.ndarray, p: int, e: int) -> Optional[np.ndarray]:
    # Smith-style elimination over the chain ring Z/p^e: always pivot on an
    # entry of least p-adic valuation, which then divides its row and column.
    q = p**e
    a = a.copy() % q
    b = b.copy() % q
    rows, cols = a.shape
    colop = np.eye(cols, dtype=object)
    a = a.astype(object)
    b = b.astype(object)

    def val(x):
        if x % q == 0:
            return e
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    r = 0
    pivots = []
    while r < min(rows, cols):
        best = None
        for i in range(r, rows):
            for j in range(r, cols):
                if a[i, j] % q:
                    v = val(a[i, j])
                    if best is None or v < best[0]:
                        best = (v, i, j)
                        if v == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        v, i, j = best
        a[[r, i]] = a[[i, r]]
        b[[r, i]] = b[[i, r]]
        a[:, [r, j]] = a[:, [j, r]]
        colop[:, [r, j]] = colop[:, [j, r]]
        piv = int(a[r, r])
        unit = pow(piv // p**v, -1, q)
        for i2 in range(rows):
            if i2 != r and a[i2, r] % q:
                f = (int(a[i2, r]) // p**v) * unit % q
                a[i2] = (a[i2] - f * a[r]) % q
                b[i2] = (b[i2] - f * b[r]) % q
        for j2 in range(r + 1, cols):
            if a[r, j2] % q:
                f = (int(a[r, j2]) // p**v) * unit % q
                a[:, j2] = (a[:, j2] - f * a[:, r]) % q
                colop[:, j2] = (colop[:, j2] - f * colop[:, r]) % q
        pivots.append(v)
        r += 1
    y = np.zeros(cols, dtype=object)
    for i in range(rows):
        rhs = int(b[i]) % q
        if i < len(pivots):
            v = pivots[i]
            if val(rhs) < v:
                return None
            y[i] = (rhs // p**v) * pow(int(a[i, i]) // p**v, -1, q) % q
        elif rhs:
            return None
    return np.array([int(x) for x in colop.dot(y)], dtype=object) % q


def solve_mod(a, b, m: int) -> Optional[np.ndarray]:
    """A solution of a x = b (mod m), or None if there is none."""
    from sympy import factorint

    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if m == 1:
        return np.zeros(a.shape[1], dtype=np.int64)
    x, mod = np.zeros(a.shape[1], dtype=object), 1
    for p, e in factorint(m).items():
        part = _solve_prime_power(a, b, p, e)
        if part is None:
            return None
        q = p**e
        # Chinese remainder: combine x (mod mod) with part (mod q)
        t = ((part - x) * pow(mod, -1, q)) % q
        x = x + mod * t
        mod *= q
    return np.array([int(v) for v in x], dtype=np.int64) % m


def coboundary_solution(G: FiniteGroup, diff, m: int) -> Optional[np.ndarray]:
    """eta with eta(g) + eta(h) - eta(gh) = diff(g, h) mod m, or None."""
    n = G.order
    a = np.zeros((n * n, n), dtype=np.int64)
    rows = np.arange(n * n)
    g, h = rows // n, rows % n
    np.add.at(a, (rows, g), 1)
    np.add.at(a, (rows, h), 1)
    np.add.at(a, (rows, G.table[g, h]), -1)
    return solve_mod(a, np.asarray(diff, dtype=np.int64).reshape(-1) % m, m)


def are_cohomologous(G: FiniteGroup, k1: Cocycle, k2: Cocycle) -> bool:
    if k1.modulus != k2.modulus:
        raise ValueError("cocycles must share a modulus")
    return coboundary_solution(G, k2.table - k1.table, k1.modulus) is not None


def klein_cocycle() -> tuple[FiniteGroup, Cocycle]:
    """Klein four-group with the anticommuting cocycle; C[V, kappa] is M_2(C)."""
    V = klein_four()
    # elements (a, b) indexed 2a + b; kappa((a,b),(c,d)) = b*c
    table = [[(g % 2) * (h // 2) for h in range(4)] for g in range(4)]
    return V, Cocycle(2, table)


# -- twisted group algebras ------------------------------------------------------------


def kappa_regular_classes(G: FiniteGroup, kappa: Cocycle, classes=None) -> list[list[int]]:
    """Classes of g with kappa(g, h) = kappa(h, g) for every h commuting with g."""
    classes = classes if classes is not None else conjugacy_classes(G)
    out = []
    for c in classes:
        g = c[0]
        cent = np.nonzero(G.table[g] == G.table[:, g])[0]
        if (kappa.table[g, cent] == kappa.table[cent, g]).all():
            out.append(c)
    return out


def central_extension(G: FiniteGroup, kappa: Cocycle) -> FiniteGroup:
    """The group on pairs (a, g), indexed a * |G| + g, with (a,g)(b,h) = (a+b+kappa(g,h), gh)."""
    n, m = G.order, kappa.modulus
    idx = np.arange(n * m)
    a, g = idx // n, idx % n
    table = ((a[:, None] + a[None, :] + kappa.table[g[:, None], g[None, :]]) % m) * n + G.table[g[:, None], g[None, :]]
    return FiniteGroup(table, validate=False)


@dataclass
class IrrepData:
    count: int
    dims: list
    # characters[i][g] = trace of T_g, for every element g of the base group
    characters: Optional[list] = None
    conductor: int = 1

    def to_json(self) -> dict:
        d = {"count": self.count, "dims": list(self.dims)}
        if self.characters is not None:
            d["conductor"] = self.conductor
            d["characters"] = [[str(x) for x in row] for row in self.characters]
        return d


def irrep_data(G: FiniteGroup, bound: int = DEFAULT_BOUND) -> IrrepData:
    ct = character_table(G, bound)
    label = class_labels(G, ct.classes)
    chars = [[row[label[g]] for g in range(G.order)] for row in ct.characters]
    return IrrepData(len(chars), ct.dims, chars, ct.exponent)


def twisted_irreps(G: FiniteGroup, kappa: Cocycle, bound: int = DEFAULT_BOUND) -> IrrepData:
    """Irreducible modules of C[G, kappa], via the central extension by Z/m.

    The result keeps the irreducibles of the extension on which the central
    generator (1, e) acts by exp(2 pi i / m).
    """
    if G.order * kappa.modulus > bound:
        raise GroupTooLarge(f"|G| * m = {G.order * kappa.modulus} exceeds the bound {bound}")
    bad = cocycle_violations(G, kappa)
    if bad:
        raise ValueError(f"not a normalized cocycle: {bad[:3]}")
    m, n = kappa.modulus, G.order
    if m == 1:
        return irrep_data(G, bound)
    ext = central_extension(G, kappa)
    ct = character_table(ext, bound)
    label = class_labels(ext, ct.classes)
    N = ct.exponent
    z_idx = 1 * n + G.identity
    zeta = Cyclotomic.root_of_unity(N, N // m)
    rows = []
    for row in ct.characters:
        dim = row[label[G.identity]]
        if row[label[z_idx]] == dim * zeta:
            rows.append([row[label[g]] for g in range(n)])
    dims = [int(r[G.identity].coeffs[0]) for r in rows]
    return IrrepData(len(rows), dims, rows, N)


# -- isomorphism testing --------------------------------------------------------------


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[np.ndarray]:
    """An isomorphism G -> H as an index array, or None."""
    if G.order != H.order:
        return None
    og, oh = G.element_orders(), H.element_orders()
    if sorted(og.tolist()) != sorted(oh.tolist()):
        return None
    if len(conjugacy_classes(G)) != len(conjugacy_classes(H)):
        return None
    gens = G.generators()
    # spanning tree: every element as parent * generator
    parent = {G.identity: None}
    order = [G.identity]
    for x in order:
        for i, s in enumerate(gens):
            y = G.mul(x, s)
            if y not in parent:
                parent[y] = (x, i)
                order.append(y)
    candidates = [np.nonzero(oh == og[s])[0].tolist() for s in gens]
    for images in itertools.product(*candidates):
        img = np.full(G.order, -1, dtype=np.int64)
        img[G.identity] = H.identity
        for x in order[1:]:
            px, i = parent[x]
            img[x] = H.table[img[px], images[i]]
        if len(set(img.tolist())) != G.order:
            continue
        if (H.table[img[:, None], img[None, :]] == img[G.table]).all():
            return img
    return None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None
