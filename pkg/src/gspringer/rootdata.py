"""Root systems, Weyl groups extended by diagram automorphisms, parabolic pairs
(X, Omega), quasi-Levi subgroups, and Mackey double-coset combinatorics.

Weyl group elements are stored as permutations of the root list; an element
of the extended group W = W0 x| pi0 is a pair (w, theta) of indices. All
roots are written in simple-root coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

MAX_WEYL_ORDER = 60000

# Bourbaki numbering, 0-based. a[i][j] = <alpha_i^vee, alpha_j>.


def cartan_matrix(family: str, rank: Optional[int] = None) -> np.ndarray:
    if family in ("E6", "E7", "E8", "F4", "G2"):
        rank = int(family[1])
    n = rank
    a = 2 * np.eye(n, dtype=np.int64)
    if family in ("A", "B", "C", "D"):
        for i in range(n - 1):
            a[i, i + 1] = a[i + 1, i] = -1
        if family == "B" and n >= 2:
            a[n - 1, n - 2] = -2
        elif family == "C" and n >= 2:
            a[n - 2, n - 1] = -2
        elif family == "D":
            if n < 2:
                raise ValueError("type D needs rank >= 2")
            a[n - 2, n - 1] = a[n - 1, n - 2] = 0
            if n >= 3:
                a[n - 3, n - 1] = a[n - 1, n - 3] = -1
            else:
                a[0, 1] = a[1, 0] = 0
    elif family[0] == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for i, j in edges:
            a[i, j] = a[j, i] = -1
    elif family == "F4":
        a[0, 1] = a[1, 0] = -1
        a[1, 2] = -1
        a[2, 1] = -2
        a[2, 3] = a[3, 2] = -1
    elif family == "G2":
        a[0, 1] = -3
        a[1, 0] = -1
    else:
        raise ValueError(f"unknown family {family!r}")
    return a


class RootSystem:
    """Finite crystallographic root system built from a Cartan matrix."""

    def __init__(self, family: str, rank: Optional[int] = None):
        self.family = family
        self.cartan = cartan_matrix(family, rank)
        self.rank = self.cartan.shape[0]
        simple = [tuple(int(x) for x in row) for row in np.eye(self.rank, dtype=np.int64)]
        roots = list(simple)
        seen = set(roots)
        frontier = list(roots)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(self.rank):
                    img = self._reflect(i, beta)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
                        roots.append(img)
            frontier = nxt
        positive = sorted((r for r in roots if min(r) >= 0), key=lambda r: (sum(r), r))
        self.roots = positive + [tuple(-x for x in r) for r in positive]
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.n_positive = len(positive)
        self.vectors = np.array(self.roots, dtype=np.int64)

    def _reflect(self, i: int, beta: tuple) -> tuple:
        pairing = int(self.cartan[i] @ np.array(beta))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    def is_positive(self, k) -> np.ndarray:
        return np.asarray(k) < self.n_positive

    def negate(self, k: int) -> int:
        return (k + self.n_positive) % (2 * self.n_positive)

    def simple_index(self, i: int) -> int:
        return self.index[tuple(int(j == i) for j in range(self.rank))]

    def subsystem(self, X: Iterable[int]) -> np.ndarray:
        """Boolean mask of the roots in the span of the simple roots ``X``."""
        X = frozenset(X)
        cache = self.__dict__.setdefault("_subsystems", {})
        if X not in cache:
            support = np.ones(self.rank, dtype=bool)
            support[list(X)] = False
            mask = ~(self.vectors[:, support] != 0).any(axis=1)
            mask.flags.writeable = False
            cache[X] = mask
        return cache[X]

    def reflection_permutation(self, i: int) -> np.ndarray:
        return np.array([self.index[self._reflect(i, r)] for r in self.roots], dtype=np.int64)


def component_type(cartan: np.ndarray) -> str:
    """Cartan type of a connected Cartan matrix, e.g. ``"D4"``."""
    k = cartan.shape[0]
    if k == 1:
        return "A1"
    off = -cartan + 2 * np.eye(k, dtype=np.int64)
    if (off == 3).any():
        return "G2"
    degree = (off != 0).sum(axis=1)
    if (off == 2).any():
        i, j = map(int, np.argwhere(off == 2)[0])  # alpha_i short, alpha_j long
        if k == 4 and degree[i] == 2 and degree[j] == 2:
            return "F4"
        return f"B{k}" if degree[i] == 1 else f"C{k}"
    branch = np.nonzero(degree == 3)[0]
    if len(branch) == 0:
        return f"A{k}"
    b = int(branch[0])
    arms = []
    for start in np.nonzero(off[b])[0]:
        length, prev, cur = 1, b, int(start)
        while True:
            nxt = [int(x) for x in np.nonzero(off[cur])[0] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    return f"E{k}"


_FAMILY_ORDER = {"E": 0, "F": 1, "G": 2, "D": 3, "C": 4, "B": 5, "A": 6}


def semisimple_type(cartan: np.ndarray, X: Iterable[int]) -> str:
    """Cartan type of the subdiagram on ``X``, e.g. ``"A2+A1"``; ``"T"`` if empty."""
    X = sorted(X)
    if not X:
        return "T"
    sub = cartan[np.ix_(X, X)]
    comps, seen = [], set()
    for s in range(len(X)):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in np.nonzero(sub[u])[0]:
                if int(v) not in seen:
                    seen.add(int(v))
                    stack.append(int(v))
        comp.sort()
        comps.append(component_type(sub[np.ix_(comp, comp)]))
    comps.sort(key=lambda t: (_FAMILY_ORDER[t[0]], -int(t[1:])))
    return "+".join(comps)


# -- diagram automorphisms --------------------------------------------------------


def diagram_automorphisms(family: str, rank: Optional[int], which: str) -> list[tuple]:
    """Generators (as simple-root permutations) for a named pi0.

    ``which`` is ``"trivial"``, ``"flip"`` (A, D, E6), ``"triality"`` (D4, full S3),
    ``"cyclic3"`` (D4, Z/3), or ``";"``-separated explicit permutations in
    Bourbaki numbering, e.g. ``"3,2,1"`` for the flip of A3.
    """
    n = cartan_matrix(family, rank).shape[0]
    ident = tuple(range(n))
    if which in ("", "trivial", "none"):
        return []
    if which == "flip":
        if family == "A":
            return [tuple(n - 1 - i for i in range(n))]
        if family == "D":
            p = list(ident)
            p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
            return [tuple(p)]
        if family == "E6":
            return [(5, 1, 4, 3, 2, 0)]
        raise ValueError(f"no diagram flip for {family}")
    if which in ("triality", "cyclic3"):
        if not (family == "D" and n == 4):
            raise ValueError("triality needs D4")
        rot = (2, 1, 3, 0)  # 0 -> 2 -> 3 -> 0
        return [rot] if which == "cyclic3" else [rot, (0, 1, 3, 2)]
    try:
        return [tuple(int(x) - 1 for x in part.split(",")) for part in which.split(";")]
    except ValueError:
        raise ValueError(f"bad automorphism description {which!r}") from None


def _close_permutations(gens: Sequence[tuple], n: int) -> list[tuple]:
    ident = tuple(range(n))
    elems = [ident]
    seen = {ident}
    for x in elems:
        for g in gens:
            y = tuple(g[x[i]] for i in range(n))
            if y not in seen:
                seen.add(y)
                elems.append(y)
    return sorted(elems)


# -- the extended Weyl group -------------------------------------------------------


class ExtendedWeylGroup:
    """W = W0 x| pi0 for a root system with pinned diagram automorphisms.

    Element (w, t) has index ``w * len(pi0) + t``; ``pi0[0]`` is the identity.
    The product is (w, t)(w', t') = (w t(w'), t t'), and the length of
    (w, t) is the length of w.
    """

    def __init__(self, family: str, rank: Optional[int] = None, pi0: str | Sequence = "trivial"):
        self.roots = RootSystem(family, rank)
        self.family = family
        self.rank = self.roots.rank
        gens = diagram_automorphisms(family, rank, pi0) if isinstance(pi0, str) else [tuple(p) for p in pi0]
        cart = self.roots.cartan
        for g in gens:
            if sorted(g) != list(range(self.rank)) or not (cart[np.ix_(g, g)] == cart).all():
                raise ValueError(f"{g} is not a diagram automorphism of {family}")
        self.pi0 = _close_permutations(gens, self.rank)
        self.pi0_index = {p: k for k, p in enumerate(self.pi0)}
        self._build_weyl()

    @property
    def label(self) -> str:
        r = "" if self.family in ("E6", "E7", "E8", "F4", "G2") else str(self.rank)
        return f"{self.family}{r}"

    def _build_weyl(self):
        R = self.roots
        nroots = len(R.roots)
        gens = [R.reflection_permutation(i) for i in range(self.rank)]
        ident = np.arange(nroots, dtype=np.int64)
        elems = [ident]
        index = {ident.tobytes(): 0}
        lmul = [[] for _ in range(self.rank)]
        k = 0
        while k < len(elems):
            w = elems[k]
            for i, s in enumerate(gens):
                sw = s[w]
                key = sw.tobytes()
                j = index.get(key)
                if j is None:
                    j = len(elems)
                    if j >= MAX_WEYL_ORDER:
                        raise ValueError(f"W({self.label}) exceeds {MAX_WEYL_ORDER} elements")
                    index[key] = j
                    elems.append(sw)
                lmul[i].append(j)
            k += 1
        self.perms = np.array(elems, dtype=np.int64)
        self._index = index
        self.lmul = np.array(lmul, dtype=np.int64)  # lmul[i, w] = s_i w
        order = len(elems)
        inv = np.empty_like(self.perms)
        inv[np.arange(order)[:, None], self.perms] = np.arange(nroots)[None, :]
        self.inverse = np.array([index[row.tobytes()] for row in inv], dtype=np.int64)
        self.rmul = self.inverse[self.lmul[:, self.inverse]]  # rmul[i, w] = w s_i
        self.lengths = (~R.is_positive(self.perms[:, : R.n_positive])).sum(axis=1)
        # theta acting on roots, and on W0 by conjugation
        self.theta_roots = []
        for p in self.pi0:
            self.theta_roots.append(
                np.array([R.index[tuple(r[p.index(i)] for i in range(self.rank))] for r in R.roots], dtype=np.int64)
            )
        self.conj = np.array([
            [index[(th[self.perms[w]][np.argsort(th)]).tobytes()] for w in range(order)]
            for th in self.theta_roots
        ], dtype=np.int64)

    # basic element operations --------------------------------------------------

    @property
    def order_w0(self) -> int:
        return len(self.perms)

    @property
    def order(self) -> int:
        return len(self.perms) * len(self.pi0)

    def element_index(self, perm: np.ndarray) -> int:
        return self._index[np.asarray(perm, dtype=np.int64).tobytes()]

    def compose(self, a: int, b: int) -> int:
        return self._index[self.perms[a][self.perms[b]].tobytes()]

    def mul(self, x: tuple, y: tuple) -> tuple:
        (w, t), (u, s) = x, y
        tt = self.pi0_index[tuple(self.pi0[t][self.pi0[s][i]] for i in range(self.rank))]
        return (self.compose(w, int(self.conj[t, u])), tt)

    def inv(self, x: tuple) -> tuple:
        w, t = x
        tinv = self.pi0_index[tuple(np.argsort(self.pi0[t]))]
        return (int(self.conj[tinv, self.inverse[w]]), tinv)

    def act_on_roots(self, x: tuple) -> np.ndarray:
        """Root permutation of (w, t): first t, then w."""
        w, t = x
        return self.perms[w][self.theta_roots[t]]

    def length(self, x) -> int:
        return int(self.lengths[x[0] if isinstance(x, tuple) else x])

    def theta_subset(self, t: int, X: Iterable[int]) -> frozenset:
        return frozenset(self.pi0[t][i] for i in X)

    def simple_roots_idx(self) -> np.ndarray:
        if "_simple" not in self.__dict__:
            self._simple = np.array([self.roots.simple_index(i) for i in range(self.rank)], dtype=np.int64)
            self._simple.flags.writeable = False
        return self._simple

    def parabolic_mask(self, X: Iterable[int]) -> np.ndarray:
        """Boolean mask over W0 of the parabolic subgroup W_X (inversions inside Phi_X)."""
        X = frozenset(X)
        cache = self.__dict__.setdefault("_parabolics", {})
        if X not in cache:
            R = self.roots
            if "_inverted" not in self.__dict__:
                self._inverted = ~R.is_positive(self.perms[:, : R.n_positive])
            inside = R.subsystem(X)[: R.n_positive]
            mask = ~(self._inverted & ~inside[None, :]).any(axis=1)
            mask.flags.writeable = False
            cache[X] = mask
        return cache[X]

    def parabolic_order(self, X: Iterable[int]) -> int:
        return int(self.parabolic_mask(X).sum())

    def subset_of_theta(self, t: int) -> tuple:
        return self.pi0[t]


# -- parabolic pairs and quasi-Levis --------------------------------------------------


@dataclass(frozen=True)
class ParabolicPair:
    X: frozenset
    omega: frozenset = frozenset({0})  # indices into g.pi0, a subgroup stabilizing X

    def to_json(self, g: ExtendedWeylGroup) -> dict:
        """Bourbaki (1-based) numbering; omega is given by generating permutations."""
        gens = _subgroup_generators(g, self.omega)
        return {"X": _one_based(self.X), "omega": [_one_based_perm(g.pi0[t]) for t in gens]}


@dataclass(frozen=True)
class LeviLabel:
    X: frozenset
    omega: frozenset
    semisimple_type: str

    def to_json(self, g: ExtendedWeylGroup) -> dict:
        return {
            "X": _one_based(self.X),
            "omega": [_one_based_perm(g.pi0[t]) for t in _subgroup_generators(g, self.omega)],
            "semisimple_type": self.semisimple_type,
        }


def _one_based(X) -> list[int]:
    return [i + 1 for i in sorted(X)]


def _one_based_perm(p) -> list[int]:
    return [i + 1 for i in p]


def pair_from_json(g: "ExtendedWeylGroup", data: dict) -> "ParabolicPair":
    X = frozenset(int(i) - 1 for i in data.get("X", []))
    gens = [g.pi0_index[tuple(int(i) - 1 for i in p)] for p in data.get("omega", [])]
    pair = ParabolicPair(X, frozenset(_close_idx(g, gens)))
    if not pair.omega <= stabilizer_pi0(g, X):
        raise ValueError("omega does not stabilize X")
    return pair


def _pi0_mul(g: ExtendedWeylGroup, a: int, b: int) -> int:
    pa, pb = g.pi0[a], g.pi0[b]
    return g.pi0_index[tuple(pa[pb[i]] for i in range(g.rank))]


def _pi0_inv(g: ExtendedWeylGroup, a: int) -> int:
    return g.pi0_index[tuple(int(x) for x in np.argsort(g.pi0[a]))]


def pi0_subgroups(g: ExtendedWeylGroup, within: Optional[Iterable[int]] = None) -> list[frozenset]:
    """All subgroups of pi0 (or of the subgroup ``within``)."""
    within = sorted(within) if within is not None else list(range(len(g.pi0)))
    subs = set()
    for k in range(len(within) + 1):
        for gens in itertools.combinations(within, k):
            subs.add(frozenset(_close_idx(g, gens)))
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def _subgroup_generators(g: ExtendedWeylGroup, omega: frozenset) -> list[int]:
    gens, current = [], {0}
    for t in sorted(omega):
        if t not in current:
            gens.append(t)
            current = set(_close_idx(g, gens))
    return gens


def _close_idx(g, gens):
    closure, frontier = {0}, [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _pi0_mul(g, x, s)
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    return closure


def stabilizer_pi0(g: ExtendedWeylGroup, X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    return frozenset(t for t in range(len(g.pi0)) if g.theta_subset(t, X) == X)


def all_subsets(rank: int) -> list[frozenset]:
    return [frozenset(c) for k in range(rank + 1) for c in itertools.combinations(range(rank), k)]


def enumerate_parabolic_pairs(g: ExtendedWeylGroup) -> list[ParabolicPair]:
    """All pairs (X, Omega) with Omega a subgroup of Stab_pi0(X)."""
    out = []
    for X in all_subsets(g.rank):
        for omega in pi0_subgroups(g, stabilizer_pi0(g, X)):
            out.append(ParabolicPair(X, omega))
    return out


def parabolic_pair_classes(g: ExtendedWeylGroup) -> list[list[ParabolicPair]]:
    """pi0-conjugacy classes of parabolic pairs: t.(X, Omega) = (tX, t Omega t^-1)."""
    pairs = enumerate_parabolic_pairs(g)
    seen, classes = set(), []
    for pair in pairs:
        if pair in seen:
            continue
        orbit = set()
        for t in range(len(g.pi0)):
            ti = _pi0_inv(g, t)
            orbit.add(ParabolicPair(
                g.theta_subset(t, pair.X),
                frozenset(_pi0_mul(g, _pi0_mul(g, t, o), ti) for o in pair.omega),
            ))
        seen |= orbit
        classes.append(sorted(orbit, key=lambda p: (sorted(p.X), sorted(p.omega))))
    return classes


def quasi_levi(g: ExtendedWeylGroup, X: Iterable[int]) -> LeviLabel:
    """Quasi-Levi Z_G(Z0(L0)) attached to the standard Levi L0 with simple roots X.

    Its pi0-part is the kernel of the pi0-action on the cocharacters of
    Z0(L0), which in fundamental-coweight coordinates are spanned by the
    coweights of the simple roots outside X.
    """
    X = frozenset(X)
    outside = [j for j in range(g.rank) if j not in X]
    basis = np.eye(g.rank, dtype=np.int64)[:, outside]
    omega = []
    for t, p in enumerate(g.pi0):
        mat = np.zeros((g.rank, g.rank), dtype=np.int64)
        mat[list(p), list(range(g.rank))] = 1  # coweight j -> coweight p[j]
        if (mat @ basis == basis).all():
            omega.append(t)
    return LeviLabel(X, frozenset(omega), semisimple_type(g.roots.cartan, X))


def conjugate_subsets(g: ExtendedWeylGroup, X: Iterable[int]) -> list[frozenset]:
    """Subsets X' with w(X) = X' for some w in W0."""
    X = sorted(X)
    if not X:
        return [frozenset()]
    simple = g.simple_roots_idx()
    images = g.perms[:, simple[X]]
    is_simple = np.isin(images, simple)
    ok = images[is_simple.all(axis=1)]
    pos = {int(s): i for i, s in enumerate(simple)}
    found = {frozenset(pos[int(k)] for k in row) for row in np.unique(ok, axis=0)}
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def levi_classes(g: ExtendedWeylGroup) -> list[list[frozenset]]:
    """W0-conjugacy classes of subsets of simple roots (standard Levis of G0)."""
    seen, classes = set(), []
    for X in all_subsets(g.rank):
        if X in seen:
            continue
        cls = conjugate_subsets(g, X)
        seen.update(cls)
        classes.append(cls)
    return classes


def quasi_levi_labels(g: ExtendedWeylGroup) -> list[LeviLabel]:
    """One quasi-Levi label per W0-class of standard Levis, at the minimal representative."""
    return [quasi_levi(g, min(cls, key=lambda s: (len(s), sorted(s)))) for cls in levi_classes(g)]


# -- double cosets -------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCoset:
    rep: tuple  # (w, theta) minimal-length representative
    length: int
    dim: int
    size: int


def _check_subset(g: ExtendedWeylGroup, X: Iterable[int]) -> frozenset:
    X = frozenset(int(i) for i in X)
    if any(i < 0 or i >= g.rank for i in X):
        raise ValueError(f"{sorted(X)} is not a subset of the simple roots of {g.label}")
    return X


def _minimal_reps_component(g: ExtendedWeylGroup, XM: frozenset, J: frozenset) -> np.ndarray:
    """w in W0 with w^-1(alpha_i) > 0 for i in XM and w(alpha_j) > 0 for j in J."""
    R = g.roots
    simple = g.simple_roots_idx()
    ok = np.ones(g.order_w0, dtype=bool)
    if J:
        ok &= R.is_positive(g.perms[:, simple[sorted(J)]]).all(axis=1)
    if XM:
        inv_perms = g.perms[g.inverse]
        ok &= R.is_positive(inv_perms[:, simple[sorted(XM)]]).all(axis=1)
    return np.nonzero(ok)[0]


def reduce_to_minimal(g: ExtendedWeylGroup, x: tuple, XM: frozenset, XL: frozenset) -> tuple:
    """Descend within W_XM x W_XL to the minimal-length element."""
    w, t = x
    J = g.theta_subset(t, XL)
    changed = True
    while changed:
        changed = False
        for i in XM:
            v = int(g.lmul[i, w])
            if g.lengths[v] < g.lengths[w]:
                w, changed = v, True
        for j in J:
            v = int(g.rmul[j, w])
            if g.lengths[v] < g.lengths[w]:
                w, changed = v, True
    return (w, t)


def _root_masks(g: ExtendedWeylGroup, X: Iterable[int]) -> np.ndarray:
    """Roots of the standard parabolic with Levi X: Phi_X union Phi+."""
    R = g.roots
    mask = R.subsystem(X).copy()
    mask[: R.n_positive] = True
    return mask


def dim_QwP(g: ExtendedWeylGroup, XM: Iterable[int], x, XL: Iterable[int]) -> int:
    """dim(Q x P) for standard parabolics Q, P with Levis XM, XL, counted on roots."""
    x = x if isinstance(x, tuple) else (int(x), 0)
    phi_q = _root_masks(g, XM)
    phi_p = _root_masks(g, XL)
    image = np.zeros_like(phi_p)
    image[g.act_on_roots(x)[phi_p]] = True
    return int(g.rank + phi_q.sum() + phi_p.sum() - (phi_q & image).sum())


def _omega_merge(g, reps, XM, XL, omega_M, omega_L):
    # union-find over minimal representatives under the pi0 parts of both parabolics
    parent = {r: r for r in reps}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for r in reps:
        for o in omega_M:
            y = reduce_to_minimal(g, g.mul((0, o), r), XM, XL)
            parent[find(y)] = find(r)
        for o in omega_L:
            y = reduce_to_minimal(g, g.mul(r, (0, o)), XM, XL)
            parent[find(y)] = find(r)
    groups = {}
    for r in reps:
        groups.setdefault(find(r), []).append(r)
    return list(groups.values())


def double_cosets(
    g: ExtendedWeylGroup,
    XM: Iterable[int],
    XL: Iterable[int],
    omega_M: Iterable[int] = (0,),
    omega_L: Iterable[int] = (0,),
) -> list[DoubleCoset]:
    """Minimal representatives of (W_XM Omega_M) \\ W / (W_XL Omega_L).

    Ordered by nondecreasing dim(Q w P), then length, then index, so that a
    double coset contained in the closure of another comes first.
    """
    XM, XL = _check_subset(g, XM), _check_subset(g, XL)
    omega_M, omega_L = frozenset(omega_M) | {0}, frozenset(omega_L) | {0}
    for om, X in ((omega_M, XM), (omega_L, XL)):
        if not om <= stabilizer_pi0(g, X):
            raise ValueError("Omega must stabilize X")
    reps = []
    for t in range(len(g.pi0)):
        J = g.theta_subset(t, XL)
        reps.extend((int(w), t) for w in _minimal_reps_component(g, XM, J))
    order_M = g.parabolic_order(XM)
    order_L = g.parabolic_order(XL)
    sizes = {}
    for w, t in reps:
        J = g.theta_subset(t, XL)
        common = _common_simple(g, w, XM, J)
        sizes[(w, t)] = order_M * order_L // g.parabolic_order(common)
    if len(omega_M) > 1 or len(omega_L) > 1:
        groups = _omega_merge(g, reps, XM, XL, sorted(omega_M), sorted(omega_L))
        merged = []
        for grp in groups:
            rep = min(grp, key=lambda r: (g.lengths[r[0]], r[1], r[0]))
            # the union of the W_M x W_L double cosets in the group
            merged.append((rep, sum(sizes[r] for r in grp)))
    else:
        merged = [(r, sizes[r]) for r in reps]
    out = [DoubleCoset(r, int(g.lengths[r[0]]), dim_QwP(g, XM, r, XL), s) for r, s in merged]
    out.sort(key=lambda d: (d.dim, d.length, d.rep[1], d.rep[0]))
    return out


def _common_simple(g: ExtendedWeylGroup, w: int, XM: frozenset, J: frozenset) -> frozenset:
    """Simple roots i in XM with w^-1(alpha_i) a simple root in J."""
    simple = g.simple_roots_idx()
    winv = g.perms[g.inverse[w]]
    pos = {int(s): i for i, s in enumerate(simple)}
    out = set()
    for i in XM:
        k = int(winv[simple[i]])
        if k in pos and pos[k] in J:
            out.add(i)
    return frozenset(out)


# -- Mackey terms -------------------------------------------------------------------------


@dataclass(frozen=True)
class MackeyTerm:
    w: tuple
    levi_MwL: LeviLabel
    parabolic_in_M: tuple  # root indices of M n wP
    parabolic_in_wL: tuple  # root indices of Q n wL

    def to_json(self, g: ExtendedWeylGroup) -> dict:
        return {
            "w": element_json(g, self.w),
            "levi_MwL": self.levi_MwL.to_json(g),
            "parabolic_in_M": [list(g.roots.roots[k]) for k in self.parabolic_in_M],
            "parabolic_in_wL": [list(g.roots.roots[k]) for k in self.parabolic_in_wL],
        }


def _omega_intersection(g, x, omega_M, omega_L, XL) -> frozenset:
    # o in Omega_M with x^-1 (1, o) x in W_XL Omega_L
    out = set()
    xinv = g.inv(x)
    mask_L = g.parabolic_mask(XL)
    for o in omega_M:
        u, s = g.mul(g.mul(xinv, (0, o)), x)
        if s in omega_L and mask_L[u]:
            out.add(o)
    return frozenset(out)


def mackey_terms(g: ExtendedWeylGroup, P: ParabolicPair, Q: ParabolicPair) -> list[MackeyTerm]:
    """Index data of res^G_M ind^G_L = sum_w ind res Ad(w^-1), L the Levi of P, M that of Q."""
    XL, XM = P.X, Q.X
    phi_P = _root_masks(g, XL)
    phi_Q = _root_masks(g, XM)
    phi_L = g.roots.subsystem(XL)
    phi_M = g.roots.subsystem(XM)
    terms = []
    for dc in double_cosets(g, XM, XL, Q.omega, P.omega):
        x = dc.rep
        perm = g.act_on_roots(x)

        def image(mask):
            out = np.zeros_like(mask)
            out[perm[mask]] = True
            return out

        w_L, w_P = image(phi_L), image(phi_P)
        common = _common_simple(g, x[0], XM, g.theta_subset(x[1], XL))
        if not (g.roots.subsystem(common) == (phi_M & w_L)).all():
            raise AssertionError("intersection of Levis is not standard")
        omega = _omega_intersection(g, x, Q.omega, P.omega, XL)
        label = LeviLabel(common, omega, semisimple_type(g.roots.cartan, common))
        terms.append(MackeyTerm(
            x,
            label,
            tuple(np.nonzero(phi_M & w_P)[0].tolist()),
            tuple(np.nonzero(phi_Q & w_L)[0].tolist()),
        ))
    return terms


def reduced_word(g: ExtendedWeylGroup, w: int) -> list[int]:
    """A reduced word (0-based simple reflections) for w in W0."""
    word = []
    while g.lengths[w]:
        for i in range(g.rank):
            v = int(g.lmul[i, w])
            if g.lengths[v] < g.lengths[w]:
                word.append(i)
                w = v
                break
    return word


def element_json(g: ExtendedWeylGroup, x: tuple) -> dict:
    """(w, theta) as a 1-based reduced word for w and the permutation theta."""
    return {"word": [i + 1 for i in reduced_word(g, x[0])], "theta": _one_based_perm(g.pi0[x[1]])}


def composition_subset(composition: Sequence[int]) -> frozenset:
    """Simple roots of the type-A Levi GL_{c_1} x ... x GL_{c_k}."""
    cuts, pos = set(), 0
    for c in composition[:-1]:
        pos += c
        cuts.add(pos - 1)
    n = sum(composition) - 1
    return frozenset(i for i in range(n) if i not in cuts)
