"""Twisted extended quotients (X // Gamma)_kappa of finite group actions.

Twisted quotient data consist of a 2-cocycle kappa_x on every stabilizer
Gamma_x and algebra isomorphisms theta_{g,x} : C[Gamma_x, kappa_x] ->
C[Gamma_{gx}, kappa_{gx}]. Every theta is monomial here:

    theta_{g,x}(T_h) = zeta_m^{s(h)} T_{phi(h)}

with phi a bijection Gamma_x -> Gamma_{gx} and s an exponent table. An
irreducible rho is tracked through its character on the kappa-regular
elements, so rho o theta^-1 needs no matrix model.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .cyclotomic import Cyclotomic
from .projrep import (
    Cocycle,
    FiniteGroup,
    are_cohomologous,
    cocycle_violations,
    irrep_data,
    kappa_regular_classes,
    twisted_irreps,
)


class GroupAction:
    """Gamma acting on {0, ..., k-1}; ``table[g, x]`` is g.x."""

    def __init__(self, group: FiniteGroup, table, validate: bool = True):
        self.group = group
        self.table = np.asarray(table, dtype=np.int64)
        if self.table.ndim != 2 or self.table.shape[0] != group.order:
            raise ValueError("action table must have one row per group element")
        self.npoints = self.table.shape[1]
        if validate:
            self._validate()
        self._stab = [np.nonzero(self.table[:, x] == x)[0] for x in range(self.npoints)]
        self._stab_groups = {}

    def _validate(self):
        t, k = self.table, self.npoints
        if t.size and (t.min() < 0 or t.max() >= k):
            raise ValueError("action table entries out of range")
        if (t[self.group.identity] != np.arange(k)).any():
            raise ValueError("identity does not act trivially")
        # (gh).x == g.(h.x)
        lhs = t[self.group.table]  # [g, h, x] -> (gh).x
        rhs = t[:, t]  # [g, h, x] -> g.(h.x)
        if (lhs != rhs).any():
            raise ValueError("action is not compatible with the group law")

    def stabilizer(self, x: int) -> np.ndarray:
        return self._stab[x]

    def stabilizer_group(self, x: int) -> tuple[FiniteGroup, list[int]]:
        if x not in self._stab_groups:
            self._stab_groups[x] = self.group.subgroup(self._stab[x].tolist())
        return self._stab_groups[x]

    def orbits(self) -> list[list[int]]:
        seen, out = np.zeros(self.npoints, dtype=bool), []
        for x in range(self.npoints):
            if not seen[x]:
                orb = sorted(set(self.table[:, x].tolist()))
                seen[orb] = True
                out.append(orb)
        return out

    def set_stabilizer(self, block: Sequence[int]) -> list[int]:
        block = set(block)
        return [g for g in range(self.group.order) if set(self.table[g, list(block)].tolist()) == block]

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "action": self.table.tolist()}

    @classmethod
    def from_json(cls, data) -> "GroupAction":
        return cls(FiniteGroup.from_json(data["group"]), data["action"])


class Violation(NamedTuple):
    condition: str  # "cocycle", "theta", "(1)", "(2)", "(3)"
    where: tuple


@dataclass
class TwistedQuotientData:
    """Strict twisted quotient data, stored densely over global group indices.

    kappa[x, a, b] is meaningful for a, b in Gamma_x; phi[g, x, h] is the
    global index of the image of h in Gamma_x (-1 elsewhere); scal[g, x, h]
    the exponent of the scalar. ``inner`` optionally records, for g in
    Gamma_x, an element u of Gamma_x with theta_{g,x} = Ad(T_u).
    """

    action: GroupAction
    modulus: int
    kappa: np.ndarray
    phi: np.ndarray
    scal: np.ndarray
    inner: dict = field(default_factory=dict)

    @classmethod
    def trivial(cls, action: GroupAction, modulus: int = 1) -> "TwistedQuotientData":
        return cls.from_parts(action, modulus)

    @classmethod
    def from_parts(cls, action: GroupAction, modulus: int, cocycles: Optional[dict] = None,
                   theta: Optional[dict] = None, inner: Optional[dict] = None) -> "TwistedQuotientData":
        """Assemble data from per-point cocycles and per-(g, x) theta entries.

        ``cocycles[x]`` is a table on Gamma_x in sorted-stabilizer order.
        ``theta[(g, x)]`` is ``(images, scalars)`` with global indices of the
        images of the sorted stabilizer of x. Missing theta entries default to
        conjugation by g with no scalars.
        """
        G = action.group
        n, k = G.order, action.npoints
        kappa = np.zeros((k, n, n), dtype=np.int64)
        for x, table in (cocycles or {}).items():
            stab = action.stabilizer(x)
            kappa[x][np.ix_(stab, stab)] = np.asarray(table, dtype=np.int64) % modulus
        ginv = G.inverse
        phi = np.full((n, k, n), -1, dtype=np.int64)
        scal = np.zeros((n, k, n), dtype=np.int64)
        for x in range(k):
            stab = action.stabilizer(x)
            for g in range(n):
                phi[g, x, stab] = G.table[G.table[g, stab], ginv[g]]
        for (g, x), (images, scalars) in (theta or {}).items():
            stab = action.stabilizer(x)
            phi[g, x, stab] = images
            scal[g, x, stab] = np.asarray(scalars, dtype=np.int64) % modulus
        return cls(action, modulus, kappa, phi, scal, dict(inner or {}))

    def local_cocycle(self, x: int) -> Cocycle:
        stab = self.action.stabilizer(x)
        return Cocycle(self.modulus, self.kappa[x][np.ix_(stab, stab)])

    def to_json(self) -> dict:
        a = self.action
        theta = []
        for g in range(a.group.order):
            for x in range(a.npoints):
                stab = a.stabilizer(x)
                entry = {"gamma": g, "x": x, "map": self.phi[g, x, stab].tolist(),
                         "scalars": self.scal[g, x, stab].tolist()}
                if (g, x) in self.inner:
                    entry["inner_witness"] = self.inner[(g, x)]
                theta.append(entry)
        return {
            **a.to_json(),
            "modulus": self.modulus,
            "cocycles": [{"x": x, "table": self.local_cocycle(x).table.tolist()} for x in range(a.npoints)],
            "theta": theta,
        }

    @classmethod
    def from_json(cls, data) -> "TwistedQuotientData":
        action = GroupAction.from_json(data)
        if "lifts" in data:
            kappa0 = {int(e["x"]): Cocycle(int(e.get("modulus", data.get("modulus", 1))), e["table"])
                      for e in data["lifts"]["base_cocycles"]}
            sigma = {int(x): int(g) for x, g in data["lifts"].get("sigma", {}).items()}
            return strict_from_lifts(action, kappa0, sigma or None)
        cocycles = {int(e["x"]): e["table"] for e in data.get("cocycles", [])}
        theta, inner = {}, {}
        for e in data.get("theta", []):
            key = (int(e["gamma"]), int(e["x"]))
            theta[key] = (e["map"], e.get("scalars", [0] * len(e["map"])))
            if "inner_witness" in e:
                inner[key] = int(e["inner_witness"])
        return cls.from_parts(action, int(data.get("modulus", 1)), cocycles, theta, inner)


# -- validation ---------------------------------------------------------------------------


def _conj_exponent(G: FiniteGroup, kappa: np.ndarray, u: int, h: int) -> int:
    # T_u T_h T_u^-1 = zeta^e T_{u h u^-1}
    ui = int(G.inverse[u])
    uh = G.table[u, h]
    return int(kappa[u, h] + kappa[uh, ui] - kappa[u, ui])


def validate(data: TwistedQuotientData) -> list[Violation]:
    """All violations of the definition; empty iff the data are valid."""
    a, G, m = data.action, data.action.group, data.modulus
    n, k = G.order, a.npoints
    out: list[Violation] = []
    for x in range(k):
        sub, _ = a.stabilizer_group(x)
        if cocycle_violations(sub, data.local_cocycle(x)):
            out.append(Violation("cocycle", (x,)))
    if out:
        return out
    ginv = G.inverse
    cohomologous: dict = {}
    for g in range(n):
        for x in range(k):
            y = int(a.table[g, x])
            stab, tgt = a.stabilizer(x), a.stabilizer(y)
            img = data.phi[g, x, stab]
            if sorted(img.tolist()) != tgt.tolist():
                out.append(Violation("theta", (g, x)))
                continue
            ka, kb = data.kappa[x], data.kappa[y]
            # (1): kappa_{gx} cohomologous to g_* kappa_x
            conj = G.table[G.table[ginv[g], tgt], g]  # preimage under Ad(g)
            target, pushed = kb[np.ix_(tgt, tgt)], ka[np.ix_(conj, conj)]
            if m > 1 and ((target - pushed) % m).any():
                key = (y, ((target - pushed) % m).tobytes())
                if key not in cohomologous:
                    sub, _ = a.stabilizer_group(y)
                    cohomologous[key] = are_cohomologous(sub, Cocycle(m, target), Cocycle(m, pushed))
                if not cohomologous[key]:
                    out.append(Violation("(1)", (g, x)))
            # theta an algebra map: phi a homomorphism, the scalars a coboundary witness
            s = data.scal[g, x]
            hom = G.table[np.ix_(stab, stab)]
            pa = data.phi[g, x]
            ok_hom = (pa[hom] == G.table[np.ix_(pa[stab], pa[stab])]).all()
            lhs = (s[stab][:, None] + s[stab][None, :] + kb[np.ix_(pa[stab], pa[stab])]) % m
            rhs = (ka[np.ix_(stab, stab)] + s[hom]) % m
            if not ok_hom or (lhs != rhs).any() or s[G.identity] % m:
                out.append(Violation("theta", (g, x)))
    if out:
        return out
    # (2): theta_{g,x} inner for g in Gamma_x
    for x in range(k):
        stab = a.stabilizer(x)
        if len(stab) == 1:
            continue
        chars, _ = _local_characters(data, x)
        for g in stab:
            g = int(g)
            u = data.inner.get((g, x))
            if u is not None:
                ok = u in stab.tolist() and all(
                    data.phi[g, x, h] == G.table[G.table[u, h], int(G.inverse[u])]
                    and (data.scal[g, x, h] - _conj_exponent(G, data.kappa[x], u, h)) % m == 0
                    for h in stab
                )
            else:
                # inner iff it fixes the centre iff it fixes every irreducible character
                ok = all(_twist_character(data, g, x, row, inverse=False) == row for row in chars)
            if not ok:
                out.append(Violation("(2)", (g, x)))
    # (3): theta_{g', gx} o theta_{g, x} = theta_{g'g, x}
    for x in range(k):
        stab = a.stabilizer(x)
        gx = a.table[:, x]
        first = data.phi[:, x, :][:, stab]  # [g, h]
        comp = data.phi[np.arange(n)[:, None, None], gx[None, :, None], first[None, :, :]]  # [g', g, h]
        direct = data.phi[G.table[:, :], x][:, :, stab]  # [g', g, h] = phi[g'g, x, h]
        s_first = data.scal[:, x, :][:, stab]
        s_comp = data.scal[np.arange(n)[:, None, None], gx[None, :, None], first[None, :, :]]
        s_direct = data.scal[G.table[:, :], x][:, :, stab]
        bad = (comp != direct).any(axis=2) | ((s_first[None] + s_comp - s_direct) % m != 0).any(axis=2)
        for g2, g1 in zip(*np.nonzero(bad)):
            out.append(Violation("(3)", (int(g1), int(g2), x)))
    return out


# -- characters along theta -------------------------------------------------------------------


def _local_characters(data: TwistedQuotientData, x: int):
    """Characters of Irr C[Gamma_x, kappa_x] as dicts over global stabilizer elements."""
    cache = data.__dict__.setdefault("_chars", {})
    if x not in cache:
        sub, emb = data.action.stabilizer_group(x)
        kap = data.local_cocycle(x)
        irr = twisted_irreps(sub, kap) if data.modulus > 1 else irrep_data(sub)
        regular = sorted(e for c in kappa_regular_classes(sub, kap) for e in c)
        rows = []
        for row in irr.characters:
            lifted = [v.lift(_lcm(v.n, data.modulus)) for v in row]
            rows.append(tuple((emb[i], lifted[i]) for i in range(len(emb))))
        cache[x] = ([dict(r) for r in rows], [emb[i] for i in regular])
    return cache[x]


def _lcm(a, b):
    return a * b // gcd(a, b)


def _twist_character(data: TwistedQuotientData, g: int, x: int, chi: dict, inverse: bool = True) -> dict:
    """Character of rho o theta_{g,x}^-1 on Gamma_{gx} (or of rho o theta_{g,x} if not inverse)."""
    m = data.modulus
    stab = data.action.stabilizer(x)
    out = {}
    for h in stab:
        h = int(h)
        k_ = int(data.phi[g, x, h])
        s = int(data.scal[g, x, h])
        if inverse:
            # theta^-1(T_k) = zeta^-s T_h
            out[k_] = Cyclotomic.root_of_unity(m, -s) * chi[h]
        else:
            # theta(T_h) = zeta^s T_k, for g in Gamma_x
            out[h] = Cyclotomic.root_of_unity(m, s) * chi[k_]
    return out


def _char_key(chi: dict, regular: Sequence[int]) -> tuple:
    N = 1
    for h in regular:
        N = _lcm(N, chi[h].n)
    return tuple(chi[h].key(N) for h in regular)


# -- build ------------------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class ExtendedQuotientPoint:
    x: int
    irrep: int  # index into the irreducibles of C[Gamma_x, kappa_x]
    dim: int

    def to_json(self) -> dict:
        return {"x": self.x, "irrep": self.irrep, "dim": self.dim}


def _pairs(data: TwistedQuotientData, points: Sequence[int]):
    pairs, index = [], {}
    for x in points:
        chars, regular = _local_characters(data, x)
        keyed = sorted(range(len(chars)), key=lambda i: _char_key(chars[i], regular))
        for i in keyed:
            index[(x, _char_key(chars[i], regular))] = len(pairs)
            pairs.append((x, i))
    return pairs, index


def _orbit_classes(data: TwistedQuotientData, points, gammas) -> list[list[int]]:
    """Union-find classes of pairs (x, rho), x in ``points``, under the listed elements."""
    pairs, index = _pairs(data, points)
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    pset = set(points)
    for p, (x, i) in enumerate(pairs):
        chars, _ = _local_characters(data, x)
        for g in gammas:
            y = int(data.action.table[g, x])
            if y not in pset:
                continue
            chi = _twist_character(data, g, x, chars[i])
            _, reg_y = _local_characters(data, y)
            q = index.get((y, _char_key(chi, reg_y)))
            if q is None:
                raise ValueError(f"theta_{g},{x} does not carry irreducibles to irreducibles")
            parent[find(q)] = find(p)
    groups = {}
    for p in range(len(pairs)):
        groups.setdefault(find(p), []).append(p)
    return [sorted(v) for v in groups.values()], pairs


def _canonical(data, classes, pairs) -> list[ExtendedQuotientPoint]:
    out = []
    for cls in classes:
        x, i = pairs[min(cls)]  # pairs are listed by x, then character key
        chars, _ = _local_characters(data, x)
        dim = chars[i][data.action.group.identity]
        out.append(ExtendedQuotientPoint(x, i, int(dim.coeffs[0])))
    return sorted(out)


def build(action: GroupAction, data: Optional[TwistedQuotientData] = None, check: bool = True) -> list[ExtendedQuotientPoint]:
    """Points of (X // Gamma)_kappa, one canonical representative per orbit."""
    data = data if data is not None else TwistedQuotientData.trivial(action)
    if check:
        bad = validate(data)
        if bad:
            raise ValueError(f"invalid twisted quotient data: {bad[:5]}")
    gens = action.group.generators()
    classes, pairs = _orbit_classes(data, list(range(action.npoints)), gens)
    return _canonical(data, classes, pairs)


def plain_extended_quotient(action: GroupAction) -> list[tuple[int, int]]:
    """Pairs (orbit minimum, dim) over orbit representatives and Irr(Gamma_x)."""
    out = []
    for orb in action.orbits():
        sub, _ = action.stabilizer_group(orb[0])
        out.extend((orb[0], d) for d in irrep_data(sub).dims)
    return sorted(out)


def commuting_pair_count(action: GroupAction) -> int:
    """#Gamma-orbits on {(g, x) : g x = x}, computed without characters."""
    G, t = action.group, action.table
    seen = set()
    count = 0
    for x in range(action.npoints):
        for g in action.stabilizer(x):
            if (int(g), x) in seen:
                continue
            count += 1
            for c in range(G.order):
                seen.add((G.conjugate(int(g), c), int(t[c, x])))
    return count


def trivial_quotient_compare(action: GroupAction) -> bool:
    pts = build(action)
    by_dims = sorted((p.x, p.dim) for p in pts)
    return len(pts) == commuting_pair_count(action) and by_dims == plain_extended_quotient(action)


# -- two-step quotients ---------------------------------------------------------------------


def check_block_condition(action: GroupAction, blocks: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """(block, x) pairs with N_Gamma(X_i)_x != Gamma_x."""
    flat = sorted(x for b in blocks for x in b)
    if flat != list(range(action.npoints)):
        raise ValueError("blocks must partition the point set")
    bad = []
    for i, block in enumerate(blocks):
        normal = set(action.set_stabilizer(block))
        for x in block:
            if not set(action.stabilizer(x).tolist()) <= normal:
                bad.append((i, x))
    return bad


def two_step_quotient(action: GroupAction, blocks: Sequence[Sequence[int]],
                      data: Optional[TwistedQuotientData] = None) -> list[ExtendedQuotientPoint]:
    """Form Y = disjoint union of (X_i // N_Gamma(X_i))_kappa, then the ordinary Gamma-quotient of Y."""
    bad = check_block_condition(action, blocks)
    if bad:
        raise ValueError(f"stabilizer condition fails at (block, point) {bad[:5]}")
    data = data if data is not None else TwistedQuotientData.trivial(action)
    # blockwise quotients
    y_points, y_of_pair = [], {}
    for block in blocks:
        normal = action.set_stabilizer(block)
        classes, pairs = _orbit_classes(data, sorted(block), normal)
        for cls in classes:
            for p in cls:
                y_of_pair[pairs[p]] = len(y_points)
            y_points.append(pairs[min(cls)])
    # the further Gamma-quotient of Y
    parent = list(range(len(y_points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    G = action.group
    all_pairs, index = _pairs(data, range(action.npoints))
    for yi, (x, i) in enumerate(y_points):
        chars, _ = _local_characters(data, x)
        for g in G.generators():
            z = int(action.table[g, x])
            chi = _twist_character(data, g, x, chars[i])
            _, reg = _local_characters(data, z)
            target = all_pairs[index[(z, _char_key(chi, reg))]]
            parent[find(y_of_pair[target])] = find(yi)
    merged = {}
    for yi in range(len(y_points)):
        merged.setdefault(find(yi), []).append(yi)
    # canonical representative over all pairs lying over the merged class
    pair_pos = {p: k for k, p in enumerate(all_pairs)}
    classes = [[pair_pos[p] for p, y in y_of_pair.items() if find(y) == root] for root in merged]
    return _canonical(data, classes, all_pairs)


# -- strict data from lifts --------------------------------------------------------------------


def strict_from_lifts(action: GroupAction, base_cocycles: dict, sigma: Optional[dict] = None) -> TwistedQuotientData:
    """Strict data from basepoints x0 with cocycles kappa_0 on Gamma_{x0}.

    For x = sigma_x x0 set kappa_x = (sigma_x)_* kappa_0 and let theta_{g,x}
    be the algebra map induced by conjugation with sigma_{gx} sigma_x^-1.
    ``sigma`` defaults to the first element (by index) carrying x0 to x.
    """
    G = action.group
    n = G.order
    m = lcm(*[c.modulus for c in base_cocycles.values()]) if base_cocycles else 1
    base_of = {}
    for orb in action.orbits():
        roots = [x0 for x0 in base_cocycles if x0 in orb]
        if len(roots) > 1:
            raise ValueError(f"two basepoints in one orbit: {roots}")
        base_of.update({x: (roots[0] if roots else orb[0]) for x in orb})
    sig = {}
    for x in range(action.npoints):
        x0 = base_of[x]
        if sigma and x in sigma:
            if action.table[sigma[x], x0] != x:
                raise ValueError(f"sigma_{x} does not carry {x0} to {x}")
            sig[x] = sigma[x]
        else:
            sig[x] = int(np.nonzero(action.table[:, x0] == x)[0][0])
    ginv = G.inverse
    cocycles = {}
    for x in range(action.npoints):
        x0 = base_of[x]
        stab0 = action.stabilizer(x0)
        if x0 in base_cocycles:
            c = base_cocycles[x0]
            full = np.zeros((n, n), dtype=np.int64)
            full[np.ix_(stab0, stab0)] = c.table * (m // c.modulus)
        else:
            full = np.zeros((n, n), dtype=np.int64)
        s = sig[x]
        stab = action.stabilizer(x)
        pre = G.table[G.table[ginv[s], stab], s]  # sigma^-1 a sigma
        cocycles[x] = full[np.ix_(pre, pre)]
    theta = {}
    for g in range(n):
        for x in range(action.npoints):
            y = int(action.table[g, x])
            c = G.table[sig[y], ginv[sig[x]]]
            stab = action.stabilizer(x)
            theta[(g, x)] = (G.table[G.table[c, stab], ginv[c]], np.zeros(len(stab), dtype=np.int64))
    return TwistedQuotientData.from_parts(action, m, cocycles, theta)


def random_action(rng, group: FiniteGroup, npoints: int) -> GroupAction:
    """A random action: a disjoint union of coset spaces Gamma/H for random cyclic or generated H."""
    cols = []
    while len(cols) < npoints:
        for _ in range(20):
            gens = rng.choice(group.order, size=int(rng.integers(0, 3)), replace=True).tolist()
            H = group.generated_subgroup(gens)
            if group.order // len(H) <= npoints - len(cols):
                break
        else:
            H = list(range(group.order))
        cosets, label = [], {}
        for g in range(group.order):
            if g not in label:
                coset = sorted(int(group.table[g, h]) for h in H)
                for c in coset:
                    label[c] = len(cosets)
                cosets.append(coset)
        base = len(cols)
        for j, coset in enumerate(cosets):
            cols.append([base + label[int(group.table[g, coset[0]])] for g in range(group.order)])
    return GroupAction(group, np.array(cols, dtype=np.int64).T)
