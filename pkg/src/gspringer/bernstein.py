"""Assembly of Bernstein-type blocks from synthetic cuspidal-datum catalogs.

A catalog entry models one inertial class: a cocharacter lattice Lambda of
rank r (the unramified twists form the torus Lambda (x) C^x), a finite group
W acting on Lambda and on a finite label set S, and for every label a finite
group of torsion points of the torus fixing it. Components are quotients of
the torus by isotropy x| stabilizer, and the points over an entry are the
twisted extended quotient (S // W)_kappa.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .extquot import (
    ExtendedQuotientPoint,
    GroupAction,
    TwistedQuotientData,
    build,
    strict_from_lifts,
    two_step_quotient,
)
from .projrep import Cocycle, FiniteGroup

Torsion = tuple  # tuple of Fractions in [0, 1)


def _torsion(v) -> Torsion:
    return tuple(Fraction(x) % 1 for x in v)


def _close_torsion(gens: Sequence[Torsion], rank: int) -> list[Torsion]:
    zero = tuple(Fraction(0) for _ in range(rank))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for t in frontier:
            for s in gens:
                u = tuple((a + b) % 1 for a, b in zip(t, s))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen)


@dataclass
class CatalogPoint:
    label: str
    isotropy: list  # generators, torsion points of the torus
    tag: Optional[str] = None  # central-character tag
    shift: Optional[str] = None  # unnormalized-support shift, opaque


@dataclass
class CatalogEntry:
    key: str
    levi: str
    rank: int
    group: FiniteGroup
    lattice_action: np.ndarray  # [g] -> r x r integer matrix
    points: list
    point_action: np.ndarray  # [g, s]
    cocycles: dict = field(default_factory=dict)  # label -> Cocycle on the sorted stabilizer
    normal: Optional[list] = None  # optional normal subgroup of W

    def __post_init__(self):
        self.label_index = {p.label: i for i, p in enumerate(self.points)}
        if len(self.label_index) != len(self.points):
            raise ValueError(f"duplicate labels in entry {self.key}")
        self.action = GroupAction(self.group, self.point_action)
        self._validate()

    def _validate(self):
        G, A = self.group, self.lattice_action
        r = self.rank
        if A.shape != (G.order, r, r):
            raise ValueError(f"entry {self.key}: lattice action needs one {r}x{r} matrix per element")
        prod = np.einsum("gij,hjk->ghik", A, A)
        if (prod != A[G.table]).any():
            raise ValueError(f"entry {self.key}: lattice action is not a homomorphism")
        if r and any(round(abs(np.linalg.det(m))) != 1 for m in A.astype(float)):
            raise ValueError(f"entry {self.key}: lattice action is not by automorphisms")
        for g in range(G.order):
            for s, p in enumerate(self.points):
                moved = {self._act_torsion(g, t) for t in self.isotropy(p.label)}
                target = set(self.isotropy(self.points[self.action.table[g, s]].label))
                if moved != target:
                    raise ValueError(f"entry {self.key}: isotropy is not equivariant at ({g}, {p.label})")
        if self.normal is not None:
            N = set(self.normal)
            if any(G.conjugate(n, g) not in N for n in N for g in range(G.order)):
                raise ValueError(f"entry {self.key}: designated subgroup is not normal")

    def isotropy(self, label: str) -> list[Torsion]:
        p = self.points[self._index(label)]
        return _close_torsion([_torsion(v) for v in p.isotropy], self.rank)

    def _index(self, label: str) -> int:
        if label not in self.label_index:
            raise KeyError(f"label {label!r} not in entry {self.key}")
        return self.label_index[label]

    def _act_torsion(self, g: int, t: Torsion) -> Torsion:
        m = self.lattice_action[g]
        return tuple(sum((int(m[i, j]) * t[j] for j in range(self.rank)), Fraction(0)) % 1 for i in range(self.rank))

    # json ---------------------------------------------------------------------------

    @classmethod
    def from_json(cls, data) -> "CatalogEntry":
        group = FiniteGroup.from_json(data["group"])
        rank = int(data.get("rank", 0))
        if "lattice_action" in data:
            lat = np.array(data["lattice_action"], dtype=np.int64).reshape(group.order, rank, rank)
        else:
            lat = np.tile(np.eye(rank, dtype=np.int64), (group.order, 1, 1))
        points = [CatalogPoint(p["label"], [list(map(Fraction, v)) for v in p.get("isotropy", [])],
                               p.get("tag"), p.get("shift")) for p in data["points"]]
        if "point_action" in data:
            pact = np.array(data["point_action"], dtype=np.int64)
        else:
            pact = np.tile(np.arange(len(points)), (group.order, 1))
        cocycles = {c["label"]: Cocycle(int(c["modulus"]), c["table"]) for c in data.get("cocycles", [])}
        return cls(str(data["key"]), str(data.get("levi", data["key"])), rank, group, lat, points, pact,
                   cocycles, data.get("normal"))

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "levi": self.levi,
            "rank": self.rank,
            "group": self.group.to_json(),
            "lattice_action": self.lattice_action.tolist(),
            "points": [
                {k: v for k, v in {
                    "label": p.label,
                    "isotropy": [[str(Fraction(x)) for x in v] for v in p.isotropy],
                    "tag": p.tag,
                    "shift": p.shift,
                }.items() if v is not None}
                for p in self.points
            ],
            "point_action": self.point_action.tolist(),
            "cocycles": [{"label": k, **c.to_json()} for k, c in sorted(self.cocycles.items())],
            **({"normal": self.normal} if self.normal is not None else {}),
        }


def load_catalog(data) -> list[CatalogEntry]:
    if isinstance(data, str):
        data = json.loads(data)
    entries = [CatalogEntry.from_json(e) for e in data.get("entries", [])]
    keys = [e.key for e in entries]
    if len(set(keys)) != len(keys):
        dup = sorted({k for k in keys if keys.count(k) > 1})
        raise ValueError(f"duplicate inertial-class keys: {dup}")
    return entries


# -- components and stabilizers -------------------------------------------------------


@dataclass
class ComponentDescription:
    rank: int
    group: FiniteGroup  # isotropy x| stabilizer
    isotropy: list
    stabilizer: list  # global indices in W

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "order": self.group.order,
            "isotropy_order": len(self.isotropy),
            "stabilizer": self.stabilizer,
            "description": f"T^{self.rank} / A, |A| = {self.group.order}",
        }


def stabilizer_Wqt(entry: CatalogEntry, label: str) -> tuple[FiniteGroup, list[int]]:
    """Stabilizer of ``label`` in W, with its embedding into W."""
    s = entry._index(label)
    return entry.action.stabilizer_group(s)


def normal_part(entry: CatalogEntry, label: str) -> Optional[list[int]]:
    """Positions, in the stabilizer, of the designated normal subgroup (if any)."""
    if entry.normal is None:
        return None
    _, emb = stabilizer_Wqt(entry, label)
    return [i for i, g in enumerate(emb) if g in set(entry.normal)]


def component_description(entry: CatalogEntry, label: str) -> ComponentDescription:
    """Component through ``label``: the torus modulo isotropy x| stabilizer."""
    iso = entry.isotropy(label)
    _, stab = stabilizer_Wqt(entry, label)
    pos = {t: i for i, t in enumerate(iso)}
    spos = {g: i for i, g in enumerate(stab)}
    G = entry.group
    n_i, n_s = len(iso), len(stab)
    acted = [[pos[entry._act_torsion(w, t)] for t in iso] for w in stab]
    table = np.empty((n_i * n_s, n_i * n_s), dtype=np.int64)
    # (t, w)(t', w') = (t + w t', w w'), indexed w_pos * n_i + t_pos
    for a in range(n_i * n_s):
        wa, ta = divmod(a, n_i)
        for b in range(n_i * n_s):
            wb, tb = divmod(b, n_i)
            t = tuple((x + y) % 1 for x, y in zip(iso[ta], iso[acted[wa][tb]]))
            w = spos[int(G.table[stab[wa], stab[wb]])]
            table[a, b] = w * n_i + pos[t]
    return ComponentDescription(entry.rank, FiniteGroup(table, validate=False), iso, list(stab))


# -- assembly ---------------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class BlockPoint:
    key: str
    label: str
    irrep: int
    dim: int
    tag: Optional[str] = None
    shift: Optional[str] = None

    def to_json(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def entry_data(entry: CatalogEntry, theta: Optional[TwistedQuotientData] = None) -> TwistedQuotientData:
    """Strict quotient data for the entry: explicit ``theta`` or transported base cocycles."""
    if theta is not None:
        return theta
    base = {entry._index(k): c for k, c in entry.cocycles.items()}
    return strict_from_lifts(entry.action, base)


def _points(entry: CatalogEntry, pts: Sequence[ExtendedQuotientPoint]) -> list[BlockPoint]:
    out = []
    for p in pts:
        cp = entry.points[p.x]
        out.append(BlockPoint(entry.key, cp.label, p.irrep, p.dim, cp.tag, cp.shift))
    return sorted(out)


def assemble_block(entry: CatalogEntry, label: Optional[str] = None, cocycle: Optional[Cocycle] = None,
                   theta: Optional[TwistedQuotientData] = None) -> list[BlockPoint]:
    """Points over the W-orbit of ``label`` (or over all labels when None).

    ``cocycle`` overrides the catalog cocycle at ``label``.
    """
    if cocycle is not None:
        if label is None:
            raise ValueError("a cocycle needs a label")
        entry = replace(entry, cocycles={**entry.cocycles, label: cocycle})
    data = entry_data(entry, theta)
    pts = build(entry.action, data)
    if label is not None:
        orbit = set(entry.action.table[:, entry._index(label)].tolist())
        pts = [p for p in pts if p.x in orbit]
    return _points(entry, pts)


def assemble_all(catalog: Sequence[CatalogEntry]) -> dict[str, list[BlockPoint]]:
    """Blocks keyed by inertial class, in key order."""
    keys = [e.key for e in catalog]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate inertial-class keys")
    return {e.key: assemble_block(e) for e in sorted(catalog, key=lambda e: e.key)}


def group_by_levi(blocks: dict[str, list[BlockPoint]], catalog: Sequence[CatalogEntry]) -> dict[str, list[BlockPoint]]:
    levi_of = {e.key: e.levi for e in catalog}
    out: dict[str, list[BlockPoint]] = {}
    for key, pts in blocks.items():
        out.setdefault(levi_of[key], []).extend(pts)
    return {k: sorted(v) for k, v in sorted(out.items())}


def assemble_levi(catalog: Sequence[CatalogEntry], levi: str) -> list[BlockPoint]:
    """All points over one Levi, as the ordinary W-quotient of the blockwise quotients.

    Entries over the same Levi share the group W; their label sets form the
    blocks of a W-stable partition of the combined label set.
    """
    entries = sorted((e for e in catalog if e.levi == levi), key=lambda e: e.key)
    if not entries:
        return []
    G = entries[0].group
    for e in entries[1:]:
        if e.group.order != G.order or (e.group.table != G.table).any():
            raise ValueError(f"entries over {levi} do not share the group W")
    offsets, cols, blocks = [], [], []
    for e in entries:
        off = sum(len(x.points) for x in entries[: len(offsets)])
        offsets.append(off)
        cols.append(e.point_action + off)
        blocks.append(list(range(off, off + len(e.points))))
    action = GroupAction(G, np.concatenate(cols, axis=1))
    k = action.npoints
    datas = [entry_data(e) for e in entries]
    modulus = lcm(*[d.modulus for d in datas])
    n = G.order
    kappa = np.zeros((k, n, n), dtype=np.int64)
    phi = np.full((n, k, n), -1, dtype=np.int64)
    scal = np.zeros((n, k, n), dtype=np.int64)
    for d, off in zip(datas, offsets):
        f = modulus // d.modulus
        sl = slice(off, off + d.action.npoints)
        kappa[sl] = d.kappa * f
        phi[:, sl] = d.phi
        scal[:, sl] = d.scal * f
    data = TwistedQuotientData(action, modulus, kappa, phi, scal)
    pts = two_step_quotient(action, blocks, data)
    out = []
    for p in pts:
        i = max(j for j, off in enumerate(offsets) if off <= p.x)
        e = entries[i]
        cp = e.points[p.x - offsets[i]]
        out.append(BlockPoint(e.key, cp.label, p.irrep, p.dim, cp.tag, cp.shift))
    return sorted(out)


# -- synthetic catalogs ---------------------------------------------------------------------


def klein_catalog_entry(key: str = "klein", tag: str = "chi0") -> CatalogEntry:
    """One label fixed by a Klein four-group carrying the nontrivial cocycle."""
    from .projrep import klein_cocycle

    V, kappa = klein_cocycle()
    # V acts on Lambda = Z^2 by sign changes
    signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    lat = np.array([np.diag(s) for s in signs], dtype=np.int64)
    return CatalogEntry(key, "M", 2, V, lat, [CatalogPoint("s", [], tag)],
                        np.zeros((4, 1), dtype=np.int64), {"s": kappa})


def random_catalog(rng, n_entries: int = 3, tags: Sequence[str] = ("chi0", "chi1", "chi2")) -> list[CatalogEntry]:
    """Random small catalog: cyclic, Klein or symmetric groups permuting labels."""
    from .extquot import random_action
    from .projrep import cyclic_group, klein_four, symmetric_group

    makers = [lambda: cyclic_group(2), lambda: cyclic_group(3), klein_four, lambda: symmetric_group(3)]
    entries = []
    for i in range(n_entries):
        which = int(rng.integers(len(makers)))
        G = makers[which]()
        act = random_action(rng, G, int(rng.integers(1, 5)))
        pts = [CatalogPoint(f"s{j}", [], str(tags[int(rng.integers(len(tags)))]), None)
               for j in range(act.npoints)]
        # tags constant on orbits, as central characters are W-invariant
        for orb in act.orbits():
            for j in orb:
                pts[j].tag = pts[orb[0]].tag
        lat = np.ones((G.order, 1, 1), dtype=np.int64)
        entries.append(CatalogEntry(f"e{i}", f"M{which}", 1, G, lat, pts, act.table))
    return entries
