"""Cuspidal local systems on nilpotent orbits, cuspidal data on classical Levis,
and the cuspidal support map for exceptional groups.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Union

from sympy import totient

from . import _exceptional_data as _exc
from .orbits import (
    ClassicalOrbit,
    ExceptionalOrbit,
    GroupLabel,
    OrbitLabel,
    Product,
    Sym,
    check_orbit,
    component_group,
    orbit_to_json,
)
from .partitions import Partition, arithmetic_partition, is_square, is_triangular, partitions_of, stats


class CuspidalCountWarning(UserWarning):
    """Raised for Spin(2n) with 2n both square and triangular (n = 18, 20808, ...).

    The per-orbit rules give three cuspidal sheaves there (one on the square
    orbit, two on the triangular one), where a count of two is sometimes
    quoted; the rules are followed.
    """


# -- local system labels --------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """The character k -> exp(2 pi i index k / n) of Z/n, of exact order ``order``."""

    order: int
    index: int = 1

    def to_json(self):
        return {"kind": "Character", "order": self.order, "index": self.index}

    def __str__(self):
        return f"chi_{self.index} of Z/{self.order}"


@dataclass(frozen=True)
class CentralCharacter:
    label: str

    def to_json(self):
        return {"kind": "CentralCharacter", "label": self.label}

    def __str__(self):
        return f"central {self.label}"


@dataclass(frozen=True)
class SignTimesCentral:
    central: str

    def to_json(self):
        return {"kind": "SignTimesCentral", "central": self.central}

    def __str__(self):
        return f"sign x {self.central}"


@dataclass(frozen=True)
class DimTagged:
    dim: int
    central: str

    def to_json(self):
        return {"kind": "DimTagged", "dim": self.dim, "central": self.central}

    def __str__(self):
        return f"dim {self.dim}, central {self.central}"


Rep = Union[Character, CentralCharacter, SignTimesCentral, DimTagged]


@dataclass(frozen=True)
class LocalSystemLabel:
    orbit: OrbitLabel
    rep: Rep

    def central_label(self) -> str:
        rep = self.rep
        if isinstance(rep, (DimTagged, SignTimesCentral)):
            return rep.central
        if isinstance(rep, CentralCharacter):
            return rep.label
        return f"chi{rep.index}"


def _spin_dim(lam: Partition) -> int:
    return 2 ** ((stats(lam).a - 1) // 2)


def _central_label(j: int) -> str:
    return f"chi{j}"


def cuspidal_systems(g: GroupLabel) -> list[LocalSystemLabel]:
    """All cuspidal pairs (orbit, local system) of the simply-connected group ``g``."""
    fam = g.family
    if g.is_exceptional:
        orbit = ExceptionalOrbit(_exc.CUSPIDAL_ORBIT[fam])
        z = _exc.CENTER_ORDER[fam]
        chars = range(1, z) if z > 1 else [0]
        return [LocalSystemLabel(orbit, SignTimesCentral(_central_label(j))) for j in chars]

    n = g.rank
    out = []
    if fam == "A":
        orbit = ClassicalOrbit(Partition([n + 1]))
        for j in range(1, n + 2):
            if gcd(j, n + 1) == 1:
                out.append(LocalSystemLabel(orbit, Character(n + 1, j % (n + 1))))
        return out

    if fam == "C":
        if is_triangular(n) is not None and n >= 1:
            lam = arithmetic_partition(2 * n, 2, 2)
            central = "triv" if n % 2 == 0 else "nontriv"
            out.append(LocalSystemLabel(ClassicalOrbit(lam), CentralCharacter(central)))
        return out

    total = 2 * n + 1 if fam == "B" else 2 * n
    square = is_square(total)
    triangular = is_triangular(total)
    if square is not None:
        lam = arithmetic_partition(total, 1, 2)
        if fam == "B":
            central = "triv"
        else:
            central = "1" if (n // 2) % 2 == 0 else "z_SO"
        out.append(LocalSystemLabel(ClassicalOrbit(lam), CentralCharacter(central)))
    if triangular is not None:
        lam = arithmetic_partition(total, 1, 4) or arithmetic_partition(total, 3, 4)
        dim = _spin_dim(lam)
        if fam == "B":
            out.append(LocalSystemLabel(ClassicalOrbit(lam), DimTagged(dim, "nontriv")))
        else:
            for central in ("z+", "z-"):
                out.append(LocalSystemLabel(ClassicalOrbit(lam), DimTagged(dim, central)))
    if fam == "D" and square is not None and triangular is not None:
        warnings.warn(
            f"D{n}: 2n={total} is square and triangular; the per-orbit rules give {len(out)} cuspidal "
            "sheaves, not two",
            CuspidalCountWarning,
            stacklevel=2,
        )
    return out


def has_cuspidal(g: GroupLabel) -> bool:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CuspidalCountWarning)
        return bool(cuspidal_systems(g))


def count_cuspidal(g: GroupLabel) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CuspidalCountWarning)
        return len(cuspidal_systems(g))


# -- classical Levi shapes and cuspidal data ------------------------------------


@dataclass(frozen=True)
class LeviShape:
    """GL_{a_1} x ... x GL_{a_k} x X_m inside a classical group of family X.

    ``gl`` is kept nonincreasing, so shapes are taken up to reordering of the
    GL factors. Type A Levis have ``m = 0`` and no X factor.
    """

    family: str
    gl: tuple
    m: int = 0

    def __str__(self):
        parts = [f"GL{a}" for a in self.gl]
        if self.family != "A" and self.m:
            parts.append(f"{self.family}{self.m}")
        return "x".join(parts) or "1"

    def to_json(self):
        return {"family": self.family, "gl": list(self.gl), "m": self.m}


@dataclass(frozen=True)
class CuspidalDatum:
    levi: LeviShape
    systems: tuple  # one LocalSystemLabel per factor, GL factors first

    def to_json(self):
        return {"levi": self.levi.to_json(), "systems": [_system_json(s) for s in self.systems]}


def _gl_systems(a: int) -> list[LocalSystemLabel]:
    if a == 1:
        return [LocalSystemLabel(ClassicalOrbit(Partition([1])), Character(1, 0))]
    return cuspidal_systems(GroupLabel("A", a - 1))


def _levi_shapes(g: GroupLabel):
    fam, n = g.family, g.rank
    if fam == "A":
        for lam in partitions_of(n + 1):
            yield LeviShape("A", tuple(lam), 0)
        return
    for m in range(n, -1, -1):
        if fam == "D" and m == 1:
            continue
        for lam in partitions_of(n - m):
            yield LeviShape(fam, tuple(lam), m)


def cuspidal_levi_data(g: GroupLabel) -> list[CuspidalDatum]:
    """Cuspidal data (L, O, E) with L a standard Levi of the classical group ``g``."""
    if g.is_exceptional:
        raise ValueError("cuspidal data of exceptional groups come from the support table")
    out = []
    for shape in _levi_shapes(g):
        choices = [_gl_systems(a) for a in shape.gl]
        if shape.family != "A" and shape.m > 0:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", CuspidalCountWarning)
                choices.append(cuspidal_systems(GroupLabel(shape.family, shape.m)))
        for combo in itertools.product(*choices):
            out.append(CuspidalDatum(shape, tuple(combo)))
    return out


def count_levi_data_by_formula(g: GroupLabel) -> int:
    """Sum over Levi shapes of the product of per-factor cuspidal counts."""
    total = 0
    for shape in _levi_shapes(g):
        prod = 1
        for a in shape.gl:
            prod *= int(totient(a))
        if shape.family != "A" and shape.m > 0:
            prod *= count_cuspidal(GroupLabel(shape.family, shape.m))
        total += prod
    return total


# -- exceptional groups: enhancements and the cuspidal support map --------------


@dataclass(frozen=True)
class Enhancement:
    """An irreducible of A(O) = Z x S_k: a partition of k and a central exponent."""

    sym: tuple = ()
    central: int = 0

    def to_json(self):
        return {"sym": list(self.sym), "central": self.central}


@dataclass(frozen=True)
class ExceptionalLevi:
    kind: str  # "G", "L" or "T"
    semisimple_type: str
    pi0_center: int = 1

    def to_json(self):
        return {"kind": self.kind, "semisimple_type": self.semisimple_type, "pi0_center": self.pi0_center}


@dataclass(frozen=True)
class CuspidalSupport:
    levi: ExceptionalLevi
    orbit: str
    system: Rep

    def central_exponent(self) -> int:
        rep = self.system
        label = rep.central if isinstance(rep, SignTimesCentral) else getattr(rep, "label", "chi0")
        return int(label[3:])

    def to_json(self):
        return {"levi": self.levi.to_json(), "orbit": self.orbit, "system": self.system.to_json()}


def _system_json(s: LocalSystemLabel) -> dict:
    return {"orbit": str(s.orbit), "rep": s.rep.to_json()}


def _sym_factor(desc) -> int:
    if isinstance(desc, Product):
        desc = desc.factor
    return desc.k if isinstance(desc, Sym) else 1


def _center_in_A(desc) -> int:
    return desc.center_order if isinstance(desc, Product) else 1


def enhancements(g: GroupLabel, o: ExceptionalOrbit) -> list[Enhancement]:
    """Irreducible representations of A(O) for an exceptional orbit."""
    desc = component_group(g, o)
    k = _sym_factor(desc)
    syms = [tuple(lam) for lam in partitions_of(k)] if k > 1 else [(1,)]
    return [Enhancement(s, j) for j in range(_center_in_A(desc)) for s in syms]


def exceptional_pairs(g: GroupLabel) -> list[tuple[ExceptionalOrbit, Enhancement]]:
    from .orbits import enumerate_orbits

    return [(o, e) for o in enumerate_orbits(g) for e in enhancements(g, o)]


def _is_sign(sym: tuple) -> bool:
    return len(sym) > 1 and all(p == 1 for p in sym)


def is_cuspidal_pair(g: GroupLabel, o: ExceptionalOrbit, rep: Enhancement) -> bool:
    if o.bala_carter != _exc.CUSPIDAL_ORBIT[g.family] or not _is_sign(rep.sym):
        return False
    return _exc.CENTER_ORDER[g.family] == 1 or rep.central != 0


def principal_support() -> CuspidalSupport:
    return CuspidalSupport(ExceptionalLevi("T", ""), "0", CentralCharacter("chi0"))


def cuspidal_support_exceptional(g: GroupLabel, o: OrbitLabel, rep: Enhancement) -> CuspidalSupport:
    """Cuspidal support [L, O_L, E] of the pair (o, rep) in an exceptional group."""
    if not g.is_exceptional:
        raise ValueError(f"{g} is classical; its support map is out of scope")
    check_orbit(g, o)
    if rep not in enhancements(g, o):
        raise ValueError(f"{rep} is not an irreducible of A({o})")
    if is_cuspidal_pair(g, o, rep):
        levi = ExceptionalLevi("G", g.family, _exc.CENTER_ORDER[g.family])
        return CuspidalSupport(levi, o.bala_carter, SignTimesCentral(_central_label(rep.central)))
    if rep.central == 0:
        return principal_support()
    ss_type, pi0 = _exc.SUPPORT_LEVI[g.family]
    return CuspidalSupport(ExceptionalLevi("L", ss_type, pi0), "reg", CentralCharacter(_central_label(rep.central)))


def twist_enhancement(g: GroupLabel, rep: Enhancement, chi: int) -> Enhancement:
    z = _exc.CENTER_ORDER[g.family]
    return Enhancement(rep.sym, (rep.central + chi) % z)


def twist_support(g: GroupLabel, support: CuspidalSupport, chi: int) -> CuspidalSupport:
    """Twist a support with nontrivial central character by the central character ``chi``.

    Supports in the principal series do not determine their twists, so a
    principal support can only be twisted by the trivial character.
    """
    z = _exc.CENTER_ORDER[g.family]
    j = support.central_exponent()
    new = (j + chi) % z
    if new == 0:
        return principal_support()
    if j == 0:
        raise ValueError("the twist of a principal-series support is not determined by the support")
    label = _central_label(new)
    if support.levi.kind == "G":
        return CuspidalSupport(support.levi, support.orbit, SignTimesCentral(label))
    return CuspidalSupport(support.levi, support.orbit, CentralCharacter(label))


def local_system_to_json(g: GroupLabel, s: LocalSystemLabel) -> dict:
    return {"orbit": orbit_to_json(g, s.orbit), "rep": s.rep.to_json()}
