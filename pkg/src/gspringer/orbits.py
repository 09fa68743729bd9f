"""Nilpotent orbits and their component groups A(O) for simply-connected groups."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Optional, Union

from . import _exceptional_data as _exc
from .partitions import (
    Partition,
    enumerate_partitions,
    is_valid_for_type,
    is_very_even,
    required_total,
    stats,
)

EXCEPTIONAL_FAMILIES = ("E6", "E7", "E8", "F4", "G2")
FAMILIES = ("A", "B", "C", "D") + EXCEPTIONAL_FAMILIES


@dataclass(frozen=True)
class GroupLabel:
    family: str
    rank: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in EXCEPTIONAL_FAMILIES:
            if self.rank not in (None, int(self.family[1])):
                raise ValueError(f"{self.family} carries no rank")
            object.__setattr__(self, "rank", None)
        else:
            if self.rank is None:
                raise ValueError(f"type {self.family} needs a rank")
            minimum = 2 if self.family == "D" else 1
            if self.rank < minimum:
                raise ValueError(f"type {self.family} needs rank >= {minimum}")

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_FAMILIES

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "GroupLabel":
        """Accept ``"E8"``, ``"B3"``, or ``("B", 3)`` style input."""
        text = text.strip()
        if text in EXCEPTIONAL_FAMILIES:
            return cls(text)
        if rank is None and len(text) > 1 and text[0] in "ABCD":
            return cls(text[0], int(text[1:]))
        return cls(text, rank)

    def __str__(self):
        return self.family if self.rank is None else f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        d = {"family": self.family}
        if self.rank is not None:
            d["rank"] = self.rank
        return d


# -- component group descriptors ------------------------------------------------


@dataclass(frozen=True)
class Trivial:
    def order(self) -> int:
        return 1

    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Cyclic:
    c: int

    def order(self) -> int:
        return self.c

    def __str__(self):
        return f"Z/{self.c}"


@dataclass(frozen=True)
class Elem2:
    k: int

    def order(self) -> int:
        return 2**self.k

    def __str__(self):
        return f"(Z/2)^{self.k}"


@dataclass(frozen=True)
class Sym:
    k: int

    def __post_init__(self):
        if self.k not in (2, 3, 4, 5):
            raise ValueError("symmetric component groups only occur on 2..5 letters")

    def order(self) -> int:
        return factorial(self.k)

    def __str__(self):
        return f"S{self.k}"


@dataclass(frozen=True)
class Product:
    """``center x factor`` where the center of E6 (mu3) or E7 (mu2) injects into A(O)."""

    center: str
    factor: "ComponentGroupDescriptor"

    def __post_init__(self):
        if self.center not in ("mu2", "mu3"):
            raise ValueError(f"bad center {self.center!r}")

    @property
    def center_order(self) -> int:
        return int(self.center[-1])

    def order(self) -> int:
        return self.center_order * self.factor.order()

    def __str__(self):
        if isinstance(self.factor, Trivial):
            return self.center
        return f"{self.center}x{self.factor}"


@dataclass(frozen=True)
class CentralExt2:
    """A central extension of Z/2 by (Z/2)^k; its multiplication is not modelled."""

    k: int

    def order(self) -> int:
        return 2 ** (self.k + 1)

    def __str__(self):
        return f"2.(Z/2)^{self.k}"


ComponentGroupDescriptor = Union[Trivial, Cyclic, Elem2, Sym, Product, CentralExt2]


def _normalize(desc):
    if isinstance(desc, (Cyclic,)) and desc.c == 1:
        return Trivial()
    if isinstance(desc, Elem2) and desc.k == 0:
        return Trivial()
    return desc


def descriptor_from_code(code: str) -> ComponentGroupDescriptor:
    if code == "1":
        return Trivial()
    if code.startswith("S"):
        return Sym(int(code[1:]))
    if code.startswith("m"):
        center = "mu" + code[1]
        rest = code[3:] if "x" in code else "1"
        return Product(center, descriptor_from_code(rest))
    raise ValueError(f"bad component group code {code!r}")


def descriptor_to_json(desc: ComponentGroupDescriptor) -> dict:
    if isinstance(desc, Trivial):
        return {"kind": "Trivial"}
    if isinstance(desc, Cyclic):
        return {"kind": "Cyclic", "c": desc.c}
    if isinstance(desc, Elem2):
        return {"kind": "Elem2", "k": desc.k}
    if isinstance(desc, Sym):
        return {"kind": "Sym", "k": desc.k}
    if isinstance(desc, CentralExt2):
        return {"kind": "CentralExt2", "k": desc.k}
    return {"kind": "Product", "center": desc.center, "factor": descriptor_to_json(desc.factor)}


def descriptor_from_json(data: dict) -> ComponentGroupDescriptor:
    kind = data["kind"]
    if kind == "Trivial":
        return Trivial()
    if kind == "Product":
        return Product(data["center"], descriptor_from_json(data["factor"]))
    cls = {"Cyclic": Cyclic, "Elem2": Elem2, "Sym": Sym, "CentralExt2": CentralExt2}[kind]
    field = "c" if kind == "Cyclic" else "k"
    return _normalize(cls(int(data[field])))


# -- orbit labels ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassicalOrbit:
    partition: Partition
    tag: Optional[str] = None  # "I" / "II" for very even type D partitions

    def __str__(self):
        s = "O_" + ",".join(map(str, self.partition))
        return s + (f"^{self.tag}" if self.tag else "")


@dataclass(frozen=True)
class ExceptionalOrbit:
    bala_carter: str

    def __str__(self):
        return self.bala_carter


OrbitLabel = Union[ClassicalOrbit, ExceptionalOrbit]


def orbit_to_json(g: GroupLabel, o: OrbitLabel) -> dict:
    d = g.to_json()
    if isinstance(o, ExceptionalOrbit):
        d["bala_carter"] = o.bala_carter
    else:
        d["partition"] = o.partition.to_json()
        if o.tag is not None:
            d["tag"] = o.tag
    return d


def orbit_from_json(data: dict) -> tuple[GroupLabel, OrbitLabel]:
    g = GroupLabel(data["family"], data.get("rank"))
    if "bala_carter" in data:
        return g, ExceptionalOrbit(data["bala_carter"])
    return g, ClassicalOrbit(Partition(data["partition"]), data.get("tag"))


def enumerate_orbits(g: GroupLabel) -> list[OrbitLabel]:
    """Nilpotent orbits of ``g``; very even type-D partitions appear twice (I, II)."""
    if g.is_exceptional:
        return [ExceptionalOrbit(name) for name, _ in _exc.ORBITS[g.family]]
    out: list[OrbitLabel] = []
    for lam in enumerate_partitions(g.rank, g.family):
        if g.family == "D" and is_very_even(lam):
            out.append(ClassicalOrbit(lam, "I"))
            out.append(ClassicalOrbit(lam, "II"))
        else:
            out.append(ClassicalOrbit(lam))
    return out


def check_orbit(g: GroupLabel, o: OrbitLabel) -> None:
    """Raise ValueError unless ``o`` is an orbit of ``g``."""
    if g.is_exceptional:
        if not isinstance(o, ExceptionalOrbit) or o.bala_carter not in dict(_exc.ORBITS[g.family]):
            raise ValueError(f"{o} is not a nilpotent orbit of {g}")
        return
    if not isinstance(o, ClassicalOrbit):
        raise ValueError(f"{o} is not a classical orbit")
    lam = o.partition
    if lam.n != required_total(g.rank, g.family) or not is_valid_for_type(lam, g.family):
        raise ValueError(f"{lam} does not label an orbit of {g}")
    needs_tag = g.family == "D" and is_very_even(lam)
    if needs_tag != (o.tag in ("I", "II")) or (not needs_tag and o.tag is not None):
        raise ValueError(f"bad tag {o.tag!r} for {lam} in {g}")


def component_group(g: GroupLabel, o: OrbitLabel) -> ComponentGroupDescriptor:
    """A(O) = pi_0 of the centralizer of an element of ``o``."""
    check_orbit(g, o)
    if g.is_exceptional:
        return descriptor_from_code(dict(_exc.ORBITS[g.family])[o.bala_carter])
    st = stats(o.partition)
    if g.family == "A":
        return _normalize(Cyclic(st.c))
    if g.family == "C":
        return _normalize(Elem2(st.b))
    k = st.a - 1 if g.family == "B" else max(0, st.a - 1)
    if st.all_odd_mult_one:
        return CentralExt2(k)
    return _normalize(Elem2(k))


def exceptional_count_table(g: GroupLabel) -> dict[ComponentGroupDescriptor, int]:
    """Number of orbits with each isomorphism type of A(O)."""
    if not g.is_exceptional:
        raise ValueError(f"{g} is not exceptional")
    return {descriptor_from_code(code): n for code, n in _exc.COUNT_TABLE[g.family].items()}


def component_group_census(g: GroupLabel) -> Counter:
    return Counter(component_group(g, o) for o in enumerate_orbits(g))
