import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gspringer.bernstein import (
    CatalogEntry,
    CatalogPoint,
    assemble_all,
    assemble_block,
    assemble_levi,
    component_description,
    group_by_levi,
    klein_catalog_entry,
    load_catalog,
    normal_part,
    random_catalog,
    stabilizer_Wqt,
)
from gspringer.projrep import Cocycle, is_isomorphic, klein_cocycle
from gspringer.schemas import check

import _corpus as C


def perm_matrices(elems, n):
    return np.array([np.eye(n, dtype=np.int64)[:, list(g)] for g in elems])


def s3_entry(isotropy=True, key="s3", tag="chi1"):
    """S3 permuting the coordinates of Z^3 and three labels; label i fixed by the point e_i / 2."""
    G, elems = C.closure_group([(1, 0, 2), (1, 2, 0)], lambda a, b: tuple(a[i] for i in b), (0, 1, 2))
    lat = perm_matrices(elems, 3)
    for g, m in zip(elems, lat):
        assert all(m[g[j], j] == 1 for j in range(3))
    pts = []
    for i in range(3):
        v = ["0", "0", "0"]
        v[i] = "1/2"
        pts.append(CatalogPoint(f"s{i}", [v] if isotropy else [], tag))
    pact = np.array([[g[i] for i in range(3)] for g in elems])
    return CatalogEntry(key, "M", 3, G, lat, pts, pact)


def single_label(G, lat, isotropy, key="e", cocycles=None):
    return CatalogEntry(key, "M", lat.shape[1], G, lat, [CatalogPoint("s", isotropy)],
                        np.zeros((G.order, 1), dtype=np.int64), cocycles or {})


def negation():
    return np.array([[[1]], [[-1]]], dtype=np.int64)


# -- components -------------------------------------------------------------------------------


def test_component_examples():
    torus = single_label(C.cyclic(1), np.eye(2, dtype=np.int64)[None], [])
    d = component_description(torus, "s")
    assert d.rank == 2 and d.group.order == 1
    d = component_description(single_label(C.cyclic(2), negation(), []), "s")
    assert d.rank == 1 and d.group.order == 2
    swapped = CatalogEntry("z", "M", 1, C.cyclic(2), negation(),
                           [CatalogPoint("a", [["1/2"]]), CatalogPoint("b", [["1/2"]])], np.array([[0, 1], [1, 0]]))
    d = component_description(swapped, "a")
    assert d.group.order == 2 and d.stabilizer == [0] and len(d.isotropy) == 2
    assert d.to_json()["description"] == "T^1 / A, |A| = 2"


def test_component_semidirect_products():
    # Z/3 by negation is S3
    d = component_description(single_label(C.cyclic(2), negation(), [["1/3"]]), "s")
    assert is_isomorphic(d.group, C.symmetric(3))
    # (Z/2)^2 with the coordinate swap is D8
    swap = np.array([np.eye(2, dtype=np.int64), np.eye(2, dtype=np.int64)[::-1]])
    d = component_description(single_label(C.cyclic(2), swap, [["1/2", "0"], ["0", "1/2"]]), "s")
    assert d.group.order == 8 and is_isomorphic(d.group, C.dihedral(4))
    assert not d.group.is_abelian()


def test_component_conjugation_invariance():
    e = s3_entry()
    groups = [component_description(e, f"s{i}").group for i in range(3)]
    assert all(g.order == 4 for g in groups)
    assert all(is_isomorphic(groups[0], g) for g in groups)
    assert is_isomorphic(groups[0], C.product(C.cyclic(2), C.cyclic(2)))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_component_conjugation_invariance_random(seed):
    rng = np.random.default_rng(seed)
    # D8 acting on Z^2 by signed permutations; the isotropy of the one orbit is transported around it
    G, elems = C.closure_group([((1, 0), (1, 1)), ((0, 1), (-1, 1))],
                               lambda a, b: (tuple(a[0][i] for i in b[0]), tuple(a[1][b[0][i]] * b[1][i] for i in range(2))),
                               ((0, 1), (1, 1)))
    lat = []
    for perm, sign in elems:
        m = np.zeros((2, 2), dtype=np.int64)
        for j in range(2):
            m[perm[j], j] = sign[j]
        lat.append(m)
    lat = np.array(lat)
    den = int(rng.choice([2, 3, 4]))
    base = tuple(int(x) for x in rng.integers(0, den, 2))
    orbit = sorted({tuple(int(v) for v in (m @ np.array(base)) % den) for m in lat})
    # one label per point of the orbit, fixed by the cyclic group that point generates
    pts = [CatalogPoint(f"s{i}", [[f"{a}/{den}", f"{b}/{den}"]]) for i, (a, b) in enumerate(orbit)]
    pact = np.array([[orbit.index(tuple(int(v) for v in (m @ np.array(p)) % den)) for p in orbit] for m in lat])
    entry = CatalogEntry("d8", "M", 2, G, lat, pts, pact)
    for orb in entry.action.orbits():
        groups = [component_description(entry, f"s{i}").group for i in orb]
        assert all(is_isomorphic(groups[0], g) for g in groups)


def test_lattice_and_isotropy_validation():
    with pytest.raises(ValueError):
        single_label(C.cyclic(2), np.array([[[1]], [[2]]]), [])
    with pytest.raises(ValueError):
        single_label(C.cyclic(3), np.array([[[1]], [[-1]], [[1]]]), [])
    with pytest.raises(ValueError):
        CatalogEntry("z", "M", 1, C.cyclic(2), negation(),
                     [CatalogPoint("a", [["1/2"]]), CatalogPoint("b", [])], np.array([[0, 1], [1, 0]]))
    with pytest.raises(KeyError):
        component_description(s3_entry(), "nope")
    G = C.symmetric(3)
    with pytest.raises(ValueError):
        CatalogEntry("n", "M", 0, G, np.zeros((6, 0, 0), dtype=np.int64), [CatalogPoint("s", [])],
                     np.zeros((6, 1), dtype=np.int64), normal=[0, 1])


# -- stabilizers ------------------------------------------------------------------------------


def test_stabilizer_examples():
    e = s3_entry()
    sub, emb = stabilizer_Wqt(e, "s0")
    assert sub.order == 2 and e.group.order // sub.order == 3
    assert is_isomorphic(sub, C.symmetric(2))
    fixed = single_label(C.symmetric(3), np.zeros((6, 0, 0), dtype=np.int64), [])
    assert stabilizer_Wqt(fixed, "s")[0].order == 6
    G = C.cyclic(4)
    e = CatalogEntry("n", "M", 0, G, np.zeros((4, 0, 0), dtype=np.int64), [CatalogPoint("s", [])],
                     np.zeros((4, 1), dtype=np.int64), normal=[0, 2])
    assert normal_part(e, "s") == [0, 2]
    assert normal_part(fixed, "s") is None


# -- assembly ---------------------------------------------------------------------------------


def test_assemble_block_examples():
    fixed = single_label(C.symmetric(3), np.zeros((6, 0, 0), dtype=np.int64), [])
    pts = assemble_block(fixed, "s")
    assert sorted(p.dim for p in pts) == [1, 1, 2]
    klein = klein_catalog_entry()
    (p,) = assemble_block(klein, "s")
    assert p.dim == 2 and p.tag == "chi0"
    free = CatalogEntry("f", "M", 0, C.cyclic(3), np.zeros((3, 0, 0), dtype=np.int64),
                        [CatalogPoint(f"s{i}", []) for i in range(6)],
                        np.array([[(i + g) % 3 + 3 * (i // 3) for i in range(6)] for g in range(3)]))
    assert len(assemble_block(free)) == 2
    assert len(assemble_block(free, "s4")) == 1


def test_assemble_block_cocycle_override():
    V, kap = klein_cocycle()
    e = single_label(V, np.zeros((4, 0, 0), dtype=np.int64), [])
    assert len(assemble_block(e, "s")) == 4
    assert [p.dim for p in assemble_block(e, "s", cocycle=kap)] == [2]
    assert e.cocycles == {}
    with pytest.raises(ValueError):
        assemble_block(e, cocycle=kap)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_block_cardinality_against_regular_classes(seed):
    rng = np.random.default_rng(seed)
    for e in random_catalog(rng, 3):
        expected = 0
        for orb in e.action.orbits():
            sub, _ = e.action.stabilizer_group(orb[0])
            expected += C.brute_regular_count(sub, C.trivial(sub))
        assert len(assemble_block(e)) == expected


def test_assemble_all_examples():
    assert assemble_all([]) == {}
    a, b = klein_catalog_entry("a"), s3_entry(key="b")
    out = assemble_all([b, a])
    assert list(out) == ["a", "b"]
    assert len(out["a"]) == len(assemble_block(a)) and len(out["b"]) == len(assemble_block(b))
    assert sum(map(len, out.values())) == 1 + 2
    with pytest.raises(ValueError):
        assemble_all([a, klein_catalog_entry("a")])
    doc = {"entries": [a.to_json(), a.to_json()]}
    with pytest.raises(ValueError):
        load_catalog(doc)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_group_by_levi_matches_two_step(seed):
    rng = np.random.default_rng(seed)
    cat = random_catalog(rng, int(rng.integers(1, 6)))
    grouped = group_by_levi(assemble_all(cat), cat)
    assert set(grouped) == {e.levi for e in cat}
    for levi, pts in grouped.items():
        assert assemble_levi(cat, levi) == pts
    tag_of = {(e.key, p.label): p.tag for e in cat for p in e.points}
    for pts in grouped.values():
        assert all(p.tag == tag_of[(p.key, p.label)] for p in pts)


def test_assemble_levi_needs_shared_group():
    a = klein_catalog_entry("a")
    b = single_label(C.cyclic(4), np.ones((4, 1, 1), dtype=np.int64), [], key="b")
    assert assemble_levi([a, b], "nothing") == []
    with pytest.raises(ValueError):
        assemble_levi([a, b], "M")


def test_catalog_json_round_trip():
    cat = [klein_catalog_entry("a"), s3_entry(key="b")]
    doc = json.loads(json.dumps({"entries": [e.to_json() for e in cat]}))
    check("catalog", doc)
    back = load_catalog(json.dumps(doc))
    assert assemble_all(back) == assemble_all(cat)
    assert [back[1].isotropy(f"s{i}") for i in range(3)] == [cat[1].isotropy(f"s{i}") for i in range(3)]
    minimal = {"entries": [{"key": "k", "group": {"table": [[0, 1], [1, 0]]}, "points": [{"label": "s", "shift": "z"}]}]}
    check("catalog", minimal)
    (e,) = load_catalog(minimal)
    pts = assemble_all([e])["k"]
    assert len(pts) == 2 and all(p.shift == "z" for p in pts)
    assert pts[0].to_json()["shift"] == "z" and "tag" not in pts[0].to_json()
