import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gspringer.cyclotomic import Cyclotomic
from gspringer.projrep import (
    Cocycle,
    FiniteGroup,
    GroupTooLarge,
    are_cohomologous,
    central_extension,
    character_table,
    coboundary_solution,
    coboundary_twist,
    cocycle_violations,
    conjugacy_classes,
    cyclic_group,
    dihedral_group,
    direct_product,
    find_isomorphism,
    inner_product,
    is_isomorphic,
    kappa_regular_classes,
    klein_cocycle,
    klein_four,
    quaternion_group,
    solve_mod,
    symmetric_group,
    trivial_cocycle,
    twisted_irreps,
    validate_cocycle,
)

import _corpus as C

CORPUS = C.projective_corpus()
IDS = [name for name, _, _ in CORPUS]


def test_group_construction_and_validation():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1, 2], [1, 2, 0], [2, 1, 0]])
    G = FiniteGroup.from_json({"generators": [[1, 0, 2], [0, 2, 1]]})
    assert G.order == 6
    assert FiniteGroup.from_json(G.to_json()).order == 6
    assert G.inverse[G.identity] == G.identity
    assert all(G.table[g, G.inverse[g]] == G.identity for g in range(6))


def test_conjugacy_classes_examples():
    sizes = sorted(len(c) for c in conjugacy_classes(symmetric_group(3)))
    assert sizes == [1, 2, 3]
    assert len(conjugacy_classes(cyclic_group(4))) == 4
    assert len(conjugacy_classes(quaternion_group())) == 5
    for _, G, _ in CORPUS:
        assert sorted(map(tuple, conjugacy_classes(G))) == sorted(map(tuple, C.brute_classes(G)))


def test_character_table_examples():
    assert sorted(character_table(symmetric_group(3)).dims) == [1, 1, 2]
    assert sorted(character_table(symmetric_group(4)).dims) == [1, 1, 2, 3, 3]
    assert sorted(character_table(dihedral_group(4)).dims) == [1, 1, 1, 1, 2]


def _check_table(G):
    ct = character_table(G)
    r = len(ct.classes)
    assert len(ct.characters) == r
    assert sum(d * d for d in ct.dims) == G.order
    # first orthogonality
    for i, j in itertools.combinations_with_replacement(range(r), 2):
        assert inner_product(ct, ct.characters[i], ct.characters[j]) == (1 if i == j else 0)
    # second orthogonality
    for k, l in itertools.combinations_with_replacement(range(r), 2):
        s = sum((ch[k] * ch[l].conjugate() for ch in ct.characters), Cyclotomic.from_int(ct.exponent, 0))
        expected = Fraction(G.order, len(ct.classes[k])) if k == l else 0
        assert s == expected
    # tensor products decompose with nonnegative integer multiplicities
    for i, j in itertools.combinations(range(r), 2):
        prod = [a * b for a, b in zip(ct.characters[i], ct.characters[j])]
        for ch in ct.characters:
            m = inner_product(ct, prod, ch)
            assert m.is_rational() and m.coeffs[0].denominator == 1 and m.coeffs[0] >= 0
    assert all(x == 1 for x in ct.characters[0])


@pytest.mark.parametrize("name,G", [(n, G) for n, G, k in CORPUS if k.modulus == 1])
def test_character_table_orthogonality(name, G):
    _check_table(G)


def test_character_table_numeric_values():
    # class functions of S4 against the permutation character of the natural action
    G = C.symmetric(4)
    ct = character_table(G)
    perm = [sum(1 for i in range(4) if p[i] == i) for p in _perms(4)]
    lab = {g: k for k, c in enumerate(ct.classes) for g in c}
    values = [Cyclotomic.from_int(ct.exponent, perm[c[0]]) for c in ct.classes]
    mults = [inner_product(ct, values, ch) for ch in ct.characters]
    assert sorted(int(m.coeffs[0]) for m in mults) == [0, 0, 0, 1, 1]
    assert len(lab) == 24


def _perms(n):
    # element order of C.symmetric(n) is BFS order from these generators
    from collections import deque
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    ident = tuple(range(n))
    elems, seen, q = [ident], {ident}, deque([ident])
    while q:
        x = q.popleft()
        for s in gens:
            y = tuple(x[i] for i in s)
            if y not in seen:
                seen.add(y)
                elems.append(y)
                q.append(y)
    return elems


def test_bound_is_enforced():
    with pytest.raises(GroupTooLarge):
        character_table(symmetric_group(4), bound=10)


# -- cocycles ----------------------------------------------------------------------------


def test_klein_cocycle_validates_exhaustively():
    V, kappa = klein_cocycle()
    assert validate_cocycle(V, kappa)
    bad = kappa.table.copy()
    bad[1, 2] = (bad[1, 2] + 1) % 2
    assert not validate_cocycle(V, Cocycle(2, bad))
    assert cocycle_violations(V, Cocycle(2, np.zeros((3, 3), dtype=int))) == [("shape",)]


@pytest.mark.parametrize("name,G,kappa", CORPUS, ids=IDS)
def test_corpus_cocycles_are_cocycles(name, G, kappa):
    assert validate_cocycle(G, kappa)
    t, k, m = G.table, kappa.table, kappa.modulus
    n = G.order
    for g in range(0, n, max(1, n // 6)):
        for h in range(n):
            for l in range(n):
                assert (k[g, h] + k[t[g, h], l] - k[g, t[h, l]] - k[h, l]) % m == 0


@pytest.mark.parametrize("name,G,kappa", CORPUS, ids=IDS)
def test_twisted_irreps_against_numeric_oracle(name, G, kappa):
    irr = twisted_irreps(G, kappa)
    count, dims = C.twisted_dims_numeric(G, kappa)
    assert irr.count == count == len(kappa_regular_classes(G, kappa)) == C.brute_regular_count(G, kappa)
    assert sorted(irr.dims) == dims
    assert sum(d * d for d in irr.dims) == G.order


def test_klein_nontrivial_is_one_dim_two():
    V, kappa = klein_cocycle()
    assert len(kappa_regular_classes(V, kappa)) == 1
    assert twisted_irreps(V, kappa).dims == [2]
    assert is_isomorphic(central_extension(V, kappa), dihedral_group(4)) or is_isomorphic(
        central_extension(V, kappa), quaternion_group())


def test_trivial_cocycle_gives_ordinary_table():
    for G in (symmetric_group(3), quaternion_group(), dihedral_group(5)):
        assert twisted_irreps(G, trivial_cocycle(G)).dims == character_table(G).dims
        assert len(kappa_regular_classes(G, trivial_cocycle(G, 3))) == len(conjugacy_classes(G))


def test_cyclic_groups_all_classes_regular():
    # every cocycle on Z/n is a coboundary: check random cocycles built as coboundaries and
    # the full solver on the restriction of bilinear forms, which vanish on cyclic groups
    rng = np.random.default_rng(1)
    for n in range(1, 13):
        Z = cyclic_group(n)
        for m in (2, 3, 4, 6):
            eta = rng.integers(0, m, n)
            eta[0] = 0
            kappa = coboundary_twist(Z, trivial_cocycle(Z, m), eta)
            assert len(kappa_regular_classes(Z, kappa)) == n
            assert coboundary_solution(Z, kappa.table, m) is not None


def test_s3_exhaustive_coboundary_twists():
    S3 = symmetric_group(3)
    base = trivial_cocycle(S3, 2)
    for bits in itertools.product(range(2), repeat=5):
        eta = (0,) + bits
        k2 = coboundary_twist(S3, base, eta)
        assert validate_cocycle(S3, k2)
        assert sorted(twisted_irreps(S3, k2).dims) == [1, 1, 2]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(range(len(CORPUS))), st.integers(0, 2 ** 32 - 1))
def test_twist_invariance(i, seed):
    name, G, kappa = CORPUS[i]
    m = max(kappa.modulus, 2)
    base = kappa if kappa.modulus > 1 else Cocycle(m, kappa.table)
    rng = np.random.default_rng(seed)
    eta = rng.integers(0, m, G.order)
    eta[G.identity] = 0
    k2 = coboundary_twist(G, base, eta)
    assert validate_cocycle(G, k2)
    assert are_cohomologous(G, base, k2)
    before, after = twisted_irreps(G, base), twisted_irreps(G, k2)
    assert sorted(before.dims) == sorted(after.dims)
    assert len(kappa_regular_classes(G, k2)) == before.count
    found = coboundary_solution(G, (k2.table - base.table), m)
    assert found is not None
    t = G.table
    assert ((found[:, None] + found[None, :] - found[t] - (k2.table - base.table)) % m == 0).all()


def test_noncohomologous_detection():
    V, kappa = klein_cocycle()
    assert not are_cohomologous(V, trivial_cocycle(V, 2), kappa)
    assert are_cohomologous(V, kappa, Cocycle(2, kappa.table.T))
    with pytest.raises(ValueError):
        are_cohomologous(V, trivial_cocycle(V, 3), kappa)
    name, G, k = CORPUS[0]
    assert not are_cohomologous(G, trivial_cocycle(G, 2), k)


@given(st.integers(2, 36), st.integers(1, 5), st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_solve_mod_finds_solutions_when_they_exist(m, rows, cols, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, m, (rows, cols))
    x = rng.integers(0, m, cols)
    b = (a @ x) % m
    y = solve_mod(a, b, m)
    assert y is not None and ((a @ y - b) % m == 0).all()
    # an inconsistent system: 2 y = 1 mod 4
    assert solve_mod(np.array([[2]]), np.array([1]), 4) is None


def test_solve_mod_exhaustive_small():
    m = 12
    for a0, a1, b in itertools.product(range(m), range(m), range(m)):
        a = np.array([[a0, a1]])
        y = solve_mod(a, np.array([b]), m)
        exists = any((a0 * u + a1 * v - b) % m == 0 for u in range(m) for v in range(m))
        assert (y is not None) == exists
        if y is not None:
            assert (a0 * y[0] + a1 * y[1] - b) % m == 0


def test_isomorphism_search():
    assert is_isomorphic(klein_four(), direct_product(cyclic_group(2), cyclic_group(2)))
    assert not is_isomorphic(cyclic_group(4), klein_four())
    assert not is_isomorphic(dihedral_group(4), quaternion_group())
    iso = find_isomorphism(C.symmetric(3), dihedral_group(3))
    assert iso is not None
    D = dihedral_group(3)
    G = C.symmetric(3)
    assert (D.table[iso[:, None], iso[None, :]] == iso[G.table]).all()


def test_gl23_modulo_center_is_s4():
    name, G, kappa = CORPUS[0]
    assert is_isomorphic(G, symmetric_group(4))
    assert is_isomorphic(central_extension(G, kappa), C.gl2(3)[0])
