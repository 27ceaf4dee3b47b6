from itertools import product

import numpy as np
import pytest

from fusionlim.errors import CapExceeded, ValidationError
from fusionlim.fusion import FusionSystem, overgroup_collection
from fusionlim.library import setup as named_setup
from fusionlim.orbitlim import (Cochain, CenterFunctor, admissible_chains, build_orbit_category,
                                check_rigid_map, coboundary, higher_limit, inclusion_normalize,
                                is_inclusion_normalized, limit_complex, local_conjugator, locality,
                                restriction_injectivity_check, rigid_map, verify_les)
from fusionlim.permgroup import center, dihedral_group, normalizer, symmetric_group
from fusionlim.suites import a6_rigid_data, complementary_splits


@pytest.fixture(scope="module")
def a6_centric(a6_fusion):
    F = a6_fusion
    C = F.centric_collection()
    return F, C, limit_complex(F, C, max_degree=2)


@pytest.fixture(scope="module")
def a6_rigid():
    return a6_rigid_data()


def central_involution(F):
    return next(x for x in center(F.S).sorted_elements if not x.is_identity())


# -- the orbit category -------------------------------------------------------

def test_a6_category_shape(a6_centric):
    F, C, cx = a6_centric
    cat = cx.functor.category
    assert sorted(P.order for P in cat.objects) == [4, 4, 4, 8]
    sizes = {}
    for i, P in enumerate(cat.objects):
        for j, Q in enumerate(cat.objects):
            sizes[(i, j)] = len(cat.mor(i, j))
    fours = [i for i, P in enumerate(cat.objects) if P.order == 4 and len(P.gens) == 2]
    s = next(i for i, P in enumerate(cat.objects) if P == F.S)
    # Aut(V4) is all of S3, and Out(S) is trivial
    for i in fours:
        assert sizes[(i, i)] == 6
        assert sizes[(i, s)] == 3
    assert sizes[(s, s)] == 1
    assert sizes[(fours[0], fours[1])] == 0


def test_category_is_associative(a6_centric):
    _, _, cx = a6_centric
    assert cx.functor.category.check_associative()


def test_center_functor_is_a_functor(a6_centric):
    _, _, cx = a6_centric
    assert cx.functor.check_functorial()


def test_sylow_only_category(a6_fusion):
    F = a6_fusion
    cat = build_orbit_category(F, [F.S])
    assert len(cat) == 1
    # Out_F(S) = N_Gamma(S) / S C_Gamma(S) is trivial in A6
    assert len(cat.mor(0, 0)) == 1 and cat.mor(0, 0)[0].is_identity


def test_non_centric_objects_rejected(a6_fusion):
    F = a6_fusion
    with pytest.raises(ValidationError):
        build_orbit_category(F, [center(F.S), F.S])


def test_skeletal_matches_full_category():
    # D16 has non-normal centric Klein fours, so the two categories differ in size
    F = FusionSystem.from_group(dihedral_group(8), 2)
    C = F.centric_collection()
    assert sorted(len(c) for c in F.f_classes(C)) == [1, 1, 1, 1, 2, 2]
    sk = limit_complex(F, C, max_degree=2)
    full = limit_complex(F, C, max_degree=2, skeletal=False)
    assert [sk.dim(k) for k in range(3)] == [8, 22, 38]
    assert [full.dim(k) for k in range(3)] == [12, 54, 182]
    for k in range(3):
        assert sk.cohomology(k).invariant_factors == full.cohomology(k).invariant_factors
    assert sk.cohomology(0).invariant_factors == [2]


# -- cochains and differentials ----------------------------------------------------

def differential_by_coboundary(cx, k):
    """Matrix of d out of degree k, built one basis cochain at a time."""
    cols = []
    emb = cx.embedding(k)
    for j in range(cx.dim(k)):
        e = np.zeros(cx.dim(k), dtype=np.int64)
        e[j] = emb[j]
        t = cx.to_cochain(k, e)
        cols.append(cx.to_vector(k + 1, coboundary(cx.functor, t)))
    return np.stack(cols, axis=1) if cols else np.zeros((cx.dim(k + 1), 0), dtype=np.int64)


@pytest.mark.parametrize("k", [0, 1])
def test_sparse_differential_matches_cochain_coboundary(a6_centric, k):
    _, _, cx = a6_centric
    assert np.array_equal(differential_by_coboundary(cx, k), cx.matrix(k))


def test_s4_differentials_match():
    st = named_setup("s4")
    cx = limit_complex(st.fusion, overgroup_collection(st), max_degree=2)
    for k in range(3):
        assert np.array_equal(differential_by_coboundary(cx, k), cx.matrix(k))


@pytest.mark.parametrize("k", [0, 1])
def test_d_squared_is_zero(a6_centric, k):
    _, _, cx = a6_centric
    D = cx.matrix(k)
    for j in range(D.shape[1]):
        assert not np.any(cx.apply(k + 1, D[:, j]))


def test_identity_cochain_is_a_cocycle(a6_centric):
    _, _, cx = a6_centric
    t = Cochain(1, {})
    assert coboundary(cx.functor, t).is_trivial()
    assert not np.any(cx.to_vector(1, t))


def test_constant_central_cochain(a6_centric):
    F, _, cx = a6_centric
    f = cx.functor
    z = central_involution(F)
    u = Cochain(0, {(i,): z for i in f.support})
    du = coboundary(f, u)
    assert not du.is_trivial()
    one = F.Gamma.identity
    for (i, m), val in du.values.items():
        # du(c_g) = g z g^-1 z^-1 up to the sign convention; z has order two
        assert val == m.rep * z * m.rep.inverse() * z
    assert cx.is_coboundary(1, cx.to_vector(1, du))
    assert coboundary(f, du).is_trivial()
    # vanishes on inclusions because u is constant
    assert is_inclusion_normalized(f, du, f.category.objects)
    assert all(du((i, cx.functor.category.identity(i)), one) == one for i in f.support)


def brute_limit_orders(cx, k):
    """|Z^k| and |B^k| by enumerating every normalized cochain of degree k and k - 1."""
    f = cx.functor

    def cochains(deg):
        chains = cx.chains(deg)
        choices = [sorted(f.coords[c[0]]) for c in chains]
        for vals in product(*choices):
            yield Cochain(deg, {c: v for c, v in zip(chains, vals) if not v.is_identity()})

    Z = sum(1 for t in cochains(k) if coboundary(f, t).is_trivial())
    if k == 0:
        return Z, 1
    images = set()
    for u in cochains(k - 1):
        d = coboundary(f, u)
        images.add(frozenset(d.values.items()))
    return Z, len(images)


def test_d8_limits_by_enumeration(d8):
    F = FusionSystem.from_group(d8, 2)
    C = F.centric_collection()
    cx = limit_complex(F, C, max_degree=2)
    for k in (0, 1):
        Z, B = brute_limit_orders(cx, k)
        H = cx.cohomology(k)
        assert 2 ** H.log_size == Z // B
    assert cx.cohomology(0).invariant_factors == [2]
    assert cx.cohomology(1).invariant_factors == []


# -- higher limits ---------------------------------------------------------------

def test_a6_first_limit(a6_centric):
    F, C, _ = a6_centric
    r1 = higher_limit(F, C, 1)
    assert r1.invariant_factors == [2]
    assert r1.cochain_dims == [6, 34, 162]
    assert len(r1.witnesses) == 1
    assert higher_limit(F, C, 0).invariant_factors == []
    assert higher_limit(F, C, 2).invariant_factors == []


def test_s4_overgroups():
    st = named_setup("s4")
    F = st.fusion
    R = overgroup_collection(st)
    # C_Z(Y)(Gamma) is trivial for S4 on V4
    for k in range(3):
        assert higher_limit(F, R, k).invariant_factors == []


def test_empty_collection_has_trivial_limits(a6_fusion):
    r = higher_limit(a6_fusion, [], 1)
    assert r.invariant_factors == [] and r.order == 1


def test_degree_out_of_range(a6_centric):
    F, C, _ = a6_centric
    with pytest.raises(ValidationError):
        higher_limit(F, C, 4)
    with pytest.raises(ValidationError):
        higher_limit(F, C, -1)


def test_not_an_interval(a6_fusion):
    F = a6_fusion
    with pytest.raises(ValidationError):
        higher_limit(F, [center(F.S), F.S], 1)


def test_cochain_cap(a6_centric):
    F, C, _ = a6_centric
    with pytest.raises(CapExceeded):
        higher_limit(F, C, 1, cap=5)


# -- normalization and rigid maps -------------------------------------------------

def test_inclusion_normalize_a6(a6_rigid):
    F, C, res, normalized = a6_rigid
    cx = res.complex
    f = cx.functor
    t, tn = res.witnesses[0], normalized[0]
    assert not is_inclusion_normalized(f, t, C)
    assert is_inclusion_normalized(f, tn, C)
    assert coboundary(f, tn).is_trivial()
    diff = (cx.to_vector(1, t) - cx.to_vector(1, tn)) % cx.ring.q
    assert cx.is_coboundary(1, diff)
    assert not cx.is_coboundary(1, cx.to_vector(1, tn))


def test_inclusion_normalize_rejects_non_cocycles(a6_centric):
    F, _, cx = a6_centric
    f = cx.functor
    i, m = next((i, m) for i in f.support for m in f.category.out[i])
    z = central_involution(F)
    with pytest.raises(ValidationError):
        inclusion_normalize(f, Cochain(1, {(i, m): z}))


def test_rigid_map_of_trivial_cocycle_is_identity(a6_rigid):
    F, C, res, _ = a6_rigid
    tau = rigid_map(F, C, Cochain(1, {}), functor=res.complex.functor)
    assert all(tau(g) == g for g in tau.loc.gamma_star)


def test_rigid_map_of_central_coboundary_is_conjugation(a6_rigid):
    F, C, res, _ = a6_rigid
    f = res.complex.functor
    z = central_involution(F)
    du = coboundary(f, Cochain(0, {(i,): z for i in f.support}))
    tau = rigid_map(F, C, du, functor=f)
    assert all(tau(g) == g ^ z for g in tau.loc.gamma_star)
    for Q in f.category.objects:
        c = local_conjugator(F, Q, tau)
        assert all(tau(g) == g ^ c for g in normalizer(F.Gamma, Q).elements)


def test_rigid_map_of_a6_witness(a6_rigid):
    F, C, res, normalized = a6_rigid
    f = res.complex.functor
    tau = rigid_map(F, C, normalized[0], functor=f)
    assert any(tau(g) != g for g in tau.loc.gamma_star)
    chains = admissible_chains(F, C, tau.loc, 2)
    assert chains
    assert check_rigid_map(tau, chains)
    for Q in f.category.objects:
        c = local_conjugator(F, Q, tau)
        assert c in center(F.normalizer_in_S(Q))


def test_rigid_map_requires_normalized_cocycle(a6_rigid):
    F, C, res, _ = a6_rigid
    with pytest.raises(ValidationError):
        rigid_map(F, C, res.witnesses[0], functor=res.complex.functor)
    with pytest.raises(ValidationError):
        rigid_map(F, C, Cochain(1, {}))


def test_rigid_map_outside_locality(a6_rigid):
    F, C, res, _ = a6_rigid
    tau = rigid_map(F, C, Cochain(1, {}), functor=res.complex.functor)
    outside = next(g for g in F.Gamma.sorted_elements if g not in tau.loc)
    with pytest.raises(ValidationError):
        tau(outside)


# -- localities --------------------------------------------------------------

def test_locality_of_all_overgroups_is_everything():
    st = named_setup("s4")
    loc = locality(st, overgroup_collection(st))
    assert len(loc.gamma_star) == st.Gamma.order


def test_locality_of_sylow_is_its_normalizer():
    for name in ("s4", "a6-v4a"):
        st = named_setup(name)
        loc = locality(st, [st.S])
        assert set(loc.gamma_star) == set(normalizer(st.Gamma, st.S).elements)


def test_locality_a6_centric(a6_rigid):
    F, C, _, _ = a6_rigid
    loc = locality(F, C)
    assert len(loc.gamma_star) == 40
    assert all(s in loc for s in F.S.elements)


def test_locality_needs_sylow(a6_fusion):
    with pytest.raises(ValidationError):
        locality(a6_fusion, [])


# -- long exact sequence --------------------------------------------------------

def test_les_s4_splits():
    st = named_setup("s4")
    splits = complementary_splits(st)
    assert len(splits) == 3
    for Q, R in splits:
        rep = verify_les(st.fusion, Q, R)
        assert rep.exact
        assert all(ok for _, ok in rep.nodes)


def test_les_a6_sylow_split(a6_centric):
    F, C, _ = a6_centric
    Q = [F.S]
    R = [P for P in C if P != F.S]
    rep = verify_les(F, Q, R)
    assert rep.exact
    assert rep.orders[("Q", 0)] == 1
    assert rep.orders[("R", 1)] == 2
    assert rep.orders[("QR", 1)] == 1


def test_les_with_empty_part(a6_centric):
    F, C, _ = a6_centric
    assert verify_les(F, C, []).exact


def test_les_rejects_bad_splits(a6_centric):
    F, C, _ = a6_centric
    R = [P for P in C if P != F.S]
    with pytest.raises(ValidationError):
        verify_les(F, R, [F.S])
    with pytest.raises(ValidationError):
        verify_les(F, C, [F.S])


# -- restriction ------------------------------------------------------------------

def test_restriction_to_the_whole_group():
    st = named_setup("s4")
    assert restriction_injectivity_check(st, st.Gamma, overgroup_collection(st))


def test_restriction_preconditions():
    st = named_setup("s4")
    with pytest.raises(ValidationError):
        restriction_injectivity_check(st, st.S, overgroup_collection(st))
    with pytest.raises(ValidationError):
        restriction_injectivity_check(st, st.Gamma, [st.Y])
