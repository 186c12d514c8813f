"""Enriched structures over closed categories: the self-enrichment, left
hom functors, pushforward, and the representation bijection."""

import pytest

from closedcat import hf, instances
from closedcat.closed import build_E_functor, ek_normalize
from closedcat.enriched import (
    VNatFamily,
    build_LX,
    build_Lf,
    build_underlying_V_category,
    check_gamma_repr_bijective,
    check_v_category,
    check_v_functor,
    check_v_natural,
    compose_v_functors,
    enumerate_vnat_families,
    gamma_repr,
    gamma_repr_inverse,
    identity_v_functor,
    pushforward,
)
from closedcat.setcat import build_finset_closed, table_apply

POSITIVE = ["terminal", "heyting2", "z2closed"]


@pytest.fixture(scope="module")
def sets2():
    return build_finset_closed(2)


@pytest.mark.parametrize("name", POSITIVE)
def test_self_enrichment_passes(name):
    cs = instances.get(name).build()
    und_v = build_underlying_V_category(cs)
    assert check_v_category(und_v).ok


def test_self_enrichment_of_finset():
    cs = instances.get("finset").build()
    und_v = build_underlying_V_category(cs)
    assert check_v_category(und_v).ok


@pytest.mark.parametrize("name", POSITIVE)
def test_left_hom_functors_pass(name):
    cs = instances.get(name).build()
    for x in cs.cat.objects():
        assert check_v_functor(build_LX(cs, x)).ok


@pytest.mark.parametrize("name", POSITIVE)
def test_Lf_families_are_natural(name):
    cs = instances.get(name).build()
    for f in cs.cat.all_morphisms():
        assert check_v_natural(build_Lf(cs, f)).ok


def test_L_of_identity_is_identity_family():
    cs = instances.get("heyting2").build()
    for x in cs.cat.objects():
        fam = build_Lf(cs, cs.cat.identity(x))
        for z in cs.cat.objects():
            assert fam.at(z) == cs.cat.identity(cs.hom2_obj(x, z))


def test_L_contravariant_functoriality():
    # the family of a composite is the vertical composite of the families,
    # outer first
    cs = instances.get("heyting2").build()
    cat = cs.cat
    f, g = "0<=1", "1<=1"
    fg = cat.compose(f, g)
    lf, lg, lfg = build_Lf(cs, f), build_Lf(cs, g), build_Lf(cs, fg)
    for z in cat.objects():
        assert lfg.at(z) == cat.compose(lg.at(z), lf.at(z))


def test_heyting_Lf_is_monotonicity_witness():
    cs = instances.get("heyting2").build()
    fam = build_Lf(cs, "0<=1")
    # component at z: (1 => z) -> (0 => z), the unique order witness
    assert fam.at("0") == "0<=1"
    assert fam.at("1") == "1<=1"


def test_pushforward_along_identity_is_identity():
    from closedcat.closed import ClosedFunctor

    cs = instances.get("heyting2").build()
    A = build_underlying_V_category(cs)
    B = pushforward(ClosedFunctor.identity(cs), A)
    assert check_v_category(B).ok
    for x in A.objects:
        for y in A.objects:
            assert B.hom_obj(x, y) == A.hom_obj(x, y)
        assert B.j(x) == A.j(x)
    for x in A.objects:
        for y in A.objects:
            for z in A.objects:
                assert B.L(x, y, z) == A.L(x, y, z)


def _structural_match(cs, sets):
    """E_* of the self-enrichment agrees with the normalized category:
    same hom elements, same composition, same identities."""
    E = build_E_functor(cs, sets)
    EA = pushforward(E, build_underlying_V_category(cs))
    ek, _ = ek_normalize(cs)
    w = ek.closed
    wcat = w.cat
    for x in wcat.objects():
        for y in wcat.objects():
            ea = sorted(a.name for a in EA.hom_obj(x, y).elements)
            wm = sorted(ek.elt_atom(m).name for m in wcat.hom(x, y))
            assert ea == wm, (x, y)
    for x in wcat.objects():
        for y in wcat.objects():
            for z in wcat.objects():
                Lmor = EA.L(x, y, z)
                for g in wcat.hom(y, z):
                    tbl = Lmor.apply(ek.elt_atom(g))
                    for f in wcat.hom(x, y):
                        got = table_apply(tbl, ek.elt_atom(f)).name
                        want = ek.elt_atom(wcat.compose(f, g)).name
                        assert got == want, (x, y, z)
    for x in wcat.objects():
        assert EA.j(x).apply(hf.atom("*")).name == ek.elt_atom(wcat.identity(x)).name
    return EA


@pytest.mark.parametrize("name", ["terminal", "heyting2", "z2closed"])
def test_pushforward_E_equals_normalized(name, sets2):
    cs = instances.get(name).build()
    EA = _structural_match(cs, sets2)
    assert check_v_category(EA).ok


def test_pushforward_E_equals_normalized_finset(sets2):
    cs = instances.get("finset").build()
    _structural_match(cs, sets2)


def test_gamma_repr_identity_family_gives_identity_element():
    # the identity family on the left hom functor represents the point of
    # the identity morphism
    cs = instances.get("heyting2").build()
    ek, _ = ek_normalize(cs)
    w = ek.closed
    for x in w.cat.objects():
        lx = build_LX(w, x)
        comps = {a: w.cat.identity(w.hom2_obj(x, a)) for a in w.cat.objects()}
        fam = VNatFamily("id", lx, lx, comps)
        assert check_v_natural(fam).ok
        got = gamma_repr(ek, lx, x, fam)
        assert got == ek.elt_atom(w.cat.identity(x)).name


@pytest.mark.parametrize("name", POSITIVE)
def test_gamma_repr_of_Lf_is_f(name):
    # the family of hom actions at f represents f itself
    cs = instances.get(name).build()
    ek, _ = ek_normalize(cs)
    w = ek.closed
    for f in list(w.cat.all_morphisms()):
        x, y = w.cat.dom(f), w.cat.cod(f)
        lf_comps = {a: w.hom2_mor(f, w.cat.identity(a)) for a in w.cat.objects()}
        lx, ly = build_LX(w, x), build_LX(w, y)
        fam = VNatFamily("Lf", ly, lx, lf_comps)
        assert check_v_natural(fam).ok
        assert gamma_repr(ek, lx, y, fam) == ek.elt_atom(f).name


def test_gamma_repr_bijection_heyting_exhaustive():
    # enumerate every natural family from the hom functor at 1 to the one
    # at 0; the bijection matches the points of und(0, -) at 1
    cs = instances.get("heyting2").build()
    ek, _ = ek_normalize(cs)
    w = ek.closed
    l0, l1 = build_LX(w, "0"), build_LX(w, "1")
    fams = enumerate_vnat_families(l1, l0)
    rep = check_gamma_repr_bijective(ek, l0, "1")
    assert rep.ok
    points = ek.C_functor.obj_map(l0.obj_map("1")).elements
    assert len(fams) == len(points)


@pytest.mark.parametrize("name", POSITIVE)
def test_gamma_repr_inverse_roundtrip(name):
    cs = instances.get(name).build()
    ek, _ = ek_normalize(cs)
    w = ek.closed
    objs = list(w.cat.objects())
    for x in objs:
        for y in objs:
            T = compose_v_functors(identity_v_functor(build_underlying_V_category(w)), build_LX(w, x))
            for a in ek.C_functor.obj_map(T.obj_map(y)).elements:
                fam = gamma_repr_inverse(ek, T, y, a.name)
                assert gamma_repr(ek, T, y, fam) == a.name
