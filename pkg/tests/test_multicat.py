"""Multicategories: axiom checking, the strict-monoidal construction, and
the group-multiplication oracle for the two-element group instance."""

import itertools

import pytest

from closedcat import instances
from closedcat.core import TabularCategory
from closedcat.errors import BudgetExceeded, StrictnessError
from closedcat.multicat import (
    ArityCaps,
    MMor,
    MultiFunctor,
    MultiNat,
    StrictMonoidalCategory,
    check_multicategory_axioms,
    check_multifunctor,
    check_multinat,
    check_strict_monoidal,
    from_strict_monoidal,
    tabularize_multicat,
)

CAPS = ArityCaps(3)


@pytest.fixture(scope="module")
def z2():
    return instances.get("z2").build()


def test_terminal_multicategory_passes():
    # trivial monoid: one object, singleton homs at every arity
    cat = TabularCategory("one", ["*"], {("*", "*"): ["1"]}, {("1", "1"): "1"}, {"*": "1"})
    smc = StrictMonoidalCategory(cat, lambda x, y: "*", lambda a, b: "1", "*")
    m = from_strict_monoidal(smc, "one")
    assert check_multicategory_axioms(m, CAPS).ok
    for xs, y in m.signatures(CAPS):
        assert len(m.hom(xs, y)) == 1


def test_z2_axioms_and_group_oracle(z2):
    m, w, uw = z2
    assert check_multicategory_axioms(m, CAPS).ok

    # group-multiplication oracle: composition sums parities
    def parity(f):
        return 0 if f.raw == "e" else 1

    for ys, z in m.signatures(ArityCaps(2)):
        for g in m.hom(ys, z):
            for doms in itertools.product(m.profiles(1), repeat=len(ys)):
                fs = []
                for i, d in enumerate(doms):
                    fs.append(m.hom(d, ys[i])[0])
                fs = tuple(fs)
                got = m.compose(fs, g)
                assert parity(got) == (sum(map(parity, fs)) + parity(g)) % 2


def test_hom_sets_are_group_elements(z2):
    m, _, _ = z2
    for n in range(4):
        fs = m.hom(("g",) * n, "g")
        assert sorted(f.raw for f in fs) == ["e", "s"]


def test_strictness_checked():
    # a tensor that is not strictly unital must be rejected
    cat = TabularCategory("one", ["*"], {("*", "*"): ["1"]}, {("1", "1"): "1"}, {"*": "1"})
    bad = StrictMonoidalCategory(cat, lambda x, y: None, lambda a, b: "1", "*")
    assert not check_strict_monoidal(bad).ok
    with pytest.raises(StrictnessError):
        from_strict_monoidal(bad)


def test_degenerate_tensor_rejected():
    # projection-to-the-left is functorial but not unital on morphisms
    elems = ["r0", "r1", "r2"]

    def add(a, b):
        return f"r{(int(a[1]) + int(b[1])) % 3}"

    cat = TabularCategory(
        "z3",
        ["g"],
        {("g", "g"): elems},
        {(a, b): add(a, b) for a in elems for b in elems},
        {"g": "r0"},
    )
    bad = StrictMonoidalCategory(cat, lambda x, y: "g", lambda a, b: a, "g")
    rep = check_strict_monoidal(bad)
    assert "monoidal/unit-strict-mor" in {it.check for it in rep.failures()}

    # swapping arguments in one slot breaks interchange on a noncommutative
    # composite pattern: tensor(a, b) := b . a is still unital but fails
    # interchange exactly on the non-commuting pairs; the cyclic group is
    # abelian, so instead corrupt a single tensor entry
    tweaked = {(a, b): add(a, b) for a in elems for b in elems}
    tweaked[("r1", "r2")] = "r1"
    bad2 = StrictMonoidalCategory(
        cat, lambda x, y: "g", lambda a, b: tweaked[(a, b)], "g"
    )
    rep2 = check_strict_monoidal(bad2)
    assert "monoidal/interchange" in {it.check for it in rep2.failures()}


def test_corrupted_composition_localized():
    m, _, _ = instances.get("z2mc-badcompose").build()
    rep = check_multicategory_axioms(m, CAPS)
    failing = {it.check for it in rep.failures()}
    assert failing == {"mc/assoc"}
    assert all(it.locus for it in rep.failures())
    # the flipped entry itself composes wrongly: independent recomputation
    got = m.compose((("s", 1), ("s", 1)), ("e", 2))
    assert got == ("s", 2)  # corrupted value; the true parity sum is e


def test_rule_backed_vs_tabular_oracle(z2):
    m, _, _ = z2
    tab = tabularize_multicat(m, CAPS)
    assert check_multicategory_axioms(tab, CAPS).ok
    for xs, y in m.signatures(CAPS):
        assert len(tab.hom(tuple(xs), y)) == len(m.hom(xs, y))


def test_freemon3_cap_behavior():
    m, _, _ = instances.get("freemon3").build()
    caps1 = ArityCaps(1)
    assert check_multicategory_axioms(m, caps1).ok
    assert len(m.hom(("x1", "x1", "x1"), "x3")) == 1
    with pytest.raises(BudgetExceeded):
        m.hom(("x2", "x2"), "x3")


def test_multifunctors_on_z2(z2):
    m, _, _ = z2
    for F in [
        MultiFunctor.identity(m),
        instances.z2_inversion(m),
        instances.z2_shift(m),
    ]:
        assert check_multifunctor(F, CAPS).ok, F.name


def test_broken_multifunctor_fails(z2):
    m, _, _ = z2

    def mor_map(f: MMor) -> MMor:
        # flip everything: does not preserve identities
        return MMor(f.dom, f.cod, "s" if f.raw == "e" else "e")

    F = MultiFunctor("flip", m, m, lambda x: x, mor_map)
    rep = check_multifunctor(F, CAPS)
    assert not rep.ok
    assert "mf/identity" in {it.check for it in rep.failures()}


def test_identity_multinat_passes(z2):
    m, _, _ = z2
    F = MultiFunctor.identity(m)
    assert check_multinat(MultiNat.identity(F), CAPS).ok


def test_only_trivial_multinat_on_identity(z2):
    # the equation forces the component to be neutral: r = n.r + r for all n
    m, _, _ = z2
    F = MultiFunctor.identity(m)
    good, bad = [], []
    for cand in m.hom(("g",), "g"):
        r = MultiNat("cand", F, F, lambda x, c=cand: c)
        (good if check_multinat(r, CAPS).ok else bad).append(cand.raw)
    assert good == ["e"] and bad == ["s"]


def test_heyting2mc_axioms():
    m, w, uw = instances.get("heyting2mc").build()
    assert check_multicategory_axioms(m, CAPS).ok
    # subsingleton homs: nonempty exactly when the meet is below the target
    def meet(xs):
        return "1" if all(x == "1" for x in xs) else "0"

    for xs, y in m.signatures(CAPS):
        expect = 1 if (meet(xs) <= y) else 0
        assert len(m.hom(xs, y)) == expect


def test_monoidal_construction_reflects_broken_axioms():
    # a corrupted base category yields a multicategory that fails its own
    # axiom suite at matching loci (the construction does not repair)
    from closedcat.multicat import MonoidalMulticategory

    base = instances.build_broken_compose()
    smc = StrictMonoidalCategory(
        base, lambda x, y: "g", lambda a, b: base.compose(a, b), "g"
    )
    m = MonoidalMulticategory(smc, "broken-derived")
    rep = check_multicategory_axioms(m, ArityCaps(2))
    assert not rep.ok
    assert "mc/assoc" in {it.check for it in rep.failures()}


MONOID_TABLES = {
    "z2": lambda a, b: (a + b) % 2,
    "z3": lambda a, b: (a + b) % 3,
    "bool-or": lambda a, b: max(a, b),
    "bool-and": lambda a, b: min(a, b),
    "min3": lambda a, b: min(a, b),
    "truncadd3": lambda a, b: min(a + b, 2),
}

MONOID_SIZE = {"z2": 2, "z3": 3, "bool-or": 2, "bool-and": 2, "min3": 3, "truncadd3": 3}
MONOID_UNIT = {"z2": 0, "z3": 0, "bool-or": 0, "bool-and": 1, "min3": 2, "truncadd3": 0}


@pytest.mark.parametrize("name", sorted(MONOID_TABLES))
def test_commutative_monoids_give_closed_multicategories(name):
    # every commutative monoid is a one-object strict monoidal category;
    # the derived multicategory passes its axioms and is closed with the
    # neutral element as evaluation
    from closedcat.closedmc import ClosednessWitness, check_closedness

    op = MONOID_TABLES[name]
    size = MONOID_SIZE[name]
    unit = MONOID_UNIT[name]
    elems = [f"x{k}" for k in range(size)]

    def add(a, b):
        return f"x{op(int(a[1:]), int(b[1:]))}"

    cat = TabularCategory(
        name,
        ["g"],
        {("g", "g"): elems},
        {(a, b): add(a, b) for a in elems for b in elems},
        {"g": f"x{unit}"},
    )
    smc = StrictMonoidalCategory(cat, lambda x, y: "g", add, "g")
    m = from_strict_monoidal(smc, name)
    caps = ArityCaps(2)
    assert check_multicategory_axioms(m, caps).ok
    w = ClosednessWitness(
        m, {("g", "g"): "g"}, {("g", "g"): MMor(("g", "g"), "g", f"x{unit}")}
    )
    assert check_closedness(w, caps).ok
