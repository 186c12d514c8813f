"""Closed categories: structures, axiom suite, derived theorems, closed
functors and transformations, the hom-embedding functor into sets, and
normalization to the variant that carries an explicit set-valued functor.

A closed structure is a category C with an internal-hom bifunctor
und(-,-), a unit object, a natural isomorphism i_X : X -> und(1,X), a
dinatural j_X : 1 -> und(X,X), and L^X_YZ : und(Y,Z) ->
und(und(X,Y),und(X,Z)), subject to the axioms CC1..CC5.  The checkers
evaluate both sides of every axiom as concrete morphisms and compare with
the instance's decidable morphism equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import hf
from .core import (
    Category,
    DEFAULT_BUDGET,
    Functor,
    MorId,
    NaturalTransformation,
    ObjId,
    SizeBudget,
    TabularCategory,
    check_functor,
    check_natural,
    guard_objects,
)
from .errors import BudgetExceeded, NotBijective
from .report import Report


@dataclass(frozen=True)
class ClosedStructure:
    """A category together with its closed structure.

    ``hom2_mor(f, g)`` is the bifunctor action: for f : A' -> A and
    g : B -> B' it returns und(A,B) -> und(A',B'), contravariant in the
    first argument and covariant in the second.
    """

    name: str
    cat: Category
    unit: ObjId
    hom2_obj: Callable[[ObjId, ObjId], ObjId]
    hom2_mor: Callable[[MorId, MorId], MorId]
    i: Callable[[ObjId], MorId]
    i_inv: Callable[[ObjId], MorId]
    j: Callable[[ObjId], MorId]
    L: Callable[[ObjId, ObjId, ObjId], MorId]
    # Optional closed-form inverse of gamma, (point, X, Y) -> morphism.
    # Like i_inv it is supplied, not searched: lazy instances need it to
    # compose transported morphisms between nested hom objects, where the
    # search space is not enumerable.  Every use is verified against gamma.
    gamma_inv: Callable[[MorId, ObjId, ObjId], MorId] | None = None

    # und(1_X, g) and und(f, 1_Y): the one-sided hom actions.
    def cov(self, x: ObjId, g: MorId) -> MorId:
        return self.hom2_mor(self.cat.identity(x), g)

    def contra(self, f: MorId, y: ObjId) -> MorId:
        return self.hom2_mor(f, self.cat.identity(y))


def tabular_closed(
    name: str,
    cat: TabularCategory,
    unit: ObjId,
    hom2_obj: dict,
    hom2_mor: dict,
    i: dict,
    i_inv: dict,
    j: dict,
    L: dict,
) -> ClosedStructure:
    return ClosedStructure(
        name,
        cat,
        unit,
        lambda x, y: hom2_obj[(x, y)],
        lambda f, g: hom2_mor[(f, g)],
        i.__getitem__,
        i_inv.__getitem__,
        j.__getitem__,
        lambda x, y, z: L[(x, y, z)],
    )


def gamma(cs: ClosedStructure, f: MorId) -> MorId:
    """The passage from external to internal morphisms: f : X -> Y goes to
    j_X ; und(1,f) : 1 -> und(X,Y)."""
    x = cs.cat.dom(f)
    return cs.cat.compose(cs.j(x), cs.cov(x, f))


# Inverse-of-gamma tables, built once per hom-set.  Keyed by structure
# identity (structures are immutable); the structure itself is kept in the
# value so the id stays valid.
_GINV_TABLES: dict = {}


def gamma_inverse(cs: ClosedStructure, g: MorId, x: ObjId, y: ObjId) -> MorId:
    """The unique f in hom(X,Y) with gamma(f) = g, by exhaustive search.

    Raises NotBijective when zero or several preimages exist, which
    signals that the structure violates CC5.
    """
    key = (id(cs), x, y)
    entry = _GINV_TABLES.get(key)
    if entry is None:
        table: dict = {}
        collisions = set()
        for f in cs.cat.hom(x, y):
            img = gamma(cs, f)
            if img in table:
                collisions.add(img)
            table[img] = f
        entry = (cs, table, collisions)
        _GINV_TABLES[key] = entry
    _, table, collisions = entry
    if g in collisions or g not in table:
        found = 0 if g not in table else 2
        raise NotBijective(
            f"{cs.name}: gamma has {found} preimages of "
            f"{cs.cat.show_mor(g)} in hom({cs.cat.show_obj(x)},{cs.cat.show_obj(y)})"
        )
    return table[g]


def _pairs_locus(cs: ClosedStructure, *objs: ObjId) -> str:
    return ",".join(cs.cat.show_obj(o) for o in objs)


def check_cc_axioms(
    cs: ClosedStructure, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    """CC1..CC5 plus the naturality and dinaturality clauses of the
    definition, each itemized with the first offending object tuple."""
    rep = Report(f"closed-category axioms: {cs.name}")
    cat = cs.cat
    objs = guard_objects(cat, budget)
    u = cs.unit

    def item(check, anchor, failures):
        if failures:
            for locus in failures:
                rep.add_fail(check, anchor, locus)
        else:
            rep.add_pass(check, anchor)

    bad = []
    for x in objs:
        fwd, back = cs.i(x), cs.i_inv(x)
        if cat.compose(fwd, back) != cat.identity(x) or cat.compose(
            back, fwd
        ) != cat.identity(cs.hom2_obj(u, x)):
            bad.append(cat.show_obj(x))
    item("cc/i-iso", "i two-sided inverse", bad)

    bad = []
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                if cat.compose(cs.i(x), cs.cov(u, f)) != cat.compose(f, cs.i(y)):
                    bad.append(f"f={cat.show_mor(f)}")
    item("cc/i-natural", "naturality of i", bad)

    bad = []
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                lhs = cat.compose(cs.j(x), cs.cov(x, f))
                rhs = cat.compose(cs.j(y), cs.contra(f, y))
                if lhs != rhs:
                    bad.append(f"f={cat.show_mor(f)}")
    item("cc/j-dinatural", "dinaturality of j", bad)

    bad = []
    for x in objs:
        if cs.hom2_mor(cat.identity(x), cat.identity(x)) != cat.identity(
            cs.hom2_obj(x, x)
        ):
            bad.append(cat.show_obj(x))
    item("cc/hom2-identity", "und(1,1)=1", bad)

    bad = []
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in cat.hom(b, a):
            for g in cat.hom(c, d):
                both = cs.hom2_mor(f, g)
                route1 = cat.compose(cs.contra(f, c), cs.cov(b, g))
                route2 = cat.compose(cs.cov(a, g), cs.contra(f, d))
                if both != route1 or both != route2:
                    bad.append(f"f={cat.show_mor(f)} g={cat.show_mor(g)}")
    item("cc/hom2-exchange", "und(f,g)=und(f,1);und(1,g)", bad)

    bad = []
    for a in objs:
        for b in objs:
            for c in objs:
                for g in cat.hom(a, b):
                    for g2 in cat.hom(b, c):
                        for w in objs:
                            lhs = cat.compose(cs.cov(w, g), cs.cov(w, g2))
                            if lhs != cs.cov(w, cat.compose(g, g2)):
                                bad.append(
                                    f"cov w={cat.show_obj(w)} g={cat.show_mor(g)}"
                                )
                        for w in objs:
                            lhs = cat.compose(cs.contra(g2, w), cs.contra(g, w))
                            if lhs != cs.contra(cat.compose(g, g2), w):
                                bad.append(
                                    f"contra w={cat.show_obj(w)} g={cat.show_mor(g)}"
                                )
    item("cc/hom2-compose", "functoriality of und(-,-)", bad)

    bad = []
    for x, y, z, z2 in itertools.product(objs, repeat=4):
        for g in cat.hom(z, z2):
            hy = cs.hom2_obj(x, y)
            lhs = cat.compose(cs.L(x, y, z), cs.cov(hy, cs.cov(x, g)))
            rhs = cat.compose(cs.cov(y, g), cs.L(x, y, z2))
            if lhs != rhs:
                bad.append(f"X={cat.show_obj(x)} g={cat.show_mor(g)}")
    item("cc/L-natural-cov", "naturality of L in Z", bad)

    bad = []
    for x, y, y2, z in itertools.product(objs, repeat=4):
        for f in cat.hom(y, y2):
            lhs = cat.compose(cs.contra(f, z), cs.L(x, y, z))
            rhs = cat.compose(
                cs.L(x, y2, z), cs.contra(cs.cov(x, f), cs.hom2_obj(x, z))
            )
            if lhs != rhs:
                bad.append(f"X={cat.show_obj(x)} f={cat.show_mor(f)}")
    item("cc/L-natural-contra", "naturality of L in Y", bad)

    bad = []
    for x in objs:
        for x2 in objs:
            for h in cat.hom(x, x2):
                for y in objs:
                    for z in objs:
                        lhs = cat.compose(
                            cs.L(x, y, z),
                            cs.contra(cs.contra(h, y), cs.hom2_obj(x, z)),
                        )
                        rhs = cat.compose(
                            cs.L(x2, y, z),
                            cs.cov(cs.hom2_obj(x2, y), cs.contra(h, z)),
                        )
                        if lhs != rhs:
                            bad.append(f"h={cat.show_mor(h)} Y={cat.show_obj(y)}")
    item("cc/L-dinatural", "dinaturality of L in X", bad)

    bad = []
    for x in objs:
        for y in objs:
            lhs = cat.compose(cs.j(y), cs.L(x, y, y))
            if lhs != cs.j(cs.hom2_obj(x, y)):
                bad.append(_pairs_locus(cs, x, y))
    item("cc/CC1", "CC1", bad)

    bad = []
    for x in objs:
        for y in objs:
            lhs = cat.compose(cs.L(x, x, y), cs.contra(cs.j(x), cs.hom2_obj(x, y)))
            if lhs != cs.i(cs.hom2_obj(x, y)):
                bad.append(_pairs_locus(cs, x, y))
    item("cc/CC2", "CC2", bad)

    bad = []
    for x, y, uu, v in itertools.product(objs, repeat=4):
        top = cat.compose(
            cs.L(y, uu, v),
            cs.cov(cs.hom2_obj(y, uu), cs.L(x, y, v)),
        )
        bottom = cat.compose_chain(
            cs.L(x, uu, v),
            cs.L(cs.hom2_obj(x, y), cs.hom2_obj(x, uu), cs.hom2_obj(x, v)),
            cs.contra(
                cs.L(x, y, uu),
                cs.hom2_obj(cs.hom2_obj(x, y), cs.hom2_obj(x, v)),
            ),
        )
        if top != bottom:
            bad.append(_pairs_locus(cs, x, y, uu, v))
    item("cc/CC3", "CC3", bad)

    bad = []
    for y in objs:
        for z in objs:
            lhs = cat.compose(
                cs.L(u, y, z), cs.contra(cs.i(y), cs.hom2_obj(u, z))
            )
            if lhs != cs.cov(y, cs.i(z)):
                bad.append(_pairs_locus(cs, y, z))
    item("cc/CC4", "CC4", bad)

    bad = []
    for x in objs:
        for y in objs:
            images = [gamma(cs, f) for f in cat.hom(x, y)]
            target = list(cat.hom(u, cs.hom2_obj(x, y)))
            if len(set(images)) != len(images) or sorted(
                map(cat.mor_key, images)
            ) != sorted(map(cat.mor_key, target)):
                bad.append(_pairs_locus(cs, x, y))
    item("cc/CC5", "CC5 (gamma bijective)", bad)

    return rep


def verify_derived_cc_theorems(
    cs: ClosedStructure, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    """Re-verifies, as independent equations, the consequences that the
    axiom suite is supposed to imply.  A failure here while the axioms
    pass indicates a kernel bug, not a structure bug."""
    rep = Report(f"derived closed-category theorems: {cs.name}")
    cat = cs.cat
    objs = guard_objects(cat, budget)
    u = cs.unit

    bad = []
    for x in objs:
        if cs.i(cs.hom2_obj(u, x)) != cs.cov(u, cs.i(x)):
            bad.append(cat.show_obj(x))
    if bad:
        for b in bad:
            rep.add_fail("derived/i-on-unit-hom", "i on und(1,X)", b)
    else:
        rep.add_pass("derived/i-on-unit-hom", "i on und(1,X)")

    rep.add(
        "derived/j-unit",
        "j at the unit equals i at the unit",
        cs.j(u) == cs.i(u),
        "unit",
    )

    bad = []
    for x in objs:
        for f in cat.hom(u, x):
            if cat.compose(gamma(cs, f), cs.i_inv(x)) != f:
                bad.append(f"f={cat.show_mor(f)}")
    if bad:
        for b in bad:
            rep.add_fail("derived/gamma-section", "gamma then post-inverse-i", b)
    else:
        rep.add_pass("derived/gamma-section", "gamma then post-inverse-i")

    bad = []
    for x in objs:
        for y in objs:
            for z in objs:
                for f in cat.hom(y, z):
                    lhs = cat.compose(gamma(cs, f), cs.L(x, y, z))
                    if lhs != gamma(cs, cs.cov(x, f)):
                        bad.append(f"X={cat.show_obj(x)} f={cat.show_mor(f)}")
    if bad:
        for b in bad:
            rep.add_fail("derived/gamma-L-square", "gamma/L square", b)
    else:
        rep.add_pass("derived/gamma-L-square", "gamma/L square")

    bad_cov, bad_contra = [], []
    for x, y, z in itertools.product(objs, repeat=3):
        for f in cat.hom(x, y):
            for g in cat.hom(y, z):
                gf = gamma(cs, cat.compose(f, g))
                if gf != cat.compose(gamma(cs, f), cs.cov(x, g)):
                    bad_cov.append(f"f={cat.show_mor(f)} g={cat.show_mor(g)}")
                if gf != cat.compose(gamma(cs, g), cs.contra(f, z)):
                    bad_contra.append(f"f={cat.show_mor(f)} g={cat.show_mor(g)}")
    if bad_cov:
        for b in bad_cov:
            rep.add_fail("derived/gamma-compose-cov", "gamma(f.g)=gamma(f);und(1,g)", b)
    else:
        rep.add_pass("derived/gamma-compose-cov", "gamma(f.g)=gamma(f);und(1,g)")
    if bad_contra:
        for b in bad_contra:
            rep.add_fail(
                "derived/gamma-compose-contra", "gamma(f.g)=gamma(g);und(f,1)", b
            )
    else:
        rep.add_pass("derived/gamma-compose-contra", "gamma(f.g)=gamma(g);und(f,1)")

    return rep


@dataclass(frozen=True)
class ClosedFunctor:
    name: str
    source: ClosedStructure
    target: ClosedStructure
    phi: Functor
    phi_hat: Callable[[ObjId, ObjId], MorId]
    phi0: MorId

    @staticmethod
    def identity(cs: ClosedStructure) -> "ClosedFunctor":
        return ClosedFunctor(
            "id",
            cs,
            cs,
            Functor.identity(cs.cat),
            lambda x, y: cs.cat.identity(cs.hom2_obj(x, y)),
            cs.cat.identity(cs.unit),
        )


@dataclass(frozen=True)
class ClosedTransformation:
    name: str
    source: ClosedFunctor
    target: ClosedFunctor
    eta: NaturalTransformation

    @staticmethod
    def identity(F: ClosedFunctor) -> "ClosedTransformation":
        return ClosedTransformation(
            "id",
            F,
            F,
            NaturalTransformation(
                "id",
                F.phi,
                F.phi,
                lambda x: F.target.cat.identity(F.phi.obj_map(x)),
            ),
        )


def check_cf_axioms(F: ClosedFunctor, budget: SizeBudget = DEFAULT_BUDGET) -> Report:
    rep = Report(f"closed-functor axioms: {F.name}")
    C, D = F.source, F.target
    objs = guard_objects(C.cat, budget)
    rep.extend(check_functor(F.phi, budget))

    bad = []
    for x2, x, y, y2 in itertools.product(objs, repeat=4):
        for f in C.cat.hom(x2, x):
            for g in C.cat.hom(y, y2):
                lhs = D.cat.compose(
                    F.phi.mor_map(C.hom2_mor(f, g)), F.phi_hat(x2, y2)
                )
                rhs = D.cat.compose(
                    F.phi_hat(x, y),
                    D.hom2_mor(F.phi.mor_map(f), F.phi.mor_map(g)),
                )
                if lhs != rhs:
                    bad.append(f"f={C.cat.show_mor(f)} g={C.cat.show_mor(g)}")
    if bad:
        for b in bad:
            rep.add_fail("cf/phi-hat-natural", "naturality of phi-hat", b)
    else:
        rep.add_pass("cf/phi-hat-natural", "naturality of phi-hat")

    bad = []
    for x in objs:
        lhs = D.cat.compose_chain(
            F.phi0, F.phi.mor_map(C.j(x)), F.phi_hat(x, x)
        )
        if lhs != D.j(F.phi.obj_map(x)):
            bad.append(C.cat.show_obj(x))
    _flat(rep, "cf/CF1", "CF1", bad)

    bad = []
    for x in objs:
        lhs = D.cat.compose_chain(
            F.phi.mor_map(C.i(x)),
            F.phi_hat(C.unit, x),
            D.hom2_mor(F.phi0, D.cat.identity(F.phi.obj_map(x))),
        )
        if lhs != D.i(F.phi.obj_map(x)):
            bad.append(C.cat.show_obj(x))
    _flat(rep, "cf/CF2", "CF2", bad)

    bad = []
    for x, y, z in itertools.product(objs, repeat=3):
        px, py, pz = (F.phi.obj_map(o) for o in (x, y, z))
        lhs = D.cat.compose_chain(
            F.phi.mor_map(C.L(x, y, z)),
            F.phi_hat(C.hom2_obj(x, y), C.hom2_obj(x, z)),
            D.cov(F.phi.obj_map(C.hom2_obj(x, y)), F.phi_hat(x, z)),
        )
        rhs = D.cat.compose_chain(
            F.phi_hat(y, z),
            D.L(px, py, pz),
            D.contra(F.phi_hat(x, y), D.hom2_obj(px, pz)),
        )
        if lhs != rhs:
            bad.append(_pairs_locus(C, x, y, z))
    _flat(rep, "cf/CF3", "CF3", bad)
    return rep


def _flat(rep: Report, check: str, anchor: str, failures: list[str]) -> None:
    if failures:
        for locus in failures:
            rep.add_fail(check, anchor, locus)
    else:
        rep.add_pass(check, anchor)


def check_cn_axioms(
    t: ClosedTransformation, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    rep = Report(f"closed-transformation axioms: {t.name}")
    F, G = t.source, t.target
    C, D = F.source, F.target
    objs = guard_objects(C.cat, budget)
    rep.extend(check_natural(t.eta, budget))

    lhs = D.cat.compose(F.phi0, t.eta.components(C.unit))
    rep.add("cn/CN1", "CN1", lhs == G.phi0, "unit")

    bad = []
    for x in objs:
        for y in objs:
            lhs = D.cat.compose(
                F.phi_hat(x, y),
                D.cov(F.phi.obj_map(x), t.eta.components(y)),
            )
            rhs = D.cat.compose_chain(
                t.eta.components(C.hom2_obj(x, y)),
                G.phi_hat(x, y),
                D.contra(t.eta.components(x), G.phi.obj_map(y)),
            )
            if lhs != rhs:
                bad.append(_pairs_locus(C, x, y))
    _flat(rep, "cn/CN2", "CN2", bad)
    return rep


def compose_closed_functors(F: ClosedFunctor, G: ClosedFunctor) -> ClosedFunctor:
    """Composite closed functor: the hom comparison maps compose through
    the middle category and the unit comparisons stack."""
    if F.target is not G.source:
        raise ValueError("closed functor endpoints do not match")
    E = G.target

    def phi_hat(x, y):
        return E.cat.compose(
            G.phi.mor_map(F.phi_hat(x, y)),
            G.phi_hat(F.phi.obj_map(x), F.phi.obj_map(y)),
        )

    phi0 = E.cat.compose(G.phi0, G.phi.mor_map(F.phi0))
    return ClosedFunctor(
        f"{F.name};{G.name}", F.source, G.target, F.phi.then(G.phi), phi_hat, phi0
    )


def compose_cn_vertical(
    s: ClosedTransformation, t: ClosedTransformation
) -> ClosedTransformation:
    if s.target is not t.source:
        raise ValueError("2-cell endpoints do not match")
    D = s.source.target

    def comp(x):
        return D.cat.compose(s.eta.components(x), t.eta.components(x))

    return ClosedTransformation(
        f"{s.name};{t.name}",
        s.source,
        t.target,
        NaturalTransformation(
            f"{s.name};{t.name}", s.source.phi, t.target.phi, comp
        ),
    )


def compose_cn_horizontal(
    s: ClosedTransformation, t: ClosedTransformation
) -> ClosedTransformation:
    """Horizontal composite by whiskering: component at X is
    t_(phi X) ; psi'(s_X)."""
    F2, G2 = t.source, t.target
    E = F2.target

    def comp(x):
        return E.cat.compose(
            t.eta.components(s.source.phi.obj_map(x)),
            G2.phi.mor_map(s.eta.components(x)),
        )

    return ClosedTransformation(
        f"{s.name}*{t.name}",
        compose_closed_functors(s.source, t.source),
        compose_closed_functors(s.target, t.target),
        NaturalTransformation(
            f"{s.name}*{t.name}",
            compose_closed_functors(s.source, t.source).phi,
            compose_closed_functors(s.target, t.target).phi,
            comp,
        ),
    )


def build_E_functor(
    cs: ClosedStructure, sets: ClosedStructure, budget: SizeBudget = DEFAULT_BUDGET
) -> ClosedFunctor:
    """The hom-embedding into sets: e = hom(1,-), with the comparison map
    on hom objects given by de-internalizing (gamma inverse) and then
    post-composition, and the unit comparison picking out 1 at the unit.

    ``sets`` must be the lazy finite-sets closed structure; its objects
    are hereditarily finite sets, so morphisms of cs are embedded as
    named atoms.
    """
    from .setcat import SetMor  # local import to avoid a cycle

    cat = cs.cat
    u = cs.unit
    obj_memo: dict = {}
    mor_memo: dict = {}
    hat_memo: dict = {}

    def elt(m: MorId) -> hf.HF:
        return hf.atom(cat.show_mor(m))

    def e_obj(x: ObjId) -> hf.HF:
        if x not in obj_memo:
            obj_memo[x] = hf.fset(elt(m) for m in cat.hom(u, x))
        return obj_memo[x]

    def e_mor(f: MorId) -> SetMor:
        if f not in mor_memo:
            x, y = cat.dom(f), cat.cod(f)
            table = {elt(h): elt(cat.compose(h, f)) for h in cat.hom(u, x)}
            mor_memo[f] = SetMor.from_table(e_obj(x), e_obj(y), table)
        return mor_memo[f]

    phi = Functor(f"E({cs.name})", cat, sets.cat, e_obj, e_mor)

    def phi_hat(x: ObjId, y: ObjId) -> SetMor:
        if (x, y) in hat_memo:
            return hat_memo[(x, y)]
        src = e_obj(cs.hom2_obj(x, y))
        table = {}
        for h in cat.hom(u, cs.hom2_obj(x, y)):
            f = gamma_inverse(cs, h, x, y)
            table[elt(h)] = hf.ftable(
                (elt(k), elt(cat.compose(k, f))) for k in cat.hom(u, x)
            )
        out = SetMor.from_table(src, sets.hom2_obj(e_obj(x), e_obj(y)), table)
        hat_memo[(x, y)] = out
        return out

    phi0 = SetMor.from_table(
        sets.unit, e_obj(u), {hf.atom("*"): elt(cat.identity(u))}
    )
    return ClosedFunctor(f"E({cs.name})", cs, sets, phi, phi_hat, phi0)


@dataclass(frozen=True)
class EKClosedStructure:
    """A closed structure with the extra set-valued functor required by the
    classical set-functor presentation: C(-) agrees with the hom-set
    functor on internal homs (CC0) and sends identities to the internal
    identities (CC5').  ``elt_atom`` names each morphism as the atom that represents
    it inside the set-valued functor's values."""

    closed: ClosedStructure
    C_functor: Functor
    elt_atom: Callable[[MorId], hf.HF]
    base: ClosedStructure | None = None  # the structure that was normalized


@dataclass(frozen=True)
class WMor:
    """Morphism of the normalized category: a point of an internal hom."""

    dom: ObjId
    cod: ObjId
    point: MorId  # a morphism 1 -> und(dom,cod) of the base

    def __str__(self) -> str:
        return f"<{self.point}:{self.dom}->{self.cod}>"


def ek_normalize(
    cs: ClosedStructure, budget: SizeBudget = DEFAULT_BUDGET
) -> tuple[EKClosedStructure, ClosedFunctor]:
    """Replace a closed category by an isomorphic one whose morphisms
    X -> Y literally are the points 1 -> und(X,Y), composed via L and the
    inverse of gamma.  The internal structure is transported along gamma,
    and the set-valued functor sends an object to its set of points.

    Returns the normalized structure plus the closed-functor isomorphism
    whose underlying functor is gamma on morphisms.
    """
    from .setcat import SetMor, build_finset_closed

    cat = cs.cat
    u = cs.unit
    objs = guard_objects(cat, budget)

    def point_name(m: MorId) -> str:
        return cat.show_mor(m)

    homs: dict[tuple[ObjId, ObjId], list[WMor]] = {}
    for x in objs:
        for y in objs:
            pts = sorted(cat.hom(u, cs.hom2_obj(x, y)), key=cat.mor_key)
            homs[(x, y)] = [WMor(x, y, p) for p in pts]

    # Memoized inverse-of-gamma per hom-set; building the table also checks
    # injectivity, so CC5 violations surface as NotBijective here too.
    # A supplied closed-form inverse short-circuits the search (needed when
    # the hom-set is not enumerable) but is still checked against gamma.
    ginv_maps: dict[tuple[ObjId, ObjId], dict[MorId, MorId]] = {}

    def g_inv_at(point: MorId, x: ObjId, y: ObjId) -> MorId:
        if cs.gamma_inv is not None:
            f = cs.gamma_inv(point, x, y)
            if gamma(cs, f) != point:
                raise NotBijective(
                    f"{cs.name}: supplied gamma inverse disagrees with gamma"
                )
            return f
        table = ginv_maps.get((x, y))
        if table is None:
            table = {}
            for f in cat.hom(x, y):
                img = gamma(cs, f)
                if img in table:
                    raise NotBijective(
                        f"{cs.name}: gamma not injective on hom({x},{y})"
                    )
                table[img] = f
            ginv_maps[(x, y)] = table
        if point not in table:
            raise NotBijective(
                f"{cs.name}: no gamma preimage in hom({x},{y})"
            )
        return table[point]

    def g_inv(m: WMor) -> MorId:
        return g_inv_at(m.point, m.dom, m.cod)

    def compose_rule(f: WMor, g: WMor) -> WMor:
        # Composition by transport along gamma.  The defining formula
        # (f, g) -> f . gamma^{-1}(g . L) agrees with this wherever the
        # intermediate hom-set is enumerable; check_ek_axioms re-checks
        # that agreement over the enumerated objects.
        return WMor(
            f.dom, g.cod, gamma(cs, cat.compose(g_inv(f), g_inv(g)))
        )

    def identity_rule(x: ObjId) -> WMor:
        return WMor(x, x, gamma(cs, cat.identity(x)))

    wcat = _WCategory(f"ek({cs.name})", cat, objs, homs, compose_rule, identity_rule)

    def lift(m: MorId) -> WMor:
        return WMor(cat.dom(m), cat.cod(m), gamma(cs, m))

    def hom2_mor(f: WMor, g: WMor) -> WMor:
        return lift(cs.hom2_mor(g_inv(f), g_inv(g)))

    w = ClosedStructure(
        f"ek({cs.name})",
        wcat,
        u,
        cs.hom2_obj,
        hom2_mor,
        lambda x: lift(cs.i(x)),
        lambda x: lift(cs.i_inv(x)),
        lambda x: lift(cs.j(x)),
        lambda x, y, z: lift(cs.L(x, y, z)),
    )

    sets = build_finset_closed(1, budget)

    def elt_atom(m: WMor) -> hf.HF:
        return hf.atom(point_name(m.point))

    def c_obj(x: ObjId) -> hf.HF:
        return hf.fset(hf.atom(point_name(p)) for p in cat.hom(u, x))

    def c_mor(f: WMor) -> SetMor:
        r = g_inv(f)
        table = {
            hf.atom(point_name(h)): hf.atom(point_name(cat.compose(h, r)))
            for h in cat.hom(u, f.dom)
        }
        return SetMor.from_table(c_obj(f.dom), c_obj(f.cod), table)

    c_functor = Functor(f"V({cs.name})", wcat, sets.cat, c_obj, c_mor)
    ek = EKClosedStructure(w, c_functor, elt_atom, cs)

    iso_phi = Functor(f"gamma({cs.name})", cat, wcat, lambda x: x, lift)
    iso = ClosedFunctor(
        f"gamma({cs.name})",
        cs,
        w,
        iso_phi,
        lambda x, y: wcat.identity(cs.hom2_obj(x, y)),
        wcat.identity(u),
    )
    return ek, iso


class _WCategory(Category):
    """Category of internal points; composition and identities are computed
    through the base structure on demand, so morphisms between non-seed
    objects (nested hom objects) compose too.  Hom objects of the base may
    coincide as objects, so endpoints live on the morphisms."""

    def __init__(self, name, base: Category, objs, homs, compose_rule, identity_rule):
        self.name = name
        self._base = base
        self._objects = tuple(objs)
        self._homs = {k: tuple(v) for k, v in homs.items()}
        self._compose_rule = compose_rule
        self._compose_memo: dict = {}
        self._identity_rule = identity_rule
        self._identity_memo: dict = {}

    def objects(self):
        return self._objects

    def hom(self, x, y):
        if (x, y) in self._homs:
            return self._homs[(x, y)]
        raise BudgetExceeded(f"{self.name}: hom over non-seed objects")

    def identity(self, x):
        if x not in self._identity_memo:
            self._identity_memo[x] = self._identity_rule(x)
        return self._identity_memo[x]

    def compose(self, f: WMor, g: WMor) -> WMor:
        if f.cod != g.dom:
            raise ValueError(f"cannot compose {f} with {g}")
        key = (f, g)
        if key not in self._compose_memo:
            self._compose_memo[key] = self._compose_rule(f, g)
        return self._compose_memo[key]

    def dom(self, f: WMor):
        return f.dom

    def cod(self, f: WMor):
        return f.cod

    def obj_key(self, x):
        return self._base.obj_key(x)

    def mor_key(self, f: WMor):
        return (
            self._base.obj_key(f.dom),
            self._base.obj_key(f.cod),
            self._base.mor_key(f.point),
        )

    def show_obj(self, x):
        return self._base.show_obj(x)

    def show_mor(self, f: WMor):
        return f"<{self._base.show_mor(f.point)}>"


def check_ek_axioms(
    ek: EKClosedStructure, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    """CC0 (the set-valued functor computes hom-sets on internal homs,
    on objects and on morphisms) and CC5' (identities go to the internal
    identities), both as on-the-nose equalities."""
    rep = Report(f"set-functor presentation: {ek.closed.name}")
    w = ek.closed
    cat = w.cat
    objs = guard_objects(cat, budget)

    bad = []
    for x in objs:
        for y in objs:
            via_c = ek.C_functor.obj_map(w.hom2_obj(x, y))
            direct = hf.fset(ek.elt_atom(m) for m in cat.hom(x, y))
            if via_c != direct:
                bad.append(_pairs_locus(w, x, y))
    _flat(rep, "ek/CC0-objects", "CC0 on objects", bad)

    bad = []
    for x, y, uu, v in itertools.product(objs, repeat=4):
        for f in cat.hom(x, y):
            for g in cat.hom(uu, v):
                via_c = ek.C_functor.mor_map(w.hom2_mor(f, g))
                table = {
                    ek.elt_atom(m): ek.elt_atom(
                        cat.compose_chain(f, m, g)
                    )
                    for m in cat.hom(y, uu)
                }
                if dict(via_c.mapping()) != table:
                    bad.append(f"f={cat.show_mor(f)} g={cat.show_mor(g)}")
    _flat(rep, "ek/CC0-morphisms", "CC0 on morphisms", bad)

    bad = []
    for x in objs:
        i_img = ek.C_functor.mor_map(w.i(w.hom2_obj(x, x)))
        got = i_img.apply(ek.elt_atom(cat.identity(x)))
        if got != ek.elt_atom(w.j(x)):
            bad.append(cat.show_obj(x))
    _flat(rep, "ek/CC5'", "CC5' (identity goes to j)", bad)

    if ek.base is not None:
        # Composition in the normalized category is implemented by
        # transport along gamma; re-derive it from the defining formula
        # f . gamma^{-1}(g . L) wherever the middle hom-set is enumerable.
        base = ek.base
        bad = []
        for x, y, z in itertools.product(objs, repeat=3):
            for f in cat.hom(x, y):
                for g in cat.hom(y, z):
                    gl = base.cat.compose(g.point, base.L(x, y, z))
                    if base.gamma_inv is not None:
                        step = base.gamma_inv(
                            gl, base.hom2_obj(x, y), base.hom2_obj(x, z)
                        )
                        if gamma(base, step) != gl:
                            step = None
                    else:
                        step = gamma_inverse(
                            base, gl, base.hom2_obj(x, y), base.hom2_obj(x, z)
                        )
                    want = (
                        None
                        if step is None
                        else base.cat.compose(f.point, step)
                    )
                    if want is None or cat.compose(f, g).point != want:
                        bad.append(
                            f"f={cat.show_mor(f)} g={cat.show_mor(g)}"
                        )
        _flat(rep, "ek/compose-formula", "composition via gamma-inverse of g.L", bad)

    rep.extend(check_functor(ek.C_functor, budget))
    return rep
