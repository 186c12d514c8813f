"""The passage between closed multicategories with unit objects and closed
categories, in both directions.

Forward: a closed multicategory with a unit object has an underlying
closed category (unary homs, internal hom objects, i from the unit
contraction, j from the internal identities, L from currying the internal
composition); multifunctors induce closed functors via closing
transformations; multinatural transformations keep their components.

Backward: a closed functor between underlying closed categories lifts to
a multifunctor by recursion on arity, and every finite closed category is
realized, up to isomorphism, as the underlying closed category of a
multicategory of enriched transformation families between left hom
functors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .closed import (
    ClosedFunctor,
    ClosedStructure,
    ClosedTransformation,
    EKClosedStructure,
    check_cf_axioms,
    check_cn_axioms,
    ek_normalize,
    gamma,
)
from .closedmc import (
    ClosednessWitness,
    InternalCategory,
    UnitWitness,
    bar,
    build_internal_category,
    curry1,
    hom_action_contra,
    hom_action_cov,
    unit_contraction,
    uncurry,
)
from .core import Category, DEFAULT_BUDGET, MorId, ObjId, SizeBudget
from .enriched import (
    VFunctor,
    VNatFamily,
    build_LX,
    build_underlying_V_category,
    compose_v_functors,
    enumerate_vnat_families,
    gamma_repr,
    identity_v_functor,
)
from .errors import KernelError, NotBijective
from .multicat import (
    ArityCaps,
    DEFAULT_CAPS,
    MultiFunctor,
    MultiNat,
    Multicategory,
    Profile,
    _flat,
    _guard_hom,
)
from .report import Report


class UnderlyingCategory(Category):
    """The category of unary morphisms of a multicategory."""

    def __init__(self, m: Multicategory):
        self._m = m
        self.name = f"U({m.name})"

    def objects(self):
        return tuple(sorted(self._m.objects(), key=self._m.obj_key))

    def hom(self, x, y):
        return self._m.hom((x,), y)

    def identity(self, x):
        return self._m.identity(x)

    def compose(self, f, g):
        return self._m.compose((f,), g)

    def dom(self, f):
        return self._m.dom(f)[0]

    def cod(self, f):
        return self._m.cod(f)

    def obj_key(self, x):
        return self._m.obj_key(x)

    def mor_key(self, f):
        return self._m.mor_key(f)

    def show_obj(self, x):
        return self._m.show_obj(x)

    def show_mor(self, f):
        return self._m.show_mor(f)


def _contraction_inverse(
    w: ClosednessWitness, uw: UnitWitness, x: ObjId, caps: ArityCaps
) -> MorId:
    m = w.m
    h = w.hom_obj((uw.unit,), x)
    t = unit_contraction(w, uw, x)
    hits = [
        g
        for g in _guard_hom(m, (x,), h, caps)
        if m.compose((t,), g) == m.identity(h)
        and m.compose((g,), t) == m.identity(x)
    ]
    if len(hits) != 1:
        raise NotBijective(
            f"{m.name}: unit contraction at {m.show_obj(x)} has {len(hits)} inverses"
        )
    return hits[0]


def underlying_closed_category(
    w: ClosednessWitness,
    uw: UnitWitness,
    caps: ArityCaps = DEFAULT_CAPS,
    ic: InternalCategory | None = None,
) -> ClosedStructure:
    """The underlying closed category of a closed multicategory with a
    unit object.  i inverts the unit contraction, j factors the internal
    identity through u, and L curries the internal composition."""
    m = w.m
    if ic is None:
        ic, _ = build_internal_category(w, caps)
    cat = UnderlyingCategory(m)
    objs = cat.objects()

    i = {x: _contraction_inverse(w, uw, x, caps) for x in objs}
    i_inv = {x: unit_contraction(w, uw, x) for x in objs}
    j = {x: bar(w, uw, ic.unit1[x], caps) for x in objs}

    memo: dict = {}

    def hom2_mor(f: MorId, g: MorId) -> MorId:
        key = (f, g)
        if key not in memo:
            step1 = hom_action_contra(w, f, m.dom(g)[0], caps)
            step2 = hom_action_cov(w, (m.dom(f)[0],), g, caps)
            memo[key] = m.compose((step1,), step2)
        return memo[key]

    return ClosedStructure(
        f"U({m.name})",
        cat,
        uw.unit,
        lambda x, y: w.hom_obj((x,), y),
        hom2_mor,
        i.__getitem__,
        i_inv.__getitem__,
        j.__getitem__,
        lambda x, y, z: ic.LX[(x, y, z)],
    )


def verify_u_construction(
    w: ClosednessWitness,
    uw: UnitWitness,
    caps: ArityCaps = DEFAULT_CAPS,
    ic: InternalCategory | None = None,
) -> Report:
    """The five reformulations that make the underlying structure a closed
    category, each named after the axiom it discharges: CC1 reduces to the
    internal hom functor preserving identities, CC2 to the unit law of the
    internal composition, CC3 to its functoriality, CC4 to compatibility
    with the unit contraction, and CC5 to the currying factorization of
    gamma."""
    m = w.m
    rep = Report(f"closed category from multicategory: {m.name}")
    if ic is None:
        ic, _ = build_internal_category(w, caps)
    objs = sorted(m.objects(), key=m.obj_key)
    unit = uw.unit

    bad = []
    for x in objs:
        for y in objs:
            lhs = m.compose((ic.unit1[y],), ic.LX[(x, y, y)])
            if lhs != ic.unit1[w.hom_obj((x,), y)]:
                bad.append(f"{x},{y}")
    _flat(rep, "u/CC1-internal-identities", "CC1 via L preserving identities", bad)

    bad = []
    for x in objs:
        for y in objs:
            hxy = w.hom_obj((x,), y)
            lhs = m.compose((ic.unit1[x], m.identity(hxy)), ic.mu[(x, x, y)])
            if lhs != m.identity(hxy):
                bad.append(f"{x},{y}")
    _flat(rep, "u/CC2-unit-law", "CC2 via the identity axiom for mu", bad)

    bad = []
    for x, y, z, v in itertools.product(objs, repeat=4):
        lhs = m.compose((ic.mu[(y, z, v)],), ic.LX[(x, y, v)])
        rhs = m.compose(
            (ic.LX[(x, y, z)], ic.LX[(x, z, v)]),
            ic.mu[(w.hom_obj((x,), y), w.hom_obj((x,), z), w.hom_obj((x,), v))],
        )
        if lhs != rhs:
            bad.append(f"{x},{y},{z},{v}")
    _flat(rep, "u/CC3-internal-functoriality", "CC3 via L preserving composition", bad)

    bad = []
    for y in objs:
        for z in objs:
            ty = unit_contraction(w, uw, y)
            tz = unit_contraction(w, uw, z)
            lhs = m.compose(
                (ic.LX[(unit, y, z)],),
                hom_action_cov(w, (w.hom_obj((unit,), y),), tz, caps),
            )
            rhs = hom_action_contra(w, ty, z, caps)
            if lhs != rhs:
                bad.append(f"{y},{z}")
    _flat(rep, "u/CC4-contraction", "CC4 via the unit contraction", bad)

    bad = []
    ucs = underlying_closed_category(w, uw, caps, ic)
    for x in objs:
        for y in objs:
            for f in m.hom((x,), y):
                g = gamma(ucs, f)
                nullary = m.compose((uw.u,), g)
                back = uncurry(w, nullary, (x,), y)
                if back != f:
                    bad.append(f"f={m.show_mor(f)}")
    _flat(rep, "u/CC5-gamma-factorization", "CC5 via the currying factorization", bad)
    return rep


def underlying_closed_functor(
    F: MultiFunctor,
    w_src: ClosednessWitness,
    uw_src: UnitWitness,
    w_tgt: ClosednessWitness,
    uw_tgt: UnitWitness,
    src_cs: ClosedStructure,
    tgt_cs: ClosedStructure,
    caps: ArityCaps = DEFAULT_CAPS,
) -> ClosedFunctor:
    """The closed functor induced by a multifunctor: the hom comparison is
    the closing transformation and the unit comparison factors the image
    of u."""
    from .closedmc import closing_transformation
    from .core import Functor

    phi = Functor(
        f"U({F.name})",
        src_cs.cat,
        tgt_cs.cat,
        F.obj_map,
        F.mor_map,
    )

    def phi_hat(x, y):
        return closing_transformation(w_src, w_tgt, F, (x,), y, caps)

    phi0 = bar(w_tgt, uw_tgt, F.mor_map(uw_src.u), caps)
    return ClosedFunctor(f"U({F.name})", src_cs, tgt_cs, phi, phi_hat, phi0)


def underlying_closed_transformation(
    r: MultiNat, UF: ClosedFunctor, UG: ClosedFunctor
) -> ClosedTransformation:
    from .core import NaturalTransformation

    return ClosedTransformation(
        f"U({r.name})",
        UF,
        UG,
        NaturalTransformation(f"U({r.name})", UF.phi, UG.phi, r.components),
    )


def check_U_functoriality(
    F: MultiFunctor,
    G: MultiFunctor,
    w1: ClosednessWitness,
    uw1: UnitWitness,
    w2: ClosednessWitness,
    uw2: UnitWitness,
    w3: ClosednessWitness,
    uw3: UnitWitness,
    caps: ArityCaps = DEFAULT_CAPS,
) -> Report:
    """Strict functoriality of the passage to closed data: the induced
    closed functor of a composite is the composite of the induced ones,
    identities go to identities, and vertical composites of 2-cells are
    preserved componentwise."""
    from .closed import compose_closed_functors

    rep = Report(f"functoriality of U: {F.name};{G.name}")
    cs1 = underlying_closed_category(w1, uw1, caps)
    cs2 = underlying_closed_category(w2, uw2, caps)
    cs3 = underlying_closed_category(w3, uw3, caps)
    UF = underlying_closed_functor(F, w1, uw1, w2, uw2, cs1, cs2, caps)
    UG = underlying_closed_functor(G, w2, uw2, w3, uw3, cs2, cs3, caps)
    Ucomp = underlying_closed_functor(
        F.then(G), w1, uw1, w3, uw3, cs1, cs3, caps
    )
    eq, locus = closed_functors_equal(Ucomp, compose_closed_functors(UF, UG))
    rep.add("u-fun/compose", "U(G.F) = U(G).U(F)", eq, locus)

    Uid = underlying_closed_functor(
        MultiFunctor.identity(w1.m), w1, uw1, w1, uw1, cs1, cs1, caps
    )
    eq2, locus2 = closed_functors_equal(Uid, ClosedFunctor.identity(cs1))
    rep.add("u-fun/identity", "U(id) = id", eq2, locus2)

    r = MultiNat.identity(F)
    rr = compose_multinat_vertical(r, r)
    same = all(
        rr.components(x) == w2.m.compose((r.components(x),), r.components(x))
        for x in w1.m.objects()
    )
    rep.add("u-fun/2-cells", "vertical composites keep their components", same)
    return rep


def compose_multinat_vertical(r: MultiNat, s: MultiNat) -> MultiNat:
    if r.target is not s.source:
        raise ValueError("2-cell endpoints do not match")
    tgt = r.source.target

    def comp(x):
        return tgt.compose((r.components(x),), s.components(x))

    return MultiNat(f"{r.name};{s.name}", r.source, s.target, comp)


def closed_functors_equal(
    A: ClosedFunctor, B: ClosedFunctor, budget: SizeBudget = DEFAULT_BUDGET
) -> tuple[bool, str]:
    """Componentwise equality of closed functors over enumerated objects
    and morphisms; returns a locus for the first difference."""
    cat = A.source.cat
    objs = cat.objects()
    for x in objs:
        if A.phi.obj_map(x) != B.phi.obj_map(x):
            return False, f"object {cat.show_obj(x)}"
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                if A.phi.mor_map(f) != B.phi.mor_map(f):
                    return False, f"morphism {cat.show_mor(f)}"
            if A.phi_hat(x, y) != B.phi_hat(x, y):
                return False, f"hom comparison at {cat.show_obj(x)},{cat.show_obj(y)}"
    if A.phi0 != B.phi0:
        return False, "unit comparison"
    return True, ""


def multifunctors_equal(
    F: MultiFunctor, G: MultiFunctor, caps: ArityCaps = DEFAULT_CAPS
) -> tuple[bool, str]:
    m = F.source
    for x in m.objects():
        if F.obj_map(x) != G.obj_map(x):
            return False, f"object {m.show_obj(x)}"
    for xs, y in m.signatures(caps):
        for f in m.hom(xs, y):
            if F.mor_map(f) != G.mor_map(f):
                return False, f"morphism {m.show_mor(f)}"
    return True, ""


def check_injectivity(
    F: MultiFunctor,
    G: MultiFunctor,
    UF: ClosedFunctor,
    UG: ClosedFunctor,
    caps: ArityCaps = DEFAULT_CAPS,
) -> Report:
    """If the induced closed functors agree componentwise, the
    multifunctors must agree on every signature within caps."""
    rep = Report(f"injectivity on 1-cells: {F.name} vs {G.name}")
    same_u, locus_u = closed_functors_equal(UF, UG)
    if not same_u:
        rep.add_pass("inj/u-images-differ", f"closed functors differ ({locus_u})")
        return rep
    same, locus = multifunctors_equal(F, G, caps)
    rep.add("inj/equal", "equal images force equal multifunctors", same, locus)
    return rep


def check_2cell_transfer(
    r: MultiNat,
    UF: ClosedFunctor,
    UG: ClosedFunctor,
    caps: ArityCaps = DEFAULT_CAPS,
) -> Report:
    """A multinatural transformation's components form a closed
    transformation between the induced closed functors, and conversely a
    closed transformation's components are multinatural."""
    from .multicat import check_multinat

    rep = Report(f"2-cell transfer: {r.name}")
    ct = underlying_closed_transformation(r, UF, UG)
    rep.extend(check_cn_axioms(ct), prefix="forward/")
    back = MultiNat(f"{r.name}'", r.source, r.target, ct.eta.components)
    rep.extend(check_multinat(back, caps), prefix="backward/")
    return rep


def lift_closed_functor(
    Phi: ClosedFunctor,
    w_src: ClosednessWitness,
    uw_src: UnitWitness,
    w_tgt: ClosednessWitness,
    uw_tgt: UnitWitness,
    caps: ArityCaps = DEFAULT_CAPS,
) -> MultiFunctor:
    """Reconstruct a multifunctor from a closed functor between the
    underlying closed categories.

    Nullary morphisms factor through the unit: the image is u, then the
    unit comparison, then the image of the factorization.  Positive-arity
    morphisms are defined by recursion: curry off the first input, map
    the rest, postcompose the hom comparison, and uncurry in the target.
    Results are memoized per morphism."""
    m, d = w_src.m, w_tgt.m
    memo: dict = {}

    def lift(f: MorId) -> MorId:
        if f in memo:
            return memo[f]
        xs = m.dom(f)
        if len(xs) == 0:
            fbar = bar(w_src, uw_src, f, caps)
            head = d.compose((uw_tgt.u,), Phi.phi0)
            out = d.compose((head,), Phi.phi.mor_map(fbar))
        else:
            x1, y = xs[0], m.cod(f)
            inner = lift(curry1(w_src, f, caps))
            t = d.compose((inner,), Phi.phi_hat(x1, y))
            fx1, fy = Phi.phi.obj_map(x1), Phi.phi.obj_map(y)
            out = d.compose(
                (d.identity(fx1), t), w_tgt.ev((fx1,), fy)
            )
        memo[f] = out
        return out

    return MultiFunctor(f"lift({Phi.name})", m, d, Phi.phi.obj_map, lift)


# ---------------------------------------------------------------------------
# The representing multicategory of a finite closed category.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RepresentingMorphism:
    """A morphism of the representing multicategory: an enriched natural
    family from the left hom functor at the codomain to the composite of
    the left hom functors at the domain profile, keyed by its coordinate
    under the representation bijection."""

    dom: Profile
    cod: ObjId
    components: tuple
    gamma_name: str = field(compare=False)

    def __str__(self):
        return f"rep[{self.gamma_name}]:{','.join(map(str, self.dom))}->{self.cod}"


class RepresentingMulticat(Multicategory):
    """Multicategory whose hom-sets are enriched natural families between
    composites of left hom functors, with composition by whiskering and
    pointwise composition."""

    def __init__(self, ek: EKClosedStructure, caps: ArityCaps):
        w = ek.closed
        self.ek = ek
        self.base = w
        self.caps = caps
        self.name = f"rep({w.name})"
        wcat = w.cat
        objs = tuple(sorted(wcat.objects(), key=wcat.obj_key))
        for x in objs:
            for y in objs:
                if w.hom2_obj(x, y) not in objs:
                    raise KernelError(
                        f"{w.name}: objects not closed under internal homs"
                    )
        self._objs = objs
        self._und_v = build_underlying_V_category(w)
        self._lx = {x: build_LX(w, x) for x in objs}
        self._functors: dict[Profile, VFunctor] = {}
        self._hom: dict[tuple[Profile, ObjId], tuple[RepresentingMorphism, ...]] = {}
        self._index: dict[tuple[Profile, ObjId, tuple], RepresentingMorphism] = {}
        self._compose_memo: dict = {}
        for xs in self.profiles(caps.max_arity):
            for y in objs:
                self._enumerate(xs, y)

    # -- functor calculus ---------------------------------------------------

    def functor_of(self, xs: Profile) -> VFunctor:
        xs = tuple(xs)
        if xs not in self._functors:
            acc = identity_v_functor(self._und_v)
            for x in xs:
                acc = compose_v_functors(acc, self._lx[x])
            self._functors[xs] = acc
        return self._functors[xs]

    def _enumerate(self, xs: Profile, y: ObjId) -> None:
        if (xs, y) in self._hom:
            return
        w = self.base
        T = self.functor_of(xs)
        ly = self._lx[y]
        fams = enumerate_vnat_families(ly, T)
        reps = []
        for comp in fams:
            comps = tuple(sorted(comp.items(), key=lambda kv: w.cat.obj_key(kv[0])))
            g = gamma_repr(self.ek, T, y, VNatFamily("p", ly, T, comp))
            reps.append(RepresentingMorphism(xs, y, comps, g))
        reps.sort(key=lambda r: r.gamma_name)
        self._hom[(xs, y)] = tuple(reps)
        for r in reps:
            self._index[(xs, y, r.components)] = r

    def _lookup(self, xs: Profile, y: ObjId, comps: dict) -> RepresentingMorphism:
        self._enumerate(tuple(xs), y)  # hom-sets materialize on demand
        key = (
            xs,
            y,
            tuple(sorted(comps.items(), key=lambda kv: self.base.cat.obj_key(kv[0]))),
        )
        if key not in self._index:
            raise KernelError(
                f"{self.name}: composite family is not natural "
                f"(missing from hom{xs}->{y})"
            )
        return self._index[key]

    # -- multicategory interface --------------------------------------------

    def objects(self):
        return self._objs

    def hom(self, xs, y):
        self._enumerate(tuple(xs), y)
        return self._hom[(tuple(xs), y)]

    def identity(self, x):
        w = self.base
        comps = {a: w.cat.identity(w.hom2_obj(x, a)) for a in self._objs}
        return self._lookup((x,), x, comps)

    def compose(self, fs, g: RepresentingMorphism):
        key = (tuple(fs), g)
        if key in self._compose_memo:
            return self._compose_memo[key]
        if tuple(f.cod for f in fs) != g.dom:
            raise ValueError("profile mismatch")
        w = self.base
        wcat = w.cat
        # Tensor the inner families left to right, then compose vertically
        # after g.
        acc_profile: Profile = ()
        acc_target: Profile = ()
        acc_comps = {a: wcat.identity(a) for a in self._objs}
        for f in fs:
            t_prime = self.functor_of(f.dom)
            s = self.functor_of(acc_profile)
            new = {}
            for a in self._objs:
                beta = dict(f.components)[s.obj_map(a)]
                alpha = acc_comps[a]
                new[a] = wcat.compose(beta, t_prime.mor_action(alpha))
            acc_comps = new
            acc_profile = acc_profile + (f.cod,)
            acc_target = acc_target + f.dom
        comps = {
            a: wcat.compose(dict(g.components)[a], acc_comps[a])
            for a in self._objs
        }
        out = self._lookup(acc_target, g.cod, comps)
        self._compose_memo[key] = out
        return out

    def dom(self, f: RepresentingMorphism):
        return f.dom

    def cod(self, f: RepresentingMorphism):
        return f.cod

    def obj_key(self, x):
        return self.base.cat.obj_key(x)

    def mor_key(self, f: RepresentingMorphism):
        return (
            tuple(self.obj_key(x) for x in f.dom),
            self.obj_key(f.cod),
            f.gamma_name,
        )

    def show_obj(self, x):
        return self.base.cat.show_obj(x)

    def show_mor(self, f):
        return str(f)


@dataclass
class RepresentedBundle:
    ek: EKClosedStructure
    iso: ClosedFunctor  # base structure -> normalized structure
    mcv: RepresentingMulticat
    witness: ClosednessWitness
    unit: UnitWitness


def build_representing_multicategory(
    cs: ClosedStructure,
    caps: ArityCaps = DEFAULT_CAPS,
    budget: SizeBudget = DEFAULT_BUDGET,
) -> RepresentedBundle:
    """The representing multicategory of a finite closed category: objects
    are those of the (normalized) structure, a morphism X1..Xn -> Y is an
    enriched natural family from the left hom functor at Y to the
    composite of the left hom functors at the Xi, the internal hom object
    of (X;Z) is the internal hom und(X,Z), the evaluation is the family
    of L components at (X,Z), and the unit is the inverse-i family."""
    ek, iso = ek_normalize(cs, budget)
    w = ek.closed
    wcat = w.cat
    mcv = RepresentingMulticat(ek, caps)
    objs = mcv.objects()

    hom_obj1 = {(x, z): w.hom2_obj(x, z) for x in objs for z in objs}
    ev1 = {}
    for x in objs:
        for z in objs:
            comps = {a: w.L(x, z, a) for a in objs}
            ev1[(x, z)] = mcv._lookup((x, w.hom2_obj(x, z)), z, comps)
    witness = ClosednessWitness(mcv, hom_obj1, ev1)

    u_comps = {a: w.i_inv(a) for a in objs}
    unit = UnitWitness(w.unit, mcv._lookup((), w.unit, u_comps))
    return RepresentedBundle(ek, iso, mcv, witness, unit)


def check_representation(
    bundle: RepresentedBundle, caps: ArityCaps = DEFAULT_CAPS
) -> Report:
    """Representation-specific checks: the bijection between families and
    elements at every signature, the coordinate equation for the
    evaluation families, and compatibility of the bijection with
    currying."""
    rep = Report(f"representation: {bundle.mcv.name}")
    mcv, ek, w = bundle.mcv, bundle.ek, bundle.ek.closed

    bad = []
    for xs, y in mcv.signatures(caps):
        T = mcv.functor_of(xs)
        names = [f.gamma_name for f in mcv.hom(xs, y)]
        target = sorted(a.name for a in ek.C_functor.obj_map(T.obj_map(y)).elements)
        if len(set(names)) != len(names) or sorted(names) != target:
            bad.append(f"({xs};{y})")
    _flat(rep, "repr/gamma-bijective", "families correspond to elements", bad)

    bad = []
    for x in mcv.objects():
        for z in mcv.objects():
            ev = bundle.witness.ev1[(x, z)]
            want = ek.elt_atom(w.cat.identity(w.hom2_obj(x, z))).name
            if ev.gamma_name != want:
                bad.append(f"{x},{z}")
    _flat(rep, "repr/ev-coordinate", "evaluation represents the identity", bad)

    bad = []
    for xs, z in mcv.signatures(caps):
        if len(xs) != 1:
            continue
        x = xs[0]
        h = bundle.witness.hom_obj((x,), z)
        for ys in mcv.profiles(caps.max_arity - 1):
            for g in mcv.hom(ys, h):
                img = uncurry(bundle.witness, g, (x,), z)
                if img.gamma_name != g.gamma_name:
                    bad.append(f"g={mcv.show_mor(g)}")
    _flat(rep, "repr/gamma-currying", "bijection commutes with currying", bad)
    return rep


def verify_essential_surjectivity(
    bundle: RepresentedBundle, caps: ArityCaps = DEFAULT_CAPS
) -> Report:
    """The comparison functor from the normalized base into the underlying
    closed category of the representing multicategory: an isomorphism of
    closed categories with identity hom and unit comparisons, under which
    i, j, L are exactly the families of the corresponding base data."""
    from .core import Functor

    rep = Report(f"essential surjectivity: {bundle.mcv.name}")
    mcv, w = bundle.mcv, bundle.ek.closed
    wcat = w.cat
    objs = mcv.objects()

    ucs = underlying_closed_category(bundle.witness, bundle.unit, caps)

    def l_of(f) -> RepresentingMorphism:
        x, y = wcat.dom(f), wcat.cod(f)
        comps = {a: w.hom2_mor(f, wcat.identity(a)) for a in objs}
        return mcv._lookup((x,), y, comps)

    phi = Functor(f"L({w.name})", wcat, ucs.cat, lambda x: x, l_of)
    lfun = ClosedFunctor(
        f"L({w.name})",
        w,
        ucs,
        phi,
        lambda x, y: ucs.cat.identity(w.hom2_obj(x, y)),
        ucs.cat.identity(w.unit),
    )
    rep.extend(check_cf_axioms(lfun), prefix="L/")

    bad = []
    for x in objs:
        for y in objs:
            src = list(wcat.hom(x, y))
            imgs = [l_of(f) for f in src]
            tgt = list(mcv.hom((x,), y))
            if len(set(imgs)) != len(imgs) or len(imgs) != len(tgt):
                bad.append(f"{x},{y}")
    _flat(rep, "surj/hom-bijective", "comparison bijective on hom-sets", bad)

    bad = []
    for x in objs:
        if ucs.i(x) != l_of(w.i(x)):
            bad.append(f"i at {x}")
        if ucs.j(x) != l_of(w.j(x)):
            bad.append(f"j at {x}")
    for x, y, z in itertools.product(objs, repeat=3):
        if ucs.L(x, y, z) != l_of(w.L(x, y, z)):
            bad.append(f"L at {x},{y},{z}")
    _flat(rep, "surj/structure-identified", "i, j, L are the expected families", bad)
    return rep
