"""Multigraphs and multicategories with arity-capped exhaustive checking.

A morphism has a finite list of objects as its domain and a single object
as codomain; composition plugs a tuple of morphisms into an outer one.
Nullary morphisms () -> Y are first class everywhere.  All universally
quantified checks range over signatures of total arity at most the caps'
``max_arity``; rule-backed multicategories (e.g. the one attached to a
strict monoidal category) may refuse larger signatures by raising
BudgetExceeded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Category, MorId, ObjId
from .errors import BudgetExceeded, StrictnessError
from .report import Report

Profile = tuple  # tuple[ObjId, ...]


@dataclass(frozen=True)
class ArityCaps:
    """Horizon for multicategory checks: signatures with total arity above
    ``max_arity`` are not enumerated."""

    max_arity: int = 3
    max_homset: int = 4096


DEFAULT_CAPS = ArityCaps()


class Multicategory:
    name: str = "?"

    def objects(self) -> Sequence[ObjId]:
        raise NotImplementedError

    def hom(self, xs: Profile, y: ObjId) -> Sequence[MorId]:
        raise NotImplementedError

    def identity(self, x: ObjId) -> MorId:
        raise NotImplementedError

    def compose(self, fs: tuple[MorId, ...], g: MorId) -> MorId:
        """Plug fs[i] into the i-th input of g; fs may be empty when g is
        nullary."""
        raise NotImplementedError

    def dom(self, f: MorId) -> Profile:
        raise NotImplementedError

    def cod(self, f: MorId) -> ObjId:
        raise NotImplementedError

    def obj_key(self, x):
        s = str(x)
        return (len(s), s)

    def mor_key(self, f):
        s = str(f)
        return (len(s), s)

    def show_obj(self, x) -> str:
        return str(x)

    def show_mor(self, f) -> str:
        return str(f)

    def profiles(self, max_len: int):
        objs = sorted(self.objects(), key=self.obj_key)
        for n in range(max_len + 1):
            yield from itertools.product(objs, repeat=n)

    def signatures(self, caps: ArityCaps):
        for xs in self.profiles(caps.max_arity):
            for y in sorted(self.objects(), key=self.obj_key):
                yield xs, y

    def identities_for(self, xs: Profile) -> tuple[MorId, ...]:
        return tuple(self.identity(x) for x in xs)


class TabularMulticategory(Multicategory):
    def __init__(
        self,
        name: str,
        objects: Sequence[ObjId],
        hom: dict[tuple[Profile, ObjId], Sequence[MorId]],
        compose: dict[tuple[tuple[MorId, ...], MorId], MorId],
        identity: dict[ObjId, MorId],
    ):
        self.name = name
        self._objects = tuple(objects)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._compose = dict(compose)
        self._identity = dict(identity)
        self._sig: dict[MorId, tuple[Profile, ObjId]] = {}
        for (xs, y), fs in self._hom.items():
            for f in fs:
                if f in self._sig:
                    raise ValueError(f"morphism id {f!r} used in two hom-sets")
                self._sig[f] = (xs, y)

    def objects(self):
        return self._objects

    def hom(self, xs, y):
        return self._hom.get((tuple(xs), y), ())

    def identity(self, x):
        return self._identity[x]

    def compose(self, fs, g):
        key = (tuple(fs), g)
        if key not in self._compose:
            raise ValueError(f"composition not tabulated for {key!r}")
        return self._compose[key]

    def dom(self, f):
        return self._sig[f][0]

    def cod(self, f):
        return self._sig[f][1]


@dataclass(frozen=True)
class StrictMonoidalCategory:
    """Strict monoidal data over a finite category.  ``tensor_obj`` may be
    partial (return None) to model truncated tensor products; the derived
    multicategory raises BudgetExceeded on undefined tensors."""

    cat: Category
    tensor_obj: Callable[[ObjId, ObjId], ObjId | None]
    tensor_mor: Callable[[MorId, MorId], MorId]
    unit: ObjId


def check_strict_monoidal(smc: StrictMonoidalCategory) -> Report:
    rep = Report(f"strict monoidal data: {smc.cat.name}")
    cat = smc.cat
    objs = cat.objects()

    bad = []
    for x in objs:
        if smc.tensor_obj(smc.unit, x) != x or smc.tensor_obj(x, smc.unit) != x:
            bad.append(cat.show_obj(x))
    _flat(rep, "monoidal/unit-strict", "unit strictness on objects", bad)

    bad = []
    one = cat.identity(smc.unit)
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                if smc.tensor_mor(one, f) != f or smc.tensor_mor(f, one) != f:
                    bad.append(cat.show_mor(f))
    _flat(rep, "monoidal/unit-strict-mor", "unit strictness on morphisms", bad)

    bad = []
    for x, y, z in itertools.product(objs, repeat=3):
        xy, yz = smc.tensor_obj(x, y), smc.tensor_obj(y, z)
        if xy is None or yz is None:
            continue
        if smc.tensor_obj(xy, z) != smc.tensor_obj(x, yz):
            bad.append(f"{x},{y},{z}")
    _flat(rep, "monoidal/assoc-strict", "tensor associativity", bad)

    bad = []
    for x, y in itertools.product(objs, repeat=2):
        if smc.tensor_obj(x, y) is None:
            continue
        lhs = smc.tensor_mor(cat.identity(x), cat.identity(y))
        if lhs != cat.identity(smc.tensor_obj(x, y)):
            bad.append(f"{x},{y}")
    _flat(rep, "monoidal/tensor-identity", "1 (x) 1 = 1", bad)

    bad = []
    for a, b, c, d in itertools.product(objs, repeat=4):
        if smc.tensor_obj(a, c) is None or smc.tensor_obj(b, d) is None:
            continue
        for f in cat.hom(a, b):
            for g in cat.hom(c, d):
                for b2 in objs:
                    for d2 in objs:
                        if smc.tensor_obj(b2, d2) is None:
                            continue
                        for f2 in cat.hom(b, b2):
                            for g2 in cat.hom(d, d2):
                                lhs = smc.tensor_mor(
                                    cat.compose(f, f2), cat.compose(g, g2)
                                )
                                rhs = cat.compose(
                                    smc.tensor_mor(f, g), smc.tensor_mor(f2, g2)
                                )
                                if lhs != rhs:
                                    bad.append(
                                        f"f={cat.show_mor(f)} g={cat.show_mor(g)}"
                                    )
    _flat(rep, "monoidal/interchange", "tensor functoriality", bad)
    return rep


@dataclass(frozen=True)
class MMor:
    """A multicategory morphism over a monoidal category: an arrow out of
    the tensor of its domain profile, tagged with that profile."""

    dom: Profile
    cod: ObjId
    raw: MorId

    def __str__(self):
        return f"{self.raw}:{','.join(map(str, self.dom))}->{self.cod}"


class MonoidalMulticategory(Multicategory):
    def __init__(self, smc: StrictMonoidalCategory, name: str | None = None):
        self.smc = smc
        self.name = name or f"multi({smc.cat.name})"

    def objects(self):
        return self.smc.cat.objects()

    def tensor_list(self, xs: Profile) -> ObjId:
        out = self.smc.unit
        for x in xs:
            nxt = self.smc.tensor_obj(out, x)
            if nxt is None:
                raise BudgetExceeded(
                    f"{self.name}: tensor undefined on {xs!r}"
                )
            out = nxt
        return out

    def hom(self, xs, y):
        xs = tuple(xs)
        return tuple(
            MMor(xs, y, f) for f in self.smc.cat.hom(self.tensor_list(xs), y)
        )

    def identity(self, x):
        return MMor((x,), x, self.smc.cat.identity(x))

    def compose(self, fs, g: MMor):
        if tuple(f.cod for f in fs) != g.dom:
            raise ValueError(f"profile mismatch composing into {g}")
        cat = self.smc.cat
        raw = cat.identity(self.tensor_list(()))
        for f in fs:
            raw = self.smc.tensor_mor(raw, f.raw)
        dom = tuple(x for f in fs for x in f.dom)
        return MMor(dom, g.cod, cat.compose(raw, g.raw))

    def dom(self, f: MMor):
        return f.dom

    def cod(self, f: MMor):
        return f.cod

    def obj_key(self, x):
        return self.smc.cat.obj_key(x)

    def mor_key(self, f: MMor):
        return (
            tuple(self.obj_key(x) for x in f.dom),
            self.obj_key(f.cod),
            self.smc.cat.mor_key(f.raw),
        )

    def show_mor(self, f: MMor):
        return str(f)


def from_strict_monoidal(
    smc: StrictMonoidalCategory, name: str | None = None
) -> MonoidalMulticategory:
    strict = check_strict_monoidal(smc)
    if not strict.ok:
        raise StrictnessError(
            "; ".join(it.line() for it in strict.failures())
        )
    return MonoidalMulticategory(smc, name)


@dataclass(frozen=True)
class MultiFunctor:
    name: str
    source: Multicategory
    target: Multicategory
    obj_map: Callable[[ObjId], ObjId]
    mor_map: Callable[[MorId], MorId]

    @staticmethod
    def identity(m: Multicategory) -> "MultiFunctor":
        return MultiFunctor("id", m, m, lambda x: x, lambda f: f)

    def then(self, other: "MultiFunctor") -> "MultiFunctor":
        if other.source is not self.target:
            raise ValueError("multifunctor endpoints do not match")
        return MultiFunctor(
            f"{self.name};{other.name}",
            self.source,
            other.target,
            lambda x: other.obj_map(self.obj_map(x)),
            lambda f: other.mor_map(self.mor_map(f)),
        )


@dataclass(frozen=True)
class MultiNat:
    name: str
    source: MultiFunctor
    target: MultiFunctor
    components: Callable[[ObjId], MorId]

    @staticmethod
    def identity(F: MultiFunctor) -> "MultiNat":
        return MultiNat(
            "id", F, F, lambda x: F.target.identity(F.obj_map(x))
        )


def _flat(rep: Report, check: str, anchor: str, failures: list[str]) -> None:
    if failures:
        for locus in failures:
            rep.add_fail(check, anchor, locus)
    else:
        rep.add_pass(check, anchor)


def _guard_hom(m: Multicategory, xs, y, caps: ArityCaps):
    fs = m.hom(xs, y)
    if len(fs) > caps.max_homset:
        raise BudgetExceeded(f"{m.name}: hom{xs}->{y} over budget")
    return fs


def _inner_profiles(m: Multicategory, ys: Profile, cap: int):
    """All tuples of domain profiles (one per input of ys) with total
    arity at most cap, in canonical order."""
    if not ys:
        yield ()
        return
    head, rest = ys[0], ys[1:]
    for p in m.profiles(cap):
        for tail in _inner_profiles(m, rest, cap - len(p)):
            yield (p,) + tail


def check_multicategory_axioms(
    m: Multicategory, caps: ArityCaps = DEFAULT_CAPS
) -> Report:
    """Identity and associativity axioms over all signatures within caps,
    including nullary inner morphisms."""
    rep = Report(f"multicategory axioms: {m.name}")

    bad = []
    for xs, y in m.signatures(caps):
        for f in _guard_hom(m, xs, y, caps):
            if m.dom(f) != xs or m.cod(f) != y:
                bad.append(m.show_mor(f))
    _flat(rep, "mc/endpoints", "dom/cod", bad)

    bad = []
    for xs, y in m.signatures(caps):
        for f in _guard_hom(m, xs, y, caps):
            if m.compose(m.identities_for(xs), f) != f:
                bad.append(f"(1,..,1).{m.show_mor(f)}")
    _flat(rep, "mc/identity-inner", "(1,...,1).g = g", bad)

    bad = []
    for xs, y in m.signatures(caps):
        for f in _guard_hom(m, xs, y, caps):
            if m.compose((f,), m.identity(y)) != f:
                bad.append(f"{m.show_mor(f)}.1")
    _flat(rep, "mc/identity-outer", "(f).1 = f", bad)

    bad = []
    for ys, z in m.signatures(caps):
        for g in _guard_hom(m, ys, z, caps):
            for doms in _inner_profiles(m, ys, caps.max_arity):
                fs_choices = [
                    _guard_hom(m, doms[i], ys[i], caps) for i in range(len(ys))
                ]
                for fs in itertools.product(*fs_choices):
                    mid = m.compose(fs, g)
                    flat_xs = tuple(x for d in doms for x in d)
                    for inner_doms in _inner_profiles(
                        m, flat_xs, caps.max_arity
                    ):
                        hs_choices = [
                            _guard_hom(m, inner_doms[i], flat_xs[i], caps)
                            for i in range(len(flat_xs))
                        ]
                        for hs in itertools.product(*hs_choices):
                            lhs = m.compose(hs, mid)
                            split = []
                            k = 0
                            for d in doms:
                                split.append(hs[k : k + len(d)])
                                k += len(d)
                            inner = tuple(
                                m.compose(split[i], fs[i])
                                for i in range(len(fs))
                            )
                            rhs = m.compose(inner, g)
                            if lhs != rhs:
                                bad.append(
                                    f"g={m.show_mor(g)} fs="
                                    + ",".join(map(m.show_mor, fs))
                                )
    _flat(rep, "mc/assoc", "two-level associativity", bad)
    return rep


def check_multifunctor(
    F: MultiFunctor, caps: ArityCaps = DEFAULT_CAPS
) -> Report:
    rep = Report(f"multifunctor: {F.name}")
    src, tgt = F.source, F.target

    bad = []
    for xs, y in src.signatures(caps):
        for f in _guard_hom(src, xs, y, caps):
            ff = F.mor_map(f)
            want_dom = tuple(F.obj_map(x) for x in xs)
            if tgt.dom(ff) != want_dom or tgt.cod(ff) != F.obj_map(y):
                bad.append(src.show_mor(f))
    _flat(rep, "mf/endpoints", "F(f):FX1,..,FXn->FY", bad)

    bad = []
    for x in sorted(src.objects(), key=src.obj_key):
        if F.mor_map(src.identity(x)) != tgt.identity(F.obj_map(x)):
            bad.append(src.show_obj(x))
    _flat(rep, "mf/identity", "F(1)=1", bad)

    bad = []
    for ys, z in src.signatures(caps):
        for g in _guard_hom(src, ys, z, caps):
            for doms in _inner_profiles(src, ys, caps.max_arity):
                fs_choices = [
                    _guard_hom(src, doms[i], ys[i], caps)
                    for i in range(len(ys))
                ]
                for fs in itertools.product(*fs_choices):
                    lhs = F.mor_map(src.compose(fs, g))
                    rhs = tgt.compose(
                        tuple(F.mor_map(f) for f in fs), F.mor_map(g)
                    )
                    if lhs != rhs:
                        bad.append(
                            f"g={src.show_mor(g)} fs="
                            + ",".join(map(src.show_mor, fs))
                        )
    _flat(rep, "mf/compose", "F((fs).g)=(F(fs)).F(g)", bad)
    return rep


def check_multinat(r: MultiNat, caps: ArityCaps = DEFAULT_CAPS) -> Report:
    rep = Report(f"multinatural transformation: {r.name}")
    F, G = r.source, r.target
    src, tgt = F.source, F.target

    bad = []
    for xs, y in src.signatures(caps):
        for f in _guard_hom(src, xs, y, caps):
            lhs = tgt.compose((F.mor_map(f),), r.components(y))
            rhs = tgt.compose(
                tuple(r.components(x) for x in xs), G.mor_map(f)
            )
            if lhs != rhs:
                bad.append(src.show_mor(f))
    _flat(rep, "mn/square", "Ff.r = (r,...,r).Gf", bad)
    return rep


def tabularize_multicat(
    m: Multicategory, caps: ArityCaps = DEFAULT_CAPS
) -> TabularMulticategory:
    """Materialize hom-sets and single-level composition within caps; the
    oracle twin for rule-backed multicategories."""
    hom: dict[tuple[Profile, ObjId], list[str]] = {}
    names: dict[MorId, str] = {}
    for xs, y in m.signatures(caps):
        fs = sorted(_guard_hom(m, xs, y, caps), key=m.mor_key)
        hom[(xs, y)] = []
        for f in fs:
            names[f] = f"m{len(names)}"
            hom[(xs, y)].append(names[f])
    compose: dict[tuple[tuple, str], str] = {}
    for ys, z in m.signatures(caps):
        for g in m.hom(ys, z):
            for doms in _inner_profiles(m, ys, caps.max_arity):
                fs_choices = [m.hom(doms[i], ys[i]) for i in range(len(ys))]
                for fs in itertools.product(*fs_choices):
                    out = m.compose(fs, g)
                    if out in names:
                        compose[(tuple(names[f] for f in fs), names[g])] = names[out]
    identity = {x: names[m.identity(x)] for x in m.objects()}
    return TabularMulticategory(
        f"{m.name}#tab", list(m.objects()), hom, compose, identity
    )
