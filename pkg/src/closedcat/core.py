"""Finite categories, functors, natural transformations, and their checkers.

Categories may be tabular (all sets enumerated up front) or lazy (homs and
composition computed on demand from a rule).  Either way every operation is
total and deterministic: objects and morphisms are iterated in a canonical
order so reports are reproducible byte for byte.

All structures are immutable after construction and safe to share
read-only across threads; no checker mutates shared state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .errors import BudgetExceeded
from .report import Report

ObjId = Hashable
MorId = Hashable


@dataclass(frozen=True)
class SizeBudget:
    """Bounds for lazy enumeration. Exceeding a bound raises BudgetExceeded,
    never silently truncates."""

    max_objects: int = 64
    max_homset: int = 4096
    max_depth: int = 4


DEFAULT_BUDGET = SizeBudget()


class Category:
    """Interface shared by tabular and lazy categories.

    ``objects`` enumerates the seed objects that quantified checks range
    over; a lazy category may contain further objects (e.g. nested hom
    objects) that are reachable but not enumerated.
    """

    name: str = "?"

    def objects(self) -> Sequence[ObjId]:
        raise NotImplementedError

    def hom(self, x: ObjId, y: ObjId) -> Sequence[MorId]:
        raise NotImplementedError

    def identity(self, x: ObjId) -> MorId:
        raise NotImplementedError

    def compose(self, f: MorId, g: MorId) -> MorId:
        """Composite of f: X -> Y and g: Y -> Z, in diagram order."""
        raise NotImplementedError

    def dom(self, f: MorId) -> ObjId:
        raise NotImplementedError

    def cod(self, f: MorId) -> ObjId:
        raise NotImplementedError

    # Default canonical order: length-then-lexicographic, so generated
    # names like m2 and m10 sort numerically and renaming is stable
    # across dump/parse/dump.
    def obj_key(self, x: ObjId):
        s = str(x)
        return (len(s), s)

    def mor_key(self, f: MorId):
        s = str(f)
        return (len(s), s)

    def show_obj(self, x: ObjId) -> str:
        return str(x)

    def show_mor(self, f: MorId) -> str:
        return str(f)

    # Convenience used throughout the checkers.
    def compose_chain(self, first: MorId, *rest: MorId) -> MorId:
        out = first
        for g in rest:
            out = self.compose(out, g)
        return out

    def all_morphisms(self):
        for x in self.objects():
            for y in self.objects():
                for f in self.hom(x, y):
                    yield f


class TabularCategory(Category):
    """Category given by explicit finite tables."""

    def __init__(
        self,
        name: str,
        objects: Sequence[ObjId],
        hom: dict[tuple[ObjId, ObjId], Sequence[MorId]],
        compose: dict[tuple[MorId, MorId], MorId],
        identity: dict[ObjId, MorId],
    ):
        self.name = name
        self._objects = tuple(sorted(objects, key=str))
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._compose = dict(compose)
        self._identity = dict(identity)
        self._ends: dict[MorId, tuple[ObjId, ObjId]] = {}
        for (x, y), fs in self._hom.items():
            for f in fs:
                if f in self._ends:
                    raise ValueError(f"morphism id {f!r} used in two hom-sets")
                self._ends[f] = (x, y)

    def objects(self):
        return self._objects

    def hom(self, x, y):
        return self._hom.get((x, y), ())

    def identity(self, x):
        return self._identity[x]

    def compose(self, f, g):
        if self.cod(f) != self.dom(g):
            raise ValueError(
                f"cannot compose {self.show_mor(f)} with {self.show_mor(g)}"
            )
        return self._compose[(f, g)]

    def dom(self, f):
        return self._ends[f][0]

    def cod(self, f):
        return self._ends[f][1]


@dataclass(frozen=True)
class Functor:
    """Functor between two category handles.

    ``obj_map``/``mor_map`` are callables so that lazily generated
    morphisms (e.g. composites formed during a check) can be mapped; use
    ``from_dicts`` when tables are the natural presentation.
    """

    name: str
    source: Category
    target: Category
    obj_map: Callable[[ObjId], ObjId]
    mor_map: Callable[[MorId], MorId]

    @staticmethod
    def from_dicts(name, source, target, obj_map: dict, mor_map: dict) -> "Functor":
        return Functor(name, source, target, obj_map.__getitem__, mor_map.__getitem__)

    @staticmethod
    def identity(cat: Category) -> "Functor":
        return Functor("id", cat, cat, lambda x: x, lambda f: f)

    def then(self, other: "Functor") -> "Functor":
        if other.source is not self.target:
            raise ValueError("functor endpoints do not match")
        return Functor(
            f"{self.name};{other.name}",
            self.source,
            other.target,
            lambda x: other.obj_map(self.obj_map(x)),
            lambda f: other.mor_map(self.mor_map(f)),
        )


@dataclass(frozen=True)
class NaturalTransformation:
    name: str
    source: Functor
    target: Functor
    components: Callable[[ObjId], MorId]

    @staticmethod
    def from_dict(name, source, target, components: dict) -> "NaturalTransformation":
        return NaturalTransformation(name, source, target, components.__getitem__)

    @staticmethod
    def identity(F: Functor) -> "NaturalTransformation":
        return NaturalTransformation(
            "id", F, F, lambda x: F.target.identity(F.obj_map(x))
        )


def guard_objects(cat: Category, budget: SizeBudget) -> Sequence[ObjId]:
    objs = cat.objects()
    if len(objs) > budget.max_objects:
        raise BudgetExceeded(
            f"{cat.name}: {len(objs)} objects exceed budget {budget.max_objects}"
        )
    return objs


def check_category_axioms(
    cat: Category, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    """Associativity, identity neutrality, and endpoint discipline, checked
    exhaustively over the enumerated objects."""
    rep = Report(f"category axioms: {cat.name}")
    objs = guard_objects(cat, budget)

    ok_ends = True
    for x in objs:
        for y in objs:
            fs = cat.hom(x, y)
            if len(fs) > budget.max_homset:
                raise BudgetExceeded(f"hom({x},{y}) exceeds budget")
            for f in fs:
                if cat.dom(f) != x or cat.cod(f) != y:
                    ok_ends = False
                    rep.add_fail(
                        "category/endpoints",
                        "dom/cod",
                        f"{cat.show_mor(f)} filed under hom({x},{y})",
                    )
    if ok_ends:
        rep.add_pass("category/endpoints", "dom/cod")

    ok = True
    for x in objs:
        e = cat.identity(x)
        if cat.dom(e) != x or cat.cod(e) != x:
            ok = False
            rep.add_fail("category/identity-endpoints", "identity", cat.show_obj(x))
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                if cat.compose(cat.identity(x), f) != f:
                    ok = False
                    rep.add_fail(
                        "category/identity-left", "1;f=f", cat.show_mor(f)
                    )
                if cat.compose(f, cat.identity(y)) != f:
                    ok = False
                    rep.add_fail(
                        "category/identity-right", "f;1=f", cat.show_mor(f)
                    )
    if ok:
        rep.add_pass("category/identity", "1;f=f=f;1")

    ok = True
    for x, y, z, w in itertools.product(objs, repeat=4):
        for f in cat.hom(x, y):
            for g in cat.hom(y, z):
                for h in cat.hom(z, w):
                    lhs = cat.compose(cat.compose(f, g), h)
                    rhs = cat.compose(f, cat.compose(g, h))
                    if lhs != rhs:
                        ok = False
                        rep.add_fail(
                            "category/assoc",
                            "(f;g);h=f;(g;h)",
                            f"f={cat.show_mor(f)} g={cat.show_mor(g)} h={cat.show_mor(h)}",
                        )
    if ok:
        rep.add_pass("category/assoc", "(f;g);h=f;(g;h)")
    return rep


def check_functor(F: Functor, budget: SizeBudget = DEFAULT_BUDGET) -> Report:
    rep = Report(f"functor: {F.name}")
    src, tgt = F.source, F.target
    objs = guard_objects(src, budget)

    ok = True
    for x in objs:
        for y in objs:
            for f in src.hom(x, y):
                ff = F.mor_map(f)
                if tgt.dom(ff) != F.obj_map(x) or tgt.cod(ff) != F.obj_map(y):
                    ok = False
                    rep.add_fail("functor/endpoints", "F(f):FX->FY", src.show_mor(f))
    if ok:
        rep.add_pass("functor/endpoints", "F(f):FX->FY")

    ok = True
    for x in objs:
        if F.mor_map(src.identity(x)) != tgt.identity(F.obj_map(x)):
            ok = False
            rep.add_fail("functor/identity", "F(1)=1", src.show_obj(x))
    if ok:
        rep.add_pass("functor/identity", "F(1)=1")

    ok = True
    for x, y, z in itertools.product(objs, repeat=3):
        for f in src.hom(x, y):
            for g in src.hom(y, z):
                lhs = F.mor_map(src.compose(f, g))
                rhs = tgt.compose(F.mor_map(f), F.mor_map(g))
                if lhs != rhs:
                    ok = False
                    rep.add_fail(
                        "functor/compose",
                        "F(f;g)=F(f);F(g)",
                        f"f={src.show_mor(f)} g={src.show_mor(g)}",
                    )
    if ok:
        rep.add_pass("functor/compose", "F(f;g)=F(f);F(g)")
    return rep


def check_natural(
    t: NaturalTransformation, budget: SizeBudget = DEFAULT_BUDGET
) -> Report:
    """Naturality square for every enumerated morphism of the source."""
    rep = Report(f"natural transformation: {t.name}")
    F, G = t.source, t.target
    src, tgt = F.source, F.target
    objs = guard_objects(src, budget)
    ok = True
    for x in objs:
        for y in objs:
            for f in src.hom(x, y):
                lhs = tgt.compose(F.mor_map(f), t.components(y))
                rhs = tgt.compose(t.components(x), G.mor_map(f))
                if lhs != rhs:
                    ok = False
                    rep.add_fail(
                        "natural/square",
                        "F(f);t=t;G(f)",
                        f"f={src.show_mor(f)}",
                    )
    if ok:
        rep.add_pass("natural/square", "F(f);t=t;G(f)")
    return rep


def tabularize(cat: Category, budget: SizeBudget = DEFAULT_BUDGET) -> TabularCategory:
    """Materialize a lazy category over its enumerated objects.

    Used as the oracle twin: the tabularization must pass the axiom
    checks exactly when the lazy evaluator does.
    """
    objs = guard_objects(cat, budget)
    hom: dict[tuple[ObjId, ObjId], list[MorId]] = {}
    names: dict[MorId, str] = {}
    for x in objs:
        for y in objs:
            fs = cat.hom(x, y)
            if len(fs) > budget.max_homset:
                raise BudgetExceeded(f"hom({x},{y}) exceeds budget")
            fs = sorted(fs, key=cat.mor_key)
            hom[(str(x), str(y))] = []
            for f in fs:
                names[f] = f"m{len(names)}"
                hom[(str(x), str(y))].append(names[f])
    compose = {}
    for x, y, z in itertools.product(objs, repeat=3):
        for f in cat.hom(x, y):
            for g in cat.hom(y, z):
                compose[(names[f], names[g])] = names[cat.compose(f, g)]
    identity = {str(x): names[cat.identity(x)] for x in objs}
    return TabularCategory(
        f"{cat.name}#tab",
        [str(x) for x in objs],
        hom,
        compose,
        identity,
    )
