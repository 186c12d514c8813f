"""The lazy category of finite sets, as a closed structure.

Objects are hereditarily finite sets.  The enumerated seed objects are
the subsets of a fixed atom pool plus the chosen one-point set; internal
hom objects are materialized only while they fit the size budget, and
otherwise exist as opaque hom terms that can be composed through but not
enumerated.  Morphisms are function rules with a stated domain; they
materialize to tables on demand, and two morphisms are equal when their
endpoints agree and their tables agree pointwise.

The closed structure is the usual one on sets: the unit is the one-point
set, i sends a point to the constant table on it, j picks the identity
table, and L sends g to the precompose-then-g table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

from . import hf
from .closed import ClosedStructure
from .core import Category, DEFAULT_BUDGET, SizeBudget
from .errors import BudgetExceeded

STAR = hf.atom("*")


@dataclass(frozen=True)
class HomObj:
    """A hom object too large to enumerate, kept as a term."""

    src: "SetObj"
    dst: "SetObj"

    def __repr__(self) -> str:
        return f"hom({self.src!r},{self.dst!r})"


SetObj = Union[hf.HF, HomObj]


def obj_key(o: SetObj):
    if isinstance(o, hf.HF):
        return (0, hf.hf_key(o))
    return (1, obj_key(o.src), obj_key(o.dst))


def elements(o: SetObj) -> tuple[hf.HF, ...]:
    if isinstance(o, hf.HF):
        return hf.sorted_elements(o)
    raise BudgetExceeded(f"cannot enumerate virtual hom object {o!r}")


@lru_cache(maxsize=65536)
def _tdict(t: hf.HF) -> dict:
    return dict(t.pairs)


def table_apply(t: hf.HF, k: hf.HF) -> hf.HF:
    return _tdict(t)[k]


def compose_tables(f: hf.HF, g: hf.HF) -> hf.HF:
    """Composite of function tables, first f then g."""
    gd = _tdict(g)
    return hf.ftable((k, gd[v]) for k, v in f.pairs)


class SetMor:
    """A morphism of the lazy sets category: a rule with stated endpoints.

    Equality and hashing force materialization over the (enumerable)
    domain; composition stays lazy so that arrows with huge domains can
    participate in composites that are only ever sampled pointwise.
    """

    __slots__ = ("dom", "cod", "_rule", "_map")

    def __init__(self, dom: SetObj, cod: SetObj, rule=None, mapping=None):
        self.dom = dom
        self.cod = cod
        self._rule = rule
        self._map = dict(mapping) if mapping is not None else None

    @staticmethod
    def from_table(dom: SetObj, cod: SetObj, mapping) -> "SetMor":
        return SetMor(dom, cod, mapping=mapping)

    @staticmethod
    def from_rule(dom: SetObj, cod: SetObj, rule: Callable) -> "SetMor":
        return SetMor(dom, cod, rule=rule)

    def apply(self, v: hf.HF) -> hf.HF:
        if self._map is not None:
            return self._map[v]
        return self._rule(v)

    def mapping(self) -> dict:
        self._materialize()
        return dict(self._map)

    def _materialize(self) -> None:
        if self._map is None:
            self._map = {x: self._rule(x) for x in elements(self.dom)}

    def table_value(self) -> hf.HF:
        """The morphism as a function-table value of the universe."""
        self._materialize()
        return hf.ftable(self._map.items())

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, SetMor):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        self._materialize()
        other._materialize()
        return self._map == other._map

    def __hash__(self):
        self._materialize()
        return hash((obj_key(self.dom), obj_key(self.cod), hf.hf_key(self.table_value())))

    def __str__(self):
        try:
            return hf.pretty(self.table_value())
        except BudgetExceeded:
            return f"<rule:{self.dom!r}->{self.cod!r}>"

    def __repr__(self):
        return str(self)


class FinSetCategory(Category):
    def __init__(self, max_size: int, budget: SizeBudget = DEFAULT_BUDGET):
        if max_size < 1:
            raise ValueError("max_size must be at least 1")
        self.name = f"finset({max_size})"
        self.budget = budget
        self.unit = hf.fset([STAR])
        pool = [hf.atom(f"a{i}") for i in range(max_size)]
        seeds = [
            hf.fset(sub)
            for r in range(max_size + 1)
            for sub in itertools.combinations(pool, r)
        ]
        seeds.append(self.unit)
        self._seeds = tuple(sorted(set(seeds), key=hf.hf_key))
        self._hom_cache: dict[tuple[SetObj, SetObj], SetObj] = {}

    def objects(self):
        return self._seeds

    def make_hom(self, a: SetObj, b: SetObj) -> SetObj:
        """The set of all function tables a -> b, or a virtual term when
        its cardinality exceeds the budget."""
        key = (a, b)
        got = self._hom_cache.get(key)
        if got is not None:
            return got
        out: SetObj
        if isinstance(a, hf.HF) and isinstance(b, hf.HF):
            na, nb = len(a.elements), len(b.elements)
            if nb**na <= self.budget.max_homset:
                dom = hf.sorted_elements(a)
                tables = []
                for choice in itertools.product(hf.sorted_elements(b), repeat=na):
                    t = hf.ftable(zip(dom, choice))
                    if hf.depth(t) > self.budget.max_depth:
                        raise BudgetExceeded(
                            f"{self.name}: hom element exceeds depth "
                            f"{self.budget.max_depth}"
                        )
                    tables.append(t)
                out = hf.fset(tables)
            else:
                out = HomObj(a, b)
        else:
            out = HomObj(a, b)
        self._hom_cache[key] = out
        return out

    def hom(self, x: SetObj, y: SetObj):
        h = self.make_hom(x, y)
        if isinstance(h, HomObj):
            raise BudgetExceeded(f"{self.name}: hom({x!r},{y!r}) over budget")
        return tuple(
            SetMor.from_table(x, y, _tdict(t)) for t in hf.sorted_elements(h)
        )

    def identity(self, x: SetObj):
        return SetMor.from_table(x, x, {e: e for e in elements(x)})

    def compose(self, f: SetMor, g: SetMor) -> SetMor:
        if f.cod != g.dom:
            raise ValueError(f"cannot compose {f} with {g}")
        if f._map is not None:
            return SetMor.from_table(
                f.dom, g.cod, {k: g.apply(v) for k, v in f._map.items()}
            )
        return SetMor.from_rule(f.dom, g.cod, lambda v: g.apply(f.apply(v)))

    def dom(self, f: SetMor):
        return f.dom

    def cod(self, f: SetMor):
        return f.cod

    def obj_key(self, x):
        return obj_key(x)

    def mor_key(self, f: SetMor):
        return (obj_key(f.dom), obj_key(f.cod), hf.hf_key(f.table_value()))

    def show_obj(self, x):
        return hf.pretty(x) if isinstance(x, hf.HF) else repr(x)

    def show_mor(self, f: SetMor):
        return str(f)


def build_finset_closed(
    max_size: int, budget: SizeBudget = DEFAULT_BUDGET
) -> ClosedStructure:
    cat = FinSetCategory(max_size, budget)

    def hom2_mor(f: SetMor, g: SetMor) -> SetMor:
        # f : A' -> A, g : B -> B'; the action sends t : A -> B to
        # f then t then g, a table on A'.
        a2 = f.dom

        def rule(t: hf.HF) -> hf.HF:
            return hf.ftable(
                (x, g.apply(table_apply(t, f.apply(x)))) for x in elements(a2)
            )

        return SetMor.from_rule(
            cat.make_hom(f.cod, g.dom), cat.make_hom(f.dom, g.cod), rule
        )

    def i(x: SetObj) -> SetMor:
        return SetMor.from_table(
            x,
            cat.make_hom(cat.unit, x),
            {e: hf.ftable([(STAR, e)]) for e in elements(x)},
        )

    def i_inv(x: SetObj) -> SetMor:
        return SetMor.from_rule(
            cat.make_hom(cat.unit, x), x, lambda t: table_apply(t, STAR)
        )

    def j(x: SetObj) -> SetMor:
        ident = hf.ftable((e, e) for e in elements(x))
        return SetMor.from_table(cat.unit, cat.make_hom(x, x), {STAR: ident})

    def L(x: SetObj, y: SetObj, z: SetObj) -> SetMor:
        hxy = cat.make_hom(x, y)

        def rule(g: hf.HF) -> hf.HF:
            return hf.ftable((f, compose_tables(f, g)) for f in elements(hxy))

        return SetMor.from_rule(
            cat.make_hom(y, z),
            cat.make_hom(hxy, cat.make_hom(x, z)),
            rule,
        )

    def gamma_inv(point: SetMor, x: SetObj, y: SetObj) -> SetMor:
        # A point of und(X,Y) is a one-entry table holding the function
        # table of the morphism it names; unfold it.
        tbl = point.apply(STAR)
        return SetMor.from_rule(x, y, lambda v: table_apply(tbl, v))

    return ClosedStructure(
        cat.name,
        cat,
        cat.unit,
        cat.make_hom,
        hom2_mor,
        i,
        i_inv,
        j,
        L,
        gamma_inv=gamma_inv,
    )
