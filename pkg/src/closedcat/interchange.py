"""Textual interchange formats for categories, closed structures, and
multicategories.

A category serializes as objects, hom table keyed "X,Y", composition
table keyed "f;g", and identity table.  Closed structures add the unit,
the internal hom tables (object part keyed "X,Y", morphism part keyed
"f,g"), and the i, i_inv, j, L tables.  Multicategories key hom-sets by
"X1,X2;Y" and composites by "f1,f2|g"; an attached closedness witness
uses "X;Z" keys and the unit block names its object and nullary morphism.

Serialization renames every object and morphism to a stable generated
name, so structures whose native identifiers are not plain strings (lazy
sets, transported points, enriched families) dump uniformly.  Bit
equality is not promised across dump/parse/dump; identity of the abstract
structure is, and the test suite checks it.
"""

from __future__ import annotations

import json

from .closed import ClosedStructure, tabular_closed
from .closedmc import ClosednessWitness, UnitWitness
from .core import Category, DEFAULT_BUDGET, SizeBudget, TabularCategory, guard_objects
from .errors import FormatError
from .multicat import ArityCaps, DEFAULT_CAPS, Multicategory, TabularMulticategory


class _Namer:
    def __init__(self, prefix: str):
        self.prefix = prefix
        self.names: dict = {}

    def __call__(self, item) -> str:
        if item not in self.names:
            self.names[item] = f"{self.prefix}{len(self.names)}"
        return self.names[item]


def category_to_json(cat: Category, budget: SizeBudget = DEFAULT_BUDGET) -> dict:
    objs = sorted(guard_objects(cat, budget), key=cat.obj_key)
    oname = _Namer("o")
    mname = _Namer("m")
    for x in objs:
        oname(x)
    hom = {}
    for x in objs:
        for y in objs:
            fs = sorted(cat.hom(x, y), key=cat.mor_key)
            hom[f"{oname(x)},{oname(y)}"] = [mname(f) for f in fs]
    compose = {}
    for x in objs:
        for y in objs:
            for f in cat.hom(x, y):
                for z in objs:
                    for g in cat.hom(y, z):
                        compose[f"{mname(f)};{mname(g)}"] = mname(cat.compose(f, g))
    ids = {oname(x): mname(cat.identity(x)) for x in objs}
    return {
        "kind": "category",
        "name": cat.name,
        "objects": [oname(x) for x in objs],
        "hom": hom,
        "compose": compose,
        "id": ids,
        "_namer": (oname, mname),
    }


def _strip(doc: dict) -> dict:
    return {k: v for k, v in doc.items() if not k.startswith("_")}


def category_from_json(doc: dict) -> TabularCategory:
    try:
        hom = {}
        for key, fs in doc["hom"].items():
            x, y = key.split(",")
            hom[(x, y)] = list(fs)
        compose = {}
        for key, h in doc["compose"].items():
            f, g = key.split(";")
            compose[(f, g)] = h
        return TabularCategory(
            doc.get("name", "category"),
            list(doc["objects"]),
            hom,
            compose,
            dict(doc["id"]),
        )
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed category file: {exc}") from exc


def closed_ref_to_json(name: str, params: dict | None = None) -> dict:
    """Reference form for lazy instances: registry name plus parameters."""
    return {"kind": "closed-category", "ref": name, "params": params or {}}


def closed_to_json(cs: ClosedStructure, budget: SizeBudget = DEFAULT_BUDGET) -> dict:
    objs_set = set(guard_objects(cs.cat, budget))
    for x in objs_set:
        for y in objs_set:
            if cs.hom2_obj(x, y) not in objs_set:
                raise FormatError(
                    f"{cs.name}: objects are not closed under internal homs; "
                    "dump this structure by registry reference instead"
                )
    doc = category_to_json(cs.cat, budget)
    oname, mname = doc.pop("_namer")
    objs = sorted(guard_objects(cs.cat, budget), key=cs.cat.obj_key)
    mors = [f for f in cs.cat.all_morphisms()]
    doc["kind"] = "closed-category"
    doc["unit"] = oname(cs.unit)
    doc["hom2"] = {
        "obj": {
            f"{oname(x)},{oname(y)}": oname(cs.hom2_obj(x, y))
            for x in objs
            for y in objs
        },
        "mor": {
            f"{mname(f)},{mname(g)}": mname(cs.hom2_mor(f, g))
            for f in mors
            for g in mors
        },
    }
    doc["i"] = {oname(x): mname(cs.i(x)) for x in objs}
    doc["i_inv"] = {oname(x): mname(cs.i_inv(x)) for x in objs}
    doc["j"] = {oname(x): mname(cs.j(x)) for x in objs}
    doc["L"] = {
        f"{oname(x)},{oname(y)},{oname(z)}": mname(cs.L(x, y, z))
        for x in objs
        for y in objs
        for z in objs
    }
    return doc


def closed_from_json(doc: dict) -> ClosedStructure:
    if "ref" in doc:
        from .setcat import build_finset_closed

        name = doc["ref"]
        params = doc.get("params", {})
        if name == "finset":
            return build_finset_closed(int(params.get("max_size", 2)))
        from . import instances

        info = instances.get(name)
        if info.kind != "closed":
            raise FormatError(f"referenced instance {name!r} is not closed")
        return info.build()
    cat = category_from_json(doc)
    try:
        hom2_obj = {}
        for key, o in doc["hom2"]["obj"].items():
            x, y = key.split(",")
            hom2_obj[(x, y)] = o
        hom2_mor = {}
        for key, h in doc["hom2"]["mor"].items():
            f, g = key.split(",")
            hom2_mor[(f, g)] = h
        L = {}
        for key, h in doc["L"].items():
            x, y, z = key.split(",")
            L[(x, y, z)] = h
        return tabular_closed(
            doc.get("name", "closed"),
            cat,
            doc["unit"],
            hom2_obj,
            hom2_mor,
            dict(doc["i"]),
            dict(doc["i_inv"]),
            dict(doc["j"]),
            L,
        )
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed closed-category file: {exc}") from exc


def multicat_to_json(
    m: Multicategory,
    caps: ArityCaps = DEFAULT_CAPS,
    witness: ClosednessWitness | None = None,
    unit: UnitWitness | None = None,
) -> dict:
    oname = _Namer("o")
    mname = _Namer("m")
    objs = sorted(m.objects(), key=m.obj_key)
    for x in objs:
        oname(x)
    from .errors import BudgetExceeded as _BE

    hom = {}
    sigs = []
    for xs, y in m.signatures(caps):
        try:
            fs = sorted(m.hom(xs, y), key=m.mor_key)
        except _BE:
            continue  # signature outside this structure's horizon
        sigs.append((xs, y))
        if not fs:
            continue  # empty hom-sets stay implicit
        key = ",".join(oname(x) for x in xs) + ";" + oname(y)
        hom[key] = [mname(f) for f in fs]
    compose = {}
    from .errors import BudgetExceeded
    from .multicat import _inner_profiles
    import itertools as _it

    for ys, z in sigs:
        for g in m.hom(ys, z):
            for doms in _inner_profiles(m, ys, caps.max_arity):
                try:
                    choices = [m.hom(doms[i], ys[i]) for i in range(len(ys))]
                except BudgetExceeded:
                    continue
                for fs in _it.product(*choices):
                    try:
                        out = m.compose(fs, g)
                    except (ValueError, BudgetExceeded):
                        continue  # outside this structure's tabulated horizon
                    if out in mname.names:
                        key = ",".join(mname(f) for f in fs) + "|" + mname(g)
                        compose[key] = mname(out)
    doc = {
        "kind": "multicategory",
        "name": m.name,
        "objects": [oname(x) for x in objs],
        "hom": hom,
        "compose": compose,
        "id": {oname(x): mname(m.identity(x)) for x in objs},
    }
    if witness is not None:
        doc["hom_obj"] = {
            f"{oname(x)};{oname(z)}": oname(witness.hom_obj1[(x, z)])
            for x in objs
            for z in objs
            if (x, z) in witness.hom_obj1
        }
        doc["ev"] = {
            f"{oname(x)};{oname(z)}": mname(witness.ev1[(x, z)])
            for x in objs
            for z in objs
            if (x, z) in witness.ev1
        }
    if unit is not None:
        doc["unit"] = {"unit": oname(unit.unit), "u": mname(unit.u)}
    return doc


def multicat_from_json(
    doc: dict,
) -> tuple[TabularMulticategory, ClosednessWitness | None, UnitWitness | None]:
    try:
        hom = {}
        for key, fs in doc["hom"].items():
            left, y = key.split(";")
            xs = tuple(p for p in left.split(",") if p)
            hom[(xs, y)] = list(fs)
        compose = {}
        for key, h in doc["compose"].items():
            left, g = key.split("|")
            fs = tuple(p for p in left.split(",") if p)
            compose[(fs, g)] = h
        m = TabularMulticategory(
            doc.get("name", "multicategory"),
            list(doc["objects"]),
            hom,
            compose,
            dict(doc["id"]),
        )
        witness = None
        if "hom_obj" in doc:
            hom_obj1 = {}
            for key, o in doc["hom_obj"].items():
                x, z = key.split(";")
                hom_obj1[(x, z)] = o
            ev1 = {}
            for key, e in doc.get("ev", {}).items():
                x, z = key.split(";")
                ev1[(x, z)] = e
            witness = ClosednessWitness(m, hom_obj1, ev1)
        unit = None
        if "unit" in doc:
            unit = UnitWitness(doc["unit"]["unit"], doc["unit"]["u"])
        return m, witness, unit
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed multicategory file: {exc}") from exc


def v_category_to_json(A, base_ref: str, budget: SizeBudget = DEFAULT_BUDGET) -> dict:
    """Enriched categories serialize by reference to their base structure
    plus the hom-object, identity, and composition tables."""
    cs = A.base
    objs = sorted(guard_objects(cs.cat, budget), key=cs.cat.obj_key)
    oname = _Namer("o")
    mname = _Namer("m")
    for x in objs:
        oname(x)
    for f in cs.cat.all_morphisms():
        mname(f)
    aob = sorted(A.objects, key=cs.cat.obj_key)
    return {
        "kind": "v-category",
        "name": A.name,
        "base": base_ref,
        "objects": [oname(x) for x in aob],
        "hom_obj": {
            f"{oname(x)},{oname(y)}": oname(A.hom_obj(x, y))
            for x in aob
            for y in aob
        },
        "j": {oname(x): mname(A.j(x)) for x in aob},
        "L": {
            f"{oname(x)},{oname(y)},{oname(z)}": mname(A.L(x, y, z))
            for x in aob
            for y in aob
            for z in aob
        },
    }


def v_category_from_json(doc: dict, base) -> "object":
    """Rebuild an enriched category over an already-resolved base whose
    objects and morphisms carry the serialized names (a closed structure
    parsed from the same dump)."""
    from .enriched import VCategory

    try:
        hom_obj = {}
        for key, o in doc["hom_obj"].items():
            x, y = key.split(",")
            hom_obj[(x, y)] = o
        L = {}
        for key, m in doc["L"].items():
            x, y, z = key.split(",")
            L[(x, y, z)] = m
        j = dict(doc["j"])
        return VCategory(
            doc.get("name", "v-category"),
            base,
            tuple(doc["objects"]),
            lambda x, y: hom_obj[(x, y)],
            j.__getitem__,
            lambda x, y, z: L[(x, y, z)],
        )
    except (KeyError, ValueError) as exc:
        raise FormatError(f"malformed v-category file: {exc}") from exc


def dumps(doc: dict) -> str:
    return json.dumps(_strip(doc), indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FormatError("missing 'kind' field")
    return doc


REPORT_SCHEMA = {
    "type": "object",
    "required": ["title", "items", "summary"],
    "properties": {
        "title": {"type": "string"},
        "items": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "anchor", "status", "locus"],
                "properties": {
                    "check": {"type": "string"},
                    "anchor": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "locus": {"type": "string"},
                },
            },
        },
        "summary": {
            "type": "object",
            "properties": {
                "pass": {"type": "integer"},
                "fail": {"type": "integer"},
                "skipped": {"type": "integer"},
            },
        },
    },
}
