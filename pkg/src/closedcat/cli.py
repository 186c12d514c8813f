"""Command-line front end.

Verbs:
  check      run checker suites over registry instances or structure files
  construct  build a derived structure (underlying closed category, or
             the normalized closed category with its set-valued functor)
  roundtrip  verify lift-then-underlying and underlying-then-lift on a
             multicategory and a functor
  represent  build the representing multicategory of a closed category
             and emit it as a multicategory file
  instance   list registry instances or dump one as a file

Exit status: 0 when every executed check passed, 1 when any check failed,
2 on parse or input errors.  Output is deterministic: two runs over the
same inputs and flags produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import instances, interchange
from .closed import (
    check_cc_axioms,
    check_cf_axioms,
    ek_normalize,
    verify_derived_cc_theorems,
)
from .closedmc import (
    build_internal_category,
    check_closedness,
    check_nary_factorization,
    check_unit_object,
    verify_internal_lemmas,
)
from .core import SizeBudget, check_category_axioms
from .correspond import (
    build_representing_multicategory,
    check_injectivity,
    check_representation,
    lift_closed_functor,
    multifunctors_equal,
    closed_functors_equal,
    underlying_closed_category,
    underlying_closed_functor,
    verify_essential_surjectivity,
    verify_u_construction,
)
from .errors import FormatError, KernelError
from .multicat import ArityCaps, MultiFunctor, check_multicategory_axioms
from .report import Report


def _budget(args) -> SizeBudget:
    return SizeBudget(max_homset=args.budget)


def _caps(args) -> ArityCaps:
    return ArityCaps(args.arity_cap)


def _load_target(spec: str):
    """Resolve 'instance:NAME' or 'file:PATH' to (name, kind, payload)."""
    if spec.startswith("instance:"):
        name = spec.split(":", 1)[1]
        info = instances.get(name)
        return name, info.kind, info.build(), info
    if spec.startswith("file:"):
        path = Path(spec.split(":", 1)[1])
        doc = interchange.loads(path.read_text())
        kind = doc["kind"]
        if kind == "category":
            return str(path), "category", interchange.category_from_json(doc), None
        if kind == "closed-category":
            return str(path), "closed", interchange.closed_from_json(doc), None
        if kind == "multicategory":
            return str(path), "multicat", interchange.multicat_from_json(doc), None
        raise FormatError(f"unknown structure kind {kind!r}")
    raise FormatError(f"target must be instance:NAME or file:PATH, got {spec!r}")


def _check_target(name: str, kind: str, payload, info, args) -> Report:
    rep = Report(name)
    budget = _budget(args)
    caps = _caps(args)
    axioms = args.suite in ("axioms", "all")
    theorems = args.suite in ("theorems", "all")

    def run(tag, fn):
        try:
            rep.extend(fn(), prefix=f"{name}/")
        except KernelError as exc:
            rep.add_fail(f"{name}/{tag}/error", type(exc).__name__, str(exc)[:200])

    if kind == "category":
        if axioms:
            run("category", lambda: check_category_axioms(payload, budget))
        return rep

    if kind == "closed":
        cs = payload
        if axioms:
            run("category", lambda: check_category_axioms(cs.cat, budget))
            run("cc", lambda: check_cc_axioms(cs, budget))
        if theorems:
            run("derived", lambda: verify_derived_cc_theorems(cs, budget))
        return rep

    m, w, uw = payload
    # Registry instances may declare their own arity horizon (partial
    # tensors); an explicit --arity-cap overrides it.
    icaps = info.caps if info is not None and args.arity_cap == 3 else caps
    if axioms:
        run("mc", lambda: check_multicategory_axioms(m, icaps))
        if w is not None:
            run("closed", lambda: check_closedness(w, icaps))
        if w is not None and uw is not None:
            run("unit", lambda: check_unit_object(w, uw, icaps))
    if theorems and w is not None:
        run("nary", lambda: check_nary_factorization(w, icaps))

        def lemmas():
            ic, r = build_internal_category(w, icaps)
            r2 = verify_internal_lemmas(w, ic, icaps)
            r.extend(r2)
            return r

        run("lemmas", lemmas)
        if uw is not None:
            run("u-construction", lambda: verify_u_construction(w, uw, icaps))
    return rep


def cmd_check(args) -> int:
    targets = args.target or [f"instance:{n}" for n in sorted(instances.REGISTRY)]
    out = Report("check")
    for spec in targets:
        name, kind, payload, info = _load_target(spec)
        out.extend(_check_target(name, kind, payload, info, args))
    text = _render(out, args)
    _write(text, args.out)
    return 0 if out.ok else 1


def cmd_construct(args) -> int:
    name, kind, payload, info = _load_target(args.target)
    caps = _caps(args)
    budget = _budget(args)
    if args.what == "underlying":
        if kind != "multicat":
            raise FormatError("construct underlying expects a multicategory")
        m, w, uw = payload
        if w is None or uw is None:
            raise FormatError("multicategory lacks a closedness witness or unit")
        cs = underlying_closed_category(w, uw, caps)
        doc = interchange.closed_to_json(cs, budget)
    elif args.what == "ek":
        if kind != "closed":
            raise FormatError("construct ek expects a closed category")
        ek, iso = ek_normalize(payload, budget)
        doc = interchange.closed_to_json(ek.closed, budget)
    else:
        raise FormatError(f"unknown construction {args.what!r}")
    _write(interchange.dumps(doc), args.out)
    return 0


def cmd_represent(args) -> int:
    name, kind, payload, info = _load_target(args.target)
    if kind != "closed":
        raise FormatError("represent expects a closed category")
    caps = _caps(args)
    bundle = build_representing_multicategory(payload, caps, _budget(args))
    rep = Report(f"represent {name}")
    rep.extend(check_representation(bundle, caps))
    rep.extend(verify_essential_surjectivity(bundle, caps))
    doc = interchange.multicat_to_json(
        bundle.mcv, ArityCaps(caps.max_arity + 1), bundle.witness, bundle.unit
    )
    _write(interchange.dumps(doc), args.out)
    sys.stdout.write(_render(rep, args))
    return 0 if rep.ok else 1


def cmd_roundtrip(args) -> int:
    name, kind, payload, info = _load_target(args.target)
    if kind != "multicat":
        raise FormatError("roundtrip expects a multicategory target")
    m, w, uw = payload
    if w is None or uw is None:
        raise FormatError("multicategory lacks a closedness witness or unit")
    caps = _caps(args)

    if args.functor.startswith("functor:"):
        fname = args.functor.split(":", 1)[1]
        if fname == "identity":
            F = MultiFunctor.identity(m)
        else:
            if fname not in instances.FUNCTORS:
                raise FormatError(f"unknown functor {fname!r}")
            F = instances.FUNCTORS[fname](m)
    else:
        raise FormatError("functor must be functor:NAME")

    rep = Report(f"roundtrip {name} {F.name}")
    ucs = underlying_closed_category(w, uw, caps)
    UF = underlying_closed_functor(F, w, uw, w, uw, ucs, ucs, caps)
    rep.extend(check_cf_axioms(UF), prefix="U/")
    lifted = lift_closed_functor(UF, w, uw, w, uw, caps)
    eq, locus = multifunctors_equal(lifted, F, caps)
    rep.add("roundtrip/lift-after-U", "lift(U(F)) = F", eq, locus)
    UL = underlying_closed_functor(lifted, w, uw, w, uw, ucs, ucs, caps)
    eq2, locus2 = closed_functors_equal(UL, UF)
    rep.add("roundtrip/U-after-lift", "U(lift(Phi)) = Phi", eq2, locus2)
    rep.extend(check_injectivity(F, lifted, UF, UL, caps))
    text = _render(rep, args)
    _write(text, args.out)
    return 0 if rep.ok else 1


def cmd_instance(args) -> int:
    if args.action == "list":
        lines = []
        for name in sorted(instances.REGISTRY):
            info = instances.REGISTRY[name]
            flag = " (negative)" if info.advertised_failure else ""
            lines.append(f"{name:18s} {info.kind:9s} {info.description}{flag}")
        _write("\n".join(lines) + "\n", args.out)
        return 0
    info = instances.get(args.name)
    budget = _budget(args)
    caps = _caps(args)
    if info.kind == "category":
        doc = interchange.category_to_json(info.build(), budget)
    elif info.kind == "closed":
        try:
            doc = interchange.closed_to_json(info.build(), budget)
        except FormatError:
            # lazy instance: dump by registry reference
            params = {"max_size": 2} if args.name == "finset" else {}
            doc = interchange.closed_ref_to_json(args.name, params)
    else:
        m, w, uw = info.build()
        dump_caps = ArityCaps(min(caps.max_arity, info.caps.max_arity) + 1)
        doc = interchange.multicat_to_json(m, dump_caps, w, uw)
    _write(interchange.dumps(doc), args.out)
    return 0


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render(rep: Report, args) -> str:
    if args.format == "json":
        return json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n"
    return rep.render_text() + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=4096, help="max hom-set size")
    common.add_argument(
        "--arity-cap", type=int, default=3, help="max total arity checked"
    )
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", default=None, help="write output to a file")

    p = argparse.ArgumentParser(
        prog="closedcat",
        description="axiom checker for finite closed categories and closed multicategories",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("check", parents=[common], help="run checker suites")
    c.add_argument("--suite", choices=["axioms", "theorems", "all"], default="all")
    c.add_argument("target", nargs="*", help="instance:NAME or file:PATH")
    c.set_defaults(fn=cmd_check)

    c = sub.add_parser("construct", parents=[common], help="build a derived structure")
    c.add_argument("what", choices=["underlying", "ek"])
    c.add_argument("target")
    c.set_defaults(fn=cmd_construct)

    c = sub.add_parser(
        "represent", parents=[common], help="build the representing multicategory"
    )
    c.add_argument("target")
    c.set_defaults(fn=cmd_represent)

    c = sub.add_parser(
        "roundtrip", parents=[common], help="verify lift/underlying round trips"
    )
    c.add_argument("target")
    c.add_argument("functor")
    c.set_defaults(fn=cmd_roundtrip)

    c = sub.add_parser("instance", parents=[common], help="registry access")
    c.add_argument("action", choices=["list", "dump"])
    c.add_argument("name", nargs="?", default=None)
    c.set_defaults(fn=cmd_instance)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verb == "instance" and args.action == "dump" and not args.name:
        print("instance dump requires a name", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (FormatError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
