"""Hereditarily finite values: the carrier universe for set-based instances.

A value is an atom, an ordered tuple, a finite set, or a finite function
table.  Values are immutable and hashable, and equality is extensional:
two tables are equal exactly when their domains agree as sets and their
images agree pointwise.  Sets and tables are stored as frozensets, so
ordering of construction never influences equality or hashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

ATOM = "atom"
TUPLE = "tuple"
SET = "set"
TABLE = "table"

_KIND_RANK = {ATOM: 0, TUPLE: 1, SET: 2, TABLE: 3}


@dataclass(frozen=True, eq=False)
class HF:
    """One hereditarily finite value. Construct via atom/tup/fset/ftable."""

    kind: str
    payload: object

    def __post_init__(self):
        # Values are compared constantly in the checkers; caching the hash
        # at construction keeps deep-table comparisons cheap.
        object.__setattr__(self, "_hash", hash((self.kind, self.payload)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, HF):
            return NotImplemented
        if self._hash != other._hash:  # type: ignore[attr-defined]
            return False
        return self.kind == other.kind and self.payload == other.payload

    def __repr__(self) -> str:
        return pretty(self)

    # Accessors raise on kind mismatch so misuse fails early and loudly.
    @property
    def name(self) -> str:
        if self.kind != ATOM:
            raise TypeError(f"not an atom: {pretty(self)}")
        return self.payload  # type: ignore[return-value]

    @property
    def items(self) -> tuple["HF", ...]:
        if self.kind != TUPLE:
            raise TypeError(f"not a tuple: {pretty(self)}")
        return self.payload  # type: ignore[return-value]

    @property
    def elements(self) -> frozenset["HF"]:
        if self.kind != SET:
            raise TypeError(f"not a set: {pretty(self)}")
        return self.payload  # type: ignore[return-value]

    @property
    def pairs(self) -> frozenset[tuple["HF", "HF"]]:
        if self.kind != TABLE:
            raise TypeError(f"not a table: {pretty(self)}")
        return self.payload  # type: ignore[return-value]

    def apply(self, arg: "HF") -> "HF":
        """Look up a table at a point of its domain."""
        for k, v in self.pairs:
            if k == arg:
                return v
        raise KeyError(f"{pretty(arg)} not in domain of {pretty(self)}")


def atom(name: str) -> HF:
    if not isinstance(name, str):
        raise TypeError("atom name must be a string")
    return HF(ATOM, name)


def tup(*items: HF) -> HF:
    _check_all(items)
    return HF(TUPLE, tuple(items))


def fset(elements: Iterable[HF]) -> HF:
    elems = frozenset(elements)
    _check_all(elems)
    return HF(SET, elems)


def ftable(pairs: Iterable[tuple[HF, HF]]) -> HF:
    """Function table. The mapping must be single-valued on its domain."""
    entries = frozenset((k, v) for k, v in pairs)
    seen: dict[HF, HF] = {}
    for k, v in entries:
        _check_one(k)
        _check_one(v)
        if k in seen and seen[k] != v:
            raise ValueError(f"table not single-valued at {pretty(k)}")
        seen[k] = v
    return HF(TABLE, entries)


def _check_one(v: object) -> None:
    if not isinstance(v, HF):
        raise TypeError(f"expected HF value, got {type(v).__name__}")


def _check_all(vs: Iterable[object]) -> None:
    for v in vs:
        _check_one(v)


def hf_equal(a: HF, b: HF) -> bool:
    """Extensional equality, by explicit structural recursion.

    This is the reference comparison: tables are compared domain-as-set
    plus pointwise images.  It must agree with ``==`` (which compares the
    frozenset payloads directly); the test suite checks the agreement.
    """
    if a.kind != b.kind:
        return False
    if a.kind == ATOM:
        return a.name == b.name
    if a.kind == TUPLE:
        return len(a.items) == len(b.items) and all(
            hf_equal(x, y) for x, y in zip(a.items, b.items)
        )
    if a.kind == SET:
        return _set_covers(a.elements, b.elements) and _set_covers(
            b.elements, a.elements
        )
    dom_a = {k for k, _ in a.pairs}
    dom_b = {k for k, _ in b.pairs}
    if not (_set_covers(dom_a, dom_b) and _set_covers(dom_b, dom_a)):
        return False
    return all(hf_equal(a.apply(k), b.apply(k)) for k in dom_a)


def _set_covers(xs: frozenset[HF] | set[HF], ys: frozenset[HF] | set[HF]) -> bool:
    return all(any(hf_equal(x, y) for y in ys) for x in xs)


def hf_key(v: HF):
    """Canonical sort key: a total order used for deterministic iteration."""
    rank = _KIND_RANK[v.kind]
    if v.kind == ATOM:
        return (rank, v.name)
    if v.kind == TUPLE:
        return (rank, tuple(hf_key(x) for x in v.items))
    if v.kind == SET:
        return (rank, tuple(sorted(hf_key(x) for x in v.elements)))
    return (rank, tuple(sorted((hf_key(k), hf_key(x)) for k, x in v.pairs)))


def sorted_elements(v: HF) -> tuple[HF, ...]:
    return tuple(sorted(v.elements, key=hf_key))


def sorted_pairs(v: HF) -> tuple[tuple[HF, HF], ...]:
    return tuple(sorted(v.pairs, key=lambda kv: hf_key(kv[0])))


def depth(v: HF) -> int:
    """Nesting depth of tuples and tables; a plain set of values does not
    count as an extra level, so a hom-set sits at the depth of its tables."""
    if v.kind == ATOM:
        return 0
    if v.kind == SET:
        return max((depth(x) for x in v.elements), default=0)
    if v.kind == TUPLE:
        return 1 + max((depth(x) for x in v.items), default=0)
    return 1 + max((max(depth(k), depth(x)) for k, x in v.pairs), default=0)


def pretty(v: HF) -> str:
    if v.kind == ATOM:
        return v.name
    if v.kind == TUPLE:
        return "(" + ", ".join(pretty(x) for x in v.items) + ")"
    if v.kind == SET:
        return "{" + ", ".join(pretty(x) for x in sorted_elements(v)) + "}"
    body = ", ".join(f"{pretty(k)}↦{pretty(x)}" for k, x in sorted_pairs(v))
    return "[" + body + "]"
