"""Square-free monomials and monomial ideals given by minimal generators.

A square-free monomial is identified with its support, so lcm is set union
and divisibility is set inclusion.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import MonomialParseError
from .graph import Graph, natural_key


@dataclass(frozen=True)
class Monomial:
    support: frozenset

    @classmethod
    def of(cls, *variables: str) -> "Monomial":
        if len(set(variables)) != len(variables):
            raise MonomialParseError(f"repeated variable in {'*'.join(variables)}: not square-free")
        return cls(frozenset(variables))

    @property
    def degree(self) -> int:
        return len(self.support)

    def variables(self) -> list[str]:
        return sorted(self.support, key=natural_key)

    def sort_key(self):
        return (self.degree, [natural_key(v) for v in self.variables()])

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "*".join(self.variables()) if self.support else "1"

    def compact(self) -> str:
        """Juxtaposed form, e.g. ``u1u2w1``."""
        return "".join(self.variables()) if self.support else "1"


ONE = Monomial(frozenset())


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(a.support | b.support)


def lcm_all(ms: Iterable[Monomial]) -> Monomial:
    support = frozenset()
    for m in ms:
        support |= m.support
    return Monomial(support)


def divides(a: Monomial, b: Monomial) -> bool:
    return a.support <= b.support


def strictly_divides(a: Monomial, b: Monomial) -> bool:
    return a.support < b.support


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal stored as its minimal generating set, in canonical order.

    Build instances through :func:`minimalize`; the constructor trusts that
    ``generators`` is already an antichain.
    """

    generators: tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def variables(self) -> list[str]:
        vs = set()
        for m in self.generators:
            vs |= m.support
        return sorted(vs, key=natural_key)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m):
        return m in self.generators

    def __str__(self) -> str:
        return "<" + ", ".join(str(m) for m in self.generators) + ">"

    def to_json(self) -> list[list[str]]:
        return [m.variables() for m in self.generators]


ZERO_IDEAL = MonomialIdeal(())


def minimalize(ms: Iterable[Monomial]) -> MonomialIdeal:
    unique = set(ms)
    keep = [m for m in unique if not any(o.support < m.support for o in unique)]
    return MonomialIdeal(tuple(sorted(keep, key=Monomial.sort_key)))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(tuple(sorted((Monomial(e) for e in g.edges), key=Monomial.sort_key)))


def intersect(j: MonomialIdeal, k: MonomialIdeal) -> MonomialIdeal:
    if j.is_zero or k.is_zero:
        return ZERO_IDEAL
    return minimalize(lcm(f, g) for f in j.generators for g in k.generators)


def member(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(divides(gen, m) for gen in ideal.generators)


# -- text forms --------------------------------------------------------------

_TOKEN = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def parse_monomial(text: str) -> Monomial:
    body = text.strip()
    if not body:
        raise MonomialParseError("empty monomial")
    tokens = [t.strip() for t in body.split("*")] if "*" in body else body.split()
    for t in tokens:
        if "^" in t:
            raise MonomialParseError(f"exponent in {t!r}: only square-free monomials are supported")
        if not _TOKEN.match(t):
            raise MonomialParseError(f"bad variable token {t!r}")
    return Monomial.of(*tokens)


def parse_ideal(text: str) -> MonomialIdeal:
    body = text.strip()
    if body.startswith("<") and body.endswith(">"):
        body = body[1:-1]
    elif body.startswith("<") or body.endswith(">"):
        raise MonomialParseError("unbalanced angle brackets")
    parts = [p for p in body.split(",") if p.strip()]
    return minimalize(parse_monomial(p) for p in parts)


def ideal_from_json(doc) -> MonomialIdeal:
    if not isinstance(doc, list):
        raise MonomialParseError("ideal JSON must be a list of variable lists")
    ms = []
    for entry in doc:
        if not isinstance(entry, list) or not entry or not all(isinstance(v, str) for v in entry):
            raise MonomialParseError(f"bad monomial entry {entry!r}")
        ms.append(Monomial.of(*entry))
    return minimalize(ms)
