"""The Heyting algebra of open sets of a finite space."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import NotOpenError, OpenFamilyTooLarge
from .finite_topology import (
    DEFAULT_OPEN_LIMIT,
    FiniteSpace,
    PointSet,
    closure,
    enumerate_open_masks,
    interior,
    is_open,
)

# Above this many (U, V, W) triples the adjunction sweep lets W range over
# the minimal opens only; both sides of the adjunction are stable under
# unions in W, so the check is equivalent.
TRIPLE_BUDGET = 300_000
SAMPLE_SIZE = 256


def interval_model() -> FiniteSpace:
    """Three-point model of [0, 1] cut at 1/2.

    ``u`` and ``v`` stand for the open halves and ``m`` for the midpoint,
    whose every neighbourhood reaches both sides.
    """
    return FiniteSpace(("u", "m", "v"), {"u": {"u"}, "m": {"u", "m", "v"}, "v": {"v"}})


@dataclass
class LawReport:
    exhaustive: bool
    opens_checked: int
    triples_checked: int
    counterexamples: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "exhaustive": self.exhaustive,
            "opens_checked": self.opens_checked,
            "triples_checked": self.triples_checked,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }


class HeytingAlgebra:
    """Operations on the opens of ``space``; every argument must be open."""

    def __init__(self, space: FiniteSpace):
        self.space = space

    def _require_open(self, u: Iterable[str]) -> PointSet:
        u = self.space.check_subset(u)
        if not is_open(self.space, u):
            raise NotOpenError(f"{sorted(u)} is not open")
        return u

    @property
    def top(self) -> PointSet:
        return self.space.full

    @property
    def bottom(self) -> PointSet:
        return frozenset()

    def negation(self, u: Iterable[str]) -> PointSet:
        """Pseudo-complement: the interior of the complement."""
        u = self._require_open(u)
        return interior(self.space, self.space.full - u)

    def implication(self, u: Iterable[str], v: Iterable[str]) -> PointSet:
        """Largest open ``W`` with ``W & u <= v``."""
        u = self._require_open(u)
        v = self._require_open(v)
        return interior(self.space, (self.space.full - u) | v)

    def is_boolean(self) -> bool:
        # opens are unions of minimal opens, so checking those suffices
        return all(closure(self.space, g) == g for g in self.space.min_open.values())

    def verify_laws(self, limit: int = DEFAULT_OPEN_LIMIT, seed: int = 0) -> LawReport:
        """Check the Heyting identities over the opens of the space.

        Checks triple negation, ``U & ~U = {}``, the adjunction
        ``W & U <= V  <=>  W <= (U => V)`` and, for Boolean algebras, that
        ``~U`` is the set complement.  Falls back to a seeded random sample of
        opens when the family has more than ``limit`` members.
        """
        sp = self.space
        full = sp.full_mask
        try:
            opens = enumerate_open_masks(sp, limit)
            exhaustive = True
            notes = []
        except OpenFamilyTooLarge:
            opens = _sample_opens(sp, SAMPLE_SIZE, seed)
            exhaustive = False
            notes = [f"open family exceeds {limit}; sampled {len(opens)} opens (seed {seed})"]

        def neg(m):
            return sp.interior_mask(full & ~m)

        def imp(a, b):
            return sp.interior_mask((full & ~a) | b)

        bad = []
        boolean = self.is_boolean()
        for u in opens:
            nu = neg(u)
            if neg(neg(nu)) != nu:
                bad.append({"law": "triple_negation", "U": _names(sp, u)})
            if u & nu:
                bad.append({"law": "disjoint_negation", "U": _names(sp, u)})
            if boolean and nu != full & ~u:
                bad.append({"law": "boolean_negation", "U": _names(sp, u)})

        if len(opens) ** 3 <= TRIPLE_BUDGET:
            ws = opens
        else:
            ws = [0] + sp.generators()
            notes.append("adjunction checked with W over minimal opens")
        triples = 0
        for u in opens:
            for v in opens:
                i = imp(u, v)
                for w in ws:
                    triples += 1
                    if ((w & u & ~v) == 0) != ((w & ~i) == 0):
                        bad.append(
                            {"law": "adjunction", "U": _names(sp, u), "V": _names(sp, v), "W": _names(sp, w)}
                        )
        return LawReport(exhaustive, len(opens), triples, bad, notes)

    def negation_table(self) -> list[dict]:
        """Negation of each distinct minimal open, in point order."""
        rows = []
        for g in self.space.generators():
            u = self.space.unmask(g)
            rows.append(
                {"open": self.space.sorted_points(u), "negation": self.space.sorted_points(self.negation(u))}
            )
        return rows


def _names(space, m):
    return space.sorted_points(space.unmask(m))


def _sample_opens(space: FiniteSpace, count: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    gens = space.generators()
    found = {0, space.full_mask, *gens}
    for _ in range(count):
        m = 0
        for g in gens:
            if rng.random() < 0.5:
                m |= g
        found.add(m)
    return sorted(found, key=lambda m: (bin(m).count("1"), m))
