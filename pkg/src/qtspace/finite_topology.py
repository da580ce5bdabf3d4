"""Finite topological spaces stored as minimal open neighbourhoods.

Every finite space is Alexandrov: each point ``x`` has a smallest open set
``U_x`` containing it, and a set is open exactly when it contains ``U_y`` for
each of its points ``y``.  Storing only the ``U_x`` is therefore lossless and
avoids materialising the (possibly exponential) family of all opens.

Internally sets are also kept as integer bitmasks over the point order, which
keeps the enumeration oracles fast enough for exhaustive checks.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .errors import OpenFamilyTooLarge, TopologyError

PointSet = frozenset

DEFAULT_OPEN_LIMIT = 4096


class FiniteSpace:
    """Immutable finite space.

    ``points`` keeps insertion order (used only for output); ``min_open``
    maps each point to the minimal open set containing it.
    """

    __slots__ = ("points", "min_open", "_index", "_masks")

    def __init__(self, points: Sequence[str], min_open: Mapping[str, Iterable[str]]):
        points = tuple(points)
        if len(set(points)) != len(points):
            raise TopologyError("duplicate point identifiers")
        index = {p: i for i, p in enumerate(points)}
        if set(min_open) != set(points):
            raise TopologyError("min_open must have exactly one entry per point")
        mo = {}
        for p in points:
            u = frozenset(min_open[p])
            unknown = u - index.keys()
            if unknown:
                raise TopologyError(f"min_open({p}) mentions unknown points {sorted(unknown)}")
            if p not in u:
                raise TopologyError(f"{p} is not in its own minimal open set")
            mo[p] = u
        for p, u in mo.items():
            for q in u:
                if not mo[q] <= u:
                    raise TopologyError(
                        f"Alexandrov condition fails: min_open({q}) is not inside min_open({p})"
                    )
        self.points = points
        self.min_open = mo
        self._index = index
        self._masks = {p: _to_mask(index, u) for p, u in mo.items()}

    def __len__(self):
        return len(self.points)

    def __contains__(self, point):
        return point in self._index

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.points == other.points and self.min_open == other.min_open

    def __hash__(self):
        return hash((self.points, frozenset(self.min_open.items())))

    def __repr__(self):
        body = ", ".join(f"{p}: {sorted(self.min_open[p])}" for p in self.points)
        return f"FiniteSpace({{{body}}})"

    @property
    def full(self) -> PointSet:
        return frozenset(self.points)

    def check_subset(self, s: Iterable[str]) -> PointSet:
        s = frozenset(s)
        unknown = s - self._index.keys()
        if unknown:
            raise TopologyError(f"unknown points {sorted(unknown)}")
        return s

    # bitmask helpers, used by the enumeration oracles and the Heyting sweep

    def mask(self, s: Iterable[str]) -> int:
        return _to_mask(self._index, self.check_subset(s))

    def unmask(self, m: int) -> PointSet:
        return frozenset(p for i, p in enumerate(self.points) if m >> i & 1)

    def min_open_mask(self, point: str) -> int:
        return self._masks[point]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.points)) - 1

    def interior_mask(self, m: int) -> int:
        out = 0
        for i, p in enumerate(self.points):
            if m >> i & 1 and self._masks[p] & ~m == 0:
                out |= 1 << i
        return out

    def generators(self) -> list[int]:
        """Distinct minimal-open masks in point order."""
        seen = []
        for p in self.points:
            g = self._masks[p]
            if g not in seen:
                seen.append(g)
        return seen

    def sorted_points(self, s: Iterable[str]) -> list[str]:
        """``s`` listed in the space's point order."""
        s = set(s)
        return [p for p in self.points if p in s]


def _to_mask(index, s):
    m = 0
    for p in s:
        m |= 1 << index[p]
    return m


def from_subbasis(points: Sequence[str], subbasis: Iterable[Iterable[str]]) -> FiniteSpace:
    """Build the space generated by ``subbasis``.

    The minimal open set of ``x`` is the intersection of the subbasis sets
    containing it, or the whole space when none does.
    """
    points = tuple(points)
    if len(set(points)) != len(points):
        raise TopologyError("duplicate point identifiers")
    full = frozenset(points)
    sets = []
    for b in subbasis:
        b = frozenset(b)
        unknown = b - full
        if unknown:
            raise TopologyError(f"subbasis element mentions unknown points {sorted(unknown)}")
        sets.append(b)
    min_open = {}
    for p in points:
        u = full
        for b in sets:
            if p in b:
                u = u & b
        min_open[p] = u
    return FiniteSpace(points, min_open)


def discrete(points: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(points, {p: {p} for p in points})


def indiscrete(points: Sequence[str]) -> FiniteSpace:
    return FiniteSpace(points, {p: points for p in points})


def is_open(space: FiniteSpace, s: Iterable[str]) -> bool:
    s = space.check_subset(s)
    return all(space.min_open[x] <= s for x in s)


def interior(space: FiniteSpace, s: Iterable[str]) -> PointSet:
    s = space.check_subset(s)
    return frozenset(x for x in s if space.min_open[x] <= s)


def closure(space: FiniteSpace, s: Iterable[str]) -> PointSet:
    s = space.check_subset(s)
    return frozenset(x for x in space.points if space.min_open[x] & s)


def complement(space: FiniteSpace, s: Iterable[str]) -> PointSet:
    return space.full - space.check_subset(s)


def connected_components(space: FiniteSpace) -> list[PointSet]:
    """Components of the symmetric relation ``y in U_x or x in U_y``.

    For finite spaces these coincide with the topological components.
    Components are listed in order of their first point.
    """
    neighbours = {p: set() for p in space.points}
    for p in space.points:
        for q in space.min_open[p]:
            if q != p:
                neighbours[p].add(q)
                neighbours[q].add(p)
    seen = set()
    comps = []
    for start in space.points:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in neighbours[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(space: FiniteSpace) -> bool:
    """True unless the space splits into two disjoint non-empty opens.

    The empty space counts as connected.
    """
    return len(connected_components(space)) <= 1


def non_hausdorff_pairs(space: FiniteSpace) -> list[tuple[str, str]]:
    """Pairs of distinct points that cannot be separated by disjoint opens."""
    pts = space.points
    out = []
    for i, x in enumerate(pts):
        for y in pts[i + 1:]:
            if space.min_open[x] & space.min_open[y]:
                out.append((x, y))
    return out


def enumerate_open_masks(space: FiniteSpace, limit: int = DEFAULT_OPEN_LIMIT) -> list[int]:
    family = {0}
    for g in space.generators():
        family |= {f | g for f in family}
        if len(family) > limit:
            raise OpenFamilyTooLarge(f"more than {limit} open sets")
    return sorted(family, key=lambda m: (bin(m).count("1"), m))


def enumerate_opens(space: FiniteSpace, limit: int = DEFAULT_OPEN_LIMIT) -> list[PointSet]:
    """All open sets, smallest first.

    Raises OpenFamilyTooLarge once the family exceeds ``limit``; callers
    should fall back to sampled checks in that case.
    """
    return [space.unmask(m) for m in enumerate_open_masks(space, limit)]
