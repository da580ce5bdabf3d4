"""Welding entanglement links into a background space.

Each link adds one new point ``E`` whose smallest open set is
``U(L) | {E} | U(R)``, with ``U(L)`` and ``U(R)`` the minimal opens of the
link's end sites in the base space.  Base points keep their neighbourhoods,
so the new point only ever joins what it touches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import quantum
from .errors import LinkError
from .finite_topology import FiniteSpace


@dataclass(frozen=True, eq=False)
class EntanglementLink:
    label: str
    left: str
    right: str
    state: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        if self.state is not None:
            st = np.array(self.state, dtype=complex)
            if st.shape != (2, 2):
                raise LinkError(f"link {self.label}: state must be a 2x2 matrix", path=self.label)
            st.setflags(write=False)
            object.__setattr__(self, "state", st)

    def __eq__(self, other):
        if not isinstance(other, EntanglementLink):
            return NotImplemented
        same_state = (self.state is None and other.state is None) or (
            self.state is not None and other.state is not None and np.array_equal(self.state, other.state)
        )
        return (self.label, self.left, self.right) == (other.label, other.left, other.right) and same_state

    __hash__ = None

    @property
    def ends(self) -> tuple[str, str]:
        return (self.left, self.right)


@dataclass(frozen=True)
class AugmentedSpace:
    base: FiniteSpace
    links: tuple[EntanglementLink, ...]
    space: FiniteSpace

    def link(self, label: str) -> EntanglementLink:
        for lk in self.links:
            if lk.label == label:
                return lk
        raise LinkError(f"no link labelled {label}", path=label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lk.label for lk in self.links)


def augment(base: FiniteSpace, links: Sequence[EntanglementLink]) -> AugmentedSpace:
    links = tuple(links)
    min_open = dict(base.min_open)
    for lk in links:
        if lk.label in min_open:
            raise LinkError(f"link label {lk.label} collides with an existing point", path=lk.label)
        for end in lk.ends:
            if end not in base:
                raise LinkError(f"link {lk.label} has unknown endpoint {end}", path=lk.label)
        min_open[lk.label] = base.min_open[lk.left] | {lk.label} | base.min_open[lk.right]
    points = base.points + tuple(lk.label for lk in links)
    return AugmentedSpace(base, links, FiniteSpace(points, min_open))


def collapse_link(a: AugmentedSpace, label: str) -> AugmentedSpace:
    """Drop one link, as when its state is measured."""
    a.link(label)
    return augment(a.base, [lk for lk in a.links if lk.label != label])


def swap_links(
    a: AugmentedSpace,
    ab: str,
    bc: str,
    new_label: str,
    measurement=None,
) -> AugmentedSpace:
    """Entanglement swap at the site shared by links ``ab`` and ``bc``.

    Both links are replaced by one link joining their outer sites.  When both
    carry states the new state is ``E . M . E'`` (identity ``M`` unless
    ``measurement`` is given), with each input matrix transposed as needed so
    that its rows belong to the outer site.
    """
    first, second = a.link(ab), a.link(bc)
    if ab == bc:
        raise LinkError("cannot swap a link with itself", path=ab)
    if first.right in second.ends:
        mid = first.right
    elif first.left in second.ends:
        mid = first.left
    else:
        raise LinkError(f"links {ab} and {bc} do not share a middle site", path=bc)
    if new_label in a.space and new_label not in (ab, bc):
        raise LinkError(f"label {new_label} is already in use", path=new_label)

    outer_a = first.left if first.right == mid else first.right
    outer_c = second.right if second.left == mid else second.left

    state = None
    if first.state is not None and second.state is not None:
        e = first.state if first.right == mid else first.state.T
        e2 = second.state if second.left == mid else second.state.T
        m = np.eye(2) if measurement is None else measurement
        state = quantum.entanglement_swap(e, m, e2)

    kept = [lk for lk in a.links if lk.label not in (ab, bc)]
    return augment(a.base, kept + [EntanglementLink(new_label, outer_a, outer_c, state)])

