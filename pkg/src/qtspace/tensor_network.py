"""Dense tensor networks and their contraction.

A network is a set of named nodes, each holding a complex ndarray whose axes
are the node's ports.  Internal edges pair two ports (possibly on the same
node, which gives a trace); every other port is external and the external
ports fix the axis order of the contracted result.

Three contraction routes are provided and cross-checked in the tests:
``contract_brute`` sums products entry by entry, ``contract_full`` hands the
whole network to a single ``numpy.einsum`` call, and ``contract_ordered``
executes a pairwise plan such as the one from ``greedy_order``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import NetworkError, NotAProjector

Port = tuple  # (node id, axis)

PROJECTOR_TOL = 1e-9


@dataclass(frozen=True)
class InternalEdge:
    a: Port
    b: Port


class TensorNetwork:
    def __init__(
        self,
        nodes: Mapping[str, np.ndarray],
        internal: Iterable = (),
        external: Sequence[Port] = (),
    ):
        self.nodes = {}
        for name, t in nodes.items():
            arr = np.array(t, dtype=complex)
            arr.setflags(write=False)
            self.nodes[name] = arr
        self.internal = tuple(
            e if isinstance(e, InternalEdge) else InternalEdge(tuple(e[0]), tuple(e[1])) for e in internal
        )
        self.external = tuple(tuple(p) for p in external)
        self._validate()

    def _validate(self):
        used = {}
        for k, e in enumerate(self.internal):
            for p in (e.a, e.b):
                self._check_port(p)
                if p in used:
                    raise NetworkError(f"port {p} used twice")
                used[p] = k
            if self.axis_size(e.a) != self.axis_size(e.b):
                raise NetworkError(
                    f"edge {e.a}-{e.b} joins axes of sizes {self.axis_size(e.a)} and {self.axis_size(e.b)}"
                )
        for p in self.external:
            self._check_port(p)
            if p in used:
                raise NetworkError(f"port {p} is both internal and external")
            used[p] = None
        for name, t in self.nodes.items():
            for ax in range(t.ndim):
                if (name, ax) not in used:
                    raise NetworkError(f"port {(name, ax)} is neither internal nor external")

    def _check_port(self, p):
        if len(p) != 2 or p[0] not in self.nodes:
            raise NetworkError(f"port {p} references an unknown node")
        if not 0 <= p[1] < self.nodes[p[0]].ndim:
            raise NetworkError(f"port {p} is out of range for node {p[0]}")

    def axis_size(self, p: Port) -> int:
        return self.nodes[p[0]].shape[p[1]]

    @property
    def external_shape(self) -> tuple[int, ...]:
        return tuple(self.axis_size(p) for p in self.external)

    def internal_assignments(self) -> int:
        return int(np.prod([self.axis_size(e.a) for e in self.internal], dtype=np.int64))

    def __repr__(self):
        shapes = {k: v.shape for k, v in self.nodes.items()}
        return f"TensorNetwork(nodes={shapes}, internal={len(self.internal)}, external={self.external})"


def _labels(net: TensorNetwork):
    """Integer label per port: internal edges first, then externals."""
    label = {}
    for k, e in enumerate(net.internal):
        label[e.a] = label[e.b] = k
    base = len(net.internal)
    for k, p in enumerate(net.external):
        label[p] = base + k
    return label


def contract_brute(net: TensorNetwork, assignment) -> complex:
    """Sum over every internal index assignment of the product of node entries.

    ``assignment`` gives one index per external port, either as a sequence in
    external order or as a mapping from port to index.  Cost grows with the
    product of internal axis sizes.
    """
    if isinstance(assignment, Mapping):
        missing = [p for p in net.external if p not in assignment]
        if missing:
            raise NetworkError(f"no index given for external ports {missing}")
        ext = [assignment[p] for p in net.external]
    else:
        ext = list(assignment)
        if len(ext) != len(net.external):
            raise NetworkError(f"expected {len(net.external)} external indices, got {len(ext)}")
    for p, i in zip(net.external, ext):
        if not 0 <= i < net.axis_size(p):
            raise NetworkError(f"index {i} out of range for port {p}")

    label = _labels(net)
    ranges = [range(net.axis_size(e.a)) for e in net.internal]
    order = [(name, [label[(name, ax)] for ax in range(t.ndim)]) for name, t in net.nodes.items()]
    total = 0j
    for internal_idx in itertools.product(*ranges):
        idx = list(internal_idx) + ext
        term = 1 + 0j
        for name, labs in order:
            term *= net.nodes[name][tuple(idx[lab] for lab in labs)]
            if term == 0:
                break
        total += term
    return total


def contract_full(net: TensorNetwork) -> np.ndarray:
    """Contract the whole network; axes follow ``net.external``.

    The empty network contracts to the scalar 1.
    """
    if not net.nodes:
        return np.array(1 + 0j)
    label = _labels(net)
    nlab = len(net.internal) + len(net.external)
    if nlab > 52:
        raise NetworkError("too many indices for a single einsum call")
    operands = []
    for name, t in net.nodes.items():
        operands += [t, [label[(name, ax)] for ax in range(t.ndim)]]
    out = [label[p] for p in net.external]
    return np.asarray(np.einsum(*operands, out), dtype=complex)


@dataclass(frozen=True)
class Step:
    """Merge node ``b`` into node ``a``; the result keeps the id ``a``."""

    a: str
    b: str


class _Work:
    """Mutable contraction state: current tensors and their axis labels."""

    def __init__(self, net: TensorNetwork):
        label = _labels(net)
        self.tensors = {}
        self.labels = {}
        for name, t in net.nodes.items():
            labs = [label[(name, ax)] for ax in range(t.ndim)]
            t, labs = _trace_repeated(t, labs)
            self.tensors[name] = t
            self.labels[name] = labs
        self.sizes = {}
        for name, t in net.nodes.items():
            for ax in range(t.ndim):
                self.sizes[label[(name, ax)]] = t.shape[ax]
        self.external = [label[p] for p in net.external]

    def merged_labels(self, a, b):
        la, lb = self.labels[a], self.labels[b]
        shared = set(la) & set(lb)
        return [x for x in la if x not in shared] + [x for x in lb if x not in shared]

    def cost(self, a, b):
        return int(np.prod([self.sizes[x] for x in self.merged_labels(a, b)], dtype=np.int64))

    def connected(self, a, b):
        return bool(set(self.labels[a]) & set(self.labels[b]))

    def merge(self, a, b):
        if a == b or a not in self.tensors or b not in self.tensors:
            raise NetworkError(f"invalid step ({a}, {b})")
        la, lb = self.labels[a], self.labels[b]
        shared = [x for x in la if x in lb]
        axes = ([la.index(x) for x in shared], [lb.index(x) for x in shared])
        self.tensors[a] = np.tensordot(self.tensors[a], self.tensors[b], axes=axes)
        self.labels[a] = self.merged_labels(a, b)
        del self.tensors[b], self.labels[b]


def _trace_repeated(t, labs):
    """Trace out self-edges (labels occurring twice on one node)."""
    labs = list(labs)
    while len(set(labs)) != len(labs):
        x = next(x for x in labs if labs.count(x) == 2)
        i = labs.index(x)
        j = labs.index(x, i + 1)
        t = np.trace(t, axis1=i, axis2=j)
        labs = [y for k, y in enumerate(labs) if k not in (i, j)]
    return t, labs


def greedy_order(net: TensorNetwork) -> list[Step]:
    """Pairwise plan that always makes the smallest next intermediate tensor.

    Candidates are node pairs sharing an edge; once none remain, disconnected
    pieces are joined by outer products.  Ties go to the lexicographically
    smallest ``(a, b)`` with ``a < b``.
    """
    work = _Work(net)
    steps = []
    while len(work.tensors) > 1:
        names = sorted(work.tensors)
        pairs = list(itertools.combinations(names, 2))
        linked = [p for p in pairs if work.connected(*p)]
        a, b = min(linked or pairs, key=lambda p: (work.cost(*p), p))
        work.merge(a, b)
        steps.append(Step(a, b))
    return steps


def contract_ordered(net: TensorNetwork, order: Sequence[Step]) -> np.ndarray:
    """Contract pairwise along ``order``; must leave a single node."""
    if not net.nodes:
        if order:
            raise NetworkError("plan has steps but the network is empty")
        return np.array(1 + 0j)
    work = _Work(net)
    for step in order:
        a, b = (step.a, step.b) if isinstance(step, Step) else step
        work.merge(a, b)
    if len(work.tensors) != 1:
        raise NetworkError(f"plan leaves {len(work.tensors)} nodes uncontracted")
    (name,) = work.tensors
    t, labs = work.tensors[name], work.labels[name]
    return np.asarray(np.transpose(t, [labs.index(x) for x in work.external]), dtype=complex)


def contract(net: TensorNetwork) -> np.ndarray:
    return contract_ordered(net, greedy_order(net))


def projector_refine(net: TensorNetwork, node: str, tol: float = PROJECTOR_TOL) -> TensorNetwork:
    """Factor the projector at ``node`` as P = PP.

    ``node`` keeps its input port 0 and gains a fresh partner node whose
    port 1 takes over the old output wiring; the two are joined by a new
    internal edge.
    """
    if node not in net.nodes:
        raise NetworkError(f"unknown node {node}")
    p = net.nodes[node]
    if p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise NetworkError(f"node {node} does not carry a square matrix")
    err = np.max(np.abs(p @ p - p)) if p.size else 0.0
    if err > tol:
        raise NotAProjector(f"node {node}: max|PP - P| = {err:.3g} exceeds {tol}")

    twin = _fresh(net.nodes, node)

    def moved(port):
        return (twin, 1) if port == (node, 1) else port

    nodes = dict(net.nodes)
    nodes[twin] = p
    internal = [InternalEdge(moved(e.a), moved(e.b)) for e in net.internal]
    internal.append(InternalEdge((node, 1), (twin, 0)))
    external = [moved(q) for q in net.external]
    return TensorNetwork(nodes, internal, external)


def _fresh(existing, base):
    k = 1
    while f"{base}.{k}" in existing:
        k += 1
    return f"{base}.{k}"


def teleport_network(psi, m, e) -> TensorNetwork:
    """Network for ``psi'_k = sum_ij psi_i m_ij e_jk`` with Bob's port external."""
    psi = np.asarray(psi, dtype=complex)
    m = np.asarray(m, dtype=complex)
    e = np.asarray(e, dtype=complex)
    if psi.shape != (2,) or m.shape != (2, 2) or e.shape != (2, 2):
        raise NetworkError(f"expected shapes (2,), (2,2), (2,2); got {psi.shape}, {m.shape}, {e.shape}")
    return TensorNetwork(
        {"psi": psi, "M": m, "E": e},
        [InternalEdge(("psi", 0), ("M", 0)), InternalEdge(("M", 1), ("E", 0))],
        [("E", 1)],
    )
