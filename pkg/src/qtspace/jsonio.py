"""JSON encodings for spaces, graphs, links, networks and states.

Complex numbers are ``[re, im]`` pairs (a bare number is accepted as a real
value on input).  Point sets are emitted as sorted lists so that output is
byte-stable.
"""

from __future__ import annotations

import json
import sys

import jsonschema
import numpy as np

from .augmentation import AugmentedSpace, EntanglementLink
from .errors import QTSpaceError, SchemaError
from .finite_topology import FiniteSpace, from_subbasis
from .graph_spaces import Edge, Graph
from .quantum import PureState
from .tensor_network import TensorNetwork

_id = {"type": "string", "minLength": 1}
_ids = {"type": "array", "items": _id}
_complex = {
    "oneOf": [
        {"type": "number"},
        {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    ]
}
_matrix = {
    "type": "array",
    "minItems": 2,
    "maxItems": 2,
    "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _complex},
}

SPACE_SCHEMA = {
    "type": "object",
    "required": ["points"],
    "properties": {
        "points": _ids,
        "subbasis": {"type": "array", "items": _ids},
        "min_open": {"type": "object", "additionalProperties": _ids},
    },
}

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["vertices"],
    "properties": {
        "vertices": _ids,
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "ends"],
                "properties": {"id": _id, "ends": {"type": "array", "items": _id, "minItems": 2, "maxItems": 2}},
            },
        },
    },
}

LINK_SCHEMA = {
    "type": "object",
    "required": ["label", "left", "right"],
    "properties": {"label": _id, "left": _id, "right": _id, "state": _matrix},
}

LINKS_SCHEMA = {
    "oneOf": [
        {"type": "array", "items": LINK_SCHEMA},
        {"type": "object", "required": ["links"], "properties": {"links": {"type": "array", "items": LINK_SCHEMA}}},
    ]
}

_port = {"type": "array", "prefixItems": [_id, {"type": "integer", "minimum": 0}], "minItems": 2, "maxItems": 2}

NETWORK_SCHEMA = {
    "type": "object",
    "required": ["nodes"],
    "properties": {
        "nodes": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["shape", "data"],
                "properties": {
                    "shape": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "data": {"type": "array", "items": _complex},
                },
            },
        },
        "internal": {
            "type": "array",
            "items": {"type": "object", "required": ["a", "b"], "properties": {"a": _port, "b": _port}},
        },
        "external": {"type": "array", "items": _port},
    },
}

STATE_SCHEMA = {
    "type": "object",
    "required": ["amps"],
    "properties": {"n": {"type": "integer", "minimum": 1}, "amps": {"type": "array", "items": _complex}},
}

MATRIX_SCHEMA = {
    "oneOf": [_matrix, {"type": "object", "required": ["matrix"], "properties": {"matrix": _matrix}}]
}


def validate(doc, schema, path=None):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(f"{exc.message} (at /{where})", path=path) from None


def load_json(path):
    """Read JSON from ``path`` ('-' for standard input)."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}", path=path) from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def complex_in(x) -> complex:
    if isinstance(x, (int, float)):
        return complex(x)
    return complex(x[0], x[1])


def complex_out(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def array_out(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return complex_out(a)
    return [array_out(x) for x in a]


# spaces


def space_from_json(doc, path=None) -> FiniteSpace:
    validate(doc, SPACE_SCHEMA, path)
    try:
        generated = from_subbasis(doc["points"], doc.get("subbasis", []))
        if "min_open" not in doc:
            return generated
        declared = FiniteSpace(doc["points"], doc["min_open"])
    except QTSpaceError as exc:
        raise SchemaError(exc.message, path=path) from None
    if "subbasis" in doc and declared != generated:
        raise SchemaError("min_open disagrees with the topology generated by subbasis", path=path)
    return declared


def space_to_json(space: FiniteSpace) -> dict:
    """Points, a generating subbasis (the distinct minimal opens) and min_open."""
    gens = [space.unmask(g) for g in space.generators()]
    return {
        "points": list(space.points),
        "subbasis": [sorted(g) for g in gens],
        "min_open": {p: sorted(space.min_open[p]) for p in space.points},
    }


# graphs


def graph_from_json(doc, path=None) -> Graph:
    validate(doc, GRAPH_SCHEMA, path)
    try:
        return Graph(
            tuple(doc["vertices"]),
            tuple(Edge(e["id"], tuple(e["ends"])) for e in doc.get("edges", [])),
        )
    except QTSpaceError as exc:
        raise SchemaError(exc.message, path=path) from None


def graph_to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [{"id": e.id, "ends": list(e.ends)} for e in g.edges]}


# links and augmented spaces


def matrix_in(doc) -> np.ndarray:
    if isinstance(doc, dict):
        doc = doc["matrix"]
    return np.array([[complex_in(x) for x in row] for row in doc], dtype=complex)


def matrix_from_json(doc, path=None) -> np.ndarray:
    validate(doc, MATRIX_SCHEMA, path)
    return matrix_in(doc)


def link_from_json(doc) -> EntanglementLink:
    state = matrix_in(doc["state"]) if "state" in doc else None
    return EntanglementLink(doc["label"], doc["left"], doc["right"], state)


def links_from_json(doc, path=None) -> list[EntanglementLink]:
    validate(doc, LINKS_SCHEMA, path)
    items = doc["links"] if isinstance(doc, dict) else doc
    return [link_from_json(d) for d in items]


def link_to_json(lk: EntanglementLink) -> dict:
    out = {"label": lk.label, "left": lk.left, "right": lk.right}
    if lk.state is not None:
        out["state"] = array_out(lk.state)
    return out


def augmented_to_json(a: AugmentedSpace) -> dict:
    out = space_to_json(a.space)
    out["links"] = [link_to_json(lk) for lk in a.links]
    return out


# tensor networks


def network_from_json(doc, path=None) -> TensorNetwork:
    validate(doc, NETWORK_SCHEMA, path)
    nodes = {}
    for name, spec in doc["nodes"].items():
        shape = tuple(spec["shape"])
        data = np.array([complex_in(x) for x in spec["data"]], dtype=complex)
        if data.size != int(np.prod(shape, dtype=np.int64)):
            raise SchemaError(f"node {name}: data length {data.size} does not match shape {list(shape)}", path=path)
        nodes[name] = data.reshape(shape)
    internal = [(tuple(e["a"]), tuple(e["b"])) for e in doc.get("internal", [])]
    external = [tuple(p) for p in doc.get("external", [])]
    try:
        return TensorNetwork(nodes, internal, external)
    except QTSpaceError as exc:
        raise SchemaError(exc.message, path=path) from None


def network_to_json(net: TensorNetwork) -> dict:
    return {
        "nodes": {
            name: {"shape": list(t.shape), "data": [complex_out(z) for z in t.reshape(-1)]}
            for name, t in net.nodes.items()
        },
        "internal": [{"a": list(e.a), "b": list(e.b)} for e in net.internal],
        "external": [list(p) for p in net.external],
    }


def tensor_to_json(t) -> dict:
    t = np.asarray(t)
    return {"shape": list(t.shape), "data": [complex_out(z) for z in t.reshape(-1)]}


# states


def state_from_json(doc, path=None) -> PureState:
    """Parse a state; amplitudes are normalised and the norm kept in ``scale``."""
    validate(doc, STATE_SCHEMA, path)
    amps = [complex_in(x) for x in doc["amps"]]
    if "n" in doc and len(amps) != 1 << doc["n"]:
        raise SchemaError(f"expected {1 << doc['n']} amplitudes for n={doc['n']}, got {len(amps)}", path=path)
    try:
        return PureState.from_amplitudes(amps)
    except QTSpaceError as exc:
        raise SchemaError(exc.message, path=path) from None


def state_to_json(s: PureState) -> dict:
    return {"n": s.num_qubits, "amps": [complex_out(z) for z in s.amplitudes]}
