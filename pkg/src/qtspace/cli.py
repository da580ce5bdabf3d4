"""Command-line entry point.

Every command writes one JSON document to standard output.  Validation
failures exit with status 2 and print ``{"error": {code, message, path}}``.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import dot, jsonio
from .augmentation import augment, collapse_link, swap_links
from .errors import QTSpaceError
from .finite_topology import connected_components, non_hausdorff_pairs
from .graph_spaces import face_model, graph_topology, identity_map, is_continuous
from .heyting import HeytingAlgebra
from .quantum import (
    RANK_TOL,
    PureState,
    entanglement_swap,
    is_entangled,
    matrix_to_state,
    measure_qubit,
    outcome_probability,
    sample_measurement,
    teleport,
)
from .tensor_network import PROJECTOR_TOL, contract_full, projector_refine

EXIT_OK = 0
EXIT_INVALID = 2


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=None, help="seed for sampled measurements and law sampling")
    p.add_argument("--tolerance", type=float, default=None, help="override the numeric tolerance")
    p.add_argument("--dot", metavar="PATH", default=None, help="also write a DOT rendering to PATH")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="qtspace", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    topo = groups.add_parser("topo", help="finite spaces and graph topologies").add_subparsers(
        dest="verb", required=True
    )
    p = topo.add_parser("build", parents=[common], help="build a space from a graph or space file")
    _space_source(p)
    p.set_defaults(func=cmd_topo_build)
    p = topo.add_parser("connected", parents=[common], help="connectivity and components")
    _space_source(p)
    p.set_defaults(func=cmd_topo_connected)
    p = topo.add_parser("heyting", parents=[common], help="negation table and Boolean test")
    p.add_argument("space_file", nargs="?", help="space JSON (same as --space)")
    _space_source(p)
    p.add_argument("--limit", type=int, default=4096, help="max opens to enumerate before sampling")
    p.set_defaults(func=cmd_topo_heyting)
    p = topo.add_parser("continuity", parents=[common], help="continuity of a point map")
    p.add_argument("--graph", help="check the identity Top(G) -> face model of G")
    p.add_argument("--reverse", action="store_true", help="with --graph: face model -> Top(G) instead")
    p.add_argument("--dom", help="domain space JSON")
    p.add_argument("--cod", help="codomain space JSON")
    p.add_argument("--map", dest="map_file", help="map JSON {point: image}; identity if omitted")
    p.set_defaults(func=cmd_topo_continuity)

    p = groups.add_parser("augment", parents=[common], help="weld entanglement links into a space")
    _space_source(p)
    p.add_argument("--links", required=True, help="links JSON")
    p.add_argument("--collapse", action="append", default=[], metavar="LABEL", help="remove a link afterwards")
    p.set_defaults(func=cmd_augment)

    p = groups.add_parser("swap", parents=[common], help="entanglement swap of two links")
    _space_source(p)
    p.add_argument("--links", required=True, help="links JSON")
    p.add_argument("--ab", required=True, help="label of the first link")
    p.add_argument("--bc", required=True, help="label of the second link")
    p.add_argument("--new", dest="new_label", required=True, help="label of the resulting link")
    p.add_argument("--m", dest="m_file", help="measurement matrix JSON (identity if omitted)")
    p.set_defaults(func=cmd_swap)

    quantum = groups.add_parser("quantum", help="state algebra").add_subparsers(dest="verb", required=True)
    p = quantum.add_parser("teleport", parents=[common])
    p.add_argument("--psi", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--e", required=True)
    p.set_defaults(func=cmd_quantum_teleport)
    p = quantum.add_parser("swap", parents=[common])
    p.add_argument("--e", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--e2", required=True)
    p.set_defaults(func=cmd_quantum_swap)
    p = quantum.add_parser("measure", parents=[common])
    p.add_argument("--state", required=True)
    p.add_argument("--qubit", type=int, required=True)
    p.add_argument("--outcome", type=int, choices=(0, 1), default=None)
    p.set_defaults(func=cmd_quantum_measure)

    net = groups.add_parser("net", help="tensor networks").add_subparsers(dest="verb", required=True)
    p = net.add_parser("contract", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_net_contract)
    p = net.add_parser("refine", parents=[common])
    p.add_argument("file")
    p.add_argument("--node", required=True)
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(func=cmd_net_refine)
    return parser


def _space_source(p):
    p.add_argument("--space", help="space JSON")
    p.add_argument("--graph", help="graph JSON")
    p.add_argument("--mode", choices=("top", "face"), default="top", help="topology to put on --graph")


def _load_space(args):
    path = getattr(args, "space_file", None) or args.space
    if path:
        return jsonio.space_from_json(jsonio.load_json(path), path)
    if args.graph:
        g = jsonio.graph_from_json(jsonio.load_json(args.graph), args.graph)
        return graph_topology(g) if args.mode == "top" else face_model(g)
    raise QTSpaceError("one of --space or --graph is required")


def _write_dot(args, text):
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(text)


def _pairs(pairs):
    return [list(p) for p in pairs]


def cmd_topo_build(args):
    space = _load_space(args)
    _write_dot(args, dot.space_to_dot(space))
    return jsonio.space_to_json(space)


def cmd_topo_connected(args):
    space = _load_space(args)
    comps = connected_components(space)
    _write_dot(args, dot.space_to_dot(space))
    return {
        "connected": len(comps) <= 1,
        "components": [space.sorted_points(c) for c in comps],
        "non_hausdorff_pairs": _pairs(non_hausdorff_pairs(space)),
    }


def cmd_topo_heyting(args):
    space = _load_space(args)
    h = HeytingAlgebra(space)
    report = h.verify_laws(limit=args.limit, seed=args.seed or 0)
    return {"is_boolean": h.is_boolean(), "negations": h.negation_table(), "laws": report.as_dict()}


def cmd_topo_continuity(args):
    if args.graph:
        g = jsonio.graph_from_json(jsonio.load_json(args.graph), args.graph)
        dom, cod = graph_topology(g), face_model(g)
        if args.reverse:
            dom, cod = cod, dom
        f = identity_map(dom)
    else:
        if not (args.dom and args.cod):
            raise QTSpaceError("give --graph, or both --dom and --cod")
        dom = jsonio.space_from_json(jsonio.load_json(args.dom), args.dom)
        cod = jsonio.space_from_json(jsonio.load_json(args.cod), args.cod)
        f = jsonio.load_json(args.map_file) if args.map_file else identity_map(dom)
        if not isinstance(f, dict):
            raise QTSpaceError("map must be a JSON object", path=args.map_file)
    ok, witness = is_continuous(f, dom, cod)
    return {"continuous": ok, "witness": None if witness is None else cod.sorted_points(witness)}


def cmd_augment(args):
    base = _load_space(args)
    links = jsonio.links_from_json(jsonio.load_json(args.links), args.links)
    a = augment(base, links)
    for label in args.collapse:
        a = collapse_link(a, label)
    _write_dot(args, dot.space_to_dot(a.space, highlight=a.labels))
    out = jsonio.augmented_to_json(a)
    out["connected"] = len(connected_components(a.space)) <= 1
    return out


def cmd_swap(args):
    base = _load_space(args)
    links = jsonio.links_from_json(jsonio.load_json(args.links), args.links)
    m = jsonio.matrix_from_json(jsonio.load_json(args.m_file), args.m_file) if args.m_file else None
    a = swap_links(augment(base, links), args.ab, args.bc, args.new_label, measurement=m)
    _write_dot(args, dot.space_to_dot(a.space, highlight=a.labels))
    out = jsonio.augmented_to_json(a)
    out["components"] = [a.space.sorted_points(c) for c in connected_components(a.space)]
    return out


def _matrix(path):
    return jsonio.matrix_from_json(jsonio.load_json(path), path)


def _state(path):
    return jsonio.state_from_json(jsonio.load_json(path), path)


def cmd_quantum_teleport(args):
    psi = _state(args.psi)
    out = teleport(psi, _matrix(args.m), _matrix(args.e))
    return {"state": jsonio.state_to_json(out), "scale": float(out.scale), "input_scale": float(psi.scale)}


def cmd_quantum_swap(args):
    tol = args.tolerance if args.tolerance is not None else RANK_TOL
    result = entanglement_swap(_matrix(args.e), _matrix(args.m), _matrix(args.e2))
    impossible = bool(np.linalg.norm(result) < 1e-12)
    out = {"matrix": jsonio.array_out(result), "impossible": impossible, "entangled": False}
    if not impossible:
        state = matrix_to_state(result)
        out["entangled"] = is_entangled(state, tol)
        out["state"] = jsonio.state_to_json(state)
        out["scale"] = float(state.scale)
    return out


def cmd_quantum_measure(args):
    s: PureState = _state(args.state)
    probs = [outcome_probability(s, args.qubit, b) for b in (0, 1)]
    if args.outcome is not None:
        outcome = args.outcome
        prob, residual = measure_qubit(s, args.qubit, outcome)
    else:
        outcome, prob, residual = sample_measurement(s, args.qubit, args.seed)
    return {
        "qubit": args.qubit,
        "outcome": outcome,
        "probability": prob,
        "probabilities": probs,
        "residual": jsonio.state_to_json(residual),
    }


def cmd_net_contract(args):
    net = jsonio.network_from_json(jsonio.load_json(args.file), args.file)
    return {"external": [list(p) for p in net.external], "tensor": jsonio.tensor_to_json(contract_full(net))}


def cmd_net_refine(args):
    tol = args.tolerance if args.tolerance is not None else PROJECTOR_TOL
    net = jsonio.network_from_json(jsonio.load_json(args.file), args.file)
    for _ in range(args.times):
        net = projector_refine(net, args.node, tol)
    return jsonio.network_to_json(net)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except QTSpaceError as exc:
        print(jsonio.dumps({"error": {"code": exc.code, "message": exc.message, "path": exc.path}}))
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(jsonio.dumps({"error": {"code": "file_not_found", "message": str(exc), "path": exc.filename}}))
        return EXIT_INVALID
    meta = {k: getattr(args, k) for k in ("seed", "tolerance") if getattr(args, k) is not None}
    if meta:
        out["meta"] = meta
    print(jsonio.dumps(out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
