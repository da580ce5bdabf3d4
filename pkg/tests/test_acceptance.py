"""Acceptance criteria, one test each.

Every test records a pass/fail line that pytest prints in an
"acceptance criteria" section at the end of the run.
"""

import itertools
import random
import time

import numpy as np

from oracles import (
    all_topologies,
    connected_by_clopens,
    opens_by_definition,
    random_complex,
    random_connected_space,
    random_graph,
    random_network,
    random_space,
    random_unitary,
    space_from_opens,
    swap_by_four_qubits,
)
from qtspace import (
    EntanglementLink,
    FiniteSpace,
    HeytingAlgebra,
    augment,
    collapse_link,
    connected_components,
    face_model,
    graph_topology,
    interval_model,
    is_connected,
    is_continuous,
    is_open,
    non_hausdorff_pairs,
)
from qtspace.graph_spaces import identity_map, path_graph
from qtspace.quantum import (
    PureState,
    entanglement_swap,
    ghz,
    is_entangled,
    matrix_to_state,
    measure_qubit,
    schmidt_rank,
    teleport,
    teleport_correction,
    w,
)
from qtspace.tensor_network import (
    TensorNetwork,
    contract_full,
    contract_ordered,
    greedy_order,
    projector_refine,
    teleport_network,
)


def run_criterion(record, name, body, seconds=None):
    """Run ``body() -> (ok, detail)``, record the outcome and fail the test if needed."""
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # recorded, then re-raised for the traceback
        record(name, False, f"{type(exc).__name__}: {exc}")
        raise
    elapsed = time.perf_counter() - start
    if seconds is not None and elapsed >= seconds:
        ok, detail = False, f"{detail}; took {elapsed:.2f}s, limit {seconds}s"
    else:
        detail = f"{detail}; {elapsed:.2f}s"
    record(name, ok, detail)
    assert ok, detail


def test_01_path_graph_topology(record):
    def body():
        t = graph_topology(path_graph(["a", "b", "c"]))
        ok = t.min_open["b"] == {"b"} and t.min_open["e1"] == {"a", "e1", "b"}
        return ok, f"min_open(b)={sorted(t.min_open['b'])}, min_open(e1)={sorted(t.min_open['e1'])}"

    run_criterion(record, "1 Top(G) basis on a path graph", body, seconds=1)


def test_02_identity_into_face_model(record):
    def body():
        rng = random.Random(2)
        bad = []
        for k in range(100):
            g = random_graph(rng, n_max=10, min_edges=1)
            t, f = graph_topology(g), face_model(g)
            ok, witness = is_continuous(identity_map(t), t, f)
            # the witness must be open upstairs with a non-open preimage
            if ok or witness is None or not is_open(f, witness) or is_open(t, witness):
                bad.append(k)
        edgeless = 0
        for _ in range(100):
            g = random_graph(rng, n_max=10, max_edges=0)
            t = graph_topology(g)
            if is_continuous(identity_map(t), t, face_model(g))[0]:
                edgeless += 1
        return not bad and edgeless == 100, f"{100 - len(bad)}/100 with edges refuted, {edgeless}/100 edgeless continuous"

    run_criterion(record, "2 identity Top(G) -> face model is discontinuous iff edges exist", body, seconds=5)


def _disjoint_union(s, t):
    return FiniteSpace(s.points + t.points, {**s.min_open, **t.min_open})


def test_03_augmentation_connectivity(record):
    rng = random.Random(3)
    cases = []
    for _ in range(200):
        connected = random_connected_space(rng, 7)
        u, v = random_connected_space(rng, 4, "u"), random_connected_space(rng, 4, "v")
        cases.append((connected, _disjoint_union(u, v), u, v, random_space(rng, 1, 8)))

    def body():
        fails = {"a": 0, "b": 0, "c": 0}
        for connected, split, u, v, any_base in cases:
            links = [
                EntanglementLink(f"E{k}", rng.choice(connected.points), rng.choice(connected.points))
                for k in range(rng.randint(1, 3))
            ]
            if not is_connected(augment(connected, links).space):
                fails["a"] += 1
            bridged = augment(split, [EntanglementLink("E", rng.choice(u.points), rng.choice(v.points))])
            restored = collapse_link(bridged, "E").space
            if not (len(connected_components(split)) == 2 and is_connected(bridged.space)):
                fails["b"] += 1
            elif len(connected_components(restored)) != 2 or restored != split:
                fails["b"] += 1
            lk = EntanglementLink("E", rng.choice(any_base.points), rng.choice(any_base.points))
            pairs = {frozenset(p) for p in non_hausdorff_pairs(augment(any_base, [lk]).space)}
            if not {frozenset({"E", lk.left}), frozenset({"E", lk.right})} <= pairs:
                fails["c"] += 1
        # independent check of (b) on a subset with the clopen oracle
        for _, split, u, v, _ in cases[:20]:
            bridged = augment(split, [EntanglementLink("E", u.points[0], v.points[0])])
            if not connected_by_clopens(bridged.space):
                fails["b"] += 1
        return not any(fails.values()), f"failures {fails} over 200 bases"

    run_criterion(record, "3 augmentation connects, collapse splits, links are non-Hausdorff", body, seconds=5)


def _check_heyting(space, opens):
    h = HeytingAlgebra(space)
    full = frozenset(space.points)
    for u in opens:
        nu = h.negation(u)
        if h.negation(h.negation(nu)) != nu:
            return "triple negation"
    for u, v in itertools.product(opens, repeat=2):
        imp = h.implication(u, v)
        for x in opens:
            if (x & u <= v) != (x <= imp):
                return "adjunction"
    if h.is_boolean() != all(full - o in opens for o in opens):
        return "is_boolean"
    if not h.verify_laws().ok:
        return "law harness"
    return None


def test_04_heyting_laws(record):
    rng = random.Random(4)
    larger = [random_space(rng, 4, 7) for _ in range(100)]

    def body():
        problems = []
        tops = all_topologies(["a", "b", "c"])
        for top in tops:
            s = space_from_opens(["a", "b", "c"], top)
            why = _check_heyting(s, sorted(top, key=sorted))
            if why:
                problems.append(("3pt", why))
        for s in larger:
            why = _check_heyting(s, sorted(opens_by_definition(s), key=sorted))
            if why:
                problems.append((s.points, why))
        h = HeytingAlgebra(interval_model())
        U, V, W, X = frozenset("u"), frozenset("v"), frozenset("uv"), frozenset("umv")
        verbatim = h.negation(U) == V and h.negation(W) == frozenset() and h.negation(h.negation(W)) == X
        ok = len(tops) == 29 and not problems and verbatim
        return ok, f"{len(tops)} three-point topologies, 100 larger spaces, problems={problems[:3]}, interval={verbatim}"

    run_criterion(record, "4 Heyting laws and Boolean test", body, seconds=10)


def test_05_teleportation(record):
    def body():
        rng = np.random.default_rng(5)
        worst = 0.0
        for _ in range(100):
            psi = PureState.from_amplitudes(random_complex(rng, 2))
            m, e = random_complex(rng, (2, 2)), random_complex(rng, (2, 2))
            out = teleport(psi, m, e)
            net = contract_full(teleport_network(psi.amplitudes, m, e))
            worst = max(worst, float(np.max(np.abs(out.amplitudes * out.scale - net))))
        ident = teleport(PureState([1, 0]), np.eye(2), np.eye(2))
        exact = np.array_equal(ident.amplitudes, [1, 0])
        recovery = 0.0
        for _ in range(100):
            psi = PureState.from_amplitudes(random_complex(rng, 2))
            m, e = random_unitary(rng), random_unitary(rng)
            got = teleport(psi, m, e).amplitudes @ teleport_correction(m, e)
            got = got / np.linalg.norm(got)
            phase = np.vdot(got, psi.amplitudes)
            recovery = max(recovery, float(np.max(np.abs(got * phase - psi.amplitudes))), abs(abs(phase) - 1))
        ok = worst <= 1e-12 and exact and recovery <= 1e-12
        return ok, f"max network gap {worst:.1e}, identity exact={exact}, recovery gap {recovery:.1e}"

    run_criterion(record, "5 teleportation matches the network contraction", body)


def test_06_entanglement_swap(record):
    def body():
        rng = np.random.default_rng(6)
        worst = 0.0
        entangled = 0
        for _ in range(100):
            e, m, e2 = (random_complex(rng, (2, 2)) for _ in range(3))
            r = entanglement_swap(e, m, e2)
            worst = max(worst, float(np.max(np.abs(r - swap_by_four_qubits(e, m, e2)))))
            worst = max(worst, float(np.max(np.abs(r - e @ m @ e2))))
            entangled += is_entangled(matrix_to_state(r))
        rank_one = entanglement_swap(np.eye(2), np.diag([1, 0]), np.eye(2))
        product = not is_entangled(matrix_to_state(rank_one))
        ok = worst <= 1e-12 and entangled == 100 and product
        return ok, f"max gap {worst:.1e}, entangled {entangled}/100, rank-1 gives product={product}"

    run_criterion(record, "6 entanglement swap equals E.M.E'", body)


def test_07_ghz_and_w(record):
    def body():
        ghz_ranks = set()
        for q, b in itertools.product(range(3), (0, 1)):
            _, r = measure_qubit(ghz(3), q, b)
            ghz_ranks.add(schmidt_rank(r, [0]))
        w_ok = True
        details = []
        for q in range(3):
            p0, r0 = measure_qubit(w(3), q, 0)
            p1, r1 = measure_qubit(w(3), q, 1)
            w_ok &= abs(p0 - 2 / 3) <= 1e-12 and abs(p1 - 1 / 3) <= 1e-12
            w_ok &= is_entangled(r0) and not is_entangled(r1)
            details.append(f"q{q}: {p0:.12f}/{p1:.12f}")
        ok = ghz_ranks == {1} and w_ok
        return ok, f"GHZ residual ranks {sorted(ghz_ranks)}, W " + ", ".join(details)

    run_criterion(record, "7 GHZ residuals are products, W splits 2/3 entangled and 1/3 product", body)


def _oblique_projector(rng, n, k):
    a, b = random_complex(rng, (n, k)), random_complex(rng, (n, k))
    return a @ np.linalg.inv(b.conj().T @ a) @ b.conj().T


def test_08_contraction_engine(record):
    def body():
        rng = random.Random(8)
        worst = 0.0
        for _ in range(100):
            net = random_network(rng, max_nodes=6)
            full = contract_full(net)
            got = contract_ordered(net, greedy_order(net))
            scale = max(1.0, float(np.max(np.abs(full), initial=0)))
            worst = max(worst, float(np.max(np.abs(got - full), initial=0)) / scale)
        nprng = np.random.default_rng(8)
        drift = 0.0
        for _ in range(20):
            p = _oblique_projector(nprng, 3, 2)
            net = TensorNetwork(
                {"A": random_complex(nprng, (2, 3)), "P": p, "B": random_complex(nprng, (3, 2))},
                [(("A", 1), ("P", 0)), (("P", 1), ("B", 0))],
                [("A", 0), ("B", 1)],
            )
            ref = contract_full(net)
            for _ in range(5):
                net = projector_refine(net, "P")
                drift = max(drift, float(np.max(np.abs(contract_full(net) - ref))))
        ok = worst <= 1e-12 and drift <= 5e-12
        return ok, f"ordered vs full max relative gap {worst:.1e}, refinement drift {drift:.1e}"

    run_criterion(record, "8 greedy contraction and projector refinement", body)

