#!/usr/bin/env python3
"""Smoke test for the indecomp_py extension module.

Builds the extension with cargo, stages the shared library under its
importable name, and checks a handful of known answers end to end.
Run from anywhere: `python3 python/smoke_test.py`.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def build_and_import():
    subprocess.run(["cargo", "build", "-p", "indecomp-py"], cwd=ROOT, check=True)
    built = ROOT / "target" / "debug" / "libindecomp_py.so"
    staging = Path(tempfile.mkdtemp(prefix="indecomp_py."))
    shutil.copy2(built, staging / "indecomp_py.so")
    sys.path.insert(0, str(staging))
    import indecomp_py

    return indecomp_py


def main():
    m = build_and_import()

    # Four-cycle: two maximal independent sets, not shellable, unmixed.
    c4 = m.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert c4.n == 4 and c4.edge_count == 4
    assert c4.neighbors(1) == [0, 2] and c4.degree(1) == 2
    assert m.maximal_independent_sets(c4) == [[0, 2], [1, 3]]
    assert m.count_mis(c4) == 2
    assert c4.chromatic_number() == 2
    assert c4.detect_multipartite() == [2, 2]
    assert m.is_unmixed(c4)
    comp = m.independence_complex(c4)
    assert comp.facets() == [[0, 2], [1, 3]]
    assert comp.is_pure() and not comp.is_simplex()
    assert m.find_shelling(comp) is None
    assert m.is_vertex_decomposable(comp) is None
    assert m.cohen_macaulay_verdict(c4) == {
        "state": "no",
        "reason": "MULTIPARTITE_BIG_PART",
    }

    # Path on four vertices: shellable with the expected certificate.
    p4 = m.Graph.from_text("4\n0 1\n1 2\n2 3\n")
    assert p4.edges() == [(0, 1), (1, 2), (2, 3)]
    assert p4.detect_multipartite() is None
    ic = m.independence_complex(p4)
    assert ic.facets() == [[0, 2], [0, 3], [1, 3]]
    cert = m.find_shelling(ic)
    assert cert == {
        "order": [0, 1, 2],
        "witnesses": [{"prior": 0, "vertex": 3}, {"prior": 1, "vertex": 1}],
    }
    assert m.is_shelling_order(ic, cert["order"]) == cert["witnesses"]
    tree = m.is_vertex_decomposable(ic)
    root = tree["nodes"][tree["root"]]
    assert root["kind"] == "shed" and root["vertex"] == 1
    assert tree["nodes"][root["link"]]["kind"] == "simplex"

    # Triangle: all classes singletons, every answer positive.
    k3 = m.Graph.complete(3)
    assert m.cohen_macaulay_verdict(k3) == {
        "state": "yes",
        "reason": "MULTIPARTITE_ALL_SINGLETON",
    }
    assert m.minimal_vertex_covers(k3) == [[0, 1], [0, 2], [1, 2]]

    # Closed forms against list[int] partitions.
    assert m.multipartite_is_shellable([3, 1, 1])
    assert not m.multipartite_is_shellable([2, 2])
    assert m.multipartite_is_vertex_decomposable([5])
    assert m.multipartite_is_unmixed([2, 2]) and not m.multipartite_is_unmixed([3, 1, 1])
    assert m.multipartite_is_cm([1, 1, 1]) and not m.multipartite_is_cm([2, 2])
    assert m.canonical_shelling_multipartite([3, 1, 1]) == {
        "order": [0, 1, 2],
        "witnesses": [{"prior": 0, "vertex": 3}, {"prior": 0, "vertex": 4}],
    }

    # Complex construction, links, and deletions.
    whole = m.Complex(4, [[0, 1], [1, 2, 3]])
    assert whole.facets() == [[1, 2, 3], [0, 1]]
    assert whole.dimension() == 2 and not whole.is_pure()
    assert whole.link([1]).facets() == [[2, 3], [0]]
    assert whole.delete_vertex(0).facets() == [[1, 2, 3]]
    assert whole.is_face([1, 3]) and not whole.is_face([0, 2])

    # Harness entry points: determinism and a passing small-budget run.
    assert m.enumerate_partitions(4) == [
        [1], [2], [1, 1], [3], [2, 1], [1, 1, 1],
        [4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1],
    ]
    g1 = m.random_graph(8, 0.5, 7)
    g2 = m.random_graph(8, 0.5, 7)
    assert g1.edges() == g2.edges()
    report = m.cross_validate(max_partition_total=5, max_random_n=6, samples=60, seed=11)
    assert report["passed"]
    assert len(report["checks"]) == 20
    assert all(c["failures"] == 0 for c in report["checks"])

    # Error mapping: bad input raises ValueError, blown limits RuntimeError.
    for bad in (
        lambda: m.Graph(3, [(0, 0)]),
        lambda: m.Graph(3, [(0, 9)]),
        lambda: m.multipartite_is_cm([]),
        lambda: m.Complex(3, [[0], [0, 1]]),
        lambda: c4.neighbors(99),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        m.Graph.complete(17).chromatic_number()
    except RuntimeError:
        pass
    else:
        raise AssertionError("expected RuntimeError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
