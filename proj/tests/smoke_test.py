"""Smoke test for the Python module: exercises every exposed operation once
and checks a handful of known values."""

import sys

import ccgraph as cg


def expect(cond, message):
    if not cond:
        raise AssertionError(message)


def main():
    expect(set(cg.suite_names()) == {"paper-core", "identities"}, "suite names")

    r = cg.build_ring("M(2,GF(2))")
    expect(r.size == 16, "M(2,GF(2)) has 16 elements")
    expect(len(r) == 16, "__len__")
    expect(r.spec == "M(2,GF(2))", "canonical spec")
    expect(r.mul(r.one(), 5) == 5, "one is a left identity")
    expect(len(r.units()) == 6, "|GL(2,2)| = 6")
    expect(r.is_matrix_ring and not r.is_product, "shape flags")
    expect(r.try_inverse(0) is None, "zero has no inverse")

    g = cg.build_graph(r)
    expect(g.vertex_count == 16 and g.edge_count == 25, "graph size")
    cl = cg.closure(g, 0)
    expect(cl["members"] == [0, 2, 4, 15], "nilpotent cone")
    expect(cl["max_level"] == 1, "closure levels")
    expect(cg.stabilization_depth(g, 0) == 1, "stabilization depth")
    expect(cg.diameter(g) == 1, "diameter")
    expect(cg.girth(g) == 3, "girth")
    expect(cg.class_diameter(g, 0) == 1, "class diameter")
    expect(cg.class_girth(g, 0) == 3, "class girth")
    expect(cg.distance(g, 0, 2) == 1, "distance inside a component")
    expect(cg.distance(g, 0, 9) is None, "distance across components")
    expect(g.adjacent(0, 2) and not g.adjacent(0, 9), "adjacency")
    expect(g.component_of(0) == g.component_of(15), "components")
    expect(2 in g.neighbors(0), "neighbor lists")

    nil = [a for a in range(r.size) if r.is_nilpotent(a)]
    closed, witness = cg.is_commutatively_closed(r, nil)
    expect(closed and witness is None, "nilpotents are closed")
    closed, witness = cg.is_commutatively_closed(r, [2])
    expect(not closed and witness is not None, "a lone matrix unit is not")

    jt = cg.jordan_type(r, 2)
    expect(jt["nilpotent"] and jt["nilpotency_index"] == 2, "jordan data")
    expect(jt["partition"] == [2], "jordan partition")

    text = cg.export_graph(g, r, "edgelist")
    expect(text.startswith("ccgraph v1 M(2,GF(2)) 16 25\n"), "edgelist header")

    z = cg.build_ring("Z(12)")
    gz = cg.build_graph(z)
    expect(gz.edge_count == 0, "commutative rings give edgeless graphs")
    expect(cg.girth(gz) is None, "acyclic girth is None")

    rep = cg.run_suite("identities", ["Z(6)"], seed=42)
    expect(rep["failed"] == 0, "identities suite on Z(6)")
    expect(any(x["check_id"] == "free-algebra-chain" for x in rep["results"]),
           "symbolic chain present")
    rep2 = cg.run_suite("identities", ["Z(6)"], seed=42, threads=8)
    expect(rep["json"] == rep2["json"], "reports deterministic across threads")

    expect(cg.default_suite_rings("paper-core"), "default rings nonempty")

    try:
        cg.build_ring("Q(5)")
        raise AssertionError("expected SpecError")
    except cg.SpecError:
        pass
    try:
        cg.build_ring("M(3,GF(7))")
        raise AssertionError("expected SizeGuardError")
    except cg.SizeGuardError:
        pass

    print("python smoke test: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
