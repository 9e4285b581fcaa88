"""Smoke test for the python bindings, run from ctest with the built
module on sys.path."""

import _troproots as tr


def main() -> None:
    graphs = tr.enumerate_stable_graphs(2, 0)
    assert len(graphs) == 7, len(graphs)
    theta = tr.Graph([0, 0], [(0, 1), (0, 1), (0, 1)])
    assert theta.genus() == 2 and theta.is_stable()
    assert tr.automorphism_count(theta) == 12
    assert any(tr.is_isomorphic(theta, g) for g in graphs)

    a = tr.cyclic(3)
    poset = tr.build_flow_poset(1, 1, a, tr.RamificationSequence.trivial(a, 1))
    assert poset.dimension() == 1
    assert len(poset) == 3
    assert "->" in poset.to_dot()

    curve = tr.make_curve(theta, [(1, 1), (1, 1), (2, 1)])
    zero = tr.TropicalDivisor()
    roots = tr.enumerate_roots(curve, zero, 3, verify=True)
    assert len(roots) == 9
    ok, failures = tr.verify_root_bijection(curve, zero, 2, seed=5)
    assert ok, failures

    divisor = tr.TropicalDivisor()
    divisor.add(tr.CurvePoint.vertex(0), 1)
    divisor.add(tr.CurvePoint.vertex(1), -1)
    assert not tr.is_principal(curve, divisor)
    assert tr.is_principal(curve, zero)

    complex2 = tr.build_root_complex(
        2, 0, 2, tr.RamificationSequence.trivial(tr.integers(), 0)
    )
    assert complex2.dimension() == 3
    assert "cone_dimensions" in complex2.to_json()
    assert tr.json_to_dot(theta.to_json()).startswith("graph")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
