"""Smoke test for the burnlab extension module.

Run after installing it (`pip install --no-build-isolation ./crates/python`)
or with `burnlab.so` copied next to this file.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import burnlab  # noqa: E402


def main() -> None:
    p4 = burnlab.Graph.path(4)
    assert (p4.n, len(p4.edges)) == (4, 3)
    assert burnlab.validate(p4, [1, 3]) is None
    assert "already burned" in burnlab.validate(p4, [0, 3, 1])
    assert burnlab.simulate(p4, [1, 3]) == [0, 1, 2, 3]
    b, witness = burnlab.exact_burning_number(p4)
    assert b == 2 and burnlab.validate(p4, witness) is None

    for n in range(3, 15):
        c = burnlab.Graph.cycle(n)
        a = burnlab.approx_cactus(c)
        assert a.length == burnlab.cycle_formula(n), (n, a)

    g = burnlab.generate("cactus", 200, 7)
    assert g.is_connected() and g.is_cactus()
    for alg in (burnlab.approx_cactus, burnlab.baseline_3approx):
        a = alg(g)
        assert burnlab.validate(g, a.schedule) is None
        assert a.length <= 3 * a.b_star

    t = burnlab.generate("arborescence", 300, 7)
    assert t.classify() == "arborescence"
    for alg in (burnlab.approx_polytree, burnlab.approx_arborescence_2, burnlab.approx_arborescence):
        a = alg(t)
        assert burnlab.validate(t, a.schedule) is None

    pt = burnlab.generate("polytree", 60, 3)
    assert pt.classify() == "polytree" and len(pt.roots()) >= 2
    assert burnlab.validate(pt, burnlab.approx_polytree(pt).schedule) is None

    small = burnlab.generate("polytree", 10, 1)
    exact, _ = burnlab.exact_burning_number(small)
    assert burnlab.approx_polytree(small).length <= 3 * exact

    text = burnlab.write_graph(g)
    assert burnlab.write_graph(burnlab.read_graph(text)) == text

    try:
        burnlab.approx_arborescence(pt)
    except burnlab.BurnlabError:
        pass
    else:
        raise AssertionError("polytree accepted as arborescence")
    try:
        burnlab.Graph(3, [(0, 0)])
    except ValueError:
        pass
    else:
        raise AssertionError("self loop accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
