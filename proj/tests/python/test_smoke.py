import json
import os
import subprocess

import pytest

import bilevel


def g1():
    return bilevel.BisGraph([("leader", 5, 1), ("follower", 3, 4), ("leader", 2, 7)], [(0, 1), (1, 2)])


def mixed12():
    rows = [
        (1, 0, 20, "follower", 9, 3), (2, 40, 80, "leader", 1, 5), (3, 60, 91, "follower", 2, 2),
        (4, 0, 100, "follower", 5, 4), (5, 80, 120, "follower", 3, 1), (6, 110, 140, "leader", 4, 8),
        (7, 140, 180, "leader", 10, 2), (8, 160, 200, "follower", 8, 9), (9, 140, 220, "follower", 2, 5),
        (10, 220, 240, "leader", 0, 10), (11, 220, 280, "leader", 3, 4), (12, 260, 300, "follower", 7, 2),
    ]
    return bilevel.IntervalInstance(rows)


def test_graph_solvers():
    g = g1()
    assert bilevel.solve(g, bilevel.Variant("cs-ds-o")).leader_value == 7
    out = bilevel.solve_enum_leader(g, bilevel.Variant("cb-db-p"))
    assert out.leader_value == 5 and out.leader_set == [0]
    assert bilevel.solve_cb_db_o(g).leader_value == 5
    assert bilevel.brute_force(g, bilevel.Variant("cs-ds-o")).leader_value == 7
    assert bilevel.react(g, [], bilevel.Variant("cs-ds-p")) == [1]
    assert bilevel.verify_certificate(g, bilevel.Variant("cb-db-p"), [0], 5)
    assert len(bilevel.all_variants()) == 8


def test_intervals():
    inst = mixed12()
    for setting in ("o", "p"):
        assert bilevel.solve_bisel(inst, setting).leader_value == 32
    assert bilevel.brute_bisel(inst, "o").leader_value == 32
    assert bilevel.IntervalInstance.from_json(inst.to_json()) == inst


def test_reductions_and_deciders():
    r = bilevel.vc_to_bipartite_bis(3, [(0, 1), (0, 2), (1, 2)], 2)
    assert len(r.graph) == 21 and bilevel.is_bipartite(r.graph)
    assert [t.threshold for t in r.targets] == [1, 1, 1]
    assert bilevel.decide_vc_brute(3, [(0, 1), (0, 2), (1, 2)], 2)
    assert not bilevel.decide_vc_brute(3, [(0, 1), (0, 2), (1, 2)], 1)
    p = bilevel.planar_vc_to_bipartite_bis(2, [(0, 1)], 1)
    assert p.constants["M"] == 104


def test_errors_carry_codes():
    with pytest.raises(bilevel.BilevelError) as info:
        bilevel.Variant("xx-ds-o")
    assert info.value.code == "BadParameter" or info.value.code == "InvalidInput"
    with pytest.raises(bilevel.BilevelError) as info:
        bilevel.solve_cb_db_o(bilevel.BisGraph([], []))
    assert info.value.code == "Infeasible"


def test_generators_deterministic():
    a = bilevel.gen_random_graph(20, 0.3, 0.5, 9, False, 42)
    b = bilevel.gen_random_graph(20, 0.3, 0.5, 9, False, 42)
    assert a == b and a.to_json() == b.to_json()
    assert [n for n, _ in bilevel.bench_dp([5, 10], 1)] == [5, 10]


CLI = os.environ.get("BILEVEL_CLI")


@pytest.mark.skipif(not CLI, reason="BILEVEL_CLI not set")
def test_cli_exit_codes(tmp_path):
    graph = tmp_path / "g.json"
    graph.write_text(g1().to_json())
    ok = subprocess.run([CLI, "solve", "--variant", "cs-ds-o", "--input", str(graph)], capture_output=True, text=True)
    assert ok.returncode == 0
    assert json.loads(ok.stdout)["leader_value"] == 7

    empty = tmp_path / "e.json"
    empty.write_text(bilevel.BisGraph([], []).to_json())
    assert subprocess.run([CLI, "solve", "--variant", "cs-ds-o", "--input", str(empty)], capture_output=True).returncode == 1

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert subprocess.run([CLI, "solve", "--variant", "cs-ds-o", "--input", str(bad)], capture_output=True).returncode == 2
    assert subprocess.run([CLI, "solve", "--variant", "nope", "--input", str(graph)], capture_output=True).returncode == 2

    big = tmp_path / "big.json"
    big.write_text(bilevel.BisGraph([("follower", 1, 1)] * 17, []).to_json())
    assert subprocess.run([CLI, "brute", "--variant", "cs-ds-o", "--input", str(big)], capture_output=True).returncode == 3

    gen = subprocess.run([CLI, "gen", "intervals", "--n", "8", "--seed", "3", "--output", str(tmp_path / "i.json")],
                         capture_output=True)
    assert gen.returncode == 0
    dp = subprocess.run([CLI, "solve-intervals", "--setting", "p", "--input", str(tmp_path / "i.json")],
                        capture_output=True, text=True)
    assert dp.returncode == 0 and "leader_value" in json.loads(dp.stdout)
