import json
import math

import pytest

from _oracles import set_partitions
from bellgraph.classspec import ClassSpec
from bellgraph.decider import (
    ABOVE,
    BELOW,
    INFINITE,
    Caps,
    Verdict,
    bell,
    candidates,
    decide_bell,
    nondegenerate,
    speed,
    verify_antichain,
    wqo_verdict,
)
from bellgraph.errors import CapsExceeded, SizeExceeded
from bellgraph.graph import (
    LoopedGraph,
    complete_graph,
    contains,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from bellgraph.words import PeriodicWord, PwhClass, antichain_family, linear_forests

P3 = ClassSpec.of(path_graph(3))
K3_CLAW = ClassSpec.of(complete_graph(3), star_graph(3))
K2 = ClassSpec.of(complete_graph(2))


@pytest.mark.parametrize("n", range(0, 9))
def test_bell_matches_partition_enumeration(n):
    assert bell(n) == sum(1 for _ in set_partitions(list(range(n))))


def test_bell_examples_and_limits():
    assert (bell(1), bell(3), bell(5)) == (1, 5, 52)
    assert bell(30) == 846749014511809332450147
    with pytest.raises(SizeExceeded):
        bell(31)
    with pytest.raises(ValueError):
        bell(-1)


def test_bell_agrees_with_dobinski_estimate():
    for n in (10, 20):
        approx = sum(k**n / math.factorial(k) for k in range(120)) / math.e
        assert bell(n) == pytest.approx(approx, rel=1e-9)


def test_speed_examples():
    assert speed(K2, 5) == 1
    assert speed(ClassSpec.unconstrained(), 3) == 8
    assert speed(P3, 4) == 15 == bell(4)
    with pytest.raises(SizeExceeded):
        speed(K2, 9)


def test_caps_validation():
    Caps(3, 8, 8)
    for bad in [(0, 4, 6), (4, 4, 6), (2, 9, 6), (2, 0, 6), (2, 4, 9), (2, 4, -1)]:
        with pytest.raises(CapsExceeded):
            Caps(*bad)


def test_candidate_enumeration_order_and_dedupe():
    cands = list(candidates(Caps(2, 2, 0)))
    words = [str(c.w) for c in cands]
    assert words[:2] == ["(a)", "(a)"]
    assert set(words) == {"(a)", "(ab)"}
    # (ab) over two letters: H up to swapping a and b
    assert len([c for c in cands if str(c.w) == "(ab)"]) == 6
    assert len(list(candidates(Caps()))) == 30


def test_nondegeneracy_filter_accepts_the_linear_forests():
    assert nondegenerate(linear_forests())
    assert nondegenerate(PwhClass(PeriodicWord((0,)), LoopedGraph.from_edges(1, [(0, 0)])))


def test_decision_examples():
    v = decide_bell(P3)
    assert v.status == INFINITE and v.witnesses == [{"class": 1}] and v.wqo == "not_applicable"
    v = decide_bell(K3_CLAW)
    assert v.status == ABOVE and v.wqo == "not_wqo"
    assert v.witnesses[0]["word"] == "(a)" and v.witnesses[0]["h"] == {"n": 1, "edges": []}
    v = decide_bell(K2)
    assert v.status == BELOW and v.wqo == "labelled_wqo" and v.witnesses == []
    assert all(count < b for n, count, b in v.speed_table if n >= 3)


def test_wqo_verdicts():
    assert wqo_verdict(K3_CLAW).wqo == "not_wqo"
    assert wqo_verdict(K2).wqo == "labelled_wqo"
    assert wqo_verdict(P3).wqo == "not_applicable"


def test_speed_table_is_attached_and_caps_echoed():
    v = decide_bell(K3_CLAW, Caps(1, 1, 5))
    assert v.speed_table == [(n, speed(K3_CLAW, n), bell(n)) for n in range(1, 6)]
    assert v.to_dict()["caps"] == {"max_letters": 1, "max_period": 1, "speed_n": 5}


def test_json_schema_round_trip():
    v = decide_bell(K3_CLAW)
    text = v.to_json()
    assert list(json.loads(text)) == ["status", "witnesses", "caps", "wqo", "speed_table"]
    again = Verdict.from_json(text)
    assert again.to_json() == text
    with pytest.raises(ValueError):
        Verdict.from_json('{"status": "x"}')


def test_threads_do_not_change_the_verdict():
    spec = ClassSpec.of(cycle_graph(4), complete_graph(4), path_graph(5))
    caps = Caps(2, 4, 3)
    serial = decide_bell(spec, caps).to_json()
    assert decide_bell(spec, caps, threads=4).to_json() == serial
    assert decide_bell(spec, caps, threads=0).to_json() == serial


@pytest.mark.parametrize("forbidden", [
    [complete_graph(3), star_graph(3)], [complete_graph(2)], [cycle_graph(4), complete_graph(3)],
    [path_graph(4), complete_graph(3)], [empty_graph(3)],
])
def test_enlarging_caps_never_loses_an_above_verdict(forbidden):
    spec = ClassSpec.of(*forbidden)
    small = decide_bell(spec, Caps(1, 2, 0)).status
    large = decide_bell(spec, Caps(2, 4, 0)).status
    if small == ABOVE:
        assert large == ABOVE


@pytest.mark.parametrize("forbidden", [[complete_graph(3), star_graph(3)], [complete_graph(4), star_graph(3)]])
def test_above_verdict_comes_with_an_antichain_certificate(forbidden):
    spec = ClassSpec.of(*forbidden)
    v = decide_bell(spec)
    assert v.status == ABOVE
    wit = v.witnesses[0]
    w = PeriodicWord.parse(wit["word"])
    h = LoopedGraph.from_edges(wit["h"]["n"], [tuple(e) for e in wit["h"]["edges"]])
    fam = antichain_family(PwhClass(w, h), 3)
    assert verify_antichain(fam)
    assert all(spec.admits(g) for g in fam)


def test_below_verdict_speed_consistency():
    v = decide_bell(K2, Caps(2, 4, 6))
    n, count, b = v.speed_table[-1]
    assert count < b


def test_verify_antichain_examples():
    assert verify_antichain([cycle_graph(4), cycle_graph(5), cycle_graph(6)])
    assert not verify_antichain([path_graph(3), path_graph(4)])
    assert verify_antichain([path_graph(3)])
    assert verify_antichain([])


def test_decide_size_limit():
    with pytest.raises(SizeExceeded):
        decide_bell(ClassSpec.of(empty_graph(11)))


def test_cycle_antichain_avoids_triangle_and_claw():
    fam = antichain_family(linear_forests(), 4)
    assert not any(contains(g, complete_graph(3)) or contains(g, star_graph(3)) for g in fam)
