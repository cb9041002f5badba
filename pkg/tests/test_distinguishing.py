import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import brute_max_distinguish, brute_minimal_class
from _strategies import graphs
from bellgraph.classspec import ClassSpec
from bellgraph.decider import bell, speed
from bellgraph.distinguishing import (
    CLASS_IDS,
    distinguished_sets,
    in_minimal_class,
    infinite_distinguishing_witnesses,
    max_distinguish,
)
from bellgraph.errors import InvalidVertex, SizeExceeded
from bellgraph.graph import (
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)


def test_distinguished_sets_examples():
    assert distinguished_sets(star_graph(3), [0]).classes == ((0,), (1, 2, 3))
    assert distinguished_sets(cycle_graph(4), [0]).classes == ((0, 2), (1, 3))
    report = distinguished_sets(path_graph(4), [0, 2])
    assert report.classes == ((0, 2), (1,), (3,))
    assert report.large_count(1) == 3
    assert report.large_count(2) == 1


def test_invalid_vertex():
    with pytest.raises(InvalidVertex):
        distinguished_sets(path_graph(3), [5])


@given(graphs(max_n=7), st.data())
def test_classes_partition_and_separate(g, data):
    x = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
    report = distinguished_sets(g, x)
    flat = sorted(v for c in report.classes for v in c)
    assert flat == list(range(g.n))
    xm = sum(1 << v for v in x)
    traces = [g.rows[c[0]] & xm for c in report.classes]
    assert len(set(traces)) == len(traces)
    for c in report.classes:
        assert len({g.rows[v] & xm for v in c}) == 1


def test_max_distinguish_examples():
    assert max_distinguish(empty_graph(3), 1)[0] == 1
    assert max_distinguish(star_graph(3), 1)[0] == 2
    # every vertex of P4 has its own neighbourhood, so X = V separates all four
    count, x = max_distinguish(path_graph(4), 1)
    assert count == 4
    assert distinguished_sets(path_graph(4), x).large_count(1) == 4


@given(graphs(max_n=6), st.integers(1, 3))
def test_max_distinguish_matches_brute_force(g, k):
    count, x = max_distinguish(g, k)
    assert count == brute_max_distinguish(g, k)
    assert distinguished_sets(g, x).large_count(k) == count


def test_max_distinguish_size_cap():
    with pytest.raises(SizeExceeded):
        max_distinguish(empty_graph(21), 1)


def test_minimal_class_examples():
    assert in_minimal_class(disjoint_union(complete_graph(3), complete_graph(2)), 1)
    assert not in_minimal_class(path_graph(3), 1)
    assert not in_minimal_class(cycle_graph(4), 2)
    with pytest.raises(ValueError):
        in_minimal_class(path_graph(3), 14)


@given(graphs(max_n=6), st.sampled_from(CLASS_IDS))
def test_minimal_class_matches_bipartition_oracle(g, j):
    assert in_minimal_class(g, j) == brute_minimal_class(g, j)


@given(graphs(max_n=7), st.integers(8, 13))
def test_upper_classes_are_complements(g, j):
    assert in_minimal_class(g, j) == in_minimal_class(complement(g), j - 7)


@given(graphs(min_n=1, max_n=7), st.sampled_from(CLASS_IDS))
def test_minimal_classes_are_hereditary(g, j):
    if in_minimal_class(g, j):
        assert all(in_minimal_class(g.delete(v), j) for v in range(g.n))


def test_witness_examples():
    assert 1 in infinite_distinguishing_witnesses(ClassSpec.of(path_graph(3)))
    assert 2 in infinite_distinguishing_witnesses(ClassSpec.of(path_graph(4)))
    assert infinite_distinguishing_witnesses(ClassSpec.of(complete_graph(3), star_graph(3))) == []
    assert infinite_distinguishing_witnesses(ClassSpec.unconstrained()) == list(CLASS_IDS)


@pytest.mark.parametrize("forbidden", [[path_graph(3)], [path_graph(4)], [complete_graph(3)],
                                       [cycle_graph(4), complete_graph(3)]])
def test_infinite_distinguishing_implies_bell_speed(forbidden):
    spec = ClassSpec.of(*forbidden)
    if infinite_distinguishing_witnesses(spec):
        assert all(speed(spec, n) >= bell(n) for n in range(1, 7))
