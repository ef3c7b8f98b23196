import pytest

from cclose import (
    Coloring,
    Instance,
    Problem,
    RuleRecord,
    Witness,
    path_graph,
    replay,
    replay_trace,
)


def test_instance_validation():
    g = path_graph(2)
    with pytest.raises(ValueError):
        Instance(problem=Problem.IS, graph=g, k=-1)
    with pytest.raises(ValueError):
        Instance(problem=Problem.TDS, graph=g, k=1)  # missing r
    with pytest.raises(ValueError):
        Instance(problem=Problem.DS, graph=g, k=1, r=1)  # stray r
    with pytest.raises(ValueError):
        Instance(problem=Problem.BW_TDS, graph=g, k=1, r=1)  # missing coloring
    with pytest.raises(ValueError):
        Instance(problem=Problem.IS, graph=g, k=1, coloring=Coloring())


def test_coloring_defaults_black():
    g = path_graph(3)
    coloring = Coloring(frozenset({1}))
    assert coloring.color_of(0) == "black"
    assert coloring.color_of(1) == "white"
    assert coloring.black_of(g) == {0, 2}


def test_replay_add_recolor_remove():
    g = path_graph(3)
    inst = Instance(
        problem=Problem.BW_TDS, graph=g, k=2, r=1, coloring=Coloring()
    )
    record = RuleRecord(
        rule="RR2",
        vertices_added=(3,),
        edges_added=((3, 0), (3, 1)),
        recolored=((0, "white"), (1, "white")),
    )
    post = replay(inst, record)
    assert post.graph.neighbors(3) == {0, 1}
    assert post.white_vertices() == {0, 1}
    assert post.k == 2

    removal = RuleRecord(rule="RR6", vertices_removed=(0,), k_delta=-1)
    post2 = replay(post, removal)
    assert not post2.graph.has_vertex(0)
    assert post2.k == 1
    assert post2.white_vertices() == {1}


def test_replay_uncolor_gadget_record():
    g = path_graph(2)
    inst = Instance(
        problem=Problem.BW_TDS,
        graph=g,
        k=1,
        r=1,
        coloring=Coloring(frozenset({1})),
    )
    record = RuleRecord(
        rule="gadget",
        vertices_added=(2, 3),
        edges_added=((2, 3), (1, 2)),
        k_delta=1,
        payload={"uncolor": True, "declared_closure": 2},
    )
    post = replay(inst, record)
    assert post.problem is Problem.DS
    assert post.coloring is None and post.r is None
    assert post.k == 2 and post.declared_closure == 2


def test_replay_trace_composes():
    g = path_graph(4)
    inst = Instance(problem=Problem.IS, graph=g, k=2)
    trace = [
        RuleRecord(rule="RR1", vertices_removed=(1,)),
        RuleRecord(rule="RR1", vertices_removed=(2,)),
    ]
    final = replay_trace(inst, trace)
    assert final.graph.vertex_ids == (0, 3)


def test_rule_record_json():
    record = RuleRecord(
        rule="RR3.1",
        vertices_added=(9,),
        edges_added=((9, 1),),
        recolored=((1, "white"),),
        payload={"common_black": {3, 2}},
    )
    blob = record.to_json()
    assert blob["rule"] == "RR3.1"
    assert blob["payload"]["common_black"] == [2, 3]
    assert blob["edges_added"] == [[9, 1]]


def test_witness_constructors():
    w = Witness.vertex_set([3, 1], Problem.IS)
    assert w.sorted_elements() == [1, 3]
    e = Witness.edge_set([(5, 2), (1, 0)], Problem.IM)
    assert e.sorted_elements() == [(0, 1), (2, 5)]
