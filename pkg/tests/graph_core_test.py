# graph storage, oracle metering, validation and file formats
import numpy as np
import pytest

from core.errors import FormatError, NodeIndexError, ParameterError
from graph.io import load_graph, read_matching, save_graph, write_matching
from graph.model import Graph, MatchingGraph
from graph.oracle import MatchingOracle, QueryOracle
from graph.validation import ViolationKind, validate

def test_degree_and_neighbor_order(c6, petersen, star5):
    oracle = QueryOracle(c6)
    assert oracle.degree(0) == 2
    assert [oracle.neighbor(0, j) for j in range(2)] == [1, 5]
    assert QueryOracle(petersen).degree(7) == 3
    assert QueryOracle(star5).degree(0) == 5

def test_neighbor_is_smallest_first_on_er():
    from generators.random_graphs import gen_erdos_renyi

    graph = gen_erdos_renyi(100, 0.1, seed=11)
    oracle = QueryOracle(graph)
    row = graph.neighbors(0)
    assert row.size > 0
    assert oracle.neighbor(0, 0) == int(row.min())

def test_out_of_range_queries(c6):
    oracle = QueryOracle(c6)
    with pytest.raises(NodeIndexError):
        oracle.degree(6)
    with pytest.raises(NodeIndexError):
        oracle.neighbor(0, 2)
    with pytest.raises(IndexError):
        oracle.node_incidence(-1)

def test_counters_grow_and_snapshot(c6):
    oracle = QueryOracle(c6)
    oracle.degree(0)
    oracle.neighbor(0, 1)
    oracle.neighbors(3)
    oracle.node_incidence(2)
    counts = oracle.snapshot()
    assert (counts.degree, counts.neighbor, counts.incidence) == (2, 3, 1)
    assert counts.total == oracle.query_count == 6
    assert oracle.visited_log == [3, 2]

def test_node_incidence_returns_every_edge(c6):
    assert QueryOracle(c6).node_incidence(0) == frozenset({(0, 1), (0, 5)})

def test_matching_oracle_group_incidence():
    mg = MatchingGraph.from_pairs(2, 2, [((0, 0), (1, 0)), ((0, 1), (1, 1))])
    oracle = MatchingOracle(mg)
    edges = oracle.group_incidence(0)
    assert edges == frozenset({((0, 0), (1, 0)), ((0, 1), (1, 1))})
    assert oracle.query_count == 1
    with pytest.raises(NodeIndexError):
        oracle.group_incidence(2)

def test_matching_graph_rejects_bad_partner_arrays():
    with pytest.raises(ParameterError):
        MatchingGraph(3, 1, [1, 0, 2])
    with pytest.raises(ParameterError):
        MatchingGraph(2, 2, [1, 2, 3, 0])

def test_graph_is_immutable(c6):
    with pytest.raises(ValueError):
        c6.neighbor_array[0] = 3

def test_validate_known_graphs(c6, k4, petersen):
    for graph in (c6, k4, petersen):
        report = validate(graph)
        assert report.valid
        assert report.is_regular
    assert validate(petersen).degree == 3

def test_validate_reports_asymmetry():
    report = validate(Graph.from_adjacency([[1], []]))
    assert ViolationKind.ASYMMETRIC in report.kinds()

def test_validate_reports_self_loop_and_duplicate():
    raw = Graph.from_edges(3, [(0, 0), (0, 1), (0, 1), (1, 2)], simplify=False)
    kinds = validate(raw).kinds()
    assert ViolationKind.SELF_LOOP in kinds
    assert ViolationKind.DUPLICATE in kinds

def test_validate_reports_wrong_declared_degree():
    raw = Graph(np.array([0, 1, 2, 2]), np.array([1, 0]), regular_degree=1)
    report = validate(raw)
    assert [v.node for v in report.violations if v.kind is ViolationKind.DEGREE] == [2]

def test_from_edges_checks_declared_degree():
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(0, 1), (1, 2)], regular_degree=2)

def test_simplify_drops_loops_and_merges(c6):
    graph = Graph.from_edges(6, [(0, 1), (1, 0), (2, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
    assert graph.m == 6
    assert graph == Graph.from_edges(6, c6.edges())

def test_edge_list_and_binary_files(tmp_path, petersen):
    for name in ("petersen.txt", "petersen.xpgr"):
        path = save_graph(petersen, tmp_path / name)
        loaded = load_graph(path)
        assert loaded == petersen
        assert loaded.fingerprint() == petersen.fingerprint()

def test_edge_list_header_mismatch(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n")
    with pytest.raises(FormatError):
        load_graph(path)

def test_binary_truncated(tmp_path, c6):
    path = save_graph(c6, tmp_path / "c6.xpgr")
    path.write_bytes(path.read_bytes()[:-4])
    with pytest.raises(FormatError):
        load_graph(path)

def test_edge_list_with_odd_token_count(tmp_path):
    path = tmp_path / "odd.txt"
    path.write_text("4 2\n0 1\n2\n")
    with pytest.raises(FormatError, match="line 3"):
        load_graph(path)

def test_edge_list_with_non_integer_token(tmp_path):
    path = tmp_path / "word.txt"
    path.write_text("4 2\n0 1\n2 x\n")
    with pytest.raises(FormatError, match="line 3"):
        load_graph(path)

def test_matching_file(tmp_path):
    mg = MatchingGraph.from_pairs(2, 2, [((0, 0), (1, 1)), ((0, 1), (1, 0))])
    path = write_matching(mg, tmp_path / "m.txt")
    assert path.read_text() == "matching 2 2\n0 0 1 1\n0 1 1 0\n"
    assert read_matching(path) == mg

def test_matching_file_errors(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("matching 2 2\n0 0 1 1\n")
    with pytest.raises(FormatError):
        read_matching(path)
    path.write_text("matching 2 2\n0 0 1 1\n0 0 1 0\n")
    with pytest.raises(FormatError):
        read_matching(path)
    path.write_text("matching 2 2\n0 0 1 1\n0 1 1\n")
    with pytest.raises(FormatError, match="line 3"):
        read_matching(path)
