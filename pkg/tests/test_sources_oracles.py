import pytest

from gac_framework.core import ScaleLimitError, SourceError
from gac_framework.gadgets import (
    Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput, max2sat_oracle, one_in_three_oracle, oracle_solve,
    parse_cnf, parse_graph, parse_max2sat, parse_source, sat3_oracle, three_col_oracle, validate_certificate,
    write_cnf, write_graph,
)
from gac_framework.gadgets.oracles import graph_pair_oracle


class TestSources:
    def test_parse_cnf_with_comments(self):
        text = "c two clauses\np cnf 3 2\n1 -2 3 0\n-1 2\n-3 0\n"
        cnf = parse_cnf(text)
        assert cnf == Cnf3(3, ((1, -2, 3), (-1, 2, -3)))
        assert cnf.kind == "3sat"

    def test_write_then_parse(self, f1):
        assert write_cnf(f1) == "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"
        assert parse_cnf(write_cnf(f1)) == f1

    @pytest.mark.parametrize("text", [
        "p cnf 3 1\n1 2 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "p cnf 3 1\n1 2 3\n",
        "p dnf 3 1\n1 2 3 0\n",
        "p cnf 3 1\n1 x 3 0\n",
    ])
    def test_bad_cnf(self, text):
        with pytest.raises(SourceError):
            parse_cnf(text)

    def test_positive_formula(self):
        assert parse_cnf("p cnf 3 1\n1 2 3 0\n", positive=True).kind == "1in3"
        with pytest.raises(SourceError):
            parse_cnf("p cnf 3 1\n1 -2 3 0\n", positive=True)

    def test_max2sat(self, w2):
        parsed = parse_max2sat("p cnf 2 4 0\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n")
        assert parsed == w2
        assert write_cnf(w2).splitlines()[0] == "p cnf 2 4 0"
        with pytest.raises(SourceError):
            Max2SatInput(2, ((1, 2),), 2)

    def test_graph_is_one_based_on_disk(self, k3):
        text = write_graph(k3)
        assert text.splitlines() == ["p edge 3 3", "e 1 2", "e 1 3", "e 2 3"]
        assert parse_graph(text) == k3

    def test_graph_edges_are_normalised(self):
        assert Graph(3, ((2, 0), (0, 2), (1, 0))).edges == ((0, 1), (0, 2))

    @pytest.mark.parametrize("edges", [((0, 0),), ((0, 3),)])
    def test_bad_graph(self, edges):
        with pytest.raises(SourceError):
            Graph(3, edges)

    def test_graph_edge_count_must_match(self):
        with pytest.raises(SourceError):
            parse_graph("p edge 3 2\ne 1 2\n")

    def test_graph_pair(self, k3, k4):
        text = write_graph(Graph(4, k3.edges)) + "\n" + write_graph(k4)
        pair = parse_source("3col-pair", text)
        assert pair == GraphPair(Graph(4, k3.edges), k4)
        with pytest.raises(SourceError):
            parse_source("3col-pair", write_graph(k4))

    def test_unknown_kind(self):
        with pytest.raises(SourceError):
            parse_source("4sat", "")

    def test_connectivity(self, k3):
        assert k3.is_connected()
        assert not Graph(4, k3.edges).is_connected()
        assert not Graph(0, ()).is_connected()


class TestOracles:
    def test_sat(self, f1, f2, u1):
        answer, model = sat3_oracle(f1)
        assert answer and f1.satisfied_by(model)
        assert sat3_oracle(f2) == (False, None)
        assert sat3_oracle(u1) == (False, None)

    def test_one_in_three(self, p1):
        answer, model = one_in_three_oracle(p1)
        assert answer and sum(model) == 1
        assert one_in_three_oracle(Cnf3Positive(1, ((1, 1, 1),))) == (False, None)

    def test_one_in_three_counts_every_occurrence(self):
        cnf = Cnf3Positive(4, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)))
        assert not one_in_three_oracle(cnf)[0]
        assert sat3_oracle(Cnf3(4, cnf.clauses))[0]

    def test_three_col(self, k3, k4):
        answer, colors = three_col_oracle(k3)
        assert answer and k3.proper_coloring(colors)
        assert three_col_oracle(k4) == (False, None)
        assert three_col_oracle(Graph(0, ())) == (True, ())

    def test_graph_pair(self, k3, k4):
        assert graph_pair_oracle(GraphPair(Graph(4, k3.edges), k4))[0]
        assert not graph_pair_oracle(GraphPair(k4, k4))[0]
        assert not graph_pair_oracle(GraphPair(Graph(4, k3.edges), Graph(4, k3.edges)))[0]

    def test_max2sat(self, w1, w2):
        answer, model = max2sat_oracle(w1)
        assert answer and w1.violations(model) == 0
        assert max2sat_oracle(w2) == (False, None)
        assert max2sat_oracle(Max2SatInput(2, w2.clauses, 1))[0]

    def test_oracle_solve_dispatches_by_type(self, p1, k3):
        assert oracle_solve(p1) == one_in_three_oracle(p1)
        assert oracle_solve(k3) == three_col_oracle(k3)
        with pytest.raises(SourceError):
            oracle_solve("not a source")

    def test_scale_limit(self, monkeypatch):
        from gac_framework.utils.config import get_settings
        monkeypatch.setenv("GAC_ORACLE_MAX_VARS", "2")
        get_settings.cache_clear()
        try:
            with pytest.raises(ScaleLimitError):
                sat3_oracle(Cnf3(3, ((1, 2, 3),)))
        finally:
            monkeypatch.delenv("GAC_ORACLE_MAX_VARS")
            get_settings.cache_clear()

    def test_validate_certificate(self, f1, k3, w1):
        assert validate_certificate(f1, (True, False, False))
        assert not validate_certificate(f1, (True, True, True))
        assert not validate_certificate(f1, (True, False))
        assert validate_certificate(k3, (0, 1, 2))
        assert not validate_certificate(k3, (0, 0, 1))
        assert validate_certificate(w1, (True, False))
        assert not validate_certificate(w1, None)
