import pytest

from gac_framework.core import AllDifferent, GadgetError, Instance, SourceError, evaluate
from gac_framework.gadgets import (
    Cnf3, Cnf3Positive, GadgetOutput, Graph, GraphPair, Max2SatInput, build_gadget, covering_walk, gadgets,
    verify_gadget,
)
from gac_framework.gadgets.meta_gadgets import falsifying_pattern

ONE_CLAUSE = Cnf3(3, ((1, 2, 3),))
Q1 = Cnf3Positive(1, ((1, 1, 1),))


def verified(family, source, budget, **params):
    report = verify_gadget(build_gadget(family, source, **params), source, budget)
    assert report.error is None
    return report


def test_every_family_is_registered():
    assert set(gadgets) == {
        "support", "nvalue", "among-var", "common", "disjoint", "gcc-repeat", "atmost1", "scalarproduct",
        "isitgac", "maxgac", "card", "cardpath-3col", "cardpath-max2sat",
    }


@pytest.mark.parametrize("family", ["support", "nvalue", "among-var", "common", "disjoint", "gcc-repeat"])
class TestFormulaGadgets:
    def test_satisfiable(self, family, f1, budget):
        report = verified(family, f1, budget)
        assert report.engine_answer is True
        assert report.agree
        assert report.certificate_valid is True

    def test_unsatisfiable(self, family, f2, budget):
        report = verified(family, f2, budget)
        assert report.engine_answer is False
        assert report.outcome == "agree"
        assert report.certificate is None

    def test_unsatisfiable_single_variable(self, family, u1, budget):
        report = verified(family, u1, budget)
        assert report.engine_answer is False
        assert report.agree


def test_support_gadget_shape(f1):
    gadget = build_gadget("support", f1)
    assert gadget.question == "gac-support"
    assert gadget.args == {"var": "X", "value": 1}
    assert gadget.instance.scope == ("X", "x1", "x2", "x3")


def test_nvalue_gadget_shape(f1):
    gadget = build_gadget("nvalue", f1)
    assert len(gadget.instance.variables) == f1.num_vars + len(f1.clauses) + 1
    assert gadget.instance.domains["X2"] == (-2, 2)
    assert gadget.instance.domains["C2"] == (-3, -2, -1)
    assert gadget.instance.domains["N"] == (3,)


def test_gcc_repeat_lists_literal_variables_once_per_clause(f1):
    scope = build_gadget("gcc-repeat", f1).instance.constraint.scope
    assert len(scope) == len(f1.clauses) + f1.num_vars * len(f1.clauses)
    assert scope.count("Y1") == len(f1.clauses)


class TestAtMost1:
    def test_yes_decodes_to_a_model(self, budget):
        report = verified("atmost1", ONE_CLAUSE, budget)
        assert report.engine_answer and report.certificate_valid

    def test_no(self, u1, budget):
        report = verified("atmost1", u1, budget)
        assert report.engine_answer is False
        assert report.agree

    def test_sound_only(self, f1):
        assert build_gadget("atmost1", f1).complete is False

    def test_missed_model_is_incomplete_not_agreement(self, budget):
        # x1 false, x2 true is a model, but the two sets tying clause 0 to the negative
        # clauses both need its marker with its x1 occurrence
        source = Cnf3(2, ((1, 2, 2), (-1, -1, -1), (-1, -1, -1)))
        report = verified("atmost1", source, budget)
        assert report.oracle_answer is True
        assert report.engine_answer is False
        assert report.agree is False
        assert report.outcome == "incomplete"

    def test_engine_yes_on_unsat_source_is_disagreement(self, u1, budget):
        instance = Instance(variables=("a",), domains={"a": (1,)}, constraint=AllDifferent(scope=("a",)))
        gadget = GadgetOutput(family="atmost1", instance=instance, question="no-gac-wipeout", meaning="always yes",
                              complete=False)
        report = verify_gadget(gadget, u1, budget)
        assert report.engine_answer is True
        assert report.outcome == "disagree"

    def test_cardinality_pads_every_set(self):
        gadget = build_gadget("atmost1", ONE_CLAUSE, cardinality=3)
        constraint = gadget.instance.constraint
        assert constraint.cardinality == 3
        assert len(constraint.universe) == 5
        with pytest.raises(ValueError):
            build_gadget("atmost1", ONE_CLAUSE, cardinality=1)


class TestScalarProduct:
    def test_grid_shape(self, p1):
        gadget = build_gadget("scalarproduct", p1)
        rows = gadget.instance.constraint.rows
        m, n = len(p1.clauses), p1.num_vars
        assert len(rows) == 4 * m + 1
        # three occurrence rows of one clause share no column: one balancing column per pair
        balancing = 3
        assert {len(row) for row in rows} == {3 * m + n + balancing}
        model = [gadget.instance.domains[var] for var in rows[0]]
        assert model[:3 * m + n] == [(0, 1)] * (3 * m + n)
        assert model[3 * m + n:] == [(0,)] * balancing

    def test_balancing_columns_follow_disjoint_rows(self):
        two_clauses = Cnf3Positive(4, ((1, 2, 3), (2, 3, 4)))
        rows = build_gadget("scalarproduct", two_clauses).instance.constraint.rows
        # 10 core columns. Disjoint constant row pairs: the two clause rows, 6 clause/occurrence
        # pairs across clauses, 6 occurrence pairs within a clause, 7 of the 9 across clauses
        assert {len(row) for row in rows} == {10 + 20}

    def test_target_adds_all_ones_columns(self, p1):
        rows = build_gadget("scalarproduct", p1, target=3).instance.constraint.rows
        assert {len(row) for row in rows} == {9 + 2}

    def test_answers(self, p1, budget):
        yes = verified("scalarproduct", p1, budget)
        assert yes.engine_answer and yes.certificate_valid
        no = verified("scalarproduct", Q1, budget)
        assert no.engine_answer is False and no.agree

    def test_target(self, p1, budget):
        gadget = build_gadget("scalarproduct", p1, target=2)
        assert gadget.instance.constraint.target == 2
        assert verify_gadget(gadget, p1, budget).agree


class TestGraphGadgets:
    def test_isitgac(self, k3, k4, budget):
        yes = verified("isitgac", k3, budget)
        assert yes.engine_answer and yes.certificate_valid
        assert verified("isitgac", k4, budget).engine_answer is False
        assert verified("isitgac", Graph(1, ()), budget).agree

    def test_isitgac_needs_a_vertex(self):
        with pytest.raises(GadgetError):
            build_gadget("isitgac", Graph(0, ()))

    def test_maxgac(self, k3, k4, budget):
        k3_on_4 = Graph(4, k3.edges)
        yes = verified("maxgac", GraphPair(k3_on_4, k4), budget)
        assert yes.engine_answer and yes.certificate_valid
        for pair in (GraphPair(k4, k4), GraphPair(k3_on_4, k3_on_4)):
            report = verified("maxgac", pair, budget)
            assert report.engine_answer is False and report.agree

    def test_maxgac_vertex_counts_must_match(self, k3, k4):
        with pytest.raises(GadgetError):
            build_gadget("maxgac", GraphPair(k3, k4))

    def test_metadata(self, k3, k4):
        metadata = build_gadget("maxgac", GraphPair(Graph(4, k3.edges), k4)).metadata()
        assert metadata["question"] == "max-gac"
        assert metadata["args"]["candidate"]["V0"] == [0, 1, 2]


class TestCard:
    def test_children_per_clause(self, f1):
        gadget = build_gadget("card", f1)
        assert len(gadget.instance.constraint.children) == 5 * len(f1.clauses)
        assert gadget.instance.domains["N"] == (10,)
        assert gadget.instance.domains["U2"] == tuple(range(8, 15))

    def test_answers(self, f1, budget):
        for source in (ONE_CLAUSE, f1):
            report = verified("card", source, budget)
            assert report.engine_answer and report.certificate_valid

    def test_occurrence_limit(self, f2):
        with pytest.raises(GadgetError):
            build_gadget("card", f2)

    def test_falsifying_pattern(self):
        assert falsifying_pattern((1, 2, 3)) == 0
        assert falsifying_pattern((-1, 2, -3)) == 5


class TestCardpath:
    def test_covering_walk(self, k3, k4):
        assert covering_walk(k3) == [0, 1, 0, 2, 1]
        walk = covering_walk(k4)
        steps = {frozenset(pair) for pair in zip(walk, walk[1:])}
        assert steps == {frozenset(edge) for edge in k4.edges}

    def test_3col(self, k3, k4, budget):
        gadget = build_gadget("cardpath-3col", k3)
        assert gadget.instance.domains["N"] == (4,)
        yes = verify_gadget(gadget, k3, budget)
        assert yes.engine_answer and yes.certificate_valid
        assert verified("cardpath-3col", k4, budget).engine_answer is False

    @pytest.mark.parametrize("graph", [Graph(2, ()), Graph(4, ((0, 1), (2, 3)))])
    def test_3col_preconditions(self, graph):
        with pytest.raises(GadgetError):
            build_gadget("cardpath-3col", graph)

    def test_3col_single_vertex(self, budget):
        graph = Graph(1, ())
        gadget = build_gadget("cardpath-3col", graph)
        assert gadget.instance.constraint.sequence == ("V0", "PAD")
        assert gadget.instance.constraint.window_count == 1
        assert gadget.instance.domains["N"] == (1,)
        report = verified("cardpath-3col", graph, budget)
        assert report.engine_answer is True
        assert report.agree and report.certificate_valid
        assert report.certificate in {(0,), (1,), (2,)}

    @pytest.mark.parametrize("problem, expected", [
        (Max2SatInput(1, ((1, 1),), 0), True),
        (Max2SatInput(1, ((1, 1), (-1, -1)), 0), False),
        (Max2SatInput(1, ((1, 1), (-1, -1)), 1), True),
    ])
    def test_max2sat_single_variable(self, problem, expected, budget):
        report = verified("cardpath-max2sat", problem, budget)
        assert report.engine_answer is expected
        assert report.agree

    def test_max2sat_fixtures(self, w1, w2, budget):
        assert verified("cardpath-max2sat", w1, budget).certificate_valid
        assert verified("cardpath-max2sat", w2, budget).engine_answer is False
        assert verified("cardpath-max2sat", Max2SatInput(2, w2.clauses, 1), budget).engine_answer is True

    def test_max2sat_sequence_has_no_repeats(self, w1):
        constraint = build_gadget("cardpath-max2sat", w1).instance.constraint
        assert len(set(constraint.sequence)) == len(constraint.sequence)
        assert constraint.arity == 2 * (1 + 2 + 2)


class TestBuild:
    def test_unknown_family(self, f1):
        with pytest.raises(GadgetError):
            build_gadget("nope", f1)

    def test_source_kind_must_match(self, k3):
        with pytest.raises(SourceError):
            build_gadget("nvalue", k3)

    def test_witness_satisfies_the_built_constraint(self, f1, budget):
        gadget = build_gadget("disjoint", f1)
        result = gadget.ask(budget)
        assert evaluate(gadget.instance.constraint, result.witness)

    def test_report_to_dict(self, f1, budget):
        data = verified("nvalue", f1, budget).to_dict()
        assert data["family"] == "nvalue"
        assert isinstance(data["certificate"], list)
