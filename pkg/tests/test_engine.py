import pytest

from gac_framework.core import (
    AllDifferent, BudgetExhaustedError, Gcc, Instance, InstanceError, NValue, Occurrence, Table,
)
from gac_framework.engine import (
    BudgetMeter, QUESTIONS, SearchBudget, ask, engines_for, enumerate_tuples, gac_domain, gac_support, is_it_gac,
    max_gac, no_gac_wipeout, seek_support, superset_sweep_max_gac,
)


def alldifferent(n, d):
    scope = tuple(f"x{i}" for i in range(n))
    return Instance(variables=scope, domains={var: tuple(range(1, d + 1)) for var in scope},
                    constraint=AllDifferent(scope=scope))


class TestSearch:
    def test_budget_must_be_positive(self):
        with pytest.raises(ValueError):
            SearchBudget(0)

    def test_enumeration_order(self, small_table):
        tuples = list(enumerate_tuples(small_table, small_table.domains, BudgetMeter(SearchBudget(10))))
        assert tuples == [{"x": 1, "y": 1}, {"x": 1, "y": 2}, {"x": 2, "y": 1}, {"x": 2, "y": 2}]

    def test_repeated_positions_are_bound_once(self):
        instance = Instance(variables=("x",), domains={"x": (1, 2)},
                            constraint=Table(scope=("x", "x"), tuples=((1, 1), (1, 2))))
        meter = BudgetMeter(SearchBudget(10))
        assert len(list(enumerate_tuples(instance, instance.domains, meter))) == 2
        assert meter.explored == 2

    def test_meter_stops_at_the_limit(self):
        meter = BudgetMeter(SearchBudget(2))
        meter.tick()
        meter.tick()
        with pytest.raises(BudgetExhaustedError) as info:
            meter.tick()
        assert info.value.tuples_explored == 2

    def test_seek_support(self, small_table, budget):
        assert seek_support(small_table, "y", 2, budget) == {"x": 2, "y": 2}
        assert seek_support(small_table, "x", 1, budget) is None

    def test_pair_outside_scope_or_domain(self, small_table, budget):
        with pytest.raises(InstanceError):
            seek_support(small_table, "z", 1, budget)
        with pytest.raises(InstanceError):
            gac_support(small_table, "x", 7, budget)


class TestQuestions:
    def test_first_witness_in_enumeration_order(self, small_table, budget):
        result = no_gac_wipeout(small_table, budget)
        assert result.answer
        assert result.witness == {"x": 2, "y": 1}
        assert result.tuples_explored == 3

    def test_gac_support(self, small_table, budget):
        assert gac_support(small_table, "x", 2, budget).answer
        unsupported = gac_support(small_table, "x", 1, budget)
        assert not unsupported.answer
        assert unsupported.witness is None
        assert unsupported.tuples_explored == 2

    def test_gac_domain(self, small_table, budget):
        result = gac_domain(small_table, budget)
        assert result.answer
        assert result.domains == {"x": (2,), "y": (1, 2)}
        assert result.tuples_explored == 7

    def test_is_it_gac_names_an_unsupported_value(self, small_table, budget):
        result = is_it_gac(small_table, budget)
        assert not result.answer
        assert result.details["unsupported"] == ["x", 1]

    def test_gac_domain_is_gac(self, small_table, budget):
        narrowed = small_table.with_domains(gac_domain(small_table, budget).domains)
        assert is_it_gac(narrowed, budget).answer

    def test_wipeout(self, pigeonhole, budget):
        assert not no_gac_wipeout(pigeonhole, budget).answer
        result = gac_domain(pigeonhole, budget)
        assert not result.answer
        assert result.domains == {"X1": (), "X2": ()}

    def test_empty_domain_is_vacuously_gac(self, small_table, budget):
        wiped = small_table.with_domains({"x": ()})
        assert is_it_gac(wiped, budget).answer
        assert wiped.domains["y"] == (1, 2)
        assert gac_domain(wiped, budget).domains == {"x": (), "y": ()}
        assert not no_gac_wipeout(wiped, budget).answer

    def test_variables_outside_scope_are_untouched(self, budget):
        instance = Instance(variables=("x", "y", "z"), domains={"x": (1,), "y": (1, 2), "z": (5, 6)},
                            constraint=AllDifferent(scope=("x", "y")))
        assert gac_domain(instance, budget).domains == {"x": (1,), "y": (2,), "z": (5, 6)}

    def test_disjoint_example(self, disjoint_instance, budget):
        result = gac_domain(disjoint_instance, budget)
        assert result.domains == {"X1": (1,), "X2": (1,), "Y1": (2,), "Y2": (3,), "Y3": (2, 3)}
        assert not is_it_gac(disjoint_instance, budget).answer
        assert not gac_support(disjoint_instance, "Y1", 1, budget).answer

    def test_max_gac(self, small_table, budget):
        assert max_gac(small_table, {"x": (2,)}, budget).answer
        assert not max_gac(small_table, {"x": (2,), "y": (1,)}, budget).answer
        assert not max_gac(small_table, {}, budget).answer

    def test_max_gac_on_wipeout(self, pigeonhole, budget):
        assert max_gac(pigeonhole, {"X1": ()}, budget).answer
        assert not max_gac(pigeonhole, {}, budget).answer

    def test_candidate_must_lie_within_domains(self, small_table, budget):
        with pytest.raises(InstanceError):
            max_gac(small_table, {"x": (3,)}, budget)
        with pytest.raises(InstanceError):
            max_gac(small_table, {"w": (1,)}, budget)

    def test_superset_sweep(self, small_table, budget):
        assert superset_sweep_max_gac(small_table, {"x": (2,)}, budget).answer
        smaller = superset_sweep_max_gac(small_table, {"x": (2,), "y": (1,)}, budget)
        assert not smaller.answer
        assert smaller.details["larger"] == {"x": [2], "y": [1, 2]}

    def test_superset_sweep_limit(self, budget):
        instance = alldifferent(2, 4)
        with pytest.raises(InstanceError):
            superset_sweep_max_gac(instance, {"x0": (1,), "x1": (2,)}, budget, max_removed=5)

    def test_budget_exhaustion_reports_tuples(self):
        with pytest.raises(BudgetExhaustedError) as info:
            is_it_gac(alldifferent(4, 4), SearchBudget(5))
        assert info.value.tuples_explored == 5

    def test_to_dict(self, small_table, budget):
        data = gac_domain(small_table, budget).to_dict()
        assert data["domains"] == {"x": [2], "y": [1, 2]}
        assert data["tuplesExplored"] == 7
        assert data["engine"] == "generic"


class TestDispatch:
    def test_questions(self):
        assert set(QUESTIONS) == {"gac-support", "is-it-gac", "no-gac-wipeout", "max-gac", "gac-domain"}

    def test_engines_for(self):
        assert engines_for("gac-support") == ["generic", "via-wipeout", "via-domain"]
        assert engines_for("max-gac") == ["generic", "via-support"]

    def test_ask(self, small_table, budget):
        assert ask(small_table, "gac-support", budget, var="x", value=2).answer
        assert ask(small_table, "max-gac", budget, engine="via-support", candidate={"x": (2,)}).answer
        result = ask(small_table, "no-gac-wipeout", budget, engine="via-support")
        assert result.answer
        assert result.engine == "via-support"

    @pytest.mark.parametrize("kwargs", [
        {"question": "bogus"},
        {"question": "is-it-gac", "engine": "via-support"},
        {"question": "gac-support"},
        {"question": "max-gac"},
    ])
    def test_ask_rejects_bad_arguments(self, small_table, budget, kwargs):
        with pytest.raises(ValueError):
            ask(small_table, budget=budget, **kwargs)


class TestSpecialCases:
    @pytest.fixture
    def domains(self):
        return {"x": (1, 2), "y": (1, 2), "z": (1, 2, 3)}

    def test_alldifferent_is_nvalue_with_n_values(self, domains, budget):
        alldifferent = Instance(variables=tuple(domains), domains=domains,
                                constraint=AllDifferent(scope=("x", "y", "z")))
        nvalue = Instance(variables=(*domains, "N"), domains={**domains, "N": (3,)},
                          constraint=NValue(scope=("x", "y", "z", "N")))
        expected = gac_domain(alldifferent, budget).domains
        assert expected["z"] == (3,)
        narrowed = gac_domain(nvalue, budget).domains
        assert {var: narrowed[var] for var in domains} == expected

    def test_alldifferent_is_gcc_with_unit_intervals(self, domains, budget):
        alldifferent = Instance(variables=tuple(domains), domains=domains,
                                constraint=AllDifferent(scope=("x", "y", "z")))
        occ = tuple(Occurrence(value=value, low=0, high=1) for value in (1, 2, 3))
        gcc = Instance(variables=tuple(domains), domains=domains, constraint=Gcc(scope=("x", "y", "z"), occ=occ))
        assert gac_domain(gcc, budget).domains == gac_domain(alldifferent, budget).domains
