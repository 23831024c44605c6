import pytest

from gac_framework.core import is_subdomain
from gac_framework.engine import (
    gac_domain, gac_domain_via_support, gac_support, gac_support_via_domain, gac_support_via_wipeout, is_it_gac,
    is_it_gac_via_maxgac, max_gac, max_gac_via_support, no_gac_wipeout, no_gac_wipeout_via_support,
)
from gac_framework.harness import reducer_corpus

CORPUS = list(reducer_corpus(seed=11, size=40, max_arity=3, max_domain=3))


def pairs(instance):
    return [(var, value) for var in instance.scope for value in instance.domains[var]]


@pytest.mark.parametrize("instance", CORPUS)
def test_support_engines_agree(instance, budget):
    for var, value in pairs(instance):
        direct = gac_support(instance, var, value, budget)
        assert gac_support_via_wipeout(instance, var, value, budget).answer == direct.answer
        assert gac_support_via_domain(instance, var, value, budget).answer == direct.answer
        if direct.answer:
            assert direct.witness[var] == value


@pytest.mark.parametrize("instance", CORPUS)
def test_question_engines_agree(instance, budget):
    assert no_gac_wipeout_via_support(instance, budget).answer == no_gac_wipeout(instance, budget).answer
    assert is_it_gac_via_maxgac(instance, budget).answer == is_it_gac(instance, budget).answer
    assert gac_domain_via_support(instance, budget).domains == gac_domain(instance, budget).domains


@pytest.mark.parametrize("instance", CORPUS)
def test_max_gac_engines_agree(instance, budget):
    maximal = gac_domain(instance, budget).domains
    for candidate in (maximal, instance.domains):
        assert max_gac_via_support(instance, candidate, budget).answer == max_gac(instance, candidate, budget).answer
    assert max_gac(instance, maximal, budget).answer


@pytest.mark.parametrize("instance", CORPUS)
def test_gac_domain_laws(instance, budget):
    narrowed = gac_domain(instance, budget).domains
    assert is_subdomain(narrowed, instance.domains)
    again = gac_domain(instance.with_domains(narrowed), budget).domains
    assert again == narrowed
    assert is_it_gac(instance.with_domains(narrowed), budget).answer


@pytest.mark.parametrize("instance", CORPUS)
def test_gac_domain_is_maximal(instance, budget):
    narrowed = gac_domain(instance, budget).domains
    for var in instance.scope:
        for value in set(instance.domains[var]) - set(narrowed[var]):
            assert not gac_support(instance, var, value, budget).answer
            restored = instance.with_domains({**narrowed, var: tuple(sorted({*narrowed[var], value}))})
            assert not gac_support(restored, var, value, budget).answer


def test_reducers_share_one_meter(small_table, budget):
    direct = gac_domain(small_table, budget)
    via = gac_domain_via_support(small_table, budget)
    assert via.tuples_explored == direct.tuples_explored == 7
    assert via.engine == "via-support"


def test_support_via_wipeout_keeps_witness(small_table, budget):
    result = gac_support_via_wipeout(small_table, "y", 1, budget)
    assert result.answer
    assert result.witness == {"x": 2, "y": 1}


def test_wipeout_via_support_on_pigeonhole(pigeonhole, budget):
    assert not no_gac_wipeout_via_support(pigeonhole, budget).answer
    assert gac_domain_via_support(pigeonhole, budget).domains == {"X1": (), "X2": ()}
