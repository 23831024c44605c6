import json

import pytest
from click.testing import CliRunner

from gac_framework.core import InstanceParseError
from gac_framework.gadgets import Cnf3, write_cnf, write_graph
from gac_framework.harness.cli import cli, metadata_path, read_candidate


@pytest.fixture
def runner():
    return CliRunner()


def last_record(result):
    return json.loads(result.stdout.strip().splitlines()[-1])


class TestQuestion:
    def test_no_gac_wipeout(self, runner, write_instance, small_table):
        path = write_instance(small_table)
        result = runner.invoke(cli, ["question", str(path), "--q", "no-gac-wipeout"])
        assert result.exit_code == 0
        record = last_record(result)
        assert record["answer"] is True
        assert record["witness"] == {"x": 2, "y": 1}
        assert record["tuplesExplored"] == 3

    def test_gac_domain_reports_domains(self, runner, write_instance, disjoint_instance):
        path = write_instance(disjoint_instance)
        result = runner.invoke(cli, ["question", str(path), "--q", "gac-domain", "--engine", "via-support"])
        record = last_record(result)
        assert record["domains"]["Y1"] == [2]
        assert record["engine"] == "via-support"

    def test_is_it_gac_on_worked_example(self, runner, write_instance, disjoint_instance):
        result = runner.invoke(cli, ["question", str(write_instance(disjoint_instance)), "--q", "is-it-gac"])
        assert result.exit_code == 0
        assert last_record(result)["answer"] is False

    def test_gac_support(self, runner, write_instance, small_table):
        path = str(write_instance(small_table))
        result = runner.invoke(cli, ["question", path, "--q", "gac-support", "--var", "x", "--value", "1"])
        assert last_record(result)["answer"] is False
        missing = runner.invoke(cli, ["question", path, "--q", "gac-support"])
        assert missing.exit_code == 2
        assert "variable and a value" in last_record(missing)["error"]

    def test_max_gac_candidate(self, runner, write_instance, small_table, tmp_path):
        candidate = tmp_path / "candidate.json"
        candidate.write_text(json.dumps({"x": [2]}), encoding="utf-8")
        result = runner.invoke(cli, ["question", str(write_instance(small_table)), "--q", "max-gac",
                                     "--candidate", str(candidate)])
        assert last_record(result)["answer"] is True

    def test_budget_exhaustion(self, runner, write_instance, small_table):
        result = runner.invoke(cli, ["--budget", "1", "question", str(write_instance(small_table)), "--q", "is-it-gac"])
        assert result.exit_code == 3
        record = last_record(result)
        assert record["answer"] is None
        assert record["tuplesExplored"] == 1

    def test_parse_error(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"variables": [', encoding="utf-8")
        result = runner.invoke(cli, ["question", str(path), "--q", "is-it-gac"])
        assert result.exit_code == 2
        assert last_record(result)["errorType"] == "InstanceParseError"

    def test_text_format(self, runner, write_instance, small_table):
        result = runner.invoke(cli, ["--format", "text", "question", str(write_instance(small_table)),
                                     "--q", "no-gac-wipeout"])
        assert "answer=true" in result.stdout


class TestPropagate:
    def test_alldifferent(self, runner, write_instance, pigeonhole):
        result = runner.invoke(cli, ["propagate", str(write_instance(pigeonhole))])
        assert result.exit_code == 0
        record = last_record(result)
        assert record["answer"] is False
        assert record["wipeout"] is True
        assert record["engine"] == "alldifferent"

    def test_repeated_scope_is_unsupported(self, runner, write_instance):
        path = write_instance({
            "variables": [{"id": "x", "domain": [1, 2]}],
            "constraint": {"kind": "gcc", "scope": ["x", "x"], "occ": [{"value": 1, "low": 0, "high": 1}]},
        })
        result = runner.invoke(cli, ["propagate", str(path)])
        assert result.exit_code == 4
        assert last_record(result)["errorType"] == "UnsupportedInstanceError"


class TestGadget:
    @pytest.fixture
    def source(self, tmp_path):
        def write(cnf, name="formula.cnf"):
            path = tmp_path / name
            path.write_text(write_cnf(cnf), encoding="utf-8")
            return str(path)
        return write

    def test_verify_agrees(self, runner, source, f1):
        result = runner.invoke(cli, ["gadget", source(f1), "--family", "nvalue", "--verify"])
        assert result.exit_code == 0
        record = last_record(result)
        assert record["verification"]["agree"] is True
        assert record["verification"]["certificate_valid"] is True
        assert record["instance"]["constraint"]["kind"] == "nvalue"

    def test_asks_the_gadget_question(self, runner, source, u1):
        result = runner.invoke(cli, ["gadget", source(u1), "--family", "support"])
        record = last_record(result)
        assert record["question"] == "gac-support"
        assert record["answer"] is False

    def test_output_and_metadata(self, runner, source, f1, tmp_path):
        output = tmp_path / "out.json"
        result = runner.invoke(cli, ["gadget", source(f1), "--family", "disjoint", "--output", str(output)])
        assert result.exit_code == 0
        assert output.exists()
        metadata = json.loads((tmp_path / "out.meta.json").read_text(encoding="utf-8"))
        assert metadata["family"] == "disjoint"
        assert metadata["question"] == "no-gac-wipeout"
        question = runner.invoke(cli, ["question", str(output), "--q", "no-gac-wipeout"])
        assert last_record(question)["answer"] is True

    def test_precondition_failure(self, runner, source, f2):
        result = runner.invoke(cli, ["gadget", source(f2), "--family", "card"])
        assert result.exit_code == 2
        assert last_record(result)["errorType"] == "GadgetError"

    def test_parameter_for_another_family(self, runner, source, f1):
        result = runner.invoke(cli, ["gadget", source(f1), "--family", "nvalue", "--cardinality", "3"])
        assert result.exit_code == 2

    def test_graph_source(self, runner, tmp_path, k4):
        path = tmp_path / "k4.col"
        path.write_text(write_graph(k4), encoding="utf-8")
        result = runner.invoke(cli, ["gadget", str(path), "--family", "cardpath-3col", "--verify"])
        assert result.exit_code == 0
        record = last_record(result)
        assert record["answer"] is False
        assert record["verification"]["oracle_answer"] is False
        assert record["verification"]["outcome"] == "agree"
        assert record["instance"]["constraint"]["kind"] == "cardpath"

    def test_missed_model_is_not_a_failure(self, runner, source):
        result = runner.invoke(cli, ["gadget", source(Cnf3(2, ((1, 2, 2), (-1, -1, -1), (-1, -1, -1)))),
                                     "--family", "atmost1", "--verify"])
        assert result.exit_code == 0
        assert last_record(result)["verification"]["outcome"] == "incomplete"

    def test_source_error(self, runner, tmp_path):
        path = tmp_path / "bad.cnf"
        path.write_text("p cnf 3 1\n1 2 0\n", encoding="utf-8")
        result = runner.invoke(cli, ["gadget", str(path), "--family", "nvalue"])
        assert result.exit_code == 2
        assert last_record(result)["errorType"] == "SourceError"


class TestSuite:
    def test_worked_examples(self, runner):
        result = runner.invoke(cli, ["suite", "paper-examples"])
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.stdout.strip().splitlines()]
        assert all(line["outcome"] == "agree" for line in lines[:-1])
        assert lines[-1]["summary"]["passed"] is True

    def test_gadget_families(self, runner):
        result = runner.invoke(cli, ["suite", "gadgets", "--family", "cardpath-3col", "--size", "5"])
        assert result.exit_code == 0
        lines = [json.loads(line) for line in result.stdout.strip().splitlines()]
        assert {line["name"].split("/")[1] for line in lines[:-1]} == {"cardpath-3col"}
        assert lines[-2]["outcome"] == "covered"
        assert lines[-1]["summary"]["tallies"]["disagree"] == 0

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["suite", "nope"])
        assert result.exit_code == 2


def test_read_candidate(tmp_path):
    path = tmp_path / "candidate.json"
    path.write_text(json.dumps({"x": [1, 2]}), encoding="utf-8")
    assert read_candidate(str(path)) == {"x": (1, 2)}
    path.write_text(json.dumps({"x": 1}), encoding="utf-8")
    with pytest.raises(InstanceParseError):
        read_candidate(str(path))


def test_metadata_path(tmp_path):
    assert metadata_path(tmp_path / "out.json") == tmp_path / "out.meta.json"
