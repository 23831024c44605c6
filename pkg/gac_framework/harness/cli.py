import json
from pathlib import Path

import click

from ..core import InstanceParseError, parse_instance, serialize_instance
from ..engine import ENGINES, QUESTIONS, ask
from ..gadgets import build_gadget, gadgets, parse_source, verify_gadget
from ..propagators import propagate, propagators
from ..utils.config import get_settings
from ..utils.logging import configure_logging
from .context import RunContext
from .reports import RunReport, render
from .runner import EXIT_BUDGET, EXIT_FAILURE, Runner
from .suites import SCALES, SuiteOptions, run_suite, suites


def read_candidate(path: str) -> dict:
    """A candidate domain file: a JSON object from variable id to a list of values"""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict) or not all(isinstance(values, list) for values in data.values()):
        raise InstanceParseError("candidate must map variable ids to value lists", path)
    return {var: tuple(values) for var, values in data.items()}


def metadata_path(output: Path) -> Path:
    """out.json -> out.meta.json"""
    return output.with_name(f"{output.stem}.meta.json")


def run_question(run_context: RunContext, instance_path: str, question: str, engine: str,
                 var=None, value=None, candidate_path=None) -> RunReport:
    instance = parse_instance(Path(instance_path).read_bytes())
    candidate = read_candidate(candidate_path) if candidate_path else None
    result = ask(instance, question, run_context.get_budget(), engine=engine, var=var, value=value,
                 candidate=candidate)
    extra = {"args": {"instance": instance_path, "engine": engine}}
    if result.domains is not None:
        extra["domains"] = {var: list(values) for var, values in result.domains.items()}
    return RunReport(command="question", question=question, answer=result.answer, witness=result.witness,
                     tuples_explored=result.tuples_explored, engine=result.engine, extra=extra)


def run_propagate(run_context: RunContext, instance_path: str, propagator=None) -> RunReport:
    instance = parse_instance(Path(instance_path).read_bytes())
    outcome = propagate(instance, propagator)
    extra = outcome.to_dict()
    extra["args"] = {"instance": instance_path}
    return RunReport(command="propagate", question="gac-domain", answer=not outcome.wipeout,
                     engine=outcome.propagator, extra=extra)


def run_gadget(run_context: RunContext, family: str, source_path: str, output=None, verify: bool = False,
               **params) -> RunReport:
    params = {key: value for key, value in params.items() if value is not None}
    accepted = {"cardinality": "atmost1", "target": "scalarproduct"}
    for key in params:
        if accepted[key] != family:
            raise ValueError(f"--{key} applies to the {accepted[key]} family only")

    source = parse_source(gadgets[family]["source"], Path(source_path).read_text(encoding="utf-8"))
    gadget = build_gadget(family, source, **params)
    extra = {"args": {"family": family, "source": source_path}, "metadata": gadget.metadata()}

    if output:
        output = Path(output)
        output.write_bytes(serialize_instance(gadget.instance))
        metadata_path(output).write_text(json.dumps(gadget.metadata(), sort_keys=True, indent=2) + "\n",
                                         encoding="utf-8")
        extra["written"] = [str(output), str(metadata_path(output))]
    else:
        extra["instance"] = gadget.to_dict()

    budget = run_context.get_budget()
    if not verify:
        result = gadget.ask(budget)
        return RunReport(command="gadget", question=gadget.question, answer=result.answer, witness=result.witness,
                         tuples_explored=result.tuples_explored, engine=result.engine, extra=extra)

    verification = verify_gadget(gadget, source, budget)
    extra["verification"] = verification.to_dict()
    report = RunReport(command="gadget", question=gadget.question, answer=verification.engine_answer,
                       tuples_explored=verification.tuples_explored, extra=extra)
    if verification.error is not None:
        report.error, report.exit_code = verification.error, EXIT_BUDGET
    elif verification.outcome == "disagree":
        report.exit_code = EXIT_FAILURE
    return report


def run_suite_command(run_context: RunContext, name: str, scale: str, size=None, families=None) -> RunReport:
    settings = run_context.get_settings()
    options = SuiteOptions(
        seed=run_context.get_seed(),
        scale=scale,
        size=size,
        budget=run_context.get_budget(),
        max_arity=settings.corpus_max_arity,
        max_domain=settings.corpus_max_domain,
        corpus_size=settings.corpus_size,
        families=tuple(families) if families else None,
    )
    report = run_suite(name, options)
    run_context.set("suite_report", report)
    return RunReport(command="suite", question=None, answer=report.passed, engine=name,
                     extra={"summary": report.summary()}, exit_code=0 if report.passed else EXIT_FAILURE)


def _emit(ctx: click.Context, report: RunReport):
    runner: Runner = ctx.obj
    click.echo(render(report.to_dict(), runner.run_context.get_format()))
    ctx.exit(report.exit_code)


@click.group()
@click.option("--budget", type=click.IntRange(min=1), default=None,
              help="Maximum tuples one question may enumerate (default from GAC_BUDGET, 10000000).")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for suite corpora.")
@click.option("--format", "output_format", type=click.Choice(["json", "text"]), default="json", show_default=True)
@click.option("--verbose", is_flag=True, help="Log progress to stderr.")
@click.pass_context
def cli(ctx: click.Context, budget, seed, output_format, verbose):
    """Generalized arc consistency questions, propagators and reduction gadgets."""
    settings = get_settings()
    configure_logging("DEBUG" if verbose else settings.log_level)
    runner = Runner()
    runner.set_context(RunContext(settings, budget, seed, output_format, verbose))
    ctx.obj = runner


@cli.command()
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--q", "question", type=click.Choice(QUESTIONS), required=True, help="Question to answer.")
@click.option("--var", default=None, help="Variable for gac-support.")
@click.option("--value", type=int, default=None, help="Value for gac-support.")
@click.option("--candidate", "candidate_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Candidate domain file for max-gac.")
@click.option("--engine", type=click.Choice(sorted({engine for _, engine in ENGINES})), default="generic",
              show_default=True)
@click.pass_context
def question(ctx, instance_path, question, var, value, candidate_path, engine):
    """Answer one of the five questions on an instance file."""
    args = {"instance_path": instance_path, "question": question, "engine": engine, "var": var, "value": value,
            "candidate_path": candidate_path}
    _emit(ctx, ctx.obj.execute("question", run_question, args))


@cli.command("propagate")
@click.argument("instance_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--propagator", type=click.Choice(sorted(propagators)), default=None,
              help="Defaults to the first propagator for the constraint kind.")
@click.pass_context
def propagate_command(ctx, instance_path, propagator):
    """Run a specialized propagator on an instance file."""
    _emit(ctx, ctx.obj.execute("propagate", run_propagate,
                               {"instance_path": instance_path, "propagator": propagator}))


@cli.command()
@click.argument("source_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--family", type=click.Choice(sorted(gadgets)), required=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Write the instance here and its metadata next to it.")
@click.option("--verify", is_flag=True, help="Compare the engine's answer with the source oracle.")
@click.option("--cardinality", type=click.IntRange(min=2), default=None, help="Set cardinality for atmost1.")
@click.option("--target", type=click.IntRange(min=1), default=None, help="Scalar product target for scalarproduct.")
@click.pass_context
def gadget(ctx, source_path, family, output, verify, cardinality, target):
    """Build a reduction gadget from a source problem file."""
    args = {"family": family, "source_path": source_path, "output": output, "verify": verify,
            "cardinality": cardinality, "target": target}
    _emit(ctx, ctx.obj.execute("gadget", run_gadget, args))


@cli.command()
@click.argument("name", type=click.Choice(sorted(suites)))
@click.option("--scale", type=click.Choice(SCALES), default="small", show_default=True)
@click.option("--size", type=click.IntRange(min=1), default=None, help="Cases per corpus stream.")
@click.option("--family", "families", type=click.Choice(sorted(gadgets)), multiple=True,
              help="Restrict the gadgets suite to these families (repeatable).")
@click.pass_context
def suite(ctx, name, scale, size, families):
    """Run an acceptance suite and stream one record per case."""
    runner: Runner = ctx.obj
    report = runner.execute("suite", run_suite_command,
                            {"name": name, "scale": scale, "size": size, "families": families})
    suite_report = runner.run_context.get("suite_report")
    if suite_report is not None:
        for case in suite_report.cases:
            click.echo(render(case, runner.run_context.get_format()))
    _emit(ctx, report)


def main():
    cli(prog_name="gac-framework")


if __name__ == "__main__":
    main()
