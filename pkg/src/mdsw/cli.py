"""The mdsw command line: validate | eval | table | wizard | serve.

Exit codes are stable: 0 on success, 1 when --strict evaluation reaches a
verdict that puts the software under the regulation (MD or ACCESSORY), and
2 on usage or input errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .case import CaseError, load_case
from .engine import MissingAnswerError, UnknownDerivedFunctionError, evaluate
from .issues import Severity
from .report import verdict_json, verdict_markdown, verdict_to_dict
from .rulepack import ParseError, Rulebook, parse_rulebook, validate_rulebook
from .table import compile_to_decision_table
from .wizard import WizardAborted, run_wizard

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2


def _fail(message: str) -> "click.exceptions.Exit":
    click.echo(f"error: {message}", err=True)
    return click.exceptions.Exit(EXIT_USAGE)


def _read_rulepack(path: str) -> Rulebook:
    try:
        source = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _fail(f"cannot read rulepack {path}: {exc}")
    try:
        return parse_rulebook(source)
    except ParseError as exc:
        raise _fail(f"{path}: {exc}")


def _validated_rulepack(path: str) -> Rulebook:
    rb = _read_rulepack(path)
    issues = validate_rulebook(rb)
    errors = [i for i in issues if i.severity is Severity.ERROR]
    if errors:
        for issue in errors:
            click.echo(f"{path}: {issue.render()}", err=True)
        raise click.exceptions.Exit(EXIT_USAGE)
    return rb


@click.group()
@click.version_option(package_name="mdsw")
def main() -> None:
    """Qualification and risk classification of software under EU
    medical-device law."""


@main.command()
@click.argument("rulepack", type=click.Path())
def validate(rulepack: str) -> None:
    """Parse and validate a rulepack; exit 0 iff it has no errors."""
    rb = _read_rulepack(rulepack)
    issues = validate_rulebook(rb)
    for issue in issues:
        click.echo(f"{rulepack}: {issue.render()}")
    if any(i.severity is Severity.ERROR for i in issues):
        raise click.exceptions.Exit(EXIT_USAGE)


@main.command(name="eval")
@click.option("--rulepack", required=True, type=click.Path(),
              help="Rulepack file to evaluate against.")
@click.option("--case", "case_path", required=True, type=click.Path(),
              help="Case file (mdsw-case/1 JSON).")
@click.option("--format", "fmt", type=click.Choice(["json", "md"]),
              default="json", show_default=True, help="Output format.")
@click.option("--strict", is_flag=True,
              help="Exit 1 when the verdict is MD or ACCESSORY.")
def eval_case(rulepack: str, case_path: str, fmt: str, strict: bool) -> None:
    """Evaluate one case file to a verdict with its cited trace."""
    rb = _validated_rulepack(rulepack)
    try:
        case = load_case(case_path)
    except OSError as exc:
        raise _fail(f"cannot read case {case_path}: {exc}")
    except CaseError as exc:
        raise _fail(f"{case_path}: {exc}")
    try:
        verdict = evaluate(case, rb)
    except MissingAnswerError as exc:
        raise _fail(f"case is incomplete: {exc} — answer it in the case file "
                    f"or run the wizard")
    except UnknownDerivedFunctionError as exc:
        raise _fail(str(exc))
    except ValueError as exc:
        raise _fail(str(exc))
    if fmt == "json":
        click.echo(verdict_json(verdict), nl=False)
    else:
        click.echo(verdict_markdown(verdict_to_dict(verdict)), nl=False)
    if strict and verdict.qualification.value in ("MD", "ACCESSORY"):
        raise click.exceptions.Exit(EXIT_FINDINGS)


@main.command()
@click.option("--rulepack", required=True, type=click.Path(),
              help="Rulepack file to compile.")
def table(rulepack: str) -> None:
    """Compile a rulepack to its decision table and print it as CSV."""
    rb = _validated_rulepack(rulepack)
    click.echo(compile_to_decision_table(rb).to_csv(), nl=False)


@main.command()
@click.option("--rulepack", required=True, type=click.Path(),
              help="Rulepack file to walk interactively.")
def wizard(rulepack: str) -> None:
    """Run the assessment question loop in the terminal."""
    rb = _validated_rulepack(rulepack)
    try:
        run_wizard(rb, stdin=sys.stdin, echo=click.echo)
    except WizardAborted as exc:
        raise _fail(str(exc))


@main.command()
@click.option("--port", type=int, envvar="MDSW_PORT", default=8000,
              show_default=True, help="Listen port.")
@click.option("--data-dir", envvar="MDSW_DATA_DIR", default="mdsw-data",
              show_default=True, type=click.Path(),
              help="Directory holding session files.")
def serve(port: int, data_dir: str) -> None:
    """Launch the HTTP assessment service."""
    import uvicorn

    from .service import create_app

    root = Path(data_dir)
    try:
        root.mkdir(parents=True, exist_ok=True)
        probe = root / ".write-probe"
        probe.write_text("", encoding="utf-8")
        probe.unlink()
    except OSError as exc:
        raise _fail(f"data directory {data_dir} is not writable: {exc}")
    app = create_app(root)
    try:
        uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")
    except (OSError, SystemExit) as exc:
        raise _fail(f"cannot serve on port {port}: {exc}")


if __name__ == "__main__":
    main()
