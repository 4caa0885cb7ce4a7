"""
Командная строка: verify-weights, euler, sample, uniqueness, render, gallery.

Коды выхода: 0 при успехе, 1 если проверка не прошла, 2 при ошибке входных данных.
"""
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import NoReturn

import click
from pydantic import ValidationError

from .config import Settings, settings
from .core.rational import format_rational
from .core.rng import seeded_rng
from .engine import portraits
from .engine.arrangement import VertexEvaluator, build_dcel, sample_section, vertex_table
from .engine.classify import classify
from .engine.formula import (
    ANCHORS,
    FAMILIES,
    GALLERY,
    check_gallery,
    errata,
    euler_of_summary,
    solve_uniqueness,
)
from .engine.oracle import expected_index, oracle_report
from .engine.render import render_arrangement, render_portrait
from .engine.weights import weight_of
from .exceptions import QuasisectionError
from .logging_setup import setup_logging
from .models.portrait import Portrait, Side
from .schemas.arrangement import ArrangementModel
from .schemas.portrait import PortraitModel
from .schemas.summary import SummaryModel

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_INPUT = 2

# значения по умолчанию из объявления Settings, без QSE_* из окружения
DEFAULTS = {name: field.default for name, field in Settings.model_fields.items()}


def _fail_input(message: str) -> NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INPUT)


def _load(path: Path):
    """Читает JSON и определяет вид входа: arrangement, summary или portrait."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        _fail_input(f"{path}: {e}")
    if not isinstance(data, dict):
        _fail_input(f"{path}: expected a JSON object")
    logger.debug("loading %s with keys %s", path, sorted(data))
    try:
        if "pancakes" in data or "sections" in data:
            return "arrangement", ArrangementModel.model_validate(data).to_domain()
        if "vertices" in data:
            return "summary", SummaryModel.model_validate(data).to_domain()
        if "sectors" in data:
            return "portrait", PortraitModel.model_validate(data).to_domain()
    except ValidationError as e:
        lines = [f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}" for err in e.errors()]
        _fail_input(f"{path}:\n  " + "\n  ".join(lines))
    except QuasisectionError as e:
        _fail_input(f"{path}: {e}")
    _fail_input(f"{path}: not an arrangement, summary or portrait")


def _generator(spec: str) -> Portrait:
    """'I:2,0', 'II:1,R', 'III:0,L', 'whitney:2'."""
    try:
        kind, _, args = spec.partition(":")
        parts = [a.strip() for a in args.split(",") if a.strip()]
        if kind == "I":
            return portraits.type_I(int(parts[0]), int(parts[1]))
        if kind in ("II", "III"):
            make = portraits.type_II if kind == "II" else portraits.type_III
            return make(int(parts[0]), Side(parts[1] if len(parts) > 1 else "R"))
        if kind == "whitney":
            return portraits.whitney(int(parts[0]))
    except (IndexError, ValueError) as e:
        _fail_input(f"bad generator {spec!r}: {e}")
    _fail_input(f"unknown generator {spec!r}")


@click.group()
@click.option("--log-level", default=DEFAULTS["LOG_LEVEL"], show_default=True)
def cli(log_level):
    """Число Эйлера расслоения по особенностям квазисечения."""
    for name, value in DEFAULTS.items():
        setattr(settings, name, value)
    setup_logging(log_level)


@cli.command("verify-weights")
@click.option("--max-nk", default=6, show_default=True, type=click.IntRange(1))
@click.option("--max-r", default=6, show_default=True, type=click.IntRange(0))
@click.option("--cap", default=DEFAULTS["ENUMERATION_CAP"], show_default=True, type=click.IntRange(1))
def verify_weights(max_nk, max_r, cap):
    """Оракул против замкнутых формул на всех канонических портретах."""
    cases: list[tuple[str, Portrait]] = []
    for s in range(1, max_nk + 1):
        cases += [(f"type_I({n},{s - n})", portraits.type_I(n, s - n)) for n in range(s, -1, -1)]
    for r in range(max_r + 1):
        for side in (Side.R, Side.L):
            cases.append((f"type_II({r},{side.value})", portraits.type_II(r, side)))
            cases.append((f"type_III({r},{side.value})", portraits.type_III(r, side)))
    cases += [(f"whitney({r})", portraits.whitney(r)) for r in range(1, min(max_r, 3) + 1)]

    failures = 0
    click.echo(f"{'portrait':<16} {'descriptor':<18} {'oracle':>10} {'formula':>10} {'shortcut':>10}  ok")
    for label, p in cases:
        try:
            report = oracle_report(p, cap=cap)
            descriptor = classify(p)
            formula = weight_of(descriptor)
            mirrored = expected_index(portraits.mirror(p), cap=cap)
        except QuasisectionError as e:
            _fail_input(f"{label}: {e}")
        ok = report.match and report.expected_index == formula and mirrored == -report.expected_index
        failures += not ok
        click.echo(
            f"{label:<16} {str(descriptor):<18} {format_rational(report.expected_index):>10} "
            f"{format_rational(formula):>10} {format_rational(report.shortcut):>10}  {'yes' if ok else 'NO'}"
        )
    click.echo(f"{len(cases) - failures}/{len(cases)} rows match")
    if failures:
        sys.exit(EXIT_FAILURE)


@cli.command()
@click.argument("input_path", type=click.Path(path_type=Path))
def euler(input_path):
    """Число Эйлера по файлу разбиения или сводки."""
    kind, obj = _load(input_path)
    try:
        if kind == "summary":
            value = euler_of_summary(obj)
            click.echo(format_rational(value))
            if value != obj.declared_euler:
                click.echo(f"declared {obj.declared_euler} differs", err=True)
                sys.exit(EXIT_FAILURE)
            return
        if kind == "portrait":
            _fail_input("euler expects an arrangement or a summary")
        dcel = build_dcel(obj)
        rows = vertex_table(obj, dcel)
    except QuasisectionError as e:
        _fail_input(str(e))
    for row in rows:
        x, y = row.point
        click.echo(
            f"v{row.vertex:<3} ({x:.6f}, {y:.6f}) circles {row.circles}  "
            f"{str(row.descriptor):<18} {format_rational(row.weight)}"
        )
    click.echo(format_rational(sum((row.weight for row in rows), Fraction(0))))


@cli.command()
@click.argument("input_path", type=click.Path(path_type=Path))
@click.option("--samples", default=100, show_default=True, type=click.IntRange(0))
@click.option("--seed", default=DEFAULTS["SAMPLE_SEED"], show_default=True, type=int)
def sample(input_path, samples, seed):
    """Случайные сечения: сумма индексов по вершинам всегда 0."""
    kind, spec = _load(input_path)
    if kind != "arrangement":
        _fail_input("sample expects an arrangement")
    try:
        dcel = build_dcel(spec)
        evaluator = VertexEvaluator(spec, dcel)
    except QuasisectionError as e:
        _fail_input(str(e))
    rng = seeded_rng(seed)
    totals = {v.id: 0 for v in dcel.vertices}
    zero = 0
    for _ in range(samples):
        indices = evaluator.indices(sample_section(spec, dcel, rng))
        zero += sum(indices.values()) == 0
        for vid, value in indices.items():
            totals[vid] += value
    click.echo(f"{zero}/{samples} index sums are zero")
    if samples:
        for vid, portrait in evaluator.portraits.items():
            mean = Fraction(totals[vid], samples)
            click.echo(
                f"v{vid:<3} {str(classify(portrait)):<18} mean {format_rational(mean):>12} "
                f"expected {format_rational(expected_index(portrait))}"
            )
    if zero != samples:
        sys.exit(EXIT_FAILURE)


def _names(value: str, known: tuple[str, ...]) -> list[str]:
    if value.strip().lower() in ("", "none"):
        return []
    names = [v.strip() for v in value.split(",") if v.strip()]
    unknown = [n for n in names if n not in known]
    if unknown:
        raise click.BadParameter(f"unknown: {', '.join(unknown)}; choose from {', '.join(known)}")
    return names


@cli.command()
@click.option("--cutoff", default=DEFAULTS["UNIQUENESS_CUTOFF"], show_default=True, type=click.IntRange(4))
@click.option("--families", default=",".join(FAMILIES), show_default=True)
@click.option("--anchors", default=",".join(ANCHORS), show_default=True, help="'none': без якорей")
def uniqueness(cutoff, families, anchors):
    """Решает систему ограничений и сравнивает решение с весами."""
    try:
        family_list = _names(families, FAMILIES)
        anchor_list = _names(anchors, ANCHORS)
    except click.BadParameter as e:
        _fail_input(str(e))
    report = solve_uniqueness(cutoff, family_list, anchor_list)

    click.echo(f"cutoff {cutoff}; families {', '.join(family_list) or '-'}; anchors {', '.join(anchor_list) or '-'}")
    click.echo(f"{len(report.equations)} equations, {len(report.solution or {})} unknowns, rank {report.rank}")
    for eq in report.equations:
        terms = " + ".join(f"{format_rational(c)}·x[{d}]" for d, c in eq.coefficients.items())
        click.echo(f"  {eq.tag}: {terms} = {format_rational(eq.rhs)}")
    click.echo(f"kernel dimension: {report.kernel_dim}")
    for vec in report.kernel:
        click.echo("  kernel: " + ", ".join(f"x[{d}]={format_rational(v)}" for d, v in vec.items()))
    if report.solution is None:
        click.echo("system is inconsistent")
        sys.exit(EXIT_FAILURE)
    determined = set(report.determined)
    for d, value in report.solution.items():
        mark = "" if d in determined else "  (free)"
        click.echo(f"  x[{d}] = {format_rational(value)}   weight {format_rational(weight_of(d))}{mark}")
    for d, got, want in report.mismatches:
        click.echo(f"MISMATCH x[{d}] = {format_rational(got)} != {format_rational(want)}")
    for e in errata():
        click.echo(f"erratum {e.tag}: printed residual {format_rational(e.printed)}, corrected {format_rational(e.corrected)}")

    if report.unique:
        click.echo("unique: solution equals the closed-form weights")
        return
    if report.mismatches:
        sys.exit(EXIT_FAILURE)
    if "ANCHOR1" in anchor_list:
        click.echo("underdetermined")
        sys.exit(EXIT_FAILURE)
    click.echo(f"WARNING: underdetermined without anchors (kernel dimension {report.kernel_dim})")


@cli.command()
@click.argument("input_path", required=False, type=click.Path(path_type=Path))
@click.option("--generator", default=None, help="Канонический портрет: I:2,0 | II:1,R | III:1,L | whitney:2")
@click.option("--out", "out_path", default=None, type=click.Path(path_type=Path))
def render(input_path, generator, out_path):
    """SVG портрета или разбиения."""
    if generator:
        svg = render_portrait(_generator(generator))
    elif input_path:
        kind, obj = _load(input_path)
        try:
            if kind == "portrait":
                svg = render_portrait(portraits.ensure_valid(obj))
            elif kind == "arrangement":
                svg = render_arrangement(obj)
            else:
                _fail_input("render expects a portrait or an arrangement")
        except QuasisectionError as e:
            _fail_input(str(e))
    else:
        _fail_input("give an input file or --generator")
    if out_path:
        out_path.write_text(svg, encoding="utf-8")
    else:
        click.echo(svg, nl=False)


@cli.group("gallery")
def gallery_group():
    """Примеры квазисечений с известным числом Эйлера."""


@gallery_group.command("list")
def gallery_list():
    for name in sorted(GALLERY):
        click.echo(name)


@gallery_group.command("check")
def gallery_check():
    failures = 0
    for result in check_gallery():
        params = ",".join(f"{k}={v}" for k, v in result.params.items())
        mark = "ok" if result.ok else "FAIL"
        click.echo(
            f"{result.summary.name}({params}): {format_rational(result.computed)} "
            f"declared {result.summary.declared_euler}  {mark}"
        )
        failures += not result.ok
    if failures:
        sys.exit(EXIT_FAILURE)


def main():
    cli()


if __name__ == "__main__":
    main()
