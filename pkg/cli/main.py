"""
Command-line front door for the half-plane packing engines
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click
from pydantic import BaseModel

from cli.schemas import (
    CfOutput,
    CircleRecord,
    ClassOutput,
    ConvergentRecord,
    ConvergentsOutput,
    PellRecord,
    RenderOutput,
    ReplaceOutput,
    ReplaceRow,
    SimilarOutput,
    StepsOutput,
    SymmOutput,
)
from core.arithmetic import ExactReal, format_exact, parse
from core.contfrac import StripClass, cf_expand, convergents, format_cf, step_trace
from core.errors import HalfPlaneError, NumberSyntaxError
from core.packing import Circle, MaxGeneration, MinRadius, enumerate_circles, make_packing
from core.render import RenderSpec, render_svg
from core.replacement import replace_trace
from core.symmetry import (
    SymmKind,
    class_of,
    orientation_reversing_exists,
    similar,
    similarity_orientations,
    symm_group,
)
from utils.config import settings
from utils.logging_config import setup_logging

logger = logging.getLogger(__name__)


@dataclass
class CliOptions:
    as_json: bool = False
    max_steps: Optional[int] = None
    out: Optional[Path] = None
    unsafe_approx: bool = False
    digits: Optional[int] = None


class ExactRealType(click.ParamType):
    """Numbers in the exact grammar; decimals only under --unsafe-approx"""

    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, ExactReal):
            return value
        group = ctx.find_object(CliOptions) if ctx is not None else None
        params = ctx.params if ctx is not None else {}
        unsafe = bool(params.get("unsafe_approx")) or (group is not None and group.unsafe_approx)
        digits = params.get("digits") or (group.digits if group is not None else None) or settings.APPROX_DIGITS
        try:
            return parse(value, allow_decimal=unsafe, digits=digits)
        except HalfPlaneError as e:
            # malformed radicands and zero denominators are input errors too
            self.fail(str(e), param, ctx)


EXACT = ExactRealType()


def shared_options(f):
    """Output options accepted both before and after the subcommand name"""
    f = click.option("--json", "as_json", is_flag=True, help="Machine-readable JSON output")(f)
    f = click.option("--max-steps", type=click.IntRange(min=0), default=None, help="Step limit")(f)
    f = click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                     help="Write output to a file")(f)
    f = click.option("--unsafe-approx", is_flag=True, is_eager=True,
                     help="Accept decimals, snapped to a nearby fraction")(f)
    f = click.option("--digits", type=click.IntRange(min=1), default=None, is_eager=True,
                     help="Snap decimals to denominators up to 10**K")(f)
    return f


def _resolve(shared: dict) -> CliOptions:
    group = click.get_current_context().find_object(CliOptions) or CliOptions()
    return CliOptions(
        as_json=shared.get("as_json") or group.as_json,
        max_steps=shared.get("max_steps") if shared.get("max_steps") is not None else group.max_steps,
        out=shared.get("out") or group.out,
        unsafe_approx=shared.get("unsafe_approx") or group.unsafe_approx,
        digits=shared.get("digits") or group.digits,
    )


def _max_steps(opts: CliOptions) -> int:
    return opts.max_steps if opts.max_steps is not None else settings.DEFAULT_MAX_STEPS


def _emit(opts: CliOptions, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if opts.out is not None:
        opts.out.parent.mkdir(parents=True, exist_ok=True)
        opts.out.write_text(text, encoding="utf-8", newline="\n")
        logger.info(f"wrote {opts.out}")
    else:
        click.echo(text, nl=False)


def _emit_model(opts: CliOptions, model: BaseModel, plain: str) -> None:
    _emit(opts, model.model_dump_json(by_alias=True) if opts.as_json else plain)


def _class_value(key):
    return key.value if isinstance(key, StripClass) else list(key)


def _class_text(key) -> str:
    return key.value if isinstance(key, StripClass) else f"({', '.join(map(str, key))})"


def circle_record(circle: Circle) -> CircleRecord:
    return CircleRecord(
        label=circle.label.as_list() if circle.label is not None else None,
        sqrt_curv=format_exact(circle.sqrt_curv) if circle.sqrt_curv is not None else None,
        curv=format_exact(circle.curv),
        curv_f64=float(circle.curv),
        center=[float(v) for v in circle.center] if circle.center is not None else None,
        radius=float(circle.radius) if circle.radius is not None else None,
        line_height=float(circle.line_height) if circle.line_height is not None else None,
        generation=circle.generation,
    )


class EngineGroup(click.Group):
    """Maps engine errors onto exit codes: syntax errors 2, everything else 1"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except NumberSyntaxError as e:
            raise click.UsageError(str(e), ctx) from e
        except HalfPlaneError as e:
            logger.debug(f"{type(e).__name__}: {e}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)


@click.group(cls=EngineGroup)
@shared_options
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Logging level (stderr)")
@click.pass_context
def cli(ctx, log_level, **shared):
    """Exact continued fractions, half-plane Apollonian packings and their symmetries."""
    setup_logging(log_level or settings.LOG_LEVEL, settings.LOG_FILE)
    ctx.obj = CliOptions(
        as_json=bool(shared["as_json"]),
        max_steps=shared["max_steps"],
        out=shared["out"],
        unsafe_approx=bool(shared["unsafe_approx"]),
        digits=shared["digits"],
    )


@cli.command()
@click.argument("alpha", type=EXACT)
@shared_options
def cf(alpha: ExactReal, **shared):
    """Continued fraction expansion of ALPHA."""
    opts = _resolve(shared)
    logger.info(f"cf {alpha}")
    e = cf_expand(alpha)
    text = format_cf(e)
    model = CfOutput(
        alpha=format_exact(alpha),
        head=list(e.head),
        period=list(e.period) if e.period is not None else None,
        text=text,
    )
    _emit_model(opts, model, text)


@cli.command()
@click.argument("alpha", type=EXACT)
@shared_options
def steps(alpha: ExactReal, **shared):
    """Letters A/B/C of the unbatched continued fraction algorithm."""
    opts = _resolve(shared)
    logger.info(f"steps {alpha}")
    trace = step_trace(alpha, _max_steps(opts))
    model = StepsOutput(alpha=format_exact(alpha), trace=trace, halted=trace.endswith("C"))
    _emit_model(opts, model, trace)


@cli.command("convergents")
@click.argument("alpha", type=EXACT)
@click.argument("n", type=click.IntRange(min=1))
@shared_options
def convergents_command(alpha: ExactReal, n: int, **shared):
    """First N convergents p/q of ALPHA."""
    opts = _resolve(shared)
    logger.info(f"convergents {alpha} {n}")
    found = convergents(cf_expand(alpha), n - 1)
    model = ConvergentsOutput(
        alpha=format_exact(alpha),
        convergents=[ConvergentRecord(index=c.index, p=c.p, q=c.q) for c in found],
    )
    plain = "\n".join(f"{c.index}\t{c.p}/{c.q}" for c in found)
    _emit_model(opts, model, plain)


@cli.command()
@click.argument("alpha", type=EXACT)
@click.option("--generations", type=click.IntRange(min=0), default=None, help="Generation bound")
@click.option("--min-radius", type=EXACT, default=None, help="Radius bound (replaces --generations)")
@click.option("--window", type=(EXACT, EXACT), default=None, help="Abscissa window LO HI")
@click.option("--offline", is_flag=True, help="Also fill interstices away from the base line")
@shared_options
def circles(alpha: ExactReal, generations, min_radius, window, offline, **shared):
    """Circles of P_alpha, one JSON record per line under --json."""
    opts = _resolve(shared)
    if generations is not None and min_radius is not None:
        raise click.UsageError("--generations and --min-radius are exclusive")
    bound = MinRadius(min_radius) if min_radius is not None else MaxGeneration(
        generations if generations is not None else settings.DEFAULT_GENERATIONS)
    logger.info(f"circles {alpha} {bound}")
    found = enumerate_circles(make_packing(alpha), bound, window, include_offline=offline,
                              limit=settings.MAX_ENUMERATED_CIRCLES)
    if opts.as_json:
        _emit(opts, "\n".join(circle_record(c).model_dump_json() for c in found))
    else:
        _emit(opts, "\n".join(f"{c.generation}\t{c}" for c in found))


@cli.command("similar")
@click.argument("alpha", type=EXACT)
@click.argument("beta", type=EXACT)
@shared_options
def similar_command(alpha: ExactReal, beta: ExactReal, **shared):
    """Decide whether P_alpha and P_beta are similar, with a witness matrix."""
    opts = _resolve(shared)
    logger.info(f"similar {alpha} {beta}")
    result = similar(alpha, beta)
    orientations = similarity_orientations(alpha, beta)
    model = SimilarOutput(
        alpha=format_exact(alpha),
        beta=format_exact(beta),
        similar=result.similar,
        witness=result.witness.as_lists() if result.witness is not None else None,
        det=result.det,
        orientations=orientations,
    )
    if result.similar:
        plain = f"similar: yes\nwitness: {result.witness} (det {result.det})\norientations: {orientations.value}"
    else:
        plain = "similar: no"
    _emit_model(opts, model, plain)


@cli.command()
@click.argument("alpha", type=EXACT)
@shared_options
def symm(alpha: ExactReal, **shared):
    """Self-similarity group of P_alpha."""
    opts = _resolve(shared)
    logger.info(f"symm {alpha}")
    description = symm_group(alpha)
    reversing = orientation_reversing_exists(alpha)
    key = class_of(alpha)
    generator = description.generator
    model = SymmOutput(
        kind=description.kind,
        generator=generator.as_lists() if generator is not None else None,
        det=generator.det if generator is not None else None,
        scale_sq=format_exact(description.scale_sq) if description.scale_sq is not None else None,
        pell=PellRecord(**description.pell.as_dict()) if description.pell is not None else None,
        orientation_reversing=reversing,
        class_=_class_value(key),
    )
    if description.kind is SymmKind.STRIP:
        lines = ["group: D_inf x Z/2 (strip)"]
    else:
        lines = [
            "group: Z (cyclic)",
            f"generator: {generator} (det {generator.det})",
            f"scale_sq: {format_exact(description.scale_sq)}",
            f"pell: x={description.pell.x} y={description.pell.y} rhs={description.pell.rhs}",
        ]
    lines.append(f"orientation-reversing: {'true' if reversing else 'false'}")
    lines.append(f"class: {_class_text(key)}")
    _emit_model(opts, model, "\n".join(lines))


@cli.command("class")
@click.argument("alpha", type=EXACT)
@shared_options
def class_command(alpha: ExactReal, **shared):
    """Similarity class of P_alpha: the least rotation of the period, or strip."""
    opts = _resolve(shared)
    key = class_of(alpha)
    _emit_model(opts, ClassOutput(alpha=format_exact(alpha), class_=_class_value(key)), _class_text(key))


@cli.command()
@click.argument("alpha", type=EXACT)
@shared_options
def replace(alpha: ExactReal, **shared):
    """Circle replacement trace: n STEP x_label y_label ratio_exact ratio_f64."""
    opts = _resolve(shared)
    logger.info(f"replace {alpha}")
    letters, states = replace_trace(make_packing(alpha), _max_steps(opts))
    rows = [
        ReplaceRow(
            n=state.step_index,
            step=letters[i] if i < len(letters) else None,
            x_label=state.x_label.as_list(),
            y_label=state.y_label.as_list(),
            ratio_exact=format_exact(state.ratio),
            ratio_f64=float(state.ratio),
        )
        for i, state in enumerate(states)
    ]
    plain = "\n".join(
        f"{r.n}\t{r.step or '-'}\t{s.x_label}\t{s.y_label}\t{r.ratio_exact}\t{r.ratio_f64!r}"
        for r, s in zip(rows, states)
    )
    _emit_model(opts, ReplaceOutput(alpha=format_exact(alpha), trace=letters, rows=rows), plain)


@cli.command()
@click.argument("alpha", type=EXACT)
@click.option("--generations", type=click.IntRange(min=0), default=None, help="Generation bound")
@click.option("--min-radius", type=EXACT, default=None, help="Radius bound (replaces --generations)")
@click.option("--window", type=(EXACT, EXACT), default=None, help="Abscissa window LO HI")
@click.option("--width", type=click.IntRange(min=1), default=None, help="Width in pixels")
@click.option("--trace", "highlight", type=click.IntRange(min=0), default=None,
              help="Shade the circles of the first K replacement states")
@click.option("--no-offline", is_flag=True, help="Only circles tangent to the base line")
@shared_options
def render(alpha: ExactReal, generations, min_radius, window, width, highlight, no_offline, **shared):
    """SVG picture of P_alpha (stdout unless --out)."""
    opts = _resolve(shared)
    if generations is not None and min_radius is not None:
        raise click.UsageError("--generations and --min-radius are exclusive")
    if window is not None and not window[0] < window[1]:
        raise click.BadParameter("window must satisfy LO < HI", param_hint="--window")
    bound = MinRadius(min_radius) if min_radius is not None else MaxGeneration(
        generations if generations is not None else settings.DEFAULT_GENERATIONS)
    spec = RenderSpec(
        alpha=alpha,
        window=window,
        depth=bound,
        width_px=width or settings.RENDER_WIDTH_PX,
        highlight_trace=highlight,
        include_offline_gasket=not no_offline,
        significant_digits=settings.RENDER_SIGNIFICANT_DIGITS,
        trace_fill=settings.TRACE_FILL,
    )
    logger.info(f"render {alpha} {bound}")
    text = render_svg(spec)
    elements = text.count("<circle") + text.count("<line")
    if opts.out is None:
        click.echo(text, nl=False)
        return
    _emit(CliOptions(out=opts.out), text)
    if opts.as_json:
        model = RenderOutput(alpha=format_exact(alpha), out=str(opts.out), elements=elements,
                             bytes=len(text.encode("utf-8")))
        click.echo(model.model_dump_json())
    else:
        click.echo(f"wrote {elements} elements to {opts.out}")


def main() -> None:
    cli(prog_name="halfplane")


if __name__ == "__main__":
    main()
