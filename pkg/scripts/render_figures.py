import os
import sys
from pathlib import Path

# Add the project root to the Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.arithmetic import parse
from core.packing import MaxGeneration
from core.render import RenderSpec, enclosing_window, write_svg
from utils.config import settings
from utils.logging_config import setup_logging

# One representative per self-similar class: periods (1), (2), (3) and (1, 2)
FIGURES = {
    "class_1": "(1+sqrt(5))/2",
    "class_2": "1+sqrt(2)",
    "class_3": "(3+sqrt(13))/2",
    "class_1_2": "(1+sqrt(3))/2",
}


def figure_spec(text: str, generations: int = 8, trace_states: int = 8) -> RenderSpec:
    """
    Builds the render spec for one figure.

    The window encloses every circle up to the requested generation, so the
    picture holds the whole enumeration rather than the default strip.
    """
    alpha = parse(text)
    return RenderSpec(
        alpha=alpha,
        window=enclosing_window(alpha, generations),
        depth=MaxGeneration(generations),
        width_px=settings.RENDER_WIDTH_PX,
        highlight_trace=trace_states,
        include_offline_gasket=True,
        significant_digits=settings.RENDER_SIGNIFICANT_DIGITS,
        trace_fill=settings.TRACE_FILL,
    )


def render_figures(out_dir: Path, generations: int = 8, trace_states: int = 8) -> list[Path]:
    """
    Renders each class to an SVG with the first replacement states shaded.
    """
    written = []
    for name, text in FIGURES.items():
        spec = figure_spec(text, generations, trace_states)
        path = out_dir / f"{name}.svg"
        size = write_svg(spec, path)
        print(f"{text}: {size} bytes -> {path}")
        written.append(path)
    return written


if __name__ == "__main__":
    setup_logging(settings.LOG_LEVEL, settings.LOG_FILE)
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("figures")
    render_figures(target)
