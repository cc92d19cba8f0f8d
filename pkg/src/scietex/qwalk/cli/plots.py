"""
SVG figures.

Figures are drawn on a bare `matplotlib.figure.Figure` (no pyplot state, no GUI backend) and
rendered to SVG text with a fixed hash salt and without a date stamp, so identical inputs give
identical files. The run metadata is inserted as an XML comment after the XML declaration.

Functions:
    - distribution_svg: Histogram of a position distribution.
    - spectrum_svg: Eigenvalues on the unit circle with the band arcs shaded.
"""

import io
import json
from typing import Any

import numpy as np
from matplotlib import rc_context
from matplotlib.figure import Figure

from ..base.phase import arc_length
from ..spectra.classify import SpectrumLabel, SpectrumReport

_SVG_RC = {"svg.hashsalt": "scietex.qwalk", "svg.fonttype": "none"}

_LABEL_STYLE = {
    SpectrumLabel.BAND_EXTENDED: ("tab:blue", "o", 12),
    SpectrumLabel.BAND_LOCALIZED_EMBEDDED: ("tab:red", "*", 90),
    SpectrumLabel.GAP_DISCRETE: ("tab:green", "D", 30),
    SpectrumLabel.NEAR_THRESHOLD: ("tab:orange", "s", 20),
    SpectrumLabel.NON_UNIMODULAR: ("tab:gray", "x", 16),
}


def _comment(metadata: dict[str, Any]) -> str:
    text = json.dumps(metadata, sort_keys=False, separators=(", ", ": "))
    return "<!-- " + text.replace("--", "- -") + " -->\n"


def _render(fig: Figure, metadata: dict[str, Any]) -> str:
    buffer = io.StringIO()
    with rc_context(_SVG_RC):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    svg = buffer.getvalue()
    head, sep, rest = svg.partition("?>\n")
    if not sep:
        return _comment(metadata) + svg
    return head + sep + _comment(metadata) + rest


def distribution_svg(distribution: dict[int, float], title: str, metadata: dict[str, Any]) -> str:
    """
    Bar chart of a position distribution ``P(X_t = x)``.

    Args:
        distribution (dict[int, float]): Probability by site.
        title (str): Figure title.
        metadata (dict[str, Any]): Run metadata for the XML comment.

    Returns:
        str: SVG document.
    """
    sites = np.array(sorted(distribution), dtype=np.int64)
    probs = np.array([distribution[int(x)] for x in sites], dtype=np.float64)
    fig = Figure(figsize=(7.0, 4.0))
    ax = fig.add_subplot()
    ax.bar(sites, probs, width=1.0, color="tab:blue", edgecolor="none")
    ax.set_xlabel("x")
    ax.set_ylabel("P(X = x)")
    ax.set_title(title)
    fig.tight_layout()
    return _render(fig, metadata)


def spectrum_svg(report: SpectrumReport, title: str, metadata: dict[str, Any]) -> str:
    """
    Eigenvalues in the complex plane with the unit circle and the band arcs.

    Args:
        report (SpectrumReport): Classified spectrum.
        title (str): Figure title.
        metadata (dict[str, Any]): Run metadata for the XML comment.

    Returns:
        str: SVG document.
    """
    fig = Figure(figsize=(5.5, 5.5))
    ax = fig.add_subplot()
    circle = np.linspace(0.0, 2.0 * np.pi, 721)
    ax.plot(np.cos(circle), np.sin(circle), color="lightgray", linewidth=0.8)
    for lo, hi in report.band.arcs:
        t = lo + np.linspace(0.0, arc_length((lo, hi)), 181)
        ax.plot(np.cos(t), np.sin(t), color="tab:cyan", linewidth=6.0, alpha=0.35)
    for label, (color, marker, size) in _LABEL_STYLE.items():
        pairs = report.with_label(label)
        if not pairs:
            continue
        values = np.array([pair.eigenvalue for pair in pairs])
        ax.scatter(values.real, values.imag, c=color, marker=marker, s=size, label=label.value)
    ax.set_aspect("equal")
    ax.set_xlim(-1.2, 1.2)
    ax.set_ylim(-1.2, 1.2)
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    fig.tight_layout()
    return _render(fig, metadata)
