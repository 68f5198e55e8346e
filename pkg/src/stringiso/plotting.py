"""Report figures (matplotlib, Agg backend, written as PNG)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import cost_model as cm  # noqa: E402

_STYLE = {"figure.dpi": 110, "axes.grid": True, "grid.alpha": 0.3, "font.size": 9}


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_constants(reports: Sequence[cm.ConstantReport], outdir: str | Path, mode: str = "cfsg") -> list[Path]:
    """f(m) against its bound, the exponent grid at m = n, and every check's margin."""
    outdir = Path(outdir)
    written = []
    cfsg = mode == "cfsg"
    with plt.rc_context(_STYLE):
        m = cm.geometric_grid(cm.THRESHOLD, 1e9, 200)
        fig, ax = plt.subplots(figsize=(5, 3.2))
        ax.semilogx(m, [cm.f_of_m(v) for v in m], label="f(m)")
        ax.axhline(cm.F_BOUND, color="k", ls="--", lw=0.8, label=f"{cm.F_BOUND}")
        ax.set_xlabel("m")
        ax.set_ylabel("exponent")
        ax.legend()
        written.append(_save(fig, outdir / f"f_of_m_{mode}.png"))

        n = cm.geometric_grid(cm.THRESHOLD, 1e9, 200)
        fig, ax = plt.subplots(figsize=(5, 3.2))
        for frac in (1.0, 0.5, 0.25):
            mm = np.maximum(cm.THRESHOLD, n**frac)
            ax.semilogx(n, cm._soj_exponent_grid(cfsg, mm, n), label=f"m = max(1046, n^{frac:g})")
        ax.axhline(cm.K2[cfsg], color="k", ls="--", lw=0.8, label=f"{cm.K2[cfsg]}")
        ax.set_xlabel("n")
        ax.set_ylabel("exponent per log n")
        ax.legend(fontsize=7)
        written.append(_save(fig, outdir / f"soj_exponent_{mode}.png"))

        flat = [r for rep in reports for r in rep.flatten()]
        fig, ax = plt.subplots(figsize=(6, max(3.0, 0.14 * len(flat))))
        margins = np.array([max(abs(r.margin), 1e-16) for r in flat])
        colours = ["tab:green" if r.passed else "tab:red" for r in flat]
        y = np.arange(len(flat))
        ax.barh(y, margins, color=colours)
        ax.set_xscale("log")
        ax.axvline(cm.STRICT_MARGIN, color="k", ls=":", lw=0.8)
        ax.set_yticks(y, [r.name for r in flat], fontsize=5)
        ax.invert_yaxis()
        ax.set_xlabel("|margin|")
        written.append(_save(fig, outdir / f"margins_{mode}.png"))
    return written


def plot_catalog(summary, outdir: str | Path) -> list[Path]:
    """Atom counts and coset sizes of the catalog run, by degree."""
    outdir = Path(outdir)
    res = summary.results
    deg = np.array([r.degree for r in res])
    atoms = np.array([r.atoms for r in res])
    sizes = np.array([r.iso_size for r in res])
    written = []
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(5, 3.2))
        ok = atoms > 0
        ax.scatter(deg[ok], atoms[ok], s=8, alpha=0.5)
        ax.set_yscale("log")
        ax.set_xlabel("degree")
        ax.set_ylabel("atoms in expression")
        written.append(_save(fig, outdir / "catalog_atoms.png"))

        fig, ax = plt.subplots(figsize=(5, 3.2))
        nz = sizes > 0
        ax.scatter(sizes[nz], atoms[nz], s=8, alpha=0.5)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("|Iso|")
        ax.set_ylabel("atoms")
        written.append(_save(fig, outdir / "catalog_size_vs_atoms.png"))
    return written


__all__ = ["plot_catalog", "plot_constants"]
