"""Matplotlib rendering of point clouds and report figures to PNG files.

Figures are conveniences; the delimited outputs carry the contract.  Every
renderer writes a sidecar <name>.config.json with the resolved run config
when one is supplied.
"""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _write_sidecar(path: Path, config: dict | None) -> None:
    if config is not None:
        sidecar = path.with_suffix(".config.json")
        sidecar.write_text(json.dumps(config, sort_keys=True, indent=2) + "\n")


def _padded_limits(values: np.ndarray) -> tuple[float, float]:
    lo, hi = float(values.min()), float(values.max())
    pad = 0.05 * (hi - lo) if hi > lo else max(0.05 * abs(hi), 1e-3)
    return lo - pad, hi + pad


def save_pointcloud(path, clouds: list[tuple[str, np.ndarray]], title: str = "",
                    config: dict | None = None) -> None:
    """Scatter one or more complex point clouds with a 5%-padded viewport."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    allpts = np.concatenate([np.asarray(pts, dtype=np.complex128) for _, pts in clouds])
    for label, pts in clouds:
        pts = np.asarray(pts, dtype=np.complex128)
        ax.plot(pts.real, pts.imag, ".", markersize=1.5, label=label)
    ax.set_xlim(*_padded_limits(allpts.real))
    ax.set_ylim(*_padded_limits(allpts.imag))
    ax.set_aspect("equal", adjustable="box")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    if len(clouds) > 1:
        ax.legend(loc="best", markerscale=6, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    _write_sidecar(path, config)


def save_dilatation_field(path, z: np.ndarray, omega_abs: np.ndarray, k: float,
                          config: dict | None = None) -> None:
    """Disk scatter of |omega| against the certified bound k."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.5, 5.5))
    sc = ax.scatter(z.real, z.imag, c=omega_abs, s=2.0, cmap="viridis",
                    vmin=0.0, vmax=max(k, float(omega_abs.max())))
    ax.set_aspect("equal", adjustable="box")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_title(f"|omega| on the disk (bound k = {k:g})")
    fig.colorbar(sc, ax=ax, label="|omega|")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    _write_sidecar(path, config)


def save_radial_growth(path, ms: np.ndarray, im_h: np.ndarray, model: np.ndarray,
                       config: dict | None = None) -> None:
    """Im h along r_m = 1 - 10^-m against its log-log model."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot(ms, im_h, "o-", label="Im h(1 - 10^-m)")
    ax.plot(ms, model, "s--", label="eps loglog(A + m log 10)")
    ax.set_xlabel("m")
    ax.set_ylabel("imaginary part")
    ax.set_title("radial growth of the analytic part")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    _write_sidecar(path, config)


def save_sup_levels(path, sups: list[float], bound: float,
                    config: dict | None = None) -> None:
    """Running sup |f| per radial refinement level against the envelope."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ms = np.arange(1, len(sups) + 1)
    ax.plot(ms, sups, "o-", label="sup |f| through level m")
    ax.axhline(bound, color="tab:red", linestyle="--", label="envelope bound")
    ax.set_xlabel("m")
    ax.set_ylabel("sup |f|")
    ax.set_title("boundedness refinement")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    _write_sidecar(path, config)
