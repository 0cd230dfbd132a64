"""Figure rendering for the report-producing subcommands.

Figures are written to files next to the delimited output, never shown
interactively; the Agg backend keeps this usable in headless runs.
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def density_figure(rows, group_order: int, multiplier_order: int | None, path: str) -> None:
    """Convergence of the trivial-product tuple densities toward their limits,
    with the deviations on a log scale."""
    ks = [r.k for r in rows]
    ratios = [float(r.ratio) for r in rows]
    lim = 1.0 / group_order
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.plot(ks, ratios, "o-", label="trivial-product density")
    ax1.axhline(lim, color="gray", ls="--", lw=1, label=f"1/{group_order}")
    devs = [abs(float(r.ratio - Fraction(1, group_order))) for r in rows]
    ax2.semilogy(ks, devs, "o-", label="deviation")
    if rows[0].ratio0 is not None and multiplier_order:
        ratios0 = [float(r.ratio0) for r in rows]
        lim0 = Fraction(1, group_order * multiplier_order)
        ax1.plot(ks, ratios0, "s-", label="trivial-invariant density")
        ax1.axhline(float(lim0), color="lightgray", ls=":", lw=1,
                    label=f"1/{group_order * multiplier_order}")
        ax2.semilogy(ks, [abs(float(r.ratio0 - lim0)) for r in rows], "s-",
                     label="invariant deviation")
    ax1.set_xlabel("k")
    ax1.set_ylabel("density")
    ax1.legend(fontsize=8)
    ax2.set_xlabel("k")
    ax2.set_ylabel("|density - limit|")
    ax2.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def orbits_figure(report, path: str) -> None:
    """Orbit sizes on the enumerated stratum, annotated by invariant value."""
    rows = sorted(report.rows, key=lambda r: -r.slice_size)
    fig, ax = plt.subplots(figsize=(max(4, 0.5 * len(rows) + 2), 3.6))
    xs = range(len(rows))
    ax.bar(xs, [r.slice_size for r in rows], color="steelblue")
    for x, r in zip(xs, rows):
        if r.sch_label:
            ax.text(x, r.slice_size, r.sch_label, ha="center", va="bottom", fontsize=8)
    ax.set_xlabel("orbit")
    ax.set_ylabel("slice states")
    ax.set_title(
        f"k={report.k} {report.stratum} ({report.class_label}): "
        f"{report.orbit_count} orbits on {report.slice_states} states"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
