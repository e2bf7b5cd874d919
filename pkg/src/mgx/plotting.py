"""Figures for verification reports (rendered off-screen to files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .suites import SuiteResult  # noqa: E402


def plot_strata(result: SuiteResult, path: str) -> None:
    """Bar chart of instances checked per vertex count, failures stacked in red."""
    rows = result.strata_rows()
    ns = [n for n, _, _ in rows]
    ok = [c - f for _, c, f in rows]
    bad = [f for _, _, f in rows]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(ns, ok, color="0.55", label="passed")
    ax.bar(ns, bad, bottom=ok, color="tab:red", label="failed")
    ax.set_xlabel("vertices")
    ax.set_ylabel("instances checked")
    if ns and max(c for _, c, _ in rows) / max(1, min(c for _, c, _ in rows)) > 100:
        ax.set_yscale("log")
    ax.set_xticks(ns)
    status = "pass" if result.passed else f"{result.failure_count} failures"
    ax.set_title(f"{result.suite}: {result.checked} instances, {status}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
