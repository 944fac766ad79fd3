"""Parameter sweep: run each algorithm over a grid of random instances and
write a CSV table plus summary figures (achieved factor and runtime)."""

from __future__ import annotations

import csv
import os
import time
from fractions import Fraction

from .certbounds import ceil_fraction, ln_bounds
from .core import WeightedGraph, format_rational
from .instances import gen_random_bounded_degree
from .lowmax import greedy_coloring, low_max_wt_eq1
from .swap2eq1 import two_eq1_coloring
from .verify import eq1_factor
from .weightedeq1 import eps_eq1_coloring, eq1_coloring_sqrt


def _sqrt_k(n: int, delta: int) -> int:
    k = 1
    while k * k < 16 * n * delta:
        k += 1
    return k


def _jobs(sizes, delta, seed):
    eps = Fraction(1, 10)
    ln_hi = ln_bounds(1 / eps)[1]
    for idx, n in enumerate(sizes):
        g = gen_random_bounded_degree(n, delta, seed=seed + idx)
        d = g.max_degree()
        if n <= 60:  # the envy-swap route needs the exact MWIS oracle
            yield ("2eq1", n, g, d + 1, None)
        yield ("eq1-sqrt", n, g, _sqrt_k(n, d), None)
        k_eps = max(
            ceil_fraction(4 * (1 + eps) ** 2 / eps ** 2 * (ln_hi + 4)) * d,
            d + 1,
        )
        yield ("eps-eq1", n, g, k_eps, eps)


def _run_job(algo: str, g: WeightedGraph, k: int, eps):
    stats: dict = {}
    if algo == "2eq1":
        coloring = two_eq1_coloring(g, k)
    elif algo == "eq1-sqrt":
        coloring = eq1_coloring_sqrt(g, k, stats)
    elif algo == "eps-eq1":
        coloring = eps_eq1_coloring(g, k, eps, stats)
    else:
        total = g.total_weight()
        cap = eps * total / k
        if any(g.weights[v] > cap for v in range(g.n)):
            return None, stats
        coloring = low_max_wt_eq1(g, k, eps, greedy_coloring(g), stats)
    return eq1_factor(g, coloring), stats


def run_bench(output_dir: str, sizes=(40, 80, 160), delta: int = 3,
              seed: int = 0, include_runtime: bool = True,
              include_figures: bool = True) -> list[dict]:
    os.makedirs(output_dir, exist_ok=True)
    rows: list[dict] = []
    for algo, n, g, k, eps in _jobs(sizes, delta, seed):
        start = time.perf_counter()
        report, stats = _run_job(algo, g, k, eps)
        elapsed = time.perf_counter() - start
        if report is None:
            continue
        rows.append({
            "algo": algo,
            "n": n,
            "delta": g.max_degree(),
            "k": k,
            "eps": format_rational(eps) if eps is not None else "",
            "factor": format_rational(report.factor),
            "factor_float": float(report.factor),
            "augmentations": stats.get("augmentations", 0),
            "runtime_s": round(elapsed, 4) if include_runtime else "",
        })
    rows.sort(key=lambda r: (r["algo"], r["n"], r["k"]))

    table = os.path.join(output_dir, "bench.csv")
    with open(table, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)

    if include_figures:
        _write_figures(rows, output_dir, include_runtime)
    return rows


def _write_figures(rows, output_dir, include_runtime) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    algos = sorted({r["algo"] for r in rows})

    fig, ax = plt.subplots(figsize=(6, 4))
    for algo in algos:
        pts = [(r["n"], r["factor_float"]) for r in rows if r["algo"] == algo]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=algo)
    ax.set_xlabel("vertices")
    ax.set_ylabel("achieved factor")
    ax.set_title("Achieved equitability factor by instance size")
    ax.legend()
    fig.tight_layout()
    fig.savefig(os.path.join(output_dir, "factor.png"))
    plt.close(fig)

    if include_runtime:
        fig, ax = plt.subplots(figsize=(6, 4))
        for algo in algos:
            pts = [(r["n"], r["runtime_s"]) for r in rows if r["algo"] == algo]
            ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o",
                    label=algo)
        ax.set_xlabel("vertices")
        ax.set_ylabel("runtime (s)")
        ax.set_title("Runtime by instance size")
        ax.legend()
        fig.tight_layout()
        fig.savefig(os.path.join(output_dir, "runtime.png"))
        plt.close(fig)
