#!/usr/bin/env python3
"""Generate the four headline datasets of the study as CSV files.

  pw_vs_B.csv       P_w over B in [0, 3] at several temperatures (jz = 0):
                    flat near 1 at low T, then a sudden drop near B = 1
  pw_vs_D.csv       P_w over D in [0, 3] at several temperatures (B = b = 0):
                    decreasing curves crossing the classical value 8/9
                    near D = 0.75 at low T; identical curves result for b
  logneg_vs_D_b.csv two-qubit log-negativity over D and over b at several
                    temperatures
  pw_vs_B_jz.csv    P_w over B at T = 0.01 for jz in {0, 0.5, 1}: the
                    sudden change shifts from B = 1 to 1.5 to 2

Each CSV has the swept parameter in the first column and one value
column per curve.  With --plot (requires matplotlib) a PNG per dataset
is written next to the CSVs.
"""

import argparse
import pathlib
import sys

import numpy as np

from msgame import (
    ModelParams,
    build_hamiltonian,
    effective_state,
    log_negativity,
    thermal_state,
    win_probability,
)

TEMPERATURES = (0.01, 0.1, 0.25, 0.5, 1.0)
LN_TEMPERATURES = (0.1, 0.5, 1.0)
JZ_VALUES = (0.0, 0.5, 1.0)
CLASSICAL_VALUE = 8.0 / 9.0


def _fmt(x: float) -> str:
    return f"{x:.11e}"


def _write_csv(path: pathlib.Path, header, rows):
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")
    print(f"wrote {path}")


def _pw(p: ModelParams) -> float:
    return win_probability(effective_state(p)).average


def dataset_pw_vs_B(steps: int):
    grid = np.linspace(0.0, 3.0, steps)
    header = ["B"] + [f"pw_T{t:g}" for t in TEMPERATURES]
    rows = [[B] + [_pw(ModelParams(B=B, T=t)) for t in TEMPERATURES] for B in grid]
    return header, rows


def dataset_pw_vs_D(steps: int):
    grid = np.linspace(0.0, 3.0, steps)
    header = ["D"] + [f"pw_T{t:g}" for t in TEMPERATURES]
    rows = [[D] + [_pw(ModelParams(D=D, T=t)) for t in TEMPERATURES] for D in grid]
    return header, rows


def dataset_logneg(steps: int):
    grid = np.linspace(0.0, 2.0, steps)
    header = (
        ["x"]
        + [f"logneg_D_T{t:g}" for t in LN_TEMPERATURES]
        + [f"logneg_b_T{t:g}" for t in LN_TEMPERATURES]
    )

    def ln(p: ModelParams) -> float:
        return log_negativity(thermal_state(build_hamiltonian(p), p.T), {1})

    rows = [
        [x]
        + [ln(ModelParams(D=x, T=t)) for t in LN_TEMPERATURES]
        + [ln(ModelParams(b=x, T=t)) for t in LN_TEMPERATURES]
        for x in grid
    ]
    return header, rows


def dataset_pw_vs_B_jz(steps: int):
    grid = np.linspace(0.0, 3.0, steps)
    header = ["B"] + [f"pw_jz{j:g}" for j in JZ_VALUES]
    rows = [[B] + [_pw(ModelParams(jz=j, B=B, T=0.01)) for j in JZ_VALUES] for B in grid]
    return header, rows


DATASETS = {
    "pw_vs_B": dataset_pw_vs_B,
    "pw_vs_D": dataset_pw_vs_D,
    "logneg_vs_D_b": dataset_logneg,
    "pw_vs_B_jz": dataset_pw_vs_B_jz,
}


def _plot(outdir: pathlib.Path, name: str, header, rows):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    data = np.array(rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    for col in range(1, data.shape[1]):
        ax.plot(data[:, 0], data[:, col], label=header[col])
    if name.startswith("pw"):
        ax.axhline(CLASSICAL_VALUE, color="gray", ls=":", lw=1, label="classical 8/9")
        ax.set_ylabel("P_w")
    else:
        ax.set_ylabel("log-negativity")
    ax.set_xlabel(header[0])
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(outdir / f"{name}.png", dpi=150)
    plt.close(fig)
    print(f"wrote {outdir / (name + '.png')}")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="figures", help="output directory")
    ap.add_argument("--steps", type=int, default=301, help="grid points per sweep")
    ap.add_argument("--plot", action="store_true", help="also render PNGs (needs matplotlib)")
    args = ap.parse_args(argv)

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, builder in DATASETS.items():
        header, rows = builder(args.steps)
        _write_csv(outdir / f"{name}.csv", header, rows)
        if args.plot:
            try:
                _plot(outdir, name, header, rows)
            except ImportError:
                print("matplotlib not available; skipping plots", file=sys.stderr)
                args.plot = False
    return 0


if __name__ == "__main__":
    sys.exit(main())
