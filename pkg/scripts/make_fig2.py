"""Reproduce the f(omega T) curve: gnuplot data plus a PNG.

    python scripts/make_fig2.py --outdir out/
"""
import argparse
from pathlib import Path

import numpy as np

from abfringe.sweep import emit_table, fig2_spec, run_sweep


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    rows = run_sweep(fig2_spec(), jobs=args.jobs)
    emit_table(rows, "gnuplot_dat", outdir / "fig2.dat")

    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    x = np.array([r.omega_t for r in rows])
    f = np.array([r.f for r in rows])
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(x, f, lw=1.2, label=r"$f(\omega T)$")
    ax.plot(x, np.abs(np.cos(x / 2)), lw=0.6, ls="--", c="grey", label=r"$|\cos(\omega T/2)|$")
    ax.axhline(0.0, c="k", lw=0.5)
    ax.set_xlabel(r"$\omega T$")
    ax.set_ylabel(r"$f(\omega T)$")
    ax.set_xlim(0, 25)
    ax.legend()
    fig.tight_layout()
    fig.savefig(outdir / "fig2.png", dpi=150)
    i = int(np.argmin(f))
    print(f"wrote {outdir / 'fig2.dat'} and {outdir / 'fig2.png'}; minimum f = {f[i]:.6f} at omega T = {x[i]}")


if __name__ == "__main__":
    main()
