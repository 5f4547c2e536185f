"""Fringe-shift ratio for asymmetric layouts, compared against the symmetric f(omega T).

Sweeps omega * T_max for a few l2/l1 ratios at fixed b, T_S = T_D, and
writes one CSV per layout.
"""
import argparse
from pathlib import Path

from abfringe.model import CODATA2018, InterferometerGeometry, drive_for_flux
from abfringe.sweep import SweepSpec, emit_table, run_sweep


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--ratios", type=float, nargs="+", default=[0.5, 1.0, 2.0, 5.0])
    parser.add_argument("--jobs", type=int, default=4)
    args = parser.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    b, l1, transit = 0.01, 0.01, 1e-8
    drive = drive_for_flux(CODATA2018.flux_quantum, 1e-3)
    for ratio in args.ratios:
        geom = InterferometerGeometry(l1=l1, l2=ratio * l1, b=b, t_s=transit, t_d=transit)
        spec = SweepSpec(0.0, 25.0, 0.25, mode="full_geometry", geom=geom, drive=drive)
        rows = run_sweep(spec, jobs=args.jobs)
        path = emit_table(rows, "csv", outdir / f"scan_l2_over_l1_{ratio:g}.csv")
        first_zero = next((r.omega_t for r, s in zip(rows, rows[1:]) if r.f * s.f < 0), None)
        print(f"l2/l1 = {ratio:g}: first sign change near omega T = {first_zero}, wrote {path}")


if __name__ == "__main__":
    main()
