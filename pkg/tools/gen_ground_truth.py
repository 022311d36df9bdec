#!/usr/bin/env python3
"""Generate the benchmark manifest and global-peak position data files.

Independent oracle for the niching benchmark suite F1-F10: dense grids locate
candidate optima, mpmath Newton polishing pins positions and fitness values to
well below 1e-12, and the results are frozen into

    src/lade/data/benchmarks.tsv   (id, dim, bounds, nkp, f*, niche radius, budget)
    src/lade/data/peaks.csv        (id, one row per global peak, raw coordinates)

Run from the repository root:  python tools/gen_ground_truth.py
"""

import csv
import math
import pathlib

import mpmath as mp
import numpy as np

mp.mp.dps = 40

OUT_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "lade" / "data"

# Transcribed suite constants: dimension, box bounds, known-peak count,
# counting radius (raw coordinates) and evaluation budget per function.
SUITE = {
    "F1": dict(dim=1, lower=[0.0], upper=[30.0], nkp=2, radius=0.01, budget=50_000),
    "F2": dict(dim=1, lower=[0.0], upper=[1.0], nkp=5, radius=0.01, budget=50_000),
    "F3": dict(dim=1, lower=[0.0], upper=[1.0], nkp=1, radius=0.01, budget=50_000),
    "F4": dict(dim=2, lower=[-6.0, -6.0], upper=[6.0, 6.0], nkp=4, radius=0.01, budget=50_000),
    "F5": dict(dim=2, lower=[-1.9, -1.1], upper=[1.9, 1.1], nkp=2, radius=0.5, budget=50_000),
    "F6": dict(dim=2, lower=[-10.0, -10.0], upper=[10.0, 10.0], nkp=18, radius=0.5, budget=200_000),
    "F7": dict(dim=2, lower=[0.25, 0.25], upper=[10.0, 10.0], nkp=36, radius=0.2, budget=200_000),
    "F8": dict(dim=3, lower=[-10.0] * 3, upper=[10.0] * 3, nkp=81, radius=0.5, budget=400_000),
    "F9": dict(dim=3, lower=[0.25] * 3, upper=[10.0] * 3, nkp=216, radius=0.2, budget=400_000),
    "F10": dict(dim=2, lower=[0.0, 0.0], upper=[1.0, 1.0], nkp=12, radius=0.01, budget=200_000),
}


# ---------------------------------------------------------------------------
# mpmath scalar fitness definitions (maximization form)

def f2_mp(x):
    return mp.sin(5 * mp.pi * x) ** 6


def f3_mp(x):
    env = mp.e ** (-2 * mp.log(2) * ((x - mp.mpf("0.08")) / mp.mpf("0.854")) ** 2)
    return env * mp.sin(5 * mp.pi * (x ** mp.mpf("0.75") - mp.mpf("0.05"))) ** 6


def f4_mp(x, y):
    return 200 - (x * x + y - 11) ** 2 - (x + y * y - 7) ** 2


def f5_mp(x, y):
    return -((4 - mp.mpf("2.1") * x * x + x ** 4 / 3) * x * x + x * y + (4 * y * y - 4) * y * y)


def shubert_factor_mp(x):
    return mp.fsum(j * mp.cos((j + 1) * x + j) for j in range(1, 6))


def f10_term_mp(x, k):
    return -(10 + 9 * mp.cos(2 * mp.pi * k * x))


# ---------------------------------------------------------------------------
# polishing helpers

def refine_1d_max(f, x0, lo, hi):
    """Newton-polish a 1-D interior maximum of f starting from x0."""
    x = mp.mpf(x0)
    df = lambda t: mp.diff(f, t)
    for _ in range(80):
        d1 = df(x)
        d2 = mp.diff(f, x, 2)
        if d2 == 0:
            break
        step = d1 / d2
        x = x - step
        x = min(max(x, mp.mpf(lo)), mp.mpf(hi))
        if abs(step) < mp.mpf("1e-35"):
            break
    return x


def refine_2d_max(f, p0):
    """Newton-polish a 2-D interior maximum via the gradient root."""
    g = lambda x, y: (mp.diff(lambda t: f(t, y), x), mp.diff(lambda t: f(x, t), y))
    x, y = mp.findroot(g, (mp.mpf(p0[0]), mp.mpf(p0[1])))
    return x, y


def grid_argmax_candidates(fv, xs, rel_tol=1e-6):
    """Indices of local maxima on a 1-D grid whose value is near the grid max."""
    top = fv.max()
    cands = []
    for i in range(1, len(xs) - 1):
        if fv[i] >= fv[i - 1] and fv[i] >= fv[i + 1] and fv[i] >= top - rel_tol * max(1.0, abs(top)):
            cands.append(i)
    return cands


# ---------------------------------------------------------------------------
# per-function peak enumeration

def peaks_f1():
    return [(mp.mpf(0),), (mp.mpf(30),)], mp.mpf(200)


def peaks_f2():
    xs = [mp.mpf(2 * k + 1) / 10 for k in range(5)]
    return [(x,) for x in xs], mp.mpf(1)


def peaks_f3():
    grid = np.linspace(0.0, 1.0, 1_000_001)
    vals = (np.exp(-2 * np.log(2) * ((grid - 0.08) / 0.854) ** 2)
            * np.sin(5 * np.pi * (grid ** 0.75 - 0.05)) ** 6)
    x0 = grid[int(np.argmax(vals))]
    x = refine_1d_max(f3_mp, x0, 0.0, 1.0)
    return [(x,)], f3_mp(x)


def peaks_f4():
    seeds = [(3.0, 2.0), (-2.8, 3.1), (-3.8, -3.3), (3.6, -1.8)]
    pts = [refine_2d_max(f4_mp, s) for s in seeds]
    vals = [f4_mp(*p) for p in pts]
    return pts, max(vals)


def peaks_f5():
    # Dense grid plus coordinate-ascent polish, then Newton.
    xs = np.linspace(-1.9, 1.9, 4001)
    ys = np.linspace(-1.1, 1.1, 4001)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    F = -((4 - 2.1 * X**2 + X**4 / 3) * X**2 + X * Y + (4 * Y**2 - 4) * Y**2)
    i, j = np.unravel_index(np.argmax(F), F.shape)
    x, y = xs[i], ys[j]
    f_np = lambda x, y: -((4 - 2.1 * x * x + x**4 / 3) * x * x + x * y + (4 * y * y - 4) * y * y)
    for _ in range(200):
        moved = False
        for dx, dy in ((1e-4, 0), (0, 1e-4)):
            for s in (1, -1):
                while f_np(x + s * dx, y + s * dy) > f_np(x, y):
                    x, y = x + s * dx, y + s * dy
                    moved = True
        if not moved:
            break
    p1 = refine_2d_max(f5_mp, (x, y))
    p2 = (-p1[0], -p1[1])  # odd symmetry of the cross term preserves the value
    assert abs(f5_mp(*p1) - f5_mp(*p2)) < mp.mpf("1e-30")
    return [p1, p2], f5_mp(*p1)


def shubert_1d_extrema():
    """Global minima and maxima of the 1-D factor on [-10, 10]."""
    grid = np.linspace(-10, 10, 2_000_001)
    vals = np.zeros_like(grid)
    for j in range(1, 6):
        vals += j * np.cos((j + 1) * grid + j)
    f_min = lambda x: -shubert_factor_mp(x)

    def collect(v, f_sign):
        thresh = v.max() - 1e-6
        idxs = [i for i in range(1, len(grid) - 1)
                if v[i] >= v[i - 1] and v[i] >= v[i + 1] and v[i] >= thresh]
        pts = []
        for i in idxs:
            x = refine_1d_max(f_sign, grid[i], -10.0, 10.0)
            if all(abs(x - q) > 1e-6 for q in pts):
                pts.append(x)
        return sorted(pts)

    maxima = collect(vals, shubert_factor_mp)
    minima = collect(-vals, f_min)
    gmax = shubert_factor_mp(maxima[0])
    gmin = shubert_factor_mp(minima[0])
    for x in maxima:
        assert abs(shubert_factor_mp(x) - gmax) < mp.mpf("1e-25")
    for x in minima:
        assert abs(shubert_factor_mp(x) - gmin) < mp.mpf("1e-25")
    return minima, gmin, maxima, gmax


def peaks_shubert(dim):
    minima, gmin, maxima, gmax = shubert_1d_extrema()
    pts, val = [], None
    if dim == 2:
        # one factor at the minimum, the other at the maximum
        for a in minima:
            for b in maxima:
                pts.append((a, b))
                pts.append((b, a))
        val = -(gmin * gmax)
    elif dim == 3:
        # exactly one factor at the minimum maximizes -(g1*g2*g3)
        for low_dim in range(3):
            for a in minima:
                for b in maxima:
                    for c in maxima:
                        p = [None] * 3
                        p[low_dim] = a
                        rest = [d for d in range(3) if d != low_dim]
                        p[rest[0]], p[rest[1]] = b, c
                        pts.append(tuple(p))
        val = -(gmin * gmax * gmax)
    return pts, val


def peaks_vincent(dim):
    ks = []
    for k in range(-8, 9):
        x = mp.e ** (mp.pi / 20 + k * mp.pi / 5)
        if mp.mpf("0.25") <= x <= 10:
            ks.append(x)
    assert len(ks) == 6
    pts = []
    if dim == 2:
        pts = [(a, b) for a in ks for b in ks]
    else:
        pts = [(a, b, c) for a in ks for b in ks for c in ks]
    return pts, mp.mpf(1)


def peaks_f10():
    k = (3, 4)
    xs0 = [mp.mpf(2 * j + 1) / (2 * k[0]) for j in range(k[0])]
    xs1 = [mp.mpf(2 * j + 1) / (2 * k[1]) for j in range(k[1])]
    return [(a, b) for a in xs0 for b in xs1], mp.mpf(-2)


GENERATORS = {
    "F1": peaks_f1,
    "F2": peaks_f2,
    "F3": peaks_f3,
    "F4": peaks_f4,
    "F5": peaks_f5,
    "F6": lambda: peaks_shubert(2),
    "F7": lambda: peaks_vincent(2),
    "F8": lambda: peaks_shubert(3),
    "F9": lambda: peaks_vincent(3),
    "F10": peaks_f10,
}


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    manifest_rows = []
    peak_rows = []
    for fid, meta in SUITE.items():
        pts, fstar = GENERATORS[fid]()
        assert len(pts) == meta["nkp"], f"{fid}: {len(pts)} peaks vs expected {meta['nkp']}"
        fstar_f = float(fstar)
        manifest_rows.append([
            fid,
            meta["dim"],
            ";".join(repr(v) for v in meta["lower"]),
            ";".join(repr(v) for v in meta["upper"]),
            meta["nkp"],
            repr(fstar_f),
            repr(meta["radius"]),
            meta["budget"],
        ])
        for p in sorted(tuple(float(c) for c in pt) for pt in pts):
            peak_rows.append([fid] + [repr(c) for c in p])
        print(f"{fid}: {len(pts)} peaks, f* = {fstar_f!r}")

    with open(OUT_DIR / "benchmarks.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t")
        w.writerow(["id", "dim", "lower", "upper", "nkp", "global_fitness", "niche_radius", "budget"])
        w.writerows(manifest_rows)
    with open(OUT_DIR / "peaks.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        for row in peak_rows:
            w.writerow(row)
    print(f"wrote {OUT_DIR / 'benchmarks.tsv'} and {OUT_DIR / 'peaks.csv'}")


if __name__ == "__main__":
    main()
