"""Peak distinction: classify a lifetime-exhausted individual.

Two indicators drive the verdict: the scaled gap to the historical best
fitness (SFD) and the average fitness improvement rate over a trailing window
of the lifetime (FIR). An individual still climbing when its lifetime ends
(SFD < FIR) is taken as a new global peak; otherwise a hill-valley test
against the nearest recorded peak separates new local peaks from relocations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .region import RegionSet


@dataclass
class PdmParams:
    gap_scale: float = 1e-2   # scaling coefficient on the best-fitness gap


@dataclass(frozen=True)
class Distinction:
    verdict: str              # "new_global" | "new_local" | "found"
    sfd: float
    fir: float
    nearest_region: int | None


def sfd(f_best: float, f_x: float, gap_scale: float) -> float:
    """Scaled fitness distance to the historical best."""
    return gap_scale * abs(f_best - f_x)


def fir_window(dim: int) -> int:
    """Length of the improvement-rate window, doubling every 10 dimensions."""
    return 80 * 2 ** (dim // 10 + 1)


def fir(trajectory, stall_gens: int, dim: int) -> float:
    """Average fitness improvement per generation over the window ending
    stall_gens generations before the end of the lifetime.

    Lifetimes shorter than the window divide by the actual span covered;
    trajectories too short to exclude the trailing stall return 0.
    """
    n = len(trajectory)
    if n < stall_gens + 2:
        return 0.0
    lg = n - 1 - stall_gens
    tg = fir_window(dim)
    early = lg - tg
    if early >= 0:
        span = tg
    else:
        early = 0
        span = lg
    return abs(trajectory[lg] - trajectory[early]) / span


def hvnum(dim: int) -> int:
    """Number of interior samples for the hill-valley test."""
    return 10 + 2 * dim


def hill_valley(a: np.ndarray, b: np.ndarray, fa: float, fb: float, n: int, evaluate) -> bool:
    """True when a and b appear to sit on the same peak.

    Samples n evenly spaced interior points of the segment; any sample below
    both endpoint fitnesses reveals a valley. Identical endpoints are the
    same peak at zero cost; otherwise exactly n evaluations are spent.
    """
    if np.array_equal(a, b):
        return True
    threshold = min(fa, fb)
    same = True
    for i in range(1, n + 1):
        s = a + (i / (n + 1)) * (b - a)
        if evaluate(s) < threshold:
            same = False
    return same


def classify(ind, regions: RegionSet, archive, params: PdmParams, stall_gens: int,
             evaluate) -> Distinction:
    """Full distinction of a lifetime-exhausted individual.

    evaluate must record its samples (hill-valley cost is real); it is only
    called when a nearest peak exists.
    """
    s = sfd(archive.best_fitness, ind.fitness, params.gap_scale)
    rate = fir(ind.trajectory, stall_gens, ind.position.size)
    if s < rate:
        return Distinction("new_global", s, rate, None)
    if len(regions) == 0:
        return Distinction("new_local", s, rate, None)
    k = regions.nearest(ind.position)
    peak = regions.peaks[k]
    same = hill_valley(ind.position, peak.solution, ind.fitness, peak.fitness,
                       hvnum(ind.position.size), evaluate)
    return Distinction("found" if same else "new_local", s, rate, k)
