"""Peak counting and aggregate metrics over multiple runs.

A run's found solutions are counted greedily: best fitness first, a solution
counts iff it reaches the accuracy level and clears the counting radius to
everything already counted. PR averages the counted fraction over runs, SR is
the fraction of runs that counted every known peak. Distinction-quality rates
grade the per-lifetime verdicts against the oracle peak positions.
"""

from __future__ import annotations

import numpy as np

from . import bench
from .engine import RunReport
from .space import from_unit


def count_found(report: RunReport, fid: str, eps: float, include_local: bool = False) -> int:
    """Number of distinct global peaks found by one run at accuracy eps."""
    func = bench.get_function(fid)
    solutions = list(report.found) + (list(report.local_peaks) if include_local else [])
    solutions.sort(key=lambda s: -s[1])
    accepted: list[np.ndarray] = []
    for pos, fit in solutions:
        if func.global_fitness - fit > eps:
            continue
        raw = from_unit(np.asarray(pos), func.space)
        if all(np.linalg.norm(raw - a) > func.niche_radius for a in accepted):
            accepted.append(raw)
    return min(len(accepted), func.nkp)


def pr(npf_list, nkp: int, nr: int) -> float:
    """Average fraction of known global peaks found per run."""
    if nr < 1:
        raise ValueError("nr must be at least 1")
    return sum(npf_list) / (nkp * nr)


def sr(npf_list, nkp: int, nr: int) -> float:
    """Fraction of runs that found every known global peak."""
    if nr < 1:
        raise ValueError("nr must be at least 1")
    return sum(1 for n in npf_list if n == nkp) / nr


def distinction_rates(reports, fid: str, label_eps: float | None = None):
    """(AR, TNR, FPR) over the distinction logs of several runs.

    A verdict's ground truth is positional: a solution within the counting
    radius of an oracle peak position located a global peak. label_eps
    optionally also requires the solution fitness to be within label_eps of
    the global fitness. TNR counts global peaks ruled new-local; FPR counts
    non-global solutions ruled new-global; AR is the remainder. Returns None
    when no distinctions were logged.
    """
    func = bench.get_function(fid)
    oracle = bench.peak_positions(fid)
    total = 0
    tn = 0
    fp = 0
    for report in reports:
        for ev in report.distinctions:
            total += 1
            raw = from_unit(np.asarray(ev.position), func.space)
            d = np.min(np.linalg.norm(oracle - raw, axis=1))
            truly_global = d <= func.niche_radius
            if label_eps is not None:
                truly_global = truly_global and (func.global_fitness - ev.fitness <= label_eps)
            if truly_global and ev.verdict == "new_local":
                tn += 1
            elif not truly_global and ev.verdict == "new_global":
                fp += 1
    if total == 0:
        return None
    return (1.0 - (tn + fp) / total, tn / total, fp / total)
