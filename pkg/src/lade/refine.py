"""Accuracy refinement of global peaks and the shared mean-shift primitive.

Each global peak carries an adaptive Gaussian sampler: the step size sigma
shrinks by 5x after a run of non-improving samples, and once it bottoms out a
"local search process" is complete. Completed processes feed two
misclassification guards: a fitness-gap-rate removal test, and a cluster-based
prune that folds refined near-duplicates into the best peak of their cluster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass
class LocalSearchState:
    sigma: float = 1e-4
    sc: int = 0        # consecutive non-improving samples
    lsum: int = 0      # completed local-search processes
    lsp: int = 1       # last drawn local-search indicator


@dataclass
class LssParams:
    sigma_init: float = 1e-4
    sigma_term: float = 1e-11
    stall_limit: int = 40          # non-improving samples before sigma shrinks
    bandwidth: float = 0.1         # mean-shift bandwidth (unit coordinates)
    removal_threshold: float = 0.04
    lsp_theta: float = 2e8         # sharpness of the search-probability gate
    lsp_gap_rising: bool = True    # search probability rises with the fitness gap


def lsp_draw(f_best: float, f_gp: float, params: LssParams, rng) -> int:
    """Draw the local-search indicator for one peak.

    The gate probability is a sigmoid in the gap to the historical best
    fitness: a peak still short of the best fitness is (almost) always
    searched, a peak at the best fitness is searched with probability 1/2.
    Setting lsp_gap_rising=False flips the sigmoid so the probability decays
    with the gap instead.
    """
    arg = params.lsp_theta * abs(f_best - f_gp)
    if params.lsp_gap_rising:
        p = 1.0 if arg > 700 else 1.0 / (1.0 + math.exp(-arg))
    else:
        p = 0.0 if arg > 700 else 1.0 / (1.0 + math.exp(arg))
    return 1 if rng.random() <= p else 0


def snum(dim: int, gp_count: int, opnum: int) -> int:
    """Samples per searched peak for one refinement invocation."""
    return math.ceil(3.0 * dim * min(gp_count / opnum, 10.0))


def fgr(f_best: float, f_gp: float, f_worst: float) -> float:
    """Fitness gap rate: the peak's gap to the best, relative to the full
    historical fitness range. Zero on a flat archive."""
    span = f_best - f_worst
    if span <= 0:
        return 0.0
    return (f_best - f_gp) / span


def local_search_pass(gp, sample_count: int, params: LssParams, evaluate, archive, rng) -> bool:
    """Run one refinement pass (sample_count Gaussian samples) on a peak.

    Improving samples replace the peak solution; stalls shrink sigma; a
    completed process (sigma at its floor) increments lsum and runs the
    removal test: the peak is demoted to a local peak iff
    FGR * sqrt(lsum) exceeds the removal threshold. Returns True when the
    peak was demoted. BudgetExhausted propagates with partial progress kept.
    """
    st = gp.ls_state
    dim = gp.solution.size
    for _ in range(sample_count):
        sample = np.clip(gp.solution + st.sigma * rng.standard_normal(dim), 0.0, 1.0)
        f = evaluate(sample)
        if f > gp.fitness:
            gp.solution = sample
            gp.fitness = f
            st.sc = 0
        else:
            st.sc += 1
        if st.sc > params.stall_limit:
            st.sc = 0
            if st.sigma > params.sigma_term:
                st.sigma /= 5.0
            else:
                st.sigma = params.sigma_init
                st.lsum += 1
                rate = fgr(archive.best_fitness, gp.fitness, archive.worst_fitness)
                if rate * math.sqrt(st.lsum) > params.removal_threshold:
                    gp.is_global = False
                    return True
    return False


def mean_shift(points, bandwidth: float, tol: float = 1e-6, max_iter: int = 200):
    """Gaussian-kernel mean-shift clustering.

    Every point is iterated to its kernel-weighted mode; modes closer than
    bandwidth/2 are merged (in lexicographic order, so the labeling is
    independent of the input permutation). Returns (labels, cluster_modes).
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts.reshape(-1, 1)
    n = pts.shape[0]
    if n == 0:
        raise ValueError("points must be non-empty")
    modes = pts.copy()
    inv = -0.5 / (bandwidth * bandwidth)
    for _ in range(max_iter):
        d2 = np.sum((modes[:, None, :] - pts[None, :, :]) ** 2, axis=2)
        w = np.exp(inv * d2)
        new_modes = (w @ pts) / np.sum(w, axis=1, keepdims=True)
        shift = np.max(np.abs(new_modes - modes))
        modes = new_modes
        if shift < tol:
            break

    order = np.lexsort(modes.T[::-1])  # lexicographic by coordinates
    merge_r = bandwidth / 2.0
    centers: list[np.ndarray] = []
    members: list[list[int]] = []
    labels = np.empty(n, dtype=np.int64)
    for i in order:
        m = modes[i]
        for c, ctr in enumerate(centers):
            if np.linalg.norm(m - ctr) < merge_r:
                labels[i] = c
                members[c].append(i)
                break
        else:
            labels[i] = len(centers)
            centers.append(m)
            members.append([i])
    cluster_modes = np.array([modes[ms].mean(axis=0) for ms in members])
    return labels, cluster_modes


def prune_clusters(gps: list, bandwidth: float) -> list:
    """Cluster-based correction over the current global peaks.

    Within each mean-shift cluster whose best peak sat out this invocation
    (lsp == 0, i.e. it already matches the best fitness), members that were
    searched (lsp == 1) and have completed at least one process are treated
    as refined near-duplicates: they are demoted, and the best peak's region
    grows to cover them. Returns the demoted peaks.
    """
    if not gps:
        return []
    pts = np.array([p.solution for p in gps])
    labels, _ = mean_shift(pts, bandwidth)
    removed = []
    for c in range(labels.max() + 1):
        members = [gps[i] for i in np.flatnonzero(labels == c)]
        best = max(members, key=lambda p: p.fitness)
        if best.ls_state.lsp != 0:
            continue
        for p in members:
            if p is best or p.ls_state.lsp != 1 or p.ls_state.lsum < 1:
                continue
            p.is_global = False
            best.pd = np.maximum(best.pd, p.pd + np.abs(best.solution - p.solution))
            removed.append(p)
    return removed
