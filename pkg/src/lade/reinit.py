"""Landscape-aware reinitialization: potential-optimal-region detection and
recursive subspace division.

PORDS looks for a cluster of refined peaks whose best member sits near the
best fitness: the cluster centroid then seeds the next lifetime with a small
search range and taboo checks off. SDS recursively halves the unit cube,
dimension by dimension, wherever the found global peaks spread widely enough,
then reinitializes inside a leaf chosen with a bias toward leaves holding
fewer global peaks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .refine import fgr, mean_shift


@dataclass
class ReinitParams:
    sds_gate_sharpness: float = 20.0   # sigmoid sharpness of the SDS gate
    fgr_threshold: float = 0.04        # max fitness-gap rate of a cluster's best peak
    taboo_off_edge: float = 1.0 / 8.0  # leaves thinner than this disable taboo checks


@dataclass
class PotentialRegion:
    center: np.ndarray
    radius: float
    source_peaks: list
    resolved: bool = False


def pords_check(located_index: int, peaks: list, archive, bandwidth: float,
                fgr_threshold: float, resolved_centers: list) -> PotentialRegion | None:
    """Detect a potential optimal region around the peak just located.

    All recorded peaks are clustered; the cluster containing the located peak
    qualifies iff it has at least two members, its best member's fitness-gap
    rate is below the threshold, every global member has lsp == 1, and some
    member has completed a local-search process. Regions where a new global
    peak was already found (tracked by center proximity) are never reused.
    """
    if len(peaks) < 2:
        return None
    pts = np.array([p.solution for p in peaks])
    labels, _ = mean_shift(pts, bandwidth)
    member_idx = np.flatnonzero(labels == labels[located_index])
    if member_idx.size < 2:
        return None
    members = [peaks[i] for i in member_idx]
    best = max(members, key=lambda p: p.fitness)
    if fgr(archive.best_fitness, best.fitness, archive.worst_fitness) >= fgr_threshold:
        return None
    if any(p.is_global and p.ls_state.lsp != 1 for p in members):
        return None
    if not any(p.ls_state.lsum >= 1 for p in members):
        return None
    positions = pts[member_idx]
    center = positions.mean(axis=0)
    radius = float(np.max(np.abs(center - positions)) / 2.0)
    for rc in resolved_centers:
        if np.linalg.norm(center - rc) < bandwidth / 2.0:
            return None
    return PotentialRegion(center=center, radius=radius, source_peaks=members)


def sdp_draw(gp_count: int, rng, sharpness: float = 20.0) -> int:
    """SDS gate: probability approaches 1 as global peaks accumulate."""
    arg = sharpness * gp_count
    p = 1.0 if arg > 700 else 1.0 / (1.0 + math.exp(-arg))
    return 1 if rng.random() <= p else 0


@dataclass
class SubspaceTree:
    edges: list            # per dimension, sorted cut positions incl. 0 and 1
    lows: np.ndarray       # (SN, D)
    highs: np.ndarray      # (SN, D)
    gpnum: np.ndarray      # (SN,) global peaks per leaf

    @property
    def size(self) -> int:
        return self.lows.shape[0]


def _cuts(coords: np.ndarray, lo: float, hi: float, out: list):
    """Recursive midpoint cuts of [lo, hi] driven by the projected peaks.

    A cut needs peaks strictly on both sides of the midpoint and a projected
    spread above a quarter of the interval length. Points exactly on the
    midpoint side with the upper half.
    """
    if coords.size < 2:
        return
    mid = (lo + hi) / 2.0
    left = coords < mid
    right = coords > mid
    if not (left.any() and right.any()):
        return
    if coords.max() - coords.min() <= (hi - lo) / 4.0:
        return
    out.append(mid)
    _cuts(coords[left], lo, mid, out)
    _cuts(coords[coords >= mid], mid, hi, out)


def divide(gp_positions, dim: int) -> SubspaceTree:
    """Partition the unit cube into the grid of per-dimension recursive cuts."""
    pts = np.asarray(gp_positions, dtype=float).reshape(-1, dim)
    edges = []
    for d in range(dim):
        cuts: list[float] = []
        if pts.shape[0] > 0:
            _cuts(np.sort(pts[:, d]), 0.0, 1.0, cuts)
        edges.append(np.array(sorted([0.0, *cuts, 1.0])))

    axes = [np.arange(e.size - 1) for e in edges]
    mesh = np.meshgrid(*axes, indexing="ij")
    idx = np.stack([m.ravel() for m in mesh], axis=1)
    lows = np.stack([edges[d][idx[:, d]] for d in range(dim)], axis=1)
    highs = np.stack([edges[d][idx[:, d] + 1] for d in range(dim)], axis=1)

    gpnum = np.zeros(lows.shape[0], dtype=np.int64)
    if pts.shape[0] > 0:
        shape = tuple(e.size - 1 for e in edges)
        cell = [np.clip(np.searchsorted(edges[d], pts[:, d], side="right") - 1,
                        0, shape[d] - 1) for d in range(dim)]
        flat = np.ravel_multi_index(cell, shape)
        np.add.at(gpnum, flat, 1)
    return SubspaceTree(edges=edges, lows=lows, highs=highs, gpnum=gpnum)


def select_subspace(tree: SubspaceTree, rng) -> int:
    """Roulette-wheel leaf selection weighted by SN^(-gpnum)."""
    sn = tree.size
    if sn == 1:
        return 0
    w = float(sn) ** (-tree.gpnum.astype(float))
    return int(rng.choice(sn, p=w / w.sum()))
