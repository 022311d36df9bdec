"""Peak regions: simulation from search history, taboo membership, PRRD.

A found peak owns an axis-aligned box centered at the position of the
individual that first located it. The box half-widths grow from the spatial
spread of "subordinate" historical neighbors (worse fitness, chained within
the simulation distance) and are re-enlarged every time the peak is located
again, so the region gradually covers the whole peak.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .history import HistoryArchive
from .refine import LocalSearchState


def simulation_distance(dim: int) -> float:
    """Neighbor-chaining distance; grows stepwise with dimension."""
    return 0.005 * (dim // 5 + 1)


def enlargement_factor(dim: int) -> float:
    """Minimum per-simulation volume growth factor (per dimension root)."""
    return 1.15 + 0.1 * (dim // 5)


@dataclass
class PeakRegion:
    anchor: np.ndarray          # first-locator position (region center, fixed)
    anchor_index: int           # 0-based archive index of the anchor evaluation
    solution: np.ndarray        # best-known point on the peak (refined by LSS)
    fitness: float
    pd: np.ndarray              # per-dimension half-widths
    is_global: bool
    origin_lifetime: int
    ls_state: LocalSearchState = field(default_factory=LocalSearchState)


def in_region(x: np.ndarray, region: PeakRegion) -> bool:
    """Axis-aligned box membership around the region anchor."""
    return bool(np.all(np.abs(x - region.anchor) <= region.pd))


def prrd(x: np.ndarray, region: PeakRegion, sd: float) -> float:
    """Peak-region relative distance: Euclidean distance in units of the
    region half-widths (zero half-widths fall back to sd/10)."""
    denom = np.maximum(region.pd, sd / 10.0)
    return float(np.sqrt(np.sum(((x - region.anchor) / denom) ** 2)))


def _closure_spread(archive: HistoryArchive, start: int, anchor: np.ndarray, sd: float) -> np.ndarray:
    """Per-dimension max distance from the anchor over the subordinate closure.

    The closure adds every historical point that sits within sd of an already
    included point of strictly better fitness, expanding breadth-first from
    the anchor. Levels are processed as whole arrays and grid cells shed
    absorbed points, which keeps dense single-dimension archives tractable.
    """
    pos, fit = archive.positions, archive.fitness
    dim = anchor.size
    visited = np.zeros(archive.used, dtype=bool)
    visited[start] = True
    md = np.zeros(dim)
    frontier = np.array([start])
    pending: dict[tuple, np.ndarray] = {}
    cell = archive.cell
    offsets = [np.array(o) for o in np.ndindex((3,) * dim)]
    while frontier.size:
        own = np.unique((pos[frontier] // cell).astype(np.int64), axis=0)
        cells = {tuple(k + off - 1) for k in own for off in offsets}
        chunks = []
        for key in cells:
            got = pending.get(key)
            if got is None:
                raw = archive.cell_indices(key)
                if raw is None:
                    continue
                got = np.asarray(raw, dtype=np.int64)
            got = got[~visited[got]]
            pending[key] = got
            if got.size:
                chunks.append(got)
        if not chunks:
            break
        cand = np.concatenate(chunks)
        accept_mask = np.zeros(cand.size, dtype=bool)
        f_cand = fit[cand]
        p_cand = pos[cand]
        step = max(1, 2_000_000 // max(1, cand.size))
        for s in range(0, frontier.size, step):
            fr = frontier[s:s + step]
            left = ~accept_mask
            if not left.any():
                break
            d2 = np.sum((p_cand[left, None, :] - pos[fr][None, :, :]) ** 2, axis=2)
            ok = (d2 <= sd * sd) & (f_cand[left, None] < fit[fr][None, :])
            accept_mask[np.flatnonzero(left)[np.any(ok, axis=1)]] = True
        accepted = cand[accept_mask]
        if accepted.size:
            visited[accepted] = True
            md = np.maximum(md, np.max(np.abs(pos[accepted] - anchor), axis=0))
        frontier = accepted
    return md


def simulate(region: PeakRegion, archive: HistoryArchive, sd: float, mu: float) -> np.ndarray:
    """Re-derive the region half-widths from the current search history.

    Takes the per-dimension spread MD of the subordinate closure around the
    anchor, then either adopts MD outright (when its volume beats mu^D times
    the current one) or rescales MD so the volume grows by exactly mu^D.
    """
    anchor = region.anchor
    md = _closure_spread(archive, region.anchor_index, anchor, sd)

    pd = region.pd
    if np.prod(md) > np.prod(mu * pd):
        new_pd = md.copy()
    else:
        safe_md = np.maximum(md, sd / 10.0)
        ratio = np.prod(pd / safe_md)
        new_pd = mu * ratio ** (1.0 / anchor.size) * safe_md
    region.pd = new_pd
    return new_pd


class RegionSet:
    """The peak list P, with vectorized taboo and nearest-region queries."""

    def __init__(self, dim: int, sd: float):
        self.dim = dim
        self.sd = sd
        self.peaks: list[PeakRegion] = []
        self._anchors = np.empty((0, dim))
        self._pds = np.empty((0, dim))
        self._dirty = False

    def __len__(self) -> int:
        return len(self.peaks)

    def add(self, region: PeakRegion) -> int:
        self.peaks.append(region)
        self._dirty = True
        return len(self.peaks) - 1

    def mark_dirty(self):
        self._dirty = True

    def _refresh(self):
        if self._dirty or self._anchors.shape[0] != len(self.peaks):
            self._anchors = np.array([p.anchor for p in self.peaks]).reshape(len(self.peaks), self.dim)
            self._pds = np.array([p.pd for p in self.peaks]).reshape(len(self.peaks), self.dim)
            self._dirty = False

    def contains(self, x: np.ndarray) -> bool:
        """True when x lies inside any simulated peak region."""
        if not self.peaks:
            return False
        self._refresh()
        return bool(np.any(np.all(np.abs(x - self._anchors) <= self._pds, axis=1)))

    def contains_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized membership for a (n, D) batch of points."""
        if not self.peaks:
            return np.zeros(xs.shape[0], dtype=bool)
        self._refresh()
        inside = np.abs(xs[:, None, :] - self._anchors[None, :, :]) <= self._pds[None, :, :]
        return np.any(np.all(inside, axis=2), axis=1)

    def nearest(self, x: np.ndarray) -> int:
        """Index of the PRRD-nearest peak; lowest index wins ties."""
        if not self.peaks:
            raise RuntimeError("no peaks recorded")
        self._refresh()
        denom = np.maximum(self._pds, self.sd / 10.0)
        d = np.sqrt(np.sum(((x - self._anchors) / denom) ** 2, axis=1))
        return int(np.argmin(d))

    def global_peaks(self) -> list[PeakRegion]:
        return [p for p in self.peaks if p.is_global]
