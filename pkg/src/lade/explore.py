"""Peak exploration: a single individual evolving against a virtual population.

The individual mutates with difference vectors of two virtual points drawn
uniformly from a box of edge R around its position. R halves after a run of
non-improving generations; after a fixed number of halvings the lifetime ends
and the converged solution is handed to peak distinction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass
class PepParams:
    F: float = 0.5
    CR: float = 0.9
    stall_gens: int = 15     # consecutive non-improving generations before R halves
    max_halvings: int = 10   # halvings that exhaust a lifetime
    retry_cap: int = 100     # offspring draws before the taboo constraint is waived

    def __post_init__(self):
        if self.F <= 0:
            raise ValueError("F must be positive")
        if not 0.0 <= self.CR <= 1.0:
            raise ValueError("CR must lie in [0,1]")
        if self.stall_gens < 1 or self.max_halvings < 1:
            raise ValueError("stall_gens and max_halvings must be at least 1")


@dataclass
class Individual:
    position: np.ndarray
    fitness: float
    eval_index: int                      # archive index (0-based) of the current position
    range_r: float = 1.0
    fail_count: int = 0
    halvings: int = 0
    trajectory: list = field(default_factory=list)  # best-so-far fitness per generation
    restriction: tuple | None = None     # (lower, upper) subspace box, unit coordinates
    taboo_enabled: bool = True
    por_flag: bool = False               # this lifetime started inside a potential optimal region
    por_region: object = None
    lifetime_id: int = 0

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        if self.restriction is not None:
            return self.restriction
        d = self.position.size
        return np.zeros(d), np.ones(d)

    def reinitialize(self, position, fitness, eval_index, lifetime_id, *, range_r=1.0,
                     restriction=None, taboo_enabled=True, por_region=None):
        self.position = position
        self.fitness = fitness
        self.eval_index = eval_index
        self.lifetime_id = lifetime_id
        self.range_r = range_r
        self.fail_count = 0
        self.halvings = 0
        self.trajectory = [fitness]
        self.restriction = restriction
        self.taboo_enabled = taboo_enabled
        self.por_flag = por_region is not None
        self.por_region = por_region


def virtual_pair(x: np.ndarray, r: float, lb: np.ndarray, ub: np.ndarray, rng):
    """Two independent virtual individuals, uniform in the edge-r box around x
    intersected with the bounds."""
    lo = np.maximum(x - r / 2.0, lb)
    hi = np.minimum(x + r / 2.0, ub)
    draws = lo + rng.random((2, x.size)) * (hi - lo)
    return draws[0], draws[1]


def _candidate_batch(x, r, lb, ub, params: PepParams, count: int, rng) -> np.ndarray:
    """count mutation+crossover candidates, clamped into [lb, ub]."""
    d = x.size
    lo = np.maximum(x - r / 2.0, lb)
    hi = np.minimum(x + r / 2.0, ub)
    draws = lo + rng.random((count, 2, d)) * (hi - lo)
    v = x + params.F * (draws[:, 0, :] - draws[:, 1, :])
    mask = rng.random((count, d)) <= params.CR
    mask[np.arange(count), rng.integers(0, d, size=count)] = True
    u = np.where(mask, v, x)
    return np.clip(u, lb, ub)


def generate_offspring(ind: Individual, params: PepParams, regions, rng):
    """Mutation plus binomial crossover, repeated until the candidate leaves
    every taboo region (when enabled). Rejected candidates cost no FEs.

    Returns (offspring, capped) where capped flags that the retry cap was hit
    and the last candidate was accepted regardless of taboo membership.
    Candidates are always clamped into the individual's bounds. All retries
    are drawn and screened as one batch: candidates are free, and crowded
    taboo sets would otherwise dominate the runtime.
    """
    x = ind.position
    lb, ub = ind.bounds
    if not (ind.taboo_enabled and regions is not None and len(regions) > 0):
        return _candidate_batch(x, ind.range_r, lb, ub, params, 1, rng)[0], False
    batch = _candidate_batch(x, ind.range_r, lb, ub, params, params.retry_cap, rng)
    hits = np.flatnonzero(~regions.contains_many(batch))
    if hits.size:
        return batch[hits[0]], False
    return batch[-1], True


def select_step(ind: Individual, u: np.ndarray, fu: float, u_index: int, params: PepParams) -> bool:
    """Greedy selection plus range adaptation; returns True when the lifetime
    is exhausted.

    Equal fitness at a distinct position is accepted (plateau drift); an
    offspring identical to the parent counts as a stagnation.
    """
    if fu >= ind.fitness and not np.array_equal(u, ind.position):
        ind.position = u
        ind.fitness = fu
        ind.eval_index = u_index
        ind.fail_count = 0
    else:
        ind.fail_count += 1
        if ind.fail_count >= params.stall_gens:
            ind.range_r /= 2.0
            ind.fail_count = 0
            ind.halvings += 1
    ind.trajectory.append(ind.fitness)
    return ind.halvings >= params.max_halvings
