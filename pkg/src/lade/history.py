"""Append-only evaluation archive with budget accounting and radius queries.

Every fitness evaluation of a run passes through :meth:`HistoryArchive.record`,
so the archive length is the authoritative FE counter. A uniform grid with
cell edge equal to the peak-simulation distance serves fixed-radius neighbor
queries; larger radii fall back to scanning the covering block of cells.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class BudgetExhausted(Exception):
    """Raised by record() when the evaluation budget is used up."""


@dataclass(frozen=True)
class EvalRecord:
    position: np.ndarray
    fitness: float
    eval_index: int  # 1-based
    lifetime_id: int
    generation: int


@dataclass
class BudgetState:
    used: int
    max: int


class HistoryArchive:
    def __init__(self, dim: int, budget: int, cell: float):
        if budget < 1:
            raise ValueError("budget must be at least 1")
        if cell <= 0:
            raise ValueError("cell edge must be positive")
        self.dim = dim
        self.budget = int(budget)
        self.cell = float(cell)
        self.used = 0
        self.positions = np.empty((budget, dim), dtype=float)
        self.fitness = np.empty(budget, dtype=float)
        self.lifetime_ids = np.empty(budget, dtype=np.int64)
        self.generations = np.empty(budget, dtype=np.int64)
        self._grid: dict[tuple, list[int]] = {}
        self._best_i = -1
        self._worst_i = -1

    # -- recording ----------------------------------------------------------

    def record(self, position: np.ndarray, fitness: float, lifetime_id: int, generation: int) -> int:
        """Append one evaluation; returns its 1-based index.

        Raises BudgetExhausted (before storing anything) once used == budget.
        """
        if self.used >= self.budget:
            raise BudgetExhausted(f"budget of {self.budget} evaluations exhausted")
        i = self.used
        self.positions[i] = position
        self.fitness[i] = fitness
        self.lifetime_ids[i] = lifetime_id
        self.generations[i] = generation
        key = tuple((position // self.cell).astype(np.int64))
        self._grid.setdefault(key, []).append(i)
        if self._best_i < 0 or fitness > self.fitness[self._best_i]:
            self._best_i = i
        if self._worst_i < 0 or fitness < self.fitness[self._worst_i]:
            self._worst_i = i
        self.used += 1
        return self.used

    @property
    def budget_state(self) -> BudgetState:
        return BudgetState(self.used, self.budget)

    @property
    def remaining(self) -> int:
        return self.budget - self.used

    # -- queries ------------------------------------------------------------

    def _make_record(self, i: int) -> EvalRecord:
        return EvalRecord(
            position=self.positions[i].copy(),
            fitness=float(self.fitness[i]),
            eval_index=i + 1,
            lifetime_id=int(self.lifetime_ids[i]),
            generation=int(self.generations[i]),
        )

    def best(self) -> EvalRecord:
        if self.used == 0:
            raise RuntimeError("archive is empty")
        return self._make_record(self._best_i)

    def worst(self) -> EvalRecord:
        if self.used == 0:
            raise RuntimeError("archive is empty")
        return self._make_record(self._worst_i)

    @property
    def best_fitness(self) -> float:
        if self.used == 0:
            raise RuntimeError("archive is empty")
        return float(self.fitness[self._best_i])

    @property
    def worst_fitness(self) -> float:
        if self.used == 0:
            raise RuntimeError("archive is empty")
        return float(self.fitness[self._worst_i])

    def cell_indices(self, key: tuple) -> list[int] | None:
        """Raw record indices stored in one grid cell (None when empty)."""
        return self._grid.get(key)

    def neighbor_indices(self, center: np.ndarray, radius: float) -> np.ndarray:
        """0-based indices of records within Euclidean distance <= radius."""
        if radius <= 0:
            raise ValueError("radius must be positive")
        lo = ((center - radius) // self.cell).astype(np.int64)
        hi = ((center + radius) // self.cell).astype(np.int64)
        cand: list[int] = []
        for key in np.ndindex(*(hi - lo + 1)):
            cell = self._grid.get(tuple(lo + key))
            if cell:
                cand.extend(cell)
        if not cand:
            return np.empty(0, dtype=np.int64)
        idx = np.asarray(cand, dtype=np.int64)
        d2 = np.sum((self.positions[idx] - center) ** 2, axis=1)
        return idx[d2 <= radius * radius]

    def neighbors_within(self, center: np.ndarray, radius: float) -> list[EvalRecord]:
        return [self._make_record(i) for i in self.neighbor_indices(np.asarray(center, dtype=float), radius)]
