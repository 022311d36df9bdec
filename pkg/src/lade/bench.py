"""Niching benchmark functions F1-F10 (maximization) with ground-truth metadata.

Formulas, domains, counting radii and evaluation budgets follow the CEC'2013
niching competition suite. Metadata is loaded from the packaged manifest
``data/benchmarks.tsv``; the oracle-enumerated global peak positions live in
``data/peaks.csv`` (both produced by ``tools/gen_ground_truth.py``).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .space import SearchSpace

FUNCTION_IDS = tuple(f"F{i}" for i in range(1, 11))

_TRAP_BREAKS = (2.5, 5.0, 7.5, 12.5, 17.5, 22.5, 27.5)
_LOG2_TWO = 2.0 * math.log(2.0)
_FIVE_PI = 5.0 * math.pi


def _f1(x: float) -> float:
    if x < 2.5:
        return 80.0 * (2.5 - x)
    if x < 5.0:
        return 64.0 * (x - 2.5)
    if x < 7.5:
        return 64.0 * (7.5 - x)
    if x < 12.5:
        return 28.0 * (x - 7.5)
    if x < 17.5:
        return 28.0 * (17.5 - x)
    if x < 22.5:
        return 32.0 * (x - 17.5)
    if x < 27.5:
        return 32.0 * (27.5 - x)
    return 80.0 * (x - 27.5)


def _f2(x: float) -> float:
    return math.sin(_FIVE_PI * x) ** 6


def _f3(x: float) -> float:
    env = math.exp(-_LOG2_TWO * ((x - 0.08) / 0.854) ** 2)
    return env * math.sin(_FIVE_PI * (x**0.75 - 0.05)) ** 6


def _f4(x: float, y: float) -> float:
    a = x * x + y - 11.0
    b = x + y * y - 7.0
    return 200.0 - a * a - b * b


def _f5(x: float, y: float) -> float:
    x2 = x * x
    y2 = y * y
    return -((4.0 - 2.1 * x2 + x2 * x2 / 3.0) * x2 + x * y + (4.0 * y2 - 4.0) * y2)


def _shubert_factor(x: float) -> float:
    s = 0.0
    for j in range(1, 6):
        s += j * math.cos((j + 1) * x + j)
    return s


def _shubert(xs) -> float:
    p = 1.0
    for x in xs:
        p *= _shubert_factor(x)
    return -p


def _vincent(xs) -> float:
    s = 0.0
    for x in xs:
        s += math.sin(10.0 * math.log(x))
    return s / len(xs)


def _f10(xs) -> float:
    k = (3.0, 4.0)
    s = 0.0
    for x, ki in zip(xs, k):
        s += 10.0 + 9.0 * math.cos(2.0 * math.pi * ki * x)
    return -s


def _eval_f1(xs):
    return _f1(xs[0])


def _eval_f2(xs):
    return _f2(xs[0])


def _eval_f3(xs):
    return _f3(xs[0])


def _eval_f4(xs):
    return _f4(xs[0], xs[1])


def _eval_f5(xs):
    return _f5(xs[0], xs[1])


_EVALUATORS = {
    "F1": _eval_f1,
    "F2": _eval_f2,
    "F3": _eval_f3,
    "F4": _eval_f4,
    "F5": _eval_f5,
    "F6": _shubert,
    "F7": _vincent,
    "F8": _shubert,
    "F9": _vincent,
    "F10": _f10,
}


@dataclass(frozen=True)
class BenchmarkFunction:
    """One benchmark problem: evaluator plus its counting metadata."""

    fid: str
    space: SearchSpace
    nkp: int
    global_fitness: float
    niche_radius: float
    budget: int

    @property
    def dim(self) -> int:
        return self.space.dim

    def evaluate(self, x_raw) -> float:
        """Fitness at a raw-coordinate point, clamped into the domain."""
        x = np.clip(np.asarray(x_raw, dtype=float), self.space.lower, self.space.upper)
        return _EVALUATORS[self.fid](x)


@lru_cache(maxsize=1)
def _load_manifest() -> dict[str, BenchmarkFunction]:
    table = {}
    text = resources.files("lade.data").joinpath("benchmarks.tsv").read_text()
    rows = list(csv.reader(text.splitlines(), delimiter="\t"))
    for row in rows[1:]:
        fid, dim, lower, upper, nkp, fstar, radius, budget = row
        space = SearchSpace(
            [float(v) for v in lower.split(";")],
            [float(v) for v in upper.split(";")],
        )
        assert space.dim == int(dim)
        table[fid] = BenchmarkFunction(
            fid=fid,
            space=space,
            nkp=int(nkp),
            global_fitness=float(fstar),
            niche_radius=float(radius),
            budget=int(budget),
        )
    return table


def get_function(fid: str) -> BenchmarkFunction:
    table = _load_manifest()
    if fid not in table:
        raise ValueError(f"unknown benchmark function {fid!r}; expected one of {FUNCTION_IDS}")
    return table[fid]


def evaluate(fid: str, x_raw) -> float:
    return get_function(fid).evaluate(x_raw)


def ground_truth(fid: str) -> tuple[int, float, float, int]:
    """(nkp, global_fitness, niche_radius, budget) for a function id."""
    f = get_function(fid)
    return f.nkp, f.global_fitness, f.niche_radius, f.budget


@lru_cache(maxsize=None)
def peak_positions(fid: str) -> np.ndarray:
    """Oracle-enumerated global peak positions, raw coordinates, shape (nkp, D)."""
    f = get_function(fid)
    text = resources.files("lade.data").joinpath("peaks.csv").read_text()
    pts = [
        [float(v) for v in row[1:]]
        for row in csv.reader(text.splitlines())
        if row and row[0] == fid
    ]
    arr = np.array(pts, dtype=float)
    if arr.shape != (f.nkp, f.dim):
        raise RuntimeError(f"peak data for {fid} has shape {arr.shape}")
    return arr
