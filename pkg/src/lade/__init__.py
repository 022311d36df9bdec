"""Landscape-aware differential evolution for multimodal optimization."""

from .bench import FUNCTION_IDS, BenchmarkFunction, evaluate, get_function, ground_truth, peak_positions
from .distinct import PdmParams
from .engine import RunConfig, RunReport, run
from .explore import PepParams
from .history import BudgetExhausted
from .metrics import count_found, distinction_rates, pr, sr
from .refine import LssParams
from .reinit import ReinitParams
from .space import SearchSpace, from_unit, to_unit

__all__ = [
    "FUNCTION_IDS",
    "BenchmarkFunction",
    "BudgetExhausted",
    "LssParams",
    "PdmParams",
    "PepParams",
    "ReinitParams",
    "RunConfig",
    "RunReport",
    "SearchSpace",
    "count_found",
    "distinction_rates",
    "evaluate",
    "from_unit",
    "get_function",
    "ground_truth",
    "peak_positions",
    "pr",
    "run",
    "sr",
    "to_unit",
]
