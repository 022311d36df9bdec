"""Main optimization loop.

One individual repeats lifetimes until the evaluation budget is spent: peak
exploration, distinction of the located peak, refinement of the global peaks,
region simulation for the located peak, then landscape-aware reinitialization
(potential optimal region first, subspace division second, uniform random
last). Budget exhaustion is the normal termination path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import bench
from .distinct import PdmParams, classify, fir, sfd
from .explore import Individual, PepParams, generate_offspring, select_step
from .history import BudgetExhausted, HistoryArchive
from .refine import LocalSearchState, LssParams, local_search_pass, lsp_draw, prune_clusters, snum
from .region import PeakRegion, RegionSet, enlargement_factor, simulate, simulation_distance
from .reinit import ReinitParams, divide, pords_check, sdp_draw, select_subspace
from .space import from_unit


@dataclass
class RunConfig:
    fid: str
    seed: int = 0
    budget: int | None = None
    pep: PepParams = field(default_factory=PepParams)
    pdm: PdmParams = field(default_factory=PdmParams)
    lss: LssParams = field(default_factory=LssParams)
    reinit: ReinitParams = field(default_factory=ReinitParams)
    disable_prss: bool = False
    disable_pords: bool = False
    disable_sds: bool = False
    trace_path: str | None = None


@dataclass(frozen=True)
class DistinctionEvent:
    verdict: str
    position: tuple
    fitness: float


@dataclass
class RunReport:
    fid: str
    seed: int
    budget: int
    fe_used: int
    lifetimes: int
    found: list             # [(unit position tuple, fitness)] for global peaks
    local_peaks: list       # same shape, peaks currently tagged local
    distinctions: list      # [DistinctionEvent]
    retry_cap_hits: int = 0
    pords_activations: int = 0
    sds_activations: int = 0


def _write_trace(path: str, archive: HistoryArchive):
    with open(path, "w") as fh:
        for i in range(archive.used):
            fh.write(json.dumps({
                "eval_index": i + 1,
                "lifetime": int(archive.lifetime_ids[i]),
                "generation": int(archive.generations[i]),
                "position": [float(v) for v in archive.positions[i]],
                "fitness": float(archive.fitness[i]),
            }) + "\n")


def run(config: RunConfig) -> RunReport:
    func = bench.get_function(config.fid)
    dim = func.dim
    budget = config.budget if config.budget is not None else func.budget
    sd = simulation_distance(dim)
    mu = enlargement_factor(dim)
    rng = np.random.default_rng(config.seed)

    archive = HistoryArchive(dim, budget, sd)
    regions = RegionSet(dim, sd)
    resolved_centers: list[np.ndarray] = []
    events: list[DistinctionEvent] = []
    counters = {"retry": 0, "pords": 0, "sds": 0, "lifetimes": 0}

    state = {"lifetime": 0, "generation": 0}

    def evaluate(u: np.ndarray) -> float:
        f = func.evaluate(from_unit(u, func.space))
        archive.record(u, f, state["lifetime"], state["generation"])
        return f

    def refine_global_peaks():
        gps = regions.global_peaks()
        if not gps:
            return
        f_best = archive.best_fitness
        for p in gps:
            p.ls_state.lsp = lsp_draw(f_best, p.fitness, config.lss, rng)
        opnum = sum(p.ls_state.lsp for p in gps)
        if opnum == 0:
            return
        samples = snum(dim, len(gps), opnum)
        changed = False
        try:
            for p in gps:
                if p.ls_state.lsp == 1:
                    changed |= local_search_pass(p, samples, config.lss, evaluate, archive, rng)
        finally:
            if changed:
                regions.mark_dirty()
        if prune_clusters(regions.global_peaks(), config.lss.bandwidth):
            regions.mark_dirty()

    def reinitialize(ind: Individual, located: int | None):
        state["lifetime"] += 1
        state["generation"] = 0
        counters["lifetimes"] += 1
        if not config.disable_pords and not ind.por_flag and located is not None:
            pot = pords_check(located, regions.peaks, archive, config.lss.bandwidth,
                              config.reinit.fgr_threshold, resolved_centers)
            if pot is not None:
                pos = pot.center.copy()
                f = evaluate(pos)
                ind.reinitialize(pos, f, archive.used - 1, state["lifetime"],
                                 range_r=pot.radius, taboo_enabled=False, por_region=pot)
                counters["pords"] += 1
                return
        if not config.disable_sds:
            gps = regions.global_peaks()
            if sdp_draw(len(gps), rng, config.reinit.sds_gate_sharpness) == 1:
                tree = divide(np.array([p.solution for p in gps]).reshape(len(gps), dim), dim)
                leaf = select_subspace(tree, rng)
                lo = tree.lows[leaf].copy()
                hi = tree.highs[leaf].copy()
                pos = lo + rng.random(dim) * (hi - lo)
                f = evaluate(pos)
                taboo = not bool(np.min(hi - lo) < config.reinit.taboo_off_edge)
                ind.reinitialize(pos, f, archive.used - 1, state["lifetime"],
                                 restriction=(lo, hi), taboo_enabled=taboo)
                counters["sds"] += 1
                return
        pos = rng.random(dim)
        f = evaluate(pos)
        ind.reinitialize(pos, f, archive.used - 1, state["lifetime"])

    ind: Individual | None = None
    classified = True
    try:
        pos = rng.random(dim)
        f = evaluate(pos)
        ind = Individual(position=pos, fitness=f, eval_index=archive.used - 1,
                         trajectory=[f], lifetime_id=0)
        classified = False
        while True:
            # peak exploration: one full lifetime
            while True:
                state["generation"] = len(ind.trajectory)
                u, capped = generate_offspring(ind, config.pep, regions, rng)
                if capped:
                    counters["retry"] += 1
                fu = evaluate(u)
                if select_step(ind, u, fu, archive.used - 1, config.pep):
                    break
            # peak distinction
            dist = classify(ind, regions, archive, config.pdm, config.pep.stall_gens, evaluate)
            classified = True
            events.append(DistinctionEvent(dist.verdict, tuple(ind.position), ind.fitness))
            if dist.verdict == "found":
                located = dist.nearest_region
            else:
                peak = PeakRegion(
                    anchor=ind.position.copy(),
                    anchor_index=ind.eval_index,
                    solution=ind.position.copy(),
                    fitness=ind.fitness,
                    pd=np.zeros(dim),
                    is_global=dist.verdict == "new_global",
                    origin_lifetime=ind.lifetime_id,
                    ls_state=LocalSearchState(sigma=config.lss.sigma_init),
                )
                located = regions.add(peak)
            if ind.por_region is not None and dist.verdict == "new_global":
                ind.por_region.resolved = True
                resolved_centers.append(ind.por_region.center)
            # refinement, then region simulation for the located peak
            refine_global_peaks()
            if not config.disable_prss:
                simulate(regions.peaks[located], archive, sd, mu)
                regions.mark_dirty()
            reinitialize(ind, located)
            classified = False
    except BudgetExhausted:
        if ind is not None and not classified and ind.trajectory:
            s = sfd(archive.best_fitness, ind.fitness, config.pdm.gap_scale)
            rate = fir(ind.trajectory, config.pep.stall_gens, dim)
            if s < rate:
                regions.add(PeakRegion(
                    anchor=ind.position.copy(),
                    anchor_index=ind.eval_index,
                    solution=ind.position.copy(),
                    fitness=ind.fitness,
                    pd=np.zeros(dim),
                    is_global=True,
                    origin_lifetime=ind.lifetime_id,
                    ls_state=LocalSearchState(sigma=config.lss.sigma_init),
                ))
                events.append(DistinctionEvent("new_global", tuple(ind.position), ind.fitness))

    if config.trace_path:
        _write_trace(config.trace_path, archive)

    found = [(tuple(p.solution), p.fitness) for p in regions.peaks if p.is_global]
    local_peaks = [(tuple(p.solution), p.fitness) for p in regions.peaks if not p.is_global]
    return RunReport(
        fid=config.fid,
        seed=config.seed,
        budget=budget,
        fe_used=archive.used,
        lifetimes=counters["lifetimes"],
        found=found,
        local_peaks=local_peaks,
        distinctions=events,
        retry_cap_hits=counters["retry"],
        pords_activations=counters["pords"],
        sds_activations=counters["sds"],
    )
