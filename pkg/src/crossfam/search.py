"""Simulated annealing over integer point configurations.

The objective is the exact number of k-crossing families, recounted
incrementally: a move displaces one point, so only the crossing-graph rows
of segments incident to that point change. States live on an integer grid
so every predicate stays exact and checkpoints serialize losslessly.

Randomness comes from ``random.Random`` (the seedable, platform-independent
Mersenne Twister in the standard library); displacement offsets are drawn
as centered binomials via ``getrandbits``, a discretized Gaussian built from
integer operations only. Identical configs therefore reproduce identical
runs bit for bit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional

from .crossing import _count_cliques, count_k_families
from .errors import RetryExhaustedError
from .geometry import PointSet, _cross_int, is_general_position, normalize_coordinates
from .replication import choose_epsilon, replicate

TraceRow = tuple[int, float, int, int]

_CHECK_INTERVAL = 4096  # full recount guard frequency
_MAX_RETRIES = 100


@dataclass(frozen=True)
class SearchConfig:
    """Annealing schedule and problem parameters."""

    n: int
    k: int
    seed: int
    iterations: int
    initial_temperature: float = 1.0
    cooling_rate: float = 0.9999
    step_sigma: float = 2.0
    grid_bound: int = 0  # 0 = default n*n

    def __post_init__(self):
        if self.grid_bound == 0:
            object.__setattr__(self, "grid_bound", self.n * self.n)
        if self.k < 1 or self.n < 2 * self.k:
            raise ValueError(f"need n >= 2k, got n={self.n}, k={self.k}")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if not 0 < self.cooling_rate < 1:
            raise ValueError("cooling rate must lie strictly between 0 and 1")
        if self.initial_temperature <= 0:
            raise ValueError("initial temperature must be positive")
        if self.step_sigma < 0:
            raise ValueError("step sigma must be non-negative")
        if self.grid_bound < self.n * self.n:
            raise ValueError(f"grid bound must be at least n^2 = {self.n * self.n}")


@dataclass(frozen=True)
class SearchState:
    """Result of an annealing run; the trace logs one row per iteration."""

    current: PointSet
    best: PointSet
    best_objective: int
    trace: tuple[TraceRow, ...]


def _discrete_gauss(rng: random.Random, sigma: float) -> int:
    """Centered binomial offset with variance ~ sigma^2, integer arithmetic only."""
    if sigma <= 0:
        return 0
    half = max(1, round(2 * sigma * sigma))
    return rng.getrandbits(2 * half).bit_count() - half


def _gp_with_moved(coords: list[tuple[int, int]], moved: int) -> bool:
    """General-position check restricted to triples containing ``moved``."""
    mx, my = coords[moved]
    n = len(coords)
    for b in range(n - 1):
        if b == moved:
            continue
        ux = coords[b][0] - mx
        uy = coords[b][1] - my
        if ux == 0 and uy == 0:
            return False
        for c in range(b + 1, n):
            if c == moved:
                continue
            if ux * (coords[c][1] - my) == uy * (coords[c][0] - mx):
                return False
    return True


def random_general_position(n: int, rng: random.Random, bound: int) -> PointSet:
    """Uniform integer points in [-bound, bound]^2, resampled into general position."""
    if n >= 1 and bound < 1:
        raise ValueError("bound must be positive")
    coords: list[tuple[int, int]] = []
    for i in range(n):
        for _ in range(_MAX_RETRIES):
            coords.append((rng.randint(-bound, bound), rng.randint(-bound, bound)))
            if _gp_with_moved(coords, i):
                break
            coords.pop()
        else:
            raise RetryExhaustedError(f"could not place point {i} on the [{-bound},{bound}] grid")
    return PointSet.from_coords(coords)


def perturb(
    S: PointSet,
    sigma: float,
    rng: random.Random,
    grid_bound: Optional[int] = None,
    max_retries: int = _MAX_RETRIES,
) -> PointSet:
    """Displace one uniformly chosen point by a discretized Gaussian offset.

    Proposals violating general position are resampled (fresh point choice
    and offset) up to ``max_retries`` times. ``sigma = 0`` returns the input
    unchanged.
    """
    if sigma == 0:
        return S
    coords = [(int(p.x), int(p.y)) for p in S]
    if PointSet.from_coords(coords) != S:
        raise ValueError("perturbation requires integer coordinates")
    for _ in range(max_retries):
        idx = rng.randrange(len(coords))
        dx = _discrete_gauss(rng, sigma)
        dy = _discrete_gauss(rng, sigma)
        x = coords[idx][0] + dx
        y = coords[idx][1] + dy
        if grid_bound is not None:
            x = max(-grid_bound, min(grid_bound, x))
            y = max(-grid_bound, min(grid_bound, y))
        old = coords[idx]
        if (x, y) == old:
            continue
        coords[idx] = (x, y)
        if _gp_with_moved(coords, idx):
            return PointSet.from_coords(coords)
        coords[idx] = old
    raise RetryExhaustedError(f"no general-position move found in {max_retries} tries")


def _build_rows(coords: list[tuple[int, int]], segs) -> list[int]:
    adj = [0] * len(segs)
    for i in range(len(segs) - 1):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if c == a or c == b or d == a or d == b:
                continue
            if _cross_int(coords, a, b, c, d):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _refresh_point(adj: list[int], coords, segs, incident: list[int]) -> None:
    """Recompute the adjacency rows of the segments in ``incident``."""
    m = len(segs)
    for i in incident:
        a, b = segs[i]
        row = 0
        for j in range(m):
            if j == i:
                continue
            c, d = segs[j]
            if c == a or c == b or d == a or d == b:
                continue
            if _cross_int(coords, a, b, c, d):
                row |= 1 << j
        changed = adj[i] ^ row
        adj[i] = row
        while changed:
            bit = changed & -changed
            adj[bit.bit_length() - 1] ^= 1 << i
            changed ^= bit


def anneal(
    cfg: SearchConfig,
    initial: PointSet,
    on_improve: Optional[Callable[[int, int], None]] = None,
) -> SearchState:
    """Metropolis search minimizing the number of k-crossing families.

    Exponential cooling, single-point moves, early exit at objective zero.
    A KeyboardInterrupt stops the loop cleanly and returns the state so far.
    ``on_improve(iteration, best_objective)`` fires when the best improves.
    """
    if len(initial) != cfg.n:
        raise ValueError(f"initial set has {len(initial)} points, config expects {cfg.n}")
    coords = [(int(p.x), int(p.y)) for p in initial]
    if PointSet.from_coords(coords) != initial:
        raise ValueError("initial set must have integer coordinates")
    if not is_general_position(initial):
        raise ValueError("initial set must be in general position")

    rng = random.Random(cfg.seed)
    segs = tuple(combinations(range(cfg.n), 2))
    incident = [[i for i, s in enumerate(segs) if p in s] for p in range(cfg.n)]
    adj = _build_rows(coords, segs)

    current_obj = _count_cliques(adj, cfg.k)
    best = list(coords)
    best_obj = current_obj
    temperature = cfg.initial_temperature
    trace: list[TraceRow] = [(0, temperature, current_obj, best_obj)]

    if best_obj > 0:
        try:
            for iteration in range(1, cfg.iterations + 1):
                temperature *= cfg.cooling_rate
                moved = -1
                for _ in range(_MAX_RETRIES):
                    idx = rng.randrange(cfg.n)
                    dx = _discrete_gauss(rng, cfg.step_sigma)
                    dy = _discrete_gauss(rng, cfg.step_sigma)
                    x = max(-cfg.grid_bound, min(cfg.grid_bound, coords[idx][0] + dx))
                    y = max(-cfg.grid_bound, min(cfg.grid_bound, coords[idx][1] + dy))
                    if (x, y) == coords[idx]:
                        continue
                    old_point = coords[idx]
                    coords[idx] = (x, y)
                    if _gp_with_moved(coords, idx):
                        moved = idx
                        break
                    coords[idx] = old_point
                if moved < 0:
                    raise RetryExhaustedError(
                        f"no general-position move found at iteration {iteration}"
                    )

                saved_rows = adj.copy()
                _refresh_point(adj, coords, segs, incident[moved])
                proposed_obj = _count_cliques(adj, cfg.k)
                delta = proposed_obj - current_obj
                if delta <= 0 or (
                    temperature > 0
                    and rng.random() < math.exp(-delta / temperature)
                ):
                    current_obj = proposed_obj
                    if current_obj < best_obj:
                        best_obj = current_obj
                        best = list(coords)
                        if on_improve is not None:
                            on_improve(iteration, best_obj)
                else:
                    coords[moved] = old_point
                    adj = saved_rows

                trace.append((iteration, temperature, current_obj, best_obj))

                if iteration % _CHECK_INTERVAL == 0 and adj != _build_rows(coords, segs):
                    raise AssertionError("incremental crossing-graph update drifted")
                if best_obj == 0:
                    break
        except KeyboardInterrupt:
            pass

    best_set = PointSet.from_coords(best)
    recount = count_k_families(best_set, cfg.k)
    if recount != best_obj:
        raise AssertionError(
            f"objective bookkeeping drifted: recount {recount} != recorded {best_obj}"
        )
    return SearchState(
        current=PointSet.from_coords(coords),
        best=best_set,
        best_objective=best_obj,
        trace=tuple(trace),
    )


def seed_by_doubling(S: PointSet, m: int) -> PointSet:
    """Replicate ``S`` with a certified spacing as a low-objective search seed.

    Normalizes coordinates, picks a certified spacing, and replicates; for
    m = 1 this is just coordinate normalization. The result has rational
    coordinates; scale with :func:`crossfam.geometry.to_integer_coordinates`
    before feeding it to :func:`anneal`.
    """
    S0 = normalize_coordinates(S)
    if m == 1:
        return S0
    eps = choose_epsilon(S0, m)
    S2, _ = replicate(S0, m, eps)
    return S2
