"""Quantum search cost model and the exact amplitude simulator.

Searches execute classically while charging the quantum-model query cost.
The simulator runs exact Grover iterations on a real statevector and is used
to validate the cost model's iteration constant at small scale.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

GROVER_ITERATION_CONSTANT = math.pi / 4


@dataclass
class CostModelConfig:
    """Tunable constants of the charge model.

    iteration_constant: multiplier c in the per-search charge ceil(c*sqrt(N/k)).
    failure_probability: Bernoulli failure injected per search invocation.
    amplify_constant: multiplier on the 1/sqrt(epsilon) amplification budget.
    confidence_repeats_base: minimum repeats used by repeat_to_confidence.
    """

    iteration_constant: float = GROVER_ITERATION_CONSTANT
    failure_probability: float = 0.0
    amplify_constant: float = 1.0
    confidence_repeats_base: int = 1

    def __post_init__(self) -> None:
        if self.iteration_constant <= 0:
            raise ValueError("iteration constant must be positive")
        if not 0.0 <= self.failure_probability < 1.0:
            raise ValueError("failure probability must be in [0, 1)")


@dataclass
class SearchReport:
    """Outcome of one cost-model search."""

    found: Any
    classical_probes: int
    charged_cost: float
    failed: bool = False


def single_search_charge(N: int, k: int, c: float = GROVER_ITERATION_CONSTANT) -> int:
    """Charge for finding one of k marked items among N: ceil(c*sqrt(N/k)).

    k = 0 charges the emptiness-decision cost ceil(c*sqrt(N)).
    """
    return math.ceil(c * math.sqrt(N / max(k, 1)))


def all_search_charge(N: int, k: int, c: float = GROVER_ITERATION_CONSTANT) -> int:
    """Find-and-exclude schedule plus one emptiness check:
    sum_{i=1..k} ceil(c*sqrt(N/i)) + ceil(c*sqrt(N))."""
    total = math.ceil(c * math.sqrt(N))
    for i in range(1, k + 1):
        total += math.ceil(c * math.sqrt(N / i))
    return total


def search_one(
    predicate: Callable[[int], bool],
    N: int,
    cfg: CostModelConfig,
    rng: random.Random,
    k_hint: Optional[int] = None,
) -> SearchReport:
    """Find one solution in the space [1..N].

    The predicate is evaluated classically on every point; a uniformly random
    solution is returned when one exists. The charge uses the true solution
    count (held by the harness, not queried) unless k_hint is given.
    """
    if N < 1:
        raise ValueError("search space must be nonempty")
    solutions = [x for x in range(1, N + 1) if predicate(x)]
    k = len(solutions) if k_hint is None else k_hint
    charge = single_search_charge(N, k, cfg.iteration_constant)
    if cfg.failure_probability > 0 and rng.random() < cfg.failure_probability:
        return SearchReport(None, N, charge, failed=True)
    found = rng.choice(solutions) if solutions else None
    return SearchReport(found, N, charge)


def search_all(
    predicate: Callable[[int], bool],
    N: int,
    cfg: CostModelConfig,
    rng: random.Random,
    per_item_charge: bool = False,
) -> SearchReport:
    """Find all solutions in [1..N].

    Default charge is the find-and-exclude schedule (all_search_charge).
    With per_item_charge, every found item and the final emptiness check are
    each charged ceil(c*sqrt(N)), the conservative unknown-count accounting.
    """
    if N < 1:
        raise ValueError("search space must be nonempty")
    solutions = [x for x in range(1, N + 1) if predicate(x)]
    k = len(solutions)
    c = cfg.iteration_constant
    if per_item_charge:
        charge = (k + 1) * math.ceil(c * math.sqrt(N))
    else:
        charge = all_search_charge(N, k, c)
    if cfg.failure_probability > 0 and rng.random() < cfg.failure_probability:
        return SearchReport([], N, charge, failed=True)
    return SearchReport(solutions, N, charge)


def amplification_budget(epsilon: float, c_a: float = 1.0) -> int:
    if epsilon <= 0 or epsilon > 1:
        raise ValueError("epsilon must be in (0, 1]")
    return math.ceil(c_a / math.sqrt(epsilon))


def amplify(
    trial: Callable[[], Any],
    epsilon: float,
    cfg: CostModelConfig,
    success: Optional[Callable[[Any], bool]] = None,
    key: Optional[Callable[[Any], Any]] = None,
) -> tuple[Any, int]:
    """Run a success-probability-epsilon trial up to ceil(c_a/sqrt(epsilon))
    times. With a success test, stop at the first success; with a key, keep
    the best result over the whole budget (modeling maximum finding).

    Returns (result, trials actually charged).
    """
    budget = amplification_budget(epsilon, cfg.amplify_constant)
    best = None
    for t in range(1, budget + 1):
        result = trial()
        if success is not None and success(result):
            return result, t
        if key is None:
            best = result
        elif best is None or key(result) > key(best):
            best = result
    return best, budget


def confidence_repeats(p: float, target_error: float, base: int = 1) -> int:
    """Smallest l with p**l <= target_error: ceil(log(target)/log(p))."""
    if not 0.0 < p < 1.0:
        raise ValueError("subroutine error probability must be in (0, 1)")
    if not 0.0 < target_error < 1.0:
        raise ValueError("target error must be in (0, 1)")
    return max(base, math.ceil(math.log(target_error) / math.log(p)))


def repeat_to_confidence(
    subroutine: Callable[[], Any],
    p: float,
    target_error: float,
    success: Optional[Callable[[Any], bool]] = None,
    base: int = 1,
) -> tuple[Any, int]:
    """Repeat a one-sided-error subroutine l times (p**l <= target_error),
    returning the first success, or the last result when all fail.

    Returns (result, repeats used).
    """
    if success is None:
        success = lambda r: r is not None
    repeats = confidence_repeats(p, target_error, base)
    result = None
    for t in range(1, repeats + 1):
        result = subroutine()
        if success(result):
            return result, t
    return result, repeats


# ---------------------------------------------------------------------------
# Exact amplitude simulator
# ---------------------------------------------------------------------------

MAX_SIMULATOR_SPACE = 2**14


@dataclass
class AmplitudeState:
    """Real statevector of a Grover iteration on N items, k of them marked.

    Grover dynamics starting from the uniform real state stay real, so only
    real amplitudes are stored.
    """

    N: int
    marked: np.ndarray
    amplitudes: np.ndarray = field(init=False)
    t: int = field(init=False, default=0)

    def __post_init__(self) -> None:
        if self.N < 1 or self.N > MAX_SIMULATOR_SPACE:
            raise ValueError(f"simulator supports 1 <= N <= {MAX_SIMULATOR_SPACE}")
        self.amplitudes = np.full(self.N, 1.0 / math.sqrt(self.N))

    def iterate(self) -> None:
        """One Grover iteration: phase flip on marked items, then inversion
        about the mean."""
        amps = self.amplitudes
        amps = np.where(self.marked, -amps, amps)
        amps = 2.0 * amps.mean() - amps
        self.amplitudes = amps
        self.t += 1
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-12:
            raise AssertionError(f"statevector norm drifted to {norm}")

    @property
    def marked_probability(self) -> float:
        return float(np.sum(self.amplitudes[self.marked] ** 2))


def sv_success_curve(N: int, k: int, t_max: int) -> list[float]:
    """Simulated success probability after t = 0..t_max Grover iterations."""
    if not 1 <= k <= N:
        raise ValueError("need 1 <= k <= N")
    marked = np.zeros(N, dtype=bool)
    marked[:k] = True
    state = AmplitudeState(N, marked)
    curve = [state.marked_probability]
    for _ in range(t_max):
        state.iterate()
        curve.append(state.marked_probability)
    return curve


def sv_success_prob(N: int, k: int, t: int) -> float:
    """Probability mass on the k marked items after t exact Grover iterations
    from the uniform state."""
    if t < 0:
        raise ValueError("iteration count must be nonnegative")
    return sv_success_curve(N, k, t)[t]


def model_iterations(N: int, k: int, c: float = GROVER_ITERATION_CONSTANT) -> int:
    """The cost model's iteration count round(c*sqrt(N/k) - 1/2)."""
    if not 1 <= k <= N:
        raise ValueError("need 1 <= k <= N")
    return max(0, round(c * math.sqrt(N / k) - 0.5))
