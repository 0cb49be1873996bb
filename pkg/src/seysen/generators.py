"""Seeded random lattice bases for test ensembles and benchmarks."""

from dataclasses import dataclass

from .errors import GenerationFailed, RankDeficient
from .lattice import Basis
from .rng import Xoshiro256

UNIFORM = "uniform"
KNAPSACK = "knapsack"
MAX_RESAMPLES = 100


@dataclass(frozen=True)
class EnsembleSpec:
    family: str = UNIFORM
    n: int = 4
    m: int = None
    bound: int = 50
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.family not in (UNIFORM, KNAPSACK):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m is None:
            object.__setattr__(self, "m", self.n + 1 if self.family == KNAPSACK else self.n)
        if self.n < 1 or self.m < self.n or self.bound < 1 or self.trials < 1:
            raise ValueError(f"invalid ensemble spec {self}")

    def generate(self, trial=0):
        if self.family == UNIFORM:
            return gen_uniform(self.n, self.m, self.bound, self.seed, trial)
        return gen_knapsack(self.n, self.bound, self.seed, trial)

    def __iter__(self):
        return (self.generate(t) for t in range(self.trials))


def gen_uniform(n, m, bound, seed, trial=0):
    """``n x m`` basis with i.i.d. entries uniform on ``[-bound, bound]``.

    Rank-deficient draws are discarded and the stream continues.
    """
    if m < n:
        raise ValueError("need m >= n")
    rng = Xoshiro256(seed, trial)
    for _ in range(MAX_RESAMPLES):
        rows = [[rng.integer(-bound, bound) for _ in range(m)] for _ in range(n)]
        try:
            return Basis.from_rows(rows)
        except RankDeficient:
            continue
    raise GenerationFailed(f"no full-rank {n}x{m} draw after {MAX_RESAMPLES} tries")


def gen_knapsack(n, bound, seed, trial=0):
    """Rows ``(e_i | a_i)`` with ``a_i`` uniform on ``[1, bound]``.

    Always full rank, with ``Vol^2 = 1 + sum a_i^2``.
    """
    if n < 2:
        raise ValueError("knapsack bases need n >= 2")
    rng = Xoshiro256(seed, trial)
    a = [rng.integer(1, bound) for _ in range(n)]
    rows = [[int(i == j) for j in range(n)] + [a[i]] for i in range(n)]
    return Basis.from_rows(rows)
