"""Seeded random baselines and exact lower-bound checkers.

Randomness comes from numpy's PCG64, and every trial draws from a generator
derived from (seed, trial index), so results are reproducible and identical
whether trials run serially or in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arith import ceil_cbrt
from .perm import Permutation, PermSet, restrict
from .subseq import lcs_all_pairs, lds, lis

PREFIX_TABLE_SIZE_LIMIT = 2000


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """The PCG64 stream for one (seed, trial) pair."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, trial))))


def random_perm(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform random permutation on [n] (in-place shuffle under the hood)."""
    if n < 1:
        raise ValueError("ground set must be non-empty")
    return Permutation(tuple(rng.permutation(n).tolist()))


def random_perm_set(n: int, k: int, rng: np.random.Generator) -> PermSet:
    return PermSet(
        tuple(random_perm(n, rng) for _ in range(k)),
        provenance="random",
        params={"n": n, "k": k},
    )


@dataclass(frozen=True)
class LisSample:
    """Observed LIS lengths over `trials` uniform random permutations."""

    n: int
    trials: int
    seed: int
    lengths: tuple[int, ...]
    lds_lengths: Optional[tuple[int, ...]] = None

    def mean(self) -> float:
        return sum(self.lengths) / self.trials

    def to_csv(self) -> str:
        lines = ["trial,length"]
        lines += [f"{t},{v}" for t, v in enumerate(self.lengths)]
        return "\n".join(lines) + "\n"


def sample_lis(n: int, trials: int, seed: int, *, record_lds: bool = False) -> LisSample:
    if trials < 1:
        raise ValueError("need at least one trial")
    lengths = []
    down = [] if record_lds else None
    for t in range(trials):
        word = trial_rng(seed, t).permutation(n).tolist()
        lengths.append(lis(word))
        if down is not None:
            down.append(lds(word))
    return LisSample(
        n=n,
        trials=trials,
        seed=seed,
        lengths=tuple(lengths),
        lds_lengths=None if down is None else tuple(down),
    )


def lcs_threshold(n: int) -> float:
    """The 2e*sqrt(n) level that random pairs essentially never reach."""
    return 2.0 * math.e * math.sqrt(n)


@dataclass(frozen=True)
class ProbabilisticCheck:
    """Max-pair LCS of sampled random k-sets versus the 2e*sqrt(n) level."""

    n: int
    k: int
    trials: int
    seed: int
    threshold: float
    max_lcs_per_trial: tuple[int, ...]

    @property
    def violations(self) -> int:
        return sum(v >= self.threshold for v in self.max_lcs_per_trial)

    @property
    def all_below(self) -> bool:
        return self.violations == 0

    @property
    def min_max_lcs(self) -> int:
        """Empirical upper estimate of the guaranteed common-subsequence length."""
        return min(self.max_lcs_per_trial)


def check_probabilistic_bound(n: int, k: int, trials: int, seed: int) -> ProbabilisticCheck:
    if k < 2:
        raise ValueError("need at least two permutations per sampled set")
    if trials < 1:
        raise ValueError("need at least one trial")
    maxima = []
    for t in range(trials):
        rng = trial_rng(seed, t)
        sampled = random_perm_set(n, k, rng)
        maxima.append(lcs_all_pairs(sampled).max_pair if n > 0 else 0)
    return ProbabilisticCheck(
        n=n, k=k, trials=trials, seed=seed,
        threshold=lcs_threshold(n), max_lcs_per_trial=tuple(maxima),
    )


def prefix_lcs_table(a: Permutation, b: Permutation) -> tuple[int, ...]:
    """For every value v, the longest common subsequence of a and b that
    starts with v.  Entry v-1 holds the length for value v.

    Quadratic scan from the right; the table's maximum equals the plain
    pairwise LCS.
    """
    if a.n != b.n:
        raise ValueError(f"cannot compare permutations on [{a.n}] and [{b.n}]")
    n = a.n
    if n > PREFIX_TABLE_SIZE_LIMIT:
        raise ValueError(f"prefix table guarded at n <= {PREFIX_TABLE_SIZE_LIMIT}")
    pos_b = [0] * n
    for idx, v in enumerate(b.word):
        pos_b[v] = idx
    table = [0] * n
    seen: list[tuple[int, int]] = []  # (pos in b, table value), in reverse a-order
    for v in reversed(a.word):
        pb = pos_b[v]
        best = 0
        for qb, length in seen:
            if qb > pb and length > best:
                best = length
        table[v] = best + 1
        seen.append((pb, table[v]))
    return tuple(table)


@dataclass(frozen=True)
class LowerBoundReport:
    n: int
    k: int
    max_pair_lcs: int
    cube_root_bound: int
    pigeonhole_m: int
    pigeonhole_pair: tuple[int, int, tuple[int, ...]]

    @property
    def holds(self) -> bool:
        return self.max_pair_lcs >= self.cube_root_bound


def largest_m_with_factorial_below(k: int, n: int) -> int:
    """Largest m with m! < k, capped at n."""
    m, fact = 1, 1
    while fact * (m + 1) < k and m + 1 <= n:
        m += 1
        fact *= m
    return min(m, n)


def pigeonhole_pair(s: PermSet) -> tuple[int, int, int]:
    """(m, i, j): two members that order the elements 1..m identically.

    m is the largest integer with m! < k (capped at n); with m! orderings
    and k > m! members, a coincidence is forced.  Indices are 0-based and
    the first matching pair in scan order is returned.
    """
    if s.k < 2:
        raise ValueError("need at least two permutations")
    m = largest_m_with_factorial_below(s.k, s.n)
    seen: dict[tuple[int, ...], int] = {}
    for idx, p in enumerate(s.perms):
        key = restrict(p, m).word
        if key in seen:
            return m, seen[key], idx
        seen[key] = idx
    raise RuntimeError(f"no coinciding pair among {s.k} orderings of [{m}]")


def verify_cube_root_lower_bound(s: PermSet) -> LowerBoundReport:
    """Check that the set's best pair reaches the ceil(n**(1/3)) floor.

    Holds for every set of k >= 3 permutations; a violation would mean the
    LCS engine itself is broken.
    """
    if s.k < 3:
        raise ValueError("the cube-root floor applies to sets of k >= 3")
    max_pair = lcs_all_pairs(s).max_pair
    bound = ceil_cbrt(s.n)
    m, i, j = pigeonhole_pair(s)
    witness = restrict(s.perms[i], m).one_line
    return LowerBoundReport(
        n=s.n, k=s.k, max_pair_lcs=max_pair, cube_root_bound=bound,
        pigeonhole_m=m, pigeonhole_pair=(i, j, witness),
    )
