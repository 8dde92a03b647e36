"""Permutation codes under deletion distance.

For two permutations on the same [n], half the number of deletions plus
insertions needed to turn one into the other is exactly n - LCS, so all
distances here are computed through the LCS engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation, PermSet
from .subseq import lcs_all_pairs, lcs_pair


def d_del(a: Permutation, b: Permutation) -> int:
    """Deletion distance between two permutations on the same ground set."""
    if a.n != b.n:
        raise ValueError(f"cannot compare permutations on [{a.n}] and [{b.n}]")
    return a.n - lcs_pair(a, b)


def min_distance(s: PermSet) -> int:
    """Minimum pairwise deletion distance; 0 when codewords repeat."""
    if s.k < 2:
        raise ValueError("a code needs at least two codewords")
    return s.n - lcs_all_pairs(s).max_pair


@dataclass(frozen=True)
class CodeReport:
    """Code parameters of a permutation set over the deletion metric."""

    n: int
    k: int
    min_distance: int
    max_pair_lcs: int
    provenance: str
    duplicate_codewords: bool

    def as_dict(self) -> dict:
        out = {
            "n": self.n, "k": self.k, "min_distance": self.min_distance,
            "max_pair_lcs": self.max_pair_lcs, "provenance": self.provenance,
        }
        if self.duplicate_codewords:
            out["warning"] = "duplicate codewords; distance degenerates to 0"
        return out


def code_report(s: PermSet) -> CodeReport:
    if s.k < 2:
        raise ValueError("a code needs at least two codewords")
    max_pair = lcs_all_pairs(s).max_pair
    dist = s.n - max_pair
    if dist + max_pair != s.n:
        raise RuntimeError("distance/LCS duality broken")
    return CodeReport(
        n=s.n, k=s.k, min_distance=dist, max_pair_lcs=max_pair,
        provenance=s.provenance,
        duplicate_codewords=len(set(p.word for p in s.perms)) < s.k,
    )
