"""Modular-arithmetic construction of k permutations with short pairwise LCS.

The ground set [n], n = k^2 * s1^3, is identified with the integer lattice
[s1] x [s2] x [s3] (s2 = s3 = s1*k).  Generator j in [k] assigns each
lattice point a key triple

    major  = (j^2*x + 2*j*y + 2*z) mod p      p = smallest prime > 4*s3
    middle = j*x + y
    minor  = x

and orders [n] by (major, middle, minor) lexicographically, major most
significant.  The resulting k permutations have pairwise LCS at most
2p - 1 < 16*(n*k)**(1/3).  For general n, the construction is run on the
smallest exactly-representable n' >= n (n' <= 8n) and restricted back.

Key triples for a fixed generator are pairwise distinct over [n]; the build
re-checks this after every sort and refuses to emit a permutation obtained
from tied keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .arith import ceil_cbrt, next_prime_above
from .perm import Permutation, PermSet, restrict

# Key arithmetic runs in int64; sizes beyond this would need wider math.
MAX_NK = 1 << 60


@dataclass(frozen=True)
class ConstructionParams:
    """Derived quantities of the lattice construction.

    s1, s2, s3 are the lattice side lengths (s2 = s3 = s1*k so that
    n = s1*s2*s3 exactly), and p is the key modulus, the smallest prime
    above 4*s3.
    """

    n: int
    k: int
    s1: int
    s2: int
    s3: int
    p: int

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "k": self.k, "s1": self.s1, "s2": self.s2,
                "s3": self.s3, "p": self.p}


class LatticePoint(NamedTuple):
    x: int
    y: int
    z: int


class SortKey(NamedTuple):
    """Ordering key; compared with `major` most significant, `minor` least."""

    minor: int
    middle: int
    major: int


def params_from(n: int, k: int) -> ConstructionParams:
    """Parameters for the exact case n = k^2 * s1^3; rejects other n."""
    if k < 3:
        raise ValueError(f"need at least k=3 generators, got {k}")
    if n < k * k:
        raise ValueError(f"need n >= k^2 = {k * k}, got {n}")
    if n * k >= MAX_NK:
        raise ValueError(f"n*k = {n * k} too large for int64 key arithmetic")
    s1 = ceil_cbrt(-(-n // (k * k)))
    if k * k * s1**3 != n:
        raise ValueError(
            f"n={n} is not of the form k^2*s1^3 for k={k}; use build_general"
        )
    s3 = s1 * k
    p = next_prime_above(4 * s3)
    if not p < 8 * s3:
        raise RuntimeError(f"prime search overran the Bertrand window: p={p}, s3={s3}")
    return ConstructionParams(n=n, k=k, s1=s1, s2=s3, s3=s3, p=p)


def _check_point(pt: LatticePoint, params: ConstructionParams) -> None:
    if not (1 <= pt.x <= params.s1 and 1 <= pt.y <= params.s2 and 1 <= pt.z <= params.s3):
        raise ValueError(f"{pt} outside [{params.s1}]x[{params.s2}]x[{params.s3}]")


def from_lattice(pt: LatticePoint, params: ConstructionParams) -> int:
    """Lattice point -> element of [n]; x least significant, z most."""
    _check_point(pt, params)
    return pt.x + params.s1 * (pt.y - 1) + params.s1 * params.s2 * (pt.z - 1)


def to_lattice(a: int, params: ConstructionParams) -> LatticePoint:
    """Element of [n] -> lattice point; inverse of `from_lattice`."""
    if not 1 <= a <= params.n:
        raise ValueError(f"element {a} outside [1, {params.n}]")
    a0 = a - 1
    x = a0 % params.s1 + 1
    y = (a0 // params.s1) % params.s2 + 1
    z = a0 // (params.s1 * params.s2) + 1
    return LatticePoint(x, y, z)


def sort_key(j: int, pt: LatticePoint, params: ConstructionParams) -> SortKey:
    """Key triple of a lattice point under generator j."""
    if not 1 <= j <= params.k:
        raise ValueError(f"generator index {j} outside [1, {params.k}]")
    _check_point(pt, params)
    major = (j * j * pt.x + 2 * j * pt.y + 2 * pt.z) % params.p
    middle = j * pt.x + pt.y
    return SortKey(minor=pt.x, middle=middle, major=major)


def value_sort_key(j: int, a: int, params: ConstructionParams) -> SortKey:
    """Key triple of an element of [n] under generator j."""
    return sort_key(j, to_lattice(a, params), params)


def _coordinate_arrays(params: ConstructionParams):
    a0 = np.arange(params.n, dtype=np.int64)
    x = a0 % params.s1 + 1
    y = (a0 // params.s1) % params.s2 + 1
    z = a0 // (params.s1 * params.s2) + 1
    return x, y, z


def _key_arrays(j: int, x, y, z, params: ConstructionParams):
    major = (j * j * x + 2 * j * y + 2 * z) % params.p
    middle = j * x + y
    return major, middle, x


def build_exact(n: int, k: int) -> PermSet:
    """The k generator permutations on [n] for exact n = k^2 * s1^3.

    Pairwise LCS of the result is at most 2p - 1 (and so at most
    16*(n*k)**(1/3)).
    """
    params = params_from(n, k)
    x, y, z = _coordinate_arrays(params)
    middle_cap = params.k * params.s1 + params.s2
    perms = []
    for j in range(1, k + 1):
        major, middle, minor = _key_arrays(j, x, y, z, params)
        if not ((middle > 0) & (middle <= middle_cap)).all():
            raise RuntimeError(f"middle key left (0, {middle_cap}] for j={j}")
        order = np.lexsort((minor, middle, major))
        sm, sd, sn = major[order], middle[order], minor[order]
        ties = (np.diff(sm) == 0) & (np.diff(sd) == 0) & (np.diff(sn) == 0)
        if ties.any():
            raise RuntimeError(f"duplicate sort key for j={j}; keys must be 1-1 on [n]")
        perms.append(Permutation(tuple(order.tolist())))
    record = params.as_dict() | {"n_prime": n, "exact": True}
    return PermSet(tuple(perms), provenance="algebraic", params=record)


def build_general(n: int, k: int) -> PermSet:
    """Generator permutations for any n >= k^2.

    Rounds n up to the smallest exact n' = k^2 * ceil((n/k^2)^(1/3))^3
    (n' <= 8n), builds there, and restricts every member back to [n].
    Pairwise LCS of the result is at most 32*(n*k)**(1/3).
    """
    if k < 3:
        raise ValueError(f"need at least k=3 generators, got {k}")
    if n < k * k:
        raise ValueError(f"need n >= k^2 = {k * k}, got {n}")
    s1 = ceil_cbrt(-(-n // (k * k)))
    n_prime = k * k * s1**3
    exact = build_exact(n_prime, k)
    if n_prime == n:
        return exact
    perms = tuple(restrict(p, n) for p in exact.perms)
    record = dict(exact.params) | {"n": n, "exact": False}
    return PermSet(perms, provenance="algebraic", params=record)
