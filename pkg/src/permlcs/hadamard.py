"""Sign-matrix construction of k permutations with short pairwise LCS.

Elements of [n'], n' = s**(k-1), are read as (k-1)-digit base-s numbers.
Row i of a normalized Hadamard matrix of order k chooses, per digit
position, either the identity or the reversal of [s]; permutation i maps
each element digit-wise through those choices.  Any two rows agree on
exactly k/2 - 1 of the digit columns, which pigeonholes every common
subsequence down to length at most s**(k/2 - 1).

Supported orders: powers of two (doubling construction) and q + 1 for
primes q = 3 (mod 4) (quadratic-residue construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .arith import is_prime
from .perm import Permutation, PermSet, restrict

DEFAULT_SIZE_CAP = 1 << 24


@dataclass(frozen=True)
class HadamardMatrix:
    """Square +/-1 matrix in which distinct rows differ in exactly order/2 entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise ValueError("matrix must be square")
        if any(v not in (1, -1) for r in rows for v in r):
            raise ValueError("entries must be +1 or -1")
        for i in range(k):
            for j in range(i + 1, k):
                diff = sum(a != b for a, b in zip(rows[i], rows[j]))
                if 2 * diff != k:
                    raise ValueError(
                        f"rows {i} and {j} differ in {diff} entries, need {k} / 2"
                    )

    @property
    def order(self) -> int:
        return len(self.rows)

    @property
    def is_normalized(self) -> bool:
        return all(v == 1 for v in self.rows[0]) and all(r[0] == 1 for r in self.rows)


def sylvester(order: int) -> HadamardMatrix:
    """Doubling construction; order must be a power of two."""
    if order < 1 or order & (order - 1):
        raise ValueError(f"order {order} is not a power of two")
    rows = [[1]]
    while len(rows) < order:
        rows = [r + r for r in rows] + [r + [-v for v in r] for r in rows]
    return HadamardMatrix(tuple(tuple(r) for r in rows))


def paley(order: int) -> HadamardMatrix:
    """Quadratic-residue construction for order q + 1, q prime = 3 (mod 4)."""
    q = order - 1
    if q < 3 or q % 4 != 3 or not is_prime(q):
        raise ValueError(f"order {order} needs order-1 to be a prime = 3 (mod 4)")
    residues = {v * v % q for v in range(1, q)}
    chi = [0] + [1 if v in residues else -1 for v in range(1, q)]
    rows = [[1] * order]
    for a in range(q):
        row = [-1] + [chi[(a - b) % q] for b in range(q)]
        row[a + 1] = 1
        rows.append(row)
    return normalize(HadamardMatrix(tuple(tuple(r) for r in rows)))


def normalize(h: HadamardMatrix) -> HadamardMatrix:
    """Negate rows/columns until the first row and column are all +1.

    Row and column negation both preserve the pairwise-difference property.
    """
    rows = [list(r) for r in h.rows]
    for r in rows:
        if r[0] == -1:
            r[:] = [-v for v in r]
    for c, v in enumerate(rows[0]):
        if v == -1:
            for r in rows:
                r[c] = -r[c]
    return HadamardMatrix(tuple(tuple(r) for r in rows))


def hadamard_matrix(order: int) -> HadamardMatrix:
    """A normalized Hadamard matrix of the given order, if one is supported."""
    if order >= 1 and order & (order - 1) == 0:
        return sylvester(order)
    if order >= 4 and order % 4 == 0 and is_prime(order - 1) and (order - 1) % 4 == 3:
        return paley(order)
    raise ValueError(f"no supported Hadamard construction for order {order}")


def agreement_columns(h: HadamardMatrix, i: int, j: int) -> set[int]:
    """Columns in 1..order-1 where rows i and j carry the same sign.

    For a matrix whose first column is all +1 the result has exactly
    order/2 - 1 members.
    """
    if i == j:
        raise ValueError("rows must be distinct")
    k = h.order
    if not (0 <= i < k and 0 <= j < k):
        raise ValueError(f"row indices ({i}, {j}) outside [0, {k})")
    ri, rj = h.rows[i], h.rows[j]
    return {c for c in range(1, k) if ri[c] == rj[c]}


class DigitVector(NamedTuple):
    """Base-s digits of x - 1, most significant first, presented 1-based."""

    base: int
    digits: tuple[int, ...]


def digits_of(x: int, base: int, width: int) -> DigitVector:
    if not 1 <= x <= base**width:
        raise ValueError(f"element {x} outside [1, {base ** width}]")
    rest = x - 1
    out = []
    for _ in range(width):
        rest, d = divmod(rest, base)
        out.append(d + 1)
    return DigitVector(base, tuple(reversed(out)))


def value_of(dv: DigitVector) -> int:
    if any(not 1 <= d <= dv.base for d in dv.digits):
        raise ValueError(f"digits out of range for base {dv.base}")
    x0 = 0
    for d in dv.digits:
        x0 = x0 * dv.base + (d - 1)
    return x0 + 1


def build_hadamard_set(
    k: int,
    s: int,
    *,
    n: int | None = None,
    max_size: int = DEFAULT_SIZE_CAP,
) -> PermSet:
    """k digit-wise permutations on [s**(k-1)] with pairwise LCS <= s**(k/2-1).

    Passing `n` restricts every member to [n] (n <= s**(k-1)); the bound on
    the full set carries over since restriction never grows an LCS.
    """
    if k < 2:
        raise ValueError(f"need at least k=2 rows, got {k}")
    if s < 1:
        raise ValueError(f"digit base must be positive, got {s}")
    n_prime = s ** (k - 1)
    if n_prime > max_size:
        raise ValueError(f"s**(k-1) = {n_prime} exceeds the size cap {max_size}")
    if n is not None and not 1 <= n <= n_prime:
        raise ValueError(f"restriction size {n} outside [1, {n_prime}]")
    h = hadamard_matrix(k)

    x0 = np.arange(n_prime, dtype=np.int64)
    powers = [s ** (k - 2 - c) for c in range(k - 1)]  # weight of digit column c+1
    perms = []
    for row in h.rows:
        flipped = [c for c in range(1, k) if row[c] == -1]
        out = x0.copy()
        for c in flipped:
            w = powers[c - 1]
            digit = (x0 // w) % s
            # replacing digit d by (s-1) - d changes the value by (s-1-2d)*w
            out += (s - 1 - 2 * digit) * w
        perms.append(Permutation(tuple(out.tolist())))

    record = {"k": k, "s": s, "n_prime": n_prime, "n": n if n is not None else n_prime}
    made = PermSet(tuple(perms), provenance="hadamard", params=record)
    if n is None or n == n_prime:
        return made
    return PermSet(
        tuple(restrict(p, n) for p in made.perms), provenance="hadamard", params=record
    )


def dumps_matrix(h: HadamardMatrix) -> str:
    """Plain text block: one row per line, entries '+' / '-'."""
    return "".join("".join("+" if v == 1 else "-" for v in r) + "\n" for r in h.rows)


def loads_matrix(text: str) -> HadamardMatrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if set(line) - {"+", "-"}:
            raise ValueError(f"unexpected characters in matrix row: {line!r}")
        rows.append(tuple(1 if ch == "+" else -1 for ch in line))
    if not rows:
        raise ValueError("empty matrix block")
    return HadamardMatrix(tuple(rows))
