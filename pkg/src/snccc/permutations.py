"""
Permutation families that select seed codes for each member of a family.

Permutations are written 1-based, as tuples ``(pi(1), ..., pi(M))``, and
positions are read in groups of ``P``: position ``i*P + mu`` is slot ``mu``
(1-based) of group ``i``.

Two conditions matter:

* value disjointness: for ``j1 != j2`` and every slot ``mu`` in range,
  ``pi_j1(i1*P + mu) != pi_j2(i2*P + mu)`` for all groups ``i1, i2``.
  By default ``mu`` runs over ``1 .. P-1``; ``mu_inclusive=True`` adds
  ``mu = P``.
* unique alignment: if ``pi_j1(i1*P + mu1) == pi_j2(i2*P + mu2)`` then
  ``pi_j1(i1*P + mu1 + a) != pi_j2(i2*P + mu2 + a)`` for every ``a != 0``
  keeping both slots inside ``1 .. P``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InvalidInputError, NotFoundError


def _as_array(perms, M: int, P: int) -> np.ndarray:
    if P < 1 or M < 1 or M % P:
        raise InvalidInputError(f"P={P} must divide M={M}")
    arr = np.array([list(p) for p in perms], dtype=np.int64).reshape(len(perms), -1)
    if arr.shape[1] != M:
        raise InvalidInputError(f"permutations must have length M={M}, got {arr.shape[1]}")
    target = np.arange(1, M + 1)
    for j, p in enumerate(arr):
        if not np.array_equal(np.sort(p), target):
            raise InvalidInputError(f"permutation {j} is not a bijection of 1..{M}: {tuple(p)}")
    return (arr - 1).reshape(len(perms), M // P, P)


def check_perm_family(perms, M: int, P: int, mu_inclusive: bool = False) -> tuple[bool, bool]:
    """
    Test a permutation family against both conditions.

    Returns
    -------
    (bool, bool)
        ``(value_disjoint, unique_alignment)``.
    """
    arr = _as_array(perms, M, P)
    J, G, _ = arr.shape
    slots = P if mu_inclusive else P - 1
    disjoint = all(np.unique(arr[:, :, m]).size == J * G for m in range(slots))

    unique = True
    for j1 in range(J):
        for j2 in range(j1 + 1, J):
            # eq[i1, i2, m1, m2]: slot m1 of group i1 in pi_j1 equals slot m2 of group i2 in pi_j2
            eq = arr[j1][:, None, :, None] == arr[j2][None, :, None, :]
            for d in range(-(P - 1), P):
                if np.any(np.diagonal(eq, offset=d, axis1=2, axis2=3).sum(axis=-1) > 1):
                    unique = False
                    break
            if not unique:
                break
        if not unique:
            break
    return disjoint, unique


@dataclass(frozen=True)
class PermutationFamily:
    perms: tuple
    M: int
    P: int
    mu_inclusive: bool = False
    satisfies_12: bool = field(init=False)
    satisfies_14: bool = field(init=False)

    def __post_init__(self):
        perms = tuple(tuple(int(v) for v in p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        s12, s14 = check_perm_family(perms, self.M, self.P, self.mu_inclusive)
        object.__setattr__(self, "satisfies_12", s12)
        object.__setattr__(self, "satisfies_14", s14)

    def __len__(self):
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __getitem__(self, j):
        return self.perms[j]

    @classmethod
    def identity(cls, M: int, P: int) -> "PermutationFamily":
        return cls((tuple(range(1, M + 1)),), M, P)


def search_perm_family(M: int, P: int, require_14: bool = False, seed: int = 0,
                       mu_inclusive: bool = False, count: int | None = None,
                       max_nodes: int = 2_000_000) -> PermutationFamily:
    """
    Backtracking search for ``count`` (default ``P``) permutations.

    The first permutation is the identity (any family can be relabelled to
    start there). Remaining positions are filled left to right; candidate
    values are tried in increasing order when ``seed == 0`` and in a
    seed-determined order otherwise, so the witness is reproducible either
    way.

    Raises
    ------
    NotFoundError
        When the search space is exhausted, or ``max_nodes`` placements
        were tried, without a witness.
    """
    if P < 1 or M < 1 or M % P:
        raise InvalidInputError(f"P={P} must divide M={M}")
    count = P if count is None else count
    if count < 1:
        raise InvalidInputError("count must be at least 1")
    order = list(range(M))
    if seed:
        order = [int(v) for v in np.random.default_rng(seed).permutation(M)]

    slots = P if mu_inclusive else P - 1
    perm = np.full((count, M), -1, dtype=np.int64)
    where = np.full((count, M), -1, dtype=np.int64)  # value -> position
    perm[0] = np.arange(M)
    where[0] = np.arange(M)
    # taken[m] holds values already used at slot m by earlier permutations
    taken = [set() for _ in range(P)]
    for m in range(slots):
        taken[m].update(int(v) for v in perm[0, m::P])

    nodes = 0
    G = M // P

    def assignable(allowed, need):
        """Can values with ``allowed[v, m]`` fill ``need[m]`` places in each slot?"""
        cols = np.repeat(np.arange(P), need)
        if cols.size == 0:
            return True
        cost = (~allowed[:, cols]).astype(np.int64)
        if cost.shape[0] < cost.shape[1]:
            return False
        r, c = linear_sum_assignment(cost)
        return cost[r, c].sum() == 0

    def feasible(j, pos):
        # current permutation: unplaced values into unfilled slots
        placed = perm[j, :pos]
        free = np.ones(M, dtype=bool)
        free[placed] = False
        allowed = np.ones((M, P), dtype=bool)
        for m in range(slots):
            allowed[list(taken[m]), m] = False
        need = np.array([G - len(range(m, pos, P)) for m in range(P)])
        if not assignable(allowed[free], need):
            return False
        # each later permutation on its own, blocked also by this one's placements
        for m in range(slots):
            allowed[placed[m::P], m] = False
        return j + 1 == count or assignable(allowed, np.full(P, G))

    def ok(j, pos, v):
        g, m = divmod(pos, P)
        if m < slots and v in taken[m]:
            return False
        if not require_14:
            return True
        base = g * P
        for j2 in range(j):
            p2 = where[j2, v]
            g2, m2 = divmod(int(p2), P)
            d = m2 - m
            for mp in range(m):
                q = mp + d
                if 0 <= q < P and perm[j, base + mp] == perm[j2, g2 * P + q]:
                    return False
        return True

    def fill(j, pos):
        nonlocal nodes
        if j == count:
            return True
        if pos == M:
            for m in range(slots):
                taken[m].update(int(v) for v in perm[j, m::P])
            if fill(j + 1, 0):
                return True
            for m in range(slots):
                taken[m].difference_update(int(v) for v in perm[j, m::P])
            return False
        for v in order:
            if where[j, v] >= 0 or not ok(j, pos, v):
                continue
            nodes += 1
            if nodes > max_nodes:
                raise NotFoundError(f"search budget of {max_nodes} placements exhausted for M={M}, P={P}")
            perm[j, pos] = v
            where[j, v] = pos
            if slots and not feasible(j, pos + 1):
                perm[j, pos] = -1
                where[j, v] = -1
                continue
            if fill(j, pos + 1):
                return True
            perm[j, pos] = -1
            where[j, v] = -1
        return False

    if not fill(1, 0):
        cond = "value disjointness and unique alignment" if require_14 else "value disjointness"
        raise NotFoundError(f"no family of {count} permutations of 1..{M} with P={P} satisfies {cond}")
    family = PermutationFamily(tuple(tuple(int(v) + 1 for v in p) for p in perm), M, P, mu_inclusive)
    assert family.satisfies_12 and (family.satisfies_14 or not require_14)
    return family
