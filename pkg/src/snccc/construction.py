"""
Zero-gap concatenation of seed codes and the code-set builders on top of it.

A seed ``(M, L)``-CCC is split into groups of ``P`` codes. Each group is laid
out side by side, every block scaled by one entry of a mutually orthogonal
sequence ``b`` and separated by runs of zero columns whose widths come from
a :class:`GapPartition`. One orthogonal sequence per output code gives ``M``
codes of length ``P*L + n``; reordering the seed codes with a permutation
family gives several such sets at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .codes import CodeFamily, CodeSet
from .correlation import Alphabet, roots_of_unity, snap
from .errors import (
    ConstructionRefused,
    InfeasibleError,
    InvalidInputError,
    SeedVerificationError,
    UnsupportedError,
)
from .permutations import PermutationFamily
from .verification import verify_ccc

STRATEGIES = ("front", "even", "distinct", "distinct-mod-L")


@dataclass(frozen=True)
class GapPartition:
    """``P + 1`` non-negative zero-run widths ``(n_1, ..., n_{P+1})``."""

    gaps: tuple

    def __post_init__(self):
        gaps = tuple(int(g) for g in self.gaps)
        if len(gaps) < 2:
            raise InvalidInputError("a gap partition needs at least two gaps (P >= 1)")
        if any(g < 0 for g in gaps):
            raise InvalidInputError(f"gaps must be non-negative, got {gaps}")
        object.__setattr__(self, "gaps", gaps)

    @property
    def n(self) -> int:
        return sum(self.gaps)

    @property
    def P(self) -> int:
        return len(self.gaps) - 1

    @property
    def interior(self) -> tuple:
        return self.gaps[1:-1]

    @property
    def interior_min(self) -> int:
        """Smallest gap between two blocks; the zone width is ``L`` plus this."""
        if self.P < 2:
            raise InvalidInputError("interior gaps exist only for P >= 2")
        return min(self.interior)

    def offsets(self, L: int) -> list[int]:
        """Column where each of the ``P`` blocks starts."""
        out, pos = [], self.gaps[0]
        for g in self.gaps[1:]:
            out.append(pos)
            pos += L + g
        return out


def make_partition(n: int, P: int, strategy: str = "front", L: int | None = None) -> GapPartition:
    """
    Split ``n`` zero columns into ``P + 1`` gaps.

    Strategies
    ----------
    front
        ``(0, n, 0, ..., 0)``.
    even
        Interior gaps as equal as possible, larger ones first; outer gaps 0.
    distinct
        Interior gaps ``1, 2, ..., P-1`` with the remainder added to the last
        one. Needs ``n >= P(P-1)/2``.
    distinct-mod-L
        Interior gaps with pairwise distinct residues modulo ``L`` and outer
        gaps 0. Residue sets are tried in the order of
        ``itertools.combinations([1, ..., L-1, 0], P-1)`` (residue 0 realised
        as a gap of ``L``); the first whose realised sum ``s`` has
        ``s <= n`` and ``s = n (mod L)`` is used, with ``n - s`` added to the
        largest gap. Needs ``n >= P(P-1)/2`` and ``P <= L + 1``.

    For ``P == 1`` there are no interior gaps and every strategy returns
    ``(0, n)``.
    """
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    if P < 1:
        raise InvalidInputError(f"P must be positive, got {P}")
    if strategy not in STRATEGIES:
        raise InvalidInputError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    gaps = [0] * (P + 1)
    if P == 1:
        gaps[1] = n
        return GapPartition(gaps)

    if strategy == "front":
        gaps[1] = n
    elif strategy == "even":
        q, r = divmod(n, P - 1)
        for i in range(P - 1):
            gaps[1 + i] = q + (1 if i < r else 0)
    else:
        need = P * (P - 1) // 2
        if n < need:
            raise InfeasibleError(
                f"strategy {strategy!r} needs n >= P(P-1)/2 = {need} for P={P}, got n={n}"
            )
        if strategy == "distinct":
            gaps[1:P] = range(1, P)
            gaps[P - 1] += n - need
        else:
            gaps[1:P] = _distinct_residues(n, P, L)
    return GapPartition(gaps)


def _distinct_residues(n: int, P: int, L: int | None) -> list[int]:
    if L is None or L < 1:
        raise InvalidInputError("strategy 'distinct-mod-L' needs the seed length L")
    if P - 1 > L:
        raise InfeasibleError(
            f"strategy 'distinct-mod-L' needs P-1={P - 1} distinct residues mod L={L}, only {L} exist"
        )
    residues = [*range(1, L), 0]
    for combo in itertools.combinations(residues, P - 1):
        gaps = sorted(r if r else L for r in combo)
        s = sum(gaps)
        if s <= n and (n - s) % L == 0:
            gaps[-1] += n - s
            return gaps
    raise InfeasibleError(
        f"no {P - 1} interior gaps with distinct residues mod L={L} sum to n={n} with zero outer gaps"
    )


@dataclass(frozen=True, eq=False)
class MosFamily:
    """``P`` mutually orthogonal sequences of length ``P``, one per row."""

    vectors: np.ndarray
    alphabet: Alphabet = Alphabet()
    kind: str = "custom"

    def __post_init__(self):
        v = np.asarray(self.vectors)
        if v.ndim != 2 or v.shape[0] < 1 or v.shape[1] < 1:
            raise InvalidInputError(f"MOS family must be a non-empty 2-D array, got shape {v.shape}")
        v = self.alphabet.coerce(v)
        if np.any(v == 0):
            raise InvalidInputError("MOS entries must be unimodular")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def P(self) -> int:
        return self.vectors.shape[0]

    def __len__(self):
        return self.P

    def __getitem__(self, i):
        return self.vectors[i]


def mos_generate(P: int, kind: str = "hadamard") -> MosFamily:
    """
    Rows of a Sylvester-Hadamard (``kind="hadamard"``, ``P`` a power of two)
    or Fourier (``kind="dft"``, any ``P``) matrix.
    """
    if P < 1:
        raise InvalidInputError(f"P must be positive, got {P}")
    if kind == "hadamard":
        if P & (P - 1):
            raise UnsupportedError(f"Sylvester-Hadamard MOS needs P a power of 2, got P={P}; use kind='dft'")
        return MosFamily(scipy.linalg.hadamard(P, dtype=np.int64), Alphabet(2), "hadamard")
    if kind == "dft":
        j, k = np.meshgrid(np.arange(P), np.arange(P), indexing="ij")
        roots = roots_of_unity(P)
        alphabet = Alphabet(P)
        vectors = roots[(j * k) % P]
        if alphabet.is_ternary:
            vectors = vectors.real
        return MosFamily(vectors, alphabet, "dft")
    raise InvalidInputError(f"unknown MOS kind {kind!r}; choose 'hadamard' or 'dft'")


def r_operator(codes, b, part: GapPartition) -> np.ndarray:
    """
    Concatenate ``P`` scaled codes with zero runs between them.

    Returns ``[0^{n_1} | b_1 C_1 | 0^{n_2} | ... | b_P C_P | 0^{n_{P+1}}]``,
    an ``M x (P*L + n)`` array.
    """
    codes = [np.asarray(c) for c in codes]
    b = np.asarray(b)
    P = len(codes)
    if P < 1:
        raise InvalidInputError("need at least one code")
    if {c.shape for c in codes} != {codes[0].shape} or codes[0].ndim != 2:
        raise InvalidInputError(f"codes must share one 2-D shape, got {[c.shape for c in codes]}")
    if b.shape != (P,):
        raise InvalidInputError(f"scalar sequence must have length P={P}, got shape {b.shape}")
    if not np.allclose(np.abs(b), 1, rtol=0, atol=1e-12):
        raise InvalidInputError(f"scalar sequence entries must be unimodular, got {b}")
    if part.P != P:
        raise InvalidInputError(f"partition has {len(part.gaps)} gaps, expected P+1={P + 1}")
    M, L = codes[0].shape
    dtype = np.result_type(b, *codes)
    out = np.zeros((M, P * L + part.n), dtype=dtype)
    for start, c, s in zip(part.offsets(L), codes, b):
        out[:, start:start + L] = s * c
    if not np.issubdtype(dtype, np.integer):
        out = snap(out)
    return out


def _check_inputs(seed: CodeSet, mos: MosFamily, part: GapPartition, verify_seed: bool):
    P = mos.P
    if mos.vectors.shape != (P, P):
        raise InvalidInputError(f"MOS family must be P x P, got {mos.vectors.shape}")
    if part.P != P:
        raise InvalidInputError(f"partition has {len(part.gaps)} gaps but the MOS family has P={P}")
    if seed.M % P:
        raise InvalidInputError(f"P={P} does not divide M={seed.M}")
    if seed.K != seed.M:
        raise InvalidInputError(f"seed must hold M={seed.M} codes, got {seed.K}")
    if verify_seed:
        report = verify_ccc(seed, subject="seed")
        if not report.verdict:
            v = report.violations[0]
            raise SeedVerificationError(f"seed is not a CCC: first violation {v}", v)


def _build_set(seed: CodeSet, mos: MosFamily, part: GapPartition, perm) -> CodeSet:
    P = mos.P
    alphabet = seed.alphabet.combine(mos.alphabet)
    idx = np.asarray(perm, dtype=np.int64) - 1
    out = []
    for nu in range(seed.M // P):
        group = [seed.codes[i] for i in idx[nu * P:(nu + 1) * P]]
        for mu in range(P):
            out.append(r_operator(group, mos.vectors[mu], part))
    # the combined alphabet covers every product of a seed entry and a MOS entry
    return CodeSet(np.array(out), alphabet)


def build_snc_ccc(seed: CodeSet, mos: MosFamily, part: GapPartition, verify_seed: bool = True) -> CodeSet:
    """
    Build ``M`` codes of length ``P*L + n`` from an ``(M, L)``-CCC.

    Output code ``nu*P + mu`` (both 0-based here) concatenates seed codes
    ``nu*P .. nu*P + P-1`` scaled by the entries of ``mos[mu]``.

    Parameters
    ----------
    seed : CodeSet
        An ``(M, L)``-CCC. Checked exhaustively unless ``verify_seed`` is False.
    mos : MosFamily
        ``P`` orthogonal sequences of length ``P``; ``P`` must divide ``M``.
    part : GapPartition
        ``P + 1`` gaps.

    Returns
    -------
    CodeSet
        In the alphabet generated by the seed and MOS entries (plus zero).
    """
    _check_inputs(seed, mos, part, verify_seed)
    return _build_set(seed, mos, part, range(1, seed.M + 1))


def build_multiple_snc_ccc(seed: CodeSet, mos: MosFamily, part: GapPartition, perms,
                           verify_seed: bool = True, seed_id: str | None = None) -> CodeFamily:
    """
    One code set per permutation; set ``j`` reads seed codes in the order
    ``perms[j]``.

    ``perms`` may be a :class:`PermutationFamily` or a list of 1-based
    permutations (checked over slots 1..P-1 by default). Families that
    fail value disjointness are refused.
    """
    if not isinstance(perms, PermutationFamily):
        perms = PermutationFamily(tuple(perms), seed.M, mos.P)
    if perms.M != seed.M or perms.P != mos.P:
        raise InvalidInputError(
            f"permutation family is for (M={perms.M}, P={perms.P}), seed/MOS give (M={seed.M}, P={mos.P})"
        )
    if len(perms) > mos.P:
        raise InvalidInputError(f"at most P={mos.P} permutations allowed, got {len(perms)}")
    if not perms.satisfies_12:
        raise ConstructionRefused("permutation family violates the value-disjointness condition")
    _check_inputs(seed, mos, part, verify_seed)
    sets = [_build_set(seed, mos, part, p) for p in perms]
    provenance = {
        "seed": seed_id,
        "seed_L": seed.L,
        "P": mos.P,
        "partition": list(part.gaps),
        "mos": mos.kind,
        "perms": [list(p) for p in perms],
        "mu_inclusive": perms.mu_inclusive,
    }
    return CodeFamily(sets, provenance)
