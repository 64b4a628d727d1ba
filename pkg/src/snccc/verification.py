"""
Exhaustive correlation checks for code sets and families.

Every check sweeps all (code pair, shift) cells; nothing is sampled.
Ternary sets are compared exactly, q-ary sets with a tolerance of
``1e-9 * M * L`` unless the caller supplies one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from .codes import CodeFamily, CodeSet
from .correlation import (
    APERIODIC,
    MODES,
    PERIODIC,
    QARY_RTOL,
    Alphabet,
    cross_profiles,
    shift_axis,
)
from .errors import InvalidInputError


class Violation(NamedTuple):
    """One failing cell.

    ``mode`` is ``"aperiodic"``, ``"periodic"``, ``"dot"`` (orthogonality of
    sequences) or ``"structural"``; for structural entries ``tau`` is None and
    ``value`` holds the offending zero count.
    """

    set_pair: tuple
    code_pair: tuple
    tau: int | None
    mode: str
    value: Any


@dataclass
class VerificationReport:
    subject: str
    property: str
    verdict: bool
    peak: float | None = None
    epsilon: int | None = None
    violations: list = field(default_factory=list)
    measured: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "property": self.property,
            "verdict": self.verdict,
            "peak": _plain(self.peak),
            "epsilon": self.epsilon,
            "violations": [
                {
                    "set_pair": list(v.set_pair),
                    "code_pair": list(v.code_pair),
                    "tau": v.tau,
                    "mode": v.mode,
                    "value": _plain(v.value),
                }
                for v in self.violations
            ],
            "measured": {k: _plain(v) for k, v in self.measured.items()},
        }


def _plain(x):
    """JSON-friendly scalar: ints stay ints, complex becomes [re, im]."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (int, np.integer)):
        return int(x)
    x = complex(x)
    if x.imag == 0:
        r = x.real
        return int(r) if r.is_integer() else r
    return [x.real, x.imag]


def _scalar(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.complexfloating):
        return complex(x)
    return x


def as_codeset(obj) -> CodeSet:
    if isinstance(obj, CodeSet):
        return obj
    if isinstance(obj, CodeFamily):
        return obj.flatten()
    arr = np.asarray(obj)
    return CodeSet(arr, Alphabet.infer(arr))


def _nonzero_mask(values: np.ndarray, alphabet: Alphabet, tolerance: float | None, scale: float):
    if tolerance is None:
        if alphabet.is_ternary and np.issubdtype(values.dtype, np.integer):
            return values != 0
        tolerance = QARY_RTOL * max(scale, 1.0)
    return np.abs(values) > tolerance


def _structural(cs: CodeSet, set_index: int = 0) -> tuple[int | None, list]:
    """Common zero count, or None plus one violation per deviating code."""
    counts = cs.zero_counts()
    if np.all(counts == counts[0]):
        return int(counts[0]), []
    values, freq = np.unique(counts, return_counts=True)
    majority = values[np.argmax(freq)]
    bad = [
        Violation((set_index, set_index), (k, k), None, "structural", int(c))
        for k, c in enumerate(counts)
        if c != majority
    ]
    return None, bad


def _window(L: int, Z: int, mode: str) -> np.ndarray:
    """Boolean mask over ``shift_axis(L, mode)`` selecting ``|tau| <= Z - 1``."""
    taus = shift_axis(L, mode)
    if mode == APERIODIC:
        return np.abs(taus) <= Z - 1
    return (taus <= Z - 1) | (L - taus <= Z - 1)


def _check_window(cs: CodeSet, Z: int, mode: str, tolerance) -> tuple[int | None, list]:
    epsilon, violations = _structural(cs)
    K, M, L = cs.codes.shape
    prof = cross_profiles(cs.codes, cs.codes, mode)
    expected = np.zeros_like(prof)
    centre = L - 1 if mode == APERIODIC else 0
    energies = M * L - cs.zero_counts()
    expected[np.arange(K), np.arange(K), centre] = energies
    diff = prof - expected
    mask = _nonzero_mask(diff, cs.alphabet, tolerance, M * L)
    mask &= _window(L, Z, mode)[None, None, :]
    taus = shift_axis(L, mode)
    for k1, k2, s in np.argwhere(mask):
        violations.append(
            Violation((0, 0), (int(k1), int(k2)), int(taus[s]), mode, _scalar(prof[k1, k2, s]))
        )
    return epsilon, violations


def verify_ccc(codeset, tolerance: float | None = None, subject: str = "code set") -> VerificationReport:
    """
    Check the complete complementary property over every pair and shift.

    The summed auto-correlation of each code must equal ``M*L - eps`` at zero
    shift and vanish elsewhere; every cross-correlation must vanish at every
    shift. ``eps`` is the per-code zero count, which must be the same for
    all codes (otherwise the report carries structural violations).

    Parameters
    ----------
    codeset : CodeSet or array_like of shape (K, M, L)
    tolerance : float, optional
        Absolute tolerance for q-ary sets. Ternary sets are always exact.
    subject : str
        Label copied into the report.

    Returns
    -------
    VerificationReport
        ``measured["classification"]`` is ``"CCC"`` when ``eps == 0`` and
        ``"SNC-CCC"`` otherwise.
    """
    cs = as_codeset(codeset)
    epsilon, violations = _check_window(cs, cs.L, APERIODIC, tolerance)
    peak = cs.M * cs.L - epsilon if epsilon is not None else None
    measured = {"K": cs.K, "M": cs.M, "L": cs.L, "complete": cs.K == cs.M}
    if not violations:
        measured["classification"] = "CCC" if epsilon == 0 else "SNC-CCC"
    return VerificationReport(subject, "ccc", not violations, peak, epsilon, violations, measured)


def verify_zccs(codeset, Z: int, mode: str = APERIODIC, tolerance: float | None = None,
                subject: str = "code set") -> VerificationReport:
    """Zero-correlation-zone check over ``|tau| <= Z - 1`` in the given mode."""
    if mode not in MODES:
        raise InvalidInputError(f"mode must be one of {MODES}, got {mode!r}")
    cs = as_codeset(codeset)
    if not 1 <= Z <= cs.L:
        raise InvalidInputError(f"zone width Z={Z} outside 1..{cs.L}")
    epsilon, violations = _check_window(cs, Z, mode, tolerance)
    peak = cs.M * cs.L - epsilon if epsilon is not None else None
    return VerificationReport(
        subject, f"zccs[{mode}]", not violations, peak, epsilon, violations,
        {"K": cs.K, "M": cs.M, "L": cs.L, "Z": Z},
    )


def predicted_zccz(partition, seed_L: int) -> int | None:
    """Inter-set zone width ``L + min(interior gaps)``; None when ``P < 2``."""
    gaps = list(partition)
    if len(gaps) < 3:
        return None
    return seed_L + min(gaps[1:-1])


def wraparound_bound(partition, seed_L: int) -> int | None:
    """
    Lower bound on the periodic inter-set zone once cyclic wrap is included.

    Periodic correlation at shift ``tau`` also picks up the aperiodic value at
    ``tau - L'``, so a block pair sitting at offset ``d < 0`` shows up at
    periodic shift ``L' + d``. The smallest such wrapped shift is
    ``L + n_1 + n_{P+1}``.
    """
    gaps = list(partition)
    if len(gaps) < 3:
        return None
    return seed_L + min(min(gaps[1:-1]), gaps[0] + gaps[-1])


def _inter_set_profiles(family: CodeFamily, mode: str):
    """Yield ``(j1, j2, profiles)`` for each unordered pair of member sets."""
    for j1, j2 in itertools.combinations(range(len(family)), 2):
        yield j1, j2, cross_profiles(family[j1].codes, family[j2].codes, mode)


def measure_zccz(family: CodeFamily, mode: str = APERIODIC, tolerance: float | None = None,
                 predicted: int | None = None) -> tuple[int, VerificationReport]:
    """
    Measure the inter-set zero cross-correlation zone of a family.

    Returns the largest ``Z`` such that every pair of codes from different
    sets has zero correlation for ``|tau| < Z``. When the family records its
    partition and seed length (or ``predicted`` is given), the report's
    verdict is ``Z >= predicted`` and the violations are the non-zero cells
    inside the predicted zone.
    """
    if mode not in MODES:
        raise InvalidInputError(f"mode must be one of {MODES}, got {mode!r}")
    if len(family) < 2:
        raise InvalidInputError("zone measurement needs a family of at least two sets")
    Lp = family.L
    prov = family.provenance or {}
    lam = None
    if predicted is None and "partition" in prov and "seed_L" in prov:
        predicted = predicted_zccz(prov["partition"], prov["seed_L"])
    if "partition" in prov and len(prov["partition"]) >= 3:
        lam = min(prov["partition"][1:-1])

    taus = shift_axis(Lp, mode)
    dist = np.abs(taus) if mode == APERIODIC else np.minimum(taus, Lp - taus)
    Z = Lp
    cells = []
    for j1, j2, prof in _inter_set_profiles(family, mode):
        mask = _nonzero_mask(prof, family.alphabet, tolerance, family.M * Lp)
        if not mask.any():
            continue
        Z = min(Z, int(dist[np.any(mask, axis=(0, 1))].min()))
        if predicted is not None:
            for k1, k2, s in np.argwhere(mask & (dist < predicted)[None, None, :]):
                cells.append(Violation((j1, j2), (int(k1), int(k2)), int(taus[s]), mode,
                                       _scalar(prof[k1, k2, s])))
    verdict = predicted is None or Z >= predicted
    measured = {"Z": Z, "predicted": predicted, "lambda": lam, "length": Lp}
    if mode == PERIODIC and "partition" in prov and "seed_L" in prov:
        measured["wraparound_bound"] = wraparound_bound(prov["partition"], prov["seed_L"])
    report = VerificationReport("family", f"zccz[{mode}]", verdict, None, None,
                                cells if not verdict else [], measured)
    return Z, report


def qccs_delta(codes, mode: str = APERIODIC):
    """
    Maximum correlation magnitudes ``(delta, delta_A, delta_C)``.

    ``delta_A`` runs over auto-correlations at ``1 <= |tau| <= L-1``,
    ``delta_C`` over cross-correlations of distinct codes at every shift
    including zero. A family is flattened first, so ``delta_C`` then mixes
    intra-set and inter-set pairs.
    """
    cs = as_codeset(codes)
    prof = cross_profiles(cs.codes, cs.codes, mode)
    mag = np.abs(prof)
    K = cs.K
    centre = cs.L - 1 if mode == APERIODIC else 0
    diag = mag[np.arange(K), np.arange(K)]
    diag = np.delete(diag, centre, axis=1)
    delta_a = diag.max() if diag.size else 0
    off = ~np.eye(K, dtype=bool)
    delta_c = mag[off].max() if K > 1 else 0
    as_num = int if np.issubdtype(mag.dtype, np.integer) else float
    delta_a, delta_c = as_num(delta_a), as_num(delta_c)
    return max(delta_a, delta_c), delta_a, delta_c


@dataclass
class InterSetSummary:
    """Non-zero inter-set correlation cells of a family, per code pair."""

    mode: str
    max_magnitude: float
    nonzero: dict  # (j1, j2, k1, k2) -> list of (tau, value)

    def shift_counts(self) -> dict:
        return {key: len(cells) for key, cells in self.nonzero.items()}


def inter_set_sidelobes(family: CodeFamily, mode: str = APERIODIC,
                        tolerance: float | None = None) -> InterSetSummary:
    """Collect every non-zero correlation between codes of different sets."""
    taus = shift_axis(family.L, mode)
    nonzero = {}
    peak = 0
    for j1, j2, prof in _inter_set_profiles(family, mode):
        mask = _nonzero_mask(prof, family.alphabet, tolerance, family.M * family.L)
        for k1 in range(prof.shape[0]):
            for k2 in range(prof.shape[1]):
                idx = np.flatnonzero(mask[k1, k2])
                nonzero[(j1, j2, k1, k2)] = [(int(taus[s]), _scalar(prof[k1, k2, s])) for s in idx]
        if mask.any():
            peak = max(peak, np.abs(prof[mask]).max())
    peak = int(peak) if float(peak).is_integer() else float(peak)
    return InterSetSummary(mode, peak, nonzero)


def verify_mos(mos, tolerance: float | None = None) -> VerificationReport:
    """Pairwise orthogonality of a family of sequences."""
    vectors = np.asarray(getattr(mos, "vectors", mos))
    if vectors.ndim != 2:
        raise InvalidInputError(f"expected a 2-D stack of sequences, got shape {vectors.shape}")
    gram = vectors @ np.conj(vectors).T
    exact = np.issubdtype(gram.dtype, np.integer)
    tol = 0 if exact else (tolerance if tolerance is not None else QARY_RTOL * vectors.shape[1])
    violations = [
        Violation((0, 0), (i, j), 0, "dot", _scalar(gram[i, j]))
        for i, j in itertools.combinations(range(len(vectors)), 2)
        if abs(gram[i, j]) > tol
    ]
    return VerificationReport("mos", "orthogonality", not violations, violations=violations,
                              measured={"P": len(vectors), "length": vectors.shape[1]})


def verify_snc(codes) -> bool:
    """True when at least one sequence has a zero entry."""
    if isinstance(codes, CodeFamily):
        return any(verify_snc(s) for s in codes)
    arr = codes.codes if isinstance(codes, CodeSet) else np.asarray(codes)
    return bool(np.any(arr == 0))
