"""
Aperiodic and periodic correlation of sequences and codes.

Sequences are 1-D arrays, codes are 2-D arrays whose rows are sequences,
and code sets are 3-D arrays of shape ``(K, M, L)``.  Ternary inputs stay
in ``int64`` throughout so every correlation value is an exact integer;
anything else is handled in ``complex128``.

Shift labels follow the usual conventions: aperiodic shifts run over
``-L < tau < L`` and periodic shifts over ``0 <= tau < L``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AlphabetError, InvalidInputError

APERIODIC = "aperiodic"
PERIODIC = "periodic"
MODES = (APERIODIC, PERIODIC)

#: Relative tolerance for treating a floating correlation value as zero.
QARY_RTOL = 1e-9


@dataclass(frozen=True)
class Alphabet:
    """
    Entry alphabet: the ``q``-th roots of unity together with zero.

    ``q <= 2`` is the ternary alphabet ``{-1, 0, 1}`` and is stored as
    integers. Larger ``q`` are stored as complex floats.
    """

    q: int = 2

    def __post_init__(self):
        if self.q < 1:
            raise InvalidInputError(f"alphabet order must be positive, got {self.q}")
        if self.q == 1:
            object.__setattr__(self, "q", 2)

    @property
    def kind(self) -> str:
        return "ternary" if self.is_ternary else "q-ary"

    @property
    def is_ternary(self) -> bool:
        return self.q == 2

    @property
    def dtype(self):
        return np.int64 if self.is_ternary else np.complex128

    def combine(self, other: "Alphabet") -> "Alphabet":
        """Alphabet closed under products of one entry from each."""
        return Alphabet(math.lcm(self.q, other.q))

    def values(self) -> np.ndarray:
        """All admissible entries, zero first."""
        if self.is_ternary:
            return np.array([0, 1, -1], dtype=np.int64)
        return np.concatenate([[0], roots_of_unity(self.q)])

    def contains(self, x) -> np.ndarray:
        """Elementwise membership mask."""
        x = np.asarray(x)
        if self.is_ternary:
            if np.iscomplexobj(x) and np.any(x.imag != 0):
                return np.isin(x.real, (-1, 0, 1)) & (x.imag == 0)
            return np.isin(np.real(x), (-1, 0, 1))
        z = x.astype(np.complex128)
        zero = np.abs(z) <= 1e-12
        with np.errstate(invalid="ignore", over="ignore"):
            root = np.abs(z**self.q - 1) <= 1e-9
        return zero | (root & (np.abs(np.abs(z) - 1) <= 1e-9))

    def coerce(self, x) -> np.ndarray:
        """Return ``x`` in this alphabet's dtype, raising on foreign entries."""
        x = np.asarray(x)
        bad = ~self.contains(x)
        if np.any(bad):
            where = tuple(int(i) for i in np.argwhere(bad)[0])
            raise AlphabetError(
                f"entry {x[where]!r} at index {where} is not in the {self.kind} alphabet (q={self.q})"
            )
        if self.is_ternary:
            return np.real(x).astype(np.int64)
        return x.astype(np.complex128)

    @classmethod
    def infer(cls, x, max_q: int = 64) -> "Alphabet":
        """Smallest alphabet containing every entry of ``x``."""
        x = np.asarray(x)
        for q in range(2, max_q + 1):
            if np.all(cls(q).contains(x)):
                return cls(q)
        raise AlphabetError(f"entries are not roots of unity of order <= {max_q} (or zero)")


def roots_of_unity(q: int) -> np.ndarray:
    """``exp(2*pi*i*k/q)`` for ``k = 0..q-1`` with exact 0 and +-1 parts."""
    z = np.exp(2j * np.pi * np.arange(q) / q)
    return snap(z)


def snap(z: np.ndarray) -> np.ndarray:
    """Round real and imaginary parts that are within 1e-12 of 0 or +-1."""
    z = np.array(z, dtype=np.complex128)
    re, im = z.real.copy(), z.imag.copy()
    for target in (-1.0, 0.0, 1.0):
        re[np.abs(re - target) < 1e-12] = target
        im[np.abs(im - target) < 1e-12] = target
    return re + 1j * im


def _check_mode(mode):
    if mode not in MODES:
        raise InvalidInputError(f"mode must be one of {MODES}, got {mode!r}")


def _pair(a, b, ndim):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != ndim or b.ndim != ndim:
        raise InvalidInputError(f"expected {ndim}-D operands, got shapes {a.shape} and {b.shape}")
    if a.shape != b.shape:
        raise InvalidInputError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.shape[-1] < 1:
        raise InvalidInputError("sequences must have length >= 1")
    return a, b


def is_zero(value, scale: float = 1.0, exact: bool | None = None) -> bool:
    """Zero test: exact for integers, ``|value| <= 1e-9 * scale`` otherwise."""
    value = np.asarray(value)
    if exact is None:
        exact = np.issubdtype(value.dtype, np.integer)
    if exact:
        return bool(np.all(value == 0))
    return bool(np.all(np.abs(value) <= QARY_RTOL * max(scale, 1.0)))


def acf_aperiodic(a, b, tau: int):
    """
    Aperiodic cross-correlation of two sequences at shift ``tau``.

    Parameters
    ----------
    a, b : array_like
        Sequences of the same length ``L``.
    tau : int
        Time shift. Values with ``|tau| >= L`` give exactly zero.

    Returns
    -------
    int or complex
        ``sum_i a[i + tau] * conj(b[i])`` over the overlapping indices.
    """
    a, b = _pair(a, b, 1)
    L = a.shape[0]
    tau = int(tau)
    if abs(tau) >= L:
        return a.dtype.type(0) * b.dtype.type(0)
    if tau >= 0:
        return np.sum(a[tau:] * np.conj(b[: L - tau]))
    return np.sum(a[: L + tau] * np.conj(b[-tau:]))


def acf_periodic(a, b, tau: int):
    """
    Periodic cross-correlation by direct cyclic summation.

    ``tau`` is reduced modulo ``L``. This deliberately does not call
    :func:`acf_aperiodic`, so the two can check each other.
    """
    a, b = _pair(a, b, 1)
    L = a.shape[0]
    tau = int(tau) % L
    return np.sum(np.roll(a, -tau) * np.conj(b))


def code_xcorr(c1, c2, tau: int, mode: str = APERIODIC):
    """Row-summed correlation of two ``M x L`` codes at one shift."""
    _check_mode(mode)
    c1, c2 = _pair(c1, c2, 2)
    f = acf_aperiodic if mode == APERIODIC else acf_periodic
    return sum(f(r1, r2, tau) for r1, r2 in zip(c1, c2))


def shift_axis(L: int, mode: str = APERIODIC) -> np.ndarray:
    """Shift labels matching the last axis of a correlation profile."""
    _check_mode(mode)
    if mode == APERIODIC:
        return np.arange(-L + 1, L)
    return np.arange(L)


def correlation_profile(c1, c2, mode: str = APERIODIC) -> np.ndarray:
    """
    Code correlation at every admissible shift.

    Aperiodic profiles have ``2L - 1`` points ordered by ``tau = -L+1 .. L-1``;
    periodic profiles have ``L`` points ordered by ``tau = 0 .. L-1``.
    Use :func:`shift_axis` for the labels.
    """
    _check_mode(mode)
    c1, c2 = _pair(c1, c2, 2)
    L = c1.shape[1]
    if mode == APERIODIC:
        # np.correlate(x, y, "full")[L - 1 + tau] == sum_i x[i + tau] conj(y[i])
        out = sum(np.correlate(r1, r2, "full") for r1, r2 in zip(c1, c2))
    else:
        out = np.array([code_xcorr(c1, c2, t, PERIODIC) for t in range(L)])
    return np.asarray(out)


def cross_profiles(x, y=None, mode: str = APERIODIC) -> np.ndarray:
    """
    All-pairs correlation profiles of two stacks of codes.

    Parameters
    ----------
    x : array_like, shape (K1, M, L)
    y : array_like, shape (K2, M, L), optional
        Defaults to ``x``.
    mode : {"aperiodic", "periodic"}

    Returns
    -------
    ndarray, shape (K1, K2, S)
        ``out[k1, k2, s]`` is the correlation of ``x[k1]`` with ``y[k2]`` at
        shift ``shift_axis(L, mode)[s]``.
    """
    _check_mode(mode)
    x = np.asarray(x)
    y = x if y is None else np.asarray(y)
    if x.ndim != 3 or y.ndim != 3 or x.shape[1:] != y.shape[1:]:
        raise InvalidInputError(f"incompatible code stacks: {x.shape} vs {y.shape}")
    L = x.shape[2]
    yc = np.conj(y)
    taus = shift_axis(L, mode)
    dtype = np.result_type(x, y)
    out = np.empty((x.shape[0], y.shape[0], taus.size), dtype=dtype)
    for s, tau in enumerate(taus):
        if mode == PERIODIC:
            xs, ys = np.roll(x, -tau, axis=2), yc
        elif tau >= 0:
            xs, ys = x[:, :, tau:], yc[:, :, : L - tau]
        else:
            xs, ys = x[:, :, : L + tau], yc[:, :, -tau:]
        out[:, :, s] = np.tensordot(xs, ys, axes=([1, 2], [1, 2]))
    return out
