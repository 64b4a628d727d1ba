"""Containers for code sets and families of code sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .correlation import Alphabet
from .errors import InvalidInputError


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class CodeSet:
    """
    ``K`` codes, each an ``M x L`` matrix, stored as one ``(K, M, L)`` array.

    The array is read-only; use ``codes.copy()`` to get a mutable version.
    """

    codes: np.ndarray
    alphabet: Alphabet = Alphabet()

    def __post_init__(self):
        codes = np.asarray(self.codes)
        if codes.ndim != 3:
            raise InvalidInputError(f"code set must be a (K, M, L) array, got shape {codes.shape}")
        if min(codes.shape) < 1:
            raise InvalidInputError(f"code set has an empty dimension: {codes.shape}")
        object.__setattr__(self, "codes", _freeze(self.alphabet.coerce(codes)))

    @classmethod
    def from_codes(cls, codes, alphabet: Alphabet | None = None) -> "CodeSet":
        """Build from a list of 2-D codes, inferring the alphabet if not given."""
        shapes = {np.shape(c) for c in codes}
        if len(shapes) != 1:
            raise InvalidInputError(f"codes have differing shapes: {sorted(shapes)}")
        arr = np.array(codes)
        if alphabet is None:
            alphabet = Alphabet.infer(arr)
        return cls(arr, alphabet)

    @property
    def K(self) -> int:
        return self.codes.shape[0]

    @property
    def M(self) -> int:
        return self.codes.shape[1]

    @property
    def L(self) -> int:
        return self.codes.shape[2]

    def __len__(self):
        return self.K

    def __getitem__(self, k):
        return self.codes[k]

    def __iter__(self):
        return iter(self.codes)

    def zero_counts(self) -> np.ndarray:
        """Number of zero entries in each code."""
        return np.count_nonzero(self.codes == 0, axis=(1, 2))

    def __eq__(self, other):
        if not isinstance(other, CodeSet):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.codes.shape == other.codes.shape
            and bool(np.array_equal(self.codes, other.codes))
        )


@dataclass(frozen=True, eq=False)
class CodeFamily:
    """Several code sets of identical geometry, plus the recipe that made them."""

    sets: tuple
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        sets = tuple(self.sets)
        if not sets:
            raise InvalidInputError("a family needs at least one code set")
        shapes = {s.codes.shape for s in sets}
        if len(shapes) != 1:
            raise InvalidInputError(f"member sets differ in geometry: {sorted(shapes)}")
        alphabets = {s.alphabet for s in sets}
        if len(alphabets) != 1:
            raise InvalidInputError("member sets use different alphabets")
        object.__setattr__(self, "sets", sets)

    @property
    def alphabet(self) -> Alphabet:
        return self.sets[0].alphabet

    @property
    def M(self) -> int:
        return self.sets[0].M

    @property
    def L(self) -> int:
        return self.sets[0].L

    def __len__(self):
        return len(self.sets)

    def __getitem__(self, j):
        return self.sets[j]

    def __iter__(self):
        return iter(self.sets)

    def flatten(self) -> CodeSet:
        return CodeSet(np.concatenate([s.codes for s in self.sets]), self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, CodeFamily):
            return NotImplemented
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))
