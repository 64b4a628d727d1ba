"""
Built-in seed CCCs.

Seed identifiers understood by :func:`seed_ccc`:

``example1``
    The (4, 3)-CCC below.
``hadamard:M``
    The (M, 1)-CCC whose k-th code is the k-th column of the Sylvester
    Hadamard matrix of order ``M`` (a power of two).
``dft:M``
    Same, from the ``M``-point Fourier matrix (any ``M``; ``M``-th roots of
    unity).
``A*B``
    Kronecker product of two seeds, an ``(M_A M_B, L_A L_B)``-CCC.
anything else
    A path to a code-set document (see :mod:`snccc.io`).
"""

from __future__ import annotations

import numpy as np

from .codes import CodeSet
from .construction import mos_generate
from .correlation import Alphabet
from .errors import InvalidInputError, SeedVerificationError
from .verification import verify_ccc

# The printed version of the first code repeats its last row in row 3 and is
# not a complementary set; row 3 below is the block embedded in the first two
# constructed codes of the worked example.
EXAMPLE1 = np.array(
    [
        [[1, 1, 1], [1, 1, -1], [1, 1, -1], [-1, 1, -1]],
        [[1, -1, 1], [1, 1, -1], [-1, -1, 1], [1, 1, 1]],
        [[1, -1, -1], [1, 1, 1], [-1, 1, -1], [1, -1, -1]],
        [[1, -1, -1], [1, -1, 1], [1, 1, 1], [-1, 1, 1]],
    ],
    dtype=np.int64,
)

EXAMPLE1_PRINTED_C1 = np.array([[1, 1, 1], [1, 1, -1], [-1, 1, -1], [-1, 1, -1]], dtype=np.int64)


def hadamard_seed(M: int) -> CodeSet:
    H = mos_generate(M, "hadamard").vectors
    return CodeSet(H.T[:, :, None], Alphabet(2))


def dft_seed(M: int) -> CodeSet:
    F = mos_generate(M, "dft")
    return CodeSet(F.vectors.T[:, :, None], F.alphabet)


def kron_ccc(a: CodeSet, b: CodeSet) -> CodeSet:
    """
    Kronecker product of two CCCs.

    Code ``k1*K_b + k2``, row ``r1*M_b + r2`` is ``kron(a[k1][r1], b[k2][r2])``.
    """
    codes = np.einsum("kri,lsj->klrsij", a.codes, b.codes)
    K = a.K * b.K
    M = a.M * b.M
    L = a.L * b.L
    return CodeSet(codes.reshape(K, M, L), a.alphabet.combine(b.alphabet))


def _parse_order(text: str, name: str) -> int:
    try:
        M = int(text)
    except ValueError:
        raise InvalidInputError(f"seed '{name}:{text}' needs an integer order") from None
    if M < 1:
        raise InvalidInputError(f"seed order must be positive, got {M}")
    return M


def _build(seed_id: str) -> CodeSet:
    if "*" in seed_id:
        parts = [p.strip() for p in seed_id.split("*")]
        out = _build(parts[0])
        for p in parts[1:]:
            out = kron_ccc(out, _build(p))
        return out
    if seed_id == "example1":
        return CodeSet(EXAMPLE1, Alphabet(2))
    name, _, arg = seed_id.partition(":")
    if name == "hadamard" and arg:
        return hadamard_seed(_parse_order(arg, name))
    if name == "dft" and arg:
        return dft_seed(_parse_order(arg, name))
    from .io import load_codeset

    return load_codeset(seed_id)


def seed_ccc(seed_id: str) -> CodeSet:
    """Look up or load a seed and verify it is a CCC before returning it."""
    cs = _build(seed_id)
    report = verify_ccc(cs, subject=seed_id)
    if not report.verdict:
        v = report.violations[0]
        raise SeedVerificationError(
            f"seed {seed_id!r} is not a CCC: code pair {v.code_pair} at shift {v.tau} gives {v.value}", v
        )
    if cs.K != cs.M:
        raise SeedVerificationError(f"seed {seed_id!r} has {cs.K} codes of {cs.M} rows; a CCC needs K == M")
    return cs
