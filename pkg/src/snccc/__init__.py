"""
Spectrally-null-constrained complete complementary codes.

Build code sets by concatenating seed CCC codes with zero gaps and
orthogonal scalings, then verify their correlation properties exhaustively.
"""

from .codes import CodeFamily, CodeSet
from .construction import (
    GapPartition,
    MosFamily,
    build_multiple_snc_ccc,
    build_snc_ccc,
    make_partition,
    mos_generate,
    r_operator,
)
from .correlation import (
    APERIODIC,
    PERIODIC,
    Alphabet,
    acf_aperiodic,
    acf_periodic,
    code_xcorr,
    correlation_profile,
    cross_profiles,
    shift_axis,
)
from .errors import (
    AlphabetError,
    ConstructionRefused,
    DocumentError,
    InfeasibleError,
    InvalidInputError,
    NotFoundError,
    SeedVerificationError,
    SNCCCError,
    UnsupportedError,
)
from .io import (
    dumps_codeset,
    dumps_family,
    export_profile_csv,
    load_codeset,
    load_family,
    loads_codeset,
    loads_family,
    read_profile_csv,
    save_codeset,
    save_family,
)
from .permutations import PermutationFamily, check_perm_family, search_perm_family
from .recipe import Recipe, build
from .seeds import kron_ccc, seed_ccc
from .verification import (
    VerificationReport,
    Violation,
    inter_set_sidelobes,
    measure_zccz,
    predicted_zccz,
    qccs_delta,
    verify_ccc,
    verify_mos,
    verify_snc,
    verify_zccs,
)

__all__ = [name for name in dir() if not name.startswith("_")]
