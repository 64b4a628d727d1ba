"""Reproducible construction recipes."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .codes import CodeFamily
from .construction import (
    GapPartition,
    build_multiple_snc_ccc,
    build_snc_ccc,
    make_partition,
    mos_generate,
)
from .errors import DocumentError, InvalidInputError
from .permutations import PermutationFamily, search_perm_family
from .seeds import seed_ccc


@dataclass
class Recipe:
    """
    Everything needed to rebuild a family bit-for-bit.

    ``partition`` wins over ``n``/``strategy`` when given. ``perms`` is None
    for a single set, ``"auto"`` to search for ``P`` permutations, or an
    explicit list of 1-based permutations. ``strict_mu`` keeps the slot
    range of the disjointness condition at ``1 .. P-1``; turning it off
    adds slot ``P``.
    """

    seed: str = "example1"
    P: int = 2
    n: int | None = None
    partition: list | None = None
    strategy: str = "front"
    mos: str = "hadamard"
    perms: object = None
    search_seed: int = 0
    require_14: bool = False
    strict_mu: bool = True

    def to_dict(self) -> dict:
        d = asdict(self)
        return {"format_version": "1", "type": "recipe", **d}

    @classmethod
    def from_dict(cls, doc: dict) -> "Recipe":
        if doc.get("type", "recipe") != "recipe":
            raise DocumentError(f"not a recipe document (type {doc.get('type')!r})", "type")
        known = {k: v for k, v in doc.items() if k in cls.__dataclass_fields__}
        unknown = set(doc) - set(known) - {"format_version", "type"}
        if unknown:
            raise DocumentError(f"unknown recipe fields {sorted(unknown)}", sorted(unknown)[0])
        return cls(**known)

    def gap_partition(self, L: int) -> GapPartition:
        if self.partition is not None:
            part = GapPartition(tuple(self.partition))
            if part.P != self.P:
                raise InvalidInputError(
                    f"partition has {len(part.gaps)} gaps but P={self.P} needs {self.P + 1}"
                )
            if self.n is not None and part.n != self.n:
                raise InvalidInputError(f"partition sums to {part.n}, not n={self.n}")
            return part
        return make_partition(self.n or 0, self.P, self.strategy, L)

    def permutation_family(self, M: int):
        mu_inclusive = not self.strict_mu
        if self.perms is None:
            return None
        if self.perms == "auto":
            return search_perm_family(M, self.P, self.require_14, self.search_seed, mu_inclusive)
        return PermutationFamily(tuple(tuple(p) for p in self.perms), M, self.P, mu_inclusive)


def build(recipe: Recipe) -> CodeFamily:
    """
    Run a recipe.

    The gap partition is resolved before the MOS family and permutations, so
    an infeasible gap strategy is reported as such even when other
    parameters (say ``P`` not dividing ``M``) are also wrong.
    """
    if recipe.P < 1:
        raise InvalidInputError(f"P must be positive, got {recipe.P}")
    seed = seed_ccc(recipe.seed)
    part = recipe.gap_partition(seed.L)
    mos = mos_generate(recipe.P, recipe.mos)
    perms = recipe.permutation_family(seed.M)
    if perms is None:
        codes = build_snc_ccc(seed, mos, part, verify_seed=False)
        family = CodeFamily((codes,), {
            "seed": recipe.seed, "seed_L": seed.L, "P": recipe.P,
            "partition": list(part.gaps), "mos": mos.kind, "perms": None,
        })
    else:
        family = build_multiple_snc_ccc(seed, mos, part, perms, verify_seed=False, seed_id=recipe.seed)
    family.provenance["recipe"] = recipe.to_dict()
    return family
