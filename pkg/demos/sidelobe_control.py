"""
Inter-set side-lobes for three sets with pairwise distinct interior gaps.

The seed is the Kronecker product of the ternary seed with a 3-point DFT
seed, so M = 12 is divisible by P = 3. Distinct interior gaps keep the
aperiodic side-lobes at or below LM. Under periodic correlation the gaps
also have to differ modulo L: gaps 4 and 1 are distinct but congruent
mod 3, and the periodic side-lobe doubles.
"""
from snccc import (
    GapPartition,
    InfeasibleError,
    build_multiple_snc_ccc,
    inter_set_sidelobes,
    make_partition,
    mos_generate,
    search_perm_family,
    seed_ccc,
)

seed = seed_ccc("example1*dft:3")
LM = seed.L * seed.M
mos = mos_generate(3, "dft")
perms = search_perm_family(seed.M, 3)
print("M =", seed.M, " L =", seed.L, " LM =", LM)
print("permutations:")
for p in perms.perms:
    print("  ", p)

cases = [
    ("distinct", make_partition(6, 3, "distinct")),
    ("distinct-mod-L", make_partition(8, 3, "distinct-mod-L", seed.L)),
    ("4 and 1", GapPartition((0, 4, 1, 0))),
]
for label, part in cases:
    fam = build_multiple_snc_ccc(seed, mos, part, perms)
    a = inter_set_sidelobes(fam, "aperiodic").max_magnitude
    p = inter_set_sidelobes(fam, "periodic").max_magnitude
    print(f"{label:>15} gaps={part.gaps}  max aperiodic={a / LM:5.2f} LM  max periodic={p / LM:5.2f} LM")

print("\nThree sets need n >= 3 for distinct gaps:")
try:
    make_partition(2, 3, "distinct")
except InfeasibleError as err:
    print("  ", err)
