"""
Build the 4 x 9 spectrally-null set from the built-in seed and check it.

Each of the four codes is two scaled copies of a length-3 seed code with
three zeros between them, so every sequence carries three nulls.
"""
import numpy as np

from snccc import GapPartition, build_snc_ccc, correlation_profile, mos_generate, seed_ccc, verify_ccc

seed = seed_ccc("example1")
print("seed codes (K, M, L) =", seed.codes.shape)
print(seed.codes[0])

mos = mos_generate(2, "hadamard")
print("\northogonal scalars:")
print(mos.vectors)

codes = build_snc_ccc(seed, mos, GapPartition((0, 3, 0)))
sym = np.array(["-", "0", "+"])
for k, code in enumerate(codes.codes):
    print(f"\ncode {k + 1}:")
    for row in code:
        print("  " + " ".join(sym[row + 1]))

report = verify_ccc(codes)
print("\nverdict:", report.verdict, " peak:", report.peak, " zeros per code:", report.epsilon)

print("\nsummed autocorrelation of code 1 over all 17 shifts:")
print(correlation_profile(codes[0], codes[0]))
print("and its cross-correlation with code 2:")
print(correlation_profile(codes[0], codes[1]))
