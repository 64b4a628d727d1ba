"""
Checking and searching permutation families.

The cyclic shifts of (1,2,3,4) keep every slot value apart across the
family but line up neighbouring pairs, so the second condition fails.
The search returns the lexicographically first family meeting both.
"""
from snccc import check_perm_family, search_perm_family

cyclic = [(1, 2, 3, 4), (2, 3, 4, 1), (3, 4, 1, 2), (4, 1, 2, 3)]
other = [(1, 2, 3, 4), (4, 3, 2, 1), (3, 1, 4, 2), (2, 4, 1, 3)]
print("cyclic (disjoint, unique) =", check_perm_family(cyclic, 4, 4))
print("other  (disjoint, unique) =", check_perm_family(other, 4, 4))

for M, P in [(4, 4), (8, 4), (12, 3)]:
    fam = search_perm_family(M, P, require_14=True)
    print(f"\nM={M}, P={P}:")
    for p in fam.perms:
        print("  ", ",".join(map(str, p)))

print("\nA different search seed shuffles the candidate order:")
for p in search_perm_family(8, 4, require_14=True, seed=3).perms:
    print("  ", ",".join(map(str, p)))
