import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snccc import (
    Alphabet,
    ConstructionRefused,
    GapPartition,
    InfeasibleError,
    InvalidInputError,
    MosFamily,
    PermutationFamily,
    SeedVerificationError,
    UnsupportedError,
    build_multiple_snc_ccc,
    build_snc_ccc,
    kron_ccc,
    make_partition,
    measure_zccz,
    mos_generate,
    r_operator,
    seed_ccc,
    verify_ccc,
    verify_mos,
    verify_snc,
)
from snccc.codes import CodeSet
from snccc.seeds import EXAMPLE1, EXAMPLE1_PRINTED_C1

from conftest import GOLDEN_B


class TestROperator:
    def test_first_example_code(self, example_seed):
        out = r_operator(example_seed.codes[:2], [1, 1], GapPartition((0, 3, 0)))
        np.testing.assert_array_equal(out, GOLDEN_B[0])

    def test_second_example_code(self, example_seed):
        out = r_operator(example_seed.codes[:2], [1, -1], GapPartition((0, 3, 0)))
        np.testing.assert_array_equal(out, GOLDEN_B[1])
        np.testing.assert_array_equal(out[0], [1, 1, 1, 0, 0, 0, -1, 1, -1])

    def test_identity(self, example_seed):
        c = example_seed.codes[2]
        np.testing.assert_array_equal(r_operator([c], [1], GapPartition((0, 0))), c)

    def test_errors(self, example_seed):
        c = example_seed.codes
        with pytest.raises(InvalidInputError):
            r_operator([c[0], c[1][:, :2]], [1, 1], GapPartition((0, 0, 0)))
        with pytest.raises(InvalidInputError):
            r_operator(c[:2], [1, 2], GapPartition((0, 0, 0)))
        with pytest.raises(InvalidInputError):
            r_operator(c[:2], [1, 1], GapPartition((0, 0)))

    @settings(max_examples=50)
    @given(
        P=st.integers(1, 4), M=st.integers(1, 3), L=st.integers(1, 4),
        gaps=st.lists(st.integers(0, 4), min_size=5, max_size=5), data=st.data(),
    )
    def test_geometry(self, P, M, L, gaps, data):
        entries = st.sampled_from([-1, 0, 1])
        codes = [
            np.array(data.draw(st.lists(st.lists(entries, min_size=L, max_size=L), min_size=M, max_size=M)))
            for _ in range(P)
        ]
        b = np.array(data.draw(st.lists(st.sampled_from([-1, 1]), min_size=P, max_size=P)))
        part = GapPartition(gaps[: P + 1])
        out = r_operator(codes, b, part)
        assert out.shape == (M, P * L + part.n)
        zeros_in = sum(np.count_nonzero(c == 0, axis=1) for c in codes)
        np.testing.assert_array_equal(np.count_nonzero(out == 0, axis=1), zeros_in + part.n)
        for start, c, s in zip(part.offsets(L), codes, b):
            np.testing.assert_array_equal(out[:, start:start + L], s * c)


class TestBuild:
    def test_example(self, example_b):
        np.testing.assert_array_equal(example_b.codes, GOLDEN_B)
        assert example_b.alphabet.is_ternary

    @pytest.mark.parametrize("seed_id,kind", [("hadamard:4", "hadamard"), ("example1", "hadamard"), ("dft:3", "dft")])
    def test_full_width_no_gaps(self, seed_id, kind):
        seed = seed_ccc(seed_id)
        P = seed.M
        out = build_snc_ccc(seed, mos_generate(P, kind), GapPartition((0,) * (P + 1)))
        rep = verify_ccc(out)
        assert rep.verdict and rep.epsilon == 0
        assert rep.measured["classification"] == "CCC"
        assert out.L == P * seed.L

    def test_leading_zero_column(self):
        seed = seed_ccc("hadamard:2")
        out = build_snc_ccc(seed, mos_generate(2), GapPartition((1, 0, 0)))
        assert out.L == 2 * seed.L + 1
        assert not np.any(out.codes[:, :, 0])
        assert verify_ccc(out).verdict

    def test_peak_is_mpl(self, example_seed):
        for part in [(0, 3, 0), (2, 0, 5), (1, 1, 1)]:
            out = build_snc_ccc(example_seed, mos_generate(2), GapPartition(part))
            rep = verify_ccc(out)
            assert rep.verdict
            assert rep.peak == 4 * 2 * 3
            assert rep.epsilon == 4 * sum(part)

    def test_p_must_divide_m(self, example_seed):
        with pytest.raises(InvalidInputError):
            build_snc_ccc(example_seed, mos_generate(3, "dft"), GapPartition((0, 0, 0, 0)))

    def test_rejects_unverified_seed(self):
        bad = EXAMPLE1.copy()
        bad[0] = EXAMPLE1_PRINTED_C1
        seed = CodeSet(bad)
        with pytest.raises(SeedVerificationError):
            build_snc_ccc(seed, mos_generate(2), GapPartition((0, 0, 0)))
        # explicit bypass
        out = build_snc_ccc(seed, mos_generate(2), GapPartition((0, 0, 0)), verify_seed=False)
        assert not verify_ccc(out).verdict

    def test_dft_mos_promotes_alphabet(self):
        out = build_snc_ccc(seed_ccc("hadamard:4"), mos_generate(4, "dft"), GapPartition((0, 1, 0, 0, 2)))
        assert out.alphabet == Alphabet(4)
        assert verify_ccc(out).verdict

    def test_qary_seed_with_hadamard_mos(self):
        out = build_snc_ccc(seed_ccc("dft:6"), mos_generate(2), GapPartition((1, 2, 0)))
        assert out.alphabet == Alphabet(6)
        assert verify_ccc(out).verdict


class TestMultiple:
    PERMS = [(1, 2, 3, 4), (2, 1, 4, 3)]

    def test_two_sets(self, example_seed):
        fam = build_multiple_snc_ccc(example_seed, mos_generate(2), GapPartition((0, 3, 0)), self.PERMS)
        assert len(fam) == 2 and all(s.K == 4 and s.L == 9 for s in fam)
        assert all(verify_ccc(s).verdict for s in fam)
        Z, rep = measure_zccz(fam, "aperiodic")
        assert Z >= 6 and rep.verdict

    def test_identity_matches_single(self, example_seed, example_b):
        fam = build_multiple_snc_ccc(example_seed, mos_generate(2), GapPartition((0, 3, 0)),
                                     PermutationFamily.identity(4, 2))
        assert len(fam) == 1
        assert fam[0] == example_b

    def test_refuses_overlapping_slots(self, example_seed):
        with pytest.raises(ConstructionRefused):
            build_multiple_snc_ccc(example_seed, mos_generate(2), GapPartition((0, 0, 0)),
                                   [(1, 2, 3, 4), (3, 2, 1, 4)])

    def test_too_many_perms(self, example_seed):
        with pytest.raises(InvalidInputError):
            build_multiple_snc_ccc(example_seed, mos_generate(2), GapPartition((0, 0, 0)),
                                   [(1, 2, 3, 4), (2, 1, 4, 3), (4, 3, 2, 1)])

    def test_provenance(self, example_seed):
        fam = build_multiple_snc_ccc(example_seed, mos_generate(2), GapPartition((1, 3, 2)), self.PERMS,
                                     seed_id="example1")
        assert fam.provenance["partition"] == [1, 3, 2]
        assert fam.provenance["seed_L"] == 3
        assert fam.provenance["perms"] == [list(p) for p in self.PERMS]


class TestPartition:
    def test_front(self):
        assert make_partition(3, 2, "front").gaps == (0, 3, 0)
        assert make_partition(0, 2, "front").gaps == (0, 0, 0)

    def test_distinct(self):
        # smallest distinct interior gaps summing to 3 are 1 and 2
        candidates = [g for g in itertools.product(range(4), repeat=2) if sum(g) == 3 and g[0] != g[1]]
        assert (1, 2) in candidates
        assert make_partition(3, 3, "distinct").gaps == (0, 1, 2, 0)
        assert make_partition(7, 3, "distinct").gaps == (0, 1, 6, 0)

    def test_distinct_infeasible(self):
        with pytest.raises(InfeasibleError, match="P\\(P-1\\)/2 = 3"):
            make_partition(2, 3, "distinct")

    def test_even(self):
        assert make_partition(7, 4, "even").gaps == (0, 3, 2, 2, 0)
        assert make_partition(0, 3, "even").gaps == (0, 0, 0, 0)

    def test_single_block(self):
        for strategy in ("front", "even", "distinct"):
            assert make_partition(4, 1, strategy).gaps == (0, 4)

    @pytest.mark.parametrize("n", range(3, 20))
    def test_distinct_mod_l(self, n):
        L = 3
        part = make_partition(n, 3, "distinct-mod-L", L)
        assert part.n == n
        assert part.gaps[0] == part.gaps[-1] == 0
        residues = [g % L for g in part.interior]
        assert len(set(residues)) == len(residues)
        assert min(part.interior) >= 1

    def test_distinct_mod_l_needs_residues(self):
        with pytest.raises(InfeasibleError):
            make_partition(5, 3, "distinct-mod-L", 1)
        with pytest.raises(InvalidInputError):
            make_partition(5, 3, "distinct-mod-L")

    def test_interior_min(self):
        assert GapPartition((5, 2, 4, 0)).interior_min == 2
        with pytest.raises(InvalidInputError):
            GapPartition((1, 1)).interior_min

    def test_rejects_negative(self):
        with pytest.raises(InvalidInputError):
            GapPartition((0, -1, 2))
        with pytest.raises(InvalidInputError):
            make_partition(-1, 2)


class TestMos:
    def test_hadamard_two(self):
        np.testing.assert_array_equal(mos_generate(2).vectors, [[1, 1], [1, -1]])

    @pytest.mark.parametrize("kind", ["hadamard", "dft"])
    def test_single(self, kind):
        np.testing.assert_array_equal(mos_generate(1, kind).vectors, [[1]])

    def test_hadamard_four(self):
        v = mos_generate(4).vectors
        assert set(np.unique(v)) == {-1, 1}
        for i, j in itertools.combinations(range(4), 2):
            assert int(v[i] @ v[j]) == 0

    def test_dft_three(self):
        mos = mos_generate(3, "dft")
        rep = verify_mos(mos)
        assert rep.verdict
        assert mos.alphabet == Alphabet(3)

    def test_hadamard_needs_power_of_two(self):
        with pytest.raises(UnsupportedError, match="dft"):
            mos_generate(3, "hadamard")

    def test_rejects_zero_entries(self):
        with pytest.raises(InvalidInputError):
            MosFamily(np.array([[1, 0], [1, 1]]))


class TestSeeds:
    def test_example(self):
        s = seed_ccc("example1")
        assert s.codes.shape == (4, 4, 3)
        rep = verify_ccc(s)
        assert rep.verdict and rep.peak == 12
        assert not verify_snc(s)

    def test_example_blocks_match_golden(self):
        s = seed_ccc("example1")
        np.testing.assert_array_equal(GOLDEN_B[0][:, :3], s.codes[0])
        np.testing.assert_array_equal(GOLDEN_B[0][:, 6:], s.codes[1])
        np.testing.assert_array_equal(GOLDEN_B[2][:, :3], s.codes[2])
        np.testing.assert_array_equal(GOLDEN_B[2][:, 6:], s.codes[3])

    def test_printed_first_code_is_not_complementary(self):
        bad = EXAMPLE1.copy()
        bad[0] = EXAMPLE1_PRINTED_C1
        rep = verify_ccc(CodeSet(bad))
        assert not rep.verdict
        # summed auto-correlation of the printed first code at shift 1
        row_sum = sum(int(np.dot(r[1:], r[:-1])) for r in EXAMPLE1_PRINTED_C1)
        assert row_sum == -2

    def test_hadamard_two(self):
        s = seed_ccc("hadamard:2")
        np.testing.assert_array_equal(s.codes, [[[1], [1]], [[1], [-1]]])

    @pytest.mark.parametrize("seed_id", ["hadamard:4", "hadamard:8", "dft:3", "dft:5", "example1*dft:3",
                                         "hadamard:2*example1"])
    def test_verified(self, seed_id):
        assert verify_ccc(seed_ccc(seed_id)).verdict

    def test_kron_shape(self):
        k = kron_ccc(seed_ccc("example1"), seed_ccc("dft:3"))
        assert k.codes.shape == (12, 12, 3)
        assert k.alphabet == Alphabet(6)

    def test_bad_ids(self):
        with pytest.raises(InvalidInputError):
            seed_ccc("hadamard:x")
        with pytest.raises(UnsupportedError):
            seed_ccc("hadamard:3")
        with pytest.raises(InvalidInputError):
            seed_ccc("/nonexistent/seed.json")

    def test_file_seed(self, tmp_path, example_seed):
        from snccc.io import save_codeset

        path = tmp_path / "seed.json"
        save_codeset(example_seed, path)
        assert seed_ccc(str(path)) == example_seed

    def test_file_seed_rejected(self, tmp_path):
        from snccc.io import save_codeset

        bad = EXAMPLE1.copy()
        bad[0] = EXAMPLE1_PRINTED_C1
        path = tmp_path / "bad.json"
        save_codeset(CodeSet(bad), path)
        with pytest.raises(SeedVerificationError) as err:
            seed_ccc(str(path))
        assert err.value.violation is not None
