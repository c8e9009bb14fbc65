import pytest

from thickenings.closed_forms import cumulative_length
from thickenings.cohomology import (
    LengthValue,
    dual_index,
    local_cohomology_length,
    nonvanishing_indices,
)


class TestLengthValue:
    def test_finite_zero_collapses(self):
        assert LengthValue.finite(0) == LengthValue.zero()

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            LengthValue.finite(-1)

    def test_direct_construction_guarded(self):
        with pytest.raises(ValueError):
            LengthValue("finite", 0)
        with pytest.raises(ValueError):
            LengthValue("zero", 5)
        with pytest.raises(ValueError):
            LengthValue("bogus")

    def test_json(self):
        assert LengthValue.zero().to_json() == {"kind": "zero"}
        assert LengthValue.infinite().to_json() == {"kind": "infinite"}
        assert LengthValue.finite(10).to_json() == {"kind": "finite", "value": "10"}


class TestNonvanishingIndices:
    def test_n2(self):
        assert nonvanishing_indices(2, 5) == {4, 7}
        assert nonvanishing_indices(2, 3) == {2, 3}

    def test_n3(self):
        assert nonvanishing_indices(3, 7) == {5, 9, 13}

    def test_square_rejected(self):
        with pytest.raises(ValueError):
            nonvanishing_indices(3, 3)
        with pytest.raises(ValueError):
            nonvanishing_indices(4, 3)

    def test_n1_rejected(self):
        with pytest.raises(ValueError):
            nonvanishing_indices(1, 5)


class TestDualIndex:
    def test_examples(self):
        assert dual_index(5, 2, 3) == 7
        assert dual_index(4, 2, 5) == 3
        assert dual_index(6, 2, 0) == 12

    def test_involution(self):
        for m in range(3, 9):
            for j in range(0, 2 * m + 1):
                assert dual_index(m, 2, dual_index(m, 2, j)) == j

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            dual_index(3, 2, 7)
        with pytest.raises(ValueError):
            dual_index(3, 2, -1)

    def test_duality_pairs_live_indices(self):
        # the two nonzero H_m indices map onto the two nonzero H_I indices
        for m in range(3, 11):
            assert nonvanishing_indices(2, m) == {
                dual_index(m, 2, 3),
                dual_index(m, 2, m + 1),
            }


class TestLocalCohomologyLength:
    def test_finite_index(self):
        assert local_cohomology_length(3, 2, 3) == LengthValue.finite(1)
        assert local_cohomology_length(3, 3, 3) == LengthValue.finite(10)

    def test_top_index_infinite(self):
        assert local_cohomology_length(5, 4, 6) == LengthValue.infinite()

    def test_other_indices_zero(self):
        assert local_cohomology_length(5, 4, 5) == LengthValue.zero()

    def test_t1_is_zero_at_3(self):
        assert local_cohomology_length(4, 1, 3) == LengthValue.zero()

    def test_matches_cumulative(self):
        for m in (3, 5):
            for t in range(2, 8):
                v = local_cohomology_length(m, t, 3)
                assert v.is_finite and v.value == cumulative_length(m, t)

    def test_vanishing_structure_grid(self):
        for m in range(3, 7):
            for t in range(1, 6):
                for j in range(0, 2 * m + 1):
                    v = local_cohomology_length(m, t, j)
                    if j == m + 1:
                        assert v.kind == "infinite"
                    elif j == 3:
                        assert v.kind == ("zero" if t == 1 else "finite")
                    else:
                        assert v.kind == "zero"

    def test_monotone_lengths(self):
        # executable shadow of the injectivity of the maps between powers
        for m in range(3, 8):
            for t in range(1, 12):
                assert cumulative_length(m, t) <= cumulative_length(m, t + 1)

    def test_hypothesis_violations_rejected(self):
        with pytest.raises(ValueError):
            local_cohomology_length(2, 1, 3)
        with pytest.raises(ValueError):
            local_cohomology_length(4, 0, 3)
        with pytest.raises(ValueError):
            local_cohomology_length(4, 1, 9)
        with pytest.raises(ValueError):
            local_cohomology_length(4, 1, -1)
