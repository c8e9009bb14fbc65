"""Acceptance suite: the headline claims, each at its stated bound.

Every criterion prints one pass/fail line (run with ``pytest -s`` to see
them) and fails its test on any mismatch. All comparisons are exact; the
single limit statement is checked as an exact rational inequality.
"""

import math
from fractions import Fraction

from thickenings.closed_forms import (
    asymptotic_multiplicity,
    binom,
    catalan,
    cumulative_length,
    identity_holds,
    layer_length_closed,
)
from thickenings.cohomology import dual_index, local_cohomology_length
from thickenings.filtration import (
    FiltrationIndex,
    cumulative_length_via_decomposition,
    filtration_indices,
    layer_length_via_decomposition,
)
from thickenings.partitions import Partition, partitions_of
from thickenings.schur import schur_dim, ssyt_count


def _criterion(name, thunk):
    try:
        ok = thunk()
    except Exception as exc:
        print(f"[acceptance] {name}: FAIL ({exc!r})")
        raise
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def test_criterion_1_decomposition_reproduces_closed_form():
    # full pipeline: filtration indices -> weights -> paired weights ->
    # exact tensor dimensions -> layer and cumulative sums
    def run():
        for m in range(3, 9):
            for t in range(1, 13):
                if layer_length_via_decomposition(m, t) != layer_length_closed(m, t):
                    return False
                if cumulative_length_via_decomposition(m, t) != cumulative_length(m, t):
                    return False
        return True

    _criterion("1 length via decomposition equals closed form", run)


def test_criterion_2_catalan_and_limit():
    def run():
        for m in range(3, 21):
            if math.factorial(2 * m) * asymptotic_multiplicity(m) != catalan(m):
                return False
        m, t = 3, 2000
        ratio = Fraction(cumulative_length(m, t), t ** (2 * m))
        limit = asymptotic_multiplicity(m)
        return abs(ratio - limit) / limit < Fraction(5, 100)

    _criterion("2 Catalan corollary and asymptotic ratio", run)


def test_criterion_3_filtration_index_characterization():
    def run():
        for t in range(1, 21):
            expected = {FiltrationIndex(Partition((z, z)), 1) for z in range(t)}
            if filtration_indices(2, 2, t) != expected:
                return False
        return True

    _criterion("3 filtration index set is ((z, z), 1), z <= t-1", run)


def test_criterion_4_schur_dimension_oracle():
    def run():
        for size in range(9):
            for shape in partitions_of(size, max_rows=4):
                for n in range(1, 7):
                    if schur_dim(shape, n) != ssyt_count(shape, n):
                        return False
        for k in range(9):
            for n in range(1, 7):
                if schur_dim(Partition([k] if k else []), n) != binom(n + k - 1, k):
                    return False
                if schur_dim(Partition([1] * k), n) != binom(n, k):
                    return False
        return True

    _criterion("4 Weyl product equals tableau count", run)


def test_criterion_5_binomial_identity():
    def run():
        return all(identity_holds(a, b) for b in range(41) for a in range(b + 1))

    _criterion("5 square-weighted binomial identity on 0 <= a <= b <= 40", run)


def test_criterion_6_telescoping():
    def run():
        for m in range(3, 11):
            total = 0
            for t in range(1, 31):
                total += layer_length_closed(m, t)
                if total != cumulative_length(m, t):
                    return False
        return True

    _criterion("6 layer sums telescope to the cumulative form", run)


def test_criterion_7_vanishing_structure():
    def run():
        for m in range(3, 9):
            for j in range(0, 2 * m + 1):
                if dual_index(m, 2, dual_index(m, 2, j)) != j:
                    return False
            for t in range(1, 11):
                for j in range(0, 2 * m + 1):
                    v = local_cohomology_length(m, t, j)
                    if j == m + 1:
                        if v.kind != "infinite":
                            return False
                    elif j == 3:
                        if v.kind not in ("zero", "finite"):
                            return False
                    elif v.kind != "zero":
                        return False
        return True

    _criterion("7 vanishing away from j = 3 and j = m + 1", run)
