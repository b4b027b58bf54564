import math
from fractions import Fraction

import pytest

from fourops.estermann import (
    BinomialTable,
    candidate_set,
    estermann_zeta,
    pick_descent_direction,
    verify_lemma_direct,
    verify_lemma_termwise,
)
from fourops.sampling import SplitMix64, random_nonzero_exact_complex
from fourops.scalars import ComplexScalar


def C(re, im=0):
    return ComplexScalar(re, im)


# ---------------------------------------------------------------------------
# binomial table
# ---------------------------------------------------------------------------


def test_binomial_table_matches_math_comb():
    table = BinomialTable(40)
    for m in range(41):
        for j in range(m + 1):
            assert table.value(m, j) == math.comb(m, j)


def test_binomial_table_row_properties():
    table = BinomialTable(30)
    for m in range(31):
        row = table.row(m)
        assert row == row[::-1]  # symmetry
        assert sum(row) == 2**m


def test_binomial_table_bounds():
    table = BinomialTable(10)
    with pytest.raises(ValueError):
        table.value(11, 0)
    with pytest.raises(ValueError):
        table.value(5, 6)
    with pytest.raises(ValueError):
        table.value(5, -1)
    with pytest.raises(ValueError):
        BinomialTable(-1)


# ---------------------------------------------------------------------------
# the quadrant direction
# ---------------------------------------------------------------------------


def test_zeta_exact_values_k2():
    cand = estermann_zeta(2)
    # (1 + i/2)^2 = 3/4 + i
    assert cand.zeta == C(Fraction(3, 4), Fraction(1))
    # (3/4 + i)^2 = 9/16 - 1 + 3/2 i
    assert cand.zeta_pow_k == C(Fraction(-7, 16), Fraction(3, 2))
    assert cand.zeta.is_exact() and cand.zeta_pow_k.is_exact()


def test_zeta_rejects_bad_k():
    for bad in (0, 1, 3, -2, 2.0):
        with pytest.raises(ValueError):
            estermann_zeta(bad)


def test_direct_verdict_holds_even_k():
    for k in range(2, 42, 2):
        verdict = verify_lemma_direct(k)
        assert verdict.holds, k
        assert verdict.power.re < 0 < verdict.power.im
    assert verify_lemma_direct(2).power == C(Fraction(-7, 16), Fraction(3, 2))


# ---------------------------------------------------------------------------
# termwise regrouping
# ---------------------------------------------------------------------------


def test_termwise_k2_head_equals_bound():
    verdict = verify_lemma_termwise(2)
    # head = 1 - C(4,2)/4 + C(4,4)/16 = 1 - 3/2 + 1/16
    assert verdict.head == Fraction(-7, 16)
    # bound = -(3/2)(5k-3)/(6k^2) at k=2, met with equality
    assert verdict.head_bound == Fraction(-7, 16)
    assert verdict.real_groups == ()
    # single imaginary group: C(4,1)/2 - C(4,3)/8 = 2 - 1/2
    assert verdict.imag_groups == (Fraction(3, 2),)
    assert verdict.real_sum == Fraction(-7, 16)
    assert verdict.imag_sum == Fraction(3, 2)
    assert verdict.matches_direct
    assert verdict.holds


def test_termwise_k4_frozen_values():
    verdict = verify_lemma_termwise(4)
    # head = 1 - C(8,2)/16 + C(8,4)/256 = 1 - 28/16 + 70/256
    assert verdict.head == Fraction(-61, 128)
    # one real group (j=3): -C(8,6)/4^6 + C(8,8)/4^8
    assert verdict.real_groups == (Fraction(-447, 65536),)
    # imaginary groups (j=1,3): 2 - 7/8 and 56/1024 - 8/16384
    assert verdict.imag_groups == (Fraction(9, 8), Fraction(111, 2048))
    assert verdict.real_sum == Fraction(-31679, 65536)
    assert verdict.imag_sum == Fraction(2415, 2048)
    assert verdict.direct == C(Fraction(-31679, 65536), Fraction(2415, 2048))
    assert verdict.holds


def test_termwise_holds_even_k_up_to_60():
    table = BinomialTable(120)
    for k in range(2, 62, 2):
        verdict = verify_lemma_termwise(k, table)
        assert verdict.holds, k
        assert verdict.real_sum == verdict.direct.re
        assert verdict.imag_sum == verdict.direct.im


def test_termwise_table_too_small():
    with pytest.raises(ValueError):
        verify_lemma_termwise(10, BinomialTable(19))


def test_termwise_rejects_odd_k():
    with pytest.raises(ValueError):
        verify_lemma_termwise(3)


# ---------------------------------------------------------------------------
# candidate directions
# ---------------------------------------------------------------------------


def test_candidate_set_odd_k():
    cands = candidate_set(1)
    assert [c.zeta for c in cands] == [C(1), C(-1), C(0, 1), C(0, -1)]
    for c in cands:
        assert c.zeta_pow_k == c.zeta
    # i^3 = -i, (-i)^3 = i
    cands3 = candidate_set(3)
    assert [c.zeta_pow_k for c in cands3] == [C(1), C(-1), C(0, -1), C(0, 1)]


def test_candidate_set_even_k():
    cands = candidate_set(2)
    assert len(cands) == 3
    assert cands[0].zeta == C(1)
    assert cands[1].zeta == C(Fraction(3, 4), Fraction(1))
    assert cands[2].zeta == cands[1].zeta.conj()
    assert cands[2].zeta_pow_k == cands[1].zeta_pow_k.conj()


def test_conjugate_power_identity():
    # conj(zeta)^k computed by repeated multiplication equals conj(zeta^k)
    for k in range(2, 22, 2):
        cand = estermann_zeta(k)
        assert cand.zeta.conj().pow_int(k) == cand.zeta_pow_k.conj()


def test_candidate_quadrant_invariant():
    for k in range(2, 42, 2):
        power = candidate_set(k)[1].zeta_pow_k
        assert power.re < 0 < power.im


def test_candidate_set_rejects_bad_k():
    for bad in (0, -3, 1.5):
        with pytest.raises(ValueError):
            candidate_set(bad)


# ---------------------------------------------------------------------------
# direction picking
# ---------------------------------------------------------------------------


def test_pick_examples():
    # alpha = 1, k = 1: walk along -1
    assert pick_descent_direction(C(1), 1).zeta == C(-1)
    # alpha = 1, k = 2: both quadrant candidates tie at Re = -7/16; the
    # first one in enumeration order wins
    assert pick_descent_direction(C(1), 2).zeta == C(Fraction(3, 4), Fraction(1))
    # alpha = i, k = 2: Re[i * zeta^k] = -Im[zeta^k] = -3/2 for the upper
    # candidate, +3/2 for its conjugate, 0 for 1
    assert pick_descent_direction(C(0, 1), 2).zeta == C(Fraction(3, 4), Fraction(1))
    # alpha = -i, k = 2: mirrored, the conjugate wins
    assert pick_descent_direction(C(0, -1), 2).zeta == C(Fraction(3, 4), Fraction(-1))
    # alpha = -1, k = 2: stepping along the real axis already descends
    assert pick_descent_direction(C(-1), 2).zeta == C(1)


def test_pick_rejects_zero_alpha():
    with pytest.raises(ValueError):
        pick_descent_direction(C(0), 2)


def _directed_real_part(alpha, cand):
    return alpha.re * cand.zeta_pow_k.re - alpha.im * cand.zeta_pow_k.im


def test_completeness_sign_cases_even_k():
    # Documented case split for even k, alpha = a + bi nonzero:
    #   a < 0          -> zeta = 1 gives a < 0
    #   a > 0, b >= 0  -> upper quadrant: a*x - b*y < 0 since x < 0 < y
    #   a > 0, b < 0   -> lower quadrant: a*x + b*y < 0
    #   a = 0, b != 0  -> whichever quadrant makes -b*y negative
    for k in (2, 4, 10):
        for alpha in (
            C(-3, 5),
            C(2, 7),
            C(2, -7),
            C(0, 4),
            C(0, -4),
            C(1, 0),
        ):
            pick = pick_descent_direction(alpha, k)
            assert _directed_real_part(alpha, pick) < 0, (k, alpha)


def test_completeness_random_all_k():
    rng = SplitMix64(31)
    for k in range(1, 17):
        for _ in range(300):
            alpha = random_nonzero_exact_complex(rng)
            pick = pick_descent_direction(alpha, k)
            assert _directed_real_part(alpha, pick) < 0


def test_pick_float_mode():
    pick = pick_descent_direction(C(1.0, 0.5), 2)
    assert isinstance(pick.zeta.re, float)
    assert _directed_real_part(C(1.0, 0.5), pick) < 0
