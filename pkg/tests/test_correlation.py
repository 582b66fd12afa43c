import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import int_value, naive_code_counts, naive_counts, pow2_is_zero
from z4_example_data import Z4_EXAMPLE
from zccs.correlation import (
    CodeSet,
    ZccsParams,
    accf,
    accf_profile,
    bound_check,
    code_ccf,
    code_ccf_profile,
    first_violation,
    is_ccc,
    is_gcp,
    is_zccs,
    pairs_in_order,
    profile_is_zero,
    restricted_pair_corr_sum,
    zcz_width,
)
from zccs.exactring import CycVal
from zccs.gbf import GBF, restrict, sequence, truncate

RESTRICTED_PAIR_ARRAY = [0] * 8 + [-1] + [0] * 3 + [1] + [0] * 3 + [2, 0, 2] + [0] * 5 + [-1, 0, -2, 0, -1, 0, 0]


def z4_set():
    return CodeSet(4, Z4_EXAMPLE)


def restricted_pair():
    f = GBF(2, 4, {(0, 1): 1, (2, 3): 1, (0,): 1})
    g = GBF(2, 4, {(0, 2): 1, (1, 3): 1})
    return restrict(f, [0, 2], [0, 1]), restrict(g, [0, 2], [1, 0])


@st.composite
def seq_pairs(draw, qs=(2, 4, 8), max_len=24):
    q = draw(st.sampled_from(qs))
    L = draw(st.integers(1, max_len))
    vec = st.lists(st.integers(0, q - 1), min_size=L, max_size=L)
    return q, np.array(draw(vec)), np.array(draw(vec))


@st.composite
def codesets(draw, qs=(2, 4), max_k=3, max_m=3, max_len=8):
    q = draw(st.sampled_from(qs))
    K, M, L = draw(st.integers(1, max_k)), draw(st.integers(1, max_m)), draw(st.integers(1, max_len))
    flat = draw(st.lists(st.integers(0, q - 1), min_size=K * M * L, max_size=K * M * L))
    return CodeSet(q, np.array(flat).reshape(K, M, L))


def test_accf_examples():
    a = np.array([0, 3, 1, 2, 2])
    assert accf(a, a, 0, 4) == CycVal.from_int(4, 5)
    fr, gr = restricted_pair()
    assert int_value(accf(fr, gr, 1, 2).coeffs, 2) == 2
    assert int_value(accf(fr, gr, -7, 2).coeffs, 2) == -1
    assert int_value(accf(fr, gr, 11, 2).coeffs, 2) == -2
    assert accf(a, a, 5, 4).is_zero() and accf(a, a, -9, 4).is_zero()
    with pytest.raises(ValueError):
        accf(a, a[:3], 0, 4)


def test_restricted_pair_array():
    fr, gr = restricted_pair()
    got = [int_value(accf(fr, gr, t, 2).coeffs, 2) for t in range(-15, 16)]
    assert got == RESTRICTED_PAIR_ARRAY


def test_truncated_shift_identity():
    fr, gr = restricted_pair()
    tf, tg = truncate(fr), truncate(gr)
    off, n = tf.offset - tg.offset, tf.length
    assert (off, n) == (3, 11)
    for tau in range(-15, 16):
        lhs = accf(fr, gr, tau, 2)
        if off - (n - 1) <= tau <= off + (n - 1):
            assert lhs == accf(tf, tg, tau - off, 2)
        else:
            assert lhs.is_zero()


def test_code_ccf_examples():
    S = z4_set()
    assert code_ccf(S[0], S[0], 0, 4) == 128
    assert code_ccf(S[0], S[0], 5, 4).is_zero()
    assert code_ccf(S[0], S[4], 3, 4).is_zero()
    with pytest.raises(ValueError):
        code_ccf(S[0], S[0][:2], 0, 4)


def test_is_gcp_examples():
    assert is_gcp([0, 0], [0, 1], 2)
    assert not is_gcp([0, 0], [0, 0], 2)
    # Golay pair from the two half-path rows of x0x1 (q = 2, m = 2)
    a = sequence(GBF(2, 2, {(0, 1): 1}))
    b = sequence(GBF(2, 2, {(0, 1): 1, (0,): 1}))
    assert is_gcp(a, b, 2)


def test_is_ccc_examples():
    assert not is_ccc(z4_set())
    assert not is_ccc(CodeSet(2, [[[0, 0]]]))
    assert is_ccc(CodeSet(2, [[[0, 0], [0, 1]], [[0, 1], [0, 0]]]))


def test_is_zccs_examples():
    S = z4_set()
    assert is_zccs(S, 16)
    assert not is_zccs(S, 32)
    assert is_zccs(CodeSet(4, [[[0, 1, 3, 2]]]), 1)
    with pytest.raises(ValueError):
        is_zccs(S, 0)
    with pytest.raises(ValueError):
        is_zccs(S, 33)


def test_zcz_width_examples():
    assert zcz_width(z4_set()) == 16
    assert zcz_width(CodeSet(2, [[[0, 1, 1]], [[0, 1, 1]]])) == 0
    assert zcz_width(CodeSet(2, [[[0, 0], [0, 1]], [[0, 1], [0, 0]]])) == 2


def test_first_violation_z4_set():
    assert first_violation(z4_set(), 16) is None
    mu1, mu2, tau = first_violation(z4_set(), 17)
    assert abs(tau) == 16 and mu1 < mu2


def test_bound_check_examples():
    b = bound_check(ZccsParams(8, 4, 32, 16))
    assert (b.lhs, b.rhs, b.optimal, b.valid) == (8, 8, True, True)
    b = bound_check(ZccsParams(4, 4, 32, 16))
    assert b.valid and not b.optimal
    assert not bound_check(ZccsParams(9, 4, 32, 16)).valid
    with pytest.raises(ValueError):
        ZccsParams(8, 4, 32, 0)


def test_codeset_validation():
    with pytest.raises(ValueError):
        CodeSet(4, [[0, 1, 2]])
    with pytest.raises(ValueError):
        CodeSet(4, [[[0, 4]]])


def test_pairs_in_order():
    assert pairs_in_order(3) == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


def test_restricted_sum_worked_illustration():
    quad = {(2, 3): 2, (1, 3): 2, (0, 3): 2, (0, 1): 2, (0, 2): 2, (0, 4): 2}
    f = GBF(4, 5, quad)
    fp = f + GBF.var(4, 5, 1, 2)
    total = {}
    for d1, d2 in ((1, 0), (0, 1)):
        for tau, v in restricted_pair_corr_sum(f, fp, [0], [4], [0], [d1], [d2]).items():
            total[tau] = total.get(tau, CycVal.zero(4)) + v
    nonzero = {tau: int_value(v.coeffs, 4) for tau, v in total.items() if not v.is_zero()}
    assert nonzero == {-16: 16, 16: 16}


def test_restricted_sum_equal_words():
    quad = {(2, 3): 2, (1, 3): 2, (0, 3): 2, (0, 1): 2, (0, 2): 2, (0, 4): 2}
    f = GBF(4, 5, quad)
    fp = f + GBF.var(4, 5, 1, 2)
    for c, d in itertools.product((0, 1), repeat=2):
        res = restricted_pair_corr_sum(f, fp, [0], [4], [c], [d], [d])
        nonzero = {tau: int_value(v.coeffs, 4) for tau, v in res.items() if not v.is_zero()}
        assert nonzero == {0: 2 ** (5 - 2 + 1)}


def test_restricted_sum_errors():
    f = GBF(4, 3)
    with pytest.raises(ValueError):
        restricted_pair_corr_sum(f, GBF(4, 4), [0], [1], [0], [0], [0])
    with pytest.raises(ValueError):
        restricted_pair_corr_sum(f, f, [0], [0], [0], [0], [0])
    with pytest.raises(ValueError):
        restricted_pair_corr_sum(f, f, [0], [1], [0, 1], [0], [0])


@given(seq_pairs())
def test_accf_profile_matches_naive(data):
    q, a, b = data
    L = len(a)
    prof = accf_profile(a, b, q)
    for tau in range(-(L - 1), L):
        assert prof[tau + L - 1].tolist() == naive_counts(a.tolist(), b.tolist(), tau, q)
        assert accf(a, b, tau, q).coeffs == tuple(naive_counts(a.tolist(), b.tolist(), tau, q))


@given(seq_pairs(max_len=64))
def test_conjugate_symmetry(data):
    q, a, b = data
    L = len(a)
    for tau in range(-L, L + 1):
        assert accf(a, b, tau, q) == accf(b, a, -tau, q).conj()


@given(codesets())
def test_code_profile_matches_naive_and_symmetric(S):
    q, L = S.q, S.L
    for a, b in itertools.product(range(S.K), repeat=2):
        prof = code_ccf_profile(S[a], S[b], q)
        for tau in range(-(L - 1), L):
            assert prof[tau + L - 1].tolist() == naive_code_counts(S[a], S[b], tau, q)
            assert code_ccf(S[a], S[b], tau, q) == code_ccf(S[b], S[a], -tau, q).conj()


@given(codesets())
def test_profile_zero_test_matches_fold(S):
    prof = code_ccf_profile(S[0], S[-1], S.q)
    assert profile_is_zero(prof, S.q).tolist() == [pow2_is_zero(r.tolist(), S.q) for r in prof]


def _brute_is_zccs(S, Z):
    q, L, M = S.q, S.L, S.M
    for a, b in itertools.product(range(S.K), repeat=2):
        for tau in range(-(Z - 1), Z):
            c = naive_code_counts(S[a], S[b], tau, q)
            if a == b and tau == 0:
                c[0] -= L * M
            if not pow2_is_zero(c, q):
                return False
    return True


@given(codesets())
def test_is_zccs_and_width_against_brute_force(S):
    w = zcz_width(S)
    for Z in range(1, S.L + 1):
        assert is_zccs(S, Z) == _brute_is_zccs(S, Z)
        assert is_zccs(S, Z) == (Z <= w)
    if 1 <= w < S.L:
        assert is_zccs(S, w) and not is_zccs(S, w + 1)
    if w == 0:
        assert not _brute_is_zccs(S, 1)


def test_dense_and_loop_paths_agree(monkeypatch):
    import zccs.correlation as corr

    rng = np.random.default_rng(0)
    a = rng.integers(0, 4, size=(3, 64))
    b = rng.integers(0, 4, size=(3, 64))
    dense = code_ccf_profile(a, b, 4)
    monkeypatch.setattr(corr, "_DENSE_LIMIT", 0)
    assert np.array_equal(code_ccf_profile(a, b, 4), dense)


@given(st.integers(1, 8), st.data())
def test_binary_sign_sum(k, data):
    c1 = data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))
    c2 = data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))
    total = sum((-1) ** sum(di * (x + y) for di, x, y in zip(d, c1, c2)) for d in itertools.product((0, 1), repeat=k))
    assert total == (2**k if c1 == c2 else 0)
