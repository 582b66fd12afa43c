"""Exact aperiodic correlations of Z_q phase sequences and code sets.

A correlation at shift tau,

    C(a, b)(tau) = sum_i a_{i+tau} * conj(b_i),

of two sequences of q-th roots of unity is an element of Z[w].  Its
coefficient vector counts, for each residue k, how many aligned pairs have
exponent difference ``a_{i+tau} - b_i = k (mod q)``.  All scans here work on
those integer counts, arranged as arrays of shape ``(2L - 1, q)`` indexed by
``tau + L - 1``, and test them against zero with `reduction_matrix`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exactring import CycVal, reduction_matrix
from .gbf import GBF, RestrictedSeq, Truncated, restrict_unordered

__all__ = [
    "CodeSet",
    "ZccsParams",
    "BoundCheck",
    "accf",
    "accf_profile",
    "code_ccf",
    "code_ccf_profile",
    "profile_is_zero",
    "is_gcp",
    "is_ccc",
    "is_zccs",
    "first_violation",
    "zcz_width",
    "bound_check",
    "restricted_pair_corr_sum",
]

# Above this many aligned pairs per code pair, fall back to a per-shift loop.
_DENSE_LIMIT = 1 << 22


@dataclass(frozen=True, eq=False)
class CodeSet:
    """K codes of M rows of length L, stored as Z_q exponents ``(K, M, L)``."""

    q: int
    codes: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.codes, dtype=np.int64)
        if arr.ndim != 3:
            raise ValueError(f"codes must have shape (K, M, L), got {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ValueError(f"code entries must lie in [0, {self.q})")
        object.__setattr__(self, "codes", arr)

    @property
    def K(self) -> int:
        return self.codes.shape[0]

    @property
    def M(self) -> int:
        return self.codes.shape[1]

    @property
    def L(self) -> int:
        return self.codes.shape[2]

    def __len__(self):
        return self.K

    def __getitem__(self, i):
        return self.codes[i]

    def __eq__(self, other):
        if not isinstance(other, CodeSet):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.codes, other.codes)

    def to_list(self) -> list:
        return self.codes.tolist()


@dataclass(frozen=True)
class ZccsParams:
    K: int
    M: int
    L: int
    Z: int
    canonical: bool = True

    def __post_init__(self):
        if not 1 <= self.Z <= self.L:
            raise ValueError(f"ZCZ width must satisfy 1 <= Z <= L, got Z={self.Z}, L={self.L}")

    @property
    def optimal(self) -> bool:
        return bound_check(self).optimal


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int
    optimal: bool
    valid: bool


def bound_check(p: ZccsParams) -> BoundCheck:
    """Set-size bound K <= M * floor(L / Z); equality means optimal."""
    if p.Z < 1:
        raise ValueError("Z must be >= 1")
    rhs = p.M * (p.L // p.Z)
    return BoundCheck(lhs=p.K, rhs=rhs, optimal=p.K == rhs, valid=p.K <= rhs)


# --- sequence level -------------------------------------------------------


def _as_masked(x):
    if isinstance(x, (RestrictedSeq, Truncated)):
        return np.asarray(x.exponents, dtype=np.int64), np.asarray(x.support, dtype=bool)
    arr = np.asarray(x, dtype=np.int64)
    return arr, np.ones(arr.shape, dtype=bool)


def _counts(a, ma, b, mb, q: int) -> np.ndarray:
    """Correlation counts summed over leading axes; a, b have shape (..., L)."""
    L = a.shape[-1]
    a = a.reshape(-1, L)
    b = b.reshape(-1, L)
    ma = ma.reshape(-1, L)
    mb = mb.reshape(-1, L)
    rows = a.shape[0]
    if rows * L * L <= _DENSE_LIMIT:
        # diff[r, j, i] = a[r, j] - b[r, i] for tau = j - i
        diff = (a[:, :, None] - b[:, None, :]) % q
        live = ma[:, :, None] & mb[:, None, :]
        tau_idx = np.arange(L)[:, None] - np.arange(L)[None, :] + (L - 1)
        flat = (np.broadcast_to(tau_idx, diff.shape) * q + diff)[live]
        return np.bincount(flat, minlength=(2 * L - 1) * q).reshape(2 * L - 1, q)
    out = np.zeros((2 * L - 1, q), dtype=np.int64)
    for tau in range(-(L - 1), L):
        if tau >= 0:
            d = (a[:, tau:] - b[:, : L - tau]) % q
            live = ma[:, tau:] & mb[:, : L - tau]
        else:
            d = (a[:, : L + tau] - b[:, -tau:]) % q
            live = ma[:, : L + tau] & mb[:, -tau:]
        out[tau + L - 1] = np.bincount(d[live], minlength=q)
    return out


def accf_profile(a, b, q: int) -> np.ndarray:
    """Counts for every shift tau in (-L, L); row ``tau + L - 1``."""
    ea, ma = _as_masked(a)
    eb, mb = _as_masked(b)
    if ea.shape != eb.shape or ea.ndim != 1:
        raise ValueError(f"sequence length mismatch: {ea.shape} vs {eb.shape}")
    return _counts(ea, ma, eb, mb, q)


def accf(a, b, tau: int, q: int) -> CycVal:
    """Aperiodic cross-correlation ``C(a, b)(tau)`` as an exact value.

    ``a`` and ``b`` are exponent vectors, `RestrictedSeq` or `Truncated`
    objects; positions outside a support contribute nothing.
    """
    ea, ma = _as_masked(a)
    eb, mb = _as_masked(b)
    if ea.shape != eb.shape or ea.ndim != 1:
        raise ValueError(f"sequence length mismatch: {ea.shape} vs {eb.shape}")
    L = len(ea)
    if not -L < tau < L:
        return CycVal.zero(q)
    if tau >= 0:
        d = (ea[tau:] - eb[: L - tau]) % q
        live = ma[tau:] & mb[: L - tau]
    else:
        d = (ea[: L + tau] - eb[-tau:]) % q
        live = ma[: L + tau] & mb[-tau:]
    return CycVal(q, np.bincount(d[live], minlength=q).tolist())


def profile_is_zero(counts: np.ndarray, q: int) -> np.ndarray:
    """Boolean per row: does that coefficient vector vanish in Z[w]?"""
    red = np.asarray(counts, dtype=np.int64) @ reduction_matrix(q)
    return ~np.any(red, axis=-1)


def profile_values(counts: np.ndarray, q: int) -> list[CycVal]:
    return [CycVal(q, row.tolist()) for row in np.asarray(counts)]


# --- code level -----------------------------------------------------------


def _check_code_pair(c1, c2):
    c1 = np.asarray(c1, dtype=np.int64)
    c2 = np.asarray(c2, dtype=np.int64)
    if c1.ndim != 2 or c1.shape != c2.shape:
        raise ValueError(f"code shape mismatch: {c1.shape} vs {c2.shape}")
    return c1, c2


def code_ccf_profile(c1, c2, q: int) -> np.ndarray:
    c1, c2 = _check_code_pair(c1, c2)
    ones = np.ones(c1.shape, dtype=bool)
    return _counts(c1, ones, c2, ones, q)


def code_ccf(c1, c2, tau: int, q: int) -> CycVal:
    """Sum over rows nu of ``accf(c1[nu], c2[nu], tau)``."""
    c1, c2 = _check_code_pair(c1, c2)
    total = CycVal.zero(q)
    for r1, r2 in zip(c1, c2):
        total = total + accf(r1, r2, tau, q)
    return total


def _pair_profiles(S: CodeSet):
    """Yield ``(mu1, mu2, counts)`` for every unordered pair mu1 <= mu2."""
    for mu1 in range(S.K):
        for mu2 in range(mu1, S.K):
            yield mu1, mu2, code_ccf_profile(S.codes[mu1], S.codes[mu2], S.q)


def first_violation(S: CodeSet, Z: int):
    """First ``(mu1, mu2, tau)`` breaking the ZCCS conditions for width Z.

    Shifts are scanned by increasing |tau| (negative before positive), and
    pairs lexicographically within a shift.  Returns None if none exists.
    """
    if not 1 <= Z <= S.L:
        raise ValueError(f"Z must satisfy 1 <= Z <= L={S.L}, got {Z}")
    L, q = S.L, S.q
    target = np.zeros(q, dtype=np.int64)
    target[0] = L * S.M
    bad = []
    for mu1, mu2, counts in _pair_profiles(S):
        window = counts[L - Z : L + Z - 1].copy()
        if mu1 == mu2:
            window[Z - 1] -= target
        zero = profile_is_zero(window, q)
        for idx in np.flatnonzero(~zero):
            tau = int(idx) - (Z - 1)
            bad.append((abs(tau), tau, mu1, mu2))
    if not bad:
        return None
    _, tau, mu1, mu2 = min(bad)
    return mu1, mu2, tau


def is_zccs(S: CodeSet, Z: int) -> bool:
    """Auto sums equal LM at tau = 0 and vanish for 0 < |tau| < Z; cross sums
    vanish for |tau| < Z."""
    return first_violation(S, Z) is None


def is_ccc(S: CodeSet) -> bool:
    return S.K == S.M and is_zccs(S, S.L)


def zcz_width(S: CodeSet) -> int:
    """Largest Z with ``is_zccs(S, Z)``; 0 when even Z = 1 fails."""
    L, q = S.L, S.q
    width = L
    for mu1, mu2, counts in _pair_profiles(S):
        zero = profile_is_zero(counts, q)
        if mu1 == mu2:
            centre = counts[L - 1].copy()
            centre[0] -= L * S.M
            zero[L - 1] = not np.any(centre @ reduction_matrix(q))
        bad = np.flatnonzero(~zero)
        if bad.size:
            width = min(width, int(np.min(np.abs(bad - (L - 1)))))
    return width


def is_gcp(a, b, q: int) -> bool:
    """True iff the aperiodic autocorrelations of a and b cancel off zero."""
    ea, _ = _as_masked(a)
    eb, _ = _as_masked(b)
    if ea.shape != eb.shape:
        raise ValueError(f"sequence length mismatch: {ea.shape} vs {eb.shape}")
    total = accf_profile(a, a, q) + accf_profile(b, b, q)
    zero = profile_is_zero(total, q)
    L = ea.shape[-1]
    zero[L - 1] = True
    return bool(zero.all())


# --- restricted sums ------------------------------------------------------


def restricted_pair_corr_sum(f: GBF, fprime: GBF, x, xprime, c, d1, d2) -> dict[int, CycVal]:
    """``tau -> C(f|xx'=c d1, f|xx'=c d2) + C(f'|xx'=c d1, f'|xx'=c d2)``.

    Computed directly from the masked sequences for every tau in (-L, L).
    """
    if (f.q, f.m) != (fprime.q, fprime.m):
        raise ValueError("f and f' must share q and m")
    idx = list(x) + list(xprime)
    if len(set(idx)) != len(idx):
        raise ValueError(f"restriction indices overlap: {idx}")
    if len(c) != len(x) or len(d1) != len(xprime) or len(d2) != len(xprime):
        raise ValueError("restriction words do not match index lists")
    w1 = list(c) + list(d1)
    w2 = list(c) + list(d2)
    q, L = f.q, 1 << f.m
    total = np.zeros((2 * L - 1, q), dtype=np.int64)
    for g in (f, fprime):
        total += accf_profile(restrict_unordered(g, idx, w1), restrict_unordered(g, idx, w2), q)
    return {tau: CycVal(q, total[tau + L - 1].tolist()) for tau in range(-(L - 1), L)}


def pairs_in_order(K: int):
    """Unordered code pairs (a <= b) in the order used by profile output."""
    return [(a, b) for a, b in itertools.combinations_with_replacement(range(K), 2)]
