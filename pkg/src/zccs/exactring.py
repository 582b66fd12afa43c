"""Exact arithmetic in the group ring Z[w], w = exp(2*pi*i/q).

Every correlation value produced by this package is a sum of q-th roots of
unity with integer multiplicities.  Such a value is stored as its multiset of
exponents (``coeffs[k]`` = multiplicity of ``w**k``) and compared to zero by
reducing the polynomial ``sum coeffs[k] x**k`` modulo the cyclotomic
polynomial Phi_q.  No floating point is involved in any decision.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

__all__ = [
    "CycVal",
    "cyc_add",
    "cyc_mul_root",
    "cyc_conj",
    "cyc_is_zero",
    "cyc_to_complex",
    "cyclotomic_poly",
    "reduce_mod_cyclotomic",
    "reduction_matrix",
]


def _poly_divmod(num, den):
    """Exact division of integer polynomials (coefficient lists, low degree
    first).  ``den`` must be monic."""
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    rem = num[:dd] if dd else [0]
    return quot, rem


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_q, lowest degree first.

    Obtained by exact division of ``x**q - 1`` by the product of Phi_d over
    the proper divisors d of q.
    """
    if q < 1:
        raise ValueError(f"cyclotomic_poly needs q >= 1, got {q}")
    if q == 1:
        return (-1, 1)
    num = [-1] + [0] * (q - 1) + [1]
    den = [1]
    for d in range(1, q):
        if q % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    quot, rem = _poly_divmod(num, den)
    assert not any(rem), "x^q - 1 not divisible by product of lower Phi_d"
    return tuple(quot)


def reduce_mod_cyclotomic(coeffs, q: int) -> tuple[int, ...]:
    """Remainder of ``sum coeffs[k] x**k`` modulo Phi_q, of length phi(q)."""
    phi = cyclotomic_poly(q)
    _, rem = _poly_divmod([int(c) for c in coeffs], list(phi))
    deg = len(phi) - 1
    rem = list(rem) + [0] * (deg - len(rem))
    return tuple(rem[:deg])


@lru_cache(maxsize=None)
def reduction_matrix(q: int) -> np.ndarray:
    """Integer matrix R (q x phi(q)) with row k equal to ``x**k mod Phi_q``.

    ``counts @ R`` reduces many coefficient vectors at once; a vector is zero
    in Z[w] exactly when its image is the zero row.
    """
    rows = []
    for k in range(q):
        e = [0] * q
        e[k] = 1
        rows.append(reduce_mod_cyclotomic(e, q))
    mat = np.array(rows, dtype=np.int64)
    mat.setflags(write=False)
    return mat


class CycVal:
    """An element ``sum_k coeffs[k] * w**k`` of Z[w].

    Coefficients are Python ints and are never reduced destructively;
    equality and hashing go through the canonical remainder mod Phi_q, so two
    values compare equal iff they denote the same complex number.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs=None):
        if q < 2:
            raise ValueError(f"modulus must be >= 2, got {q}")
        if coeffs is None:
            coeffs = (0,) * q
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != q:
            raise ValueError(f"expected {q} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycVal is immutable")

    @classmethod
    def zero(cls, q: int) -> "CycVal":
        return cls(q)

    @classmethod
    def root(cls, q: int, k: int = 0, mult: int = 1) -> "CycVal":
        """``mult * w**k``."""
        c = [0] * q
        c[k % q] = mult
        return cls(q, c)

    @classmethod
    def from_int(cls, q: int, n: int) -> "CycVal":
        return cls.root(q, 0, n)

    def _check(self, other: "CycVal"):
        if not isinstance(other, CycVal):
            return NotImplemented
        if other.q != self.q:
            raise ValueError(f"modulus mismatch: {self.q} vs {other.q}")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = CycVal.from_int(self.q, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CycVal(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycVal(self.q, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycVal.from_int(self.q, other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CycVal(self.q, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return CycVal(self.q, [int(other) * a for a in self.coeffs])
        if self._check(other) is NotImplemented:
            return NotImplemented
        q = self.q
        out = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % q] += a * b
        return CycVal(q, out)

    __rmul__ = __mul__

    def mul_root(self, k: int) -> "CycVal":
        """Multiply by ``w**k``: the coefficient at j moves to (j + k) mod q."""
        q = self.q
        k %= q
        return CycVal(q, self.coeffs[-k:] + self.coeffs[:-k] if k else self.coeffs)

    def conj(self) -> "CycVal":
        q = self.q
        out = [0] * q
        for k, c in enumerate(self.coeffs):
            out[(-k) % q] = c
        return CycVal(q, out)

    def reduced(self) -> tuple[int, ...]:
        return reduce_mod_cyclotomic(self.coeffs, self.q)

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def to_complex(self) -> complex:
        """Floating-point value, for display and CSV output only."""
        q = self.q
        return sum(c * cmath.exp(2j * math.pi * k / q) for k, c in enumerate(self.coeffs) if c) + 0j

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycVal.from_int(self.q, other)
        if not isinstance(other, CycVal):
            return NotImplemented
        return self.q == other.q and (self - other).is_zero()

    def __hash__(self):
        return hash((self.q, self.reduced()))

    def __repr__(self):
        return f"CycVal(q={self.q}, coeffs={list(self.coeffs)})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*w^{k}")
        return " + ".join(terms) if terms else "0"


def cyc_add(a: CycVal, b: CycVal) -> CycVal:
    return a + b


def cyc_mul_root(a: CycVal, k: int) -> CycVal:
    if not 0 <= k < a.q:
        raise ValueError(f"root exponent must lie in [0, {a.q}), got {k}")
    return a.mul_root(k)


def cyc_conj(a: CycVal) -> CycVal:
    return a.conj()


def cyc_is_zero(a: CycVal) -> bool:
    return a.is_zero()


def cyc_to_complex(a: CycVal) -> complex:
    return a.to_complex()
