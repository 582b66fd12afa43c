"""Generalized Boolean functions over Z_q and the sequences they define.

A GBF in m variables is stored as a map from monomials (strictly increasing
tuples of variable indices, ``()`` for the constant) to nonzero coefficients
in Z_q.  Index ``i`` of the associated sequence evaluates the function at the
binary digits of ``i``, least significant digit first: ``x_j = (i >> j) & 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "GBF",
    "RestrictedSeq",
    "Truncated",
    "bit_matrix",
    "evaluate",
    "sequence",
    "reverse",
    "restrict",
    "truncate",
    "rm_generator",
    "monomials",
]

Monomial = tuple


def _canon_monomial(vars_: Iterable[int]) -> Monomial:
    mono = tuple(sorted(int(v) for v in vars_))
    if len(set(mono)) != len(mono):
        raise ValueError(f"repeated variable in monomial {mono}")
    return mono


class GBF:
    """A Z_q-valued function of m binary variables in monomial form.

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are dropped so that ``==`` is mathematical equality.
    """

    __slots__ = ("q", "m", "_terms", "_hash")

    def __init__(self, q: int, m: int, terms: Mapping | Iterable = ()):
        if q < 2:
            raise ValueError(f"modulus must be >= 2, got {q}")
        if m < 0:
            raise ValueError(f"variable count must be >= 0, got {m}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for vars_, c in items:
            mono = _canon_monomial(vars_)
            if mono and mono[-1] >= m:
                raise ValueError(f"monomial {mono} uses a variable >= m={m}")
            if mono and mono[0] < 0:
                raise ValueError(f"negative variable index in {mono}")
            acc[mono] = (acc.get(mono, 0) + int(c)) % q
        self.q = q
        self.m = m
        self._terms = {k: v for k, v in sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])) if v}
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def const(cls, q: int, m: int, c: int) -> "GBF":
        return cls(q, m, {(): c})

    @classmethod
    def var(cls, q: int, m: int, j: int, c: int = 1) -> "GBF":
        return cls(q, m, {(j,): c})

    @classmethod
    def complement(cls, q: int, m: int, j: int) -> "GBF":
        """The function ``1 - x_j``."""
        return cls(q, m, {(): 1, (j,): -1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coeff(self, *vars_: int) -> int:
        return self._terms.get(_canon_monomial(vars_), 0)

    @property
    def constant(self) -> int:
        return self._terms.get((), 0)

    def linear(self) -> list[int]:
        """Coefficients g_0..g_{m-1} of the degree-one monomials."""
        return [self._terms.get((j,), 0) for j in range(self.m)]

    @property
    def degree(self) -> int:
        return max((len(k) for k in self._terms), default=0)

    # arithmetic -----------------------------------------------------------

    def _compatible(self, other: "GBF"):
        if (self.q, self.m) != (other.q, other.m):
            raise ValueError(f"incompatible GBFs: (q, m) = {(self.q, self.m)} vs {(other.q, other.m)}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GBF.const(self.q, self.m, other)
        if not isinstance(other, GBF):
            return NotImplemented
        self._compatible(other)
        return GBF(self.q, self.m, itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return GBF(self.q, self.m, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GBF.const(self.q, self.m, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return GBF(self.q, self.m, {k: int(other) * v for k, v in self._terms.items()})
        if not isinstance(other, GBF):
            return NotImplemented
        # x_j^2 = x_j on binary inputs
        self._compatible(other)
        out: dict[Monomial, int] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                mono = tuple(sorted(set(ka) | set(kb)))
                out[mono] = out.get(mono, 0) + va * vb
        return GBF(self.q, self.m, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GBF):
            return NotImplemented
        return (self.q, self.m, self._terms) == (other.q, other.m, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.q, self.m, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"GBF(q={self.q}, m={self.m}, {self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            body = "".join(f"x{j}" for j in mono) or "1"
            parts.append(body if c == 1 and mono else f"{c}{body}" if mono else str(c))
        return " + ".join(parts)

    # serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "terms": [{"vars": list(k), "c": v} for k, v in self._terms.items()],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "GBF":
        return cls(int(d["q"]), int(d["m"]), [(t["vars"], t["c"]) for t in d.get("terms", [])])

    # evaluation -----------------------------------------------------------

    def __call__(self, i: int) -> int:
        return evaluate(self, i)


def bit_matrix(m: int) -> np.ndarray:
    """``(2**m, m)`` array whose row i holds the binary digits of i, LSB first."""
    idx = np.arange(1 << m, dtype=np.int64)
    return ((idx[:, None] >> np.arange(m, dtype=np.int64)[None, :]) & 1).astype(np.int64)


def evaluate(f: GBF, i: int) -> int:
    if not 0 <= i < (1 << f.m):
        raise ValueError(f"index {i} out of range for m={f.m}")
    total = 0
    for mono, c in f._terms.items():
        if all((i >> j) & 1 for j in mono):
            total += c
    return total % f.q


def sequence(f: GBF) -> np.ndarray:
    """Exponent vector ``(f_0, ..., f_{2^m - 1})`` of psi(f)."""
    bits = bit_matrix(f.m)
    out = np.zeros(1 << f.m, dtype=np.int64)
    for mono, c in f._terms.items():
        if mono:
            out += c * np.prod(bits[:, list(mono)], axis=1)
        else:
            out += c
    return out % f.q


def reverse(f: GBF) -> GBF:
    """``f(1 - x_0, ..., 1 - x_{m-1})`` re-expanded in monomial form."""
    out: dict[Monomial, int] = {}
    for mono, c in f._terms.items():
        # prod_{j in S} (1 - x_j) = sum_{T subset S} (-1)^{|T|} x_T
        for r in range(len(mono) + 1):
            sign = -1 if r % 2 else 1
            for sub in itertools.combinations(mono, r):
                out[sub] = out.get(sub, 0) + sign * c
    return GBF(f.q, f.m, out)


@dataclass(frozen=True, eq=False)
class RestrictedSeq:
    """psi(f|_{x=c}) as exponents plus a support mask.

    Positions outside the support are zeros of the complex sequence; their
    exponent entries are meaningless and held at 0.
    """

    q: int
    exponents: np.ndarray
    support: np.ndarray

    @property
    def length(self) -> int:
        return len(self.exponents)

    @property
    def first_nonzero(self) -> int | None:
        nz = np.flatnonzero(self.support)
        return int(nz[0]) if nz.size else None

    @property
    def last_nonzero(self) -> int | None:
        nz = np.flatnonzero(self.support)
        return int(nz[-1]) if nz.size else None

    @property
    def pattern_length(self) -> int:
        if self.first_nonzero is None:
            return 0
        return self.last_nonzero - self.first_nonzero + 1

    def as_symbols(self, plus="+", minus="-", zero="0") -> str:
        """Binary rendering used by the worked examples: +, - or 0 per entry.

        Only meaningful for q = 2.
        """
        chars = []
        for e, s in zip(self.exponents, self.support):
            chars.append(zero if not s else (plus if e == 0 else minus))
        return "".join(chars)


@dataclass(frozen=True, eq=False)
class Truncated:
    offset: int
    exponents: np.ndarray
    support: np.ndarray

    @property
    def length(self) -> int:
        return len(self.exponents)


def restrict(f: GBF, xlist, c) -> RestrictedSeq:
    """Keep entry i only when bit ``xlist[a]`` of i equals ``c[a]`` for every a."""
    xlist = [int(j) for j in xlist]
    c = [int(v) for v in c]
    if len(xlist) != len(c):
        raise ValueError(f"restriction lists differ in length: {len(xlist)} vs {len(c)}")
    if any(b <= a for a, b in zip(xlist, xlist[1:])):
        raise ValueError(f"restriction indices must be strictly increasing: {xlist}")
    if any(not 0 <= j < f.m for j in xlist):
        raise ValueError(f"restriction index out of range for m={f.m}: {xlist}")
    if any(v not in (0, 1) for v in c):
        raise ValueError(f"restriction values must be binary: {c}")
    exps = sequence(f)
    mask = np.ones(1 << f.m, dtype=bool)
    if xlist:
        bits = bit_matrix(f.m)[:, xlist]
        mask = np.all(bits == np.array(c, dtype=np.int64)[None, :], axis=1)
    exps = np.where(mask, exps, 0)
    return RestrictedSeq(f.q, exps, mask)


def restrict_unordered(f: GBF, xlist, c) -> RestrictedSeq:
    """`restrict` for any ordering of distinct indices (pairs stay aligned)."""
    pairs = sorted(zip((int(j) for j in xlist), (int(v) for v in c)))
    return restrict(f, [j for j, _ in pairs], [v for _, v in pairs])


def truncate(r: RestrictedSeq) -> Truncated:
    """Drop the leading and trailing zeros; interior zeros are kept."""
    start = r.first_nonzero
    if start is None:
        raise ValueError("cannot truncate a restriction with empty support")
    stop = r.last_nonzero + 1
    return Truncated(start, r.exponents[start:stop].copy(), r.support[start:stop].copy())


def monomials(m: int, r: int) -> list[Monomial]:
    """Monomials of degree <= r, ordered by degree then lexicographically."""
    out: list[Monomial] = []
    for deg in range(r + 1):
        out.extend(itertools.combinations(range(m), deg))
    return out


def rm_generator(q: int, r: int, m: int) -> np.ndarray:
    """Generator matrix of RM_q(r, m): one row per monomial of degree <= r."""
    if not 0 <= r <= m:
        raise ValueError(f"order r must satisfy 0 <= r <= m, got r={r}, m={m}")
    rows = [sequence(GBF(q, m, {mono: 1})) for mono in monomials(m, r)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), 1 << m)
