"""ZCCS construction from a quadratic form with a path/deleted/isolated split.

Vertices of the quadratic-form graph are split into a path ``X_P`` (edges of
weight q/2 between consecutive vertices), a deleted set ``X_J`` and an
isolated set ``X_S``.  Edges are allowed between ``X_P`` and ``X_J``
(a-weights), between ``X_J`` and ``X_S`` (e-weights) and inside ``X_J``
(b-weights).  Each code collects ``2**(k+1)`` row functions obtained by adding
(q/2)-multiples of deleted, isolated and path-end variables to the base
function; the set is the union of a direct family and a reversed, conjugated
family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .correlation import CodeSet, ZccsParams
from .exactring import CycVal
from .gbf import GBF, bit_matrix, reverse, sequence
from .quadgraph import GraphPartition, check_partition, quadratic_part

__all__ = [
    "SpecError",
    "ModulusError",
    "ConstructionSpec",
    "CodeIndex",
    "TauStructure",
    "spec_to_gbf",
    "tau_structure",
    "min_shift",
    "row_function",
    "build_code",
    "build_zccs",
    "closed_form_values",
    "closed_form_value",
    "direct_ccc",
    "theorem1_values",
    "theorem1_value",
    "lemma3_ccc",
]


class SpecError(ValueError):
    """A construction spec is structurally invalid."""


class ModulusError(SpecError):
    """The modulus is odd, so q/2 is not available."""


def _bits(n: int, width: int) -> tuple[int, ...]:
    return tuple((n >> i) & 1 for i in range(width))


def _matrix(rows, n_rows: int, n_cols: int, name: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in r) for r in rows)
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        shape = (len(rows), len(rows[0]) if rows else 0)
        raise SpecError(f"{name} must have shape ({n_rows}, {n_cols}), got {shape}")
    return rows


@dataclass(frozen=True)
class ConstructionSpec:
    """Graph data and linear part for one construction.

    ``a_weights[i][alpha]`` weighs ``x_{path[i]} x_{deleted[alpha]}``,
    ``e_weights[alpha][beta]`` weighs ``x_{deleted[alpha]} x_{isolated[beta]}``
    and ``b_weights[a1][a2]`` (a1 < a2 only; other entries must be 0) weighs
    ``x_{deleted[a1]} x_{deleted[a2]}``.  Omitted weight tables default to all
    zeros.
    """

    q: int
    m: int
    path: tuple
    deleted: tuple = ()
    isolated: tuple = ()
    gamma: int | None = None
    a_weights: tuple = None
    e_weights: tuple = None
    b_weights: tuple = None
    linear: tuple = None
    constant: int = 0

    def __post_init__(self):
        q, m = self.q, self.m
        if q < 2 or q % 2:
            raise ModulusError(f"q must be even and >= 2, got {q}")
        set_ = lambda name, v: object.__setattr__(self, name, v)  # noqa: E731
        set_("path", tuple(int(v) for v in self.path))
        set_("deleted", tuple(int(v) for v in self.deleted))
        set_("isolated", tuple(int(v) for v in self.isolated))
        if not self.path:
            raise SpecError("path must contain at least one vertex")
        for name in ("deleted", "isolated"):
            labels = getattr(self, name)
            if list(labels) != sorted(set(labels)):
                raise SpecError(f"{name} labels must be strictly increasing, got {list(labels)}")
        labels = sorted(self.path + self.deleted + self.isolated)
        if labels != list(range(m)):
            raise SpecError(f"path, deleted and isolated must partition 0..{m - 1}, got {labels}")
        if self.gamma is None:
            set_("gamma", self.path[-1])
        if self.gamma not in (self.path[0], self.path[-1]):
            raise SpecError(f"gamma={self.gamma} is not an end of the path {list(self.path)}")
        n, k, p = len(self.path), self.k, self.p
        zeros = lambda r, c: [[0] * c for _ in range(r)]  # noqa: E731
        set_("a_weights", _matrix(self.a_weights if self.a_weights is not None else zeros(n, k), n, k, "a_weights"))
        set_("e_weights", _matrix(self.e_weights if self.e_weights is not None else zeros(k, p), k, p, "e_weights"))
        set_("b_weights", _matrix(self.b_weights if self.b_weights is not None else zeros(k, k), k, k, "b_weights"))
        for a1 in range(k):
            for a2 in range(a1 + 1):
                if self.b_weights[a1][a2] % q:
                    raise SpecError(f"b_weights[{a1}][{a2}] must be 0 (only a1 < a2 is used)")
        lin = tuple(int(v) for v in (self.linear if self.linear is not None else [0] * m))
        if len(lin) != m:
            raise SpecError(f"linear must have {m} entries, got {len(lin)}")
        set_("linear", lin)
        set_("constant", int(self.constant))
        for name in ("a_weights", "e_weights", "b_weights"):
            for row in getattr(self, name):
                for v in row:
                    if not 0 <= v < q:
                        raise SpecError(f"{name} entry {v} outside Z_{q}")
        for v in self.linear + (self.constant,):
            if not 0 <= v < q:
                raise SpecError(f"coefficient {v} outside Z_{q}")
        check_partition(quadratic_part(spec_to_gbf(self)), self.partition, q)

    @property
    def k(self) -> int:
        return len(self.deleted)

    @property
    def p(self) -> int:
        return len(self.isolated)

    @property
    def half(self) -> int:
        return self.q // 2

    @property
    def partition(self) -> GraphPartition:
        return GraphPartition(self.path, self.deleted, self.isolated, self.gamma)

    @property
    def Gamma(self) -> tuple[int, ...]:
        """Linear coefficients attached to the isolated variables."""
        return tuple(self.linear[i] for i in self.isolated)

    @property
    def canonical_labels(self) -> bool:
        return self.isolated == tuple(range(self.m - self.p, self.m))

    @property
    def n_half(self) -> int:
        """Codes per family, 2**(k+p)."""
        return 1 << (self.k + self.p)

    @property
    def rows(self) -> int:
        return 1 << (self.k + 1)

    def with_gamma(self, gamma: int) -> "ConstructionSpec":
        return ConstructionSpec(**{**self.__dict__, "gamma": gamma})


def spec_to_gbf(s: ConstructionSpec) -> GBF:
    """Base function f = Q + sum g_i x_i + g'."""
    terms: dict[tuple, int] = {}

    def add(i, j, w):
        key = (min(i, j), max(i, j))
        terms[key] = terms.get(key, 0) + w

    for a, b in zip(s.path, s.path[1:]):
        add(a, b, s.half)
    for i, l in enumerate(s.path):
        for alpha, j in enumerate(s.deleted):
            add(l, j, s.a_weights[i][alpha])
    for alpha, j in enumerate(s.deleted):
        for beta, i in enumerate(s.isolated):
            add(j, i, s.e_weights[alpha][beta])
    for a1, a2 in itertools.combinations(range(s.k), 2):
        add(s.deleted[a1], s.deleted[a2], s.b_weights[a1][a2])
    for j, g in enumerate(s.linear):
        terms[(j,)] = terms.get((j,), 0) + g
    terms[()] = s.constant
    return GBF(s.q, s.m, terms)


@dataclass(frozen=True)
class CodeIndex:
    """Position of one code: t = sum b_a 2^a + sum d'_b 2^(k+b)."""

    t: int
    b: tuple
    dprime: tuple
    barred: bool = False
    conjugated: bool = False

    def __post_init__(self):
        k = len(self.b)
        t = sum(v << a for a, v in enumerate(self.b)) + sum(v << (k + a) for a, v in enumerate(self.dprime))
        if t != self.t or any(v not in (0, 1) for v in self.b + self.dprime):
            raise ValueError(f"index t={self.t} inconsistent with b={self.b}, d'={self.dprime}")

    @classmethod
    def from_t(cls, t: int, k: int, p: int, barred: bool = False, conjugated: bool | None = None) -> "CodeIndex":
        if not 0 <= t < 1 << (k + p):
            raise ValueError(f"t={t} outside [0, {1 << (k + p)})")
        bits = _bits(t, k + p)
        return cls(t, bits[:k], bits[k:], barred, barred if conjugated is None else conjugated)


def row_function(s: ConstructionSpec, idx: CodeIndex, nu: int) -> GBF:
    """Row nu = sum d_a 2^a + d 2^k of the code selected by ``idx``."""
    k = s.k
    if len(idx.b) != k or len(idx.dprime) != s.p:
        raise ValueError("code index does not match k and p of the construction")
    if not 0 <= nu < s.rows:
        raise ValueError(f"row {nu} outside [0, {s.rows})")
    d_vec = _bits(nu, k)
    d = (nu >> k) & 1
    q, m = s.q, s.m
    f = spec_to_gbf(s)
    if not idx.barred:
        lin = GBF(q, m)
        for alpha, j in enumerate(s.deleted):
            lin = lin + GBF.var(q, m, j, d_vec[alpha] + idx.b[alpha])
        for beta, i in enumerate(s.isolated):
            lin = lin + GBF.var(q, m, i, idx.dprime[beta])
        lin = lin + GBF.var(q, m, s.gamma, d)
        return f + s.half * lin
    lin = GBF(q, m)
    for alpha, j in enumerate(s.deleted):
        lin = lin + (d_vec[alpha] + idx.b[alpha]) * GBF.complement(q, m, j)
    for beta, i in enumerate(s.isolated):
        lin = lin + idx.dprime[beta] * GBF.complement(q, m, i)
    lin = lin + GBF.var(q, m, s.gamma, 1 - d)
    return reverse(f) + s.half * lin


def build_code(s: ConstructionSpec, idx: CodeIndex) -> np.ndarray:
    """``(2**(k+1), 2**m)`` exponent matrix of one code."""
    rows = np.array([sequence(row_function(s, idx, nu)) for nu in range(s.rows)], dtype=np.int64)
    if idx.conjugated:
        rows = (-rows) % s.q
    return rows


@dataclass(frozen=True)
class TauStructure:
    """Nonzero shifts T(c' - c'') and the ordered pairs producing each."""

    isolated: tuple
    shifts: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.shifts)


def tau_structure(isolated_labels) -> TauStructure:
    labels = tuple(int(v) for v in isolated_labels)
    if len(set(labels)) != len(labels):
        raise ValueError(f"isolated labels must be distinct: {labels}")
    p = len(labels)
    words = list(itertools.product((0, 1), repeat=p))
    shifts: dict[int, list] = {}
    for c1 in words:
        for c2 in words:
            if c1 == c2:
                continue
            tau = sum((a - b) << lab for a, b, lab in zip(c1, c2, labels))
            shifts.setdefault(tau, []).append((c1, c2))
    return TauStructure(labels, dict(sorted(shifts.items())))


def min_shift(ts: TauStructure) -> int:
    if not ts.shifts:
        raise ValueError("no isolated vertices, hence no shifts")
    return min(abs(t) for t in ts.shifts)


def build_zccs(s: ConstructionSpec) -> tuple[CodeSet, ZccsParams]:
    """Direct family C_t followed by the reversed conjugated family C_{2^(k+p)+t}.

    With isolated labels other than the top p, the reported Z is the smallest
    shift from `tau_structure` and ``params.canonical`` is False; such a width
    is a prediction to be checked, not a guarantee.
    """
    k, p, m = s.k, s.p, s.m
    codes = [build_code(s, CodeIndex.from_t(t, k, p)) for t in range(s.n_half)]
    codes += [build_code(s, CodeIndex.from_t(t, k, p, barred=True)) for t in range(s.n_half)]
    L = 1 << m
    if p == 0:
        Z = L
    elif s.canonical_labels:
        Z = 1 << (m - p)
    else:
        Z = min_shift(tau_structure(s.isolated))
    params = ZccsParams(K=2 * s.n_half, M=s.rows, L=L, Z=Z, canonical=s.canonical_labels)
    return CodeSet(s.q, np.stack(codes)), params


def closed_form_values(s: ConstructionSpec, i1: CodeIndex, i2: CodeIndex) -> dict[int, CycVal]:
    """Closed-form ``C(psi(S_t), psi(S_t'))(tau)`` at every tau where it may be nonzero.

    Shifts absent from the returned mapping have value zero.
    """
    if i1.barred or i2.barred:
        raise ValueError("closed form is available only for the direct family")
    q, m, k, p = s.q, s.m, s.k, s.p
    h = s.half
    out: dict[int, CycVal] = {}
    if i1.b == i2.b and i1.dprime == i2.dprime:
        out[0] = CycVal.from_int(q, 1 << (m + k + 1))
    Gamma = s.Gamma
    bb = [x ^ y for x, y in zip(i1.b, i2.b)]
    cs = list(itertools.product((0, 1), repeat=k))
    scale = 1 << (m - p + 1)
    for tau, pairs in tau_structure(s.isolated).shifts.items():
        acc = [0] * q
        for c1, c2 in pairs:
            sign = sum(a * b for a, b in zip(i1.dprime, c1)) + sum(a * b for a, b in zip(i2.dprime, c2))
            gam = sum((a - b) * g for a, b, g in zip(c1, c2, Gamma))
            base = h * sign + gam
            for c in cs:
                g1 = sum(s.e_weights[a][b] * c[a] * c1[b] for a in range(k) for b in range(p))
                g2 = sum(s.e_weights[a][b] * c[a] * c2[b] for a in range(k) for b in range(p))
                inner = h * sum(x * y for x, y in zip(bb, c))
                acc[(base + g1 - g2 + inner) % q] += scale
        out[tau] = CycVal(q, acc)
    return out


def closed_form_value(s: ConstructionSpec, i1: CodeIndex, i2: CodeIndex, tau: int) -> CycVal:
    return closed_form_values(s, i1, i2).get(tau, CycVal.zero(s.q))


def direct_ccc(s: ConstructionSpec) -> CodeSet:
    """Complete complementary code for a spec without isolated vertices.

    Evaluated straight from bit vectors, independently of `build_code`.
    """
    if s.p:
        raise ValueError(f"complete complementary construction needs p = 0, got p={s.p}")
    q, m, k, h = s.q, s.m, s.k, s.half
    bits = bit_matrix(m)
    base = sequence(spec_to_gbf(s))
    rev = base[::-1]
    xj = bits[:, list(s.deleted)] if k else np.zeros((1 << m, 0), dtype=np.int64)
    xg = bits[:, s.gamma]
    direct, dual = [], []
    for t in range(1 << k):
        tv = np.array(_bits(t, k), dtype=np.int64)
        rows, rows_bar = [], []
        for d in (0, 1):
            for dn in range(1 << k):
                dv = np.array(_bits(dn, k), dtype=np.int64)
                rows.append((base + h * ((xj @ (dv + tv)) + d * xg)) % q)
                rows_bar.append(-(rev + h * (((1 - xj) @ (dv + tv)) + (1 - d) * xg)) % q)
        direct.append(rows)
        dual.append(rows_bar)
    return CodeSet(q, np.array(direct + dual, dtype=np.int64))


# Operation names fixed by the external interface.
theorem1_values = closed_form_values
theorem1_value = closed_form_value
lemma3_ccc = direct_ccc
