"""Counting, sampling and exhaustive listing of construction specs.

Specs are generated with the isolated labels fixed to the top p labels and
path weights a' drawn from Z_q without q/2, which keeps distinct specs from
collapsing onto the same code set in the obvious ways.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator

from .construct import ConstructionSpec, ModulusError

__all__ = ["EnumParams", "count_distinct", "sample_spec", "enumerate_specs"]


@dataclass(frozen=True)
class EnumParams:
    m: int
    k: int
    p: int
    q: int

    def __post_init__(self):
        if self.q < 2 or self.q % 2:
            raise ModulusError(f"q must be even and >= 2, got {self.q}")
        if self.k < 0 or self.p < 0:
            raise ValueError(f"k and p must be >= 0, got k={self.k}, p={self.p}")
        if self.path_len < 1:
            raise ValueError(f"need m - k - p >= 1, got m={self.m}, k={self.k}, p={self.p}")

    @property
    def path_len(self) -> int:
        return self.m - self.k - self.p


def count_distinct(e: EnumParams) -> int:
    """(m-p)!/(2 k!) (q-1)^(k(m-k-p)) q^(kp + k(k-1)/2 + m + 1).

    A one-vertex path has a single orientation, so the halving is skipped when
    m - k - p = 1.
    """
    m, k, p, q = e.m, e.k, e.p, e.q
    orient = 2 if e.path_len >= 2 else 1
    head = math.factorial(m - p) // (orient * math.factorial(k))
    return head * (q - 1) ** (k * e.path_len) * q ** (k * p + k * (k - 1) // 2 + m + 1)


def _a_alphabet(q: int) -> list[int]:
    return [v for v in range(q) if v != q // 2]


def _make(e: EnumParams, deleted, path, a, ew, bw, lin, const, gamma=None) -> ConstructionSpec:
    k, p, n = e.k, e.p, e.path_len
    a_rows = [list(a[i * k : (i + 1) * k]) for i in range(n)]
    e_rows = [list(ew[a_ * p : (a_ + 1) * p]) for a_ in range(k)]
    b_rows = [[0] * k for _ in range(k)]
    for (a1, a2), v in zip(itertools.combinations(range(k), 2), bw):
        b_rows[a1][a2] = v
    return ConstructionSpec(
        q=e.q,
        m=e.m,
        path=tuple(path),
        deleted=tuple(deleted),
        isolated=tuple(range(e.m - p, e.m)),
        gamma=path[-1] if gamma is None else gamma,
        a_weights=a_rows,
        e_weights=e_rows,
        b_weights=b_rows,
        linear=list(lin),
        constant=const,
    )


def sample_spec(e: EnumParams, seed: int) -> ConstructionSpec:
    rng = random.Random(seed)
    m, k, p, q = e.m, e.k, e.p, e.q
    low = list(range(m - p))
    deleted = sorted(rng.sample(low, k))
    path = [v for v in low if v not in deleted]
    rng.shuffle(path)
    alph = _a_alphabet(q)
    a = [rng.choice(alph) for _ in range(e.path_len * k)]
    ew = [rng.randrange(q) for _ in range(k * p)]
    bw = [rng.randrange(q) for _ in range(k * (k - 1) // 2)]
    lin = [rng.randrange(q) for _ in range(m)]
    const = rng.randrange(q)
    gamma = rng.choice((path[0], path[-1]))
    return _make(e, deleted, path, a, ew, bw, lin, const, gamma)


def enumerate_specs(e: EnumParams, limit: int | None = None) -> Iterator[ConstructionSpec]:
    """Canonical-order walk: deleted set, path order, a', e', b', linear, constant.

    Only the lexicographically smaller orientation of each path is emitted and
    gamma is always the last path vertex.
    """
    m, k, p, q = e.m, e.k, e.p, e.q
    alph = _a_alphabet(q)
    full = range(q)
    emitted = 0
    for deleted in itertools.combinations(range(m - p), k):
        rest = [v for v in range(m - p) if v not in deleted]
        for path in itertools.permutations(rest):
            if path > path[::-1]:
                continue
            for a in itertools.product(alph, repeat=len(path) * k):
                for ew in itertools.product(full, repeat=k * p):
                    for bw in itertools.product(full, repeat=k * (k - 1) // 2):
                        for lin in itertools.product(full, repeat=m):
                            for const in full:
                                if limit is not None and emitted >= limit:
                                    return
                                yield _make(e, deleted, path, a, ew, bw, lin, const)
                                emitted += 1
