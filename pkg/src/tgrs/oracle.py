"""Brute-force ground truth: minimum distances, duals and Singleton defects.

Minimum distance enumerates one message per scalar class (first nonzero
coordinate equal to one) and evaluates codewords in numpy batches.  Prime
fields use plain matrix products mod p; extension fields use full addition
and multiplication tables, so they are limited to ``TABLE_FIELD_LIMIT``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

import numpy as np

from .code import TgrsSpec, generator_matrix
from .errors import BudgetExceededError
from .field import GF
from .matrix import MatGF, determinant_rows

DEFAULT_BUDGET = 10**7
TABLE_FIELD_LIMIT = 1024
BATCH = 1 << 15


def enumeration_budget() -> int:
    return int(os.environ.get("TGRS_ENUM_BUDGET", DEFAULT_BUDGET))


def _field_tables(ctx: GF) -> tuple[np.ndarray, np.ndarray]:
    q = ctx.order
    add = np.empty((q, q), dtype=np.int32)
    mul = np.empty((q, q), dtype=np.int32)
    for a in range(q):
        for b in range(a, q):
            add[a, b] = add[b, a] = ctx.add(a, b)
            mul[a, b] = mul[b, a] = ctx.mul(a, b)
    return add, mul


_TABLES: dict = {}


def _tables(ctx: GF) -> tuple[np.ndarray, np.ndarray]:
    if ctx.key not in _TABLES:
        _TABLES[ctx.key] = _field_tables(ctx)
    return _TABLES[ctx.key]


def _mixed_radix(start: int, stop: int, q: int, width: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), width), dtype=np.int64)
    for j in range(width - 1, -1, -1):
        out[:, j] = idx % q
        idx //= q
    return out


def min_distance_bruteforce(g: MatGF, budget: int | None = None) -> int:
    """Minimum Hamming weight over nonzero messages ``m @ g``.

    A rank-deficient ``g`` yields 0 (a nonzero message encodes to zero).
    """
    ctx = g.ctx
    k, n = g.shape
    q = ctx.order
    budget = enumeration_budget() if budget is None else budget
    if k == 0:
        raise ValueError("a zero-dimensional code has no minimum distance")
    classes = (q**k - 1) // (q - 1)
    if classes > budget:
        raise BudgetExceededError(f"{classes} message classes exceed the budget {budget}")
    prime = ctx.m == 1
    if not prime:
        if q > TABLE_FIELD_LIMIT:
            raise BudgetExceededError(f"brute force over GF({q}) needs tables larger than allowed")
        add, mul = _tables(ctx)
    rows = np.array(g.rows, dtype=np.int64)
    best = n
    for lead in range(k):
        tail = rows[lead + 1:]
        width = k - lead - 1
        total = q**width
        for start in range(0, total, BATCH):
            stop = min(total, start + BATCH)
            msgs = _mixed_radix(start, stop, q, width)
            if prime:
                words = (rows[lead] + msgs @ tail) % q if width else rows[lead][None, :] % q
            else:
                words = np.broadcast_to(rows[lead], (stop - start, n)).astype(np.int32)
                for j in range(width):
                    words = add[words, mul[msgs[:, j][:, None], tail[j][None, :]]]
            w = int((words != 0).sum(axis=1).min())
            best = min(best, w)
            if best == 0:
                return 0
    return best


def minors_mds_check(g: MatGF) -> bool:
    """All ``k x k`` minors nonzero, i.e. ``d = n - k + 1``."""
    k, n = g.shape
    for cols in itertools.combinations(range(n), k):
        sub = [[r[j] for j in cols] for r in g.rows]
        if determinant_rows(g.ctx, sub) == 0:
            return False
    return True


def dual_bruteforce(g: MatGF) -> MatGF:
    """Generator matrix of the dual code: a kernel basis of ``g`` as rows."""
    return g.nullspace()


@dataclass(frozen=True)
class DefectPair:
    s_c: int
    s_dual: int
    d_c: int
    d_dual: int


def singleton_defects(spec: TgrsSpec, budget: int | None = None) -> DefectPair:
    g = generator_matrix(spec)
    n, k = spec.n, spec.k
    d_c = min_distance_bruteforce(g, budget)
    h = dual_bruteforce(g)
    dual_k = len(h.rows)
    d_dual = min_distance_bruteforce(h, budget)
    return DefectPair(n - k + 1 - d_c, n - dual_k + 1 - d_dual, d_c, d_dual)
