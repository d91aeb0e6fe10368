"""Univariate polynomials over a :class:`~tgrs.field.GF`.

Coefficients are stored in ascending-degree order as packed field ints with no
trailing zeros; the zero polynomial has no coefficients and degree ``None``.
The coding-theory formulas index products of linear factors from the leading
term down (``prod (x - a_i) = sum c_j x^{n-j}``); :meth:`Poly.descending`
provides that view.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceededError, FieldMismatchError, TgrsError
from .field import GF, FieldElem

ROOT_SCAN_LIMIT = 10**6


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: GF, coeffs: Iterable[int | FieldElem] = ()):
        self.ctx = ctx
        self.coeffs = _trim([ctx.coerce(c) for c in coeffs])

    @classmethod
    def _raw(cls, ctx: GF, coeffs: list[int]) -> Poly:
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = _trim(coeffs)
        return obj

    @classmethod
    def monomial(cls, ctx: GF, degree: int, coeff: int = 1) -> Poly:
        return cls._raw(ctx, [0] * degree + [ctx.coerce(coeff)])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def descending(self) -> list[int]:
        """Coefficients from the leading term down: ``c_0, c_1, ..., c_deg``."""
        return list(reversed(self.coeffs))

    def __getitem__(self, i: int) -> int:
        """Coefficient of ``x**i`` (zero beyond the degree)."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: Poly) -> None:
        if other.ctx != self.ctx:
            raise FieldMismatchError(f"polynomials over {self.ctx} and {other.ctx}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        add = self.ctx.add
        return Poly._raw(self.ctx, [add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> Poly:
        return Poly._raw(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.ctx)
        f = self.ctx
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly._raw(f, out)

    def scale(self, c: int) -> Poly:
        return Poly._raw(self.ctx, [self.ctx.mul(c, x) for x in self.coeffs])

    def divmod(self, den: Poly) -> tuple[Poly, Poly]:
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.ctx
        rem = list(self.coeffs)
        dd = den.degree
        lead_inv = f.inv(den.coeffs[-1])
        if len(rem) <= dd:
            return Poly(f), Poly._raw(f, rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = f.mul(rem[i], lead_inv)
            if c:
                quot[i - dd] = c
                for j, d in enumerate(den.coeffs):
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, d))
        return Poly._raw(f, quot), Poly._raw(f, rem[:dd])

    def __call__(self, x: int | FieldElem) -> FieldElem:
        return self.ctx(self.eval_int(self.ctx.coerce(x)))

    def eval_int(self, x: int) -> int:
        f = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = repr(self.ctx(c))
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_from_roots(ctx: GF, roots: Sequence[int | FieldElem]) -> Poly:
    """Monic ``prod (x - r)`` over distinct roots; the empty product is 1."""
    rs = [ctx.coerce(r) for r in roots]
    if len(set(rs)) != len(rs):
        raise TgrsError("roots must be pairwise distinct")
    return Poly._raw(ctx, list(_product_coeffs(ctx, rs)))


def _product_coeffs(ctx: GF, roots: Sequence[int]) -> list[int]:
    # ascending coefficients of prod (x - r); no distinctness check
    out = [1]
    for r in roots:
        nr = ctx.neg(r)
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i + 1] = ctx.add(nxt[i + 1], c)
            nxt[i] = ctx.add(nxt[i], ctx.mul(nr, c))
        out = nxt
    return out


def descending_product_coeffs(ctx: GF, roots: Sequence[int]) -> list[int]:
    """``c_0 = 1, c_1, ..., c_n`` with ``prod (x - r) = sum c_j x^{n-j}``."""
    return _product_coeffs(ctx, roots)[::-1]


def poly_divide_exact(num: Poly, den: Poly) -> Poly:
    q, r = num.divmod(den)
    if not r.is_zero():
        raise TgrsError(f"{den} does not divide {num}")
    return q


def poly_derivative(p: Poly) -> Poly:
    f = p.ctx
    return Poly._raw(f, [f.mul(f.from_int(i), c) for i, c in enumerate(p.coeffs)][1:])


def poly_eval(p: Poly, x: int | FieldElem) -> FieldElem:
    return p(x)


def root_multiplicities(p: Poly, candidates: Iterable[int] | None = None) -> list[tuple[int, int]]:
    """``(root, multiplicity)`` pairs in canonical order, by exhaustive scan.

    ``candidates`` restricts the scan (e.g. to a subfield); by default every
    element of the field is tried.
    """
    if p.is_zero():
        raise TgrsError("the zero polynomial vanishes everywhere")
    f = p.ctx
    if candidates is None:
        if f.order > ROOT_SCAN_LIMIT:
            raise BudgetExceededError(f"root scan over {f.order} elements exceeds the limit")
        candidates = f.elements()
    out = []
    for x in candidates:
        if p.eval_int(x) != 0:
            continue
        mult, cur = 0, p
        lin = Poly._raw(f, [f.neg(x), 1])
        while True:
            q, r = cur.divmod(lin)
            if not r.is_zero():
                break
            mult, cur = mult + 1, q
        out.append((x, mult))
    out.sort(key=lambda t: f.sort_key(t[0]))
    return out


def roots_in_field(p: Poly, candidates: Iterable[int] | None = None) -> list[FieldElem]:
    """Distinct roots of ``p`` lying in its field, canonical order."""
    return [p.ctx(r) for r, _ in root_multiplicities(p, candidates)]


@dataclass(frozen=True)
class ESeq:
    """Entries of the inverse of the unit lower-triangular Toeplitz matrix built from ``c``."""

    ctx: GF
    c: tuple[int, ...]
    e: tuple[int, ...]

    def toeplitz(self, values: Sequence[int] | None = None) -> list[list[int]]:
        v = self.c if values is None else values
        t = len(self.e)
        return [[v[i - j] if i >= j else 0 for j in range(t)] for i in range(t)]

    def inverse_matrix(self) -> list[list[int]]:
        return self.toeplitz(self.e)


def _triangular_solve(ctx: GF, c: Sequence[int], length: int) -> list[int]:
    # e_0 = 1, e_i = -sum_{j<i} e_j c_{i-j}
    e = [1]
    for i in range(1, length):
        acc = 0
        for j in range(i):
            if i - j < len(c):
                acc = ctx.add(acc, ctx.mul(e[j], c[i - j]))
        e.append(ctx.neg(acc))
    return e


def e_sequence(ctx: GF, c: Sequence[int | FieldElem]) -> ESeq:
    """Recursion ``e_0 = 1``, ``e_i = -sum_{j<i} e_j c_{i-j}`` for ``i <= len(c) - 1``."""
    cs = tuple(ctx.coerce(x) for x in c)
    if not cs or cs[0] != 1:
        raise TgrsError("leading coefficient c_0 must equal 1")
    return ESeq(ctx, cs, tuple(_triangular_solve(ctx, cs, len(cs))))


@dataclass(frozen=True)
class LambdaSeq:
    """Solution of ``sum_j sigma_j Lambda_{i-j} = [i == 0]`` for ``0 <= i <= n``."""

    ctx: GF
    sigma: tuple[int, ...]
    values: tuple[int, ...]

    def residual(self) -> list[int]:
        f = self.ctx
        out = []
        for i in range(len(self.values)):
            acc = 0
            for j in range(i + 1):
                if j < len(self.sigma):
                    acc = f.add(acc, f.mul(self.sigma[j], self.values[i - j]))
            out.append(acc)
        return out


def lambda_sequence(ctx: GF, sigma: Sequence[int | FieldElem]) -> LambdaSeq:
    """Forward substitution on the lower-triangular Toeplitz system in ``sigma``."""
    ss = tuple(ctx.coerce(x) for x in sigma)
    if not ss or ss[0] != 1:
        raise TgrsError("leading coefficient sigma_0 must equal 1")
    return LambdaSeq(ctx, ss, tuple(_triangular_solve(ctx, ss, len(ss))))
