"""Twisted generalized Reed-Solomon codes with twists at the top of the message.

The message ``f_0, ..., f_{k-1}`` is mapped to the polynomial

    sum_{i<k} f_i x^i + sum_{i<ell} eta_{i+1} f_{k-ell+i} x^{k+i}

which is then evaluated at the points ``alpha`` and scaled columnwise by ``v``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Sequence

from .errors import HypothesisError, TgrsError
from .field import GF, FieldElem, format_field, parse_field
from .matrix import MatGF
from .poly import Poly, descending_product_coeffs


@dataclass(frozen=True)
class TgrsSpec:
    """Parameters of one code.  Field values are packed ints of ``ctx``.

    Construction checks the structural requirements (distinct points, nonzero
    column multipliers, ``1 <= ell <= k``, ``k < n <= q``).  The
    tighter ``ell < min(k, n - k)`` regime is enforced by :func:`validate_spec`.
    """

    ctx: GF
    k: int
    ell: int
    alpha: tuple[int, ...]
    v: tuple[int, ...]
    eta: tuple[int, ...]

    def __post_init__(self):
        f, n, k, ell = self.ctx, len(self.alpha), self.k, self.ell
        if len(self.v) != n:
            raise TgrsError(f"v has length {len(self.v)}, expected n = {n}")
        if len(self.eta) != ell:
            raise TgrsError(f"eta has length {len(self.eta)}, expected ell = {ell}")
        if len(set(self.alpha)) != n:
            raise TgrsError("evaluation points alpha must be pairwise distinct")
        if any(x == 0 for x in self.v):
            raise TgrsError("column multipliers v must be nonzero")
        if not 0 < k < n:
            raise TgrsError(f"need 0 < k < n, got k = {k}, n = {n}")
        if n > f.order:
            raise TgrsError(f"length n = {n} exceeds the field size {f.order}")
        if not 1 <= ell <= k:
            raise TgrsError(f"need 1 <= ell <= k = {k}, got ell = {ell}")
        for x in (*self.alpha, *self.v, *self.eta):
            if not 0 <= x < f.order:
                raise TgrsError(f"value {x} is not a packed element of {f}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def q(self) -> int:
        return self.ctx.order

    def in_strict_regime(self) -> bool:
        return self.ell < min(self.k, self.n - self.k)

    def replace(self, **changes) -> TgrsSpec:
        d = dict(ctx=self.ctx, k=self.k, ell=self.ell, alpha=self.alpha, v=self.v, eta=self.eta)
        d.update(changes)
        return TgrsSpec(**{key: (tuple(val) if key in ("alpha", "v", "eta") else val) for key, val in d.items()})

    # serialization ------------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": format_field(self.ctx),
            "n": self.n,
            "k": self.k,
            "ell": self.ell,
            "alpha": list(self.alpha),
            "v": list(self.v),
            "eta": list(self.eta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any], strict: bool = False) -> TgrsSpec:
        ctx = parse_field(str(d["field"]))
        alpha = d["alpha"]
        spec = validate_spec(
            ctx,
            k=int(d["k"]),
            ell=int(d["ell"]),
            alpha=alpha,
            v=d.get("v"),
            eta=d["eta"],
            strict=strict,
        )
        if "n" in d and int(d["n"]) != spec.n:
            raise TgrsError(f"n = {d['n']} disagrees with len(alpha) = {spec.n}")
        return spec

    @classmethod
    def from_json(cls, text: str, strict: bool = False) -> TgrsSpec:
        return cls.from_dict(json.loads(text), strict=strict)


def validate_spec(
    ctx: GF,
    k: int,
    ell: int,
    alpha: Sequence[int | FieldElem | Sequence[int]],
    eta: Sequence[int | FieldElem | Sequence[int]],
    v: Sequence[int | FieldElem | Sequence[int]] | None = None,
    strict: bool = True,
) -> TgrsSpec:
    """Build a checked :class:`TgrsSpec`; ``v`` defaults to all ones.

    With ``strict`` (the default) the regime ``ell < min(k, n - k)`` is required.
    """
    a = tuple(ctx.coerce(x) for x in alpha)
    vv = tuple(ctx.coerce(x) for x in v) if v is not None else (1,) * len(a)
    ee = tuple(ctx.coerce(x) for x in eta)
    spec = TgrsSpec(ctx, int(k), int(ell), a, vv, ee)
    if strict and not spec.in_strict_regime():
        raise TgrsError(
            f"ell = {ell} violates ell < min(k, n-k) = {min(spec.k, spec.n - spec.k)}"
        )
    return spec


@dataclass(frozen=True)
class Codeword:
    ctx: GF
    values: tuple[int, ...]

    def elements(self) -> list[FieldElem]:
        return [self.ctx(x) for x in self.values]

    def weight(self) -> int:
        return sum(1 for x in self.values if x)


def message_polynomial(spec: TgrsSpec, message: Sequence[int | FieldElem]) -> Poly:
    f, k, ell = spec.ctx, spec.k, spec.ell
    if len(message) != k:
        raise TgrsError(f"message has length {len(message)}, expected k = {k}")
    coeffs = [f.coerce(x) for x in message] + [0] * ell
    for i in range(ell):
        coeffs[k + i] = f.mul(spec.eta[i], coeffs[k - ell + i])
    return Poly(f, coeffs)


def encode(spec: TgrsSpec, message: Sequence[int | FieldElem]) -> Codeword:
    poly = message_polynomial(spec, message)
    f = spec.ctx
    return Codeword(f, tuple(f.mul(v, poly.eval_int(a)) for a, v in zip(spec.alpha, spec.v)))


def _powers(f: GF, a: int, count: int) -> list[int]:
    out = [1]
    for _ in range(count - 1):
        out.append(f.mul(out[-1], a))
    return out


def generator_matrix(spec: TgrsSpec) -> MatGF:
    """Rows ``v_j a_j^i`` for ``i < k - ell``, then ``v_j (a_j^{k-ell+t} + eta_{t+1} a_j^{k+t})``."""
    f, k, ell = spec.ctx, spec.k, spec.ell
    cols = []
    for a, v in zip(spec.alpha, spec.v):
        pw = _powers(f, a, k + ell)
        col = [f.mul(v, pw[i]) for i in range(k - ell)]
        for t in range(ell):
            col.append(f.mul(v, f.add(pw[k - ell + t], f.mul(spec.eta[t], pw[k + t]))))
        cols.append(col)
    return MatGF._raw(f, [[c[i] for c in cols] for i in range(k)], spec.n)


def u_weights(ctx: GF, alpha: Sequence[int | FieldElem]) -> list[int]:
    """``u_i = prod_{j != i} (a_i - a_j)^{-1}``."""
    a = [ctx.coerce(x) for x in alpha]
    if len(set(a)) != len(a):
        raise TgrsError("evaluation points must be distinct")
    out = []
    for i, ai in enumerate(a):
        prod = 1
        for j, aj in enumerate(a):
            if j != i:
                prod = ctx.mul(prod, ctx.sub(ai, aj))
        out.append(ctx.inv(prod))
    return out


def sigma_coeffs(ctx: GF, alpha: Sequence[int]) -> list[int]:
    """``sigma_0 = 1, ..., sigma_n`` with ``prod (x - a_i) = sum sigma_j x^{n-j}``."""
    return descending_product_coeffs(ctx, list(alpha))


def parity_check_matrix(spec: TgrsSpec) -> MatGF:
    """Explicit ``(n-k) x n`` parity-check matrix; needs every ``eta_j != 0``.

    Row ``i < n-k-ell`` is ``(u_j/v_j) a_j^i``; row ``n-k-ell+t`` is
    ``(u_j/v_j) a_j^{n-k-ell} (sum_{i<=t} s_{t-i} a_j^i - eta_{ell-t} sum_{i<=t+ell} s_{t+ell-i} a_j^i)``.
    """
    f, n, k, ell = spec.ctx, spec.n, spec.k, spec.ell
    if any(e == 0 for e in spec.eta):
        raise HypothesisError("explicit parity-check matrix requires all eta_j != 0")
    if ell > n - k:
        raise HypothesisError(f"explicit parity-check matrix requires ell <= n - k, got ell = {ell}")
    u = u_weights(f, spec.alpha)
    sigma = sigma_coeffs(f, spec.alpha)
    r = n - k - ell
    cols = []
    for a, v, uj in zip(spec.alpha, spec.v, u):
        w = f.div(uj, v)
        pw = _powers(f, a, max(r, 1) + 2 * ell)
        col = [f.mul(w, pw[i]) for i in range(r)]
        base = f.mul(w, f.pow(a, r))
        for t in range(ell):
            first = 0
            for i in range(t + 1):
                first = f.add(first, f.mul(sigma[t - i], pw[i]))
            second = 0
            for i in range(t + ell + 1):
                second = f.add(second, f.mul(sigma[t + ell - i], pw[i]))
            col.append(f.mul(base, f.sub(first, f.mul(spec.eta[ell - 1 - t], second))))
        cols.append(col)
    return MatGF._raw(f, [[c[i] for c in cols] for i in range(n - k)], n)


def matrix_to_json(m: MatGF) -> str:
    return json.dumps({"field": format_field(m.ctx), "rows": m.tolist()})
