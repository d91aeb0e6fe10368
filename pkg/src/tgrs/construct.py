"""Explicit self-dual codes from ``x^ell - a``, and exhaustive twist searches."""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .classify import FastOmega, OmegaSystem, is_self_dual, gram_is_zero
from .code import TgrsSpec, validate_spec
from .errors import HypothesisError, TgrsError
from .field import GF, field_of_order, format_field, make_field
from .poly import Poly, poly_derivative, poly_divide_exact, root_multiplicities


def eta_chain(ctx: GF, ell: int, a: int, free: Sequence[int]) -> tuple[int, ...]:
    """Twist coefficients with ``1/eta_i + 1/eta_{ell+1-i} = a`` for every pair.

    ``free`` gives ``eta_1, eta_2, ...`` for the first half.  For odd ``ell``
    the middle coefficient pairs with itself and is forced to ``2/a``; it may
    be omitted, and if supplied must equal ``2/a``.
    """
    if ctx.p == 2:
        raise TgrsError("the self-dual construction needs odd characteristic")
    a = ctx.coerce(a)
    if a == 0:
        raise TgrsError("a must be nonzero")
    half = ell // 2
    free = [ctx.coerce(x) for x in free]
    middle = ctx.div(2, a) if ell % 2 else None
    if ell % 2 and len(free) == half + 1:
        if free[-1] != middle:
            raise TgrsError(f"odd ell forces the middle coefficient to 2/a = {middle}, got {free[-1]}")
        free = free[:half]
    if len(free) != half:
        raise TgrsError(f"expected {half} free coefficients for ell = {ell}, got {len(free)}")
    a_inv = ctx.inv(a)
    eta = [0] * ell
    for i, x in enumerate(free):
        if x == 0 or x == a_inv:
            raise TgrsError(f"eta_{i + 1} must avoid 0 and 1/a = {a_inv}")
        eta[i] = x
        eta[ell - 1 - i] = ctx.inv(ctx.sub(a, ctx.inv(x)))
    if middle is not None:
        eta[half] = middle
    return tuple(eta)


def splitting_degree(ctx: GF, ell: int, a: int) -> int:
    """Least ``s`` with ``x^ell - a`` splitting over GF(q^s), for ``gcd(q, ell) = 1``.

    The roots are ``b * zeta`` with ``zeta`` an ell-th root of unity, so this is
    the least ``s`` with ``ell | q^s - 1`` and ``a^((q^s - 1)/ell) = 1``.
    """
    q = ctx.order
    for s in range(1, ell + 1):
        qs = q**s - 1
        if qs % ell == 0 and ctx.pow(a, qs // ell) == 1:
            return s
    raise AssertionError("x^ell - a must split within degree ell")  # unreachable


@dataclass
class SelfDualRecipe:
    base: GF
    ell: int
    a: int
    s: int
    free_etas: tuple[int, ...]
    eta: tuple[int, ...]  # over the base field
    m_poly: Poly  # over the base field
    spec: TgrsSpec  # over GF(q^(2s))
    flags: list[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def k(self) -> int:
        return self.spec.k

    @property
    def distance_bound(self) -> int:
        """Guaranteed ``d >= n - k - ell + 1``."""
        return self.n - self.k - self.ell + 1

    def to_dict(self) -> dict:
        d = self.spec.to_dict()
        d["provenance"] = {
            "base_field": format_field(self.base),
            "q": self.base.order,
            "ell": self.ell,
            "a": self.a,
            "s": self.s,
            "free_eta": list(self.free_etas),
            "m": list(self.m_poly.coeffs),
            "flags": list(self.flags),
        }
        return d


def _check_construction_hypotheses(base: GF, ell: int, a: int) -> None:
    q = base.order
    if base.p == 2:
        raise HypothesisError("q must be odd")
    if ell < 1:
        raise HypothesisError("ell must be positive")
    if math.gcd(q, ell) != 1:
        raise HypothesisError(f"gcd(q, ell) = gcd({q}, {ell}) != 1")
    if 7 * ell > q**ell - 1:
        raise HypothesisError(f"7 ell = {7 * ell} > q^ell - 1 = {q**ell - 1}")
    if a == 0:
        raise HypothesisError("a must be nonzero")


def construct_self_dual(
    base: GF | int,
    ell: int,
    a: int,
    free_etas: Sequence[int],
    target_modulus: Sequence[int] | None = None,
) -> SelfDualRecipe:
    """Self-dual twisted code over GF(q^(2s)) from ``f = x^ell - a`` over GF(q).

    The evaluation points are the roots in GF(q^s) of ``m = (x^{q^s} - x)/f``
    (divided by ``x`` as well for even ``ell``), the column multipliers are
    square roots of ``1/m'(alpha_i)``, and the twists come from :func:`eta_chain`.
    """
    if isinstance(base, int):
        base = field_of_order(base)
    a = base.coerce(a)
    _check_construction_hypotheses(base, ell, a)
    p, q = base.p, base.order
    s = splitting_degree(base, ell, a)
    eta_base = eta_chain(base, ell, a, free_etas)

    big = make_field(p, 2 * base.m * s, target_modulus)
    qs = q**s

    # f and m over the base field
    f_poly = Poly(base, [base.neg(a)] + [0] * (ell - 1) + [1])
    top = Poly(base, [0, base.neg(1)] + [0] * (qs - 2) + [1])
    den = f_poly * Poly(base, [0, 1]) if ell % 2 == 0 else f_poly
    m_poly = poly_divide_exact(top, den)
    if (m_poly * den) != top:  # pragma: no cover - poly_divide_exact guarantees this
        raise AssertionError("m(x) * f(x) must reconstruct x^{q^s} - x")

    emb = lambda x: big.embed(base, x)
    m_big = Poly(big, [emb(c) for c in m_poly.coeffs])
    f_big = Poly(big, [emb(c) for c in f_poly.coeffs])

    # GF(q^s) inside the big field: zero plus the powers of g^(q^s + 1)
    h = big.pow(big.generator_int, qs + 1)
    sub = [0]
    x = 1
    for _ in range(qs - 1):
        sub.append(x)
        x = big.mul(x, h)
    sub.sort(key=big.sort_key)

    f_roots = root_multiplicities(f_big, sub)
    if len(f_roots) != ell or any(mult != 1 for _, mult in f_roots):
        raise AssertionError(f"x^{ell} - a should have {ell} simple roots in GF(q^{s})")

    roots = root_multiplicities(m_big, sub)
    if len(roots) != m_poly.degree or any(mult != 1 for _, mult in roots):
        raise AssertionError("m(x) must have deg(m) simple roots")
    alpha = [r for r, _ in roots]

    dm = poly_derivative(m_big)
    v = []
    for r in alpha:
        w = big.inv(dm.eval_int(r))
        root = big.sqrt(w)
        if root is None:  # pragma: no cover - every subfield element is a square here
            raise AssertionError("1/m'(alpha) has no square root in the quadratic extension")
        v.append(root)

    n = len(alpha)
    k = n // 2
    spec = validate_spec(big, k, ell, alpha, [emb(e) for e in eta_base], v, strict=False)

    flags = []
    bound_7 = 7 * ell <= q**ell - 1
    bound_3 = 3 * ell <= k
    if not bound_3:
        flags.append(f"3*ell = {3 * ell} > k = {k}: outside the range where the self-duality test is two-sided")
    if bound_7 != bound_3:
        flags.append("7*ell <= q^ell - 1 and 3*ell <= k disagree")

    sigma = m_poly.descending()
    for j in range(1, 2 * ell):
        want = a if j == ell else 0
        if j < len(sigma) and sigma[j] != want:
            raise AssertionError(f"coefficient sigma_{j} of m(x) should be {want}")

    verdict = is_self_dual(spec)
    if not verdict.holds:  # pragma: no cover - the construction guarantees it
        raise AssertionError(f"constructed code failed the self-duality test: {verdict.failed}")
    if not gram_is_zero(spec):  # pragma: no cover
        raise AssertionError("constructed code has G G^T != 0")

    return SelfDualRecipe(
        base=base,
        ell=ell,
        a=a,
        s=s,
        free_etas=tuple(base.coerce(x) for x in free_etas),
        eta=eta_base,
        m_poly=m_poly,
        spec=spec,
        flags=flags,
    )


# --- searches -----------------------------------------------------------------------

@dataclass
class SearchResult:
    k: int
    n: int
    ell: int
    scanned: int
    count: int
    tuples: list[tuple[int, ...]] | None = None
    elapsed: float = 0.0

    @property
    def distance(self) -> int:
        return self.n - self.k + 1


def _scan(args) -> tuple[int, int, list[tuple[int, ...]] | None]:
    field_key, alpha, k, ell, etas, collect = args
    ctx = make_field(field_key[0], field_key[1], field_key[2])
    system = FastOmega(ctx, alpha, k, ell) if _fast_ok(k, ell) else OmegaSystem(ctx, alpha, k, ell)
    count = 0
    hits = [] if collect else None
    for eta in etas:
        if system.first_failure(eta) is None:
            count += 1
            if collect:
                hits.append(tuple(eta))
    return len(etas), count, hits


def _fast_ok(k: int, ell: int) -> bool:
    return (ell == 2 and k >= 3) or (ell == 3 and k >= 5)


def search_mds(
    ctx: GF,
    alpha: Sequence[int],
    k: int,
    ell: int,
    eta_domain: Iterable[Sequence[int]] | None = None,
    collect: bool = False,
    workers: int = 1,
) -> SearchResult:
    """Count (and optionally list) the twist tuples giving an MDS code.

    The default domain is all of GF(q)^ell in canonical order.  Results are
    identical for every ``workers`` value.
    """
    alpha = tuple(ctx.coerce(x) for x in alpha)
    n = len(alpha)
    if len(set(alpha)) != n:
        raise TgrsError("evaluation points must be distinct")
    if not 3 <= k < n:
        raise HypothesisError(f"need 3 <= k < n, got k = {k}, n = {n}")
    if not 1 <= ell <= k:
        raise TgrsError(f"need 1 <= ell <= k, got ell = {ell}")
    if eta_domain is None:
        etas = [tuple(t) for t in itertools.product(list(ctx.elements()), repeat=ell)]
    else:
        etas = [tuple(ctx.coerce(x) for x in t) for t in eta_domain]
    if any(len(t) != ell for t in etas):
        raise TgrsError(f"every twist tuple must have length {ell}")
    t0 = time.perf_counter()
    key = (ctx.p, ctx.m, ctx.modulus)
    if workers <= 1 or len(etas) < 2 * workers:
        scanned, count, hits = _scan((key, alpha, k, ell, etas, collect))
    else:
        size = -(-len(etas) // workers)
        chunks = [etas[i:i + size] for i in range(0, len(etas), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, [(key, alpha, k, ell, c, collect) for c in chunks]))
        scanned = sum(x[0] for x in parts)
        count = sum(x[1] for x in parts)
        hits = [t for x in parts for t in x[2]] if collect else None
    return SearchResult(k, n, ell, scanned, count, hits, time.perf_counter() - t0)
