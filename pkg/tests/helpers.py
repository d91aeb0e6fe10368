"""Shared generators for randomized code specs."""

from __future__ import annotations

import random

from tgrs.code import TgrsSpec, u_weights
from tgrs.field import make_field

Q11_ALPHA = (1, 2, 3, 5, 6, 8, 9, 10)
Q13_ALPHA = (0, 1, 2, 3, 4, 5, 6, 9, 10, 12)


def random_spec(rng: random.Random, qs=(11, 13, 17), max_n=12, max_ell=3, nonzero_eta=True, strict=True) -> TgrsSpec:
    """Spec with ``ell < min(k, n - k)`` when ``strict``."""
    while True:
        q = rng.choice(qs)
        f = make_field(q)
        n = rng.randint(4, min(q, max_n))
        k = rng.randint(2, n - 2)
        bound = min(k, n - k) - 1 if strict else min(k, n - k)
        if bound < 1:
            continue
        ell = rng.randint(1, min(bound, max_ell))
        alpha = tuple(rng.sample(range(q), n))
        v = tuple(rng.randrange(1, q) for _ in range(n))
        lo = 1 if nonzero_eta else 0
        eta = tuple(rng.randrange(lo, q) for _ in range(ell))
        return TgrsSpec(f, k, ell, alpha, v, eta)


def self_dual_candidate(rng: random.Random, p: int, k: int, ell: int, sigma_ok, perturb: str | None = None):
    """A length-2k spec over GF(p^2) with points in GF(p) meeting ``sigma_ok``.

    The multipliers are square roots of the u-weights and the twists satisfy
    ``1/eta_i + 1/eta_{ell+1-i} = sigma_ell``; ``perturb`` breaks one of them.
    Returns None when no point set is found quickly.
    """
    from tgrs.code import sigma_coeffs

    base, big = make_field(p), make_field(p, 2)
    emb = lambda x: big.embed(base, x)
    for _ in range(20000):
        alpha = rng.sample(range(p), 2 * k)
        s = sigma_coeffs(base, alpha)
        if s[ell] != 0 and sigma_ok(s):
            break
    else:
        return None
    v = [big.sqrt(emb(x)) for x in u_weights(base, alpha)]
    target = s[ell]
    eta = [0] * ell
    for i in range(ell // 2):
        x = rng.choice([y for y in range(1, p) if y != base.inv(target)])
        eta[i], eta[ell - 1 - i] = x, base.inv(base.sub(target, base.inv(x)))
    if ell % 2:
        eta[ell // 2] = base.div(2, target)
    eta = [emb(e) for e in eta]
    if perturb == "v":
        v[0] = big.mul(v[0], big.generator_int)
    elif perturb == "eta":
        eta[0] = big.add(eta[0], 1) or 2
    return TgrsSpec(big, k, ell, tuple(emb(a) for a in alpha), tuple(v), tuple(eta))
