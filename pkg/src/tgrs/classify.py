"""Structural criteria: MDS, AMDS, Singleton defect ell, ell-MDS and self-duality.

Every criterion here works from the evaluation points and twist coefficients
alone (symmetric functions of point subsets), never from codeword
enumeration; :mod:`tgrs.oracle` provides the brute-force referee.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field, fields
from typing import Iterator, Sequence

from .code import TgrsSpec, generator_matrix, sigma_coeffs, u_weights
from .errors import HypothesisError, TgrsError
from .field import GF
from .matrix import MatGF, determinant_rows
from .poly import _product_coeffs, e_sequence


@dataclass(frozen=True)
class Verdict:
    """A boolean answer plus the index subset that decided it (if any).

    Truthiness and tuple-unpacking both work: ``ok, witness = is_mds(spec)``.
    """

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds

    def __iter__(self) -> Iterator:
        return iter((self.holds, self.witness))


def _desc_coeffs(ctx: GF, alpha: Sequence[int], subset: Sequence[int]) -> list[int]:
    return _product_coeffs(ctx, [alpha[i] for i in subset])[::-1]


# --- the ell x ell twisted determinant ----------------------------------------

def _g_matrix(ctx: GF, c: Sequence[int], k: int, ell: int) -> list[list[int]]:
    """``g[t][col] = g_{k-ell+col}^{(t)}`` for the k-subset with descending coefficients ``c``."""
    e = e_sequence(ctx, c[:ell] if ell <= len(c) else c).e
    g = []
    for t in range(ell):
        row = []
        for col in range(ell):
            j = ell - col
            acc = 0
            for i in range(min(t, k - j) + 1):
                acc = ctx.add(acc, ctx.mul(e[t - i], c[j + i]))
            row.append(ctx.neg(acc))
        g.append(row)
    return g


def _twisted(ctx: GF, g: list[list[int]], eta: Sequence[int]) -> list[list[int]]:
    ell = len(g)
    return [
        [ctx.add(1 if t == col else 0, ctx.mul(eta[t], g[t][col])) for col in range(ell)]
        for t in range(ell)
    ]


def _check_mds_hypotheses(spec: TgrsSpec) -> None:
    if not 3 <= spec.k < spec.n:
        raise HypothesisError(f"the MDS criterion needs 3 <= k < n, got k = {spec.k}, n = {spec.n}")


def omega_matrix(spec: TgrsSpec, subset: Sequence[int]) -> MatGF:
    """The ``ell x ell`` matrix whose determinant decides the minor on columns ``subset``.

    Entry ``(t, col)`` is ``[t == col] + eta_{t+1} g_{k-ell+col}^{(t)}``.
    """
    subset = tuple(subset)
    if len(subset) != spec.k or len(set(subset)) != spec.k:
        raise TgrsError(f"expected {spec.k} distinct column indices, got {subset}")
    f = spec.ctx
    c = _desc_coeffs(f, spec.alpha, subset)
    return MatGF._raw(f, _twisted(f, _g_matrix(f, c, spec.k, spec.ell), spec.eta), spec.ell)


class OmegaSystem:
    """Per-subset g-matrices for fixed ``(alpha, k, ell)``, reusable across many eta."""

    def __init__(self, ctx: GF, alpha: Sequence[int], k: int, ell: int):
        self.ctx, self.k, self.ell = ctx, k, ell
        self.alpha = tuple(alpha)
        self.subsets = list(itertools.combinations(range(len(alpha)), k))
        self.g = [_g_matrix(ctx, _desc_coeffs(ctx, self.alpha, s), k, ell) for s in self.subsets]

    def det(self, idx: int, eta: Sequence[int]) -> int:
        return determinant_rows(self.ctx, _twisted(self.ctx, self.g[idx], eta))

    def first_failure(self, eta: Sequence[int]) -> tuple[int, ...] | None:
        for idx, s in enumerate(self.subsets):
            if self.det(idx, eta) == 0:
                return s
        return None


def is_mds(spec: TgrsSpec) -> Verdict:
    """MDS iff every k-subset's twisted determinant is nonzero.

    On failure the lexicographically first vanishing subset is the witness.
    """
    _check_mds_hypotheses(spec)
    f = spec.ctx
    for s in itertools.combinations(range(spec.n), spec.k):
        g = _g_matrix(f, _desc_coeffs(f, spec.alpha, s), spec.k, spec.ell)
        if determinant_rows(f, _twisted(f, g, spec.eta)) == 0:
            return Verdict(False, s)
    return Verdict(True)


# --- closed forms for two and three twists --------------------------------------

class FastOmega:
    """Closed-form determinants for ``ell`` in {2, 3}.

    Two twists: ``1 + h2 (c1^2 - c2) - h1 c2 + h1 h2 (c2^2 - c1 c3)``.
    Three twists: the explicit 3x3 expansion with ``e1 = -c1``, ``e2 = c1^2 - c2``.
    """

    def __init__(self, ctx: GF, alpha: Sequence[int], k: int, ell: int):
        if ell not in (2, 3):
            raise TgrsError(f"closed forms exist only for ell in {{2, 3}}, got {ell}")
        if ell == 2 and k < 3:
            raise HypothesisError("the two-twist closed form needs k >= 3")
        if ell == 3 and k < 5:
            raise HypothesisError("the three-twist closed form needs k >= 5")
        self.ctx, self.k, self.ell = ctx, k, ell
        self.subsets = list(itertools.combinations(range(len(alpha)), k))
        f = ctx
        self.terms = []
        for s in self.subsets:
            c = _desc_coeffs(f, alpha, s)
            if ell == 2:
                c1, c2, c3 = c[1], c[2], c[3]
                a = f.sub(f.mul(c1, c1), c2)
                b = c2
                d = f.sub(f.mul(c2, c2), f.mul(c1, c3))
                self.terms.append((a, b, d))
            else:
                e0, e1 = 1, f.neg(c[1])
                e2 = f.sub(f.mul(c[1], c[1]), c[2])
                es = (e0, e1, e2)
                g = [[0] * 3 for _ in range(3)]
                for t in range(3):
                    for j in (1, 2, 3):
                        acc = 0
                        for i in range(t + 1):
                            acc = f.add(acc, f.mul(es[t - i], c[j + i]))
                        g[t][3 - j] = f.neg(acc)
                self.terms.append(g)

    def det(self, idx: int, eta: Sequence[int]) -> int:
        f = self.ctx
        if self.ell == 2:
            a, b, d = self.terms[idx]
            h1, h2 = eta
            val = f.add(1, f.mul(h2, a))
            val = f.sub(val, f.mul(h1, b))
            return f.add(val, f.mul(f.mul(h1, h2), d))
        g = self.terms[idx]
        m = [[f.add(1 if t == c else 0, f.mul(eta[t], g[t][c])) for c in range(3)] for t in range(3)]
        mul, add, sub = f.mul, f.add, f.sub
        pos = add(add(mul(mul(m[0][0], m[1][1]), m[2][2]), mul(mul(m[0][1], m[1][2]), m[2][0])),
                  mul(mul(m[0][2], m[1][0]), m[2][1]))
        neg = add(add(mul(mul(m[0][2], m[1][1]), m[2][0]), mul(mul(m[0][0], m[1][2]), m[2][1])),
                  mul(mul(m[0][1], m[1][0]), m[2][2]))
        return sub(pos, neg)

    def first_failure(self, eta: Sequence[int]) -> tuple[int, ...] | None:
        for idx, s in enumerate(self.subsets):
            if self.det(idx, eta) == 0:
                return s
        return None


def is_mds_fast(spec: TgrsSpec) -> Verdict:
    """Same verdict as :func:`is_mds`, from the two/three-twist closed forms."""
    _check_mds_hypotheses(spec)
    w = FastOmega(spec.ctx, spec.alpha, spec.k, spec.ell).first_failure(spec.eta)
    return Verdict(w is None, w)


# --- AMDS and defect ell --------------------------------------------------------

def is_amds(spec: TgrsSpec) -> bool:
    """For a non-MDS code: AMDS iff every (k+1)-subset contains a k-subset with nonzero determinant."""
    if is_mds(spec):
        raise HypothesisError("the AMDS criterion applies only to codes that are not MDS")
    system = OmegaSystem(spec.ctx, spec.alpha, spec.k, spec.ell)
    nonzero = {s: system.det(i, spec.eta) != 0 for i, s in enumerate(system.subsets)}
    for j in itertools.combinations(range(spec.n), spec.k + 1):
        if not any(nonzero[tuple(x for x in j if x != drop)] for drop in j):
            return False
    return True


def _in_twisted_space(ctx: GF, asc: Sequence[int], k: int, eta: Sequence[int]) -> bool:
    # asc has degree k+ell-1; membership: coeff(x^{k+ell-i}) = eta_{ell-i+1} coeff(x^{k-i})
    ell = len(eta)
    return all(asc[k + ell - i] == ctx.mul(eta[ell - i], asc[k - i]) for i in range(1, ell + 1))


def defect_is_l(spec: TgrsSpec) -> Verdict:
    """Singleton defect equals ell iff the vanishing polynomial of some
    (k+ell-1)-subset of points lies in the twisted message space."""
    f, k, ell = spec.ctx, spec.k, spec.ell
    size = k + ell - 1
    if size > spec.n:
        return Verdict(False)
    for s in itertools.combinations(range(spec.n), size):
        asc = _product_coeffs(f, [spec.alpha[i] for i in s])
        if _in_twisted_space(f, asc, k, spec.eta):
            return Verdict(True, s)
    return Verdict(False)


def defect_l_witness(ctx: GF, alpha: Sequence[int], k: int, ell: int, subset: Sequence[int]) -> tuple[int, ...]:
    """Twist coefficients making the (k+ell-1)-subset ``subset`` a defect-ell witness."""
    subset = tuple(subset)
    if len(subset) != k + ell - 1:
        raise TgrsError(f"witness subset must have k + ell - 1 = {k + ell - 1} indices")
    asc = _product_coeffs(ctx, [alpha[i] for i in subset])
    eta = [0] * ell
    for i in range(1, ell + 1):
        if asc[k - i] == 0:
            raise TgrsError(f"coefficient of x^{k - i} vanishes; no eta realizes this subset")
        eta[ell - i] = ctx.div(asc[k + ell - i], asc[k - i])
    return tuple(eta)


# --- ell-MDS -----------------------------------------------------------------------

def dual_system_matrix(spec: TgrsSpec) -> MatGF:
    """The ``2 ell x ell`` matrix of the dual twisted space's top coefficients.

    Entry ``(r, t)`` is ``sigma_{t-r} [r <= t] - eta_{ell-t} sigma_{t+ell-r} [r <= t+ell]``.
    """
    f, ell = spec.ctx, spec.ell
    sigma = sigma_coeffs(f, spec.alpha)
    sg = lambda i: sigma[i] if 0 <= i < len(sigma) else 0
    rows = []
    for r in range(2 * ell):
        row = []
        for t in range(ell):
            first = sg(t - r) if r <= t else 0
            second = sg(t + ell - r) if r <= t + ell else 0
            row.append(f.sub(first, f.mul(spec.eta[ell - 1 - t], second)))
        rows.append(row)
    return MatGF._raw(f, rows, ell)


def dual_defect_is_l(spec: TgrsSpec) -> Verdict:
    """Singleton defect of the dual equals ell (condition (2) of the ell-MDS test)."""
    f, n, k, ell = spec.ctx, spec.n, spec.k, spec.ell
    if any(e == 0 for e in spec.eta):
        raise HypothesisError("the dual-defect criterion needs every eta_j != 0")
    if ell > n - k:
        raise HypothesisError("the dual-defect criterion needs ell <= n - k")
    size = n - k + ell - 1
    if size > n:
        return Verdict(False)
    mat = dual_system_matrix(spec)
    for s in itertools.combinations(range(n), size):
        d = _desc_coeffs(f, spec.alpha, s)
        rhs = [d[2 * ell - 1 - r] for r in range(2 * ell)]
        if mat.solve(rhs).consistent:
            return Verdict(True, s)
    return Verdict(False)


def is_l_mds(spec: TgrsSpec) -> bool:
    """``S(C) = S(C_dual) = ell``."""
    if any(e == 0 for e in spec.eta):
        raise HypothesisError("the ell-MDS criterion needs every eta_j != 0")
    if not spec.in_strict_regime():
        raise HypothesisError("the ell-MDS criterion needs ell < min(k, n - k)")
    return bool(defect_is_l(spec)) and bool(dual_defect_is_l(spec))


# --- self-duality -----------------------------------------------------------------

@dataclass(frozen=True)
class SelfDualVerdict:
    holds: bool
    failed: str | None = None  # first failed condition, if any
    in_theorem_range: bool = True
    scale: int | None = None  # the common ratio v_i^2 / u_i when it exists

    def __bool__(self) -> bool:
        return self.holds


def self_dual_conditions(spec: TgrsSpec) -> SelfDualVerdict:
    """Evaluate the two self-duality conditions without any range checks."""
    f, n, ell = spec.ctx, spec.n, spec.ell
    u = u_weights(f, spec.alpha)
    ratios = {f.div(f.mul(v, v), ui) for v, ui in zip(spec.v, u)}
    in_range = ell <= (spec.k - 1) // 3
    if len(ratios) != 1:
        return SelfDualVerdict(False, "v_i^2 / u_i is not constant", in_range)
    lam = ratios.pop()
    sigma = sigma_coeffs(f, spec.alpha)
    for j in [*range(1, ell), *range(ell + 1, 2 * ell)]:
        if j < len(sigma) and sigma[j] != 0:
            return SelfDualVerdict(False, f"sigma_{j} != 0", in_range, lam)
    s_ell = sigma[ell]
    for i in range(1, (ell + 2) // 2 + 1):
        total = f.add(f.inv(spec.eta[i - 1]), f.inv(spec.eta[ell - i]))
        if total != s_ell:
            return SelfDualVerdict(False, f"1/eta_{i} + 1/eta_{ell + 1 - i} != sigma_{ell}", in_range, lam)
    return SelfDualVerdict(True, None, in_range, lam)


def is_self_dual(spec: TgrsSpec) -> SelfDualVerdict:
    """Self-duality of a length-2k code with all twist coefficients nonzero.

    Inside ``ell <= floor((k-1)/3)`` the conditions are necessary and
    sufficient.  Outside that range they remain sufficient, so a positive
    answer is still given (flagged ``in_theorem_range=False``); a negative one
    would be unfounded and raises :class:`HypothesisError` instead.
    """
    if spec.n != 2 * spec.k:
        raise HypothesisError(f"self-duality needs n = 2k, got n = {spec.n}, k = {spec.k}")
    if any(e == 0 for e in spec.eta):
        raise HypothesisError("the self-duality criterion needs every eta_j != 0")
    verdict = self_dual_conditions(spec)
    if not verdict.holds and not verdict.in_theorem_range:
        raise HypothesisError(
            f"ell = {spec.ell} > floor((k-1)/3) = {(spec.k - 1) // 3} and the sufficient "
            f"conditions fail ({verdict.failed}); outside theorem scope"
        )
    return verdict


# --- report -----------------------------------------------------------------------

@dataclass
class ClassificationReport:
    spec: TgrsSpec
    is_mds: bool | None = None
    witness_subset: tuple[int, ...] | None = None
    is_amds: bool | None = None
    defect_is_l: bool | None = None
    defect: int | None = None
    dual_defect: int | None = None
    is_self_dual: bool | None = None
    notes: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["spec"] = self.spec.to_dict()
        d["notes"] = list(self.notes)
        d["timings"] = dict(self.timings)
        d["witness_subset"] = list(self.witness_subset) if self.witness_subset else None
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> ClassificationReport:
        d = dict(d)
        d["spec"] = TgrsSpec.from_dict(d["spec"])
        if d.get("witness_subset") is not None:
            d["witness_subset"] = tuple(d["witness_subset"])
        return cls(**d)


def classify(spec: TgrsSpec, self_dual: bool = False, defects: bool = False) -> ClassificationReport:
    """Run every applicable criterion and collect the answers.

    ``defects`` adds brute-force Singleton defects from :mod:`tgrs.oracle`.
    Self-duality hypothesis violations propagate as :class:`HypothesisError`.
    """
    rep = ClassificationReport(spec)
    t0 = time.perf_counter()
    try:
        v = is_mds(spec)
        rep.is_mds, rep.witness_subset = v.holds, v.witness
    except HypothesisError as exc:
        rep.notes.append(f"MDS: {exc}")
    rep.timings["mds"] = time.perf_counter() - t0
    if rep.is_mds is False:
        t0 = time.perf_counter()
        rep.is_amds = is_amds(spec)
        rep.timings["amds"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    rep.defect_is_l = defect_is_l(spec).holds
    rep.timings["defect_l"] = time.perf_counter() - t0
    if rep.is_mds:
        rep.defect = 0
    if defects:
        from .oracle import singleton_defects

        t0 = time.perf_counter()
        pair = singleton_defects(spec)
        rep.defect, rep.dual_defect = pair.s_c, pair.s_dual
        rep.timings["oracle"] = time.perf_counter() - t0
    if self_dual:
        t0 = time.perf_counter()
        sd = is_self_dual(spec)
        rep.is_self_dual = sd.holds
        if not sd.in_theorem_range:
            rep.notes.append("self-dual: sufficient conditions hold; ell exceeds floor((k-1)/3)")
        rep.timings["self_dual"] = time.perf_counter() - t0
    return rep


def gram_is_zero(spec: TgrsSpec) -> bool:
    """``G G^T = 0``: the code is contained in its dual."""
    g = generator_matrix(spec)
    return (g @ g.T).is_zero()
