"""Finite fields GF(p^m) for odd and even primes.

Elements are stored as plain ints: the coefficient vector (c_0, ..., c_{m-1})
of the polynomial-basis representation is packed as ``sum(c_i * p**i)``, so
elements of the prime subfield keep their natural integer value.  The hot
paths of the library (searches, eliminations) work on these ints through the
methods of :class:`GF`; :class:`FieldElem` wraps one int for convenient
operator-based use.

Canonical element order is lexicographic on the ascending coefficient vector
(``c_0`` most significant).  It fixes generator and square-root choices.
"""

from __future__ import annotations

import itertools
import re
import threading
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import BudgetExceededError, FieldMismatchError, TgrsError

TABLE_LIMIT = 10**6  # log/antilog tables are built up to this field order
FACTOR_LIMIT = 10**12  # p^m - 1 must be trial-divisible


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    if n > FACTOR_LIMIT:
        raise BudgetExceededError(f"refusing to factor {n} > {FACTOR_LIMIT}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --- dense polynomials over Z_p, ascending int lists; only used for moduli ---

def _zp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    lead_inv = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * lead_inv % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _zp_trim(a[:df])


def _zp_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _zp_mod(out, f, p)


def _zp_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _zp_mod(a, f, p)
    while e:
        if e & 1:
            result = _zp_mulmod(result, base, f, p)
        base = _zp_mulmod(base, base, f, p)
        e >>= 1
    return result


def _zp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _zp_trim(list(a)), _zp_trim(list(b))
    while b:
        a, b = b, _zp_mod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p), ascending coefficients."""
    f = [c % p for c in modulus]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        # x^(p^k) mod f
        r = x
        for _ in range(k):
            r = _zp_powmod(r, p, f, p)
        return r

    if _zp_trim(_sub_zp(frob(m), x, p)):
        return False
    for r in prime_factors(m):
        h = _sub_zp(frob(m // r), x, p)
        if len(_zp_gcd(f, h, p)) != 1:
            return False
    return True


def _sub_zp(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _zp_trim([(x - y) % p for x, y in zip(a, b)])


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``m`` (ascending order)."""
    for low in itertools.product(range(p), repeat=m):
        cand = (*low, 1)
        if low[0] != 0 and is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The finite field GF(p^m).  Build instances through :func:`make_field`."""

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise TgrsError(f"characteristic {p!r} is not prime")
        if m < 1:
            raise TgrsError(f"extension degree must be >= 1, got {m}")
        self.p = p
        self.m = m
        self.order = p**m
        if m == 1:
            if modulus is not None and len(modulus) != 2:
                raise TgrsError("prime fields take no modulus (or a degree-1 one)")
            self.modulus = None
        else:
            if modulus is None:
                modulus = default_modulus(p, m)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1:
                raise TgrsError(f"modulus must have degree {m}, got {len(modulus) - 1}")
            if modulus[-1] != 1:
                raise TgrsError("modulus must be monic")
            if not is_irreducible(modulus, p):
                raise TgrsError(f"modulus {modulus} is reducible over GF({p})")
            self.modulus = modulus
        self._lock = threading.Lock()
        self._embeddings: dict = {}
        if m == 1:
            self.add = self._add_p
            self.sub = self._sub_p
            self.neg = self._neg_p
            self.mul = self._mul_p
        elif self.order <= TABLE_LIMIT:
            self.add = self._add_t
            self.sub = self._sub_t
            self.neg = self._neg_t
            self.mul = self._mul_t
        else:
            self.add = self._add_v
            self.sub = self._sub_v
            self.neg = self._neg_v
            self.mul = self._mul_v

    # identity ---------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GF({format_field(self)})"

    def __call__(self, value: int | Sequence[int] | FieldElem) -> FieldElem:
        return FieldElem(self, self.coerce(value))

    def coerce(self, value) -> int:
        """Turn an int, coefficient list or FieldElem into the packed int form."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise FieldMismatchError(f"element of {value.ctx} used in {self}")
            return value.value
        if isinstance(value, (list, tuple)):
            return self.from_vec(value)
        value = int(value)
        if self.m == 1:
            return value % self.p
        if not 0 <= value < self.order:
            raise TgrsError(f"packed element {value} out of range for {self}")
        return value

    # representation ---------------------------------------------------------

    def to_vec(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_vec(self, v: Sequence[int]) -> int:
        if len(v) > self.m:
            raise TgrsError(f"coefficient vector longer than degree {self.m}")
        a = 0
        for c in reversed(v):
            a = a * self.p + int(c) % self.p
        return a

    def sort_key(self, a: int) -> tuple[int, ...]:
        return self.to_vec(a)

    def elements(self) -> Iterator[int]:
        """All elements in canonical order."""
        if self.m == 1:
            yield from range(self.p)
            return
        for v in itertools.product(range(self.p), repeat=self.m):
            yield self.from_vec(v)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # prime-field arithmetic -------------------------------------------------

    def _add_p(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _sub_p(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _neg_p(self, a: int) -> int:
        return -a % self.p

    def _mul_p(self, a: int, b: int) -> int:
        return a * b % self.p

    # vector arithmetic (no tables) ------------------------------------------

    def _add_v(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.m):
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += (x + y) % p * scale
            scale *= p
        return out

    def _neg_v(self, a: int) -> int:
        return self.from_vec([-c for c in self.to_vec(a)])

    def _sub_v(self, a: int, b: int) -> int:
        return self._add_v(a, self._neg_v(b))

    def _mul_v(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        prod = _zp_mulmod(list(self.to_vec(a)), list(self.to_vec(b)), self.modulus, self.p)
        return self.from_vec(prod)

    def _pow_v(self, a: int, e: int) -> int:
        r = _zp_powmod(list(self.to_vec(a)), e, self.modulus, self.p)
        return self.from_vec(r)

    # table arithmetic (Zech logarithms) --------------------------------------

    @cached_property
    def _tables(self) -> tuple[list[int], list[int], list[int]]:
        with self._lock:
            g = self.generator_int
            q1 = self.order - 1
            exp = [0] * (2 * q1)
            log = [0] * self.order
            x = 1
            for i in range(q1):
                exp[i] = x
                log[x] = i
                x = self._mul_v(x, g) if self.m > 1 else x * g % self.p
            exp[q1:] = exp[:q1]
            # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
            add = self._add_v if self.m > 1 else self._add_p
            zech = [0] * q1
            for d in range(q1):
                s = add(1, exp[d])
                zech[d] = -1 if s == 0 else log[s]
            return exp, log, zech

    def _add_t(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech = self._tables
        la = log[a]
        z = zech[(log[b] - la) % (self.order - 1)]
        return 0 if z < 0 else exp[la + z]

    def _neg_t(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        exp, log, _ = self._tables
        return exp[log[a] + (self.order - 1) // 2]

    def _sub_t(self, a: int, b: int) -> int:
        return self._add_t(a, self._neg_t(b))

    def _mul_t(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self._tables
        return exp[log[a] + log[b]]

    # shared operations ------------------------------------------------------

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self.order <= TABLE_LIMIT:
            exp, log, _ = self._tables
            return exp[(-log[a]) % (self.order - 1)]
        return self._pow_v(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self.order <= TABLE_LIMIT:
            exp, log, _ = self._tables
            return exp[log[a] * e % (self.order - 1)]
        return self._pow_v(a, e)

    def _pow_raw(self, a: int, e: int) -> int:
        # exponentiation that never touches the tables (used while building them)
        if self.m == 1:
            return pow(a, e, self.p)
        return self._pow_v(a, e)

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under Z -> GF(p^m)."""
        return n % self.p

    def dot(self, xs: Sequence[int], ys: Sequence[int]) -> int:
        if self.m == 1:
            return sum(x * y for x, y in zip(xs, ys)) % self.p
        acc = 0
        for x, y in zip(xs, ys):
            acc = self.add(acc, self.mul(x, y))
        return acc

    # generators, square roots, embeddings -----------------------------------

    @cached_property
    def generator_int(self) -> int:
        q1 = self.order - 1
        if q1 == 1:
            return 1
        cofactors = [q1 // r for r in prime_factors(q1)]
        for a in self.elements():
            if a == 0:
                continue
            if all(self._pow_raw(a, c) != 1 for c in cofactors):
                return a
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def log(self, a: int) -> int:
        if a == 0:
            raise TgrsError("discrete log of zero")
        if self.order > TABLE_LIMIT:
            raise BudgetExceededError("discrete log tables disabled above TABLE_LIMIT")
        return self._tables[1][a]

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.order - 1) // 2) == 1

    def sqrt(self, a: int) -> int | None:
        """Canonically least square root of ``a``, or None if ``a`` is a non-square."""
        if a == 0:
            return 0
        if self.p == 2:
            r = self.pow(a, self.order // 2)
            return r
        if self.order <= TABLE_LIMIT:
            exp, log, _ = self._tables
            la = log[a]
            if la % 2:
                return None
            r = exp[la // 2]
        else:
            r = self._tonelli_shanks(a)
            if r is None:
                return None
        return min(r, self.neg(r), key=self.sort_key)

    def _tonelli_shanks(self, a: int) -> int | None:
        if not self.is_square(a):
            return None
        q1 = self.order - 1
        s, t = 0, q1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        minus_one = self.neg(1)
        z = next(x for x in self.elements() if x and self.pow(x, q1 // 2) == minus_one)
        c = self.pow(z, t)
        r = self.pow(a, (t + 1) // 2)
        u = self.pow(a, t)
        while u != 1:
            i, uu = 0, u
            while uu != 1:
                uu = self.mul(uu, uu)
                i += 1
            b = c
            for _ in range(s - i - 1):
                b = self.mul(b, b)
            r = self.mul(r, b)
            c = self.mul(b, b)
            u = self.mul(u, c)
            s = i
        return r

    def embedding_from(self, sub: GF) -> list[int]:
        """Images of the subfield basis powers 1, theta, ..., theta^{m'-1} in this field.

        For a prime subfield this is just ``[1]``.  Otherwise theta is mapped to
        the canonically least root of the subfield modulus.
        """
        if sub.p != self.p or self.m % sub.m:
            raise FieldMismatchError(f"{sub} does not embed in {self}")
        if sub.m == 1:
            return [1]
        if sub.key not in self._embeddings:
            f = sub.modulus
            root = None
            for x in self.elements():
                acc = 0
                for c in reversed(f):
                    acc = self.add(self.mul(acc, x), c)
                if acc == 0:
                    root = x
                    break
            if root is None:
                raise FieldMismatchError(f"{sub} modulus has no root in {self}")
            basis = [1]
            for _ in range(sub.m - 1):
                basis.append(self.mul(basis[-1], root))
            self._embeddings[sub.key] = basis
        return self._embeddings[sub.key]

    def embed(self, sub: GF, a: int) -> int:
        """Image in this field of the element ``a`` of the subfield ``sub``."""
        if sub == self:
            return a
        basis = self.embedding_from(sub)
        acc = 0
        for c, b in zip(sub.to_vec(a), basis):
            if c:
                acc = self.add(acc, self.mul(c, b))
        return acc


class FieldElem:
    """One element of a :class:`GF`, with operator overloading."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: GF, value: int):
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise FieldMismatchError(f"cannot combine elements of {self.ctx} and {other.ctx}")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def _wrap(self, v: int) -> FieldElem:
        return FieldElem(self.ctx, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ctx.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.ctx.pow(self.value, e))

    def inverse(self) -> FieldElem:
        return self._wrap(self.ctx.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx.key, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __lt__(self, other: FieldElem) -> bool:
        return self.ctx.sort_key(self.value) < self.ctx.sort_key(self._other(other))

    def __repr__(self) -> str:
        if self.ctx.m == 1:
            return f"{self.value}"
        return f"{list(self.ctx.to_vec(self.value))}"


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...] | None) -> GF:
    return GF(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Field GF(p^m); identical arguments return the same (shared) instance.

    ``modulus`` lists ascending coefficients, e.g. ``(2, 7, 1)`` for x^2+7x+2.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise TgrsError(f"characteristic {p!r} is not prime")
    if m > 1 and modulus is None:
        modulus = default_modulus(p, m)
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if m == 1 and len(modulus) == 2:
            modulus = None
    return _cached_field(p, m, modulus)


def field_of_order(q: int) -> GF:
    """GF(q) with the default modulus, for a prime power ``q``."""
    if q < 2:
        raise TgrsError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise TgrsError(f"{q} is not a prime power")
    p, m = ps[0], 0
    while q > 1:
        q //= p
        m += 1
    return make_field(p, m)


def find_generator(ctx: GF) -> FieldElem:
    """Canonically least primitive element."""
    if ctx.order - 1 > FACTOR_LIMIT:
        raise BudgetExceededError(f"order {ctx.order} exceeds the factoring limit")
    return ctx(ctx.generator_int)


def sqrt_in_extension(x: FieldElem, target: GF) -> FieldElem:
    """Square root of ``x`` taken in ``target``, a degree-2 extension of x's field.

    Every element of the subfield is a square in the quadratic extension, so this
    succeeds for all inputs.  The canonically smaller of the two roots is returned.
    """
    sub = x.ctx
    if sub.p == 2:
        raise TgrsError("square roots in characteristic 2 are not supported here")
    if target.p != sub.p or target.m != 2 * sub.m:
        raise FieldMismatchError(f"{target} is not a quadratic extension of {sub}")
    a = target.embed(sub, x.value)
    r = target.sqrt(a)
    if r is None:  # pragma: no cover - impossible by the index-2 argument
        raise AssertionError(f"{x} has no square root in {target}")
    return target(r)


_FIELD_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*(?:/\s*([\d,\s]+))?)?\s*$")


def parse_field(text: str) -> GF:
    """Parse ``"p"``, ``"p^m"`` or ``"p^m/c0,c1,...,cm"``."""
    mt = _FIELD_RE.match(text)
    if not mt:
        raise TgrsError(f"cannot parse field string {text!r}")
    p = int(mt.group(1))
    m = int(mt.group(2) or 1)
    modulus = None
    if mt.group(3):
        modulus = [int(c) for c in mt.group(3).split(",") if c.strip()]
        if len(modulus) != m + 1:
            raise TgrsError(f"modulus in {text!r} must have {m + 1} coefficients")
    return make_field(p, m, modulus)


def format_field(ctx: GF) -> str:
    if ctx.m == 1:
        return str(ctx.p)
    return f"{ctx.p}^{ctx.m}/" + ",".join(str(c) for c in ctx.modulus)
