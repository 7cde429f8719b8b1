"""Exact integer polynomials: characteristic polynomials, factorization over Z,
and the factor-structure certification criteria.

Representation: ascending coefficient tuples with a nonzero leading
coefficient (the zero polynomial is the empty tuple).

Factorization pipeline (all exact, no rationals):
  1. content/primitive split and Yun squarefree decomposition;
  2. for each squarefree part, a scan of small primes first looks for an
     irreducibility certificate (distinct-degree gcd test), which short-
     circuits everything;
  3. otherwise: Cantor-Zassenhaus factorization modulo a small odd prime
     with good reduction, linear Hensel lifting to above the Mignotte
     bound, and exhaustive subset recombination.
The recombination is exhaustive over subsets, so the returned factors are
irreducible by construction even when no modular certificate exists.

Verdicts are only ever CERTIFIED_PSEUDO_ANOSOV or INCONCLUSIVE: the factor
criterion is sufficient, never necessary.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .homology import IntMatrix, char_coeffs

CERTIFIED = "CERTIFIED_PSEUDO_ANOSOV"
INCONCLUSIVE = "INCONCLUSIVE"

CERTIFICATE_METHOD = "distinct-degree-gcd"
DEFAULT_CERT_PRIMES = tuple(p for p in range(2, 100) if all(p % q for q in range(2, p)))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ascending coefficients, trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use of_coeffs to trim)")

    @staticmethod
    def of_coeffs(coeffs) -> "IntPolynomial":
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def x() -> "IntPolynomial":
        return IntPolynomial((0, 1))

    @staticmethod
    def constant(c: int) -> "IntPolynomial":
        return IntPolynomial.of_coeffs([c])

    # ---- basics ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial.of_coeffs(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + other.scale(-1)

    def __neg__(self) -> "IntPolynomial":
        return self.scale(-1)

    def scale(self, k: int) -> "IntPolynomial":
        if k == 0:
            return IntPolynomial.zero()
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "IntPolynomial":
        out = IntPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of_coeffs([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        """gcd of coefficients with the sign of the leading coefficient; 0 for zero."""
        if not self.coeffs:
            return 0
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g if self.leading > 0 else -g

    def primitive_part(self) -> "IntPolynomial":
        c = self.content()
        if c == 0:
            return self
        return IntPolynomial(tuple(x // c for x in self.coeffs))

    def divmod_exact(self, divisor: "IntPolynomial"):
        """Integer long division; returns (q, r) or None when a step is non-divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dl = divisor.degree
        lead = divisor.leading
        if len(rem) - 1 < dl:
            return IntPolynomial.zero(), self
        q = [0] * (len(rem) - dl)
        for i in range(len(rem) - 1, dl - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            step, r = divmod(c, lead)
            if r:
                return None
            q[i - dl] = step
            for j, d in enumerate(divisor.coeffs):
                rem[i - dl + j] -= step * d
        return IntPolynomial.of_coeffs(q), IntPolynomial.of_coeffs(rem)

    def divides(self, other: "IntPolynomial") -> bool:
        res = other.divmod_exact(self)
        return res is not None and res[1].is_zero()

    def substitute_power(self, n: int) -> "IntPolynomial":
        """p(x^n)."""
        out = [0] * (self.degree * n + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * n] = c
        return IntPolynomial.of_coeffs(out)

    # ---- serialization ---------------------------------------------------
    def to_json_obj(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json_obj(obj) -> "IntPolynomial":
        return IntPolynomial.of_coeffs([int(c) for c in obj])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}x" if i == 1 else f"{mag}x^{i}"
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


def charpoly(m: IntMatrix) -> IntPolynomial:
    """det(xI - m), monic, by the division-free scheme."""
    return IntPolynomial.of_coeffs(char_coeffs(m))


# ---------------------------------------------------------------------------
# gcd and squarefree decomposition over Z
# ---------------------------------------------------------------------------

def _shifted(b: IntPolynomial, k: int) -> IntPolynomial:
    return IntPolynomial.of_coeffs([0] * k + list(b.coeffs))


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    # a scaled by a power of lc(b), reduced below deg b; exact integer steps
    lead = b.leading
    r = a
    while not r.is_zero() and r.degree >= b.degree:
        c = r.leading
        shift = r.degree - b.degree
        r = r.scale(lead) - _shifted(b, shift).scale(c)
    return r


def gcd_z(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z with positive leading coefficient (primitive PRS)."""
    if a.is_zero() and b.is_zero():
        return IntPolynomial.zero()
    ca = abs(a.content()) if not a.is_zero() else 0
    cb = abs(b.content()) if not b.is_zero() else 0
    content = math.gcd(ca, cb)
    p, q = a.primitive_part(), b.primitive_part()
    if p.degree < q.degree:
        p, q = q, p
    while not q.is_zero():
        r = _pseudo_rem(p, q).primitive_part()
        p, q = q, r
    if p.is_zero():
        return IntPolynomial.constant(content)
    p = p.primitive_part()
    if p.leading < 0:
        p = -p
    return p * content if p.degree == 0 else p


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm on the primitive part; returns (factor, multiplicity) pairs.

    Factors are primitive with positive leading coefficient; content and
    sign are NOT included (callers track them separately).
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    work = p.primitive_part()
    if work.leading < 0:
        work = -work
    if work.degree < 1:
        return []
    out = []
    g = gcd_z(work, work.derivative())
    c = work.divmod_exact(g)[0] if g.degree > 0 else work
    if g.degree == 0:
        return [(work, 1)]
    d = work.derivative().divmod_exact(g)[0] - c.derivative()
    i = 1
    while True:
        if c.degree < 1:
            break
        p_i = gcd_z(c, d)
        next_c = c.divmod_exact(p_i)[0] if p_i.degree > 0 else c
        if p_i.degree > 0:
            out.append((p_i, i))
            d = d.divmod_exact(p_i)[0] - next_c.derivative()
        else:
            d = d - next_c.derivative()
        c = next_c
        i += 1
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p): dense lists of ints in [0, p)
# ---------------------------------------------------------------------------

def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_from_int_poly(f: IntPolynomial, p: int) -> list[int]:
    return _gf_trim([c % p for c in f.coeffs])


def _gf_add(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _gf_trim(out)


def _gf_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _gf_trim(out)


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            out[i + j] = (out[i + j] + c * d) % p
    return _gf_trim(out)


def _gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = a[:]
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if not c:
            continue
        step = c * inv % p
        q[i - (len(b) - 1)] = step
        for j, d in enumerate(b):
            a[i - (len(b) - 1) + j] = (a[i - (len(b) - 1) + j] - step * d) % p
    return _gf_trim(q), _gf_trim(a)


def _gf_rem(a, b, p):
    return _gf_divmod(a, b, p)[1]


def _gf_gcd(a, b, p):
    while b:
        a, b = b, _gf_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _gf_monic(a, p):
    if not a or a[-1] == 1:
        return a[:]
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gf_pow_mod(base, e, mod, p):
    result = [1]
    base = _gf_rem(base, mod, p)
    while e:
        if e & 1:
            result = _gf_rem(_gf_mul(result, base, p), mod, p)
        base = _gf_rem(_gf_mul(base, base, p), mod, p)
        e >>= 1
    return result


def irreducible_mod_p(f: IntPolynomial, prime: int) -> bool:
    """Distinct-degree irreducibility test for f modulo a prime.

    Requires the prime not to divide the leading coefficient.  True means
    f mod prime is irreducible over GF(prime); for monic f that certifies
    irreducibility over Z.
    """
    if prime < 2 or any(prime % q == 0 for q in range(2, math.isqrt(prime) + 1)):
        raise ValueError(f"{prime} is not prime")
    if f.is_zero() or f.leading % prime == 0:
        raise ValueError("prime divides the leading coefficient")
    fbar = _gf_monic(_gf_from_int_poly(f, prime), prime)
    n = len(fbar) - 1
    if n <= 0:
        raise ValueError("polynomial is constant modulo the prime")
    if n != f.degree:
        raise AssertionError("unreachable: leading coefficient vanished")
    if n == 1:
        return True
    x = [0, 1]
    power = x
    for i in range(1, n // 2 + 1):
        power = _gf_pow_mod(power, prime, fbar, prime)
        g = _gf_gcd(_gf_sub(power, x, prime), fbar, prime)
        if len(g) - 1 >= 1:
            return False
    return True


def _gf_squarefree(fbar, p):
    d = _gf_trim([(i * c) % p for i, c in enumerate(fbar)][1:])
    if not d:
        return False
    return len(_gf_gcd(fbar, d, p)) == 1


def _distinct_degree(fbar, p):
    """[(product of irreducible factors of degree d, d)] for monic squarefree fbar."""
    out = []
    x = [0, 1]
    power = x[:]
    f = fbar[:]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append((f, len(f) - 1))
            break
        power = _gf_pow_mod(power, p, f, p)
        g = _gf_gcd(_gf_sub(power, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = _gf_divmod(f, g, p)[0]
            power = _gf_rem(power, f, p)
    return out


def _equal_degree(fbar, d, p, rng):
    """Cantor-Zassenhaus split of a monic squarefree product of degree-d irreducibles (p odd)."""
    n = len(fbar) - 1
    if n == d:
        return [fbar]
    exponent = (p ** d - 1) // 2
    while True:
        h = [rng.randrange(p) for _ in range(n)]
        h = _gf_trim(h)
        if len(h) - 1 < 1:
            continue
        g = _gf_gcd(h, fbar, p)
        if len(g) - 1 >= 1:
            split = g
        else:
            t = _gf_sub(_gf_pow_mod(h, exponent, fbar, p), [1], p)
            split = _gf_gcd(t, fbar, p)
        if 1 <= len(split) - 1 < n:
            rest = _gf_divmod(fbar, split, p)[0]
            return _equal_degree(split, d, p, rng) + _equal_degree(rest, d, p, rng)


def _factor_mod_p(fbar, p, rng):
    """Monic irreducible factors of a monic squarefree fbar over GF(p), p odd."""
    out = []
    for prod, d in _distinct_degree(fbar, p):
        out.extend(_equal_degree(prod, d, p, rng))
    out.sort(key=lambda g: (len(g), g))
    return out


# ---------------------------------------------------------------------------
# Hensel lifting and recombination
# ---------------------------------------------------------------------------

def _mignotte_exponent(f: IntPolynomial, p: int) -> int:
    """Smallest a with p^a > 2 * (factor coefficient bound) * |lc(f)|."""
    norm_sq = sum(c * c for c in f.coeffs)
    bound = (math.isqrt(norm_sq) + 1) * (1 << f.degree) * abs(f.leading)
    target = 2 * bound + 1
    a, power = 1, p
    while power < target:
        power *= p
        a += 1
    return a


def _hensel_lift(f: IntPolynomial, p: int, factors: list[list[int]], exponent: int):
    """Lift f = lc * prod(factors) from mod p to mod p^exponent (linear lifting).

    `factors` are monic and pairwise coprime mod p; returns monic lifts
    mod p^exponent with f = lc * prod(lifts) mod p^exponent.
    """
    lc = f.leading
    lc_inv_mod_p = pow(lc % p, p - 2, p)
    # CRT basis: sigma_i with sigma_i * prod_{j != i} g_j = 1 mod g_i
    sigmas = []
    for i, g in enumerate(factors):
        others = [1]
        for j, h in enumerate(factors):
            if j != i:
                others = _gf_mul(others, h, p)
        others = _gf_rem(others, g, p)
        sigmas.append(_gf_inverse_mod(others, g, p))
    lifted = [g[:] for g in factors]
    modulus = p
    for _ in range(exponent - 1):
        # error E = (f - lc * prod(lifted)) / modulus  (exact), reduced mod p
        prod = IntPolynomial.one()
        for g in lifted:
            prod = prod * IntPolynomial.of_coeffs(g)
        err = f - prod.scale(lc)
        err_div = []
        for c in err.coeffs:
            q, r = divmod(c, modulus)
            assert r == 0, "lift invariant broken"
            err_div.append(q)
        ebar = _gf_trim([c % p for c in err_div])
        ebar = _gf_mul(ebar, [lc_inv_mod_p], p)
        new = []
        for g, sigma, orig in zip(lifted, sigmas, factors):
            delta = _gf_rem(_gf_mul(ebar, sigma, p), orig, p)
            g2 = g[:]
            if len(g2) < len(delta):
                g2.extend([0] * (len(delta) - len(g2)))
            for i, c in enumerate(delta):
                g2[i] = g2[i] + modulus * c
            new.append(g2)
        lifted = new
        modulus *= p
    return lifted, modulus


def _gf_inverse_mod(a, mod, p):
    # extended Euclid over GF(p)[x]
    r0, r1 = mod[:], _gf_rem(a, mod, p)
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if len(r0) - 1 != 0:
        raise ValueError("not invertible")
    inv = pow(r0[0], p - 2, p)
    return _gf_trim([c * inv % p for c in t0])


def _symmetric(c: int, modulus: int) -> int:
    c %= modulus
    if 2 * c > modulus:
        c -= modulus
    return c


def _product_mod(parts, modulus):
    out = [1]
    for g in parts:
        new = [0] * (len(out) + len(g) - 1)
        for i, a in enumerate(out):
            if not a:
                continue
            for j, b in enumerate(g):
                new[i + j] = (new[i + j] + a * b) % modulus
        out = new
    return out


def _zassenhaus_squarefree(f: IntPolynomial, rng: random.Random):
    """Irreducible factors of a primitive squarefree f (deg >= 1, lc > 0),
    plus {factor: certificate prime} for factors certified by the fast path."""
    if f.degree == 1:
        return [f], {}
    # fast path: a small-prime irreducibility certificate for f itself
    for q in DEFAULT_CERT_PRIMES:
        if f.leading % q == 0:
            continue
        if _gf_squarefree(_gf_from_int_poly(f, q), q) and irreducible_mod_p(f, q):
            return [f], {f: q}
    # choose an odd working prime with good reduction
    p = None
    candidate = 3
    while p is None:
        is_prime = all(candidate % d for d in range(2, math.isqrt(candidate) + 1))
        if is_prime and f.leading % candidate and _gf_squarefree(_gf_from_int_poly(f, candidate), candidate):
            p = candidate
        candidate += 2
    fbar = _gf_monic(_gf_from_int_poly(f, p), p)
    modular = _factor_mod_p(fbar, p, rng)
    if len(modular) == 1:
        return [f], {f: p}
    exponent = _mignotte_exponent(f, p)
    lifted, modulus = _hensel_lift(f, p, modular, exponent)

    factors = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = None
        for combo in itertools.combinations(remaining, size):
            lc = current.leading
            g_mod = _product_mod([lifted[i] for i in combo], modulus)
            g_int = IntPolynomial.of_coeffs([_symmetric(lc * c % modulus, modulus) for c in g_mod])
            h_mod = _product_mod([lifted[i] for i in remaining if i not in combo], modulus)
            h_int = IntPolynomial.of_coeffs([_symmetric(lc * c % modulus, modulus) for c in h_mod])
            if g_int * h_int == current.scale(lc):
                found = (combo, g_int.primitive_part(), h_int.primitive_part())
                break
        if found is None:
            size += 1
            continue
        combo, g, h = found
        if g.leading < 0:
            g = -g
        factors.append(g)
        current = h if h.leading > 0 else -h
        remaining = [i for i in remaining if i not in combo]
        size = 1
    if current.degree >= 1:
        factors.append(current)
    factors.sort(key=lambda q: (q.degree, q.coeffs))
    return factors, {}


@dataclass(frozen=True)
class Factorization:
    """constant * prod(factor^multiplicity) reconstructs the input exactly."""

    constant: int
    factors: tuple[tuple[IntPolynomial, int], ...]
    certificates: dict  # IntPolynomial -> prime, for fast-path certified factors

    def expand(self) -> IntPolynomial:
        out = IntPolynomial.constant(self.constant)
        for q, m in self.factors:
            out = out * q ** m
        return out


def factor_z(p: IntPolynomial) -> Factorization:
    """Complete irreducible factorization over Z.

    Factors are primitive with positive leading coefficient, sorted by
    (degree, coefficients); the integer constant carries content and sign.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    constant = p.content()
    primitive = p.primitive_part()
    rng = random.Random(repr(p.coeffs))
    collected: dict[IntPolynomial, int] = {}
    certificates: dict[IntPolynomial, int] = {}
    for sqfree, mult in squarefree_decomposition(primitive):
        irreducibles, certs = _zassenhaus_squarefree(sqfree, rng)
        certificates.update(certs)
        for q in irreducibles:
            collected[q] = collected.get(q, 0) + mult
    factors = tuple(sorted(collected.items(), key=lambda kv: (kv[0].degree, kv[0].coeffs)))
    return Factorization(constant, factors, certificates)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and the homology-level criterion
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """The d-th cyclotomic polynomial via exact division of x^d - 1."""
    if d < 1:
        raise ValueError("d must be positive")
    num = IntPolynomial.of_coeffs([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = num.divmod_exact(cyclotomic(e))[0]
    return num


def euler_phi(d: int) -> int:
    out = d
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            out -= out // f
        f += 1
    if m > 1:
        out -= out // m
    return out


def has_root_of_unity(p: IntPolynomial) -> bool:
    """True iff some cyclotomic polynomial with phi(d) <= deg p divides p."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    n = p.degree
    if n < 1:
        return False
    d = 1
    # phi(d) >= sqrt(d/2), so d <= 2n^2 bounds the search
    while d <= 2 * n * n + 1:
        if euler_phi(d) <= n and cyclotomic(d).divides(p):
            return True
        d += 1
    return False


def is_power_substitution(p: IntPolynomial) -> int | None:
    """Largest n > 1 dividing every exponent with a nonzero coefficient, else None."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    g = 0
    for i, c in enumerate(p.coeffs):
        if c and i:
            g = math.gcd(g, i)
    return g if g > 1 else None


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    prime: int
    method: str = CERTIFICATE_METHOD

    def to_json_obj(self) -> dict:
        return {"prime": self.prime, "method": self.method}


def find_certificate(q: IntPolynomial, primes=None) -> Certificate | None:
    """Smallest listed prime for which q is irreducible modulo it."""
    if q.degree < 1:
        return None
    for prime in (primes if primes is not None else DEFAULT_CERT_PRIMES):
        if q.leading % prime == 0:
            continue
        if irreducible_mod_p(q, prime):
            return Certificate(prime)
    return None


def has_even_even_split(degrees: list[int]) -> bool:
    """True iff the degree multiset splits into two nonempty parts with even sums."""
    total = sum(degrees)
    if total % 2:
        return False  # parts of an odd total cannot both be even
    for r in range(1, len(degrees)):
        for combo in itertools.combinations(range(len(degrees)), r):
            s = sum(degrees[i] for i in combo)
            if s % 2 == 0 and (total - s) % 2 == 0:
                return True
    return False


def closed_form_verdict(degrees: list[int]) -> bool:
    """Equivalent characterization for even totals: irreducible, or exactly two factors
    (with multiplicity), both of odd degree > 1."""
    if any(d == 1 for d in degrees):
        return False
    if len(degrees) == 1:
        return True
    return len(degrees) == 2 and degrees[0] % 2 == 1 and degrees[1] % 2 == 1


@dataclass(frozen=True)
class CriterionReport:
    charpoly: IntPolynomial
    factors: tuple[tuple[IntPolynomial, int], ...]
    verdict: str
    reasons: dict
    certificates: tuple  # Certificate | None, aligned with factors

    def to_json_obj(self) -> dict:
        return {
            "charpoly": self.charpoly.to_json_obj(),
            "factors": [{"poly": q.to_json_obj(), "multiplicity": m,
                         "certificate": (c.to_json_obj() if c else None)}
                        for (q, m), c in zip(self.factors, self.certificates)],
            "verdict": self.verdict,
            "reasons": self.reasons,
        }


def criterion(p: IntPolynomial, primes=None) -> CriterionReport:
    """Factor-structure verdict for a monic polynomial.

    CERTIFIED iff no irreducible factor is linear and the factor multiset
    admits no split into two nonempty parts of even total degree ("nontrivial"
    reads as a proper two-part factorization; the polynomial never counts as
    its own even factor).
    """
    if not p.is_monic():
        raise ValueError("criterion expects a monic polynomial")
    fz = factor_z(p)
    degrees = [q.degree for q, m in fz.factors for _ in range(m)]
    linear = any(d == 1 for d in degrees)
    split = has_even_even_split(degrees)
    irreducible = len(degrees) == 1
    two_odd = len(degrees) == 2 and all(d % 2 == 1 and d > 1 for d in degrees)
    verdict = CERTIFIED if (not linear and not split) else INCONCLUSIVE
    reasons = {
        "irreducible": irreducible,
        "degree_one_factor": linear,
        "even_degree_split": split,
        "two_odd_irreducible_factors": two_odd,
        "nontrivial_reading": "proper two-part factorizations only",
    }
    certs = []
    for q, _ in fz.factors:
        known = fz.certificates.get(q)
        if known is not None and (primes is None or known in primes):
            certs.append(Certificate(known))
        else:
            certs.append(find_certificate(q, primes) if q.degree >= 1 else None)
    return CriterionReport(p, fz.factors, verdict, reasons, tuple(certs))


@dataclass(frozen=True)
class HomologyCriterionReport:
    charpoly: IntPolynomial
    irreducible: bool
    root_of_unity: bool
    power_substitution: int | None
    verdict: str
    certificate: Certificate | None

    def to_json_obj(self) -> dict:
        return {
            "charpoly": self.charpoly.to_json_obj(),
            "irreducible": self.irreducible,
            "root_of_unity": self.root_of_unity,
            "power_substitution": self.power_substitution,
            "verdict": self.verdict,
            "certificate": self.certificate.to_json_obj() if self.certificate else None,
        }


def casson_bleiler(m: IntMatrix, primes=None) -> HomologyCriterionReport:
    """Homology-level sufficient test: irreducible charpoly, no roots of unity,
    and not a polynomial in x^n for n > 1."""
    chi = charpoly(m)
    cert = find_certificate(chi, primes)
    if cert is not None:
        irreducible = True
    else:
        fz = factor_z(chi)
        irreducible = len(fz.factors) == 1 and fz.factors[0][1] == 1
    unity = has_root_of_unity(chi)
    power = is_power_substitution(chi)
    verdict = CERTIFIED if (irreducible and not unity and power is None) else INCONCLUSIVE
    return HomologyCriterionReport(chi, irreducible, unity, power, verdict, cert)
