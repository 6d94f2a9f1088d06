"""Polynomials over Z4 and over Z4 + u*Z4, and the factorization of x^n - 1.

Coefficient lists are dense and ascending (index i holds the coefficient of
x^i) with trailing zeros trimmed; the zero polynomial has an empty list and
degree None.  The text grammar is the bracket form "[c0,c1,...]": Z4 entries
are integers, ring entries are "a+bu" or "(a,b)", e.g. "[3,1]" is x+3 and
"[(1,0),(1,1)]" is 1 + (1+u)x.

x^n - 1 (n odd) is factored mod 2 into irreducibles via cyclotomic cosets and
minimal polynomials over GF(2^m), then each factor is lifted to Z4 by one
Graeffe step: f(x)*f(-x) is a polynomial in x^2, and substituting y for x^2
(with the sign fixed to keep the result monic) gives the unique monic lift.
The product of the lifts is checked against x^n - 1 before returning.
"""

from __future__ import annotations

import functools
import re

from .ring import ONE, UNITS, ZERO, RingElement

#: Default bound on the code length n accepted by the factor routines.
#: Enumeration cost downstream grows fast; callers may pass a larger bound.
MAX_N_DEFAULT = 31

Z4_UNITS = (1, 3)


def _split_bracket_list(text: str) -> list[str]:
    """Split "[a,b,...]" on top-level commas, tolerating "(a,b)" entries."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected a bracketed coefficient list: {text!r}")
    inner = s[1:-1].strip()
    if not inner:
        return []
    parts: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    return [p.strip() for p in parts]


class PolyZ4:
    """A polynomial with coefficients in Z4."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: "list[int] | tuple[int, ...]" = ()) -> None:
        cs = [c % 4 for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyZ4 is immutable")

    @classmethod
    def from_string(cls, text: str) -> "PolyZ4":
        return cls([int(p) for p in _split_bracket_list(text)])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "PolyZ4":
        return cls([0] * degree + [coeff])

    @classmethod
    def xn_minus_1(cls, n: int) -> "PolyZ4":
        return cls([3] + [0] * (n - 1) + [1])

    # -- basic structure ------------------------------------------------------

    @property
    def degree(self) -> "int | None":
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyZ4) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("PolyZ4", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"PolyZ4({list(self.coeffs)})"

    def to_power_str(self, var: str = "x", signed: bool = False) -> str:
        return _power_str(self.coeffs, var, signed=signed)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "PolyZ4") -> "PolyZ4":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % 4
        return PolyZ4(out)

    def __neg__(self) -> "PolyZ4":
        return PolyZ4([-c for c in self.coeffs])

    def __sub__(self, other: "PolyZ4") -> "PolyZ4":
        return self + (-other)

    def __mul__(self, other: "PolyZ4 | int") -> "PolyZ4":
        if isinstance(other, int):
            return PolyZ4([c * other for c in self.coeffs])
        if not isinstance(other, PolyZ4):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyZ4()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + ci * cj) % 4
        return PolyZ4(out)

    def __rmul__(self, other: int) -> "PolyZ4":
        return self * other

    def divmod_monic(self, divisor: "PolyZ4") -> "tuple[PolyZ4, PolyZ4]":
        """Long division by a monic divisor; returns (quotient, remainder)."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not divisor.is_monic:
            raise ValueError(f"divisor must be monic, got {divisor}")
        dd = divisor.degree
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return PolyZ4(), self
        q = [0] * (len(rem) - dd)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd]
            if c:
                q[k] = c
                for j, dj in enumerate(divisor.coeffs):
                    rem[k + j] = (rem[k + j] - c * dj) % 4
        return PolyZ4(q), PolyZ4(rem)

    def divides(self, other: "PolyZ4") -> bool:
        """True iff self (monic) divides other exactly over Z4."""
        return other.divmod_monic(self)[1].is_zero

    def divides_mod2(self, other: "PolyZ4") -> bool:
        """True iff self divides other after reducing both mod 2."""
        d2 = self.reduce_mod2()
        if d2 == 0:
            raise ValueError(f"{self} vanishes mod 2")
        return bpoly_mod(other.reduce_mod2(), d2) == 0

    def mod_xn_minus_1(self, n: int) -> "PolyZ4":
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = (out[i % n] + c) % 4
        return PolyZ4(out)

    def reciprocal(self) -> "PolyZ4":
        """x^deg(f) * f(1/x): the coefficient sequence reversed (0 -> 0)."""
        return PolyZ4(list(reversed(self.coeffs)))

    def self_reciprocal_witness(self) -> "int | None":
        """The unit m with reciprocal(f) = m*f, or None if there is none."""
        rec = self.reciprocal()
        for m in Z4_UNITS:
            if rec == self * m:
                return m
        return None

    @property
    def is_self_reciprocal(self) -> bool:
        return self.self_reciprocal_witness() is not None

    def reduce_mod2(self) -> int:
        """The mod-2 image as a little-endian bitmask integer."""
        mask = 0
        for i, c in enumerate(self.coeffs):
            if c % 2:
                mask |= 1 << i
        return mask

    def to_ring_poly(self) -> "PolyR":
        return PolyR([RingElement(c, 0) for c in self.coeffs])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % 4
        return acc


class PolyR:
    """A polynomial with coefficients in Z4 + u*Z4."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: "list[RingElement] | tuple[RingElement, ...]" = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == ZERO:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PolyR is immutable")

    @classmethod
    def from_string(cls, text: str) -> "PolyR":
        return cls([RingElement.from_string(p) for p in _split_bracket_list(text)])

    @classmethod
    def monomial(cls, degree: int, coeff: RingElement = ONE) -> "PolyR":
        return cls([ZERO] * degree + [coeff])

    @property
    def degree(self) -> "int | None":
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyR) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("PolyR", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"PolyR.from_string({str(self)!r})"

    def to_power_str(self, var: str = "x") -> str:
        return _power_str(self.coeffs, var, signed=False)

    def __add__(self, other: "PolyR") -> "PolyR":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyR(out)

    def __neg__(self) -> "PolyR":
        return PolyR([-c for c in self.coeffs])

    def __sub__(self, other: "PolyR") -> "PolyR":
        return self + (-other)

    def __mul__(self, other: "PolyR | RingElement | int") -> "PolyR":
        if isinstance(other, (RingElement, int)):
            return PolyR([c * other for c in self.coeffs])
        if not isinstance(other, PolyR):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return PolyR()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + ci * cj
        return PolyR(out)

    def __rmul__(self, other: "RingElement | int") -> "PolyR":
        return self * other

    def divmod_monic(self, divisor: "PolyR") -> "tuple[PolyR, PolyR]":
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if not divisor.is_monic:
            raise ValueError(f"divisor must be monic, got {divisor}")
        dd = divisor.degree
        rem = list(self.coeffs)
        if len(rem) <= dd:
            return PolyR(), self
        q = [ZERO] * (len(rem) - dd)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd]
            if c:
                q[k] = c
                for j, dj in enumerate(divisor.coeffs):
                    rem[k + j] = rem[k + j] - c * dj
        return PolyR(q), PolyR(rem)

    def divides(self, other: "PolyR") -> bool:
        return other.divmod_monic(self)[1].is_zero

    def mod_xn_minus_1(self, n: int) -> "PolyR":
        out = [ZERO] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] = out[i % n] + c
        return PolyR(out)

    def reciprocal(self) -> "PolyR":
        """x^deg(f) * f(1/x): the coefficient sequence reversed (0 -> 0)."""
        return PolyR(list(reversed(self.coeffs)))

    def self_reciprocal_witness(self) -> "RingElement | None":
        rec = self.reciprocal()
        for m in UNITS:
            if rec == self * m:
                return m
        return None

    @property
    def is_self_reciprocal(self) -> bool:
        return self.self_reciprocal_witness() is not None


def _power_str(coeffs, var: str, signed: bool) -> str:
    if not coeffs:
        return "0"
    terms: list[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        neg = signed and c == 3
        mag = 1 if neg else c
        if i == 0:
            # Parenthesize two-term ring constants so sums stay unambiguous.
            body = f"({mag})" if "+" in str(mag) else str(mag)
        else:
            xpow = var if i == 1 else f"{var}^{i}"
            if isinstance(mag, RingElement):
                body = xpow if mag == ONE else f"({mag}){xpow}"
            else:
                body = xpow if mag == 1 else f"{mag}{xpow}"
        if not terms:
            terms.append(f"-{body}" if neg else body)
        else:
            terms.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(terms)


# -- binary polynomials as little-endian bitmask integers ----------------------


def bpoly_degree(f: int) -> int:
    if f <= 0:
        raise ValueError("degree of the zero polynomial is undefined")
    return f.bit_length() - 1


def bpoly_mul(f: int, g: int) -> int:
    r = 0
    while g:
        if g & 1:
            r ^= f
        g >>= 1
        f <<= 1
    return r


def bpoly_mod(f: int, d: int) -> int:
    if d <= 0:
        raise ValueError("division by the zero polynomial")
    dd = bpoly_degree(d)
    while f and bpoly_degree(f) >= dd:
        f ^= d << (bpoly_degree(f) - dd)
    return f


def bpoly_gcd(f: int, g: int) -> int:
    while g:
        f, g = g, bpoly_mod(f, g)
    return f


def bpoly_mulmod(f: int, g: int, m: int) -> int:
    return bpoly_mod(bpoly_mul(f, g), m)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def bpoly_is_irreducible(f: int) -> bool:
    """Irreducibility over GF(2) via the x^(2^k) = x criterion."""
    if f <= 1:
        return False
    m = bpoly_degree(f)
    if m == 0:
        return False
    x = bpoly_mod(0b10, f)
    h = x
    for _ in range(m):
        h = bpoly_mulmod(h, h, f)
    if h != x:
        return False
    for p in _prime_factors(m):
        h = x
        for _ in range(m // p):
            h = bpoly_mulmod(h, h, f)
        if bpoly_gcd(h ^ x, f) != 1:
            return False
    return True


def bpoly_to_poly(f: int) -> PolyZ4:
    return PolyZ4([(f >> i) & 1 for i in range(f.bit_length())])


# -- GF(2^m) ------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _gf2m_modulus(m: int) -> int:
    """The first irreducible degree-m binary polynomial in numeric order."""
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return 0b10
    for k in range(1, 1 << m, 2):
        f = (1 << m) | k
        if bpoly_is_irreducible(f):
            return f
    raise AssertionError("unreachable: no irreducible polynomial found")


def _gf_pow(a: int, e: int, mod: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = bpoly_mulmod(r, a, mod)
        a = bpoly_mulmod(a, a, mod)
        e >>= 1
    return r


def multiplicative_order_of_two(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    if n == 1:
        return 1  # mod 1 everything is 1 already
    m, t = 1, 2 % n
    while t != 1:
        t = (t * 2) % n
        m += 1
    return m


def cyclotomic_cosets(n: int) -> list[list[int]]:
    """The 2-cyclotomic cosets mod n, each sorted, ordered by leader."""
    seen = [False] * n
    cosets = []
    for s in range(n):
        if seen[s]:
            continue
        orbit = []
        t = s
        while not seen[t]:
            seen[t] = True
            orbit.append(t)
            t = (t * 2) % n
        cosets.append(sorted(orbit))
    return cosets


def _check_n(n: int, max_n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the configured bound {max_n}")


@functools.lru_cache(maxsize=None)
def _factor_mod2_masks(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0b11,)
    m = multiplicative_order_of_two(n)
    mod = _gf2m_modulus(m)
    group_order = (1 << m) - 1
    cofactor = group_order // n
    alpha = 0
    for g in range(2, 1 << m):
        cand = _gf_pow(g, cofactor, mod)
        if cand == 1:
            continue
        if all(_gf_pow(cand, n // p, mod) != 1 for p in _prime_factors(n)):
            alpha = cand
            break
    assert alpha, "no primitive n-th root of unity found"

    masks = []
    for coset in cyclotomic_cosets(n):
        # minimal polynomial: product of (x + alpha^i) over the coset
        poly = [1]
        for i in coset:
            root = _gf_pow(alpha, i, mod)
            nxt = [0] * (len(poly) + 1)
            for j, cj in enumerate(poly):
                nxt[j] ^= bpoly_mulmod(root, cj, mod)
                nxt[j + 1] ^= cj
            poly = nxt
        assert all(c in (0, 1) for c in poly), "coefficients left the base field"
        masks.append(sum(c << j for j, c in enumerate(poly)))

    masks.sort(key=lambda f: (bpoly_degree(f), bpoly_to_poly(f).coeffs))
    product = 1
    for f in masks:
        product = bpoly_mul(product, f)
    assert product == (1 << n) | 1, "factor product is not x^n + 1 mod 2"
    return tuple(masks)


def factor_xn_minus_1_mod2(n: int, max_n: int = MAX_N_DEFAULT) -> list[PolyZ4]:
    """The irreducible factors of x^n - 1 over GF(2), n odd.

    Returned as 0/1-coefficient polynomials sorted by (degree, ascending
    coefficient list).  n odd makes x^n - 1 squarefree mod 2, so the
    factorization is the set of minimal polynomials of the n-th roots of
    unity, one per cyclotomic coset.
    """
    _check_n(n, max_n)
    return [bpoly_to_poly(f) for f in _factor_mod2_masks(n)]


def graeffe_lift(f2: PolyZ4, n: "int | None" = None, max_n: int = MAX_N_DEFAULT) -> PolyZ4:
    """The monic Hensel lift to Z4 of an irreducible factor of x^n - 1 mod 2.

    One Graeffe step: with f read over Z4, f(x)*f(-x) has only even-degree
    terms; substituting y for x^2 and normalizing the sign gives the monic
    lift g with g = f mod 2.
    """
    if f2.is_zero:
        raise ValueError("cannot lift the zero polynomial")
    if any(c not in (0, 1) for c in f2.coeffs):
        raise ValueError(f"expected a 0/1-coefficient polynomial, got {f2}")
    if n is not None:
        _check_n(n, max_n)
        if bpoly_mod((1 << n) | 1, f2.reduce_mod2()) != 0:
            raise ValueError(f"{f2} does not divide x^{n} - 1 mod 2")
    f_neg = PolyZ4([c if i % 2 == 0 else -c for i, c in enumerate(f2.coeffs)])
    h = f2 * f_neg
    assert all(c == 0 for c in h.coeffs[1::2]), "Graeffe product has odd terms"
    g = PolyZ4(h.coeffs[0::2])
    if g.coeffs[-1] == 3:
        g = -g
    assert g.is_monic, "Graeffe lift failed to normalize to monic"
    return g


@functools.lru_cache(maxsize=None)
def _factor_z4_cached(n: int) -> tuple[PolyZ4, ...]:
    factors = [graeffe_lift(f2) for f2 in factor_xn_minus_1_mod2(n, max_n=n)]
    factors.sort(key=lambda f: (f.degree, f.coeffs))
    product = PolyZ4([1])
    for f in factors:
        product = product * f
    assert product == PolyZ4.xn_minus_1(n), "lift product is not x^n - 1 over Z4"
    return tuple(factors)


def factor_xn_minus_1_z4(n: int, max_n: int = MAX_N_DEFAULT) -> list[PolyZ4]:
    """The monic basic-irreducible factorization of x^n - 1 over Z4, n odd.

    Each factor is the Hensel lift of one irreducible mod-2 factor; the
    product over all factors is verified to equal x^n - 1 before returning.
    Sorted by (degree, ascending coefficient list).
    """
    _check_n(n, max_n)
    return list(_factor_z4_cached(n))


def all_monic_divisors(n: int, max_n: int = MAX_N_DEFAULT) -> list[PolyZ4]:
    """All monic divisors of x^n - 1 over Z4 built as subset products of
    the basic-irreducible factors (1 included, x^n - 1 included)."""
    factors = factor_xn_minus_1_z4(n, max_n=max_n)
    divisors = [PolyZ4([1])]
    for f in factors:
        divisors += [d * f for d in divisors]
    divisors.sort(key=lambda d: (d.degree, d.coeffs))
    return divisors
