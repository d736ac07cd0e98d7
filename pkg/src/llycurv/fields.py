"""Finite field arithmetic GF(p^m) with a canonical modulus.

Elements are coefficient vectors over GF(p), constant term first.  The
modulus is pinned to the first monic irreducible of its degree in a fixed
enumeration (constant term varying fastest), so element numbering, and
therefore every graph built on top, is reproducible: GF(9) always uses
t^2 + 1 and GF(25) always t^2 + 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import NotPrimeError, TooLargeError

_FIELD_BOUND = 2**32

Poly = tuple[int, ...]  # low-degree-first, no trailing zeros


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _trim(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_mulmod(a: Poly, b: Poly, modulus: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, modulus, p)


def _poly_mod(coeffs: list[int], modulus: Poly, p: int) -> Poly:
    m = len(modulus) - 1  # modulus is monic of degree m
    for i in range(len(coeffs) - 1, m - 1, -1):
        c = coeffs[i] % p
        if c:
            coeffs[i] = 0
            for j in range(m):
                coeffs[i - m + j] = (coeffs[i - m + j] - c * modulus[j]) % p
    return _trim([c % p for c in coeffs[:m]] if len(coeffs) >= m else [c % p for c in coeffs])


def _poly_powmod(base: Poly, exp: int, modulus: Poly, p: int) -> Poly:
    result: Poly = (1,)
    b = _poly_mod(list(base), modulus, p)
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, b, modulus, p)
        b = _poly_mulmod(b, b, modulus, p)
        exp >>= 1
    return result


def _poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        # a mod b with b made monic on the fly
        inv_lead = pow(b[-1], p - 2, p)
        bb = tuple((c * inv_lead) % p for c in b)
        r = list(a)
        while len(r) >= len(bb) and _trim(list(r)):
            r = list(_trim(r))
            if len(r) < len(bb):
                break
            c = r[-1]
            shift = len(r) - len(bb)
            for j, bj in enumerate(bb):
                r[shift + j] = (r[shift + j] - c * bj) % p
            r = list(_trim(r))
        a, b = b, _trim(r)
    return a


def _is_irreducible(modulus: Poly, p: int) -> bool:
    """Rabin's test: x^(p^m) = x mod f, and gcd(x^(p^(m/r)) - x, f) = 1."""
    m = len(modulus) - 1
    if m < 1:
        return False
    x: Poly = (0, 1)
    if _poly_powmod(x, p**m, modulus, p) != _poly_mod(list(x), modulus, p):
        return False
    for r in _prime_divisors(m):
        h = _poly_powmod(x, p ** (m // r), modulus, p)
        diff = _poly_sub(h, _poly_mod(list(x), modulus, p), p)
        if len(_poly_gcd(modulus, diff, p)) > 1:
            return False
    return True


def _poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _canonical_modulus(p: int, m: int) -> Poly:
    """First monic irreducible of degree m, varying the constant term fastest.

    The resulting order tries t^m + c before t^m + t + c and so on, which
    pins GF(9) to t^2 + 1 and GF(25) to t^2 + 2.
    """
    if m == 1:
        return (0, 1)  # the polynomial t; arithmetic is plain mod p
    counters = [0] * m
    while True:
        candidate = tuple(counters) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
        for i in range(m):
            counters[i] += 1
            if counters[i] < p:
                break
            counters[i] = 0
        else:  # wrapped around without finding one; cannot happen
            raise AssertionError(f"no irreducible of degree {m} over GF({p})")


@dataclass(frozen=True)
class FieldElement:
    """Element of GF(p^m) as a length-m coefficient tuple, constant first."""

    field: "FiniteField"
    coeffs: tuple[int, ...]

    def __add__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        return FieldElement(f, tuple((a + b) % f.p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        return FieldElement(f, tuple((a - b) % f.p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        f = self.field
        return FieldElement(f, tuple((-a) % f.p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        f = self.field
        prod = _poly_mulmod(_trim(list(self.coeffs)), _trim(list(other.coeffs)), f.modulus, f.p)
        return FieldElement(f, f._pad(prod))

    def __pow__(self, exp: int) -> "FieldElement":
        f = self.field
        if exp < 0:
            raise ValueError("negative exponents unsupported; use a ** (q - 2) for inverses")
        out = _poly_powmod(_trim(list(self.coeffs)), exp, f.modulus, f.p)
        return FieldElement(f, f._pad(out))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def index(self) -> int:
        """Canonical numbering: constant term most significant."""
        val = 0
        for c in self.coeffs:
            val = val * self.field.p + c
        return val

    def __repr__(self) -> str:
        return f"FieldElement{self.coeffs}"


@dataclass(frozen=True)
class FiniteField:
    """GF(p^m) with the canonical modulus; build via make_field()."""

    p: int
    m: int
    modulus: Poly

    @property
    def q(self) -> int:
        return self.p**self.m

    def _pad(self, coeffs: Poly) -> tuple[int, ...]:
        return tuple(coeffs) + (0,) * (self.m - len(coeffs))

    def element(self, coeffs: tuple[int, ...] | list[int] | int) -> FieldElement:
        if isinstance(coeffs, int):
            if self.m == 1:
                return FieldElement(self, (coeffs % self.p,))
            raise ValueError("integer construction only valid for prime fields")
        vec = tuple(c % self.p for c in coeffs)
        if len(vec) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(vec)}")
        return FieldElement(self, vec)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def from_index(self, i: int) -> FieldElement:
        if not (0 <= i < self.q):
            raise ValueError(f"index {i} out of range for GF({self.q})")
        digits = []
        for _ in range(self.m):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(reversed(digits)))

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in canonical index order."""
        for i in range(self.q):
            yield self.from_index(i)

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FiniteField:
    """Construct GF(p^m) with the canonical (smallest) irreducible modulus."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if m < 1:
        raise TooLargeError(f"extension degree must be >= 1, got {m}")
    if p**m > _FIELD_BOUND:
        raise TooLargeError(f"field order {p}^{m} exceeds bound {_FIELD_BOUND}")
    return FiniteField(p=p, m=m, modulus=_canonical_modulus(p, m))


def is_nonzero_square(field: FiniteField, a: FieldElement) -> bool:
    """Euler criterion: a != 0 and a^((q-1)/2) = 1."""
    if a.is_zero:
        return False
    if field.q % 2 == 0:
        return True  # every element of a characteristic-2 field is a square
    return a ** ((field.q - 1) // 2) == field.one
