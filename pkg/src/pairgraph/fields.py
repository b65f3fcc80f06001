"""Arithmetic in small finite fields F_{p^k}.

Field elements are packed integers: the element with polynomial coordinates
(c_0, c_1, ..., c_{k-1}) over F_p is the index c_0 + c_1*p + ... + c_{k-1}*p^(k-1).
The prime field therefore occupies the indices 0..p-1.

The reducing polynomial per (p, k) is the Conway polynomial where we carry it
in the table below, and otherwise the lexicographically first monic irreducible
polynomial of degree k (ordered by packed index of the non-leading
coefficients).  The chosen polynomial is exposed via ``PrimePowerField.modulus``
so that constructions are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError

# Conway polynomials, coefficients ascending (constant term first), monic.
CONWAY_POLYNOMIALS = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num by the monic polynomial den, coefficients mod p."""
    num = [c % p for c in num]
    deg_den = len(den) - 1
    while len(num) > deg_den:
        lead = num[-1]
        if lead:
            shift = len(num) - 1 - deg_den
            for i, c in enumerate(den[:-1]):
                num[shift + i] = (num[shift + i] - lead * c) % p
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for packed in range(p**d):
            den = _unpack(packed, d, p) + [1]
            if _poly_mod(list(poly), tuple(den), p) == [0]:
                return False
    # degree-1 factors were covered above for deg >= 2; deg 1 is irreducible
    return True


def _unpack(value: int, k: int, p: int) -> list[int]:
    digits = []
    for _ in range(k):
        value, r = divmod(value, p)
        digits.append(r)
    return digits


def _pack(digits, p: int) -> int:
    out = 0
    for c in reversed(list(digits)):
        out = out * p + c
    return out


def reducing_polynomial(p: int, k: int) -> tuple[int, ...]:
    """The fixed monic irreducible used to realize F_{p^k}."""
    if (p, k) in CONWAY_POLYNOMIALS:
        return CONWAY_POLYNOMIALS[(p, k)]
    for packed in range(p**k):
        cand = tuple(_unpack(packed, k, p) + [1])
        if _is_irreducible(cand, p):
            return cand
    raise ValidationError(f"no irreducible polynomial found for p={p}, k={k}")


@dataclass(frozen=True)
class PrimePowerField:
    """F_{p^k} with packed-integer elements and full field arithmetic."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _xpow: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @classmethod
    def create(cls, p: int, k: int) -> "PrimePowerField":
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if k < 1:
            raise ValidationError("extension degree must be >= 1")
        modulus = reducing_polynomial(p, k)
        # representatives of x^j for j = 0 .. 2k-2, reduced mod the modulus
        xpow = []
        for j in range(2 * k - 1):
            mono = [0] * j + [1]
            rem = _poly_mod(mono, modulus, p)
            rem += [0] * (k - len(rem))
            xpow.append(tuple(rem[:k]))
        return cls(p=p, k=k, modulus=modulus, _xpow=tuple(xpow))

    @property
    def order(self) -> int:
        return self.p**self.k

    def digits(self, a: int) -> list[int]:
        return _unpack(a, self.k, self.p)

    def pack(self, digits) -> int:
        return _pack(digits, self.p)

    def add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        return self.pack((x + y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self.pack((-x) % self.p for x in self.digits(a))

    def mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        conv = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        out = [0] * self.k
        for j, c in enumerate(conv):
            if c % self.p:
                rep = self._xpow[j]
                for i in range(self.k):
                    out[i] += c * rep[i]
        return self.pack(c % self.p for c in out)

    def pow(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def norm(self, a: int) -> int:
        """Norm down to the prime field: x^((p^k-1)/(p-1)), with norm(0) = 0."""
        if a == 0:
            return 0
        e = (self.order - 1) // (self.p - 1)
        value = self.pow(a, e)
        digits = self.digits(value)
        if any(digits[1:]):
            raise ValidationError("norm did not land in the prime field")
        return digits[0]

    def label(self, a: int) -> str:
        digits = self.digits(a)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = digits[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("a" if c == 1 else f"{c}a")
            else:
                terms.append(f"a^{i}" if c == 1 else f"{c}a^{i}")
        return "+".join(terms) if terms else "0"
