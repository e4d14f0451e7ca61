"""Exact coefficient fields: F_p, F_{p^k} and Q.

Field values are stored raw so the polynomial layers can keep them in plain
dicts and lists: an ``int`` in ``[0, p)`` for a prime field, a tuple of ints
(highest degree first, galoistools convention) for an extension, a
``Fraction`` for Q. :class:`FieldSpec` owns the arithmetic on raw values and
:class:`FieldElement` wraps one value with operators for callers that want
them.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Any, Iterator, Optional, Sequence, Tuple

from sympy import integer_nthroot, isprime, perfect_power
from sympy.ntheory.residue_ntheory import nthroot_mod
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_from_int_poly,
    gf_gcdex,
    gf_irreducible_p,
    gf_mul,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_sub,
)

from planebranch.utils.errors import (
    DivisionByZero,
    FieldMismatch,
    FieldSpecError,
    NoRootInField,
    UnsupportedInCharZero,
)

logger = logging.getLogger(__name__)

_FIELD_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)\s*$", re.IGNORECASE)

# Brute-force root search is only attempted below this field size
_BRUTE_FORCE_LIMIT = 200_000


def lowest_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Lowest monic irreducible of degree k over F_p in lexicographic order"""
    for n in range(p**k):
        digits = []
        for _ in range(k):
            n, r = divmod(n, p)
            digits.append(r)
        candidate = [1] + digits[::-1]
        if gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise FieldSpecError(f"GF({p}^{k})", "no irreducible modulus found")


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int
    extension_degree: int = 1
    modulus: Optional[Tuple[int, ...]] = field(default=None)

    def __post_init__(self):
        p, k = self.characteristic, self.extension_degree
        if p == 0:
            object.__setattr__(self, "extension_degree", 1)
            object.__setattr__(self, "modulus", None)
            return
        if not isprime(p):
            raise FieldSpecError(str(p), "characteristic must be 0 or a prime")
        if k < 1:
            raise FieldSpecError(f"GF({p}^{k})", "extension degree must be positive")
        if k == 1:
            object.__setattr__(self, "modulus", None)
            return
        if self.modulus is None:
            object.__setattr__(self, "modulus", lowest_irreducible(p, k))
        else:
            mod = tuple(c % p for c in self.modulus)
            if len(mod) != k + 1 or mod[0] != 1 or not gf_irreducible_p(list(mod), p, ZZ):
                raise FieldSpecError(f"GF({p}^{k})", "modulus is not a monic irreducible of the stated degree")
            object.__setattr__(self, "modulus", mod)

    # Construction

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Read "GF(p)", "GF(p^k)", "GF(q)" or "QQ" """
        stripped = text.strip()
        if stripped.upper() in ("QQ", "Q"):
            return cls(0)
        match = _FIELD_RE.match(stripped)
        if not match:
            raise FieldSpecError(text, "expected GF(p), GF(p^k) or QQ")
        base = int(match.group(1))
        k = int(match.group(2)) if match.group(2) else 1
        if not isprime(base):
            power = perfect_power(base)
            if not power or not isprime(power[0]) or match.group(2):
                raise FieldSpecError(text, f"{base} is not a prime power")
            base, k = power
        return cls(base, k)

    def with_extension(self, degree: int) -> "FieldSpec":
        if self.characteristic == 0:
            raise UnsupportedInCharZero("extension escalation")
        return FieldSpec(self.characteristic, degree)

    # Shape

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic > 0 and self.extension_degree == 1

    @property
    def is_extension(self) -> bool:
        return self.characteristic > 0 and self.extension_degree > 1

    @property
    def order(self) -> int:
        """Number of elements, 0 for Q"""
        if self.characteristic == 0:
            return 0
        return self.characteristic**self.extension_degree

    @property
    def zero(self) -> Any:
        if self.characteristic == 0:
            return Fraction(0)
        return () if self.is_extension else 0

    @property
    def one(self) -> Any:
        if self.characteristic == 0:
            return Fraction(1)
        return (1,) if self.is_extension else 1

    def __str__(self) -> str:
        if self.characteristic == 0:
            return "QQ"
        if self.extension_degree == 1:
            return f"GF({self.characteristic})"
        return f"GF({self.characteristic}^{self.extension_degree})"

    # Conversion

    def from_int(self, n: int) -> Any:
        p = self.characteristic
        if p == 0:
            return Fraction(n)
        if self.is_extension:
            r = n % p
            return (r,) if r else ()
        return n % p

    def from_fraction(self, value: Fraction) -> Any:
        if self.characteristic == 0:
            return Fraction(value)
        den = self.from_int(value.denominator)
        return self.div(self.from_int(value.numerator), den)

    def from_coefficients(self, coeffs: Sequence[int]) -> Any:
        """Element given by an integer polynomial in the generator u, highest degree first"""
        if not self.is_extension:
            if any(self.from_int(c) for c in coeffs[:-1]):
                raise FieldSpecError(str(self), "the generator u only exists in a proper extension")
            return self.from_int(coeffs[-1]) if coeffs else self.zero
        p = self.characteristic
        return tuple(gf_rem(gf_from_int_poly(list(coeffs), p), list(self.modulus), p, ZZ))

    def generator(self) -> Any:
        if not self.is_extension:
            raise FieldSpecError(str(self), "the generator u only exists in a proper extension")
        return self.from_coefficients([1, 0])

    def element(self, value: Any) -> "FieldElement":
        return FieldElement(self, value)

    def to_str(self, a: Any) -> str:
        if not self.is_extension:
            return str(a)
        if not a:
            return "0"
        k = len(a) - 1
        parts = []
        for i, c in enumerate(a):
            e = k - i
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                mono = "u" if e == 1 else f"u^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        text = "+".join(parts)
        return text if len(parts) == 1 and "+" not in text else f"({text})"

    # Arithmetic on raw values

    def is_zero(self, a: Any) -> bool:
        return not a

    def add(self, a: Any, b: Any) -> Any:
        if self.is_extension:
            return tuple(gf_add(list(a), list(b), self.characteristic, ZZ))
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        if self.is_extension:
            return tuple(gf_sub(list(a), list(b), self.characteristic, ZZ))
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Any) -> Any:
        if self.is_extension:
            return tuple(gf_neg(list(a), self.characteristic, ZZ))
        if self.characteristic:
            return (-a) % self.characteristic
        return -a

    def mul(self, a: Any, b: Any) -> Any:
        if self.is_extension:
            if not a or not b:
                return ()
            p = self.characteristic
            return tuple(gf_rem(gf_mul(list(a), list(b), p, ZZ), list(self.modulus), p, ZZ))
        if self.characteristic:
            return (a * b) % self.characteristic
        return a * b

    def inv(self, a: Any) -> Any:
        if not a:
            raise DivisionByZero(str(self))
        if self.is_extension:
            return tuple(gf_gcdex(list(a), list(self.modulus), self.characteristic, ZZ)[0])
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def pow(self, a: Any, n: int) -> Any:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if self.is_extension:
            if n == 0:
                return (1,)
            p = self.characteristic
            return tuple(gf_pow_mod(list(a), n, list(self.modulus), p, ZZ))
        if self.characteristic:
            return pow(a, n, self.characteristic)
        return a**n

    def scale_int(self, a: Any, n: int) -> Any:
        return self.mul(a, self.from_int(n))

    # Roots

    def frobenius_root(self, a: Any) -> Any:
        """b with b^p = a, i.e. a^(p^(k-1))"""
        if self.characteristic == 0:
            raise UnsupportedInCharZero("frobenius_root")
        if not self.is_extension:
            return a
        return self.pow(a, self.characteristic ** (self.extension_degree - 1))

    def has_nth_root(self, a: Any, n: int) -> bool:
        if not a or n == 1:
            return True
        if self.characteristic == 0:
            try:
                self.nth_root(a, n)
            except NoRootInField:
                return False
            return True
        q = self.order
        n_free = n
        while n_free % self.characteristic == 0:
            n_free //= self.characteristic

        g = gcd(n_free, q - 1)
        return self.pow(a, (q - 1) // g) == self.one

    def minimal_root_extension(self, a: Any, n: int) -> Optional[int]:
        """Smallest multiple m*k of the extension degree over which a has an n-th root"""
        if self.characteristic == 0:
            return None

        p, k = self.characteristic, self.extension_degree
        n_free = n
        while n_free % p == 0:
            n_free //= p
        for m in range(1, 64):
            big = p ** (k * m) - 1
            g = gcd(n_free, big)
            # a lies in the subfield, so exponentiate in it modulo q - 1
            exponent = (big // g) % (self.order - 1)
            if self.pow(a, exponent) == self.one:
                return k * m
        return None

    def nth_root(self, a: Any, n: int) -> Any:
        """Some b with b^n = a, or NoRootInField with the extension that would have one"""
        if n < 1:
            raise ValueError("root index must be positive")
        if not a or n == 1:
            return a
        p = self.characteristic
        if p == 0:
            return self._rational_root(a, n)
        while n % p == 0:
            a = self.frobenius_root(a)
            n //= p
        if n == 1:
            return a
        if not self.has_nth_root(a, n):
            raise NoRootInField(n, str(self), self.minimal_root_extension(a, n))
        if self.is_prime_field:
            root = nthroot_mod(a, n, p)
            if root is None:
                raise NoRootInField(n, str(self), self.minimal_root_extension(a, n))
            return int(root) % p

        q1 = self.order - 1
        if gcd(n, q1) == 1:
            return self.pow(a, pow(n, -1, q1))
        if self.order > _BRUTE_FORCE_LIMIT:
            raise NoRootInField(n, str(self))
        for b in self.elements():
            if self.pow(b, n) == a:
                return b
        raise NoRootInField(n, str(self), self.minimal_root_extension(a, n))

    def _rational_root(self, a: Fraction, n: int) -> Fraction:
        sign = 1
        if a < 0:
            if n % 2 == 0:
                raise NoRootInField(n, str(self))
            sign, a = -1, -a
        num, exact_num = integer_nthroot(a.numerator, n)
        den, exact_den = integer_nthroot(a.denominator, n)
        if not (exact_num and exact_den):
            raise NoRootInField(n, str(self))
        return Fraction(sign * num, den)

    # Enumeration

    def elements(self) -> Iterator[Any]:
        if self.characteristic == 0:
            raise UnsupportedInCharZero("element enumeration")
        p = self.characteristic
        if not self.is_extension:
            yield from range(p)
            return
        for digits in product(range(p), repeat=self.extension_degree):
            i = 0
            while i < len(digits) and digits[i] == 0:
                i += 1
            yield tuple(digits[i:])

    def random_element(self, rng, nonzero: bool = False) -> Any:
        while True:
            if self.characteristic == 0:
                value = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
            elif self.is_extension:
                digits = [rng.randrange(self.characteristic) for _ in range(self.extension_degree)]
                value = self.from_coefficients(digits)
            else:
                value = rng.randrange(self.characteristic)
            if value or not nonzero:
                return value


@dataclass(frozen=True)
class FieldElement:
    owner: FieldSpec
    value: Any

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.owner != self.owner:
            raise FieldMismatch(str(self.owner), str(other.owner))

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.div(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.owner, self.owner.pow(self.value, n))

    def __bool__(self) -> bool:
        return bool(self.value)

    def frobenius_root(self) -> "FieldElement":
        return FieldElement(self.owner, self.owner.frobenius_root(self.value))

    def __str__(self) -> str:
        return self.owner.to_str(self.value)


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact add/sub/mul/div of two elements of the same field"""
    operations = {
        "add": lambda: a + b,
        "sub": lambda: a - b,
        "mul": lambda: a * b,
        "div": lambda: a / b,
    }
    if op not in operations:
        raise ValueError(f"unknown field operation {op!r}")
    return operations[op]()
