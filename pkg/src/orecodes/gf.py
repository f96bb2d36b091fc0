"""Exact arithmetic in finite fields GF(q^k).

Elements are identified by an index: 0 is the zero element, and index e+1 is
z0^e for a fixed primitive element z0.  Multiplication works directly on
indices through the discrete log; addition uses a Zech logarithm table, so
every arithmetic operation is O(1) table lookups.  Fields are built once per
(q, k) and cached, with the modulus chosen deterministically as the
lexicographically least (highest coefficients compared first) monic
irreducible polynomial of degree k over GF(q).
"""

from __future__ import annotations

import functools
import itertools
import math
import re

from .errors import DomainError, GuardError

MAX_FIELD_SIZE = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


# --- build-time polynomial arithmetic over Z_q (coefficient lists, low degree first)

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, q):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return _ptrim(out)


def _pmod(a, m, q):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for j, mj in enumerate(m):
                a[shift + j] = (a[shift + j] - c * mj) % q
        a.pop()
    return _ptrim(a)


def _irreducible(m, q):
    """Trial division of the monic polynomial m by every monic polynomial of
    degree 1..deg(m)//2 over GF(q)."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for code in range(q ** d):
            div = []
            c = code
            for _ in range(d):
                div.append(c % q)
                c //= q
            div.append(1)
            # remainder of m by div
            if not _pmod(m, div, q):
                return False
    return True


class FiniteField:
    """GF(q^k) with exp/log/Zech tables; immutable after construction."""

    def __init__(self, q: int, k: int):
        if not is_prime(q):
            raise DomainError(f"characteristic {q} is not prime")
        if not 1 <= k <= 16:
            raise DomainError(f"extension degree {k} out of range [1, 16]")
        if q ** k > MAX_FIELD_SIZE:
            raise GuardError(f"field size {q}^{k} exceeds table cap {MAX_FIELD_SIZE}")
        self.q = q
        self.k = k
        self.size = q ** k
        self.t = self.size - 1  # order of the multiplicative group
        self.modulus = self._least_irreducible()
        self._build_tables()
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)
        self.gen = FieldElement(self, 2) if self.t >= 2 else self.one

    # -- construction helpers ----------------------------------------------

    def _least_irreducible(self):
        q, k = self.q, self.k
        if k == 1:
            return [0, 1]  # the polynomial x; arithmetic is plain Z_q
        # candidates ordered by (c_{k-1}, ..., c_0), i.e. high coefficients first:
        # the integer code's most significant base-q digit is c_{k-1}
        for code in range(q ** k):
            cand = [0] * k + [1]
            c = code
            for pos in range(k):
                cand[pos] = c % q
                c //= q
            if _irreducible(cand, q):
                return cand
        raise RuntimeError("no irreducible polynomial found")  # pragma: no cover

    def _code_digits(self, code):
        d = []
        for _ in range(self.k):
            d.append(code % self.q)
            code //= self.q
        return d

    def _digits_code(self, digits):
        c = 0
        for d in reversed(digits):
            c = c * self.q + d
        return c

    def _code_add(self, a, b):
        if self.q == 2:
            return a ^ b
        da, db = self._code_digits(a), self._code_digits(b)
        return self._digits_code([(x + y) % self.q for x, y in zip(da, db)])

    def _code_mul(self, a, b):
        pa = self._code_digits(a)
        pb = self._code_digits(b)
        prod = _pmul(_ptrim(pa), _ptrim(pb), self.q)
        prod = _pmod(prod, self.modulus, self.q)
        prod += [0] * (self.k - len(prod))
        return self._digits_code(prod)

    def _mul_order(self, code):
        acc, n = code, 1
        while acc != 1:
            acc = self._code_mul(acc, code)
            n += 1
            if n > self.t:  # pragma: no cover
                raise RuntimeError("order computation overflow")
        return n

    def _build_tables(self):
        t = self.t
        # primitive element: least code (as integer) of multiplicative order t
        z0 = 1
        if t > 1:
            for code in range(2, self.size):
                if self._mul_order(code) == t:
                    z0 = code
                    break
        self.gen_code = z0
        exp = [1] * t
        for e in range(1, t):
            exp[e] = self._code_mul(exp[e - 1], z0)
        self._exp = exp
        log = {1: 0}
        for e, c in enumerate(exp):
            log[c] = e
        self._log = log
        # index <-> code maps (index 0 is zero, index e+1 is z0^e)
        self._idx_to_code = [0] + exp
        self._code_to_idx = {0: 0}
        for e, c in enumerate(exp):
            self._code_to_idx[c] = e + 1
        # Zech logarithms: zech[e] = log(z0^e + 1), None when z0^e = -1
        zech = [None] * t
        for e in range(t):
            c = self._code_add(exp[e], 1)
            zech[e] = None if c == 0 else log[c]
        self._zech = zech
        # index of -1: exponent offset for negation
        self._neg_shift = 0 if self.q == 2 else t // 2

    # -- fast index-space arithmetic ---------------------------------------

    def add_i(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        ea, eb = a - 1, b - 1
        d = (ea - eb) % self.t
        z = self._zech[d]
        if z is None:
            return 0
        return (eb + z) % self.t + 1

    def neg_i(self, a: int) -> int:
        if a == 0 or self.q == 2:
            return a
        return (a - 1 + self._neg_shift) % self.t + 1

    def sub_i(self, a: int, b: int) -> int:
        return self.add_i(a, self.neg_i(b))

    def mul_i(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return (a - 1 + b - 1) % self.t + 1

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        return (-(a - 1)) % self.t + 1

    def pow_i(self, a: int, m: int) -> int:
        if a == 0:
            if m < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if m == 0 else 0
        return ((a - 1) * m) % self.t + 1

    def frob_i(self, a: int, power: int = 1) -> int:
        """sigma^power(z) for sigma = Frobenius z -> z^q, on indices."""
        if a == 0:
            return 0
        return ((a - 1) * pow(self.q, power % self.k, self.t)) % self.t + 1

    # -- element factories ---------------------------------------------------

    def element(self, idx: int) -> "FieldElement":
        if not 0 <= idx < self.size:
            raise DomainError(f"element index {idx} out of range for {self!r}")
        return FieldElement(self, idx)

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, self._code_to_idx[code])

    def from_int(self, m: int) -> "FieldElement":
        """Image of the integer m in the prime subfield."""
        return self.from_code(m % self.q)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.size)]

    def parse(self, text: str) -> "FieldElement":
        return parse_element(self, text)

    def __repr__(self):
        return f"GF({self.size})"

    def __reduce__(self):
        return (GF, (self.q, self.k))


class FieldElement:
    """An element of a FiniteField, identified by its index."""

    __slots__ = ("field", "idx")

    def __init__(self, field: FiniteField, idx: int):
        self.field = field
        self.idx = idx

    # -- helpers

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise DomainError("elements of different fields")
            return other.idx
        if isinstance(other, int):
            return self.field.from_int(other).idx
        return NotImplemented

    @property
    def code(self) -> int:
        """Polynomial-basis code sum(c_i * q^i)."""
        return self.field._idx_to_code[self.idx]

    # -- arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add_i(self.idx, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_i(self.idx))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub_i(self.idx, o))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_i(self.idx, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul_i(self.idx, self.field.inv_i(o)))

    def __rtruediv__(self, other):
        return self.field.from_int(other) / self

    def __pow__(self, m: int):
        return FieldElement(self.field, self.field.pow_i(self.idx, m))

    def inverse(self):
        return FieldElement(self.field, self.field.inv_i(self.idx))

    # -- comparisons / hashing

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.idx == other.idx
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.idx))

    def __bool__(self):
        return self.idx != 0

    def __lt__(self, other):
        o = self._coerce(other)
        return self.idx < o

    def __repr__(self):
        return element_str(self)

    def multiplicative_order(self) -> int:
        if self.idx == 0:
            raise DomainError("zero has no multiplicative order")
        return self.field.t // math.gcd(self.field.t, self.idx - 1)


class Automorphism:
    """sigma = phi^l where phi is the Frobenius z -> z^q."""

    __slots__ = ("field", "l")

    def __init__(self, field: FiniteField, l: int):
        self.field = field
        self.l = l % field.k

    @property
    def order(self) -> int:
        return self.field.k // math.gcd(self.l, self.field.k)

    @property
    def is_identity(self) -> bool:
        return self.l == 0

    def __call__(self, z: FieldElement, power: int = 1) -> FieldElement:
        return FieldElement(self.field, self.field.frob_i(z.idx, self.l * (power % self.order)))

    def inverse_apply(self, z: FieldElement) -> FieldElement:
        return self(z, self.order - 1)

    def fixed_subfield(self):
        """F^sigma together with 0; a subfield of size q^gcd(l, k)."""
        return [z for z in self.field.elements() if self(z) == z]

    def __eq__(self, other):
        return (
            isinstance(other, Automorphism)
            and self.field is other.field
            and self.l == other.l
        )

    def __hash__(self):
        return hash((id(self.field), self.l))

    def __repr__(self):
        return f"phi^{self.l} on {self.field!r}"


class InnerDerivation:
    """delta(z) = w * (sigma(z) - z); the only sigma-derivations of a finite field."""

    __slots__ = ("sigma", "w")

    def __init__(self, sigma: Automorphism, w: FieldElement | None = None):
        self.sigma = sigma
        self.w = sigma.field.zero if w is None else w
        if self.w.field is not sigma.field:
            raise DomainError("inner element from a different field")

    @property
    def is_zero(self) -> bool:
        return (not self.w) or self.sigma.is_identity

    def __call__(self, z: FieldElement) -> FieldElement:
        return self.w * (self.sigma(z) - z)

    def __eq__(self, other):
        if not isinstance(other, InnerDerivation):
            return NotImplemented
        if self.sigma != other.sigma:
            return False
        if self.is_zero and other.is_zero:
            return True
        return self.w == other.w

    def __hash__(self):
        return hash((self.sigma, self.sigma.field.zero.idx if self.is_zero else self.w.idx))

    def __repr__(self):
        return f"delta[w={self.w!r}]"


@functools.lru_cache(maxsize=None)
def GF(q: int, k: int = 1) -> FiniteField:
    """Build (or fetch the cached) field GF(q^k); q prime, 1 <= k <= 16."""
    return FiniteField(q, k)


build_field = GF


_FIELD_RE = re.compile(r"^GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)$")


def parse_field(text: str) -> FiniteField:
    """Parse a field literal: GF(q^k) or GF(n) with n a prime power."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise DomainError(f"bad field literal {text!r}")
    base = int(m.group(1))
    if m.group(2) is not None:
        return GF(base, int(m.group(2)))
    # factor n as q^k with q prime
    for q in range(2, base + 1):
        if base % q == 0:
            k = 0
            n = base
            while n % q == 0:
                n //= q
                k += 1
            if n != 1:
                raise DomainError(f"{base} is not a prime power")
            return GF(q, k)
    raise DomainError(f"bad field literal {text!r}")


def element_str(z: FieldElement) -> str:
    """Canonical form: 0, 1, or g^e as a power of the primitive element;
    prime-field elements print as integers."""
    if z.field.k == 1:
        return str(z.code)
    if z.idx == 0:
        return "0"
    if z.idx == 1:
        return "1"
    e = z.idx - 1
    return "g" if e == 1 else f"g^{e}"


@functools.lru_cache(maxsize=None)
def basis_over_fixed_subfield(sigma: Automorphism):
    """Greedy basis of F as a vector space over the fixed subfield F^sigma,
    scanning elements in index order."""
    field = sigma.field
    sub = sigma.fixed_subfield()
    basis: list[FieldElement] = []
    span = {field.zero}
    for z in field.elements():
        if z in span:
            continue
        basis.append(z)
        span = {s + c * z for s in span for c in sub}
        if len(span) == field.size:
            break
    return tuple(basis)


@functools.lru_cache(maxsize=None)
def fixed_field_coordinates(sigma: Automorphism):
    """(basis, table) expanding every element of F over the F^sigma-basis;
    table maps each element to its coordinate tuple (entries in F^sigma)."""
    field = sigma.field
    sub = sigma.fixed_subfield()
    basis = basis_over_fixed_subfield(sigma)
    table = {}
    for coords in itertools.product(sub, repeat=len(basis)):
        z = field.zero
        for c, b in zip(coords, basis):
            z = z + c * b
        table[z] = coords
    if len(table) != field.size:  # pragma: no cover
        raise RuntimeError("fixed-subfield expansion is not a bijection")
    return basis, table


_GEN_SYMBOLS = ("g", "w")


def parse_element(field: FiniteField, text: str) -> FieldElement:
    """Parse 0, 1, g^e (w accepted as an alias of g), an integer, or a
    polynomial form c0+c1*a+c2*a^2+... in the residue a of the modulus."""
    text = text.strip().replace(" ", "")
    if not text:
        raise DomainError("empty element literal")
    if re.fullmatch(r"-?\d+", text):
        return field.from_int(int(text))
    m = re.fullmatch(r"(-?)(g|w)(?:\^(\d+))?", text)
    if m:
        e = int(m.group(3)) if m.group(3) else 1
        val = field.gen ** e
        return -val if m.group(1) else val
    # polynomial form in the residue a
    a = field.from_code(field.q) if field.k > 1 else field.one
    total = field.zero
    for term in re.findall(r"[+-]?[^+-]+", text):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        m = re.fullmatch(r"(?:(\d+)\*?)?(?:a(?:\^(\d+))?)?", term)
        if not m or not term:
            raise DomainError(f"bad element literal {text!r}")
        coeff = field.from_int(int(m.group(1))) if m.group(1) else field.one
        if m.group(2) is not None:
            val = coeff * a ** int(m.group(2))
        elif "a" in term:
            val = coeff * a
        else:
            val = coeff
        total = total + val if sign == 1 else total - val
    return total
