"""The Ore extension A = F[x; sigma, delta] over a finite field.

Polynomials are dense coefficient tuples (low degree first, trailing zeros
trimmed) with the multiplication rule x*r = sigma(r)*x + delta(r).  All
divisions are exact; gcrd/lclm come with Bezout certificates; evaluation,
conjugacy, two-sided/bound polynomials, similarity and brute-force
factorization follow the conventions of noncommutative coding theory.
"""

from __future__ import annotations

import itertools
import re
from typing import NamedTuple

from .errors import DomainError, GuardError
from .gf import Automorphism, FieldElement, FiniteField, InnerDerivation, element_str, parse_element
from .linalg import Matrix


class OreRing:
    """F[x; phi^l, delta_w] with delta_w(z) = w*(sigma(z) - z)."""

    def __init__(self, field: FiniteField, sigma_power: int = 0, w=None):
        self.field = field
        self.sigma = Automorphism(field, sigma_power)
        if isinstance(w, int):
            w = field.from_int(w)
        self.delta = InnerDerivation(self.sigma, w)
        self.zero = SkewPoly(self, ())
        self.one = SkewPoly(self, (field.one,))
        self.x = SkewPoly(self, (field.zero, field.one))

    @property
    def is_auto_type(self) -> bool:
        return self.delta.is_zero

    @property
    def s(self) -> int:
        """Order of sigma; the center of F[x;sigma] is F^sigma[x^s]."""
        return self.sigma.order

    def poly(self, coeffs) -> "SkewPoly":
        out = []
        for c in coeffs:
            if isinstance(c, int):
                c = self.field.from_int(c)
            elif not isinstance(c, FieldElement) or c.field is not self.field:
                raise DomainError("coefficient from a different field")
            out.append(c)
        while out and not out[-1]:
            out.pop()
        return SkewPoly(self, tuple(out))

    def monomial(self, degree: int, coeff=1) -> "SkewPoly":
        c = self.field.from_int(coeff) if isinstance(coeff, int) else coeff
        return self.poly([self.field.zero] * degree + [c])

    def linear(self, z: FieldElement) -> "SkewPoly":
        """The polynomial x - z."""
        return self.poly([-z, self.field.one])

    def parse(self, text: str, var: str = "x") -> "SkewPoly":
        return parse_poly(self, text, var)

    def all_polys(self, degree: int, monic: bool = True):
        """Iterate polynomials of exactly the given degree in coefficient-lex order."""
        els = self.field.elements()
        lead = [self.field.one] if monic else [z for z in els if z]
        for tail in itertools.product(els, repeat=degree):
            for lc in lead:
                yield self.poly(list(tail) + [lc])

    def __eq__(self, other):
        return (
            isinstance(other, OreRing)
            and self.field is other.field
            and self.sigma == other.sigma
            and self.delta == other.delta
        )

    def __hash__(self):
        return hash((id(self.field), self.sigma.l, 0 if self.delta.is_zero else self.delta.w.idx))

    def __repr__(self):
        d = "" if self.delta.is_zero else f",delta_w={self.delta.w!r}"
        return f"{self.field!r}[x;phi^{self.sigma.l}{d}]"


class SkewPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: OreRing, coeffs: tuple):
        self.ring = ring
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention deg(0) = -1."""
        return len(self.coeffs) - 1

    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise DomainError("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.field.one

    def monic(self) -> "SkewPoly":
        if not self.coeffs:
            raise DomainError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        return self.lc().inverse() * self

    def __getitem__(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.field.zero

    def _check(self, other):
        if not isinstance(other, SkewPoly):
            raise DomainError("expected a skew polynomial")
        if other.ring != self.ring:
            raise DomainError("polynomials from different Ore rings")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self.ring.poly([self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return self.ring.poly([-c for c in self.coeffs])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return self.ring.poly([self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = self.ring.poly([other])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return self.ring.zero
        acc = [self.ring.field.zero] * (self.degree + other.degree + 1)
        cur = other
        for i, a in enumerate(self.coeffs):
            if a:
                for j, c in enumerate(cur.coeffs):
                    if c:
                        acc[j] = acc[j] + a * c
            if i < self.degree:
                cur = _x_times(cur)
        return self.ring.poly(acc)

    def __rmul__(self, other):
        # left multiplication by a constant does not twist coefficients
        if isinstance(other, int):
            other = self.ring.field.from_int(other)
        if isinstance(other, FieldElement):
            return self.ring.poly([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power of a polynomial")
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SkewPoly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return poly_str(self)

    # -- division ------------------------------------------------------------

    def right_divmod(self, d: "SkewPoly"):
        """q, r with self = q*d + r and deg r < deg d."""
        self._check(d)
        if not d:
            raise ZeroDivisionError("right division by zero")
        ring, sigma = self.ring, self.ring.sigma
        dd = d.degree
        lc_d = d.lc()
        r = list(self.coeffs)
        q = [ring.field.zero] * max(len(r) - dd, 0)
        while len(r) - 1 >= dd:
            c = r[-1]
            if c:
                e = len(r) - 1 - dd
                qc = c / sigma(lc_d, e)
                q[e] = qc
                step = ring.monomial(e, qc) * d
                for j, v in enumerate(step.coeffs):
                    r[j] = r[j] - v
            r.pop()
        return ring.poly(q), ring.poly(r)

    def left_divmod(self, d: "SkewPoly"):
        """q, r with self = d*q + r and deg r < deg d (sigma bijective)."""
        self._check(d)
        if not d:
            raise ZeroDivisionError("left division by zero")
        ring, sigma = self.ring, self.ring.sigma
        dd = d.degree
        lc_d = d.lc()
        r = list(self.coeffs)
        q = [ring.field.zero] * max(len(r) - dd, 0)
        while len(r) - 1 >= dd:
            c = r[-1]
            if c:
                e = len(r) - 1 - dd
                qc = sigma(c / lc_d, -dd)
                q[e] = qc
                step = d * ring.monomial(e, qc)
                for j, v in enumerate(step.coeffs):
                    r[j] = r[j] - v
            r.pop()
        return ring.poly(q), ring.poly(r)

    def right_divides(self, g: "SkewPoly") -> bool:
        return not g.right_divmod(self)[1]

    def left_divides(self, g: "SkewPoly") -> bool:
        return not g.left_divmod(self)[1]


def _x_times(p: SkewPoly) -> SkewPoly:
    ring = p.ring
    sigma, delta = ring.sigma, ring.delta
    out = [ring.field.zero] * (len(p.coeffs) + 1)
    for j, c in enumerate(p.coeffs):
        if c:
            out[j + 1] = out[j + 1] + sigma(c)
            if not delta.is_zero:
                out[j] = out[j] + delta(c)
    return ring.poly(out)


# -- evaluation ---------------------------------------------------------------

def norm(ring: OreRing, i: int, z: FieldElement) -> FieldElement:
    """N_0(z) = 1, N_{i+1}(z) = sigma(N_i(z))*z + delta(N_i(z))."""
    if i < 0:
        raise DomainError("norm index must be >= 0")
    acc = ring.field.one
    for _ in range(i):
        acc = ring.sigma(acc) * z + ring.delta(acc)
    return acc


def right_eval(g: SkewPoly, z: FieldElement) -> FieldElement:
    """Remainder of g by (x - z); cross-checked against the norm-sum formula."""
    ring = g.ring
    r = g.right_divmod(ring.linear(z))[1]
    rem = r[0] if r else ring.field.zero
    acc = ring.field.zero
    n = ring.field.one
    for i, c in enumerate(g.coeffs):
        if i:
            n = ring.sigma(n) * z + ring.delta(n)
        if c:
            acc = acc + c * n
    if acc != rem:  # pragma: no cover - the two evaluations always agree
        raise AssertionError("norm-sum and division-remainder evaluation disagree")
    return rem


def operator_eval(g: SkewPoly, z: FieldElement) -> FieldElement:
    """Sum g_i D^i(z) with D = sigma when delta = 0 and D = delta otherwise."""
    ring = g.ring
    op = ring.sigma if ring.delta.is_zero else ring.delta
    acc = ring.field.zero
    cur = z
    for i, c in enumerate(g.coeffs):
        if i:
            cur = op(cur)
        if c:
            acc = acc + c * cur
    return acc


# -- gcrd / lclm --------------------------------------------------------------

class BezoutData(NamedTuple):
    d: SkewPoly  # monic gcrd
    u: SkewPoly  # d = u*g1 + v*g2
    v: SkewPoly


def gcrd_bezout(g1: SkewPoly, g2: SkewPoly) -> BezoutData:
    if not g1 and not g2:
        raise DomainError("gcrd(0, 0) is undefined")
    ring = g1.ring
    r0, r1 = g1, g2
    u0, u1 = ring.one, ring.zero
    v0, v1 = ring.zero, ring.one
    while r1:
        q, r2 = r0.right_divmod(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = r0.lc().inverse()
    d = lead * r0
    res = BezoutData(d, lead * u0, lead * v0)
    assert res.u * g1 + res.v * g2 == d
    return res


def gcrd(g1: SkewPoly, g2: SkewPoly) -> SkewPoly:
    return gcrd_bezout(g1, g2).d


def lclm(g1: SkewPoly, g2: SkewPoly) -> SkewPoly:
    """Monic generator of A*g1 n A*g2, via the terminal Bezout cofactors."""
    if not g1 or not g2:
        raise DomainError("lclm requires nonzero polynomials")
    ring = g1.ring
    r0, r1 = g1, g2
    u0, u1 = ring.one, ring.zero
    while r1:
        q, r2 = r0.right_divmod(r1)
        r0, r1 = r1, r2
        u0, u1 = u1, u0 - q * u1
    # at exit u1 is the cofactor of the zero remainder: u1*g1 = -v1*g2
    m = (u1 * g1).monic()
    # eq (2.4a): deg gcrd + deg lclm = deg g1 + deg g2
    assert m.degree + r0.degree == g1.degree + g2.degree
    assert g1.right_divides(m) and g2.right_divides(m)
    return m


def lclm_list(polys) -> SkewPoly:
    acc = None
    for p in polys:
        acc = p if acc is None else lclm(acc, p)
    if acc is None:
        raise DomainError("lclm of an empty list")
    return acc.monic()


# -- conjugacy ----------------------------------------------------------------

def conjugate(ring: OreRing, z: FieldElement, u: FieldElement) -> FieldElement:
    """z^u = sigma(u) z u^{-1} + delta(u) u^{-1}."""
    if not u:
        raise DomainError("conjugation requires u != 0")
    ui = u.inverse()
    return ring.sigma(u) * z * ui + ring.delta(u) * ui


def conjugacy_class(ring: OreRing, z: FieldElement):
    cls = {conjugate(ring, z, u) for u in ring.field.elements() if u}
    return sorted(cls, key=lambda e: e.idx)


def centralizer(ring: OreRing, z: FieldElement):
    cent = [u for u in ring.field.elements() if u and conjugate(ring, z, u) == z]
    return sorted([ring.field.zero] + cent, key=lambda e: e.idx)


def conjugacy_classes(ring: OreRing):
    """Partition of F into conjugacy classes, each sorted, reps in index order."""
    seen = set()
    classes = []
    for z in ring.field.elements():
        if z in seen:
            continue
        cls = conjugacy_class(ring, z)
        seen.update(cls)
        classes.append(cls)
    return classes


# -- two-sided / bound polynomials ---------------------------------------------

class TwoSidedWitness(NamedTuple):
    is_two_sided: bool
    c: FieldElement | None
    t: int | None
    h: SkewPoly | None  # central, monic


def two_sided_test(g: SkewPoly) -> TwoSidedWitness:
    """Decide A*g = g*A via the decomposition g = c x^t h with h in Z(A)."""
    ring = g.ring
    if not ring.is_auto_type:
        raise DomainError("two_sided_test requires delta = 0; change variable first")
    field, sigma, s = ring.field, ring.sigma, ring.s
    if not g:
        return TwoSidedWitness(True, field.zero, 0, ring.one)
    t = next(i for i, c in enumerate(g.coeffs) if c)
    c = g.lc()
    h_coeffs = [sigma(ci / c, -t) if ci else ci for ci in g.coeffs[t:]]
    h = ring.poly(h_coeffs)
    assert c * (ring.monomial(t) * h) == g
    for i, ci in enumerate(h.coeffs):
        if ci and (i % s != 0 or sigma(ci) != ci):
            return TwoSidedWitness(False, None, None, None)
    return TwoSidedWitness(True, c, t, h)


def is_central(g: SkewPoly) -> bool:
    """Membership in Z(A) = F^sigma[x^s] (delta = 0 rings)."""
    ring = g.ring
    if not ring.is_auto_type:
        raise DomainError("center description requires delta = 0")
    return all(
        not c or (i % ring.s == 0 and ring.sigma(c) == c) for i, c in enumerate(g.coeffs)
    )


def annihilator_poly(a: SkewPoly, f: SkewPoly) -> SkewPoly:
    """Monic generator f_a of {h : h*a in A*f}, by linear algebra on h*a mod f."""
    if not f.is_monic or f.degree < 1:
        raise DomainError("annihilator requires a monic modulus of degree >= 1")
    ring = a.ring
    field = ring.field
    n = f.degree
    cur = a.right_divmod(f)[1]
    if not cur:
        return ring.one
    rows = []  # coefficient vectors of x^i * a mod f, i = 0 .. D-1
    bound = ring.s * n * field.k + 1
    for _ in range(bound):
        rows.append([cur[j] for j in range(n)])
        cur = _x_times(cur).right_divmod(f)[1]
        # monic h of degree D = len(rows): x^D a + sum_{i<D} h_i x^i a = 0 mod f
        target = [-cur[j] for j in range(n)]
        sol = Matrix.over_field(field, rows, n).transpose().solve(target)
        if sol is not None:
            return ring.poly(list(sol) + [field.one])
    raise AssertionError("annihilator search bound exceeded")  # pragma: no cover


def bound_polynomial(f: SkewPoly) -> SkewPoly:
    """f* = lclm(f, f_{a_1}, ..., f_{a_r}) over the Z(A)-module generators
    {b_j x^i}, the largest two-sided ideal inside A*f."""
    ring = f.ring
    if not f.is_monic or not f:
        raise DomainError("bound polynomial requires a monic nonzero f")
    if not ring.is_auto_type:
        raise DomainError("bound polynomial requires delta = 0; change variable first")
    if f.degree == 0:
        return ring.one
    from .gf import basis_over_fixed_subfield

    basis = basis_over_fixed_subfield(ring.sigma)
    acc = f.monic()
    for b in basis:
        for i in range(ring.s):
            a = ring.monomial(i, b)
            acc = lclm(acc, annihilator_poly(a, f))
    assert two_sided_test(acc).is_two_sided
    assert f.right_divides(acc)
    return acc


# -- similarity ---------------------------------------------------------------

def companion_matrix(g: SkewPoly) -> Matrix:
    if not g.is_monic or g.degree < 1:
        raise DomainError("companion matrix requires a monic polynomial of degree >= 1")
    field = g.ring.field
    m = g.degree
    rows = []
    for i in range(m - 1):
        rows.append([field.one if j == i + 1 else field.zero for j in range(m)])
    rows.append([-g[j] for j in range(m)])
    return Matrix.over_field(field, rows, m)


def similarity_test(g: SkewPoly, h: SkewPoly):
    """Decide g ~ h; on success return the invertible B with C_g B = sigma(B) C_h.

    The search enumerates module homomorphisms A/Ag -> A/Ah via the image p of
    1; B is the matrix of the resulting F-isomorphism in the canonical bases.
    """
    ring = g.ring
    if not ring.is_auto_type:
        raise DomainError("similarity test requires delta = 0; change variable first")
    if h.ring != ring:
        raise DomainError("polynomials from different rings")
    if not (g.is_monic and h.is_monic) or g.degree < 1:
        raise DomainError("similarity requires monic polynomials of degree >= 1")
    if g.degree != h.degree:
        raise DomainError("similarity requires equal degrees")
    m = g.degree
    field = ring.field
    if g == h:
        from .linalg import identity

        return True, identity(m, field.zero, field.one)
    if field.size ** m > MAX_SEARCH:
        raise GuardError("similarity search space exceeds desk scale")
    for tail in itertools.product(field.elements(), repeat=m):
        p = ring.poly(tail)
        if not p:
            continue
        if (g * p).right_divmod(h)[1]:
            continue
        if gcrd(p, h).degree != 0:
            continue
        rows = []
        cur = p
        for _ in range(m):
            rows.append([cur[j] for j in range(m)])
            cur = _x_times(cur).right_divmod(h)[1]
        B = Matrix.over_field(field, rows, m)
        sB = Matrix.over_field(field, [[ring.sigma(v) for v in r] for r in rows], m)
        assert companion_matrix(g) * B == sB * companion_matrix(h)
        return True, B
    return False, None


MAX_SEARCH = 1 << 16


# -- factorization ------------------------------------------------------------

def _min_right_divisor(g: SkewPoly):
    """Lex-least monic right divisor of minimal degree 1..deg-1, or None."""
    ring = g.ring
    for dd in range(1, g.degree):
        for tail in itertools.product(ring.field.elements(), repeat=dd):
            d = ring.poly(list(tail) + [ring.field.one])
            if d.right_divides(g):
                return d
    return None


def is_irreducible(g: SkewPoly) -> bool:
    if not g or g.degree < 1:
        return False
    return _min_right_divisor(g) is None


def factor_irreducible(g: SkewPoly):
    """Factor g into irreducibles, extracting the lex-least minimal-degree
    monic right divisor at each step; the unit is absorbed by the left factor."""
    if not g:
        raise DomainError("cannot factor the zero polynomial")
    if g.degree == 0:
        raise DomainError("cannot factor a unit")
    if g.degree > 6 or g.ring.field.size > 64:
        raise GuardError("factorization guard: deg <= 6 and |F| <= 64")
    unit = g.lc()
    cur = g.monic()
    factors: list[SkewPoly] = []
    while True:
        d = _min_right_divisor(cur)
        if d is None:
            factors.insert(0, cur)
            break
        q, r = cur.right_divmod(d)
        assert not r
        factors.insert(0, d)
        cur = q
        if cur.degree == 0:
            break
    if unit != g.ring.field.one:
        factors[0] = unit * factors[0]
    prod = factors[0]
    for p in factors[1:]:
        prod = prod * p
    assert prod == g
    return factors


# -- change of variable ---------------------------------------------------------

def change_variable(g: SkewPoly, target: OreRing, image: SkewPoly) -> SkewPoly:
    """Apply the coefficient-fixing ring map x -> image, by left Horner."""
    acc = target.zero
    for c in reversed(g.coeffs):
        acc = acc * image + target.poly([c])
    return acc


def remove_derivation(g: SkewPoly):
    """Ring isomorphism F[x;sigma,delta_w] -> F[y;sigma], x -> y - w.

    (y := x + w satisfies y*r = sigma(r)*y exactly; the substitution for
    polynomials is therefore x -> y - w.)
    """
    ring = g.ring
    if ring.is_auto_type:
        return ring, g
    target = OreRing(ring.field, ring.sigma.l)
    image = target.poly([-ring.delta.w, ring.field.one])
    return target, change_variable(g, target, image)


# -- text I/O -------------------------------------------------------------------

def poly_str(g: SkewPoly, symbol: str = "w", var: str = "x") -> str:
    if not g:
        return "0"
    parts = []
    for i in range(g.degree, -1, -1):
        c = g[i]
        if not c:
            continue
        cs = element_str(c)
        if symbol != "g":
            cs = re.sub(r"^g", symbol, cs)
        if i == 0:
            parts.append(cs)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            parts.append(xs if cs == "1" else f"{cs}*{xs}")
    return "+".join(parts)


def parse_poly(ring: OreRing, text: str, var: str = "x") -> SkewPoly:
    text = text.strip().replace(" ", "")
    if not text:
        raise DomainError("empty polynomial literal")
    coeffs: dict[int, FieldElement] = {}
    for term in re.findall(r"[+-]?[^+-]+", text):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        coeff = ring.field.one
        degree = 0
        for factor in term.split("*"):
            m = re.fullmatch(rf"{re.escape(var)}(?:\^(\d+))?", factor)
            if m:
                degree += int(m.group(1)) if m.group(1) else 1
            else:
                coeff = coeff * parse_element(ring.field, factor)
        if sign == -1:
            coeff = -coeff
        coeffs[degree] = coeffs.get(degree, ring.field.zero) + coeff
    out = [ring.field.zero] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return ring.poly(out)
