"""R-linear and skew cyclic codes.

A skew cyclic code is stored in canonical form as the monic right divisor g
of the modulus f; its generator matrix holds the coefficients of
g, xg, ..., x^{s-1}g reduced mod f.  The operations of the f = x^n - 1,
|sigma| = n setting (right-multiplication matrices, the anti-isomorphism
theta, dual codes through generating idempotents) live here too and insist on
that setting.
"""

from __future__ import annotations

import itertools

from .errors import DomainError
from .linalg import Matrix, identity
from .skewpoly import OreRing, SkewPoly, gcrd, gcrd_bezout, lclm, two_sided_test


class LinearCode:
    """An F-linear code given by a generator matrix with independent rows."""

    def __init__(self, field, G: Matrix):
        self.field = field
        self.n = G.ncols
        if G.nrows and G.rank() != G.nrows:
            raise DomainError("generator matrix rows are not independent")
        self.G = G

    @property
    def dim(self) -> int:
        return self.G.nrows

    def rref(self) -> Matrix:
        return self.G.rref()[0]

    def dual(self) -> "LinearCode":
        """Code generated by the kernel of G; its matrix is a parity check
        matrix of this code."""
        if self.dim == 0:
            return LinearCode(self.field, identity(self.n, self.field.zero, self.field.one))
        return LinearCode(self.field, self.G.kernel())

    def parity_check(self) -> Matrix:
        return self.dual().G

    def contains(self, word) -> bool:
        if len(word) != self.n:
            raise DomainError("word length mismatch")
        H = self.parity_check()
        return not any(H.mul_vec(list(word)))

    def words(self):
        """All codewords (message-space enumeration)."""
        for msg in itertools.product(self.field.elements(), repeat=self.dim):
            word = [self.field.zero] * self.n
            for m, row in zip(msg, self.G.rows):
                if m:
                    word = [wv + m * rv for wv, rv in zip(word, row)]
            yield tuple(word)

    def same_code(self, other: "LinearCode") -> bool:
        return self.n == other.n and self.G.row_space_equals(other.G)

    def __repr__(self):
        return f"LinearCode(n={self.n}, dim={self.dim})"


# -- the word map p_f -----------------------------------------------------------

def word_map(ring: OreRing, v, f: SkewPoly) -> SkewPoly:
    """p_f(v) = sum v_i x^i, the coset representative of a length-n word."""
    if len(v) != f.degree:
        raise DomainError("word length must equal deg f")
    return ring.poly(list(v))


def word_unmap(g: SkewPoly, f: SkewPoly):
    """Inverse of the word map: reduce mod f and read n coefficients."""
    r = g.right_divmod(f)[1]
    return tuple(r[i] for i in range(f.degree))


# -- skew cyclic codes ------------------------------------------------------------

class SkewCyclicCode:
    def __init__(self, ring: OreRing, f: SkewPoly, g: SkewPoly):
        if not f.is_monic or f.degree < 1:
            raise DomainError("modulus must be monic of degree >= 1")
        if not g.is_monic:
            raise DomainError("divisor must be monic")
        if f.right_divmod(g)[1]:
            raise DomainError("g must right-divide the modulus f")
        self.ring = ring
        self.f = f
        self.g = g
        self.n = f.degree
        self.dim = f.degree - g.degree

    def generator_matrix(self) -> Matrix:
        """Rows are the coefficients of x^i g mod f, i = 0..dim-1."""
        rows = []
        cur = self.g
        for i in range(self.dim):
            if i:
                cur = (self.ring.x * cur).right_divmod(self.f)[1]
            rows.append([cur[j] for j in range(self.n)])
        return Matrix.over_field(self.ring.field, rows, self.n)

    def to_linear(self) -> LinearCode:
        return LinearCode(self.ring.field, self.generator_matrix())

    def __repr__(self):
        return f"SkewCyclicCode(n={self.n}, dim={self.dim}, g={self.g!r})"


def monic_right_divisors(ring: OreRing, f: SkewPoly):
    """All monic right divisors of f, by brute-force enumeration."""
    out = []
    for d in range(f.degree + 1):
        for cand in ring.all_polys(d, monic=True):
            if cand.right_divides(f):
                out.append(cand)
    return out


# -- the f = x^n - 1, |sigma| = n setting -------------------------------------------

def _check_cyclic_setting(ring: OreRing, n: int) -> SkewPoly:
    if not ring.is_auto_type:
        raise DomainError("the x^n - 1 setting requires delta = 0")
    if ring.s != n:
        raise DomainError(f"|sigma| = {ring.s} but the modulus needs |sigma| = n = {n}")
    f = ring.monomial(n) - ring.one
    if not two_sided_test(f).is_two_sided:  # pragma: no cover - s | n by construction
        raise DomainError("x^n - 1 is not two-sided in this ring")
    return f


def right_mult_matrix(ring: OreRing, g: SkewPoly, n: int) -> Matrix:
    """M(g): row i holds the coefficients of x^i * g mod (x^n - 1), so that
    p_f(Z M(g)) = p_f(Z) g for every row vector Z."""
    f = _check_cyclic_setting(ring, n)
    gbar = g.right_divmod(f)[1]
    rows = []
    cur = gbar
    for i in range(n):
        if i:
            cur = (ring.x * cur).right_divmod(f)[1]
        rows.append([cur[j] for j in range(n)])
    return Matrix.over_field(ring.field, rows, n)


def theta(ring: OreRing, g: SkewPoly, n: int) -> SkewPoly:
    """The anti-isomorphism of A/(x^n - 1):
    theta(g) = sigma^n(g0) x^n + sigma^{n-1}(g1) x^{n-1} + ... + sigma(g_{n-1}) x,
    reduced mod x^n - 1 (so the x^n term lands on the constant)."""
    f = _check_cyclic_setting(ring, n)
    gbar = g.right_divmod(f)[1]
    coeffs = [ring.field.zero] * n
    coeffs[0] = gbar[0]  # sigma^n = id and x^n = 1
    for i in range(1, n):
        coeffs[n - i] = ring.sigma(gbar[i], n - i)
    return ring.poly(coeffs)


def idempotent_to_generator(ring: OreRing, e: SkewPoly, n: int) -> SkewPoly:
    """Minimal generator g = gcrd(e, x^n - 1) of the code A*ebar."""
    f = _check_cyclic_setting(ring, n)
    ebar = e.right_divmod(f)[1]
    if (ebar * ebar).right_divmod(f)[1] != ebar:
        raise DomainError("e is not idempotent mod x^n - 1")
    if not ebar:
        return f
    return gcrd(e, f)


def complement_divisor(ring: OreRing, g: SkewPoly, n: int) -> SkewPoly:
    """Lex-least monic h with lclm(g, h) = x^n - 1 and deg g + deg h = n."""
    f = _check_cyclic_setting(ring, n)
    if g == f:
        return ring.one
    if g.degree == 0:
        return f
    for h in ring.all_polys(n - g.degree, monic=True):
        if h.right_divides(f) and gcrd(g, h).degree == 0 and lclm(g, h) == f:
            return h
    raise DomainError("no complementary divisor exists")  # pragma: no cover


def bezout_idempotent(ring: OreRing, g: SkewPoly, h: SkewPoly, n: int) -> SkewPoly:
    """From 1 = u g + v h (gcrd Bezout data), e = u g is a generating
    idempotent of the code A*gbar."""
    f = _check_cyclic_setting(ring, n)
    if g.degree + h.degree != n or lclm(g, h) != f:
        raise DomainError("need lclm(g, h) = x^n - 1 and deg g + deg h = n")
    d, u, _ = gcrd_bezout(g, h)
    assert d.degree == 0
    e = (u * g).right_divmod(f)[1]
    assert (e * e).right_divmod(f)[1] == e
    assert idempotent_to_generator(ring, e, n) == g  # A ebar = A gbar
    return e


def generating_idempotent(code: SkewCyclicCode) -> SkewPoly:
    """A generating idempotent of the code (zero code gives 0, full code 1)."""
    ring, n, g = code.ring, code.n, code.g
    f = _check_cyclic_setting(ring, n)
    if g == f:
        return ring.zero
    if g.degree == 0:
        return ring.one
    h = complement_divisor(ring, g, n)
    return bezout_idempotent(ring, g, h, n)


def dual_skew_cyclic(code: SkewCyclicCode) -> SkewCyclicCode:
    """The dual as a skew cyclic code: generated by theta(1 - e) for a
    generating idempotent e; cross-checked against the kernel-path dual."""
    ring, n = code.ring, code.n
    f = _check_cyclic_setting(ring, n)
    e = generating_idempotent(code)
    comp = (ring.one - e).right_divmod(f)[1]
    te = theta(ring, comp, n)
    gperp = idempotent_to_generator(ring, te, n)
    dual_code = SkewCyclicCode(ring, f, gperp)
    assert dual_code.to_linear().same_code(code.to_linear().dual())
    return dual_code
