import random
from fractions import Fraction

import pytest

from orecodes.errors import DomainError
from orecodes.scalars import QQ, QQI, GaussianRational, domain_by_name
from orecodes.spbw import (
    PBWPresentation,
    divide,
    groebner_left,
    in_left_ideal,
    in_two_sided_ideal,
    load_presentation,
    pbw_str,
    presentation_to_dict,
    reduce_full,
    two_sided_closure,
)


def witten():
    # zx = xz - x, zy = yz + 2y, yx = 2xy over Q
    one, zero = QQ.one, QQ.zero
    return PBWPresentation(
        ["x", "y", "z"],
        QQ,
        {
            (0, 1): (Fraction(2), [zero] * 3, zero),
            (0, 2): (one, [Fraction(-1), zero, zero], zero),
            (1, 2): (one, [zero, Fraction(2), zero], zero),
        },
    )


def qspace3():
    # yx = 2i xy, zx = 3i xz, zy = -i yz over Q(i)
    i = GaussianRational(0, 1)
    zero = QQI.zero
    return PBWPresentation(
        ["x", "y", "z"],
        QQI,
        {
            (0, 1): (2 * i, [zero] * 3, zero),
            (0, 2): (3 * i, [zero] * 3, zero),
            (1, 2): (-i, [zero] * 3, zero),
        },
    )


def qplane(domain_name="Q", c="2"):
    dom = domain_by_name(domain_name)
    return PBWPresentation(["x", "y"], dom, {(0, 1): (dom.parse(c), [dom.zero] * 2, dom.zero)})


def rand_poly(pres, rng, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        alpha = tuple(rng.randrange(max_deg + 1) for _ in range(pres.n))
        if sum(alpha) > max_deg:
            continue
        terms[alpha] = pres.domain.parse(str(rng.randrange(-3, 4)))
    return pres.poly(terms)


# -- normal form multiplication ------------------------------------------------------

def test_witten_relations():
    A = witten()
    x, y, z = A.gens
    assert z * x == A.parse("x*z-x")
    assert z * y == A.parse("y*z+2*y")
    assert y * x == A.parse("2*x*y")
    assert A.parse("x^2*y") * A.one == A.parse("x^2*y")


def test_quantum_space_relations():
    A = qspace3()
    x, y, z = A.gens
    assert y * x == A.parse("2*i*x*y")
    assert z * x == A.parse("3*i*x*z")
    assert z * y == A.parse("-i*y*z")


def test_mul_associative_witten_and_qspace():
    for A in (witten(), qspace3()):
        rng = random.Random(12)
        for _ in range(25):
            a, b, c = (rand_poly(A, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_degree_multiplicative_over_domain():
    A = witten()
    rng = random.Random(5)
    for _ in range(30):
        a, b = rand_poly(A, rng), rand_poly(A, rng)
        if a and b:
            assert (a * b).degree == a.degree + b.degree


def test_unique_normal_form_random_rewriting():
    # multiplying in different associations must give identical term maps
    A = witten()
    x, y, z = A.gens
    words = [(z, y, x), (z, x, y), (y, z, x)]
    for w1 in words:
        p1 = w1[0] * w1[1] * w1[2]
        p2 = w1[0] * (w1[1] * w1[2])
        assert p1 == p2


# -- the division algorithm ------------------------------------------------------------

def test_witten_division_reference_output():
    A = witten()
    f = A.parse("x^2*y+x*z+y*z")
    F = [A.parse("x-1"), A.parse("y+2"), A.parse("z+3")]
    res = divide(f, F)
    assert res.quotients[0] == A.parse("1/2*x*y+1/4*y")
    assert res.quotients[1] == A.parse("1/4")
    assert res.quotients[2] == A.zero
    assert res.remainder == A.parse("x*z+y*z-1/2")
    assert pbw_str(res.remainder) == "x*z+y*z-1/2"


def test_quantum_space_division_remainder_verbatim():
    A = qspace3()
    f = A.parse("x^2*y+y*z^2+x*z")
    F = [A.parse("x-i"), A.parse("y-2*i"), A.parse("z-3*i")]
    res = divide(f, F)
    assert res.remainder == A.parse("y*z^2+x*z+1/2*i")
    assert res.quotients[1] == A.parse("1/4")
    assert res.quotients[2] == A.zero
    # with yx = 2i*xy the cascade cofactor is q1 = -1/2*i*x*y - 1/4*i*y;
    # the sign-flipped variant 1/2*i*x*y - 1/4*i*y cannot reconstruct f under
    # these relations (its leading term cannot cancel x^2*y).
    assert res.quotients[0] == A.parse("-1/2*i*x*y-1/4*i*y")
    flipped_q1 = A.parse("1/2*i*x*y-1/4*i*y")
    recon = flipped_q1 * F[0] + res.quotients[1] * F[1] + res.remainder
    assert recon != f


def test_divisor_in_family_divides_exactly():
    A = witten()
    F = [A.parse("x-1"), A.parse("y+2"), A.parse("z+3")]
    for i, d in enumerate(F):
        res = divide(d, F)
        assert res.quotients[i] == A.one
        assert not res.remainder


def test_reduce_full_witten():
    # the exhaustive normal form reduces the same input all the way to 15/2
    A = witten()
    f = A.parse("x^2*y+x*z+y*z")
    F = [A.parse("x-1"), A.parse("y+2"), A.parse("z+3")]
    assert reduce_full(f, F) == A.parse("15/2")


def test_division_reconstruction_random():
    A = witten()
    rng = random.Random(3)
    F = [A.parse("x-1"), A.parse("y+2"), A.parse("z+3")]
    for _ in range(25):
        f = rand_poly(A, rng)
        if not f:
            continue
        res = divide(f, F)
        recon = res.remainder
        for qi, di in zip(res.quotients, F):
            recon = recon + qi * di
        assert recon == f


# -- Groebner machinery ------------------------------------------------------------------

def test_groebner_single_generator():
    A = witten()
    g = groebner_left([A.parse("x-1")])
    assert g.complete and g.basis == [A.parse("x-1")]


def test_groebner_weyl_unit_ideal():
    # yx = xy - 1, z central: the left ideal A(x-1) + Ay + Az contains 1
    one, zero = QQ.one, QQ.zero
    A = PBWPresentation(
        ["x", "y", "z"],
        QQ,
        {(0, 1): (one, [zero] * 3, Fraction(-1)), (0, 2): (one, [zero] * 3, zero), (1, 2): (one, [zero] * 3, zero)},
    )
    x, y, z = A.gens
    # membership certificate: 1 = -y(x-1) + (x-1)y + 0z
    cert = -(y * (x - A.one)) + (x - A.one) * y
    assert cert == A.one
    res = groebner_left([A.parse("x-1"), y, z])
    assert res.complete
    assert A.one in res.basis
    assert in_left_ideal(A.one, res.basis)


def test_groebner_quantum_plane_monomials():
    A = qplane()
    res = groebner_left([A.var(0), A.var(1)])
    assert res.complete
    assert res.basis == [A.var(1), A.var(0)] or res.basis == [A.var(0), A.var(1)]


def test_groebner_membership_random_combinations():
    A = qplane()
    gens = [A.parse("x^2-1"), A.parse("y")]
    res = groebner_left(gens)
    assert res.complete
    rng = random.Random(7)
    for _ in range(25):
        combo = A.zero
        for g in gens:
            combo = combo + rand_poly(A, rng, max_deg=2) * g
        assert in_left_ideal(combo, res.basis)


def test_groebner_witten_membership():
    # completion in a presentation with additive lower-order relation terms
    A = witten()
    gens = [A.parse("x^2-1"), A.parse("y*z+x")]
    res = groebner_left(gens)
    assert res.complete
    rng = random.Random(17)
    for g in gens:
        assert in_left_ideal(g, res.basis)
    for _ in range(25):
        combo = A.zero
        for g in gens:
            combo = combo + rand_poly(A, rng, max_deg=2) * g
        assert in_left_ideal(combo, res.basis)
    # and something visibly outside: a bare constant (the ideal is proper
    # unless completion found a unit)
    if all(g.degree > 0 for g in res.basis):
        assert not in_left_ideal(A.one, res.basis)


# -- two-sided closure ----------------------------------------------------------------------

def test_closure_point_ideal_quantum_plane():
    A = qplane()
    gens = [A.parse("x-1"), A.parse("y")]  # the point (1, 0)
    G = two_sided_closure(gens)
    # two-sided combinations reduce to zero
    rng = random.Random(9)
    for _ in range(25):
        combo = A.zero
        for g in gens:
            combo = combo + rand_poly(A, rng, 2) * g * rand_poly(A, rng, 2)
        assert not reduce_full(combo, G)
    # the (1, 0) point ideal is proper
    assert reduce_full(A.one, G)


def test_point_ideal_collapses_off_the_axes():
    # in the quantum plane with q != 1, q(x-z1)y - y(x-z1) = (1-q) z1 y, so
    # the two-sided ideal of a point with both coordinates nonzero is the
    # whole ring
    A = qplane()
    gens = [A.parse("x-1"), A.parse("y-1")]
    q, z1 = A.domain.parse("2"), A.domain.parse("1")
    x, y = A.gens
    f = A.parse("x-1")
    witness = (f * y).scale(q) - y * f
    assert witness == y.scale((A.domain.one - q) * z1)
    G = two_sided_closure(gens)
    assert not reduce_full(A.one, G)


def test_closure_of_origin_is_itself():
    A = qplane()
    G = two_sided_closure([A.var(0), A.var(1)])
    assert sorted(pbw_str(g) for g in G) == ["x", "y"]


def test_closure_central_generators_add_nothing():
    A = qplane(c="-1")  # q = -1: x^2 is central
    G = two_sided_closure([A.parse("x^2")])
    assert [pbw_str(g) for g in G] == ["x^2"]


def test_closure_refused_for_witten():
    A = witten()
    with pytest.raises(DomainError):
        two_sided_closure([A.parse("x-1")])


def test_closure_with_coefficient_twisting():
    # the one-variable ring with x*r = r^2*x over GF(4) as a PBW extension:
    # closure must also saturate against field generators
    from orecodes.gf import GF
    from orecodes.scalars import GFDomain

    A = PBWPresentation(["x"], GFDomain(GF(2, 2)), sigma=[1])
    assert A.is_quasi_commutative and not A.has_trivial_coefficient_maps
    central = A.parse("x^2+1")
    assert [pbw_str(g) for g in two_sided_closure([central])] == ["x^2+1"]
    # x+1 generates the unit two-sided ideal: (x+1)w - w^2(x+1) = w + w^2 = 1
    G = two_sided_closure([A.parse("x+1")])
    assert [pbw_str(g) for g in G] == ["1"]


def test_in_two_sided_ideal_api():
    A = qplane()
    assert in_two_sided_ideal(A.parse("x*y-x"), [A.parse("y-1")])


# -- text and files -----------------------------------------------------------------------

def test_pbw_str_round_trip():
    A = witten()
    rng = random.Random(2)
    for _ in range(40):
        f = rand_poly(A, rng)
        assert A.parse(pbw_str(f)) == f
    assert pbw_str(A.parse("x*z+y*z-1/2")) == "x*z+y*z-1/2"


def test_gaussian_round_trip():
    A = qspace3()
    f = A.parse("y*z^2+x*z+1/2*i")
    assert pbw_str(f) == "y*z^2+x*z+1/2*i"
    g = A.parse("(3-2*i)*x+1")
    assert A.parse(pbw_str(g)) == g


def test_presentation_json_round_trip(tmp_path):
    A = witten()
    data = presentation_to_dict(A)
    import json

    path = tmp_path / "witten.json"
    path.write_text(json.dumps(data))
    B = load_presentation(str(path))
    assert B.names == A.names
    assert B.relations.keys() == A.relations.keys()
    f = B.parse("x^2*y+x*z+y*z")
    res = divide(f, [B.parse("x-1"), B.parse("y+2"), B.parse("z+3")])
    assert pbw_str(res.remainder) == "x*z+y*z-1/2"


def test_schema_version_checked(tmp_path):
    import json

    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": 99, "vars": ["x"], "field": "Q"}))
    with pytest.raises(DomainError):
        load_presentation(str(path))
