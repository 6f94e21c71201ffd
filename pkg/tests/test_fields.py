import pytest

import normvar as nv
from naive_oracle import naive_primes, naive_split


def test_parse_rational():
    K = nv.parse_field("Q")
    assert (K.variant, K.parameter, K.degree, K.discriminant, K.conductor) == (
        "rational",
        None,
        1,
        1,
        1,
    )
    assert K.label() == "Q"


@pytest.mark.parametrize(
    "label, disc, conductor",
    [
        ("quad:-1", -4, 4),
        ("quad:5", 5, 5),
        ("quad:-3", -3, 3),
        ("quad:2", 8, 8),
        ("quad:-5", -20, 20),
        ("quad:13", 13, 13),
    ],
)
def test_parse_quadratic(label, disc, conductor):
    K = nv.parse_field(label)
    assert K.degree == 2
    assert K.discriminant == disc
    assert K.conductor == conductor
    assert K.label() == label


@pytest.mark.parametrize(
    "label, m, degree, disc",
    [
        ("cyclo:3", 3, 2, -3),
        ("cyclo:4", 4, 2, -4),
        ("cyclo:5", 5, 4, 125),
        ("cyclo:7", 7, 6, -16807),
        ("cyclo:8", 8, 4, 256),
        ("cyclo:9", 9, 6, -19683),
        ("cyclo:12", 12, 4, 144),
    ],
)
def test_parse_cyclotomic(label, m, degree, disc):
    K = nv.parse_field(label)
    assert K.parameter == m and K.conductor == m
    assert K.degree == degree
    assert K.discriminant == disc


def test_cyclotomic_canonicalization():
    # m = 2 mod 4 names the same field as m/2; m <= 2 degenerates to Q
    assert nv.parse_field("cyclo:10") == nv.parse_field("cyclo:5")
    assert nv.parse_field("cyclo:6") == nv.parse_field("cyclo:3")
    assert nv.parse_field("cyclo:1") == nv.parse_field("Q")
    assert nv.parse_field("cyclo:2") == nv.parse_field("Q")


@pytest.mark.parametrize(
    "bad",
    ["", "q", " Q", "Q ", "quad:", "quad:0", "quad:1", "quad:4", "quad:-12", "quad:x",
     "cyclo:", "cyclo:0", "cyclo:-3", "cubic:2", "quad:5 "],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        nv.parse_field(bad)


def test_parse_error_is_informative():
    # Syntactic garbage names the offending token, semantic misuse the reason.
    with pytest.raises(ValueError, match="bogus"):
        nv.parse_field("bogus")
    with pytest.raises(ValueError, match="squarefree"):
        nv.parse_field("quad:4")


@pytest.mark.parametrize(
    "label, p, efg",
    [
        ("Q", 7, (1, 1, 1)),
        ("quad:-1", 2, (2, 1, 1)),
        ("quad:-1", 5, (1, 1, 2)),
        ("quad:-1", 3, (1, 2, 1)),
        ("quad:5", 5, (2, 1, 1)),
        ("quad:5", 11, (1, 1, 2)),
        ("quad:5", 2, (1, 2, 1)),
        ("cyclo:5", 5, (4, 1, 1)),
        ("cyclo:5", 11, (1, 1, 4)),
        ("cyclo:5", 2, (1, 4, 1)),
        ("cyclo:5", 7, (1, 4, 1)),
        ("cyclo:5", 19, (1, 2, 2)),
        ("cyclo:12", 2, (2, 2, 1)),
        ("cyclo:12", 13, (1, 1, 4)),
    ],
)
def test_split_examples(label, p, efg):
    s = nv.split_type(nv.parse_field(label), p)
    assert (s.e, s.f, s.g) == efg


def test_split_matches_naive_oracle(field):
    for p in naive_primes(200):
        s = nv.split_type(field, p)
        assert (s.e, s.f, s.g) == naive_split(field.variant, field.parameter, p), (
            field.label(),
            p,
        )


def test_split_efg_product_is_degree(field):
    for p in naive_primes(100):
        s = nv.split_type(field, p)
        assert s.e * s.f * s.g == field.degree


def test_quadratic_cyclotomic_coincidences():
    # Q(zeta_3) = Q(sqrt(-3)) and Q(zeta_4) = Q(sqrt(-1)): splitting agrees
    for cyc, quad in (("cyclo:3", "quad:-3"), ("cyclo:4", "quad:-1")):
        Kc, Kq = nv.parse_field(cyc), nv.parse_field(quad)
        for p in naive_primes(300):
            sc, sq = nv.split_type(Kc, p), nv.split_type(Kq, p)
            assert (sc.e, sc.f, sc.g) == (sq.e, sq.f, sq.g), (cyc, p)


def test_fieldspec_is_hashable_value_type():
    assert nv.parse_field("quad:5") == nv.quadratic_field(5)
    assert len({nv.parse_field("Q"), nv.rational_field()}) == 1
