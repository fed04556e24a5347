"""The arrangement, the action on it, stabilizers and normal scalars."""

import random

import pytest

from braidlift.acceptance import GRID
from braidlift.arrangement import (
    Coord,
    Swap,
    act,
    acts_faithfully_on_arrangement,
    format_hyperplane,
    hyperplane_index,
    hyperplanes,
    in_parabolic,
    orbits,
    parse_hyperplane,
    scalar_on_normal,
    stabilizes,
)
from braidlift.errors import MismatchError, ParseError
from braidlift.monomial import (
    GroupDescriptor,
    center,
    closure,
    diagonal,
    enumerate_elements,
    from_permutation,
    identity,
)

D = GroupDescriptor.from_deer


def test_hyperplane_counts():
    assert len(hyperplanes(D(1, 1, 3))) == 3
    assert len(hyperplanes(D(2, 1, 2))) == 4
    planes = hyperplanes(D(3, 3, 2))
    assert len(planes) == 3 and not any(isinstance(H, Coord) for H in planes)
    for desc in GRID:
        expected = desc.de * desc.r * (desc.r - 1) // 2 + (desc.r if desc.d >= 2 else 0)
        assert len(hyperplanes(desc)) == expected


def test_canonical_order_swaps_then_coords():
    planes = hyperplanes(D(2, 1, 2))
    assert planes == (Swap(0, 1, 0), Swap(0, 1, 1), Coord(0), Coord(1))


def test_act_examples():
    s3 = D(1, 1, 3)
    w = from_permutation(s3, (1, 0, 2))
    assert act(w, Swap(0, 2, 0)) == Swap(1, 2, 0)
    desc = D(6, 3, 2)
    for H in hyperplanes(desc):
        assert act(identity(desc), H) == H
    g = diagonal(D(3, 3, 2), (1, 2))
    assert act(g, Swap(0, 1, 0)) == Swap(0, 1, 2)  # t' = 0 + 1 - 2 mod 3


def test_act_is_left_action():
    rng = random.Random(23)
    for desc in (D(6, 3, 2), D(2, 2, 4), D(2, 1, 3)):
        pool = list(enumerate_elements(desc))
        planes = hyperplanes(desc)
        for _ in range(100):
            u, v = rng.choice(pool), rng.choice(pool)
            H = rng.choice(planes)
            assert act(u * v, H) == act(u, act(v, H))


def test_act_rejects_coord_when_d_is_1():
    with pytest.raises(MismatchError):
        act(identity(D(3, 3, 2)), Coord(0))


def test_stabilizes_examples():
    s3 = D(1, 1, 3)
    assert stabilizes(from_permutation(s3, (1, 0, 2)), Swap(0, 1, 0))
    assert not stabilizes(from_permutation(s3, (1, 2, 0)), Swap(0, 1, 0))
    for desc in (D(6, 3, 2),):
        for H in hyperplanes(desc):
            assert stabilizes(identity(desc), H)


def test_scalar_examples():
    minus_id = diagonal(D(2, 1, 2), (1, 1))
    s = scalar_on_normal(minus_id, Coord(0))
    assert (s.exponent, s.modulus) == (2, 4) and not s.is_one  # -1 in U_4

    one = scalar_on_normal(identity(D(6, 3, 2)), Swap(0, 1, 0))
    assert one.is_one

    refl = from_permutation(D(1, 1, 2), (1, 0))
    s = scalar_on_normal(refl, Swap(0, 1, 0))
    assert (s.exponent, s.modulus) == (1, 2)  # the sign -1


def test_scalar_requires_stabilizer():
    w = from_permutation(D(1, 1, 3), (1, 2, 0))
    with pytest.raises(ValueError):
        scalar_on_normal(w, Swap(0, 1, 0))


def test_scalar_is_multiplicative_along_powers():
    rng = random.Random(31)
    for desc in (D(6, 3, 2), D(2, 2, 3)):
        pool = list(enumerate_elements(desc))
        planes = hyperplanes(desc)
        for _ in range(200):
            w, H, n = rng.choice(pool), rng.choice(planes), rng.randrange(6)
            if stabilizes(w, H) and stabilizes(w**n, H):
                assert scalar_on_normal(w**n, H) == scalar_on_normal(w, H) ** n


def test_in_parabolic_examples():
    s3 = D(1, 1, 3)
    assert not in_parabolic(from_permutation(s3, (1, 0, 2)), Swap(0, 1, 0))
    for H in hyperplanes(s3):
        assert in_parabolic(identity(s3), H)
    s5 = D(1, 1, 5)
    w = from_permutation(s5, (0, 1, 3, 4, 2))  # 3-cycle on {3,4,5}
    assert in_parabolic(w, Swap(0, 1, 0))


def test_in_parabolic_implies_stabilizes():
    rng = random.Random(37)
    for desc in (D(4, 2, 2), D(2, 1, 3)):
        pool = list(enumerate_elements(desc))
        for _ in range(150):
            w = rng.choice(pool)
            H = rng.choice(hyperplanes(desc))
            if in_parabolic(w, H):
                assert stabilizes(w, H)


def test_orbits_examples():
    s3 = D(1, 1, 3)
    G = closure(s3, [from_permutation(s3, (1, 2, 0))])
    assert orbits(G) == ((0, 1, 2),)
    trivial = closure(s3, [identity(s3)])
    assert orbits(trivial) == ((0,), (1,), (2,))
    d332 = D(3, 3, 2)
    G = closure(d332, [diagonal(d332, (1, 2))])
    assert orbits(G) == ((0, 1, 2),)  # the swaps t = 0, 1, 2 form one orbit


def test_orbits_partition_everything():
    for desc in (D(6, 3, 2), D(2, 2, 3)):
        G = closure(desc, [next(iter(enumerate_elements(desc)))])
        covered = sorted(i for orbit in orbits(G) for i in orbit)
        assert covered == list(range(len(hyperplanes(desc))))


def test_faithfulness_examples():
    d212 = D(2, 1, 2)
    assert not acts_faithfully_on_arrangement(closure(d212, [diagonal(d212, (1, 1))]))
    s3 = D(1, 1, 3)
    assert acts_faithfully_on_arrangement(closure(s3, [identity(s3)]))
    assert acts_faithfully_on_arrangement(closure(s3, [from_permutation(s3, (1, 2, 0))]))


def test_faithfulness_equals_trivial_center_intersection():
    for desc in (D(2, 1, 2), D(3, 3, 3), D(6, 6, 2)):
        Z = center(desc)
        for w in enumerate_elements(desc):
            G = closure(desc, [w])
            expected = all(g.is_identity for g in G.elements & Z.elements)
            assert acts_faithfully_on_arrangement(G) == expected


def test_faithfulness_needs_nonempty_arrangement():
    desc = D(1, 1, 1)
    with pytest.raises(ValueError):
        acts_faithfully_on_arrangement(closure(desc, [identity(desc)]))


def test_hyperplane_text_roundtrip():
    desc = D(6, 3, 2)
    assert format_hyperplane(Swap(0, 1, 4)) == "H[1,2;4]"
    assert format_hyperplane(Coord(1)) == "H[2]"
    for H in hyperplanes(desc):
        assert parse_hyperplane(desc, format_hyperplane(H)) == H
    # reversed indices normalize: z_2 = z^1 z_1 is z_1 = z^-1 z_2
    assert parse_hyperplane(desc, "H[2,1;1]") == Swap(0, 1, 5)


def test_hyperplane_parse_errors():
    with pytest.raises(ParseError):
        parse_hyperplane(D(3, 3, 2), "H[1]")  # no Coord planes when d = 1
    with pytest.raises(ParseError):
        parse_hyperplane(D(3, 3, 2), "H[1,5;0]")
    with pytest.raises(ParseError):
        parse_hyperplane(D(3, 3, 2), "nonsense")


def test_hyperplane_index_is_canonical():
    for desc in GRID:
        index = hyperplane_index(desc)
        for k, H in enumerate(hyperplanes(desc)):
            assert index[H] == k
