import random

import pytest

from reflpvi.braid import (GenusError, OrbitBoundError, braid_act,
                           braid_act_quintuple, braid_act_word, cover_genus,
                           cycle_type, orbit, orbit_partition, reduce_word,
                           UnsupportedFingerprintActionError)
from reflpvi.cyclotomic import CycloNum
from reflpvi.fingerprints import Fingerprint, classify_triples, fingerprint
from reflpvi.linalg3 import Mat3


def _zero_fp():
    z = CycloNum.zero(1)
    m = CycloNum.from_rational(-1)
    return Fingerprint(m, m, m, z, z, z, z, z)


def test_reduce_word():
    assert reduce_word(["b1", "b1i", "b2"]) == ("b2",)
    assert reduce_word(["b1", "b2", "b2i", "b1i"]) == ()
    with pytest.raises(ValueError):
        reduce_word(["nope"])


def test_commuting_triple_swap():
    r1 = Mat3.from_rationals([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
    r2 = Mat3.from_rationals([[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    r3 = Mat3.from_rationals([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    image = braid_act("b1", [r1, r2, r3])
    assert image == (r2, r1, r3)


def test_braid_relation_and_inverses(g336, g213):
    rng = random.Random(5)
    pool = list(g213.elements) + list(g336.elements)
    for _ in range(25):
        triple = [rng.choice(pool) for _ in range(3)]
        lhs = braid_act_word(("b1", "b2", "b1"), triple)
        rhs = braid_act_word(("b2", "b1", "b2"), triple)
        assert all(a == b for a, b in zip(lhs, rhs))
        for letter, inv in (("b1", "b1i"), ("b2", "b2i")):
            back = braid_act(inv, braid_act(letter, triple))
            assert all(a == b for a, b in zip(back, triple))


def test_product_invariance(g336):
    rng = random.Random(6)
    for _ in range(10):
        triple = [rng.choice(g336.reflections) for _ in range(3)]
        prod = triple[0] * triple[1] * triple[2]
        for letter in ("b1", "b2", "b1i", "b2i"):
            im = braid_act(letter, triple)
            assert im[0] * im[1] * im[2] == prod


def test_pure_braid_preserves_component_classes(g336):
    rng = random.Random(7)
    for _ in range(5):
        triple = [rng.choice(g336.reflections) for _ in range(3)]
        squared = braid_act_word(("b1", "b1"), triple)
        for r, s in zip(triple, squared):
            assert r.det() == s.det() and r.trace() == s.trace()
        squared = braid_act_word(("b2", "b2"), triple)
        for r, s in zip(triple, squared):
            assert r.det() == s.det() and r.trace() == s.trace()


def test_quintuple_fixed_points():
    fp = _zero_fp()
    for letter in ("b1", "b2", "b1i", "b2i"):
        assert braid_act_quintuple(letter, fp) == fp


def test_quintuple_rrr_fixed_point():
    m = CycloNum.from_rational(-1)
    four = CycloNum.from_rational(4)
    meight = CycloNum.from_rational(-8)
    fp = Fingerprint(m, m, m, four, four, four, meight, meight)
    assert braid_act_quintuple("b2", fp) == fp
    assert braid_act_quintuple("b1", fp) == fp


def test_quintuple_requires_order_two():
    one = CycloNum.one(1)
    z = CycloNum.zero(1)
    fp = Fingerprint(one, one, one, z, z, z, z, z)
    with pytest.raises(UnsupportedFingerprintActionError):
        braid_act_quintuple("b1", fp)


def test_quintuple_matches_triple_action(g336):
    rng = random.Random(8)
    for _ in range(15):
        triple = [rng.choice(g336.reflections) for _ in range(3)]
        fp = fingerprint(triple)
        for letter in ("b1", "b2", "b1i", "b2i"):
            assert fingerprint(braid_act(letter, triple)) == \
                braid_act_quintuple(letter, fp)


def test_klein_orbits(g336):
    fp = fingerprint(list(g336.generators))
    full = orbit(fp, "full")
    pure = orbit(fp, "pure")
    assert full.branches == 7
    assert pure.branches == 7
    assert all(ct == (3, 2, 2) for ct in pure.cycle_types)
    assert pure.genus == 0
    # permutations are bijections
    for sigma in (pure.sigma1, pure.sigma2, pure.sigma_prod):
        assert sorted(sigma) == list(range(7))


def test_commuting_orbit_is_fixed():
    rep = orbit(_zero_fp(), "full")
    assert rep.branches == 1
    assert rep.genus == 0


def test_orbit_seed_by_triple(g336):
    rep = orbit(list(g336.generators), "pure")
    assert rep.branches == 7


def test_orbit_partition(g336):
    classes = classify_triples(g336, first_fixed=g336.generators[0])
    assert orbit_partition(classes) == [1, 1, 3, 3, 4, 4, 6, 7, 7, 9]
    size7 = [c for c in classes if c.generated_order == 336]
    assert len(size7) == 14
    # every class outside the size-7 orbits generates a proper subgroup
    for cls in classes:
        rep = orbit(cls.fingerprint, "full")
        if rep.branches == 7:
            assert cls.generated_order == 336
        else:
            assert cls.generated_order < 336


def test_orbit_partition_small(g213):
    classes = classify_triples(g213)
    sizes = orbit_partition(classes)
    assert sum(sizes) == len(classes)


def test_orbit_bound():
    m = CycloNum.from_rational(-1)
    three = CycloNum.from_rational(3)
    fp = Fingerprint(m, m, m, three, three, three,
                     CycloNum.one(1), CycloNum.from_rational(2))
    with pytest.raises(OrbitBoundError):
        orbit(fp, "full", max_size=50)


def test_cycle_type():
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type((1, 2, 0)) == (3,)


def test_cover_genus():
    assert cover_genus(7, [(3, 2, 2)] * 3) == 0
    assert cover_genus(1, [(1,), (1,), (1,)]) == 0
    assert cover_genus(2, [(2,), (2,), (1, 1)]) == 0
    assert cover_genus(3, [(3,), (3,), (3,)]) == 1
    with pytest.raises(GenusError):
        cover_genus(3, [(3,), (3,), (2,)])
    with pytest.raises(GenusError):
        cover_genus(2, [(2,), (1, 1), (1, 1)])
