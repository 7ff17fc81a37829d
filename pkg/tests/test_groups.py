import pytest
from hypothesis import given, settings, strategies as st

from groupshift import (DirectProduct, FiniteGroup, FiniteIndexData, FreeAbelianGroup, FreeGroup, Homomorphism,
                        InputError, ball, coset_rewrite, cyclic_group, hom_apply, is_identity, normal_form)

F2 = FreeGroup("ab")
Z = FreeAbelianGroup(1)
Z2 = FreeAbelianGroup(2)
C3 = cyclic_group(3)
S3 = FiniteGroup(
    ["e", "r", "rr", "f", "fr", "frr"],
    # composition table of the dihedral group of order 6, rows times columns
    [["e", "r", "rr", "f", "fr", "frr"],
     ["r", "rr", "e", "frr", "f", "fr"],
     ["rr", "e", "r", "fr", "frr", "f"],
     ["f", "fr", "frr", "e", "r", "rr"],
     ["fr", "frr", "f", "rr", "e", "r"],
     ["frr", "f", "fr", "r", "rr", "e"]],
    {"r": "r", "f": "f"},
)
ZxC3 = DirectProduct(Z, C3)
ALL = [F2, Z, Z2, C3, S3, ZxC3]


def test_word_problem_examples():
    assert not is_identity(F2, "abAB")
    assert is_identity(Z2, "abAB")
    assert is_identity(C3, "sss")
    assert normal_form(F2, "aAbba") == ("b", "b", "a")
    assert normal_form(Z2, "bAab") == ("b", "b")


def test_ball_sizes():
    assert set(ball(Z, 2)) == {(), ("a",), ("A",), ("a", "a"), ("A", "A")}
    assert len(ball(F2, 2)) == 17
    assert len(ball(Z2, 2)) == 13
    assert len(ball(C3, 5)) == 3


def test_ball_is_shortlex_sorted_and_deterministic():
    b = ball(F2, 3)
    assert b == ball(F2, 3)
    assert b == sorted(b, key=F2.sort_key)
    assert [len(w) for w in b] == sorted(len(w) for w in b)


def test_ball_sizes_match_lattice_count():
    for n in range(5):
        expected = sum(1 for x in range(-n, n + 1) for y in range(-n, n + 1) if abs(x) + abs(y) <= n)
        assert len(ball(Z2, n)) == expected


def test_hom_apply_examples():
    proj = Homomorphism(Z2, Z, {"a": "a", "b": ""})
    assert hom_apply(proj, "aab") == ("a", "a")
    ident = Homomorphism.identity(F2)
    assert hom_apply(ident, "abBa") == ("a", "a")
    ab = Homomorphism(F2, Z2, {"a": "a", "b": "b"})
    assert hom_apply(ab, "abAB") == ()


def test_hom_rejects_foreign_letters():
    proj = Homomorphism(Z2, Z, {"a": "a", "b": ""})
    with pytest.raises(InputError):
        hom_apply(proj, "ax")


def test_hom_checks_relators():
    # F2 -> Z2 is fine, but Z2 -> F2 sending a, b to free generators breaks commutativity
    with pytest.raises(InputError):
        Homomorphism(Z2, F2, {"a": "a", "b": "b"})


def test_coset_rewrite_examples():
    H = FreeAbelianGroup(1, bases="h")
    d = FiniteIndexData(Z, H, {"h": "aa"}, ["", "a"])
    assert coset_rewrite(d, "aaaaa") == (("a",), ("h", "h"))
    assert coset_rewrite(d, "") == ((), ())
    assert coset_rewrite(d, "aa") == ((), ("h",))


def test_finite_index_rejects_bad_transversal():
    H = FreeAbelianGroup(1, bases="h")
    with pytest.raises(InputError):
        FiniteIndexData(Z, H, {"h": "aa"}, ["", "aa"])


def _words(G, max_len=8):
    return st.lists(st.sampled_from(G.gens.letters), max_size=max_len).map(tuple)


@pytest.mark.parametrize("G", ALL, ids=repr)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_normal_form_is_idempotent_and_class_constant(G, data):
    w = data.draw(_words(G))
    nf = G.normal_form(w)
    assert G.normal_form(nf) == nf
    # w and w * r for a relator-like identity word land on the same normal form
    u = data.draw(_words(G, 4))
    w2 = w + u + G.gens.invert(u)
    assert G.is_identity(G.multiply(w, G.inverse(w2)))
    assert G.normal_form(w2) == nf


@pytest.mark.parametrize("G", ALL, ids=repr)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ball_contains_short_words(G, data):
    w = data.draw(_words(G, 3))
    assert G.normal_form(w) in set(ball(G, 3))
    assert set(ball(G, 2)) <= set(ball(G, 3))


@settings(max_examples=60, deadline=None)
@given(u=_words(F2), v=_words(F2))
def test_hom_apply_is_multiplicative(u, v):
    h = Homomorphism(F2, S3, {"a": "r", "b": "f"})
    lhs = hom_apply(h, u + v)
    rhs = S3.multiply(hom_apply(h, u), hom_apply(h, v))
    assert S3.equal(lhs, rhs)


@settings(max_examples=80, deadline=None)
@given(v=_words(Z2, 10))
def test_coset_rewrite_round_trip(v):
    H = FreeAbelianGroup(2, bases="hk")
    d = FiniteIndexData(Z2, H, {"h": "aa", "k": "b"}, ["", "a"])
    t, u = coset_rewrite(d, v)
    assert t in d.transversal
    assert Z2.normal_form(Z2.multiply(t, d.embed(u))) == Z2.normal_form(v)
