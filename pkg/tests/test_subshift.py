import random

import pytest
from hypothesis import given, settings, strategies as st

from groupshift import (CapacityError, InputError, LazyConfiguration, OneOf, Pattern, Sft, admissible_patches,
                        check_patch, count_admissible, disjoint_union_sft, full_shift, intersect_sft, product_sft,
                        stabilizer_sft, verify_configuration, verify_pattern)
from groupshift.subshift import admissible_patterns_on

import helpers as h

Z, Z2, F2 = h.Z, h.Z2, h.F2


def _ball_patch(G, n, symbols):
    return Pattern(tuple(sorted(G.ball(n), key=G.cell_key)), tuple(symbols))


def test_check_patch_examples():
    x = h.golden()
    assert check_patch(x, _ball_patch(Z, 2, "01010"))
    assert not check_patch(x, _ball_patch(Z, 2, "01100"))
    y = h.golden(F2)
    zeros = Pattern.make(F2, {w: "0" for w in F2.ball(3)})
    assert check_patch(y, zeros)


def test_check_patch_rejects_non_ball():
    x = h.golden()
    with pytest.raises(InputError):
        check_patch(x, Pattern.make(Z, {(): "0", ("a", "a"): "1"}))


def test_admissible_patch_counts():
    assert len(admissible_patches(h.golden(), 2)) == 13
    assert len(admissible_patches(full_shift(Z, "01"), 1)) == 8
    assert admissible_patches(h.z_sft("01", ["0", "1"]), 1) == []


def test_admissible_patches_are_lexicographic_and_repeatable():
    pats = admissible_patches(h.golden(), 3)
    seqs = [p.symbols for p in pats]
    assert seqs == sorted(seqs)
    assert pats == admissible_patches(h.golden(), 3)
    assert all(p.support == pats[0].support for p in pats)


def test_admissible_patches_capacity():
    with pytest.raises(CapacityError):
        admissible_patches(full_shift(Z2, "01"), 2, max_patches=100)


def test_admissible_patches_below_window_radius():
    with pytest.raises(InputError):
        admissible_patches(h.z_sft("01", ["111"]), 1)


def test_counts_match_brute_force_on_z2_and_f2():
    rng = random.Random(11)
    for G, n in ((Z2, 1), (Z2, 2), (F2, 1)):
        for _ in range(5):
            forb = []
            for _ in range(rng.randint(1, 3)):
                s = rng.choice(G.gens.letters)
                forb.append(Pattern.make(G, {(): rng.choice("01"), (s,): rng.choice("01")}))
            x = Sft(G, "01", forb)
            assert count_admissible(x, n) == h.brute_force_count(x, G.ball(n))


def test_one_of_entries_expand():
    G = Z
    p = Pattern.make(G, {(): OneOf({"1", "2"}), ("a",): "1"})
    x = Sft(G, "012", [p])
    plain = Sft(G, "012", p.expand())
    for n in range(1, 4):
        assert count_admissible(x, n) == count_admissible(plain, n) == h.brute_force_count(plain, G.ball(n))


def test_pattern_canonical_form():
    p = Pattern.make(Z, {("a", "A", "a"): "1", (): "0"})
    q = Pattern.make(Z, [((), "0"), (("a",), "1")])
    assert p == q and hash(p) == hash(q)
    with pytest.raises(InputError):
        Pattern.make(Z, {("a",): "0", ("a", "a", "A"): "1"})


def test_sft_rejects_foreign_symbols():
    with pytest.raises(InputError):
        Sft(Z, "01", [Pattern.make(Z, {(): "2"})])


def test_product_and_union_examples():
    g = h.golden()
    assert count_admissible(product_sft(g, g), 1) == 25
    assert count_admissible(disjoint_union_sft(g, g), 1) == 10
    dot = full_shift(Z, ["."])
    for n in range(4):
        assert count_admissible(product_sft(g, dot), n) == count_admissible(g, n)
    empty = h.z_sft("01", ["0", "1"])
    assert count_admissible(product_sft(g, empty), 2) == 0
    assert count_admissible(disjoint_union_sft(g, empty), 3) == count_admissible(g, 3)
    assert count_admissible(disjoint_union_sft(empty, empty), 1) == 0


def test_union_has_no_mixed_patches_on_z2():
    g = h.golden(Z2)
    u = disjoint_union_sft(g, g)
    for n in (1, 2):
        assert count_admissible(u, n) == 2 * count_admissible(g, n)


def test_group_mismatch_is_an_input_error():
    with pytest.raises(InputError):
        product_sft(h.golden(), h.golden(Z2))
    with pytest.raises(InputError):
        intersect_sft(h.golden(), full_shift(Z, "012"))


def test_stabilizer_examples():
    fix_a = stabilizer_sft(Z, "01", "a")
    assert count_admissible(fix_a, 2) == 2
    assert count_admissible(stabilizer_sft(Z, "01", "aa"), 2) == 4
    with pytest.raises(InputError):
        stabilizer_sft(Z, "01", "aA")


def test_stabilizer_on_free_group_forces_right_periodicity():
    fix = stabilizer_sft(F2, "01", "ab")
    # word-length parity survives free reduction and appending two letters
    c = LazyConfiguration(F2, "01", lambda w: "01"[len(w) % 2])
    assert verify_configuration(fix, c, 4).ok
    d = LazyConfiguration(F2, "01", lambda w: "01"[w[-1:] == ("a",)])
    assert not verify_configuration(fix, d, 3).ok


def test_intersection_counts():
    g = h.golden()
    assert count_admissible(intersect_sft(g, g), 3) == count_admissible(g, 3)
    both = intersect_sft(intersect_sft(g, stabilizer_sft(Z, "01", "a")), h.z_sft("01", ["00"]))
    assert count_admissible(both, 1) == 0


def test_verify_configuration_examples():
    g = h.golden()
    zeros = LazyConfiguration.constant(Z, "01", "0")
    ones = LazyConfiguration.constant(Z, "01", "1")
    alternating = LazyConfiguration(Z, "01", lambda w: "01"[len(w) % 2])
    assert verify_configuration(g, zeros, 50).ok
    v = verify_configuration(g, ones, 1)
    assert not v.ok and v.anchor == () and v.pattern == g.forbidden[0]
    assert verify_configuration(g, alternating, 100).ok


def test_verify_pattern_finds_translates_anywhere():
    g = h.golden()
    p = Pattern.make(Z, {("a", "a", "a"): "1", ("a", "a", "a", "a"): "1", (): "0"})
    v = verify_pattern(g, p)
    assert not v.ok and v.anchor == ("a", "a", "a")


def test_lazy_configuration_is_group_consistent():
    calls = []

    def fn(w):
        calls.append(w)
        return "01"[len(w) % 2]

    c = LazyConfiguration(F2, "01", fn)
    assert c("aAb") == c("b") == c(("b",))
    assert calls == [("b",)]


@settings(max_examples=30, deadline=None)
@given(words=st.lists(st.text("01", min_size=1, max_size=3), max_size=4), n=st.integers(1, 4))
def test_z_counts_match_word_enumeration(words, n):
    x = h.z_sft("01", words)
    support = [("a",) * i for i in range(n)]
    assert len(admissible_patterns_on(x, support)) == h.z_count_words("01", words, n)


@settings(max_examples=25, deadline=None)
@given(wx=st.lists(st.text("01", min_size=1, max_size=2), max_size=3),
       wy=st.lists(st.text("01", min_size=1, max_size=2), max_size=3), n=st.integers(1, 3))
def test_lattice_counts_property(wx, wy, n):
    x, y = h.z_sft("01", wx), h.z_sft("01", wy)
    cx, cy = count_admissible(x, n), count_admissible(y, n)
    assert count_admissible(product_sft(x, y), n) == cx * cy
    assert count_admissible(disjoint_union_sft(x, y), n) == cx + cy
