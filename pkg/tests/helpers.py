"""Random instance generators and brute-force oracles shared by the test modules.

The oracles here deliberately avoid the package's search kernels: they walk
plain Python strings and dicts so that agreement with the library means
something.
"""
from __future__ import annotations

import itertools
import random

from groupshift import FreeAbelianGroup, FreeGroup, LazyConfiguration, Pattern, Sft

Z = FreeAbelianGroup(1)
Z2 = FreeAbelianGroup(2)
F2 = FreeGroup("ab")


def z_word_pattern(word, G=Z):
    """Forbidden word read left to right starting at the identity."""
    step = G.gens.bases[0]
    return Pattern.make(G, {(step,) * i: ch for i, ch in enumerate(word)})


def z_sft(alphabet, words, G=Z):
    """SFT on a copy of Z forbidding the given words read along its generator."""
    return Sft(G, list(alphabet), [z_word_pattern(w, G) for w in words])


def golden(G=Z):
    if len(G.gens.bases) == 1:
        return z_sft("01", ["11"], G)
    return Sft(G, "01", [Pattern.make(G, {(): "1", (s,): "1"}) for s in G.gens.bases])


def random_z_words(rng: random.Random, max_alphabet=3, max_len=3, max_words=7):
    k = rng.randint(1, max_alphabet)
    alphabet = "012"[:k]
    n = rng.randint(0, max_words)
    words = sorted({"".join(rng.choice(alphabet) for _ in range(rng.randint(1, max_len))) for _ in range(n)})
    return alphabet, words


# -- one-dimensional brute force ---------------------------------------------------------

def _avoids_at_end(s, words):
    return not any(s.endswith(w) for w in words)


def z_periodic_witness(alphabet, words, max_period=12):
    """Smallest-period cyclic word whose bi-infinite repetition avoids every word, or None."""
    longest = max((len(w) for w in words), default=1)
    for p in range(1, max_period + 1):
        stack = [""]
        while stack:
            s = stack.pop()
            if len(s) == p:
                # every cyclic window, including those wrapping around
                ext = s * (1 + (longest + p - 1) // p)
                if all(w not in ext for w in words):
                    return s
                continue
            for a in reversed(alphabet):
                t = s + a
                if _avoids_at_end(t, words):
                    stack.append(t)
    return None


def z_has_word(alphabet, words, length):
    """Is there an admissible word of the given length?"""
    stack = [""]
    while stack:
        s = stack.pop()
        if len(s) == length:
            return True
        for a in alphabet:
            t = s + a
            if _avoids_at_end(t, words):
                stack.append(t)
    return False


def z_count_words(alphabet, words, length):
    return sum(1 for t in itertools.product(alphabet, repeat=length)
               if not any(w in "".join(t) for w in words))


def z_oracle(alphabet, words, max_period=12, radius=12):
    """'nonempty' / 'empty' from periodic search plus exhaustion of length 2*radius+1 words."""
    if z_periodic_witness(alphabet, words, max_period) is not None:
        return "nonempty"
    if not z_has_word(alphabet, words, 2 * radius + 1):
        return "empty"
    return "inconclusive"


def window_graph_has_cycle(windows):
    """Y(L) on Z is nonempty iff the overlap graph of the length-(2n+1) windows has a cycle."""
    windows = [tuple(w) for w in windows]
    succ = {w: [v for v in windows if w[1:] == v[:-1]] for w in windows}
    state = {}

    def dfs(w):
        state[w] = 1
        for v in succ[w]:
            if state.get(v) == 1 or (v not in state and dfs(v)):
                return True
        state[w] = 2
        return False

    return any(w not in state and dfs(w) for w in windows)


# -- generic brute force over any group --------------------------------------------------

def brute_force_count(x: Sft, cells):
    """Assignments of ``cells`` containing no forbidden translate that fits inside."""
    G = x.group
    cells = [G.normal_form(w) for w in cells]
    cellset = set(cells)
    placed = []
    for p in x.forbidden:
        for g in cells:
            spots = [G.multiply(g, f) for f in p.support]
            if all(s in cellset for s in spots):
                placed.append(list(zip(spots, p.symbols)))
    count = 0
    for combo in itertools.product(x.alphabet, repeat=len(cells)):
        val = dict(zip(cells, combo))
        if not any(all(val[s] == a or (isinstance(a, frozenset) and val[s] in a) for s, a in pl) for pl in placed):
            count += 1
    return count


# -- random configurations ---------------------------------------------------------------

def hashed_config(G, alphabet, seed, label="hashed"):
    """Deterministic pseudo-random configuration; string-seeded so it ignores PYTHONHASHSEED."""
    alphabet = tuple(alphabet)

    def fn(w):
        return random.Random(f"{seed}|{G.render(w)}").choice(alphabet)

    return LazyConfiguration(G, alphabet, fn, label)


def random_admissible_word(rng: random.Random, alphabet, words, length):
    """Randomized backtracking: a uniformly ordered search for one admissible word."""
    stack = [""]
    while stack:
        s = stack.pop()
        if len(s) == length:
            return s
        nxt = [s + a for a in alphabet if _avoids_at_end(s + a, words)]
        rng.shuffle(nxt)
        stack.extend(nxt)
    return None


def random_admissible_config(rng: random.Random, G=Z, radius=6):
    """A random admissible word on [-radius, radius] of a random nonempty SFT on ``G`` (a copy of Z).

    Outside that window the configuration continues pseudo-randomly.
    """
    while True:
        alphabet, words = random_z_words(rng, max_words=3)
        if z_periodic_witness(alphabet, words) is None:
            continue
        s = random_admissible_word(rng, alphabet, words, 2 * radius + 1)
        x = Sft(G, list(alphabet), [z_word_pattern(w, G) for w in words])
        cells = {G.from_vector((k,)): ch for k, ch in zip(range(-radius, radius + 1), s)}
        fill = hashed_config(G, x.alphabet, rng.random())
        return LazyConfiguration(G, x.alphabet, lambda w: cells[w] if w in cells else fill(w), "random"), x


def random_word(rng: random.Random, letters, max_len=5):
    return tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len)))


def random_nn_tree(rng: random.Random, max_alphabet=4, density=0.55):
    """Random nearest-neighbour constraints on F2: allowed pairs per base generator."""
    from groupshift import NearestNeighborTreeSft
    k = rng.randint(1, max_alphabet)
    alphabet = "0123"[:k]
    allowed = {}
    for s in F2.gens.bases:
        allowed[s] = {(a, b) for a in alphabet for b in alphabet if rng.random() < density}
        allowed[F2.gens.inv(s)] = {(b, a) for a, b in allowed[s]}
    return NearestNeighborTreeSft(F2, alphabet, allowed)
