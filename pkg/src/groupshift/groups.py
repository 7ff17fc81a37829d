"""Finitely generated groups with solvable word problem.

Words are tuples of letter strings; the empty tuple is the identity. Every
group kind keeps an internal hashable *element* representation (reduced
tuples, exponent vectors, table indices, pairs) and renders a canonical
normal-form word from it. The generator order of a group fixes every
lexicographic tie-break made downstream.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import CapacityError, InputError

Word = tuple  # tuple[str, ...]


def free_reduce(gens: "GeneratorSet", word) -> Word:
    out = []
    for x in word:
        if out and out[-1] == gens.inv(x):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _swapcase_inverse(letter: str) -> str:
    inv = letter.swapcase()
    if inv == letter:
        raise InputError(f"cannot derive an inverse letter for {letter!r}; pass an explicit inverses map")
    return inv


class GeneratorSet:
    """Ordered symmetric generating letters with their inverse pairing."""

    def __init__(self, letters: Sequence[str], inverse: Mapping[str, str]):
        self.letters = tuple(letters)
        if len(set(self.letters)) != len(self.letters):
            raise InputError(f"duplicate generator letters in {self.letters}")
        self._index = {x: i for i, x in enumerate(self.letters)}
        self._inverse = dict(inverse)
        for x in self.letters:
            y = self._inverse.get(x)
            if y not in self._index or self._inverse.get(y) != x:
                raise InputError(f"inverse pairing is not an involution at letter {x!r}")
        if set(self._inverse) != set(self.letters):
            raise InputError("inverse map must cover exactly the generator letters")
        bases = []
        for x in self.letters:
            if self._inverse[x] not in bases:
                bases.append(x)
        self.bases = tuple(bases)
        self._tokens = sorted(self.letters, key=len, reverse=True)
        self._single = all(len(x) == 1 for x in self.letters)

    @classmethod
    def from_bases(cls, bases: Sequence[str], inverses: Mapping[str, str] | None = None,
                   involutions: Iterable[str] = ()) -> "GeneratorSet":
        inverses = dict(inverses or {})
        involutions = set(involutions)
        letters, inverse = [], {}
        for b in bases:
            if b in involutions or inverses.get(b) == b:
                letters.append(b)
                inverse[b] = b
                continue
            ib = inverses.get(b) or _swapcase_inverse(b)
            letters += [b, ib]
            inverse[b], inverse[ib] = ib, b
        return cls(letters, inverse)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self._index

    def __eq__(self, other):
        return isinstance(other, GeneratorSet) and self.letters == other.letters and self._inverse == other._inverse

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"GeneratorSet({list(self.letters)})"

    def index(self, letter: str) -> int:
        return self._index[letter]

    def inv(self, letter: str) -> str:
        return self._inverse[letter]

    def invert(self, word: Word) -> Word:
        return tuple(self._inverse[x] for x in reversed(word))

    def parse(self, w) -> Word:
        """Accept a string (whitespace ignored, greedy longest-letter match) or a sequence of letters."""
        if isinstance(w, str):
            out = []
            i, n = 0, len(w)
            while i < n:
                if w[i].isspace():
                    i += 1
                    continue
                for tok in self._tokens:
                    if w.startswith(tok, i):
                        out.append(tok)
                        i += len(tok)
                        break
                else:
                    raise InputError(f"unknown letter at {w[i:]!r} (generators {list(self.letters)})")
            return tuple(out)
        word = tuple(w)
        for x in word:
            if x not in self._index:
                raise InputError(f"unknown letter {x!r} (generators {list(self.letters)})")
        return word

    def render(self, word: Word) -> str:
        return ("" if self._single else " ").join(word)

    def shortlex(self, word: Word):
        return (len(word), tuple(self._index[x] for x in word))


class Group:
    """Base class; subclasses supply the element arithmetic."""

    kind = "abstract"
    gens: GeneratorSet

    # -- element level (subclass API) -------------------------------------------------
    def _letter(self, letter) -> Hashable:
        raise NotImplementedError

    def _mul(self, e, f):
        raise NotImplementedError

    def _inv(self, e):
        raise NotImplementedError

    def _to_word(self, e) -> Word:
        raise NotImplementedError

    @property
    def _identity(self):
        raise NotImplementedError

    def _elem_of(self, word: Word):
        e = self._identity
        for x in word:
            e = self._mul(e, self._letter(x))
        return e

    # -- public word level ------------------------------------------------------------
    def word(self, w) -> Word:
        return self.gens.parse(w)

    def element(self, w):
        return self._elem_of(self.gens.parse(w))

    def normal_form(self, w) -> Word:
        return self._to_word(self.element(w))

    def is_identity(self, w) -> bool:
        return self.element(w) == self._identity

    def equal(self, u, v) -> bool:
        return self.element(u) == self.element(v)

    def multiply(self, *words) -> Word:
        e = self._identity
        for w in words:
            e = self._mul(e, self.element(w))
        return self._to_word(e)

    def inverse(self, w) -> Word:
        return self._to_word(self._inv(self.element(w)))

    def length(self, w) -> int:
        return len(self.normal_form(w))

    def render(self, w) -> str:
        return self.gens.render(self.gens.parse(w))

    def sort_key(self, w):
        return self.gens.shortlex(self.gens.parse(w))

    def cell_key(self, w):
        """Order used to lay out pattern cells; shortlex unless a group has a natural coordinate order."""
        return self.sort_key(w)

    def ball_elements(self, n: int) -> dict:
        """Map element -> distance for every element within word distance ``n``."""
        if n < 0:
            raise InputError("ball radius must be >= 0")
        dist = {self._identity: 0}
        frontier = [self._identity]
        letters = [self._letter(x) for x in self.gens.letters]
        for r in range(1, n + 1):
            nxt = []
            for e in frontier:
                for le in letters:
                    f = self._mul(e, le)
                    if f not in dist:
                        dist[f] = r
                        nxt.append(f)
            if not nxt:
                break
            frontier = nxt
        return dist

    def ball(self, n: int) -> list:
        """Normal forms of all elements at distance <= n, sorted length-then-lexicographic."""
        words = [self._to_word(e) for e in self.ball_elements(n)]
        return sorted(words, key=self.gens.shortlex)

    @property
    def relators(self) -> list:
        return []

    def signature(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Group) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    @property
    def is_tree(self) -> bool:
        """True when the Cayley graph on the generators is a tree (free groups, Z)."""
        return False


class FreeGroup(Group):
    kind = "free"

    def __init__(self, bases: Sequence[str], inverses: Mapping[str, str] | None = None):
        self.gens = GeneratorSet.from_bases(bases, inverses)
        if len(self.gens.letters) != 2 * len(self.gens.bases):
            raise InputError("free generators cannot be involutions")
        self.rank = len(self.gens.bases)

    @property
    def _identity(self):
        return ()

    def _letter(self, letter):
        return (letter,)

    def _mul(self, e, f):
        inv = self.gens.inv
        i = 0
        m = min(len(e), len(f))
        while i < m and e[len(e) - 1 - i] == inv(f[i]):
            i += 1
        return e[:len(e) - i] + f[i:]

    def _inv(self, e):
        return self.gens.invert(e)

    def _to_word(self, e):
        return e

    def _elem_of(self, word):
        return free_reduce(self.gens, word)

    def cell_key(self, w):
        word = self.normal_form(w)
        if self.rank == 1:
            base = self.gens.bases[0]
            return (sum(1 if x == base else -1 for x in word),)
        return self.gens.shortlex(word)

    @property
    def is_tree(self):
        return True

    def signature(self):
        return ("free", self.gens.letters, tuple(self.gens.inv(x) for x in self.gens.letters))

    def __repr__(self):
        return f"FreeGroup({list(self.gens.bases)})"


class FreeAbelianGroup(Group):
    kind = "free_abelian"

    def __init__(self, rank: int, bases: Sequence[str] | None = None,
                 inverses: Mapping[str, str] | None = None):
        if rank < 0:
            raise InputError("rank must be >= 0")
        if bases is None:
            if rank > 26:
                raise InputError("pass explicit generator names for rank > 26")
            bases = "abcdefghijklmnopqrstuvwxyz"[:rank]
        if len(bases) != rank:
            raise InputError("number of generator names must equal the rank")
        self.rank = rank
        self.gens = GeneratorSet.from_bases(list(bases), inverses)
        if len(self.gens.letters) != 2 * rank:
            raise InputError("free abelian generators cannot be involutions")
        self._vec = {}
        for i, b in enumerate(self.gens.bases):
            v = [0] * rank
            v[i] = 1
            self._vec[b] = tuple(v)
            v[i] = -1
            self._vec[self.gens.inv(b)] = tuple(v)

    @property
    def _identity(self):
        return (0,) * self.rank

    def _letter(self, letter):
        return self._vec[letter]

    def _mul(self, e, f):
        return tuple(a + b for a, b in zip(e, f))

    def _inv(self, e):
        return tuple(-a for a in e)

    def _elem_of(self, word):
        v = [0] * self.rank
        for x in word:
            for i, a in enumerate(self._vec[x]):
                v[i] += a
        return tuple(v)

    def _to_word(self, e):
        out = []
        for b, k in zip(self.gens.bases, e):
            out += [b] * k if k > 0 else [self.gens.inv(b)] * (-k)
        return tuple(out)

    def vector(self, w) -> tuple:
        return self.element(w)

    def from_vector(self, v) -> Word:
        return self._to_word(tuple(int(a) for a in v))

    def cell_key(self, w):
        return self.element(w)

    @property
    def is_tree(self):
        return self.rank == 1

    @property
    def relators(self):
        out = []
        for a, b in combinations(self.gens.bases, 2):
            out.append((a, b, self.gens.inv(a), self.gens.inv(b)))
        return out

    def signature(self):
        return ("free_abelian", self.gens.letters, tuple(self.gens.inv(x) for x in self.gens.letters))

    def __repr__(self):
        return f"FreeAbelianGroup({self.rank})"


class FiniteGroup(Group):
    """A finite group given by a multiplication table over named elements."""

    kind = "finite"

    def __init__(self, elements: Sequence[str], table, generators: Mapping[str, object] | None = None,
                 inverses: Mapping[str, str] | None = None, check: bool = True):
        self.elements = tuple(str(e) for e in elements)
        n = len(self.elements)
        if n == 0:
            raise InputError("a finite group needs at least one element")
        pos = {e: i for i, e in enumerate(self.elements)}
        if len(pos) != n:
            raise InputError("duplicate element names")

        def idx(v):
            if isinstance(v, int) and not isinstance(v, bool):
                if not 0 <= v < n:
                    raise InputError(f"table entry {v} out of range")
                return v
            if str(v) not in pos:
                raise InputError(f"unknown element {v!r}")
            return pos[str(v)]

        self.table = tuple(tuple(idx(v) for v in row) for row in table)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InputError("multiplication table must be n x n")
        ident = [e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n))]
        if not ident:
            raise InputError("multiplication table has no identity")
        self.identity_index = ident[0]
        self._invs = []
        for x in range(n):
            ys = [y for y in range(n) if self.table[x][y] == self.identity_index]
            if len(ys) != 1:
                raise InputError(f"element {self.elements[x]!r} has no unique inverse")
            self._invs.append(ys[0])
        if check:
            for row in self.table:
                if len(set(row)) != n:
                    raise InputError("multiplication table is not a Latin square")
            if n <= 64:
                t = self.table
                for a in range(n):
                    for b in range(n):
                        tab = t[a][b]
                        for c in range(n):
                            if t[tab][c] != t[a][t[b][c]]:
                                raise InputError("multiplication table is not associative")

        if generators is None:
            generators = {self.elements[x]: x for x in range(n) if x != self.identity_index}
            inverses = {self.elements[x]: self.elements[self._invs[x]] for x in range(n) if x != self.identity_index}
        gen_idx = {str(k): idx(v) for k, v in generators.items()}
        inverses = dict(inverses or {})
        letters, inverse, letter_elem = [], {}, {}
        for g, e in gen_idx.items():
            if g in inverse:
                continue
            ie = self._invs[e]
            if ie == e:
                ig = inverses.get(g, g)
            else:
                ig = inverses.get(g) or _swapcase_inverse(g)
            if ig in gen_idx and gen_idx[ig] != ie:
                raise InputError(f"letter {ig!r} is named as the inverse of {g!r} but maps elsewhere")
            letters.append(g)
            inverse[g] = ig
            letter_elem[g] = e
            if ig != g:
                letters.append(ig)
                inverse[ig] = g
                letter_elem[ig] = ie
        self.gens = GeneratorSet(letters, inverse)
        self._letter_elem = letter_elem
        # shortlex-minimal representative per element
        reps = {self.identity_index: ()}
        queue = deque([self.identity_index])
        while queue:
            e = queue.popleft()
            for x in self.gens.letters:
                f = self.table[e][letter_elem[x]]
                if f not in reps:
                    reps[f] = reps[e] + (x,)
                    queue.append(f)
        if len(reps) != n:
            raise InputError("generators do not generate the whole finite group")
        self._reps = reps

    @property
    def _identity(self):
        return self.identity_index

    def _letter(self, letter):
        return self._letter_elem[letter]

    def _mul(self, e, f):
        return self.table[e][f]

    def _inv(self, e):
        return self._invs[e]

    def _to_word(self, e):
        return self._reps[e]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_name(self, w) -> str:
        return self.elements[self.element(w)]

    def word_of(self, name) -> Word:
        return self._reps[self.elements.index(str(name))]

    def cell_key(self, w):
        return (self.element(w),)

    @property
    def relators(self):
        out = []
        for e, r in sorted(self._reps.items()):
            for x in self.gens.letters:
                f = self.table[e][self._letter_elem[x]]
                rel = r + (x,) + self.gens.invert(self._reps[f])
                if free_reduce(self.gens, rel):
                    out.append(rel)
        return out

    def signature(self):
        return ("finite", self.elements, self.table,
                tuple((x, self._letter_elem[x], self.gens.inv(x)) for x in self.gens.letters))

    def __repr__(self):
        return f"FiniteGroup(order={len(self.elements)})"


def cyclic_group(k: int, letter: str = "s", names: Sequence[str] | None = None) -> FiniteGroup:
    """Z/k with one generator; element ``i`` is named ``str(i)``."""
    if k < 1:
        raise InputError("cyclic group order must be >= 1")
    names = list(names) if names else [str(i) for i in range(k)]
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    gens = {letter: 1 % k} if k > 1 else {}
    return FiniteGroup(names, table, gens, check=False)


class DirectProduct(Group):
    kind = "product"

    def __init__(self, left: Group, right: Group):
        self.left, self.right = left, right
        clash = set(left.gens.letters) & set(right.gens.letters)
        if clash:
            lmap = {x: f"{x}_1" for x in left.gens.letters}
            rmap = {x: f"{x}_2" for x in right.gens.letters}
        else:
            lmap = {x: x for x in left.gens.letters}
            rmap = {x: x for x in right.gens.letters}
        self._lmap, self._rmap = lmap, rmap
        self._lback = {v: k for k, v in lmap.items()}
        self._rback = {v: k for k, v in rmap.items()}
        letters = [lmap[x] for x in left.gens.letters] + [rmap[x] for x in right.gens.letters]
        inverse = {lmap[x]: lmap[left.gens.inv(x)] for x in left.gens.letters}
        inverse.update({rmap[x]: rmap[right.gens.inv(x)] for x in right.gens.letters})
        self.gens = GeneratorSet(letters, inverse)

    @property
    def _identity(self):
        return (self.left._identity, self.right._identity)

    def _letter(self, letter):
        if letter in self._lback:
            return (self.left._letter(self._lback[letter]), self.right._identity)
        return (self.left._identity, self.right._letter(self._rback[letter]))

    def _mul(self, e, f):
        return (self.left._mul(e[0], f[0]), self.right._mul(e[1], f[1]))

    def _inv(self, e):
        return (self.left._inv(e[0]), self.right._inv(e[1]))

    def _to_word(self, e):
        return (tuple(self._lmap[x] for x in self.left._to_word(e[0]))
                + tuple(self._rmap[x] for x in self.right._to_word(e[1])))

    def embed_left(self, w) -> Word:
        return tuple(self._lmap[x] for x in self.left.word(w))

    def embed_right(self, w) -> Word:
        return tuple(self._rmap[x] for x in self.right.word(w))

    def components(self, w) -> tuple:
        e = self.element(w)
        return self.left._to_word(e[0]), self.right._to_word(e[1])

    def cell_key(self, w):
        lw, rw = self.components(w)
        return (self.left.cell_key(lw), self.right.cell_key(rw))

    @property
    def relators(self):
        out = [self.embed_left(r) for r in self.left.relators]
        out += [self.embed_right(r) for r in self.right.relators]
        for a in self.left.gens.bases:
            for b in self.right.gens.bases:
                a1, b1 = self._lmap[a], self._rmap[b]
                out.append((a1, b1, self.gens.inv(a1), self.gens.inv(b1)))
        return out

    def signature(self):
        return ("product", self.left.signature(), self.right.signature())

    def __repr__(self):
        return f"DirectProduct({self.left!r}, {self.right!r})"


class Homomorphism:
    """A homomorphism given by images of the source generators (inverse letters are derived)."""

    def __init__(self, source: Group, target: Group, images: Mapping[str, object], check: bool = True):
        self.source, self.target = source, target
        imgs = {}
        for x, w in images.items():
            if x not in source.gens:
                raise InputError(f"image given for unknown source letter {x!r}")
            imgs[x] = target.element(w)
        for x in source.gens.letters:
            ix = source.gens.inv(x)
            if x not in imgs and ix in imgs:
                imgs[x] = target._inv(imgs[ix])
            if x not in imgs:
                raise InputError(f"no image for source letter {x!r}")
            if ix in imgs and imgs[ix] != target._inv(imgs[x]):
                raise InputError(f"images of {x!r} and {ix!r} are not mutually inverse")
        self._img = imgs
        if check:
            for r in source.relators:
                if self._apply_elem(r) != target._identity:
                    raise InputError(f"relator {source.gens.render(r)!r} does not map to the identity")

    def _apply_elem(self, word: Word):
        t = self.target
        e = t._identity
        for x in word:
            e = t._mul(e, self._img[x])
        return e

    def image_of(self, letter: str) -> Word:
        return self.target._to_word(self._img[letter])

    @property
    def images(self) -> dict:
        return {x: self.image_of(x) for x in self.source.gens.letters}

    def apply(self, w) -> Word:
        """Normal form in the target of the letter-by-letter image of ``w``."""
        return self.target._to_word(self._apply_elem(self.source.word(w)))

    def apply_element(self, w):
        return self._apply_elem(self.source.word(w))

    def preimages(self, targets: Iterable, max_radius: int = 12) -> dict:
        """Shortest-then-lexicographic source word mapping onto each target element.

        Breadth-first search through source balls of growing radius. Raises
        ``CapacityError`` when some target has no preimage within ``max_radius``.
        """
        wanted = {self.target.element(t): self.target.normal_form(t) for t in targets}
        found = {}
        for r in range(max_radius + 1):
            for w in self.source.ball(r):
                e = self._apply_elem(w)
                if e in wanted and e not in found:
                    found[e] = w
            if len(found) == len(wanted):
                break
        missing = [wanted[e] for e in wanted if e not in found]
        if missing:
            raise CapacityError(
                f"no preimage within radius {max_radius} for {[self.target.gens.render(m) for m in missing]}")
        return {wanted[e]: found[e] for e in wanted}

    @classmethod
    def identity(cls, group: Group) -> "Homomorphism":
        return cls(group, group, {x: (x,) for x in group.gens.letters}, check=False)


class FiniteIndexData:
    """A finite-index subgroup H <= G with a transversal and coset rewriting tables.

    ``embedding`` maps the subgroup's own generators to ambient words. The
    left table realizes ``v = t_v * u_v`` (left cosets tH); the right table,
    available when the transversal also represents the right cosets, realizes
    ``v = u_v * t_v``. Membership in H is decided by enumerating subgroup balls
    up to ``search_radius``.
    """

    def __init__(self, ambient: Group, subgroup: Group, embedding: Mapping[str, object] | Homomorphism,
                 transversal: Sequence, search_radius: int = 8):
        self.ambient, self.subgroup = ambient, subgroup
        if isinstance(embedding, Homomorphism):
            self.embedding = embedding
        else:
            self.embedding = Homomorphism(subgroup, ambient, embedding)
        self.transversal = [ambient.normal_form(t) for t in transversal]
        if not self.transversal or self.transversal[0] != ():
            raise InputError("the first transversal element must be the identity")
        G = ambient
        self._t_elems = [G.element(t) for t in self.transversal]
        if len(set(self._t_elems)) != len(self._t_elems):
            raise InputError("transversal elements must be distinct")
        self._members = {}
        self._radius = -1
        self.search_radius = search_radius

        for i, ti in enumerate(self._t_elems):
            for j in range(i):
                if self._membership(G._mul(G._inv(self._t_elems[j]), ti)) is not None:
                    raise InputError(
                        f"transversal elements {G.gens.render(self.transversal[j])!r} and "
                        f"{G.gens.render(self.transversal[i])!r} lie in the same left coset")
        self._left = {}
        for x in G.gens.letters:
            for i, ti in enumerate(self._t_elems):
                g = G._mul(G._letter(x), ti)
                self._left[(x, i)] = self._split(g, left=True)
        self._right = {}
        try:
            for i, ti in enumerate(self._t_elems):
                for j in range(i):
                    if self._membership(G._mul(self._t_elems[j], G._inv(ti))) is not None:
                        raise InputError("not a right transversal")
            for x in G.gens.letters:
                for i, ti in enumerate(self._t_elems):
                    g = G._mul(ti, G._letter(x))
                    self._right[(x, i)] = self._split(g, left=False)
        except InputError:
            self._right = None

    def _grow(self, r):
        H, emb = self.subgroup, self.embedding
        while self._radius < r:
            self._radius += 1
            for h in H.ball(self._radius):
                e = emb._apply_elem(h)
                self._members.setdefault(e, h)

    def _membership(self, g):
        """Subgroup word representing ambient element ``g``, or None if not found within the search radius."""
        if g in self._members:
            return self._members[g]
        if self._radius < self.search_radius:
            self._grow(self.search_radius)
        return self._members.get(g)

    def _split(self, g, left):
        G = self.ambient
        for j, tj in enumerate(self._t_elems):
            k = G._mul(G._inv(tj), g) if left else G._mul(g, G._inv(tj))
            w = self._membership(k)
            if w is not None:
                return j, w
        raise InputError(
            f"cannot rewrite {G.gens.render(G._to_word(g))!r} through the transversal within "
            f"subgroup radius {self.search_radius}")

    @property
    def has_right_table(self) -> bool:
        return self._right is not None

    def coset_rewrite(self, v) -> tuple:
        """Return ``(t, u)`` with ``t`` in the transversal and ``t * embed(u) == v``."""
        H = self.subgroup
        word = self.ambient.word(v)
        i, u = 0, H._identity
        for x in reversed(word):
            j, k = self._left[(x, i)]
            i, u = j, H._mul(H._elem_of(k), u)
        return self.transversal[i], H._to_word(u)

    def right_coset_rewrite(self, v) -> tuple:
        """Return ``(u, t)`` with ``embed(u) * t == v``; needs a right transversal."""
        if self._right is None:
            raise InputError("transversal does not represent the right cosets")
        H = self.subgroup
        word = self.ambient.word(v)
        i, u = 0, H._identity
        for x in word:
            j, k = self._right[(x, i)]
            i, u = j, H._mul(u, H._elem_of(k))
        return H._to_word(u), self.transversal[i]

    def embed(self, h) -> Word:
        return self.embedding.apply(h)

    def transversal_index(self, t) -> int:
        return self.transversal.index(self.ambient.normal_form(t))


def coset_rewrite(d: FiniteIndexData, v) -> tuple:
    return d.coset_rewrite(v)


def normal_form(group: Group, w) -> Word:
    return group.normal_form(w)


def is_identity(group: Group, w) -> bool:
    return group.is_identity(w)


def ball(group: Group, n: int) -> list:
    return group.ball(n)


def hom_apply(h: Homomorphism, w) -> Word:
    return h.apply(w)
