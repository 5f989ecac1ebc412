"""
The cactus group J_n: words in the interval-reversal generators s_{p,q},
diagram reading, relation moves, canonical forms, and the decision procedures
built on them.

A word is a braid-like diagram read left to right; each letter crosses the
strands occupying positions p..q at a single point and reverses their order.
Reading the strand labels at each crossing yields a Gauss word, and the
resulting map into the Gauss-diagram group is injective.  Equality of cacti is
therefore decided by canonical forms on the Gauss side, while reduction and
canonical representatives of the cactus words themselves use the exchange
moves lifted back from the commutations.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable

from . import racg
from .perm import Permutation
from .racg import GaussLetter, GaussWord


@dataclasses.dataclass(frozen=True, order=True)
class CactusLetter:
    """The generator s_{p,q}; it reverses positions p..q (its q-p+1 leaves)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not 1 <= self.p < self.q:
            raise ValueError(f"need 1 <= p < q, got ({self.p},{self.q})")

    @property
    def leaf(self) -> int:
        return self.q - self.p + 1

    def reflect_in(self, outer: CactusLetter) -> CactusLetter:
        """Mirror this interval across the midpoint of an enclosing one."""
        return CactusLetter(outer.p + outer.q - self.q, outer.p + outer.q - self.p)

    def nested_in(self, other: CactusLetter) -> bool:
        return other.p <= self.p and self.q <= other.q

    def disjoint_from(self, other: CactusLetter) -> bool:
        return self.q < other.p or other.q < self.p

    def __str__(self) -> str:
        return f"s({self.p},{self.q})"


@dataclasses.dataclass(frozen=True)
class CactusWord:
    """A word in the generators of J_n.  Words multiply by concatenation and,
    all generators being involutions, invert by reversal."""

    n: int
    letters: tuple[CactusLetter, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")
        for letter in self.letters:
            if letter.q > self.n:
                raise ValueError(f"letter {letter} out of bounds for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: CactusWord) -> CactusWord:
        if not isinstance(other, CactusWord):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return CactusWord(self.n, self.letters + other.letters)

    def inverse(self) -> CactusWord:
        return CactusWord(self.n, tuple(reversed(self.letters)))

    def power(self, k: int) -> CactusWord:
        if k < 0:
            return self.inverse().power(-k)
        return CactusWord(self.n, self.letters * k)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def word(n: int, pairs: Iterable[tuple[int, int]]) -> CactusWord:
    """Build a word from (p, q) pairs: word(4, [(1, 2), (2, 4)])."""
    return CactusWord(n, tuple(CactusLetter(p, q) for p, q in pairs))


@dataclasses.dataclass(frozen=True)
class ReadResult:
    """The two diagram readings of one word: its Gauss word and its strand
    permutation.  The pair is a group morphism into the virtual cactus group;
    the Gauss part alone is an injective 1-cocycle."""

    gauss: GaussWord
    perm: Permutation


def read_diagram(w: CactusWord) -> ReadResult:
    """Simulate the diagram: at each letter record the labels sitting at
    positions p..q, then reverse that block.

    >>> r = read_diagram(word(4, [(1, 2), (2, 4), (1, 3)]))
    >>> str(r.gauss), str(r.perm)
    ('t{1,2} t{1,3,4} t{2,3,4}', '(4,3,1,2)')
    """
    labels = list(range(1, w.n + 1))  # labels[pos - 1] = strand currently at pos
    out = []
    for letter in w.letters:
        block = labels[letter.p - 1 : letter.q]
        out.append(GaussLetter(tuple(sorted(block))))
        labels[letter.p - 1 : letter.q] = block[::-1]
    images = [0] * w.n
    for pos, strand in enumerate(labels, start=1):
        images[strand - 1] = pos
    return ReadResult(GaussWord(w.n, tuple(out)), Permutation(tuple(images)))


def s_image(w: CactusWord) -> Permutation:
    """The strand permutation of a word (the morphism the diagram induces)."""
    return read_diagram(w).perm


def exchange_left(x: CactusLetter, y: CactusLetter) -> tuple[CactusLetter, CactusLetter] | None:
    """Rewrite x.y as y'.x' by one commutation or commutation-conjugation.

    Disjoint intervals commute; a nested interval passes through the enclosing
    one reflected.  Overlapping, non-nested intervals admit no move: the
    result is None.  Equal letters return (x, x); callers that reduce must
    test equality first and annihilate instead.

    >>> exchange_left(CactusLetter(1, 4), CactusLetter(1, 2))
    (CactusLetter(p=3, q=4), CactusLetter(p=1, q=4))
    >>> exchange_left(CactusLetter(1, 3), CactusLetter(2, 4)) is None
    True
    """
    if x.disjoint_from(y):
        return (y, x)
    if y.nested_in(x):
        return (y.reflect_in(x), x)
    if x.nested_in(y):
        return (y, x.reflect_in(y))
    return None


def _find_cancellation(letters: list[CactusLetter]) -> tuple[int, int] | None:
    # Walk each letter leftwards through exchange moves, transforming it as it
    # passes enclosing letters; it annihilates with the first equal letter met
    # and is blocked for good by an overlapping one.
    for j in range(1, len(letters)):
        moving = letters[j]
        for i in range(j - 1, -1, -1):
            if letters[i] == moving:
                return (i, j)
            ex = exchange_left(letters[i], moving)
            if ex is None:
                break
            moving = ex[0]
    return None


def _apply_cancellation(letters: list[CactusLetter], i: int, j: int) -> list[CactusLetter]:
    work = list(letters)
    for k in range(j, i + 1, -1):
        moved, stayed = exchange_left(work[k - 1], work[k])
        work[k - 1], work[k] = moved, stayed
    assert work[i] == work[i + 1]
    del work[i : i + 2]
    return work


def reduce(w: CactusWord) -> CactusWord:
    """An irreducible word for the same cactus; empty iff the cactus is trivial.

    Repeatedly exchange-moves a letter onto an equal earlier letter and kills
    the pair (the diagrammatic bigon killing).  The length of the result is
    the geodesic length of the element.

    >>> str(reduce(word(4, [(1, 4), (1, 2), (1, 4), (3, 4)])))
    ''
    """
    letters = list(w.letters)
    while True:
        hit = _find_cancellation(letters)
        if hit is None:
            return CactusWord(w.n, tuple(letters))
        letters = _apply_cancellation(letters, *hit)


def reduce_with_trace(w: CactusWord) -> tuple[CactusWord, frozenset[CactusLetter]]:
    """reduce(), also reporting every letter that appeared along the way
    (including intermediates created by conjugating exchanges)."""
    letters = list(w.letters)
    seen = set(letters)
    while True:
        hit = _find_cancellation(letters)
        if hit is None:
            return CactusWord(w.n, tuple(letters)), frozenset(seen)
        letters = _apply_cancellation(letters, *hit)
        seen.update(letters)


def canonical(w: CactusWord) -> CactusWord:
    """Canonical representative: greedily emit the least letter (in (p, q)
    order) that exchange moves can bring to the front.

    Front-reachable letters of an irreducible word are pairwise distinct once
    moved to the front, so the greedy choice is well defined and two words
    represent the same cactus iff their canonical forms coincide letterwise.

    >>> str(canonical(word(4, [(3, 4), (1, 2)])))
    's(1,2) s(3,4)'
    >>> str(canonical(word(4, [(1, 4), (1, 2)])))
    's(1,4) s(1,2)'
    """
    rest = list(reduce(w).letters)
    out = []
    while rest:
        best_j, best_letter = 0, rest[0]
        for j in range(1, len(rest)):
            moving = rest[j]
            for i in range(j - 1, -1, -1):
                ex = exchange_left(rest[i], moving)
                if ex is None:
                    moving = None
                    break
                moving = ex[0]
            if moving is not None and moving < best_letter:
                best_j, best_letter = j, moving
        for k in range(best_j, 0, -1):
            moved, stayed = exchange_left(rest[k - 1], rest[k])
            rest[k - 1], rest[k] = moved, stayed
        front = rest.pop(0)
        assert front == best_letter
        out.append(front)
    return CactusWord(w.n, tuple(out))


def equal(u: CactusWord, v: CactusWord) -> bool:
    """Decide equality in J_n on the Gauss side, where the reading map is
    injective and the word problem is a canonical-form comparison.

    >>> equal(word(3, [(1, 2), (2, 3), (1, 2)]), word(3, [(2, 3), (1, 2), (2, 3)]))
    False
    >>> equal(word(4, [(1, 4), (1, 2), (1, 4)]), word(4, [(3, 4)]))
    True
    """
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    cu = racg.canonical_letters(read_diagram(u).gauss.letters, racg.commutes)
    cv = racg.canonical_letters(read_diagram(v).gauss.letters, racg.commutes)
    return cu == cv


def is_trivial(w: CactusWord) -> bool:
    return not racg.reduce_letters(read_diagram(w).gauss.letters, racg.commutes)


def geodesic_length(w: CactusWord) -> int:
    """Minimal length of any word representing the same cactus."""
    return len(reduce(w))


def order(c: CactusWord, bound: int = 64) -> int | None:
    """Smallest k <= bound with c^k trivial, or None if there is none.

    Honest bounded probing: powers are accumulated on the Gauss side, where
    the k-th power is trivial iff its reduced reading is empty.  One sound
    shortcut prunes hopeless searches: geodesic length drops by at most the
    geodesic length of c per extra factor, so a long enough reduction cannot
    reach the empty word within the bound.

    >>> order(word(2, [(1, 2)]))
    2
    >>> order(word(4, [(1, 2), (1, 4)]))
    4
    """
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    labels = list(range(1, c.n + 1))
    reduced: list[GaussLetter] = []
    step = 0
    for k in range(1, bound + 1):
        for letter in c.letters:
            block = labels[letter.p - 1 : letter.q]
            racg.push_letter(reduced, GaussLetter(tuple(sorted(block))), racg.commutes)
            labels[letter.p - 1 : letter.q] = block[::-1]
        if not reduced:
            return k
        if k == 1:
            step = len(reduced)
        elif len(reduced) > (bound - k) * step:
            return None
    return None


def torsion_witness(k: int) -> CactusWord:
    """The word s_{1,2} s_{1,4} ... s_{1,2^k} in J_{2^k}; it has order 2^k.

    >>> str(torsion_witness(2))
    's(1,2) s(1,4)'
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    return word(2**k, [(1, 2**j) for j in range(1, k + 1)])


def is_pure(w: CactusWord) -> bool:
    """A cactus is pure when its strand permutation is the identity."""
    return s_image(w).is_identity()


def commute(u: CactusWord, v: CactusWord) -> bool:
    return equal(u * v, v * u)


def conjugate(g: CactusWord, c: CactusWord) -> CactusWord:
    """g c g^{-1}; the inverse of a word is its reversal."""
    return g * c * g.inverse()


def pad(w: CactusWord, m: int) -> CactusWord:
    """Reinterpret over m >= n strands; the inclusion J_n -> J_m is injective."""
    if m < w.n:
        raise ValueError(f"cannot pad from n={w.n} down to {m}")
    return CactusWord(m, w.letters)


def cocycle_product(u: CactusWord, v: CactusWord) -> ReadResult:
    """Reading of u v assembled from the readings of u and v.

    The Gauss part of v is relabeled through the inverse strand permutation of
    u (a label sits at position i after u iff u sends it there), so the
    reading map satisfies the twisted product rule rather than being a
    morphism.  Must agree with read_diagram(u * v) letter by letter.
    """
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    ru, rv = read_diagram(u), read_diagram(v)
    inv = ru.perm.inverse()
    relabeled = tuple(GaussLetter(tuple(sorted(inv.apply_set(l.labels)))) for l in rv.gauss.letters)
    return ReadResult(GaussWord(u.n, ru.gauss.letters + relabeled), ru.perm * rv.perm)
