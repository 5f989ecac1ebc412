"""
Complete generator subsets and eraser homomorphisms of cactus groups.

A collection of sub-intervals of [1, n] that is closed under reflecting
nested intervals generates a subgroup in which membership is decidable by
inspecting canonical forms: every relation move between letters of the
collection stays inside the collection.  The slice collections (leaf number
between i and j) are the motivating examples; the 2-leaf slice is the twin
group.

Two erasers project away small leaves: one keeps the word (a split surjection
onto the high-leaf slice), the other keeps only width-i crossing data plus
the strand permutation.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections.abc import Iterable

from . import cactus, racg
from .cactus import CactusLetter, CactusWord
from .perm import Permutation
from .racg import GaussLetter, GaussWord

Interval = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class IntervalCollection:
    """A set of sub-intervals [p, q] of [1, n]."""

    n: int
    intervals: frozenset[Interval]

    def __post_init__(self) -> None:
        for p, q in self.intervals:
            if not 1 <= p < q <= self.n:
                raise ValueError(f"interval [{p},{q}] out of bounds for n={self.n}")

    @staticmethod
    def of(n: int, intervals: Iterable[Interval]) -> IntervalCollection:
        return IntervalCollection(n, frozenset((p, q) for p, q in intervals))

    @staticmethod
    def slice(n: int, i: int, j: int) -> IntervalCollection:
        """All intervals with leaf number between i and j (inclusive)."""
        if not 2 <= i <= j <= n:
            raise ValueError(f"need 2 <= i <= j <= n, got i={i} j={j} n={n}")
        return IntervalCollection.of(
            n, ((p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1) if i <= q - p + 1 <= j)
        )

    def __contains__(self, item) -> bool:
        if isinstance(item, CactusLetter):
            return (item.p, item.q) in self.intervals
        return tuple(item) in self.intervals

    def __len__(self) -> int:
        return len(self.intervals)


def reflect(inner: Interval, outer: Interval) -> Interval:
    """Mirror a nested interval across the midpoint of its enclosing one."""
    (m, r), (p, q) = inner, outer
    return (p + q - r, p + q - m)


def _nested_pairs(c: IntervalCollection):
    for inner, outer in itertools.permutations(c.intervals, 2):
        if outer[0] <= inner[0] and inner[1] <= outer[1]:
            yield inner, outer


def is_symmetric(c: IntervalCollection) -> bool:
    """Closed under reflecting nested intervals inside enclosing members.

    >>> is_symmetric(IntervalCollection.of(4, [(1, 2), (1, 4)]))
    False
    >>> is_symmetric(IntervalCollection.of(4, [(1, 2), (1, 4), (3, 4)]))
    True
    """
    return all(reflect(inner, outer) in c.intervals for inner, outer in _nested_pairs(c))


def symmetric_closure(c: IntervalCollection) -> IntervalCollection:
    """Least symmetric superset, by iterating reflections to a fixpoint."""
    intervals = set(c.intervals)
    while True:
        current = IntervalCollection(c.n, frozenset(intervals))
        added = {
            reflect(inner, outer)
            for inner, outer in _nested_pairs(current)
            if reflect(inner, outer) not in intervals
        }
        if not added:
            return current
        intervals |= added


def is_member(w: CactusWord, c: IntervalCollection) -> bool:
    """Membership in the subgroup generated by a symmetric collection.

    Sound and complete because reductions and exchanges of words over the
    collection never leave it, so the canonical form of a member spells only
    collection letters.

    >>> c22 = IntervalCollection.slice(4, 2, 2)
    >>> is_member(cactus.word(4, [(1, 3)]), c22)
    False
    """
    if w.n != c.n:
        raise ValueError(f"size mismatch: word n={w.n}, collection n={c.n}")
    if not is_symmetric(c):
        raise ValueError("membership test requires a symmetric collection")
    return all(letter in c for letter in cactus.canonical(w))


def eraser_slice(i: int, w: CactusWord) -> CactusWord:
    """Erase every letter of leaf number < i.

    A surjective homomorphism onto the [i, n]-slice subgroup; the inclusion of
    that subgroup is a section, so applying it to a slice word is a no-op.

    >>> str(eraser_slice(3, cactus.word(4, [(1, 2), (1, 3)])))
    's(1,3)'
    """
    if not 2 <= i <= w.n:
        raise ValueError(f"need 2 <= i <= n, got i={i} n={w.n}")
    return CactusWord(w.n, tuple(letter for letter in w.letters if letter.leaf >= i))


def eraser_width(i: int, w: CactusWord) -> tuple[GaussWord, Permutation]:
    """Project to width-i data: the Gauss word of the leaf-i crossings (in the
    width-i diagram group, where letters commute only when disjoint) plus the
    permutation contributed by all leaves >= i.

    Letters of leaf < i vanish entirely, reversals included.
    """
    if not 2 <= i <= w.n:
        raise ValueError(f"need 2 <= i <= n, got i={i} n={w.n}")
    labels = list(range(1, w.n + 1))
    letters = []
    for letter in w.letters:
        if letter.leaf < i:
            continue
        block = labels[letter.p - 1 : letter.q]
        if letter.leaf == i:
            letters.append(GaussLetter(tuple(sorted(block))))
        labels[letter.p - 1 : letter.q] = block[::-1]
    images = [0] * w.n
    for pos, strand in enumerate(labels, start=1):
        images[strand - 1] = pos
    reduced = racg.canonical_letters(letters, racg.commutes_disjoint)
    return GaussWord(w.n, reduced), Permutation(tuple(images))


def _relation_instances(n: int):
    """Both sides of every defining relation instance of J_n."""
    intervals = [(p, q) for p in range(1, n + 1) for q in range(p + 1, n + 1)]
    for p, q in intervals:
        yield [(p, q), (p, q)], []
    for (p, q), (m, r) in itertools.permutations(intervals, 2):
        if q < m:  # disjoint, listed once per unordered pair
            yield [(p, q), (m, r)], [(m, r), (p, q)]
        elif p <= m and r <= q and (p, q) != (m, r):  # nested
            yield [(p, q), (m, r)], [reflect((m, r), (p, q)), (p, q)]


def check_eraser_welldefined(i: int, n: int) -> bool:
    """Verify both erasers respect every defining relation instance of J_n."""
    for lhs_pairs, rhs_pairs in _relation_instances(n):
        lhs, rhs = cactus.word(n, lhs_pairs), cactus.word(n, rhs_pairs)
        if not cactus.equal(eraser_slice(i, lhs), eraser_slice(i, rhs)):
            return False
        lw, lp = eraser_width(i, lhs)
        rw, rp = eraser_width(i, rhs)
        if lw.letters != rw.letters or lp != rp:
            return False
    return True


def kernel_decompose(i: int, w: CactusWord) -> list[tuple[CactusWord, CactusLetter]]:
    """Factor the small-leaf content of w as conjugates of small letters.

    In the free group, w = (prod_k  b_k m_k b_k^-1) . (big letters of w in
    order), where m_k runs over the letters of leaf < i and b_k is the product
    of big letters before m_k.  The trailing factor is the section of the
    slice eraser, so the product of the returned conjugates represents
    w . erase(w)^-1, an element of the kernel.  Conjugators are trimmed to
    canonical form.
    """
    if not 2 <= i <= w.n:
        raise ValueError(f"need 2 <= i <= n, got i={i} n={w.n}")
    bigs: list[CactusLetter] = []
    out = []
    for letter in w.letters:
        if letter.leaf < i:
            conjugator = cactus.canonical(CactusWord(w.n, tuple(bigs)))
            out.append((conjugator, letter))
        else:
            bigs.append(letter)
    return out
