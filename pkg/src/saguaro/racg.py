"""
A right-angled Coxeter rewriting engine over an abstract alphabet.

Letters are orderable, hashable values and every letter is an involution; the
only other relations are commutations, supplied as a symmetric predicate.  On
such groups two facts drive everything here: a word is shortened exactly by
deleting two equal letters separated only by letters commuting with them, and
all shortest representatives of an element form a single commutation class.
The canonical form is therefore the lexicographically least linearization of
an irreducible representative.

The concrete alphabet used throughout the package is the Gauss-diagram
alphabet: a letter carries a set of strand labels, and two letters commute
when their label sets are disjoint or nested.  Width-restricted diagram
groups reuse the same engine with a disjointness-only predicate.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from typing import TypeVar

L = TypeVar("L")

CommutationPredicate = Callable[[L, L], bool]


@dataclasses.dataclass(frozen=True, order=True)
class GaussLetter:
    """An involution named by a label set of size >= 2, stored sorted.

    The order on letters is the tuple order on the sorted labels, so a letter
    precedes its own extensions: t{1,2} < t{1,2,3} < t{1,3}.

    >>> GaussLetter((1, 2)) < GaussLetter((1, 2, 3)) < GaussLetter((1, 3))
    True
    """

    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) < 2 or list(self.labels) != sorted(set(self.labels)):
            raise ValueError(f"labels must be >= 2 distinct sorted values: {self.labels!r}")

    @staticmethod
    def of(labels: Iterable[int]) -> GaussLetter:
        return GaussLetter(tuple(sorted(labels)))

    def __str__(self) -> str:
        return "t{" + ",".join(str(x) for x in self.labels) + "}"


def tau(*labels: int) -> GaussLetter:
    return GaussLetter.of(labels)


@dataclasses.dataclass(frozen=True)
class GaussWord:
    """A word in Gauss letters over n strands."""

    n: int
    letters: tuple[GaussLetter, ...] = ()

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter.labels[0] < 1 or letter.labels[-1] > self.n:
                raise ValueError(f"letter {letter} out of bounds for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


_COMMUTE_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
_DISJOINT_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}


def commutes(a: GaussLetter, b: GaussLetter) -> bool:
    """Gauss-diagram commutation: label sets disjoint or nested.

    >>> commutes(tau(1, 2), tau(3, 4)), commutes(tau(1, 2), tau(1, 2, 3))
    (True, True)
    >>> commutes(tau(1, 2), tau(1, 3))
    False
    """
    key = (a.labels, b.labels)
    cached = _COMMUTE_CACHE.get(key)
    if cached is None:
        sa, sb = set(a.labels), set(b.labels)
        cached = sa.isdisjoint(sb) or sa <= sb or sb <= sa
        _COMMUTE_CACHE[key] = _COMMUTE_CACHE[(b.labels, a.labels)] = cached
    return cached


def commutes_disjoint(a: GaussLetter, b: GaussLetter) -> bool:
    """Width-restricted commutation: label sets disjoint only."""
    key = (a.labels, b.labels)
    cached = _DISJOINT_CACHE.get(key)
    if cached is None:
        cached = set(a.labels).isdisjoint(b.labels)
        _DISJOINT_CACHE[key] = _DISJOINT_CACHE[(b.labels, a.labels)] = cached
    return cached


def push_letter(out: list[L], letter: L, commute: CommutationPredicate) -> None:
    """Append one letter to a reduced word, keeping it reduced.

    Scanning backwards, an equal letter reachable through commuting letters
    annihilates with the new one; the first non-commuting letter blocks any
    earlier copy, so the scan may stop there.  Appending otherwise cannot
    create a new cancellable pair, hence the invariant.
    """
    for i in range(len(out) - 1, -1, -1):
        if out[i] == letter:
            del out[i]
            return
        if not commute(out[i], letter):
            break
    out.append(letter)


def reduce_letters(letters: Sequence[L], commute: CommutationPredicate) -> tuple[L, ...]:
    """An irreducible word for the same element; its length is the geodesic length."""
    out: list[L] = []
    for letter in letters:
        push_letter(out, letter, commute)
    return tuple(out)


def cancellable_pairs(letters: Sequence[L], commute: CommutationPredicate) -> list[tuple[int, int]]:
    """All pairs (i, j) of equal letters with everything strictly between commuting."""
    pairs = []
    for j, letter in enumerate(letters):
        for i in range(j - 1, -1, -1):
            if letters[i] == letter:
                pairs.append((i, j))
                break
            if not commute(letters[i], letter):
                break
    return pairs


def canonical_letters(letters: Sequence[L], commute: CommutationPredicate) -> tuple[L, ...]:
    """The least word, letter by letter, in the commutation class of a reduction.

    Greedily emits the smallest letter that commutes with everything before
    it.  In a reduced word no two equal letters are simultaneously movable to
    the front (they would cancel), so the choice is unambiguous and the result
    depends only on the group element.
    """
    rest = list(reduce_letters(letters, commute))
    out: list[L] = []
    while rest:
        best = 0
        for j in range(1, len(rest)):
            if rest[j] < rest[best] and all(commute(rest[i], rest[j]) for i in range(j)):
                best = j
        out.append(rest.pop(best))
    return tuple(out)


def equal_letters(u: Sequence[L], v: Sequence[L], commute: CommutationPredicate) -> bool:
    return canonical_letters(u, commute) == canonical_letters(v, commute)


def letter_multiset(letters: Sequence[L], commute: CommutationPredicate) -> Counter:
    """Multiset of letters of a reduction; independent of the reduction order."""
    return Counter(reduce_letters(letters, commute))


def racg_reduce(w: GaussWord) -> GaussWord:
    """Irreducible representative of a Gauss word.

    >>> str(racg_reduce(GaussWord(4, (tau(1, 2), tau(3, 4), tau(1, 2)))))
    't{3,4}'
    """
    return GaussWord(w.n, reduce_letters(w.letters, commutes))


def racg_canonical(w: GaussWord) -> GaussWord:
    """Canonical form: least linearization of the reduced commutation class.

    >>> str(racg_canonical(GaussWord(3, (tau(1, 2, 3), tau(1, 2)))))
    't{1,2} t{1,2,3}'
    """
    return GaussWord(w.n, canonical_letters(w.letters, commutes))


def racg_equal(u: GaussWord, v: GaussWord) -> bool:
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")
    return racg_canonical(u).letters == racg_canonical(v).letters
