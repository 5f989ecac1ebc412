import random

import pytest

from saguaro import syntax
from saguaro.cactus import CactusLetter, CactusWord, word
from saguaro.perm import Permutation
from saguaro.presentation import Presentation, builtin
from saguaro.racg import GaussWord, tau
from saguaro.sampling import random_word
from saguaro.syntax import BoundsError, WordSyntaxError


def test_parse_cactus_word_examples():
    assert syntax.parse_cactus_word("s(1,2) s(2,4) s(1,3)", 4).letters == (
        CactusLetter(1, 2), CactusLetter(2, 4), CactusLetter(1, 3),
    )
    assert syntax.parse_cactus_word("", 3).letters == ()
    assert syntax.parse_cactus_word("s(1,2)^-3", 2).letters == (CactusLetter(1, 2),)


def test_exponents_mod_two():
    assert syntax.parse_cactus_word("s(1,2)^2", 2).letters == ()
    assert syntax.parse_cactus_word("s(1,2)^0", 2).letters == ()
    assert syntax.parse_cactus_word("s(1,2)^5", 2).letters == (CactusLetter(1, 2),)


def test_parse_errors_located():
    with pytest.raises(WordSyntaxError) as info:
        syntax.parse_cactus_word("s(1,2) x", 4)
    assert info.value.position == 7
    with pytest.raises(BoundsError):
        syntax.parse_cactus_word("s(2,5)", 4)
    with pytest.raises(BoundsError):
        syntax.parse_cactus_word("s(3,2)", 4)
    with pytest.raises(BoundsError):
        syntax.parse_cactus_word("", 1)


def test_format_word_examples():
    assert syntax.format_cactus_word(word(2, [(1, 2)])) == "s(1,2)"
    assert syntax.format_cactus_word(CactusWord(4)) == ""
    assert syntax.format_cactus_word(word(4, [(3, 4), (1, 2)])) == "s(3,4) s(1,2)"


def test_cactus_round_trip():
    rng = random.Random(20)
    for _ in range(200):
        w = random_word(6, 10, rng)
        assert syntax.parse_cactus_word(syntax.format_cactus_word(w), 6) == w


def test_gauss_round_trip():
    w = GaussWord(4, (tau(1, 2), tau(1, 3, 4)))
    text = syntax.format_gauss_word(w)
    assert text == "t{1,2} t{1,3,4}"
    assert syntax.parse_gauss_word(text, 4) == w
    with pytest.raises(BoundsError):
        syntax.parse_gauss_word("t{1,5}", 4)
    with pytest.raises(WordSyntaxError):
        syntax.parse_gauss_word("t{2,1}", 4)


def test_parse_presentation_examples():
    p = syntax.parse_presentation("gens: x; rels: x^2")
    assert p.generators == ("x",)
    assert p.relators == ((("x", 1), ("x", 1)),)
    q = syntax.parse_presentation("gens: a b; rels: a b a^-1 b^-1")
    assert q.relators == ((("a", 1), ("b", 1), ("a", -1), ("b", -1)),)


def test_parse_presentation_equations_and_comments():
    text = """
    # three generators
    gens: x y z
    rels: x^2 = y^2 = 1
    rels: x y = y x
    """
    p = syntax.parse_presentation(text)
    assert p.generators == ("x", "y", "z")
    assert p.relators == (
        (("x", 1), ("x", 1)),
        (("y", 1), ("y", 1)),
        (("x", 1), ("y", 1), ("x", -1), ("y", -1)),
    )


def test_parse_presentation_unknown_generator():
    with pytest.raises(WordSyntaxError):
        syntax.parse_presentation("gens: x; rels: y^2")


def test_builtin_j4_text_round_trip():
    # The builtin J4 presentation survives the text format: 3 generators and
    # 5 relators (three involutions plus the two braid-like relations).
    p = builtin("J4")
    text = syntax.format_presentation(p)
    assert syntax.parse_presentation(text) == p
    assert len(p.generators) == 3
    assert len(p.relators) == 5


def test_presentation_round_trip_generic():
    p = Presentation(
        ("a", "bb", "c1"),
        ((("a", 1), ("bb", -1)), (("c1", 1), ("c1", 1), ("a", -1))),
    )
    assert syntax.parse_presentation(syntax.format_presentation(p)) == p


def test_parse_permutation_and_images():
    assert syntax.parse_permutation("(4,1,3,2)") == Permutation((4, 1, 3, 2))
    assert syntax.parse_permutation(" 2, 1, 3 ") == Permutation((2, 1, 3))
    table = syntax.parse_images_file("# comment\ns12: (2,1,3)\ns13: (3,2,1)\n")
    assert table == {"s12": Permutation((2, 1, 3)), "s13": Permutation((3, 2, 1))}
    with pytest.raises(WordSyntaxError):
        syntax.parse_images_file("not a table")
