import pathlib
import re

from saguaro.cactus import CactusWord, word
from saguaro.render import render_svg

GOLDEN = pathlib.Path(__file__).parent / "golden"


def golden(name):
    return (GOLDEN / name).read_text(encoding="utf-8")


def test_empty_word_golden():
    assert render_svg(CactusWord(3)) == golden("empty_n3.svg")


def test_full_reversal_golden():
    assert render_svg(word(4, [(1, 4)])) == golden("full_reversal_n4.svg")


def test_three_crossings_golden():
    assert render_svg(word(4, [(1, 2), (2, 4), (1, 3)])) == golden("three_crossings_n4.svg")


def test_output_is_deterministic():
    w = word(5, [(2, 4), (1, 5), (3, 4)])
    assert render_svg(w) == render_svg(w)


def test_empty_word_draws_straight_tracks():
    svg = render_svg(CactusWord(4))
    polylines = re.findall(r'points="([^"]*)"', svg)
    assert len(polylines) == 4
    for points in polylines:
        ys = {pair.split(",")[1] for pair in points.split()}
        assert len(ys) == 1


def test_full_reversal_reverses_tracks():
    svg = render_svg(word(4, [(1, 4)]))
    polylines = re.findall(r'points="([^"]*)"', svg)
    for points in polylines:
        pairs = [tuple(float(x) for x in pair.split(",")) for pair in points.split()]
        first_y, last_y = pairs[0][1], pairs[-1][1]
        # track 1 ends on track 4's height and so on
        assert first_y + last_y == 96


def test_three_crossings_final_positions_match_permutation():
    # strand i must end on the track given by the strand permutation (4,3,1,2)
    svg = render_svg(word(4, [(1, 2), (2, 4), (1, 3)]))
    polylines = re.findall(r'points="([^"]*)"', svg)
    track_y = {pos: 12 + 24 * (pos - 1) for pos in range(1, 5)}
    expected = (4, 3, 1, 2)
    for strand, points in enumerate(polylines, start=1):
        last_y = float(points.split()[-1].split(",")[1])
        assert last_y == track_y[expected[strand - 1]]


def test_labels_add_text_elements():
    svg = render_svg(word(4, [(1, 2), (2, 4)]), labels=True)
    assert svg.count("<text") == 4 + 2
    assert "{1,2}" in svg
    # second crossing reads the labels sitting at positions 2..4 after s(1,2)
    assert "{1,3,4}" in svg
