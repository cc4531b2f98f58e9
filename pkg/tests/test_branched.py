import json

import pytest

from tanglehom.branched import (CoverIndex, SurgeryPresentation, double_cover_group, goeritz_matrix,
                                handlebody, knot_determinant, krebes_even_cover, krebes_odd_cover,
                                load_presentation, surgery_h1)
from tanglehom.corpus import DETERMINANTS, knots
from tanglehom.diagram import ComponentError, braid_closure, parse_pd
from tanglehom.intlinalg import AbelianGroup, torsion_order


def test_goeritz_trefoil():
    g = goeritz_matrix(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"))
    assert g.rows == g.cols
    assert knot_determinant(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]")) == 3


def test_goeritz_symmetric():
    for name, d in knots().items():
        g = goeritz_matrix(d)
        assert g == g.transpose(), name


def test_determinants_on_corpus():
    for name, d in knots().items():
        assert knot_determinant(d) == DETERMINANTS[name], name
        assert torsion_order(double_cover_group(d)) == DETERMINANTS[name], name


def test_cover_groups():
    assert str(double_cover_group(braid_closure(2, [1, 1, 1]))) == "Z/3"
    assert str(double_cover_group(braid_closure(3, [1, 1, 1, 2, 2, 2]))) == "Z/3 + Z/3"
    assert str(double_cover_group(braid_closure(3, [1, 1, 1, -2, -1, -1, -1, -2]))) == "Z/9"
    assert double_cover_group(parse_pd("O[1]")).is_trivial()


def test_goeritz_choice_of_deleted_face():
    from tanglehom.diagram import checkerboard, faces
    from tanglehom.intlinalg import determinant
    for name, d in knots().items():
        if not d.crossings:
            continue
        f = faces(d)
        c = checkerboard(d, f)
        dets = {abs(determinant(goeritz_matrix(d, c, f, drop=i))) for i in range(len(f.faces)) if c.white[i]}
        assert dets == {DETERMINANTS[name]}, name


def test_nugatory_crossing_contributes_nothing():
    assert knot_determinant(braid_closure(2, [1])) == 1
    assert knot_determinant(braid_closure(3, [1, 1, 1, 2])) == 3  # sigma2 is a kink


def test_links_rejected():
    with pytest.raises(ComponentError):
        goeritz_matrix(braid_closure(2, [1, 1]))


def test_odd_cover_fixture():
    p = krebes_odd_cover()
    assert p.generators == ["sigma", "tau", "alpha1", "alpha2"]
    assert surgery_h1(p) == AbelianGroup(2, (3,))
    assert str(surgery_h1(p)) == "Z^2 + Z/3"
    assert torsion_order(surgery_h1(p)) == 3


def test_handlebody():
    assert str(surgery_h1(handlebody(2))) == "Z^2"
    assert surgery_h1(handlebody(0)).is_trivial()


def test_even_cover_slot_empty():
    assert krebes_even_cover() is None


def test_presentation_json_round_trip():
    p = krebes_odd_cover()
    assert load_presentation(json.dumps(p.to_json())) == p


@pytest.mark.parametrize("data", [
    {"surgery": [{"label": "s", "framing": 2}], "free": ["a"], "linking": [[1, 0]]},
    {"surgery": [{"label": "s", "framing": 1}, {"label": "t", "framing": 1}], "free": [],
     "linking": [[1, 2], [3, 1]]},
    {"surgery": [{"label": "s", "framing": 1}], "free": ["a"], "linking": [[1, 0, 0]]},
])
def test_bad_presentations(data):
    with pytest.raises(ValueError):
        SurgeryPresentation.from_json(data)


def test_lens_space_like():
    p = SurgeryPresentation.from_json({"surgery": [{"label": "k", "framing": 5}], "free": [], "linking": [[5]]})
    assert str(surgery_h1(p)) == "Z/5"


def test_cover_index():
    assert CoverIndex.for_linking(3) == CoverIndex(2, 1)
    assert CoverIndex.for_linking(-2) == CoverIndex(2, 0)
    with pytest.raises(ValueError):
        CoverIndex(1, 0)
    with pytest.raises(ValueError):
        CoverIndex(3, 3)
