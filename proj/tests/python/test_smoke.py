import json
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

import markoff


def test_markoff_numbers():
    assert markoff.markoff_number("5/2") == 194
    assert markoff.markoff_number(2) == 5
    assert markoff.markoff_number(Fraction(5, 3)) == 433
    assert markoff.markoff_number("inf") == 1


def test_coeff_map_and_domain():
    f = markoff.coeff_map("2")
    assert f == {(2, -1): 1, (-2, 1): 1, (0, 1): 2, (-2, 3): 1}
    assert markoff.domain("1") == [(1, -1), (-1, 1)]
    assert sorted(markoff.coeff_map("1/2")) == sorted((b, a) for a, b in f)


def test_large_coefficients_are_python_ints():
    f = markoff.coeff_map("13/8")
    assert all(isinstance(c, int) and c >= 1 for c in f.values())
    assert sum(f.values()) == markoff.markoff_number("13/8")


def test_evaluate():
    assert markoff.evaluate("1", 3, 3, 3) == 6
    assert markoff.evaluate("0", Fraction(7, 2), 1, 1) == Fraction(7, 2)
    with pytest.raises(ValueError):
        markoff.evaluate("2", 0, 1, 1)


def test_parents_and_oracle():
    assert markoff.parents("2") == ("inf", "1", "0")
    assert markoff.f_oracle("1") == "X^2*Z^-1 + Y^2*Z^-1"
    assert markoff.verify_theorem("5/3")


def test_serialization_round_trip():
    text = markoff.serialize("3/2")
    assert json.loads(text)["format"] == "markoff-coeff-map"
    slope, f = markoff.parse(text)
    assert slope == "3/2"
    assert f == markoff.coeff_map("3/2")


def test_render():
    root = ET.fromstring(markoff.render_svg("3/2"))
    cells = [g for g in root.iter("{http://www.w3.org/2000/svg}g") if g.get("class") == "cell"]
    assert len(cells) == 10
    assert "1 4 6 4 1" in markoff.render_ascii("3/2")


def test_verify_sweep():
    ok, report = markoff.verify(max_pq=8, workers=2)
    assert ok
    assert json.loads(report)["format"] == "markoff-verify"


def test_generalized_action():
    y = markoff.gen_apply(3, "1", "zero")
    assert y[0] == "x1^-1*x2^2 + x1^-1*x3^2"
    assert y[1:] == ["x2", "x3"]
    assert markoff.word_to_slopes([1, 2])[1] == "-3/2"
    assert markoff.gen_crosscheck(4, [1, 2], [1, 2, 3, 5], list(range(1, 16)))
    scan = json.loads(markoff.gen_scan(3, 4, "zero"))
    assert all(r["negative_count"] == 0 for r in scan["records"])
    with pytest.raises(IndexError):
        markoff.gen_apply(3, [4])
