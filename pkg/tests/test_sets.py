"""Set structure and subset/union/intersection behaviour."""

import pytest

from gifss.degrees import Degree, ulp
from gifss.errors import GifssError, UniverseMismatchError, ValidityError
from gifss.norms import MINMAX, PRODUCT
from gifss.sets import (
    Gifss,
    IfSet,
    IfsValue,
    Universe,
    equals,
    intersect,
    is_subset,
    union,
)


def d(s) -> Degree:
    return Degree(s)


def iv(mu, nu) -> IfsValue:
    return IfsValue(d(mu), d(nu))


U2 = Universe(["x1", "x2"])


def make(universe, *params):
    # params: (name, [(mu, nu), ...], pref)
    return Gifss(
        universe,
        [
            (name, IfSet(universe, [iv(m, n) for m, n in vals]), d(pref))
            for name, vals, pref in params
        ],
    )


def test_universe_constraints():
    with pytest.raises(GifssError):
        Universe([])
    with pytest.raises(GifssError):
        Universe(["a", "a"])
    with pytest.raises(GifssError):
        Universe(["a", ""])


def test_ifs_value_validity():
    with pytest.raises(ValidityError):
        iv("0.7", "0.4")
    v = IfsValue.unchecked(d("0.7"), d("0.4"))
    assert v.mu == d("0.7")


def test_ifset_totality():
    with pytest.raises(GifssError):
        IfSet(U2, [iv("0.1", "0.2")])
    with pytest.raises(GifssError):
        IfSet(U2, {"x1": iv("0.1", "0.2")})
    with pytest.raises(GifssError):
        IfSet(U2, {"x1": iv("0.1", "0.2"), "x2": iv("0.1", "0.2"), "x9": iv("0", "0")})


def test_gifss_rejects_duplicate_params():
    s = IfSet(U2, [iv("0.1", "0.2"), iv("0.3", "0.4")])
    with pytest.raises(GifssError):
        Gifss(U2, [("p", s, d("0.5")), ("p", s, d("0.5"))])


def test_gifss_rejects_foreign_universe():
    other = Universe(["y1", "y2"])
    s = IfSet(other, [iv("0.1", "0.2"), iv("0.3", "0.4")])
    with pytest.raises(UniverseMismatchError):
        Gifss(U2, [("p", s, d("0.5"))])


def test_subset_of_itself():
    f = make(U2, ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    assert is_subset(f, f)


def test_subset_between_student_sets(student_f, student_g):
    assert is_subset(student_f, student_g)
    assert not is_subset(student_g, student_f)


def test_subset_universe_mismatch_raises(student_f, partner):
    # A mismatched universe is an error, not a false result.
    with pytest.raises(UniverseMismatchError):
        is_subset(student_f, partner)


def test_subset_false_on_missing_param():
    f = make(U2, ("p", [("0.1", "0.5"), ("0.1", "0.5")], "0.2"))
    g = make(U2, ("q", [("0.9", "0.1"), ("0.9", "0.1")], "0.9"))
    assert not is_subset(f, g)


def test_subset_false_on_higher_preference():
    f = make(U2, ("p", [("0.1", "0.5"), ("0.1", "0.5")], "0.9"))
    g = make(U2, ("p", [("0.9", "0.1"), ("0.9", "0.1")], "0.2"))
    assert not is_subset(f, g)


def test_intersect_golden_cell(student_f, student_g):
    h = intersect(student_f, student_g, PRODUCT)
    v = h.ifset("r").value("s1")
    assert (v.mu, v.nu) == (d("0.68"), d("0.145"))
    assert h.preference("r") == d("0.525")


def test_union_golden_cell(student_f, student_g):
    h = union(student_f, student_g, PRODUCT)
    v = h.ifset("r").value("s1")
    assert (v.mu, v.nu) == (d("0.97"), d("0.005"))
    assert h.preference("r") == d("0.925")


def test_intersect_self_minmax_is_identity():
    f = make(U2, ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    assert equals(intersect(f, f, MINMAX), f)


def test_union_with_empty_copies_everything():
    f = make(U2, ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    empty = Gifss(U2, [])
    assert equals(union(f, empty, PRODUCT), f)
    assert equals(union(empty, f, PRODUCT), f)


def test_intersect_disjoint_params_is_empty():
    f = make(U2, ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    g = make(U2, ("q", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    h = intersect(f, g, PRODUCT)
    assert h.params == ()


def test_intersect_param_order_follows_first_operand():
    f = make(
        U2,
        ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"),
        ("q", [("0.2", "0.1"), ("0.4", "0.3")], "0.5"),
    )
    g = make(
        U2,
        ("q", [("0.2", "0.1"), ("0.4", "0.3")], "0.5"),
        ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"),
    )
    assert intersect(f, g, PRODUCT).params == ("p", "q")
    assert intersect(g, f, PRODUCT).params == ("q", "p")


def test_union_appends_right_only_params():
    f = make(U2, ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"))
    g = make(U2, ("q", [("0.2", "0.1"), ("0.4", "0.3")], "0.5"))
    h = union(f, g, PRODUCT)
    assert h.params == ("p", "q")
    assert h.ifset("q").value("x1") == iv("0.2", "0.1")


def test_union_universe_mismatch(student_f, partner):
    with pytest.raises(UniverseMismatchError):
        union(student_f, partner, PRODUCT)
    with pytest.raises(UniverseMismatchError):
        intersect(student_f, partner, PRODUCT)


def test_equals_ignores_param_order():
    f = make(
        U2,
        ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"),
        ("q", [("0.2", "0.1"), ("0.4", "0.3")], "0.5"),
    )
    g = make(
        U2,
        ("q", [("0.2", "0.1"), ("0.4", "0.3")], "0.5"),
        ("p", [("0.3", "0.4"), ("0.5", "0.2")], "0.6"),
    )
    assert equals(f, g)
    assert f == g


def test_equals_detects_one_ulp_change(student_f):
    bumped = Degree(student_f.ifset("r").value("s1").mu.value + ulp())
    changed = Gifss(
        student_f.universe,
        [
            (
                p,
                IfSet(
                    student_f.universe,
                    [
                        IfsValue(bumped, v.nu) if p == "r" and x == "s1" else v
                        for x, v in ifset.items()
                    ],
                ),
                pref,
            )
            for p, ifset, pref in student_f.entries()
        ],
    )
    assert not equals(student_f, changed)


def test_student_sets_differ(student_f, student_g):
    assert not equals(student_f, student_g)


def test_gifss_is_immutable(student_f):
    with pytest.raises(AttributeError):
        student_f.params = ()
