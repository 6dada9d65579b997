import warnings

import pytest

from levicycles import families
from levicycles.arrangement import (
    modular_points,
    multiplicity_profile,
    validate_arrangement,
)
from levicycles.families import (
    BadParam,
    DuplicateExponent,
    ExponentOutOfRange,
    build_family,
)
from levicycles.projective import arrangement_from_lines


def quiet(fn, *args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args)


def same_incidences(a, b):
    """Equal incidence structures up to point order (line labels must match)."""
    return a.k == b.k and sorted(map(sorted, a.point_lines)) == sorted(map(sorted, b.point_lines))


# (builder args, expected t-profile, expected modular point count)
PROFILES = [
    (("near_pencil", 5), {2: 4, 4: 1}, 5),
    (("near_pencil", 3), {2: 3}, 3),
    (("two_modular", 2, 3), {2: 3, 3: 1}, 4),
    (("two_modular", 3, 4), {2: 6, 3: 1, 4: 1}, 2),
    (("two_modular", 5, 6), {2: 20, 5: 1, 6: 1}, 2),
    (("generic", 5), {2: 10}, 0),
    (("generic", 2), {2: 1}, 1),
    (("ceva", 3), {3: 12}, 0),
    (("ceva", 4), {3: 16, 4: 3}, 0),
    (("ceva", 5), {3: 25, 5: 3}, 0),
    (("hesse",), {2: 12, 4: 9}, 0),
    (("nine_three",), {2: 9, 3: 9}, 0),
    (("ten_line",), {2: 9, 3: 12}, 0),
    (("mu4",), {2: 3, 3: 4}, 4),
    (("supersolvable_mu3", 4), {2: 6, 3: 4, 4: 3}, 3),
    (("supersolvable_mu3", 5), {2: 9, 3: 9, 5: 3}, 3),
    (("supersolvable_mu3", 6), {2: 12, 3: 16, 6: 3}, 3),
    (("a_w_k", 5, 0), {2: 16, 5: 2}, 2),
    (("a_w_k", 5, 1), {2: 13, 3: 4, 5: 2}, 2),
    (("a_w_k", 5, 2, (0, 1)), {2: 11, 3: 6, 4: 1, 5: 2}, 2),
    (("a_w_k", 6, 2), {2: 18, 3: 8, 4: 1, 6: 2}, 2),
]


@pytest.mark.parametrize("spec,profile,n_modular", PROFILES, ids=[str(p[0]) for p in PROFILES])
def test_builder_profiles(spec, profile, n_modular):
    name, *args = spec
    arr = quiet(getattr(families, name), *args)
    prof = multiplicity_profile(arr)
    assert prof.t == profile
    assert prof.s == sum(profile.values()) == arr.s
    assert len(modular_points(arr)) == n_modular
    assert validate_arrangement(arr).passed


def test_line_counts():
    assert quiet(families.ceva, 4).k == 12
    assert families.hesse().k == 12
    assert families.supersolvable_mu3(6).k == 15
    assert families.a_w_k(6, 2).k == 13
    assert families.two_modular(5, 6).k == 10


@pytest.mark.parametrize(
    "fn,args,message",
    [
        (families.near_pencil, (2,), "near_pencil needs k >= 3"),
        (families.near_pencil, ("5",), "near_pencil needs k >= 3"),
        (families.two_modular, (1, 3), "2 <= a < b"),
        (families.two_modular, (2, 2), "2 <= a < b"),
        (families.generic, (1,), "generic needs k >= 2"),
        (families.ceva, (2,), "ceva needs n >= 3"),
        (families.supersolvable_mu3, (3,), "supersolvable_mu3 needs m >= 4"),
        (families.a_w_k, (4, 0), "a_w_k needs m >= 5"),
        (families.a_w_k, (5, 3), "0 <= k <= m-3 = 2"),
    ],
)
def test_builder_param_errors(fn, args, message):
    with pytest.raises(BadParam, match=message.replace("(", "\\(")):
        fn(*args)


def test_a_w_k_chosen_validation():
    with pytest.raises(DuplicateExponent, match=r"duplicate exponents in \[1, 1\]"):
        families.a_w_k(5, 2, (1, 1))
    with pytest.raises(ExponentOutOfRange, match="exponent 9 outside 0..2"):
        families.a_w_k(5, 1, (9,))
    # any valid subset of exponents is accepted, not just a prefix
    arr = families.a_w_k(5, 2, (0, 2))
    assert validate_arrangement(arr).passed
    assert arr.k == 11


def test_ceva_three_warns_about_merged_vertices():
    with pytest.warns(UserWarning, match=r"ceva\(3\)"):
        families.ceva(3)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        families.ceva(4)  # no warning for n >= 4


def test_build_family_dispatch():
    assert build_family("generic", k=4) == families.generic(4)
    assert build_family("hesse") == families.hesse()
    assert build_family("two_modular", a=3, b=4) == families.two_modular(3, 4)
    assert build_family("a_w_k", m=5, k=2, chosen=(0, 2)) == families.a_w_k(5, 2, (0, 2))
    # chosen may be omitted; other None-valued parameters are ignored
    assert build_family("a_w_k", m=5, k=1) == families.a_w_k(5, 1)
    assert build_family("generic", k=4, m=None) == families.generic(4)


@pytest.mark.parametrize(
    "name,params,message",
    [
        ("no_such_family", {}, "unknown family"),
        ("hesse", {"k": 3}, "does not take parameter"),
        ("two_modular", {"a": 2}, "needs parameters: b"),
        ("generic", {}, "needs parameters: k"),
    ],
)
def test_build_family_errors(name, params, message):
    with pytest.raises(BadParam, match=message):
        build_family(name, **params)


# -- coordinate realizations agree with the combinatorial builders


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_ceva_coordinates_match_builder(n):
    arr = arrangement_from_lines(families.ceva_coordinate_lines(n))
    assert same_incidences(arr, quiet(families.ceva, n))


def test_ceva_coordinate_pencils_allow_n_two():
    lines = families.ceva_coordinate_lines(2)
    assert len(lines) == 6
    prof = multiplicity_profile(arrangement_from_lines(lines))
    assert prof.t == {2: 3, 3: 4}
    with pytest.raises(BadParam):
        families.ceva_coordinate_lines(1)


def test_mu4_coordinates_match_builder():
    arr = arrangement_from_lines(families.mu4_coordinate_lines())
    assert same_incidences(arr, families.mu4())


@pytest.mark.parametrize("m", [4, 5, 6])
def test_supersolvable_mu3_coordinates_match_builder(m):
    arr = arrangement_from_lines(families.supersolvable_mu3_coordinate_lines(m))
    assert same_incidences(arr, families.supersolvable_mu3(m))


@pytest.mark.parametrize(
    "args",
    [(5, 0), (5, 1), (5, 2, (0, 1)), (6, 2)],
    ids=str,
)
def test_a_w_k_coordinates_match_builder(args):
    arr = arrangement_from_lines(families.a_w_k_coordinate_lines(*args))
    assert same_incidences(arr, families.a_w_k(*args))


def test_coordinate_incidences_are_exact():
    # every recorded singular point really lies on all of its lines
    from levicycles.projective import incident, meet

    lines = families.supersolvable_mu3_coordinate_lines(5)
    arr = arrangement_from_lines(lines)
    for fs in arr.point_lines:
        ids = sorted(fs)
        p = meet(lines[ids[0]], lines[ids[1]])
        assert all(incident(p, lines[j]) for j in ids)
