"""Builders for the named arrangement families.

Every family is produced from a closed-form combinatorial incidence rule, so
builders are exact, deterministic, and fast; coordinate-based construction
(see :func:`levicycles.projective.arrangement_from_lines` and the
``*_coordinate_lines`` helpers below) is a cross-check path, not the source
of truth.

Line and point orderings are fixed and documented per family so that cycle
witnesses mentioning ids stay reproducible across runs and versions.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Sequence

from .arrangement import Arrangement, ArrangementError

__all__ = [
    "BadParam",
    "ExponentOutOfRange",
    "DuplicateExponent",
    "near_pencil",
    "two_modular",
    "generic",
    "ceva",
    "hesse",
    "nine_three",
    "ten_line",
    "mu4",
    "supersolvable_mu3",
    "a_w_k",
    "FAMILIES",
    "build_family",
    "ceva_coordinate_lines",
    "mu4_coordinate_lines",
    "supersolvable_mu3_coordinate_lines",
    "a_w_k_coordinate_lines",
]


class BadParam(ArrangementError):
    """Family parameter outside its documented range."""


class ExponentOutOfRange(BadParam):
    pass


class DuplicateExponent(BadParam):
    pass


def near_pencil(k: int) -> Arrangement:
    """
    k lines, the first k-1 concurrent.

    Lines 0..k-2 share the (k-1)-fold point (id 0); line k-1 crosses each of
    them in a double point (ids 1..k-1, in line order).  Profile: t_2 = k-1,
    t_{k-1} = 1 (for k = 3 the two counts merge into t_2 = 3).
    """
    if not isinstance(k, int) or k < 3:
        raise BadParam(f"near_pencil needs k >= 3, got {k!r}")
    pts: list[Iterable[int]] = [range(k - 1)]
    names = ["C"]
    for i in range(k - 1):
        pts.append({k - 1, i})
        names.append(f"L{k}^L{i + 1}")
    return Arrangement(k, pts, line_names=[f"L{j + 1}" for j in range(k)], point_names=names)


def two_modular(a: int, b: int) -> Arrangement:
    """
    Two pencils joined by a shared line: k = a + b - 1.

    Line 0 is shared; lines 1..a-1 pass through the a-fold point P1 (id 0)
    and lines a..a+b-2 through the b-fold point P2 (id 1); every cross pair
    A_i, B_j meets in its own double point (row-major in (i, j), ids from 2).
    Both P1 and P2 are modular.  Profile: t_2 = (a-1)(b-1) plus P1/P2 when
    a or b equals 2 (e.g. a=2, b=3 has t_2 = 3, t_3 = 1).
    """
    if not (isinstance(a, int) and isinstance(b, int) and 2 <= a < b):
        raise BadParam(f"two_modular needs 2 <= a < b, got a={a!r}, b={b!r}")
    k = a + b - 1
    pts: list[set[int]] = [set(range(a)), {0} | set(range(a, k))]
    names = ["P1", "P2"]
    for i in range(1, a):
        for j in range(a, k):
            pts.append({i, j})
            names.append(f"A{i}B{j - a + 1}")
    line_names = ["L0"] + [f"A{i}" for i in range(1, a)] + [f"B{j}" for j in range(1, b)]
    return Arrangement(k, pts, line_names=line_names, point_names=names)


def generic(k: int) -> Arrangement:
    """k lines in general position: C(k,2) double points, ids in (i,j) lex order."""
    if not isinstance(k, int) or k < 2:
        raise BadParam(f"generic needs k >= 2, got {k!r}")
    pts = []
    names = []
    for i in range(k):
        for j in range(i + 1, k):
            pts.append({i, j})
            names.append(f"p{i}-{j}")
    return Arrangement(k, pts, line_names=[f"L{j + 1}" for j in range(k)], point_names=names)


def ceva(n: int) -> Arrangement:
    """
    The 3n lines of (x^n - y^n)(y^n - z^n)(x^n - z^n).

    Line ids: XY_i = i, YZ_i = n + i, XZ_i = 2n + i (i in Z_n).  The triple
    T(i, j) = {XY_{(i-j) mod n}, YZ_j, XZ_i} has point id i*n + j; the three
    n-fold coordinate vertices follow: Nxy = n^2 (all XY lines), Nyz, Nxz.
    Profile: t_3 = n^2, t_n = 3.  For n = 3 the two counts merge (t_3 = 12),
    which is flagged with a warning.
    """
    if not isinstance(n, int) or n < 3:
        raise BadParam(f"ceva needs n >= 3, got {n!r}")
    if n == 3:
        warnings.warn("ceva(3): the n-fold vertices are themselves triple points (t_3 = 12)")
    pts: list[set[int]] = []
    names = []
    for i in range(n):
        for j in range(n):
            pts.append({(i - j) % n, n + j, 2 * n + i})
            names.append(f"T({i},{j})")
    pts.append(set(range(n)))
    names.append("Nxy")
    pts.append(set(range(n, 2 * n)))
    names.append("Nyz")
    pts.append(set(range(2 * n, 3 * n)))
    names.append("Nxz")
    line_names = [f"XY{i}" for i in range(n)] + [f"YZ{i}" for i in range(n)] + [f"XZ{i}" for i in range(n)]
    return Arrangement(3 * n, pts, line_names=line_names, point_names=names)


# The Hesse arrangement: 12 lines, nine 4-fold points, twelve doubles.  The
# 4-fold incidences and the four "no shared quadruple point" line groups
# below are the standard published table (1-based line numbers).
_HESSE_QUADRUPLES = [
    (1, 4, 7, 10),
    (1, 5, 9, 12),
    (1, 6, 8, 11),
    (2, 4, 11, 12),
    (2, 5, 7, 8),
    (2, 6, 9, 10),
    (3, 4, 8, 9),
    (3, 5, 10, 11),
    (3, 6, 7, 12),
]
_HESSE_DOUBLE_GROUPS = [(1, 2, 3), (4, 5, 6), (7, 9, 11), (8, 10, 12)]


def hesse() -> Arrangement:
    """
    The 12-line Hesse arrangement: t_2 = 12, t_4 = 9, s = 21.

    Point ids: the nine 4-fold points p1..p9 first (ids 0..8), then the 12
    doubles in group order (1,2),(1,3),(2,3),(4,5),...,(10,12) (ids 9..20).
    Every line carries exactly three 4-fold points and two doubles.
    """
    pts: list[set[int]] = [set(x - 1 for x in quad) for quad in _HESSE_QUADRUPLES]
    names = [f"p{i + 1}" for i in range(9)]
    for group in _HESSE_DOUBLE_GROUPS:
        for a in range(3):
            for b in range(a + 1, 3):
                pts.append({group[a] - 1, group[b] - 1})
                names.append(f"p{group[a]}{group[b]}")
    return Arrangement(12, pts, line_names=[f"L{j + 1}" for j in range(12)], point_names=names)


# A (9_3) configuration: nine lines, nine triple points (the configuration
# table), nine doubles.  1-based line numbers.
_NINE_THREE_TRIPLES = [
    (1, 2, 3),
    (1, 5, 9),
    (1, 6, 8),
    (2, 4, 7),
    (2, 8, 9),
    (3, 4, 8),
    (3, 5, 7),
    (4, 5, 6),
    (6, 7, 9),
]
_NINE_THREE_DOUBLES = [
    (1, 4),
    (1, 7),
    (2, 5),
    (2, 6),
    (3, 6),
    (3, 9),
    (4, 9),
    (5, 8),
    (7, 8),
]


def nine_three() -> Arrangement:
    """
    A realizable (9_3) configuration completed with its nine double points.

    Point ids follow the table: triples e1..e9 are ids 0..8, doubles e10..e18
    are ids 9..17.  Profile: t_2 = 9, t_3 = 9, s = 18.
    """
    pts = [set(x - 1 for x in tri) for tri in _NINE_THREE_TRIPLES]
    pts += [set(x - 1 for x in dbl) for dbl in _NINE_THREE_DOUBLES]
    names = [f"e{i + 1}" for i in range(18)]
    return Arrangement(9, pts, line_names=[f"L{j + 1}" for j in range(9)], point_names=names)


_TEN_LINE_TRIPLES = _NINE_THREE_TRIPLES + [(2, 5, 10), (3, 6, 10), (4, 9, 10)]
_TEN_LINE_DOUBLES = [
    (1, 4),
    (1, 7),
    (1, 10),
    (2, 6),
    (3, 9),
    (5, 8),
    (7, 8),
    (7, 10),
    (8, 10),
]


def ten_line() -> Arrangement:
    """
    The (9_3) configuration of :func:`nine_three` extended by a tenth line.

    L10 picks up three of the old doubles, turning them into the triples
    e10 = {2,5,10}, e11 = {3,6,10}, e12 = {4,9,10}.  Point ids: triples
    e1..e12 (ids 0..11), doubles e13..e21 (ids 12..20).  Profile: t_2 = 9,
    t_3 = 12, s = 21.
    """
    pts = [set(x - 1 for x in tri) for tri in _TEN_LINE_TRIPLES]
    pts += [set(x - 1 for x in dbl) for dbl in _TEN_LINE_DOUBLES]
    names = [f"e{i + 1}" for i in range(21)]
    return Arrangement(10, pts, line_names=[f"L{j + 1}" for j in range(10)], point_names=names)


def mu4() -> Arrangement:
    """
    The six lines x, y, z, x-y, x-z, y-z: t_2 = 3, t_3 = 4, s = 7.

    Line ids: Lx=0, Ly=1, Lz=2, Lxy=3, Lxz=4, Lyz=5.  Points: the four
    triples (0,0,1), (0,1,0), (1,0,0), (1,1,1) (ids 0..3) then the doubles
    (0,1,1), (1,0,1), (1,1,0) (ids 4..6).  Every point of multiplicity 3 is
    modular, giving the smallest 4-homogeneous supersolvable example.
    """
    pts = [
        {0, 1, 3},  # (0,0,1) on x, y, x-y
        {0, 2, 4},  # (0,1,0) on x, z, x-z
        {1, 2, 5},  # (1,0,0) on y, z, y-z
        {3, 4, 5},  # (1,1,1) on x-y, x-z, y-z
        {0, 5},  # (0,1,1) on x, y-z
        {1, 4},  # (1,0,1) on y, x-z
        {2, 3},  # (1,1,0) on z, x-y
    ]
    names = ["P001", "P010", "P100", "P111", "P011", "P101", "P110"]
    return Arrangement(6, pts, line_names=["Lx", "Ly", "Lz", "Lxy", "Lxz", "Lyz"], point_names=names)


def supersolvable_mu3(m: int) -> Arrangement:
    """
    The 3(m-1) lines of xyz(x^n - y^n)(x^n - z^n)(y^n - z^n), n = m - 2.

    Line ids extend :func:`ceva`: XY_i = i, YZ_i = n+i, XZ_i = 2n+i, then
    Lx = 3n, Ly = 3n+1, Lz = 3n+2.  The ceva triples T(i,j) keep their ids
    (i*n + j); the coordinate vertices become the three modular m-fold
    points Mz = (0,0,1) (id n^2), Mx = (1,0,0) (id n^2+1), My = (0,1,0)
    (id n^2+2); then the 3n doubles Lz^XY_i, Lx^YZ_i, Ly^XZ_i (ids from
    n^2+3 in that order).  Profile: t_2 = 3(m-2), t_3 = (m-2)^2, t_m = 3.
    """
    if not isinstance(m, int) or m < 4:
        raise BadParam(f"supersolvable_mu3 needs m >= 4, got {m!r}")
    n = m - 2
    lx, ly, lz = 3 * n, 3 * n + 1, 3 * n + 2
    pts: list[set[int]] = []
    names = []
    for i in range(n):
        for j in range(n):
            pts.append({(i - j) % n, n + j, 2 * n + i})
            names.append(f"T({i},{j})")
    pts.append(set(range(n)) | {lx, ly})
    names.append("Mz")
    pts.append(set(range(n, 2 * n)) | {ly, lz})
    names.append("Mx")
    pts.append(set(range(2 * n, 3 * n)) | {lx, lz})
    names.append("My")
    for i in range(n):
        pts.append({i, lz})
        names.append(f"Lz^XY{i}")
    for i in range(n):
        pts.append({n + i, lx})
        names.append(f"Lx^YZ{i}")
    for i in range(n):
        pts.append({2 * n + i, ly})
        names.append(f"Ly^XZ{i}")
    line_names = (
        [f"XY{i}" for i in range(n)]
        + [f"YZ{i}" for i in range(n)]
        + [f"XZ{i}" for i in range(n)]
        + ["Lx", "Ly", "Lz"]
    )
    return Arrangement(3 * n + 3, pts, line_names=line_names, point_names=names)


def a_w_k(m: int, k: int, chosen: Sequence[int] | None = None) -> Arrangement:
    """
    The supersolvable family xyz(x^n - y^n)(x^n - z^n) * prod(y - e^{i_j} z),
    n = m - 2, with k chosen exponents i_1 < ... < i_k.

    Line ids: Lx=0, Ly=1, Lz=2, XY_i = 3+i, XZ_i = 3+n+i (i in Z_n), then
    the k YZ lines in increasing exponent order.  Points, in id order:

    - P001 = (0,0,1) on all XY lines plus Lx, Ly  (multiplicity m, modular)
    - P010 = (0,1,0) on all XZ lines plus Lx, Lz  (multiplicity m, modular)
    - P100 = (1,0,0) on all YZ lines plus Ly, Lz  (multiplicity 2 + k)
    - triples T(i,j) = {XY_{(i-j) mod n}, XZ_i, YZ_j} for j in chosen
      (i outer, j inner ascending)
    - doubles D(i,j) = XY_{(i-j) mod n} ^ XZ_i for j not in chosen
    - doubles Lz^XY_i, Ly^XZ_i (i in Z_n), Lx^YZ_j (j in chosen)

    Defaults: chosen = {1, ..., k}.
    """
    if not isinstance(m, int) or m < 5:
        raise BadParam(f"a_w_k needs m >= 5, got {m!r}")
    n = m - 2
    if not isinstance(k, int) or not 0 <= k <= m - 3:
        raise BadParam(f"a_w_k needs 0 <= k <= m-3 = {m - 3}, got k={k!r}")
    if chosen is None:
        chosen = list(range(1, k + 1))
    chosen = list(chosen)
    if len(chosen) != k:
        raise BadParam(f"need exactly {k} exponents, got {len(chosen)}")
    if len(set(chosen)) != len(chosen):
        raise DuplicateExponent(f"duplicate exponents in {chosen}")
    for e in chosen:
        if not isinstance(e, int) or not 0 <= e <= m - 3:
            raise ExponentOutOfRange(f"exponent {e!r} outside 0..{m - 3}")
    chosen = sorted(chosen)
    xy = {i: 3 + i for i in range(n)}
    xz = {i: 3 + n + i for i in range(n)}
    yz = {e: 3 + 2 * n + idx for idx, e in enumerate(chosen)}
    pts: list[set[int]] = [
        {0, 1} | set(xy.values()),
        {0, 2} | set(xz.values()),
        {1, 2} | set(yz.values()),
    ]
    names = ["P001", "P010", "P100"]
    chosen_set = set(chosen)
    for i in range(n):
        for j in chosen:
            pts.append({xy[(i - j) % n], xz[i], yz[j]})
            names.append(f"T({i},{j})")
    for i in range(n):
        for j in range(n):
            if j not in chosen_set:
                pts.append({xy[(i - j) % n], xz[i]})
                names.append(f"D({i},{j})")
    for i in range(n):
        pts.append({2, xy[i]})
        names.append(f"Lz^XY{i}")
    for i in range(n):
        pts.append({1, xz[i]})
        names.append(f"Ly^XZ{i}")
    for j in chosen:
        pts.append({0, yz[j]})
        names.append(f"Lx^YZ{j}")
    line_names = (
        ["Lx", "Ly", "Lz"]
        + [f"XY{i}" for i in range(n)]
        + [f"XZ{i}" for i in range(n)]
        + [f"YZ{j}" for j in chosen]
    )
    return Arrangement(3 + 2 * n + k, pts, line_names=line_names, point_names=names)


# Registry used by the CLI: family name -> (callable, parameter names).
FAMILIES = {
    "near_pencil": (near_pencil, ("k",)),
    "two_modular": (two_modular, ("a", "b")),
    "generic": (generic, ("k",)),
    "ceva": (ceva, ("n",)),
    "hesse": (hesse, ()),
    "nine_three": (nine_three, ()),
    "ten_line": (ten_line, ()),
    "mu4": (mu4, ()),
    "supersolvable_mu3": (supersolvable_mu3, ("m",)),
    "a_w_k": (a_w_k, ("m", "k", "chosen")),
}


def build_family(name: str, **params) -> Arrangement:
    """Build a family by name; unknown names or parameters raise BadParam."""
    if name not in FAMILIES:
        raise BadParam(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    fn, wanted = FAMILIES[name]
    args = {}
    for key, value in params.items():
        if value is None:
            continue
        if key not in wanted:
            raise BadParam(f"family {name!r} does not take parameter {key!r}")
        args[key] = value
    missing = [w for w in wanted if w not in args and w != "chosen"]
    if missing:
        raise BadParam(f"family {name!r} needs parameters: {', '.join(missing)}")
    return fn(**args)


# ---------------------------------------------------------------------------
# Coordinate realizations (cross-check path; exact fields only)


def ceva_coordinate_lines(n: int):
    """
    The 3n lines of (x^n-y^n)(y^n-z^n)(x^n-z^n) over Q(e), e^n = 1, in
    builder order.  n = 2 is accepted here (conductor 2 means e = -1) since
    the larger coordinate families reuse these pencils.
    """
    from .exact_field import CycloNumber
    from .projective import ProjLine

    if not isinstance(n, int) or n < 2:
        raise BadParam(f"coordinate pencils need n >= 2, got {n!r}")
    zero, one = CycloNumber.zero(n), CycloNumber.one(n)
    lines = []
    for i in range(n):
        lines.append(ProjLine((one, -CycloNumber.root(n, i), zero)))  # x - e^i y
    for i in range(n):
        lines.append(ProjLine((zero, one, -CycloNumber.root(n, i))))  # y - e^i z
    for i in range(n):
        lines.append(ProjLine((one, zero, -CycloNumber.root(n, i))))  # x - e^i z
    return lines


def mu4_coordinate_lines():
    """x, y, z, x-y, x-z, y-z over Q, in builder order."""
    from fractions import Fraction

    from .projective import ProjLine

    z, o = Fraction(0), Fraction(1)
    return [
        ProjLine((o, z, z)),
        ProjLine((z, o, z)),
        ProjLine((z, z, o)),
        ProjLine((o, -o, z)),
        ProjLine((o, z, -o)),
        ProjLine((z, o, -o)),
    ]


def supersolvable_mu3_coordinate_lines(m: int):
    """The ceva(m-2) lines followed by x, y, z over Q(e), in builder order."""
    from .exact_field import CycloNumber
    from .projective import ProjLine

    if not isinstance(m, int) or m < 4:
        raise BadParam(f"supersolvable_mu3 needs m >= 4, got {m!r}")
    n = m - 2
    zero, one = CycloNumber.zero(n), CycloNumber.one(n)
    lines = list(ceva_coordinate_lines(n))
    lines.append(ProjLine((one, zero, zero)))
    lines.append(ProjLine((zero, one, zero)))
    lines.append(ProjLine((zero, zero, one)))
    return lines


def a_w_k_coordinate_lines(m: int, k: int, chosen: Sequence[int] | None = None):
    """x, y, z, the XY and XZ pencils, then the chosen YZ lines, over Q(e)."""
    from .exact_field import CycloNumber
    from .projective import ProjLine

    if not isinstance(m, int) or m < 5:
        raise BadParam(f"a_w_k needs m >= 5, got {m!r}")
    n = m - 2
    if chosen is None:
        chosen = list(range(1, k + 1))
    chosen = sorted(chosen)
    zero, one = CycloNumber.zero(n), CycloNumber.one(n)
    lines = [
        ProjLine((one, zero, zero)),
        ProjLine((zero, one, zero)),
        ProjLine((zero, zero, one)),
    ]
    for i in range(n):
        lines.append(ProjLine((one, -CycloNumber.root(n, i), zero)))
    for i in range(n):
        lines.append(ProjLine((one, zero, -CycloNumber.root(n, i))))
    for j in chosen:
        lines.append(ProjLine((zero, one, -CycloNumber.root(n, j))))
    return lines
