"""Exact projective points and lines over Q or a cyclotomic field.

Points and lines live in P^2 with homogeneous coordinates drawn from one
field per object (all-rational or all one conductor); the canonical
representative scales the first nonzero coordinate to 1, which turns
projective equality into plain tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arrangement import Arrangement, ArrangementError
from .exact_field import ConductorMismatch, CycloNumber, format_scalar, parse_scalar

__all__ = [
    "GeometryError",
    "IdenticalLines",
    "IdenticalPoints",
    "DuplicateLine",
    "ProjPoint",
    "ProjLine",
    "meet",
    "line_through",
    "incident",
    "arrangement_from_lines",
    "coordinates_to_payload",
    "coordinates_from_payload",
]


class GeometryError(ValueError):
    pass


class IdenticalLines(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class DuplicateLine(GeometryError):
    pass


def _normalize_triple(coords) -> tuple:
    """Validate a homogeneous triple (uniform field) and canonicalize it."""
    if len(coords) != 3:
        raise GeometryError(f"need 3 homogeneous coordinates, got {len(coords)}")
    vals = []
    conductor = None
    any_cyclo = False
    for c in coords:
        if isinstance(c, CycloNumber):
            any_cyclo = True
            if conductor is None:
                conductor = c.n
            elif c.n != conductor:
                raise ConductorMismatch(f"mixed conductors {conductor} and {c.n}")
            vals.append(c)
        elif isinstance(c, (int, Fraction)):
            vals.append(Fraction(c))
        else:
            raise GeometryError(f"unsupported coordinate type {type(c).__name__}")
    if any_cyclo:
        vals = [
            v if isinstance(v, CycloNumber) else CycloNumber.from_rational(conductor, v)
            for v in vals
        ]
        nonzero = [v for v in vals if not v.is_zero]
        if not nonzero:
            raise GeometryError("all three homogeneous coordinates are zero")
        lead = nonzero[0]
        inv = lead.inverse()
        return tuple(v * inv for v in vals)
    nonzero = [v for v in vals if v != 0]
    if not nonzero:
        raise GeometryError("all three homogeneous coordinates are zero")
    lead = nonzero[0]
    return tuple(v / lead for v in vals)


class _Homogeneous:
    __slots__ = ("coords",)

    def __init__(self, coords) -> None:
        object.__setattr__(self, "coords", _normalize_triple(tuple(coords)))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __repr__(self) -> str:
        inner = ", ".join(format_scalar(c) for c in self.coords)
        return f"{type(self).__name__}(({inner}))"


class ProjPoint(_Homogeneous):
    """Point of P^2 in canonical form (first nonzero coordinate = 1)."""


class ProjLine(_Homogeneous):
    """Line of P^2 via its coefficient triple, same canonical form."""


def _cross(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _is_zero_triple(t) -> bool:
    return all((c.is_zero if isinstance(c, CycloNumber) else c == 0) for c in t)


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique common point of two distinct lines (coordinate cross product)."""
    raw = _cross(l1.coords, l2.coords)
    if _is_zero_triple(raw):
        raise IdenticalLines(f"{l1!r} and {l2!r} are the same projective line")
    return ProjPoint(raw)


def line_through(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    """The unique line through two distinct points (dual cross product)."""
    raw = _cross(p1.coords, p2.coords)
    if _is_zero_triple(raw):
        raise IdenticalPoints(f"{p1!r} and {p2!r} are the same projective point")
    return ProjLine(raw)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    """Exact incidence test: a*x + b*y + c*z = 0."""
    total = p.coords[0] * l.coords[0] + p.coords[1] * l.coords[1] + p.coords[2] * l.coords[2]
    return total.is_zero if isinstance(total, CycloNumber) else total == 0


def arrangement_from_lines(lines: Sequence[ProjLine], line_names: Sequence[str] | None = None) -> Arrangement:
    """
    The incidence structure of a list of pairwise distinct lines.

    All C(k,2) pairwise meets are computed exactly and clustered by canonical
    coordinates; each cluster becomes one singular point whose line set is
    everything passing through it.  Points are ordered by their sorted line-id
    signature, which is deterministic and independent of the field.  The
    produced arrangement carries the input lines as coordinate metadata.
    """
    lines = list(lines)
    if len(lines) < 2:
        raise GeometryError("need at least two lines")
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if lines[i] == lines[j]:
                raise DuplicateLine(f"lines {i} and {j} coincide")
    through: dict[ProjPoint, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            through.setdefault(p, set()).add(i)
            through[p].add(j)
    ordered = sorted(through.items(), key=lambda item: sorted(item[1]))
    return Arrangement(
        len(lines),
        [m for _, m in ordered],
        line_names=line_names,
        coordinates=lines,
    )


# ---------------------------------------------------------------------------
# JSON payload for coordinate metadata: field descriptor plus one coefficient
# triple of exact strings per line.


def coordinates_to_payload(lines) -> dict:
    conductor = None
    for line in lines:
        for c in line.coords:
            if isinstance(c, CycloNumber):
                conductor = c.n
                break
        if conductor is not None:
            break
    payload: dict = {
        "field": {"type": "rational"} if conductor is None else {"type": "cyclotomic", "conductor": conductor},
        "lines": [[format_scalar(c) for c in line.coords] for line in lines],
    }
    return payload


def coordinates_from_payload(payload, k: int):
    if not isinstance(payload, dict) or "field" not in payload or "lines" not in payload:
        raise ArrangementError("coordinate payload needs 'field' and 'lines'")
    field = payload["field"]
    conductor = None
    if field.get("type") == "cyclotomic":
        conductor = field.get("conductor")
        if not isinstance(conductor, int) or conductor < 1:
            raise ArrangementError(f"bad conductor {conductor!r}")
    elif field.get("type") != "rational":
        raise ArrangementError(f"unknown coordinate field {field!r}")
    rows = payload["lines"]
    if len(rows) != k:
        raise ArrangementError(f"coordinate payload has {len(rows)} lines, arrangement has {k}")
    out = []
    for row in rows:
        if len(row) != 3:
            raise ArrangementError("each coordinate row needs 3 entries")
        out.append(ProjLine(tuple(parse_scalar(text, conductor) for text in row)))
    return out
