"""Built-in polytopes addressable from the command line.

Fixture names:
    example-3.7        a 6-facet Kaehler class on a twice blown up
                       Hirzebruch surface
    example-3.8:<m>    a 7-facet family on an iterated blow up of the
                       projective plane, one rational offset parametrized
                       by a positive integer m
    cpn:<n>:<degree>   projective n-space with the degree-d class
"""

from __future__ import annotations

from fractions import Fraction

from .polytope import HalfspacePolytope


def blown_up_hirzebruch() -> HalfspacePolytope:
    return HalfspacePolytope(
        normals=((1, 0), (0, 1), (1, -1), (-1, 1), (1, -2), (0, -1)),
        offsets=(0, 0, -1, -1, -3, -3),
    )


def iterated_plane_blowup(m: int) -> HalfspacePolytope:
    if m < 1:
        raise ValueError("m must be a positive integer")
    return HalfspacePolytope(
        normals=((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (2, -1)),
        offsets=(0, 0, -2, -4, -4, -2, Fraction(-2 * m, m + 1)),
    )


def projective_space(n: int, degree: int = 1) -> HalfspacePolytope:
    if n < 1 or degree < 1:
        raise ValueError("need n >= 1 and degree >= 1")
    normals = tuple(
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    ) + ((-1,) * n,)
    offsets = (0,) * n + (-degree,)
    return HalfspacePolytope(normals, offsets)


def unit_square() -> HalfspacePolytope:
    return HalfspacePolytope(
        normals=((1, 0), (0, 1), (-1, 0), (0, -1)), offsets=(0, 0, -1, -1)
    )


def hirzebruch(r: int = 2, a: int = 1, b: int = 1) -> HalfspacePolytope:
    """Four facets: x1 >= 0, x2 >= 0, -x1 + r x2 >= -a, -x2 >= -b."""
    return HalfspacePolytope(
        normals=((1, 0), (0, 1), (-1, r), (0, -1)), offsets=(0, 0, -a, -b)
    )


def resolve_fixture(name: str) -> HalfspacePolytope:
    """Parse a fixture name; raises ValueError for anything unrecognized."""
    parts = name.split(":")
    if parts[0] == "example-3.7" and len(parts) == 1:
        return blown_up_hirzebruch()
    if parts[0] == "example-3.8" and len(parts) == 2:
        return iterated_plane_blowup(int(parts[1]))
    if parts[0] == "cpn" and len(parts) == 3:
        return projective_space(int(parts[1]), int(parts[2]))
    raise ValueError(f"unknown fixture {name!r}")
