"""Built-in example inputs: named fans, polytopes, and bundle specs.

Everything is embedded literally; no file or network access.  The data
dicts use the same JSON shapes the CLI accepts from --input files, so a
catalog entry and a user file travel the same code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFound


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # fan | polytope | bundle
    data: dict
    provenance: str


def _fan(dim, rays, max_cones):
    return {"dim": dim, "rays": [list(r) for r in rays],
            "max_cones": [list(c) for c in max_cones]}


def _polytope(dim, vertices):
    return {"dim": dim, "vertices": [list(v) for v in vertices]}


_ENTRIES = (
    CatalogEntry(
        name="cp1",
        kind="fan",
        data=_fan(1, [[1], [-1]], [[0], [1]]),
        provenance="projective line; complete fan on the two half-lines",
    ),
    CatalogEntry(
        name="cp2",
        kind="fan",
        data=_fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [2, 0]]),
        provenance="projective plane; standard three-cone fan",
    ),
    CatalogEntry(
        name="cp1xcp1",
        kind="fan",
        data=_fan(2, [[1, 0], [0, 1], [-1, 0], [0, -1]],
                  [[0, 1], [1, 2], [2, 3], [3, 0]]),
        provenance="product of two projective lines; four quadrant cones",
    ),
    CatalogEntry(
        name="hirzebruch-f1",
        kind="fan",
        data=_fan(2, [[1, 0], [0, 1], [-1, -1], [1, 1]],
                  [[0, 3], [3, 1], [1, 2], [2, 0]]),
        provenance="first Hirzebruch surface: the plane blown up in one "
                   "torus-fixed point (ray 0+1 inserted)",
    ),
    CatalogEntry(
        name="dp2",
        kind="fan",
        data=_fan(2, [[1, 0], [0, 1], [-1, -1], [1, 1], [-1, 0]],
                  [[0, 3], [3, 1], [1, 4], [4, 2], [2, 0]]),
        provenance="del Pezzo degree 7: the plane blown up in two "
                   "torus-fixed points",
    ),
    CatalogEntry(
        name="dp3",
        kind="fan",
        data=_fan(2, [[1, 0], [0, 1], [-1, -1], [1, 1], [-1, 0], [0, -1]],
                  [[0, 3], [3, 1], [1, 4], [4, 2], [2, 5], [5, 0]]),
        provenance="del Pezzo degree 6: the plane blown up in all three "
                   "torus-fixed points; hexagonal and centrally symmetric",
    ),
    CatalogEntry(
        name="unit-simplex-1",
        kind="polytope",
        data=_polytope(1, [[0], [1]]),
        provenance="unit segment, the 1-dimensional standard simplex",
    ),
    CatalogEntry(
        name="unit-simplex-2",
        kind="polytope",
        data=_polytope(2, [[0, 0], [1, 0], [0, 1]]),
        provenance="standard triangle, the 2-dimensional unit simplex",
    ),
    CatalogEntry(
        name="unit-simplex-3",
        kind="polytope",
        data=_polytope(3, [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        provenance="standard tetrahedron, the 3-dimensional unit simplex",
    ),
    CatalogEntry(
        name="segment-0-2",
        kind="polytope",
        data=_polytope(1, [[0], [2]]),
        provenance="segment of lattice length two (a degree-2 polarization "
                   "of the line)",
    ),
    CatalogEntry(
        name="bundle-equal-slopes",
        kind="bundle",
        data={"genus": 2, "twist_r": 1, "deg_B": 0,
              "components": [
                  {"rank": 1, "degree": 1, "weight": "5/1"},
                  {"rank": 1, "degree": 1, "weight": "7/1"},
              ]},
        provenance="split rank-2 bundle over a genus-2 curve with equal "
                   "component slopes; every Chow weight vanishes",
    ),
    CatalogEntry(
        name="bundle-split-g2",
        kind="bundle",
        data={"genus": 2, "twist_r": 1, "deg_B": -1,
              "components": [
                  {"rank": 1, "degree": 0, "weight": "1/1"},
                  {"rank": 1, "degree": 1, "weight": "-1/1"},
              ]},
        provenance="split rank-2 bundle over a genus-2 curve with distinct "
                   "slopes; base twist degree -1 keeps the twisted Euler "
                   "characteristic away from zero",
    ),
)


def load_catalog() -> list[CatalogEntry]:
    return list(_ENTRIES)


def lookup(name: str) -> CatalogEntry:
    for entry in _ENTRIES:
        if entry.name == name:
            return entry
    known = ", ".join(e.name for e in _ENTRIES)
    raise NotFound(f"no catalog entry named {name!r}; known entries: {known}")
