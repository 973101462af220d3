"""Integer intersection arithmetic on numerical Picard lattices.

A lattice here is a numerical-equivalence model of a surface: a basis of
divisor-class labels, the symmetric Gram matrix of their pairwise
intersection numbers, the canonical class, and a dictionary of named
classes (hyperplane class, fiber class, exceptional components, ...).

The built-in lattices model the surface families that can carry a
low-genus curve cut out by a small-degree hypersurface: cubic cones and
scrolls, and the irreducible quartics (K3, cone over a plane quartic,
rational and elliptic-ruled models with an irrational singular point,
non-normal scrolls, the Segre symmetroid, projected quartics).  Each one
records only Gram data, never the surface itself, and every downstream
number is recomputed from the Gram matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficient vector in a lattice basis."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _match(self, other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _match(self, other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coeffs))

    def __neg__(self) -> "DivisorClass":
        return -1 * self

    @classmethod
    def zero(cls, rank: int) -> "DivisorClass":
        return cls((0,) * rank)


def _match(a: DivisorClass, b: DivisorClass) -> None:
    if len(a.coeffs) != len(b.coeffs):
        raise ValueError(f"rank mismatch: {len(a.coeffs)} vs {len(b.coeffs)}")


@dataclass(frozen=True)
class PicardLattice:
    name: str
    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: DivisorClass
    named: dict[str, DivisorClass] = field(default_factory=dict)
    description: str = ""

    def __post_init__(self) -> None:
        r = len(self.basis)
        if len(self.gram) != r or any(len(row) != r for row in self.gram):
            raise ValueError(f"{self.name}: gram must be {r}x{r}")
        for i in range(r):
            for j in range(r):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"{self.name}: gram not symmetric at ({i},{j})")
        for label, cls in {**self.named, "K": self.canonical}.items():
            if len(cls.coeffs) != r:
                raise ValueError(f"{self.name}: class {label} has wrong rank")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def cls(self, label: str) -> DivisorClass:
        """Named class, or a basis unit vector by basis label."""
        if label in self.named:
            return self.named[label]
        if label in self.basis:
            i = self.basis.index(label)
            return DivisorClass(tuple(int(i == j) for j in range(self.rank)))
        raise KeyError(f"{self.name}: no class named {label!r}")


def intersect(lat: PicardLattice, a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number a . b, evaluated exactly through the Gram matrix."""
    if len(a.coeffs) != lat.rank or len(b.coeffs) != lat.rank:
        raise ValueError(f"{lat.name}: class rank does not match lattice rank {lat.rank}")
    return sum(
        ai * lat.gram[i][j] * bj
        for i, ai in enumerate(a.coeffs)
        if ai
        for j, bj in enumerate(b.coeffs)
        if bj
    )


def canonical_degree(lat: PicardLattice, gamma: DivisorClass) -> int:
    """Degree of the canonical class on gamma (K . gamma)."""
    return intersect(lat, lat.canonical, gamma)


def family_dim_bound(g: int, canonical_deg: int) -> int:
    """Upper bound on the dimension of a family of irreducible genus-g curves."""
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return max(g, g - 1 - canonical_deg)


def adjunction_genus(lat: PicardLattice, c: DivisorClass) -> int:
    """Arithmetic genus of the class c by adjunction: (c^2 + c.K)/2 + 1."""
    total = intersect(lat, c, c) + canonical_degree(lat, c)
    if total % 2:
        raise ArithmeticError(f"{lat.name}: adjunction not integral on {c}")
    return total // 2 + 1


def _lat(
    name: str,
    basis: tuple[str, ...],
    gram: tuple[tuple[int, ...], ...],
    canonical: tuple[int, ...],
    named: dict[str, tuple[int, ...]],
    description: str,
) -> PicardLattice:
    return PicardLattice(
        name=name,
        basis=basis,
        gram=gram,
        canonical=DivisorClass(canonical),
        named={k: DivisorClass(v) for k, v in named.items()},
        description=description,
    )


def _hirzebruch(e: int) -> PicardLattice:
    # section E with E^2 = -e, fiber F; K = -2E - (e+2)F, K^2 = 8
    named: dict[str, tuple[int, ...]] = {}
    if e in (0, 1):
        named["H"] = (1, 2)
    elif e in (2, 3):
        named["H"] = (1, 3)
    if e == 2:
        named["D"] = (1, 2)
    return _lat(
        f"hirzebruch({e})",
        ("E", "F"),
        ((-e, 1), (1, 0)),
        (-2, -(e + 2)),
        named,
        f"ruled surface over P^1 with a section of self-intersection -{e}; "
        "H is the hyperplane class of the projective model used by the case table",
    )


def _blowup_plane(r: int) -> PicardLattice:
    # P^2 blown up at r points, total-transform basis, Gram diag(1, -1, ..., -1)
    basis = ("L",) + tuple(f"E{i}" for i in range(1, r + 1))
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(r + 1))
        for i in range(r + 1)
    )
    named: dict[str, tuple[int, ...]] = {}
    if r == 6:
        # anticanonical model: a cubic surface with at worst rational double points
        named["H"] = (3,) + (-1,) * 6
    if r == 9:
        # quartic with a double line: H = 4L - 2E1 - E2 - ... - E9,
        # conic pencil Lam = L - E1, and the two possible triple-point
        # cycle components meeting the pencil once
        named["H"] = (4, -2, -1, -1, -1, -1, -1, -1, -1, -1)
        named["Lam"] = (1, -1, 0, 0, 0, 0, 0, 0, 0, 0)
        named["A1"] = (0, 1, -1, -1, 0, 0, 0, 0, 0, 0)
        named["A2"] = (0, 1, 0, 0, -1, -1, 0, 0, 0, 0)
    return _lat(
        f"blowup_plane({r})",
        basis,
        gram,
        (-3,) + (1,) * r,
        named,
        f"plane blown up at {r} points (total-transform exceptional basis)",
    )


_FIXED: dict[str, PicardLattice] = {}


def _register(lat: PicardLattice) -> None:
    _FIXED[lat.name] = lat


_register(
    _lat(
        "elliptic_cone",
        ("E", "F"),
        ((-3, 1), (1, 0)),
        (-2, -3),
        {"H": (1, 3)},
        "minimal desingularization of the cone over a smooth plane cubic: "
        "ruled over an elliptic curve, E the (-3)-section over the vertex, H = E + 3F",
    )
)

_register(
    _lat(
        "quartic_cone",
        ("E0", "F"),
        ((-4, 1), (1, 0)),
        (-2, 0),
        {"H": (1, 4), "E": (2, 0)},
        "cone over a smooth plane quartic: E0 the (-4)-section over the vertex, "
        "anticanonical E = 2E0, H = E0 + 4F",
    )
)

_register(
    _lat(
        "k3_quartic",
        ("H",),
        ((4,),),
        (0,),
        {"H": (1,)},
        "quartic with at worst rational double points: trivial canonical class",
    )
)

_register(
    _lat(
        "dp2_sep",
        ("G", "Delta"),
        ((2, 0), (0, -4)),
        (-1, 1),
        {"H": (2, -1), "E": (1, -1), "P": (1, 0)},
        "rational quartic with one irrational double point, built from a degree-2 "
        "weak del Pezzo surface; P is the pulled-back anticanonical net, Delta the "
        "four separation blowups, H = 2P - Delta, E = P - Delta",
    )
)

_register(
    _lat(
        "dp1_sep",
        ("H", "Lam", "Xi", "Delta"),
        (
            (4, 4, 3, 1),
            (4, 1, 0, 0),
            (3, 0, -1, 0),
            (1, 0, 0, -1),
        ),
        (0, -1, 1, 1),
        {"H": (1, 0, 0, 0), "E": (0, 1, -1, -1), "Lam": (0, 1, 0, 0)},
        "rational quartic with one irrational double point, built from a degree-1 "
        "weak del Pezzo surface; Lam is the nef anticanonical pencil, E = Lam - Xi - Delta",
    )
)

_register(
    _lat(
        "dcover_f1",
        ("L", "Ep", "R"),
        (
            (0, 2, 0),
            (2, -3, 2),
            (0, 2, -2),
        ),
        (0, -1, -1),
        {"H": (1, 2, 2), "E": (0, 1, 1), "L": (1, 0, 0), "Ep": (0, 1, 0)},
        "rational quartic with one irrational point, from a double cover of a "
        "ruled rational surface; L the rational pencil with L.E = 2, E = Ep + R "
        "with Ep the component meeting L, H = L + 2E",
    )
)

_register(
    _lat(
        "monoid_sep",
        ("P", "D1", "D2", "D3"),
        (
            (1, 0, 0, 0),
            (0, -4, 0, 0),
            (0, 0, -4, 0),
            (0, 0, 0, -4),
        ),
        (-3, 1, 1, 1),
        {
            "H": (4, -1, -1, -1),
            "E": (3, -1, -1, -1),
            "Lam": (1, 0, 0, 0),
            "C0": (1, -1, 0, 0),
        },
        "quartic with a triple point: plane separation of a quartic and a cubic; "
        "Lam the projection net, E the anticanonical cubic, C0 a line-type "
        "component of E in the split configuration",
    )
)

_register(
    _lat(
        "elliptic_ruled_a",
        ("H", "X1", "X2", "F"),
        (
            (4, 0, 0, 3),
            (0, -1, 0, 1),
            (0, 0, -1, 1),
            (3, 1, 1, 0),
        ),
        (0, -1, -1, 0),
        {"H": (1, 0, 0, 0), "E": (0, 1, 1, 0), "F": (0, 0, 0, 1)},
        "quartic swept by an elliptic pencil of twisted cubics (H.F = 3), with two "
        "simple elliptic singularities over the disjoint (-1)-sections X1, X2",
    )
)

_register(
    _lat(
        "elliptic_ruled_b",
        ("H", "E1", "F1", "F2", "F"),
        (
            (4, 0, 0, 0, 2),
            (0, -2, 1, 1, 1),
            (0, 1, -2, 0, 0),
            (0, 1, 0, -2, 0),
            (2, 1, 0, 0, 0),
        ),
        (0, -2, -1, -1, 0),
        {
            "H": (1, 0, 0, 0, 0),
            "E1": (0, 1, 0, 0, 0),
            "E2": (0, 1, 1, 1, 0),
            "F1": (0, 0, 1, 0, 0),
            "F2": (0, 0, 0, 1, 0),
            "F": (0, 0, 0, 0, 1),
        },
        "quartic swept by an elliptic pencil of conics (H.F = 2); the anticanonical "
        "divisor is E1 + E2 with E2 = E1 (two elliptic points) or E2 = E1 + F1 + F2 "
        "(one point, two fiber components)",
    )
)

_register(
    _lat(
        "elliptic_ruled_c",
        ("H", "Xi", "Delta1", "F"),
        (
            (4, 0, 0, 3),
            (0, -1, 1, 1),
            (0, 1, -2, 0),
            (3, 1, 0, 0),
        ),
        (0, -2, -1, 0),
        {"H": (1, 0, 0, 0), "E": (0, 2, 1, 0), "Xi": (0, 1, 0, 0), "F": (0, 0, 0, 1)},
        "quartic swept by an elliptic pencil of twisted cubics with one irrational "
        "point of genus 2; anticanonical E = 2*Xi + Delta1",
    )
)

_register(
    _lat(
        "genus2_scroll",
        ("E", "F"),
        ((-4, 1), (1, 0)),
        (-2, -2),
        {"H": (1, 4), "E": (1, 0)},
        "non-normal quartic scroll over a genus-2 curve (cone over a singular "
        "plane quartic): H = E + 4F",
    )
)

_register(
    _lat(
        "elliptic_scroll_a",
        ("D1", "F"),
        ((0, 1), (1, 0)),
        (-2, 0),
        {"H": (1, 2), "D1": (1, 0)},
        "non-normal elliptic scroll with two skew double lines (split bundle)",
    )
)

_register(
    _lat(
        "elliptic_scroll_b",
        ("D1", "F"),
        ((0, 1), (1, 0)),
        (-2, 0),
        {"H": (1, 2), "D1": (1, 0)},
        "non-normal elliptic scroll with a single double line (non-split bundle); "
        "numerically identical to the split model",
    )
)

_register(
    _lat(
        "veronese",
        ("L",),
        ((1,),),
        (-3,),
        {"H": (2,)},
        "Veronese plane projected to P^3 (Steiner's Roman surface): H = 2L",
    )
)

_register(
    _lat(
        "segre",
        ("L", "E1", "E2", "E3", "E4", "E5"),
        (
            (1, 0, 0, 0, 0, 0),
            (0, -1, 0, 0, 0, 0),
            (0, 0, -1, 0, 0, 0),
            (0, 0, 0, -1, 0, 0),
            (0, 0, 0, 0, -1, 0),
            (0, 0, 0, 0, 0, -1),
        ),
        (-3, 1, 1, 1, 1, 1),
        {"H": (3, -1, -1, -1, -1, -1)},
        "Segre quartic symmetroid: projection of a degree-4 weak del Pezzo "
        "surface, H = -K",
    )
)


_PARAM = re.compile(r"^(hirzebruch|blowup_plane)\((\d+)\)$")

# documented self-intersection of the canonical class, checked in the test suite
CANONICAL_SQUARES: dict[str, int] = {
    "hirzebruch(0)": 8,
    "hirzebruch(1)": 8,
    "hirzebruch(2)": 8,
    "hirzebruch(3)": 8,
    "elliptic_cone": 0,
    "quartic_cone": -16,
    "k3_quartic": 0,
    "dp2_sep": -2,
    "dp1_sep": -1,
    "dcover_f1": -1,
    "monoid_sep": -3,
    "elliptic_ruled_a": -2,
    "elliptic_ruled_b": -4,
    "elliptic_ruled_c": -2,
    "genus2_scroll": -8,
    "elliptic_scroll_a": 0,
    "elliptic_scroll_b": 0,
    "veronese": 9,
    "segre": 4,
    "blowup_plane(6)": 3,
    "blowup_plane(9)": 0,
}


def builtin_lattice(name: str) -> PicardLattice:
    """Built-in lattice by name, e.g. 'hirzebruch(3)' or 'blowup_plane(9)'."""
    if name in _FIXED:
        return _FIXED[name]
    m = _PARAM.match(name)
    if m:
        kind, arg = m.group(1), int(m.group(2))
        if kind == "hirzebruch":
            if arg not in (0, 1, 2, 3):
                raise KeyError(f"hirzebruch({arg}) is not a built-in model (e in 0..3)")
            return _hirzebruch(arg)
        if arg < 1:
            raise KeyError(f"blowup_plane({arg}) needs at least one point")
        return _blowup_plane(arg)
    raise KeyError(f"unknown lattice {name!r}")


def builtin_names() -> list[str]:
    """Names of every built-in lattice instance the case table can refer to."""
    return sorted(CANONICAL_SQUARES)


def export_lattices(names: list[str] | None = None) -> dict:
    """Audit table of built-in lattices as plain JSON-able data."""
    rows = []
    for name in names if names is not None else builtin_names():
        lat = builtin_lattice(name)
        rows.append(
            {
                "name": lat.name,
                "basis": list(lat.basis),
                "gram": [list(row) for row in lat.gram],
                "canonical": list(lat.canonical.coeffs),
                "named": {k: list(v.coeffs) for k, v in sorted(lat.named.items())},
                "description": lat.description,
            }
        )
    return {"schema_version": "1", "lattices": rows}
