"""Galois-stable point configurations realizing each cyclic surface type.

Two constructions are implemented exactly.

* Conic construction: five Frobenius-stable points on the fixed conic
  y^2 = x*z (the image of t -> (1:t:t^2)), built from five affine parameters
  carrying a prescribed cyclic Frobenius action.  Works whenever the base
  field has more than c(H) elements, where c is the orbit-multiplicity
  complexity from ``perms``.
* Four-point construction: blowing up four points of the projective plane
  in general position; the type is read off the induced permutation of the
  ten combinatorial (-1)-classes (four exceptional classes and six lines).
  This covers the small fields the conic construction cannot reach.

The blow-down of a Galois-invariant vertex converts a degree-5 model into a
degree-6 model; all types with cyclic representatives are reachable this way
over every finite field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .curvegraphs import blowdown_action, curve_graph, graph_action, invariant_vertices, VertexPerm
from .fields import (
    FieldSpec,
    FFElem,
    element_degree,
    elements_of_degree,
    frobenius,
    from_index,
    make_field,
    one,
    parse_field_literal,
    subfield_elements,
    zero,
)
from .perms import (
    ClassLabel,
    Perm,
    Subgroup,
    class_label,
    class_representative,
    complexity,
    cyclic_generator,
    generate,
    orbits,
    parse_perm,
    symmetric_group_elements,
)

CONSTRUCTION_TAGS = ("conic5", "fourpoints", "conic5_blowdown", "fourpoints_blowdown")


# --- projective points and lines --------------------------------------------

def _normalized(coords: tuple[FFElem, FFElem, FFElem]) -> tuple[FFElem, FFElem, FFElem]:
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("point has no nonzero coordinate")
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


@dataclass(frozen=True)
class PlanePoint:
    """A projective plane point, scaled so its first nonzero coordinate is 1."""

    spec: FieldSpec
    coords: tuple[FFElem, FFElem, FFElem]

    def __post_init__(self):
        if len(self.coords) != 3 or any(c.spec != self.spec for c in self.coords):
            raise ValueError("a plane point needs three coordinates in one field")
        object.__setattr__(self, "coords", _normalized(self.coords))

    def apply_frobenius(self) -> "PlanePoint":
        return PlanePoint(self.spec, tuple(frobenius(c) for c in self.coords))

    def on_conic(self) -> bool:
        x, y, z = self.coords
        return y * y == x * z

    def to_json(self) -> list[list[int]]:
        return [list(c.coeffs) for c in self.coords]

    def __str__(self) -> str:
        return "(" + ":".join(str(c.index) for c in self.coords) + ")"


def plane_point(spec: FieldSpec, *coords) -> PlanePoint:
    """Point from coordinates given as FFElem or small integers."""
    lifted = tuple(
        c if isinstance(c, FFElem) else FFElem(spec, (c,)) for c in coords
    )
    return PlanePoint(spec, lifted)


def _cross(a: PlanePoint, b: PlanePoint) -> tuple[FFElem, FFElem, FFElem]:
    (a0, a1, a2), (b0, b1, b2) = a.coords, b.coords
    return (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)


def _det3(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> FFElem:
    c = _cross(p, q)
    return sum((ci * ri for ci, ri in zip(c, r.coords)), zero(p.spec))


def general_position(points) -> bool:
    """No three of the points are collinear (needs at least three points)."""
    pts = list(points)
    if len(pts) < 3:
        raise ValueError("general position needs at least three points")
    return all(
        bool(_det3(p, q, r)) for p, q, r in itertools.combinations(pts, 3)
    )


@dataclass(frozen=True)
class PointConfig:
    """A sequence of distinct plane points, optionally marked as conic points."""

    spec: FieldSpec
    points: tuple[PlanePoint, ...]
    on_conic: bool = False

    def __post_init__(self):
        if any(p.spec != self.spec for p in self.points):
            raise ValueError("mismatched point fields")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")
        if self.on_conic and not all(p.on_conic() for p in self.points):
            raise ValueError("point off the marked conic")

    def __len__(self) -> int:
        return len(self.points)


def conic_point(spec: FieldSpec, t: FFElem) -> PlanePoint:
    return PlanePoint(spec, (one(spec), t, t * t))


def conic_config(betas) -> PointConfig:
    """Five (or n) conic points (1 : b : b^2) from distinct parameters."""
    betas = tuple(betas)
    if len(set(betas)) != len(betas):
        raise ValueError("conic parameters must be distinct")
    spec = betas[0].spec
    config = PointConfig(spec, tuple(conic_point(spec, b) for b in betas), on_conic=True)
    # a line meets a smooth conic in at most two points; asserted, not assumed
    assert general_position(config.points)
    return config


def frobenius_permutation(config: PointConfig) -> Perm:
    """The permutation i -> j with frobenius(P_i) = P_j (1-indexed)."""
    where = {p: i for i, p in enumerate(config.points, start=1)}
    images = []
    for p in config.points:
        q = p.apply_frobenius()
        if q not in where:
            raise ValueError("configuration not defined over the base field")
        images.append(where[q])
    return Perm(tuple(i - 1 for i in images))


# --- the inductive equivariant point-set algorithm ---------------------------

def _base_scalars(work: FieldSpec) -> tuple[FFElem, ...]:
    """Nonzero base-field elements in canonical index order."""
    return subfield_elements(work)[1:]


def _points_with_action_stats(base: FieldSpec, group: Subgroup):
    gen_perm = cyclic_generator(group)
    if group.degree != 5:
        raise ValueError("degree mismatch")
    c = complexity(group)
    if base.q <= c:
        raise ValueError("field too small, use small_field_realize")
    orbit_list = sorted(orbits(group), key=lambda o: (len(o), min(o)))
    n_rel = lcm(*(len(o) for o in orbit_list))
    work = make_field(base.p, base.base_degree, n_rel)
    betas: dict[int, FFElem] = {}
    placed: set[FFElem] = set()
    scalar_positions = []
    for orbit in orbit_list:
        l = len(orbit)
        start = min(orbit)
        chosen = None
        for seed in elements_of_degree(work, l):
            for position, a in enumerate(_base_scalars(work), start=1):
                candidate = a * seed
                if candidate not in placed:
                    chosen = (candidate, position)
                    break
            if chosen is not None:
                break
        if chosen is None:
            raise AssertionError("internal error: no equivariant seed found")
        value, position = chosen
        assert position <= c + 1, "scalar found beyond the counting bound"
        scalar_positions.append(position)
        i = start
        for _ in range(l):
            if value in placed:
                raise AssertionError("internal error: orbit collision")
            betas[i] = value
            placed.add(value)
            i = gen_perm(i)
            value = frobenius(value)
    result = tuple(betas[i] for i in range(1, 6))
    return result, work, gen_perm, tuple(scalar_positions)


def points_with_action(base: FieldSpec, group: Subgroup) -> tuple[FFElem, ...]:
    """Five distinct field elements with frobenius(b_i) = b_{g(i)}.

    ``group`` must be cyclic with chosen generator g; the elements live in
    F_{q^N}, N the lcm of the orbit lengths.  Orbits are seeded smallest
    first with a canonical element of exact matching degree, scaled by the
    first base scalar avoiding the part already placed; if every scalar of
    one seed collides (possible only when whole orbits are closed under
    base scaling), the next canonical seed is tried.
    """
    return _points_with_action_stats(base, group)[0]


# --- surface models -----------------------------------------------------------

@dataclass(frozen=True)
class SurfaceModel:
    """A realized surface: configuration, Frobenius action, and type."""

    degree: int
    spec: FieldSpec
    config: PointConfig
    frobenius_perm: Perm
    type_label: ClassLabel
    construction: str
    blowdown_vertex: frozenset[int] | None = None

    def __post_init__(self):
        if self.degree not in (5, 6):
            raise ValueError("unsupported degree")
        if self.construction not in CONSTRUCTION_TAGS:
            raise ValueError(f"unknown construction tag {self.construction!r}")
        if (self.blowdown_vertex is not None) != (self.degree == 6):
            raise ValueError("blow-down vertex is for degree-6 models only")

    def galois_image(self) -> Subgroup:
        """The image of Frobenius in S5 (via the ten-class action for 4-point models)."""
        if len(self.config) == 5:
            return generate([self.frobenius_perm], degree=5)
        return generate([_induced_s5(self.config)], degree=5)

    def to_json(self) -> dict:
        data = {
            "degree": self.degree,
            "field": self.spec.literal(),
            "construction": self.construction,
            "points": [p.to_json() for p in self.config.points],
            "on_conic": self.config.on_conic,
            "frobenius": self.frobenius_perm.cycle_string(),
            "type": self.type_label.name,
        }
        if self.blowdown_vertex is not None:
            data["blowdown_vertex"] = sorted(self.blowdown_vertex)
        return data


def _induced_s5(config: PointConfig) -> Perm:
    """The S5 element acting on the ten (-1)-classes of a 4-point blow-up.

    Exceptional classes over the four points carry labels {i,5}; the line
    through points i and j carries label {1,2,3,4} minus {i,j}.  The unique
    permutation of {1..5} inducing the observed action on those ten labels
    is returned.
    """
    tau = frobenius_permutation(config)
    line_label = {}
    for i, j in itertools.combinations(range(1, 5), 2):
        coeffs = _normalized(_cross(config.points[i - 1], config.points[j - 1]))
        line_label[coeffs] = frozenset({1, 2, 3, 4} - {i, j})
    graph = curve_graph(5)
    images: dict[frozenset[int], frozenset[int]] = {}
    for i in range(1, 5):
        images[frozenset({i, 5})] = frozenset({tau(i), 5})
    for coeffs, label in line_label.items():
        moved = _normalized(tuple(frobenius(c) for c in coeffs))
        images[label] = line_label[moved]
    vperm = VertexPerm(
        graph, Perm(tuple(graph.index(images[v]) - 1 for v in graph.vertices))
    )
    for sigma in symmetric_group_elements(5):
        if graph_action(sigma) == vperm:
            return sigma
    raise AssertionError("internal error: ten-class action is not induced by S5")


def dp5_from_four_points(config: PointConfig) -> SurfaceModel:
    """Degree-5 model from four plane points in general position."""
    if len(config) != 4:
        raise ValueError("the four-point construction needs exactly 4 points")
    if not general_position(config.points):
        raise ValueError("points not in general position: no three of them may be collinear")
    tau = frobenius_permutation(config)
    sigma = _induced_s5(config)
    label = class_label(generate([sigma], degree=5), 5)
    return SurfaceModel(
        degree=5,
        spec=config.spec,
        config=config,
        frobenius_perm=tau,
        type_label=label,
        construction="fourpoints",
    )


# --- small-field four-point realizations -------------------------------------

def _base_plane_points(work: FieldSpec):
    """All plane points with base-field coordinates, in canonical order."""
    scalars = subfield_elements(work)
    for triple in itertools.product(scalars, repeat=3):
        if not any(triple):
            continue
        lead = next(c for c in triple if c)
        if lead != one(work):
            continue
        yield PlanePoint(work, triple)


def small_field_realize(base: FieldSpec, label: ClassLabel | str) -> SurfaceModel:
    """Four-point realizations of the types reachable over every field.

    Covers the four cyclic types whose complexity can reach the base field
    size: the trivial type (a frame of rational points), a transposition and
    a double transposition (conjugate quadratic point pairs), and the
    3-cycle type (a cubic conic triple plus one rational point).
    """
    rep = class_representative(label, 5)
    name = class_label(rep, 5).name
    p, e = base.p, base.base_degree
    if name == "[e]":
        work = make_field(p, e, 1)
        pts = [
            plane_point(work, 1, 0, 0),
            plane_point(work, 0, 1, 0),
            plane_point(work, 0, 0, 1),
            plane_point(work, 1, 1, 1),
        ]
        return dp5_from_four_points(PointConfig(work, tuple(pts)))
    if name == "[<(1,2)>]":
        work = make_field(p, e, 2)
        w = next(elements_of_degree(work, 2))
        pts = [
            plane_point(work, 1, 0, 0),
            plane_point(work, 0, 0, 1),
            PlanePoint(work, (one(work), w, one(work))),
            PlanePoint(work, (one(work), frobenius(w), one(work))),
        ]
        return dp5_from_four_points(PointConfig(work, tuple(pts)))
    if name == "[<(1,2)(3,4)>]":
        work = make_field(p, e, 2)
        w = next(elements_of_degree(work, 2))
        o, z = one(work), zero(work)
        pts = [
            PlanePoint(work, (o, w, z)),
            PlanePoint(work, (o, frobenius(w), z)),
            PlanePoint(work, (o, z, w)),
            PlanePoint(work, (o, z, frobenius(w))),
        ]
        return dp5_from_four_points(PointConfig(work, tuple(pts)))
    if name == "[Z/3Z]":
        work = make_field(p, e, 3)
        b = next(elements_of_degree(work, 3))
        triple = [conic_point(work, b), conic_point(work, frobenius(b)),
                  conic_point(work, frobenius(b, 2))]
        for candidate in _base_plane_points(work):
            if candidate in triple:
                continue
            if general_position(triple + [candidate]):
                pts = tuple(triple + [candidate])
                return dp5_from_four_points(PointConfig(work, pts))
        raise AssertionError("internal error: no rational point completes the triple")
    raise ValueError(f"no small-field construction for type {name}")


# --- realization dispatchers ---------------------------------------------------

def realize_dp5(base: FieldSpec, label: ClassLabel | str) -> SurfaceModel:
    """A degree-5 model of the requested type over the given finite field."""
    rep = class_representative(label, 5)
    if not rep.is_cyclic:
        raise ValueError("not realizable: H must be cyclic over a finite field")
    requested = class_label(rep, 5)
    if base.q > complexity(rep):
        betas, work, gen_perm, _ = _points_with_action_stats(base, rep)
        config = conic_config(betas)
        tau = frobenius_permutation(config)
        assert tau == gen_perm, "internal error: conic action differs from generator"
        model = SurfaceModel(
            degree=5,
            spec=work,
            config=config,
            frobenius_perm=tau,
            type_label=class_label(generate([tau], degree=5), 5),
            construction="conic5",
        )
    else:
        model = small_field_realize(base, requested)
    if model.type_label != requested:
        raise AssertionError("internal error: constructed type differs from request")
    return model


def realize_dp6(base: FieldSpec, label6: ClassLabel | str) -> SurfaceModel:
    """A degree-6 model: realize in degree 5, then blow down an invariant vertex.

    The degree-6 label is carried through the standard embedding of the
    hexagon symmetry group into S5 (rotations act on {1,2,3}, the central
    flip is the transposition of {4,5}).
    """
    rep6 = class_representative(label6, 6)
    if not rep6.is_cyclic:
        raise ValueError("not realizable: H must be cyclic over a finite field")
    requested = class_label(rep6, 6)
    from .perms import hex_decompose, hex_embed_s5

    gens5 = [hex_embed_s5(*hex_decompose(h)) for h in rep6.generators]
    label5 = class_label(generate(gens5, degree=5), 5)
    model5 = realize_dp5(base, label5)
    image5 = model5.galois_image()
    for vertex in invariant_vertices(image5):
        _, induced = blowdown_action(image5, vertex)
        if induced == requested:
            return SurfaceModel(
                degree=6,
                spec=model5.spec,
                config=model5.config,
                frobenius_perm=model5.frobenius_perm,
                type_label=requested,
                construction=model5.construction + "_blowdown",
                blowdown_vertex=vertex,
            )
    raise AssertionError("internal error: no invariant vertex realizes the blow-down type")


# --- JSON round trip and verification -----------------------------------------

def model_from_json(data: dict) -> SurfaceModel:
    spec = parse_field_literal(data["field"])
    points = tuple(
        PlanePoint(spec, tuple(FFElem(spec, tuple(c)) for c in coords))
        for coords in data["points"]
    )
    config = PointConfig(spec, points, on_conic=bool(data.get("on_conic")))
    degree = int(data["degree"])
    vertex = data.get("blowdown_vertex")
    return SurfaceModel(
        degree=degree,
        spec=spec,
        config=config,
        frobenius_perm=parse_perm(data["frobenius"], degree=len(points)),
        type_label=ClassLabel(6 if degree == 6 else 5, data["type"]),
        construction=data["construction"],
        blowdown_vertex=frozenset(vertex) if vertex is not None else None,
    )


def verify_json(data: dict) -> list[tuple[str, bool, str]]:
    """Independent re-checks of a serialized model; one (name, ok, detail) per check."""
    checks: list[tuple[str, bool, str]] = []
    try:
        model = model_from_json(data)
        checks.append(("model parses", True, ""))
    except (ValueError, KeyError, TypeError) as err:
        checks.append(("model parses", False, str(err)))
        return checks

    n = len(model.config)
    checks.append((
        "point count", n in (4, 5),
        f"{n} points" if n not in (4, 5) else "",
    ))
    wants_conic = model.construction.startswith("conic5")
    tag_ok = (n == 5 and model.config.on_conic) if wants_conic else (
        n == 4 and not model.config.on_conic
    )
    checks.append((
        "construction tag consistent", tag_ok,
        "" if tag_ok else f"{model.construction!r} with {n} points, on_conic={model.config.on_conic}",
    ))

    try:
        tau = frobenius_permutation(model.config)
        stable = True
        checks.append(("frobenius stability", True, ""))
    except ValueError as err:
        stable = False
        checks.append(("frobenius stability", False, str(err)))
    if stable:
        ok = tau == model.frobenius_perm
        checks.append((
            "frobenius permutation matches", ok,
            "" if ok else f"recomputed {tau.cycle_string()}",
        ))

    try:
        gp = general_position(model.config.points)
    except ValueError as err:
        gp = False
        checks.append(("general position", False, str(err)))
    else:
        checks.append(("general position", gp, "" if gp else "three points collinear"))

    if model.config.on_conic:
        ok = all(p.on_conic() for p in model.config.points)
        checks.append(("conic membership", ok, "" if ok else "point off the conic"))

    if stable and gp and n in (4, 5):
        try:
            image5 = model.galois_image()
            if model.degree == 5:
                recomputed = class_label(image5, 5)
                ok = recomputed == model.type_label
                checks.append((
                    "type matches", ok, "" if ok else f"recomputed {recomputed.name}",
                ))
            else:
                vertex = model.blowdown_vertex
                invariant = vertex in invariant_vertices(image5)
                checks.append((
                    "blow-down vertex invariant", invariant,
                    "" if invariant else "vertex moved by the Galois image",
                ))
                if invariant:
                    _, induced = blowdown_action(image5, vertex)
                    ok = induced == model.type_label
                    checks.append((
                        "type matches", ok, "" if ok else f"recomputed {induced.name}",
                    ))
        except (ValueError, AssertionError) as err:
            checks.append(("type matches", False, str(err)))
    return checks
