"""Permutation arithmetic and subgroup classification.

Two ambient symmetry groups drive everything in this library:

* degree 5: the symmetric group S5, permuting the indices 1..5 that label
  the defining data of a degree-5 surface (four blown-up points plus the
  contracted conic, or equivalently the Kneser labels of the ten
  (-1)-curves);
* degree 6: the symmetry group of the hexagon of (-1)-curves on a degree-6
  surface, abstractly S3 x Z/2Z of order 12, realized here as permutations
  of the six hexagon vertices.

A *type* is a conjugacy class of subgroups of the ambient group; each class
carries a fixed ASCII label such as "[<(1,2)>]" or "[Z/6]".  Degree 5 has
19 classes, degree 6 has 10.

Conventions:

* points are 1-indexed in all input/output and cycle notation; internal
  storage is a 0-indexed image tuple;
* ``a * b`` means "apply ``b`` first, then ``a``" (function composition);
* cycle notation looks like ``"(1 2)(3 4)"``; the identity prints as
  ``"()"``; ``"(1,2)"`` with commas is accepted on input;
* canonical order on permutations of equal degree is lexicographic on the
  image tuple, and every enumeration in this module follows it.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Perm:
    """A permutation of {1, .., degree}, stored as a 0-indexed image tuple."""

    __slots__ = ("degree", "images")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images is not a bijection")
        object.__setattr__(self, "degree", len(images))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Perm":
        return parse_perm(text, degree)

    def __call__(self, point: int) -> int:
        """Image of a 1-indexed point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1] + 1

    def apply_set(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self(p) for p in points)

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Perm(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def order(self) -> int:
        n = 1
        g = self
        ident = self.images == tuple(range(self.degree))
        while not ident:
            g = g * self
            n += 1
            ident = g.images == tuple(range(self.degree))
        return n

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, 1-indexed, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self(p)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cyc) + ")" for cyc in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __repr__(self) -> str:
        return f"Perm[{self.cycle_string()}]"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse cycle notation like "(1 2)(3 4)" or "(1,2)"; "()" is the identity."""
    stripped = _CYCLE_RE.sub("", text)
    if stripped.strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    images = list(range(degree))
    for body in reversed(_CYCLE_RE.findall(text)):
        pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if not pts:
            continue
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle {body!r}")
        if any(not 1 <= p <= degree for p in pts):
            raise ValueError(f"point out of range 1..{degree} in {text!r}")
        post = list(images)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            post[a - 1] = images[b - 1]
        images = post
    return Perm(images)


def parse_generators(text: str, degree: int) -> tuple[Perm, ...]:
    """Parse a ';'-separated list of permutations in cycle notation."""
    parts = [part.strip() for part in text.split(";") if part.strip()]
    return tuple(parse_perm(part, degree) for part in parts)


@dataclass(frozen=True)
class ClassLabel:
    """Canonical name of a conjugacy class of subgroups, e.g. "[<(1,2)>]"."""

    degree_context: int
    name: str

    def __str__(self) -> str:
        return self.name


class Subgroup:
    """An explicit subgroup: generators plus the full, canonically sorted closure."""

    __slots__ = ("degree", "generators", "elements")

    def __init__(self, degree: int, generators: Sequence[Perm], elements: Sequence[Perm]):
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "elements", tuple(sorted(elements)))

    def __setattr__(self, name, value):
        raise AttributeError("Subgroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in set(self.elements)

    def __le__(self, other: "Subgroup") -> bool:
        return set(self.elements) <= set(other.elements)

    @property
    def is_cyclic(self) -> bool:
        return any(g.order() == self.order for g in self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"Subgroup<{gens}> of order {self.order}"


def generate(gens: Iterable[Perm], degree: int | None = None) -> Subgroup:
    """Closure of a set of permutations under composition."""
    gens = tuple(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree is required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("degree mismatch")
    ident = Perm.identity(degree)
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in elems:
                    elems.add(c)
                    new.append(c)
        frontier = new
    return Subgroup(degree, gens, tuple(elems))


def orbits(group: Subgroup) -> tuple[tuple[int, ...], ...]:
    """Orbits on {1, .., degree}, each sorted, ordered by smallest member."""
    remaining = set(range(1, group.degree + 1))
    out = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            p = frontier.pop()
            for g in group.generators:
                q = g(p)
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)
        remaining -= orbit
        out.append(tuple(sorted(orbit)))
    return tuple(out)


def complexity(group: Subgroup) -> int:
    """Largest number of orbits sharing one length (5 iff trivial in degree 5)."""
    lengths = [len(o) for o in orbits(group)]
    return max(lengths.count(n) for n in set(lengths))


def contains_order5(group: Subgroup) -> bool:
    return any(g.order() == 5 for g in group.elements)


def cyclic_generator(group: Subgroup) -> Perm:
    """First element (canonical order) generating the whole subgroup."""
    for g in group.elements:
        if g.order() == group.order:
            return g
    raise ValueError("subgroup is not cyclic")


@lru_cache(maxsize=None)
def symmetric_group_elements(degree: int) -> tuple[Perm, ...]:
    return tuple(Perm(images) for images in itertools.permutations(range(degree)))


def centralizer(group: Subgroup) -> Subgroup:
    """Centralizer in S5 (the automorphism group of a surface of that type)."""
    if group.degree != 5:
        raise ValueError("centralizer is taken inside S5; expected degree 5")
    elems = [
        s
        for s in symmetric_group_elements(5)
        if all(s * g == g * s for g in group.generators)
    ]
    return Subgroup(5, _reduced_generators(elems, 5), elems)


def _reduced_generators(elements: Sequence[Perm], degree: int) -> tuple[Perm, ...]:
    """Small deterministic generating set drawn from a full element list."""
    gens: list[Perm] = []
    have = {Perm.identity(degree)}
    for g in sorted(elements):
        if g not in have:
            gens.append(g)
            have = set(generate(gens, degree).elements)
            if len(have) == len(elements):
                break
    return tuple(gens)


# --- the hexagon symmetry group (degree-6 ambient) -------------------------
#
# Hexagon vertices carry the labels {i,4}, {i,5} (i = 1,2,3) inherited from
# the degree-5 Kneser labeling, listed in cycle order.  The S3 factor of the
# symmetry group permutes {1,2,3}; the Z/2Z factor swaps 4 <-> 5, which acts
# on the hexagon as the central (antipodal) symmetry.

HEX_VERTEX_LABELS: tuple[frozenset[int], ...] = (
    frozenset({1, 4}),
    frozenset({2, 5}),
    frozenset({3, 4}),
    frozenset({1, 5}),
    frozenset({2, 4}),
    frozenset({3, 5}),
)

_HEX_INDEX = {label: i + 1 for i, label in enumerate(HEX_VERTEX_LABELS)}


def hex_element(s: Perm, eps: int) -> Perm:
    """The hexagon vertex permutation of the pair (s, eps), s in S3, eps in {0,1}."""
    if s.degree != 3:
        raise ValueError("the S3 factor must be a permutation of degree 3")
    if eps not in (0, 1):
        raise ValueError("eps must be 0 or 1")
    images = []
    for label in HEX_VERTEX_LABELS:
        i = min(label)
        x = max(label)
        if eps:
            x = 9 - x  # swap 4 <-> 5
        images.append(_HEX_INDEX[frozenset({s(i), x})] - 1)
    return Perm(images)


def hex_decompose(g: Perm) -> tuple[Perm, int]:
    """Inverse of hex_element; raises for non-symmetries of the hexagon."""
    if g.degree != 6:
        raise ValueError("expected a vertex permutation of degree 6")
    s_images = []
    for i in (1, 2, 3):
        target = HEX_VERTEX_LABELS[g(_HEX_INDEX[frozenset({i, 4})]) - 1]
        s_images.append(min(target) - 1)
    s = Perm(s_images)
    for eps in (0, 1):
        if hex_element(s, eps) == g:
            return s, eps
    raise ValueError("not a symmetry of the hexagon")


def hex_embed_s5(s: Perm, eps: int) -> Perm:
    """The pair (s, eps) as an element of S5: s on {1,2,3} times (4 5)^eps."""
    if s.degree != 3:
        raise ValueError("the S3 factor must be a permutation of degree 3")
    images = list(s.images) + ([4, 3] if eps else [3, 4])
    return Perm(images)


@lru_cache(maxsize=None)
def hexagon_group_elements() -> tuple[Perm, ...]:
    """All 12 symmetries of the hexagon, canonically sorted."""
    elems = {
        hex_element(s, eps)
        for s in symmetric_group_elements(3)
        for eps in (0, 1)
    }
    return tuple(sorted(elems))


# --- pinned class representatives ------------------------------------------

_REP_GENS_5: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("[e]", ()),
    ("[<(1,2)>]", ("(1 2)",)),
    ("[<(1,2)(3,4)>]", ("(1 2)(3 4)",)),
    ("[<(1,2),(3,4)>]", ("(1 2)", "(3 4)")),
    ("[<(1,2)(3,4),(1,3)(2,4)>]", ("(1 2)(3 4)", "(1 3)(2 4)")),
    ("[Z/3Z]", ("(1 2 3)",)),
    ("[Z/4Z]", ("(1 2 3 4)",)),
    ("[Z/5Z]", ("(1 2 3 4 5)",)),
    ("[Z/6Z]", ("(1 2 3)(4 5)",)),
    ("[D4]", ("(1 2 3 4)", "(1 3)")),
    ("[D5]", ("(1 2 3 4 5)", "(2 5)(3 4)")),
    ("[<(1,2,3),(1,2)>]", ("(1 2 3)", "(1 2)")),
    ("[<(1,2,3),(1,2)(4,5)>]", ("(1 2 3)", "(1 2)(4 5)")),
    ("[S3xZ/2Z]", ("(1 2 3)", "(1 2)", "(4 5)")),
    ("[A4]", ("(1 2 3)", "(1 2)(3 4)")),
    ("[A5]", ("(1 2 3)", "(3 4 5)")),
    ("[S4]", ("(1 2 3 4)", "(1 2)")),
    ("[S5]", ("(1 2 3 4 5)", "(1 2)")),
    ("[GA(1,5)]", ("(1 2 3 4 5)", "(2 3 5 4)")),
)

_REP_GENS_6: tuple[tuple[str, tuple[tuple[str, int], ...]], ...] = (
    ("[e]", ()),
    ("[<((1,2),0)>]", (("(1 2)", 0),)),
    ("[<((1,2),1)>]", (("(1 2)", 1),)),
    ("[<(id,1)>]", (("()", 1),)),
    ("[Z/2xZ/2]", (("(1 2)", 0), ("()", 1))),
    ("[Z/3]", (("(1 2 3)", 0),)),
    ("[Z/6]", (("(1 2 3)", 0), ("()", 1))),
    ("[<((1,2,3),0),((1,2),0)>]", (("(1 2 3)", 0), ("(1 2)", 0))),
    ("[<((1,2,3),0),((1,2),1)>]", (("(1 2 3)", 0), ("(1 2)", 1))),
    ("[S3xZ/2]", (("(1 2 3)", 0), ("(1 2)", 0), ("()", 1))),
)


def _pinned_reps(degree_context: int) -> tuple[tuple[str, tuple[Perm, ...]], ...]:
    if degree_context == 5:
        return tuple(
            (name, tuple(parse_perm(t, 5) for t in gens))
            for name, gens in _REP_GENS_5
        )
    if degree_context == 6:
        return tuple(
            (name, tuple(hex_element(parse_perm(t, 3), eps) for t, eps in gens))
            for name, gens in _REP_GENS_6
        )
    raise ValueError("unsupported degree")


def class_names(degree_context: int) -> tuple[str, ...]:
    return tuple(name for name, _ in _pinned_reps(degree_context))


# --- subgroup lattice of the ambient group ----------------------------------
#
# All subgroups are enumerated once per ambient group by closing a pool of
# cyclic subgroups under pairwise joins, deduplicating by element set; the
# result is cached, so classification is a dictionary lookup afterwards.
# Elements are handled as indices into the sorted ambient element list and
# subgroups as bitmasks over those indices.

class _Lattice:
    def __init__(self, degree_context: int):
        if degree_context == 5:
            elems = symmetric_group_elements(5)
        elif degree_context == 6:
            elems = hexagon_group_elements()
        else:
            raise ValueError("unsupported degree")
        self.degree_context = degree_context
        self.elems = elems
        self.index = {g: i for i, g in enumerate(elems)}
        n = len(elems)
        self.mul = [[self.index[a * b] for b in elems] for a in elems]
        self.inv = [self.index[a.inverse()] for a in elems]
        self.masks = self._all_subgroup_masks()
        self.class_of, self.class_members = self._conjugacy_classes()
        self.label_of_class, self.rep_subgroup = self._pin_labels()

    def _closure_mask(self, gen_idxs: Sequence[int]) -> int:
        mul = self.mul
        mask = 1
        frontier = [0]
        seen = {0}
        while frontier:
            new = []
            for a in frontier:
                row = mul[a]
                for g in gen_idxs:
                    c = row[g]
                    if c not in seen:
                        seen.add(c)
                        mask |= 1 << c
                        new.append(c)
            frontier = new
        return mask

    def _all_subgroup_masks(self) -> tuple[int, ...]:
        n = len(self.elems)
        cyclic: dict[int, int] = {}
        for i in range(n):
            cyclic.setdefault(self._closure_mask((i,)), i)
        gensets: dict[int, tuple[int, ...]] = {m: (g,) for m, g in cyclic.items()}
        frontier = list(gensets)
        while frontier:
            new = []
            for a in frontier:
                a_gens = gensets[a]
                for c, cg in cyclic.items():
                    if c & a == c:
                        continue
                    j = self._closure_mask(a_gens + (cg,))
                    if j not in gensets:
                        gensets[j] = a_gens + (cg,)
                        new.append(j)
            frontier = new
        return tuple(
            sorted(gensets, key=lambda m: (m.bit_count(), self._mask_indices(m)))
        )

    @staticmethod
    def _mask_indices(mask: int) -> tuple[int, ...]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return tuple(out)

    def _conjugate_mask(self, mask: int, g: int) -> int:
        mul, inv_g = self.mul, self.inv[g]
        out = 0
        for a in self._mask_indices(mask):
            out |= 1 << mul[mul[g][a]][inv_g]
        return out

    def _conjugacy_classes(self) -> tuple[dict[int, int], list[list[int]]]:
        class_of: dict[int, int] = {}
        members: list[list[int]] = []
        for mask in self.masks:
            if mask in class_of:
                continue
            cid = len(members)
            orbit = sorted({self._conjugate_mask(mask, g) for g in range(len(self.elems))})
            for m in orbit:
                class_of[m] = cid
            members.append(orbit)
        return class_of, members

    def _pin_labels(self) -> tuple[dict[int, str], dict[str, Subgroup]]:
        label_of_class: dict[int, str] = {}
        reps: dict[str, Subgroup] = {}
        for name, gens in _pinned_reps(self.degree_context):
            mask = self._closure_mask(tuple(self.index[g] for g in gens))
            cid = self.class_of[mask]
            if cid in label_of_class:
                raise RuntimeError("two pinned representatives are conjugate")
            label_of_class[cid] = name
            reps[name] = self.subgroup_from_mask(mask, generators=gens)
        if len(label_of_class) != len(self.class_members):
            raise RuntimeError("pinned representatives do not cover every class")
        return label_of_class, reps

    def subgroup_from_mask(self, mask: int, generators: Sequence[Perm] | None = None) -> Subgroup:
        elems = [self.elems[i] for i in self._mask_indices(mask)]
        degree = elems[0].degree
        if generators is None:
            generators = _reduced_generators(elems, degree)
        return Subgroup(degree, generators, elems)

    def mask_of(self, group: Subgroup) -> int:
        mask = 0
        for g in group.elements:
            i = self.index.get(g)
            if i is None:
                raise ValueError("not a subgroup of the ambient group")
            mask |= 1 << i
        return mask


@lru_cache(maxsize=None)
def _lattice(degree_context: int) -> _Lattice:
    return _Lattice(degree_context)


def subgroup_classes(degree_context: int) -> tuple[tuple[ClassLabel, Subgroup], ...]:
    """All conjugacy classes of subgroups with their canonical representatives.

    Degree 5 yields the 19 classes of subgroups of S5; degree 6 the 10
    classes of subgroups of the hexagon symmetry group, both in their
    canonical listing order.
    """
    lat = _lattice(degree_context)
    return tuple(
        (ClassLabel(degree_context, name), lat.rep_subgroup[name])
        for name in class_names(degree_context)
    )


def class_label(group: Subgroup, degree_context: int) -> ClassLabel:
    """The canonical label of the conjugacy class of a subgroup."""
    lat = _lattice(degree_context)
    cid = lat.class_of[lat.mask_of(group)]
    return ClassLabel(degree_context, lat.label_of_class[cid])


def all_subgroups(degree_context: int) -> tuple[Subgroup, ...]:
    """Every subgroup of the ambient group (156 for degree 5, 16 for degree 6)."""
    lat = _lattice(degree_context)
    return tuple(lat.subgroup_from_mask(m) for m in lat.masks)


def class_representative(label: ClassLabel | str, degree_context: int | None = None) -> Subgroup:
    """Representative subgroup of a class given by label (or label name)."""
    if isinstance(label, ClassLabel):
        degree_context = label.degree_context
        name = label.name
    else:
        name = label
        if degree_context is None:
            raise ValueError("degree_context is required with a string label")
    lat = _lattice(degree_context)
    rep = lat.rep_subgroup.get(name)
    if rep is None:
        raise ValueError(f"unknown class label {name!r} for degree {degree_context}")
    return rep
