"""Combinatorial ideal triangulation T_g of the graph exterior M_g.

The triangulation is obtained from the solid double cone over a regular
(2g+2)-gon by pairing its boundary triangles and coning the vertical edge
``v1 v2``.  Tetrahedron ``i`` has vertex slots ``(v1, v2, p_i, p_{i+1})``;
a gluing of the face opposite slot ``f`` is stored as ``(tet, perm)`` where
``perm[k]`` is the slot of the partner tetrahedron receiving slot ``k``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .errors import ConstructionError, DomainError, InvariantViolation

SCHEMA_VERSION = "gex.triangulation/1"

IDENTITY = (0, 1, 2, 3)
ALL_PERMS = tuple(permutations(range(4)))


# -- permutation arithmetic --------------------------------------------------

def perm_compose(a, b):
    """Return ``a o b`` (apply ``b`` first)."""
    return tuple(a[b[i]] for i in range(len(b)))


def perm_inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def perm_sign(a):
    sign = 1
    seen = [False] * len(a)
    for i in range(len(a)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        while True:
            px = parent[x]
            if px == x:
                return x
            gx = parent[px]
            parent[x] = gx  # path halving
            x = gx

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the smaller representative so class order is deterministic
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(v) for _, v in sorted(out.items())]


# -- the double cone ---------------------------------------------------------

def p(i, n):
    return f"p{i % (2 * n)}"


@dataclass(frozen=True)
class DoubleConeComplex:
    """Solid double cone P_n over a regular 2n-gon with its face pairing.

    ``face_pairing`` holds triples ``(upper, lower, bijection)`` where the
    faces are label triples and ``bijection`` maps each label of ``upper``
    to the label of ``lower`` it is identified with.
    """

    n: int
    apexes: tuple
    equator: tuple
    face_pairing: tuple

    def boundary_faces(self):
        faces = []
        for i in range(2 * self.n):
            faces.append(frozenset(("v1", p(i, self.n), p(i + 1, self.n))))
            faces.append(frozenset(("v2", p(i, self.n), p(i + 1, self.n))))
        return faces

    def validate(self):
        faces = self.boundary_faces()
        if len(faces) != 4 * self.n or len(set(faces)) != 4 * self.n:
            raise ConstructionError("double cone must have 4n distinct boundary triangles")
        if len(self.face_pairing) != 2 * self.n:
            raise ConstructionError(f"expected {2 * self.n} pairings, got {len(self.face_pairing)}")
        used = []
        for upper, lower, bij in self.face_pairing:
            mapping = dict(bij)
            if set(mapping) != set(upper) or set(mapping.values()) != set(lower):
                raise ConstructionError(f"pairing {upper} -> {lower} is not a bijection of vertex sets")
            used.extend((frozenset(upper), frozenset(lower)))
        if sorted(map(sorted, used)) != sorted(map(sorted, faces)):
            raise ConstructionError("every boundary triangle must appear in exactly one pairing")
        return self


def build_double_cone(g: int) -> DoubleConeComplex:
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"the family M_g is defined for integer g >= 2, got {g!r}")
    n = g + 1
    pairing = []
    for i in range(2 * n):
        upper = ("v1", p(i, n), p(i + 1, n))
        if i % 2 == 0:
            lower = (p(i + 1, n), p(i + 2, n), "v2")
            bij = (("v1", p(i + 1, n)), (p(i, n), p(i + 2, n)), (p(i + 1, n), "v2"))
        else:
            lower = (p(i + 2, n), "v2", p(i + 1, n))
            bij = (("v1", p(i + 2, n)), (p(i, n), "v2"), (p(i + 1, n), p(i + 1, n)))
        pairing.append((upper, lower, bij))
    dc = DoubleConeComplex(
        n=n,
        apexes=("v1", "v2"),
        equator=tuple(p(i, n) for i in range(2 * n)),
        face_pairing=tuple(pairing),
    )
    return dc.validate()


# -- the triangulation -------------------------------------------------------

@dataclass(frozen=True)
class EdgeClass:
    id: str
    index: int
    members: tuple  # ((tet, (slot_a, slot_b)), ...)
    incidence: int

    def label_edges(self, tets):
        return sorted({tuple(sorted((tets[t][a], tets[t][b]))) for t, (a, b) in self.members})


@dataclass(frozen=True)
class VertexClass:
    members: tuple  # ((tet, slot), ...)
    kind: str  # "ideal" or "truncated"
    link_euler_characteristic: int


@dataclass(frozen=True)
class Triangulation:
    g: int
    tets: tuple  # per tet: 4 vertex labels
    gluings: tuple  # per tet: 4 entries (partner tet, perm)
    edge_classes: tuple = field(default=(), compare=False)
    vertex_classes: tuple = field(default=(), compare=False)

    @property
    def num_tets(self):
        return len(self.tets)

    def partner(self, tet, face):
        return self.gluings[tet][face]

    def face_gluing_pairs(self):
        """Each glued face pair once, as ``((t, f), (t2, f2))`` with the first smaller."""
        pairs = []
        for t in range(self.num_tets):
            for f in range(4):
                u, perm = self.gluings[t][f]
                if (t, f) < (u, perm[f]):
                    pairs.append(((t, f), (u, perm[f])))
        return pairs

    def ideal_slot(self, tet):
        for vc in self.vertex_classes:
            if vc.kind == "ideal":
                for t, s in vc.members:
                    if t == tet:
                        return s
        raise InvariantViolation(f"tetrahedron {tet} has no ideal vertex")

    def edge_class_of(self, tet, a, b):
        key = (tet, tuple(sorted((a, b))))
        for ec in self.edge_classes:
            if key in ec.members:
                return ec
        raise KeyError(key)

    # -- serialization -----------------------------------------------------

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "g": self.g,
            "tets": [list(t) for t in self.tets],
            "gluings": [[[u, list(perm)] for u, perm in row] for row in self.gluings],
            "edge_classes": [
                {
                    "id": ec.id,
                    "incidence": ec.incidence,
                    "members": [[t, list(e)] for t, e in ec.members],
                }
                for ec in self.edge_classes
            ],
            "vertex_classes": [
                {
                    "kind": vc.kind,
                    "link_euler_characteristic": vc.link_euler_characteristic,
                    "members": [list(m) for m in vc.members],
                }
                for vc in self.vertex_classes
            ],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), sort_keys=True, **kwargs)

    @classmethod
    def from_dict(cls, doc):
        if doc.get("schema") != SCHEMA_VERSION:
            raise ConstructionError(f"unsupported triangulation schema {doc.get('schema')!r}")
        tets = tuple(tuple(t) for t in doc["tets"])
        gluings = tuple(tuple((u, tuple(perm)) for u, perm in row) for row in doc["gluings"])
        tri = _finish(doc["g"], tets, gluings)
        stored = [(ec["id"], ec["incidence"]) for ec in doc["edge_classes"]]
        if stored != [(ec.id, ec.incidence) for ec in tri.edge_classes]:
            raise ConstructionError("stored edge classes disagree with the gluing data")
        return tri

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _check_involution(tets, gluings):
    n = len(tets)
    for t in range(n):
        for f in range(4):
            entry = gluings[t][f]
            if entry is None:
                raise ConstructionError(f"face {f} of tetrahedron {t} is unglued")
            u, perm = entry
            if perm[f] == f and u == t:
                raise ConstructionError(f"face {f} of tetrahedron {t} is glued to itself")
            back = gluings[u][perm[f]]
            if back is None or back[0] != t or back[1] != perm_inverse(perm):
                raise ConstructionError(f"gluing of ({t}, {f}) is not an involution")


def subdivide(dc: DoubleConeComplex) -> Triangulation:
    """Cone the vertical edge ``v1 v2`` to split P_{g+1} into 2g+2 tetrahedra."""
    dc.validate()
    n = dc.n
    tets = tuple(("v1", "v2", p(i, n), p(i + 1, n)) for i in range(2 * n))
    slot_of = [{lab: k for k, lab in enumerate(t)} for t in tets]
    gluings = [[None] * 4 for _ in tets]

    def glue(t, f, u, perm):
        for tt, ff in ((t, f), (u, perm[f])):
            if gluings[tt][ff] is not None:
                raise ConstructionError(f"face {ff} of tetrahedron {tt} glued twice")
        gluings[t][f] = (u, perm)
        gluings[u][perm[f]] = (t, perm_inverse(perm))

    # internal faces v1 v2 p_{i+1}: opposite slot 2 in tet i, slot 3 in tet i+1
    for i in range(2 * n):
        glue(i, 2, (i + 1) % (2 * n), (0, 1, 3, 2))

    # boundary faces never contain both apexes; index each tet's two of them
    face_index = {}
    for t, lab in enumerate(tets):
        for apex in ("v1", "v2"):
            face_index.setdefault(frozenset((apex, lab[2], lab[3])), []).append(t)

    def locate(face):
        hits = [] if {"v1", "v2"} <= set(face) else face_index.get(frozenset(face), [])
        if len(hits) != 1:
            raise ConstructionError(f"boundary face {face} found in {len(hits)} tetrahedra")
        t = hits[0]
        (opp,) = set(range(4)) - {slot_of[t][x] for x in face}
        return t, opp

    for upper, lower, bij in dc.face_pairing:
        t, f = locate(upper)
        u, f2 = locate(lower)
        mapping = dict(bij)
        perm = [None] * 4
        for lab in upper:
            perm[slot_of[t][lab]] = slot_of[u][mapping[lab]]
        perm[f] = f2
        glue(t, f, u, tuple(perm))

    _check_involution(tets, gluings)
    return _finish(n - 1, tets, tuple(tuple(row) for row in gluings))


def _edge_partition(tets, gluings):
    items = [(t, e) for t in range(len(tets)) for e in
             ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))]
    uf = _UnionFind(items)
    for t in range(len(tets)):
        for f in range(4):
            u, perm = gluings[t][f]
            if (u, perm[f]) < (t, f):
                continue  # each glued pair once
            others = [k for k in range(4) if k != f]
            for a_i in range(3):
                for b_i in range(a_i + 1, 3):
                    a, b = others[a_i], others[b_i]
                    uf.union((t, (a, b)), (u, tuple(sorted((perm[a], perm[b])))))
    return uf.classes()


def _vertex_partition(tets, gluings):
    uf = _UnionFind([(t, s) for t in range(len(tets)) for s in range(4)])
    for t in range(len(tets)):
        for f in range(4):
            u, perm = gluings[t][f]
            if (u, perm[f]) < (t, f):
                continue
            for k in range(4):
                if k != f:
                    uf.union((t, k), (u, perm[k]))
    return uf.classes()


@dataclass(frozen=True)
class LinkSurface:
    triangles: int
    edges: int
    vertices: int
    components: int

    @property
    def euler_characteristic(self):
        return self.vertices - self.edges + self.triangles

    @property
    def genus(self):
        # orientable closed surface, per component count 1
        return (2 - self.euler_characteristic) // 2


def link_surface(tets, gluings, corners) -> LinkSurface:
    """Triangulated surface formed by the vertex-link triangles at ``corners``.

    A corner ``(t, v)`` contributes one triangle whose vertices are the
    edge ends ``(t, v, w)`` and whose sides are ``(t, v, u)`` (the side on
    the face opposite ``u``).
    """
    corners = sorted(corners)
    cset = set(corners)
    verts = _UnionFind([(t, v, w) for t, v in corners for w in range(4) if w != v])
    sides = _UnionFind([(t, v, u) for t, v in corners for u in range(4) if u != v])
    tris = _UnionFind(corners)
    for t, v in corners:
        for u in range(4):
            if u == v:
                continue
            t2, perm = gluings[t][u]
            if (t2, perm[v]) not in cset:
                raise InvariantViolation("corner set is not closed under the gluings", (t, v))
            if (t2, perm[u]) < (t, u):
                continue  # the partner corner performs the same unions
            sides.union((t, v, u), (t2, perm[v], perm[u]))
            tris.union((t, v), (t2, perm[v]))
            for w in range(4):
                if w not in (u, v):
                    verts.union((t, v, w), (t2, perm[v], perm[w]))
    side_classes = sides.classes()
    if any(len(c) != 2 for c in side_classes):
        raise InvariantViolation("link is not a closed surface: a side is not shared by two triangles")
    return LinkSurface(
        triangles=len(corners),
        edges=len(side_classes),
        vertices=len(verts.classes()),
        components=len(tris.classes()),
    )


def _finish(g, tets, gluings):
    _check_involution(tets, gluings)
    edge_parts = _edge_partition(tets, gluings)
    vertex_parts = _vertex_partition(tets, gluings)
    vclasses = []
    for members in vertex_parts:
        surf = link_surface(tets, gluings, members)
        kind = "ideal" if surf.euler_characteristic == 0 else "truncated"
        vclasses.append(VertexClass(tuple(members), kind, surf.euler_characteristic))
    eclasses = _name_edge_classes(g, tets, edge_parts)
    return Triangulation(g=g, tets=tets, gluings=gluings,
                         edge_classes=tuple(eclasses), vertex_classes=tuple(vclasses))


def expected_edge_census(g):
    """The explicit edge lists and incidence numbers of e_0 .. e_{g+2}.

    Returns ``{index: (label_edges, incidence)}`` with label edges as sorted
    label pairs.
    """
    n = g + 1
    norm = lambda a, b: tuple(sorted((a, b)))
    census = {}
    for k in range(g + 1):
        edges = {norm("v1", p(2 * k, n)), norm(p(2 * k, n), p(2 * k + 1, n)),
                 norm(p(2 * k + 1, n), p(2 * k + 2, n)), norm(p(2 * k + 2, n), "v2")}
        census[k] = (sorted(edges), 6)
    odd = {norm(v, p(j, n)) for v in ("v1", "v2") for j in range(1, 2 * n, 2)}
    census[g + 1] = (sorted(odd), 4 * g + 4)
    census[g + 2] = ([("v1", "v2")], 2 * g + 2)
    return census


def _name_edge_classes(g, tets, parts):
    census = expected_edge_census(g)
    lookup = {tuple(edges): k for k, (edges, _) in census.items()}
    out = []
    for members in parts:
        labels = tuple(sorted({tuple(sorted((tets[t][a], tets[t][b]))) for t, (a, b) in members}))
        k = lookup.get(labels)
        ec = EdgeClass(id=f"e{k}" if k is not None else "e?", index=-1 if k is None else k,
                       members=tuple(members), incidence=len(members))
        out.append(ec)
    out.sort(key=lambda ec: (ec.index < 0, ec.index, ec.members))
    return out


@lru_cache(maxsize=128)
def build_triangulation(g: int) -> Triangulation:
    """T_g, cached: the result is immutable and reused by most checks."""
    return subdivide(build_double_cone(g))


def edge_classes(T: Triangulation):
    """Return the edge classes, asserting they match the explicit edge census."""
    census = expected_edge_census(T.g)
    if len(T.edge_classes) != len(census):
        raise InvariantViolation(
            f"expected {len(census)} edge classes, found {len(T.edge_classes)}", T.edge_classes)
    for ec in T.edge_classes:
        if ec.index < 0:
            raise InvariantViolation("edge class not in the explicit census", ec)
        edges, incidence = census[ec.index]
        if ec.label_edges(T.tets) != edges or ec.incidence != incidence:
            raise InvariantViolation(f"edge class {ec.id} disagrees with the census", ec)
    total = sum(ec.incidence for ec in T.edge_classes)
    if total != 6 * T.num_tets:
        raise InvariantViolation(f"incidence sum {total} != 6 * {T.num_tets}")
    return list(T.edge_classes)


def classify_vertex_links(T: Triangulation):
    """Return ``(cusp_link_genus, boundary_genus)`` computed from the vertex links."""
    ideal = [vc for vc in T.vertex_classes if vc.kind == "ideal"]
    trunc = [vc for vc in T.vertex_classes if vc.kind == "truncated"]
    if len(ideal) != 1:
        raise InvariantViolation(f"expected one ideal vertex class, found {len(ideal)}")
    cusp = link_surface(T.tets, T.gluings, ideal[0].members)
    if cusp.components != 1 or cusp.euler_characteristic != 0:
        raise InvariantViolation("cusp link is not a connected torus", cusp)
    if cusp.triangles != T.num_tets:
        raise InvariantViolation(f"cusp torus tiled by {cusp.triangles} triangles", cusp)
    corners = [m for vc in trunc for m in vc.members]
    boundary = link_surface(T.tets, T.gluings, corners)
    if boundary.components != 1:
        raise InvariantViolation("truncation surface is disconnected", boundary)
    if not is_orientable(T):
        raise InvariantViolation("triangulation is not orientable")
    return cusp.genus, boundary.genus


def truncation_surface(T: Triangulation) -> LinkSurface:
    corners = [m for vc in T.vertex_classes if vc.kind == "truncated" for m in vc.members]
    return link_surface(T.tets, T.gluings, corners)


def cusp_surface(T: Triangulation) -> LinkSurface:
    corners = [m for vc in T.vertex_classes if vc.kind == "ideal" for m in vc.members]
    return link_surface(T.tets, T.gluings, corners)


def orientation(T: Triangulation):
    """Signs ``o[t]`` with ``o[t] * o[u] * sign(perm) == -1`` across every gluing, or None."""
    signs = [0] * T.num_tets
    signs[0] = 1
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for f in range(4):
            u, perm = T.gluings[t][f]
            want = -signs[t] * perm_sign(perm)
            if signs[u] == 0:
                signs[u] = want
                queue.append(u)
            elif signs[u] != want:
                return None
    return tuple(signs)


def is_orientable(T: Triangulation) -> bool:
    return orientation(T) is not None


# -- automorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    """Per-tetrahedron images ``(image tet, slot permutation)``."""

    images: tuple

    def __call__(self, tet):
        return self.images[tet]

    def compose(self, other):
        """``self o other``."""
        out = []
        for t in range(len(self.images)):
            u, pu = other.images[t]
            w, pw = self.images[u]
            out.append((w, perm_compose(pw, pu)))
        return Automorphism(tuple(out))

    def inverse(self):
        out = [None] * len(self.images)
        for t, (u, perm) in enumerate(self.images):
            out[u] = (t, perm_inverse(perm))
        return Automorphism(tuple(out))

    def power(self, k):
        result = identity_automorphism(len(self.images))
        for _ in range(k):
            result = self.compose(result)
        return result

    @property
    def is_identity(self):
        return all(u == t and perm == IDENTITY for t, (u, perm) in enumerate(self.images))


def identity_automorphism(num_tets):
    return Automorphism(tuple((t, IDENTITY) for t in range(num_tets)))


def extend_seed(T: Triangulation, image_tet: int, perm, base: int = 0):
    """Propagate ``base -> (image_tet, perm)`` across the gluings.

    Returns the resulting Automorphism, or None when the seed does not
    extend to a simplicial automorphism.
    """
    images = [None] * T.num_tets
    images[base] = (image_tet, tuple(perm))
    queue = deque([base])
    while queue:
        t = queue.popleft()
        ti, pt = images[t]
        for f in range(4):
            u, sigma = T.gluings[t][f]
            ui, tau = T.gluings[ti][pt[f]]
            # slot k of u  ->  sigma^-1 -> pt -> tau
            pu = perm_compose(tau, perm_compose(pt, perm_inverse(sigma)))
            if images[u] is None:
                images[u] = (ui, pu)
                queue.append(u)
            elif images[u] != (ui, pu):
                return None
    if len({u for u, _ in images}) != T.num_tets:
        return None
    return Automorphism(tuple(images))


def orientation_character(T: Triangulation, phi: Automorphism, signs=None) -> int:
    signs = signs or orientation(T)
    u, perm = phi.images[0]
    return signs[0] * signs[u] * perm_sign(perm)


def induced_automorphism(T: Triangulation, label_map) -> Automorphism | None:
    """Automorphism of T induced by a vertex map of the double cone, if any."""
    by_labels = {frozenset(labels): t for t, labels in enumerate(T.tets)}
    images = []
    for labels in T.tets:
        target = [label_map[x] for x in labels]
        u = by_labels.get(frozenset(target))
        if u is None:
            return None
        perm = tuple(T.tets[u].index(x) for x in target)
        images.append((u, perm))
    phi = Automorphism(tuple(images))
    return phi if extend_seed(T, *phi.images[0]) == phi else None


def rotation_map(g):
    n = g + 1
    m = {"v1": "v1", "v2": "v2"}
    m.update({p(i, n): p(i + 2, n) for i in range(2 * n)})
    return m


def flip_map(g):
    n = g + 1
    m = {"v1": "v2", "v2": "v1"}
    m.update({p(i, n): p(-i, n) for i in range(2 * n)})
    return m


@dataclass(frozen=True)
class AutGroup:
    elements: tuple
    r: Automorphism
    s: Automorphism
    orientation_character: tuple  # True where orientation-preserving
    seeds_tried: int
    reversing_seeds_extending: int

    @property
    def order(self):
        return len(self.elements)

    def index(self, phi):
        return self.elements.index(phi)

    def multiplication_table(self):
        return [[self.index(a.compose(b)) for b in self.elements] for a in self.elements]


def automorphism_group(T: Triangulation) -> AutGroup:
    """All simplicial automorphisms, by exhaustive seeding of tetrahedron 0."""
    signs = orientation(T)
    if signs is None:
        raise InvariantViolation("triangulation is not orientable")
    found = []
    reversing_ok = 0
    tried = 0
    for u in range(T.num_tets):
        for perm in ALL_PERMS:
            tried += 1
            phi = extend_seed(T, u, perm)
            if phi is None:
                continue
            if orientation_character(T, phi, signs) < 0:
                reversing_ok += 1
            found.append(phi)
    found.sort(key=lambda a: a.images)
    r = induced_automorphism(T, rotation_map(T.g))
    s = induced_automorphism(T, flip_map(T.g))
    if r is None or s is None or r not in found or s not in found:
        raise InvariantViolation("rotation or flip of the double cone does not induce an automorphism")
    chars = tuple(orientation_character(T, a, signs) > 0 for a in found)
    return AutGroup(tuple(found), r, s, chars, tried, reversing_ok)


def check_dihedral(G: AutGroup, g: int) -> dict:
    """Verify the dihedral presentation and group axioms; return a witness dict."""
    n = g + 1
    elems = set(G.elements)
    ident = identity_automorphism(len(G.elements[0].images))
    r, s = G.r, G.s
    closed = all(a.compose(b) in elems for a in G.elements for b in G.elements)
    inverses = all(a.inverse() in elems for a in G.elements)
    r_order = next(k for k in range(1, 2 * n + 2) if r.power(k).is_identity)
    generated = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for gen in (r, s):
                b = gen.compose(a)
                if b not in generated:
                    generated.add(b)
                    nxt.append(b)
        frontier = nxt
    transitive = {a.images[0][0] for a in G.elements} == set(range(len(ident.images)))
    stabilizer = [a for a in G.elements if a.images[0][0] == 0]
    return {
        "order": G.order,
        "expected_order": 2 * n,
        "contains_identity": ident in elems,
        "closed": closed,
        "inverses": inverses,
        "r_order": r_order,
        "r_power_identity": r.power(n).is_identity,
        "s_squared_identity": s.compose(s).is_identity,
        "s_nontrivial": not s.is_identity,
        "relation_rs": r.compose(s) == s.compose(r.inverse()),
        "generated_by_r_s": generated == elems,
        "transitive_on_tets": transitive,
        "stabilizer_order": len(stabilizer),
        "all_orientation_preserving": all(G.orientation_character),
        "reversing_seeds_extending": G.reversing_seeds_extending,
        "seeds_tried": G.seeds_tried,
    }


def dihedral_ok(w: dict) -> bool:
    return (w["order"] == w["expected_order"] and w["contains_identity"] and w["closed"]
            and w["inverses"] and w["r_order"] == w["expected_order"] // 2
            and w["s_squared_identity"] and w["s_nontrivial"] and w["relation_rs"]
            and w["generated_by_r_s"] and w["transitive_on_tets"] and w["stabilizer_order"] == 1
            and w["all_orientation_preserving"] and w["reversing_seeds_extending"] == 0)
