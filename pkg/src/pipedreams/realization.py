"""Geometric realization of the pipe dream complex of 1 n n-1 ... 2 as the
canonical triangulation of the root polytope vertex figure.

The elbow box (r, c) corresponds to the edge (c, n-r+1) and to the point
(e_c - e_{n-r+1}) / ((n-r+1) - c) on the level-1 hyperplane.  Under this
correspondence reduced pipe dreams become noncrossing alternating spanning
trees, interior faces become common edge sets of trees, and the whole face
poset of the complex transfers onto the triangulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .complexes import (
    SimplicialComplex,
    build_pdc,
    h_polynomial,
    interior_faces,
    is_face_of_pdc,
)
from .dreams import DEFAULT_LIMIT_N, Box, PipeDream, reduced_pipe_dreams, staircase_boxes
from .perms import catalan_permutation
from .polytopes import (
    AcyclicGraph,
    Point,
    Simplex,
    noncrossing_alternating_trees,
    vertex_figure_point,
    vertex_figure_simplices,
)
from .report import VerifyResult
from .subdivision import Edge


class RealizationError(AssertionError):
    """A face of the pipe dream complex fails to match the triangulation."""


def catalan_number(m: int) -> int:
    """Catalan numbers by the convolution recurrence (independent of any
    closed form used elsewhere).

    >>> [catalan_number(m) for m in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    values = [1]
    for k in range(1, m + 1):
        values.append(sum(values[i] * values[k - 1 - i] for i in range(k)))
    return values[m]


def narayana_number(m: int, k: int) -> int:
    """N(m, k) = C(m, k) C(m, k-1) / m."""
    return comb(m, k) * comb(m, k - 1) // m


def box_edge(box: Box, n: int) -> Edge:
    """The edge (c, n-r+1) attached to the staircase box (r, c)."""
    r, c = box
    return (c, n - r + 1)


def edge_box(edge: Edge, n: int) -> Box:
    i, j = edge
    return (n - j + 1, i)


def tree_of_pipedream(P: PipeDream) -> AcyclicGraph:
    """Edges of the elbow boxes of a reduced pipe dream of 1 n n-1 ... 2;
    always a spanning tree.

    >>> tree_of_pipedream(PipeDream(4, ((1, 2), (1, 3), (2, 2)))).edges
    ((1, 2), (1, 3), (1, 4))
    """
    n = P.n
    pi = catalan_permutation(n)
    if P.permutation() != pi or P.size != pi.length():
        raise ValueError(f"{P} is not a reduced pipe dream for {pi}")
    return AcyclicGraph(n, tuple(box_edge(b, n) for b in P.elbows()))


def verify_bijection(n: int, limit_n: int = DEFAULT_LIMIT_N) -> VerifyResult:
    """tree_of_pipedream is injective on reduced pipe dreams of
    1 n n-1 ... 2 and its image is exactly the noncrossing alternating
    spanning trees; both sets have Catalan(n-1) elements."""
    name = f"bijection:{n}"
    dreams = reduced_pipe_dreams(catalan_permutation(n), limit_n)
    images = [tree_of_pipedream(P) for P in dreams]
    image_set = {T.edges for T in images}
    trees = {T.edges for T in noncrossing_alternating_trees(n)}
    cat = catalan_number(n - 1)
    details = {
        "dreams": len(dreams),
        "distinct_images": len(image_set),
        "trees": len(trees),
        "catalan": cat,
    }
    if len(image_set) != len(images):
        return VerifyResult(name, False, {**details, "reason": "not injective"})
    if image_set != trees:
        missing = sorted(trees - image_set)
        extra = sorted(image_set - trees)
        return VerifyResult(name, False, {**details, "missing": missing, "extra": extra})
    if not (len(dreams) == len(trees) == cat):
        return VerifyResult(name, False, {**details, "reason": "count mismatch"})
    return VerifyResult(name, True, details)


def verify_face_map(n: int, limit_n: int = DEFAULT_LIMIT_N) -> VerifyResult:
    """Interior faces of the complex map onto the nonempty common edge
    sets of the trees: every interior face's cross set is the union of the
    facet cross sets above it, its elbow image is the matching trees'
    common edge set, and the correspondence is a poset isomorphism."""
    name = f"face-map:{n}"
    pi = catalan_permutation(n)
    C = build_pdc(pi, limit_n)
    boxes = staircase_boxes(n)
    facet_tree: dict[frozenset, frozenset] = {}
    for facet in C.facets:
        P = PipeDream(n, tuple(b for b in boxes if b not in facet))
        facet_tree[facet] = frozenset(tree_of_pipedream(P).edges)

    images = {}
    for face, _codim in interior_faces(C, pi):
        above = [f for f in C.facets if face <= f]
        union_crosses = set(boxes) - frozenset.intersection(*above)
        face_crosses = set(boxes) - face
        if face_crosses != union_crosses:
            return VerifyResult(
                name, False,
                {"reason": "face is not the union of its facets' crosses",
                 "face": sorted(face)},
            )
        image = frozenset(box_edge(b, n) for b in face)
        expected = frozenset.intersection(*(facet_tree[f] for f in above))
        if image != expected:
            return VerifyResult(
                name, False,
                {"reason": "elbow image differs from common tree edges",
                 "face": sorted(face)},
            )
        images[face] = image

    if len(set(images.values())) != len(images):
        return VerifyResult(name, False, {"reason": "face images collide"})

    intersections = set(facet_tree.values())
    frontier = set(intersections)
    while frontier:
        new = set()
        for a in frontier:
            for b in facet_tree.values():
                c = a & b
                if c and c not in intersections:
                    new.add(c)
        intersections |= new
        frontier = new
    if set(images.values()) != intersections:
        return VerifyResult(
            name, False,
            {"reason": "images differ from nonempty tree intersections",
             "images": len(set(images.values())), "intersections": len(intersections)},
        )

    # order isomorphism: inclusion transfers both ways under the box map
    faces = list(images)
    for a, b in combinations(faces, 2):
        if (a <= b) != (images[a] <= images[b]) or (b <= a) != (images[b] <= images[a]):
            return VerifyResult(
                name, False,
                {"reason": "inclusion not preserved", "faces": [sorted(a), sorted(b)]},
            )
    return VerifyResult(name, True, {"interior_faces": len(images)})


def triangulation_complex(n: int) -> SimplicialComplex:
    """The canonical vertex-figure triangulation as an abstract complex
    whose vertex labels are the simplex corner points."""
    return SimplicialComplex([S.vertex_points() for S in vertex_figure_simplices(n)])


@dataclass(frozen=True, slots=True)
class RealizationMap:
    """The box-to-point and facet-to-simplex data of the realization."""

    n: int
    vertex_map: dict[Box, Point]
    facet_map: dict[PipeDream, Simplex]

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "vertex_map": [
                {"box": list(b), "point": [str(c) for c in p]}
                for b, p in sorted(self.vertex_map.items())
            ],
            "facets": [
                {"crosses": [list(b) for b in P.crosses], "simplex": S.to_jsonable()}
                for P, S in sorted(self.facet_map.items(), key=lambda kv: kv[0].crosses)
            ],
        }


def realize(n: int, limit_n: int = DEFAULT_LIMIT_N) -> RealizationMap:
    """Build the realization and check it: facet images coincide with the
    vertex-figure simplices, a box set is a face of the complex exactly
    when its image spans a face of the triangulation, and boundary matches
    boundary.  Raises RealizationError at the first failure.

    For n = 2 the complex is the degenerate case and is not realized.
    """
    if n < 3:
        raise ValueError("realization needs n >= 3")
    pi = catalan_permutation(n)
    boxes = staircase_boxes(n)
    vmap = {b: vertex_figure_point(n, *box_edge(b, n)) for b in boxes}
    if len(set(vmap.values())) != len(boxes):
        raise RealizationError("vertex map is not injective")

    dreams = reduced_pipe_dreams(pi, limit_n)
    fmap = {
        P: Simplex(n, tuple(vmap[b] for b in P.elbows()), with_origin=False)
        for P in dreams
    }

    target = {frozenset(S.vertex_points()) for S in vertex_figure_simplices(n)}
    got = {frozenset(S.vertex_points()) for S in fmap.values()}
    if got != target:
        raise RealizationError("facet images differ from the vertex-figure simplices")

    # bitmask per box of the simplices whose vertex set contains its point;
    # a box set spans a face of the triangulation iff the masks intersect
    tree_point_sets = list(got)
    box_mask = {}
    for b in boxes:
        mask = 0
        for t, pts in enumerate(tree_point_sets):
            if vmap[b] in pts:
                mask |= 1 << t
        box_mask[b] = mask
    full = (1 << len(tree_point_sets)) - 1
    for size in range(len(boxes) + 1):
        for subset in combinations(boxes, size):
            mask = full
            for b in subset:
                mask &= box_mask[b]
            spans = mask != 0
            if is_face_of_pdc(subset, pi) != spans:
                raise RealizationError(f"face mismatch at boxes {sorted(subset)}")

    C = build_pdc(pi, limit_n)
    pd_boundary = {
        frozenset(vmap[b] for b in face) for face in C.boundary_faces()
    }
    tri_boundary = set(triangulation_complex(n).boundary_faces())
    if pd_boundary != tri_boundary:
        raise RealizationError("boundary faces do not correspond")

    return RealizationMap(n, vmap, fmap)


def verify_realization(n: int, limit_n: int = DEFAULT_LIMIT_N) -> VerifyResult:
    name = f"realize:{n}"
    try:
        rm = realize(n, limit_n)
    except RealizationError as exc:
        return VerifyResult(name, False, {"reason": str(exc)})
    return VerifyResult(name, True, {"boxes": len(rm.vertex_map), "facets": len(rm.facet_map)})


def narayana_check(n: int, limit_n: int = DEFAULT_LIMIT_N) -> VerifyResult:
    """The h-vector of the complex of 1 n n-1 ... 2 is the Narayana row
    N(n-1, 1), ..., N(n-1, n-1), by the independent binomial formula."""
    name = f"narayana:{n}"
    h = h_polynomial(build_pdc(catalan_permutation(n), limit_n)).coefficient_vector()
    expected = tuple(narayana_number(n - 1, k) for k in range(1, n))
    if h != expected:
        return VerifyResult(name, False, {"h": list(h), "narayana": list(expected)})
    return VerifyResult(name, True, {"h": list(h)})
