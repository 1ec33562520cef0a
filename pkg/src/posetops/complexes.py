"""Simplicial complexes, order complexes, edge subdivision, and the
univariate polynomial transforms that go with them.

Faces are stored explicitly (every face, not just facets), so subdivision
and links stay auditable at desk scale.  A global face cap keeps runaway
constructions from exhausting memory.
"""

from fractions import Fraction

from .errors import (
    FaceNotInComplex,
    NotAnEdgePermutation,
    PosetOpsError,
    TooLarge,
    UnknownVertex,
)
from .posets import GradedPoset, Poset

FACE_CAP = 1 << 16


# -- univariate polynomials ------------------------------------------------------


class UnivariatePoly:
    """Exact rational coefficients indexed by degree, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        vals = [Fraction(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.coeffs = tuple(vals)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)]
        )

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(
            [self.coefficient(i) - other.coefficient(i) for i in range(size)]
        )

    def __mul__(self, other):
        if isinstance(other, UnivariatePoly):
            if not self.coeffs or not other.coeffs:
                return UnivariatePoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, ci in enumerate(self.coeffs):
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
            return UnivariatePoly(out)
        return UnivariatePoly([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __call__(self, x):
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UnivariatePoly(0)"
        parts = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UnivariatePoly(" + " + ".join(parts) + ")"


X = UnivariatePoly([0, 1])
ONE = UnivariatePoly([1])


def compose(p: UnivariatePoly, q: UnivariatePoly) -> UnivariatePoly:
    out = UnivariatePoly()
    for c in reversed(p.coeffs):
        out = out * q + UnivariatePoly([c])
    return out


_CHEB_T = [ONE, X]
_CHEB_U = [ONE, 2 * X]


def chebyshev_T(n: int) -> UnivariatePoly:
    while len(_CHEB_T) <= n:
        _CHEB_T.append(2 * X * _CHEB_T[-1] - _CHEB_T[-2])
    return _CHEB_T[n]


def chebyshev_U(n: int) -> UnivariatePoly:
    while len(_CHEB_U) <= n:
        _CHEB_U.append(2 * X * _CHEB_U[-1] - _CHEB_U[-2])
    return _CHEB_U[n]


def cheb_transform_T(p: UnivariatePoly) -> UnivariatePoly:
    out = UnivariatePoly()
    for n, c in enumerate(p.coeffs):
        out = out + c * chebyshev_T(n)
    return out


def cheb_transform_U(p: UnivariatePoly) -> UnivariatePoly:
    out = UnivariatePoly()
    for n, c in enumerate(p.coeffs):
        out = out + c * chebyshev_U(n)
    return out


def vertex_link_transform(p: UnivariatePoly) -> UnivariatePoly:
    """Image of the face polynomial under x^n ↦ 2·U_{n-1}(x), n ≥ 1.

    This is what the summed face polynomial of the links of the original
    vertices in an edgewise subdivision comes out to; the constant term
    of p does not contribute.
    """
    out = UnivariatePoly()
    for n, c in enumerate(p.coeffs):
        if n >= 1:
            out = out + 2 * c * chebyshev_U(n - 1)
    return out


def univariate_to_dict(p: UnivariatePoly) -> dict:
    return {"coeffs": [[c.numerator, c.denominator] for c in p.coeffs]}


def univariate_from_dict(data: dict) -> UnivariatePoly:
    return UnivariatePoly([Fraction(num, den) for num, den in data["coeffs"]])


# -- simplicial complexes --------------------------------------------------------


class SimplicialComplex:
    """A downward closed family of faces over string vertex labels."""

    __slots__ = ("faces", "vertices")

    def __init__(self, faces):
        face_set = {frozenset(f) for f in faces}
        face_set.add(frozenset())
        if len(face_set) > FACE_CAP:
            raise TooLarge(f"{len(face_set)} faces exceed the cap of {FACE_CAP}")
        for face in face_set:
            for v in face:
                if face - {v} not in face_set:
                    raise PosetOpsError(
                        f"face {sorted(face)} present without its subset "
                        f"{sorted(face - {v})}"
                    )
        self.faces = frozenset(face_set)
        self.vertices = tuple(sorted({v for face in face_set for v in face}))

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        closed: set[frozenset] = set()
        for facet in facets:
            facet = frozenset(facet)
            stack = [facet]
            while stack:
                face = stack.pop()
                if face in closed:
                    continue
                closed.add(face)
                if len(closed) > FACE_CAP:
                    raise TooLarge(
                        f"more than {FACE_CAP} faces in the downward closure"
                    )
                for v in face:
                    stack.append(face - {v})
        return cls(closed)

    def __len__(self) -> int:
        return len(self.faces)

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        return (
            f"<SimplicialComplex with {len(self.vertices)} vertices and "
            f"{len(self.faces)} faces>"
        )

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def facets(self):
        ordered = sorted(self.faces, key=lambda f: (-len(f), tuple(sorted(f))))
        maximal = []
        for face in ordered:
            if not any(face < other for other in maximal):
                maximal.append(face)
        return sorted(maximal, key=lambda f: tuple(sorted(f)))

    def f_vector(self):
        counts = [0] * (self.dim + 2)
        for face in self.faces:
            counts[len(face)] += 1
        return counts

    def edges(self):
        return sorted(tuple(sorted(f)) for f in self.faces if len(f) == 2)


def f_vector(K: SimplicialComplex):
    return K.f_vector()


def F_polynomial(K: SimplicialComplex) -> UnivariatePoly:
    half_shift = UnivariatePoly([Fraction(-1, 2), Fraction(1, 2)])
    out = UnivariatePoly()
    power = ONE
    for count in K.f_vector():
        out = out + count * power
        power = power * half_shift
    return out


def h_polynomial(K: SimplicialComplex) -> UnivariatePoly:
    d = K.dim + 1
    t = X
    one_minus_t = UnivariatePoly([1, -1])
    out = UnivariatePoly()
    fv = K.f_vector()
    for j in range(d + 1):
        term = UnivariatePoly([fv[j]]) if j < len(fv) else UnivariatePoly()
        for _ in range(j):
            term = term * t
        for _ in range(d - j):
            term = term * one_minus_t
        out = out + term
    return out


def link(K: SimplicialComplex, face) -> SimplicialComplex:
    face = frozenset(face)
    if face not in K.faces:
        raise FaceNotInComplex(f"{sorted(face)} is not a face")
    return SimplicialComplex(
        {g for g in K.faces if not g & face and g | face in K.faces}
    )


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    k_faces = K.faces
    l_faces = L.faces
    if set(K.vertices) & set(L.vertices):
        k_faces = {frozenset("L:" + v for v in f) for f in k_faces}
        l_faces = {frozenset("R:" + v for v in f) for f in l_faces}
    if len(k_faces) * len(l_faces) > FACE_CAP:
        raise TooLarge("join would exceed the face cap")
    return SimplicialComplex({g | h for g in k_faces for h in l_faces})


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    poles = SimplicialComplex([(), ("pole+",), ("pole-",)])
    return join(K, poles)


def midpoint_label(u: str, v: str) -> str:
    lo, hi = sorted((u, v))
    return f"mid({lo}|{hi})"


def stellar_subdivide(K: SimplicialComplex, edge) -> SimplicialComplex:
    """Replace every face containing the edge by cones over a fresh midpoint."""
    edge = frozenset(edge)
    if len(edge) != 2:
        raise PosetOpsError(f"{sorted(edge)} is not an edge")
    if edge not in K.faces:
        raise FaceNotInComplex(f"{sorted(edge)} is not a face")
    u, v = sorted(edge)
    m = midpoint_label(u, v)
    if m in K.vertices:
        raise PosetOpsError(f"midpoint label {m!r} already taken")
    kept = {f for f in K.faces if not edge <= f}
    star = link(K, edge).faces
    added = set()
    for g in (frozenset(), frozenset({u}), frozenset({v})):
        for h in star:
            added.add(frozenset({m}) | g | h)
    return SimplicialComplex(kept | added)


def tchebyshev_triangulation(K: SimplicialComplex, edge_order=None) -> SimplicialComplex:
    """Stellar subdivision at every original edge, one after another.

    Midpoints introduced along the way are never subdivided themselves.
    The face numbers of the result do not depend on the order.
    """
    original = K.edges()
    if edge_order is None:
        chosen = original
    else:
        chosen = [tuple(sorted(e)) for e in edge_order]
        if sorted(chosen) != sorted(original) or len(chosen) != len(original):
            raise NotAnEdgePermutation(
                "edge_order must list each original edge exactly once"
            )
    out = K
    for edge in chosen:
        out = stellar_subdivide(out, edge)
    return out


class ComplexMultiset:
    """A list of complexes, one per generating vertex."""

    __slots__ = ("members",)

    def __init__(self, members):
        self.members = list(members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def second_kind_links(TK: SimplicialComplex, original_vertices) -> ComplexMultiset:
    members = []
    for v in original_vertices:
        if v not in TK.vertices:
            raise UnknownVertex(f"{v!r} is not a vertex")
        members.append(link(TK, {v}))
    return ComplexMultiset(members)


# -- order complexes -------------------------------------------------------------


def order_complex(P: Poset, strip_extremes: bool = False) -> SimplicialComplex:
    """Chains of the poset as faces; optionally drop bottom and top first."""
    if strip_extremes:
        if not isinstance(P, GradedPoset):
            raise PosetOpsError("only bounded graded posets have extremes to strip")
        skip = {P.bottom_index, P.top_index}
    else:
        skip = set()
    indices = [i for i in range(len(P.labels)) if i not in skip]
    above = {
        i: [j for j in indices if j != i and P.up[i] >> j & 1] for i in indices
    }
    faces: set[frozenset] = {frozenset()}

    def visit(i, chain):
        chain = chain + (P.labels[i],)
        faces.add(frozenset(chain))
        if len(faces) > FACE_CAP:
            raise TooLarge(f"more than {FACE_CAP} chains")
        for j in above[i]:
            visit(j, chain)

    for i in indices:
        visit(i, ())
    return SimplicialComplex(faces)


def containment_edge_order(P: Poset, edges):
    """Sort comparable pairs so that wider intervals come first."""
    graded = isinstance(P, GradedPoset)

    def width(edge):
        x, y = edge
        if not P.leq(x, y):
            x, y = y, x
        if graded:
            return P.rank[P.index[y]] - P.rank[P.index[x]]
        return P.interval_indices(P.index[x], P.index[y]).bit_count()

    return sorted(edges, key=lambda e: (-width(e), e))


def order_complex_of_intervals_check(P: Poset, edge_order=None) -> bool:
    """Compare the order complex of the interval poset with an edgewise
    subdivision of the order complex of P, identifying [u,u] with u and
    [u,v] with the midpoint of the edge {u,v}."""
    from .posets import interval_label, interval_poset

    base = order_complex(P)
    if edge_order is None:
        edge_order = containment_edge_order(P, base.edges())
    subdivided = tchebyshev_triangulation(base, edge_order)

    rename = {}
    for u in P.labels:
        rename[u] = interval_label(u, u)
    for x, y in base.edges():
        lo, hi = (x, y) if P.leq(x, y) else (y, x)
        rename[midpoint_label(x, y)] = interval_label(lo, hi)

    renamed = {frozenset(rename[v] for v in f) for f in subdivided.faces}
    target = order_complex(interval_poset(P))
    return renamed == target.faces


# -- serialization ---------------------------------------------------------------


def complex_to_dict(K: SimplicialComplex) -> dict:
    return {
        "vertices": list(K.vertices),
        "facets": [sorted(f) for f in K.facets()],
    }


def complex_from_dict(data: dict) -> SimplicialComplex:
    K = SimplicialComplex.from_facets(data["facets"])
    given = sorted(data["vertices"])
    if list(K.vertices) != given:
        raise PosetOpsError("vertex list disagrees with the facets")
    return K
