"""Edge-multicolorings of complete graphs and their geometric sources.

A multicoloring assigns each edge of K_n a subset of colors 1..t.  It is a
(t,k)-coloring when every k vertices span a clique that is monochromatic in
some color.  Families of t-intervals (one closed integer interval per track)
and t-subtrees (one subtree of a host tree per track) induce such colorings:
member u and member v share color i exactly when their track-i objects
intersect.  Because intervals on a line and subtrees of a tree both have the
Helly property, a monochromatic clique in color i corresponds to a single
point piercing all track-i objects of the clique.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import _kernels as kernels
from .errors import InputError
from .graphs import Graph, bits, mask_of

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    if u == v:
        raise InputError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


@dataclass
class MultiColoring:
    """Multicolored K_n: ``edge_colors`` maps (u, v) with u < v to color sets.

    Edges absent from the map carry no color.  Colors are 1-based, 1..t.
    """

    n: int
    t: int
    edge_colors: dict[Edge, frozenset[int]] = field(default_factory=dict)

    def validate(self) -> None:
        if self.n < 0:
            raise InputError(f"n must be nonnegative, got {self.n}")
        if self.t < 1:
            raise InputError(f"t must be positive, got {self.t}")
        for (u, v), cs in self.edge_colors.items():
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge ({u},{v}) for n={self.n}")
            for c in cs:
                if not (1 <= c <= self.t):
                    raise InputError(f"color {c} out of range 1..{self.t}")

    @classmethod
    def from_edges(
        cls, n: int, t: int, edges: Iterable[tuple[int, int, Iterable[int]]]
    ) -> "MultiColoring":
        col = cls(n, t)
        for u, v, cs in edges:
            col.add_colors(u, v, cs)
        col.validate()
        return col

    @classmethod
    def complete(cls, n: int, t: int) -> "MultiColoring":
        """Every edge carries every color."""
        allc = frozenset(range(1, t + 1))
        ec = {(u, v): allc for u in range(n) for v in range(u + 1, n)}
        return cls(n, t, ec)

    def add_colors(self, u: int, v: int, colors: Iterable[int]) -> None:
        key = edge_key(u, v)
        cs = frozenset(colors)
        if not cs:
            return
        self.edge_colors[key] = self.edge_colors.get(key, frozenset()) | cs

    def colors_of(self, u: int, v: int) -> frozenset[int]:
        return self.edge_colors.get(edge_key(u, v), frozenset())

    def color_graph(self, i: int) -> Graph:
        """Graph of edges carrying color i."""
        if not (1 <= i <= self.t):
            raise InputError(f"color {i} out of range 1..{self.t}")
        g = Graph(self.n)
        for (u, v), cs in self.edge_colors.items():
            if i in cs:
                g.add_edge(u, v)
        return g

    def color_adjacency(self) -> list[list[int]]:
        """Adjacency bitmask rows for every color graph at once."""
        rows = [[0] * self.n for _ in range(self.t)]
        for (u, v), cs in self.edge_colors.items():
            for c in cs:
                rows[c - 1][u] |= 1 << v
                rows[c - 1][v] |= 1 << u
        return rows

    def is_monochromatic_clique(self, vertices: Iterable[int], color: int) -> bool:
        """True if all pairs inside ``vertices`` carry ``color``."""
        vs = sorted(set(vertices))
        for a, b in combinations(vs, 2):
            if color not in self.colors_of(a, b):
                return False
        return True

    def restrict(self, vertices: Iterable[int]) -> tuple["MultiColoring", list[int]]:
        """Coloring induced on a vertex subset, relabeled 0..m-1 in order.

        Returns the restriction and the list mapping new labels to old.
        """
        old = sorted(set(vertices))
        if old and not (0 <= old[0] and old[-1] < self.n):
            raise InputError("restriction vertices out of range")
        index = {v: i for i, v in enumerate(old)}
        ec = {}
        for a, b in combinations(old, 2):
            cs = self.colors_of(a, b)
            if cs:
                ec[(index[a], index[b])] = cs
        return MultiColoring(len(old), self.t, ec), old

    def select_colors(self, colors: Sequence[int]) -> "MultiColoring":
        """Coloring keeping only the listed colors, relabeled to 1..len(colors).

        New color j+1 is old ``colors[j]``.  Edges losing all colors drop out.
        """
        seen = set()
        for c in colors:
            if not (1 <= c <= self.t):
                raise InputError(f"color {c} out of range 1..{self.t}")
            if c in seen:
                raise InputError(f"duplicate color {c}")
            seen.add(c)
        remap = {c: j + 1 for j, c in enumerate(colors)}
        ec = {}
        for e, cs in self.edge_colors.items():
            kept = frozenset(remap[c] for c in cs if c in remap)
            if kept:
                ec[e] = kept
        return MultiColoring(self.n, len(colors), ec)

    def to_dict(self) -> dict:
        edges = [
            [u, v, sorted(cs)]
            for (u, v), cs in sorted(self.edge_colors.items())
        ]
        return {"n": self.n, "t": self.t, "edges": edges}

    @classmethod
    def from_dict(cls, data: Mapping) -> "MultiColoring":
        try:
            n = int(data["n"])
            t = int(data["t"])
            raw = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad coloring document: {exc}") from exc
        col = cls(n, t)
        seen = set()
        for item in raw:
            u, v, cs = int(item[0]), int(item[1]), [int(c) for c in item[2]]
            if not u < v:
                raise InputError(f"edge ({u},{v}) must satisfy u < v")
            if (u, v) in seen:
                raise InputError(f"edge ({u},{v}) listed twice")
            seen.add((u, v))
            col.add_colors(u, v, cs)
        col.validate()
        return col


@dataclass
class TIntervalFamily:
    """n members, each a tuple of t closed integer intervals (one per track)."""

    t: int
    members: list[list[tuple[int, int]]]

    @property
    def n(self) -> int:
        return len(self.members)

    def validate(self) -> None:
        if self.t < 1:
            raise InputError(f"t must be positive, got {self.t}")
        for idx, tracks in enumerate(self.members):
            if len(tracks) != self.t:
                raise InputError(
                    f"member {idx} has {len(tracks)} interval(s), expected {self.t}"
                )
            for lo, hi in tracks:
                if not (isinstance(lo, int) and isinstance(hi, int)):
                    raise InputError(f"member {idx}: endpoints must be integers")
                if lo > hi:
                    raise InputError(f"member {idx}: empty interval [{lo},{hi}]")

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "members": [[[lo, hi] for lo, hi in tracks] for tracks in self.members],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TIntervalFamily":
        try:
            t = int(data["t"])
            members = [
                [(int(iv[0]), int(iv[1])) for iv in tracks]
                for tracks in data["members"]
            ]
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"bad interval family document: {exc}") from exc
        fam = cls(t, members)
        fam.validate()
        return fam


@dataclass
class TSubtreeFamily:
    """n members, each a tuple of t vertex sets inducing subtrees of a host tree."""

    host_edges: list[Edge]
    t: int
    members: list[list[frozenset[int]]]

    @property
    def n(self) -> int:
        return len(self.members)

    @property
    def host_size(self) -> int:
        h = 0
        for u, v in self.host_edges:
            h = max(h, u + 1, v + 1)
        for tracks in self.members:
            for s in tracks:
                for v in s:
                    h = max(h, v + 1)
        return h

    def host_graph(self) -> Graph:
        return Graph(self.host_size, self.host_edges)

    def validate(self) -> None:
        if self.t < 1:
            raise InputError(f"t must be positive, got {self.t}")
        h = self.host_size
        host = self.host_graph()
        if h > 0 and (len(self.host_edges) != h - 1 or not host.is_connected()):
            raise InputError("host is not a tree")
        for idx, tracks in enumerate(self.members):
            if len(tracks) != self.t:
                raise InputError(
                    f"member {idx} has {len(tracks)} subtree(s), expected {self.t}"
                )
            for s in tracks:
                if not s:
                    raise InputError(f"member {idx}: empty subtree")
                sub, _ = host.subgraph(s)
                if not sub.is_connected():
                    raise InputError(f"member {idx}: subtree vertices not connected")

    def to_dict(self) -> dict:
        return {
            "host_edges": [[u, v] for u, v in self.host_edges],
            "t": self.t,
            "members": [[sorted(s) for s in tracks] for tracks in self.members],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "TSubtreeFamily":
        try:
            host_edges = [edge_key(int(e[0]), int(e[1])) for e in data["host_edges"]]
            t = int(data["t"])
            members = [
                [frozenset(int(v) for v in s) for s in tracks]
                for tracks in data["members"]
            ]
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"bad subtree family document: {exc}") from exc
        fam = cls(host_edges, t, members)
        fam.validate()
        return fam


@dataclass
class StrongCover:
    """Partial map color -> vertex set; each set is a clique in its color."""

    assignments: dict[int, frozenset[int]] = field(default_factory=dict)

    def vertices(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for s in self.assignments.values():
            out |= s
        return out

    def covered(self) -> int:
        return len(self.vertices())

    def size(self) -> int:
        """Number of cliques used (empty assignments do not count)."""
        return sum(1 for s in self.assignments.values() if s)

    def to_dict(self) -> dict:
        return {
            "assignments": [
                [c, sorted(s)] for c, s in sorted(self.assignments.items())
            ]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "StrongCover":
        try:
            pairs = [(int(c), frozenset(int(v) for v in s))
                     for c, s in data["assignments"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad cover document: {exc}") from exc
        if len({c for c, _ in pairs}) != len(pairs):
            raise InputError("cover assigns the same color twice")
        return cls(dict(pairs))


@dataclass
class CoverReport:
    valid: bool
    covered: int


def intervals_intersect(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Closed intervals intersect iff max of left ends <= min of right ends."""
    return max(a[0], b[0]) <= min(a[1], b[1])


def coloring_from_intervals(fam: TIntervalFamily) -> MultiColoring:
    """Edge (u, v) gets color i when track-i intervals of u and v intersect."""
    fam.validate()
    n = fam.n
    col = MultiColoring(n, fam.t)
    for u in range(n):
        tu = fam.members[u]
        for v in range(u + 1, n):
            tv = fam.members[v]
            cs = frozenset(
                i + 1 for i in range(fam.t) if intervals_intersect(tu[i], tv[i])
            )
            if cs:
                col.edge_colors[(u, v)] = cs
    return col


def coloring_from_subtrees(fam: TSubtreeFamily) -> MultiColoring:
    """Edge (u, v) gets color i when track-i subtrees of u and v share a vertex."""
    fam.validate()
    n = fam.n
    col = MultiColoring(n, fam.t)
    for u in range(n):
        tu = fam.members[u]
        for v in range(u + 1, n):
            tv = fam.members[v]
            cs = frozenset(i + 1 for i in range(fam.t) if tu[i] & tv[i])
            if cs:
                col.edge_colors[(u, v)] = cs
    return col


def is_tk_coloring(
    col: MultiColoring, k: int
) -> tuple[bool, tuple[int, ...] | None]:
    """Check that every k-subset spans a monochromatic clique in some color.

    Returns (True, None) or (False, witness) with the lexicographically
    first violating k-subset.
    """
    col.validate()
    if not (2 <= k <= col.n):
        raise InputError(f"need 2 <= k <= n, got k={k}, n={col.n}")
    witness = kernels.first_tk_violation(col.n, k, col.color_adjacency())
    return (witness is None, witness)


def is_kwise_intersecting(fam: TIntervalFamily, k: int) -> bool:
    """True if every k members share a point on some track.

    Computed directly on interval arithmetic; agrees with
    ``is_tk_coloring(coloring_from_intervals(fam), k)`` by the Helly
    property of intervals on a line.
    """
    fam.validate()
    n = fam.n
    if not (2 <= k <= n):
        raise InputError(f"need 2 <= k <= n, got k={k}, n={n}")
    tracks = range(fam.t)
    for subset in combinations(range(n), k):
        ok = False
        for i in tracks:
            lo = max(fam.members[v][i][0] for v in subset)
            hi = min(fam.members[v][i][1] for v in subset)
            if lo <= hi:
                ok = True
                break
        if not ok:
            return False
    return True


def kfold_min_colors(col: MultiColoring) -> int:
    """Minimum number of colors carried by any edge."""
    col.validate()
    if col.n < 2:
        raise InputError(f"need at least two vertices, got n={col.n}")
    best = col.t
    for u in range(col.n):
        for v in range(u + 1, col.n):
            best = min(best, len(col.colors_of(u, v)))
            if best == 0:
                return 0
    return best


def verify_cover(col: MultiColoring, cov: StrongCover) -> CoverReport:
    """Check that each assigned set is a clique in its color; count coverage."""
    col.validate()
    seen: set[int] = set()
    valid = True
    for c, s in cov.assignments.items():
        if not (1 <= c <= col.t):
            raise InputError(f"cover color {c} out of range 1..{col.t}")
        for v in s:
            if not (0 <= v < col.n):
                raise InputError(f"cover vertex {v} out of range for n={col.n}")
        if not col.is_monochromatic_clique(s, c):
            valid = False
        seen.update(s)
    return CoverReport(valid=valid, covered=len(seen))


def piercing_points(
    fam: TIntervalFamily, cov: StrongCover
) -> list[tuple[int, int]]:
    """One piercing point per assigned color of a valid cover.

    For each clique of color i the point is the maximum left endpoint of the
    members' track-i intervals; pairwise intersection on a line guarantees it
    lies in every interval of the clique.  Returns (track, point) pairs
    sorted by track; empty assignments are skipped.
    """
    col = coloring_from_intervals(fam)
    report = verify_cover(col, cov)
    if not report.valid:
        raise InputError("cover is not valid for the coloring of this family")
    out = []
    for c in sorted(cov.assignments):
        s = cov.assignments[c]
        if not s:
            continue
        lo = max(fam.members[v][c - 1][0] for v in s)
        hi = min(fam.members[v][c - 1][1] for v in s)
        if lo > hi:
            raise InputError(
                f"color {c} clique has no common point on its track"
            )
        out.append((c, lo))
    return out
