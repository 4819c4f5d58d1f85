"""Strong covers: greedy with guaranteed fraction, exact oracles, and the
special-case algorithms for (3,3), (t,t) and induced-C4-free (2,2) colorings.

A strong cover picks at most one clique per color, all colors distinct, and
counts the vertices in the union.  For chordal (t,k)-colorings the greedy
sweep below covers at least (k-1)/(k+1) of the vertices regardless of the
color order; the counting identities behind that bound are exposed as exact
integer checks on the greedy trace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import _kernels as kernels
from .chordal import (
    clique_cutset,
    is_chordal,
    induced_c4_free,
    max_clique_chordal,
    maximal_cliques_chordal,
    mcs_order,
)
from .core import MultiColoring, StrongCover, is_tk_coloring, verify_cover
from .errors import GuaranteeError, InputError, PreconditionError, SizeLimitError
from .graphs import Graph, bits, mask_of


@dataclass
class GreedyStep:
    color: int
    clique: frozenset[int]
    remaining: int  # vertices left after this step


@dataclass
class GreedyTrace:
    steps: list[GreedyStep]
    uncovered: frozenset[int]

    def covered(self) -> int:
        return sum(len(s.clique) for s in self.steps)

    def to_dict(self) -> dict:
        return {
            "steps": [
                {"color": s.color, "clique": sorted(s.clique)} for s in self.steps
            ],
            "uncovered": sorted(self.uncovered),
        }


def _chordal_color_graphs(col: MultiColoring) -> list[Graph]:
    """Color graphs of col, each verified chordal (hole reported otherwise)."""
    graphs = []
    for i in range(1, col.t + 1):
        g = col.color_graph(i)
        cert = is_chordal(g)
        if not cert.is_chordal:
            raise PreconditionError(
                f"color {i} graph is not chordal", witness=(i, cert.hole)
            )
        graphs.append(g)
    return graphs


def _max_clique_any(g: Graph) -> frozenset[int]:
    """Maximum clique of a known-chordal graph, lex-least among maximums."""
    return max_clique_chordal(g, mcs_order(g)[::-1])


def greedy_strong_cover(
    col: MultiColoring, order: tuple[int, ...] | None = None
) -> tuple[StrongCover, GreedyTrace]:
    """Sweep the colors in the given order, each time removing a maximum
    clique of that color's graph restricted to the still-uncovered vertices.

    Every color graph must be chordal.  On a (t,k)-coloring the total
    covered is at least (k-1) n / (k+1) whatever the order.
    """
    col.validate()
    t = col.t
    if order is None:
        order = tuple(range(1, t + 1))
    if sorted(order) != list(range(1, t + 1)):
        raise InputError(f"order {order} is not a permutation of 1..{t}")
    _chordal_color_graphs(col)

    remaining = list(range(col.n))
    steps: list[GreedyStep] = []
    assignments: dict[int, frozenset[int]] = {}
    for color in order:
        if not remaining:
            break
        g = col.color_graph(color)
        sub, old = g.subgraph(remaining)
        local = _max_clique_any(sub)
        w = frozenset(old[v] for v in local)
        assignments[color] = w
        remaining = [v for v in remaining if v not in w]
        steps.append(GreedyStep(color=color, clique=w, remaining=len(remaining)))
    trace = GreedyTrace(steps=steps, uncovered=frozenset(remaining))
    return StrongCover(assignments), trace


def multiplicity_sum(col: MultiColoring, vertices: frozenset[int]) -> int:
    """Sum of per-edge color counts over edges inside the vertex set."""
    vs = sorted(vertices)
    return sum(
        len(col.colors_of(u, v)) for u, v in itertools.combinations(vs, 2)
    )


def check_residual_multiplicity(
    col: MultiColoring, vertices: frozenset[int], k: int
) -> tuple[bool, tuple[int, int] | None]:
    """Every edge inside the residual set must carry at least k-1 colors.

    Returns (True, None) or (False, first offending edge).
    """
    vs = sorted(vertices)
    for u, v in itertools.combinations(vs, 2):
        if len(col.colors_of(u, v)) < k - 1:
            return False, (u, v)
    return True, None


@dataclass
class ChainCheck:
    """Exact integer counting bounds evaluated on one greedy trace.

    With T the uncovered set and M the multiplicity sum over edges inside T:
    (k-1) |T| (|T|-1) / 2  <=  M  <=  covered * (|T|-1).
    Both sides are vacuous when T is empty.
    """

    t_size: int
    covered: int
    m: int
    lower: int
    upper: int
    ok: bool


def counting_chain_check(
    col: MultiColoring, trace: GreedyTrace, k: int
) -> ChainCheck:
    t_size = len(trace.uncovered)
    covered = trace.covered()
    m = multiplicity_sum(col, trace.uncovered)
    lower = (k - 1) * t_size * (t_size - 1) // 2
    upper = covered * (t_size - 1)
    ok = t_size == 0 or (lower <= m <= upper)
    return ChainCheck(
        t_size=t_size, covered=covered, m=m, lower=lower, upper=upper, ok=ok
    )


def _color_clique_masks(col: MultiColoring, color: int, g: Graph) -> list[int]:
    """Maximal clique masks of one color graph, sorted by vertex tuple."""
    cert = is_chordal(g)
    if cert.is_chordal:
        cliques = maximal_cliques_chordal(g, cert.peo)
        masks = [mask_of(c) for c in cliques]
    else:
        masks = kernels.maximal_cliques(g.n, g.adj)
    masks.sort(key=lambda m: tuple(bits(m)))
    return masks


def exact_max_strong_cover(
    col: MultiColoring, max_n: int = 40
) -> StrongCover:
    """Exhaustive maximum-coverage strong cover.

    Searches the product of per-color choices (a maximal clique or nothing)
    depth first in lexicographic order with an upper-bound prune, so the
    returned cover is the lexicographically least among maximum ones.
    """
    col.validate()
    if col.n > max_n:
        raise SizeLimitError(
            f"n={col.n} exceeds the exhaustive search bound {max_n}"
        )
    t = col.t
    per_color: list[list[int]] = []
    for i in range(1, t + 1):
        masks = _color_clique_masks(col, i, col.color_graph(i))
        per_color.append([0] + masks)
    suffix_best = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        biggest = max((m.bit_count() for m in per_color[i]), default=0)
        suffix_best[i] = suffix_best[i + 1] + biggest

    best_count = -1
    best_choice: list[int] = []
    choice: list[int] = [0] * t

    def descend(idx: int, covered: int) -> None:
        nonlocal best_count, best_choice
        cnt = covered.bit_count()
        if cnt + suffix_best[idx] <= best_count:
            return
        if idx == t:
            if cnt > best_count:
                best_count = cnt
                best_choice = list(choice)
            return
        for m in per_color[idx]:
            choice[idx] = m
            descend(idx + 1, covered | m)
        choice[idx] = 0

    descend(0, 0)
    assignments = {
        i + 1: frozenset(bits(m)) for i, m in enumerate(best_choice) if m
    }
    return StrongCover(assignments)


def theta(col: MultiColoring, max_n: int = 40) -> int | None:
    """Minimum number of cliques in a strong cover of all vertices.

    Returns None when no strong cover covers every vertex.  Exhaustive over
    per-color maximal cliques with memoized pruning.
    """
    col.validate()
    if col.n > max_n:
        raise SizeLimitError(
            f"n={col.n} exceeds the exhaustive search bound {max_n}"
        )
    full = (1 << col.n) - 1
    if full == 0:
        return 0
    t = col.t
    per_color = [
        _color_clique_masks(col, i, col.color_graph(i)) for i in range(1, t + 1)
    ]
    best: int | None = None
    seen: dict[tuple[int, int], int] = {}

    def descend(idx: int, covered: int, used: int) -> None:
        nonlocal best
        if best is not None and used >= best:
            return
        if covered == full:
            best = used
            return
        if idx == len(per_color):
            return
        key = (idx, covered)
        prior = seen.get(key)
        if prior is not None and prior <= used:
            return
        seen[key] = used
        for m in per_color[idx]:
            if m & ~covered:
                descend(idx + 1, covered | m, used + 1)
        descend(idx + 1, covered, used)

    descend(0, 0, 0)
    return best


def two_clique_cover_exact(
    col: MultiColoring,
    colors: tuple[int, int] = (1, 2),
    vertices: frozenset[int] | None = None,
    max_n: int = 40,
) -> StrongCover | None:
    """Cover a vertex set with at most two cliques of the two given colors.

    Scans maximal cliques of the first color on the induced set; the
    leftover must be a clique in the second color.  Returns the first cover
    found in deterministic order (fewest cliques, then lexicographic), or
    None when no such cover exists.
    """
    col.validate()
    ci, cj = colors
    if ci == cj or not (1 <= ci <= col.t and 1 <= cj <= col.t):
        raise InputError(f"bad color pair {colors}")
    if vertices is None:
        vertices = frozenset(range(col.n))
    if len(vertices) > max_n:
        raise SizeLimitError(
            f"{len(vertices)} vertices exceed the exhaustive search bound {max_n}"
        )
    if not vertices:
        return StrongCover({})
    if col.is_monochromatic_clique(vertices, ci):
        return StrongCover({ci: frozenset(vertices)})
    if col.is_monochromatic_clique(vertices, cj):
        return StrongCover({cj: frozenset(vertices)})
    gi = col.color_graph(ci)
    sub, old = gi.subgraph(vertices)
    for m in _color_clique_masks(col, ci, sub):
        clique = frozenset(old[v] for v in bits(m))
        rest = vertices - clique
        if col.is_monochromatic_clique(rest, cj):
            return StrongCover({ci: clique, cj: frozenset(rest)})
    return None


def _mono_edge_colors(col: MultiColoring) -> set[int]:
    """Colors that appear alone on at least one edge."""
    out = set()
    for cs in col.edge_colors.values():
        if len(cs) == 1:
            out.add(next(iter(cs)))
    return out


def strong_cover_33(col: MultiColoring) -> StrongCover:
    """Cover all vertices of a chordal (3,3)-coloring with at most 3 cliques.

    Either some color has no edge carrying it alone, in which case the other
    two colors already form a (2,2)-coloring and two cliques suffice, or
    color 1's graph is connected and spans everything: if it is complete one
    clique does it, otherwise a clique cutset Q splits the rest into A and B
    with no single-color-1 edge inside either, so A u B is two-clique
    coverable in the other two colors and Q rides along as the third clique.
    """
    col.validate()
    if col.t != 3:
        raise PreconditionError(f"need exactly 3 colors, got t={col.t}")
    if col.n < 3:
        raise PreconditionError(f"need n >= 3, got n={col.n}")
    ok, witness = is_tk_coloring(col, 3)
    if not ok:
        raise PreconditionError(
            f"not a (3,3)-coloring; witness {witness}", witness=witness
        )
    _chordal_color_graphs(col)

    mono = _mono_edge_colors(col)
    for j in (1, 2, 3):
        if j not in mono:
            others = tuple(c for c in (1, 2, 3) if c != j)
            cover = two_clique_cover_exact(col, others)
            if cover is None:
                raise GuaranteeError(
                    "two-clique cover of a (2,2)-coloring failed", instance=col
                )
            return cover

    all_vertices = frozenset(range(col.n))
    if col.is_monochromatic_clique(all_vertices, 1):
        return StrongCover({1: all_vertices})
    g1 = col.color_graph(1)
    if not g1.is_connected():
        # cannot happen for a valid (3,3)-coloring with a color-1-only edge;
        # recheck the two-color branches before giving up
        for pair in ((1, 2), (1, 3), (2, 3)):
            cover = two_clique_cover_exact(col, pair)
            if cover is not None:
                return cover
        raise PreconditionError("color 1 graph disconnected; invalid input")
    cert = is_chordal(g1)
    dec = clique_cutset(g1, cert.peo)
    rest = dec.a | dec.b
    sub_cover = two_clique_cover_exact(col, (2, 3), vertices=rest)
    if sub_cover is None:
        raise GuaranteeError(
            "two-clique cover across the clique cutset failed", instance=col
        )
    assignments = dict(sub_cover.assignments)
    assignments[1] = dec.q
    cover = StrongCover(assignments)
    report = verify_cover(col, cover)
    if not report.valid or report.covered != col.n:
        raise GuaranteeError("assembled cover is not valid", instance=col)
    return cover


def strong_cover_tt(col: MultiColoring) -> StrongCover:
    """Cover a chordal (t,t)-coloring with at most 2 (t even) or 3 (t odd)
    cliques.

    Some color pair must cover every edge when t is even; the pair scan
    runs first for odd t too, then a color triple whose restriction is a
    (3,3)-coloring is delegated to the three-color algorithm.
    """
    col.validate()
    t = col.t
    if t < 2:
        raise PreconditionError(f"need t >= 2, got t={t}")
    if col.n < t:
        raise PreconditionError(f"need n >= t, got n={col.n}, t={t}")
    ok, witness = is_tk_coloring(col, t)
    if not ok:
        raise PreconditionError(
            f"not a (t,t)-coloring; witness {witness}", witness=witness
        )
    _chordal_color_graphs(col)

    pairs = itertools.combinations(range(1, t + 1), 2)
    for i, j in pairs:
        if all(cs & {i, j} for cs in _all_edge_colors(col)):
            cover = two_clique_cover_exact(col, (i, j))
            if cover is None:
                raise GuaranteeError(
                    "two-clique cover of a covering pair failed", instance=col
                )
            return cover
    if t % 2 == 0:
        raise GuaranteeError(
            "no color pair covers all edges of an even (t,t)-coloring",
            instance=col,
        )
    for triple in itertools.combinations(range(1, t + 1), 3):
        sub = col.select_colors(triple)
        ok, _ = is_tk_coloring(sub, 3)
        if not ok:
            continue
        sub_cover = strong_cover_33(sub)
        assignments = {
            triple[c - 1]: s for c, s in sub_cover.assignments.items()
        }
        return StrongCover(assignments)
    raise GuaranteeError(
        "no color triple restricts to a (3,3)-coloring", instance=col
    )


def _all_edge_colors(col: MultiColoring):
    """Color sets of all n(n-1)/2 edges, including uncolored ones."""
    for u in range(col.n):
        for v in range(u + 1, col.n):
            yield col.colors_of(u, v)


def find_k5star(
    col: MultiColoring, red: int, blue: int
) -> tuple[int, ...] | None:
    """First 5-subset whose induced edges split into a red 5-cycle and a
    blue 5-cycle (each edge carrying exactly one of the two colors)."""
    col.validate()
    if red == blue or not (1 <= red <= col.t and 1 <= blue <= col.t):
        raise InputError(f"bad color pair ({red}, {blue})")
    for subset in itertools.combinations(range(col.n), 5):
        degs = {v: 0 for v in subset}
        ok = True
        for a, b in itertools.combinations(subset, 2):
            cs = col.colors_of(a, b) & {red, blue}
            if len(cs) != 1:
                ok = False
                break
            if red in cs:
                degs[a] += 1
                degs[b] += 1
        if ok and all(d == 2 for d in degs.values()):
            return subset
    return None


def _is_k5star(col: MultiColoring, subset: tuple[int, ...], red: int, blue: int) -> bool:
    degs = {v: 0 for v in subset}
    for a, b in itertools.combinations(subset, 2):
        cs = col.colors_of(a, b) & {red, blue}
        if len(cs) != 1:
            return False
        if red in cs:
            degs[a] += 1
            degs[b] += 1
    return all(d == 2 for d in degs.values())


def grow_blowup(
    col: MultiColoring,
    seed: tuple[int, ...],
    red: int = 1,
    blue: int = 2,
) -> list[frozenset[int]]:
    """Grow a maximal blow-up of a 5-vertex red/blue double cycle.

    The seed classes follow the red cycle order starting at the smallest
    seed vertex.  A vertex joins class i when its edges into class i carry
    both colors, into the neighboring classes red only, and into the two
    far classes blue only.  Vertices are absorbed in increasing order until
    a full pass absorbs nothing.
    """
    col.validate()
    if len(set(seed)) != 5:
        raise InputError("seed must be five distinct vertices")
    if not _is_k5star(col, tuple(sorted(seed)), red, blue):
        raise InputError("seed does not induce a red/blue double 5-cycle")

    seed_set = set(seed)
    v0 = min(seed_set)
    red_nbrs = sorted(
        u for u in seed_set
        if u != v0 and col.colors_of(v0, u) & {red, blue} == {red}
    )
    cycle = [v0, red_nbrs[0]]
    while len(cycle) < 5:
        cur = cycle[-1]
        nxt = [
            u for u in seed_set
            if u not in cycle and col.colors_of(cur, u) & {red, blue} == {red}
        ]
        cycle.append(nxt[0])
    classes = [set([v]) for v in cycle]

    def replica_class(w: int) -> int | None:
        for i in range(5):
            good = True
            for d in range(5):
                want_both = d == 0
                want_red = d in (1, 4)
                for u in classes[(i + d) % 5]:
                    cs = col.colors_of(w, u) & {red, blue}
                    if want_both:
                        if cs != {red, blue}:
                            good = False
                            break
                    elif want_red:
                        if cs != {red}:
                            good = False
                            break
                    else:
                        if cs != {blue}:
                            good = False
                            break
                if not good:
                    break
            if good:
                return i
        return None

    absorbed = set(cycle)
    changed = True
    while changed:
        changed = False
        for w in range(col.n):
            if w in absorbed:
                continue
            i = replica_class(w)
            if i is not None:
                classes[i].add(w)
                absorbed.add(w)
                changed = True
    return [frozenset(c) for c in classes]


def strong_cover_c4free_22(col: MultiColoring) -> StrongCover:
    """Two cliques covering at least ceil(4n/5) vertices of an induced-C4-free
    (2,2)-coloring.

    With no red/blue double 5-cycle present, two cliques cover everything.
    Otherwise the double cycle grows into a maximal blow-up X_1..X_5; each
    outside vertex sees all of it in a common color, splitting the outside
    into a red part R and a blue part B, and dropping the smallest class X_i
    leaves the red clique X_{i+2} u X_{i+3} u R and the blue clique
    X_{i+1} u X_{i+4} u B.
    """
    col.validate()
    if col.t != 2:
        raise PreconditionError(f"need exactly 2 colors, got t={col.t}")
    n = col.n
    if n == 0:
        return StrongCover({})
    for u in range(n):
        for v in range(u + 1, n):
            if not col.colors_of(u, v):
                raise PreconditionError(
                    f"edge ({u},{v}) carries no color", witness=(u, v)
                )
    for i in (1, 2):
        ok, witness = induced_c4_free(col.color_graph(i))
        if not ok:
            raise PreconditionError(
                f"color {i} graph has an induced 4-cycle {witness}",
                witness=(i, witness),
            )

    seed = find_k5star(col, 1, 2)
    if seed is None:
        cover = two_clique_cover_exact(col, (1, 2))
        if cover is None:
            raise GuaranteeError(
                "two-clique cover failed without a double 5-cycle", instance=col
            )
        return cover

    classes = grow_blowup(col, seed, red=1, blue=2)
    inside = set().union(*classes)
    part_r: set[int] = set()
    part_b: set[int] = set()
    for w in range(n):
        if w in inside:
            continue
        common = {1, 2}
        for u in inside:
            common &= col.colors_of(w, u)
            if not common:
                break
        if not common:
            raise GuaranteeError(
                "outside vertex shares no color with the blow-up", instance=col
            )
        if 1 in common:
            part_r.add(w)
        else:
            part_b.add(w)
    for part, c in ((part_r, 1), (part_b, 2)):
        if not col.is_monochromatic_clique(part, c):
            raise GuaranteeError(
                "outside part is not a clique in its color", instance=col
            )
    sizes = [len(c) for c in classes]
    i = sizes.index(min(sizes))
    red_set = classes[(i + 2) % 5] | classes[(i + 3) % 5] | frozenset(part_r)
    blue_set = classes[(i + 1) % 5] | classes[(i + 4) % 5] | frozenset(part_b)
    cover = StrongCover({1: red_set, 2: blue_set})
    report = verify_cover(col, cover)
    if not report.valid:
        raise GuaranteeError("assembled cover is not valid", instance=col)
    return cover
