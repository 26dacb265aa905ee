"""The bijections between wedge paths and matchings.

``psi`` encodes a path as an insertion code and builds a matching by
repeatedly connecting the least free vertex to its b_i-th free right
neighbour.  ``phi`` is a first-edge-preserving rearrangement of matchings
that turns the stacking statistic into the nesting count; it works
recursively on the first edge with a three-way case split on how the first
two edges relate.  The composite ``big_phi = phi o psi`` sends the number
of north steps of a path to the number of nestings of its image.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidMatchingError
from .matching import Edge, Matching
from .paths import WedgePath

__all__ = [
    "CrossFanContext",
    "InsertionCode",
    "NestContext",
    "PhiCase",
    "big_phi",
    "big_phi_inv",
    "cross_fan_context",
    "insertion_code",
    "nest_context",
    "path_from_code",
    "phi",
    "phi_case_forward",
    "phi_case_inverse",
    "phi_inv",
    "psi",
    "psi_inv",
]


@dataclass(frozen=True)
class InsertionCode:
    """The sequence b_1..b_n with 1 <= b_i <= 2(n+1-i) - 1.

    Entry b_i says which free vertex (counting to the right of the least
    free one) gets connected at insertion step i.
    """

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(self.b)
        object.__setattr__(self, "b", b)
        n = len(b)
        for i, bi in enumerate(b, start=1):
            hi = 2 * (n + 1 - i) - 1
            if not 1 <= bi <= hi:
                raise ValueError(f"code entry {bi} at position {i} is outside 1..{hi}")

    @property
    def n(self) -> int:
        return len(self.b)


def insertion_code(path: WedgePath) -> InsertionCode:
    """Read the insertion code off a path: b_i = a_{n+1-i} + n + 1 - i.

    >>> insertion_code(WedgePath((0, 1))).b
    (3, 1)
    """
    n = path.n
    a = path.heights
    return InsertionCode(tuple(a[n - i] + n + 1 - i for i in range(1, n + 1)))


def path_from_code(code: InsertionCode) -> WedgePath:
    """Invert :func:`insertion_code`: a_{n+1-i} = b_i - (n+1-i)."""
    n = code.n
    heights = [0] * n
    for i, bi in enumerate(code.b, start=1):
        heights[n - i] = bi - (n + 1 - i)
    return WedgePath(tuple(heights))


def _matching_from_code(code: InsertionCode) -> Matching:
    """Run the insertion procedure on 2n free vertices."""
    n = code.n
    free = list(range(1, 2 * n + 1))
    table = [0] * (2 * n)
    for bi in code.b:
        left = free[0]
        right = free[bi]
        table[left - 1], table[right - 1] = right, left
        free.pop(bi)
        free.pop(0)
    return Matching(tuple(table))


def _code_from_matching(m: Matching) -> InsertionCode:
    """Reverse the insertion steps one by one to recover the code."""
    free = list(range(1, 2 * m.n + 1))
    b: list[int] = []
    for _ in range(m.n):
        left = free[0]
        mate = m.partner_of(left)
        b.append(free.index(mate))
        free.remove(mate)
        free.pop(0)
    return InsertionCode(tuple(b))


def psi(path: WedgePath) -> Matching:
    """Map a wedge path to a matching via its insertion code.

    >>> psi(WedgePath((0, 1))).to_text()
    '(1,4),(2,3)'
    """
    return _matching_from_code(insertion_code(path))


def psi_inv(m: Matching) -> WedgePath:
    """Exact inverse of :func:`psi`.

    >>> psi_inv(Matching.from_pairs([(1, 3), (2, 4)])).heights
    (0, 0)
    """
    if m.n == 0:
        raise InvalidMatchingError("the empty matching has no path preimage")
    return path_from_code(_code_from_matching(m))


# -- the three-case rearrangement -------------------------------------------


class PhiCase(enum.Enum):
    """How the first two edges of a matching relate."""

    ALIGNED = "aligned"
    CROSSED = "crossed"
    NESTED = "nested"


@dataclass(frozen=True)
class CrossFanContext:
    """Working data for the crossed case.

    ``fan`` holds the edges crossing the first edge (1, r), ordered by left
    endpoint; the first of them starts at vertex 2.
    """

    r: int
    fan: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not self.fan or self.fan[0].left != 2:
            raise ValueError("crossed case requires a fan starting at vertex 2")
        for left, right in self.fan:
            if not 1 < left < self.r < right:
                raise ValueError(f"edge ({left},{right}) does not cross (1,{self.r})")


@dataclass(frozen=True)
class NestContext:
    """Working data for the nested case.

    ``cross_both`` are the edges crossing both (1, r) and (2, q);
    ``cross_outer`` cross (1, r) only.  ``anchors`` merges their left
    endpoints with q into one sorted reconnection pool v_1 < ... <
    v_{p+s+1}, in which q sits at position p+1.
    """

    r: int
    q: int
    cross_both: tuple[Edge, ...]
    cross_outer: tuple[Edge, ...]
    anchors: tuple[int, ...]

    def __post_init__(self) -> None:
        p, s = len(self.cross_both), len(self.cross_outer)
        lefts = [e.left for e in self.cross_both] + [self.q] + [
            e.left for e in self.cross_outer
        ]
        if list(self.anchors) != lefts or sorted(lefts) != lefts:
            raise ValueError("anchor pool must be the sorted lefts merged with q")
        if len(self.anchors) != p + s + 1:
            raise ValueError("anchor pool has the wrong size")


def phi_case_forward(m: Matching) -> PhiCase:
    """Classify how the first two edges (by left endpoint) relate.

    Aligned when the first edge is (1, 2); otherwise the second edge is
    (2, q) and the pair is crossed when q > r, nested when q < r.
    """
    if m.n < 2:
        raise ValueError("case split needs at least two edges")
    r = m.partner_of(1)
    if r == 2:
        return PhiCase.ALIGNED
    q = m.partner_of(2)
    return PhiCase.CROSSED if q > r else PhiCase.NESTED


def cross_fan_context(m: Matching) -> CrossFanContext:
    """Extract the crossed-case fan from a matching whose first two edges cross."""
    r = m.partner_of(1)
    fan = tuple(
        Edge(left, right)
        for left, right in m.edges
        if 1 < left < r < right
    )
    return CrossFanContext(r=r, fan=fan)


def nest_context(m: Matching) -> NestContext:
    """Extract the nested-case data from a matching whose first two edges nest."""
    r = m.partner_of(1)
    q = m.partner_of(2)
    cross_both = tuple(
        Edge(left, right)
        for left, right in m.edges
        if 2 < left < q and right > r
    )
    cross_outer = tuple(
        Edge(left, right)
        for left, right in m.edges
        if q < left < r and right > r
    )
    anchors = tuple(
        sorted([e.left for e in cross_both] + [q] + [e.left for e in cross_outer])
    )
    return NestContext(
        r=r, q=q, cross_both=cross_both, cross_outer=cross_outer, anchors=anchors
    )


# Surgery bookkeeping: vertices are tracked as orderable keys (v, tag) so a
# vertex can be inserted between neighbours without renumbering on the fly;
# _relabel then maps keys to 1..2n by rank.  Existing vertices carry tag 0,
# a vertex inserted right before position v carries (v, -1), and one
# inserted right after carries (v, 1).

_Key = tuple[int, int]


def _relabel(keyed_edges: list[tuple[_Key, _Key]]) -> Matching:
    keys = sorted(k for e in keyed_edges for k in e)
    rank = {k: i for i, k in enumerate(keys, start=1)}
    table = [0] * len(keys)
    for ka, kb in keyed_edges:
        a, b = rank[ka], rank[kb]
        table[a - 1], table[b - 1] = b, a
    return Matching(tuple(table))


def _strip_first_edge(m: Matching) -> Matching:
    """Delete the first edge and its two vertices, renumbering the rest."""
    return _relabel([((a, 0), (b, 0)) for a, b in m.edges[1:]])


def _reinsert_first_edge(m: Matching, r: int) -> Matching:
    """Insert fresh vertices at positions 1 and r and connect them."""
    keyed: list[tuple[_Key, _Key]] = [((a, 0), (b, 0)) for a, b in m.edges]
    keyed.append(((0, 0), (r - 2, 1)))
    return _relabel(keyed)


def _cross_surgery(n2: Matching) -> Matching:
    """Crossed case: cycle the fan's right endpoints one slot leftward.

    Each fan right endpoint r_j reconnects to the next fan left l_{j+1};
    the last one connects to a fresh vertex placed right before r; vertex 2
    disappears.  The first edge keeps its position (1, r).
    """
    ctx = cross_fan_context(n2)
    fan_set = set(ctx.fan)
    keyed: list[tuple[_Key, _Key]] = [
        ((a, 0), (b, 0)) for a, b in n2.edges if Edge(a, b) not in fan_set
    ]
    for this, nxt in zip(ctx.fan, ctx.fan[1:]):
        keyed.append(((nxt.left, 0), (this.right, 0)))
    keyed.append(((ctx.r, -1), (ctx.fan[-1].right, 0)))
    return _relabel(keyed)


def _nest_surgery(n2: Matching) -> Matching:
    """Nested case: re-anchor the crossing edges around a fresh vertex.

    A fresh vertex right before r takes anchor v_{s+1}; the crossing edges'
    right endpoints r_1..r_{p+s} take the remaining anchors in order; the
    edge (2, q) dissolves (q survives as an anchor, vertex 2 disappears).
    """
    ctx = nest_context(n2)
    drop = set(ctx.cross_both) | set(ctx.cross_outer) | {Edge(2, ctx.q)}
    keyed: list[tuple[_Key, _Key]] = [
        ((a, 0), (b, 0)) for a, b in n2.edges if Edge(a, b) not in drop
    ]
    p, s = len(ctx.cross_both), len(ctx.cross_outer)
    keyed.append(((ctx.anchors[s], 0), (ctx.r, -1)))
    remaining = ctx.anchors[:s] + ctx.anchors[s + 1:]
    rights = [e.right for e in ctx.cross_both + ctx.cross_outer]
    for anchor, right in zip(remaining, rights):
        keyed.append(((anchor, 0), (right, 0)))
    return _relabel(keyed)


def phi(m: Matching) -> Matching:
    """First-edge-preserving rearrangement with nestings(phi(M)) = st_total(M).

    Defined recursively: strip the first edge, transform the rest, put the
    first edge back, then repair the picture according to how the first two
    edges relate (aligned: nothing, crossed: fan cycling, nested:
    re-anchoring).

    >>> phi(Matching.from_pairs([(1, 6), (2, 5), (3, 4)])).to_text()
    '(1,6),(2,3),(4,5)'
    """
    if m.n <= 1:
        return m
    r = m.partner_of(1)
    n1 = phi(_strip_first_edge(m))
    n2 = _reinsert_first_edge(n1, r)
    case = phi_case_forward(n2)
    if case is PhiCase.ALIGNED:
        return n2
    out = _cross_surgery(n2) if case is PhiCase.CROSSED else _nest_surgery(n2)
    assert out.partner_of(1) == r, "surgery must keep the first edge in place"
    return out


def phi_case_inverse(m: Matching) -> PhiCase:
    """Detect which case produced a matching.

    The aligned case leaves first edge (1, 2); otherwise the vertex just
    before the right endpoint of the first edge is a left endpoint exactly
    for the crossed case and a right endpoint exactly for the nested case.
    """
    if m.n < 2:
        raise ValueError("case split needs at least two edges")
    r = m.partner_of(1)
    if r == 2:
        return PhiCase.ALIGNED
    return PhiCase.CROSSED if m.partner_of(r - 1) > r - 1 else PhiCase.NESTED


def _crossing_edges(m: Matching, r: int) -> list[Edge]:
    return [Edge(a, b) for a, b in m.edges if 1 < a < r < b]


def _cross_unwind(m: Matching) -> Matching:
    """Undo :func:`_cross_surgery`: cycle fan rights one slot rightward."""
    r = m.partner_of(1)
    crossing = _crossing_edges(m, r)
    if not crossing or crossing[-1].left != r - 1:
        raise InvalidMatchingError(
            "corrupted input: crossed-case unwind finds no fan at the first edge"
        )
    keyed: list[tuple[_Key, _Key]] = [
        ((a, 0), (b, 0))
        for a, b in m.edges
        if Edge(a, b) not in set(crossing)
    ]
    lefts: list[_Key] = [(1, 1)] + [(e.left, 0) for e in crossing[:-1]]
    for left, edge in zip(lefts, crossing):
        keyed.append((left, (edge.right, 0)))
    return _relabel(keyed)


def _nest_unwind(m: Matching) -> Matching:
    """Undo :func:`_nest_surgery`: rebuild the anchor pool and re-anchor."""
    r = m.partner_of(1)
    new_vertex = r - 1
    partner = m.partner_of(new_vertex)
    crossing = _crossing_edges(m, r)
    pool = sorted([e.left for e in crossing] + [partner])
    s = pool.index(partner)
    p = len(crossing) - s
    q_now = pool[p]
    drop = set(crossing) | {Edge(partner, new_vertex)}
    keyed: list[tuple[_Key, _Key]] = [
        ((a, 0), (b, 0)) for a, b in m.edges if Edge(a, b) not in drop
    ]
    keyed.append(((1, 1), (q_now, 0)))
    lefts = [v for v in pool if v != q_now]
    for left, edge in zip(lefts, crossing):
        keyed.append(((left, 0), (edge.right, 0)))
    return _relabel(keyed)


def phi_inv(m: Matching) -> Matching:
    """Exact two-sided inverse of :func:`phi`.

    Detects the case from the shape of the result, undoes the surgery,
    strips the first edge, recurses, and reinserts the first edge.
    """
    if m.n <= 1:
        return m
    case = phi_case_inverse(m)
    if case is PhiCase.ALIGNED:
        n2 = m
    elif case is PhiCase.CROSSED:
        n2 = _cross_unwind(m)
    else:
        n2 = _nest_unwind(m)
    r = m.partner_of(1)
    if n2.partner_of(1) != r:
        raise InvalidMatchingError(
            "corrupted input: unwinding moved the first edge"
        )
    m1 = phi_inv(_strip_first_edge(n2))
    return _reinsert_first_edge(m1, r)


# -- the composite bijection -------------------------------------------------


def big_phi(path: WedgePath) -> Matching:
    """The full path-to-matching bijection: phi after psi.

    Sends the number of north steps to the number of nestings.

    >>> big_phi(WedgePath((0, -1, -2))).nestings()
    0
    """
    return phi(psi(path))


def big_phi_inv(m: Matching) -> WedgePath:
    """Inverse of :func:`big_phi`: psi_inv after phi_inv."""
    return psi_inv(phi_inv(m))
