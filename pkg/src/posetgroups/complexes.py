"""Order complexes, exact homology, and induced actions on first homology.

The simplicial complex of a finite poset has the totally ordered subsets
as simplices; its geometric realization carries the same weak homotopy
type as the poset viewed as a finite space, so Betti numbers computed here
are honest invariants of the space.  As a cheap cross-check, the
undirected covering graph of the spaces built in this package has the same
first Betti number as the full complex (asserted in tests, and exposed via
:func:`hasse_undirected`).

Everything is exact integer arithmetic through :mod:`posetgroups.snf`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import SizeLimitExceeded
from .posets import FinitePoset, PosetMap, bits
from .snf import SNFResult, smith_normal_form

DEFAULT_SIMPLEX_LIMIT = 2_000_000


@dataclass(frozen=True)
class OrderComplex:
    """Chains of a poset, by dimension: ``simplices[k]`` lists the
    (k+1)-point chains as index-sorted tuples, each list sorted."""

    space: FinitePoset
    simplices: tuple[tuple[tuple[int, ...], ...], ...]

    def count(self, dim: int) -> int:
        if dim >= len(self.simplices):
            return 0
        return len(self.simplices[dim])


def order_complex(
    space: FinitePoset, *, dim_cap: int = 2, limit: int = DEFAULT_SIMPLEX_LIMIT
) -> OrderComplex:
    """Enumerate chains up to ``dim_cap`` (2 suffices for b0, b1 and H1 torsion)."""
    n = len(space)
    strict_up = [space.up_mask(i) & ~(1 << i) for i in range(n)]
    by_dim: list[list[tuple[int, ...]]] = [[(i,) for i in range(n)]]
    total = n
    frontier = [((i,), i) for i in range(n)]
    for _ in range(dim_cap):
        grown: list[tuple[tuple[int, ...], int]] = []
        for chain, top in frontier:
            for nxt in bits(strict_up[top]):
                grown.append((chain + (nxt,), nxt))
                total += 1
                if total > limit:
                    raise SizeLimitExceeded(
                        f"order complex exceeded {limit} simplices; raise the limit"
                    )
        if not grown:
            break
        by_dim.append(sorted(tuple(sorted(chain)) for chain, _ in grown))
        frontier = grown
    return OrderComplex(space, tuple(tuple(level) for level in by_dim))


@dataclass(frozen=True)
class ChainComplex:
    """Integer boundary matrices of an order complex.

    ``boundary[k]`` maps k-chains to (k-1)-chains, stored as
    ``(row, col, coeff)`` triples; validated to compose to zero.
    """

    counts: tuple[int, ...]
    boundary: tuple[tuple[tuple[int, int, int], ...], ...]

    def rank_of_boundary(self, k: int) -> int:
        if k < 1 or k >= len(self.counts):
            return 0
        return smith_normal_form(
            self.boundary[k], self.counts[k - 1], self.counts[k]
        ).rank


def chain_complex(cx: OrderComplex) -> ChainComplex:
    counts = tuple(cx.count(d) for d in range(len(cx.simplices)))
    boundaries: list[tuple[tuple[int, int, int], ...]] = [()]
    for k in range(1, len(cx.simplices)):
        index = {s: i for i, s in enumerate(cx.simplices[k - 1])}
        triples: list[tuple[int, int, int]] = []
        for col, simplex in enumerate(cx.simplices[k]):
            for drop in range(len(simplex)):
                face = simplex[:drop] + simplex[drop + 1:]
                triples.append((index[face], col, (-1) ** drop))
        boundaries.append(tuple(triples))

    # d(d(x)) = 0, checked on every top simplex.
    for k in range(2, len(cx.simplices)):
        lower = {}
        for r, c, v in boundaries[k - 1]:
            lower.setdefault(c, []).append((r, v))
        for col in range(counts[k]):
            acc: dict[int, int] = {}
            for r, c, v in boundaries[k]:
                if c != col:
                    continue
                for r2, v2 in lower.get(r, ()):
                    acc[r2] = acc.get(r2, 0) + v * v2
            if any(acc.values()):
                raise AssertionError("boundary of boundary is not zero")
    return ChainComplex(counts, tuple(boundaries))


def betti(cc: ChainComplex, k: int) -> int:
    if k < 0 or k >= len(cc.counts):
        return 0
    return cc.counts[k] - cc.rank_of_boundary(k) - cc.rank_of_boundary(k + 1)


@dataclass(frozen=True)
class HomologySummary:
    b0: int
    b1: int
    h1_torsion: tuple[int, ...]


def homology_summary(cx: OrderComplex) -> HomologySummary:
    """b0, b1 and the torsion coefficients of first homology."""
    cc = chain_complex(cx)
    rank1 = cc.rank_of_boundary(1)
    snf2 = (
        smith_normal_form(cc.boundary[2], cc.counts[1], cc.counts[2])
        if len(cc.counts) > 2
        else SNFResult(cc.counts[1] if len(cc.counts) > 1 else 0, 0, (), ())
    )
    n1 = cc.counts[1] if len(cc.counts) > 1 else 0
    return HomologySummary(
        b0=cc.counts[0] - rank1,
        b1=n1 - rank1 - snf2.rank,
        h1_torsion=snf2.torsion,
    )


@dataclass(frozen=True)
class HasseGraph:
    """The undirected covering graph: vertices, edges, and its cycle rank."""

    vertices: int
    edges: tuple[tuple[int, int], ...]
    components: int

    @property
    def cycle_rank(self) -> int:
        return len(self.edges) - self.vertices + self.components


def hasse_undirected(space: FinitePoset) -> HasseGraph:
    return HasseGraph(
        vertices=len(space),
        edges=space.hasse,
        components=len(space.components()),
    )


# -- induced action on first homology ----------------------------------------


@dataclass(frozen=True)
class CycleBasis:
    """A basis of first homology in fundamental-cycle coordinates.

    Fundamental cycles come from an index-ordered spanning forest of the
    1-skeleton; triangle boundaries expressed in those coordinates make up
    the relation matrix, whose Smith reduction (with transforms) turns any
    1-cycle into free-part coordinates: ``coords = (U @ nontree_coeffs)``
    restricted to the non-pivot rows.
    """

    complex: OrderComplex
    edge_positions: dict[tuple[int, int], int]
    nontree: tuple[int, ...]
    basis_chains: tuple[dict[int, int], ...]
    u: tuple[tuple[int, ...], ...]
    free_rows: tuple[int, ...]
    torsion: tuple[int, ...]

    @property
    def betti(self) -> int:
        return len(self.free_rows)


def cycle_basis(cx: OrderComplex) -> CycleBasis:
    n = len(cx.space)
    edges = cx.simplices[1] if len(cx.simplices) > 1 else ()
    triangles = cx.simplices[2] if len(cx.simplices) > 2 else ()
    edge_positions = {e: k for k, e in enumerate(edges)}

    adjacency: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    tree_edges: set[tuple[int, int]] = set()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            here = queue.popleft()
            for there in sorted(adjacency[here]):
                if not seen[there]:
                    seen[there] = True
                    parent[there] = here
                    depth[there] = depth[here] + 1
                    tree_edges.add((min(here, there), max(here, there)))
                    queue.append(there)

    nontree = tuple(
        k for k, e in enumerate(edges) if e not in tree_edges
    )
    nontree_slot = {k: t for t, k in enumerate(nontree)}

    def step_chain(chain: dict[int, int], a: int, b: int, sign: int):
        """Add the oriented edge a->b to a 1-chain."""
        if a < b:
            key, coeff = (a, b), sign
        else:
            key, coeff = (b, a), -sign
        pos = edge_positions[key]
        chain[pos] = chain.get(pos, 0) + coeff
        if chain[pos] == 0:
            del chain[pos]

    def fundamental_chain(edge_pos: int) -> dict[int, int]:
        """The cycle through one nontree edge: the edge plus the tree path back."""
        u, v = edges[edge_pos]
        chain: dict[int, int] = {}
        step_chain(chain, u, v, +1)
        a, b = v, u  # walk from v back to u through the forest
        while a != b:
            if depth[a] >= depth[b]:
                step_chain(chain, a, parent[a], +1)
                a = parent[a]
            else:
                step_chain(chain, parent[b], b, +1)
                b = parent[b]
        return chain

    fundamentals = [fundamental_chain(k) for k in nontree]

    triples = []
    for col, (a, b, c) in enumerate(triangles):
        for key, sign in (((b, c), 1), ((a, c), -1), ((a, b), 1)):
            pos = edge_positions[key]
            if pos in nontree_slot:
                triples.append((nontree_slot[pos], col, sign))
    snf = smith_normal_form(triples, len(nontree), len(triangles), want_transform=True)

    free = snf.free_rows()
    # Basis representatives: preimages (under U) of the free unit vectors,
    # expanded from fundamental-cycle coordinates to edge chains.
    basis_chains = []
    for row in free:
        chain: dict[int, int] = {}
        for t in range(len(nontree)):
            coeff = snf.u_inv[t][row]
            if coeff:
                for pos, v in fundamentals[t].items():
                    chain[pos] = chain.get(pos, 0) + coeff * v
        basis_chains.append({k: v for k, v in chain.items() if v})

    return CycleBasis(
        complex=cx,
        edge_positions=edge_positions,
        nontree=nontree,
        basis_chains=tuple(basis_chains),
        u=snf.u,
        free_rows=free,
        torsion=snf.torsion,
    )


def h1_action_matrix(basis: CycleBasis, automorphism: PosetMap):
    """The matrix of an automorphism on free first homology.

    Column ``j`` holds the coordinates of the image of basis cycle ``j``.
    Functorial by construction: composing automorphisms multiplies the
    matrices.
    """
    cx = basis.complex
    edges = cx.simplices[1]
    images = automorphism.images
    columns = []
    for chain in basis.basis_chains:
        pushed: dict[int, int] = {}
        for pos, coeff in chain.items():
            a, b = edges[pos]
            fa, fb = images[a], images[b]
            if fa < fb:
                key, sign = (fa, fb), coeff
            else:
                key, sign = (fb, fa), -coeff
            new_pos = basis.edge_positions[key]
            pushed[new_pos] = pushed.get(new_pos, 0) + sign
        # fundamental coordinates = coefficients on nontree edges
        w = [pushed.get(pos, 0) for pos in basis.nontree]
        columns.append(
            tuple(
                sum(basis.u[row][t] * w[t] for t in range(len(w)) if w[t])
                for row in basis.free_rows
            )
        )
    # transpose: rows are output coordinates
    b = len(basis.free_rows)
    return tuple(tuple(columns[j][i] for j in range(b)) for i in range(b))
