"""Finite posets with Hasse-edge ground truth and bitset reachability.

A :class:`FinitePoset` is immutable: points are indices ``0..n-1``, each
carrying a distinct hashable label.  Covering (Hasse) edges are the stored
ground truth; the full order is materialized at construction as per-point
down-set/up-set bitmasks, so ``leq`` is O(1).

The same class doubles as a finite T0 topological space: the minimal open
neighbourhood of a point is its down-set, and a map between posets is
continuous exactly when it is order-preserving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import MapError, PosetError
from .labels import Label


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """An immutable finite partial order.

    Build one with :meth:`from_relations` (arbitrary order pairs, closed and
    reduced internally) or :meth:`from_hasse` (pairs that must already be
    exactly the covering relations).
    """

    __slots__ = ("labels", "hasse", "_down", "_up", "_index")

    def __init__(self, labels, hasse, down, up):
        self.labels: tuple[Label, ...] = labels
        self.hasse: tuple[tuple[int, int], ...] = hasse
        self._down: tuple[int, ...] = down
        self._up: tuple[int, ...] = up
        self._index = {lab: i for i, lab in enumerate(labels)}

    # -- construction ------------------------------------------------------

    @staticmethod
    def _close(n: int, pairs: Iterable[tuple[int, int]]):
        """Validate a relation digraph and return down/up closure bitmasks."""
        below: list[set[int]] = [set() for _ in range(n)]  # direct predecessors
        above: list[set[int]] = [set() for _ in range(n)]
        for lo, hi in pairs:
            if not (0 <= lo < n and 0 <= hi < n):
                raise PosetError(f"relation ({lo}, {hi}) out of range")
            if lo == hi:
                raise PosetError(f"reflexive pair ({lo}, {hi}) breaks antisymmetry")
            below[hi].add(lo)
            above[lo].add(hi)

        # Kahn's algorithm: a cycle would violate antisymmetry.
        indeg = [len(below[i]) for i in range(n)]
        queue = [i for i in range(n) if indeg[i] == 0]
        topo: list[int] = []
        while queue:
            nxt: list[int] = []
            for i in queue:
                topo.append(i)
                for j in above[i]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        nxt.append(j)
            queue = nxt
        if len(topo) != n:
            raise PosetError("relations contain a cycle (antisymmetry fails)")

        down = [0] * n
        for i in topo:
            acc = 1 << i
            for j in below[i]:
                acc |= down[j]
            down[i] = acc
        up = [0] * n
        for i in reversed(topo):
            acc = 1 << i
            for j in above[i]:
                acc |= up[j]
            up[i] = acc
        return tuple(down), tuple(up)

    @classmethod
    def from_relations(cls, labels: Sequence[Label], pairs: Iterable[tuple[int, int]]):
        """Build from arbitrary ``lower < upper`` index pairs."""
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise PosetError("point labels must be pairwise distinct")
        n = len(labels)
        down, up = cls._close(n, pairs)
        hasse = []
        for b in range(n):
            strict = down[b] & ~(1 << b)
            for a in bits(strict):
                # a is covered by b iff nothing else sits strictly between.
                if up[a] & strict == 1 << a:
                    hasse.append((a, b))
        hasse.sort()
        return cls(labels, tuple(hasse), down, up)

    @classmethod
    def from_hasse(cls, labels: Sequence[Label], edges: Iterable[tuple[int, int]]):
        """Build from pairs that must be exactly the covering relations."""
        edges = sorted(tuple(e) for e in edges)
        poset = cls.from_relations(labels, edges)
        if list(poset.hasse) != edges:
            raise PosetError("edges are not a transitive reduction")
        return poset

    # -- basic queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and self.hasse == other.hasse

    def __hash__(self) -> int:
        return hash((self.labels, self.hasse))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} points, {len(self.hasse)} cover edges)"

    def index_of(self, label: Label) -> int:
        return self._index[label]

    def leq(self, a: int, b: int) -> bool:
        return bool(self._down[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: int, b: int) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def minimal_open_set(self, i: int) -> tuple[int, ...]:
        """The smallest open set containing ``i``: its down-set."""
        return tuple(bits(self._down[i]))

    def up_set(self, i: int) -> tuple[int, ...]:
        return tuple(bits(self._up[i]))

    def minimal_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if self._down[i] == 1 << i)

    def maximal_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self)) if self._up[i] == 1 << i)

    def hasse_below(self, i: int) -> tuple[int, ...]:
        return tuple(a for a, b in self.hasse if b == i)

    def hasse_above(self, i: int) -> tuple[int, ...]:
        return tuple(b for a, b in self.hasse if a == i)

    def topological_order(self) -> tuple[int, ...]:
        """A linear extension: every point after everything below it."""
        return tuple(sorted(range(len(self)), key=lambda i: (self._down[i].bit_count(), i)))

    # -- structure ---------------------------------------------------------

    def _unique_extreme(self, strict: int, masks) -> bool:
        """Does the subset ``strict`` have a unique extreme point?

        ``masks`` is ``_up`` to test for a unique maximal element and
        ``_down`` for a unique minimal one.
        """
        count = 0
        for j in bits(strict):
            if masks[j] & strict == 1 << j:
                count += 1
                if count > 1:
                    return False
        return count == 1

    def beat_points(self) -> list[tuple[int, str]]:
        """Points removable without changing homotopy type.

        A point is a "down" beat point when its strict down-set has a unique
        maximal element, an "up" beat point when its strict up-set has a
        unique minimal element.  Entries are ``(index, kind)`` with kind
        ``"down"``/``"up"``, ordered by index then kind; a point carrying
        both kinds appears twice.
        """
        found: list[tuple[int, str]] = []
        for i in range(len(self)):
            strict_down = self._down[i] & ~(1 << i)
            strict_up = self._up[i] & ~(1 << i)
            if strict_down and self._unique_extreme(strict_down, self._up):
                found.append((i, "down"))
            if strict_up and self._unique_extreme(strict_up, self._down):
                found.append((i, "up"))
        return found

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the comparability graph, each sorted."""
        n = len(self)
        seen = 0
        out: list[tuple[int, ...]] = []
        for start in range(n):
            if seen >> start & 1:
                continue
            comp = 0
            frontier = 1 << start
            while frontier:
                comp |= frontier
                nxt = 0
                for i in bits(frontier):
                    nxt |= self._down[i] | self._up[i]
                frontier = nxt & ~comp
            seen |= comp
            out.append(tuple(bits(comp)))
        return out

    def is_path_connected(self) -> bool:
        """For finite spaces path components and components coincide.

        The empty poset counts as connected.
        """
        return len(self.components()) <= 1

    def induced(self, keep: Sequence[int]) -> "FinitePoset":
        """Subposet on ``keep`` (order inherited, covers recomputed)."""
        keep = sorted(keep)
        old_to_new = {old: new for new, old in enumerate(keep)}
        keep_mask = 0
        for old in keep:
            keep_mask |= 1 << old
        pairs = []
        for old in keep:
            for j in bits(self._down[old] & keep_mask & ~(1 << old)):
                pairs.append((old_to_new[j], old_to_new[old]))
        return FinitePoset.from_relations([self.labels[i] for i in keep], pairs)

    def drop_hasse_edge(self, edge: tuple[int, int]) -> "FinitePoset":
        """The poset generated by all covering relations except ``edge``."""
        if edge not in self.hasse:
            raise PosetError(f"{edge} is not a covering relation")
        return FinitePoset.from_relations(
            self.labels, [e for e in self.hasse if e != edge]
        )

    def relabel(self, fn: Callable[[Label], Label]) -> "FinitePoset":
        labels = tuple(fn(lab) for lab in self.labels)
        if len(set(labels)) != len(labels):
            raise PosetError("relabeling must keep labels pairwise distinct")
        return FinitePoset(labels, self.hasse, self._down, self._up)


@dataclass(frozen=True)
class PosetMap:
    """An order-preserving (= continuous) map between finite posets.

    ``images[i]`` is the target index of source point ``i``.  Order
    preservation is validated at construction; it suffices to check the
    covering relations.
    """

    source: FinitePoset
    target: FinitePoset
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise MapError("image tuple length does not match the source")
        n = len(self.target)
        for v in self.images:
            if not 0 <= v < n:
                raise MapError(f"image index {v} out of range")
        for a, b in self.source.hasse:
            if not self.target.leq(self.images[a], self.images[b]):
                raise MapError(
                    f"not order-preserving on cover ({a}, {b}): "
                    f"{self.images[a]} !<= {self.images[b]}"
                )

    def __call__(self, i: int) -> int:
        return self.images[i]

    @classmethod
    def identity(cls, poset: FinitePoset) -> "PosetMap":
        return cls(poset, poset, tuple(range(len(poset))))

    @classmethod
    def by_labels(
        cls, source: FinitePoset, target: FinitePoset, fn: Callable[[Label], Label]
    ) -> "PosetMap":
        """Build a map by transforming labels; images are looked up in the target."""
        return cls(source, target, tuple(target.index_of(fn(lab)) for lab in source.labels))

    def compose(self, inner: "PosetMap") -> "PosetMap":
        """``self`` after ``inner``."""
        if inner.target is not self.source and inner.target != self.source:
            raise MapError("composition mismatch: inner.target != outer.source")
        return PosetMap(
            inner.source, self.target, tuple(self.images[v] for v in inner.images)
        )

    def is_surjective(self) -> bool:
        return len(set(self.images)) == len(self.target)

    def is_bijective(self) -> bool:
        return len(self.source) == len(self.target) and self.is_surjective()

    def is_isomorphism(self) -> bool:
        """Bijective with order-preserving inverse (covers map onto covers)."""
        if not self.is_bijective():
            return False
        mapped = {(self.images[a], self.images[b]) for a, b in self.source.hasse}
        return mapped == set(self.target.hasse)

    def inverse(self) -> "PosetMap":
        if not self.is_isomorphism():
            raise MapError("map is not an isomorphism")
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v] = i
        return PosetMap(self.target, self.source, tuple(inv))

    def pointwise_leq(self, other: "PosetMap") -> bool:
        """``self(x) <= other(x)`` at every point (both into one target)."""
        return all(
            self.target.leq(a, b) for a, b in zip(self.images, other.images)
        )
