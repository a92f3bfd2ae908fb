"""Finite groups as validated multiplication tables.

Elements are indices ``0..n-1`` with string labels.  The full group
axioms — including associativity over all triples — are checked at
construction; this is meant for small groups (order up to a couple of
hundred), where the exhaustive check is cheap insurance against a
mistyped table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    ContainsIdentityError,
    DoesNotGenerateError,
    DuplicateGeneratorError,
    GroupError,
    SizeLimitExceeded,
)

DEFAULT_ISO_ORDER_CAP = 16


@dataclass(frozen=True)
class FiniteGroup:
    labels: tuple[str, ...]
    cayley: tuple[tuple[int, ...], ...]
    identity: int = field(init=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            raise GroupError("a group has at least the identity")
        if len(set(self.labels)) != n:
            raise GroupError("element labels must be pairwise distinct")
        if len(self.cayley) != n or any(len(row) != n for row in self.cayley):
            raise GroupError("multiplication table must be n x n")
        for row in self.cayley:
            for v in row:
                if not 0 <= v < n:
                    raise GroupError(f"table entry {v} out of range")

        identity = None
        for e in range(n):
            if all(self.cayley[e][x] == x and self.cayley[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise GroupError("no two-sided identity element")
        object.__setattr__(self, "identity", identity)

        for a in range(n):
            if not any(
                self.cayley[a][b] == identity and self.cayley[b][a] == identity
                for b in range(n)
            ):
                raise GroupError(f"element {self.labels[a]!r} has no inverse")

        table = self.cayley
        for a in range(n):
            row_a = table[a]
            for b in range(n):
                ab = row_a[b]
                row_ab = table[ab]
                row_b = table[b]
                for c in range(n):
                    if row_ab[c] != row_a[row_b[c]]:
                        raise GroupError(
                            "associativity fails on "
                            f"({self.labels[a]}, {self.labels[b]}, {self.labels[c]})"
                        )

    @property
    def order(self) -> int:
        return len(self.labels)

    def op(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        for b in range(self.order):
            if self.cayley[a][b] == self.identity:
                return b
        raise GroupError("unreachable: validated groups have inverses")

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != self.identity:
            acc = self.cayley[acc][a]
            k += 1
        return k

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def closure(self, subset) -> tuple[int, ...]:
        """Subgroup generated by ``subset`` (element indices), sorted."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(subset)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.cayley[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupError(f"no element labelled {label!r}") from None


def validate_generating_set(
    group: FiniteGroup, gens, *, require_generating: bool = True
) -> tuple[int, ...]:
    """Check an ordered generator list; returns element indices.

    ``gens`` may mix labels and indices.  The identity is rejected, as are
    duplicates.  With ``require_generating`` (the default) the generators
    must span the whole group; passing False is how experiments force a
    proper subgroup through the construction.
    """
    resolved = []
    for g in gens:
        resolved.append(g if isinstance(g, int) else group.index_of(g))
    for g in resolved:
        if not 0 <= g < group.order:
            raise GroupError(f"generator index {g} out of range")
    if group.identity in resolved:
        raise ContainsIdentityError("the identity is not allowed as a generator")
    if len(set(resolved)) != len(resolved):
        raise DuplicateGeneratorError("generators must be pairwise distinct")
    if require_generating:
        span = group.closure(resolved)
        if len(span) != group.order:
            raise DoesNotGenerateError(
                f"generators span a subgroup of order {len(span)} < {group.order}",
                witness=span,
            )
    return tuple(resolved)


# -- builtin families -------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    labels = tuple("e" if k == 0 else "a" if k == 1 else f"a{k}" for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return FiniteGroup(labels, table)


def klein_four() -> FiniteGroup:
    labels = ("e", "a", "b", "ab")
    table = tuple(tuple(i ^ j for j in range(4)) for i in range(4))
    return FiniteGroup(labels, table)


def _word_labels(elements, identity, gen_pairs, mul) -> list[str]:
    """Shortest product-of-generators word per element, by breadth-first search."""
    words = {identity: "e"}
    queue = [identity]
    while queue:
        nxt = []
        for x in queue:
            for letter, g in gen_pairs:
                y = mul(x, g)
                if y not in words:
                    words[y] = (words[x] + letter) if words[x] != "e" else letter
                    nxt.append(y)
        queue = nxt
    if len(words) != len(elements):
        raise GroupError("generators do not span the family element set")
    return [words[x] for x in elements]


def dihedral(k: int) -> FiniteGroup:
    """Symmetries of the regular ``k``-gon, order ``2k``.

    Generated by two reflections ``a`` and ``b`` whose product has order
    ``k``; element labels are shortest words in ``a, b``.
    """
    if k < 2:
        raise GroupError("dihedral parameter must be >= 2")

    def mul(x, y):
        rot = (x[0] + (y[0] if x[1] == 0 else -y[0])) % k
        return (rot, x[1] ^ y[1])

    identity = (0, 0)
    gen_a = (0, 1)
    gen_b = (k - 1, 1)

    elements = [identity]
    seen = {identity}
    queue = [identity]
    while queue:
        nxt = []
        for x in queue:
            for g in (gen_a, gen_b):
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elements.append(y)
                    nxt.append(y)
        queue = nxt

    labels = tuple(_word_labels(elements, identity, [("a", gen_a), ("b", gen_b)], mul))
    pos = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(pos[mul(x, y)] for y in elements) for x in elements)
    return FiniteGroup(labels, table)


def _cycle_notation(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + "".join(str(v) for v in cyc) + ")")
    return "".join(parts) if parts else "e"


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("symmetric parameter must be in 1..6")
    elements = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(elements)}
    labels = tuple(_cycle_notation(p) for p in elements)
    table = tuple(
        tuple(pos[tuple(p[q[x]] for x in range(n))] for q in elements) for p in elements
    )
    return FiniteGroup(labels, table)


def quaternion8() -> FiniteGroup:
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    units = "1ijk"

    def mul(x, y):
        sx, ux = x
        sy, uy = y
        if ux == "1":
            return (sx * sy, uy)
        if uy == "1":
            return (sx * sy, ux)
        if ux == uy:
            return (-sx * sy, "1")
        prod = {"ij": (1, "k"), "jk": (1, "i"), "ki": (1, "j"),
                "ji": (-1, "k"), "kj": (-1, "i"), "ik": (-1, "j")}[ux + uy]
        return (sx * sy * prod[0], prod[1])

    elements = [(s, u) for u in units for s in (1, -1)]
    pos = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(pos[mul(x, y)] for y in elements) for x in elements)
    return FiniteGroup(labels, table)


_FAMILIES = {
    "cyclic": (cyclic, True),
    "dihedral": (dihedral, True),
    "symmetric": (symmetric, True),
    "klein4": (klein_four, False),
    "quaternion8": (quaternion8, False),
}


def builtin_group(name: str) -> FiniteGroup:
    """Look up a builtin family: ``cyclic:N``, ``dihedral:K``, ``symmetric:N``,
    ``klein4``, ``quaternion8``."""
    family, _, param = name.partition(":")
    if family not in _FAMILIES:
        raise GroupError(f"unknown group family {family!r}")
    fn, wants_param = _FAMILIES[family]
    if wants_param:
        if not param:
            raise GroupError(f"family {family!r} needs a parameter, e.g. {family}:3")
        return fn(int(param))
    if param:
        raise GroupError(f"family {family!r} takes no parameter")
    return fn()


def standard_generator_labels(name: str) -> list[str]:
    """The conventional generating set used for a builtin family."""
    family, _, param = name.partition(":")
    if family == "cyclic":
        return [] if int(param) == 1 else ["a"]
    if family == "dihedral":
        return ["a", "b"]
    if family == "klein4":
        return ["a", "b"]
    if family == "quaternion8":
        return ["i", "j"]
    if family == "symmetric":
        n = int(param)
        return [f"({i}{i + 1})" for i in range(n - 1)]
    raise GroupError(f"unknown group family {family!r}")


# -- isomorphism testing ----------------------------------------------------


def _greedy_generators(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {group.identity}
    for x in range(group.order):
        if x not in span:
            gens.append(x)
            span = set(group.closure(gens))
            if len(span) == group.order:
                break
    return gens


def groups_isomorphic(
    g: FiniteGroup, h: FiniteGroup, *, max_order: int = DEFAULT_ISO_ORDER_CAP
) -> bool:
    """Brute-force isomorphism test for small groups.

    Tries generator images with matching element orders and verifies the
    induced map on all pairs.  Guarded by ``max_order``.
    """
    if g.order != h.order:
        return False
    if g.order > max_order:
        raise SizeLimitExceeded(
            f"group isomorphism test capped at order {max_order}; got {g.order}"
        )
    if g.order_profile() != h.order_profile():
        return False

    gens = _greedy_generators(g)
    if not gens:
        return True  # both trivial

    # Express every element of g as parent * generator, breadth-first.
    parent = {g.identity: None}
    order_out = [g.identity]
    queue = [g.identity]
    while queue:
        nxt = []
        for x in queue:
            for gi, s in enumerate(gens):
                y = g.op(x, s)
                if y not in parent:
                    parent[y] = (x, gi)
                    order_out.append(y)
                    nxt.append(y)
        queue = nxt

    gen_orders = [g.element_order(s) for s in gens]
    candidates = [
        [x for x in range(h.order) if h.element_order(x) == og] for og in gen_orders
    ]

    def try_images(images: list[int]) -> bool:
        phi = {g.identity: h.identity}
        for y in order_out[1:]:
            x, gi = parent[y]
            phi[y] = h.op(phi[x], images[gi])
        if len(set(phi.values())) != h.order:
            return False
        return all(
            phi[g.op(a, b)] == h.op(phi[a], phi[b])
            for a in range(g.order)
            for b in range(g.order)
        )

    def assign(depth: int, images: list[int]) -> bool:
        if depth == len(gens):
            return try_images(images)
        g_span = len(g.closure(gens[: depth + 1]))
        for cand in candidates[depth]:
            images.append(cand)
            if len(h.closure(images)) == g_span and assign(depth + 1, images):
                return True
            images.pop()
        return False

    return assign(0, [])
