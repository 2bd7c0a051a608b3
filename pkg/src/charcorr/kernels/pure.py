"""Pure-Python group kernels: the hot loops behind enumeration and classes.

The compiled twin in ``charcorr._speedups`` implements the same functions
with identical outputs; ``charcorr.kernels`` picks one at import time.
All functions work on element ids (positions in the canonical element list)
except ``closure_bfs``, which produces that list in the first place.
"""

from __future__ import annotations

from ..perm import Perm, compose, identity, inverse

BACKEND = "pure"


class GroupCtx:
    """Element list plus lookup structures for id-level arithmetic."""

    __slots__ = ("degree", "elements", "index", "_inv")

    def __init__(self, degree: int, elements: list[Perm]):
        self.degree = degree
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        self._inv: list[int] | None = None

    def inverses(self) -> list[int]:
        if self._inv is None:
            idx = self.index
            self._inv = [idx[inverse(p)] for p in self.elements]
        return self._inv


def make_ctx(degree: int, elements: list[Perm]) -> GroupCtx:
    return GroupCtx(degree, elements)


def mul(ctx: GroupCtx, i: int, j: int) -> int:
    return ctx.index[compose(ctx.elements[i], ctx.elements[j])]


def inv(ctx: GroupCtx, i: int) -> int:
    return ctx.inverses()[i]


def closure_bfs(degree: int, gens: list[Perm], cap: int) -> list[Perm]:
    """Breadth-first closure from the identity, right-multiplying by gens.

    Every BFS level is sorted lexicographically by image tuple, which pins
    the canonical element order.  Raises ValueError when the closure grows
    past ``cap``.
    """
    e = identity(degree)
    seen = {e}
    out = [e]
    level = [e]
    while level:
        nxt = set()
        for x in level:
            for g in gens:
                y = compose(x, g)
                if y not in seen and y not in nxt:
                    nxt.add(y)
        if not nxt:
            break
        if len(out) + len(nxt) > cap:
            raise ValueError("group closure exceeds enumeration cap %d" % cap)
        level = sorted(nxt)
        seen.update(level)
        out.extend(level)
    return out


def subgroup_closure(ctx: GroupCtx, gen_ids: list[int]) -> list[int]:
    """Member ids (ascending) of the subgroup generated by the given ids."""
    elements, index = ctx.elements, ctx.index
    gens = [elements[i] for i in gen_ids]
    seen = {0}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                j = index[y]
                if j not in seen:
                    seen.add(j)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def conj_orbit_ids(ctx: GroupCtx, gen_ids: list[int]) -> list[int]:
    """Conjugation-orbit id for every element, orbits numbered by first rep.

    Scans elements in canonical order; each unseen element starts the next
    orbit, closed under conjugation by the given generator ids.
    """
    elements, index = ctx.elements, ctx.index
    n = len(elements)
    gens = [(elements[i], inverse(elements[i])) for i in gen_ids]
    orbit = [-1] * n
    next_id = 0
    for start in range(n):
        if orbit[start] >= 0:
            continue
        orbit[start] = next_id
        frontier = [elements[start]]
        while frontier:
            nxt = []
            for x in frontier:
                for g, ginv in gens:
                    y = compose(compose(ginv, x), g)
                    j = index[y]
                    if orbit[j] < 0:
                        orbit[j] = next_id
                        nxt.append(y)
            frontier = nxt
        next_id += 1
    return orbit


def normalizer_ids(ctx: GroupCtx, member_ids: set[int], gen_ids: list[int]) -> list[int]:
    """Ids of all g with h^g inside the member set for every generator h."""
    elements, index = ctx.elements, ctx.index
    gens = [elements[i] for i in gen_ids]
    out = []
    for gid, g in enumerate(elements):
        ginv = inverse(g)
        for h in gens:
            if index[compose(compose(ginv, h), g)] not in member_ids:
                break
        else:
            out.append(gid)
    return out


def centralizer_ids(ctx: GroupCtx, gid: int) -> list[int]:
    """Ids of all elements commuting with element ``gid``."""
    elements, index = ctx.elements, ctx.index
    g = elements[gid]
    out = []
    for xid, x in enumerate(elements):
        if compose(x, g) == compose(g, x):
            out.append(xid)
    return out


def class_matrix(
    ctx: GroupCtx, class_of: list[int], members_i: list[int], rep_ids: list[int]
) -> list[list[int]]:
    """Class-algebra structure constants for one class.

    Returns the r x r matrix A with A[j][k] = #{x in C_i : x^-1 * z_k in C_j},
    i.e. the matrix of multiplication by the class sum of C_i acting on class
    sums, whose common eigenvectors drive the character table computation.
    """
    elements, index = ctx.elements, ctx.index
    r = len(rep_ids)
    rows = [[0] * r for _ in range(r)]
    inv_members = [inverse(elements[x]) for x in members_i]
    for k, zk in enumerate(rep_ids):
        z = elements[zk]
        for xinv in inv_members:
            j = class_of[index[compose(xinv, z)]]
            rows[j][k] += 1
    return rows
