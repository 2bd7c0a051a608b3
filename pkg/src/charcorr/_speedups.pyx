# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled group kernels: byte-encoded permutations, degree <= 255.

Mirrors charcorr.kernels.pure function for function with bit-identical
outputs; charcorr.kernels routes here when the extension is importable and
the degree fits in a byte.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND = "compiled"


cdef class GroupCtx:
    """Element list plus lookup structures for id-level arithmetic."""

    cdef public int degree
    cdef public list elements
    cdef public dict index          # perm tuple -> id (python-visible, like pure)
    cdef bytes flat                 # n * degree contiguous image bytes
    cdef dict bindex                # perm bytes -> id
    cdef list _inv

    def __init__(self, int degree, list elements):
        self.degree = degree
        self.elements = elements
        self.index = {p: i for i, p in enumerate(elements)}
        self.flat = b"".join(bytes(p) for p in elements)
        self.bindex = {bytes(p): i for i, p in enumerate(elements)}
        self._inv = None

    def inverses(self):
        cdef const unsigned char *flat = self.flat
        cdef int deg = self.degree
        cdef int n = len(self.elements)
        cdef unsigned char buf[256]
        cdef int i, x
        if self._inv is None:
            out = []
            for i in range(n):
                for x in range(deg):
                    buf[flat[i * deg + x]] = x
                out.append(self.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)])
            self._inv = out
        return self._inv


def make_ctx(int degree, list elements):
    return GroupCtx(degree, elements)


def mul(GroupCtx ctx, int i, int j):
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef unsigned char buf[256]
    cdef int x
    cdef const unsigned char *a = flat + i * deg
    cdef const unsigned char *b = flat + j * deg
    for x in range(deg):
        buf[x] = b[a[x]]
    return ctx.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)]


def inv(GroupCtx ctx, int i):
    return ctx.inverses()[i]


def closure_bfs(int degree, list gens, int cap):
    """Breadth-first closure from the identity, levels sorted lexicographically.

    Byte-string comparison is unsigned lexicographic, identical to tuple
    comparison of the images, so the canonical order matches the pure lane.
    """
    cdef int x
    cdef bytes e = bytes(range(degree))
    cdef list bgens = [bytes(g) for g in gens]
    cdef set seen = {e}
    cdef list out = [e]
    cdef list level = [e]
    cdef set nxt
    cdef bytes xb, gb, yb
    cdef const unsigned char *xa
    cdef const unsigned char *ga
    cdef unsigned char buf[256]
    while level:
        nxt = set()
        for xb in level:
            xa = xb
            for gb in bgens:
                ga = gb
                for x in range(degree):
                    buf[x] = ga[xa[x]]
                yb = PyBytes_FromStringAndSize(<char *> buf, degree)
                if yb not in seen and yb not in nxt:
                    nxt.add(yb)
        if not nxt:
            break
        if len(out) + len(nxt) > cap:
            raise ValueError("group closure exceeds enumeration cap %d" % cap)
        level = sorted(nxt)
        seen.update(level)
        out.extend(level)
    return [tuple(b) for b in out]


def subgroup_closure(GroupCtx ctx, list gen_ids):
    """Member ids (ascending) of the subgroup generated by the given ids."""
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef int n = len(ctx.elements)
    cdef unsigned char buf[256]
    cdef int x, j, gid
    cdef long xi
    cdef bytearray member = bytearray(n)
    member[0] = 1
    cdef list frontier = [0]
    cdef list nxt
    cdef const unsigned char *xa
    cdef const unsigned char *ga
    while frontier:
        nxt = []
        for xi in frontier:
            xa = flat + xi * deg
            for gid in gen_ids:
                ga = flat + (<long> gid) * deg
                for x in range(deg):
                    buf[x] = ga[xa[x]]
                j = ctx.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)]
                if not member[j]:
                    member[j] = 1
                    nxt.append(j)
        frontier = nxt
    return [j for j in range(n) if member[j]]


def conj_orbit_ids(GroupCtx ctx, list gen_ids):
    """Conjugation-orbit id per element, orbits numbered by first appearance."""
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef int n = len(ctx.elements)
    cdef unsigned char buf[256]
    cdef int x, j, t
    cdef long start, xi
    inv_ids = ctx.inverses()
    cdef list pairs = [(gid, inv_ids[gid]) for gid in gen_ids]
    cdef list orbit = [-1] * n
    cdef int next_id = 0
    cdef list frontier, nxt
    cdef const unsigned char *xa
    cdef const unsigned char *ga
    cdef const unsigned char *gia
    cdef long gid, giid
    for start in range(n):
        if orbit[start] >= 0:
            continue
        orbit[start] = next_id
        frontier = [start]
        while frontier:
            nxt = []
            for xi in frontier:
                xa = flat + xi * deg
                for gid, giid in pairs:
                    ga = flat + gid * deg
                    gia = flat + giid * deg
                    for t in range(deg):
                        buf[t] = ga[xa[gia[t]]]
                    j = ctx.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)]
                    if orbit[j] < 0:
                        orbit[j] = next_id
                        nxt.append(j)
            frontier = nxt
        next_id += 1
    return orbit


def normalizer_ids(GroupCtx ctx, set member_ids, list gen_ids):
    """Ids of all g with h^g inside the member set for every generator h."""
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef int n = len(ctx.elements)
    cdef unsigned char buf[256]
    cdef int t, ok
    cdef long gid, hid
    inv_ids = ctx.inverses()
    cdef list out = []
    cdef const unsigned char *ga
    cdef const unsigned char *gia
    cdef const unsigned char *ha
    for gid in range(n):
        ga = flat + gid * deg
        gia = flat + (<long> inv_ids[gid]) * deg
        ok = 1
        for hid in gen_ids:
            ha = flat + hid * deg
            for t in range(deg):
                buf[t] = ga[ha[gia[t]]]
            if ctx.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)] not in member_ids:
                ok = 0
                break
        if ok:
            out.append(gid)
    return out


def centralizer_ids(GroupCtx ctx, int gid):
    """Ids of all elements commuting with element ``gid``."""
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef int n = len(ctx.elements)
    cdef int t, same
    cdef long xid
    cdef const unsigned char *g = flat + (<long> gid) * deg
    cdef const unsigned char *x
    cdef list out = []
    for xid in range(n):
        x = flat + xid * deg
        same = 1
        for t in range(deg):
            if g[x[t]] != x[g[t]]:
                same = 0
                break
        if same:
            out.append(xid)
    return out


def class_matrix(GroupCtx ctx, list class_of, list members_i, list rep_ids):
    """Class-algebra structure constants A[j][k] = #{x in C_i : x^-1 z_k in C_j}."""
    cdef const unsigned char *flat = ctx.flat
    cdef int deg = ctx.degree
    cdef int r = len(rep_ids)
    cdef unsigned char buf[256]
    cdef int t, j, k
    cdef long zk, xid
    inv_ids = ctx.inverses()
    cdef list inv_members = [inv_ids[x] for x in members_i]
    cdef int *acc = <int *> malloc(r * r * sizeof(int))
    if acc == NULL:
        raise MemoryError()
    cdef const unsigned char *za
    cdef const unsigned char *xa
    try:
        for t in range(r * r):
            acc[t] = 0
        for k in range(r):
            zk = rep_ids[k]
            za = flat + zk * deg
            for xid in inv_members:
                xa = flat + xid * deg
                for t in range(deg):
                    buf[t] = za[xa[t]]
                j = class_of[ctx.bindex[PyBytes_FromStringAndSize(<char *> buf, deg)]]
                acc[j * r + k] += 1
        return [[acc[j * r + k] for k in range(r)] for j in range(r)]
    finally:
        free(acc)
