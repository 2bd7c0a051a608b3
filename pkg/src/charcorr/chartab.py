"""Exact character tables and class-function operations.

Tables are computed by the standard two-phase scheme: common eigenvectors of
the class-algebra matrices over a prime field F_q (q = 1 mod exp(G), large
enough that degrees and multiplicities lift uniquely), then exact character
values recovered per class by counting root-of-unity multiplicities through
a discrete Fourier sum over powers of the class representative.  Both
orthogonality relations are verified exactly at construction time.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from . import perm as pm
from .cyclotomic import Cyc, dixon_prime, primitive_root, render_cyc, root_of_unity
from .fq import PrimeField, eigenvalues, nullspace, rref
from .groups import ConjClasses, PermGroup, Subgroup, conjugacy_classes, is_normal


class NotACharacterError(ValueError):
    """Decomposition asked of a class function that is not a character."""


class ClassFunction:
    """A Cyc-valued function on the conjugacy classes of a fixed group."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values):
        self.values = tuple(values)
        self.group = group
        assert len(self.values) == conjugacy_classes(group).count

    @property
    def degree(self) -> Cyc:
        return self.values[0]

    def degree_int(self) -> int:
        d = self.values[0].as_fraction()
        assert d.denominator == 1
        return d.numerator

    def __add__(self, other):
        assert self.group is other.group
        return ClassFunction(self.group, (a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        assert self.group is other.group
        return ClassFunction(self.group, (a - b for a, b in zip(self.values, other.values)))

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and other.group is self.group
            and other.values == self.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        vals = ", ".join(render_cyc(v) for v in self.values)
        return f"ClassFunction({self.group.name}; {vals})"


class FusionMap:
    """Class fusion from a subgroup view into its parent group."""

    __slots__ = ("subgroup", "class_map")

    def __init__(self, subgroup: Subgroup, class_map):
        self.subgroup = subgroup
        self.class_map = tuple(class_map)


class CharacterTable:
    """Exact irreducible characters in canonical order.

    Rows are sorted by (degree, lexicographic value sequence), with the value
    order pinned so the trivial character is always row 0.
    """

    def __init__(self, group: PermGroup, classes: ConjClasses, rows):
        self.group = group
        self.classes = classes
        self.rows: tuple[ClassFunction, ...] = tuple(rows)
        self.degrees = tuple(r.degree_int() for r in self.rows)

    @property
    def count(self) -> int:
        return len(self.rows)

    def linear_indices(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == 1)

    def index_of(self, f: ClassFunction) -> int:
        assert f.group is self.group
        for i, row in enumerate(self.rows):
            if row.values == f.values:
                return i
        for i, row in enumerate(self.rows):  # conductor-insensitive fallback
            if all(a == b for a, b in zip(row.values, f.values)):
                return i
        raise ValueError("class function is not a row of this table")

    def to_dict(self) -> dict:
        cls = self.classes
        return {
            "group": self.group.name,
            "order": self.group.order,
            "degree": self.group.degree,
            "class_sizes": list(cls.sizes),
            "class_orders": [cls.rep_order(i) for i in range(cls.count)],
            "class_reps": [pm.cycle_string(cls.rep(i)) for i in range(cls.count)],
            "degrees": list(self.degrees),
            "irreducibles": [[render_cyc(v) for v in row.values] for row in self.rows],
        }

    def render_text(self) -> str:
        cls = self.classes
        head = [
            ["class"] + [str(i) for i in range(cls.count)],
            ["size"] + [str(s) for s in cls.sizes],
            ["order"] + [str(cls.rep_order(i)) for i in range(cls.count)],
            ["rep"] + [pm.cycle_string(cls.rep(i)) for i in range(cls.count)],
        ]
        body = [
            [f"chi.{i}"] + [render_cyc(v) for v in row.values]
            for i, row in enumerate(self.rows)
        ]
        grid = head + body
        widths = [max(len(r[c]) for r in grid) for c in range(cls.count + 1)]
        lines = [f"group {self.group.name}  order {self.group.order}  classes {cls.count}"]
        for r in grid:
            lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
        return "\n".join(lines) + "\n"


# -- table construction -----------------------------------------------------------


def character_table(G: PermGroup) -> CharacterTable:
    if G._char_table is None:
        G._char_table = _dixon_schneider(G)
    return G._char_table


def _dixon_schneider(G: PermGroup) -> CharacterTable:
    classes = conjugacy_classes(G)
    r = classes.count
    n = G.order
    q = dixon_prime(G.exponent, n)
    field = PrimeField(q)
    mats = [
        G._impl.class_matrix(G.ctx, list(classes.class_of_id), list(classes.members_ids[i]), list(classes.rep_ids))
        for i in range(r)
    ]
    vectors = _common_eigenvectors(mats, q)
    assert len(vectors) == r
    inv_sizes = [field.inv(s) for s in classes.sizes]
    w0 = primitive_root(q)
    rows = []
    for vec, pivot in vectors:
        omega = _central_character(mats, vec, pivot, q)
        t = sum(omega[i] * omega[classes.inverse_class(i)] * inv_sizes[i] for i in range(r)) % q
        d2 = (n * field.inv(t)) % q
        d = next(k for k in range(1, isqrt(n) + 1) if (k * k) % q == d2)
        fq_values = [(d * omega[i] * inv_sizes[i]) % q for i in range(r)]
        values = [_lift_value(classes, i, fq_values, d, w0, field) for i in range(r)]
        rows.append(ClassFunction(G, values))
    rows.sort(key=lambda f: (f.degree_int(), tuple(v.sort_key() for v in f.values)))
    table = CharacterTable(G, classes, rows)
    _verify_table(table)
    return table


def _common_eigenvectors(mats, q):
    """Split F_q^r into common 1-dim eigenspaces of the class matrices.

    Spaces are row bases in reduced row echelon form; matrices are applied in
    canonical class order and eigen-subspaces ordered by ascending eigenvalue,
    so the output is deterministic.
    """
    r = len(mats)
    identity = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    spaces = [(identity, list(range(r)))]
    for mat in mats[1:]:
        if all(len(basis) == 1 for basis, _ in spaces):
            break
        nxt = []
        for basis, pivots in spaces:
            dim = len(basis)
            if dim == 1:
                nxt.append((basis, pivots))
                continue
            images = [
                [sum(mat[j][k] * b[k] for k in range(r)) % q for j in range(r)] for b in basis
            ]
            # images[j] = mat * basis[j]; T expresses that in the basis, so a
            # coordinate row c transforms as c -> c*T and eigen-coordinates
            # are nullspace vectors of (T^t - lambda).
            T = [[images[j][p] for p in pivots] for j in range(dim)]
            for j in range(dim):  # invariance check: image must lie in the space
                recon = [sum(T[j][l] * basis[l][c] for l in range(dim)) % q for c in range(r)]
                if recon != images[j]:
                    raise RuntimeError("class-matrix eigenspace is not invariant")
            Tt = [[T[b][a] for b in range(dim)] for a in range(dim)]
            covered = 0
            for lam in eigenvalues(Tt, q):
                shifted = [
                    [(Tt[a][b] - (lam if a == b else 0)) % q for b in range(dim)]
                    for a in range(dim)
                ]
                vecs = [
                    [sum(c[l] * basis[l][col] for l in range(dim)) % q for col in range(r)]
                    for c in nullspace(shifted, q)
                ]
                if vecs:
                    rows, pivs = rref(vecs, q)
                    covered += len(rows)
                    nxt.append((rows, pivs))
            if covered != dim:
                raise RuntimeError("eigenspace splitting lost dimensions")
        spaces = nxt
    for basis, _ in spaces:
        if len(basis) != 1:
            raise RuntimeError("eigenspace splitting failed to reach dimension 1")
    return [(basis[0], pivots[0]) for basis, pivots in spaces]


def _central_character(mats, vec, pivot, q):
    """Eigenvalue of each class matrix on the common eigenvector."""
    r = len(mats)
    inv_p = pow(vec[pivot], q - 2, q)
    out = []
    for mat in mats:
        img = sum(mat[pivot][k] * vec[k] for k in range(r)) % q
        out.append((img * inv_p) % q)
    return out


def _lift_value(classes, i, fq_values, degree, w0, field):
    """Exact value at class i from the F_q row, by root-of-unity counting."""
    q = field.q
    m = classes.rep_order(i)
    if m == 1:
        return Cyc.rational(degree)
    wm = pow(w0, (q - 1) // m, q)
    inv_m = field.inv(m)
    counts = []
    for k in range(m):
        s = sum(fq_values[classes.power_class(i, j)] * pow(wm, (-j * k) % m, q) for j in range(m))
        counts.append((s * inv_m) % q)
    if sum(counts) != degree:
        raise RuntimeError("root-of-unity multiplicities do not add up to the degree")
    value = Cyc.rational(counts[0])
    for k in range(1, m):
        if counts[k]:
            value = value + counts[k] * root_of_unity(m, k)
    return value


def _verify_table(table: CharacterTable) -> None:
    """Every table must pass both orthogonality relations exactly, or die."""
    G, cls = table.group, table.classes
    n, r = G.order, cls.count
    if len(table.rows) != r or sum(d * d for d in table.degrees) != n:
        raise RuntimeError(f"{G.name}: degree squares do not sum to the group order")
    if not all(v == 1 for v in table.rows[0].values):
        raise RuntimeError(f"{G.name}: first irreducible is not the trivial character")
    conj_rows = [[v.conj() for v in row.values] for row in table.rows]
    one, zero = Cyc.one(), Cyc.zero()
    inv_n = Fraction(1, n)
    for a in range(r):
        for b in range(a, r):
            acc = zero
            for i in range(r):
                acc = acc + cls.sizes[i] * (table.rows[a].values[i] * conj_rows[b][i])
            acc = inv_n * acc
            if acc != (one if a == b else zero):
                raise RuntimeError(f"{G.name}: first orthogonality fails at rows {a},{b}")
    for i in range(r):
        for j in range(i, r):
            acc = zero
            for x in range(r):
                acc = acc + table.rows[x].values[i] * conj_rows[x][j]
            expected = Cyc.rational(Fraction(n, cls.sizes[i])) if i == j else zero
            if acc != expected:
                raise RuntimeError(f"{G.name}: second orthogonality fails at classes {i},{j}")


# -- class-function operations ------------------------------------------------------


def fusion_map(H: Subgroup) -> FusionMap:
    """Map each class of the subgroup view to its parent class (cached)."""
    if H._fusion is None:
        parent_classes = conjugacy_classes(H.parent)
        view_classes = conjugacy_classes(H.view)
        cmap = [parent_classes.class_of_perm(view_classes.rep(i)) for i in range(view_classes.count)]
        H._fusion = FusionMap(H, cmap)
    return H._fusion


def restrict(chi: ClassFunction, H: Subgroup, fusion: FusionMap | None = None) -> ClassFunction:
    """Restriction to a subgroup, read through the fusion map."""
    assert chi.group is H.parent
    fusion = fusion or fusion_map(H)
    return ClassFunction(H.view, (chi.values[c] for c in fusion.class_map))


def induce(theta: ClassFunction, H: Subgroup) -> ClassFunction:
    """Induced class function on the parent group (standard formula)."""
    G = H.parent
    view = H.view
    assert theta.group is view
    view_classes = conjugacy_classes(view)
    parent_classes = conjugacy_classes(G)
    theta_at = {}
    for pid in H.sorted_ids:
        p = G.elements[pid]
        theta_at[pid] = theta.values[view_classes.class_of_perm(p)]
    scale = Fraction(1, H.order)
    values = []
    for k in range(parent_classes.count):
        z = parent_classes.rep_ids[k]
        acc = Cyc.zero()
        for x in range(G.order):
            u = G.mul(G.mul(x, z), G.inv(x))
            got = theta_at.get(u)
            if got is not None:
                acc = acc + got
        values.append(scale * acc)
    return ClassFunction(G, values)


def mul_classfn(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    assert a.group is b.group
    return ClassFunction(a.group, (x * y for x, y in zip(a.values, b.values)))


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyc:
    """(1/|G|) sum over classes of size * a * conj(b); exact."""
    if a.group is not b.group:
        raise ValueError("inner product of class functions on different groups")
    cls = conjugacy_classes(a.group)
    acc = Cyc.zero()
    for s, x, y in zip(cls.sizes, a.values, b.values):
        acc = acc + s * (x * y.conj())
    return Fraction(1, a.group.order) * acc


def inner_product_int(a: ClassFunction, b: ClassFunction) -> int:
    v = inner_product(a, b)
    if not v.is_rational or v.as_fraction().denominator != 1:
        raise NotACharacterError(f"inner product {render_cyc(v)} is not a rational integer")
    return v.as_fraction().numerator


def constituents(f: ClassFunction) -> list[tuple[int, int]]:
    """(row index, multiplicity) pairs; errors unless f is a genuine character."""
    table = character_table(f.group)
    out = []
    for i, row in enumerate(table.rows):
        v = inner_product(f, row)
        if not v.is_rational or v.as_fraction().denominator != 1 or v.as_fraction() < 0:
            raise NotACharacterError(
                f"multiplicity of row {i} is {render_cyc(v)}; not a character"
            )
        m = v.as_fraction().numerator
        if m:
            out.append((i, m))
    recon = None
    for i, m in out:
        term = ClassFunction(f.group, (m * v for v in table.rows[i].values))
        recon = term if recon is None else recon + term
    if recon is None:
        recon = ClassFunction(f.group, (Cyc.zero() for _ in f.values))
    if recon.values != f.values and recon != f:
        raise NotACharacterError("class function is not an integer combination of irreducibles")
    return out


def lying_over(table: CharacterTable, N: Subgroup, theta: ClassFunction) -> list[int]:
    """Indices of irreducibles chi with <chi_N, theta> != 0 (N normal)."""
    assert is_normal(table.group, N)
    out = []
    for i, row in enumerate(table.rows):
        if inner_product_int(restrict(row, N), theta):
            out.append(i)
    return out


def constituents_over(f: ClassFunction, N: Subgroup, theta: ClassFunction) -> list[int]:
    """Constituent rows of f that lie over theta on the normal subgroup N."""
    assert N.parent is f.group
    assert is_normal(f.group, N)
    table = character_table(f.group)
    out = []
    for i, _ in constituents(f):
        if inner_product_int(restrict(table.rows[i], N), theta):
            out.append(i)
    return out


def conjugate_classfn(theta: ClassFunction, N: Subgroup, g: pm.Perm) -> ClassFunction:
    """theta^g on the same view: (theta^g)(x) = theta(g x g^-1)."""
    view = N.view
    assert theta.group is view
    cls = conjugacy_classes(view)
    ginv = pm.inverse(g)
    values = []
    for c in range(cls.count):
        t = pm.conjugate(cls.rep(c), ginv)  # g * rep * g^-1
        values.append(theta.values[cls.class_of_perm(t)])
    return ClassFunction(view, values)


def is_invariant_under(theta: ClassFunction, N: Subgroup, S: Subgroup) -> bool:
    """True if theta^g = theta for every g in S (checked on generators of S)."""
    G = N.parent
    assert S.parent is G
    _, gen_ids = G.pruned_closure_ids(sorted(S.sorted_ids, key=lambda i: G.elements[i]))
    return all(
        conjugate_classfn(theta, N, G.elements[g]).values == theta.values for g in gen_ids
    )


def orbit_and_stabilizer(
    theta: ClassFunction, N: Subgroup, actors: Subgroup | None = None
) -> tuple[tuple[ClassFunction, ...], Subgroup]:
    """Orbit of theta under conjugation and its stabilizer inside ``actors``.

    ``actors`` defaults to the full parent group of N (which must contain N
    as a normal subgroup so conjugation is well defined on Irr(N)).
    """
    G = N.parent
    if actors is None:
        actors = G.full_subgroup()
    assert actors.parent is G
    _, gen_ids = G.pruned_closure_ids(sorted(actors.sorted_ids, key=lambda i: G.elements[i]))
    orbit = [theta]
    seen = {theta.values}
    frontier = [theta]
    while frontier:
        nxt = []
        for f in frontier:
            for gid in gen_ids:
                t = conjugate_classfn(f, N, G.elements[gid])
                if t.values not in seen:
                    seen.add(t.values)
                    orbit.append(t)
                    nxt.append(t)
        frontier = nxt
    stab = [
        gid
        for gid in actors.sorted_ids
        if conjugate_classfn(theta, N, G.elements[gid]).values == theta.values
    ]
    return tuple(orbit), G.subgroup_from_ids(stab)


def p_prime_irreducibles(table: CharacterTable, p: int) -> tuple[int, ...]:
    """Row indices of irreducibles whose degree is coprime to p."""
    return tuple(i for i, d in enumerate(table.degrees) if d % p != 0)


def galois_classfn(f: ClassFunction, k: int) -> ClassFunction:
    """Apply the Galois map zeta -> zeta^k to every value."""
    return ClassFunction(f.group, (v.galois(k) for v in f.values))
