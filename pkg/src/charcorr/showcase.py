"""The order-648 showcase group and the shipped verification corpus.

G = K : H on 27 points, where K is the Heisenberg group of upper
unitriangular 3x3 matrices over F_3 (extraspecial of order 27, exponent 3)
acting on itself by right translation, and H = SL(2,3) acts by the
automorphisms fixing the center pointwise and acting symplectically on K/Z.
With P a Sylow 2-subgroup of H, the Sylow normalizer is L x H of order 72,
strictly larger than P, so this instance sits outside the coincidence
theorem's hypotheses: its correspondence is defined through a degree-3
product relation instead, and the matched linear targets are provably NOT
constituents of the restrictions.  Every numeric claim about this group is
verified here, not assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import perm as pm
from .chartab import (
    ClassFunction,
    character_table,
    constituents,
    induce,
    inner_product_int,
    lying_over,
    mul_classfn,
    orbit_and_stabilizer,
    restrict,
)
from .cyclotomic import render_cyc, sqrt_minus3
from .groups import (
    DEFAULT_CAP,
    PermGroup,
    Subgroup,
    centralizer_of_subgroup,
    derived_subgroup,
    fixed_points_on_cosets,
    load_group,
    normalizer,
    sylow,
)
from .mckay import FalsificationError


class ConstructionError(RuntimeError):
    """A showcase build-time invariant failed (a bug, not a falsification)."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConstructionError(message)


# -- the 27-point realization -------------------------------------------------------


def _heis_elements() -> list[tuple[int, int, int]]:
    """Triples (a, b, c) <-> unitriangular [[1,a,c],[0,1,b],[0,0,1]] over F_3."""
    return [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]


def _heis_mul(x, y):
    return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3, (x[2] + y[2] + x[0] * y[1]) % 3)


def _point_index(x) -> int:
    return 9 * x[0] + 3 * x[1] + x[2]


def _translation(k) -> tuple[int, ...]:
    pts = _heis_elements()
    return tuple(_point_index(_heis_mul(x, k)) for x in pts)


def _symplectic_auto(m) -> tuple[int, ...]:
    """Automorphism of K fixing the center, inducing the matrix m on K/Z.

    For (a', b') = m(a, b), the map (a, b, c) -> (a', b', c + (a'b' - ab)/2)
    is a group automorphism whenever det(m) = 1: the correction is the
    quadratic form whose polarization cancels the cocycle mismatch, and the
    halving is multiplication by 2 in F_3.
    """
    pts = _heis_elements()
    out = []
    for a, b, c in pts:
        a2 = (m[0][0] * a + m[0][1] * b) % 3
        b2 = (m[1][0] * a + m[1][1] * b) % 3
        c2 = (c + 2 * (a2 * b2 - a * b)) % 3
        out.append(_point_index((a2, b2, c2)))
    return tuple(out)


def remark_generators() -> list[tuple[int, ...]]:
    """Degree-27 generators: two translations and the two SL(2,3) automorphisms."""
    t1 = _translation((1, 0, 0))
    t2 = _translation((0, 1, 0))
    s = _symplectic_auto(((0, -1), (1, 0)))  # order 4
    t = _symplectic_auto(((1, 1), (0, 1)))  # order 3
    return [t1, t2, s, t]


# -- showcase data -------------------------------------------------------------------


@dataclass
class RemarkData:
    """Progressively filled record of the order-648 verification."""

    G: PermGroup
    K: Subgroup
    L: Subgroup
    H: Subgroup
    P: Subgroup
    N: Subgroup
    theta_index: int | None = None
    theta: ClassFunction | None = None
    phi_index: int | None = None
    phi: ClassFunction | None = None
    e: int | None = None
    psi_alpha: int | None = None
    psi_beta: int | None = None
    psi_h: ClassFunction | None = None
    psi_n: ClassFunction | None = None
    pairs: tuple[tuple[int, int], ...] = ()
    viable: tuple[dict, ...] = ()
    non_constituent: tuple[dict, ...] = ()


def build_remark_group(cap: int = DEFAULT_CAP) -> RemarkData:
    """Construct the group and named subgroups; assert every invariant."""
    gens = remark_generators()
    G = PermGroup.from_generators(27, gens, name="Remark648", cap=cap)
    _require(G.order == 648, f"|G| = {G.order}, expected 648")
    translations = [_translation(k) for k in _heis_elements()]
    K = G.subgroup(translations)
    _require(K.order == 27, "K should have order 27")
    L = G.subgroup(_translation((0, 0, c)) for c in range(3))
    _require(L.order == 3, "L should have order 3")
    h_members, _ = G.pruned_closure_ids(sorted([G.id_of(gens[2]), G.id_of(gens[3])]))
    H = G.subgroup_from_ids(h_members)
    _require(H.order == 24, f"|H| = {H.order}, expected 24")
    p_in_h = sylow(H.view, 2)
    P = G.subgroup(p_in_h.members())
    _require(P.order == 8, "P should have order 8")
    N = normalizer(G, P)
    _require(N.order == 72, f"|N_G(P)| = {N.order}, expected 72")

    # N = L x H as an internal direct product
    from .groups import intersection, product_subgroup

    _require(product_subgroup(L, H).member_ids == N.member_ids, "N != L*H")
    _require(intersection(L, H).order == 1, "L and H intersect nontrivially")
    for zid in L.sorted_ids:
        for hid in H.sorted_ids:
            _require(G.mul(zid, hid) == G.mul(hid, zid), "L and H do not commute")

    # K extraspecial of exponent 3: Z(K) = K' = L, every non-identity order 3
    kv = K.view
    center = centralizer_of_subgroup(kv, kv.full_subgroup())
    _require(center.order == 3, "Z(K) should have order 3")
    _require(
        frozenset(center.members()) == frozenset(L.members()), "Z(K) != L"
    )
    _require(
        derived_subgroup(K).member_ids == L.member_ids, "K' != L"
    )
    _require(
        all(G.element_order(i) == 3 for i in K.sorted_ids if i != 0),
        "K is not exponent 3",
    )

    # coprime fixed points: C_{K/L}(x) = 1 for every non-identity x in P
    for xid in P.sorted_ids:
        if xid == 0:
            continue
        cyc_ids, _ = G.pruned_closure_ids([xid])
        fixed = fixed_points_on_cosets(G.subgroup_from_ids(cyc_ids), K, L)
        _require(fixed == 1, f"C_(K/L)(x) != 1 for x of order {G.element_order(xid)}")

    return RemarkData(G=G, K=K, L=L, H=H, P=P, N=N)


def verify_fully_ramified(data: RemarkData) -> int:
    """theta^K = e*phi and phi_L = e*theta for a single phi; returns e."""
    l_table = character_table(data.L.view)
    _require(l_table.degrees == (1, 1, 1), "Irr(L) should be three linears")
    theta = l_table.rows[1]  # canonical first nontrivial character of L
    _, stab = orbit_and_stabilizer(theta, data.L)
    if stab.order != data.G.order:
        raise FalsificationError("theta is not G-invariant", stabilizer=stab.order)
    l_in_k = data.K.view.subgroup(data.L.members())
    induced = induce(theta, l_in_k)
    parts = constituents(induced)
    if len(parts) != 1:
        raise FalsificationError(
            "theta^K is not a multiple of a single irreducible",
            constituents=parts,
        )
    phi_index, e = parts[0]
    k_table = character_table(data.K.view)
    phi = k_table.rows[phi_index]
    back = restrict(phi, l_in_k)
    if any(bv != e * tv for bv, tv in zip(back.values, theta.values)):
        raise FalsificationError("phi restricted to L is not e*theta", e=e)
    if e * e != data.K.order // data.L.order:
        raise FalsificationError("ramification index does not square to |K:L|", e=e)
    data.theta_index, data.theta = 1, theta
    data.phi_index, data.phi = phi_index, phi
    data.e = e
    return e


def inflate_from_direct_factor(data: RemarkData, f: ClassFunction) -> ClassFunction:
    """Lift a class function of H to N = L x H through the projection N -> H."""
    G = data.G
    n_view = data.N.view
    h_view = data.H.view
    from .groups import conjugacy_classes

    n_classes = conjugacy_classes(n_view)
    h_classes = conjugacy_classes(h_view)
    l_members = data.L.members()
    h_set = set(data.H.members())
    values = []
    for c in range(n_classes.count):
        t = n_classes.rep(c)
        for z in l_members:
            h = pm.compose(pm.inverse(z), t)
            if h in h_set:
                values.append(f.values[h_classes.class_of_perm(h)])
                break
        else:
            raise ConstructionError("N element does not factor as z*h")
    return ClassFunction(n_view, values)


def recover_psi(data: RemarkData) -> tuple[dict, ...]:
    """Search for the degree-3 product-relation character.

    Candidates are alpha + beta over the linear characters alpha and the
    degree-2 irreducibles beta of H.  A candidate is viable when the relation
    chi_N = psi_N * xi matches the odd-degree members of Irr(G|phi) and of
    Irr(N|theta) bijectively.  Viable candidates are then screened against
    the expected value pattern (-1 on order 2, +1 on order 4, +-sqrt(-3) on
    order 3, faithful); at least one must survive.
    """
    _require(data.phi is not None, "run verify_fully_ramified first")
    G = data.G
    g_table = character_table(G)
    n_view = data.N.view
    n_table = character_table(n_view)
    h_table = character_table(data.H.view)
    from .groups import conjugacy_classes

    h_classes = conjugacy_classes(data.H.view)
    n_in_g = data.N

    odd_chis = [
        i
        for i in lying_over(g_table, data.K, data.phi)
        if g_table.degrees[i] % 2 == 1
    ]
    l_in_n = n_view.subgroup(data.L.members())
    odd_xis = [
        i
        for i in lying_over(n_table, l_in_n, data.theta)
        if n_table.degrees[i] % 2 == 1
    ]
    _require(len(odd_chis) == 4 and len(odd_xis) == 4, "expected 4 odd characters on each side")

    chi_restrictions = {i: restrict(g_table.rows[i], n_in_g) for i in odd_chis}
    linears = [i for i, d in enumerate(h_table.degrees) if d == 1]
    deg2 = [i for i, d in enumerate(h_table.degrees) if d == 2]
    _require(len(linears) == 3 and len(deg2) == 3, "H should have 3 linear and 3 degree-2 rows")

    root = sqrt_minus3()
    candidates = []
    for a in linears:
        for b in deg2:
            psi_h = h_table.rows[a] + h_table.rows[b]
            psi_n = inflate_from_direct_factor(data, psi_h)
            matches = {}
            for ci in odd_chis:
                hits = [
                    xi
                    for xi in odd_xis
                    if chi_restrictions[ci].values == mul_classfn(psi_n, n_table.rows[xi]).values
                ]
                matches[ci] = hits
            viable = (
                all(len(h) == 1 for h in matches.values())
                and len({h[0] for h in matches.values()}) == len(odd_xis)
            )
            order2_ok = all(
                psi_h.values[c] == -1
                for c in range(h_classes.count)
                if h_classes.rep_order(c) == 2
            )
            order4_ok = all(
                psi_h.values[c] == 1
                for c in range(h_classes.count)
                if h_classes.rep_order(c) == 4
            )
            order3_ok = all(
                psi_h.values[c] == root or psi_h.values[c] == -root
                for c in range(h_classes.count)
                if h_classes.rep_order(c) == 3
            )
            faithful = all(
                psi_h.values[c] != 3 for c in range(1, h_classes.count)
            )
            candidates.append(
                {
                    "alpha": a,
                    "beta": b,
                    "alpha_trivial": a == 0,
                    "viable": viable,
                    "pairs": sorted((ci, matches[ci][0]) for ci in matches) if viable else [],
                    "degree": psi_h.degree_int(),
                    "order2_ok": order2_ok,
                    "order4_ok": order4_ok,
                    "order3_ok": order3_ok,
                    "faithful": faithful,
                    "values_ok": order2_ok and order4_ok and order3_ok and faithful,
                    "_psi_h": psi_h,
                    "_psi_n": psi_n,
                }
            )
    viable = [c for c in candidates if c["viable"]]
    good = [c for c in viable if c["values_ok"]]
    if not good:
        raise FalsificationError(
            "no viable candidate matches the expected value pattern",
            viable=[(c["alpha"], c["beta"]) for c in viable],
        )
    chosen = good[0]
    data.psi_alpha, data.psi_beta = chosen["alpha"], chosen["beta"]
    data.psi_h, data.psi_n = chosen["_psi_h"], chosen["_psi_n"]
    data.pairs = tuple(chosen["pairs"])
    data.viable = tuple(
        {k: v for k, v in c.items() if not k.startswith("_")} for c in viable
    )
    return data.viable


def verify_non_constituent(data: RemarkData) -> tuple[dict, ...]:
    """<chi_N, xi> for every matched pair; must vanish whenever xi is linear."""
    _require(bool(data.pairs), "run recover_psi first")
    g_table = character_table(data.G)
    n_table = character_table(data.N.view)
    records = []
    for ci, xi in data.pairs:
        chi_n = restrict(g_table.rows[ci], data.N)
        ip = inner_product_int(chi_n, n_table.rows[xi])
        norm = inner_product_int(chi_n, chi_n)
        if norm < 1:
            raise FalsificationError("restriction has non-positive norm", chi=ci)
        xi_degree = n_table.degrees[xi]
        if xi_degree == 1 and ip != 0:
            raise FalsificationError(
                "linear correspondence target IS a constituent of the restriction",
                chi=ci,
                xi=xi,
                inner=ip,
            )
        records.append(
            {
                "chi": ci,
                "chi_degree": g_table.degrees[ci],
                "xi": xi,
                "xi_degree": xi_degree,
                "inner_product": ip,
                "asserted_zero": xi_degree == 1,
            }
        )
    data.non_constituent = tuple(records)
    return data.non_constituent


@lru_cache(maxsize=None)
def remark_data(cap: int = DEFAULT_CAP) -> RemarkData:
    """Full showcase pipeline, computed once per process."""
    data = build_remark_group(cap=cap)
    verify_fully_ramified(data)
    recover_psi(data)
    verify_non_constituent(data)
    return data


def remark_report(cap: int = DEFAULT_CAP) -> dict:
    data = remark_data(cap=cap)
    from .groups import conjugacy_classes

    h_classes = conjugacy_classes(data.H.view)
    by_order: dict[str, list[str]] = {}
    for c in range(h_classes.count):
        by_order.setdefault(str(h_classes.rep_order(c)), []).append(
            render_cyc(data.psi_h.values[c])
        )
    candidates = []
    for c in data.viable:
        c = dict(sorted(c.items()))
        c["pairs"] = [list(p) for p in c["pairs"]]
        candidates.append(c)
    return {
        "group": data.G.name,
        "orders": {
            "G": data.G.order,
            "K": data.K.order,
            "L": data.L.order,
            "H": data.H.order,
            "P": data.P.order,
            "N": data.N.order,
        },
        "fully_ramified": {
            "theta": data.theta_index,
            "e": data.e,
            "phi": data.phi_index,
            "phi_degree": data.phi.degree_int(),
        },
        "psi": {
            "alpha": data.psi_alpha,
            "beta": data.psi_beta,
            "degree": data.psi_h.degree_int(),
            "values_by_class_order": {k: sorted(set(v)) for k, v in by_order.items()},
            "values": [render_cyc(v) for v in data.psi_h.values],
        },
        "viable_candidates": candidates,
        "pairs": [list(p) for p in data.pairs],
        "non_constituent": [dict(sorted(r.items())) for r in data.non_constituent],
    }


# -- the corpus -----------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    prime: int
    expect: str  # "theorem" | "hypothesis-fail" | "showcase"


def corpus() -> tuple[CorpusEntry, ...]:
    """The shipped verification targets, in canonical run order."""
    return (
        CorpusEntry("s3", 2, "theorem"),
        CorpusEntry("c3xc2", 2, "theorem"),
        CorpusEntry("s4", 2, "theorem"),
        CorpusEntry("d8", 2, "theorem"),
        CorpusEntry("f21", 3, "theorem"),
        CorpusEntry("c5c5_c3", 3, "theorem"),
        CorpusEntry("c7", 7, "theorem"),
        CorpusEntry("sl23", 3, "hypothesis-fail"),
        CorpusEntry("f21", 7, "hypothesis-fail"),
        CorpusEntry("remark648", 2, "showcase"),
    )


def corpus_dir():
    return resources.files("charcorr") / "corpus"


def corpus_path(name: str) -> str:
    return str(corpus_dir() / f"{name}.json")


@lru_cache(maxsize=None)
def load_corpus_group(name: str, cap: int = DEFAULT_CAP) -> PermGroup:
    return load_group(corpus_path(name), cap=cap)


def write_corpus_files(directory) -> None:
    """Regenerate the shipped corpus files (used at development time)."""
    import os

    specs = {
        "s3": {"name": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]},
        "c3xc2": {"name": "C3:C2", "degree": 3, "generators": [[0, 2, 1], [1, 2, 0]]},
        "s4": {"name": "S4", "degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]]},
        "d8": {"name": "D8", "degree": 4, "generators": [[1, 2, 3, 0], [2, 1, 0, 3]]},
        "c7": {"name": "C7", "degree": 7, "generators": [[1, 2, 3, 4, 5, 6, 0]]},
        "f21": {
            "name": "F21",
            "degree": 7,
            "generators": [[1, 2, 3, 4, 5, 6, 0], [0, 2, 4, 6, 1, 3, 5]],
        },
        "c5c5_c3": _c5c5_c3_dict(),
        "sl23": _sl23_dict(),
        "remark648": {
            "name": "Remark648",
            "degree": 27,
            "generators": [list(g) for g in remark_generators()],
        },
    }
    for name, data in specs.items():
        path = os.path.join(directory, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=1)
            fh.write("\n")


def _sl23_dict() -> dict:
    pts = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(pts)}
    s = [idx[((-b) % 3, a % 3)] for (a, b) in pts]
    t = [idx[((a + b) % 3, b)] for (a, b) in pts]
    return {"name": "SL(2,3)", "degree": 8, "generators": [s, t]}


def _c5c5_c3_dict() -> dict:
    pts = [(a, b) for a in range(5) for b in range(5)]
    idx = {v: i for i, v in enumerate(pts)}
    t1 = [idx[((a + 1) % 5, b)] for (a, b) in pts]
    t2 = [idx[(a, (b + 1) % 5)] for (a, b) in pts]
    # order-3 matrix [[0,-1],[1,-1]]: irreducible over F_5, no nonzero fixed vector
    m = [idx[((-b) % 5, (a - b) % 5)] for (a, b) in pts]
    return {"name": "(C5xC5):C3", "degree": 25, "generators": [t1, t2, m]}
