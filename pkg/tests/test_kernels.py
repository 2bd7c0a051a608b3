"""Pure vs compiled kernel parity: identical outputs on identical inputs."""

import pytest

from charcorr.kernels import pure
from charcorr.showcase import load_corpus_group, remark_generators

compiled = pytest.importorskip("charcorr._speedups")

GROUPS = ["s3", "s4", "d8", "f21", "sl23", "c5c5_c3", "remark648"]


@pytest.fixture(scope="module", params=GROUPS)
def group_data(request):
    G = load_corpus_group(request.param)
    gens = [tuple(g) for g in G.generators]
    return G.degree, gens


def _contexts(degree, gens):
    els = pure.closure_bfs(degree, gens, 20000)
    els_c = compiled.closure_bfs(degree, gens, 20000)
    assert els == els_c
    gen_ids = [els.index(g) for g in gens]
    return pure.make_ctx(degree, els), compiled.make_ctx(degree, els), els, gen_ids


def test_closure_and_arithmetic_parity(group_data):
    degree, gens = group_data
    cp, cc, els, gen_ids = _contexts(degree, gens)
    n = len(els)
    probe = list(range(0, n, max(1, n // 17)))
    for i in probe:
        assert pure.inv(cp, i) == compiled.inv(cc, i)
        for j in probe[:5]:
            assert pure.mul(cp, i, j) == compiled.mul(cc, i, j)


def test_orbit_parity(group_data):
    degree, gens = group_data
    cp, cc, els, gen_ids = _contexts(degree, gens)
    assert pure.conj_orbit_ids(cp, gen_ids) == compiled.conj_orbit_ids(cc, gen_ids)


def test_subgroup_closure_and_normalizer_parity(group_data):
    degree, gens = group_data
    cp, cc, els, gen_ids = _contexts(degree, gens)
    for k in range(1, len(gen_ids) + 1):
        sub_p = pure.subgroup_closure(cp, gen_ids[:k])
        sub_c = compiled.subgroup_closure(cc, gen_ids[:k])
        assert sub_p == sub_c
        assert pure.normalizer_ids(cp, set(sub_p), gen_ids[:k]) == compiled.normalizer_ids(
            cc, set(sub_c), gen_ids[:k]
        )
    assert pure.centralizer_ids(cp, gen_ids[0]) == compiled.centralizer_ids(cc, gen_ids[0])


def test_class_matrix_parity(group_data):
    degree, gens = group_data
    cp, cc, els, gen_ids = _contexts(degree, gens)
    orbit = pure.conj_orbit_ids(cp, gen_ids)
    buckets = {}
    for eid, oid in enumerate(orbit):
        buckets.setdefault(oid, []).append(eid)
    orbits = sorted((sorted(b) for b in buckets.values()), key=lambda ms: ms[0])
    class_of = [0] * len(els)
    for ci, ms in enumerate(orbits):
        for eid in ms:
            class_of[eid] = ci
    reps = [ms[0] for ms in orbits]
    for i in (0, len(orbits) // 2, len(orbits) - 1):
        assert pure.class_matrix(cp, class_of, orbits[i], reps) == compiled.class_matrix(
            cc, class_of, orbits[i], reps
        )


def test_closure_cap_parity():
    gens = [tuple(g) for g in remark_generators()]
    with pytest.raises(ValueError):
        pure.closure_bfs(27, gens, 100)
    with pytest.raises(ValueError):
        compiled.closure_bfs(27, gens, 100)


def test_closure_deterministic_across_runs():
    gens = [tuple(g) for g in remark_generators()]
    a = compiled.closure_bfs(27, gens, 20000)
    b = compiled.closure_bfs(27, gens, 20000)
    assert a == b == pure.closure_bfs(27, gens, 20000)


def test_degree_routing():
    from charcorr.kernels import impl_for_degree

    assert impl_for_degree(255).BACKEND in ("compiled", "pure")
    assert impl_for_degree(256).BACKEND == "pure"
