"""Acceptance criteria, each at its stated tolerance and runtime budget.

Every test records a single PASS/FAIL line (also printed with ``-s``) before
asserting; the lines are repeated in the terminal summary.
"""

import random
import time

from kmroot import catalog
from kmroot.cartan import Kind, _classify_exhaustive, are_isomorphic, canonical_form, classify
from kmroot.embed import hyperbolic_extension, principle_a, principle_b, prove_main
from kmroot.lattice import (
    RootLattice,
    fundamental_weights,
    is_positive_real_root_descent,
    is_positive_real_root_norm,
    lattice_box,
    null_root,
    pairing,
    simple_reflection,
)
from kmroot.catalog import enumerate_hyperbolic_simply_laced
from kmroot.orth import extend_direct_sum, find_orthogonal_real_roots, orthogonal_sublattice

from test_catalog import HYPERBOLIC_23


def record(log, number, title, ok, seconds=None, budget=None):
    timing = f" {seconds:.2f}s" if seconds is not None else ""
    if budget is not None:
        timing += f" (budget {budget:g}s)"
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}{timing}"
    log.append(line)
    print(line)
    return ok


def lat(name):
    return RootLattice.from_diagram(catalog.get(name).diagram)


def test_criterion_1_classification(acceptance_log):
    _classify_exhaustive.cache_clear()  # time it cold
    t0 = time.perf_counter()
    hyper = [classify(catalog.get(n).diagram) for n in HYPERBOLIC_23]
    aux = [classify(catalog.get(n).diagram) for n in ("HA_8(1)", "P10")]
    dt = time.perf_counter() - t0
    ok_h = len(hyper) == 23 and all(t.kind is Kind.INDEFINITE and t.hyperbolic for t in hyper)
    ok_a = all(t.kind is Kind.INDEFINITE and not t.hyperbolic for t in aux)
    ok = ok_h and ok_a and dt < 1.0
    record(acceptance_log, 1, "23 hyperbolic; HA_8(1), P10 indefinite non-hyperbolic",
           ok, dt, 1)
    assert ok_h and ok_a
    assert dt < 1.0


def test_criterion_2_enumeration(acceptance_log):
    t0 = time.perf_counter()
    found = {r: enumerate_hyperbolic_simply_laced(r) for r in range(3, 11)}
    dt = time.perf_counter() - t0
    counts = [len(found[r]) for r in range(3, 11)]
    forms = {canonical_form(d) for ds in found.values() for d in ds}
    catalog_forms = {canonical_form(catalog.get(n).diagram) for n in HYPERBOLIC_23}
    ok = (counts == [5, 3, 2, 3, 2, 3, 3, 2] and sum(counts) == 23
          and forms == catalog_forms and dt < 60)
    record(acceptance_log, 2, f"counts {counts}, total {sum(counts)}, matches catalog",
           ok, dt, 60)
    assert counts == [5, 3, 2, 3, 2, 3, 3, 2] and sum(counts) == 23
    assert forms == catalog_forms
    assert dt < 60


def _valid(e, name):
    if not e.validated:
        return False
    for v in e.root_vectors():
        if any(c < 0 for c in v.coords) or v.norm() != 2:
            return False
    if any(e.gram[i][j] > 0 for i in range(e.k) for j in range(e.k) if i != j):
        return False
    return are_isomorphic(e.diagram, catalog.get(name).diagram) is not None


def test_criterion_3_all_targets_embed(acceptance_log):
    t0 = time.perf_counter()
    bad = [n for n in HYPERBOLIC_23 if not _valid(prove_main(n), n)]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    record(acceptance_log, 3, f"{23 - len(bad)}/23 targets embedded in E10", ok, dt, 10)
    assert not bad, bad
    assert dt < 10


def test_criterion_4_named_identities(acceptance_log):
    e10 = lat("E10")
    iso = lambda e, n: are_isomorphic(e.diagram, catalog.get(n).diagram) is not None
    a = iso(principle_a(e10), "HD_8(1)")
    b7 = iso(principle_b(e10, "7"), "HA_8(1)")
    b8 = iso(principle_b(e10, "8"), "P10")
    # X = E8(1) on labels 0..8, computed independently of the host
    delta_x = null_root(lat("E_8(1)"))
    delta = e10.vector(dict(zip(map(str, range(9)), delta_x.coords)))
    d_pair = pairing(delta, e10.simple_root("-1"))
    beta = delta + e10.simple_root("0") + e10.simple_root("-1") * 2
    ok = a and b7 and b8 and d_pair == -1 and beta.norm() == 2
    record(acceptance_log, 4,
           f"A~HD_8(1) {a}, B(7)~HA_8(1) {b7}, B(8)~P10 {b8}, "
           f"(delta,a_-1)={d_pair}, |beta_-1|^2={beta.norm()}", ok)
    assert a and b7 and b8
    assert d_pair == -1 and beta.norm() == 2


def test_criterion_5_orthogonal_complements(acceptance_log):
    t0 = time.perf_counter()
    e7, e6 = prove_main("HE_7(1)"), prove_main("HE_6(1)")
    host = e7.host
    ws = fundamental_weights(host)
    lam = lambda lab: ws[host.index(lab)]
    gen = (lam("7") - 3 * lam("0")).to_root_vector()
    sub7 = orthogonal_sublattice(e7)
    ok7 = (sub7.rank == 1 and sub7.basis[0] in (gen.coords, (-gen).coords)
           and gen.norm() == 2 and all(c >= 0 for c in gen.coords))
    g1 = (lam("8") - 2 * lam("1")).to_root_vector()
    g2 = (lam("1") - 2 * lam("0")).to_root_vector()
    sub6 = orthogonal_sublattice(e6)
    roots6 = {r.coords for r in find_orthogonal_real_roots(e6)}
    ok6 = (sub6.rank == 2 and {g1.coords, g2.coords} <= roots6
           and (g1.norm(), g2.norm(), pairing(g1, g2)) == (2, 2, -1))
    ok_x = True
    for e, extra in ((e7, "A1"), (e6, "A2")):
        x = extend_direct_sum(e, extra)
        k = e.k
        ok_x &= x.validated and x.k == 10 and all(
            x.gram[i][j] == 0 for i in range(k) for j in range(k, 10))
    dt = time.perf_counter() - t0
    ok = ok7 and ok6 and ok_x and dt < 5
    record(acceptance_log, 5, "HE_7(1) rank-1 complement, HE_6(1) rank-2, direct sums",
           ok, dt, 5)
    assert ok7 and ok6 and ok_x
    assert dt < 5


def test_criterion_6_oracles(acceptance_log):
    t0 = time.perf_counter()
    disagreements = 0
    checked = 0
    for name in ("E10", "HA_1(1)"):
        host = lat(name)
        for x in lattice_box(host, 8):
            checked += 1
            if is_positive_real_root_norm(x) != is_positive_real_root_descent(x):
                disagreements += 1
    rng = random.Random(20261019)
    e10 = lat("E10")
    broken = 0
    for _ in range(10_000):
        i = rng.randrange(10)
        x = e10.vector([rng.randint(-5, 5) for _ in range(10)])
        y = e10.vector([rng.randint(-5, 5) for _ in range(10)])
        if pairing(simple_reflection(i, x), simple_reflection(i, y)) != pairing(x, y):
            broken += 1
    kernel_bad = []
    for name in catalog.DEFAULT.names(("affine",)):
        host = lat(name)
        d = null_root(host)
        if any(pairing(d, host.simple_root(i)) for i in range(host.n)) or \
                any(c <= 0 for c in d.coords):
            kernel_bad.append(name)
    dt = time.perf_counter() - t0
    ok = disagreements == 0 and broken == 0 and not kernel_bad
    record(acceptance_log, 6,
           f"{checked} vectors agree, 10000 reflection triples, "
           f"{len(catalog.DEFAULT.names(('affine',)))} null roots", ok, dt)
    assert disagreements == 0
    assert broken == 0
    assert not kernel_bad, kernel_bad
