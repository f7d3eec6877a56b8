"""End-to-end reproduction run: every claim checked, one report."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from . import catalog as _catalog
from .cartan import Kind, are_isomorphic, canonical_form, classify
from .catalog import Catalog, enumerate_hyperbolic_simply_laced
from .embed import prove_main
from .errors import KMRootError
from .lattice import (
    RootLattice,
    fundamental_weights,
    is_positive_real_root_descent,
    is_positive_real_root_norm,
    lattice_box,
    real_roots_by_reflection,
    real_roots_up_to_height,
)
from .orth import extend_direct_sum, find_orthogonal_real_roots, orthogonal_sublattice

EXPECTED_COUNTS = {3: 5, 4: 3, 5: 2, 6: 3, 7: 2, 8: 3, 9: 3, 10: 2}


@dataclass
class Check:
    name: str
    passed: bool
    details: List[str] = field(default_factory=list)
    seconds: Optional[float] = None


@dataclass
class Report:
    checks: List[Check]

    @property
    def green(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self, timings: bool = False) -> str:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f" ({c.seconds:.2f}s)" if timings and c.seconds is not None else ""
            out.append(f"[{status}] {c.name}{extra}")
            out.extend(f"    {line}" for line in c.details)
        passed = sum(c.passed for c in self.checks)
        out.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(out) + "\n"

    def to_json(self, timings: bool = False) -> str:
        rows = []
        for c in self.checks:
            row = {"name": c.name, "status": "pass" if c.passed else "fail",
                   "details": c.details}
            if timings:
                row["seconds"] = c.seconds
            rows.append(row)
        return json.dumps({"green": self.green, "checks": rows}, indent=2) + "\n"


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KMROOT_THREADS", "1")))
    except ValueError:
        return 1


def check_classification(cat: Catalog) -> Check:
    bad = []
    for name in cat.hyperbolic_names():
        t = classify(cat.get(name).diagram)
        if not (t.kind is Kind.INDEFINITE and t.hyperbolic):
            bad.append(f"{name}: expected indefinite, hyperbolic; got {t}")
    for name in cat.names(("auxiliary",)):
        t = classify(cat.get(name).diagram)
        if not (t.kind is Kind.INDEFINITE and not t.hyperbolic):
            bad.append(f"{name}: expected indefinite, not hyperbolic; got {t}")
    for fam, kind in (("affine", Kind.AFFINE), ("finite", Kind.FINITE)):
        for name in cat.names((fam,)):
            t = classify(cat.get(name).diagram)
            if t.kind is not kind:
                bad.append(f"{name}: expected {kind.value}; got {t}")
    n = len(cat.entries)
    return Check("1 classification of catalog entries", not bad,
                 bad or [f"{n} entries classified as expected"])


def check_enumeration(cat: Catalog) -> Check:
    details, ok = [], True
    forms = {}
    counts = []
    for rank in range(3, 11):
        found = enumerate_hyperbolic_simply_laced(rank)
        counts.append(len(found))
        for d in found:
            forms[canonical_form(d)] = rank
    details.append(f"counts for ranks 3..10: {counts} (total {sum(counts)})")
    if counts != [EXPECTED_COUNTS[r] for r in range(3, 11)]:
        ok = False
        details.append(f"expected {[EXPECTED_COUNTS[r] for r in range(3, 11)]}")
    catalog_forms = {canonical_form(cat.get(n).diagram): n for n in cat.hyperbolic_names()}
    for f, name in catalog_forms.items():
        if f not in forms:
            ok = False
            details.append(f"catalog entry {name} not produced by the enumerator")
    for f, rank in forms.items():
        if f not in catalog_forms:
            ok = False
            details.append(f"enumerated rank-{rank} diagram {f.decode()} missing from catalog")
    return Check("2 enumeration of simply laced hyperbolic diagrams", ok, details)


def _prove(name: str, cat: Catalog) -> Tuple[str, Optional[str]]:
    try:
        e = prove_main(name, cat)
    except KMRootError as exc:
        return name, str(exc)
    if not e.validated:
        return name, "embedding not validated"
    for i, r in enumerate(e.roots):
        if any(c < 0 for c in r) or _norm(e.host, r) != 2:
            return name, f"root {i} is not a positive norm-2 vector"
    if any(e.gram[i][j] > 0 for i in range(e.k) for j in range(e.k) if i != j):
        return name, "Gram matrix has a positive off-diagonal entry"
    if are_isomorphic(e.diagram, cat.get(name).diagram) is None:
        return name, "diagram not isomorphic to the target"
    found = cat.identify(e.diagram)
    if found is None or cat.get(found).name != cat.get(name).name:
        return name, f"identified as {found}"
    return name, None


def _norm(host: RootLattice, r) -> int:
    n = host.n
    return sum(r[i] * host.form[i][j] * r[j] for i in range(n) for j in range(n))


def _prove_all(names: List[str], cat: Catalog) -> List[Tuple[str, Optional[str]]]:
    workers = _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda n: _prove(n, cat), names))
    return [_prove(n, cat) for n in names]


def check_main(cat: Catalog) -> Check:
    names = cat.hyperbolic_names()
    results = _prove_all(names, cat)
    bad = [f"{n}: {err}" for n, err in results if err]
    return Check("3 every hyperbolic diagram is a root subdiagram of E10", not bad,
                 bad or [f"{len(names)} targets embedded, validated and identified"])


def check_rank2(cat: Catalog) -> Check:
    names = [f"H2({a})" for a in range(3, 7)]
    bad = [f"{n}: {err}" for n, err in _prove_all(names, cat) if err]
    return Check("4 rank-2 hyperbolics H2(a), a = 3..6, inside E10", not bad,
                 bad or ["Gram [[2,-a],[-a,2]] realised for a = 3, 4, 5, 6"])


def check_direct_sums(cat: Catalog) -> Check:
    details, ok = [], True
    try:
        e7 = prove_main("HE_7(1)", cat)
        host = e7.host
        weights = fundamental_weights(host)
        lam = lambda lab: weights[host.index(lab)]
        sub = orthogonal_sublattice(e7)
        gen = (lam("7") - 3 * lam("0")).to_root_vector()
        if sub.rank != 1 or sub.basis[0] not in (gen.coords, (-gen).coords):
            ok = False
            details.append(f"HE_7(1) complement: rank {sub.rank}, basis {sub.basis}")
        roots = find_orthogonal_real_roots(e7)
        if [r.coords for r in roots] != [gen.coords] or gen.norm() != 2:
            ok = False
            details.append(f"HE_7(1) orthogonal positive real roots: {roots}")
        else:
            details.append(f"HE_7(1) complement generated by L7 - 3 L0 = {gen.coords}, norm 2")

        e6 = prove_main("HE_6(1)", cat)
        sub6 = orthogonal_sublattice(e6)
        g1 = (lam("8") - 2 * lam("1")).to_root_vector()
        g2 = (lam("1") - 2 * lam("0")).to_root_vector()
        roots6 = {r.coords for r in find_orthogonal_real_roots(e6)}
        pair = sum(g1.coords[i] * host.form[i][j] * g2.coords[j]
                   for i in range(host.n) for j in range(host.n))
        if sub6.rank != 2 or not {g1.coords, g2.coords} <= roots6 or \
                (g1.norm(), g2.norm(), pair) != (2, 2, -1):
            ok = False
            details.append(f"HE_6(1) complement rank {sub6.rank}, roots {sorted(roots6)}")
        else:
            details.append("HE_6(1) complement has rank 2 and contains L8 - 2 L1, L1 - 2 L0 "
                           "(norms 2, 2; pairing -1)")
        for e, extra in ((e7, "A1"), (e6, "A2")):
            x = extend_direct_sum(e, extra, cat=cat)
            k = e.k
            block = all(x.gram[i][j] == 0 for i in range(k) for j in range(k, x.k))
            if not (x.validated and x.k == 10 and block):
                ok = False
                details.append(f"{e.target} + {extra}: not a validated rank-10 block sum")
            else:
                details.append(f"{e.target} + {extra}: validated rank-10 block-diagonal Gram")
    except KMRootError as exc:
        ok = False
        details.append(f"error: {exc}")
    return Check("5 direct sums HE_7(1)+A1 and HE_6(1)+A2 inside E10", ok, details)


def check_oracles(cat: Catalog, height: int = 8) -> Check:
    details, ok = [], True
    for name in ("E10", "HA_1(1)"):
        host = RootLattice.from_diagram(cat.get(name).diagram)
        total = 0
        for x in lattice_box(host, height):
            total += 1
            a, b = is_positive_real_root_norm(x), is_positive_real_root_descent(x)
            if a != b:
                ok = False
                details.append(f"{name}: norm test {a}, descent {b} at {x.coords}")
                break
        norm_set = real_roots_up_to_height(host, height)
        bfs_set = real_roots_by_reflection(host, height)
        if norm_set != bfs_set:
            ok = False
            details.append(f"{name}: norm enumeration and reflection climb differ")
        details.append(f"{name}: {total} vectors of height <= {height} agree; "
                       f"{len(norm_set)} positive real roots")
    return Check("6 norm-2 test agrees with reflection descent", ok, details)


CHECKS: List[Callable[[Catalog], Check]] = [
    check_classification,
    check_enumeration,
    check_main,
    check_rank2,
    check_direct_sums,
    check_oracles,
]


def verify_paper(cat: Catalog = None) -> Report:
    cat = cat or _catalog.DEFAULT
    checks = []
    for fn in CHECKS:
        t0 = time.perf_counter()
        c = fn(cat)
        c.seconds = time.perf_counter() - t0
        checks.append(c)
    return Report(checks)
