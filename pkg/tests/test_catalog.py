from itertools import combinations, product

import pytest

from kmroot import catalog
from kmroot.cartan import DynkinDiagram, Kind, are_isomorphic, canonical_form, classify
from kmroot.catalog import DEFAULT, enumerate_hyperbolic_simply_laced
from kmroot.errors import RankOutOfRange, UnknownName

HYPERBOLIC_23 = (
    [f"HA_{k}(1)" for k in range(1, 8)] + [f"HD_{k}(1)" for k in range(4, 9)]
    + ["HE_6(1)", "HE_7(1)", "E10", "X6", "Y5", "Y4", "Z4", "Y3", "T2", "T1", "T0"]
)


def test_hyperbolic_names():
    assert DEFAULT.hyperbolic_names() == HYPERBOLIC_23


@pytest.mark.parametrize("name, rank", [
    ("HA_1(1)", 3), ("HA_7(1)", 9), ("HD_8(1)", 10), ("HE_6(1)", 8), ("HE_7(1)", 9),
    ("E10", 10), ("X6", 6), ("Z4", 4), ("T0", 3), ("HA_8(1)", 10), ("P10", 10),
])
def test_ranks(name, rank):
    assert catalog.get(name).rank == rank


def test_lookup_variants():
    assert catalog.get("HA1(1)") is catalog.get("HA_1(1)")
    assert catalog.get("HE_8(1)") is catalog.get("E10")
    assert "HD_4(1)" in DEFAULT
    assert "HD_3(1)" not in DEFAULT
    with pytest.raises(UnknownName):
        catalog.get("HZ_1(1)")


def test_rank2_entries():
    e = catalog.get("H2(5)")
    assert e.gcm.entries == ((2, -5), (-5, 2))
    with pytest.raises(UnknownName):
        catalog.get("H2(2)")


def test_labels_are_a_bijection():
    for e in DEFAULT.entries:
        assert len(set(e.labels)) == e.rank


def test_catalog_entries_are_simply_laced_gcms():
    for name in HYPERBOLIC_23:
        g = catalog.get(name).gcm
        assert g.symmetric
        assert all(abs(g[i, j]) <= 2 for i in range(g.n) for j in range(g.n))


@pytest.mark.parametrize("name", [n for n in HYPERBOLIC_23 if n.startswith("H") or n == "E10"])
def test_extension_minus_vertex_is_base(name):
    e = catalog.get(name)
    d = e.diagram
    keep = [i for i in range(d.n) if d.label(i) != "-1"]
    base = catalog.get(e.base).diagram
    assert are_isomorphic(d.subdiagram(keep), base) is not None
    assert classify(base).kind is Kind.AFFINE


def test_identify():
    assert catalog.identify(catalog.get("T1").diagram) == "T1"
    assert catalog.identify(catalog.get("E_8(1)").diagram) == "E_8(1)"
    # the E10 alias resolves to the primary name
    assert catalog.identify(catalog.get("HE_8(1)").diagram) == "E10"
    shuffled = catalog.get("Y5").diagram.permute([4, 2, 0, 3, 1])
    assert catalog.identify(shuffled) == "Y5"
    assert catalog.identify(catalog.get("H2(9)").diagram) == "H2(9)"
    four_chain = DynkinDiagram.from_edges(list("abcd"), [("a", "b", 1), ("b", "c", 1),
                                                         ("c", "d", 1)])
    assert catalog.identify(four_chain) is None


def test_replace_is_a_copy():
    broken = DEFAULT.replace("T0", catalog.get("T1").diagram)
    assert broken.get("T0").diagram == catalog.get("T1").diagram
    assert catalog.get("T0").diagram != catalog.get("T1").diagram
    assert broken.get("HE_8(1)").name == "E10"


def test_rank_out_of_range():
    for r in (2, 11):
        with pytest.raises(RankOutOfRange):
            enumerate_hyperbolic_simply_laced(r)


def _brute_force(rank, mults):
    """Every symmetric GCM of the rank with the given edge multiplicities."""
    pairs = list(combinations(range(rank), 2))
    forms = set()
    for choice in product(mults, repeat=len(pairs)):
        m = [[0] * rank for _ in range(rank)]
        for (i, j), k in zip(pairs, choice):
            m[i][j] = m[j][i] = k
        d = DynkinDiagram(tuple(map(tuple, m)))
        t = classify(d)
        if t.kind is Kind.INDEFINITE and t.hyperbolic:
            forms.add(canonical_form(d))
    return forms


@pytest.mark.parametrize("rank, mults", [(3, (0, 1, 2, 3, 4)), (4, (0, 1, 2, 3))])
def test_enumerator_matches_brute_force(rank, mults):
    fast = {canonical_form(d) for d in enumerate_hyperbolic_simply_laced(rank)}
    assert fast == _brute_force(rank, mults)


def test_enumeration_counts_and_coverage():
    counts = []
    found = {}
    for rank in range(3, 11):
        ds = enumerate_hyperbolic_simply_laced(rank)
        counts.append(len(ds))
        for d in ds:
            found[canonical_form(d)] = d
    assert counts == [5, 3, 2, 3, 2, 3, 3, 2]
    named = {catalog.identify(d) for d in found.values()}
    assert named == set(HYPERBOLIC_23)


def test_enumeration_sorted_and_deterministic():
    a = enumerate_hyperbolic_simply_laced(6)
    b = enumerate_hyperbolic_simply_laced(6)
    assert a == b
    forms = [canonical_form(d) for d in a]
    assert forms == sorted(forms)
