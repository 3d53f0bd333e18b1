import pytest

from hbgcat.analysis import check_symmetry_girth_bound, girth
from hbgcat.catalog import (
    HEADER,
    Catalog,
    CatalogEntry,
    Monotonicity,
    Status,
    classify_monotonic,
    classify_verdicts,
    default_catalog_path,
    entry_from_outcome,
    fill_cell,
    fill_min_order,
    fill_orders,
    probe_family,
    record,
    render_table,
    summary_table,
)
from hbgcat.d3core import D3Spec, build_graph
from hbgcat.errors import CatalogError, ConflictError, IncompleteData
from hbgcat.search import SearchProblem, search

CAGE10 = (9, 13, 29, 21, 13, 43, 33)
F16 = (15, 53, 73, 139, 243, 267, 471, 651)
F, N, I = Status.FOUND, Status.NONEXISTENT, Status.INCONCLUSIVE


def test_record_round_trip(tmp_path):
    path = tmp_path / "cat.tsv"
    e = CatalogEntry(6, 14, 1, F, (5,), 6, 2, 5)
    store = record(e, Catalog())
    store.save(path)
    loaded = Catalog.load(path)
    assert loaded.get(6, 14, 1) == e
    assert loaded.to_tsv() == store.to_tsv()


def test_conflicting_status():
    store = Catalog([CatalogEntry(8, 36, 3, N)])
    with pytest.raises(ConflictError):
        store.record(CatalogEntry(8, 36, 3, F, (7, 9, 17), 8))


def test_inconclusive_is_upgraded_and_never_downgrades():
    store = Catalog([CatalogEntry(8, 36, 3, I, explored=10)])
    store.record(CatalogEntry(8, 36, 3, N, explored=208))
    assert store.get(8, 36, 3).status is N
    store.record(CatalogEntry(8, 36, 3, I, explored=5))
    assert store.get(8, 36, 3).status is N


def test_least_witness_kept():
    store = Catalog([CatalogEntry(8, 30, 3, F, (9, 17, 7), 8)])
    store.record(CatalogEntry(8, 30, 3, F, (7, 9, 17), 8))
    store.record(CatalogEntry(8, 30, 3, F, (17, 7, 9), 8))
    assert store.get(8, 30, 3).witness == (7, 9, 17)


def test_cage10_verified_on_load(tmp_path):
    path = tmp_path / "cat.tsv"
    Catalog([CatalogEntry(10, 70, 7, F, CAGE10, 10)]).save(path)
    assert Catalog.load(path).get(10, 70, 7).witness == CAGE10


def test_load_rejects_wrong_girth(tmp_path):
    path = tmp_path / "cat.tsv"
    # (5,) at order 14 has girth 6, not 8.
    Catalog([CatalogEntry(8, 14, 1, F, (5,), 8)]).save(path)
    with pytest.raises(CatalogError):
        Catalog.load(path)
    assert len(Catalog.load(path, verify=False)) == 1


def test_load_rejects_unbuildable_witness():
    text = "\t".join(HEADER) + "\n" + "6\t8\t2\tfound\t3,5\t6\t0\t4\tx\n"
    with pytest.raises(CatalogError):
        Catalog.from_tsv(text)


@pytest.mark.parametrize("bad", ["", "g\torder\n", "\t".join(HEADER) + "\n1\t2\n"])
def test_malformed_tsv(bad):
    with pytest.raises(CatalogError):
        Catalog.from_tsv(bad)


def test_entry_invariants():
    with pytest.raises(CatalogError):
        CatalogEntry(6, 14, 1, F)
    with pytest.raises(CatalogError):
        CatalogEntry(6, 14, 1, N, (5,))
    with pytest.raises(CatalogError):
        CatalogEntry(6, 14, 1, F, (5,), 8)


def test_tsv_format_sorted():
    store = Catalog()
    store.record(CatalogEntry(8, 36, 3, N, explored=208, space=4096))
    store.record(CatalogEntry(6, 14, 1, F, (5,), 6, 2, 5))
    store.record(CatalogEntry(8, 30, 3, F, (7, 9, 17), 8, 100, 2197))
    lines = store.to_tsv().splitlines()
    assert lines[0] == "g\torder\tsf\tstatus\td3\tgirth_actual\texplored\tspace\tversion"
    assert lines[1].startswith("6\t14\t1\tfound\t5\t6\t2\t5\thbgcat-")
    assert lines[2].startswith("8\t30\t3\tfound\t7,9,17\t8\t")
    assert lines[3].startswith("8\t36\t3\tnonexistent\t-\t-\t208\t4096\t")


def test_entry_from_outcome_keys_by_exact_girth():
    out = search(SearchProblem(30, 3, 6))
    e = entry_from_outcome(out)
    assert e.girth == out.witness_girth and e.status is F


def test_default_path(monkeypatch):
    monkeypatch.delenv("HBGCAT_CATALOG", raising=False)
    assert str(default_catalog_path()) == "catalog.tsv"
    monkeypatch.setenv("HBGCAT_CATALOG", "/tmp/x.tsv")
    assert str(default_catalog_path()) == "/tmp/x.tsv"


def test_fill_cell_reuses_resolved():
    store = Catalog([CatalogEntry(8, 36, 3, N, explored=1, space=1)])
    assert fill_cell(store, 8, 36, 3).explored == 1
    assert fill_cell(store, 8, 30, 3).status is F


def _filled(g, sfs, cap):
    store = Catalog()
    for b in sfs:
        fill_min_order(store, g, b, cap)
    return store


@pytest.mark.parametrize(
    "g, sfs, cap, minima",
    [(8, range(2, 7), 60, [36, 30, 40, 40, 36]), (6, [1], 20, [14]), (10, [4], 80, [72])],
)
def test_summary_table(g, sfs, cap, minima):
    cells = summary_table(_filled(g, sfs, cap), g, sfs, cap)
    assert [c.order for c in cells] == minima
    assert all(c.kind == "found" for c in cells)


def test_summary_table_below_bound_and_missing():
    store = _filled(8, [1], 30)
    assert summary_table(store, 8, [1], 30)[0].kind == "nonexistent"
    with pytest.raises(IncompleteData):
        summary_table(Catalog(), 8, [3], 60)


def test_summary_table_inconclusive():
    store = Catalog()
    fill_min_order(store, 8, 3, 60, budget=3)
    cell = summary_table(store, 8, [3], 60)[0]
    assert cell.kind == "inconclusive"


def test_summary_never_contradicts_bound():
    store = _filled(8, range(1, 7), 60)
    for e in store:
        if e.status is F:
            assert check_symmetry_girth_bound(e.sym_factor, e.girth)


def test_render_table():
    cells = summary_table(_filled(8, range(2, 7), 60), 8, range(2, 7), 60)
    text = render_table(cells, 8, 60)
    assert text.splitlines()[0].split() == ["sf", "(3,8)"]
    assert [ln.split()[1] for ln in text.splitlines()[1:]] == ["36", "30", "40", "40", "36"]
    tsv = render_table(cells, 8, 60, "tsv")
    assert tsv.splitlines()[1] == "2\t36"


@pytest.mark.parametrize(
    "g, b, orders, expected",
    [
        (8, 3, range(30, 61, 6), Monotonicity.NON_MONOTONIC),
        (8, 4, range(32, 73, 8), Monotonicity.MONOTONIC),
        (6, 1, range(10, 41, 2), Monotonicity.MONOTONIC),
    ],
)
def test_classify_monotonic(g, b, orders, expected):
    store = Catalog()
    fill_orders(store, g, b, orders)
    assert classify_monotonic(store, g, b, orders) is expected
    # Re-running the searches gives the same classification.
    again = Catalog()
    fill_orders(again, g, b, orders)
    assert classify_monotonic(again, g, b, orders) is expected


def test_classify_monotonic_errors():
    with pytest.raises(IncompleteData):
        classify_monotonic(Catalog(), 8, 3, [30, 36])
    with pytest.raises(ValueError):
        classify_monotonic(Catalog(), 8, 3, [30, 42])


@pytest.mark.parametrize(
    "statuses, expected",
    [
        ([N, F, F], Monotonicity.MONOTONIC),
        ([F, N, F], Monotonicity.NON_MONOTONIC),
        ([F, I, N, F], Monotonicity.NON_MONOTONIC),
        ([N, N], Monotonicity.UNKNOWN),
        ([N, F, I], Monotonicity.UNKNOWN),
        ([F, F, N], Monotonicity.UNKNOWN),
    ],
)
def test_classify_verdicts(statuses, expected):
    assert classify_verdicts(statuses) is expected


def test_probe_family_order12_is_not_girth6():
    probe = probe_family([5], 1, [12], 6)
    assert probe.results[0].girth == 4 and not probe.all_pass


def test_probe_family_girth6_line():
    probe = probe_family([5], 1, range(14, 401, 2), 6)
    assert probe.all_pass


def test_probe_family_girth16():
    probe = probe_family(F16, 8, [1824, 2352, 2368], 16)
    assert [r.girth for r in probe.results] == [16, 16, 16]


def test_probe_family_invalid_order():
    probe = probe_family([7, 9, 17], 3, [30, 32], 8)
    assert probe.results[1].girth is None
    assert "invalid" in probe.report().splitlines()[1]


def test_probe_family_idempotent():
    probe = probe_family([7, 9, 17], 3, range(30, 91, 6), 8)
    for r in probe.results:
        assert r.girth == girth(build_graph(D3Spec(r.order, 3, (7, 9, 17)))).girth
