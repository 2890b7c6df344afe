import pytest

from jkdp.tables import verify_tables


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tables_reproduced(k):
    report = verify_tables(k)
    assert report.ok, report.mismatches()[:10]
    assert report.count("mutated_resolution") == (11 + 4 * k) ** 2
    assert report.count("shifted_central_block") > 0
    assert report.count("tower_blocks") > 0


def test_strong_arrangement_only_at_k1():
    assert verify_tables(1).count("strong_k1") == 22 * 22
    assert verify_tables(2).count("strong_k1") == 0


def test_strong_arrangement_is_strong():
    report = verify_tables(1)
    for entry in report.entries:
        if entry.table == "strong_k1":
            assert entry.got[1] == 0 and entry.got[2] == 0, entry
