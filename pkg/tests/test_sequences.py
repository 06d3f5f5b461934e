import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_nu3, trial_division_is_prime
from prodsum import (
    CheckpointCorrupt,
    MultiplicityProfile,
    ScanCheckpoint,
    SequenceTable,
    UnknownSequence,
    count_representations,
    generate_table,
    load_checkpoint,
    nth_prime,
    primes_up_to,
    save_checkpoint,
    scan_zero_terms,
)
from prodsum.sequences import FoundRecord, scan_values

SEQUENCE_4 = (0, 0, 0, 0, 0, 0, 0, 3, 4, 3, 0, 0, 4, 0, 3, 0, 3, 3, 0, 4, 3, 3, 4, 3, 4, 0, 3, 5, 3, 4, 3)


def test_tables():
    assert generate_table("smallest_k", 31).values == SEQUENCE_4
    nu3 = generate_table("nu3", 12)
    assert nu3[12] == 2 == naive_nu3(12)
    assert nu3.offset == 1 and len(nu3.values) == 12
    assert generate_table("nu2", 4)[4] == 0
    assert generate_table("nu4", 30).values == tuple(count_representations(n, 4) for n in range(1, 31))
    with pytest.raises(UnknownSequence):
        generate_table("nu5", 3)


def test_table_labels():
    assert generate_table("smallest_k", 2).label == "A260965"
    assert generate_table("nu3", 2).label == "A260803"


def test_parallel_smallest_k_table_matches_sequential():
    assert generate_table("smallest_k", 2500, workers=2) == generate_table("smallest_k", 2500)


def test_csv_and_json_export():
    table = generate_table("nu3", 5)
    assert table.to_csv() == "index,value\n1,0\n2,0\n3,0\n4,1\n5,0\n"
    doc = json.loads(table.to_json())
    assert doc == {"name": "nu3", "offset": 1, "values": [0, 0, 0, 1, 0]}
    assert SequenceTable.from_json(table.to_json()) == table


def test_nu3_zeros_are_primes():
    values = generate_table("nu3", 5000).values
    for n, v in enumerate(values, start=1):
        if v == 0 and n >= 2:
            assert trial_division_is_prime(n), n


def test_downward_zero_propagation():
    for p in primes_up_to(2000):
        p = int(p)
        if count_representations(p + 1, 4) == 0:
            assert count_representations(p, 3) == 0, p


def test_scan_examples():
    assert scan_zero_terms(ScanCheckpoint(), 12).zero_indices == (1, 2, 3, 4, 5, 6, 7, 11, 12)
    cp = scan_zero_terms(ScanCheckpoint(), 31)
    assert cp.zero_indices == (1, 2, 3, 4, 5, 6, 7, 11, 12, 14, 16, 19, 26)
    assert cp.next_n == 32
    step = scan_zero_terms(ScanCheckpoint(next_n=8), 1)
    assert step.found_records == (FoundRecord(8, 19, 3, MultiplicityProfile({2: 2, 3: 1})),)
    assert step.next_n == 9


def test_table_and_scan_coherence():
    cp = scan_zero_terms(ScanCheckpoint(), 400)
    table = generate_table("smallest_k", 400)
    assert tuple(scan_values(cp)) == table.values
    assert cp.zero_indices == tuple(n for n, v in enumerate(table.values, start=1) if v == 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=1, max_size=6))
def test_scan_resumability(budgets):
    pieces = ScanCheckpoint()
    for b in budgets:
        pieces = scan_zero_terms(pieces, b)
    assert pieces == scan_zero_terms(ScanCheckpoint(), sum(budgets))


def test_checkpoint_round_trip(tmp_path):
    cp = scan_zero_terms(ScanCheckpoint(), 60)
    path = tmp_path / "scan.ckpt"
    save_checkpoint(cp, path)
    assert load_checkpoint(path) == cp
    text = path.read_text()
    assert text.startswith("format_version=1\nnext_n=61\n\n")
    assert "8\t19\t3\t2^2,3^1\n" in text
    assert "1\t2\t0\t\n" in text
    assert list(tmp_path.iterdir()) == [path]


@pytest.mark.parametrize(
    "text",
    [
        "format_version=1\nnext_n=5\n",  # no record block separator
        "format_version=2\nnext_n=5\n\n",
        "format_version=1\nnext_n=0\n\n",
        "format_version=1\nnext_n=3\n\n5\t11\t0\t\n",  # index beyond next_n
        "format_version=1\nnext_n=10\n\n8\t19\t3\t2^3\n",  # witness does not certify
        "format_version=1\nnext_n=10\n\n8\t23\t4\t2^4\n",  # wrong prime for index
        "format_version=1\nnext_n=10\n\n2\t3\t0\t\n2\t3\t0\t\n",
        "format_version=1\nnext_n=10\n\n2\tx\t0\t\n",
        "next_n=10\n\n",
    ],
)
def test_corrupt_checkpoints(text):
    with pytest.raises(CheckpointCorrupt):
        ScanCheckpoint.from_text(text)


def test_scan_rejects_invalid_input():
    bad = ScanCheckpoint(next_n=3, zero_indices=(1, 5))
    with pytest.raises(CheckpointCorrupt):
        scan_zero_terms(bad, 1)


def test_parallel_scan_is_deterministic():
    cp = scan_zero_terms(ScanCheckpoint(), 700, workers=3)
    assert cp == scan_zero_terms(ScanCheckpoint(), 700)
    assert nth_prime(700).p == cp.found_records[-1].p or 700 in cp.zero_indices
