"""Smoke tests for the fenceq extension module."""

import fenceq


OCTAGON = [(1, 7), (1, 6), (1, 5), (2, 5), (2, 4)]
NINEGON = [(2, 9), (3, 9), (3, 8), (4, 8), (5, 8), (6, 8)]
TWELVEGON = [(1, 10), (10, 12), (2, 10), (2, 9), (2, 8), (3, 8), (3, 7), (4, 7), (5, 7)]


def test_rank_polynomials():
    assert fenceq.rank_polynomial([1, 1], "plain") == [1, 2, 1, 1]
    assert fenceq.rank_polynomial([1, 2, 1, 2], "circular") == [1, 2, 3, 2, 3, 2, 1]
    assert fenceq.rank_polynomial([1, 1], "notched-last") == [1, 1, 1, 1]


def test_seq_report():
    report = fenceq.seq_report([7, 6, 1])
    assert report["unimodal"]
    assert not report["ineq_a"]
    assert not report["almost_interlacing"]
    assert fenceq.seq_report([1, 2, 3, 2, 3, 2, 1])["two_peak"] == (2, 4)


def test_signed_adjacency_octagon():
    order, matrix = fenceq.signed_adjacency(8, OCTAGON)
    labelled = [(1, 7), (1, 6), (1, 5), (2, 5), (2, 4)]
    idx = {d: order.index(d) for d in labelled}
    expected = [
        [0, -1, 0, 0, 0],
        [1, 0, -1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 0, -1, 0, -1],
        [0, 0, 0, 1, 0],
    ]
    for i, di in enumerate(labelled):
        for j, dj in enumerate(labelled):
            assert matrix[idx[di]][idx[dj]] == expected[i][j]


def test_shear_row():
    order, _ = fenceq.signed_adjacency(8, OCTAGON)
    shear = fenceq.shear_vector(8, OCTAGON, [(7, 3)])
    labelled = [(1, 7), (1, 6), (1, 5), (2, 5), (2, 4)]
    assert [shear[order.index(d)] for d in labelled] == [-1, 0, 1, -1, 1]


def test_c_polynomials():
    assert fenceq.c_polynomial(9, NINEGON, [[(1, 4)]], (1, 7)) == [7, 6, 1]
    three = [[(10, 6)], [(11, 5)], [(12, 4)]]
    assert fenceq.c_polynomial(12, TWELVEGON, three, (6, 11)) == [
        2, 5, 9, 12, 11, 10, 6, 4, 2,
    ]
    repeated = [[(10, 6)], [(10, 6)], [(11, 5)], [(12, 4)]]
    assert fenceq.c_polynomial(12, TWELVEGON, repeated, (6, 11)) == [
        2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2,
    ]


def test_arc_poset_matches_f_polynomial():
    res = fenceq.arc_fence_poset(8, OCTAGON, (3, 8))
    assert res["crossing_count"] == 5
    assert res["rank"] == fenceq.f_polynomial(8, OCTAGON, (3, 8))
    assert fenceq.verify_expansion(8, OCTAGON, (3, 8))


def test_identities_and_scan():
    assert fenceq.check_notched_decompositions([2, 2, 2, 2])["all_hold"]
    report = fenceq.scan("circular", 4, 7)
    assert report["instances_checked"] > 0
    assert report["violations"] == []


def test_errors_are_typed():
    try:
        fenceq.rank_polynomial([2, 0, 1], "plain")
    except fenceq.FenceqError:
        pass
    else:
        raise AssertionError("invalid composition must raise")
