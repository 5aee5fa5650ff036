import pytest

import cstree

EXAMPLE = "aaabaabaabaaabaaaa"


def test_example_annotations():
    t = cstree.CoverSuffixTree(EXAMPLE)
    assert t.n == 18
    assert t.node_count <= 3 * 18 + 2
    halves = {d["label"] for d in t.nodes() if d["square_half"]}
    assert halves == {"a", "aa", "aab", "aaba", "aba", "abaa", "baa", "baaa"}
    for label, cv, nov in [("a", 14, 14), ("aa", 14, 5), ("aaa", 10, 3), ("aabaa", 15, 1), ("abaabaa", 10, 1)]:
        node = t.node(label)
        assert (node["cv"], node["nov"]) == (cv, nov)
    assert t.node("abaab") is None
    assert t.coverage("abaaba") == 9
    assert t.coverage("bb") == 0


def test_dump_ids_are_one_based():
    lines = cstree.CoverSuffixTree("aaaa").dump().splitlines()
    assert lines[3] == "# runs\t1"
    assert lines[4] == "# squares\t2"
    assert lines[6].split("\t")[:2] == ["1", "0"]


def test_partial_covers():
    t = cstree.CoverSuffixTree(EXAMPLE)
    lengths = [row[1] for row in t.all_partial_covers()]
    assert lengths == [1] * 14 + [5, 16, 17, 18]
    covers = t.shortest_alpha_covers(15)
    assert any(EXAMPLE[s - 1:e] == "aabaa" for _, s, e, _ in covers)
    with pytest.raises(IndexError):
        t.shortest_alpha_covers(19)


def test_ovocc():
    idx = cstree.OvOccIndex(EXAMPLE)
    assert idx.query("aa", 1) == [(1, 2), (11, 12), (15, 16), (16, 17)]
    assert idx.query("abaa", 3) == [(3, 6), (6, 9)]
    assert idx.query_fragment(3, 6, 3) == [(3, 6), (6, 9)]
    assert cstree.OvOccIndex("abab").query("ab", 1) == []
    with pytest.raises(ValueError, match="beta must be smaller"):
        idx.query("aa", 2)


def test_errors():
    with pytest.raises(ValueError, match="empty text"):
        cstree.CoverSuffixTree("")
    with pytest.raises(ValueError):
        cstree.CoverSuffixTree("ab", cycle_rule="nope")


def test_verify():
    ok = cstree.verify(max_n=20, iters=3, seed=7, sigma=3)
    assert ok["failures"] == 0 and ok["texts"] > 0
    bad = cstree.verify(max_n=8, iters=2, sigma=1, cycle_rule="literal")
    assert bad["failures"] > 0
    assert bad["minimized"] == "aaa"
