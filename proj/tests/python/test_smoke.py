import sgtree


def test_count_genus():
    assert sgtree.count_genus(3) == 4
    assert sgtree.count_genus(12) == 592
    assert sgtree.count_genus(12, threads=4) == 592


def test_count_all():
    assert sgtree.count_all(8) == [1, 2, 4, 7, 12, 23, 39, 67]
    assert sgtree.count_all(8, threads=2) == sgtree.count_all(8)


def test_list_genus():
    level3 = sorted(sgtree.list_genus(3))
    assert level3 == [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 5]]
    assert len(sgtree.list_genus(10)) == sgtree.count_genus(10)


def test_node_info():
    info = sgtree.node_info([1, 2, 4])
    assert info["multiplicity"] == 3
    assert info["conductor"] == 5
    assert info["genus"] == 3
    assert info["jump"] == 2
    assert info["right_generators"] == [5, 7]
    assert info["chain"] == "01|101"
    assert info["pseudo_ordinary"]
    assert not info["ordinary"]


def test_children():
    assert sgtree.children([1, 2]) == [[1, 2, 3], [1, 2, 4], [1, 2, 5]]
    assert sgtree.children([1, 2, 5]) == []


def test_closed_forms():
    assert sgtree.pseudo_grandchildren(5, 2) == 8
    assert sgtree.boundary_subtree_counts(6) == (5, 7)


def test_verify():
    report = sgtree.verify(6)
    assert report["ok"]
    assert report["node_mismatches"] == 0
