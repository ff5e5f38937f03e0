import pytest

from oberwolfach.core import Arc, TwoRegularDigraph, cycle_from_text, parse_vertex
from oberwolfach.hosts import complete_symmetric, fold, h_star, j_star, w_star


def V(t):
    return parse_vertex(t)


def A(t, h):
    return Arc(V(t), V(h))


def test_complete_symmetric_counts():
    assert len(complete_symmetric(2).arcs) == 2
    assert len(complete_symmetric(6).arcs) == 30
    k = complete_symmetric(6)
    assert A("x0", "y0") in k.arcs and A("y0", "x0") in k.arcs
    with pytest.raises(ValueError):
        complete_symmetric(1)


def test_h_star_shape():
    h = h_star(7)
    assert len(h.arcs) == 56
    assert A("x0", "y0") not in h.arcs  # no rungs
    assert A("x0", "y1") in h.arcs and A("y1", "x0") in h.arcs
    with pytest.raises(ValueError):
        h_star(2)


def test_w_star_shape():
    w = w_star(7)
    assert len(w.arcs) == 126
    for i in range(7):
        assert A(f"x{i}", f"y{i}") in w.arcs and A(f"y{i}", f"x{i}") in w.arcs
    assert A("x0", "y2") in w.arcs
    assert A("x0", "y3") not in w.arcs
    with pytest.raises(ValueError):
        w_star(4)


def test_j_star_shape():
    j = j_star(7)
    assert len(j.arcs) == 126
    assert len(j.vertices) == 18
    assert A("x0", "y0") not in j.arcs  # no rung at block 0
    assert A("x7", "y7") in j.arcs  # rung at block m
    assert A("x8", "y8") not in j.arcs  # none at block m+1
    assert A("x6", "x8") in j.arcs  # jump 2 from i = m-1
    with pytest.raises(ValueError):
        j_star(2)


def _undirected_edges_reference(kind, m):
    """Independent re-derivation of the three auxiliary edge sets."""
    edges = set()
    if kind == "h":
        for i in range(m):
            j = (i + 1) % m
            for s in "xy":
                for t in "xy":
                    edges.add(frozenset((V(f"{s}{i}"), V(f"{t}{j}"))))
    elif kind == "w":
        for i in range(m):
            edges.add(frozenset((V(f"x{i}"), V(f"y{i}"))))
            for d in (1, 2):
                j = (i + d) % m
                for s in "xy":
                    for t in "xy":
                        edges.add(frozenset((V(f"{s}{i}"), V(f"{t}{j}"))))
    else:
        for i in range(1, m + 1):
            edges.add(frozenset((V(f"x{i}"), V(f"y{i}"))))
        for i in range(m):
            for d in (1, 2):
                for s in "xy":
                    for t in "xy":
                        edges.add(frozenset((V(f"{s}{i}"), V(f"{t}{i + d}"))))
    return edges


@pytest.mark.parametrize("m", [3, 5, 8])
def test_h_star_matches_reference(m):
    expected = set()
    for e in _undirected_edges_reference("h", m):
        u, v = tuple(e)
        expected.update({Arc(u, v), Arc(v, u)})
    assert h_star(m).arcs == expected


@pytest.mark.parametrize("m", [5, 7, 10])
def test_w_star_matches_reference(m):
    expected = set()
    for e in _undirected_edges_reference("w", m):
        u, v = tuple(e)
        expected.update({Arc(u, v), Arc(v, u)})
    assert w_star(m).arcs == expected


@pytest.mark.parametrize("m", [3, 4, 7])
def test_j_star_matches_reference(m):
    expected = set()
    for e in _undirected_edges_reference("j", m):
        u, v = tuple(e)
        expected.update({Arc(u, v), Arc(v, u)})
    assert j_star(m).arcs == expected


def test_degree_profiles():
    h = h_star(6)
    assert all(h.out_degree(v) == h.in_degree(v) == 4 for v in h.vertices)
    w = w_star(6)
    assert all(w.out_degree(v) == w.in_degree(v) == 9 for v in w.vertices)
    j = j_star(6)
    for v in j.vertices:
        if 2 <= v.index <= 4:
            assert j.out_degree(v) == j.in_degree(v) == 9


@pytest.mark.parametrize("m", [5, 7])
def test_fold_is_arc_bijection(m):
    j = j_star(m)
    w = w_star(m)
    folded = fold(j, m)
    assert folded.arcs == w.arcs
    assert len(j.arcs) == len(w.arcs) == 18 * m


def test_fold_of_admissible_factor():
    # [2,6,6] subdigraph assembled from the two compatible pieces
    factor = TwoRegularDigraph(
        [
            cycle_from_text("(x0,x1)"),
            cycle_from_text("(y1,y2,x2,x3,y4,y3)"),
            cycle_from_text("(x4,x6,y7,x5,y6,y5)"),
        ]
    )
    folded = fold(factor, 7)
    assert folded.vertices() == w_star(7).vertices
    assert V("x3") in factor.vertices()  # middle vertices unchanged
    assert V("x3") in folded.vertices()


def test_fold_rejects_garbage():
    bad = TwoRegularDigraph([cycle_from_text("(x0,x3)")])
    with pytest.raises(ValueError):
        fold(bad, 7)
