import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarize.betti import betti_table
from polarize.cellres import is_minimal, restrict, supports_resolution
from polarize.hilbert import is_polarization
from polarize.ideals import Monomial, VarRef, maximal_ideal_power
from polarize.trees import linear_relation_graph
from polarize.trianglegrid import (
    ChainSequence,
    TriangleChoice,
    all_choices,
    build_delta_complex,
    chains,
    choice_count,
    construct_polarization,
    down_triangles,
    gamma_complex,
    grid_edges,
    monomials,
    polarized_generators,
    up_triangles,
    xyz_string,
)


def xs(s):
    """'x1*x2*y3' -> Monomial"""
    if s == "1":
        return Monomial()
    out = []
    for part in s.split("*"):
        out.append((VarRef("xyz".index(part[0]) + 1, int(part[1:])), 1))
    return Monomial.of(out)


def x_part(m):
    return Monomial.of((v, e) for v, e in m.exps if v.base == 1)


def test_monomial_order():
    assert monomials(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_gamma_counts(d):
    X = gamma_complex(d)
    assert X.f_vector() == ((d + 1) * (d + 2) // 2, 3 * d * (d + 1) // 2, d * d)
    assert len(up_triangles(d)) == d * (d + 1) // 2
    assert len(down_triangles(d)) == d * (d - 1) // 2
    assert len(grid_edges(d)) == 3 * d * (d + 1) // 2
    assert X.boundary_squared_is_zero()


def test_gamma_d4_grid():
    assert gamma_complex(4).f_vector() == (15, 30, 16)


def test_down_triangles_collapse_labels():
    d = 3
    X = gamma_complex(d)
    labels = X.face_labels
    verts = monomials(d)
    for tri in down_triangles(d):
        idx = {verts.index(m) for m in tri}
        top = Monomial.plain(*(max(m[k] for m in tri) for k in range(3)))
        on_tri = [labels[k] for k, f in enumerate(X.faces) if f.dim >= 1 and set(f.vertices) <= idx]
        assert len(on_tri) == 4 and set(on_tri) == {top}
        # restricted to its own label, only the down triangle is left
        R = restrict(X, top)
        assert R.f_vector() == (3, 3, 1)


def test_choice_parsing():
    assert TriangleChoice.parse(3, "x").letters == ("X", "X", "X")
    assert TriangleChoice.parse(3, "x, y ,Z").letters == ("X", "Y", "Z")
    with pytest.raises(ValueError):
        TriangleChoice.parse(3, "x,y")
    with pytest.raises(ValueError):
        TriangleChoice.parse(2, "w")
    with pytest.raises(ValueError):
        TriangleChoice(1, ())


@pytest.mark.parametrize("d,count", [(2, 3), (3, 27), (4, 729)])
def test_choice_counts(d, count):
    assert choice_count(d) == count
    if d < 4:
        assert len(list(all_choices(d))) == count


def test_chain_sequence_validation():
    s = ChainSequence(3, (frozenset(), frozenset({2}), frozenset({1, 2}), frozenset({1, 2, 3})))
    assert s.primed(1) == {2, 4}
    with pytest.raises(ValueError):
        ChainSequence(2, (frozenset(), frozenset({1, 2}), frozenset({1, 2})))
    with pytest.raises(ValueError):
        ChainSequence(2, (frozenset({1}), frozenset({1}), frozenset({1, 2})))
    with pytest.raises(ValueError):
        ChainSequence(2, (frozenset(), frozenset({1})))


def test_first_worked_example():
    # xz and yz are x-triangles, z^2 is not: s(3) = {} < {2} < {1,2} < [3]
    c = TriangleChoice.parse(4, "Y,Y,X,Y,X,Y")
    s3 = chains(c, "X")[2]
    assert s3.sets == (frozenset(), frozenset({2}), frozenset({1, 2}), frozenset({1, 2, 3}))
    gens = polarized_generators(c)
    row = [(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1)]
    assert [x_part(gens[m]) for m in row] == [xs("x1*x2*x3"), xs("x1*x3"), xs("x3"), xs("1")]


def test_second_worked_example():
    # x^2 and xy are x-triangles, y^2 is not
    c = TriangleChoice.parse(4, "X,X,Y,Y,Y,Y")
    ch = chains(c, "X")
    assert ch[2].sets == (frozenset(), frozenset({3}), frozenset({2, 3}), frozenset({1, 2, 3}))
    assert ch[3].sets == (frozenset(), frozenset({3}), frozenset({2, 3}), frozenset({2, 3, 4}), frozenset({1, 2, 3, 4}))
    gens = polarized_generators(c)
    assert x_part(gens[(4, 0, 0)]) == xs("x1*x2*x3*x4")
    assert x_part(gens[(3, 1, 0)]) == xs("x1*x2*x4")
    assert x_part(gens[(2, 2, 0)]) == xs("x1*x4")
    assert x_part(gens[(1, 3, 0)]) == xs("x1")
    assert xyz_string(gens[(2, 2, 0)]).startswith("x1*x4*y")


def test_d2_z_choice():
    c = TriangleChoice.parse(2, "z")
    gens = polarized_generators(c)
    want = {"x1*x2", "x1*y1", "y1*y2", "x1*z1", "y1*z2", "z1*z2"}
    assert {xyz_string(m) for m in gens.values()} == want
    a, b = (gens[m] for m in c.removed_edge((0, 0, 0)))
    assert {xyz_string(a), xyz_string(b)} == {"x1*z1", "y1*z2"}
    assert a.lcm(b).degree == 4
    X = build_delta_complex(c)
    assert X.f_vector() == (6, 8, 3)
    assert betti_table(construct_polarization(c)).total_betti == (6, 8, 3)


@pytest.mark.parametrize("d", [2, 3])
def test_every_choice_small(d):
    target = maximal_ideal_power(3, d)
    for c in all_choices(d):
        I = construct_polarization(c)
        assert is_polarization(I, target)
        X = build_delta_complex(c)
        assert X.boundary_squared_is_zero()
        assert supports_resolution(X, I) and is_minimal(X)
        want = ((d + 1) * (d + 2) // 2, d * (d + 2), d * (d + 1) // 2)
        assert X.f_vector() == want == betti_table(I).total_betti


def choices4():
    return st.tuples(*[st.sampled_from("XYZ")] * 6).map(lambda t: TriangleChoice(4, t))


@given(choices4())
@settings(max_examples=30, deadline=None)
def test_random_d4_choices(c):
    I = construct_polarization(c)
    assert is_polarization(I, maximal_ideal_power(3, 4))
    X = build_delta_complex(c)
    assert X.f_vector() == (15, 24, 10)
    assert supports_resolution(X, I) and is_minimal(X)
    # linear relations are exactly the surviving grid edges
    g = linear_relation_graph(I)
    order = {m: k for k, m in enumerate(I.gens)}
    pos = [order[m] for m in X.labels]
    assert {frozenset(e) for e in g.edges} == {frozenset(pos[v] for v in e) for e in X.skeleton_edges()}


@given(choices4())
@settings(max_examples=30, deadline=None)
def test_x_parts_divide_along_rows(c):
    gens = polarized_generators(c)
    for m, n in ((m, n) for m in gens for n in gens):
        if m[2] == n[2] and n[0] == m[0] + 1:
            assert x_part(gens[m]).divides(x_part(gens[n]))
        if m[1] == n[1] and n[0] == m[0] + 1:
            assert x_part(gens[m]).divides(x_part(gens[n]))
