import json

from hypothesis import given, settings
from hypothesis import strategies as st

from polarize.ideals import (
    Monomial,
    MonomialIdeal,
    VarRef,
    box_polarization,
    canonical_form,
    depolarize,
    ideal,
    isomorphic,
    maximal_ideal_power,
    minimalize,
    squarefree_power,
    standard_polarization,
)
from strategies import monomial_lists

x = lambda i, c=1: VarRef(i, c)  # noqa: E731


def mono(*vs):
    return Monomial.of((v, 1) for v in vs)


def test_minimalize_drops_multiples():
    I = minimalize([mono(x(1)), mono(x(1), x(2))])
    assert I.gens == (mono(x(1)),)
    assert x(2) in I.ambient


def test_minimalize_keeps_antichain():
    gens = [mono(x(1), x(2)), mono(x(1), x(3)), mono(x(2), x(3))]
    assert minimalize(gens).gens == tuple(gens)


def test_minimalize_mixed_degrees():
    x2, xy, x2y = Monomial.plain(2), Monomial.plain(1, 1), Monomial.plain(2, 1)
    assert set(minimalize([x2, xy, x2y]).gens) == {x2, xy}


def test_minimalize_empty_is_zero_ideal():
    I = minimalize([])
    assert I.is_zero and not I.is_unit


@given(monomial_lists(), st.randoms())
def test_minimalize_order_independent(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert minimalize(gens) == minimalize(shuffled)
    assert minimalize(minimalize(gens).gens) == minimalize(gens)


def test_generator_order_is_degree_then_lex():
    I = MonomialIdeal((mono(x(2), x(3)), Monomial.plain(1), mono(x(1), x(3))))
    assert [str(g) for g in I.gens] == ["x1^(1)", "x1^(1)*x3^(1)", "x2^(1)*x3^(1)"]


def test_depolarize_box_2_2():
    dep = depolarize(box_polarization(2, 2))
    assert dep.ideal == maximal_ideal_power(2, 2)
    assert dep.bijective


def test_depolarize_plain_is_bijective():
    dep = depolarize(ideal([(1, 1), (2, 1)]))
    assert dep.ideal.gens == (Monomial.plain(1, 1),)
    assert dep.bijective


def test_depolarize_collapse_not_bijective():
    dep = depolarize(ideal([(1, 1), (2, 1)], [(1, 2), (2, 1)]))
    assert dep.ideal.gens == (Monomial.plain(1, 1),)
    assert not dep.bijective


def test_canonical_form_renumbers_copies():
    I = ideal([(1, 2), (2, 1)], [(1, 1), (2, 1)])
    assert canonical_form(I).gens == ideal([(1, 1), (2, 1)], [(1, 2), (2, 1)]).gens


def test_canonical_form_dense_copies():
    I = ideal([(1, 5), (2, 7)], [(1, 3), (3, 1)])
    C = canonical_form(I)
    assert C.copies() == {1: [1, 2], 2: [1], 3: [1]}


@given(monomial_lists())
@settings(max_examples=150)
def test_canonical_form_idempotent(gens):
    I = minimalize(gens)
    C = canonical_form(I)
    assert canonical_form(C) == C


@given(monomial_lists(), st.randoms())
@settings(max_examples=150)
def test_canonical_form_ignores_copy_relabeling(gens, rnd):
    I = minimalize(gens)
    mapping = {}
    for base, copies in I.copies().items():
        fresh = rnd.sample(range(1, 20), len(copies))
        mapping.update({VarRef(base, c): VarRef(base, f) for c, f in zip(copies, fresh)})
    J = MonomialIdeal(tuple(g.relabeled(mapping) for g in I.gens))
    assert canonical_form(I) == canonical_form(J)


def test_canonical_form_separates_different_ideals():
    a = ideal([(1, 1), (2, 1)], [(1, 2), (3, 1)])
    b = ideal([(1, 1), (2, 1)], [(1, 1), (3, 1)])
    assert canonical_form(a) != canonical_form(b)


def test_isomorphic_allows_cross_base_relabeling():
    # x1^(2) of the box polarization plays the role of a brand new base
    a = ideal([(1, 1), (1, 2)])
    b = ideal([(1, 1), (2, 1)])
    assert isomorphic(a, b)
    assert canonical_form(a) != canonical_form(b)


def test_standard_polarization_of_power():
    assert standard_polarization(ideal([(1, 1, 2)])).gens == ideal([(1, 1), (1, 2)]).gens


def test_box_polarization_generator_count():
    assert len(box_polarization(3, 4).gens) == 15
    assert all(g.is_squarefree for g in box_polarization(3, 4).gens)


def test_squarefree_power_counts():
    assert len(squarefree_power(5, 2).gens) == 10
    assert squarefree_power(4, 3).n == 4


def test_json_round_trip():
    I = box_polarization(3, 2)
    assert MonomialIdeal.from_json(json.loads(json.dumps(I.to_json()))) == I
    assert Monomial.from_json([[1, 2]]) == mono(x(1, 2))


def test_from_json_keeps_declared_ambient():
    I = MonomialIdeal.from_json({"n": 4, "generators": [[[1, 1], [2, 1]]]})
    assert VarRef(4) in I.ambient and I.n == 4
