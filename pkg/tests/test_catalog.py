import collections
import math

import pytest

from gelfdual.catalog import (InvalidRecipe, build_table, dual_recipe, dual_search, extended_catalog,
                              format_table, formula_M, formula_nonexample, full_catalog, instantiate,
                              load_catalog, mini_catalog, name_triple, parse_recipe, predicted_degree,
                              recipe_triple)
from gelfdual.triples import find_isomorphism


def test_recipe_degrees_and_orders():
    cases = {
        "wreath 4 2": (8, 1152),
        "semidirect 7 ; 2": (7, 21),
        "diagonal sym 3": (6, 36),
        "young 2 5": (10, 120),
        "abelian 2 3": (6, 6),
        "twisted_square symmetric 3": (6, 72),
        "alt 6": (6, 360),
        "semidirect 3 3 ; 2 0 0 2": (9, 18),
    }
    for text, (deg, order) in cases.items():
        pair = instantiate(text)
        assert (pair.degree, pair.group.order()) == (deg, order), text
        assert predicted_degree(parse_recipe(text)) == deg


def test_diagonal_stabilizer_is_diagonal():
    pair = instantiate("diagonal sym 3")
    assert pair.stabilizer.order() == 6


@pytest.mark.parametrize("text", [
    "wreath 2", "symmetric 0", "alt 2", "young 3 3", "semidirect 4 ; 2", "semidirect 7 ; 7",
    "semidirect 2 2 ; 1 0 0", "sporadic m24", "bogus 1", "", "diagonal dihedral 4", "cyclic x",
])
def test_invalid_recipes(text):
    with pytest.raises(InvalidRecipe):
        parse_recipe(text)


def test_missing_pair_file():
    with pytest.raises(InvalidRecipe):
        instantiate("file /nonexistent/nowhere.pair")


def test_recipe_text_round_trip():
    for r in full_catalog():
        assert parse_recipe(r.text, r.base_dir) == r


def test_dual_recipes():
    assert dual_recipe(parse_recipe("wreath 2 3")) == parse_recipe("wreath 3 2")
    assert dual_recipe(parse_recipe("symmetric 5")) == parse_recipe("symmetric 5")
    # mult-by-2 on Z7 has adjoint mult-by-4 = 2^-1
    assert dual_recipe(parse_recipe("semidirect 7 ; 2")).text == "semidirect 7 ; 4"
    assert dual_recipe(parse_recipe("young 2 5")) is None


def test_dual_recipes_realize_duals():
    from gelfdual.triples import dual_triple
    for r in full_catalog():
        d = dual_recipe(r)
        if d is None or predicted_degree(r) > 16:
            continue
        t = recipe_triple(r)
        assert find_isomorphism(recipe_triple(d), dual_triple(t)), r.text


def test_mini_catalog_is_a_census_up_to_seven():
    counts = collections.Counter(instantiate(r).degree for r in mini_catalog())
    assert [counts[n] for n in range(2, 8)] == [1, 2, 5, 5, 16, 7]
    # no two entries are the same permutation group up to relabeling, as far
    # as order, suborbit sizes and triple can tell apart
    sig = set()
    for r in mini_catalog():
        p = instantiate(r)
        key = (p.degree, p.group.order(), tuple(sorted(map(len, p.stabilizer.orbits()))))
        sig.add((key, r.text))
    assert len(sig) == 36


def test_family_recipes_are_gelfand():
    for r in full_catalog():
        if r.kind in ("symmetric", "alt", "cyclic", "abelian", "wreath", "young", "semidirect"):
            assert recipe_triple(r) is not None, r.text


def test_dual_search_examples():
    rep = dual_search(recipe_triple(parse_recipe("sporadic m11_22")), full_catalog())
    assert [r.text for r, _ in rep.found] == ["twisted_square sporadic m11"]
    rep = dual_search(recipe_triple(parse_recipe("file transitive/cube_faces.pair")), mini_catalog())
    assert "diagonal sym 3" in [r.text for r, _ in rep.found]
    rep = dual_search(recipe_triple(parse_recipe("young 2 5")), full_catalog())
    assert not rep.prefilter_passed and rep.found == []


def test_dual_search_collects_failures(tmp_path):
    bad = tmp_path / "c.txt"
    bad.write_text("file missing.pair\nsymmetric 4\nfile ../nothing/at/all.pair\n")
    rep = dual_search(recipe_triple(parse_recipe("alt 4")), load_catalog(str(bad)))
    assert [r.text for r, _ in rep.found] == ["symmetric 4"]
    assert sum(1 for _, why in rep.skipped if why.startswith("error")) == 2


def test_named_families():
    assert name_triple(recipe_triple(parse_recipe("wreath 2 3"))) == "M_{2,3}"
    assert name_triple(recipe_triple(parse_recipe("cyclic 9"))) == "E_9"
    assert name_triple(recipe_triple(parse_recipe("sporadic m11"))) == "L_11"
    assert name_triple(recipe_triple(parse_recipe("young 2 5"))) is None


def test_nonexample_family():
    for n in range(4, 9):
        t = recipe_triple(parse_recipe(f"young 2 {n}"))
        assert t.x_size == math.comb(n, 2)
        assert find_isomorphism(t, formula_nonexample(n - 2))
    assert find_isomorphism(formula_nonexample(2), formula_M(2, 3))


def test_table_small_degrees():
    rows = build_table(4)
    names = [[e.label for e in row.entries] for row in rows]
    assert names == [["L_2"], ["L_3", "E_3"], ["L_4", "M_{2,2}", "E_4"]]
    assert [len(e.realizations) for e in rows[2].entries] == [2, 1, 1]
    assert [[e.label for e in row.entries] for row in build_table(2)] == [["L_2"]]


def test_table_formats_are_deterministic():
    rows = build_table(5)
    assert format_table(rows) == format_table(build_table(5))
    machine = format_table(rows, machine=True)
    assert all("=" in tok for line in machine.splitlines() for tok in line.split())


def test_extended_catalog_loads():
    assert len(extended_catalog()) > 10
