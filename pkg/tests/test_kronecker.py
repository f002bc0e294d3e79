"""Kronecker catalogs, the Euler-form dimension rules, and the extension
decision procedure."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from regulus.kronecker import (
    AXIOM_NAMES,
    AXIOMS,
    Bireflective,
    EpiClass,
    KronObject,
    RuleMissingError,
    SiltingEntry,
    axiom,
    epiclass_catalog,
    euler_form,
    ext_dim,
    extends_along_all,
    extension_check,
    extension_matrix,
    hom_dim,
    hom_nonzero,
    hom_nonzero_fact,
    inj,
    pre,
    reg,
    silting_catalog,
)

POINTS = ("x", "y", "z")


# ---------------------------------------------------------------------------
# Objects and dimensions
# ---------------------------------------------------------------------------


def test_dim_vectors():
    assert pre(1).dim_vector() == (0, 1)
    assert pre(4).dim_vector() == (3, 4)
    assert inj(1).dim_vector() == (1, 0)
    assert reg("x", 3).dim_vector() == (3, 3)
    assert KronObject("zero").dim_vector() == (0, 0)
    assert KronObject("lukas").dim_vector() is None
    assert KronObject("pruefer_at", point="x").dim_vector() is None


def test_object_validation():
    with pytest.raises(ValueError):
        KronObject("projective")
    with pytest.raises(ValueError):
        pre(0)
    with pytest.raises(ValueError):
        KronObject("reg", 2)
    with pytest.raises(ValueError):
        KronObject("adic_at")


def test_object_labels():
    assert str(pre(3)) == "P3"
    assert str(inj(1)) == "Q1"
    assert str(reg("x", 2)) == "R(x)[2]"
    assert str(KronObject("lukas")) == "L"
    assert str(KronObject("generic")) == "G"
    assert str(KronObject("adic_at", point="y")) == "adic(y)"


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12))
def test_hom_between_preprojectives(i, j):
    expected = j - i + 1 if j >= i else 0
    assert hom_dim(pre(i), pre(j)) == expected


def test_neighbour_hom_is_two():
    assert hom_dim(pre(5), pre(6)) == 2
    assert hom_dim(inj(6), inj(5)) == 2


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=12))
def test_hom_between_preinjectives(i, j):
    expected = i - j + 1 if i >= j else 0
    assert hom_dim(inj(i), inj(j)) == expected


def test_cross_component_dimensions():
    assert hom_dim(pre(1), inj(1)) == 0
    assert hom_dim(pre(1), inj(2)) == 1
    assert ext_dim(pre(1), inj(2)) == 0
    assert hom_dim(inj(2), pre(3)) == 0
    assert ext_dim(inj(2), pre(3)) == 5
    assert hom_dim(pre(2), reg("x", 3)) == 3
    assert ext_dim(reg("x", 3), pre(2)) == 3
    assert hom_dim(reg("x", 2), reg("x", 5)) == 2
    assert hom_dim(reg("x", 2), reg("y", 5)) == 0
    assert hom_dim(KronObject("zero"), pre(4)) == 0


@given(
    st.sampled_from(["pre", "inj", "reg"]),
    st.sampled_from(["pre", "inj", "reg"]),
    st.integers(min_value=1, max_value=9),
    st.integers(min_value=1, max_value=9),
)
def test_euler_form_is_hom_minus_ext(ka, kb, i, j):
    a = reg("x", i) if ka == "reg" else KronObject(ka, i)
    b = reg("x", j) if kb == "reg" else KronObject(kb, j)
    assert euler_form(a.dim_vector(), b.dim_vector()) == hom_dim(a, b) - ext_dim(a, b)


def test_dimension_rules_refuse_infinite_kinds():
    with pytest.raises(RuleMissingError):
        hom_dim(KronObject("lukas"), pre(1))


# ---------------------------------------------------------------------------
# Epiclass catalog
# ---------------------------------------------------------------------------


def test_epiclass_catalog_golden():
    catalog = epiclass_catalog(2, ("x",))
    assert [str(e) for e in catalog] == [
        "R->0",
        "id",
        "loc(P1)",
        "loc(P2)",
        "loc(P3)",
        "loc(Q1)",
        "loc(Q2)",
        "loc(x)",
    ]


def test_bireflective_pairings():
    catalog = epiclass_catalog(2, ("x",))
    pairs = {str(e): str(e.bireflective) for e in catalog}
    assert pairs == {
        "R->0": "{0}",
        "id": "Mod",
        "loc(P1)": "Add(Q1)",
        "loc(P2)": "Add(P1)",
        "loc(P3)": "Add(P2)",
        "loc(Q1)": "Add(Q2)",
        "loc(Q2)": "Add(Q3)",
        "loc(x)": "perp(x)",
    }


def test_epiclass_catalog_no_points_no_reg_entries():
    assert all(e.kind != "loc_reg" for e in epiclass_catalog(3, ()))


def test_epiclass_catalog_duplicate_free():
    catalog = epiclass_catalog(5, POINTS)
    assert len(set(catalog)) == len(catalog)
    assert len(catalog) == 2 + 6 + 5 + 7


def test_surjective_flags():
    surjective = {str(e) for e in epiclass_catalog(3, ("x",)) if e.surjective}
    assert surjective == {"R->0", "loc(P1)", "loc(P2)"}


def test_epiclass_validation():
    with pytest.raises(ValueError):
        epiclass_catalog(0, ())
    with pytest.raises(ValueError):
        EpiClass("loc_pre", 0)
    with pytest.raises(ValueError):
        EpiClass("loc_reg", points=("y", "x"))
    with pytest.raises(ValueError):
        EpiClass("loc_reg", points=())


# ---------------------------------------------------------------------------
# Silting catalog
# ---------------------------------------------------------------------------


def test_silting_catalog_golden():
    catalog = silting_catalog(1, ("x", "y"))
    assert [str(t) for t in catalog] == [
        "0",
        "P1",
        "Q1",
        "P1+P2",
        "Q2+Q1",
        "R(x)",
        "R(y)",
        "R(x,y)",
        "L",
    ]


def test_non_tilting_entries():
    catalog = silting_catalog(4, POINTS)
    not_tilting = {str(t) for t in catalog if not t.is_tilting}
    assert not_tilting == {"0", "P1", "Q1"}


def test_lukas_is_the_unique_non_minimal_entry():
    catalog = silting_catalog(6, POINTS)
    non_minimal = [t for t in catalog if not t.is_minimal]
    assert [t.kind for t in non_minimal] == ["lukas"]


def test_gen_class_descriptors():
    assert SiltingEntry("zero").gen_class == "{0}"
    assert SiltingEntry("simple_proj").gen_class == "Add(P1)"
    assert SiltingEntry("simple_inj").gen_class == "Add(Q1)"
    assert SiltingEntry("pre_pair", 2).gen_class == "(P2+P3)^perp1"
    assert SiltingEntry("inj_pair", 2).gen_class == "(Q3+Q2)^perp1"
    assert SiltingEntry("reg_loc", points=("x", "y")).gen_class == "(x,y)^perp1"
    assert SiltingEntry("lukas").gen_class == "perp0(preprojectives)"


def test_silting_catalog_duplicate_free():
    catalog = silting_catalog(10, POINTS)
    assert len(set(catalog)) == len(catalog)
    assert len(catalog) == 3 + 10 + 10 + 7 + 1


# ---------------------------------------------------------------------------
# Rule table
# ---------------------------------------------------------------------------


def test_hom_nonzero_examples():
    assert hom_nonzero(pre(1), Bireflective("reg_perp", points=("x",)))
    assert not hom_nonzero(inj(1), Bireflective("add_pre", 4))
    assert hom_nonzero(pre(3), Bireflective("add_pre", 3))
    assert not hom_nonzero(pre(3), Bireflective("add_pre", 2))
    assert hom_nonzero(inj(3), Bireflective("add_inj", 2))
    assert not hom_nonzero(inj(1), Bireflective("add_inj", 2))
    assert not hom_nonzero(pre(1), Bireflective("add_inj", 1))
    assert not hom_nonzero(KronObject("zero"), Bireflective("all"))
    assert not hom_nonzero(pre(1), Bireflective("zero"))
    assert not hom_nonzero(KronObject("lukas"), Bireflective("add_pre", 5))


def test_fact_sources_distinguish_axioms_from_arithmetic():
    euler_fact = hom_nonzero_fact(pre(2), Bireflective("add_pre", 3))
    assert euler_fact.source == "euler"
    axiom_fact = hom_nonzero_fact(inj(1), Bireflective("add_pre", 3))
    assert axiom_fact.source == "axiom:preinj-to-preproj"
    generic = hom_nonzero_fact(pre(1), Bireflective("reg_perp", points=("x",)))
    assert generic.source == "axiom:generic-reflects"


def test_every_cited_axiom_is_registered():
    grid = [
        (a, x)
        for a in (pre(1), pre(3), inj(1), inj(3), KronObject("lukas"), KronObject("zero"))
        for x in (
            Bireflective("zero"),
            Bireflective("all"),
            Bireflective("add_pre", 2),
            Bireflective("add_inj", 2),
            Bireflective("reg_perp", points=("x",)),
        )
    ]
    for a, x in grid:
        try:
            fact = hom_nonzero_fact(a, x)
        except RuleMissingError:
            continue
        if fact.source.startswith("axiom:"):
            assert fact.source[len("axiom:"):] in AXIOM_NAMES


def test_rule_missing_is_loud():
    with pytest.raises(RuleMissingError):
        hom_nonzero(KronObject("lukas"), Bireflective("reg_perp", points=("x",)))
    with pytest.raises(RuleMissingError):
        hom_nonzero(reg("x", 1), Bireflective("add_pre", 2))
    with pytest.raises(RuleMissingError):
        axiom("flux-capacitor")


def test_axiom_registry():
    assert len(AXIOM_NAMES) == len(AXIOMS)
    assert axiom("lukas-class").statement.startswith("The Lukas module")
    assert "preinjective-perp" in AXIOM_NAMES


# ---------------------------------------------------------------------------
# Extension checks
# ---------------------------------------------------------------------------


def test_simple_projective_fails_at_regular_localization():
    assert not extension_check(SiltingEntry("simple_proj"), EpiClass("loc_reg", points=("x",)))


def test_simple_projective_fails_at_injective_localizations():
    assert not extension_check(SiltingEntry("simple_proj"), EpiClass("loc_pre", 3))
    assert not extension_check(SiltingEntry("simple_proj"), EpiClass("loc_inj", 1))


def test_simple_projective_survives_surjective_epis():
    for e in (EpiClass("zero"), EpiClass("identity"), EpiClass("loc_pre", 1), EpiClass("loc_pre", 2)):
        assert extension_check(SiltingEntry("simple_proj"), e)


def test_simple_injective_always_extends():
    for e in epiclass_catalog(6, POINTS):
        assert extension_check(SiltingEntry("simple_inj"), e)


def test_trivial_epiclasses_accept_everything():
    for t in silting_catalog(5, POINTS):
        assert extension_check(t, EpiClass("zero"))
        assert extension_check(t, EpiClass("identity"))


def test_self_induced_entries_extend():
    assert extension_check(SiltingEntry("pre_pair", 4), EpiClass("loc_pre", 5))
    assert extension_check(SiltingEntry("inj_pair", 3), EpiClass("loc_inj", 3))
    assert extension_check(
        SiltingEntry("reg_loc", points=("x", "y")), EpiClass("loc_reg", points=("x", "y"))
    )


def test_regular_localization_entries_extend_everywhere():
    entry = SiltingEntry("reg_loc", points=("y",))
    for e in epiclass_catalog(6, POINTS):
        assert extension_check(entry, e)


def test_extends_along_all_matches_the_simple_projective_criterion():
    epis = epiclass_catalog(10, POINTS)
    for t in silting_catalog(10, POINTS):
        assert extends_along_all(t, epis) == (t.kind != "simple_proj"), str(t)


def test_extends_along_all_tiny_truncation():
    epis = epiclass_catalog(1, ())
    assert not extends_along_all(SiltingEntry("simple_proj"), epis)
    assert extends_along_all(SiltingEntry("lukas"), epis)


def test_extension_matrix_shape():
    silting, epis, cells = extension_matrix(3, ("x",))
    assert len(cells) == len(silting) * len(epis)
    assert cells[("P1", "loc(x)")] is False
    assert cells[("L", "loc(x)")] is True
    assert all(isinstance(v, bool) for v in cells.values())
