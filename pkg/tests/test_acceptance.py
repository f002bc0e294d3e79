"""End-to-end acceptance checks.

One test per criterion.  Each prints a single ``ACCEPTANCE nn slug: PASS``
line (visible under ``pytest -s``) carrying the measured wall-clock time and
the budget it had to beat; a budget overrun or a wrong value fails the test.
"""

import sys
import time

from regulus.homext import (
    ext_dim,
    ext_dim_oracle,
    euler_form,
    hom_dim,
    hom_dim_oracle,
)
from regulus.kronecker import (
    epiclass_catalog,
    extends_along_all,
    silting_catalog,
)
from regulus.localization import (
    WitnessStep,
    full_turn_witness,
    generator_system,
    ray_caps,
    ray_caps_nonroot,
    wing_complement_generators,
)
from regulus.tilting import (
    BranchModule,
    Pair,
    build_cotilting,
    build_tilting,
    enumerate_branch_modules,
    pruefer_socles,
    wings_of,
)
from regulus.tubes import Segment, TubeConfig, tau
from regulus.verify import (
    closure_suite,
    minimality_suite,
    single_tube_pairs,
    perp_match_suite,
    witness_suite,
)

from oracles import brute_force_branch_families


def report(num, slug, budget, started):
    elapsed = time.perf_counter() - started
    assert elapsed < budget, f"{slug}: {elapsed:.2f}s over the {budget:.0f}s budget"
    print(f"ACCEPTANCE {num:02d} {slug}: PASS ({elapsed:.2f}s < {budget:.0f}s)")
    sys.stdout.flush()


def seg(tube, socle, length, rank):
    return Segment(tube, socle, length, rank)


def test_01_single_wing_generators():
    started = time.perf_counter()
    cfg = TubeConfig((("t1", 3),))
    pair = Pair(cfg, BranchModule.of([seg("t1", 1, 1, 3)]), frozenset({"t1"}))
    assert pruefer_socles(pair) == (seg("t1", 1, 1, 3), seg("t1", 3, 1, 3))
    entry = generator_system(pair).entry("t1")
    assert entry.caps == ()
    assert entry.generators == (
        seg("t1", 1, 2, 3),
        seg("t1", 1, 3, 3),
        seg("t1", 3, 1, 3),
    )
    report(1, "rank3-single-wing", 1.0, started)


def test_02_full_wing_family():
    started = time.perf_counter()
    for rank in range(2, 7):
        cfg = TubeConfig((("t1", rank),))
        branch = BranchModule.of(
            [seg("t1", 1, k, rank) for k in range(1, rank)]
        )
        pair = Pair(cfg, branch, frozenset({"t1"}))
        assert pruefer_socles(pair) == (seg("t1", 1, 1, rank),)
        entry = generator_system(pair).entry("t1")
        assert entry.generators == (seg("t1", 1, rank, rank),)
    report(2, "full-wing-ladder", 1.0, started)


def test_03_two_tube_mixed_roles():
    started = time.perf_counter()
    cfg = TubeConfig((("lam", 4), ("mu", 3)))
    branch = BranchModule.of(
        [
            seg("lam", 1, 3, 4),
            seg("lam", 2, 2, 4),
            seg("lam", 2, 1, 4),
            seg("mu", 1, 2, 3),
            seg("mu", 2, 1, 3),
        ]
    )
    system = generator_system(Pair(cfg, branch, frozenset({"lam"})))
    assert system.branch_tubes() == ("lam", "mu")
    lam = system.entry("lam")
    mu = system.entry("mu")
    assert lam.in_p and lam.caps == (seg("lam", 2, 2, 4),)
    assert lam.complement == ((seg("lam", 1, 4, 4),),)
    assert not mu.in_p
    assert mu.caps == (seg("mu", 1, 2, 3), seg("mu", 2, 1, 3))
    assert mu.complement == ()
    report(3, "two-tube-mixed-roles", 1.0, started)


def test_04_rank12_two_wings():
    started = time.perf_counter()
    cfg = TubeConfig((("t1", 12),))

    def f(socle, length=1):
        return seg("t1", socle, length, 12)

    branch = BranchModule.of(
        [f(1, 3), f(7, 4), f(7, 3), f(7, 2), f(7), f(1, 2), f(2)]
    )
    w1, w2 = wings_of(branch, "t1")
    r1, r2 = wing_complement_generators((w1, w2))
    assert r1 == (f(1, 4), f(1, 5), f(1, 6), f(5), f(6))
    assert r2 == (f(7, 5), f(7, 6), f(12))
    # The first wing carries summands S_1[2], S_1[3], S_2; localizing at the
    # tube prunes the root ray from its cap list.
    assert ray_caps(w1, branch) == (f(1, 3), f(2))
    assert ray_caps_nonroot(w1, branch) == (f(2),)
    report(4, "rank12-two-wings", 1.0, started)


def test_05_dimension_formulas_match_oracle():
    started = time.perf_counter()
    for rank in range(1, 6):
        cfg = TubeConfig((("t1", rank),))
        for x in cfg.segments("t1", 12):
            for y in cfg.segments("t1", 12):
                h = hom_dim(x, y)
                e = ext_dim(x, y)
                assert h == hom_dim_oracle(x, y)
                assert e == ext_dim_oracle(x, y)
                assert e == hom_dim(y, tau(x))
                assert h - e == euler_form(x, y)
    report(5, "hom-ext-oracle-sweep", 60.0, started)


def test_06_localization_match_sweep():
    started = time.perf_counter()
    result = perp_match_suite((2, 3, 4), len_bound_mult=3)
    assert result.failed == 0 and result.failures == ()
    assert result.passed == sum(
        len(single_tube_pairs(r)) for r in (2, 3, 4)
    )
    report(6, "generated-vs-perp-match", 300.0, started)


def test_07_witness_sweep_and_pinned_chain():
    started = time.perf_counter()
    result = witness_suite((2, 3, 4))
    assert result.failed == 0 and result.failures == ()

    cfg = TubeConfig((("t1", 12),))

    def f(socle, length=1):
        return seg("t1", socle, length, 12)

    branch = BranchModule.of(
        [f(1, 3), f(7, 4), f(7, 3), f(7, 2), f(7), f(1, 2), f(2)]
    )
    pair = Pair(cfg, branch, frozenset({"t1"}))
    witness = full_turn_witness(f(1), pair)
    assert witness.steps == (
        WitnessStep(f(1, 6), f(1, 12), f(7, 6), "generator", "generator"),
    )
    report(7, "full-turn-witnesses", 120.0, started)


def test_08_closure_stability():
    started = time.perf_counter()
    result = closure_suite((2, 3, 4), len_bound_mult=3)
    assert result.failed == 0 and result.failures == ()
    report(8, "closure-stability", 120.0, started)


def test_09_minimality_laws():
    started = time.perf_counter()
    result = minimality_suite((2, 3, 4))
    assert result.failed == 0 and result.failures == ()
    # Spot-check the construction-level laws directly on one rank.
    for localize in (True, False):
        for pair in single_tube_pairs(3, localize=localize):
            tilting = build_tilting(pair)
            cotilting = build_cotilting(pair)
            localized = bool(pair.tube_set)
            assert tilting.is_minimal() == localized
            assert bool(tilting.socles) == localized
            assert cotilting.is_minimal() == bool(cotilting.adic_socles)
            assert bool(cotilting.adic_socles) == localized
    report(9, "minimality-laws", 60.0, started)


def test_10_kronecker_matrix():
    started = time.perf_counter()
    max_i = 10
    points = ("x", "y", "z")
    epis = epiclass_catalog(max_i, points)
    silting = silting_catalog(max_i, points)

    expected_epis = ["R->0", "id"]
    expected_epis += [f"loc(P{i})" for i in range(1, max_i + 2)]
    expected_epis += [f"loc(Q{i})" for i in range(1, max_i + 1)]
    expected_epis += [
        "loc(x)",
        "loc(y)",
        "loc(z)",
        "loc(x,y)",
        "loc(x,z)",
        "loc(y,z)",
        "loc(x,y,z)",
    ]
    assert [str(e) for e in epis] == expected_epis

    expected_silting = ["0", "P1", "Q1"]
    expected_silting += [f"P{i}+P{i + 1}" for i in range(1, max_i + 1)]
    expected_silting += [f"Q{i + 1}+Q{i}" for i in range(1, max_i + 1)]
    expected_silting += [
        "R(x)",
        "R(y)",
        "R(z)",
        "R(x,y)",
        "R(x,z)",
        "R(y,z)",
        "R(x,y,z)",
    ]
    expected_silting += ["L"]
    assert [str(t) for t in silting] == expected_silting

    # Restriction targets, pinned item by item.
    biref = {str(e): str(e.bireflective) for e in epis}
    expected_biref = {"R->0": "{0}", "id": "Mod", "loc(P1)": "Add(Q1)"}
    for i in range(2, max_i + 2):
        expected_biref[f"loc(P{i})"] = f"Add(P{i - 1})"
    for i in range(1, max_i + 1):
        expected_biref[f"loc(Q{i})"] = f"Add(Q{i + 1})"
    for label in expected_epis[-7:]:
        expected_biref[label] = "perp" + label[3:]
    assert biref == expected_biref

    assert {str(e) for e in epis if e.surjective} == {"R->0", "loc(P1)", "loc(P2)"}

    # The simple projective is the one entry whose generated class fails to
    # survive some restriction; every other entry extends along all of them.
    for entry in silting:
        assert extends_along_all(entry, epis) == (entry.kind != "simple_proj")
    report(10, "kronecker-extension-matrix", 10.0, started)


def test_11_enumerator_cross_check():
    started = time.perf_counter()
    for rank in range(1, 5):
        cfg = TubeConfig((("t1", rank),))
        fast = sorted(bm.summands for bm in enumerate_branch_modules(cfg))
        slow = brute_force_branch_families(cfg, "t1")
        assert fast == slow
    report(11, "enumerator-cross-check", 120.0, started)
