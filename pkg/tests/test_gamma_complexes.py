from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from flaggamma.complex import is_flag
from flaggamma.errors import BudgetExceededError, DomainError, PreconditionError
from flaggamma.gamma_complexes import (
    adjacent_des,
    arcs_adjacent,
    assemble,
    balanced_coloring,
    bar_positions_separated,
    build_gamma_complex,
    bullets_hold,
    coarsen,
    coloring_is_balanced,
    des_vertices,
    flag_defects,
    format_label,
    gamma_image_complex,
    lr_adjacent,
    noncrossing,
    phi,
    phi_bijection_failures,
    phi_inverse,
    pi,
    pi_inverse,
    psi,
    psi_inverse,
    verify_poset_iso,
)
from flaggamma.permstats import (
    DecPerm,
    PairTableau,
    enumerate_decorated,
    enumerate_pairs,
    enumerate_pk312,
    gamma_A,
    gamma_assoc,
    gamma_B,
    gamma_cyc,
    gamma_D,
    is_type_D,
    parse_decperm,
    render,
)

P = parse_decperm

# Clique complexes that disagree with the gamma-vector: (family, n) -> (clique f, gamma).
CLIQUE_MISMATCH = {
    ("A", 7): ((1, 114, 720, 294), (1, 114, 720, 272)),
    ("B", 6): ((1, 716, 7664, 4160), (1, 716, 7664, 3904)),
    ("D", 4): ((1, 40, 32), (1, 40, 16)),
    ("D", 5): ((1, 152, 448), (1, 152, 336)),
}

GAMMA = {"A": gamma_A, "B": gamma_B, "D": gamma_D, "assoc": gamma_assoc, "cyc": gamma_cyc}


class TestAdjacency:
    def test_worked_example(self):
        u, v = P("4|12356789"), P("2348|1 76519")
        assert adjacent_des(u, v) and adjacent_des(v, u)
        word, bars = assemble(u, v)
        assert render(DecPerm(word, bars)) == "4|0 238|1 76519"

    def test_bullets_over_accept(self):
        u, v = P("3|124"), P("13|24")
        assert bullets_hold(u, v)
        assert adjacent_des(u, v, rule="bullets")
        assert not adjacent_des(u, v)

    def test_word_rule_over_accepts(self):
        u, v = P("3|0 214"), P("234|0 1")
        assert adjacent_des(u, v, rule="word")
        assert not adjacent_des(u, v)

    def test_same_position_never_adjacent(self):
        assert not adjacent_des(P("2|1 13"), P("2|0 13"))

    def test_unknown_rule(self):
        with pytest.raises(DomainError):
            adjacent_des(P("2|13"), P("13|2"), rule="magic")

    def test_mixed_n(self):
        with pytest.raises(DomainError):
            adjacent_des(P("2|13"), P("13|24"))

    def test_bars_two_apart_on_faces(self):
        gc = build_gamma_complex("B", 5)
        assert bar_positions_separated(gc)
        assert coloring_is_balanced(gc)


class TestPhi:
    def test_example(self):
        dp = P("4|238|1 76519")
        assert {render(v) for v in phi(dp)} == {"4|0 12356789", "2348|1 76519"}
        assert phi_inverse(phi(dp)) == dp

    def test_empty_face(self):
        assert phi_inverse([], 3) == DecPerm((1, 2, 3))
        with pytest.raises(PreconditionError):
            phi_inverse([])

    def test_coarsen(self):
        dp = P("4|238|1 76519")
        assert render(coarsen(dp, 2)) == "4|0 12356789"
        assert render(coarsen(dp, 1)) == "2348|1 76519"
        with pytest.raises(DomainError):
            coarsen(dp, 3)

    def test_non_adjacent_face(self):
        with pytest.raises(PreconditionError):
            phi_inverse([P("3|124"), P("13|24")])

    @pytest.mark.parametrize("n", range(1, 6))
    def test_bijection(self, n):
        assert phi_bijection_failures(n) == []

    def test_bullets_rule_breaks_bijection(self):
        assert phi_bijection_failures(4, rule="bullets")

    @pytest.mark.parametrize("n", [1, 3, 4])
    def test_poset_iso(self, n):
        assert verify_poset_iso(n)

    def test_poset_iso_budget(self):
        with pytest.raises(BudgetExceededError):
            verify_poset_iso(6)

    @given(st.sampled_from(enumerate_decorated(6)))
    @settings(max_examples=200, deadline=None)
    def test_round_trip_n6(self, dp):
        assert phi_inverse(phi(dp), 6) == dp
        assert len(phi(dp)) == dp.pk


class TestColoring:
    def test_values(self):
        assert balanced_coloring(P("2|13")) == 1
        assert balanced_coloring(P("13|2")) == 1
        assert balanced_coloring(P("124|3")) == 2

    def test_vertex_counts(self):
        assert len(des_vertices(2)) == 4
        assert len(des_vertices(3)) == 20


class TestArcs:
    def test_noncrossing(self):
        assert noncrossing((1, 2), (3, 4))
        assert noncrossing((1, 4), (2, 3))
        assert not noncrossing((1, 3), (2, 4))

    def test_shared_endpoint_not_adjacent(self):
        assert not arcs_adjacent((1, 2), (2, 3))

    def test_pi(self):
        assert pi((2, 1, 4, 3, 5)) == {(1, 2), (3, 4)}
        assert pi((1, 2, 3)) == frozenset()
        with pytest.raises(PreconditionError):
            pi((3, 1, 2))

    def test_pi_inverse(self):
        assert pi_inverse({(1, 2), (3, 4)}, 5) == (2, 1, 4, 3, 5)
        assert pi_inverse(set(), 3) == (1, 2, 3)

    def test_pi_inverse_rejects_crossing(self):
        with pytest.raises(PreconditionError):
            pi_inverse({(1, 3), (2, 4)}, 5)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_pi_round_trip(self, n):
        for w in enumerate_pk312(n):
            assert pi_inverse(pi(w), n) == w


class TestPairs:
    def test_lr_adjacent(self):
        assert lr_adjacent((1, 2), (3, 4))
        assert not lr_adjacent((1, 4), (2, 3))
        assert not lr_adjacent((1, 2), (1, 3))

    def test_psi(self):
        assert psi(PairTableau((1, 3), (2, 4))) == {(1, 2), (3, 4)}
        assert psi_inverse({(1, 2), (3, 4)}) == PairTableau((1, 3), (2, 4))

    def test_psi_rejects_non_face(self):
        with pytest.raises(PreconditionError):
            psi_inverse({(1, 4), (2, 3)})

    @pytest.mark.parametrize("n", range(1, 6))
    def test_psi_round_trip(self, n):
        for s in enumerate_pairs(n):
            assert psi_inverse(psi(s)) == s


class TestBuild:
    def test_cyc2(self):
        assert build_gamma_complex("cyc", 2).fvector == (1, 2)

    def test_assoc5(self):
        gc = build_gamma_complex("assoc", 5)
        assert gc.fvector == (1, 6, 2)
        edges = {frozenset(gc.label_face(f)) for f in gc.complex.faces_of_size(2)}
        assert edges == {frozenset({(1, 2), (3, 4)}), frozenset({(1, 4), (2, 3)})}

    def test_a5(self):
        assert build_gamma_complex("A", 5).fvector == (1, 22, 16)

    def test_unknown_family(self):
        with pytest.raises(DomainError):
            build_gamma_complex("E", 3)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            build_gamma_complex("B", 9)

    @pytest.mark.parametrize("family,n", [("A", n) for n in range(1, 7)] + [("B", n) for n in range(1, 6)]
                             + [("D", n) for n in range(2, 4)] + [("assoc", n) for n in range(1, 9)]
                             + [("cyc", n) for n in range(1, 7)])
    def test_clique_complex_matches_gamma(self, family, n):
        gc = build_gamma_complex(family, n)
        assert gc.fvector == GAMMA[family](n)
        assert is_flag(gc.complex)

    def test_labels(self):
        assert format_label(P("4|12356789")) == "4|0 12356789"
        assert format_label((1, 3)) == "(1,3)"


class TestImageComplex:
    @pytest.mark.parametrize("family,n", [("A", 7), ("B", 5), ("D", 4), ("D", 5), ("assoc", 7), ("cyc", 5)])
    def test_image_matches_gamma(self, family, n):
        gc = gamma_image_complex(family, n)
        assert gc.fvector == GAMMA[family](n)
        if family in ("A", "B", "D"):
            assert coloring_is_balanced(gc)


class TestFlagDefects:
    """The clique complex over-counts for these (family, n); frozen regressions."""

    @pytest.mark.parametrize("key", sorted(CLIQUE_MISMATCH))
    def test_mismatch(self, key):
        clique_f, gamma = CLIQUE_MISMATCH[key]
        assert GAMMA[key[0]](key[1]) == gamma
        if key != ("B", 6):
            assert build_gamma_complex(*key).fvector == clique_f

    def test_a7_counterexample(self):
        bad = [P("5|0 123467"), P("135|0 2467"), P("13456|0 27")]
        for u, v in combinations(bad, 2):
            assert adjacent_des(u, v)
        with pytest.raises(PreconditionError):
            phi_inverse(bad)
        defects = flag_defects("A", 7)
        assert len(defects) == 22
        assert [render(x) for x in defects[0]] == ["5|0 123467", "135|0 2467", "13456|0 27"]

    def test_d4_counterexample(self):
        defects = flag_defects("D", 4)
        assert len(defects) == 16
        assert [render(x) for x in defects[0]] == ["3|0 124", "134|0 2"]
        # the only candidate preimage leaves the type-D family
        back = phi_inverse(defects[0])
        assert render(back) == "3|0 14|0 2"
        assert not is_type_D(back)

    def test_no_defects_when_counts_agree(self):
        assert flag_defects("B", 4) == []
        assert flag_defects("assoc", 6) == []
