from __future__ import annotations

import json
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from flaggamma.complex import (
    Complex,
    antistar,
    build_from_facets,
    clique_complex,
    contract_edge,
    format_facets,
    from_faces,
    graph_from_edges,
    has_induced_4cycle_through,
    induced,
    interior_antistar_vertices,
    is_flag,
    join,
    link,
    normalize,
    octahedral_sphere,
    parse_facets,
    polygon,
    read_facets,
    simplex_boundary,
    standard_complex,
    suspension,
    empty_sphere,
)
from flaggamma.errors import BudgetExceededError, DomainError, MalformedInputError
from flaggamma.homology import is_homology_sphere
from flaggamma.models import sphere_catalog


def graphs(max_vertices=7):
    """Random simple graphs on 0..n-1."""
    return st.integers(1, max_vertices).flatmap(
        lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                          .filter(lambda e: e[0] < e[1]), max_size=n * (n - 1) // 2)
        .map(lambda es: graph_from_edges(range(n), es))
    )


class TestBuild:
    def test_triangle_boundary(self):
        assert build_from_facets([[1, 2], [2, 3], [3, 1]]).fvector == (1, 3, 3)

    def test_point(self):
        assert build_from_facets([[1]]).fvector == (1, 1)

    def test_full_triangle(self):
        assert build_from_facets([[1, 2, 3]]).fvector == (1, 3, 3, 1)

    def test_empty_complex_dim(self):
        assert empty_sphere().dim == -1
        assert empty_sphere().fvector == (1,)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(MalformedInputError):
            build_from_facets([[1, 1, 2]])

    def test_negative_vertex_rejected(self):
        with pytest.raises(MalformedInputError):
            build_from_facets([[-1, 2]])

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            build_from_facets([range(20)], budget=1000)

    def test_from_faces_requires_closure(self):
        with pytest.raises(MalformedInputError):
            from_faces([(1, 2)])
        assert from_faces([(), (1,), (2,), (1, 2)]).fvector == (1, 2, 1)

    def test_facets_are_maximal(self):
        c = build_from_facets([[1, 2, 3], [1, 2], [3, 4]])
        assert c.facets == ((1, 2, 3), (3, 4))


class TestClique:
    def test_four_cycle(self):
        g = graph_from_edges(range(1, 5), [(1, 2), (2, 3), (3, 4), (4, 1)])
        assert clique_complex(g).fvector == (1, 4, 4)

    def test_k3(self):
        g = graph_from_edges(range(3), combinations(range(3), 2))
        assert clique_complex(g) == build_from_facets([[0, 1, 2]])

    def test_octahedron_graph(self):
        parts = [(1, 2), (3, 4), (5, 6)]
        edges = [(a, b) for i, p in enumerate(parts) for q in parts[i + 1:] for a in p for b in q]
        assert clique_complex(graph_from_edges(range(1, 7), edges)).fvector == (1, 6, 12, 8)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_clique_complex_is_flag(self, g):
        c = clique_complex(g)
        assert is_flag(c)
        for f in c.faces:
            for a, b in combinations(f, 2):
                assert b in g[a]


class TestFlag:
    # The hollow triangle is not flag: its three edges span a clique with no face.
    def test_hollow_triangle_not_flag(self):
        assert not is_flag(build_from_facets([[1, 2], [2, 3], [1, 3]]))
        assert not is_flag(from_faces([(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]))

    def test_tetrahedron_boundary_not_flag(self):
        assert not is_flag(simplex_boundary(4))

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_octahedral(self, d):
        assert is_flag(octahedral_sphere(d))


class TestLinkInduced:
    def test_vertex_link_in_octahedron(self):
        o = octahedral_sphere(3)
        lk = link(o, (1,))
        assert lk.fvector == (1, 4, 4)
        assert set(lk.vertices) == {3, 4, 5, 6}

    def test_edge_link_in_hexagon(self):
        assert link(polygon(6), (1, 2)).faces == frozenset({()})

    def test_link_of_empty_face(self):
        c = polygon(5)
        assert link(c, ()) == c

    def test_link_of_non_face(self):
        with pytest.raises(DomainError):
            link(polygon(5), (1, 3))

    def test_induced_path(self):
        assert induced(polygon(6), {1, 2, 3}).facets == ((1, 2), (2, 3))

    def test_antistar_pentagon(self):
        a = antistar(polygon(5), 1)
        assert a.fvector == (1, 4, 3)

    def test_induced_empty(self):
        assert induced(polygon(5), set()).faces == frozenset({()})

    def test_interior_antistar(self):
        o = octahedral_sphere(3)
        assert interior_antistar_vertices(o, 1) == {2}
        assert interior_antistar_vertices(polygon(5), 1) == {3, 4}
        assert interior_antistar_vertices(simplex_boundary(3), 1) == frozenset()

    def test_links_of_catalog_spheres_are_induced(self):
        for name, c in sphere_catalog(8):
            for f in c.faces:
                lk = link(c, f)
                assert lk == induced(c, lk.vertices), name
                assert is_flag(lk), name


class TestSuspensionJoin:
    def test_suspension_of_square(self):
        assert suspension(polygon(4)).fvector == (1, 6, 12, 8)

    def test_suspension_of_empty_sphere(self):
        assert suspension(empty_sphere()).fvector == (1, 2)

    def test_suspension_of_pentagon(self):
        s, (a, b) = suspension(polygon(5), return_apexes=True)
        assert (a, b) == (6, 7)
        assert len(s.vertices) == 7 and is_flag(s) and is_homology_sphere(s)

    def test_join_of_zero_spheres(self):
        s0 = build_from_facets([[1], [2]])
        assert join(s0, s0).fvector == (1, 4, 4)

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_iterated_join(self, d):
        s0 = build_from_facets([[1], [2]])
        c = s0
        for _ in range(d - 1):
            c = join(c, s0)
        assert c.fvector == tuple(comb(d, k) * 2 ** k for k in range(d + 1))

    def test_join_maps(self):
        j, m1, m2 = join(polygon(5), polygon(5), return_maps=True)
        assert m1 == {i: i for i in range(1, 6)}
        assert m2 == {i: i + 5 for i in range(1, 6)}
        assert j.fvector == (1, 10, 35, 50, 25)


class TestContraction:
    def test_hexagon_to_pentagon(self):
        c = contract_edge(polygon(6), 1, 2)
        assert c.fvector == (1, 5, 5)
        assert is_homology_sphere(c)

    def test_triangle_to_segment(self):
        c = contract_edge(simplex_boundary(3), 1, 2)
        assert c.facets == ((2, 3),)

    def test_octahedron_edge(self):
        c = contract_edge(octahedral_sphere(3), 1, 3)
        assert c.fvector == (1, 5, 9, 6)
        assert is_homology_sphere(c) and not is_flag(c)

    def test_non_edge(self):
        with pytest.raises(DomainError):
            contract_edge(polygon(5), 1, 3)

    def test_admissible_contractions_stay_flag(self):
        for name, c in sphere_catalog(9):
            for u, v in c.edges:
                if not has_induced_4cycle_through(c, u, v):
                    assert is_flag(contract_edge(c, u, v)), (name, u, v)


class TestInduced4Cycle:
    def test_hexagon(self):
        c = polygon(6)
        assert not any(has_induced_4cycle_through(c, u, v) for u, v in c.edges)

    def test_square(self):
        c = octahedral_sphere(2)
        assert all(has_induced_4cycle_through(c, u, v) for u, v in c.edges)

    def test_octahedron(self):
        c = octahedral_sphere(3)
        assert all(has_induced_4cycle_through(c, u, v) for u, v in c.edges)


class TestStandard:
    def test_square(self):
        assert standard_complex("octahedral_sphere", 2).fvector == (1, 4, 4)

    def test_pentagon(self):
        assert standard_complex("polygon", 5).fvector == (1, 5, 5)

    def test_simplex_boundary(self):
        assert standard_complex("simplex_boundary", 4).fvector == (1, 4, 6, 4)

    def test_unknown(self):
        with pytest.raises(DomainError):
            standard_complex("torus", 3)


class TestFacetFiles:
    def test_round_trip(self, tmp_path):
        c = octahedral_sphere(3)
        p = tmp_path / "o.txt"
        p.write_text(format_facets(c))
        assert read_facets(p) == c

    def test_json(self):
        assert parse_facets(json.dumps({"facets": [[1, 2], [2, 3]]})) == [(1, 2), (2, 3)]

    def test_comments_and_blank_lines(self):
        assert parse_facets("# header\n\n1 2\n 2 3 \n") == [(1, 2), (2, 3)]

    def test_error_has_line_number(self):
        with pytest.raises(MalformedInputError, match="line 3"):
            parse_facets("1 2\n2 3\n3 x\n")

    def test_empty_file(self):
        with pytest.raises(MalformedInputError):
            parse_facets("# nothing\n")

    def test_normalize(self):
        c = build_from_facets([[10, 20], [20, 30]])
        assert normalize(c).facets == ((1, 2), (2, 3))


@given(graphs(6))
@settings(max_examples=40, deadline=None)
def test_downward_closure_and_vertices(g):
    c = clique_complex(g)
    for f in c.faces:
        for k in range(len(f)):
            assert f[:k] + f[k + 1:] in c
    assert set(c.vertices) == {f[0] for f in c.faces if len(f) == 1}
    assert isinstance(c, Complex)
