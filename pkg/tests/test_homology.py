from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from flaggamma.complex import build_from_facets, join, octahedral_sphere, polygon, simplex, suspension
from flaggamma.errors import BudgetExceededError
from flaggamma.homology import betti, euler_characteristic, is_homology_sphere, sphere_betti
from flaggamma.models import sphere_catalog
from flaggamma.vectors import f_to_h, is_symmetric


class TestBetti:
    def test_octahedron(self):
        assert betti(octahedral_sphere(3)) == (0, 0, 0, 1)

    def test_pentagon(self):
        assert betti(polygon(5)) == (0, 0, 1)

    def test_two_points(self):
        assert betti(build_from_facets([[1], [2]])) == (0, 1)

    def test_simplex_is_acyclic(self):
        assert betti(simplex(4)) == (0, 0, 0, 0, 0)

    def test_torus(self):
        # 7-vertex torus: b1 = 2, b2 = 1
        tri = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
        assert betti(build_from_facets(tri)) == (0, 0, 2, 1)

    def test_join_of_spheres(self):
        j = join(polygon(4), polygon(5))
        assert betti(j) == sphere_betti(3)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            betti(octahedral_sphere(3), budget=5)


class TestSphere:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_polygons(self, n):
        assert is_homology_sphere(polygon(n))

    def test_full_simplex(self):
        assert not is_homology_sphere(simplex(3))

    def test_pentagon_join(self):
        assert is_homology_sphere(join(polygon(5), polygon(5)))

    def test_wedge_of_circles_is_not(self):
        c = build_from_facets([[1, 2], [2, 3], [3, 1], [1, 4], [4, 5], [5, 1]])
        assert not is_homology_sphere(c)

    def test_two_spheres_sharing_vertex(self):
        # right homology is not enough: the link of the shared vertex is disconnected
        a = [(1, 2), (2, 3), (3, 1)]
        c = build_from_facets(a + [(1, 4), (4, 5), (5, 1)])
        assert betti(c) != sphere_betti(1)
        assert not is_homology_sphere(c)

    def test_catalog_spheres_have_symmetric_h(self):
        for name, c in sphere_catalog(10):
            assert is_homology_sphere(c), name
            assert is_symmetric(f_to_h(c.fvector)), name


@given(st.integers(3, 8), st.integers(0, 2))
@settings(max_examples=20, deadline=None)
def test_euler_characteristic_matches_betti(n, k):
    c = polygon(n)
    for _ in range(k):
        c = suspension(c)
    b = betti(c)
    assert euler_characteristic(c) == sum((-1) ** (i - 1) * x for i, x in enumerate(b))
