from fractions import Fraction

import pytest

from gammalab.closure import affine_closure, branching_factor, generating_maps
from gammalab.errors import DomainError, ResourceError


class TestGeneratingMaps:
    def test_base_maps_only_at_n_one(self):
        maps = generating_maps(1)
        assert set(maps) == {
            (Fraction(1), Fraction(1)),
            (Fraction(1), Fraction(-1)),
            (Fraction(-1), Fraction(1)),
        }

    def test_duplication_maps_at_n_two(self):
        maps = set(generating_maps(2))
        assert (Fraction(1, 2), Fraction(0)) in maps  # x/2
        assert (Fraction(1, 2), Fraction(1, 2)) in maps  # x/2 + 1/2
        assert (Fraction(2), Fraction(0)) in maps  # 2x
        assert (Fraction(2), Fraction(-1)) in maps  # 2x - 1
        assert (Fraction(1), Fraction(1, 2)) in maps  # x + 1/2

    def test_no_identity_map(self):
        for n in (1, 2, 3, 4):
            assert (Fraction(1), Fraction(0)) not in generating_maps(n)

    def test_counts(self):
        # 3 base maps, then 2n + 2(n-1) more per order n
        assert len(generating_maps(1)) == 3
        assert len(generating_maps(2)) == 3 + 6
        assert len(generating_maps(3)) == 3 + 6 + 10

    def test_branching_factor(self):
        assert branching_factor(1) == 4
        assert branching_factor(2) == 10

    def test_rejects_bad_order(self):
        with pytest.raises(DomainError):
            generating_maps(0)


class TestAffineClosure:
    def test_depth_zero_is_identity(self):
        pts = [Fraction(1, 3), Fraction(2, 5)]
        out = affine_closure(pts, 0, 3)
        assert out == frozenset(pts)

    def test_contains_input(self):
        out = affine_closure([Fraction(1, 2)], 2, 2)
        assert Fraction(1, 2) in out

    def test_monotone_in_depth(self):
        prev = None
        for depth in range(4):
            cur = affine_closure([Fraction(2, 7)], depth, 2)
            if prev is not None:
                assert prev <= cur
            prev = cur

    def test_within_cardinality_bound(self):
        pts = [Fraction(1, 3), Fraction(3, 4)]
        k = branching_factor(2)
        for depth in range(4):
            out = affine_closure(pts, depth, 2)
            assert len(out) <= len(pts) * k**depth

    def test_one_step_images_exact(self):
        out = affine_closure([Fraction(1)], 1, 1)
        # x+1 -> 2, x-1 -> 0 dropped, 1-x -> 0 dropped
        assert out == frozenset({Fraction(1), Fraction(2)})

    def test_positivity_clip(self):
        out = affine_closure([Fraction(1, 4)], 1, 1)
        # 1 - 1/4 and 1/4 + 1 survive; 1/4 - 1 is negative and dropped
        assert out == frozenset({Fraction(1, 4), Fraction(5, 4), Fraction(3, 4)})

    def test_budget_enforced(self):
        with pytest.raises(ResourceError):
            affine_closure([Fraction(1, 7)], 6, 4, budget=50)

    def test_rejects_nonpositive_points(self):
        with pytest.raises(DomainError):
            affine_closure([Fraction(0)], 1, 2)
        with pytest.raises(DomainError):
            affine_closure([Fraction(-1, 2)], 1, 2)

    def test_rejects_negative_depth(self):
        with pytest.raises(DomainError):
            affine_closure([Fraction(1, 2)], -1, 2)

    def test_all_elements_positive_rationals(self):
        out = affine_closure(["2/3", 0.5], 3, 3)
        assert all(isinstance(x, Fraction) and x > 0 for x in out)
