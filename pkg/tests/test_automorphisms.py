import pytest

from quasieq.domain.exceptions import OrderBoundError
from quasieq.infrastructure.automorphisms import automorphisms, compose, generating_set, invert
from quasieq.infrastructure.cayley import canonical_groups, cyclic_group, is_automorphism, make_group

GROUPS_UP_TO_ORDER_8 = [
    *(g for n in range(1, 7) for g in canonical_groups(n)),
    *(make_group(spec) for spec in ("Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2")),
]


class TestAutomorphisms:
    def test_cyclic_group_should_have_multiplications_by_units(self, z5) -> None:
        assert automorphisms(z5) == [
            (0, 1, 2, 3, 4),
            (0, 2, 4, 1, 3),
            (0, 3, 1, 4, 2),
            (0, 4, 3, 2, 1),
        ]

    def test_klein_group_should_have_six_automorphisms(self, z2xz2) -> None:
        result = automorphisms(z2xz2)

        assert len(result) == 6
        assert result == sorted(result)

    def test_symmetric_group_should_have_inner_automorphisms_only(self, s3) -> None:
        result = automorphisms(s3)

        assert len(result) == 6
        assert all(is_automorphism(s3, p) for p in result)

    def test_trivial_group_should_have_identity_only(self) -> None:
        assert automorphisms(cyclic_group(1)) == [(0,)]

    def test_generator_search_should_agree_with_filtering(self) -> None:
        g = make_group("Z2xZ4")

        assert automorphisms(g, filter_max_order=4) == automorphisms(g)

    def test_large_cyclic_group_should_use_generator_images(self) -> None:
        result = automorphisms(cyclic_group(12))

        assert [p[1] for p in result] == [1, 5, 7, 11]

    def test_order_above_bound_should_raise(self) -> None:
        with pytest.raises(OrderBoundError):
            automorphisms(cyclic_group(13))

    def test_bound_should_come_from_settings(self, monkeypatch) -> None:
        monkeypatch.setenv("QUASIEQ_AUTOMORPHISM_MAX_ORDER", "4")

        with pytest.raises(OrderBoundError):
            automorphisms(cyclic_group(5))


class TestAutomorphismGroupClosure:
    @pytest.mark.parametrize("g", GROUPS_UP_TO_ORDER_8, ids=lambda g: g.spec)
    def test_automorphisms_should_form_a_group(self, g) -> None:
        # Arrange
        found = set(automorphisms(g))

        # Act
        products = {compose(p, q) for p in found for q in found}
        inverses = {invert(p) for p in found}

        # Assert
        assert tuple(range(g.order)) in found
        assert products <= found
        assert inverses <= found


class TestPermutationHelpers:
    def test_generating_set_should_span_the_group(self, z2xz2) -> None:
        assert generating_set(z2xz2) == [1, 2]
        assert generating_set(cyclic_group(6)) == [1]

    def test_compose_should_apply_right_argument_first(self) -> None:
        p, q = (1, 2, 0), (0, 2, 1)

        assert compose(p, q) == (1, 0, 2)

    def test_invert_should_undo_permutation(self) -> None:
        p = (0, 2, 4, 1, 3)

        assert compose(invert(p), p) == (0, 1, 2, 3, 4)
