import itertools

import pytest

from clanposet import (
    Involution,
    RookMatrix,
    clan_to_rook,
    dense_sect,
    enumerate_rooks,
    involution_leq,
    parse_clan,
    rank_control,
    rook_leq,
    rook_to_involution,
    underlying_involution,
    verify_dense_iso,
    wyser_leq,
)
from clanposet.errors import (
    LimitExceededError,
    NotInDenseSectError,
    NotRectangularError,
    ShapeMismatchError,
)

from oracles import bruhat_oracle, perm_matrix


def rook_count(p):
    import math

    return sum(math.comb(p, k) ** 2 * math.factorial(k) for k in range(p + 1))


def test_rook_counts():
    assert [rook_count(p) for p in range(1, 5)] == [2, 7, 34, 209]
    for p in range(1, 5):
        rooks = enumerate_rooks(p)
        assert len(rooks) == rook_count(p)
        assert len(set(rooks)) == len(rooks)


def test_enumerate_rooks_limit():
    with pytest.raises(LimitExceededError):
        enumerate_rooks(7)
    with pytest.raises(LimitExceededError):
        enumerate_rooks(3, limit=2)


def test_rook_matrix_validation():
    with pytest.raises(ValueError):
        RookMatrix(((1, 1), (0, 0)))  # two ones in a row
    with pytest.raises(ValueError):
        RookMatrix(((1, 0), (1, 0)))  # two ones in a column
    with pytest.raises(ValueError):
        RookMatrix(((2, 0), (0, 0)))
    with pytest.raises(NotRectangularError):
        RookMatrix(((0, 0, 0), (0, 0, 0)))


def test_rank_control_worked_example():
    entries = [
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ]
    table = rank_control(entries, "NW")
    assert table.ranks == (
        (1, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 1),
        (1, 1, 1, 1, 2, 2),
        (1, 2, 2, 2, 3, 3),
        (1, 2, 3, 3, 4, 4),
        (1, 2, 3, 3, 4, 4),
    )


def test_rank_control_zero_and_identity():
    zero = RookMatrix.zero(3)
    assert rank_control(zero, "NW").ranks == ((0,) * 3,) * 3
    assert rank_control(zero, "SW").ranks == ((0,) * 3,) * 3
    ident = perm_matrix((1, 2, 3))
    assert rank_control(ident, "NW").ranks == ((1, 1, 1), (1, 2, 2), (1, 2, 3))


def test_rank_control_longest_element_sw_formula():
    for p in range(1, 6):
        w0 = perm_matrix(tuple(range(p, 0, -1)))
        table = rank_control(w0, "SW")
        for i in range(1, p + 1):
            for j in range(1, p + 1):
                assert table.rank(i, j) == min(j, p - i + 1)


def test_rank_control_on_non_rook_matrix_uses_true_rank():
    ones = [[1, 1, 1], [1, 1, 1], [1, 1, 1]]
    assert rank_control(ones, "NW").ranks == ((1, 1, 1), (1, 1, 1), (1, 1, 1))
    mixed = [[1, 2], [2, 4]]
    assert rank_control(mixed, "NW").ranks == ((1, 1), (1, 1))
    independent = [[1, 2], [3, 4]]
    assert rank_control(independent, "NW").ranks == ((1, 1), (1, 2))


def test_rank_control_rejects_bad_input():
    with pytest.raises(NotRectangularError):
        rank_control([[1, 0], [0]], "NW")
    with pytest.raises(ValueError):
        rank_control([[1]], "North")


def test_rook_leq_corners_are_dual_on_permutations():
    for n in range(2, 5):
        perms = list(itertools.permutations(range(1, n + 1)))
        for u in perms:
            for w in perms:
                nw = rook_leq(perm_matrix(u), perm_matrix(w), "NW")
                sw = rook_leq(perm_matrix(u), perm_matrix(w), "SW")
                assert nw == sw


def test_rook_leq_matches_bruhat_oracle_on_permutations():
    for n in range(2, 5):
        oracle = bruhat_oracle(n)
        perms = list(itertools.permutations(range(1, n + 1)))
        for u in perms:
            for w in perms:
                expected = (u, w) in oracle
                assert rook_leq(perm_matrix(u), perm_matrix(w), "SW") == expected


def test_rook_leq_extremes():
    zero = RookMatrix.zero(3)
    anti = perm_matrix((3, 2, 1))
    for rook in enumerate_rooks(3):
        assert rook_leq(zero, rook, "SW")
        assert rook_leq(rook, anti, "SW")


def test_rook_leq_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        rook_leq(RookMatrix.zero(2), RookMatrix.zero(3), "SW")


def test_involution_leq_matches_bruhat_oracle():
    for n in range(2, 5):
        oracle = bruhat_oracle(n)
        involutions = [
            Involution(w)
            for w in itertools.permutations(range(1, n + 1))
            if all(w[w[i] - 1] == i + 1 for i in range(n))
        ]
        for u in involutions:
            for w in involutions:
                assert involution_leq(u, w) == ((u.images, w.images) in oracle)


def test_clan_to_rook_example():
    rook = clan_to_rook(parse_clan("(-1212+)"))
    assert rook.entries == ((0, 1, 0), (0, 0, 1), (0, 0, 0))
    assert rook.ones() == ((1, 2), (2, 3))


def test_clan_to_rook_extremes():
    assert clan_to_rook(parse_clan("--++")) == RookMatrix.zero(2)
    assert clan_to_rook(parse_clan("1221")).entries == ((0, 1), (1, 0))
    assert clan_to_rook(parse_clan("-1+1")).entries == ((0, 0), (0, 1))
    assert clan_to_rook(parse_clan("11")).entries == ((1,),)


def test_clan_to_rook_rejects_outside_dense_sect():
    with pytest.raises(NotInDenseSectError):
        clan_to_rook(parse_clan("+-"))  # wrong base
    with pytest.raises(NotInDenseSectError):
        clan_to_rook(parse_clan("-++"))  # p != q
    with pytest.raises(NotInDenseSectError):
        clan_to_rook(parse_clan("1+1-"))  # p == q but base is -++-


def test_clan_to_rook_is_bijective_on_dense_sect():
    for p in range(1, 4):
        members = dense_sect(p, p).sect.members
        images = {clan_to_rook(c) for c in members}
        assert len(images) == len(members)
        assert images == set(enumerate_rooks(p))


def test_rook_to_involution_examples():
    rook = RookMatrix(((0, 1, 0), (0, 0, 1), (0, 0, 0)))
    assert rook_to_involution(rook).one_line() == "145236"
    assert rook_to_involution(RookMatrix.zero(2)) == Involution.identity(4)


def test_rook_to_involution_structure():
    # sigma swaps s with p+r for each one at (r, s); everything else fixed
    for p in range(1, 5):
        for rook in enumerate_rooks(p):
            sigma = rook_to_involution(rook)
            assert sigma.n == 2 * p
            expected_moved = set()
            for r, s in rook.ones():
                assert sigma(s) == p + r
                assert sigma(p + r) == s
                expected_moved.update({s, p + r})
            for i in range(1, 2 * p + 1):
                if i not in expected_moved:
                    assert sigma(i) == i


def test_rook_equals_lower_left_block_of_involution_matrix():
    for p in range(1, 4):
        for clan in dense_sect(p, p).sect.members:
            rook = clan_to_rook(clan)
            full = underlying_involution(clan).matrix()
            block = tuple(tuple(row[:p]) for row in full[p:])
            assert block == rook.entries


def test_rank_control_step_size_invariant():
    # Entries weakly increase away from the anchored corner and adjacent
    # entries differ by at most 1.
    for p in range(1, 5):
        for rook in enumerate_rooks(p):
            for corner in ("NW", "SW"):
                ranks = rank_control(rook, corner).ranks
                rows = ranks if corner == "NW" else ranks[::-1]
                for i in range(p):
                    for j in range(p):
                        if j + 1 < p:
                            assert 0 <= rows[i][j + 1] - rows[i][j] <= 1
                        if i + 1 < p:
                            assert 0 <= rows[i + 1][j] - rows[i][j] <= 1


def test_rook_to_involution_matches_underlying_involution():
    for p in range(1, 4):
        for clan in dense_sect(p, p).sect.members:
            assert rook_to_involution(clan_to_rook(clan)) == underlying_involution(
                clan
            )


def test_rook_order_agrees_with_clan_order_on_dense_sect():
    for p in range(1, 4):
        members = dense_sect(p, p).sect.members
        for a in members:
            for b in members:
                assert wyser_leq(a, b) == rook_leq(
                    clan_to_rook(a), clan_to_rook(b), "SW"
                )


def test_verify_dense_iso_reports():
    for p in range(1, 4):
        report = verify_dense_iso(p)
        assert report.holds()
        assert report.p == p
        assert report.bijective
        assert report.order_preserving
        assert report.order_reflecting
        assert report.counterexamples == ()
        data = report.to_json()
        assert data["p"] == p
        assert data["bijective"] is True
        assert data["order_preserving"] is True
        assert data["order_reflecting"] is True
        assert data["counterexamples"] == []


def test_rook_json():
    rook = RookMatrix(((0, 1), (0, 0)))
    assert rook.to_json() == [[0, 1], [0, 0]]
