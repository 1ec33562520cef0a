import itertools

import pytest

from posetops.errors import (
    CycleDetected,
    EndpointsNotExtreme,
    InvalidSize,
    NotAChain,
    NotBounded,
    NotGraded,
    PosetOpsError,
    TooLarge,
)
from posetops.posets import (
    GradedPoset,
    Poset,
    boolean_lattice,
    bottom_to_top_chains,
    build_graded,
    chain_poset,
    count_chains_with_support,
    crosspolytope_lattice,
    cube_lattice,
    diamond_product,
    direct_product,
    generate,
    graded_interval_poset,
    induced_subposet,
    interval_poset,
    interval_subposet,
    is_eulerian,
    is_isomorphic,
    ladder_poset,
    pell_number,
    poset_from_dict,
    poset_to_dict,
    second_kind_member_product,
    second_kind_transform,
)


def elbow_poset():
    # four elements, one maximal chain of length 2 and a pendant atom
    return Poset(["u1", "u2", "u3", "u4"], [("u1", "u2"), ("u2", "u3"), ("u1", "u4")])


def test_duplicate_label_rejected():
    with pytest.raises(PosetOpsError):
        Poset(["x", "x"], [])


def test_unknown_cover_rejected():
    with pytest.raises(PosetOpsError):
        Poset(["x"], [("x", "y")])


def test_self_loop_rejected():
    with pytest.raises(CycleDetected):
        Poset(["x", "y"], [("x", "x")])


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        Poset(["x", "y", "z"], [("x", "y"), ("y", "z"), ("z", "x")])


def test_transitive_cover_rejected():
    with pytest.raises(PosetOpsError):
        Poset(["x", "y", "z"], [("x", "y"), ("y", "z"), ("x", "z")])


def test_leq_on_boolean_square():
    B2 = boolean_lattice(2)
    assert B2.leq("{}", "{1,2}")
    assert B2.leq("{1}", "{1}")
    assert B2.leq("{1}", "{1,2}")
    assert not B2.leq("{1}", "{2}")
    assert not B2.leq("{1,2}", "{1}")
    assert B2.less("{}", "{1}")
    assert not B2.less("{1}", "{1}")
    assert B2.comparable("{2}", "{}")
    assert not B2.comparable("{1}", "{2}")


def test_graded_needs_unique_bottom():
    with pytest.raises(NotBounded):
        GradedPoset(["x", "y", "z"], [("x", "z"), ("y", "z")])


def test_graded_needs_unique_top():
    with pytest.raises(NotBounded):
        GradedPoset(["x", "y", "z"], [("x", "y"), ("x", "z")])


def test_graded_rejects_rank_skip():
    labels = ["bot", "a", "c", "d", "top"]
    covers = [("bot", "a"), ("a", "top"), ("bot", "c"), ("c", "d"), ("d", "top")]
    with pytest.raises(NotGraded):
        GradedPoset(labels, covers)


def test_build_graded_accepts_diamond():
    P = build_graded(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    assert P.bottom == "0"
    assert P.top == "1"
    assert P.top_rank == 2
    assert P.rank_of("a") == 1


def test_boolean_lattice_shape():
    B3 = boolean_lattice(3)
    assert len(B3) == 8
    assert B3.bottom == "{}"
    assert B3.top == "{1,2,3}"
    assert B3.top_rank == 3
    assert B3.rank_of("{1,3}") == 2
    assert sorted(len(B3.covers_up[i]) for i in range(8)) == [0, 1, 1, 1, 2, 2, 2, 3]


def test_chain_poset_shape():
    C3 = chain_poset(3)
    assert list(C3.labels) == ["0", "1", "2", "3"]
    assert C3.top_rank == 3
    assert C3.leq("0", "3")


def test_ladder_poset_shape():
    L2 = ladder_poset(2)
    assert len(L2) == 6
    assert set(L2.labels) == {"0̂", "+1", "-1", "+2", "-2", "1̂"}
    assert L2.top_rank == 3
    assert L2.leq("+1", "-2")
    assert L2.leq("-1", "+2")
    assert not L2.comparable("+1", "-1")


def test_cube_lattice_shape():
    Q2 = cube_lattice(2)
    assert len(Q2) == 10
    assert Q2.bottom == "∅"
    assert Q2.top == "**"
    assert Q2.rank_of("01") == 1
    assert Q2.rank_of("*1") == 2
    assert Q2.leq("01", "*1")
    assert not Q2.leq("01", "*0")


def test_crosspolytope_lattice_shape():
    C2 = crosspolytope_lattice(2)
    assert len(C2) == 10
    assert C2.bottom == "∅"
    assert C2.top == "⊤"
    assert C2.top_rank == 3
    assert C2.leq("{+1}", "{+1,-2}")
    assert not C2.comparable("{+1}", "{-1}")
    assert is_isomorphic(C2, cube_lattice(2))


def test_crosspolytope_1_is_a_diamond():
    assert is_isomorphic(crosspolytope_lattice(1), boolean_lattice(2))


def test_generate_dispatch():
    assert len(generate("boolean", 2)) == 4
    assert len(generate("Ladder", 1)) == 4
    assert len(generate("cubelattice", 1)) == 4
    with pytest.raises(PosetOpsError):
        generate("mystery", 2)
    with pytest.raises(InvalidSize):
        generate("chain", 0)
    with pytest.raises(TooLarge):
        generate("boolean", 14)


def test_dual_reverses_ranks():
    B3 = boolean_lattice(3)
    D = B3.dual()
    assert D.bottom == "{1,2,3}"
    assert D.top == "{}"
    assert D.rank_of("{1,3}") == 1
    DD = D.dual()
    assert DD.cover_pairs() == B3.cover_pairs()


def test_direct_product_of_boolean_squares():
    B1 = boolean_lattice(1)
    P = direct_product(B1, B1)
    assert len(P) == 4
    assert isinstance(P, GradedPoset)
    assert is_isomorphic(P, boolean_lattice(2))
    assert P.rank_of("({1},{})") == 1


def test_direct_product_rank_adds():
    P = direct_product(boolean_lattice(2), chain_poset(2))
    assert len(P) == 12
    assert P.top_rank == 4


def test_diamond_product_of_diamonds():
    I1 = graded_interval_poset(boolean_lattice(1))
    D = diamond_product(I1, I1)
    assert len(D) == 10
    assert D.bottom == "0̂"
    assert is_isomorphic(D, cube_lattice(2))


def test_diamond_product_of_segments():
    B1 = boolean_lattice(1)
    D = diamond_product(B1, B1)
    assert len(D) == 2
    assert D.top_rank == 1


def test_interval_poset_sizes():
    assert len(interval_poset(boolean_lattice(2))) == 9
    assert len(interval_poset(boolean_lattice(3))) == 27
    assert len(interval_poset(chain_poset(3))) == 10
    assert len(interval_poset(ladder_poset(2))) == 19
    assert len(interval_poset(cube_lattice(2))) == 35


def test_interval_poset_of_elbow():
    P = elbow_poset()
    I = interval_poset(P)
    assert len(I) == 8
    assert set(I.labels) == {
        "[u1,u1]",
        "[u2,u2]",
        "[u3,u3]",
        "[u4,u4]",
        "[u1,u2]",
        "[u1,u3]",
        "[u1,u4]",
        "[u2,u3]",
    }
    assert I.leq("[u2,u2]", "[u1,u3]")
    assert not I.comparable("[u1,u2]", "[u2,u3]")
    # singletons form an antichain
    singles = ["[u1,u1]", "[u2,u2]", "[u3,u3]", "[u4,u4]"]
    for x, y in itertools.combinations(singles, 2):
        assert not I.comparable(x, y)


def test_graded_interval_poset_of_boolean_square():
    J = graded_interval_poset(boolean_lattice(2))
    assert len(J) == 10
    assert J.bottom == "∅"
    assert J.top == "[{},{1,2}]"
    assert J.top_rank == 3
    assert J.rank_of("[{1},{1}]") == 1
    assert J.rank_of("[{},{1}]") == 2
    assert is_isomorphic(J, cube_lattice(2))


def test_graded_interval_poset_matches_cube_lattice_rank_3():
    J = graded_interval_poset(boolean_lattice(3))
    assert len(J) == 28
    assert is_isomorphic(J, cube_lattice(3))


def test_graded_interval_poset_of_chain():
    J = graded_interval_poset(chain_poset(3))
    assert len(J) == 11
    assert J.top_rank == 4


def test_interval_subposet():
    B3 = boolean_lattice(3)
    upper = interval_subposet(B3, "{1}", "{1,2,3}")
    assert len(upper) == 4
    assert is_isomorphic(upper, boolean_lattice(2))
    with pytest.raises(PosetOpsError):
        interval_subposet(B3, "{1}", "{2,3}")


def test_second_kind_transform_of_boolean_square():
    B2 = boolean_lattice(2)
    members = second_kind_transform(B2)
    assert len(members) == 4
    assert members.generators == list(B2.labels)
    for x, member in members:
        assert len(member) == 4
        assert member.bottom == f"[{x},{x}]"
        assert member.top == "[{},{1,2}]"
        assert is_isomorphic(member, B2)
        assert is_isomorphic(member, second_kind_member_product(B2, x))


def test_second_kind_member_sizes_on_boolean_cube():
    B3 = boolean_lattice(3)
    members = second_kind_transform(B3)
    sizes = sorted(len(m) for m in members.members)
    # |{intervals through x}| = 2**(3 - |x|) * 2**|x| = 8 for every x
    assert sizes == [8] * 8
    for x, member in members:
        assert is_isomorphic(member, second_kind_member_product(B3, x))


def test_is_eulerian():
    assert is_eulerian(boolean_lattice(1))
    assert is_eulerian(boolean_lattice(3))
    assert is_eulerian(ladder_poset(3))
    assert is_eulerian(cube_lattice(2))
    assert is_eulerian(crosspolytope_lattice(2))
    assert not is_eulerian(chain_poset(2))
    assert not is_eulerian(chain_poset(4))
    # a chain of rank 1 is vacuously balanced
    assert is_eulerian(chain_poset(1))


def test_pell_numbers():
    assert [pell_number(n) for n in range(8)] == [0, 1, 2, 5, 12, 29, 70, 169]


def brute_force_support_count(P, support):
    I = interval_poset(P)
    want = set(support)
    pairs = [(u, v) for u in P.labels for v in P.labels if P.leq(u, v)]
    endpoints = {label: {u, v} for label, (u, v) in zip(I.labels, pairs)}
    count = 0
    for size in range(1, len(I) + 1):
        for combo in itertools.combinations(I.labels, size):
            if all(I.comparable(x, y) for x, y in itertools.combinations(combo, 2)):
                seen = set()
                for label in combo:
                    seen |= endpoints[label]
                if seen == want:
                    count += 1
    return count


def test_support_counts_match_brute_force():
    C2 = chain_poset(2)
    assert count_chains_with_support(C2, ["0", "1", "2"]) == 7
    assert brute_force_support_count(C2, ["0", "1", "2"]) == 7

    B2 = boolean_lattice(2)
    assert count_chains_with_support(B2, ["{}", "{1}", "{1,2}"]) == 7
    assert brute_force_support_count(B2, ["{}", "{1}", "{1,2}"]) == 7

    C1 = chain_poset(1)
    assert count_chains_with_support(C1, ["0", "1"]) == 3
    assert brute_force_support_count(C1, ["0", "1"]) == 3


def test_support_counts_follow_pell_sums():
    for m in range(1, 5):
        P = chain_poset(m)
        assert count_chains_with_support(P, [str(i) for i in range(m + 1)]) == (
            pell_number(m) + pell_number(m + 1)
        )


def test_support_count_on_ladder():
    L2 = ladder_poset(2)
    assert count_chains_with_support(L2, ["0̂", "+1", "1̂"]) == 7
    assert count_chains_with_support(L2, ["0̂", "-2", "1̂"]) == 7
    assert count_chains_with_support(L2, ["0̂", "1̂"]) == 3


def test_support_count_input_validation():
    B2 = boolean_lattice(2)
    with pytest.raises(NotAChain):
        count_chains_with_support(B2, [])
    with pytest.raises(NotAChain):
        count_chains_with_support(B2, ["{}", "{1}", "{1}", "{1,2}"])
    with pytest.raises(NotAChain):
        count_chains_with_support(B2, ["{}", "{1}", "{2}", "{1,2}"])
    with pytest.raises(NotAChain):
        count_chains_with_support(B2, ["{}", "nope", "{1,2}"])
    with pytest.raises(EndpointsNotExtreme):
        count_chains_with_support(B2, ["{}", "{1}"])
    with pytest.raises(EndpointsNotExtreme):
        count_chains_with_support(B2, ["{1}", "{1,2}"])


def test_bottom_to_top_chains_on_boolean_square():
    B2 = boolean_lattice(2)
    chains = bottom_to_top_chains(B2, 2)
    lengths = sorted(len(c) - 1 for c in chains)
    assert lengths == [1, 2, 2]
    for chain in chains:
        assert chain[0] == "{}"
        assert chain[-1] == "{1,2}"
        for a, b in zip(chain, chain[1:]):
            assert B2.less(a, b)


def test_bottom_to_top_chains_respects_cap():
    B3 = boolean_lattice(3)
    assert len(bottom_to_top_chains(B3, 1)) == 1
    assert len(bottom_to_top_chains(B3, 2)) == 1 + 6
    assert len(bottom_to_top_chains(B3, 3)) == 1 + 6 + 6
    assert len(bottom_to_top_chains(B3, 6)) == 13


def test_subposet_keeps_induced_order():
    B2 = boolean_lattice(2)
    sub = B2.subposet(["{}", "{1}", "{1,2}"])
    assert sub.cover_pairs() == sorted([("{}", "{1}"), ("{1}", "{1,2}")])
    skip = B2.subposet(["{}", "{1,2}"])
    assert skip.cover_pairs() == [("{}", "{1,2}")]


def test_induced_subposet_recomputes_covers():
    B3 = boolean_lattice(3)
    sub = induced_subposet(B3, ["{}", "{1}", "{1,2}", "{1,2,3}"])
    assert isinstance(sub, GradedPoset)
    assert sub.rank_of("{1,2,3}") == 3
    assert sub.cover_pairs() == sorted(
        [("{}", "{1}"), ("{1}", "{1,2}"), ("{1,2}", "{1,2,3}")]
    )


def test_induced_subposet_rejects_ungradable_selection():
    B3 = boolean_lattice(3)
    with pytest.raises(NotGraded):
        induced_subposet(B3, ["{}", "{1}", "{1,2}", "{3}", "{1,2,3}"])
    with pytest.raises(NotBounded):
        induced_subposet(B3, ["{}", "{1}", "{2,3}"])


def test_induced_subposet_checks_labels():
    B2 = boolean_lattice(2)
    with pytest.raises(PosetOpsError):
        induced_subposet(B2, ["{}", "{4}"])
    with pytest.raises(PosetOpsError):
        induced_subposet(B2, ["{}", "{}", "{1,2}"])


def test_is_isomorphic_basics():
    assert is_isomorphic(boolean_lattice(2), crosspolytope_lattice(1))
    assert not is_isomorphic(boolean_lattice(3), chain_poset(7))
    assert not is_isomorphic(boolean_lattice(2), chain_poset(2))
    assert is_isomorphic(ladder_poset(2), ladder_poset(2).dual())
    with pytest.raises(TooLarge):
        is_isomorphic(boolean_lattice(3), boolean_lattice(3), max_size=4)


def test_is_isomorphic_distinguishes_cover_patterns():
    # same size and rank profile, different middle covers
    full = ladder_poset(2)
    sparse = GradedPoset(
        list(full.labels),
        [
            ("0̂", "+1"),
            ("0̂", "-1"),
            ("+1", "+2"),
            ("-1", "-2"),
            ("+2", "1̂"),
            ("-2", "1̂"),
        ],
    )
    assert not is_isomorphic(full, sparse)


def test_is_isomorphic_ignores_labeling():
    B2 = boolean_lattice(2)
    renamed = GradedPoset(
        ["w", "x", "y", "z"], [("w", "x"), ("w", "y"), ("x", "z"), ("y", "z")]
    )
    assert is_isomorphic(B2, renamed)


def test_poset_round_trip():
    B2 = boolean_lattice(2)
    data = poset_to_dict(B2)
    assert data["bottom"] == "{}"
    assert data["top"] == "{1,2}"
    assert data["rank"]["{1}"] == 1
    back = poset_from_dict(data)
    assert isinstance(back, GradedPoset)
    assert back.cover_pairs() == B2.cover_pairs()


def test_plain_poset_round_trip():
    P = elbow_poset()
    data = poset_to_dict(P)
    assert data["rank"] is None
    assert data["bottom"] is None
    assert data["top"] is None
    back = poset_from_dict(data)
    assert not isinstance(back, GradedPoset)
    assert back.cover_pairs() == P.cover_pairs()


def test_poset_from_dict_checks_stored_rank():
    data = poset_to_dict(boolean_lattice(2))
    data["rank"]["{1}"] = 2
    with pytest.raises(NotGraded):
        poset_from_dict(data)
    data = poset_to_dict(boolean_lattice(2))
    data["bottom"] = "{1}"
    with pytest.raises(NotBounded):
        poset_from_dict(data)
