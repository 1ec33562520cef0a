from fractions import Fraction

import pytest

from posetops import ncpoly
from posetops.errors import (
    AlphabetMismatch,
    MissingImage,
    NotExpressible,
    NotHomogeneous,
    OddEPower,
)
from posetops.ncpoly import AB, CD, CE, NCPoly, TensorPoly


def P(alphabet, terms):
    return NCPoly(alphabet, terms)


def test_words_do_not_commute():
    a = P(AB, {"a": 1})
    b = P(AB, {"b": 1})
    assert a * b == P(AB, {"ab": 1})
    assert b * a == P(AB, {"ba": 1})
    assert a * b != b * a


def test_square_of_a_plus_b():
    s = P(AB, {"a": 1, "b": 1})
    assert s * s == P(AB, {"aa": 1, "ab": 1, "ba": 1, "bb": 1})


def test_empty_word_is_unit():
    one = ncpoly.unit(AB)
    p = P(AB, {"ab": 2, "b": -1})
    assert one * p == p
    assert p * one == p


def test_alphabet_mismatch_raises():
    with pytest.raises(AlphabetMismatch):
        P(AB, {"a": 1}) + P(CD, {"c": 1})
    with pytest.raises(AlphabetMismatch):
        P(AB, {"a": 1}) * P(CE, {"e": 1})
    with pytest.raises(AlphabetMismatch):
        P(AB, {"c": 1})


def test_zero_coefficients_are_dropped():
    p = P(AB, {"ab": 1})
    q = P(AB, {"ab": -1, "ba": 0})
    assert (p + q).terms == {}
    assert P(AB, {"a": Fraction(1, 2), "b": 0}).terms == {"a": Fraction(1, 2)}


def test_reverse_star_examples():
    assert P(AB, {"ab": 1}).star() == P(AB, {"ba": 1})
    assert P(AB, {"aab": 1}).star() == P(AB, {"baa": 1})


def test_reverse_star_is_involutive_antiautomorphism():
    for w1 in ncpoly.ab_words(2):
        for w2 in ncpoly.ab_words(3):
            p = P(AB, {w1: 2})
            q = P(AB, {w2: Fraction(1, 3)})
            assert (p * q).star() == q.star() * p.star()
            assert p.star().star() == p


def test_substitute_a_minus_b():
    upsilon = P(AB, {"a": 1, "b": 2})
    images = {"a": P(AB, {"a": 1, "b": -1}), "b": P(AB, {"b": 1})}
    assert ncpoly.substitute(upsilon, images) == P(AB, {"a": 1, "b": 1})


def test_substitute_cd_expansion():
    p = P(CD, {"cc": 1, "d": 1})
    images = {"c": P(AB, {"a": 1, "b": 1}), "d": P(AB, {"ab": 1, "ba": 1})}
    assert ncpoly.substitute(p, images) == P(
        AB, {"aa": 1, "ab": 2, "ba": 2, "bb": 1}
    )


def test_substitute_e_squared():
    p = P(CE, {"ee": 1})
    images = {"c": P(AB, {"a": 1, "b": 1}), "e": P(AB, {"a": 1, "b": -1})}
    assert ncpoly.substitute(p, images) == P(
        AB, {"aa": 1, "ab": -1, "ba": -1, "bb": 1}
    )


def test_substitute_missing_image():
    with pytest.raises(MissingImage):
        ncpoly.substitute(P(AB, {"a": 1}), {"a": P(AB, {"a": 1})})


def test_rewrite_c_is_a_plus_b():
    assert ncpoly.rewrite_ab_to_cd(P(AB, {"a": 1, "b": 1})) == P(CD, {"c": 1})


def test_rewrite_rejects_non_eulerian_index():
    # the ab-index of the rank-2 chain
    with pytest.raises(NotExpressible):
        ncpoly.rewrite_ab_to_cd(P(AB, {"a": 1}))


def test_rewrite_upsilon_convention():
    assert ncpoly.rewrite_ab_to_cd(P(AB, {"a": 1, "b": 2}), "Upsilon") == P(
        CD, {"c": 1}
    )


def test_rewrite_requires_homogeneous():
    with pytest.raises(NotHomogeneous):
        ncpoly.rewrite_ab_to_cd(P(AB, {"a": 1, "ab": 1}))


def test_rewrite_round_trips_both_conventions():
    for convention in ("Psi", "Upsilon"):
        for n in range(0, 6):
            for w in ncpoly.cd_words(n):
                p = ncpoly.expand_cd_word(w, convention)
                assert ncpoly.rewrite_ab_to_cd(p, convention) == P(CD, {w: 1})


def test_cd_word_count_follows_fibonacci():
    sizes = [len(ncpoly.cd_words(n)) for n in range(8)]
    assert sizes == [1, 1, 2, 3, 5, 8, 13, 21]


def test_d_in_ce_form():
    assert ncpoly.cd_ce_convert(P(CD, {"d": 1}), "ce") == P(
        CE, {"cc": Fraction(1, 2), "ee": Fraction(-1, 2)}
    )


def test_e_fourth_in_cd_form():
    expected = P(CD, {"cccc": 1, "ccd": -2, "dcc": -2, "dd": 4})
    assert ncpoly.cd_ce_convert(P(CE, {"eeee": 1}), "cd") == expected


def test_square_lattice_index_in_ce_form():
    assert ncpoly.cd_ce_convert(P(CD, {"cc": 1, "d": 2}), "ce") == P(
        CE, {"cc": 2, "ee": -1}
    )


def test_ce_round_trip():
    for n in range(0, 6):
        for w in ncpoly.cd_words(n):
            p = P(CD, {w: Fraction(3, 7)})
            back = ncpoly.cd_ce_convert(ncpoly.cd_ce_convert(p, "ce"), "cd")
            assert back == p


def test_odd_e_run_rejected():
    for word in ("e", "ce", "ece", "eece"):
        with pytest.raises(OddEPower):
            ncpoly.cd_ce_convert(P(CE, {word: 1}), "cd")


def test_coproduct_on_ab_word():
    assert ncpoly.coproduct_delta(P(AB, {"ab": 1})) == TensorPoly(
        AB, {("", "b"): 1, ("a", ""): 1}
    )


def test_coproduct_of_c():
    assert ncpoly.coproduct_delta(P(CD, {"c": 1})) == TensorPoly(CD, {("", ""): 2})


def test_coproduct_of_c_squared():
    assert ncpoly.coproduct_delta(P(CD, {"cc": 1})) == TensorPoly(
        CD, {("", "c"): 2, ("c", ""): 2}
    )


def test_coproduct_of_d():
    assert ncpoly.coproduct_delta(P(CD, {"d": 1})) == TensorPoly(
        CD, {("", "c"): 1, ("c", ""): 1}
    )


def _tensor_apply_left(t):
    out = {}
    for (w1, w2), c in t.terms.items():
        for i in range(len(w1)):
            key = (w1[:i], w1[i + 1 :], w2)
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def _tensor_apply_right(t):
    out = {}
    for (w1, w2), c in t.terms.items():
        for i in range(len(w2)):
            key = (w1, w2[:i], w2[i + 1 :])
            out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def test_coproduct_is_coassociative_up_to_degree_five():
    for n in range(1, 6):
        for w in ncpoly.ab_words(n):
            t = ncpoly.coproduct_delta(P(AB, {w: 1}))
            assert _tensor_apply_left(t) == _tensor_apply_right(t)


def test_delta_prime_kills_a_powers():
    for n in range(4):
        assert ncpoly.coproduct_delta_prime(P(AB, {"a" * n: 1})).terms == {}


def test_delta_prime_examples():
    assert ncpoly.coproduct_delta_prime(P(AB, {"ab": 1})) == TensorPoly(
        AB, {("a", ""): 1}
    )
    assert ncpoly.coproduct_delta_prime(P(AB, {"bb": 1})) == TensorPoly(
        AB, {("", "b"): 1, ("b", ""): 1}
    )


def test_sym_asym_split_of_ab():
    sym, asym = ncpoly.sym_asym_split(P(AB, {"ab": 1}), 2)
    assert sym == P(AB, {"ab": Fraction(1, 2), "ba": Fraction(1, 2)})
    assert asym == P(AB, {"ab": Fraction(1, 2), "ba": Fraction(-1, 2)})


def test_sym_asym_split_of_palindrome():
    sym, asym = ncpoly.sym_asym_split(P(AB, {"aba": 1}), 3)
    assert sym == P(AB, {"aba": 1})
    assert asym.is_zero()


def test_sym_asym_split_checks_degree():
    with pytest.raises(NotHomogeneous):
        ncpoly.sym_asym_split(P(AB, {"ab": 1}), 3)
    with pytest.raises(NotHomogeneous):
        ncpoly.sym_asym_split(P(AB, {"a": 1, "ab": 1}), 2)


def test_asym_basis_dimensions():
    for n in range(1, 7):
        expected = 2 ** (n - 1) - 2 ** ((n - 1) // 2)
        assert len(ncpoly.asym_basis(n)) == expected
    assert len(ncpoly.asym_basis(3)) == 2


def test_split_recombines():
    p = P(AB, {"aab": 3, "bba": Fraction(-1, 2), "aba": 7, "bbb": 1})
    sym, asym = ncpoly.sym_asym_split(p, 3)
    assert sym + asym == p
    assert sym.star() == sym
    assert asym.star() == -asym


def test_serialization_round_trip():
    p = P(AB, {"": 1, "ab": Fraction(-3, 4), "b": 2})
    data = ncpoly.to_dict(p)
    assert data["terms"][0]["word"] == ""
    assert ncpoly.from_dict(data) == p


def test_serialization_orders_by_length_then_word():
    p = P(CD, {"d": 1, "cc": 1, "c": 5})
    words = [t["word"] for t in ncpoly.to_dict(p)["terms"]]
    assert words == ["c", "d", "cc"]
