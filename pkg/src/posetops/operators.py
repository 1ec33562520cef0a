"""Operators on flag polynomials: the interval transforms, the mixing
operator, the pyramid and lift maps, and the Delannoy path model.

Every operator is defined on monomial words by a recursion and extended
linearly.  Word-level results are memoized in module tables because the
recursions revisit the same words constantly.
"""

from fractions import Fraction
from math import comb

from .errors import DegreeMismatch, InvalidSize, PosetOpsError, TooLarge
from .ncpoly import (
    AB,
    CD,
    NCPoly,
    _cd_coproduct_word,
    ab_words,
    asym_basis,
    expand_cd,
    matrix_rank,
    monomial,
    reverse_star,
    substitute,
    unit,
)

_A_PLUS_B = NCPoly(AB, {"a": 1, "b": 1})
_A_PLUS_2B = NCPoly(AB, {"a": 1, "b": 2})
_A_MINUS_B = NCPoly(AB, {"a": 1, "b": -1})
_AB_PLUS_BA = NCPoly(AB, {"ab": 1, "ba": 1})
_DC_PLUS_CD = NCPoly(CD, {"dc": 1, "cd": 1})
_NE_WEIGHT = NCPoly(CD, {"d": 2, "cc": -1})


def _ab_coproduct_word(word: str):
    """Delete one letter in every position: word -> {(left, right): count}."""
    out: dict[tuple[str, str], int] = {}
    for i in range(len(word)):
        key = (word[:i], word[i + 1 :])
        out[key] = out.get(key, 0) + 1
    return out


def _apply_wordwise(p: NCPoly, table) -> NCPoly:
    total = None
    for word, coeff in p.terms.items():
        piece = table(word).scaled(coeff)
        total = piece if total is None else total + piece
    if total is None:
        return NCPoly(table("").alphabet)
    return total


# -- the vertex-wise interval transform on flag words ---------------------------

_IOTA_CACHE: dict[str, NCPoly] = {}


def _iota_word(word: str) -> NCPoly:
    """Raise a flag word of degree m to one of degree m+1 by the recursion
    that peels the outermost pair of b letters."""
    cached = _IOTA_CACHE.get(word)
    if cached is not None:
        return cached
    if "b" not in word:
        result = _A_PLUS_2B * monomial(AB, word)
    else:
        first = word.index("b")
        last = word.rindex("b")
        i = first
        j = len(word) - 1 - last
        if first == last:
            symmetric = monomial(AB, word) + monomial(AB, "a" * j + "b" + "a" * i)
            result = _A_PLUS_2B * symmetric + monomial(AB, "b" + "a" * (i + j + 1))
        else:
            middle = word[first + 1 : last]
            result = (
                _iota_word(word[: last]) * monomial(AB, "b" + "a" * j)
                + _iota_word(word[first + 1 :]) * monomial(AB, "b" + "a" * i)
                + _iota_word(middle) * monomial(AB, "b" + "a" * (i + j + 1))
            )
    _IOTA_CACHE[word] = result
    return result


def upsilon_interval_transform(p: NCPoly) -> NCPoly:
    """Flag polynomial of the bottomed interval poset from that of the
    original poset, term by term."""
    if p.alphabet != AB:
        raise PosetOpsError("the transform acts on ab-polynomials")
    return _apply_wordwise(p, _iota_word)


# -- mixing operator -------------------------------------------------------------

_QS_CACHE: dict[tuple[tuple, tuple], dict] = {}


def _quasi_shuffle(alpha: tuple, beta: tuple) -> dict:
    """Quasi-shuffle of two compositions: interleave parts, optionally
    merging one part from each side."""
    if not alpha:
        return {beta: 1}
    if not beta:
        return {alpha: 1}
    key = (alpha, beta)
    cached = _QS_CACHE.get(key)
    if cached is not None:
        return cached
    out: dict[tuple, int] = {}
    for head, rest in (
        ((alpha[0],), _quasi_shuffle(alpha[1:], beta)),
        ((beta[0],), _quasi_shuffle(alpha, beta[1:])),
        ((alpha[0] + beta[0],), _quasi_shuffle(alpha[1:], beta[1:])),
    ):
        for tail, count in rest.items():
            merged = head + tail
            out[merged] = out.get(merged, 0) + count
    _QS_CACHE[key] = out
    return out


def _word_to_composition(word: str) -> tuple:
    parts = []
    run = 0
    for letter in word:
        if letter == "a":
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    parts.append(run + 1)
    return tuple(parts)


def _composition_to_word(parts: tuple) -> str:
    return "b".join("a" * (part - 1) for part in parts)


_MIXING_AB_CACHE: dict[tuple[str, str], NCPoly] = {}


def _mixing_ab_words(u: str, v: str) -> NCPoly:
    key = (u, v)
    cached = _MIXING_AB_CACHE.get(key)
    if cached is not None:
        return cached
    to_flags = {"a": _A_PLUS_B, "b": monomial(AB, "b")}
    from_flags = {"a": _A_MINUS_B, "b": monomial(AB, "b")}
    u_flags = substitute(monomial(AB, u), to_flags)
    v_flags = substitute(monomial(AB, v), to_flags)
    mixed: dict[str, Fraction] = {}
    for uw, cu in u_flags.terms.items():
        alpha = _word_to_composition(uw)
        for vw, cv in v_flags.terms.items():
            beta = _word_to_composition(vw)
            for parts, count in _quasi_shuffle(alpha, beta).items():
                word = _composition_to_word(parts)
                mixed[word] = mixed.get(word, Fraction(0)) + cu * cv * count
    out = substitute(NCPoly(AB, mixed), from_flags)
    _MIXING_AB_CACHE[key] = out
    return out


def mixing_ab(p: NCPoly, q: NCPoly) -> NCPoly:
    """Mix two ab-polynomials the way direct products mix flag counts.

    Both arguments move to the flag-count basis (a -> a+b), their words
    quasi-shuffle as compositions, and the result moves back.  Each word
    pair is mixed once and cached; the general case is bilinear over them.
    """
    if p.alphabet != AB or q.alphabet != AB:
        raise PosetOpsError("mixing acts on ab-polynomials")
    mixed: dict[str, Fraction] = {}
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            factor = cu * cv
            for word, coeff in _mixing_ab_words(u, v).terms.items():
                mixed[word] = mixed.get(word, Fraction(0)) + coeff * factor
    return NCPoly(AB, mixed)


_MIXING_CD_CACHE: dict[tuple[str, str], NCPoly] = {}


def _mixing_cd_words(u: str, v: str) -> NCPoly:
    cached = _MIXING_CD_CACHE.get((u, v))
    if cached is not None:
        return cached
    if not v:
        if not u:
            result = monomial(CD, "c")
        else:
            result = _mixing_cd_words(v, u)
    else:
        head, last = v[:-1], v[-1]
        head_poly = monomial(CD, head)
        d = monomial(CD, "d")
        if last == "c":
            result = (
                head_poly * d * monomial(CD, u)
                + _mixing_cd_words(u, head) * monomial(CD, "c")
            )
            for (u1, u2), coeff in _cd_coproduct_word(u).items():
                result = result + (
                    _mixing_cd_words(u1, head) * d * monomial(CD, u2)
                ).scaled(coeff)
        else:
            result = (
                head_poly * d * _mixing_cd_words("", u)
                + _mixing_cd_words(u, head) * d
            )
            for (u1, u2), coeff in _cd_coproduct_word(u).items():
                result = result + (
                    _mixing_cd_words(u1, head) * d * _mixing_cd_words("", u2)
                ).scaled(coeff)
    _MIXING_CD_CACHE[(u, v)] = result
    return result


def mixing_cd(p: NCPoly, q: NCPoly) -> NCPoly:
    if p.alphabet != CD or q.alphabet != CD:
        raise PosetOpsError("this mixing form acts on cd-polynomials")
    total = NCPoly(CD)
    for u, cu in p.terms.items():
        for v, cv in q.terms.items():
            total = total + _mixing_cd_words(u, v).scaled(cu * cv)
    return total


def pyramid(p: NCPoly) -> NCPoly:
    """Mix with the one-point poset: the flag polynomial of the pyramid."""
    if p.alphabet == CD:
        return mixing_cd(unit(CD), p)
    if p.alphabet == AB:
        return mixing_ab(unit(AB), p)
    raise PosetOpsError("pyramid acts on ab- or cd-polynomials")


def lift(p: NCPoly) -> NCPoly:
    if p.alphabet != AB:
        raise PosetOpsError("lift acts on ab-polynomials")
    return _A_MINUS_B * p + p * _A_MINUS_B


# -- interval transforms on the index level --------------------------------------

_IAB_CACHE: dict[str, NCPoly] = {}


def _ab_interval_word(word: str) -> NCPoly:
    cached = _IAB_CACHE.get(word)
    if cached is not None:
        return cached
    if not word:
        result = _A_PLUS_B
    else:
        u, last = word[:-1], word[-1]
        u_star = reverse_star(monomial(AB, u))
        inner = monomial(AB, "ab" if last == "a" else "ba")
        result = _ab_interval_word(u) * monomial(AB, last) + _AB_PLUS_BA * u_star
        for (u1, u2), coeff in _ab_coproduct_word(u).items():
            piece = _ab_interval_word(u2) * inner * reverse_star(monomial(AB, u1))
            result = result + piece.scaled(coeff)
    _IAB_CACHE[word] = result
    return result


def ab_interval_transform(p: NCPoly) -> NCPoly:
    """Index of the bottomed interval poset from the index of the poset."""
    if p.alphabet != AB:
        raise PosetOpsError("the transform acts on ab-polynomials")
    return _apply_wordwise(p, _ab_interval_word)


_ICD_CACHE: dict[str, NCPoly] = {}


def _cd_interval_word(word: str) -> NCPoly:
    cached = _ICD_CACHE.get(word)
    if cached is not None:
        return cached
    if not word:
        result = monomial(CD, "c")
    else:
        u, last = word[:-1], word[-1]
        u_star = reverse_star(monomial(CD, u))
        d = monomial(CD, "d")
        if last == "c":
            result = _cd_interval_word(u) * monomial(CD, "c") + 2 * d * u_star
            for (u1, u2), coeff in _cd_coproduct_word(u).items():
                piece = _cd_interval_word(u2) * d * reverse_star(monomial(CD, u1))
                result = result + piece.scaled(coeff)
        else:
            result = (
                _cd_interval_word(u) * d
                + _DC_PLUS_CD * u_star
                + d * u_star * monomial(CD, "c")
            )
            for (u1, u2), coeff in _cd_coproduct_word(u).items():
                u1_star = reverse_star(monomial(CD, u1))
                u2_star = reverse_star(monomial(CD, u2))
                piece = _cd_interval_word(u2) * d * mixing_cd(unit(CD), u1_star)
                piece = piece + d * u2_star * d * u1_star
                result = result + piece.scaled(coeff)
    _ICD_CACHE[word] = result
    return result


def cd_interval_transform(p: NCPoly) -> NCPoly:
    if p.alphabet != CD:
        raise PosetOpsError("this transform acts on cd-polynomials")
    return _apply_wordwise(p, _cd_interval_word)


# -- second-kind transforms ------------------------------------------------------


def _second_kind_word_ab(word: str) -> NCPoly:
    result = monomial(AB, word) + reverse_star(monomial(AB, word))
    for (u1, u2), coeff in _ab_coproduct_word(word).items():
        piece = mixing_ab(reverse_star(monomial(AB, u1)), monomial(AB, u2))
        result = result + piece.scaled(coeff)
    return result


def second_kind_ab_transform(p: NCPoly) -> NCPoly:
    """Total index over the members of the one-per-element interval family."""
    if p.alphabet != AB:
        raise PosetOpsError("the transform acts on ab-polynomials")
    return _apply_wordwise(p, _second_kind_word_ab)


def _second_kind_word_cd(word: str) -> NCPoly:
    result = monomial(CD, word) + reverse_star(monomial(CD, word))
    for (u1, u2), coeff in _cd_coproduct_word(word).items():
        piece = mixing_cd(reverse_star(monomial(CD, u1)), monomial(CD, u2))
        result = result + piece.scaled(coeff)
    return result


def second_kind_cd_transform(p: NCPoly) -> NCPoly:
    if p.alphabet != CD:
        raise PosetOpsError("this transform acts on cd-polynomials")
    return _apply_wordwise(p, _second_kind_word_cd)


# -- Delannoy path model ---------------------------------------------------------

_DELANNOY_CACHE: dict[tuple[int, int], NCPoly] = {}


def delannoy_mixing(i: int, j: int) -> NCPoly:
    """Mixing of two chain powers read off Delannoy paths, one path at a
    time: east and north steps weigh c, diagonal steps weigh 2d - c²,
    weights multiplied in step order; the grand total is then halved.
    """
    if i < 0 or j < 0:
        raise InvalidSize("path endpoints need i, j >= 0")
    cached = _DELANNOY_CACHE.get((i, j))
    if cached is not None:
        return cached
    c = monomial(CD, "c")
    total = NCPoly(CD)

    def walk(x: int, y: int, weight: NCPoly) -> None:
        nonlocal total
        if x == i and y == j:
            total = total + weight
            return
        if x < i:
            walk(x + 1, y, weight * c)
        if y < j:
            walk(x, y + 1, weight * c)
        if x < i and y < j:
            walk(x + 1, y + 1, weight * _NE_WEIGHT)

    walk(-1, 0, unit(CD))
    walk(0, -1, unit(CD))
    result = total.scaled(Fraction(1, 2))
    _DELANNOY_CACHE[(i, j)] = result
    return result


def delannoy_ce_coefficient(i: int, j: int, r: int):
    """Coefficient of any ce-word with r pairs of e's in the ce form of the
    mixed chain powers; zero when no such word fits the degree."""
    if i < 0 or j < 0 or r < 0:
        raise InvalidSize("need i, j, r >= 0")
    if 2 * r > i + j + 1 or i + 1 - r < 0:
        return Fraction(0)
    sign = -1 if r % 2 else 1
    return Fraction(sign, 2) * comb(i + j + 2 - 2 * r, i + 1 - r)


# -- closed-form coefficients for chain powers ------------------------------------


def _check_power_word(n: int, ks, weight: int) -> int:
    ks = tuple(ks)
    if not ks or any(k < 0 for k in ks):
        raise DegreeMismatch("parts must be a nonempty list of nonnegative ints")
    r = len(ks) - 1
    if sum(ks) + 2 * r != weight:
        raise DegreeMismatch(
            f"parts {ks} with {r} d's have degree {sum(ks) + 2 * r}, need {weight}"
        )
    return r


def ladder_interval_coefficient(n: int, ks) -> int:
    """Coefficient of c^{k0} d c^{k1} ... d c^{kr} in the interval transform
    of c^n: the first c-run is free, every later one contributes k+1."""
    r = _check_power_word(n, ks, n + 1)
    value = 2**r
    for k in tuple(ks)[1:]:
        value *= k + 1
    return value


def ladder_second_kind_coefficient(n: int, ks) -> int:
    """Same word shape inside the second-kind transform of c^n: every
    c-run contributes, including the first."""
    r = _check_power_word(n, ks, n)
    value = 2 ** (r + 1)
    for k in ks:
        value *= k + 1
    return value


def ladder_second_kind_ce_coefficient(n: int, r: int) -> int:
    """ce-form coefficient of any word with r adjacent ee-pairs in the
    second-kind transform of c^n."""
    if r < 0 or 2 * r > n:
        raise DegreeMismatch(f"need 0 <= 2r <= {n}")
    sign = -1 if r % 2 else 1
    return sign * 2 ** (n + 1 - 2 * r)


def ce_word_count(n: int, r: int) -> int:
    """Number of degree-n ce-words made of c's and r adjacent ee-pairs."""
    return comb(n - r, r)


def gamma_value(n: int) -> int:
    """Total of the ce coefficients of the second-kind transform of c^n."""
    return 2 * (n + 1)


# -- eigenvector experiments -------------------------------------------------------


def _poly_columns(images) -> list:
    return [dict(image.terms) for image in images]


def eigen_experiments(max_n: int) -> list:
    """Exact linear algebra around the second-kind transform, degree by
    degree: kernel dimension, whether the reversal-antisymmetric space
    dies, and how much of the symmetric space the pyramid and lift
    compositions reach.  Everything here is measured, not assumed; in
    particular a composition only counts as an eigenvector when the
    transform really scales it by 2^(pyramids + 1), and for degree 3 and
    up some compositions fail that check."""
    if max_n < 1:
        raise InvalidSize("need max_n >= 1")
    if max_n > 7:
        raise TooLarge("degree capped at 7 to keep exact kernels tractable")
    results = []
    for n in range(1, max_n + 1):
        words = ab_words(n)
        columns = _poly_columns(
            second_kind_ab_transform(monomial(AB, w)) for w in words
        )
        kernel_dim = len(words) - matrix_rank(columns)
        asym = asym_basis(n)
        asym_dim = len(asym)
        kernel_contains_asym = all(
            second_kind_ab_transform(v).is_zero() for v in asym
        )
        sym_dim = len(words) - asym_dim

        compositions = []
        eigen_compositions = []
        for bits in range(2**n):
            vector = unit(AB)
            pyr_count = 0
            for step in range(n):
                if bits >> step & 1:
                    vector = pyramid(vector)
                    pyr_count += 1
                else:
                    vector = lift(vector)
            compositions.append(vector)
            expected = vector.scaled(2 ** (pyr_count + 1))
            if second_kind_ab_transform(vector) == expected:
                eigen_compositions.append(vector)
        composition_rank = matrix_rank(_poly_columns(compositions))
        if eigen_compositions:
            eigen_rank = matrix_rank(_poly_columns(eigen_compositions))
        else:
            eigen_rank = 0
        all_symmetric = all(reverse_star(v) == v for v in compositions)

        results.append(
            {
                "n": n,
                "kernel_dim": kernel_dim,
                "asym_dim": asym_dim,
                "kernel_contains_asym": kernel_contains_asym,
                "kernel_equals_asym": kernel_contains_asym
                and kernel_dim == asym_dim,
                "sym_dim": sym_dim,
                "composition_count": 2**n,
                "eigen_composition_count": len(eigen_compositions),
                "composition_rank": composition_rank,
                "eigen_composition_rank": eigen_rank,
                "compositions_symmetric": all_symmetric,
                "spans_sym": composition_rank == sym_dim,
                "eigen_spans_sym": eigen_rank == sym_dim,
            }
        )
    return results
