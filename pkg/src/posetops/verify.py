"""Named verification suites pitting every operator against brute force.

Each suite returns a report dict with one entry per check.  A check
compares an independently enumerated value (the expected side) with the
operator or closed form under test (the actual side); both sides are
canonicalized before the comparison, so a pass means byte-for-byte equal
serialized forms.

The poset corpus is deterministic: the standard families, their duals,
pairwise direct products under a size cap, and twenty pseudo-random
bounded subposets of the rank-4 subset lattice drawn from a seeded
generator.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .complexes import (
    F_polynomial,
    SimplicialComplex,
    UnivariatePoly,
    cheb_transform_T,
    complex_to_dict,
    f_vector,
    order_complex,
    order_complex_of_intervals_check,
    second_kind_links,
    tchebyshev_triangulation,
    univariate_to_dict,
    vertex_link_transform,
)
from .errors import NotBounded, NotGraded, PosetOpsError
from .flags import FlagFVector, ab_index, cd_index, flag_to_dict, upsilon
from .ncpoly import (
    AB,
    CD,
    CE,
    NCPoly,
    asym_basis,
    cd_ce_convert,
    cd_words,
    expand_cd,
    monomial,
    to_dict as poly_to_dict,
    unit,
)
from .operators import (
    ab_interval_transform,
    cd_interval_transform,
    ce_word_count,
    delannoy_ce_coefficient,
    delannoy_mixing,
    eigen_experiments,
    gamma_value,
    ladder_interval_coefficient,
    ladder_second_kind_ce_coefficient,
    ladder_second_kind_coefficient,
    lift,
    mixing_ab,
    mixing_cd,
    second_kind_ab_transform,
    second_kind_cd_transform,
    upsilon_interval_transform,
)
from .posets import (
    GradedPoset,
    Poset,
    boolean_lattice,
    bottom_to_top_chains,
    chain_poset,
    count_chains_with_support,
    crosspolytope_lattice,
    cube_lattice,
    diamond_product,
    direct_product,
    graded_interval_poset,
    induced_subposet,
    interval_poset,
    is_eulerian,
    is_isomorphic,
    ladder_poset,
    pair_label,
    pell_number,
    poset_to_dict,
    second_kind_member_product,
    second_kind_transform,
)

SIZE_CAP = 200
PRODUCT_ISO_CAP = 128


# -- the corpus -----------------------------------------------------------------


def base_families() -> list:
    """The standard graded posets every suite starts from."""
    named = []
    for n in range(1, 5):
        named.append((f"boolean {n}", boolean_lattice(n)))
    for n in range(1, 5):
        named.append((f"ladder {n}", ladder_poset(n)))
    for n in range(1, 5):
        named.append((f"chain {n}", chain_poset(n)))
    for n in range(1, 4):
        named.append((f"cube {n}", cube_lattice(n)))
    return named


def random_bounded_subposets(seed: int, count: int = 20) -> list:
    """Bounded graded subposets of the rank-4 subset lattice.

    Interior elements are kept independently with probability 0.6; draws
    that break gradedness are rejected and redrawn, so the stream is a
    deterministic function of the seed.
    """
    rng = random.Random(seed)
    big = boolean_lattice(4)
    interior = [x for x in big.labels if x not in (big.bottom, big.top)]
    out = []
    for k in range(count):
        while True:
            keep = [x for x in interior if rng.random() < 0.6]
            try:
                P = induced_subposet(big, [big.bottom] + keep + [big.top])
            except (NotGraded, NotBounded):
                continue
            out.append((f"random {k} from boolean 4 (seed {seed})", P))
            break
    return out


_CORPUS_CACHE: dict[int, tuple] = {}


def corpus(seed: int = 0) -> list:
    """Named corpus: families, duals, capped products, random subposets."""
    cached = _CORPUS_CACHE.get(seed)
    if cached is None:
        named = base_families()
        out = list(named)
        out += [(f"dual({name})", P.dual()) for name, P in named]
        for (na, A), (nb, B) in itertools.combinations_with_replacement(named, 2):
            if len(A.labels) * len(B.labels) <= SIZE_CAP:
                out.append((f"{na} x {nb}", direct_product(A, B)))
        out += random_bounded_subposets(seed)
        cached = tuple(out)
        _CORPUS_CACHE[seed] = cached
    return list(cached)


def interval_ready_corpus(seed: int = 0) -> list:
    """Corpus members small enough for interval-poset enumeration."""
    return [
        (name, P)
        for name, P in corpus(seed)
        if P.top_rank <= 5 and len(P.labels) <= SIZE_CAP
    ]


def complex_corpus() -> list:
    """Small named complexes, every one with at most six edges."""
    return [
        ("a point", SimplicialComplex.from_facets([["p"]])),
        ("one edge", SimplicialComplex.from_facets([["u", "v"]])),
        ("a path of two edges", SimplicialComplex.from_facets([["u", "v"], ["v", "w"]])),
        (
            "the triangle boundary",
            SimplicialComplex.from_facets([["u", "v"], ["v", "w"], ["u", "w"]]),
        ),
        ("a solid triangle", SimplicialComplex.from_facets([["u", "v", "w"]])),
        (
            "the square boundary",
            SimplicialComplex.from_facets(
                [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]]
            ),
        ),
        (
            "two triangles sharing an edge",
            SimplicialComplex.from_facets([["u", "v", "w"], ["v", "w", "x"]]),
        ),
        (
            "the hexagon boundary",
            SimplicialComplex.from_facets(
                [[f"v{i}", f"v{(i + 1) % 6}"] for i in range(6)]
            ),
        ),
        ("a solid tetrahedron", SimplicialComplex.from_facets([["a", "b", "c", "d"]])),
    ]


# -- report plumbing ------------------------------------------------------------


def canonical(value):
    """JSON-ready canonical form used for exact case comparison."""
    if isinstance(value, NCPoly):
        return poly_to_dict(value)
    if isinstance(value, UnivariatePoly):
        return univariate_to_dict(value)
    if isinstance(value, FlagFVector):
        return flag_to_dict(value)
    if isinstance(value, Poset):
        return poset_to_dict(value)
    if isinstance(value, SimplicialComplex):
        return complex_to_dict(value)
    if isinstance(value, Fraction):
        return [value.numerator, value.denominator]
    if isinstance(value, dict):
        return {str(k): canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    return value


def case(description: str, expected, actual) -> dict:
    expected = canonical(expected)
    actual = canonical(actual)
    return {
        "description": description,
        "expected": expected,
        "actual": actual,
        "pass": expected == actual,
    }


# -- interval transforms ----------------------------------------------------------


def iota_example_cases() -> list:
    """Frozen values of the flag-word interval transform on short words."""
    frozen = [
        ("a", {"aa": 1, "ba": 2}),
        ("b", {"ab": 2, "ba": 1, "bb": 4}),
        ("ab", {"aab": 1, "aba": 1, "baa": 1, "bab": 2, "bba": 2}),
        ("ba", {"aab": 1, "aba": 1, "baa": 1, "bab": 2, "bba": 2}),
        ("bb", {"aba": 1, "abb": 4, "bab": 2, "bba": 2, "bbb": 8}),
    ]
    cases = []
    for word, terms in frozen:
        cases.append(
            case(
                f"flag-word interval transform of {word}",
                NCPoly(AB, terms),
                upsilon_interval_transform(monomial(AB, word)),
            )
        )
    return cases


def interval_upsilon_corpus_cases(seed: int = 0) -> list:
    """Flag-word index of every manageable interval poset, both routes."""
    cases = []
    for name, P in interval_ready_corpus(seed):
        cases.append(
            case(
                f"{name}: flag-word index of the bottomed interval poset",
                upsilon(graded_interval_poset(P)),
                upsilon_interval_transform(upsilon(P)),
            )
        )
    return cases


def interval_ab_corpus_cases(seed: int = 0) -> list:
    """ab-index of every manageable interval poset, both routes."""
    cases = []
    for name, P in interval_ready_corpus(seed):
        cases.append(
            case(
                f"{name}: ab-index of the bottomed interval poset",
                ab_index(graded_interval_poset(P)),
                ab_interval_transform(ab_index(P)),
            )
        )
    return cases


def interval_cd_cases(seed: int = 0) -> list:
    """cd-level interval transform against the ab route and raw posets."""
    cases = []
    for total in range(5):
        for word in cd_words(total):
            shown = word if word else "the empty word"
            cases.append(
                case(
                    f"cd interval transform of {shown} expands to the ab one",
                    ab_interval_transform(expand_cd(monomial(CD, word))),
                    expand_cd(cd_interval_transform(monomial(CD, word))),
                )
            )
    for name, P in interval_ready_corpus(seed):
        if is_eulerian(P):
            cases.append(
                case(
                    f"{name}: cd-index of the bottomed interval poset",
                    cd_index(graded_interval_poset(P)),
                    cd_interval_transform(cd_index(P)),
                )
            )
    return cases


# -- second-kind transform ---------------------------------------------------------


def second_kind_corpus_cases(seed: int = 0) -> list:
    """Total ab-index over second-kind members, two poset routes each."""
    cases = []
    for name, P in interval_ready_corpus(seed):
        operator_value = second_kind_ab_transform(ab_index(P))
        upset_total = NCPoly(AB, {})
        for _, member in second_kind_transform(P):
            upset_total = upset_total + ab_index(member)
        cases.append(
            case(
                f"{name}: summed member index via up-sets in the interval poset",
                upset_total,
                operator_value,
            )
        )
        product_total = NCPoly(AB, {})
        for x in P.labels:
            product_total = product_total + ab_index(
                second_kind_member_product(P, x)
            )
        cases.append(
            case(
                f"{name}: summed member index via dual-lower times upper products",
                product_total,
                operator_value,
            )
        )
    return cases


# -- mixing ------------------------------------------------------------------------


def mixing_word_cases() -> list:
    """Definition route against the cd recursion, plus symmetry."""
    cases = [
        case(
            "mixing two empty words gives c",
            monomial(CD, "c"),
            mixing_cd(unit(CD), unit(CD)),
        )
    ]
    pairs = []
    for i in range(6):
        for j in range(6 - i):
            for u in cd_words(i):
                for v in cd_words(j):
                    pairs.append((u, v))
    for u, v in pairs:
        su = u if u else "1"
        sv = v if v else "1"
        cases.append(
            case(
                f"mixing of ({su}, {sv}): cd recursion expands to the definition",
                mixing_ab(expand_cd(monomial(CD, u)), expand_cd(monomial(CD, v))),
                expand_cd(mixing_cd(monomial(CD, u), monomial(CD, v))),
            )
        )
    for u, v in pairs:
        if u < v:
            su = u if u else "1"
            sv = v if v else "1"
            cases.append(
                case(
                    f"mixing is symmetric on ({su}, {sv})",
                    mixing_cd(monomial(CD, u), monomial(CD, v)),
                    mixing_cd(monomial(CD, v), monomial(CD, u)),
                )
            )
    return cases


def mixing_poset_cases(seed: int = 0) -> list:
    """Mixing of two ab-indices against the index of the direct product."""
    cases = []
    for (na, A), (nb, B) in itertools.combinations_with_replacement(
        base_families(), 2
    ):
        if len(A.labels) * len(B.labels) > SIZE_CAP:
            continue
        cases.append(
            case(
                f"ab-index of {na} x {nb} is the mixing of the factor indices",
                ab_index(direct_product(A, B)),
                mixing_ab(ab_index(A), ab_index(B)),
            )
        )
    return cases


def product_law_cases(seed: int = 0) -> list:
    """Interval and second-kind constructions split over direct products."""
    small = [
        ("boolean 1", boolean_lattice(1)),
        ("boolean 2", boolean_lattice(2)),
        ("chain 1", chain_poset(1)),
        ("chain 2", chain_poset(2)),
    ]
    cases = []
    for (na, A), (nb, B) in itertools.combinations_with_replacement(small, 2):
        prod = direct_product(A, B)
        cases.append(
            case(
                f"interval poset of {na} x {nb} is the product of interval posets",
                True,
                is_isomorphic(
                    interval_poset(prod),
                    direct_product(interval_poset(A), interval_poset(B)),
                    max_size=PRODUCT_ISO_CAP,
                ),
            )
        )
        cases.append(
            case(
                f"bottomed interval poset of {na} x {nb} is the bounded product "
                "of the factors' bottomed interval posets",
                True,
                is_isomorphic(
                    graded_interval_poset(prod),
                    diamond_product(
                        graded_interval_poset(A), graded_interval_poset(B)
                    ),
                    max_size=PRODUCT_ISO_CAP,
                ),
            )
        )
        members_prod = dict(iter(second_kind_transform(prod)))
        members_a = dict(iter(second_kind_transform(A)))
        members_b = dict(iter(second_kind_transform(B)))
        mismatched = []
        for p in A.labels:
            for q in B.labels:
                combined = direct_product(members_a[p], members_b[q])
                if not is_isomorphic(
                    members_prod[pair_label(p, q)],
                    combined,
                    max_size=PRODUCT_ISO_CAP,
                ):
                    mismatched.append(pair_label(p, q))
        cases.append(
            case(
                f"second-kind members of {na} x {nb} split memberwise",
                [],
                mismatched,
            )
        )
    return cases


# -- weighted lattice paths ----------------------------------------------------------


def _ce_block_words(length: int, pair_count: int) -> list:
    """Words of the given length built from single c's and adjacent ee pairs."""
    out: list[str] = []
    if length < 0 or 2 * pair_count > length:
        return out

    def build(prefix: str, c_left: int, pairs_left: int) -> None:
        if c_left == 0 and pairs_left == 0:
            out.append(prefix)
            return
        if c_left:
            build(prefix + "c", c_left - 1, pairs_left)
        if pairs_left:
            build(prefix + "ee", c_left, pairs_left - 1)

    build("", length - 2 * pair_count, pair_count)
    return out


def delannoy_cases() -> list:
    """Path-weighted mixing of c-powers: values, ce coefficients, recurrence."""
    cases = []
    powers = {
        k: monomial(CD, "c" * k) for k in range(7)
    }
    mixed = {}
    for i in range(6):
        for j in range(6):
            mixed[i, j] = mixing_cd(powers[i], powers[j])
            cases.append(
                case(
                    f"mixing of c^{i} and c^{j} via weighted lattice paths",
                    mixed[i, j],
                    delannoy_mixing(i, j),
                )
            )
    for i in range(6):
        for j in range(6):
            length = i + j + 1
            terms = {}
            for r in range(length // 2 + 1):
                coeff = delannoy_ce_coefficient(i, j, r)
                if coeff:
                    for word in _ce_block_words(length, r):
                        terms[word] = coeff
            cases.append(
                case(
                    f"ce form of the mixing of c^{i} and c^{j} follows the "
                    "binomial pattern",
                    cd_ce_convert(mixed[i, j], CE),
                    NCPoly(CE, terms),
                )
            )
    two_d_minus_cc = NCPoly(CD, {"d": 2, "cc": -1})
    for i in range(5):
        for j in range(5):
            recurrence = (
                (mixed[i, j + 1] + mixed[i + 1, j]) * monomial(CD, "c")
                + mixed[i, j] * two_d_minus_cc
            )
            cases.append(
                case(
                    f"two-variable recurrence at c^{i + 1}, c^{j + 1}",
                    mixed[i + 1, j + 1],
                    recurrence,
                )
            )
    return cases


# -- two-wide towers -------------------------------------------------------------


def _cd_word_runs(word: str) -> tuple:
    return tuple(len(block) for block in word.split("d"))


def ladder_cases() -> list:
    """Closed forms for interval and second-kind transforms of c-powers."""
    cases = []
    for n in range(1, 7):
        expected = {}
        for word in cd_words(n + 1):
            coeff = ladder_interval_coefficient(n, _cd_word_runs(word))
            if coeff:
                expected[word] = coeff
        cases.append(
            case(
                f"interval transform of c^{n} matches the run-product closed form",
                cd_interval_transform(monomial(CD, "c" * n)),
                NCPoly(CD, expected),
            )
        )
    for n in range(1, 7):
        expected = {}
        for word in cd_words(n):
            coeff = ladder_second_kind_coefficient(n, _cd_word_runs(word))
            if coeff:
                expected[word] = coeff
        cases.append(
            case(
                f"second-kind transform of c^{n} matches the run-product closed form",
                second_kind_cd_transform(monomial(CD, "c" * n)),
                NCPoly(CD, expected),
            )
        )
    for n in range(1, 7):
        terms = {}
        word_counts_match = True
        for r in range(n // 2 + 1):
            words = _ce_block_words(n, r)
            if len(words) != ce_word_count(n, r):
                word_counts_match = False
            coeff = ladder_second_kind_ce_coefficient(n, r)
            if coeff:
                for word in words:
                    terms[word] = coeff
        cases.append(
            case(
                f"ce form of the second-kind transform of c^{n} is a signed "
                "power pattern",
                cd_ce_convert(
                    second_kind_cd_transform(monomial(CD, "c" * n)), CE
                ),
                NCPoly(CE, terms),
            )
        )
        cases.append(
            case(
                f"ce word count at degree {n} follows the binomial count",
                True,
                word_counts_match,
            )
        )
    for n in range(1, 4):
        tower = ladder_poset(n)
        cases.append(
            case(
                f"raw enumeration: cd-index of the bottomed interval poset of "
                f"ladder {n}",
                cd_index(graded_interval_poset(tower)),
                cd_interval_transform(monomial(CD, "c" * n)),
            )
        )
        total = NCPoly(AB, {})
        for _, member in second_kind_transform(tower):
            total = total + ab_index(member)
        cases.append(
            case(
                f"raw enumeration: summed second-kind member index of ladder {n}",
                total,
                expand_cd(second_kind_cd_transform(monomial(CD, "c" * n))),
            )
        )
    for n in range(1, 9):
        cases.append(
            case(
                f"total ce weight at degree {n} is 2(n+1)",
                2 * (n + 1),
                gamma_value(n),
            )
        )
    cases.append(case("total ce weight at degree 4 is 10", 10, gamma_value(4)))
    return cases


# -- nested interval chains --------------------------------------------------------


def support_count_cases(seed: int = 0) -> list:
    """Chains of nested intervals with full support follow the Pell pattern."""
    cases = [
        case(
            "rank-1 chain: nested-interval chains over the full support",
            3,
            count_chains_with_support(chain_poset(1), ["0", "1"]),
        ),
        case(
            "rank-2 chain: nested-interval chains over the full support",
            7,
            count_chains_with_support(chain_poset(2), ["0", "1", "2"]),
        ),
    ]
    for name, P in corpus(seed):
        by_length: dict[int, set] = {}
        for chain in bottom_to_top_chains(P, 6):
            m = len(chain) - 1
            by_length.setdefault(m, set()).add(
                count_chains_with_support(P, chain)
            )
        for m in sorted(by_length):
            cases.append(
                case(
                    f"{name}: every bottom-to-top chain of length {m} counts "
                    f"P({m}) + P({m + 1}) nested-interval chains",
                    [pell_number(m) + pell_number(m + 1)],
                    sorted(by_length[m]),
                )
            )
    return cases


# -- edgewise subdivisions -----------------------------------------------------------


def triangulation_cases() -> list:
    """Order independence, face polynomial law, and the summed link law."""
    cases = []
    for name, K in complex_corpus():
        edges = K.edges()
        reference = tchebyshev_triangulation(K)
        distinct = sorted(
            {
                tuple(f_vector(tchebyshev_triangulation(K, order)))
                for order in itertools.permutations(edges)
            }
        )
        cases.append(
            case(
                f"{name}: one face count across all orders of its "
                f"{len(edges)} edges",
                [f_vector(reference)],
                [list(fv) for fv in distinct],
            )
        )
        cases.append(
            case(
                f"{name}: face polynomial of the subdivision is the "
                "first-kind transform of the original",
                F_polynomial(reference),
                cheb_transform_T(F_polynomial(K)),
            )
        )
        link_sum = UnivariatePoly()
        for member in second_kind_links(reference, K.vertices):
            link_sum = link_sum + F_polynomial(member)
        cases.append(
            case(
                f"{name}: summed link face polynomial over original vertices "
                "is the doubled second-kind transform",
                link_sum,
                vertex_link_transform(F_polynomial(K)),
            )
        )
    return cases


def interval_complex_cases(seed: int = 0) -> list:
    """Order complex of the interval poset equals the edgewise subdivision."""
    cases = []
    for name, P in corpus(seed):
        if len(P.labels) <= 8:
            cases.append(
                case(
                    f"{name}: order complex of the interval poset is the "
                    "containment-ordered edgewise subdivision",
                    True,
                    order_complex_of_intervals_check(P),
                )
            )
    return cases


# -- Eulerian intervals ---------------------------------------------------------------


_SUBSET_INTERVAL_ROWS = {
    1: [1, 2],
    2: [1, 8, 8],
    3: [1, 26, 72, 48],
    4: [1, 80, 464, 768, 384],
}


def interval_eulerian_cases(seed: int = 0) -> list:
    """Eulerian posets keep Eulerian interval posets; sphere face counts."""
    cases = []
    for name, P in interval_ready_corpus(seed):
        if is_eulerian(P):
            cases.append(
                case(
                    f"{name}: the bottomed interval poset of an Eulerian poset "
                    "is Eulerian",
                    True,
                    is_eulerian(graded_interval_poset(P)),
                )
            )
    for n, row in _SUBSET_INTERVAL_ROWS.items():
        K = order_complex(
            graded_interval_poset(boolean_lattice(n)), strip_extremes=True
        )
        counts = f_vector(K)
        cases.append(
            case(
                f"face numbers of the proper interval complex of boolean {n}",
                row,
                counts,
            )
        )
        reduced_euler = sum(
            (-1) ** (k - 1) * value for k, value in enumerate(counts)
        )
        cases.append(
            case(
                f"reduced Euler characteristic for boolean {n} matches a "
                f"{n - 1}-sphere",
                (-1) ** (n - 1),
                reduced_euler,
            )
        )
        cross = order_complex(crosspolytope_lattice(n), strip_extremes=True)
        cases.append(
            case(
                f"boolean {n}: same face numbers as the proper part of the "
                "crosspolytope face lattice",
                f_vector(cross),
                counts,
            )
        )
    for n in range(1, 4):
        cases.append(
            case(
                f"bottomed interval poset of boolean {n} is the cube {n} "
                "face lattice",
                True,
                is_isomorphic(
                    graded_interval_poset(boolean_lattice(n)), cube_lattice(n)
                ),
            )
        )
    return cases


# -- eigenvectors ----------------------------------------------------------------------


_EIGEN_REPORTS: list | None = None


def _eigen_reports() -> list:
    global _EIGEN_REPORTS
    if _EIGEN_REPORTS is None:
        _EIGEN_REPORTS = eigen_experiments(6)
    return _EIGEN_REPORTS


def eigen_cases(seed: int = 0) -> list:
    """Eigenvalues of the second-kind transform and kernel measurements."""
    cases = []
    boolean_indices = {n: ab_index(boolean_lattice(n)) for n in range(1, 5)}
    for n, psi in boolean_indices.items():
        cases.append(
            case(
                f"second-kind transform scales the boolean {n} index by 2^{n}",
                psi.scaled(2**n),
                second_kind_ab_transform(psi),
            )
        )
    for n in range(1, 7):
        survivors = [
            i
            for i, v in enumerate(asym_basis(n))
            if not second_kind_ab_transform(v).is_zero()
        ]
        cases.append(
            case(
                f"the reversal-antisymmetric basis at degree {n} is annihilated",
                [],
                survivors,
            )
        )
    for n, psi in boolean_indices.items():
        lifted = lift(psi)
        cases.append(
            case(
                f"lift of the boolean {n} index keeps eigenvalue 2^{n}",
                lifted.scaled(2**n),
                second_kind_ab_transform(lifted),
            )
        )
    for n in range(1, 7):
        survivors = [
            i
            for i, v in enumerate(asym_basis(n))
            if not second_kind_ab_transform(lift(v)).is_zero()
        ]
        cases.append(
            case(
                f"lifted reversal-antisymmetric vectors at degree {n} stay "
                "in the kernel",
                [],
                survivors,
            )
        )
    one = unit(AB)
    eigen_pairs = [
        ("two empty words", one, 2, one, 2),
        ("the empty word and the boolean 2 index", one, 2, boolean_indices[2], 4),
        ("the boolean 2 index with itself", boolean_indices[2], 4, boolean_indices[2], 4),
        ("the boolean 2 and boolean 3 indices", boolean_indices[2], 4, boolean_indices[3], 8),
        ("the boolean 3 index with itself", boolean_indices[3], 8, boolean_indices[3], 8),
        ("a lifted empty word and the boolean 2 index", lift(one), 2, boolean_indices[2], 4),
    ]
    for text, p, lam_p, q, lam_q in eigen_pairs:
        mixed = mixing_ab(p, q)
        cases.append(
            case(
                f"mixing eigenvectors multiplies eigenvalues: {text}",
                mixed.scaled(lam_p * lam_q),
                second_kind_ab_transform(mixed),
            )
        )
    for rep in _eigen_reports():
        cases.append(
            case(
                f"degree {rep['n']} measurements (evidence, not asserted): "
                f"kernel dimension {rep['kernel_dim']} vs antisymmetric "
                f"dimension {rep['asym_dim']}; pyramid/lift compositions span "
                f"{rep['composition_rank']} of the {rep['sym_dim']}-dimensional "
                f"symmetric space; {rep['eigen_composition_count']} of "
                f"{rep['composition_count']} compositions are eigenvectors",
                rep,
                rep,
            )
        )
    return cases


# -- suites ------------------------------------------------------------------------


def _suite_iota(seed: int) -> list:
    return iota_example_cases() + interval_upsilon_corpus_cases(seed)


def _suite_jojic_ab(seed: int) -> list:
    return interval_ab_corpus_cases(seed)


def _suite_jojic_cd(seed: int) -> list:
    return interval_cd_cases(seed)


def _suite_ii(seed: int) -> list:
    return second_kind_corpus_cases(seed)


def _suite_mixing(seed: int) -> list:
    return mixing_word_cases() + mixing_poset_cases(seed) + product_law_cases(seed)


def _suite_delannoy(seed: int) -> list:
    return delannoy_cases()


def _suite_ladder(seed: int) -> list:
    return ladder_cases()


def _suite_pell(seed: int) -> list:
    return support_count_cases(seed)


def _suite_triangulation(seed: int) -> list:
    return triangulation_cases() + interval_complex_cases(seed)


def _suite_typeb(seed: int) -> list:
    return interval_eulerian_cases(seed)


def _suite_eigen(seed: int) -> list:
    return eigen_cases(seed)


SUITES = {
    "iota": _suite_iota,
    "jojic-ab": _suite_jojic_ab,
    "jojic-cd": _suite_jojic_cd,
    "ii": _suite_ii,
    "mixing": _suite_mixing,
    "delannoy": _suite_delannoy,
    "ladder": _suite_ladder,
    "pell": _suite_pell,
    "tcheb-triangulation": _suite_triangulation,
    "typeb": _suite_typeb,
    "eigen": _suite_eigen,
}


def run_suite(suite: str, seed: int = 0) -> dict:
    """Run one named suite (or "all") and wrap the cases in a report."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        known = ", ".join(list(SUITES) + ["all"])
        raise PosetOpsError(f"unknown suite {suite!r} (known: {known})")
    cases = []
    for name in names:
        try:
            cases.extend(SUITES[name](seed))
        except PosetOpsError as error:
            cases.append(
                {
                    "description": f"suite {name} aborted early",
                    "expected": "a completed run",
                    "actual": f"{type(error).__name__}: {error}",
                    "pass": False,
                }
            )
    passed = sum(1 for entry in cases if entry["pass"])
    return {
        "suite": suite,
        "cases": cases,
        "summary": {
            "total": len(cases),
            "passed": passed,
            "failed": len(cases) - passed,
        },
    }
