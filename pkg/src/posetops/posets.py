"""Finite posets, graded posets, and the interval constructions.

The order relation is materialized at construction time as one bitmask row
per element (up[i] holds every j with element i below-or-equal element j),
so comparability tests and interval extraction are cheap afterwards.
"""

from .errors import (
    CycleDetected,
    EndpointsNotExtreme,
    InvalidSize,
    NotAChain,
    NotBounded,
    NotGraded,
    PosetOpsError,
    TooLarge,
)

EMPTY_INTERVAL = "∅"

GENERATION_CAP = 8192


def interval_label(lower: str, upper: str) -> str:
    return f"[{lower},{upper}]"


def pair_label(left: str, right: str) -> str:
    return f"({left},{right})"


class Poset:
    """A finite poset given by element labels and its cover relation."""

    __slots__ = ("labels", "index", "covers_up", "covers_down", "up", "down")

    def __init__(self, labels, cover_pairs):
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise PosetOpsError(f"duplicate element label {label!r}")
            index[label] = i
        n = len(labels)
        covers_up: list[list[int]] = [[] for _ in range(n)]
        covers_down: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for lo, hi in cover_pairs:
            if lo not in index or hi not in index:
                raise PosetOpsError(
                    f"cover ({lo!r}, {hi!r}) references an unknown element"
                )
            i, j = index[lo], index[hi]
            if i == j:
                raise CycleDetected(f"cover ({lo!r}, {hi!r}) is a self-loop")
            if (i, j) in seen:
                continue
            seen.add((i, j))
            covers_up[i].append(j)
            covers_down[j].append(i)

        order = self._topological_order(n, covers_up, covers_down)

        up = [0] * n
        for i in reversed(order):
            mask = 1 << i
            for j in covers_up[i]:
                mask |= up[j]
            up[i] = mask
        down = [0] * n
        for i in order:
            mask = 1 << i
            for j in covers_down[i]:
                mask |= down[j]
            down[i] = mask

        for i in range(n):
            for j in covers_up[i]:
                for k in covers_up[i]:
                    if k != j and up[k] >> j & 1:
                        raise PosetOpsError(
                            f"cover ({labels[i]!r}, {labels[j]!r}) is implied "
                            f"by a longer path and must not be listed"
                        )

        self.labels = labels
        self.index = index
        self.covers_up = tuple(tuple(js) for js in covers_up)
        self.covers_down = tuple(tuple(js) for js in covers_down)
        self.up = tuple(up)
        self.down = tuple(down)

    @staticmethod
    def _topological_order(n, covers_up, covers_down):
        indegree = [len(js) for js in covers_down]
        stack = [i for i in range(n) if not indegree[i]]
        order = []
        while stack:
            i = stack.pop()
            order.append(i)
            for j in covers_up[i]:
                indegree[j] -= 1
                if not indegree[j]:
                    stack.append(j)
        if len(order) != n:
            raise CycleDetected("the cover relation contains a cycle")
        return order

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} with {len(self)} elements>"

    def cover_pairs(self):
        """All covers as sorted (lower, upper) label pairs."""
        pairs = [
            (self.labels[i], self.labels[j])
            for i in range(len(self.labels))
            for j in self.covers_up[i]
        ]
        pairs.sort()
        return pairs

    def leq(self, x: str, y: str) -> bool:
        return self.up[self.index[x]] >> self.index[y] & 1 == 1

    def less(self, x: str, y: str) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def minimal_indices(self):
        return [i for i in range(len(self.labels)) if not self.covers_down[i]]

    def maximal_indices(self):
        return [i for i in range(len(self.labels)) if not self.covers_up[i]]

    def interval_indices(self, i: int, j: int) -> int:
        """Bitmask of the elements between i and j inclusive."""
        return self.up[i] & self.down[j]

    def subposet(self, labels) -> "Poset":
        """Induced subposet; covers are recomputed from the inherited order."""
        keep = list(labels)
        keep_set = set(keep)
        if len(keep_set) != len(keep):
            raise PosetOpsError("repeated label in subposet selection")
        for label in keep:
            if label not in self.index:
                raise PosetOpsError(f"unknown element {label!r}")
        chosen = [label for label in self.labels if label in keep_set]
        idx = [self.index[label] for label in chosen]
        mask = 0
        for i in idx:
            mask |= 1 << i
        covers = []
        for a_pos, i in enumerate(idx):
            for b_pos, j in enumerate(idx):
                if i == j or not (self.up[i] >> j & 1):
                    continue
                between = self.up[i] & self.down[j] & mask
                between &= ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((chosen[a_pos], chosen[b_pos]))
        return Poset(chosen, covers)

    def dual(self) -> "Poset":
        return Poset(self.labels, [(hi, lo) for lo, hi in self.cover_pairs()])


class GradedPoset(Poset):
    """A bounded poset whose covers each raise a rank function by one."""

    __slots__ = ("rank", "bottom_index", "top_index")

    def __init__(self, labels, cover_pairs):
        super().__init__(labels, cover_pairs)
        n = len(self.labels)
        mins = self.minimal_indices()
        maxes = self.maximal_indices()
        if len(mins) != 1:
            raise NotBounded(f"{len(mins)} minimal elements, need exactly one")
        if len(maxes) != 1:
            raise NotBounded(f"{len(maxes)} maximal elements, need exactly one")
        bottom = mins[0]
        rank = [-1] * n
        rank[bottom] = 0
        order = self._topological_order(n, self.covers_up, self.covers_down)
        for i in order:
            for j in self.covers_up[i]:
                if rank[j] == -1:
                    rank[j] = rank[i] + 1
                elif rank[j] != rank[i] + 1:
                    raise NotGraded(
                        f"cover ({self.labels[i]!r}, {self.labels[j]!r}) "
                        f"skips a rank"
                    )
        self.rank = tuple(rank)
        self.bottom_index = bottom
        self.top_index = maxes[0]

    @property
    def bottom(self) -> str:
        return self.labels[self.bottom_index]

    @property
    def top(self) -> str:
        return self.labels[self.top_index]

    @property
    def top_rank(self) -> int:
        return self.rank[self.top_index]

    def rank_of(self, label: str) -> int:
        return self.rank[self.index[label]]

    def dual(self) -> "GradedPoset":
        return GradedPoset(self.labels, [(hi, lo) for lo, hi in self.cover_pairs()])


def build_graded(elements, covers) -> GradedPoset:
    """Assemble a graded poset from labels and covers, validating as it goes."""
    return GradedPoset(elements, covers)


# -- generators ----------------------------------------------------------------


def boolean_lattice(n: int) -> GradedPoset:
    """The lattice of subsets of {1..n}, labeled like "{1,3}"."""
    _check_size(n, 2**n)
    subsets = []
    for size in range(n + 1):
        level = [s for s in _subsets(n) if len(s) == size]
        level.sort()
        subsets.extend(level)
    label = {s: "{" + ",".join(str(x) for x in s) + "}" for s in subsets}
    covers = []
    for s in subsets:
        for x in range(1, n + 1):
            if x not in s:
                covers.append((label[s], label[tuple(sorted(s + (x,)))]))
    return GradedPoset([label[s] for s in subsets], covers)


def _subsets(n: int):
    out = [()]
    for x in range(1, n + 1):
        out += [s + (x,) for s in out]
    return out


def chain_poset(n: int) -> GradedPoset:
    """A chain of rank n with labels "0" through str(n)."""
    _check_size(n, n + 1)
    labels = [str(i) for i in range(n + 1)]
    return GradedPoset(labels, [(str(i), str(i + 1)) for i in range(n)])


def ladder_poset(n: int) -> GradedPoset:
    """Rank n+1, two elements per middle rank, consecutive ranks fully joined."""
    _check_size(n, 2 * n + 2)
    labels = ["0̂"]
    for k in range(1, n + 1):
        labels += [f"+{k}", f"-{k}"]
    labels.append("1̂")
    covers = [("0̂", "+1"), ("0̂", "-1")]
    for k in range(1, n):
        for s in "+-":
            for t in "+-":
                covers.append((f"{s}{k}", f"{t}{k + 1}"))
    covers += [(f"+{n}", "1̂"), (f"-{n}", "1̂")]
    return GradedPoset(labels, covers)


def cube_lattice(n: int) -> GradedPoset:
    """Face lattice of the n-cube: words over 0/1/* plus a bottom face."""
    _check_size(n, 3**n + 1)
    words = [""]
    for _ in range(n):
        words = [w + ch for w in words for ch in "01*"]
    words.sort(key=lambda w: (w.count("*"), w))
    covers = []
    for w in words:
        if "*" not in w:
            covers.append((EMPTY_INTERVAL, w))
        for i, ch in enumerate(w):
            if ch != "*":
                covers.append((w, w[:i] + "*" + w[i + 1 :]))
    return GradedPoset([EMPTY_INTERVAL] + words, covers)


def crosspolytope_lattice(n: int) -> GradedPoset:
    """Face lattice of the n-crosspolytope.

    Proper faces are sets of signs on disjoint coordinates; the label for
    {+1, -3} is "{+1,-3}".  A full face "⊤" is adjoined on top.
    """
    _check_size(n, 3**n + 1)
    faces = [()]
    for x in range(1, n + 1):
        faces += [f + (s * x,) for f in faces for s in (1, -1)]
    faces.sort(key=lambda f: (len(f), tuple((abs(x), -x) for x in f)))

    def name(face):
        if not face:
            return EMPTY_INTERVAL
        parts = [f"{'+' if x > 0 else '-'}{abs(x)}" for x in face]
        return "{" + ",".join(parts) + "}"

    covers = []
    for f in faces:
        used = {abs(x) for x in f}
        for x in range(1, n + 1):
            if x not in used:
                for s in (1, -1):
                    covers.append((name(f), name(tuple(sorted(f + (s * x,), key=abs)))))
        if len(f) == n:
            covers.append((name(f), "⊤"))
    return GradedPoset([name(f) for f in faces] + ["⊤"], covers)


_GENERATORS = {
    "boolean": boolean_lattice,
    "ladder": ladder_poset,
    "chain": chain_poset,
    "cube": cube_lattice,
    "cubelattice": cube_lattice,
    "crosspolytope": crosspolytope_lattice,
    "crosspolytopelattice": crosspolytope_lattice,
}


def generate(kind: str, n: int) -> GradedPoset:
    key = kind.lower()
    if key not in _GENERATORS:
        known = ", ".join(sorted(set(_GENERATORS)))
        raise PosetOpsError(f"unknown poset kind {kind!r} (known: {known})")
    return _GENERATORS[key](n)


def _check_size(n: int, element_count: int) -> None:
    if n < 1:
        raise InvalidSize(f"need n >= 1, got {n}")
    if element_count > GENERATION_CAP:
        raise TooLarge(f"{element_count} elements exceed the cap of {GENERATION_CAP}")


def induced_subposet(P: Poset, elements) -> GradedPoset:
    """The order of P restricted to the given elements.

    Covers are recomputed for the restriction, so two kept elements are
    covered exactly when nothing kept sits strictly between them.  The
    result must still be bounded and graded or the constructor raises.
    """
    idx = []
    for label in elements:
        if label not in P.index:
            raise PosetOpsError(f"unknown element {label!r}")
        idx.append(P.index[label])
    if len(set(idx)) != len(idx):
        raise PosetOpsError("elements repeat")
    keep = set(idx)
    covers = []
    for i in idx:
        for j in idx:
            if i == j or not P.up[i] >> j & 1:
                continue
            between = any(
                k != i and k != j and P.up[i] >> k & 1 and P.up[k] >> j & 1
                for k in keep
            )
            if not between:
                covers.append((P.labels[i], P.labels[j]))
    return GradedPoset([P.labels[i] for i in idx], covers)


# -- products ------------------------------------------------------------------


def direct_product(P: Poset, Q: Poset) -> Poset:
    """Componentwise order on pairs; graded whenever both factors are."""
    labels = [pair_label(p, q) for p in P.labels for q in Q.labels]
    covers = []
    for p_lo, p_hi in P.cover_pairs():
        for q in Q.labels:
            covers.append((pair_label(p_lo, q), pair_label(p_hi, q)))
    for q_lo, q_hi in Q.cover_pairs():
        for p in P.labels:
            covers.append((pair_label(p, q_lo), pair_label(p, q_hi)))
    cls = GradedPoset if isinstance(P, GradedPoset) and isinstance(Q, GradedPoset) else Poset
    return cls(labels, covers)


def diamond_product(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Product of the posets with bottoms removed, re-bounded from below."""
    new_bottom = "0̂"
    keep_p = [p for p in P.labels if p != P.bottom]
    keep_q = [q for q in Q.labels if q != Q.bottom]
    labels = [new_bottom] + [pair_label(p, q) for p in keep_p for q in keep_q]
    covers = []
    for p in keep_p:
        for q in keep_q:
            if P.rank_of(p) == 1 and Q.rank_of(q) == 1:
                covers.append((new_bottom, pair_label(p, q)))
    for p_lo, p_hi in P.cover_pairs():
        if p_lo == P.bottom:
            continue
        for q in keep_q:
            covers.append((pair_label(p_lo, q), pair_label(p_hi, q)))
    for q_lo, q_hi in Q.cover_pairs():
        if q_lo == Q.bottom:
            continue
        for p in keep_p:
            covers.append((pair_label(p, q_lo), pair_label(p, q_hi)))
    return GradedPoset(labels, covers)


# -- interval posets -----------------------------------------------------------


def _interval_pairs(P: Poset):
    """Index pairs (i, j) with i below-or-equal j, in label order."""
    n = len(P.labels)
    return [(i, j) for i in range(n) for j in range(n) if P.up[i] >> j & 1]


def _interval_cover_pairs(P: Poset, pairs, member=None):
    """Covers between intervals: shift one endpoint by one cover step."""
    covers = []
    present = set(pairs) if member is None else member
    for i, j in pairs:
        lo = P.labels[i]
        hi = P.labels[j]
        here = interval_label(lo, hi)
        for k in P.covers_down[i]:
            if (k, j) in present:
                covers.append((here, interval_label(P.labels[k], hi)))
        for k in P.covers_up[j]:
            if (i, k) in present:
                covers.append((here, interval_label(lo, P.labels[k])))
    return covers


def interval_poset(P: Poset) -> Poset:
    """All nonempty intervals of P ordered by inclusion."""
    pairs = _interval_pairs(P)
    labels = [interval_label(P.labels[i], P.labels[j]) for i, j in pairs]
    return Poset(labels, _interval_cover_pairs(P, pairs))


def graded_interval_poset(P: GradedPoset) -> GradedPoset:
    """The interval poset with the empty interval adjoined as bottom."""
    pairs = _interval_pairs(P)
    labels = [EMPTY_INTERVAL] + [
        interval_label(P.labels[i], P.labels[j]) for i, j in pairs
    ]
    covers = [
        (EMPTY_INTERVAL, interval_label(label, label)) for label in P.labels
    ] + _interval_cover_pairs(P, pairs)
    return GradedPoset(labels, covers)


def interval_subposet(P: GradedPoset, lower: str, upper: str) -> GradedPoset:
    """The interval [lower, upper] of P as a graded poset of its own."""
    if not P.leq(lower, upper):
        raise PosetOpsError(f"{lower!r} is not below {upper!r}")
    i, j = P.index[lower], P.index[upper]
    mask = P.interval_indices(i, j)
    labels = [P.labels[k] for k in range(len(P.labels)) if mask >> k & 1]
    covers = [
        (lo, hi)
        for lo, hi in P.cover_pairs()
        if mask >> P.index[lo] & 1 and mask >> P.index[hi] & 1
    ]
    return GradedPoset(labels, covers)


class PosetMultiset:
    """Graded posets listed with the element of P each one came from."""

    __slots__ = ("members", "generators")

    def __init__(self, members, generators):
        self.members = list(members)
        self.generators = list(generators)
        if len(self.members) != len(self.generators):
            raise PosetOpsError("one generator label per member is required")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(zip(self.generators, self.members))


def second_kind_transform(P: GradedPoset) -> PosetMultiset:
    """For each x, the intervals containing x, ordered by inclusion.

    Member x is the part of the interval poset weakly above [x,x]; its
    bottom is [x,x] and its top is the whole ground set.
    """
    members = []
    for x in P.labels:
        xi = P.index[x]
        pairs = [
            (i, j)
            for i in range(len(P.labels))
            for j in range(len(P.labels))
            if P.up[i] >> xi & 1 and P.up[xi] >> j & 1
        ]
        labels = [interval_label(P.labels[i], P.labels[j]) for i, j in pairs]
        covers = _interval_cover_pairs(P, pairs, member=set(pairs))
        members.append(GradedPoset(labels, covers))
    return PosetMultiset(members, list(P.labels))


def second_kind_member_product(P: GradedPoset, x: str) -> GradedPoset:
    """The same member built the other way: dual lower interval times upper."""
    lower = interval_subposet(P, P.bottom, x).dual()
    upper = interval_subposet(P, x, P.top)
    return direct_product(lower, upper)


# -- predicates and counts -----------------------------------------------------


def is_eulerian(P: GradedPoset) -> bool:
    """Every interval of rank at least one balances even and odd ranks."""
    n = len(P.labels)
    even_mask = 0
    for i in range(n):
        if P.rank[i] % 2 == 0:
            even_mask |= 1 << i
    for i in range(n):
        above = P.up[i] & ~(1 << i)
        while above:
            low_bit = above & -above
            above ^= low_bit
            j = low_bit.bit_length() - 1
            members = P.up[i] & P.down[j]
            evens = (members & even_mask).bit_count()
            if 2 * evens != members.bit_count():
                return False
    return True


_SUPPORT_CHAIN_COUNTS: dict[int, int] = {}


def _support_chain_count(m: int) -> int:
    """Chains of nested intervals over a fixed (m+1)-chain that use every
    chain element as an endpoint, counted by innermost interval and
    outward extension."""
    cached = _SUPPORT_CHAIN_COUNTS.get(m)
    if cached is not None:
        return cached
    full = (1 << (m + 1)) - 1
    memo: dict[tuple[int, int, int], int] = {}

    def extend(i: int, j: int, needed: int) -> int:
        key = (i, j, needed)
        found = memo.get(key)
        if found is not None:
            return found
        total = 1 if needed == 0 else 0
        for k in range(i, -1, -1):
            for l in range(j, m + 1):
                if (k, l) != (i, j):
                    total += extend(k, l, needed & ~(1 << k) & ~(1 << l))
        memo[key] = total
        return total

    count = 0
    for i in range(m + 1):
        for j in range(i, m + 1):
            count += extend(i, j, full & ~(1 << i) & ~(1 << j))
    _SUPPORT_CHAIN_COUNTS[m] = count
    return count


def pell_number(n: int) -> int:
    if n < 0:
        raise InvalidSize(f"need n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def count_chains_with_support(P: GradedPoset, support) -> int:
    """Chains of intervals of P whose endpoint set is exactly the support.

    The support must be a chain running from bottom to top.  The count
    covers the chains of the bottomed interval poset that start at the
    empty interval; the topmost member is forced to be the whole ground
    set once every support element appears as an endpoint.
    """
    chain = list(support)
    if not chain:
        raise NotAChain("empty support")
    for label in chain:
        if label not in P.index:
            raise NotAChain(f"unknown element {label!r}")
    if len(set(chain)) != len(chain):
        raise NotAChain("support repeats an element")
    for lower, upper in zip(chain, chain[1:]):
        if not P.less(lower, upper):
            raise NotAChain(f"{lower!r} is not strictly below {upper!r}")
    if chain[0] != P.bottom or chain[-1] != P.top:
        raise EndpointsNotExtreme("support must run from bottom to top")
    return _support_chain_count(len(chain) - 1)


def bottom_to_top_chains(P: GradedPoset, max_length: int):
    """All chains from bottom to top with at most max_length steps."""
    top = P.top_index
    labels = P.labels
    above = [
        [j for j in range(len(labels)) if P.up[i] >> j & 1 and j != i]
        for i in range(len(labels))
    ]
    out = []
    start = P.bottom_index
    if start == top:
        return [[labels[start]]] if max_length >= 0 else []

    def walk(i, path, steps_left):
        for j in above[i]:
            if j == top:
                out.append([labels[k] for k in path] + [labels[top]])
            elif steps_left >= 2:
                path.append(j)
                walk(j, path, steps_left - 1)
                path.pop()

    if max_length >= 1:
        walk(start, [start], max_length)
    return out


# -- isomorphism ---------------------------------------------------------------


def _refine_colors(P: Poset, Q: Poset):
    """Joint color refinement on cover degrees; None when multisets split."""

    def initial(R):
        return [
            (
                len(R.covers_down[i]),
                len(R.covers_up[i]),
                R.down[i].bit_count(),
                R.up[i].bit_count(),
            )
            for i in range(len(R.labels))
        ]

    palette: dict = {}

    def canonical(values):
        out = []
        for v in values:
            if v not in palette:
                palette[v] = len(palette)
            out.append(palette[v])
        return out

    colors_p = canonical(initial(P))
    colors_q = canonical(initial(Q))
    while True:
        if sorted(colors_p) != sorted(colors_q):
            return None

        def signature(R, colors):
            return [
                (
                    colors[i],
                    tuple(sorted(colors[j] for j in R.covers_up[i])),
                    tuple(sorted(colors[j] for j in R.covers_down[i])),
                )
                for i in range(len(R.labels))
            ]

        palette.clear()
        new_p = canonical(signature(P, colors_p))
        new_q = canonical(signature(Q, colors_q))
        if new_p == colors_p and new_q == colors_q:
            return colors_p, colors_q
        colors_p, colors_q = new_p, new_q


def is_isomorphic(P: Poset, Q: Poset, max_size: int = 64) -> bool:
    """Search for an order-preserving bijection, pruned by color refinement."""
    if max(len(P), len(Q)) > max_size:
        raise TooLarge(
            f"isomorphism test capped at {max_size} elements, "
            f"got {len(P)} and {len(Q)}"
        )
    if len(P) != len(Q):
        return False
    refined = _refine_colors(P, Q)
    if refined is None:
        return False
    colors_p, colors_q = refined
    by_color: dict[int, list[int]] = {}
    for j, color in enumerate(colors_q):
        by_color.setdefault(color, []).append(j)
    order = sorted(range(len(P)), key=lambda i: (len(by_color[colors_p[i]]), i))
    mapped_p: list[int] = []
    mapped_q: list[int] = []
    used = [False] * len(Q)

    def assign(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for j in by_color[colors_p[i]]:
            if used[j]:
                continue
            ok = True
            for i2, j2 in zip(mapped_p, mapped_q):
                if (P.up[i] >> i2 & 1) != (Q.up[j] >> j2 & 1) or (
                    P.up[i2] >> i & 1
                ) != (Q.up[j2] >> j & 1):
                    ok = False
                    break
            if not ok:
                continue
            used[j] = True
            mapped_p.append(i)
            mapped_q.append(j)
            if assign(pos + 1):
                return True
            used[j] = False
            mapped_p.pop()
            mapped_q.pop()
        return False

    return assign(0)


# -- serialization ---------------------------------------------------------------


def poset_to_dict(P: Poset) -> dict:
    graded = isinstance(P, GradedPoset)
    return {
        "elements": list(P.labels),
        "covers": [list(pair) for pair in P.cover_pairs()],
        "rank": {label: P.rank[P.index[label]] for label in P.labels}
        if graded
        else None,
        "bottom": P.bottom if graded else None,
        "top": P.top if graded else None,
    }


def poset_from_dict(data: dict) -> Poset:
    elements = data["elements"]
    covers = [tuple(pair) for pair in data["covers"]]
    if data.get("rank") is None:
        return Poset(elements, covers)
    P = GradedPoset(elements, covers)
    stored = data["rank"]
    for label in P.labels:
        if stored.get(label) != P.rank_of(label):
            raise NotGraded(
                f"stored rank of {label!r} disagrees with the cover relation"
            )
    if data.get("bottom") != P.bottom:
        raise NotBounded("stored bottom disagrees with the cover relation")
    if data.get("top") != P.top:
        raise NotBounded("stored top disagrees with the cover relation")
    return P
