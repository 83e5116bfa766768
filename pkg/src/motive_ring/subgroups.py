"""Subgroup lattice: conjugacy classes of subgroups, fusion, residuals.

The production enumeration closes the set of cyclic subgroups under
pairwise join; every subgroup is a join of cyclic subgroups, so the walk
is complete.  An independent depth-first oracle (grow one generator at a
time) backs it in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import FiniteGroup, GroupTooLarge, Quotient, quotient_group

DEFAULT_LATTICE_BOUND = 200


def subgroup_key(subgroup) -> tuple[int, ...]:
    return tuple(sorted(subgroup))


def all_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, by closing the cyclic subgroups under pairwise join."""
    trivial = frozenset({0})
    cyclic: dict[tuple[int, ...], tuple[frozenset[int], int]] = {}
    for g in range(1, G.order):
        sub = G.closure([g])
        cyclic.setdefault(subgroup_key(sub), (sub, g))
    cyclic_list = list(cyclic.values())
    subs = {subgroup_key(trivial): trivial}
    gens_of: dict[tuple[int, ...], list[int]] = {subgroup_key(trivial): []}
    for c, g in cyclic_list:
        k = subgroup_key(c)
        subs.setdefault(k, c)
        gens_of.setdefault(k, [g])
    frontier = list(subs.values())
    while frontier:
        new = []
        for H in frontier:
            hgens = gens_of[subgroup_key(H)]
            for c, cg in cyclic_list:
                if c <= H:
                    continue
                J = G.closure(hgens + [cg])
                jk = subgroup_key(J)
                if jk not in subs:
                    subs[jk] = J
                    gens_of[jk] = hgens + [cg]
                    new.append(J)
        frontier = new
    return sorted(subs.values(), key=lambda s: (len(s), subgroup_key(s)))


def all_subgroups_dfs(G: FiniteGroup) -> list[frozenset[int]]:
    """Exhaustive oracle: depth-first closure growth, one generator at a time."""
    trivial = frozenset({0})
    seen = {subgroup_key(trivial): trivial}
    stack = [(trivial, [])]
    while stack:
        H, gens = stack.pop()
        for g in range(1, G.order):
            if g in H:
                continue
            J = G.closure(gens + [g])
            jk = subgroup_key(J)
            if jk not in seen:
                seen[jk] = J
                stack.append((J, gens + [g]))
    return sorted(seen.values(), key=lambda s: (len(s), subgroup_key(s)))


def all_subgroups_subsets(G: FiniteGroup) -> list[frozenset[int]]:
    """Literal subset scan (|G| <= 20): every subset closed under the table."""
    n = G.order
    if n > 20:
        raise ValueError("subset scan only supported for tiny groups")
    others = list(range(1, n))
    out = []
    for mask in range(1 << len(others)):
        subset = {0}
        m = mask
        for x in others:
            if m & 1:
                subset.add(x)
            m >>= 1
        if n % len(subset) != 0:
            continue
        if all(G.mul(a, b) in subset for a in subset for b in subset):
            out.append(frozenset(subset))
    return sorted(out, key=lambda s: (len(s), subgroup_key(s)))


# -- residual subgroups ----------------------------------------------------


def derived_subgroup(G: FiniteGroup, H) -> frozenset[int]:
    comms = {
        G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)) for a in H for b in H
    }
    return G.closure(comms)


def solvable_residual(G: FiniteGroup, H) -> frozenset[int]:
    """Stable term of the derived series of H."""
    cur = frozenset(H)
    while True:
        nxt = derived_subgroup(G, cur)
        if nxt == cur:
            return cur
        cur = nxt


def p_residual(G: FiniteGroup, H, p: int) -> frozenset[int]:
    """Smallest normal subgroup of H with p-group quotient.

    Computed as the stable term of H |-> <elements of H of order prime to p>.
    """
    cur = frozenset(H)
    while True:
        pprime = [x for x in cur if G.element_order(x) % p != 0]
        nxt = G.closure(pprime)
        if nxt == cur:
            return cur
        cur = nxt


def residual(G: FiniteGroup, H, mode) -> frozenset[int]:
    """mode is "solvable" or a prime p."""
    if mode == "solvable":
        return solvable_residual(G, H)
    if isinstance(mode, int) and mode >= 2:
        return p_residual(G, H, mode)
    raise ValueError(f"unknown residual mode {mode!r}")


def p_residual_oracle(G: FiniteGroup, H, p: int, subgroups_of_G) -> frozenset[int]:
    """Exhaustive check: minimal normal N of H with H/N a p-group."""
    Hset = frozenset(H)
    hits = []
    for N in subgroups_of_G:
        if not N <= Hset:
            continue
        index = len(Hset) // len(N)
        if not _is_p_power(index, p):
            continue
        if all(G.conjugate_subgroup(h, N) == N for h in Hset):
            hits.append(N)
    best = min(hits, key=len)
    assert all(best <= N for N in hits), "minimal normal with p-quotient not unique"
    return best


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


# -- structure hints for class names ----------------------------------------


def _is_abelian(G: FiniteGroup, H) -> bool:
    hs = sorted(H)
    return all(G.mul(a, b) == G.mul(b, a) for a in hs for b in hs)


def _is_dihedral(G: FiniteGroup, H) -> bool:
    n = len(H)
    if n % 2 != 0 or n < 6:
        return False
    m = n // 2
    rot = next((x for x in H if G.element_order(x) == m), None)
    if rot is None:
        return False
    R = G.closure([rot])
    rinv = G.inv(rot)
    return any(
        s not in R and G.element_order(s) == 2 and G.conj(s, rot) == rinv for s in H
    )


def structure_hint(G: FiniteGroup, H) -> str:
    """Cheap isomorphism-type hint used in class names (no isomorphism testing)."""
    n = len(H)
    if n == 1:
        return "1"
    orders = sorted(G.element_order(x) for x in H)
    if orders[-1] == n:
        return f"C{n}"
    if _is_abelian(G, H):
        if n == 4:
            return "V4"
        p = min(o for o in orders if o > 1)
        if all(o in (1, p) for o in orders):
            return f"E{n}"
        return f"Ab{n}"
    if n == 6:
        return "S3"
    if n == 8:
        return "Q8" if orders.count(2) == 1 else "D8"
    if n == 12:
        if orders[-1] == 3:
            return "A4"
        return "Dic3" if orders.count(2) == 1 else "D12"
    if n == 24:
        center = {x for x in H if all(G.mul(x, h) == G.mul(h, x) for h in H)}
        if len(center) == 1:
            return "S4"
    if n == 60 and derived_subgroup(G, frozenset(H)) == frozenset(H):
        return "A5"
    if _is_dihedral(G, H):
        return f"D{n}"
    return f"G{n}"


# -- class table -------------------------------------------------------------


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups."""

    index: int
    representative: frozenset[int]
    key: tuple[int, ...]
    order: int
    name: str
    class_size: int
    centralizer: frozenset[int]
    normalizer: frozenset[int]
    solvable_residual: int = -1
    p_residuals: dict[int, int] = field(default_factory=dict)


class SubgroupClassTable:
    """Conjugacy classes of subgroups with fusion and residual data.

    Classes are ordered by (order, canonical key); this is a linear
    extension of subconjugacy, which keeps the mark matrix triangular.
    """

    def __init__(self, G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND):
        if G.order > bound:
            raise GroupTooLarge(
                f"lattice too large: order {G.order} exceeds bound {bound}"
            )
        self.group = G
        subgroups = all_subgroups(G)
        # partition into conjugacy classes; representative = least canonical key
        orbit_of: dict[tuple[int, ...], int] = {}
        conjugator: dict[tuple[int, ...], int] = {}
        reps: list[frozenset[int]] = []
        for H in subgroups:
            hk = subgroup_key(H)
            if hk in orbit_of:
                continue
            orbit = {}
            for g in range(G.order):
                K = G.conjugate_subgroup(g, H)
                kk = subgroup_key(K)
                if kk not in orbit:
                    orbit[kk] = g  # g with gHg^-1 = K
            rep_key = min(orbit)
            g0 = orbit[rep_key]  # g0 H g0^-1 = rep
            idx = len(reps)
            reps.append(frozenset(rep_key))
            for kk, g in orbit.items():
                orbit_of[kk] = idx
                # map K back to the representative: (g0 g^-1) K (g0 g^-1)^-1 = rep
                conjugator[kk] = G.mul(g0, G.inv(g))
        order_idx = sorted(range(len(reps)), key=lambda i: (len(reps[i]), subgroup_key(reps[i])))
        renumber = {old: new for new, old in enumerate(order_idx)}
        self._fusion_index = {k: renumber[v] for k, v in orbit_of.items()}
        self._fusion_conj = conjugator
        self.all_subgroups: list[frozenset[int]] = subgroups
        class_sizes: dict[int, int] = {}
        for k, idx in self._fusion_index.items():
            class_sizes[idx] = class_sizes.get(idx, 0) + 1
        hints: dict[str, int] = {}
        self.classes: list[SubgroupClass] = []
        for new_idx, old in enumerate(order_idx):
            rep = reps[old]
            hint = structure_hint(G, rep)
            hints[hint] = hints.get(hint, 0) + 1
            self.classes.append(
                SubgroupClass(
                    index=new_idx,
                    representative=rep,
                    key=subgroup_key(rep),
                    order=len(rep),
                    name=f"{hint}#{hints[hint]}",
                    class_size=class_sizes[new_idx],
                    centralizer=G.centralizer(rep),
                    normalizer=G.normalizer(rep),
                )
            )
        for cls in self.classes:
            res = solvable_residual(G, cls.representative)
            cls.solvable_residual = self.fusion(res)[0]
            for p in prime_divisors(G.order):
                cls.p_residuals[p] = self.fusion(p_residual(G, cls.representative, p))[0]
        self._caches: dict = {}

    def __len__(self):
        return len(self.classes)

    def fusion(self, subgroup) -> tuple[int, int]:
        """(class index, g) with g . subgroup . g^-1 = class representative."""
        k = subgroup_key(subgroup)
        try:
            return self._fusion_index[k], self._fusion_conj[k]
        except KeyError:
            raise ValueError("not a subgroup of this group") from None

    def class_named(self, name: str) -> SubgroupClass:
        for cls in self.classes:
            if cls.name == name:
                return cls
        raise KeyError(name)

    def residual_class(self, class_index: int, mode) -> int:
        cls = self.classes[class_index]
        if mode == "solvable":
            return cls.solvable_residual
        if mode not in cls.p_residuals:
            # primes not dividing the order leave every subgroup p-perfect
            cls.p_residuals[mode] = self.fusion(
                p_residual(self.group, cls.representative, mode)
            )[0]
        return cls.p_residuals[mode]

    def residual_fiber_classes(self, mode) -> dict[int, list[int]]:
        """Partition of class indices by the class of their residual."""
        fibers: dict[int, list[int]] = {}
        for cls in self.classes:
            fibers.setdefault(self.residual_class(cls.index, mode), []).append(cls.index)
        return fibers

    def quotient(self, N, J) -> Quotient:
        """Cached quotient construction (write-once memo)."""
        key = (subgroup_key(N), subgroup_key(J))
        cache = self._caches.setdefault("quotients", {})
        if key not in cache:
            cache[key] = quotient_group(self.group, frozenset(N), frozenset(J))
        return cache[key]


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def subgroup_classes(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> SubgroupClassTable:
    return SubgroupClassTable(G, bound=bound)
