"""The crossed Burnside ring: transitive sets carrying centralizer labels.

Basis: pairs (H, a) with H a subgroup and a in C_G(H), up to simultaneous
conjugation.  The fast product uses the double-coset formula

    [H,a][K,b] = sum over g in H\\G/K of [H n gKg^-1, a . gbg^-1]

and is pinned to the definition by an orbit-decomposition oracle that
multiplies the literal product crossed sets.  Marks take values in the
group algebras of centralizers; the component at the trivial subgroup is
the ring map onto the center of kG.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .burnside import BurnsideElement, BurnsideRing, GhostVector
from .center import augmentation as ga_augmentation
from .center import ga_equal, ga_mul
from .groups import double_cosets
from .linalg import rank_field, rank_rational
from .scalars import QQ, ZZ, ScalarError, ScalarRing, p_local
from .subgroups import SubgroupClassTable


@dataclass(frozen=True)
class CrossedPairClass:
    """Orbit of a (subgroup, centralizer label) pair under conjugation."""

    index: int
    subgroup_class: int
    label: int  # element index, in the centralizer of the class representative
    name: str


@dataclass(frozen=True)
class CrossedElement:
    ring: "CrossedBurnsideRing"
    scalar: ScalarRing
    coeffs: tuple

    def __add__(self, other):
        self.ring._check(other, self.scalar)
        s = self.scalar
        return CrossedElement(
            self.ring, s, tuple(s.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self.ring._check(other, self.scalar)
        s = self.scalar
        return CrossedElement(
            self.ring, s, tuple(s.sub(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        s = self.scalar
        return CrossedElement(self.ring, s, tuple(s.neg(a) for a in self.coeffs))

    def __mul__(self, other):
        return self.ring.multiply(self, other)

    def is_zero(self) -> bool:
        return all(self.scalar.is_zero(c) for c in self.coeffs)

    def to_json(self) -> dict[str, str]:
        out = {}
        for i, c in enumerate(self.coeffs):
            if not self.scalar.is_zero(c):
                out[self.ring.pairs[i].name] = self.scalar.format(c)
        return out


@dataclass(frozen=True)
class CrossedGhostVector:
    """One central group-algebra element per subgroup class (as dicts)."""

    scalar: ScalarRing
    components: tuple  # tuple of dict element-index -> scalar


class CrossedBurnsideRing:
    """Crossed Burnside ring bound to a subgroup class table."""

    def __init__(self, table: SubgroupClassTable):
        self.table = table
        self.group = table.group
        self.burnside = BurnsideRing(table)
        G = self.group
        pairs: list[CrossedPairClass] = []
        self._pair_index: dict[tuple[int, int], int] = {}
        for cls in table.classes:
            N = tuple(sorted(cls.normalizer))
            seen = set()
            for a in sorted(cls.centralizer):
                if a in seen:
                    continue
                orbit = {G.conj(n, a) for n in N}
                seen |= orbit
                rep = min(orbit)
                idx = len(pairs)
                name = f"[{cls.name},{G.element_string(rep)}]"
                pairs.append(CrossedPairClass(idx, cls.index, rep, name))
                for x in orbit:
                    self._pair_index[(cls.index, x)] = idx
        self.pairs = tuple(pairs)
        self.n = len(pairs)
        self._basis_products: dict[tuple[int, int], tuple[int, ...]] = {}
        self._fixed_coset_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    # -- canonicalization ---------------------------------------------------

    def canonical_pair(self, subgroup, label: int) -> int:
        """Index of the basis pair conjugate to (subgroup, label)."""
        G = self.group
        cls_idx, g = self.table.fusion(subgroup)
        moved = G.conj(g, label)
        try:
            return self._pair_index[(cls_idx, moved)]
        except KeyError:
            raise ValueError("label outside centralizer") from None

    # -- elements -------------------------------------------------------------

    def element(self, coeffs, scalar: ScalarRing = ZZ) -> CrossedElement:
        if len(coeffs) != self.n:
            raise ValueError("coefficient length mismatch")
        return CrossedElement(self, scalar, tuple(scalar.coerce(c) for c in coeffs))

    def zero(self, scalar: ScalarRing = ZZ) -> CrossedElement:
        return self.element([0] * self.n, scalar)

    def basis_element(self, index: int, scalar: ScalarRing = ZZ) -> CrossedElement:
        coeffs = [0] * self.n
        coeffs[index] = 1
        return self.element(coeffs, scalar)

    def one(self, scalar: ScalarRing = ZZ) -> CrossedElement:
        return self.basis_element(
            self.canonical_pair(self.table.classes[-1].representative, 0), scalar
        )

    def _check(self, x, scalar):
        if not isinstance(x, CrossedElement) or x.ring is not self:
            raise ValueError("element belongs to a different ring")
        if x.scalar != scalar:
            raise ScalarError(f"mixed scalar rings: {x.scalar.tag} vs {scalar.tag}")

    # -- product ---------------------------------------------------------------

    def _basis_product(self, i: int, j: int) -> tuple[int, ...]:
        key = (i, j) if i <= j else (j, i)
        if key not in self._basis_products:
            G = self.group
            pi, pj = self.pairs[key[0]], self.pairs[key[1]]
            H = self.table.classes[pi.subgroup_class].representative
            K = self.table.classes[pj.subgroup_class].representative
            a, b = pi.label, pj.label
            coeffs = [0] * self.n
            reps, _ = double_cosets(G, H, K)
            for g in reps:
                inter = H & G.conjugate_subgroup(g, K)
                label = G.mul(a, G.conj(g, b))
                coeffs[self.canonical_pair(inter, label)] += 1
            self._basis_products[key] = tuple(coeffs)
        return self._basis_products[key]

    def multiply(self, x: CrossedElement, y: CrossedElement) -> CrossedElement:
        self._check(x, x.scalar)
        self._check(y, x.scalar)
        s = x.scalar
        acc = [s.zero] * self.n
        for i, a in enumerate(x.coeffs):
            if s.is_zero(a):
                continue
            for j, b in enumerate(y.coeffs):
                if s.is_zero(b):
                    continue
                ab = s.mul(a, b)
                for k, c in enumerate(self._basis_product(i, j)):
                    if c:
                        acc[k] = s.add(acc[k], s.mul(ab, s.coerce(c)))
        return CrossedElement(self, s, tuple(acc))

    def basis_product_oracle(self, i: int, j: int) -> tuple[int, ...]:
        """Multiply two basis pairs by decomposing the literal product set.

        Points are pairs of cosets with the diagonal action; the label of a
        point is the product of the conjugated labels; each orbit is one
        transitive crossed set.
        """
        G = self.group
        pi, pj = self.pairs[i], self.pairs[j]
        H = self.table.classes[pi.subgroup_class].representative
        K = self.table.classes[pj.subgroup_class].representative
        a, b = pi.label, pj.label
        reps_h, where_h = G.coset_lookup(H)
        reps_k, where_k = G.coset_lookup(K)
        points = [(x, y) for x in range(len(reps_h)) for y in range(len(reps_k))]
        unassigned = set(points)
        coeffs = [0] * self.n
        while unassigned:
            x0, y0 = min(unassigned)
            orbit = set()
            frontier = [(x0, y0)]
            orbit.add((x0, y0))
            while frontier:
                (x, y) = frontier.pop()
                for g in range(G.order):
                    moved = (
                        where_h[G.mul(g, reps_h[x])],
                        where_k[G.mul(g, reps_k[y])],
                    )
                    if moved not in orbit:
                        orbit.add(moved)
                        frontier.append(moved)
            unassigned -= orbit
            rx, ry = reps_h[x0], reps_k[y0]
            stab = frozenset(
                g
                for g in range(G.order)
                if where_h[G.mul(g, rx)] == x0 and where_k[G.mul(g, ry)] == y0
            )
            label = G.mul(G.conj(rx, a), G.conj(ry, b))
            coeffs[self.canonical_pair(stab, label)] += 1
        return tuple(coeffs)

    def multiply_oracle(self, x: CrossedElement, y: CrossedElement) -> CrossedElement:
        self._check(x, x.scalar)
        self._check(y, x.scalar)
        s = x.scalar
        acc = [s.zero] * self.n
        for i, a in enumerate(x.coeffs):
            if s.is_zero(a):
                continue
            for j, b in enumerate(y.coeffs):
                if s.is_zero(b):
                    continue
                ab = s.mul(a, b)
                for k, c in enumerate(self.basis_product_oracle(i, j)):
                    if c:
                        acc[k] = s.add(acc[k], s.mul(ab, s.coerce(c)))
        return CrossedElement(self, s, tuple(acc))

    # -- maps to and from the plain Burnside ring --------------------------------

    def forget_labels(self, x: CrossedElement) -> BurnsideElement:
        """Sum the coefficients of [U,t] over t into [G/U]."""
        s = x.scalar
        coeffs = [s.zero] * len(self.table)
        for i, c in enumerate(x.coeffs):
            k = self.pairs[i].subgroup_class
            coeffs[k] = s.add(coeffs[k], c)
        return BurnsideElement(self.burnside, s, tuple(coeffs))

    def with_identity_labels(self, b: BurnsideElement) -> CrossedElement:
        """Embed the Burnside ring along [G/U] -> [U, identity]."""
        s = b.scalar
        coeffs = [s.zero] * self.n
        for k, c in enumerate(b.coeffs):
            cls = self.table.classes[k]
            coeffs[self.canonical_pair(cls.representative, 0)] = c
        return CrossedElement(self, s, tuple(coeffs))

    # -- marks -------------------------------------------------------------------

    def _fixed_cosets(self, h_class: int, d_class: int) -> tuple[int, ...]:
        """Coset reps gD with class-h representative inside gDg^-1."""
        key = (h_class, d_class)
        if key not in self._fixed_coset_cache:
            G = self.group
            H = self.table.classes[h_class].representative
            D = self.table.classes[d_class].representative
            hgens = G.small_generating_set(H) or [0]
            out = []
            for g in G.left_cosets(D):
                ginv = G.inv(g)
                if all(G.mul(G.mul(ginv, h), g) in D for h in hgens):
                    out.append(g)
            self._fixed_coset_cache[key] = tuple(out)
        return self._fixed_coset_cache[key]

    def crossed_marks(self, x: CrossedElement) -> CrossedGhostVector:
        """Per subgroup class H: sum of conjugated labels over H-fixed cosets."""
        G = self.group
        s = x.scalar
        components = []
        for cls in self.table.classes:
            comp: dict = {}
            for i, c in enumerate(x.coeffs):
                if s.is_zero(c):
                    continue
                pair = self.pairs[i]
                for g in self._fixed_cosets(cls.index, pair.subgroup_class):
                    t = G.conj(g, pair.label)
                    v = s.add(comp.get(t, s.zero), c)
                    if s.is_zero(v):
                        comp.pop(t, None)
                    else:
                        comp[t] = v
            components.append(comp)
        return CrossedGhostVector(s, tuple(components))

    def ghost_multiply(self, u: CrossedGhostVector, v: CrossedGhostVector) -> CrossedGhostVector:
        s = u.scalar
        return CrossedGhostVector(
            s,
            tuple(
                ga_mul(self.group, a, b, s) for a, b in zip(u.components, v.components)
            ),
        )

    def ghost_equal(self, u: CrossedGhostVector, v: CrossedGhostVector) -> bool:
        return all(
            ga_equal(a, b, u.scalar) for a, b in zip(u.components, v.components)
        )

    def ghost_augmentation(self, u: CrossedGhostVector) -> GhostVector:
        """Componentwise coefficient sum; lands in the plain ghost ring."""
        return GhostVector(
            u.scalar, tuple(ga_augmentation(c, u.scalar) for c in u.components)
        )

    def ghost_lift(self, g: GhostVector) -> CrossedGhostVector:
        """Scalar ghost vector as identity-supported group-algebra tuple."""
        comps = []
        for v in g.values:
            comps.append({} if g.scalar.is_zero(v) else {0: v})
        return CrossedGhostVector(g.scalar, tuple(comps))

    def center_image(self, x: CrossedElement) -> dict:
        """Image in Z kG: the mark component at the trivial subgroup.

        [H,a] goes to the sum of the conjugates of a over coset
        representatives of H.
        """
        G = self.group
        s = x.scalar
        out: dict = {}
        for i, c in enumerate(x.coeffs):
            if s.is_zero(c):
                continue
            pair = self.pairs[i]
            H = self.table.classes[pair.subgroup_class].representative
            for g in G.left_cosets(H):
                t = G.conj(g, pair.label)
                v = s.add(out.get(t, s.zero), c)
                if s.is_zero(v):
                    out.pop(t, None)
                else:
                    out[t] = v
        return out

    def center_image_rows(self, scalar: ScalarRing = ZZ) -> list[list]:
        """Center images of all basis pairs, as conjugacy-class coordinate rows."""
        G = self.group
        classes = G.conjugacy_classes
        rows = []
        for i in range(self.n):
            img = self.center_image(self.basis_element(i, scalar))
            rows.append([img.get(cls[0], scalar.zero) for cls in classes])
        return rows

    # -- idempotents ----------------------------------------------------------------

    def integral_idempotents(self) -> list[tuple[int, CrossedElement]]:
        """The primitive idempotents over Z: embedded solvable-residual
        idempotents of the Burnside ring, one per perfect residual class."""
        out = []
        for j, f in self.burnside.dress_idempotents("solvable"):
            out.append((j, self.with_identity_labels(f)))
        return out

    def idempotent_oracle(self) -> list[CrossedElement]:
        """Independent scan for the primitive idempotents over Z.

        Every idempotent has 0/1 marks, so scanning all 0/1 ghost vectors,
        keeping integral pullbacks, embedding them, and taking the minimal
        nonzero ones under e <= f iff ef = e finds every candidate.
        """
        nclasses = len(self.table)
        if nclasses > 14:
            raise ValueError("class-count bound exceeded for the idempotent scan")
        found: list[CrossedElement] = []
        for mask in range(1 << nclasses):
            ghost = [Fraction((mask >> i) & 1) for i in range(nclasses)]
            candidate = self.burnside.from_marks(ghost, QQ)
            if all(c.denominator == 1 for c in candidate.coeffs):
                elem = self.with_identity_labels(
                    self.burnside.element([int(c) for c in candidate.coeffs], ZZ)
                )
                if not elem.is_zero():
                    found.append(elem)
        minimal = []
        for e in found:
            if not any(
                f.coeffs != e.coeffs and self.multiply(e, f).coeffs == f.coeffs
                for f in found
            ):
                minimal.append(e)
        minimal.sort(key=lambda e: e.coeffs)
        return minimal

    # -- p-local decomposition report -------------------------------------------------

    def multiplication_matrix(self, x: CrossedElement) -> list[list]:
        """Matrix of left multiplication by x on the crossed basis (columns)."""
        cols = []
        for j in range(self.n):
            prod = self.multiply(x, self.basis_element(j, x.scalar))
            cols.append(prod.coeffs)
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    def ideal_rank(self, x: CrossedElement) -> int:
        mat = self.multiplication_matrix(x)
        return rank_rational([[Fraction(v) for v in row] for row in mat])

    def p_local_report(self, p: int) -> dict:
        """Decomposition of the identity over p-local scalars.

        For every p-perfect residual class J: the embedded idempotent, its
        fiber, the rank of its ideal, and the rank of the corresponding
        ideal for the plain crossed ring of the quotient N(J)/J, with an
        agreement flag per class.
        """
        scalar = p_local(p)
        dress = self.burnside.dress_idempotents(p)
        embedded = [(j, self.with_identity_labels(f)) for j, f in dress]
        fibers = self.table.residual_fiber_classes(p)
        total = self.zero(scalar)
        for _, e in embedded:
            total = total + e
        sum_is_one = total.coeffs == self.one(scalar).coeffs
        orthogonal = True
        idempotent = True
        for a, (_, ea) in enumerate(embedded):
            if self.multiply(ea, ea).coeffs != ea.coeffs:
                idempotent = False
            for b in range(a + 1, len(embedded)):
                if not self.multiply(ea, embedded[b][1]).is_zero():
                    orthogonal = False
        components = []
        for j, e in embedded:
            cls = self.table.classes[j]
            rank_g = self.ideal_rank(e)
            quotient = self.table.quotient(cls.normalizer, cls.representative)
            W = quotient.group
            wtable = SubgroupClassTable(W, bound=max(W.order, 1))
            wring = CrossedBurnsideRing(wtable)
            wdress = dict(wring.burnside.dress_idempotents(p))
            f1 = wdress[0]  # trivial class is first in the quotient's ordering
            rank_w = wring.ideal_rank(wring.with_identity_labels(f1))
            components.append(
                {
                    "residual": cls.name,
                    "fiber": [self.table.classes[i].name for i in fibers[j]],
                    "idempotent": e.to_json(),
                    "ideal_rank": rank_g,
                    "fiber_pair_count": sum(
                        1 for pr in self.pairs if pr.subgroup_class in fibers[j]
                    ),
                    "quotient_order": W.order,
                    "quotient_ideal_rank": rank_w,
                    "ranks_agree": rank_g == rank_w,
                }
            )
        return {
            "prime": p,
            "scalar": scalar.tag,
            "idempotent": idempotent,
            "orthogonal": orthogonal,
            "sum_is_one": sum_is_one,
            "components": components,
        }

    # -- rank checks -------------------------------------------------------------------

    def center_image_rank(self, scalar: ScalarRing) -> int:
        rows = self.center_image_rows(ZZ)
        if scalar.is_field and hasattr(scalar, "p"):
            return rank_field(
                [[scalar.coerce(v) for v in row] for row in rows], scalar
            )
        return rank_rational([[Fraction(v) for v in row] for row in rows])

    def marks_matrix_rows(self) -> list[list[int]]:
        """Crossed marks of each basis pair, flattened to integer coordinates."""
        rows = []
        layout = []
        for cls in self.table.classes:
            layout.append(tuple(sorted(cls.centralizer)))
        for i in range(self.n):
            ghost = self.crossed_marks(self.basis_element(i, ZZ))
            row: list[int] = []
            for comp, support in zip(ghost.components, layout):
                row.extend(comp.get(t, 0) for t in support)
            rows.append(row)
        return rows
