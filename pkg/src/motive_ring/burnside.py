"""The Burnside ring of a finite group over exact scalars.

Basis: transitive sets G/H, one per conjugacy class of subgroups.  The
mark homomorphism sends an element to its fixed-point counts; the mark
matrix is triangular in the class ordering, so pulling ghost vectors
back is a back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groups import double_cosets
from .linalg import solve_upper_triangular
from .scalars import QQ, ZZ, ScalarRing, ScalarError, p_local
from .subgroups import SubgroupClassTable


@dataclass(frozen=True)
class TableOfMarks:
    """marks[i][j] = number of cosets of class-j subgroups fixed by class i."""

    class_names: tuple[str, ...]
    marks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BurnsideElement:
    ring: "BurnsideRing"
    scalar: ScalarRing
    coeffs: tuple

    def __add__(self, other):
        self.ring._check(other, self.scalar)
        s = self.scalar
        return BurnsideElement(
            self.ring, s, tuple(s.add(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self.ring._check(other, self.scalar)
        s = self.scalar
        return BurnsideElement(
            self.ring, s, tuple(s.sub(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        s = self.scalar
        return BurnsideElement(self.ring, s, tuple(s.neg(a) for a in self.coeffs))

    def __mul__(self, other):
        return self.ring.multiply(self, other)

    def is_zero(self) -> bool:
        return all(self.scalar.is_zero(c) for c in self.coeffs)

    def to_json(self) -> dict[str, str]:
        out = {}
        for i, c in enumerate(self.coeffs):
            if not self.scalar.is_zero(c):
                out[self.ring.table.classes[i].name] = self.scalar.format(c)
        return out


@dataclass(frozen=True)
class GhostVector:
    scalar: ScalarRing
    values: tuple


class BurnsideRing:
    """Burnside ring bound to a subgroup class table."""

    def __init__(self, table: SubgroupClassTable):
        self.table = table
        self.group = table.group
        self.n = len(table)
        self._marks: TableOfMarks | None = None
        self._basis_products: dict[tuple[int, int], tuple[int, ...]] = {}

    # -- marks ------------------------------------------------------------

    def table_of_marks(self) -> TableOfMarks:
        if self._marks is None:
            G = self.group
            rows = []
            for i, ci in enumerate(self.table.classes):
                hgens = G.small_generating_set(ci.representative) or [0]
                row = []
                for j, cj in enumerate(self.table.classes):
                    if i > j:
                        row.append(0)
                        continue
                    U = cj.representative
                    count = 0
                    for g in G.left_cosets(U):
                        ginv = G.inv(g)
                        if all(G.mul(G.mul(ginv, h), g) in U for h in hgens):
                            count += 1
                    row.append(count)
                rows.append(tuple(row))
            self._marks = TableOfMarks(
                tuple(c.name for c in self.table.classes), tuple(rows)
            )
        return self._marks

    # -- elements ---------------------------------------------------------

    def element(self, coeffs, scalar: ScalarRing = ZZ) -> BurnsideElement:
        if len(coeffs) != self.n:
            raise ValueError("coefficient length mismatch")
        return BurnsideElement(self, scalar, tuple(scalar.coerce(c) for c in coeffs))

    def zero(self, scalar: ScalarRing = ZZ) -> BurnsideElement:
        return self.element([0] * self.n, scalar)

    def basis_element(self, class_index: int, scalar: ScalarRing = ZZ) -> BurnsideElement:
        coeffs = [0] * self.n
        coeffs[class_index] = 1
        return self.element(coeffs, scalar)

    def one(self, scalar: ScalarRing = ZZ) -> BurnsideElement:
        return self.basis_element(self.n - 1, scalar)  # G/G is the last class

    def _check(self, x, scalar):
        if not isinstance(x, BurnsideElement) or x.ring is not self:
            raise ValueError("element belongs to a different ring")
        if x.scalar != scalar:
            raise ScalarError(
                f"mixed scalar rings: {x.scalar.tag} vs {scalar.tag}"
            )

    # -- multiplication -----------------------------------------------------

    def _basis_product(self, i: int, j: int) -> tuple[int, ...]:
        """[G/H_i][G/H_j] as an integer coefficient vector over the basis."""
        key = (i, j) if i <= j else (j, i)
        if key not in self._basis_products:
            G = self.group
            H = self.table.classes[key[0]].representative
            K = self.table.classes[key[1]].representative
            coeffs = [0] * self.n
            reps, _ = double_cosets(G, H, K)
            for g in reps:
                inter = H & G.conjugate_subgroup(g, K)
                idx, _ = self.table.fusion(inter)
                coeffs[idx] += 1
            self._basis_products[key] = tuple(coeffs)
        return self._basis_products[key]

    def multiply(self, x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
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
        return BurnsideElement(self, s, tuple(acc))

    # -- marks of elements ---------------------------------------------------

    def marks(self, x: BurnsideElement) -> GhostVector:
        m = self.table_of_marks().marks
        s = x.scalar
        vals = []
        for i in range(self.n):
            acc = s.zero
            for j, c in enumerate(x.coeffs):
                if not s.is_zero(c) and m[i][j]:
                    acc = s.add(acc, s.mul(c, s.coerce(m[i][j])))
            vals.append(acc)
        return GhostVector(s, tuple(vals))

    def from_marks(self, values, scalar: ScalarRing = QQ) -> BurnsideElement:
        """Pull a ghost vector back through the triangular mark matrix (over Q)."""
        m = self.table_of_marks().marks
        sol = solve_upper_triangular(m, [Fraction(v) for v in values])
        return self.element(sol, scalar)

    # -- idempotents ----------------------------------------------------------

    def rational_idempotents(self) -> list[BurnsideElement]:
        """Primitive idempotents over Q, one per subgroup class, by ghost inversion."""
        out = []
        for i in range(self.n):
            ghost = [Fraction(1 if j == i else 0) for j in range(self.n)]
            out.append(self.from_marks(ghost, QQ))
        return out

    def dress_idempotents(self, mode) -> list[tuple[int, BurnsideElement]]:
        """Idempotents summing basic rational ones over residual fibers.

        mode is "solvable" (integer coefficients) or a prime p (p-local
        coefficients).  Returns (residual class index, element) pairs in
        class order.  A coefficient outside the promised ring aborts.
        """
        rational = self.rational_idempotents()
        fibers = self.table.residual_fiber_classes(mode)
        scalar = ZZ if mode == "solvable" else p_local(mode)
        out = []
        for j in sorted(fibers):
            coeffs = [Fraction(0)] * self.n
            for i in fibers[j]:
                coeffs = [a + b for a, b in zip(coeffs, rational[i].coeffs)]
            try:
                elem = self.element(coeffs, scalar)
            except ScalarError as exc:
                # residual fibers always produce coefficients in the target
                # ring; landing here means the fiber computation is broken
                raise RuntimeError(
                    f"residual idempotent for class {j} not in {scalar.tag}: {exc}"
                ) from exc
            out.append((j, elem))
        return out
