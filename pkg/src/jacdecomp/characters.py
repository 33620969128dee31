"""Exact complex character tables and rational (Galois) class machinery.

The table is computed by Dixon's modular method: common eigenvectors of the
class-sum matrices over a prime field F_p with p = 1 (mod e) and p > 2|G|,
then each character value is lifted exactly by reconstructing the eigenvalue
multiplicities of the e-th roots of unity through discrete Fourier sums mod p.
Multiplicities are below p, so the lift is unique and the final values are
exact cyclotomic numbers; no floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Mapping

from .cyclotomic import Cyclotomic, is_prime
from .groups import (
    ConjugacyClassPartition,
    FiniteGroup,
    Subgroup,
    conjugacy_classes,
    coset_action,
)


class CharacterError(Exception):
    """Base error for character computations."""


class GroupMismatch(CharacterError):
    """Class functions belong to different groups."""


class NoSuitablePrime(CharacterError):
    """No usable prime found for the modular method within the search bound."""


class NonIntegralAverage(CharacterError):
    """The subgroup average of a class function is not a rational integer."""


class NotIrreducible(CharacterError):
    """The class function is not an irreducible character."""


class NonIntegralN(CharacterError):
    """A Schur index does not divide the degree of its class."""


@dataclass(frozen=True)
class ClassFunction:
    """Function constant on conjugacy classes, with cyclotomic values."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(conjugacy_classes(self.group)):
            raise CharacterError("one value per conjugacy class required")

    @property
    def classes(self) -> ConjugacyClassPartition:
        return conjugacy_classes(self.group)

    def value_on_element(self, i: int) -> Cyclotomic:
        return self.values[self.classes.class_of[i]]

    def degree(self) -> int:
        """Value at the identity as an integer (for characters)."""
        return self.values[0].as_integer()

    def _check(self, other: "ClassFunction") -> None:
        if self.group is not other.group:
            raise GroupMismatch("class functions on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return ClassFunction(self.group, tuple(v * scalar for v in self.values))

    __rmul__ = __mul__

    def galois(self, k: int) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v.galois(k) for v in self.values))


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    """(1/|G|) sum over G of a(g) * conj(b(g)), returned exactly."""
    if a.group is not b.group:
        raise GroupMismatch("class functions on different groups")
    group = a.group
    sizes = conjugacy_classes(group).sizes
    total = Cyclotomic.zero(group.exponent)
    for size, va, vb in zip(sizes, a.values, b.values):
        total = total + va * vb.conjugate() * size
    return total.as_rational() / group.order


@dataclass(frozen=True)
class CharacterTable:
    """Complex irreducible characters, trivial first, then by (degree, values)."""

    group: FiniteGroup
    classes: ConjugacyClassPartition
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    conductor: int
    modulus: int  # prime used by the modular method (diagnostic only)

    def __len__(self) -> int:
        return len(self.irreducibles)


# -- linear algebra over F_p ---------------------------------------------------


def _rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _kernel_mod(matrix: list[list[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of the matrix over F_p."""
    n = len(matrix)
    rref, pivots = _rref_mod(matrix, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for row, c in zip(rref, pivots):
            vec[c] = (-row[f]) % p
        basis.append(vec)
    return basis


def _charpoly_mod(matrix: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial over F_p (Faddeev-LeVerrier), low degree first."""
    n = len(matrix)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [row[:] for row in matrix]
    for k in range(1, n + 1):
        tr = sum(m[i][i] for i in range(n)) % p
        ck = (-tr * pow(k, -1, p)) % p
        coeffs[n - k] = ck
        if k == n:
            break
        for i in range(n):
            m[i][i] = (m[i][i] + ck) % p
        m = [
            [sum(matrix[i][l] * m[l][j] for l in range(n)) % p for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def _poly_roots_mod(coeffs: list[int], p: int) -> list[int]:
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _restriction(matrix, basis, pivots, p):
    """Matrix of the action on the span of the basis (which must be invariant)."""
    n = len(matrix)
    s = len(basis)
    cols = []
    for b in basis:
        w = [sum(matrix[j][l] * b[l] for l in range(n)) % p for j in range(n)]
        coords = [w[c] for c in pivots]
        # the span must be invariant; verify the reconstruction exactly
        for j in range(n):
            recon = sum(coords[i] * basis[i][j] for i in range(s)) % p
            if recon != w[j]:
                raise CharacterError("class-sum matrix does not preserve a split subspace")
        cols.append(coords)
    return [[cols[r][i] for r in range(s)] for i in range(s)]


def _common_eigenvectors(mats: list[list[list[int]]], p: int) -> list[list[int]]:
    """Split F_p^n into the common eigenvectors of commuting matrices.

    Each eigenspace of one matrix is invariant under the rest, so the space
    is refined matrix by matrix; the algebra is semisimple and split over
    F_p, hence everything ends one-dimensional.
    """
    n = len(mats[0])
    identity_basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    spaces: list[tuple[list[list[int]], list[int]]] = [(identity_basis, list(range(n)))]
    for matrix in mats:
        if all(len(basis) == 1 for basis, _ in spaces):
            break
        new_spaces: list[tuple[list[list[int]], list[int]]] = []
        for basis, pivots in spaces:
            if len(basis) == 1:
                new_spaces.append((basis, pivots))
                continue
            restr = _restriction(matrix, basis, pivots, p)
            split_dim = 0
            for lam in _poly_roots_mod(_charpoly_mod(restr, p), p):
                shifted = [row[:] for row in restr]
                for i in range(len(restr)):
                    shifted[i][i] = (shifted[i][i] - lam) % p
                kernel = _kernel_mod(shifted, p)
                if not kernel:
                    continue
                vectors = [
                    [
                        sum(u[i] * basis[i][j] for i in range(len(basis))) % p
                        for j in range(n)
                    ]
                    for u in kernel
                ]
                rref, piv = _rref_mod(vectors, p)
                split_dim += len(rref)
                new_spaces.append((rref, piv))
            if split_dim != len(basis):
                raise CharacterError("class-sum matrix was not diagonalizable mod p")
        spaces = new_spaces
    result = []
    for basis, _ in spaces:
        if len(basis) != 1:
            raise CharacterError("class algebra failed to split over the chosen prime")
        result.append(basis[0])
    return result


# -- Dixon's method -------------------------------------------------------------


def _find_prime(exponent: int, order: int) -> int:
    p = 2 * order + 1
    p += (1 - p) % exponent  # smallest p >= 2|G|+1 with p = 1 (mod e)
    if exponent == 1:
        p = 2 * order + 1
    tries = 0
    while tries < 200000:
        if p > 2 * order and p % exponent == 1 % exponent and is_prime(p):
            return p
        p += exponent if exponent > 1 else 1
        tries += 1
    raise NoSuitablePrime(
        f"no prime p = 1 (mod {exponent}) with p > {2 * order} within search bound"
    )


def _primitive_root_of_unity(p: int, e: int) -> int:
    """Element of multiplicative order e in F_p (requires e | p-1)."""
    n = p - 1
    factors = []
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return pow(g, n // e, p)
    raise NoSuitablePrime(f"no generator found for F_{p}")  # unreachable for prime p


def character_table(group: FiniteGroup) -> CharacterTable:
    """Exact complex irreducible character table of the group."""
    if group._character_table is not None:
        return group._character_table
    classes = conjugacy_classes(group)
    k = len(classes)
    e = group.exponent
    order = group.order
    p = _find_prime(e, order)

    # class-sum structure constants: a[i][j][l] with C_i C_j = sum_l a_ijl C_l
    reps = classes.representatives
    class_of = classes.class_of
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for l, z in enumerate(reps):
        for x in range(order):
            i = class_of[x]
            j = class_of[group.mul(group.inv(x), z)]
            mats[i][j][l] += 1

    eigenvectors = _common_eigenvectors(mats, p)
    if len(eigenvectors) != k:
        raise CharacterError(
            f"expected {k} common eigenvectors, found {len(eigenvectors)}"
        )

    inv_class = [class_of[group.inv(rep)] for rep in reps]
    z_root = _primitive_root_of_unity(p, e)
    sizes = classes.sizes

    rows: list[ClassFunction] = []
    for vec in eigenvectors:
        if vec[0] % p == 0:
            raise CharacterError("eigenvector vanishes on the identity class")
        norm = pow(vec[0], -1, p)
        omega = [(v * norm) % p for v in vec]
        sigma = sum(
            omega[l] * omega[inv_class[l]] * pow(sizes[l], -1, p) for l in range(k)
        ) % p
        d_squared = (order * pow(sigma, -1, p)) % p
        d = isqrt(d_squared)
        if d * d != d_squared or not 1 <= d * d <= order:
            raise CharacterError("degree reconstruction failed")
        # character values mod p per class
        cvals = [(d * omega[l] * pow(sizes[l], -1, p)) % p for l in range(k)]
        values = []
        for l, rep in enumerate(reps):
            n = group.element_order(rep)
            zn = pow(z_root, e // n, p)
            powers = [class_of[group.power(rep, i)] for i in range(n)]
            inv_n = pow(n, -1, p)
            terms: dict[int, int] = {}
            total = 0
            for j in range(n):
                m_j = sum(cvals[powers[i]] * pow(zn, (-i * j) % n, p) for i in range(n))
                m_j = (m_j * inv_n) % p
                if m_j > d:
                    raise CharacterError("eigenvalue multiplicity exceeds the degree")
                if m_j:
                    terms[(j * e) // n] = m_j
                    total += m_j
            if total != d:
                raise CharacterError("eigenvalue multiplicities do not sum to the degree")
            values.append(Cyclotomic.from_terms(terms, e))
        rows.append(ClassFunction(group, tuple(values)))

    trivial = ClassFunction(group, tuple(Cyclotomic.one(e) for _ in range(k)))
    others = [row for row in rows if row != trivial]
    if len(others) != k - 1:
        raise CharacterError("trivial character missing from the computed table")
    others.sort(key=lambda row: (row.values[0].as_integer(), tuple(v.coeffs for v in row.values)))
    ordered = [trivial] + others

    # exact sanity guarantees before the table is released
    degrees = tuple(row.values[0].as_integer() for row in ordered)
    if sum(d * d for d in degrees) != order:
        raise CharacterError("degree squares do not sum to the group order")
    for i, a in enumerate(ordered):
        for j in range(i, len(ordered)):
            expected = Fraction(1 if i == j else 0)
            if inner_product(a, ordered[j]) != expected:
                raise CharacterError("row orthonormality failed")

    table = CharacterTable(
        group=group,
        classes=classes,
        irreducibles=tuple(ordered),
        degrees=degrees,
        conductor=e,
        modulus=p,
    )
    group._character_table = table
    return table


# -- standard class functions ----------------------------------------------------


def trivial_character(group: FiniteGroup) -> ClassFunction:
    k = len(conjugacy_classes(group))
    return ClassFunction(group, tuple(Cyclotomic.one(group.exponent) for _ in range(k)))


def regular_character(group: FiniteGroup) -> ClassFunction:
    k = len(conjugacy_classes(group))
    e = group.exponent
    values = [Cyclotomic.from_rational(group.order, e)] + [Cyclotomic.zero(e)] * (k - 1)
    return ClassFunction(group, tuple(values))


def permutation_character(group: FiniteGroup, subgroup: Subgroup) -> ClassFunction:
    """Character of the action on cosets: fixed-coset counts per class."""
    cached = group._perm_chars.get(subgroup.members)
    if cached is not None:
        return cached
    action = coset_action(group, subgroup)
    classes = conjugacy_classes(group)
    e = group.exponent
    values = []
    for rep in classes.representatives:
        perm = action.perm(rep)
        fixed = sum(1 for i in range(action.degree) if perm(i) == i)
        values.append(Cyclotomic.from_rational(fixed, e))
    result = ClassFunction(group, tuple(values))
    group._perm_chars[subgroup.members] = result
    return result


def fixed_dim(chi: ClassFunction, subgroup: Subgroup) -> int:
    """Dimension of the subgroup-fixed subspace of a character.

    Computed as the average of the character over the subgroup, then
    cross-checked against the Frobenius-reciprocity route through the
    permutation character; the two independent computations must agree.
    """
    group = chi.group
    if subgroup.parent is not group:
        raise GroupMismatch("subgroup belongs to a different group")
    key = (chi, subgroup.members)
    cached = group._fixed_dims.get(key)
    if cached is not None:
        return cached
    class_of = conjugacy_classes(group).class_of
    total = Cyclotomic.zero(group.exponent)
    for h in subgroup.members:
        total = total + chi.values[class_of[h]]
    average = total * Fraction(1, subgroup.order)
    if not average.is_rational() or average.as_rational().denominator != 1:
        raise NonIntegralAverage(
            f"average over subgroup is {average}; not a character"
        )
    dim = average.as_rational().numerator
    via_induction = inner_product(permutation_character(group, subgroup), chi)
    if via_induction != dim:
        raise CharacterError(
            f"fixed-space routes disagree: average {dim}, induction {via_induction}"
        )
    if dim < 0:
        raise NonIntegralAverage(f"negative fixed dimension {dim}; not a character")
    group._fixed_dims[key] = dim
    return dim


def frobenius_schur(chi: ClassFunction) -> int:
    """Indicator (1/|G|) sum chi(g^2); -1, 0 or 1 for irreducible chi."""
    if inner_product(chi, chi) != 1:
        raise NotIrreducible("Frobenius-Schur indicator needs an irreducible character")
    group = chi.group
    class_of = conjugacy_classes(group).class_of
    total = Cyclotomic.zero(group.exponent)
    for g in range(group.order):
        total = total + chi.values[class_of[group.mul(g, g)]]
    value = (total * Fraction(1, group.order)).as_rational()
    if value.denominator != 1 or value.numerator not in (-1, 0, 1):
        raise CharacterError(f"indicator {value} outside -1, 0, 1")
    return value.numerator


# -- rational classes (Galois orbits) ---------------------------------------------


@dataclass(frozen=True)
class RationalClass:
    """One Galois orbit of complex irreducibles: a rational irreducible.

    The rational character is schur_index times the orbit sum; its degree is
    schur_index * degree * field_degree.  The exponent n = degree/schur_index
    is the multiplicity of the associated factor in the group-algebra
    decomposition.
    """

    table: CharacterTable
    member_indices: tuple[int, ...]
    representative: int
    degree: int
    field_degree: int
    schur_index: int
    schur_source: str  # "heuristic" or "override"
    rational_character: ClassFunction
    n: int

    @property
    def dim_w(self) -> int:
        return self.schur_index * self.degree * self.field_degree

    @property
    def character(self) -> ClassFunction:
        """Representative complex irreducible character of the orbit."""
        return self.table.irreducibles[self.representative]

    def is_trivial(self) -> bool:
        return self.representative == 0


def rational_classes(
    table: CharacterTable,
    overrides: Mapping[int, int] | None = None,
) -> tuple[RationalClass, ...]:
    """Galois orbits of the table rows, trivial class first.

    The Schur index is heuristic (2 when the Frobenius-Schur indicator is -1,
    else 1) unless overridden per orbit representative; every class records
    which source produced its index.
    """
    overrides = dict(overrides or {})
    rows = table.irreducibles
    e = table.conductor
    row_index = {row.values: i for i, row in enumerate(rows)}
    orbit_of: dict[int, set[int]] = {}
    assigned: set[int] = set()
    orbits: list[tuple[int, ...]] = []
    for i in range(len(rows)):
        if i in assigned:
            continue
        orbit = {i}
        for k in range(1, e + 1):
            if gcd(k, e) != 1:
                continue
            image = tuple(v.galois(k) for v in rows[i].values)
            j = row_index.get(image)
            if j is None:
                raise CharacterError("Galois action left the character table")
            orbit.add(j)
        members = tuple(sorted(orbit))
        orbits.append(members)
        assigned.update(members)
    orbits.sort(key=lambda members: members[0])

    representatives = {members[0] for members in orbits}
    for key in overrides:
        if key not in representatives:
            raise CharacterError(
                f"Schur override on row {key}, which is not an orbit representative"
            )

    result = []
    for members in orbits:
        rep = members[0]
        degree = table.degrees[rep]
        if rep in overrides:
            s = int(overrides[rep])
            source = "override"
            if s < 1:
                raise NonIntegralN(f"Schur index must be positive, got {s}")
        else:
            s = 2 if frobenius_schur(rows[rep]) == -1 else 1
            source = "heuristic"
        if degree % s != 0:
            raise NonIntegralN(
                f"Schur index {s} does not divide degree {degree} on row {rep}"
            )
        total = rows[members[0]]
        for j in members[1:]:
            total = total + rows[j]
        rational_char = total * s
        for v in rational_char.values:
            if not v.is_rational():
                raise CharacterError("orbit sum has irrational values")
        result.append(
            RationalClass(
                table=table,
                member_indices=members,
                representative=rep,
                degree=degree,
                field_degree=len(members),
                schur_index=s,
                schur_source=source,
                rational_character=rational_char,
                n=degree // s,
            )
        )
    return tuple(result)


# -- group algebra elements and central idempotents --------------------------------


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Element of Q[G], dense rational coefficients indexed by element."""

    group: FiniteGroup
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise CharacterError("one coefficient per group element required")

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls(group, tuple(Fraction(0) for _ in range(group.order)))

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        coeffs = [Fraction(0)] * group.order
        coeffs[0] = Fraction(1)
        return cls(group, tuple(coeffs))

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.group is not other.group:
            raise GroupMismatch("group algebra elements over different groups")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        return GroupAlgebraElement(
            self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement(self.group, tuple(a * other for a in self.coeffs))
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        group = self.group
        out = [Fraction(0)] * group.order
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[group.mul(i, j)] += a * b
        return GroupAlgebraElement(group, tuple(out))

    __rmul__ = __mul__

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.coeffs) if a)

    def is_idempotent(self) -> bool:
        return self * self == self


def central_idempotent(rational_class: RationalClass) -> GroupAlgebraElement:
    """Central idempotent of Q[G] attached to one rational class.

    Coefficient of g is (d/|G|) times the orbit-sum of chi(g^-1); the orbit
    sum is Galois-stable, hence rational.
    """
    table = rational_class.table
    group = table.group
    class_of = table.classes.class_of
    d = rational_class.degree
    orbit_rows = [table.irreducibles[j] for j in rational_class.member_indices]
    coeffs = []
    for g in range(group.order):
        cls = class_of[group.inv(g)]
        total = Cyclotomic.zero(group.exponent)
        for row in orbit_rows:
            total = total + row.values[cls]
        coeffs.append(total.as_rational() * Fraction(d, group.order))
    return GroupAlgebraElement(group, tuple(coeffs))
