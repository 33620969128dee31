"""Isotypical factor dimensions, induced decompositions, admissibility reports.

Everything here is dimension/exponent bookkeeping over exact arithmetic: an
isogeny statement is rendered as a string, but every asserted fact is an
integer identity between two independently computed quantities (character
formula versus Riemann-Hurwitz orbit counting), checked on every call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Mapping, Sequence

from .characters import (
    CharacterTable,
    RationalClass,
    character_table,
    fixed_dim,
    inner_product,
    permutation_character,
    rational_classes,
    regular_character,
    trivial_character,
)
from .covering import (
    CoveringAction,
    branch_stabilizers,
    genus_from_branch_data,
    quotient_genus,
    total_genus,
    validate_action,
)
from .groups import (
    FiniteGroup,
    NotASubgroup,
    PartitionVerdict,
    Subgroup,
    enumerate_subgroups,
    is_partition,
    preset_elementary_abelian_2,
    subgroup_as_group,
    subgroup_generate,
    subgroup_join,
)


class DecompositionError(Exception):
    """Base error for decomposition bookkeeping."""


class NotAdmissible(DecompositionError):
    """The collection fails the admissibility inequality."""

    def __init__(self, report: "AdmissibilityReport"):
        super().__init__("collection is not admissible for the ambient group")
        self.report = report


class NonIntegralDimension(DecompositionError):
    """A factor dimension or exponent came out non-integral."""


class NonIntegralMultiplicity(DecompositionError):
    """A homology multiplicity came out non-integral."""


class NotAPartition(DecompositionError):
    """The subgroups do not partition the group."""

    def __init__(self, verdict: PartitionVerdict):
        detail = []
        if verdict.uncovered is not None:
            detail.append(f"element {verdict.uncovered} uncovered")
        if verdict.overlap is not None:
            i, j, x = verdict.overlap
            detail.append(f"subgroups {i} and {j} share element {x}")
        super().__init__("; ".join(detail) or "not a partition")
        self.verdict = verdict


class TooFewFactors(DecompositionError):
    """Fiber-product constructions need at least two factors."""


@dataclass(frozen=True)
class IsotypicalFactor:
    """One factor of the group-algebra decomposition: class data plus dim."""

    rational_class: RationalClass
    dim: int

    @property
    def exponent(self) -> int:
        return self.rational_class.n


@dataclass(frozen=True)
class SubgroupProfile:
    """Induced decomposition data of one quotient: exponents and genus."""

    subgroup: Subgroup
    genus: int
    exponents: tuple[int, ...]
    fixed_dims: tuple[int, ...]


@dataclass(frozen=True)
class AdmissibilityReport:
    """Per-class sums and slacks for one collection against one ambient group."""

    subgroups: tuple[Subgroup, ...]
    ambient: str
    ambient_order: int
    degrees: tuple[int, ...]
    sums: tuple[int, ...]
    support: tuple[bool, ...]
    slacks: tuple[int | None, ...]  # degree - sum on support classes, None off support
    admissible: bool

    def __bool__(self) -> bool:
        return self.admissible


@dataclass(frozen=True)
class DecompositionReport:
    """Verified dimension bookkeeping for JC ~ JC_H1 x ... x JC_Ht x P."""

    subgroups: tuple[Subgroup, ...]
    quotient_genera: tuple[int, ...]
    deltas: tuple[int | None, ...]  # reduced slacks per class, None off support
    dim_p: int
    full: bool
    statement: str
    admissibility: AdmissibilityReport
    profiles: tuple[SubgroupProfile, ...]


@dataclass(frozen=True)
class Proposition2Report:
    """Verified bookkeeping for JC x JC_join ~ JC_H1 x JC_H2 x P."""

    h1: Subgroup
    h2: Subgroup
    join: Subgroup
    genus: int
    join_genus: int
    h1_genus: int
    h2_genus: int
    deltas: tuple[int, ...]
    dim_p: int
    degenerate_full: bool
    statement: str


@dataclass(frozen=True)
class Corollary1Report:
    """Prym containment check for one distinguished index of a collection."""

    k: int
    prym_dim: int
    complement_sum: int
    bounded: bool
    equality: bool
    full: bool


@dataclass(frozen=True)
class TheoremCReport:
    """Hypothesis check for the classical pairwise-permuting criterion.

    The three hypotheses: all pairs of subgroups permute (the product set is
    a subgroup), every pairwise quotient has genus zero, and the quotient
    genera sum to the total genus.  Reported next to the admissibility route
    so the two applicability ranges can be compared.
    """

    pairs_permute: bool
    non_permuting_pair: tuple[int, int] | None
    pairwise_genera: tuple[int, ...]  # genus of each pairwise quotient, i < j
    pairwise_zero: bool
    genus_sum: int
    genus_matches: bool
    applicable: bool


@dataclass(frozen=True)
class Proposition1Report:
    """Agreement of the two algebraic restatements of admissible-and-full."""

    statement2: bool
    statement3: bool
    special_case: bool
    eq8_holds: bool | None
    a1: int | None
    sums: tuple[int, ...]
    degrees: tuple[int, ...]
    support: tuple[bool, ...]
    statement: str | None


@dataclass(frozen=True)
class TheoremBReport:
    """The three exact identities behind the partition decomposition."""

    t: int
    character_identity: bool
    class_identities: bool
    dimension_lhs: int
    dimension_rhs: int
    holds: bool


@dataclass(frozen=True)
class RationalRepProfile:
    """Multiplicity of each rational class in the degree-2g homology action."""

    multiplicities: tuple[int, ...]
    total_degree: int


@dataclass(frozen=True)
class FiberPlan:
    """Constructed elementary-abelian covering realizing prescribed quotients."""

    genera: tuple[int, ...]
    action: CoveringAction
    deck_subgroups: tuple[Subgroup, ...]
    genus: int
    predicted_genus: int
    dim_p: int
    predicted_dim_p: int
    admissibility: AdmissibilityReport
    theorem1: DecompositionReport
    elliptic_count: int | None = None
    pairing: tuple[tuple[int, ...], ...] | None = None


class ActionAnalysis:
    """Character-side data of one covering: table, factors, profiles, reports.

    Built either from a validated action (the acting group as given) or from
    induced branch data (a subgroup reinterpreted as the acting group).  All
    heavy artifacts are computed lazily and cached; instances are immutable
    from the outside and safe to share.
    """

    def __init__(
        self,
        group: FiniteGroup,
        orbit_genus: int,
        stabilizers: tuple[Subgroup, ...],
        genus: int,
        schur_overrides: Mapping[int, int] | None = None,
        ambient: str = "acting",
    ):
        self.group = group
        self.orbit_genus = orbit_genus
        self.stabilizers = stabilizers
        self.genus = genus
        self.schur_overrides = dict(schur_overrides or {})
        self.ambient = ambient
        self._table: CharacterTable | None = None
        self._rational: tuple[RationalClass, ...] | None = None
        self._factors: tuple[IsotypicalFactor, ...] | None = None
        self._profiles: dict[tuple[int, ...], SubgroupProfile] = {}
        self._genera: dict[tuple[int, ...], int] = {}

    @classmethod
    def from_action(
        cls,
        action: CoveringAction,
        schur_overrides: Mapping[int, int] | None = None,
    ) -> "ActionAnalysis":
        certificate = validate_action(action)
        return cls(
            group=action.group,
            orbit_genus=action.orbit_genus,
            stabilizers=branch_stabilizers(action),
            genus=certificate.total_genus,
            schur_overrides=schur_overrides,
        )

    # -- cached layers ------------------------------------------------------

    @property
    def table(self) -> CharacterTable:
        if self._table is None:
            self._table = character_table(self.group)
        return self._table

    @property
    def rational_classes(self) -> tuple[RationalClass, ...]:
        if self._rational is None:
            self._rational = rational_classes(self.table, self.schur_overrides)
        return self._rational

    @property
    def factors(self) -> tuple[IsotypicalFactor, ...]:
        if self._factors is None:
            factors = []
            for rc in self.rational_classes:
                if rc.is_trivial():
                    dim = self.orbit_genus
                else:
                    chi = rc.character
                    d = rc.degree
                    acc = Fraction(d * (self.orbit_genus - 1))
                    for stab in self.stabilizers:
                        acc += Fraction(d - fixed_dim(chi, stab), 2)
                    value = rc.schur_index * rc.field_degree * acc
                    if value.denominator != 1 or value < 0:
                        raise NonIntegralDimension(
                            f"factor dimension {value} for class at row {rc.representative}"
                        )
                    dim = int(value)
                factors.append(IsotypicalFactor(rc, dim))
            conserved = sum(f.exponent * f.dim for f in factors)
            if conserved != self.genus:
                raise DecompositionError(
                    f"conservation failed: sum n_l dim B_l = {conserved}, genus = {self.genus}"
                )
            self._factors = tuple(factors)
        return self._factors

    @property
    def support(self) -> tuple[bool, ...]:
        return tuple(f.dim > 0 for f in self.factors)

    # -- per-subgroup data ----------------------------------------------------

    def _check_subgroup(self, subgroup: Subgroup) -> None:
        if subgroup.parent is not self.group:
            raise NotASubgroup("subgroup does not belong to the analysis group")

    def fixed_dims(self, subgroup: Subgroup) -> tuple[int, ...]:
        """Fixed-space dimension of each class representative under a subgroup."""
        self._check_subgroup(subgroup)
        return tuple(
            fixed_dim(rc.character, subgroup) for rc in self.rational_classes
        )

    def quotient_genus(self, subgroup: Subgroup) -> int:
        """Genus of the quotient by a subgroup, from coset orbit counting."""
        self._check_subgroup(subgroup)
        cached = self._genera.get(subgroup.members)
        if cached is None:
            cached = genus_from_branch_data(
                self.group, self.orbit_genus, self.stabilizers, subgroup
            )
            self._genera[subgroup.members] = cached
        return cached

    def profile(self, subgroup: Subgroup) -> SubgroupProfile:
        self._check_subgroup(subgroup)
        cached = self._profiles.get(subgroup.members)
        if cached is not None:
            return cached
        fixed = self.fixed_dims(subgroup)
        exponents = []
        for rc, f in zip(self.rational_classes, fixed):
            if f % rc.schur_index != 0:
                raise NonIntegralDimension(
                    f"fixed dimension {f} not divisible by Schur index {rc.schur_index}"
                )
            n_h = f // rc.schur_index
            if not 0 <= n_h <= rc.n:
                raise DecompositionError(
                    f"induced exponent {n_h} outside 0..{rc.n}"
                )
            exponents.append(n_h)
        genus_characters = sum(
            n * factor.dim for n, factor in zip(exponents, self.factors)
        )
        genus_surfaces = self.quotient_genus(subgroup)
        if genus_characters != genus_surfaces:
            raise DecompositionError(
                f"profile conservation failed: characters give {genus_characters}, "
                f"orbit counting gives {genus_surfaces}"
            )
        profile = SubgroupProfile(
            subgroup=subgroup,
            genus=genus_surfaces,
            exponents=tuple(exponents),
            fixed_dims=fixed,
        )
        self._profiles[subgroup.members] = profile
        return profile

    # -- reports ---------------------------------------------------------------

    def admissibility(self, collection: Sequence[Subgroup]) -> AdmissibilityReport:
        if not collection:
            raise DecompositionError("admissibility needs a non-empty collection")
        profiles = [self.profile(h) for h in collection]
        r = len(self.rational_classes)
        sums = tuple(sum(p.fixed_dims[l] for p in profiles) for l in range(r))
        degrees = tuple(rc.degree for rc in self.rational_classes)
        support = self.support
        slacks = tuple(
            degrees[l] - sums[l] if support[l] else None for l in range(r)
        )
        admissible = all(s is None or s >= 0 for s in slacks)
        return AdmissibilityReport(
            subgroups=tuple(collection),
            ambient=self.ambient,
            ambient_order=self.group.order,
            degrees=degrees,
            sums=sums,
            support=support,
            slacks=slacks,
            admissible=admissible,
        )

    def theorem1(self, collection: Sequence[Subgroup]) -> DecompositionReport:
        report = self.admissibility(collection)
        if not report.admissible:
            raise NotAdmissible(report)
        profiles = tuple(self.profile(h) for h in collection)
        deltas: list[int | None] = []
        dim_p = 0
        for factor, slack in zip(self.factors, report.slacks):
            if slack is None:
                deltas.append(None)
                continue
            s = factor.rational_class.schur_index
            if slack % s != 0:
                raise NonIntegralDimension(
                    f"slack {slack} not divisible by Schur index {s}"
                )
            reduced = slack // s
            deltas.append(reduced)
            dim_p += reduced * factor.dim
        genera = tuple(p.genus for p in profiles)
        if dim_p != self.genus - sum(genera):
            raise DecompositionError(
                f"complement dimension mismatch: {dim_p} vs {self.genus - sum(genera)}"
            )
        full = dim_p == 0
        names = " x ".join(f"JC_H{i + 1}" for i in range(len(collection)))
        statement = f"JC ~ {names}" if full else f"JC ~ {names} x P,  dim P = {dim_p}"
        return DecompositionReport(
            subgroups=tuple(collection),
            quotient_genera=genera,
            deltas=tuple(deltas),
            dim_p=dim_p,
            full=full,
            statement=statement,
            admissibility=report,
            profiles=profiles,
        )

    def proposition2(self, h1: Subgroup, h2: Subgroup) -> Proposition2Report:
        join = subgroup_join(h1, h2)
        p1 = self.profile(h1)
        p2 = self.profile(h2)
        pj = self.profile(join)
        deltas = []
        dim_check = 0
        for l, factor in enumerate(self.factors):
            delta = (
                factor.exponent + pj.exponents[l] - p1.exponents[l] - p2.exponents[l]
            )
            if delta < 0:
                raise DecompositionError(
                    f"subspace-sum slack negative ({delta}) on class {l}"
                )
            deltas.append(delta)
            dim_check += delta * factor.dim
        dim_p = self.genus + pj.genus - p1.genus - p2.genus
        if dim_p != dim_check:
            raise DecompositionError(
                f"complement dimension mismatch: {dim_p} vs {dim_check}"
            )
        degenerate_full = pj.genus == 0 and dim_p == 0
        statement = (
            "JC ~ JC_H1 x JC_H2"
            if degenerate_full
            else f"JC x JC_J ~ JC_H1 x JC_H2 x P,  dim P = {dim_p}  (J = <H1,H2>)"
        )
        return Proposition2Report(
            h1=h1,
            h2=h2,
            join=join,
            genus=self.genus,
            join_genus=pj.genus,
            h1_genus=p1.genus,
            h2_genus=p2.genus,
            deltas=tuple(deltas),
            dim_p=dim_p,
            degenerate_full=degenerate_full,
            statement=statement,
        )

    def prym_dim(self, subgroup: Subgroup) -> int:
        return self.genus - self.profile(subgroup).genus

    def corollary1(self, collection: Sequence[Subgroup], k: int) -> Corollary1Report:
        if not 0 <= k < len(collection):
            raise DecompositionError(f"index k={k} outside the collection")
        report = self.admissibility(collection)
        if not report.admissible:
            raise NotAdmissible(report)
        genera = [self.profile(h).genus for h in collection]
        complement_sum = sum(g for i, g in enumerate(genera) if i != k)
        prym = self.prym_dim(collection[k])
        full = sum(genera) == self.genus
        bounded = complement_sum <= prym
        equality = complement_sum == prym
        if not bounded or equality != full:
            raise DecompositionError("Prym containment bookkeeping failed")
        return Corollary1Report(
            k=k,
            prym_dim=prym,
            complement_sum=complement_sum,
            bounded=bounded,
            equality=equality,
            full=full,
        )

    def proposition1(self, collection: Sequence[Subgroup]) -> Proposition1Report:
        if not collection:
            raise DecompositionError("equivalence check needs a non-empty collection")
        profiles = [self.profile(h) for h in collection]
        r = len(self.rational_classes)
        sums = tuple(sum(p.fixed_dims[l] for p in profiles) for l in range(r))
        degrees = tuple(rc.degree for rc in self.rational_classes)
        support = self.support

        statement2 = all(
            sums[l] == degrees[l] for l in range(r) if support[l]
        )

        # independent route: class-function arithmetic on the induced sum
        group = self.group
        total = permutation_character(group, collection[0])
        for h in collection[1:]:
            total = total + permutation_character(group, h)
        residual = total
        for l, factor in enumerate(self.factors):
            if support[l]:
                residual = residual - factor.exponent * factor.rational_class.rational_character
        statement3 = True
        reconstruction = 0 * residual
        for l, rc in enumerate(self.rational_classes):
            coefficient = inner_product(residual, rc.character)
            if support[l]:
                if coefficient != 0:
                    statement3 = False
                    break
            else:
                a_l = coefficient / rc.schur_index
                if a_l.denominator != 1 or a_l < 0:
                    statement3 = False
                    break
                reconstruction = reconstruction + int(a_l) * rc.rational_character
        if statement3 and reconstruction != residual:
            statement3 = False
        if statement2 != statement3:
            raise DecompositionError(
                "statement (2) and statement (3) verdicts disagree"
            )

        special_case = self.factors[0].dim == 0 and all(
            f.dim > 0 for f in self.factors[1:]
        )
        eq8_holds: bool | None = None
        a1: int | None = None
        statement = None
        if special_case:
            t = len(collection)
            expected = regular_character(group) + (t - 1) * trivial_character(group)
            eq8_holds = total == expected
            a1_frac = inner_product(total, trivial_character(group))
            if a1_frac.denominator != 1:
                raise DecompositionError("trivial multiplicity non-integral")
            a1 = int(a1_frac)
            if eq8_holds != statement2 or (eq8_holds and a1 != t):
                raise DecompositionError("regular-plus-trivial form check failed")
            if eq8_holds:
                statement = f"sum of induced trivials = regular + {t - 1}*W1"
        return Proposition1Report(
            statement2=statement2,
            statement3=statement3,
            special_case=special_case,
            eq8_holds=eq8_holds,
            a1=a1,
            sums=sums,
            degrees=degrees,
            support=support,
            statement=statement,
        )

    def theorem_b(self, collection: Sequence[Subgroup]) -> TheoremBReport:
        verdict = is_partition(self.group, collection)
        if not verdict:
            raise NotAPartition(verdict)
        group = self.group
        t = len(collection)
        lhs = None
        for h in collection:
            term = h.order * permutation_character(group, h)
            lhs = term if lhs is None else lhs + term
        rhs = (t - 1) * regular_character(group) + group.order * trivial_character(group)
        character_identity = lhs == rhs

        class_identities = True
        profiles = [self.profile(h) for h in collection]
        for l, rc in enumerate(self.rational_classes):
            if rc.is_trivial():
                continue
            weighted = sum(p.fixed_dims[l] * p.subgroup.order for p in profiles)
            if weighted != (t - 1) * rc.degree:
                class_identities = False
        dimension_lhs = (t - 1) * self.genus + group.order * self.orbit_genus
        dimension_rhs = sum(p.subgroup.order * p.genus for p in profiles)
        return TheoremBReport(
            t=t,
            character_identity=character_identity,
            class_identities=class_identities,
            dimension_lhs=dimension_lhs,
            dimension_rhs=dimension_rhs,
            holds=character_identity
            and class_identities
            and dimension_lhs == dimension_rhs,
        )

    def theorem_c(self, collection: Sequence[Subgroup]) -> TheoremCReport:
        """Which hypotheses of the pairwise-permuting criterion hold.

        Two subgroups permute exactly when their product set is closed, i.e.
        when it already fills the join.
        """
        if not collection:
            raise DecompositionError("hypothesis check needs a non-empty collection")
        group = self.group
        pairs_permute = True
        witness = None
        genera = []
        for i in range(len(collection)):
            for j in range(i + 1, len(collection)):
                h, k = collection[i], collection[j]
                join = subgroup_join(h, k)
                product_size = len(
                    {group.mul(a, b) for a in h.members for b in k.members}
                )
                if product_size != join.order and witness is None:
                    pairs_permute = False
                    witness = (i, j)
                genera.append(self.profile(join).genus)
        pairwise_zero = all(g == 0 for g in genera)
        genus_sum = sum(self.profile(h).genus for h in collection)
        genus_matches = genus_sum == self.genus
        return TheoremCReport(
            pairs_permute=pairs_permute,
            non_permuting_pair=witness,
            pairwise_genera=tuple(genera),
            pairwise_zero=pairwise_zero,
            genus_sum=genus_sum,
            genus_matches=genus_matches,
            applicable=pairs_permute and pairwise_zero and genus_matches,
        )

    def rational_rep(self) -> RationalRepProfile:
        mults = []
        for factor in self.factors:
            rc = factor.rational_class
            numerator = 2 * factor.exponent * factor.dim
            if numerator % rc.dim_w != 0:
                raise NonIntegralMultiplicity(
                    f"2 n dim B = {numerator} not divisible by dim W = {rc.dim_w}"
                )
            mult = numerator // rc.dim_w
            if (mult == 0) != (factor.dim == 0):
                raise DecompositionError("homology support predicate failed")
            mults.append(mult)
        total = sum(m * f.rational_class.dim_w for m, f in zip(mults, self.factors))
        if total != 2 * self.genus:
            raise DecompositionError(
                f"homology degree {total} differs from 2g = {2 * self.genus}"
            )
        return RationalRepProfile(multiplicities=tuple(mults), total_degree=total)

    def search_admissible(
        self,
        max_t: int,
        require_full: bool = False,
        dedupe_conjugates: bool = False,
    ) -> tuple[AdmissibilityReport, ...]:
        subgroups = list(enumerate_subgroups(self.group))
        if dedupe_conjugates:
            subgroups = [h for h in subgroups if _is_conjugacy_canonical(h)]
        results = []
        for size in range(1, max_t + 1):
            for combo in itertools.combinations(subgroups, size):
                report = self.admissibility(combo)
                if not report.admissible:
                    continue
                if require_full:
                    genera = sum(self.profile(h).genus for h in combo)
                    if genera != self.genus:
                        continue
                results.append(report)
        return tuple(results)


def _is_conjugacy_canonical(subgroup: Subgroup) -> bool:
    group = subgroup.parent
    members = subgroup.members
    for g in range(group.order):
        conjugated = tuple(sorted(group.conjugate(m, g) for m in members))
        if conjugated < members:
            return False
    return True


# -- analysis cache and spec-level operations -----------------------------------

_ANALYSES: dict[tuple, ActionAnalysis] = {}


def analyze(
    action: CoveringAction,
    schur_overrides: Mapping[int, int] | None = None,
) -> ActionAnalysis:
    """Shared, cached analysis for one validated action."""
    key = (action, tuple(sorted((schur_overrides or {}).items())))
    analysis = _ANALYSES.get(key)
    if analysis is None:
        analysis = ActionAnalysis.from_action(action, schur_overrides)
        _ANALYSES[key] = analysis
    return analysis


def factor_dimensions(
    action: CoveringAction,
    schur_overrides: Mapping[int, int] | None = None,
) -> tuple[IsotypicalFactor, ...]:
    return analyze(action, schur_overrides).factors


def subgroup_profile(action: CoveringAction, subgroup: Subgroup) -> SubgroupProfile:
    return analyze(action).profile(subgroup)


def check_admissible(
    action: CoveringAction, collection: Sequence[Subgroup]
) -> AdmissibilityReport:
    return analyze(action).admissibility(collection)


def theorem1_report(
    action: CoveringAction, collection: Sequence[Subgroup]
) -> DecompositionReport:
    return analyze(action).theorem1(collection)


def prop2_report(
    action: CoveringAction, h1: Subgroup, h2: Subgroup
) -> Proposition2Report:
    return analyze(action).proposition2(h1, h2)


def prym_dim(action: CoveringAction, subgroup: Subgroup) -> int:
    return analyze(action).prym_dim(subgroup)


def corollary1_check(
    action: CoveringAction, collection: Sequence[Subgroup], k: int
) -> Corollary1Report:
    return analyze(action).corollary1(collection, k)


def prop1_equivalence(
    action: CoveringAction, collection: Sequence[Subgroup]
) -> Proposition1Report:
    return analyze(action).proposition1(collection)


def theoremB_report(
    action: CoveringAction, collection: Sequence[Subgroup]
) -> TheoremBReport:
    return analyze(action).theorem_b(collection)


def rational_rep_profile(action: CoveringAction) -> RationalRepProfile:
    return analyze(action).rational_rep()


def theoremC_check(
    action: CoveringAction, collection: Sequence[Subgroup]
) -> TheoremCReport:
    return analyze(action).theorem_c(collection)


def search_admissible(
    action: CoveringAction,
    max_t: int,
    require_full: bool = False,
    dedupe_conjugates: bool = False,
) -> tuple[AdmissibilityReport, ...]:
    return analyze(action).search_admissible(max_t, require_full, dedupe_conjugates)


# -- join-ambient reinterpretation ------------------------------------------------


def induced_join_analysis(
    action: CoveringAction,
    collection: Sequence[Subgroup],
) -> tuple[ActionAnalysis, tuple[Subgroup, ...], Subgroup]:
    """Reinterpret the covering with the join of the collection acting.

    The branch data of the intermediate covering is recomputed from double
    cosets: each orbit of a branch stabilizer on the cosets of the join with
    a nontrivial point stabilizer becomes a branch point of the new covering.
    Returns the analysis over the join, the collection translated into the
    join's own element indices, and the join as a subgroup of the original
    group.
    """
    group = action.group
    join = reduce(subgroup_join, collection)
    join_group, mapping = subgroup_as_group(join)
    gamma = quotient_genus(action, join)

    stabilizers = []
    for c in action.branch_elements:
        cyc = subgroup_generate(group, (c,))
        seen = [False] * group.order
        for g in range(group.order):
            if seen[g]:
                continue
            for j in join.members:
                jg = group.mul(j, g)
                for m in cyc.members:
                    seen[group.mul(jg, m)] = True
            stab = [
                group.conjugate(m, g)
                for m in cyc.members
                if group.conjugate(m, g) in join
            ]
            if len(stab) > 1:
                translated = sorted(mapping[m] for m in stab)
                size = len(translated)
                generator = next(
                    m for m in translated if join_group.element_order(m) == size
                )
                stabilizers.append(
                    Subgroup(join_group, translated, generators=(generator,))
                )

    analysis = ActionAnalysis(
        group=join_group,
        orbit_genus=gamma,
        stabilizers=tuple(stabilizers),
        genus=total_genus(action),
        ambient="join",
    )
    translated_collection = tuple(
        Subgroup(
            join_group,
            (mapping[m] for m in h.members),
            generators=tuple(mapping[g] for g in h.generators),
        )
        for h in collection
    )
    return analysis, translated_collection, join


# -- fiber products over elementary abelian 2-groups -------------------------------


def _fiber_analysis(genera: Sequence[int]) -> tuple[CoveringAction, tuple[Subgroup, ...]]:
    t = len(genera)
    group = preset_elementary_abelian_2(t)
    gens = [group.generator_names[f"e{i + 1}"] for i in range(t)]
    vector: list[int] = []
    for i, g in enumerate(genera):
        vector.extend([gens[i]] * (2 * g + 2))
    action = CoveringAction(
        group=group,
        orbit_genus=0,
        periods=tuple(2 for _ in vector),
        handles=(),
        branch_elements=tuple(vector),
    )
    deck = tuple(
        subgroup_generate(group, tuple(gens[j] for j in range(t) if j != i))
        for i in range(t)
    )
    return action, deck


def _build_fiber_plan(
    genera: Sequence[int],
    elliptic_count: int | None = None,
    pairing: tuple[tuple[int, ...], ...] | None = None,
) -> FiberPlan:
    genera = tuple(int(g) for g in genera)
    if any(g < 1 for g in genera):
        raise DecompositionError(f"factor genera must be >= 1, got {genera}")
    t = len(genera)
    action, deck = _fiber_analysis(genera)
    analysis = analyze(action)
    genus = analysis.genus
    predicted_genus = 1 - 2**t + 2 ** (t - 1) * (t + sum(genera))
    if genus != predicted_genus:
        raise DecompositionError(
            f"constructed genus {genus} differs from closed formula {predicted_genus}"
        )
    for g_i, k_i in zip(genera, deck):
        profile = analysis.profile(k_i)
        if profile.genus != g_i:
            raise DecompositionError(
                f"deck quotient genus {profile.genus} differs from factor genus {g_i}"
            )
    admissibility = analysis.admissibility(deck)
    if not admissibility.admissible:
        raise DecompositionError("deck collection failed admissibility")
    report = analysis.theorem1(deck)
    predicted_dim_p = 1 + 2 ** (t - 1) * t - 2**t + (2 ** (t - 1) - 1) * sum(genera)
    if report.dim_p != predicted_dim_p:
        raise DecompositionError(
            f"complement dimension {report.dim_p} differs from formula {predicted_dim_p}"
        )
    return FiberPlan(
        genera=genera,
        action=action,
        deck_subgroups=deck,
        genus=genus,
        predicted_genus=predicted_genus,
        dim_p=report.dim_p,
        predicted_dim_p=predicted_dim_p,
        admissibility=admissibility,
        theorem1=report,
        elliptic_count=elliptic_count,
        pairing=pairing,
    )


def fiber_product_action(genera: Sequence[int]) -> FiberPlan:
    """Fiber product of hyperelliptic double covers with disjoint branching.

    Builds the order-2^t elementary abelian action whose deck quotients
    realize the requested genera, checks the closed genus and complement
    formulas against the Riemann-Hurwitz route, and returns the full plan.
    """
    if len(genera) < 2:
        raise TooFewFactors(f"need at least two factor genera, got {len(genera)}")
    return _build_fiber_plan(genera)


def cor3_plan(t: int) -> FiberPlan:
    """Plan a surface whose Jacobian contains t elliptic factors.

    Even t pairs the elliptic curves into genus-2 inputs; odd t adds one
    genus-1 input.  The degenerate t = 2 case is the single genus-2 surface
    itself (complement dimension zero).
    """
    if t < 2:
        raise TooFewFactors(f"need at least two elliptic factors, got {t}")
    if t % 2 == 0:
        s = t // 2
        genera = (2,) * s
        pairing = tuple((j + 1, j + 1 + s) for j in range(s))
        predicted = 1 - 2**s + int(Fraction(3 * t) * Fraction(2) ** (s - 2))
    else:
        s = (t - 1) // 2
        genera = (2,) * s + (1,)
        pairing = tuple((j + 1, j + 1 + s) for j in range(s)) + ((t,),)
        predicted = 1 - 2 ** (s + 1) + int(Fraction(3 * t + 1) * Fraction(2) ** (s - 1))
    plan = _build_fiber_plan(genera, elliptic_count=t, pairing=pairing)
    if plan.genus != predicted:
        raise DecompositionError(
            f"plan genus {plan.genus} differs from parity formula {predicted}"
        )
    if plan.dim_p != plan.genus - t:
        raise DecompositionError(
            f"complement {plan.dim_p} differs from genus - t = {plan.genus - t}"
        )
    return plan
