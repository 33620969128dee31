"""Character tables, inner products, fixed subspaces, rational classes."""

from fractions import Fraction

import pytest

from jacdecomp.characters import (
    GroupAlgebraElement,
    GroupMismatch,
    NonIntegralAverage,
    NonIntegralN,
    NotIrreducible,
    CharacterError,
    central_idempotent,
    character_table,
    fixed_dim,
    frobenius_schur,
    inner_product,
    permutation_character,
    rational_classes,
    regular_character,
    trivial_character,
)
from jacdecomp.cyclotomic import Cyclotomic
from jacdecomp.groups import (
    Permutation,
    build_group,
    conjugacy_classes,
    enumerate_subgroups,
    full_subgroup,
    preset_dihedral,
    preset_elementary_abelian_2,
    preset_quaternion,
    subgroup_generate,
    trivial_subgroup,
)

LIBRARY = [
    preset_dihedral(3),
    preset_dihedral(5),
    preset_dihedral(7),
    preset_elementary_abelian_2(2),
    preset_elementary_abelian_2(3),
    preset_quaternion(),
]


# -- table structure -----------------------------------------------------------


def test_z2_table():
    group = preset_elementary_abelian_2(1)
    table = character_table(group)
    values = {tuple(v.as_integer() for v in row.values) for row in table.irreducibles}
    assert values == {(1, 1), (1, -1)}


def test_dihedral12_degree_pattern():
    table = character_table(preset_dihedral(3))
    assert table.degrees == (1, 1, 1, 1, 2, 2)


def test_z2_cubed_linear_pattern():
    table = character_table(preset_elementary_abelian_2(3))
    assert table.degrees == (1,) * 8
    for row in table.irreducibles:
        assert all(v.as_integer() in (1, -1) for v in row.values)


def test_quaternion_degree_pattern():
    table = character_table(preset_quaternion())
    assert table.degrees == (1, 1, 1, 1, 2)


@pytest.mark.parametrize("group", LIBRARY, ids=lambda g: f"order{g.order}")
def test_table_axioms(group):
    table = character_table(group)
    k = len(table.classes)
    assert len(table.irreducibles) == k
    assert sum(d * d for d in table.degrees) == group.order
    assert table.irreducibles[0] == trivial_character(group)
    # exact row orthonormality
    for i, a in enumerate(table.irreducibles):
        for j, b in enumerate(table.irreducibles):
            assert inner_product(a, b) == (1 if i == j else 0)
    # exact column orthogonality: sum over rows of chi(g) conj(chi(h))
    e = group.exponent
    sizes = table.classes.sizes
    for c1 in range(k):
        for c2 in range(k):
            total = Cyclotomic.zero(e)
            for row in table.irreducibles:
                total = total + row.values[c1] * row.values[c2].conjugate()
            expected = Fraction(group.order, sizes[c1]) if c1 == c2 else 0
            assert total == Cyclotomic.from_rational(expected, e)


@pytest.mark.parametrize("group", LIBRARY, ids=lambda g: f"order{g.order}")
def test_galois_action_permutes_rows(group):
    table = character_table(group)
    rows = {row.values for row in table.irreducibles}
    e = group.exponent
    for k in range(1, e + 1):
        if __import__("math").gcd(k, e) != 1:
            continue
        for row in table.irreducibles:
            assert tuple(v.galois(k) for v in row.values) in rows


@pytest.mark.parametrize("group", LIBRARY, ids=lambda g: f"order{g.order}")
def test_character_values_are_root_of_unity_sums(group):
    """Oracle: reconstruct eigenvalue multiplicities from power values.

    For an irreducible of degree d and an element g of order n, the
    multiplicities m_j of the eigenvalues zeta_n^j recovered by exact Fourier
    inversion over the cyclic group <g> must be non-negative integers summing
    to d, and must reconstruct the character value.
    """
    table = character_table(group)
    classes = table.classes
    e = group.exponent
    for row in table.irreducibles:
        d = row.values[0].as_integer()
        for rep in classes.representatives:
            n = group.element_order(rep)
            power_values = [
                row.values[classes.class_of[group.power(rep, i)]] for i in range(n)
            ]
            reconstructed = Cyclotomic.zero(e)
            total = 0
            for j in range(n):
                m_j = Cyclotomic.zero(e)
                for i in range(n):
                    m_j = m_j + power_values[i] * Cyclotomic.root(e, (-i * j * (e // n)) % e)
                m_j = m_j * Fraction(1, n)
                m_int = m_j.as_rational()
                assert m_int.denominator == 1 and m_int >= 0
                total += int(m_int)
                reconstructed = reconstructed + int(m_int) * Cyclotomic.root(
                    e, (j * (e // n)) % e
                )
            assert total == d
            assert reconstructed == row.values[classes.class_of[rep]]


def closed_form_dihedral_rows(q):
    """Textbook table of the order-4q dihedral group, built without the engine.

    Linear rows are sign patterns on (rotation, reflection); the degree-2 rows
    send r^k to zeta^(jk) + zeta^(-jk) and every reflection to 0.
    """
    group = preset_dihedral(q)
    classes = conjugacy_classes(group)
    e = group.exponent
    r = group.generator_names["r"]
    s = group.generator_names["s"]
    rotations = {group.power(r, k): k for k in range(2 * q)}
    rows = set()
    for sign_r, sign_s in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        values = []
        for rep in classes.representatives:
            if rep in rotations:
                value = sign_r ** (rotations[rep] % 2)
            else:
                # reflection s*r^k: sign_s * sign_r^k
                k = rotations[group.mul(s, rep)]  # s * (s r^k) = r^k
                value = sign_s * sign_r**k
            values.append(Cyclotomic.from_rational(value, e))
        rows.add(tuple(values))
    for j in range(1, q):
        values = []
        for rep in classes.representatives:
            if rep in rotations:
                k = rotations[rep]
                values.append(Cyclotomic.root(e, j * k) + Cyclotomic.root(e, -j * k))
            else:
                values.append(Cyclotomic.zero(e))
        rows.add(tuple(values))
    return rows


@pytest.mark.parametrize("q", [3, 5, 7])
def test_dihedral_table_matches_closed_form(q):
    table = character_table(preset_dihedral(q))
    assert {row.values for row in table.irreducibles} == closed_form_dihedral_rows(q)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_elementary_abelian_table_matches_closed_form(t):
    """Rows are exactly the sign characters determined on the generators."""
    import itertools

    group = preset_elementary_abelian_2(t)
    classes = conjugacy_classes(group)
    gens = [group.generator_names[f"e{i + 1}"] for i in range(t)]
    expected = set()
    for signs in itertools.product((1, -1), repeat=t):
        values = []
        for rep in classes.representatives:
            value = 1
            # decompose the element over the generators by tracking which
            # transposed pairs moved
            for i, g in enumerate(gens):
                if group.elements[rep].images[2 * i] != 2 * i:
                    value *= signs[i]
            values.append(Cyclotomic.from_rational(value, group.exponent))
        expected.add(tuple(values))
    table = character_table(group)
    assert {row.values for row in table.irreducibles} == expected


def alternating_group_4():
    """A4 on 4 points: degrees (1,1,1,3) with a Galois-paired linear orbit."""
    return build_group(
        [Permutation((1, 2, 0, 3)), Permutation((0, 2, 3, 1))], ["a", "b"]
    )


def symmetric_group_4():
    return build_group(
        [Permutation((1, 0, 2, 3)), Permutation((1, 2, 3, 0))], ["t", "c"]
    )


def test_alternating4_table_matches_closed_form():
    group = alternating_group_4()
    assert group.order == 12
    table = character_table(group)
    assert table.degrees == (1, 1, 1, 3)
    classes = conjugacy_classes(group)
    e = group.exponent
    a = group.generator_names["a"]  # a 3-cycle
    a2 = group.power(a, 2)
    omega = Cyclotomic.root(e, e // 3)
    expected = set()
    for first, second in ((omega, omega * omega), (omega * omega, omega)):
        values = []
        for rep in classes.representatives:
            if group.element_order(rep) in (1, 2):
                values.append(Cyclotomic.one(e))
            elif rep in conjugacy_classes(group).classes[classes.class_of[a]]:
                values.append(first)
            else:
                values.append(second)
        expected.add(tuple(values))
    trivial = tuple(Cyclotomic.one(e) for _ in classes.representatives)
    standard = tuple(
        Cyclotomic.from_rational(
            {1: 3, 2: -1, 3: 0}[group.element_order(rep)], e
        )
        for rep in classes.representatives
    )
    expected.update({trivial, standard})
    assert {row.values for row in table.irreducibles} == expected
    # the two complex linear characters form one rational class of field degree 2
    shapes = sorted(
        (rc.degree, rc.field_degree) for rc in rational_classes(table)
    )
    assert shapes == [(1, 1), (1, 2), (3, 1)]


def test_symmetric4_table_matches_closed_form():
    group = symmetric_group_4()
    assert group.order == 24
    table = character_table(group)
    assert table.degrees == (1, 1, 2, 3, 3)
    classes = conjugacy_classes(group)
    e = group.exponent
    # classes identified by (element order, class size), unique for S4
    known = {
        (1, 1): (1, 1, 2, 3, 3),
        (2, 6): (1, -1, 0, 1, -1),
        (2, 3): (1, 1, 2, -1, -1),
        (3, 8): (1, 1, -1, 0, 0),
        (4, 6): (1, -1, 0, -1, 1),
    }
    columns = [
        known[(group.element_order(rep), size)]
        for rep, size in zip(classes.representatives, classes.sizes)
    ]
    expected = {
        tuple(Cyclotomic.from_rational(col[i], e) for col in columns)
        for i in range(5)
    }
    assert {row.values for row in table.irreducibles} == expected


def test_quaternion_table_matches_closed_form():
    group = preset_quaternion()
    table = character_table(group)
    classes = conjugacy_classes(group)
    i = group.generator_names["i"]
    j = group.generator_names["j"]
    minus_one = group.power(i, 2)
    k = group.mul(i, j)
    by_rep = {}
    for rep in classes.representatives:
        by_rep[rep] = rep
    expected = set()
    for sign_i, sign_j in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        values = []
        for rep in classes.representatives:
            if rep == 0 or rep == minus_one:
                value = 1
            elif rep in (i, group.inv(i)):
                value = sign_i
            elif rep in (j, group.inv(j)):
                value = sign_j
            else:
                value = sign_i * sign_j
            values.append(Cyclotomic.from_rational(value, group.exponent))
        expected.add(tuple(values))
    two_dim = []
    for rep in classes.representatives:
        if rep == 0:
            two_dim.append(Cyclotomic.from_rational(2, group.exponent))
        elif rep == minus_one:
            two_dim.append(Cyclotomic.from_rational(-2, group.exponent))
        else:
            two_dim.append(Cyclotomic.zero(group.exponent))
    expected.add(tuple(two_dim))
    assert {row.values for row in table.irreducibles} == expected


# -- inner products and standard characters ------------------------------------------


def test_regular_character_multiplicities():
    group = preset_dihedral(3)
    table = character_table(group)
    reg = regular_character(group)
    for row, d in zip(table.irreducibles, table.degrees):
        assert inner_product(reg, row) == d
        assert inner_product(row, reg) == d


def test_inner_product_group_mismatch():
    with pytest.raises(GroupMismatch):
        inner_product(
            trivial_character(preset_dihedral(3)),
            trivial_character(preset_dihedral(5)),
        )


def test_permutation_character_full_and_trivial_subgroups():
    group = preset_dihedral(3)
    assert permutation_character(group, full_subgroup(group)) == trivial_character(group)
    assert permutation_character(group, trivial_subgroup(group)) == regular_character(group)


def test_permutation_character_rotation_subgroup_values():
    group = preset_dihedral(3)
    r = group.generator_names["r"]
    chi = permutation_character(group, subgroup_generate(group, (r,)))
    classes = conjugacy_classes(group)
    for rep, value in zip(classes.representatives, chi.values):
        expected = 2 if group.element_order(rep) == 1 or rep in subgroup_generate(group, (r,)) else 0
        assert value == Cyclotomic.from_rational(expected, group.exponent)
    assert inner_product(chi, trivial_character(group)) == 1


def test_permutation_characters_decompose_with_nonneg_integers():
    group = preset_dihedral(3)
    table = character_table(group)
    for subgroup in enumerate_subgroups(group):
        chi = permutation_character(group, subgroup)
        recombined = None
        for row in table.irreducibles:
            mult = inner_product(chi, row)
            assert mult.denominator == 1 and mult >= 0
            term = int(mult) * row
            recombined = term if recombined is None else recombined + term
        assert recombined == chi


def test_permutation_characters_decompose_into_rational_classes():
    """rho_H rebuilt exactly as sum of n_l^H copies of each rational class."""
    for group in (preset_dihedral(5), preset_quaternion()):
        classes = rational_classes(character_table(group))
        for subgroup in enumerate_subgroups(group):
            chi = permutation_character(group, subgroup)
            recombined = 0 * chi
            for rc in classes:
                fixed = fixed_dim(rc.character, subgroup)
                assert fixed % rc.schur_index == 0
                recombined = recombined + (fixed // rc.schur_index) * rc.rational_character
            assert recombined == chi


# -- fixed dimensions ---------------------------------------------------------------


def dihedral_label_map(q):
    """Identify the five nontrivial rational classes of the 4q dihedral table."""
    group = preset_dihedral(q)
    table = character_table(group)
    classes = rational_classes(table)
    class_of = table.classes.class_of
    r_cls = class_of[group.generator_names["r"]]
    s_cls = class_of[group.generator_names["s"]]
    e = group.exponent
    labels = {}
    for idx, rc in enumerate(classes):
        chi = rc.character
        if rc.is_trivial():
            labels["V1"] = idx
        elif rc.degree == 1:
            pair = (chi.values[r_cls].as_integer(), chi.values[s_cls].as_integer())
            labels[{(1, -1): "V2", (-1, 1): "V3", (-1, -1): "V4"}[pair]] = idx
        else:
            member_values = {
                table.irreducibles[j].values[r_cls] for j in rc.member_indices
            }
            if Cyclotomic.from_terms({1: 1, -1: 1}, e) in member_values:
                labels["V5"] = idx
            else:
                assert Cyclotomic.from_terms({2: 1, -2: 1}, e) in member_values
                labels["V6"] = idx
    assert len(labels) == 6
    return group, table, classes, labels


@pytest.mark.parametrize("q", [3, 5, 7])
def test_fixed_dims_match_reference_table(q):
    group, table, classes, labels = dihedral_label_map(q)
    r = group.generator_names["r"]
    s = group.generator_names["s"]
    h1 = subgroup_generate(group, (s,))
    h2 = subgroup_generate(group, (group.mul(s, r),))
    h3 = subgroup_generate(group, (r,))
    expected = {
        "H1": (0, 1, 0, 1, 1),
        "H2": (0, 0, 1, 1, 1),
        "H3": (1, 0, 0, 0, 0),
    }
    for name, subgroup in (("H1", h1), ("H2", h2), ("H3", h3)):
        row = tuple(
            fixed_dim(classes[labels[f"V{j}"]].character, subgroup) for j in range(2, 7)
        )
        assert row == expected[name]


@pytest.mark.parametrize("q", [3, 5, 7])
def test_fixed_dim_of_central_involution_on_v6_is_two(q):
    """The r^q cell of V6: direct averaging oracle, independent of fixed_dim."""
    group, table, classes, labels = dihedral_label_map(q)
    r = group.generator_names["r"]
    chi = classes[labels["V6"]].character
    h4 = subgroup_generate(group, (group.power(r, q),))
    class_of = table.classes.class_of
    total = Cyclotomic.zero(group.exponent)
    for h in h4.members:
        total = total + chi.values[class_of[h]]
    oracle = (total * Fraction(1, h4.order)).as_rational()
    assert oracle == 2
    assert fixed_dim(chi, h4) == 2


def test_fixed_dim_trivial_subgroup_gives_degree():
    group = preset_dihedral(3)
    table = character_table(group)
    for row, d in zip(table.irreducibles, table.degrees):
        assert fixed_dim(row, trivial_subgroup(group)) == d


def test_fixed_dim_non_character_raises():
    group = preset_dihedral(3)
    half = trivial_character(group) * Fraction(1, 2)
    with pytest.raises(NonIntegralAverage):
        fixed_dim(half, subgroup_generate(group, (group.generator_names["s"],)))


def test_fixed_dim_two_routes_agree_everywhere():
    for group in (preset_dihedral(3), preset_quaternion()):
        table = character_table(group)
        classes = conjugacy_classes(group)
        for subgroup in enumerate_subgroups(group):
            for row in table.irreducibles:
                total = Cyclotomic.zero(group.exponent)
                for h in subgroup.members:
                    total = total + row.values[classes.class_of[h]]
                average = (total * Fraction(1, subgroup.order)).as_rational()
                induction = inner_product(permutation_character(group, subgroup), row)
                assert average == induction == fixed_dim(row, subgroup)


# -- Frobenius-Schur -------------------------------------------------------------------


def test_frobenius_schur_trivial():
    group = preset_dihedral(3)
    assert frobenius_schur(trivial_character(group)) == 1


def test_frobenius_schur_dihedral_degree2_real():
    table = character_table(preset_dihedral(3))
    for row, d in zip(table.irreducibles, table.degrees):
        if d == 2:
            assert frobenius_schur(row) == 1


def test_frobenius_schur_quaternion_degree2_quaternionic():
    table = character_table(preset_quaternion())
    row = table.irreducibles[table.degrees.index(2)]
    assert frobenius_schur(row) == -1


def test_frobenius_schur_requires_irreducible():
    group = preset_dihedral(3)
    with pytest.raises(NotIrreducible):
        frobenius_schur(regular_character(group))


# -- rational classes -------------------------------------------------------------------


def test_rational_classes_dihedral12_all_singletons():
    table = character_table(preset_dihedral(3))
    classes = rational_classes(table)
    assert len(classes) == 6
    assert all(rc.field_degree == 1 for rc in classes)
    assert classes[0].is_trivial()


def test_rational_classes_dihedral20_orbit_structure():
    table = character_table(preset_dihedral(5))
    classes = rational_classes(table)
    assert len(classes) == 6
    shapes = sorted((rc.degree, rc.field_degree) for rc in classes)
    assert shapes == [(1, 1), (1, 1), (1, 1), (1, 1), (2, 2), (2, 2)]
    for rc in classes:
        assert rc.schur_index == 1
        assert rc.rational_character.values[0].as_integer() == rc.dim_w


def test_rational_classes_elementary_abelian():
    table = character_table(preset_elementary_abelian_2(3))
    classes = rational_classes(table)
    assert len(classes) == 8
    assert all(rc.schur_index == 1 and rc.n == 1 and rc.field_degree == 1 for rc in classes)


def test_rational_classes_quaternion_heuristic_schur_index():
    table = character_table(preset_quaternion())
    classes = rational_classes(table)
    two_dim = [rc for rc in classes if rc.degree == 2]
    assert len(two_dim) == 1
    rc = two_dim[0]
    assert rc.schur_index == 2
    assert rc.schur_source == "heuristic"
    assert rc.n == 1
    assert rc.dim_w == 4


def test_rational_classes_override_is_respected_and_tagged():
    table = character_table(preset_quaternion())
    rep = next(
        rc.representative for rc in rational_classes(table) if rc.degree == 2
    )
    classes = rational_classes(table, {rep: 1})
    rc = next(rc for rc in classes if rc.degree == 2)
    assert rc.schur_index == 1
    assert rc.schur_source == "override"
    assert rc.n == 2


def test_rational_classes_override_rejections():
    table = character_table(preset_dihedral(3))
    degree_one_rep = 0
    with pytest.raises(NonIntegralN):
        rational_classes(table, {degree_one_rep: 2})
    table20 = character_table(preset_dihedral(5))
    non_rep = rational_classes(table20)[-1].member_indices[-1]
    with pytest.raises(CharacterError):
        rational_classes(table20, {non_rep: 1})


def test_rational_character_values_are_rational():
    table = character_table(preset_dihedral(7))
    for rc in rational_classes(table):
        for value in rc.rational_character.values:
            assert value.is_rational()


# -- central idempotents -------------------------------------------------------------------


def test_trivial_idempotent_is_averaging_element():
    group = preset_dihedral(3)
    classes = rational_classes(character_table(group))
    idem = central_idempotent(classes[0])
    assert all(c == Fraction(1, group.order) for c in idem.coeffs)


@pytest.mark.parametrize("group_builder", [
    lambda: preset_dihedral(3),
    lambda: preset_dihedral(5),  # has Galois orbits of size 2
    lambda: preset_elementary_abelian_2(3),
    lambda: preset_quaternion(),
    alternating_group_4,  # Galois-paired linear characters
])
def test_central_idempotent_suite(group_builder):
    group = group_builder()
    classes = rational_classes(character_table(group))
    idems = [central_idempotent(rc) for rc in classes]
    total = GroupAlgebraElement.zero(group)
    for e_l in idems:
        assert e_l * e_l == e_l
        total = total + e_l
    assert total == GroupAlgebraElement.one(group)
    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            assert idems[i] * idems[j] == GroupAlgebraElement.zero(group)


def test_group_algebra_convolution_identity():
    group = preset_dihedral(3)
    one = GroupAlgebraElement.one(group)
    coeffs = [Fraction(0)] * group.order
    coeffs[group.generator_names["r"]] = Fraction(2, 3)
    coeffs[group.generator_names["s"]] = Fraction(-1)
    x = GroupAlgebraElement(group, tuple(coeffs))
    assert one * x == x == x * one
    assert x.support() == tuple(sorted((group.generator_names["r"], group.generator_names["s"])))


# -- class function arithmetic ----------------------------------------------------------------


def test_class_function_arithmetic_and_scaling():
    group = preset_dihedral(3)
    triv = trivial_character(group)
    reg = regular_character(group)
    combo = reg + 2 * triv
    assert combo.value_on_element(0).as_integer() == group.order + 2
    assert combo - reg == 2 * triv
    assert (0 * reg) == reg - reg
