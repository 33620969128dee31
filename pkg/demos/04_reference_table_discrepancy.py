"""Walkthrough: a reference table cell the engine computes differently.

The bundled dihedral scenarios ship a reference fixed-dimension table for the
collection {<s>, <r^q>}.  The reference gives the central involution a
one-dimensional fixed space on the second degree-2 representation, but that
representation sends r^q to the identity matrix, so its fixed space is the
whole plane: the engine computes 2, through two independent routes.  Under
the computed value the collection fails the admissibility inequality for the
acting group.  The analyze command surfaces exactly this as a discrepancy
note with exit code 2, and the join-ambient run shows the collection is not
admissible for the group the two subgroups generate either.

Run:  python demos/04_reference_table_discrepancy.py
"""

from jacdecomp import (
    CoveringAction,
    analyze,
    fixed_dim,
    induced_join_analysis,
    preset_dihedral,
    subgroup_generate,
)
from jacdecomp.cli import main

q = 3
group = preset_dihedral(q)
r = group.generator_names["r"]
s = group.generator_names["s"]
sr = group.mul(s, r)
action = CoveringAction(
    group, 0, (2, 2, 2, 2, 2 * q, 2 * q), (), (s, s, sr, sr, r, group.inv(r))
)
analysis = analyze(action)

h1 = subgroup_generate(group, (s,))
h4 = subgroup_generate(group, (group.power(r, q),))

# locate the degree-2 class whose r-eigenvalues are primitive q-th roots:
# its character value on r^q is 2, so the fixed space under <r^q> is 2-dim
class_of = analysis.table.classes.class_of
for rc in analysis.rational_classes:
    if rc.degree == 2:
        value_at_rq = rc.character.values[class_of[group.power(r, q)]]
        dim = fixed_dim(rc.character, h4)
        print(f"degree-2 class: value at r^q = {value_at_rq}, fixed dim under <r^q> = {dim}")

report = analysis.admissibility([h1, h4])
print("\nacting-group admissibility of {<s>, <r^q>}:", report.admissible)
print("per-class sums:", report.sums, "vs degrees:", report.degrees)

# reinterpret the covering with the join <s, r^q> (a Klein group) acting
join_analysis, translated, join = induced_join_analysis(action, [h1, h4])
print(f"\njoin has order {join.order}, quotient genus {join_analysis.orbit_genus}")
print("join-ambient admissibility:", join_analysis.admissibility(translated).admissible)
print("join factor dims:", [f.dim for f in join_analysis.factors])

# the CLI pins this behavior: discrepancy note plus exit code 2
print("\n--- analyze d2q?q=3 --collections h1h4 (tail of the report) ---")
code = main(["analyze", "d2q?q=3", "--collections", "h1h4"])
print(f"--- exit code: {code} ---")
