"""
Closed forms next to brute force
================================

Each catalog entry expands to a series. Placing its coefficients beside the
enumerator's counts is the whole verification idea in miniature.
"""

from dumont import count_table, family, formula

N = 12


def side_by_side(label, oracle, predicted):
    print(label)
    print("  enumerated:", oracle)
    print("  formula:   ", predicted)
    print("  agree:     ", oracle == predicted)


for k in (3, 4, 5):
    avoid = ["-".join(str(i) for i in range(1, k + 1))]
    side_by_side(
        f"avoid 1-3-2 and {avoid[0]}",
        count_table(family("dumont-first-132-avoiding", avoid), N).sequence(),
        formula("d-incr", N, k=k).integers(),
    )

side_by_side(
    "avoid 1-3-2 and 2-3-4-5-1 (Pell numbers)",
    count_table(family("dumont-first-132-avoiding", ["2-3-4-5-1"]), N).sequence(),
    formula("d-23k1", N, k=5).integers(),
)

side_by_side(
    "exactly one 21-3",
    count_table(family("dumont-first-132-avoiding", contain=[("21-3", 1)]), 10).sequence(),
    formula("contain-once-gen-21-3k", 10, k=3).integers(),
)

# %%
# Worked examples are kept verbatim, which is how their slips show up.
side_by_side(
    "avoid 1-3-2 and 2-1-3, printed example",
    count_table(family("dumont-first-132-avoiding", ["2-1-3"]), 8).sequence(),
    formula("example-d213", 8).integers(),
)
