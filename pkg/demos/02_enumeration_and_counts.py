"""
Generating restricted families
==============================

The enumerator walks a lexicographic search tree and cuts a branch as soon
as a prefix breaks the Dumont rule or already contains a forbidden pattern.
Counts come back as a CountTable.
"""

from dumont import count_table, enumerate_family, family

# all 132-avoiding Dumont permutations of length 6
for p in enumerate_family(family("dumont-first-132-avoiding", n=6)):
    print(p)

# %%
# A family without a length is a template; count_table sweeps n = 0..n_max.
table = count_table(family("dumont-first-132-avoiding"), 12)
print(table.sequence())  # 1, 1, 1, 1, 2, 2, 5, 5, 14, ...

# add a second restriction
print(count_table(family("dumont-first-132-avoiding", ["1-2-3"]), 12).sequence())

# exact containment: one occurrence of 1-2-3 and none of 1-3-2
print(count_table(family("dumont-first-132-avoiding", contain=[("1-2-3", 1)]), 12).sequence())

# %%
# Tables serialize to CSV and JSON and merge by adding counts.
small = count_table(family("dumont-first"), 6)
print(small.to_csv(), end="")
print(small.to_json())

# worker processes split the search by first value; the table is identical.
# The guard matters on platforms that spawn workers by re-importing.
if __name__ == "__main__":
    assert count_table(family("dumont-first"), 10, workers=4) == count_table(family("dumont-first"), 10)
