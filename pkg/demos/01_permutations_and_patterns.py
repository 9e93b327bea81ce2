"""
Permutations, Dumont predicates and vincular patterns
=====================================================

The basic objects: one-line permutations, the two Dumont conditions, and
pattern occurrences with or without adjacency requirements.
"""

from itertools import permutations

from dumont import Permutation, is_dumont_first, is_dumont_second, new_permutation, occurrences, parse_pattern

# a permutation is validated on construction
p = new_permutation([3, 5, 4, 2, 1])
print(p, p.values)

# bad input names the first offending position
try:
    new_permutation([1, 1])
except ValueError as exc:
    print("rejected:", exc)

# first kind: even values step down, odd values step up (or end the word)
first = [Permutation(v) for v in permutations(range(1, 5)) if is_dumont_first(v)]
print("first kind, n=4: ", [str(q) for q in first])

# second kind: p_i < i at even positions, p_i >= i at odd ones
second = [Permutation(v) for v in permutations(range(1, 5)) if is_dumont_second(v)]
print("second kind, n=4:", [str(q) for q in second])

# %%
# Dash notation. A missing dash means the two letters must sit next to
# each other in the host permutation.
classical = parse_pattern("2-3-1")
vincular = parse_pattern("23-1")
print(classical.letters, classical.adjacent)
print(vincular.letters, vincular.adjacent)

# 35421 has four 2-3-1 occurrences but only two where the "23" is adjacent
print(occurrences(p, classical), occurrences(p, vincular))
