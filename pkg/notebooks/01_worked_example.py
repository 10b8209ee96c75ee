# %% [markdown]
# # A homeomorphism from Z_3 to Z_5
#
# Both trees get a tile with five leaves.  In base 3 we split the root and
# then the node `0`; in base 5 splitting the root once is enough.  A digit
# string is read off block by block, each block is a leaf, and each leaf is
# swapped for its partner on the other side.

# %%
from padictile import Word, apply, factorize, inverse, solve_diophantine, worked_example_homeo

sol = solve_diophantine(3, 5)
print(sol)

# %%
h = worked_example_homeo()
print("source leaves:", [str(w) for w in h.S.leaves])
print("target leaves:", [str(w) for w in h.S_prime.leaves])
for a, b in sorted(h.tau.mapping.items()):
    print(f"  {a} -> {b}")

# %% [markdown]
# Digits are little-endian: `2,1,0,1` is 2 + 1*3 + 0*9 + 1*27.

# %%
x = Word.parse("2,1,0,1,0,2,0,0,0,0,0,1,0,0", 3)
blocks, rest = factorize(x, h.S)
print(" | ".join(map(str, blocks)), "| rest:", rest)
y, state = apply(h, x)
print("image:", y)

# %% [markdown]
# The inverse is the same machine with the tiles swapped.

# %%
back, _ = apply(inverse(h), y)
print(back == x)
