# %% [markdown]
# # Tiles, and two ways to recognise one
#
# A tile is a finite subtree where every node is either a leaf or split into
# all of its children.  Equivalently its leaves cut the ring into disjoint
# balls covering everything.  Here we count tiles and check the two
# descriptions against each other on every small subtree.

# %%
import collections
import time

import numpy as np

from padictile import enumerate_tiles, explicit_params, explicit_tile
from padictile.census import census

# %%
counts = collections.Counter(len(S) for S in enumerate_tiles(2, 7))
print(sorted(counts.items()))  # Catalan numbers

# %% [markdown]
# The explicit tile with s splits fills every level up to L - 2 and then
# splits the first few words on level L - 1.

# %%
for s in range(1, 6):
    prm = explicit_params(3, s)
    print(s, prm.L, prm.n_short, prm.n_long, [str(w) for w in explicit_tile(3, s).leaves])

# %% [markdown]
# The census enumerates subtrees as bit masks and runs both predicates in a
# compiled loop.

# %%
for p, depth in [(2, 3), (3, 2), (2, 4), (3, 3)]:
    t = time.perf_counter()
    r = census(p, depth)
    print(p, depth, r.subtrees, r.tiles, r.all_agree, f"{time.perf_counter() - t:.1f}s")

# %%
lengths = np.array([len(w) for w in explicit_tile(2, 20).leaves])
print(np.bincount(lengths), (2.0 ** -lengths).sum())  # Kraft sum is exactly 1
