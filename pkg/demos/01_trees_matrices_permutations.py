# %% [markdown]
# # CNATs as grids, matrices and permutations
#
# A complete non-ambiguous tree of size n is a set of 2n - 1 dots on an
# n x n grid. Here we build the size-5 example, look at it, and read off its
# matrix, leaf permutation and determinant.

# %%
import numpy as np

from cnat import (
    classify_leaves,
    from_matrix,
    inversions,
    leaf_permutation,
    matrix_determinant,
    sign,
    to_matrix,
)
from cnat.render import ascii_grid

t = from_matrix(["10110", "11001", "01000", "10000", "00100"])
print(ascii_grid(t))

# %% [markdown]
# Filled circles are internal dots, hollow ones leaves. Each row and each
# column holds exactly one leaf, so the leaves spell out a permutation.

# %%
perm = leaf_permutation(t)
print("pi(T) =", perm, " inversions:", inversions(perm), " sign:", sign(perm))

# %% [markdown]
# The 0/1 matrix has the same determinant as the sign of that permutation.
# The exact integer determinant is compared against numpy's float one.

# %%
m = to_matrix(t)
print(m)
print("exact det:", matrix_determinant(m), " numpy det:", round(np.linalg.det(m.astype(float))))

# %% [markdown]
# Leaves come in two flavours: left leaves hang below their parent, right
# leaves sit to its right. A leaf next to its parent is short, otherwise long.

# %%
for info in classify_leaves(t):
    print(info.dot, info.side.value, info.reach.value, "parent", info.parent)

# %% [markdown]
# Invalid grids raise an error naming the rule and the cell.

# %%
from cnat import CnatError

try:
    from_matrix(["10", "01"])
except CnatError as exc:
    print(type(exc).__name__, exc.dot, "-", exc)
