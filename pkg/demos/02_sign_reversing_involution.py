# %% [markdown]
# # The involution phi
#
# Two left leaves interact when one sits strictly between the other and that
# other's parent, row-wise (columns for right leaves). Swapping their rows
# keeps the grid a valid CNAT and transposes two letters of the leaf
# permutation, so the sign flips.

# %%
from cnat import (
    active_pair,
    cnat_from_dots,
    enumerate_cnats,
    is_all_short,
    leaf_permutation,
    phi,
    sign,
)
from cnat.render import ascii_grid

t = cnat_from_dots(6, [(1, 1), (1, 3), (2, 1), (2, 2), (2, 5),
                       (4, 1), (3, 2), (6, 3), (1, 4), (5, 5), (2, 6)])
print(ascii_grid(t))
pair = active_pair(t)
print("active pair:", pair.side.value, pair.first, pair.second)

# %%
u = phi(t)
print(ascii_grid(u))
print(leaf_permutation(t), sign(leaf_permutation(t)), "->", leaf_permutation(u), sign(leaf_permutation(u)))
print("phi(phi(T)) == T:", phi(u) == t)

# %% [markdown]
# Over every CNAT of size 6: the fixed points are exactly the trees whose
# leaves are all short, and everything else is paired with opposite sign.

# %%
fixed = moved = 0
for t in enumerate_cnats(6):
    u = phi(t)
    assert phi(u) == t
    if u == t:
        assert is_all_short(t)
        fixed += 1
    else:
        assert sign(leaf_permutation(u)) == -sign(leaf_permutation(t))
        moved += 1
print(f"{fixed} fixed points, {moved // 2} swapped pairs")
