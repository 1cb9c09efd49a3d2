# %% [markdown]
# # Counting CNATs by the sign of their leaf permutation
#
# For odd n > 1 the two signs split T_n evenly. For n = 2p the all-short
# trees, all of sign (-1)^p and in bijection with size-p trees, tip the
# balance by T_p.

# %%
from cnat import count_all_short, expand, enumerate_cnats, leaf_permutation, reduce, verify_theorem

for n in range(2, 7):
    print("\n".join(verify_theorem(n).lines()))
    print()

# %% [markdown]
# The all-short trees of size 2p shrink to size-p trees by dropping every
# leaf along with its row or column, and `expand` undoes it.

# %%
for t in enumerate_cnats(3):
    big = expand(t)
    assert reduce(big) == t
    print(leaf_permutation(t), "->", leaf_permutation(big))
print("all-short CNATs of size 6:", count_all_short(6))

# %% [markdown]
# Size 7 takes some seconds; `count_by_sign(7, jobs=k)` spreads the tree
# shapes over k processes.
