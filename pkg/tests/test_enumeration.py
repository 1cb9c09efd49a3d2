import pytest

from cnat import (
    BoundExceeded,
    OracleBoundExceeded,
    Verdict,
    count_all_short,
    count_by_sign,
    count_cnats,
    enumerate_cnats,
    from_matrix,
    leaf_permutation,
    linear_extensions,
    naive_enumerate,
    sign,
    tree_shapes,
    verify_theorem,
)
from conftest import cnats, key
from oracles import bessel_log_counts, brute_cnat_keys, brute_sign

# T_1..T_7 from the exponential-squared generating function -log J0(2 sqrt x)
T = dict(enumerate(bessel_log_counts(7), start=1))


def test_bessel_oracle_values():
    # frozen so a broken oracle cannot silently agree with a broken generator
    assert [T[n] for n in range(1, 8)] == [1, 1, 4, 33, 456, 9460, 274800]


def closed_form(n):
    if n % 2:
        return T[n] // 2, T[n] // 2
    p = n // 2
    s = (-1) ** p * T[p]
    return (T[n] + s) // 2, (T[n] - s) // 2


# -- shapes and labelings ---------------------------------------------------

def _catalan_count(k):
    # complete binary trees with k leaves, by the split recurrence
    if k == 1:
        return 1
    return sum(_catalan_count(i) * _catalan_count(k - i) for i in range(1, k))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)])
def test_tree_shapes(n, count):
    shapes = list(tree_shapes(n))
    assert len(shapes) == count == _catalan_count(n)
    assert len(set(shapes)) == count


def test_linear_extensions():
    assert list(linear_extensions([None])) == [(1,)]
    assert list(linear_extensions([None, 0, 1])) == [(1, 2, 3)]
    # two roots with one child each: 4!/(2*2) = 6
    ext = list(linear_extensions([None, None, 0, 1]))
    assert len(ext) == 6 and ext == sorted(ext)
    for lab in ext:
        assert lab[2] > lab[0] and lab[3] > lab[1]


# -- enumeration ------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_generating_function(n):
    assert len(cnats(n)) == T[n]


def test_size_seven(size7_pass):
    assert size7_pass["total"] == T[7]
    assert size7_pass["distinct"] == T[7]


@pytest.mark.parametrize("n", range(1, 7))
def test_no_duplicates(n):
    ts = cnats(n)
    assert len({key(t) for t in ts}) == len(ts)


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_equivalence(n):
    generated = {key(t) for t in cnats(n)}
    assert generated == {key(t) for t in naive_enumerate(n)}
    assert generated == brute_cnat_keys(n)


def test_naive_small():
    assert [t.rows() for t in naive_enumerate(2)] == [["11", "10"]]
    assert [t.rows() for t in naive_enumerate(1)] == [["1"]]
    with pytest.raises(OracleBoundExceeded):
        next(naive_enumerate(5))


def test_deterministic_order():
    assert [key(t) for t in enumerate_cnats(5)] == [key(t) for t in enumerate_cnats(5)]


def test_bounds(monkeypatch):
    with pytest.raises(BoundExceeded):
        next(enumerate_cnats(9))
    with pytest.raises(BoundExceeded):
        next(enumerate_cnats(4, bound=3))
    monkeypatch.setenv("CNAT_MAX_SIZE", "3")
    with pytest.raises(BoundExceeded):
        count_by_sign(4)
    assert count_cnats(3) == 4


# -- tallies ----------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 5))
def test_tally_against_naive(n):
    signs = [brute_sign(leaf_permutation(t)) for t in naive_enumerate(n)]
    c = count_by_sign(n)
    assert (c.plus, c.minus) == (signs.count(1), signs.count(-1))


@pytest.mark.parametrize(
    "n, plus, minus",
    [(2, 0, 1), (3, 2, 2), (4, 17, 16), (5, 228, 228), (6, 4728, 4732)],
)
def test_sign_counts(n, plus, minus):
    assert (plus, minus) == closed_form(n)
    c = count_by_sign(n)
    assert (c.plus, c.minus) == (plus, minus)
    assert c.total == T[n]


def test_sign_counts_seven(size7_pass):
    assert (size7_pass["plus"], size7_pass["minus"]) == closed_form(7) == (137400, 137400)


def test_parallel_tally_matches():
    assert count_by_sign(5, jobs=2) == count_by_sign(5)


def test_sign_counts_merge():
    a = count_by_sign(4)
    assert (a + a).total == 2 * a.total


@pytest.mark.parametrize("n", range(2, 7))
def test_verify_theorem(n):
    r = verify_theorem(n)
    assert r.verdict is Verdict.PASS
    assert (r.expected_plus, r.expected_minus) == closed_form(n)


def test_verify_size_one():
    r = verify_theorem(1)
    assert r.verdict is Verdict.NOT_APPLICABLE
    assert r.expected_plus is None
    assert any("n/a" in line for line in r.lines())


@pytest.mark.parametrize("n, expect", [(1, 1), (2, 1), (3, 0), (4, 1), (5, 0), (6, 4)])
def test_count_all_short(n, expect):
    assert count_all_short(n) == expect
    if n % 2 == 0:
        assert expect == T[n // 2]


@pytest.mark.parametrize("n", range(1, 6))
def test_every_emitted_tree_revalidates(n):
    for t in cnats(n):
        assert from_matrix(t.rows()) == t
        assert sign(leaf_permutation(t)) in (1, -1)
