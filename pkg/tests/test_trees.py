import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operadlab.config_space import Permutation
from operadlab.errors import BoundExceededError, ContractionError, SlotError, TreeError
from operadlab.trees import (
    ColoredLeaf,
    ColoredTree,
    LabeledTree,
    act_permutation,
    all_trees,
    check_colored,
    check_tree,
    colored_corolla,
    colored_edge_count,
    colored_stratum_dimension,
    contract,
    corolla,
    enumerate_colored_trees,
    enumerate_trees,
    face_poset,
    graft,
    internal_edge_count,
    is_admissible,
    make_colored,
    make_tree,
    stratum_dimension,
)


def dfact(k):
    return math.prod(range(k, 0, -2))


def laminar(sets):
    return all(a <= b or b <= a or not (a & b) for a, b in itertools.combinations(sets, 2))


def laminar_count(n, k):
    """Independent oracle: trees with k internal edges <-> laminar families of k clusters."""
    leaves = range(1, n + 1)
    clusters = [frozenset(c) for r in range(2, n) for c in itertools.combinations(leaves, r)]
    return sum(1 for fam in itertools.combinations(clusters, k) if laminar(fam))


def colored_oracle(p, q):
    """Count coloured trees as laminar families of coloured clusters with per-vertex checks."""
    leaves = [("c", i) for i in range(1, p + 1)] + [("o", j) for j in range(1, q + 1)]
    whole = frozenset(leaves)
    weight = lambda s: sum(2 if c == "c" else 1 for c, _ in s)  # noqa: E731
    subsets = [frozenset(s) for r in range(1, len(leaves) + 1) for s in itertools.combinations(leaves, r)]
    items = [(s, "c") for s in subsets if len(s) >= 2 and all(c == "c" for c, _ in s)]
    items += [(s, "o") for s in subsets if s != whole and weight(s) >= 2]
    root = (whole, "o")

    def below(a, b):  # a strictly below b
        return (a[0] < b[0]) or (a[0] == b[0] and a[1] == "c" and b[1] == "o")

    total = 0
    for r in range(len(items) + 1):
        for fam in itertools.combinations(items, r):
            if not laminar({s for s, _ in fam}):
                continue
            nodes = list(fam) + [root]
            if any(a[1] == "o" and b[1] == "c" and below(a, b) for a in nodes for b in nodes):
                continue
            ok = True
            for v in nodes:
                kids = [a for a in nodes if below(a, v) and not any(below(a, w) and below(w, v) for w in nodes)]
                covered = set().union(*[a[0] for a in kids]) if kids else set()
                colours = [a[1] for a in kids] + [c for c, _ in v[0] - covered]
                pc, qc = colours.count("c"), colours.count("o")
                if v[1] == "c" and (qc or pc < 2):
                    ok = False
                if v[1] == "o" and 2 * pc + qc < 2:
                    ok = False
            total += ok
    return total


def test_basic_counts():
    assert len(enumerate_trees(2, 0)) == 1
    assert len(enumerate_trees(3, 1)) == 3
    assert len(enumerate_trees(4, 2)) == 15
    assert enumerate_trees(3, 2) == [] and enumerate_trees(4, -1) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_counts_match_laminar_oracle(n):
    for k in range(n - 1):
        assert len(enumerate_trees(n, k)) == laminar_count(n, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_binary_trees_double_factorial(n):
    assert len(enumerate_trees(n, n - 2)) == dfact(2 * n - 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_dimension_plus_codimension(n):
    assert stratum_dimension(corolla(n)) == 2 * n - 3
    for k in range(n - 1):
        for t in enumerate_trees(n, k):
            check_tree(t)
            assert stratum_dimension(t) + k == 2 * n - 3


def test_enumeration_is_duplicate_free_and_deterministic():
    first = all_trees(5)
    assert len(set(first)) == len(first) == 236
    assert all_trees(5) == first
    with pytest.raises(BoundExceededError):
        all_trees(9)


def test_torus_strata():
    for t in enumerate_trees(3, 1):
        assert stratum_dimension(t) == 2
    assert stratum_dimension(corolla(3)) == 3


def test_printing_and_canonical_order():
    t = make_tree([make_tree([3, 2]), 1])
    assert str(t) == "(1,(2,3))"
    with pytest.raises(TreeError):
        check_tree(LabeledTree((LabeledTree((2, 3)), 1)))
    with pytest.raises(TreeError):
        check_tree(LabeledTree((1, LabeledTree((2,)))))


def test_graft():
    two = corolla(2)
    assert graft(two, 1, two) == make_tree([make_tree([1, 2]), 3])
    assert internal_edge_count(graft(two, 2, corolla(3))) == 1
    assert graft(two, 1, corolla(1)) == two
    assert graft(corolla(1), 1, two) == two
    with pytest.raises(SlotError):
        graft(two, 3, two)


@given(st.data())
def test_graft_associativity(data):
    trees = [data.draw(st.sampled_from(all_trees(n))) for n in (3, 3, 2)]
    a, b, c = trees
    i, j = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    assert graft(graft(a, i, b), i + j - 1, c) == graft(a, i, graft(b, j, c))


@given(st.data())
def test_contract_decreases_codimension(data):
    t = data.draw(st.sampled_from(all_trees(5)))
    k = internal_edge_count(t)
    if k == 0:
        with pytest.raises(ContractionError):
            contract(t, 0)
        return
    e = data.draw(st.integers(0, k - 1))
    out = check_tree(contract(t, e))
    assert internal_edge_count(out) == k - 1
    assert stratum_dimension(out) == stratum_dimension(t) + 1


def test_face_poset_small():
    poset = face_poset(3)
    assert poset.grade_sizes() == [1, 3]
    assert len(poset.elements) == 4
    assert len(poset.covers) == 3
    assert poset.leq(1, 0) and not poset.leq(0, 1)
    dot = poset.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == 3


@pytest.mark.parametrize("n", [3, 4, 5])
def test_face_poset_top_grade(n):
    assert face_poset(n).grade_sizes()[-1] == dfact(2 * n - 3)


def test_face_poset_bound():
    with pytest.raises(BoundExceededError):
        face_poset(7)


@given(st.data())
def test_action_permutes_each_grade(data):
    n = 4
    images = data.draw(st.permutations([1, 2, 3, 4]))
    sigma = Permutation(tuple(images))
    for k in range(n - 1):
        grade = enumerate_trees(n, k)
        assert sorted(map(str, (act_permutation(t, sigma) for t in grade))) == sorted(map(str, grade))


def test_action_relabels():
    t = make_tree([make_tree([1, 2]), 3])
    # leaf sigma(i) becomes i: with sigma = (3,1,2) leaf 3 -> 1, 1 -> 2, 2 -> 3
    assert act_permutation(t, Permutation((3, 1, 2))) == make_tree([1, make_tree([2, 3])])


# coloured trees


def C(k):
    return ColoredLeaf("c", k)


def O(k):
    return ColoredLeaf("o", k)


def test_colored_dimension_examples():
    assert colored_stratum_dimension(colored_corolla(1, 1)) == 1
    t = make_colored("o", [O(1), make_colored("c", [C(1), C(2)])])
    assert colored_stratum_dimension(t) == 1 + 1


def test_closed_root_with_open_input_rejected():
    bad = ColoredTree("c", (C(1), O(1)))
    assert not is_admissible(bad)
    with pytest.raises(TreeError):
        check_colored(bad)


def test_unary_open_vertex_over_closed_cluster():
    t = make_colored("o", [O(1), make_colored("o", [C(1)])])
    assert is_admissible(t)
    assert not is_admissible(ColoredTree("o", (O(1), ColoredTree("o", (O(2),)))))


@pytest.mark.parametrize("p,q", [(1, 0), (0, 2), (1, 1), (2, 0), (2, 1), (1, 2), (0, 3), (3, 0), (2, 2)])
def test_colored_counts_match_oracle(p, q):
    trees = enumerate_colored_trees(p, q)
    assert len(trees) == colored_oracle(p, q)
    assert len(set(trees)) == len(trees)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (0, 3), (3, 0), (2, 2)])
def test_colored_dimension_plus_codimension(p, q):
    for t in enumerate_colored_trees(p, q):
        check_colored(t)
        assert colored_stratum_dimension(t) + colored_edge_count(t) == 2 * p + q - 2


def test_closed_colour_enumeration_is_uncoloured():
    assert len(enumerate_colored_trees(4, 0, color="c")) == len(all_trees(4))
