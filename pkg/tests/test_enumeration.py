import itertools
import networkx as nx
import pytest
from src.enumeration.bipartite import _least_image, enumerate_bipartite
from src.enumeration.connected import enumerate_connected
from src.enumeration.graph_class import (
    GraphClass,
    GraphClassKind,
    class_members,
    derived_maxdeg_classes,
    iter_members,
    parse_class_label,
)
from src.enumeration.trees import enumerate_free_trees, enumerate_trees_with_max_degree
from src.graph.canonical import certificate
from src.graph.graph import Graph, find_bipartition
from src.utils.config_manager import EnumerationBudgets
from src.utils.errors import BudgetExceeded, InvalidParams, TooLarge, TooSmall

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]


def prufer_oracle_count(n: int) -> int:
    """Distinct certificates over every labelled tree of order ``n``."""
    if n <= 2:
        return 1
    seen = set()
    for sequence in itertools.product(range(n), repeat=n - 2):
        seen.add(certificate(Graph.from_networkx(nx.from_prufer_sequence(list(sequence)))))
    return len(seen)


def part_preserving_key(cells, n1: int, n2: int) -> tuple:
    """Least edge tuple under part-preserving relabelling, swaps included when square."""
    variants = [list(cells)]
    if n1 == n2:
        variants.append([(j, i) for i, j in cells])
    return min(
        tuple(sorted((rp[i], cp[j]) for i, j in variant))
        for variant in variants
        for rp in itertools.permutations(range(n1))
        for cp in itertools.permutations(range(n2))
    )


def graph_cells(g: Graph, n1: int) -> list:
    return [(u, v - n1) for u, v in g.sorted_edges()]


def bipartite_oracle_count(n1: int, n2: int) -> int:
    """Classes of labelled bipartite graphs under part-preserving relabelling."""
    cells = [(i, j) for i in range(n1) for j in range(n2)]
    classes = set()
    for mask in range(1 << len(cells)):
        chosen = [c for k, c in enumerate(cells) if mask >> k & 1]
        classes.add(part_preserving_key(chosen, n1, n2))
    return len(classes)


def least_image_filter_count(height: int, width: int) -> int:
    """Least images found by filtering every non-decreasing row tuple."""
    return sum(
        1 for rows in itertools.combinations_with_replacement(range(1 << width), height)
        if _least_image(rows, width) == rows
    )


class TestTrees:

    @pytest.mark.parametrize("n, expected", list(enumerate(TREE_COUNTS, start=1)))
    def test_counts(self, n, expected):
        trees = list(enumerate_free_trees(n))
        assert len(trees) == expected
        assert all(t.n == n and t.is_tree() for t in trees)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_prufer_oracle(self, n):
        assert prufer_oracle_count(n) == TREE_COUNTS[n - 1]

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8, 9])
    def test_prufer_oracle_larger(self, n):
        assert prufer_oracle_count(n) == TREE_COUNTS[n - 1]

    @pytest.mark.parametrize("n", range(2, 11))
    def test_no_duplicates(self, n):
        ours = [certificate(t) for t in enumerate_free_trees(n)]
        assert len(set(ours)) == len(ours)

    @pytest.mark.slow
    @pytest.mark.parametrize("n, expected", [(12, 551), (13, 1301), (14, 3159)])
    def test_counts_at_order_budget(self, n, expected):
        assert sum(1 for _ in enumerate_free_trees(n)) == expected

    def test_deterministic_order(self):
        assert list(enumerate_free_trees(8)) == list(enumerate_free_trees(8))

    def test_budgets(self):
        with pytest.raises(TooSmall):
            list(enumerate_free_trees(0))
        with pytest.raises(TooLarge):
            list(enumerate_free_trees(15, max_order=14))

    def test_max_degree_classes(self):
        assert len(list(enumerate_trees_with_max_degree(7, 4))) == 3
        assert len(list(enumerate_trees_with_max_degree(7, 6))) == 1
        assert list(enumerate_trees_with_max_degree(7, 7)) == []
        by_degree = sum(len(list(enumerate_trees_with_max_degree(8, d))) for d in range(2, 8))
        assert by_degree == TREE_COUNTS[7]


class TestBipartite:

    def test_small_counts(self):
        assert len(list(enumerate_bipartite(1, 1))) == 2
        assert len(list(enumerate_bipartite(1, 2))) == 3
        assert len(list(enumerate_bipartite(2, 2))) == 6
        assert len(list(enumerate_bipartite(2, 4))) == 22
        assert len(list(enumerate_bipartite(2, 2, connected_only=True))) == 2

    @pytest.mark.parametrize("n1, n2", [(2, 3), (3, 2), (1, 4), (2, 2), (3, 3), (2, 4), (4, 2)])
    def test_matches_oracle(self, n1, n2):
        assert len(list(enumerate_bipartite(n1, n2))) == bipartite_oracle_count(n1, n2)

    @pytest.mark.slow
    @pytest.mark.parametrize("n1, n2", [(3, 4), (4, 3)])
    def test_matches_oracle_larger(self, n1, n2):
        assert len(list(enumerate_bipartite(n1, n2))) == bipartite_oracle_count(n1, n2) == 87

    @pytest.mark.parametrize("n1, n2", [
        (n1, n2) for n1 in range(1, 5) for n2 in range(1, 5) if n1 * n2 <= 12
    ])
    def test_unique_under_part_preserving_relabelling(self, n1, n2):
        keys = [part_preserving_key(graph_cells(g, n1), n1, n2) for g in enumerate_bipartite(n1, n2)]
        assert len(set(keys)) == len(keys)

    def test_square_classes_include_part_swap(self):
        # a star centred in either part is one class when the parts match
        graphs = list(enumerate_bipartite(2, 2))
        stars = [g for g in graphs if g.m == 2 and g.max_degree() == 2]
        assert len(stars) == 1

    def test_ambiguous_bipartition_emitted_per_placement(self):
        # K_{1,2} plus two isolated vertices fits (2,3) with its centre on either side
        graphs = [g for g in enumerate_bipartite(2, 3) if g.m == 2 and g.max_degree() == 2]
        assert len(graphs) == 2
        assert certificate(graphs[0]) == certificate(graphs[1])

    @pytest.mark.parametrize("n1, n2", [(3, 2), (4, 3), (3, 4), (5, 3)])
    def test_pruned_generation_matches_filtering(self, n1, n2):
        height, width = max(n1, n2), min(n1, n2)
        assert len(list(enumerate_bipartite(n1, n2))) == least_image_filter_count(height, width)

    @pytest.mark.slow
    @pytest.mark.parametrize("n1, n2", [(5, 4), (4, 5)])
    def test_pruned_generation_matches_filtering_larger(self, n1, n2):
        assert len(list(enumerate_bipartite(n1, n2))) == least_image_filter_count(5, 4)

    def test_parts_are_respected(self):
        for g in enumerate_bipartite(2, 3):
            for u, v in g.edges:
                assert u < 2 <= v

    def test_connected_only(self):
        graphs = list(enumerate_bipartite(2, 3, connected_only=True))
        assert graphs and all(g.is_connected() for g in graphs)
        assert all(find_bipartition(g) is not None for g in graphs)

    def test_budgets(self):
        with pytest.raises(TooSmall):
            list(enumerate_bipartite(0, 2))
        with pytest.raises(TooLarge):
            list(enumerate_bipartite(5, 6, max_cells=25))


class TestConnected:

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    def test_counts(self, n, expected):
        graphs = list(enumerate_connected(n))
        assert len(graphs) == expected
        assert len({certificate(g) for g in graphs}) == expected

    def test_budget(self):
        with pytest.raises(TooLarge):
            list(enumerate_connected(8))
        with pytest.raises(TooLarge):
            list(enumerate_connected(6, max_order=5))


class TestGraphClass:

    def test_labels_round_trip(self):
        classes = [
            GraphClass.trees(6),
            GraphClass.trees_maxdeg(7, 4),
            GraphClass.bipartite(2, 2, connected_only=True),
            GraphClass.bipartite(3, 4),
            GraphClass.connected(5),
            GraphClass.random("bipartite-3x4-0.5", 10, 7),
        ]
        assert [gc.label for gc in classes[:3]] == ["TREES(6)", "TREES_MAXDEG(7,4)", "BIPARTITE(2,2,connected)"]
        for gc in classes:
            assert parse_class_label(gc.label) == gc

    def test_bad_labels(self):
        with pytest.raises(InvalidParams):
            parse_class_label("FORESTS(3)")
        with pytest.raises(InvalidParams):
            parse_class_label("TREES(x)")
        with pytest.raises(InvalidParams):
            GraphClass.random("hypercube-3", 5, 1)

    def test_declared_parts(self):
        parts = GraphClass.bipartite(2, 3).declared_parts()
        assert parts.part1 == frozenset({0, 1})
        assert GraphClass.random("bipartite-2x2-0.5", 1, 0).declared_parts().n2 == 2
        assert GraphClass.trees(5).declared_parts() is None

    def test_members(self):
        assert len(class_members(GraphClass.trees(7))) == 11
        assert len(class_members(GraphClass.trees_maxdeg(7, 4))) == 3
        assert len(class_members(GraphClass.connected(4))) == 6

    def test_random_members_are_seeded(self):
        gc = GraphClass.random("tree-8", 5, 42)
        first = list(iter_members(gc))
        assert first == list(iter_members(gc))
        assert len(first) == 5 and all(t.is_tree() for t in first)
        assert first != list(iter_members(GraphClass.random("tree-8", 5, 43)))

    def test_random_bipartite_and_gnp(self):
        bip = list(iter_members(GraphClass.random("bipartite-3x4-0.5", 4, 1)))
        assert all(g.n == 7 and all(u < 3 <= v for u, v in g.edges) for g in bip)
        gnp = list(iter_members(GraphClass.random("gnp-6-0.3", 4, 1)))
        assert all(g.n == 6 for g in gnp)

    def test_budget_validation(self):
        budgets = EnumerationBudgets(tree_max_order=8)
        with pytest.raises(BudgetExceeded):
            GraphClass.trees(9).validate(budgets)
        with pytest.raises(BudgetExceeded):
            list(iter_members(GraphClass.bipartite(5, 6)))
        with pytest.raises(BudgetExceeded):
            GraphClass.connected(8).validate(EnumerationBudgets())
        assert issubclass(BudgetExceeded, TooLarge)

    def test_derived_maxdeg_classes(self):
        derived = derived_maxdeg_classes(GraphClass.trees(6))
        assert [gc.max_degree for gc in derived] == [2, 3, 4, 5]
        assert all(gc.kind is GraphClassKind.TREES_MAXDEG for gc in derived)
        assert sum(len(class_members(gc)) for gc in derived) == 6
        assert derived_maxdeg_classes(GraphClass.connected(4)) == []

    def test_is_enumerated(self):
        assert GraphClass.trees(4).is_enumerated()
        assert not GraphClass.random("tree-4", 1, 0).is_enumerated()
