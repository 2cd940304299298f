import random
from itertools import combinations, permutations
from math import factorial

import numpy as np
import pytest

from degbound.enumeration import (
    EnumerationSpec,
    canonical_form,
    canonical_graph,
    connected_graphs,
    enumerate_connected,
    read_population,
)
from degbound.graphs import (
    Graph,
    GraphError,
    SizeLimitError,
    complete_graph,
    is_connected,
    is_molecular,
    is_regular,
    min_degree,
    path_graph,
    star_graph,
    to_graph6,
)

from conftest import random_connected_graph, random_graph

# Connected graphs up to isomorphism, orders 2..7.
CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


# ---------------------------------------------------------------------------
# oracle 1: duplicate-tolerant enumeration, canonical-form bucketing by full
# permutation minimization (vectorized so n = 6 stays cheap)


def _oracle_class_count(n, keep=None):
    pairs = list(combinations(range(n), 2))
    E = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    masks = []
    for mask in range(1 << E):
        adj = {v: set() for v in range(n)}
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u].add(v)
                adj[v].add(u)
        # set-based DFS, independent of the package's bitset BFS
        stack, seen = [0], {0}
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            continue
        if keep is not None and not keep(adj):
            continue
        masks.append(mask)
    if not masks:
        return 0
    bits = (np.array(masks, dtype=np.int64)[:, None] >> np.arange(E)) & 1
    weights = 1 << np.arange(E - 1, -1, -1, dtype=np.int64)
    canon = None
    for perm in permutations(range(n)):
        to_new = [0] * E
        for i, (u, v) in enumerate(pairs):
            to_new[i] = pair_index[tuple(sorted((perm[u], perm[v])))]
        inv = np.empty(E, dtype=np.int64)
        inv[to_new] = np.arange(E)
        vals = bits[:, inv] @ weights
        canon = vals if canon is None else np.minimum(canon, vals)
    return len(np.unique(canon))


# ---------------------------------------------------------------------------
# oracle 2: Burnside orbit counting plus inverse Euler transform (no
# canonical forms at all)


def _burnside_all_graph_count(n):
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        mapping = [pair_index[tuple(sorted((perm[u], perm[v])))]
                   for u, v in pairs]
        seen = [False] * len(pairs)
        cycles = 0
        for start in range(len(pairs)):
            if seen[start]:
                continue
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = mapping[j]
        total += 1 << cycles
    assert total % factorial(n) == 0
    return total // factorial(n)


def _connected_counts_from_totals(totals):
    """Invert the Euler transform: totals[n] counts all graphs of order n up
    to isomorphism, the result counts the connected ones."""
    N = len(totals)
    g = [1] + list(totals)  # g[0] = 1
    c = [0] * (N + 1)
    d = [0] * (N + 1)
    for n in range(1, N + 1):
        s = sum(d[k] * g[n - k] for k in range(1, n))
        cn_times_n = n * g[n] - s
        # d[n] = sum_{j | n} j*c[j]; isolate c[n]
        divisor_part = sum(j * c[j] for j in range(1, n) if n % j == 0)
        c[n] = (cn_times_n - divisor_part * 1) // n
        d[n] = sum(j * c[j] for j in range(1, n + 1) if n % j == 0)
    return c[1:]


def test_euler_transform_oracle_agrees_with_published_counts():
    totals = [_burnside_all_graph_count(n) for n in range(1, 8)]
    assert totals == [1, 2, 4, 11, 34, 156, 1044]
    connected = _connected_counts_from_totals(totals)
    assert connected == [1, 1, 2, 6, 21, 112, 853]


# ---------------------------------------------------------------------------
# enumerate_connected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_counts_match_bruteforce_oracle(n):
    assert len(connected_graphs(n)) == _oracle_class_count(n)


def test_counts_match_bruteforce_oracle_n6():
    assert len(connected_graphs(6)) == _oracle_class_count(6)


@pytest.mark.parametrize("n", sorted(CONNECTED_COUNTS))
def test_counts_match_frozen_values(n):
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n]


def test_filtered_count_matches_bruteforce():
    def keep(adj):
        return min(len(v) for v in adj.values()) >= 2

    got = connected_graphs(5, delta_min=2)
    assert len(got) == _oracle_class_count(5, keep)
    assert all(min_degree(g) >= 2 for g in got)


def test_filters_respected():
    for g in connected_graphs(6, delta_min=2):
        assert min_degree(g) >= 2 and is_connected(g)
    mol = connected_graphs(6, molecular=True)
    assert all(is_molecular(g) for g in mol)
    reg = connected_graphs(6, regular_only=True)
    assert all(is_regular(g) for g in reg)
    # 2-regular, two 3-regular, one 4-regular, K6
    assert len(reg) == 5


def test_emitted_graphs_connected_and_distinct(populations):
    for n, graphs in populations.items():
        assert all(is_connected(g) for g in graphs)
        forms = [to_graph6(g) for g in graphs]
        assert len(set(forms)) == len(forms)
        assert forms == sorted(forms)


def test_no_two_emitted_graphs_isomorphic():
    for n in (4, 5):
        forms = set()
        for g in connected_graphs(n):
            f = min(to_graph6(g.relabeled(p)) for p in permutations(range(n)))
            assert f not in forms
            forms.add(f)


def test_enumeration_deterministic():
    a = enumerate_connected(EnumerationSpec(5))
    b = enumerate_connected(EnumerationSpec(5))
    assert a == b


def test_order_caps():
    with pytest.raises(GraphError):
        enumerate_connected(EnumerationSpec(1))
    with pytest.raises(SizeLimitError):
        enumerate_connected(EnumerationSpec(8))  # needs allow_big
    with pytest.raises(SizeLimitError):
        enumerate_connected(EnumerationSpec(9), allow_big=True)


# ---------------------------------------------------------------------------
# canonical forms


def test_canonical_form_examples():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(0, 2), (1, 2)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(complete_graph(3)) == "Bw"
    assert canonical_form(star_graph(2)) == canonical_form(path_graph(3))


def test_canonical_form_matches_bruteforce():
    rng = random.Random(3)
    cases = [random_graph(rng, rng.randrange(2, 7)) for _ in range(150)]
    cases += connected_graphs(5)
    for g in cases:
        brute = min(to_graph6(g.relabeled(list(p)))
                    for p in permutations(range(g.n)))
        assert canonical_form(g) == brute


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(9)
    for _ in range(100):
        g = random_connected_graph(rng, rng.randrange(2, 9))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabeled(perm))


def test_canonical_graph_round_trip():
    rng = random.Random(13)
    for _ in range(50):
        g = random_graph(rng, rng.randrange(2, 8))
        cg = canonical_graph(g)
        assert to_graph6(cg) == canonical_form(g)
        assert canonical_form(cg) == canonical_form(g)


def test_canonical_cap():
    with pytest.raises(SizeLimitError):
        canonical_form(path_graph(11))


# ---------------------------------------------------------------------------
# population files


def test_read_population(tmp_path):
    path = tmp_path / "pop.g6"
    path.write_text("# comment\nBw\n\nA_\n  Bg  \n")
    graphs = read_population(path)
    assert graphs == [complete_graph(3), path_graph(2), path_graph(3)]


def test_read_population_bad_line(tmp_path):
    path = tmp_path / "pop.g6"
    path.write_text("Bw\nBAD~LINE\n")
    with pytest.raises(GraphError) as err:
        read_population(path)
    assert "line 2" in str(err.value)
