import random

from jkdp.dp2 import (
    DEGREE_PATTERNS,
    blowdown_degree_class,
    canonical_class,
    classify_clique_images,
    completion_determinant,
    disjoint_exceptional_sets,
    dot,
    dual,
    dual_pairs,
    enumerate_cliques,
    enumerate_exceptional_sets,
    exceptional_vectors,
    is_exceptional,
)

E1 = (0, 1, 0, 0, 0, 0, 0, 0)


def test_count_56():
    vecs = exceptional_vectors(7)
    assert len(vecs) == 56
    assert E1 in vecs
    degrees = sorted(v[0] for v in vecs)
    assert degrees.count(0) == 7
    assert degrees.count(1) == 21
    assert degrees.count(2) == 21
    assert degrees.count(3) == 7


def test_counts_other_ranks():
    assert len(exceptional_vectors(6)) == 27
    assert len(exceptional_vectors(8)) == 240


def test_pairwise_products():
    vecs = exceptional_vectors(7)
    for u in vecs:
        for v in vecs:
            d = dot(u, v)
            assert d in (-1, 0, 1, 2)
            assert (d == -1) == (u == v)
            assert (d == 2) == (v == dual(u))


def test_dual():
    assert dual(E1) == (3, -2, -1, -1, -1, -1, -1, -1)
    for v in exceptional_vectors(7):
        w = dual(v)
        assert is_exceptional(w)
        assert dual(w) == v
        assert tuple(a + b for a, b in zip(v, w)) == tuple(-c for c in canonical_class(7))
    assert len(dual_pairs(7)) == 28


def test_clique_and_set_counts():
    assert len(enumerate_cliques()) == 630
    assert len(enumerate_exceptional_sets()) == 576


def test_known_clique():
    clique = (
        (1, -1, -1, 0, 0, 0, 0, 0),
        (1, 0, 0, -1, -1, 0, 0, 0),
        (2, -1, 0, -1, 0, -1, -1, -1),
        (2, 0, -1, 0, -1, -1, -1, -1),
    )
    assert all(is_exceptional(v) for v in clique)
    assert all(dot(u, v) == 1 for i, u in enumerate(clique) for v in clique[i + 1 :])
    assert tuple(sorted(clique)) in {tuple(sorted(c)) for c in enumerate_cliques()}


def test_standard_exceptional_set():
    std = tuple(tuple(1 if i == j + 1 else 0 for i in range(8)) for j in range(7))
    sets = {frozenset(s) for s in enumerate_exceptional_sets()}
    assert frozenset(std) in sets
    assert blowdown_degree_class(std) == (1, 0, 0, 0, 0, 0, 0, 0)


def test_completion_determinants():
    for s in enumerate_exceptional_sets():
        assert completion_determinant(s) in (1, -1)


def test_disjoint_sets_exist_for_sample():
    rng = random.Random(11)
    cliques = enumerate_cliques()
    for c in rng.sample(cliques, 25):
        assert disjoint_exceptional_sets(c, avoid_dual=False, first_only=True)
        assert disjoint_exceptional_sets(c, avoid_dual=True, first_only=True)


def test_classification_patterns_sample():
    rng = random.Random(13)
    cliques = enumerate_cliques()
    sets = enumerate_exceptional_sets()
    seen = set()
    for c in rng.sample(cliques, 12):
        for s in rng.sample(sets, 60):
            pattern = classify_clique_images(c, s)
            assert pattern in DEGREE_PATTERNS
            seen.add(pattern)
    assert len(seen) >= 2


def test_degree_zero_iff_member_contracted():
    rng = random.Random(17)
    cliques = enumerate_cliques()
    sets = enumerate_exceptional_sets()
    for c in rng.sample(cliques, 8):
        for s in rng.sample(sets, 30):
            pattern = classify_clique_images(c, s)
            assert (0 in pattern) == bool(set(c) & set(s))
            assert (3 in pattern) == bool({dual(v) for v in c} & set(s))


def test_disjoint_sets_give_line_conic_patterns():
    rng = random.Random(19)
    cliques = enumerate_cliques()
    for c in rng.sample(cliques, 6):
        for s in disjoint_exceptional_sets(c, avoid_dual=True)[:20]:
            assert classify_clique_images(c, s) == (1, 1, 2, 2)
        for s in disjoint_exceptional_sets(c)[:20]:
            assert classify_clique_images(c, s) in ((1, 1, 2, 2), (1, 1, 1, 3))


def test_isometry_invariance():
    """Permuting the seven blow-up coordinates permutes all enumerations."""
    perm = (0, 3, 1, 2, 7, 5, 6, 4)  # fixes slot 0, permutes 1..7

    def apply(v):
        return tuple(v[perm[i]] for i in range(8))

    vecs = set(exceptional_vectors(7))
    assert {apply(v) for v in vecs} == vecs
    cliques = {frozenset(c) for c in enumerate_cliques()}
    assert {frozenset(apply(v) for v in c) for c in cliques} == cliques
    sets = {frozenset(s) for s in enumerate_exceptional_sets()}
    assert {frozenset(apply(v) for v in s) for s in sets} == sets
