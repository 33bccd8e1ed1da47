"""Shared fixtures: the worked-example groups and a seeded random corpus."""

import random
from dataclasses import dataclass

import pytest

from orbgraph.perm import PermGroup, Permutation

from support import group_from


@dataclass(frozen=True)
class CorpusConfig:
    groups: int = 500
    min_degree: int = 4
    max_degree: int = 8
    max_generators: int = 3
    seed: int = 20260816


def random_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[PermGroup]:
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.groups):
        degree = rng.randint(cfg.min_degree, cfg.max_degree)
        gens = []
        for _ in range(rng.randint(1, cfg.max_generators)):
            images = list(range(1, degree + 1))
            rng.shuffle(images)
            gens.append(Permutation(images))
        out.append(PermGroup(degree, gens))
    return out


@pytest.fixture(scope="session")
def corpus():
    return random_corpus()


@pytest.fixture(scope="session")
def corpus_sample(corpus):
    # a slice for the heavier brute-force cross-checks
    return corpus[:60]


@pytest.fixture
def two_swaps():
    # degree 7, orbits [1|2,3|4,6|5|7]
    return group_from(7, "(2,3)", "(4,6)")


@pytest.fixture
def two_triangles():
    # degree 9; the pair (1,2) yields complete digraphs on {1,2,3} and
    # {4,5,6} with 7, 8, 9 isolated
    return group_from(9, "(1,2)", "(1,3)", "(4,5)", "(4,6)", "(1,4)(2,5)(3,6)", "(7,8,9)")


@pytest.fixture
def square_symmetries():
    # order 8, transitive on 4 points but not 2-transitive
    return group_from(4, "(1,2,4,3)", "(1,2)(3,4)")


@pytest.fixture
def diagonal_triangles():
    # order 6 with two 3-point orbits moved in step
    return group_from(6, "(1,2,3)(4,5,6)", "(1,3)(4,5)")
