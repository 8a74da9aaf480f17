import random

import pytest

from src.algebra import zperm
from src.algebra.affine_weyl import element_from_word, random_word
from src.algebra.root_data import build


@pytest.fixture
def rng():
    return random.Random(20240531)


@pytest.fixture
def generated_dir(tmp_path, monkeypatch):
    """Point the output directories at a temporary folder"""
    monkeypatch.setenv("AFFINE_GENERATED_DIR", str(tmp_path / "generated"))
    return tmp_path / "generated"


@pytest.fixture(params=[("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G", 2)],
                ids=lambda p: f"{p[0]}{p[1]}")
def root_system(request):
    return build(*request.param)


def random_member(ctx, rng, max_length=12):
    """Window of a random word in the group of ctx"""
    word = random_word(ctx, rng.randint(0, max_length), rng)
    return zperm.star(ctx, element_from_word(ctx, word)), word


# every supported (type, rank) with rank <= 4
RANK_AT_MOST_FOUR = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4),
    ("G", 2),
]

# permutation groups of rank <= 4, type A listed by window size
PERMUTATION_GROUPS = [
    ("A", 2), ("A", 3), ("A", 4), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 3), ("D", 4),
    ("G", 2),
    ("C-alt", 2), ("C-alt", 3), ("C-alt", 4),
]


def label(pair):
    return f"{pair[0]}{pair[1]}"
