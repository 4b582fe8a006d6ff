import random

import pytest
from hypothesis import strategies as st

from braidmcg.braid import BraidWord
from braidmcg.freegroup import FreeMap, GroupWord


def naive_substitute(images: dict[int, str], word: str) -> str:
    """Substitute into a word written as a string of letters (``A`` = ``a^-1``) and cancel by rewriting.

    Deliberately unrelated to the stack-based code in the package.
    """
    out = "".join(images[c] if c.islower() else images[c.lower()][::-1].swapcase() for c in word)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i] != out[i + 1] and out[i].lower() == out[i + 1].lower():
                out = out[:i] + out[i + 2:]
                changed = True
                break
    return out


def letters_to_string(letters, alphabet="abcdefghijklmnopqrstuvwxyz"):
    return "".join(alphabet[abs(x) - 1] if x > 0 else alphabet[abs(x) - 1].upper() for x in letters)


def group_words(rank: int, max_size: int = 12):
    letters = st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, max_size=max_size).map(lambda xs: GroupWord(rank, tuple(xs)))


def free_maps(source: int, target: int, max_size: int = 4):
    return st.lists(group_words(target, max_size), min_size=source, max_size=source).map(
        lambda ims: FreeMap(source, target, tuple(ims))
    )


def braid_words(strands: int, max_size: int = 10):
    letters = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letters, max_size=max_size).map(lambda xs: BraidWord(strands, tuple(xs)))


@pytest.fixture
def rng():
    return random.Random(20240601)
