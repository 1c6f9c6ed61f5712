"""Shared hypothesis strategies for random seeds."""

from hypothesis import strategies as st

from clusterfrieze.belt import build_BA
from clusterfrieze.seeds import ExtendedMutationMatrix, Seed

ROOT_TYPES = ["A3", "B2", "G2"]


@st.composite
def root_seeds(draw, types=ROOT_TYPES, max_l=3):
    label = draw(st.sampled_from(types))
    B = build_BA(label)
    r = len(B)
    l = draw(st.integers(0, max_l))
    P = [[draw(st.integers(-2, 2)) for _ in range(r)] for _ in range(l)]
    return Seed.root(ExtendedMutationMatrix.stack(B, P))


@st.composite
def seed_and_word(draw, max_len=8, **kw):
    seed = draw(root_seeds(**kw))
    word = draw(st.lists(st.integers(1, seed.r), max_size=max_len))
    return seed, word
