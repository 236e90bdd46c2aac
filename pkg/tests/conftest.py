import hypothesis.strategies as st

from crossnest import SignedPermutation


@st.composite
def signed_permutations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mags = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return SignedPermutation(tuple(m * s for m, s in zip(mags, signs)))
