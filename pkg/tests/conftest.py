from hypothesis import strategies as st

from eqgrass.bipoly import BiPoly, K11
from eqgrass.modalg import FreeModule

exponent_pairs = st.tuples(st.integers(0, 6), st.integers(0, 6))

bipolys = st.dictionaries(
    exponent_pairs, st.integers(-9, 9), min_size=0, max_size=8
).map(BiPoly)

nonzero_bipolys = bipolys.filter(lambda f: not f.is_zero())

#: Elements of the shift ideal, built as (random polynomial) * K_{1,1}.
shift_multiples = bipolys.map(lambda f: f * K11)


@st.composite
def cell_like_modules(draw, max_gens=8, max_degree=8):
    """Multisets of bidegrees obeying the cell constraint 0 <= b <= a."""
    n = draw(st.integers(0, max_gens))
    gens = []
    for _ in range(n):
        a = draw(st.integers(0, max_degree))
        b = draw(st.integers(0, a))
        gens.append((a, b))
    return FreeModule(gens)
