from hypothesis import strategies as st


@st.composite
def partitions(draw, max_n=25, min_n=0):
    n = draw(st.integers(min_n, max_n))
    parts = []
    left = n
    while left:
        x = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(x)
        left -= x
    return tuple(parts)
