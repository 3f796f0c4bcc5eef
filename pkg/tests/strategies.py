from hypothesis import strategies as st

from piecewise_rsk import NTableau, Partition


@st.composite
def partitions(draw, max_rows=3, max_cols=3):
    parts = draw(st.lists(st.integers(1, max_cols), min_size=1, max_size=max_rows))
    return Partition(sorted(parts, reverse=True))


@st.composite
def tableaux(draw, shape=None, max_entry=3, max_rows=3, max_cols=3):
    if shape is None:
        shape = draw(partitions(max_rows, max_cols))
    rows = [draw(st.lists(st.integers(0, max_entry), min_size=p, max_size=p)) for p in shape.parts]
    return NTableau(shape, rows)


def matrices(n, max_entry=2):
    return tableaux(shape=Partition.square(n), max_entry=max_entry)
