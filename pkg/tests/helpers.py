"""Shared builders for the D(m; a, b, c) loop-count anchors."""


def mabc_state(m, a, b, c, i, j, k, l):
    """State with the first i single columns and the first j/k/l crossings of
    the a/b/c columns at -1, everything else at +1."""
    state = []
    for col in range(m):
        state.append(-1 if col < i else 1)
    for size, minus in ((a, j), (b, k), (c, l)):
        state.extend([-1] * minus + [1] * (size - minus))
    return state


def mu_expected(m, i, j, k, l):
    """Circle counts for D(m; a, b, c) by how many twist columns hold a -1."""
    touched = sum(1 for v in (j, k, l) if v > 0)
    if touched == 0:
        return m - i + 3
    if touched == 1:
        return m - i + (j + k + l) + 1
    if touched == 2:
        return m - i + (j + k + l) - 1
    if i < m:
        return m - i + j + k + l - 3
    return j + k + l - 1
