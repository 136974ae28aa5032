from hypothesis import strategies as st

from f1rep.f1lin import F1Map


@st.composite
def f1maps(draw, max_dim=5, src=None, tgt=None):
    a = draw(st.integers(0, max_dim)) if src is None else src
    b = draw(st.integers(0, max_dim)) if tgt is None else tgt
    image = []
    free = list(range(1, b + 1))
    for _ in range(a):
        choices = [0] + free
        j = draw(st.sampled_from(choices))
        if j:
            free.remove(j)
        image.append(j)
    return F1Map(a, b, tuple(image))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num])
