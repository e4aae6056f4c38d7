import pytest
from hypothesis import strategies as st

from levelmeet.graph import Graph, Query

# 16 vertices. A side grows s -> {a,b} -> {c,d,e,f} -> {g,h},
# B side grows t -> {m,n} -> {i,j,k,l}. Meets i-e and i-f total 3+6+9 and 6+4+9.
NAMES = "s t a b c d e f g h i j k l m n".split()
V = {name: i for i, name in enumerate(NAMES)}
WORKED_EDGES = [
    ("s", "a", 1), ("s", "b", 4),
    ("a", "c", 3), ("a", "e", 2), ("b", "d", 2), ("b", "f", 2),
    ("c", "g", 2), ("d", "h", 3), ("e", "h", 5),
    ("t", "n", 1), ("t", "m", 2),
    ("n", "i", 8), ("n", "j", 3), ("m", "k", 2), ("m", "l", 4),
    ("i", "e", 6), ("i", "f", 4), ("g", "j", 5), ("h", "k", 4), ("h", "l", 1),
]
# Dijkstra on the fixture (frozen): s-a-c-g-j-n-t and s-a-e-h-l-m-t both cost 15.
WORKED_COST = 15


@pytest.fixture
def worked():
    g = Graph(len(NAMES), [(V[a], V[b], w) for a, b, w in WORKED_EDGES])
    return g, Query(V["s"], V["t"])


@pytest.fixture
def triangle():
    # s=0, t=1, a=2: direct s-t costs 10, detour via a costs 3
    return Graph(3, [(0, 1, 10), (0, 2, 1), (2, 1, 2)]), Query(0, 1)


@st.composite
def small_graphs(draw, max_n=10, max_w=20, connected=False):
    n = draw(st.integers(2, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    edges = [(u, v, draw(st.integers(0, max_w))) for u, v in chosen]
    if connected:
        edges += [(i, i + 1, draw(st.integers(0, max_w))) for i in range(n - 1)]
    s = draw(st.integers(0, n - 1))
    t = draw(st.integers(0, n - 1))
    return Graph(n, edges), Query(s, t)


_acceptance: list[tuple[str, str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        verdict = "PASS" if report.passed else "FAIL"
        _acceptance.append((props["criterion"], verdict, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, detail in sorted(_acceptance):
        terminalreporter.write_line(f"{verdict}  {name}  {detail}".rstrip())
