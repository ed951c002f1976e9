# coding=utf-8
import itertools
import random
from pathlib import Path

import pytest

from knotradar.abelian import FinAbGroup
from knotradar.core import load_config
from knotradar.heegaard import Arc, Endpoint, Mark, OneOneDiagram, is_valid, load_diagram

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def _matchings(points):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for tail in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def _all_marks(p: int):
    return [Mark(g, side) for side in ("-", "+") for g in range(p)]


def enumerate_diagrams(p: int, windings=(-1, 0, 1)):
    """Every valid diagram with p points, arcs winding at most once."""
    points = [Endpoint(side, i) for side in ("-", "+") for i in range(p)]
    marks = _all_marks(p)
    for matching in _matchings(points):
        for ws in itertools.product(windings, repeat=p):
            arcs = tuple(Arc(a, b, w) for (a, b), w in zip(matching, ws))
            # marks only matter through z != w
            if not is_valid(OneOneDiagram(p, arcs, Mark(0, "-"), Mark(0, "+"))):
                continue
            for z, w in itertools.permutations(marks, 2):
                yield OneOneDiagram(p, arcs, z, w)


def _lifted_arc(side0: str, x0: int, side1: str, x1: int, p: int) -> Arc:
    start = x0 % p
    end = start + x1 - x0
    return Arc(Endpoint(side0, start), Endpoint(side1, end % p), end // p)


def random_diagram(rng: random.Random, p: int) -> OneOneDiagram:
    """
    An embedded diagram built from nested caps and parallel through arcs

    r caps on each line around random centres, the other p - 2r points joined
    in order with a random twist. The result always embeds; it may still fail
    the cycle or homology checks.
    """
    r = rng.randint(0, (p - 1) // 2)
    m = p - 2 * r
    bottom, top = rng.randrange(p), rng.randrange(p)
    arcs = []
    for i in range(r):
        arcs.append(_lifted_arc("-", bottom + i, "-", bottom + 2 * r - 1 - i, p))
        arcs.append(_lifted_arc("+", top + i, "+", top + 2 * r - 1 - i, p))
    twist = rng.randrange(-m, 2 * m)
    for k in range(m):
        j = k + twist
        x1 = top + 2 * r + j % m + p * (j // m)
        arcs.append(_lifted_arc("-", bottom + 2 * r + k, "+", x1, p))
    z, w = rng.sample(_all_marks(p), 2)
    return OneOneDiagram(p, tuple(arcs), z, w)


def random_valid_diagrams(seed: int, count: int, max_p: int, attempts: int = 50000):
    rng = random.Random(seed)
    out = []
    for _ in range(attempts):
        d = random_diagram(rng, rng.randint(1, max_p))
        if is_valid(d):
            out.append(d)
            if len(out) == count:
                break
    return out


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def Z() -> FinAbGroup:
    return FinAbGroup(1, ())


@pytest.fixture
def Z5() -> FinAbGroup:
    return FinAbGroup(1, (5,))


@pytest.fixture
def unknot():
    return load_diagram(FIXTURES / "unknot.od")


@pytest.fixture
def trefoil():
    return load_diagram(FIXTURES / "trefoil.od")


@pytest.fixture
def figure8():
    return load_diagram(FIXTURES / "figure8.od")


@pytest.fixture(scope="session")
def small_diagrams():
    out = []
    for p in (1, 2, 3, 4):
        out.extend(enumerate_diagrams(p))
    return out


@pytest.fixture(scope="session")
def random_diagrams():
    return random_valid_diagrams(seed=20240611, count=200, max_p=12)


@pytest.fixture
def config(tmp_path, monkeypatch):
    """Defaults with the cache under tmp_path."""
    monkeypatch.delenv("CONFIG_PATH", raising=False)
    monkeypatch.setenv("KNOTRADAR_CACHE_DIR", str(tmp_path / "cache"))
    return load_config(str(ROOT / "config" / "config.yaml"))
