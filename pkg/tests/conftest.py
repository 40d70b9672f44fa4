import random

import pytest
from hypothesis import strategies as st

from squiercm import catalog
from squiercm.freegroup import Word
from squiercm.sampling import Sampler


def naive_reduce(letters):
    """Reference free reduction: delete the first inverse pair until none is left."""
    letters = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters) - 1):
            (a, s), (b, t) = letters[i], letters[i + 1]
            if a == b and s == -t:
                del letters[i:i + 2]
                changed = True
                break
    return Word(tuple(letters))


def exponent_sums(w, alphabet):
    """Image of a word in Z^n: the word problem for free abelian groups."""
    sums = dict.fromkeys(alphabet, 0)
    for name, sign in w:
        sums[name] += sign
    return tuple(sums[a] for a in alphabet)


def words(alphabet, max_size=8):
    letters = [(a, s) for a in alphabet for s in (1, -1)]
    return st.lists(st.sampled_from(letters), max_size=max_size).map(lambda ls: Word(tuple(ls)))


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture(scope="session")
def cyc():
    return catalog.infinite_cyclic()


@pytest.fixture(scope="session")
def cyc_oracle():
    return catalog.infinite_cyclic_oracle()


@pytest.fixture(scope="session")
def z2():
    return catalog.z2()


@pytest.fixture(scope="session")
def z2_oracle():
    return catalog.z2_oracle()


@pytest.fixture
def sampler_for():
    def make(P, seed=0, max_length=4):
        return Sampler(P, random.Random(seed), max_length=max_length)

    return make


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    from test_acceptance import criterion_of

    k = criterion_of(report.nodeid)
    if k is None:
        return
    if report.failed or (report.when == "call" and report.outcome != "passed"):
        _criteria[k] = False
    else:
        _criteria.setdefault(k, True)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        terminalreporter.write_line(f"criterion {k}: {'PASS' if _criteria[k] else 'FAIL'} ({CRITERIA[k]})")
