import pytest

from fusionkit.grp import FiniteGroup, Perm


def cyc(degree, *cycles):
    return Perm.from_cycles(degree, list(cycles))


@pytest.fixture(scope="session")
def s4():
    return FiniteGroup.from_generators(4, [cyc(4, (1, 2)), cyc(4, (1, 2, 3, 4))])


@pytest.fixture(scope="session")
def a4():
    return FiniteGroup.from_generators(4, [cyc(4, (1, 2, 3)), cyc(4, (1, 2), (3, 4))])


@pytest.fixture(scope="session")
def a5():
    return FiniteGroup.from_generators(5, [cyc(5, (1, 2, 3, 4, 5)), cyc(5, (1, 2, 3))])


@pytest.fixture(scope="session")
def s3():
    return FiniteGroup.from_generators(3, [cyc(3, (1, 2)), cyc(3, (1, 2, 3))])


@pytest.fixture(scope="session")
def d8():
    return FiniteGroup.from_generators(4, [cyc(4, (1, 2, 3, 4)), cyc(4, (1, 3))])


@pytest.fixture(scope="session")
def q8():
    return FiniteGroup.from_generators(
        8,
        [cyc(8, (1, 2, 5, 6), (3, 4, 7, 8)), cyc(8, (1, 3, 5, 7), (2, 8, 6, 4))],
    )


@pytest.fixture(scope="session")
def c6():
    return FiniteGroup.from_generators(6, [cyc(6, (1, 2, 3, 4, 5, 6))])


@pytest.fixture(scope="session")
def c2():
    return FiniteGroup.from_generators(2, [cyc(2, (1, 2))])


def _gl23_generators():
    """GL(2,3) acting on the 8 nonzero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        images = [0] * 8
        for v, i in index.items():
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3)
            images[i] = index[w]
        return Perm(images)

    mats = [((1, 1), (0, 1)), ((0, 2), (1, 0)), ((1, 0), (0, 2))]
    return [mat_perm(m) for m in mats]


@pytest.fixture(scope="session")
def gl23():
    return FiniteGroup.from_generators(8, _gl23_generators())


@pytest.fixture(scope="session")
def c3_rtimes_c4():
    # C3:C4 of order 12, the C4 inverting the C3
    return FiniteGroup.from_generators(
        7, [cyc(7, (1, 2, 3)), cyc(7, (2, 3), (4, 5, 6, 7))]
    )
