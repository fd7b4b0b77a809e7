import pytest

from plicode import FMatrix, all_pairs_instance, build_instance

# Three-message, seven-client demo instance. One-indexed prose version:
# R_1={1}, R_2={2}, R_3={3}, R_4={1,2}, R_5={1}, R_6={2}, R_7={1}.
DEMO_REQUIREMENTS = [{0}, {1}, {2}, {0, 1}, {0}, {1}, {0}]


@pytest.fixture
def demo_instance():
    return build_instance(3, DEMO_REQUIREMENTS)


@pytest.fixture
def demo_matrix():
    # Transmissions b1+b2+b3, b2+b3, b1+b2 over F_2.
    return FMatrix.from_rows([[1, 1, 1], [0, 1, 1], [1, 1, 0]], 2)


@pytest.fixture
def quad_instance():
    # 4 messages, 10 clients: all singleton and pair requirement sets.
    return all_pairs_instance(4)


@pytest.fixture
def ternary_code():
    # b1+b2+b4 and b2+b3+2*b4 over F_3; a valid length-2 code for quad_instance.
    return FMatrix.from_rows([[1, 1, 0, 1], [0, 1, 1, 2]], 3)
