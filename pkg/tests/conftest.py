import pytest

import semigroup_forge as sf


@pytest.fixture(scope="session")
def semigroups_genus8():
    """Every proper numerical semigroup of genus at most 8 (156 - 1 of them)."""
    out = []

    def visit(node):
        if not node.degenerate:
            out.append(node.semigroup)

    sf.enumerate_tree(8, visit)
    return out
