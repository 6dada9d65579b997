import warnings

import pytest

from levicycles import families


def build_small_pool():
    """Every builder arrangement with at most 10 lines (oracle-range pool)."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return [
            ("near_pencil(4)", families.near_pencil(4)),
            ("near_pencil(5)", families.near_pencil(5)),
            ("near_pencil(6)", families.near_pencil(6)),
            ("near_pencil(7)", families.near_pencil(7)),
            ("near_pencil(8)", families.near_pencil(8)),
            ("two_modular(2,3)", families.two_modular(2, 3)),
            ("two_modular(3,4)", families.two_modular(3, 4)),
            ("two_modular(5,6)", families.two_modular(5, 6)),
            ("generic(3)", families.generic(3)),
            ("generic(4)", families.generic(4)),
            ("generic(5)", families.generic(5)),
            ("ceva(3)", families.ceva(3)),
            ("nine_three", families.nine_three()),
            ("ten_line", families.ten_line()),
            ("mu4", families.mu4()),
            ("a_w_k(5,0)", families.a_w_k(5, 0)),
            ("a_w_k(5,1)", families.a_w_k(5, 1)),
        ]


def build_full_pool():
    """The small pool plus the larger family instances the claims cover."""
    return build_small_pool() + [
        ("hesse", families.hesse()),
        ("ceva(4)", families.ceva(4)),
        ("ceva(5)", families.ceva(5)),
        ("supersolvable_mu3(5)", families.supersolvable_mu3(5)),
        ("supersolvable_mu3(6)", families.supersolvable_mu3(6)),
        ("a_w_k(6,2)", families.a_w_k(6, 2)),
    ]


@pytest.fixture(scope="session")
def small_pool():
    return build_small_pool()


@pytest.fixture(scope="session")
def full_pool():
    return build_full_pool()
