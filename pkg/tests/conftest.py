import csv
import logging
import pathlib

import pytest

from momentpoly.exact import clear_tables, coefficient_table

DATA = pathlib.Path(__file__).parent.joinpath("data")


def read_csv(name: str):
    with open(DATA.joinpath(name), "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


@pytest.fixture(scope="session")
def table1_golden():
    return read_csv("table1_k7.csv")


@pytest.fixture(scope="session")
def table2_golden():
    return {int(row["k"]): row for row in read_csv("table2.csv")}


@pytest.fixture(scope="session")
def table7():
    return coefficient_table(7)


@pytest.fixture
def fresh_tables():
    clear_tables()
    yield
    clear_tables()


@pytest.fixture(autouse=True)
def reset_root_logger():
    yield
    logger = logging.getLogger()
    for handler in logger.handlers.copy():
        logger.removeHandler(handler)
        handler.close()
    logger.setLevel(logging.WARNING)
