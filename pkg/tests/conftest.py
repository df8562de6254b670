import pathlib

import pytest

from oak import TripleStore, build_demo_repository, build_ontology

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def ontology():
    return build_ontology()


@pytest.fixture(scope="session")
def listing_text():
    return (FIXTURES / "classifier_010.ttl").read_text(encoding="utf-8")


@pytest.fixture()
def listing_store(listing_text):
    return TripleStore.from_turtle(listing_text)


@pytest.fixture(scope="session")
def corpus_store(ontology):
    return build_demo_repository(ontology)
