"""The bundled law-check runner over the built-in catalog."""

import pytest

from schreier.errors import ShapeError
from schreier.suite import SCOPES, as_dict, run_suite


def test_scope_names():
    assert SCOPES == (
        "monoid-core",
        "fibration-analysis",
        "lax-action",
        "grothendieck",
        "cleavage-transport",
        "automorphism",
        "cohomology-extensions",
        "cli-toolkit",
    )


@pytest.mark.parametrize("scope", SCOPES)
def test_each_scope_passes(scope):
    verdicts = run_suite(scope=scope)
    assert verdicts, scope
    for v in verdicts:
        assert v.passed, (scope, v.key, v.witness, v.detail)


def test_unknown_scope():
    with pytest.raises(ShapeError):
        run_suite(scope="everything")


def test_as_dict_rejects_duplicates(entries):
    e = entries["c4"]
    with pytest.raises(ShapeError):
        as_dict([e, e])


def test_all_scope_is_union():
    per_scope = set()
    for scope in SCOPES:
        per_scope |= {v.key for v in run_suite(scope=scope)}
    combined = {v.key for v in run_suite(scope="all")}
    assert combined == per_scope
