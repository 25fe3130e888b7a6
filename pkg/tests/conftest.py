"""Shared fixtures: the canonical ring registry, an in-process CLI runner,
and a JSON-schema validator wired up for the package's cross-file refs."""

from __future__ import annotations

import contextlib
import io
import json
import os

import pytest

import frametc
from frametc.catalog import catalog_entries
from frametc.cli import main


@pytest.fixture(scope="session")
def entries():
    return catalog_entries()


@pytest.fixture(scope="session")
def small_entries(entries):
    """Every catalog ring small enough for exhaustive cross-checks."""
    return [e for e in entries if e.algebra.dim <= 16]


@pytest.fixture(scope="session")
def run_cli():
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def run(argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
        return code, out.getvalue(), err.getvalue()

    return run


@pytest.fixture(scope="session")
def schema_validator():
    """Build a validator for one of the shipped schemas.

    The schemas reference each other by bare file name, so every file in the
    schema directory is registered under that name before validating.
    """
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")

    schema_dir = os.path.join(os.path.dirname(frametc.__file__), "schemas")
    registry = referencing.Registry()
    for name in sorted(os.listdir(schema_dir)):
        with open(os.path.join(schema_dir, name), encoding="utf-8") as fh:
            contents = json.load(fh)
        registry = registry.with_resource(
            uri=name, resource=referencing.Resource.from_contents(contents)
        )

    def make(schema_name):
        with open(os.path.join(schema_dir, schema_name), encoding="utf-8") as fh:
            schema = json.load(fh)
        cls = jsonschema.validators.validator_for(schema)
        return cls(schema, registry=registry)

    return make
