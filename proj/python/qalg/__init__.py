"""Quantities, ensembles and states in finite-dimensional Q-algebras."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_demo as _run_demo

COMMANDS = ("chsh", "mermin-peres", "hydrogen", "moon", "weak-law", "complementarity", "evolve", "axioms",
            "probability")


def run(command, seed=42, tol=None, input=None):
    """Runs one CLI command and returns its report as a dict.

    `input` is the document the CLI reads with --file, given as a dict or a JSON string.
    """
    if isinstance(input, dict):
        input = json.dumps(input)
    return json.loads(_run_demo(command, seed, tol, input))
