"""
The command-line tool
=====================

Functors, modules and point sets are exchanged as JSON files with integers
written as decimal strings.  This script writes a few files to a temporary
directory and runs the ``fpfunctors`` command on them.
"""

import json
import pathlib
import tempfile

from fpfunctors.cli import run
from fpfunctors.functors import forgetful, simple_functor
from fpfunctors.serialization import closed_set_to_json, functor_to_json
from fpfunctors.ziegler import ClosedSet, PrimeSet

workdir = pathlib.Path(tempfile.mkdtemp())
(workdir / "s21.json").write_text(json.dumps(functor_to_json(simple_functor(2, 1))))
(workdir / "forgetful.json").write_text(json.dumps(functor_to_json(forgetful())))
apq = ClosedSet(True, PrimeSet.all_except(), PrimeSet.all_except(), "none")
(workdir / "apq_all.json").write_text(json.dumps(closed_set_to_json(apq)))

for args in [
    ["hilbert", "s21.json", "--prime", "2", "--n-max", "3"],
    ["eval", "forgetful.json", "--at", "Z/8"],
    ["member", "s21.json", "--set", "apq_all.json"],
    ["invariants", "s21.json"],
    ["--format", "json", "hilbert", "s21.json", "--prime", "2", "--polynomial"],
]:
    resolved = [str(workdir / a) if a.endswith(".json") else a for a in args]
    print("$ fpfunctors", " ".join(args))
    code = run(resolved)
    print(f"(exit {code})\n")
