"""Rewrite tests/golden/*.txt from the current CLI output.  Review the diff before committing."""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from test_acceptance import GOLDEN, GOLDEN_CASES, golden_text  # noqa: E402

GOLDEN.mkdir(exist_ok=True)
for name, argv in GOLDEN_CASES:
    (GOLDEN / f"{name}.txt").write_text(golden_text(name, argv), encoding="utf-8")
    print("wrote", name)
