"""
Reports from the command line
=============================

The ``plgen`` command reads arrangement documents or named families and
writes deterministic text or JSON reports. Here it is driven in-process.
"""

from pathlib import Path

from plgen.cli import main

data = Path(__file__).resolve().parents[1] / "data"

main(["plcheck", str(data / "braid_planes.txt")])
main(["family", "orbit", "--n", "6", "--shape", "2,2,1,1", "--run", "blocker"])
main(["family", "skewlines", "--r", "3", "--run", "plcheck", "--emit", "json"])
