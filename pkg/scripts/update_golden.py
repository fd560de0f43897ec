"""Regenerate fixtures/golden from the shipped documents (seed 0, machine format)."""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
GOLDEN = FIXTURES / "golden"


def main():
    GOLDEN.mkdir(exist_ok=True)
    codes = {}
    for doc in sorted(FIXTURES.glob("*.cdoc")):
        proc = subprocess.run([sys.executable, "-m", "courantkit", "run", str(doc), "--machine", "--seed", "0"],
                              capture_output=True, text=True)
        (GOLDEN / f"{doc.stem}.tsv").write_text(proc.stdout)
        codes[doc.name] = proc.returncode
        print(f"{doc.name}: exit {proc.returncode}, {len(proc.stdout.splitlines())} checks")
    (GOLDEN / "exit_codes.json").write_text(json.dumps(codes, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
