"""Run the acceptance tests and print only the per-criterion summary.

    python3 scripts/run_acceptance.py
"""

import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]


def main():
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", str(ROOT / "tests" / "test_acceptance.py")],
        capture_output=True, text=True, cwd=ROOT,
    )
    lines = [line for line in proc.stdout.splitlines() if line.startswith("criterion")]
    print("\n".join(lines) if lines else proc.stdout)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
