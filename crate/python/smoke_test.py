"""Builds the extension module and checks a few values from Python.

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build() -> Path:
    subprocess.run(
        ["cargo", "build", "--release", "-p", "schur-ratio-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    suffix = {"darwin": "dylib", "win32": "dll"}.get(sys.platform, "so")
    prefix = "" if sys.platform == "win32" else "lib"
    return ROOT / "target" / "release" / f"{prefix}schur_ratio_py.{suffix}"


def main() -> None:
    lib = build()
    with tempfile.TemporaryDirectory() as tmp:
        ext = ".pyd" if sys.platform == "win32" else ".so"
        shutil.copy(lib, Path(tmp) / f"schur_ratio_py{ext}")
        sys.path.insert(0, tmp)
        import schur_ratio_py as sr

        assert [sr.ratio(d) for d in range(2, 6)] == [2, 14, 78, 418]
        assert (sr.fam_volume(2), sr.v0(2), sr.v1(2)) == (4, Fraction(4, 3), Fraction(8, 3))
        assert sr.v1(3) / sr.v0(3) == 14
        assert sr.MonicPolynomial([0, Fraction(1, 2), 0]).classify() == ("classified", 1)
        est = sr.estimate_volumes(2, 20000, threads=2)
        assert abs(est["estimates"][0] - 4 / 3) < 5 * est["std_errors"][0]
        print("smoke test passed:", sr.records(4)[4])


if __name__ == "__main__":
    main()
