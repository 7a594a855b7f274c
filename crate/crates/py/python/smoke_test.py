"""Builds the extension module and exercises it from Python.

Run from the repository root: python3 crates/py/python/smoke_test.py
"""

import importlib.util
import json
import pathlib
import shutil
import subprocess
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[3]


def load_module():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "toc-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libtoc.so"
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / ("toc" + sysconfig.get_config_var("EXT_SUFFIX"))
    shutil.copy(built, target)
    spec = importlib.util.spec_from_file_location("toc", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main():
    toc = load_module()

    cert = toc.construct(3, 9, 5, 3)
    doc = json.loads(cert)
    assert doc["schema"] == 1
    assert len(doc["tiles"]) == 112, len(doc["tiles"])
    verdict = json.loads(toc.verify(cert))
    assert verdict["ok"], verdict

    doc["tiles"][1].append(doc["tiles"][0].pop())
    verdict = json.loads(toc.verify(json.dumps(doc)))
    assert not verdict["ok"]
    assert any(f["kind"] == "distance_violation" for f in verdict["failures"])

    bound = json.loads(toc.bound(2, 10, 4, 3))
    assert bound["exact"] == 13, bound

    try:
        toc.construct(2, 10, 4, 3)
    except ValueError as e:
        assert "A_2(n,4,3)" in str(e)
    else:
        raise AssertionError("TOC_2(10,4,3) should not exist")

    assert "toc_3_4_4_3" in toc.catalog_names()
    text = toc.paper_style_text(toc.construct(3, 4, 4, 3, method="catalog"))
    assert text.splitlines()[0] == "TOC_3(4,4,3): 16 tiles"

    passed, line = toc.acceptance_criterion(1)
    assert passed, line
    print("python smoke test passed")


if __name__ == "__main__":
    sys.exit(main())
