"""Builds the extension with cargo, imports it and exercises the bindings.

    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build():
    subprocess.run(
        ["cargo", "build", "--release", "-p", "hamming-vc-python", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libhamming_vc.so"
    out = pathlib.Path(tempfile.mkdtemp()) / "hamming_vc.so"
    shutil.copy(lib, out)
    sys.path.insert(0, str(out.parent))


def main():
    build()
    import hamming_vc as hv

    h24 = hv.HammingParams(2, 4)
    assert (h24.d, h24.q, h24.t) == (2, 4, 1)
    assert h24.vertex_count() == 16

    full = hv.PointSet.full(h24)
    r = hv.vc_dimension(full)
    assert r["dimension"] == 3, r
    assert len(r["witness"]["W"]) == 3
    assert hv.shatters(full, r["witness"]["W"])

    empty = hv.PointSet(h24, [])
    assert hv.vc_dimension(empty)["dimension"] == -1

    u1 = hv.construct("u1", 4)
    assert len(u1) == 8 and hv.vc_dimension(u1)["dimension"] == 1
    assert [0, 0] in u1
    assert hv.PointSet.parse(u1.to_text()) == u1

    try:
        hv.construct("u3", 5)
    except ValueError as e:
        assert "even" in str(e)
    else:
        raise AssertionError("u3 with odd q was accepted")

    fist = hv.detect("fist", full)
    assert fist["kind"] == "Fist" and len(fist["witness"]["W"]) == 3
    assert hv.detect("rectangle", hv.construct("band3", 7, d=3)) is None

    report = hv.check(["T1.3"], [4], mode="exhaustive")
    assert report["exit_code"] == 0
    assert report["reports"][0]["work"] == 560
    json.dumps(report)

    m_star, cert = hv.threshold(hv.HammingParams(2, 3), 2)
    assert m_star == 6 and len(cert) == 5

    print("smoke test passed")


if __name__ == "__main__":
    main()
