# Copyright 2026 The neon2rvv Authors
# SPDX-License-Identifier: Apache-2.0
"""Smoke test of the Python bindings against the in-tree build.

Run under ctest with NEON2RVV_EXT_DIR pointing at the directory holding the
compiled _neon2rvv extension and NEON2RVV_PKG_DIR at the python/ source tree.
"""

import os
import sys

PKG_DIR = os.environ.get("NEON2RVV_PKG_DIR")
if PKG_DIR and PKG_DIR not in sys.path:
    sys.path.insert(0, PKG_DIR)

import neon2rvv  # noqa: E402

SRC = """#include <arm_neon.h>
int32x4_t f(int32x4_t a, int32x4_t b) { return vaddq_s32(a, b); }
"""


def test_translate():
    res = neon2rvv.translate(SRC, vlen=128)
    assert res["ok"], res["diagnostics"]
    assert res["changed"]
    assert "__riscv_vadd_vv_i32m1(a, b, 4)" in res["text"]
    assert "fixed_vint32m1_t" in res["text"]
    assert "arm_neon.h" not in res["text"]
    assert res["stats"]["call_sites"] == 1
    assert res["stats"]["direct"] == 1

    strict_fail = neon2rvv.translate(SRC, vlen=64, strict=True)
    assert not strict_fail["ok"]
    assert any("int32x4_t" in d for d in strict_fail["diagnostics"])


def test_check():
    res = neon2rvv.check(vlens=[128], cases=5)
    assert res["ok"]
    assert res["total_mismatches"] == 0
    assert res["total_cases"] == len(neon2rvv.catalog()) * 5
    assert "result: OK" in res["text"]


def test_map_type():
    m = neon2rvv.map_type("int32x4_t", vlen=128)
    assert m["mapped"]
    assert m["rvv"] == "vint32m1_t"
    assert m["fixed"] == "fixed_vint32m1_t"

    miss = neon2rvv.map_type("int32x4_t", vlen=64)
    assert not miss["mapped"]
    assert miss["failure"] == "vlen-too-small"

    f16 = neon2rvv.map_type("float16x8_t", vlen=128, zvfh=False)
    assert not f16["mapped"]
    assert f16["failure"] == "missing-zvfh"

    try:
        neon2rvv.map_type("poly8x8_t")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown type must raise")


def test_mapped_type_count():
    assert neon2rvv.mapped_type_count(vlen=32, zvfh=True) == 0
    assert neon2rvv.mapped_type_count(vlen=64, zvfh=True) == 11
    assert neon2rvv.mapped_type_count(vlen=128, zvfh=True) == 22
    assert neon2rvv.mapped_type_count(vlen=128, zvfh=False) == 20


def test_catalog():
    names = neon2rvv.catalog()
    assert len(names) == 455
    assert "vaddq_s32" in names
    assert "vrbitq_u8" in names
    assert len(set(names)) == len(names)


def main():
    tests = [
        test_translate,
        test_check,
        test_map_type,
        test_mapped_type_count,
        test_catalog,
    ]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"py_smoke: {len(tests)} checks passed (version {neon2rvv.__version__})")


if __name__ == "__main__":
    main()
