#!/usr/bin/env python3
"""Smoke test for the upperspace_py extension module.

Builds nothing itself: expects `cargo build -p upperspace-py` to have run,
then loads the cdylib straight from the target directory.
"""

import importlib.util
import json
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    for profile in ("debug", "release"):
        for stem in ("libupperspace_py.so", "upperspace_py.dylib", "upperspace_py.dll"):
            candidate = ROOT / "target" / profile / stem
            if candidate.exists():
                spec = importlib.util.spec_from_file_location("upperspace_py", candidate)
                module = importlib.util.module_from_spec(spec)
                spec.loader.exec_module(module)
                return module
    sys.exit("build the extension first: cargo build -p upperspace-py")


def main():
    up = load_module()

    diamond = up.Poset.from_json(json.dumps({
        "elements": ["bot", "a", "b", "top"],
        "leq": [["bot", "a"], ["bot", "b"], ["a", "top"], ["b", "top"]],
    }))
    assert diamond.leq("bot", "top")
    assert not diamond.leq("a", "b")

    scott = diamond.scott_space()
    assert scott.open_count() == 6
    assert scott.is_t0()
    assert scott.closure(["top"]) == ["bot", "a", "b", "top"]
    assert scott.saturation(["bot"]) == ["bot", "a", "b", "top"]

    report = json.loads(scott.analyze())
    assert report["sober"]["holds"]
    assert report["well_filtered"]["holds"]
    assert report["d_space"]["holds"]

    uv_json, sidecar_json = scott.powerspace()
    uv = json.loads(uv_json)
    sidecar = json.loads(sidecar_json)
    assert len(sidecar["elements"]) == 5  # nonempty up-sets of the diamond
    assert ["bot", "{bot,a,b,top}"] in sidecar["canonical_map"]
    assert set(uv["points"]) == set(sidecar["elements"])

    spec = scott.specialization_poset()
    assert spec.leq("bot", "a") and not spec.leq("a", "bot")

    frame = json.loads(diamond.frame_check(42))
    assert frame["frame_law"] and frame["spatial"] and frame["residuation"]
    assert frame["element_count"] == 5

    omega = json.loads(up.gallery("omega-cocountable-model"))
    assert omega["sober"] is False and omega["well_filtered"] is True

    suite = json.loads(up.suite(seed=7))
    assert suite["pass"], suite
    assert len(suite["criteria"]) == 9

    print("smoke test passed")


if __name__ == "__main__":
    main()
