#!/usr/bin/env python3
"""End-to-end checks of the ggt command line: exit codes, config handling,
and byte-identical reports per seed (modulo the timestamp field)."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

GGT = sys.argv[1] if len(sys.argv) > 1 else "ggt"
failures = []


def check(name, cond, extra=""):
    if cond:
        print(f"  ok   {name}")
    else:
        failures.append(name)
        print(f"  FAIL {name} {extra}")


def run(*args, config=None):
    argv = [GGT, *args]
    return subprocess.run(argv, capture_output=True, text=True, timeout=300)


def strip_timestamp(text):
    data = json.loads(text)
    data.pop("timestamp", None)
    return json.dumps(data, sort_keys=True)


def main():
    tmp = Path(tempfile.mkdtemp())

    # list: at least 6 suites, machine-readable variant agrees
    r = run("list")
    check("list exits 0", r.returncode == 0)
    r_json = run("list", "--format", "json")
    suites = json.loads(r_json.stdout)
    check("list has >= 6 suites", len(suites) >= 6, str(len(suites)))
    for entry in suites:
        check(f"{entry['id']} appears in text listing", entry["id"] in r.stdout)

    # determinism: same seed twice -> byte-identical modulo timestamp
    out1, out2 = tmp / "a.json", tmp / "b.json"
    r1 = run("run", "--suite", "proximality", "--seed", "31", "--budget", "12", "--out", str(out1))
    r2 = run("run", "--suite", "proximality", "--seed", "31", "--budget", "12", "--out", str(out2))
    check("run exits 0", r1.returncode == 0 and r2.returncode == 0, r1.stderr)
    check("reports byte-identical modulo timestamp",
          strip_timestamp(out1.read_text()) == strip_timestamp(out2.read_text()))
    different = run("run", "--suite", "proximality", "--seed", "32", "--budget", "12",
                    "--out", str(tmp / "c.json"))
    check("different seed still passes", different.returncode == 0)

    # empty budget: exit 0, empty report
    r = run("run", "--suite", "criterion", "--seed", "1", "--budget", "0", "--out", str(tmp / "e.json"))
    check("budget 0 exits 0", r.returncode == 0, r.stderr)
    check("budget 0 report is empty", json.loads((tmp / "e.json").read_text())["items"] == [])

    # explain renders the per-condition verdicts
    rep = tmp / "crit.json"
    run("run", "--suite", "criterion", "--seed", "5", "--budget", "4", "--out", str(rep))
    ex = run("explain", str(rep))
    check("explain exits 0", ex.returncode == 0)
    for cond in ["(C)", "(2T)", "(3T)", "(L)"]:
        check(f"explain shows {cond}", cond in ex.stdout)

    # schema mismatch and truncated files are rejected with the usage code
    bad = tmp / "bad.json"
    bad.write_text('{"schema_version": 99}')
    check("explain rejects wrong schema", run("explain", str(bad)).returncode == 2)
    trunc = tmp / "trunc.json"
    trunc.write_text(rep.read_text()[: len(rep.read_text()) // 2])
    check("explain rejects truncated report", run("explain", str(trunc)).returncode == 2)

    # usage errors: missing seed, unknown suite (catalog echoed), bad config keys
    check("missing seed rejected", run("run", "--suite", "delta").returncode == 2)
    unk = run("run", "--suite", "no-such-suite", "--seed", "1")
    check("unknown suite rejected", unk.returncode == 2)
    check("catalog echoed on unknown suite", "clopen-algebra" in unk.stderr)

    cfg = tmp / "cfg.json"
    cfg.write_text(json.dumps({"suite": "delta", "seed": 7, "budget": 3, "bogus_key": 1}))
    bad_cfg = run("run", "--config", str(cfg))
    check("unknown config key rejected", bad_cfg.returncode == 2)
    check("unknown key named", "bogus_key" in bad_cfg.stderr)

    cfg.write_text(json.dumps({"suite": "delta", "seed": 7, "budget": 3}))
    good_cfg = run("run", "--config", str(cfg), "--out", str(tmp / "cfg_rep.json"))
    check("config run exits 0", good_cfg.returncode == 0, good_cfg.stderr)

    # graph-flavoured run with DOT export
    dot = tmp / "cone.dot"
    cone = run("run", "--suite", "coneoff", "--seed", "3", "--budget", "1",
               "--out", str(tmp / "cone.json"), "--dot", str(dot))
    check("coneoff run exits 0", cone.returncode == 0, cone.stderr)
    check("DOT export emitted", dot.exists() and "dashed" in dot.read_text())

    # missing config file: I/O error code
    check("missing config file -> io error", run("run", "--config", str(tmp / "nope.json")).returncode == 3)

    if failures:
        print(f"{len(failures)} CLI checks failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
