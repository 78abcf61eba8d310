"""Run every moonshine-frame check and print the step report."""

import argparse
import json
from dataclasses import dataclass
from pathlib import Path

from framedcodes import run_demo


@dataclass
class DemoConfig:
    trunc: int = 8
    json_out: Path | None = None


def main(cfg: DemoConfig) -> int:
    report = run_demo(cfg.trunc)
    print(report)
    total = sum(s.seconds for s in report.steps)
    print(f"total {total:.2f}s")
    if cfg.json_out is not None:
        cfg.json_out.write_text(json.dumps(report.to_dict(), indent=2))
        print(f"wrote {cfg.json_out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trunc", type=int, default=DemoConfig.trunc)
    ap.add_argument("--json-out", type=Path)
    a = ap.parse_args()
    raise SystemExit(main(DemoConfig(a.trunc, a.json_out)))
