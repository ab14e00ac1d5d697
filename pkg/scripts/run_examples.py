"""Verify every bundled fixture and print a summary table."""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from twofrob.cli import parse_spec
from twofrob.formulas import verify
from twofrob.group import DEFAULT_ENUM_CAP

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@dataclass
class RunConfig:
    fixtures: Path = FIXTURES
    enum_cap: int = DEFAULT_ENUM_CAP
    skip: tuple[str, ...] = ()


def run(cfg: RunConfig) -> bool:
    all_ok = True
    print(f"{'fixture':<10} {'order':>10} {'kind':<12} {'case':<4} {'Δ':>7} {'Γ':>7} {'time':>7}  status")
    for path in sorted(cfg.fixtures.glob("*.json")):
        if path.stem in cfg.skip:
            continue
        parsed = parse_spec(json.loads(path.read_text()))
        t0 = time.perf_counter()
        source = parsed.affine if parsed.affine is not None else parsed.enumerate(cfg.enum_cap)
        rep = verify(source, spec=parsed.document, enum_cap=cfg.enum_cap)
        dt = time.perf_counter() - t0
        det = rep.detection
        counts = {c["graph"]: c["value"] for c in rep.counts}
        all_ok &= rep.ok
        print(
            f"{path.stem:<10} {rep.order:>10} {det.get('kind', '-'):<12} {det.get('case') or '-':<4} "
            f"{counts.get('cyclic', '-'):>7} {counts.get('commuting', '-'):>7} {dt:>6.1f}s  {'ok' if rep.ok else 'MISMATCH'}"
        )
    return all_ok


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    ap.add_argument("--skip", nargs="*", default=[], help="fixture names to skip, e.g. example5")
    args = ap.parse_args()
    ok = run(RunConfig(enum_cap=args.enum_cap, skip=tuple(args.skip)))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
