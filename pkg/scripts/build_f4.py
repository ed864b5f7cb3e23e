#!/usr/bin/env python3
"""Force a fresh build of the exceptional algebra, report timings, and run
the invariant battery.

Usage: python scripts/build_f4.py [--keep-cache]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from realflag import jordan
from realflag.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--keep-cache", action="store_true",
                    help="reuse the disk cache instead of rebuilding")
    args = ap.parse_args()

    t0 = time.monotonic()
    bundle = jordan.f4_bundle(rebuild=not args.keep_cache)
    print(f"bundle ready in {time.monotonic() - t0:.2f}s "
          f"(solver: {bundle.provenance['build_seconds']}s at build time)")
    print(f"cache: {jordan.cache_path()}")
    print(f"table hash: {bundle.provenance['table_hash'][:16]}...")
    print(f"symmetric subalgebras: {bundle.symmetric_status}")
    print()
    return cli_main(["f4", "verify", "--samples", "50"])


if __name__ == "__main__":
    sys.exit(main())
