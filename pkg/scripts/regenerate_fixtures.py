#!/usr/bin/env python3
"""
Rebuild the small-gear fixture file from the exact solver.

Each gear G_2 .. G_6 is solved from scratch; the witness replaces the stored
labeling only when the span matches the recorded one, so a regression in the
solver cannot silently rewrite the fixtures.

Usage:
    python scripts/regenerate_fixtures.py [--max-n 6] [--time-budget 600] [--write]
"""

import argparse
import sys

from radiolabel.config import SolverConfig
from radiolabel.exceptions import RadioLabelError
from radiolabel.fixtures import FixtureStore, GearFixture, regenerate_fixture


def regenerate(
    store: FixtureStore, max_n: int, config: SolverConfig
) -> tuple[bool, list[GearFixture]]:
    """Solve every stored gear up to ``max_n``; report whether all spans match."""
    ok = True
    fixtures: list[GearFixture] = []
    for stored in store.list_fixtures():
        if stored.n > max_n:
            fixtures.append(stored)
            continue
        try:
            fresh = regenerate_fixture(stored.n, config)
        except RadioLabelError as e:
            print(f"❌ G_{stored.n}: {e}")
            ok = False
            fixtures.append(stored)
            continue

        if fresh.span != stored.span:
            print(f"❌ G_{stored.n}: solver span {fresh.span}, stored {stored.span}")
            ok = False
            fixtures.append(stored)
        else:
            print(f"✅ G_{stored.n}: span {fresh.span}")
            fixtures.append(fresh)

    return ok, fixtures


def main() -> None:
    """Main entry point."""
    parser = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    parser.add_argument("--fixtures", default=None, help="Fixture YAML to update")
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--time-budget", type=float, default=600.0)
    parser.add_argument(
        "--write", action="store_true", help="Write the solver witnesses back"
    )
    args = parser.parse_args()

    store = FixtureStore(args.fixtures)
    config = SolverConfig(time_budget=args.time_budget)
    print(f"🔍 Regenerating fixtures in {store.file_path}")

    ok, fixtures = regenerate(store, args.max_n, config)
    if not ok:
        sys.exit(1)

    if args.write:
        store.write(fixtures)
        print("\n🎉 Fixtures rewritten from solver witnesses")


if __name__ == "__main__":
    main()
