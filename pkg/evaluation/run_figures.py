"""Regenerate the spectrum and action data of every figure parameter set as CSV and SVG."""
import argparse
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from evaluation.config import FIGURE_SETS, FIGURES_DIR, get_config
from cli.commands import cmd_actions, cmd_spectrum
from core.api import SpectraConfig
from tqdm import tqdm


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--output_dir", type=str, default=str(FIGURES_DIR))
    parser.add_argument("--only", type=str, default=None, help="Run a single named parameter set")
    args = parser.parse_args()

    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    sets = [s for s in FIGURE_SETS if args.only is None or s[0] == args.only]

    for name, system, degree in tqdm(sets, desc="Figures"):
        on_s2 = system["kind"].startswith("S2")
        for fmt in ("csv", "svg"):
            config = SpectraConfig(**get_config(system, degree, output=fmt))
            (out_dir / f"{name}_spectrum.{fmt}").write_text(cmd_spectrum(config), encoding="utf-8")
            if not on_s2:
                (out_dir / f"{name}_actions.{fmt}").write_text(cmd_actions(config), encoding="utf-8")
    print(f"Saved to {out_dir}")


if __name__ == "__main__":
    main()
