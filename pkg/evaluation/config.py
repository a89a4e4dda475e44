import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Paths
EVAL_DIR = Path(__file__).resolve().parent
RESULTS_DIR = Path(os.getenv("SEPARABLE_RESULTS_DIR", str(EVAL_DIR / "results")))
RESULTS_DIR.mkdir(parents=True, exist_ok=True)

FIGURES_DIR = RESULTS_DIR / "figures"
CHECKS_FILE = RESULTS_DIR / "acceptance_checks.json"

SEED = int(os.getenv("SEPARABLE_SEED", "42"))
DEBUG = os.getenv("SEPARABLE_DEBUG", "false").lower() == "true"

# (name, system, degree) of every figure parameter set
FIGURE_SETS = [
    ("ellipsoidal_D18", {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]}, 18),
    ("ellipsoidal_D19", {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]}, 19),
    ("prolate_D20", {"kind": "Prolate", "params": [2.4]}, 20),
    ("oblate_D20", {"kind": "Oblate", "params": [2.4]}, 20),
    ("lame_D20", {"kind": "Lame", "params": [0.0, 1.0, 2.4]}, 20),
    ("lame_D21", {"kind": "Lame", "params": [0.0, 1.0, 2.4]}, 21),
    ("spherical_D30", {"kind": "Spherical23", "params": []}, 30),
    ("cylindrical_D20", {"kind": "Cylindrical", "params": []}, 20),
    ("s2_ellipsoidal_l20", {"kind": "S2Ellipsoidal", "params": [0.0, 1.0, 2.4]}, 20),
    ("s2_spherical_l20", {"kind": "S2Spherical", "params": []}, 20),
]

# systems checked against the operator matrices, with their parameters
ORACLE_SYSTEMS = [
    {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]},
    {"kind": "Prolate", "params": [2.4]},
    {"kind": "Oblate", "params": [2.4]},
    {"kind": "Lame", "params": [0.0, 1.0, 2.4]},
    {"kind": "Spherical23", "params": []},
    {"kind": "Cylindrical", "params": []},
    {"kind": "S2Ellipsoidal", "params": [0.0, 1.0, 2.4]},
    {"kind": "S2Spherical", "params": []},
]


def get_config(system: dict, degree: int, **overrides) -> dict:
    return {
        "system": system,
        "degree": degree,
        "seed": SEED,
        "debug": DEBUG,
        **overrides,
    }
