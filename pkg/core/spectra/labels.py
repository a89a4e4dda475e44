"""Names and plot colours of symmetry classes."""

import re
from typing import Dict, Sequence, Tuple

from core.models import QuantumState
from core.spectra.base import class_key
from core.utils.exceptions import InvalidProblem

# Lame functions in Jacobi form per class (mu2, mu3, mu4); d and m are the template indices
LAME_LABEL_TEMPLATES: Dict[Tuple[int, int, int], str] = {
    (0, 0, 0): "Ec_{2d}^{2m}",
    (1, 0, 0): "Ec_{2d+1}^{2m+1}",
    (0, 1, 0): "Es_{2d+1}^{2m+1}",
    (0, 0, 1): "Ec_{2d+1}^{2m}",
    (1, 1, 0): "Es_{2d+1}^{2m+2}",
    (1, 0, 1): "Ec_{2d+2}^{2m+1}",
    (0, 1, 1): "Es_{2d+2}^{2m+1}",
    (1, 1, 1): "Es_{2d+3}^{2m+2}",
}

ELLIPSOIDAL_COLOURS = {
    "0000": "blue",
    "1100": "red",
    "1010": "magenta",
    "1001": "green",
    "0110": "brown",
    "0101": "black",
    "0011": "cyan",
    "1111": "orange",
    "1000": "purple",
    "0100": "gold",
    "0010": "grey",
    "0001": "pink",
    "1110": "lightblue",
    "1101": "darkgreen",
    "0111": "lightcoral",
    "1011": "saddlebrown",
}

TWO_BIT_COLOURS = {
    "Prolate": {"00": "blue", "10": "orange", "01": "red", "11": "cyan"},
    "Oblate": {"00": "blue", "10": "red", "01": "orange", "11": "cyan"},
}

S2_ELLIPSOIDAL_COLOURS = {
    "000": "blue",
    "110": "purple",
    "101": "orange",
    "011": "gray",
    "100": "red",
    "010": "green",
    "001": "cyan",
    "111": "brown",
}

FALLBACK_COLOURS = (
    "blue",
    "red",
    "orange",
    "cyan",
    "green",
    "purple",
    "brown",
    "gray",
    "magenta",
    "olive",
    "pink",
    "gold",
    "black",
    "teal",
    "navy",
    "darkgreen",
)


def lame_label_template(mu: Sequence[int]) -> str:
    key = tuple(int(b) for b in mu)
    if key not in LAME_LABEL_TEMPLATES:
        raise InvalidProblem(f"Lame class must be three bits, got {mu}")
    return LAME_LABEL_TEMPLATES[key]


def lame_function_label(d: int, m_index: int, mu: Sequence[int]) -> str:
    """
    Ec/Es name of the Lame function of a class with its indices filled in.

    Args:
        d: Lame polynomial degree
        m_index: Index of the eigenvalue within the class, 0 <= m_index <= d
        mu: Class bits (mu2, mu3, mu4)

    Returns:
        e.g. "Ec_{4}^{2}" for d=2, m_index=1, mu=(0,0,0)
    """
    if d < 0 or not 0 <= m_index <= d:
        raise InvalidProblem(f"Need 0 <= m_index <= d, got d={d}, m_index={m_index}")
    template = lame_label_template(mu)

    def substitute(match: re.Match) -> str:
        expr = match.group(1)
        value = eval_index(expr, d, m_index)
        return "{" + str(value) + "}"

    return re.sub(r"\{([^}]*)\}", substitute, template)


def eval_index(expr: str, d: int, m: int) -> int:
    """Value of an index expression of the form '2d+1' or '2m'."""
    match = re.fullmatch(r"2([dm])(?:\+(\d))?", expr)
    if match is None:
        raise InvalidProblem(f"Unsupported index expression {expr!r}")
    base = d if match.group(1) == "d" else m
    return 2 * base + int(match.group(2) or 0)


def state_label(state: QuantumState) -> str:
    """Lame function name for Lame states, class bits otherwise."""
    if state.system == "Lame":
        return lame_function_label(state.numbers["d"], state.numbers["k"], state.symmetry[1:])
    return class_key(state.symmetry)


def class_colour(system: str, bits: str) -> str:
    """Plot colour of a symmetry class key."""
    if system == "Ellipsoidal":
        return ELLIPSOIDAL_COLOURS.get(bits, "black")
    if system in TWO_BIT_COLOURS:
        return TWO_BIT_COLOURS[system].get(bits, "black")
    if system == "S2Ellipsoidal":
        return S2_ELLIPSOIDAL_COLOURS.get(bits, "black")
    if system == "Spherical23":
        return TWO_BIT_COLOURS["Oblate"].get(bits[:2], "black")
    return FALLBACK_COLOURS[int(bits, 2) % len(FALLBACK_COLOURS)] if bits else "black"
