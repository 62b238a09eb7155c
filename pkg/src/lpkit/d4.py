"""The dihedral group D4 acting on parameter arrays and end-entries.

Words are strings over ``s`` (star), ``d`` (down) and ``D`` (double down),
applied left to right.  The unicode letters ``*``, ``↓`` and ``⇓`` are
accepted as aliases.
"""

from __future__ import annotations

from .parray import ParameterArray, require_valid

GENERATORS = ("s", "d", "D")
_ALIASES = {"*": "s", "∗": "s", "↓": "d", "⇓": "D", "s": "s", "d": "d", "D": "D"}

# the eight elements as normal-form words s^a d^b D^c
ELEMENTS = ("", "s", "d", "D", "dD", "sd", "sD", "sdD")


def parse_word(word: str) -> str:
    try:
        return "".join(_ALIASES[ch] for ch in word)
    except KeyError as exc:
        raise ValueError(f"bad D4 letter {exc.args[0]!r} in {word!r}") from None


def normal_form(word: str) -> str:
    """Reduce a word with s^2 = d^2 = D^2 = 1, Ds = sd, ds = sD, dD = Dd."""
    star = down = ddown = 0
    for letter in parse_word(word):
        if letter == "s":
            # s^a d^b D^c s = s^(a+1) d^c D^b
            star ^= 1
            down, ddown = ddown, down
        elif letter == "d":
            down ^= 1
        else:
            ddown ^= 1
    return "s" * star + "d" * down + "D" * ddown


def _apply_letter(pa: ParameterArray, letter: str) -> ParameterArray:
    th, ths, vp, ph = pa.theta, pa.theta_star, pa.varphi, pa.phi
    if letter == "d":
        return ParameterArray(pa.field, pa.d, th, ths[::-1], ph[::-1], vp[::-1])
    if letter == "D":
        return ParameterArray(pa.field, pa.d, th[::-1], ths, ph, vp)
    return ParameterArray(pa.field, pa.d, ths, th, vp, ph[::-1])


def apply(pa: ParameterArray, word: str, check: bool = True) -> ParameterArray:
    """Image of ``pa`` under ``word``; the result is re-validated when ``check``."""
    if check:
        require_valid(pa)
    for letter in parse_word(word):
        pa = _apply_letter(pa, letter)
    if check:
        require_valid(pa)
    return pa


def orbit(pa: ParameterArray) -> set:
    require_valid(pa)
    return {apply(pa, w, check=False) for w in ELEMENTS}


def apply_to_ends(ends, word: str):
    """Transform an :class:`~lpkit.endentry.EndEntries` record.

    down reverses theta* and the principal sequence; double down reverses theta
    and the dual principal sequence; star exchanges starred and unstarred data.
    """
    from .endentry import EndEntries

    for letter in parse_word(word):
        e = ends
        if letter == "d":
            ends = EndEntries(e.th0, e.thd, e.thsd, e.ths0, e.ad, e.a0, e.as0, e.asd, e.d, e.field)
        elif letter == "D":
            ends = EndEntries(e.thd, e.th0, e.ths0, e.thsd, e.a0, e.ad, e.asd, e.as0, e.d, e.field)
        else:
            ends = EndEntries(e.ths0, e.thsd, e.th0, e.thd, e.as0, e.asd, e.a0, e.ad, e.d, e.field)
    return ends
