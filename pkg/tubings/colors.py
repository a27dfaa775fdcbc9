"""Colouring of text reports.

Each kind of output line has a role (heading, note, failure detail, verdict,
coefficient sign) and each role one ANSI style. Colour is used only when the
mode, NO_COLOR/FORCE_COLOR and the output stream allow it.
"""

from __future__ import annotations

from enum import Enum
import os
import re
import sys
from typing import Optional, TextIO


class ColorMode(Enum):
    """Color output mode: AUTO, NEVER, or ALWAYS."""
    AUTO = "auto"
    NEVER = "never"
    ALWAYS = "always"


class Role(Enum):
    """Report element → SGR parameters."""
    HEADING = "1"
    NOTE = "2"
    FAILURE = "31"
    PASS = "1;32"
    FAIL = "1;31"
    POSITIVE = "32"
    NEGATIVE = "31"


class ColorConfig:
    """Whether a report stream gets ANSI styles; decided once, on first use."""

    def __init__(self, mode: ColorMode = ColorMode.AUTO, stream: Optional[TextIO] = None):
        self.mode = mode
        self.stream = stream if stream is not None else sys.stdout
        self._enabled: Optional[bool] = None

    @property
    def enabled(self) -> bool:
        if self._enabled is None:
            self._enabled = self._decide()
        return self._enabled

    def _decide(self) -> bool:
        if self.mode is not ColorMode.AUTO:
            return self.mode is ColorMode.ALWAYS
        if os.environ.get('NO_COLOR'):
            return False
        if os.environ.get('FORCE_COLOR'):
            return True
        isatty = getattr(self.stream, 'isatty', None)
        return bool(isatty and isatty())

    def reset(self) -> None:
        """Forget the cached decision (tests change the environment)."""
        self._enabled = None


_SGR = re.compile(r'\x1b\[[0-9;]*m')


def strip_ansi(text: str) -> str:
    return _SGR.sub('', text)


def paint(text: str, role: Role, cc: ColorConfig) -> str:
    if not cc.enabled:
        return text
    return f"\033[{role.value}m{text}\033[0m"


def heading(text: str, cc: ColorConfig) -> str:
    return paint(text, Role.HEADING, cc)


def note(text: str, cc: ColorConfig) -> str:
    return paint(text, Role.NOTE, cc)


def failure_detail(text: str, cc: ColorConfig) -> str:
    return paint(text, Role.FAILURE, cc)


def status_label(passed: bool, cc: ColorConfig) -> str:
    """PASS in bold green or FAIL in bold red."""
    return paint("PASS", Role.PASS, cc) if passed else paint("FAIL", Role.FAIL, cc)


def signed_coefficient(coeff: int, cc: ColorConfig) -> str:
    """``+k`` in green, ``-k`` in red."""
    if coeff > 0:
        return paint(f"+{coeff}", Role.POSITIVE, cc)
    return paint(f"-{-coeff}", Role.NEGATIVE, cc)


_FLAG_MODES = {'always': ColorMode.ALWAYS, 'never': ColorMode.NEVER}


def determine_color_mode(args) -> ColorMode:
    """JSON output is never coloured; otherwise the last of --color/--no-color wins."""
    if args.json:
        return ColorMode.NEVER
    return _FLAG_MODES.get(args.color_mode, ColorMode.AUTO)
