"""Reference contexts used by tests, the CLI and the verifier."""

from __future__ import annotations

from importlib import resources

from richfca.context import FormalContext
from richfca.cxt import read_cxt


def _load(name: str) -> FormalContext:
    return read_cxt(resources.files("richfca.data").joinpath(name).read_text("utf-8"))


def figure1() -> FormalContext:
    """5x5 context with 15 concepts; objects g..k, attributes m..q."""
    return _load("fig1.cxt")


def figure7() -> FormalContext:
    """5x6 context with 22 concepts that no single edit can enlarge."""
    return _load("fig7.cxt")


def three_chain() -> FormalContext:
    """Standard context of the three-element chain."""
    return FormalContext.from_strings(["X.", ".."], ["1", "2"], ["a", "b"])


# The complete system of co_extent(m)-mixed generators listed for figure1().
FIGURE1_SYSTEM = ("", "g", "gh", "gi", "gj", "gk", "h", "hi", "hij", "hijk",
                  "i", "ij", "ijk", "j", "k")
