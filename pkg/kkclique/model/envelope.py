"""
This module holds the envelope passed between the command implementations
and the renderers.
"""
from dataclasses import dataclass, field
from typing import Any, List, Tuple

FORMATS = ("plain", "csv", "structured")


@dataclass
class OutputEnvelope:
    """
    The mid-level object between the library calls and the text written to
    stdout. A command fills one envelope; the renderer turns it into text.

    Attributes:
    -----------
        command: str
            Subcommand name
        parameters: list of (str, value)
            Arguments in the order they were given
        result: Any
            Payload: an int, a str, a dict, a list of dicts or a DataFrame
        format: str
            One of plain, csv, structured
        passed: bool
            False when a verification in the payload failed (exit code 1)

    Methods:
    --------
        render(): str
            returns the rendered text, byte-identical for identical input
    """
    command: str
    parameters: List[Tuple[str, Any]] = field(default_factory=list)
    result: Any = None
    format: str = "plain"
    passed: bool = True

    def __post_init__(self) -> None:
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")

    def render(self) -> str:
        from kkclique.report_generation.render import render
        return render(self)
