"""
Output for every command: one JSON object under ``--json``, otherwise
aligned text tables. ``NO_COLOR`` disables styling of status cells.
"""
import json
import os
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

PASS = "pass"
FAIL = "fail"
REPORTED = "reported"

_STATUS_COLOURS = {PASS: "green", FAIL: "red", REPORTED: "yellow"}


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    status: str

    @classmethod
    def compare(cls, name: str, expected: Any, actual: Any) -> "Check":
        status = PASS if expected == actual else FAIL
        return cls(name, str(expected), str(actual), status)

    @classmethod
    def reported(cls, name: str, expected: Any, actual: Any) -> "Check":
        return cls(name, str(expected), str(actual), REPORTED)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def as_dict(self) -> Dict[str, str]:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
        }


@dataclass
class Table:
    headers: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    stylers: Dict[int, Callable[[str], str]] = field(default_factory=dict)

    def render(self) -> str:
        cells = [[str(h) for h in self.headers]] + [
            [str(c) for c in row] for row in self.rows
        ]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.headers))]
        lines = []
        for n, row in enumerate(cells):
            padded = [cell.rjust(widths[i]) for i, cell in enumerate(row)]
            if n > 0:
                padded = [
                    self.stylers[i](cell) if i in self.stylers else cell
                    for i, cell in enumerate(padded)
                ]
            lines.append("  ".join(padded).rstrip())
            if n == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)


@dataclass
class Report:
    command: str
    input: Dict[str, Any]
    result: Dict[str, Any]
    checks: List[Check] = field(default_factory=list)
    table: Optional[Table] = None

    @property
    def failed(self) -> bool:
        return any(c.failed for c in self.checks)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "paper_checks": [c.as_dict() for c in self.checks],
        }


def to_json(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def colour_enabled() -> bool:
    return "NO_COLOR" not in os.environ


def style_status(status: str) -> str:
    if not colour_enabled():
        return status
    return click.style(status, fg=_STATUS_COLOURS.get(status.strip()))


def render_checks(checks: Sequence[Check]) -> str:
    table = Table(["check", "expected", "actual", "status"], stylers={3: style_status})
    for c in checks:
        table.rows.append([c.name, c.expected, c.actual, c.status])
    return table.render()


def render_human(report: Report) -> str:
    parts = []
    if report.table is not None:
        parts.append(report.table.render())
    scalars = [
        "{}: {}".format(k, _human_value(v))
        for k, v in sorted(report.result.items())
        if not isinstance(v, (list, dict))
    ]
    if scalars:
        parts.append("\n".join(scalars))
    if report.checks:
        parts.append(render_checks(report.checks))
    return "\n\n".join(parts)


def _human_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(report: Report, as_json: bool) -> None:
    if as_json:
        click.echo(to_json(report.as_dict()))
    else:
        click.echo(render_human(report))


def emit_error(
    command: str, inputs: Dict[str, Any], error: Exception, as_json: bool
) -> None:
    if as_json:
        click.echo(
            to_json(
                {
                    "command": command,
                    "input": inputs,
                    "error": {"type": type(error).__name__, "message": str(error)},
                }
            )
        )
    else:
        click.echo("Error: {}".format(error), err=True)
