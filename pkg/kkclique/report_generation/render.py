"""
Rendering of command envelopes as plain text, CSV or structured (JSON) text.

Nothing here adds timestamps or other run-dependent data, and integers are
always written in full decimal.
"""
import json
from typing import Any, List

import pandas as pd

from kkclique.model.envelope import OutputEnvelope


def _plain_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ", ".join(_plain_value(v) for v in value)
    return str(value)


def _plain_lines(payload: dict, indent: int = 0) -> List[str]:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_plain_lines(value, indent + 1))
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {line}" for line in value.rstrip("\n").splitlines())
        else:
            lines.append(f"{pad}{key}: {_plain_value(value)}")
    return lines


def _as_frame(result: Any) -> pd.DataFrame:
    if isinstance(result, pd.DataFrame):
        return result
    if isinstance(result, list):
        return pd.DataFrame(result)
    if isinstance(result, dict):
        flat = {k: (json.dumps(v, sort_keys=True) if isinstance(v, dict) else v) for k, v in result.items()}
        return pd.DataFrame({"key": list(flat), "value": pd.Series(list(flat.values()), dtype=object)})
    return pd.DataFrame({"value": pd.Series([result], dtype=object)})


def render_plain(envelope: OutputEnvelope) -> str:
    result = envelope.result
    if isinstance(result, pd.DataFrame):
        return result.to_string(index=False) + "\n"
    if isinstance(result, list):
        return pd.DataFrame(result).to_string(index=False) + "\n"
    if isinstance(result, dict):
        return "\n".join(_plain_lines(result)) + "\n"
    text = str(result)
    return text if text.endswith("\n") else text + "\n"


def render_csv(envelope: OutputEnvelope) -> str:
    return _as_frame(envelope.result).to_csv(index=False, lineterminator="\n")


def _jsonable(value: Any) -> Any:
    if isinstance(value, pd.DataFrame):
        return [{k: _jsonable(v) for k, v in row.items()} for row in value.to_dict(orient="records")]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        # numpy scalars from DataFrame columns
        return value.item()
    return value


def render_structured(envelope: OutputEnvelope) -> str:
    payload = {
        "command": envelope.command,
        "parameters": {k: _jsonable(v) for k, v in envelope.parameters},
        "result": _jsonable(envelope.result),
        "passed": envelope.passed,
    }
    return json.dumps(payload, indent=2) + "\n"


RENDERERS = {
    "plain": render_plain,
    "csv": render_csv,
    "structured": render_structured,
}


def render(envelope: OutputEnvelope) -> str:
    return RENDERERS[envelope.format](envelope)
