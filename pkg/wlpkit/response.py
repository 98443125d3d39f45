"""
Command results for the wlpkit command line.
"""

import json
from typing import Any, List, Optional, Union

from .status import ExitStatus


class CommandResult:
    """
    What a command hands back to the entry point: text for stdout, text for
    stderr and an exit status.

    Supports:
    - Plain text or JSON content (dicts and lists are serialized and kept in
      ``data`` for batch commands)
    - Appending diagnostics to stderr
    """

    def __init__(
        self,
        content: Union[str, dict, list] = "",
        exit_status: Union[int, ExitStatus] = ExitStatus.HAS_WLP,
        stderr: str = "",
    ):
        """
        Initialize CommandResult.

        Args:
            content: Output for stdout (dict/list become indented JSON)
            exit_status: Process exit status
            stderr: Diagnostics for stderr
        """
        self.exit_status = ExitStatus(int(exit_status))
        self.data = content if isinstance(content, (dict, list)) else None
        self.stdout = self._process_content(content)
        self.stderr = stderr

    @staticmethod
    def _process_content(content: Any) -> str:
        if isinstance(content, (dict, list)):
            return json.dumps(content, indent=2, ensure_ascii=False) + "\n"
        text = str(content)
        if text and not text.endswith("\n"):
            text += "\n"
        return text

    def add_error(self, message: str) -> "CommandResult":
        self.stderr += message if message.endswith("\n") else message + "\n"
        return self

    @property
    def exit_code(self) -> int:
        return int(self.exit_status)

    def __repr__(self) -> str:
        return f"<CommandResult {self.exit_status.name}>"


def text_result(
    content: str, exit_status: Union[int, ExitStatus] = ExitStatus.HAS_WLP
) -> CommandResult:
    """Create a plain text result."""
    return CommandResult(content, exit_status)


def json_result(
    content: Union[dict, list], exit_status: Union[int, ExitStatus] = ExitStatus.HAS_WLP
) -> CommandResult:
    """Create a JSON result."""
    return CommandResult(content, exit_status)


def error_result(message: str, detail: Optional[str] = None) -> CommandResult:
    """Create a result for a failed command (exit status 2)."""
    result = CommandResult("", ExitStatus.ERROR)
    result.add_error(f"error: {message}")
    if detail:
        result.add_error(detail)
    return result


def merge_results(results: List[CommandResult]) -> CommandResult:
    """Concatenate batch results in order; the status follows ExitStatus.combine."""
    merged = CommandResult("", ExitStatus.combine(r.exit_status for r in results))
    merged.stdout = "".join(r.stdout for r in results)
    merged.stderr = "".join(r.stderr for r in results)
    return merged
