"""
Exit statuses for the wlpkit command line.
"""

from enum import IntEnum


class ExitStatus(IntEnum):
    """Process exit codes reported by every wlpkit command."""

    HAS_WLP = 0
    NO_WLP = 1
    ERROR = 2

    @classmethod
    def from_verdict(cls, verdict: bool) -> "ExitStatus":
        """Map a WLP verdict to its exit status."""
        return cls.HAS_WLP if verdict else cls.NO_WLP

    @classmethod
    def combine(cls, statuses) -> "ExitStatus":
        """
        Fold the statuses of a batch run into one.

        Errors dominate, then missing WLP; an empty batch counts as success.
        """
        statuses = list(statuses)
        if not statuses:
            return cls.HAS_WLP
        return cls(max(int(status) for status in statuses))


# Convenience aliases
HAS_WLP = ExitStatus.HAS_WLP
NO_WLP = ExitStatus.NO_WLP
ERROR = ExitStatus.ERROR
