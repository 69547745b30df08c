"""Error type shared by every module; each error carries a machine-readable code."""
from __future__ import annotations


class AlgebraError(ValueError):
    """Raised for invalid input or a violated precondition.

    ``code`` is one of the stable identifiers listed in the README
    (``INFINITE_DIMENSIONAL``, ``PARSE_ERROR``, ...).
    """

    def __init__(self, code: str, message: str, **details: object) -> None:
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.details = details

    def to_dict(self) -> dict[str, object]:
        out: dict[str, object] = {"code": self.code, "message": self.message}
        if self.details:
            out["details"] = {k: self.details[k] for k in sorted(self.details)}
        return out
