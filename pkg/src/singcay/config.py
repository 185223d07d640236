"""Resource bounds shared by every module and the command line."""

from __future__ import annotations

from dataclasses import dataclass


class ResourceBoundError(ValueError):
    """A request exceeds one of the configured enumeration bounds."""


@dataclass
class Config:
    max_table_n: int = 14
    max_oracle_group_order: int = 720
    max_core_enum_n: int = 70
    output_format: str = "json"

    def __post_init__(self):
        for name in ("max_table_n", "max_oracle_group_order", "max_core_enum_n"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")


CONFIG = Config()


def check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise ResourceBoundError(f"{what}: {value} exceeds configured bound {bound}")
