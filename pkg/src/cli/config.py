"""
Run configuration for the command line.
"""

from typing import List, Literal, Optional
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.core.errors import ConfigError

Command = Literal["validate", "construct", "draw", "gen", "stats"]
Mode = Literal["faces", "vertices", "weighted"]
Emit = Literal["orientation", "labeling", "wood"]


class RunConfig(BaseModel):
    """One CLI invocation after argument parsing."""
    command: Command
    inputs: List[str] = Field(default_factory=list)
    structure: Optional[str] = None
    seed: int = Field(0, ge=0, lt=2 ** 64)
    n_target: Optional[int] = None
    count: int = Field(1, ge=1)
    flips: int = Field(0, ge=0)
    mode: Mode = "faces"
    weights: Optional[str] = None
    minimize: bool = False
    emit: Emit = "orientation"
    out: Optional[str] = None
    out_dir: str = "."
    svg: Optional[str] = None
    json_out: Optional[str] = None
    csv: Optional[str] = None
    check: bool = False
    wood_overlay: bool = False
    scale: Optional[float] = Field(None, gt=0)
    jobs: int = Field(1, ge=1)

    @model_validator(mode="after")
    def check_consistency(self) -> "RunConfig":
        if self.mode == "weighted" and not self.weights:
            raise ValueError("--mode weighted requires --weights")
        if self.weights and self.mode != "weighted":
            raise ValueError("--weights is only used with --mode weighted")
        if self.command == "gen" and self.n_target is None:
            raise ValueError("gen requires --n")
        if self.command in ("validate", "construct", "draw") and len(self.inputs) != 1:
            raise ValueError(f"{self.command} takes exactly one input file")
        if self.command == "stats" and not self.inputs:
            raise ValueError("stats needs at least one input file")
        return self

    @classmethod
    def from_args(cls, values: dict) -> "RunConfig":
        """
        Build a config from parsed arguments.

        Raises:
            ConfigError: flags are inconsistent
        """
        try:
            return cls.model_validate({k: v for k, v in values.items() if v is not None})
        except ValidationError as e:
            messages = "; ".join(err["msg"] for err in e.errors())
            raise ConfigError(messages)
