"""
Rotation-system JSON interchange.

Format: ``{"vertices": N, "rot": [[clockwise neighbour ids] per vertex],
"outer": [outer vertex ids in clockwise order]}`` with 0-based ids and
``outer[0]`` as v1. An optional ``"symmetry"`` entry holds a vertex
permutation that is a rotation of the map sending each v_i to v_{i+1}.
"""

import logging
from typing import Any, List, Optional
from pydantic import BaseModel, Field, model_validator

from src.planar_map.map import PlanarMap, build_from_rotation_system
from src.utils.file_utils import FileUtils
from src.utils.validation import ValidationUtils

logger = logging.getLogger("fivec")


class RotationSystem(BaseModel):
    """Rotation-system document."""
    vertices: int = Field(..., ge=1)
    rot: List[List[int]]
    outer: List[int]
    symmetry: Optional[List[int]] = None

    @model_validator(mode="after")
    def check_sizes(self) -> "RotationSystem":
        if len(self.rot) != self.vertices:
            raise ValueError(f"rot has {len(self.rot)} lists for {self.vertices} vertices")
        for v in self.outer:
            if not 0 <= v < self.vertices:
                raise ValueError(f"outer vertex {v} out of range")
        if self.symmetry is not None:
            if sorted(self.symmetry) != list(range(self.vertices)):
                raise ValueError("symmetry is not a permutation of the vertices")
        return self

    def to_map(self) -> PlanarMap:
        return build_from_rotation_system(self.rot, self.outer)


def rotation_system_of(m: PlanarMap, outer: List[int], symmetry: Optional[List[int]] = None) -> RotationSystem:
    return RotationSystem(vertices=m.num_vertices, rot=m.rotation_system(), outer=list(outer), symmetry=symmetry)


def parse_rotation_system(data: Any, source: str = "input") -> RotationSystem:
    return ValidationUtils.parse_model(data, RotationSystem, source)


def load_rotation_system(path: str) -> RotationSystem:
    """
    Read a rotation-system file.

    Raises:
        ParseError: unreadable file, malformed JSON or schema mismatch
    """
    document = parse_rotation_system(FileUtils.read_json(path), source=path)
    logger.debug(f"Loaded rotation system with {document.vertices} vertices from {path}")
    return document


def dumps_rotation_system(document: RotationSystem) -> str:
    return FileUtils.dumps_json(document.model_dump(exclude_none=True))


def save_rotation_system(document: RotationSystem, path: str) -> None:
    FileUtils.write_text_atomic(path, dumps_rotation_system(document))
