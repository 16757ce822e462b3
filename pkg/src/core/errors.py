"""
Error hierarchy for the fivec-drawing toolkit.

Every failure raised by the library derives from FiveCError. Each error
carries a short machine-readable code and, when one is cheap to produce,
a witness (vertex ids, dart ids or a face id) pointing at the offending
part of the input.
"""

from typing import Any, List, Optional


class FiveCError(Exception):
    """Base class for all toolkit errors."""

    code = "fivec_error"

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> dict:
        return {"error": self.code, "message": self.message, "witness": self.witness}


# Planar maps

class MapError(FiveCError):
    code = "map_error"


class InconsistentRotation(MapError):
    code = "inconsistent_rotation"


class OuterFaceNotFound(MapError):
    code = "outer_face_not_found"


class Disconnected(MapError):
    code = "disconnected"


class NonPlanar(MapError):
    code = "non_planar"


# Triangulations

class TriangulationError(FiveCError):
    code = "triangulation_error"


class BadOuterFace(TriangulationError):
    code = "bad_outer_face"


class NonTriangularInnerFace(TriangulationError):
    code = "non_triangular_inner_face"


class ApexDegreeNot5(TriangulationError):
    code = "apex_degree_not_5"


class ResultNot5c(TriangulationError):
    code = "result_not_5c"


class GenerationFailed(TriangulationError):
    code = "generation_failed"


# 5c-structures

class StructureError(FiveCError):
    code = "structure_error"


class InvalidLabeling(StructureError):
    code = "invalid_labeling"


class InvalidWood(StructureError):
    code = "invalid_wood"


class InvalidOrientation(StructureError):
    code = "invalid_orientation"


class PropagationConflict(StructureError):
    code = "propagation_conflict"


class NonterminatingPath(StructureError):
    code = "nonterminating_path"


# Construction pipeline

class ConstructionError(FiveCError):
    code = "construction_error"


class Infeasible(ConstructionError):
    code = "infeasible"


class NonUniqueStar(ConstructionError):
    code = "non_unique_star"


class NotAccessible(ConstructionError):
    code = "not_accessible"


class AssemblyError(ConstructionError):
    code = "assembly_error"


class Not5c(ConstructionError):
    """The input triangulation admits no 5c-structure."""

    code = "not_5c"

    def __init__(self, message: str, provenance: str, witness: Optional[Any] = None):
        super().__init__(message, witness)
        self.provenance = provenance

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["provenance"] = self.provenance
        return data


# Regions and drawing

class CycleDetected(FiveCError):
    code = "cycle_detected"

    def __init__(self, message: str, color: int, cycle: List[int]):
        super().__init__(message, cycle)
        self.color = color
        self.cycle = cycle


class NonPositiveWeight(FiveCError):
    code = "non_positive_weight"


class NoAutomorphismProvided(FiveCError):
    code = "no_automorphism_provided"


# Command line

class ParseError(FiveCError):
    code = "parse_error"


class ConfigError(FiveCError):
    code = "config_error"


class CheckFailed(FiveCError):
    code = "check_failed"
