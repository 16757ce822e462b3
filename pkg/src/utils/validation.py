"""
Input validation utilities.
"""

import logging
from typing import Any, Dict, List, Type, TypeVar, Union
from pydantic import BaseModel, ValidationError

from src.core.errors import ParseError

logger = logging.getLogger("fivec")

ModelT = TypeVar("ModelT", bound=BaseModel)

class ValidationUtils:
    """Utilities for validating decoded input against pydantic models."""

    @staticmethod
    def validate_model(data: Any, model_class: Type[ModelT]) -> Union[ModelT, List[Dict[str, str]]]:
        """
        Validate data against a Pydantic model.

        Args:
            data: Decoded JSON value
            model_class: Pydantic model class

        Returns:
            Validated model instance or list of validation errors
        """
        try:
            return model_class.model_validate(data)
        except ValidationError as e:
            errors = []
            for error in e.errors():
                errors.append({
                    "field": ".".join(str(loc) for loc in error["loc"]),
                    "message": error["msg"]
                })
            return errors

    @staticmethod
    def parse_model(data: Any, model_class: Type[ModelT], source: str = "input") -> ModelT:
        """
        Validate data against a model and raise ParseError on failure.

        Args:
            data: Decoded JSON value
            model_class: Pydantic model class
            source: Name used in the error message

        Returns:
            Validated model instance
        """
        result = ValidationUtils.validate_model(data, model_class)
        if isinstance(result, list):
            details = "; ".join(f"{e['field']}: {e['message']}" for e in result[:5])
            logger.warning(f"Rejected {source}: {details}")
            raise ParseError(f"Invalid {model_class.__name__} in {source}: {details}", witness=result)
        return result
