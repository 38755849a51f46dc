import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Type, TypeVar

from pydantic import BaseModel, ValidationError

from common.exceptions import ResourceNotFoundException, ValidationException
from schemas.command import CommandConfig, CommandResult
from schemas.thom import VerdictEnum

M = TypeVar("M", bound=BaseModel)


def read_model(path: str, model: Type[M]) -> M:
    """Load a JSON file into ``model``; a missing or malformed file is an input error."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
    except FileNotFoundError:
        raise ResourceNotFoundException(message=f"file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValidationException(message=f"{path} is not valid JSON: {exc.msg}")
    try:
        return model.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ValidationException(message=f"{path}: {location}: {first['msg']}")


def missing(config: CommandConfig, fields: List[str]) -> Dict[str, Any]:
    absent = [field for field in fields if getattr(config, field) is None]
    if absent:
        return {
            "valid": False,
            "missing_fields": absent,
            "message": f"Missing required option: {', '.join('--' + f for f in absent)}",
        }
    return {"valid": True, "message": "All required options provided"}


def verdict_result(verdict: VerdictEnum, text: str, payload: BaseModel) -> CommandResult:
    passed = verdict == VerdictEnum.PASS
    return CommandResult(
        success=passed,
        exit_code=0 if passed else 1,
        text=text,
        payload=payload.model_dump(mode="json"),
    )


class BaseCommandService(ABC):
    @abstractmethod
    def execute(self, config: CommandConfig) -> CommandResult:
        """Run the command"""
        pass

    @abstractmethod
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        """Validate input parameters"""
        pass
