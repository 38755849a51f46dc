from typing import Dict, List, Optional

import structlog

from common.exceptions import (
    DimensionMismatchException,
    InvalidStateException,
    MalformedFormException,
    ResourceNotFoundException,
    StabilityException,
    TruncationOverflowException,
    ValidationException,
)
from core.command_config import COMMAND_MAP
from schemas.command import CommandConfig, CommandResult

from .base import BaseCommandService
from .ggl_service import GGLService
from .mdeg_service import MdegService
from .oracle_service import OracleService
from .residue_service import ResidueService
from .scan_service import ScanService
from .table1_service import Table1Service
from .thom_polynomial_service import ThomPolynomialService
from .tp3_service import Tp3Service

logger = structlog.get_logger()

INPUT_ERRORS = (
    ValidationException,
    ResourceNotFoundException,
    DimensionMismatchException,
    MalformedFormException,
    TruncationOverflowException,
)
COMPUTATION_ERRORS = (StabilityException, InvalidStateException)

_SERVICES = {
    "ThomPolynomialService": ThomPolynomialService,
    "Table1Service": Table1Service,
    "ScanService": ScanService,
    "Tp3Service": Tp3Service,
    "GGLService": GGLService,
    "MdegService": MdegService,
    "OracleService": OracleService,
    "ResidueService": ResidueService,
}


class CommandManager:
    def __init__(self):
        self.services: Dict[str, BaseCommandService] = {
            name: _SERVICES[entry["service"]]() for name, entry in COMMAND_MAP.items()
        }

    def get_service(self, command: str) -> Optional[BaseCommandService]:
        return self.services.get(command)

    def execute_command(self, config: CommandConfig) -> CommandResult:
        service = self.get_service(config.command)

        if not service:
            return CommandResult(
                success=False,
                exit_code=2,
                error=f"Unsupported command: {config.command}",
                payload={"available_commands": self.get_available_commands()},
            )

        validation_result = service.validate_input(config)
        if not validation_result.get("valid", False):
            return CommandResult(
                success=False,
                exit_code=2,
                error=validation_result.get("message", "Invalid input"),
                payload={"validation_details": validation_result},
            )

        logger.info("command.start", command=config.command)
        try:
            result = service.execute(config)
        except INPUT_ERRORS as e:
            return CommandResult(success=False, exit_code=2, error=e.message)
        except COMPUTATION_ERRORS as e:
            logger.error("command.failed", command=config.command, error=e.message)
            return CommandResult(success=False, exit_code=1, error=e.message)
        logger.info("command.finish", command=config.command, exit_code=result.exit_code)
        return result

    def register_service(self, command: str, service: BaseCommandService):
        """Register a command service under an extra subcommand name"""
        self.services[command] = service

    def get_available_commands(self) -> List[str]:
        return list(self.services.keys())
