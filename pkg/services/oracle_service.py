from typing import Any, Dict

from equivariant.localisation import localisation_oracle
from schemas.command import CommandConfig, CommandResult
from schemas.equivariant import OracleVerdictEnum
from thom.qpoly import load_q_file

from .base import BaseCommandService, missing


class OracleService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["k", "n", "seed"])

    def execute(self, config: CommandConfig) -> CommandResult:
        q = load_q_file(config.q).as_polynomial() if config.q else None
        report = localisation_oracle(q, config.n, config.k, config.seed, config.trials or 1)
        equal = report.verdict == OracleVerdictEnum.EQUAL
        return CommandResult(
            success=equal,
            exit_code=0 if equal else 1,
            text=report.verdict.value,
            payload=report.model_dump(mode="json"),
        )
