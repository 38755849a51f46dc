from typing import Any, Dict

import structlog

from schemas.algebra import PolynomialSchema
from schemas.command import CommandConfig, CommandResult
from thom.polynomial import thom_polynomial
from thom.qpoly import load_q_file

from .base import BaseCommandService, missing

logger = structlog.get_logger()


class ThomPolynomialService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["k"])

    def execute(self, config: CommandConfig) -> CommandResult:
        codim = config.codim or 0
        q = load_q_file(config.q) if config.q else None
        poly = thom_polynomial(config.k, codim, q)
        logger.info("tp.done", k=config.k, codim=codim, terms=len(poly.terms()))
        payload = {"k": config.k, "codim": codim, "polynomial": str(poly)}
        payload.update(PolynomialSchema.from_polynomial(poly).model_dump(mode="json"))
        return CommandResult(success=True, exit_code=0, text=str(poly), payload=payload)
