from typing import Any, Dict

import structlog

from ggl.certificate import ggl_certificate
from ggl.inequalities import inequality_suite
from schemas.command import CommandConfig, CommandResult
from schemas.thom import VerdictEnum

from .base import BaseCommandService, missing

logger = structlog.get_logger()


class GGLService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        result = missing(config, ["n"])
        if result["valid"] and config.n < 2:
            return {"valid": False, "message": "--n must be at least 2"}
        return result

    def execute(self, config: CommandConfig) -> CommandResult:
        certificate = ggl_certificate(config.n, config.delta)
        payload = certificate.model_dump(mode="json")
        lines = [
            f"{certificate.verdict.value} n={certificate.n} delta={certificate.delta}",
            "coeffs p_1..p_(n+1): " + ", ".join(certificate.coeffs),
            f"rho0={certificate.rho0} leading_identity={certificate.leading_identity}"
            f" leading_positive={certificate.leading_positive}",
            f"ineq_10l={certificate.ineq_10l} fujiwara_D={certificate.fujiwara_D}"
            f" d_star={certificate.d_star}",
        ]
        passed = certificate.verdict == VerdictEnum.PASS
        if config.suite:
            report = inequality_suite(config.n, config.delta)
            payload["inequalities"] = report.model_dump(mode="json")
            for check in report.checks:
                lines.append(f"({check.item}) {check.verdict.value} {check.description}")
            passed = passed and report.verdict == VerdictEnum.PASS
        logger.info("ggl.done", n=config.n, passed=passed)
        return CommandResult(
            success=passed, exit_code=0 if passed else 1, text="\n".join(lines), payload=payload
        )
