from typing import Any, Dict

from schemas.command import CommandConfig, CommandResult
from thom.conjecture import tp3_report

from .base import BaseCommandService, verdict_result


class Tp3Service(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return {"valid": True, "message": "All required options provided"}

    def execute(self, config: CommandConfig) -> CommandResult:
        radius = 6 if config.radius is None else config.radius
        report = tp3_report(radius)
        lines = [
            f"{report.verdict.value} radius={report.radius} keys={report.keys}",
            f"mismatches={len(report.mismatches)} negatives={len(report.negatives)}",
            f"ratio_violations={len(report.ratio_violations)} max_ratio={report.max_ratio}",
            f"predecessor_violations={len(report.predecessor_violations)}",
        ]
        return verdict_result(report.verdict, "\n".join(lines), report)
