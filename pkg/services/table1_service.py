from typing import Any, Dict

import structlog

from schemas.command import CommandConfig, CommandResult
from thom.polynomial import verify_table1
from thom.qpoly import load_q_file

from .base import BaseCommandService, missing, verdict_result

logger = structlog.get_logger()


class Table1Service(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["kmax"])

    def execute(self, config: CommandConfig) -> CommandResult:
        overrides = {}
        if config.q:
            q = load_q_file(config.q)
            overrides[q.k] = q
        report = verify_table1(config.kmax, overrides)
        lines = [f"{report.verdict.value} {report.passed}/{report.total}"]
        for row in report.rows:
            for diff in row.differences:
                lines.append(
                    f"k={row.k} {diff.monomial}: expected {diff.expected}, computed {diff.computed}"
                )
        lines.extend(f"warning: {w}" for w in report.warnings)
        logger.info("verify_table1.done", verdict=report.verdict.value, passed=report.passed)
        return verdict_result(report.verdict, "\n".join(lines), report)
