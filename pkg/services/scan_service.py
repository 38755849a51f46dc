from typing import Any, Dict

import structlog

from core.config import settings
from schemas.command import CommandConfig, CommandResult
from thom.conjecture import scan_conjecture
from thom.qpoly import load_q_file

from .base import BaseCommandService, missing, verdict_result

logger = structlog.get_logger()


class ScanService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["k"])

    def execute(self, config: CommandConfig) -> CommandResult:
        radius = settings.DEFAULT_SCAN_RADIUS if config.radius is None else config.radius
        q = load_q_file(config.q) if config.q else None
        report = scan_conjecture(config.k, radius, q)
        lines = [
            f"{report.verdict.value} k={report.k} radius={report.radius}",
            f"keys={report.keys} positive={report.positive} negatives={len(report.negatives)}",
            f"violations={len(report.violations)} inconclusive={len(report.inconclusive)}",
        ]
        for witness in report.violations:
            lines.append(f"violation at {witness.i}: Tp = {witness.tp}")
        return verdict_result(report.verdict, "\n".join(lines), report)
