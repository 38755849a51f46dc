from typing import Any, Dict

from equivariant.multidegree import MonomialIdeal, WeightAssignment, mdeg_report
from schemas.command import CommandConfig, CommandResult
from schemas.equivariant import IdealFile, WeightsFile

from .base import BaseCommandService, missing, read_model


class MdegService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["ideal", "weights"])

    def execute(self, config: CommandConfig) -> CommandResult:
        ideal_file = read_model(config.ideal, IdealFile)
        weights_file = read_model(config.weights, WeightsFile)
        ideal = MonomialIdeal(ideal_file.N, tuple(tuple(g) for g in ideal_file.generators))
        weights = WeightAssignment(weights_file.r, tuple(tuple(w) for w in weights_file.eta))
        report = mdeg_report(ideal, weights)
        return CommandResult(
            success=True, exit_code=0, text=report.mdeg, payload=report.model_dump(mode="json")
        )
