from typing import Any, Dict, List

import structlog
from sympy.polys.domains import QQ

from algebra.builders import chern_tail
from algebra.laurent import LaurentSeries, LinearForm
from algebra.polynomial import GradedPolynomial
from algebra.rational import format_rational, parse_rational
from algebra.residue import iterated_residue
from algebra.symbols import GradedSymbol, SymbolContext
from ggl.integrand import hypersurface_tail
from schemas.algebra import TermSchema
from schemas.command import CommandConfig, CommandResult
from schemas.residue import ExtraSeriesKind, ResidueResult, ResidueSpecFile

from .base import BaseCommandService, missing, read_model

logger = structlog.get_logger()


def residue_from_spec(spec: ResidueSpecFile) -> GradedPolynomial:
    """Evaluate the iterated residue described by a residue spec file."""
    context = SymbolContext(
        tuple(GradedSymbol(s.name, s.degree, s.nilpotency) for s in spec.symbols), QQ
    )
    numerator = LaurentSeries(
        spec.k, context, {tuple(t.exp): parse_rational(t.coeff) for t in spec.numerator}
    )
    factors: List[LinearForm] = []
    for factor in spec.linear_factors:
        constant = GradedPolynomial.from_terms(
            context, ((t.exp, parse_rational(t.coeff)) for t in factor.constant)
        )
        factors.append(LinearForm.of(context, [parse_rational(a) for a in factor.z], constant))
    extras: List[LaurentSeries] = []
    for extra in spec.extra_series:
        for var in range(spec.k):
            if extra.name == ExtraSeriesKind.CHERN:
                extras.append(chern_tail(spec.k, var, context, extra.shift, extra.prefix))
            else:
                extras.append(hypersurface_tail(extra.n, spec.k, var, context))
    order = None if spec.order is None else [p - 1 for p in spec.order]
    return iterated_residue(numerator, factors, extras, order=order)


class ResidueService(BaseCommandService):
    def validate_input(self, config: CommandConfig) -> Dict[str, Any]:
        return missing(config, ["spec"])

    def execute(self, config: CommandConfig) -> CommandResult:
        spec = read_model(config.spec, ResidueSpecFile)
        result = residue_from_spec(spec)
        logger.info("residue.done", k=spec.k, terms=len(result.terms()))
        payload = ResidueResult(
            k=spec.k,
            symbols=list(result.context.names),
            residue=str(result),
            terms=[TermSchema(exp=list(m), coeff=format_rational(c)) for m, c in result.terms()],
        )
        return CommandResult(
            success=True, exit_code=0, text=str(result), payload=payload.model_dump(mode="json")
        )
