"""Fractional Frobenius solutions of sequential conformable equations of order 2*alpha."""
__version__ = "0.1.0"

from .classify import (LaurentAlphaSeries, PointClass, classify_coefficients,
                       classify_point, classify_problem, pole_order, to_monic)
from .errors import (ComplexRoots, DegenerateWronskian, DomainError, FracFrobError,
                     IncompatibleSeries, InvalidRadius, NonPositiveLeadingPower,
                     ParseError, Resonance, ValidationError, ZeroLeadingCoefficient)
from .frobenius import (FrobeniusResult, IndicialData, MajorantTrace, ProblemSpec,
                        RootCase, indicial, majorant, operator_residual, recurrence,
                        reduction_of_order, shifted_poly, solve)
from .series import (FracSeries, LogSolution, add, conformable_antideriv,
                     conformable_deriv, eval_log, eval_series, log_conformable_deriv,
                     mul, reciprocal, series_exp)
