"""Named functions available to the command line and to parameter sweeps."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from src.kernels.series import SeriesEval, SeriesSettings
from src.utils.errors import DomainError
from src.wright import derivatives
from src.wright.core import WrightParams, mainardi_f, mainardi_m, mittag_leffler, wright_eval


@dataclass(frozen=True)
class FunctionEntry:
    name: str
    params: Tuple[str, ...]
    domain: str
    evaluate: Callable[..., SeriesEval]
    description: str = ''

    def __call__(self, values: Mapping[str, float],
                 settings: Optional[SeriesSettings] = None) -> SeriesEval:
        """Evaluate with exactly this entry's parameters."""
        missing = [p for p in self.params if p not in values]
        extra = [k for k in values if k not in self.params]
        if missing or extra:
            raise DomainError(f"{self.name} takes parameters {', '.join(self.params)}; "
                              f"missing {missing or 'none'}, unexpected {extra or 'none'}")
        return self.evaluate(*(float(values[p]) for p in self.params), settings=settings)


def _wright_family(func: Callable[..., SeriesEval]) -> Callable[..., SeriesEval]:
    return lambda alpha, beta, t, settings=None: func(WrightParams(alpha, beta), t, settings)


_FIRST_KIND = 'alpha >= 0, beta >= 0, real t'
_ML = 'alpha > 0, real beta, real t'
_MAINARDI = '0 < sigma < 1, t >= 0'

_ENTRIES: List[FunctionEntry] = [
    FunctionEntry('wright', ('alpha', 'beta', 't'), 'alpha > -1, beta >= 0, real t',
                  _wright_family(wright_eval), 'Wright function W_{alpha,beta}(t)'),
    FunctionEntry('mittag-leffler', ('alpha', 'beta', 't'), _ML, mittag_leffler,
                  'Mittag-Leffler function E_{alpha,beta}(t)'),
    FunctionEntry('mainardi-m', ('sigma', 't'), _MAINARDI, mainardi_m, 'Mainardi function M_sigma(t)'),
    FunctionEntry('mainardi-f', ('sigma', 't'), _MAINARDI, mainardi_f, 'Mainardi function F_sigma(t)'),
    FunctionEntry('dW/dalpha', ('alpha', 'beta', 't'), _FIRST_KIND,
                  _wright_family(derivatives.dW_dalpha)),
    FunctionEntry('dW/dbeta', ('alpha', 'beta', 't'), _FIRST_KIND,
                  _wright_family(derivatives.dW_dbeta)),
    FunctionEntry('d2W/dalpha2', ('alpha', 'beta', 't'), _FIRST_KIND,
                  _wright_family(derivatives.d2W_dalpha2)),
    FunctionEntry('d2W/dbeta2', ('alpha', 'beta', 't'), _FIRST_KIND,
                  _wright_family(derivatives.d2W_dbeta2)),
    FunctionEntry('dE/dalpha', ('alpha', 'beta', 't'), _ML, derivatives.dE_dalpha),
    FunctionEntry('dE/dbeta', ('alpha', 'beta', 't'), _ML, derivatives.dE_dbeta),
    FunctionEntry('d2E/dalpha2', ('alpha', 'beta', 't'), _ML, derivatives.d2E_dalpha2),
    FunctionEntry('d2E/dbeta2', ('alpha', 'beta', 't'), _ML, derivatives.d2E_dbeta2),
    FunctionEntry('dF/dsigma', ('sigma', 't'), _MAINARDI, derivatives.dF_dsigma),
    FunctionEntry('dM/dsigma', ('sigma', 't'), _MAINARDI, derivatives.dM_dsigma),
    FunctionEntry('d2F/dsigma2', ('sigma', 't'), _MAINARDI, derivatives.d2F_dsigma2),
    FunctionEntry('d2M/dsigma2', ('sigma', 't'), _MAINARDI, derivatives.d2M_dsigma2),
]

FUNCTIONS: Dict[str, FunctionEntry] = {entry.name: entry for entry in _ENTRIES}


def canonical_name(name: str) -> str:
    """'dW_dalpha' and 'dW/dalpha' name the same function."""
    return name.strip().replace('_', '/')


def lookup(name: str) -> FunctionEntry:
    """
    Find a registered function by CLI or sweep name.

    Args:
        name (str): e.g. 'wright', 'dW/dalpha' or 'dW_dalpha'

    Returns:
        FunctionEntry: The registered function
    """
    key = canonical_name(name)
    if key not in FUNCTIONS:
        raise DomainError(f"Unknown function {name!r}; choose from {', '.join(FUNCTIONS)}")
    return FUNCTIONS[key]


def describe_functions() -> str:
    """One line per function with its parameters and domain, for --help."""
    width = max(len(name) for name in FUNCTIONS)
    return '\n'.join(f"  {entry.name:<{width}}  ({', '.join(entry.params)})  {entry.domain}"
                     for entry in _ENTRIES)
