from .algebra import BivariatePolynomial, UniSeries, YPolynomial
from .branch import Branch
from .field import FieldSpec
from .semigroup import ValueSemigroup
from .values import INFINITE

__all__ = ["BivariatePolynomial", "Branch", "FieldSpec", "INFINITE", "UniSeries", "ValueSemigroup", "YPolynomial"]
