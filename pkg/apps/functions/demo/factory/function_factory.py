import factory
import numpy as np

from apps.algebra.demo.factory.algebra_factory import AlgebraFactory, gaussian
from apps.functions.demo.factory.space_factory import FiniteSpaceFactory
from apps.functions.models import AValuedFunction, FiniteSpace, ScalarFunction


class FunctionFactory(factory.Factory):
    """
    A function f: X -> A, random by default.

    Passing `rows={"p": [coeffs], ...}` fixes both X (in the given point order) and the values.
    """

    class Meta:
        model = AValuedFunction

    class Params:
        rng = factory.LazyFunction(lambda: np.random.default_rng(0))
        rows = None

    space = factory.Maybe(
        "rows",
        yes_declaration=factory.LazyAttribute(lambda o: FiniteSpace(tuple(o.rows))),
        no_declaration=factory.LazyFunction(FiniteSpaceFactory),
    )
    algebra = factory.SubFactory(AlgebraFactory)
    values = factory.Maybe(
        "rows",
        yes_declaration=factory.LazyAttribute(lambda o: np.array(list(o.rows.values()), dtype=complex)),
        no_declaration=factory.LazyAttribute(lambda o: gaussian(o.rng, (o.space.size, o.algebra.dim))),
    )


class ScalarFunctionFactory(factory.Factory):
    class Meta:
        model = ScalarFunction

    class Params:
        rng = factory.LazyFunction(lambda: np.random.default_rng(0))

    space = factory.LazyFunction(FiniteSpaceFactory)
    values = factory.LazyAttribute(lambda o: gaussian(o.rng, o.space.size))
