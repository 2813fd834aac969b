"""
Activation functions combining the α and β terms into one score.
"""
import math

from .exceptions import UnknownActivationError


def arithmetic(alpha, beta):
    return (alpha + beta) / 2


def geometric(alpha, beta):
    return math.sqrt(alpha * beta)


def harmonic(alpha, beta):
    if alpha + beta == 0:
        return 0.0
    return 2 * alpha * beta / (alpha + beta)


def product(alpha, beta):
    return alpha * beta


ACTIVATIONS = {
    'arithmetic': arithmetic,
    'geometric': geometric,
    'harmonic': harmonic,
    'product': product,
    'min': min,
    'max': max,
}

ACTIVATION_NAMES = tuple(ACTIVATIONS)


def get_activation(name):
    try:
        return ACTIVATIONS[name]
    except (KeyError, TypeError):
        raise UnknownActivationError(
            f'unknown activation {name!r}; choose one of {", ".join(ACTIVATION_NAMES)}'
        ) from None


def activation(name, alpha, beta):
    return float(get_activation(name)(alpha, beta))
