import numbers
import sympy
from fractions import Fraction


def as_scalar(value):
    r'''
    Convert an input to an exact scalar.

    Integers, :obj:`Fraction` and strings like ``"3/4"`` become :obj:`Fraction`; sympy
    expressions are kept symbolic. Floats are rejected since every identity in the library
    is exact.

    Example:
        >>> as_scalar('3/4')
        Fraction(3, 4)
        >>> as_scalar(sympy.Symbol('alpha_1'))
        alpha_1
    '''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('boolean is not a scalar: {}'.format(value))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError('invalid rational string: {!r}'.format(value))
    if isinstance(value, sympy.Basic):
        if value.is_Rational:
            return Fraction(int(value.p), int(value.q))
        return value
    if isinstance(value, float):
        raise TypeError('floats are not exact scalars; pass a Fraction or "p/q" string: {}'
                        .format(value))
    raise TypeError('{} is not a scalar'.format(type(value).__name__))


def is_symbolic(value):
    return isinstance(value, sympy.Basic) and not value.is_Number


def is_zero(value):
    if is_symbolic(value):
        return sympy.expand(value) == 0
    return value == 0


def equal(a, b):
    return is_zero(a - b)


def simplify(value):
    return sympy.expand(value) if is_symbolic(value) else value


def to_float(value):
    if is_symbolic(value):
        raise TypeError('symbolic value has no float: {}'.format(value))
    return float(value)


def format_scalar(value):
    r'''
    Render a scalar: rationals as ``"p/q"`` (integers without denominator), floats with 12
    significant digits, symbols in sympy's notation.
    '''
    if isinstance(value, float):
        return format(value, '.12g')
    if is_symbolic(value):
        return str(sympy.expand(value))
    return str(as_scalar(value))
