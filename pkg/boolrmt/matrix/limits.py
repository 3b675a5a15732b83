import torch
import sympy
from ..utils.scalar import as_scalar, equal, is_zero, is_symbolic, simplify, to_float
from ..cumulants import BDiagonalLaw, bdiag_word_moment
from ..model import BDiagonalEntries
from ..partitions import ONE, SignPattern, LabelTuple
from ..partitions import enumerate_alt, omega_of_labels, meet
from .trace import MixedWordSpec


def _law(law, n):
    r''' A law covering words of length ``n``, padded with zeros. '''
    if isinstance(law, BDiagonalEntries):
        law = law.law()
    elif not isinstance(law, BDiagonalLaw):
        alpha, beta = law
        law = BDiagonalLaw(alpha, beta, max(len(alpha), len(beta), 1))
    order = max((n + 1) // 2, 1)
    if law.max_order >= order:
        return law
    return BDiagonalLaw(law.alpha, law.beta, order)


def limit_bdiag(xi, alpha, beta=()):
    r'''
    The limit of :math:`\varphi\circ\mathrm{tr}(X_N^{\xi_1} \cdots X_N^{\xi_n})` for a matrix
    whose entries follow the B-diagonal family with sequences :math:`(a_m)`, :math:`(b_m)`.

    The limit law is B-diagonal with determining sequences :math:`\alpha_m = a_m`,
    :math:`\beta_m = b_m`, so the value is :meth:`bdiag_word_moment`. Missing terms are 0.

    Args:
        xi (SignPattern): the signs.
        alpha (list or BDiagonalLaw): :math:`\alpha_1, \alpha_2, \dots`, or a whole law.
        beta (list, optional): :math:`\beta_1, \beta_2, \dots`. Ignored with a law.
            Default: ``()``.

    Example:
        >>> br.limit_bdiag(br.parse_xi('xx*xx*'), [1], [1])
        Fraction(1, 1)
        >>> br.limit_bdiag(br.parse_xi('xxx*x*'), [1], [1])
        Fraction(0, 1)
    '''
    xi = SignPattern(xi)
    law = alpha if isinstance(alpha, (BDiagonalLaw, BDiagonalEntries)) else (alpha, beta)
    return bdiag_word_moment(_law(law, len(xi)), xi)


def _block_product(windows, xi, law_at):
    term = as_scalar(1)
    for start, length in windows:
        law = law_at(start)
        term = term * (law.a(length // 2) if xi[start] == ONE else law.b(length // 2))
        if is_zero(term):
            break
    return term


def _laws_for(labels, laws, n):
    missing = set(labels) - set(laws)
    if missing:
        raise ValueError('no law for labels {}'.format(sorted(map(str, missing))))
    return {k: _law(laws[k], n) for k in set(labels)}


def limit_mixed(labels, xi, laws):
    r'''
    The joint limit of :math:`\varphi\circ\mathrm{tr}(X(k_1)^{\xi_1} \cdots X(k_n)^{\xi_n})`
    for independent copies :math:`X(k)` with B-diagonal entry families.

    .. math::
        \sum_{\tau\in\mathrm{alt}(\vec\xi),\ \tau\le\omega(\vec k)}
            \prod_{B\in\tau} w(\vec\xi, B),

    where :math:`w` is :math:`\alpha^{(k)}_{|B|/2}` or :math:`\beta^{(k)}_{|B|/2}` of the label
    owning the block. Each :math:`\tau = \sigma\wedge\omega(\vec k)` is counted once.

    Args:
        labels (iterable): a matrix label per position.
        xi (SignPattern): the signs.
        laws (dict): label to :obj:`BDiagonalLaw`, :obj:`BDiagonalEntries` or ``(alpha, beta)``.

    Example:
        >>> laws = {1: ([2], []), 2: ([3], [])}
        >>> br.limit_mixed([1, 1, 2, 2], br.parse_xi('xx*xx*'), laws)
        Fraction(6, 1)
    '''
    xi, labels = SignPattern(xi), LabelTuple(labels)
    if len(labels) != len(xi):
        raise ValueError('{} labels for a word of length {}'.format(len(labels), len(xi)))
    laws = _laws_for(labels, laws, len(xi))
    omega = omega_of_labels(labels)
    total = as_scalar(0)
    for tau in enumerate_alt(xi):
        if meet(tau, omega) == tau:
            total = total + _block_product(tau.windows, xi, lambda s: laws[labels[s]])
    return simplify(total)


def mixed_factorization(labels, xi, laws):
    r'''
    The product over the blocks :math:`D` of :math:`\omega(\vec k)` of
    :meth:`limit_bdiag` on :math:`\vec\xi|_D`. Equal to :meth:`limit_mixed`.

    Example:
        >>> laws = {1: ([2], []), 2: ([3], [])}
        >>> br.mixed_factorization([1, 1, 2, 2], br.parse_xi('xx*xx*'), laws)
        Fraction(6, 1)
    '''
    xi, labels = SignPattern(xi), LabelTuple(labels)
    if len(labels) != len(xi):
        raise ValueError('{} labels for a word of length {}'.format(len(labels), len(xi)))
    laws = _laws_for(labels, laws, len(xi))
    value = as_scalar(1)
    for start, length in omega_of_labels(labels).windows:
        value = value * limit_bdiag(xi[start:start + length], laws[labels[start]])
        if is_zero(value):
            return as_scalar(0)
    return simplify(value)


def limit_permuted(spec):
    r'''
    The limit of a trace word with entry permutations,

    .. math::
        \sum_{\sigma\in\mathrm{alt}(\vec\alpha, \vec\xi)}
            \prod_{B\in\sigma^-} \alpha_{|B|/2} \prod_{B\in\sigma^+} \beta_{|B|/2}.

    A block may only hold positions with the same matrix label and the same decoration label,
    so :math:`X` and :math:`X^{\lceil\alpha\rceil}` enter as if Boolean independent. The
    permutation families are assumed to satisfy the asymptotic condition, which
    :meth:`theta_condition_count` lets one inspect.

    Args:
        spec (MixedWordSpec): the word, with :obj:`BDiagonalEntries` models.

    Example:
        >>> spec = br.MixedWordSpec(br.parse_xi('xx*xx*'), models=br.BDiagonalEntries([1]),
        ...                         decorations=[None, None, 'a', 'a'])
        >>> br.limit_permuted(spec)
        Fraction(1, 1)
    '''
    if not isinstance(spec, MixedWordSpec):
        raise TypeError('{} is not a MixedWordSpec'.format(type(spec).__name__))
    for model in spec.models.values():
        if not isinstance(model, (BDiagonalEntries, BDiagonalLaw)):
            raise TypeError('limits need B-diagonal entry models, got {}'
                            .format(type(model).__name__))
    combined = list(zip(spec.labels, spec.decoration_labels()))
    return limit_mixed(combined, spec.xi, {k: spec.models[k[0]] for k in set(combined)})


def limit_selfadjoint(alpha, beta, n):
    r'''
    The limit moment of a self-adjoint matrix with Boolean independent entries,

    .. math::
        \lim_{N\to\infty} \varphi\circ\mathrm{tr}(B_N^{2r}) = \int_0^1 (\alpha x + \beta(1-x))^r dx
        = \begin{cases} \alpha^r, & \alpha = \beta, \\
          \dfrac{\alpha^{r+1} - \beta^{r+1}}{(r+1)(\alpha - \beta)}, & \alpha \ne \beta,
          \end{cases}

    and 0 for odd moments. The limit law is Bernoulli iff :math:`\alpha = \beta`.

    Example:
        >>> br.limit_selfadjoint(2, 1, 4)
        Fraction(7, 3)
    '''
    assert n >= 1, ValueError('n has to be positive: {}'.format(n))
    alpha, beta = as_scalar(alpha), as_scalar(beta)
    for name, value in (('alpha', alpha), ('beta', beta)):
        assert is_symbolic(value) or value >= 0, \
            ValueError('{} is a variance and has to be nonnegative: {}'.format(name, value))
    if n % 2:
        return as_scalar(0)
    r = n // 2
    if equal(alpha, beta):
        return simplify(alpha ** r)
    value = (alpha ** (r + 1) - beta ** (r + 1)) / ((r + 1) * (alpha - beta))
    return sympy.expand(sympy.cancel(value)) if is_symbolic(value) else value


def limit_selfadjoint_integral(alpha, beta, n, steps=2001):
    r'''
    :math:`\int_0^1 (\alpha x + \beta(1-x))^{n/2} dx` by the trapezoid rule in ``float64``,
    0 for odd :math:`n`. A numeric check of :meth:`limit_selfadjoint`.
    '''
    assert steps >= 2, ValueError('steps has to be at least 2: {}'.format(steps))
    if n % 2:
        return 0.
    x = torch.linspace(0, 1, steps, dtype=torch.float64)
    y = (to_float(alpha) * x + to_float(beta) * (1 - x)) ** (n // 2)
    return torch.trapezoid(y, x).item()
