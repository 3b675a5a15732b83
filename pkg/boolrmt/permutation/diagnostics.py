import torch
import warnings
from ..utils.scalar import as_scalar, simplify
from ..partitions import parse_xi
from ..model import BDiagonalEntries
from ..matrix import MixedWordSpec, trace_moment_exact
from .spec import PermutationSpec, PartialTransposeSpec, partial_transpose


PATTERNS = ('swap', 'share')


def _bands(alpha, pattern):
    for rows, cols, a, b in alpha.bands():
        if pattern == 'swap':
            first, second = a == cols, b == rows
        else:
            first, second = a == rows, b == cols
        yield rows, first, second, first & second & (a == b)


def _hits(alpha, pattern):
    if not isinstance(alpha, PermutationSpec):
        raise TypeError('{} is not a PermutationSpec'.format(type(alpha).__name__))
    if pattern not in PATTERNS:
        raise ValueError('unknown pattern {!r}; expected one of {}'.format(pattern, PATTERNS))
    return _bands(alpha, pattern)


def theta_condition_count(alpha, pattern='swap'):
    r'''
    The number of triples behind the asymptotic condition on entry permutations.

    With ``pattern="swap"``,

    .. math::
        \#\{(i, j, k)\in[N]^3 : \alpha(i, j)\in\{(j, k), (k, i)\}\},

    and with ``pattern="share"`` the triples with
    :math:`\alpha(i, j)\in\{(i, k), (k, j)\}`, the entries whose image keeps the row or the
    column. For a cell :math:`(i,j)` each alternative fixes :math:`k`, and the two coincide
    only when :math:`i = j = k`.

    Args:
        alpha (PermutationSpec): the permutation, dense or a closure; the grid is walked in
            row bands.
        pattern (str, optional): ``"swap"`` or ``"share"``. Default: ``"swap"``.

    Return:
        int: the count.

    Example:
        >>> br.theta_condition_count(br.identity(5)), br.theta_condition_count(br.transpose(5))
        (5, 45)
    '''
    return sum(int(first.sum() + second.sum() - both.sum())
               for _, first, second, both in _hits(alpha, pattern))


def theta_ratio_sweep(factory, sizes, theta=2, pattern='swap'):
    r'''
    :math:`\text{count}/N^\theta` of :meth:`theta_condition_count` across sizes.

    Args:
        factory (callable): ``N -> PermutationSpec``, or ``k -> PermutationSpec`` when the
            family is indexed by something other than the grid side; the ratio always uses
            the permutation's own :math:`N`.
        sizes (list): the family indices.
        theta (float, optional): the exponent. Default: ``2``.
        pattern (str, optional): ``"swap"`` or ``"share"``. Default: ``"swap"``.

    Return:
        Tensor: ``float64`` ratios, one per size.

    Example:
        >>> br.theta_ratio_sweep(br.transpose, [10, 100])
        tensor([1.9000, 1.9900], dtype=torch.float64)
    '''
    if not 0 < theta <= 3:
        warnings.warn('theta={} is outside (0, 3]'.format(theta))
    ratios = []
    for size in sizes:
        alpha = factory(size)
        ratios.append(theta_condition_count(alpha, pattern) / float(alpha.N) ** theta)
    return torch.tensor(ratios, dtype=torch.float64)


def sharing_pairs(alpha):
    r'''
    The cells :math:`(i, j)`, 1-based, with :math:`\alpha(i, j)\in\{(i, k), (k, j)\}` for some
    :math:`k`. For a partial transpose this is :meth:`delta_set`.
    '''
    cells = set()
    for rows, first, second, _ in _hits(alpha, 'share'):
        offset = int(rows[0, 0])
        cells.update((i + offset + 1, j + 1) for i, j in (first | second).nonzero().tolist())
    return cells


def delta_set(spec):
    r'''
    The cells :math:`(i, j)\in[mn]^2` with :math:`i \equiv j \pmod n`, those kept in place by
    the partial transpose. It has :math:`m^2 n` elements.

    Example:
        >>> sorted(br.delta_set(br.PartialTransposeSpec(1, 2)))
        [(1, 1), (2, 2)]
    '''
    if not isinstance(spec, PartialTransposeSpec):
        raise TypeError('{} is not a PartialTransposeSpec'.format(type(spec).__name__))
    grid = torch.arange(spec.N)
    keep = (grid[:, None] - grid[None, :]) % spec.n == 0
    return {(i + 1, j + 1) for i, j in keep.nonzero().tolist()}


def partial_transpose_cross_moment(alpha_val, beta_val, m, n):
    r'''
    :math:`\varphi\circ\mathrm{tr}(X^\ast X^{\Gamma})` for the partial :math:`m`-transpose on
    :math:`N = mn` and B-diagonal entries with :math:`N\varphi(x^\ast x) = \beta`.

    Only the :math:`m^2 n` cells of :meth:`delta_set` give the run :math:`x^\ast_{ij} x_{ij}`,
    so the value is

    .. math::
        \frac{1}{N}\cdot m^2 n\cdot\frac{\beta}{N} = \frac{\beta}{n},

    which vanishes as :math:`N\to\infty` iff :math:`n\to\infty`. The value does not depend on
    ``alpha_val``.

    Example:
        >>> br.partial_transpose_cross_moment(1, 2, 3, 4)
        Fraction(1, 2)
    '''
    assert m >= 1 and n >= 1, ValueError('m and n have to be positive: {}, {}'.format(m, n))
    return simplify(as_scalar(beta_val) / n)


def cross_moment_exact(beta, m, n, alpha=0, method='partition', budget=None):
    r'''
    The value of :meth:`partial_transpose_cross_moment` computed by :meth:`trace_moment_exact`
    on the word :math:`X^\ast X^{\lceil\Gamma\rceil}` at :math:`N = mn`.
    '''
    spec = MixedWordSpec(parse_xi('x*x'), models=BDiagonalEntries(a=[alpha], b=[beta]),
                         decorations=[None, partial_transpose(m, n)])
    return trace_moment_exact(spec, m * n, method, budget)
