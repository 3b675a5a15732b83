from .signs import ONE, SignPattern, LabelTuple, IndexTuple
from .interval import IntervalPartition, meet


def _check_length(sigma, xi):
    if sigma.n != len(xi):
        raise ValueError('partition of [{}] does not match a word of length {}'
                         .format(sigma.n, len(xi)))


def is_xi_alternating(sigma, xi):
    r'''
    Whether :math:`\sigma` is :math:`\vec\xi`-alternating.

    Every block :math:`\{d+1, \dots, d+p\}` has to satisfy
    :math:`\xi_{d+1} \neq \xi_{d+2}, \dots, \xi_{d+p-1} \neq \xi_{d+p}` and the cyclic closure
    :math:`\xi_{d+p} \neq \xi_{d+1}`. Singleton blocks always fail the closure, and so does
    every odd block.

    Args:
        sigma (IntervalPartition): the partition to test.
        xi (SignPattern): the sign pattern, of length ``sigma.n``.

    Return:
        bool

    Example:
        >>> br.is_xi_alternating(br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*'))
        True
    '''
    xi = SignPattern(xi)
    _check_length(sigma, xi)
    for start, length in sigma.windows:
        for q in range(length):
            if xi[start + q] == xi[start + (q + 1) % length]:
                return False
    return True


def enumerate_alt(xi):
    r'''
    Enumerate :math:`\mathrm{alt}(\vec\xi)`, in the same order as :meth:`enumerate_partitions`.

    Blocks are grown from the left: a block starting at :math:`d` can only close at an even
    length while the signs keep alternating, so no non-alternating partition is visited.

    Example:
        >>> [str(s) for s in br.enumerate_alt(br.parse_xi('xx*xx*'))]
        ['[4]', '[2,4]']
    '''
    xi = SignPattern(xi)
    n, found = len(xi), []

    def grow(start, endpoints):
        if start == n:
            found.append(IntervalPartition(endpoints, n))
            return
        end = start + 1
        while end < n and xi[end] != xi[end - 1]:
            end = end + 1
            if (end - start) % 2 == 0:
                grow(end, endpoints + [end])

    grow(0, [])
    return iter(sorted(found, key=lambda sigma: sigma.mask))


def omega_of_labels(k):
    r'''
    The partition :math:`\omega(\vec k)`: the largest element of :math:`\mathcal{I}(n)` on
    whose blocks the labels are constant.

    Example:
        >>> br.omega_of_labels([1, 1, 2, 2, 1])
        IntervalPartition([2,4,5])
    '''
    k = LabelTuple(k)
    n = len(k)
    return IntervalPartition([t for t in range(1, n) if k[t - 1] != k[t]] + [n], n)


def _check_alphas(alphas, n, N):
    if alphas is None:
        return [None] * n
    alphas = list(alphas)
    if len(alphas) != n:
        raise ValueError('expected {} permutations, got {}'.format(n, len(alphas)))
    for alpha in alphas:
        if alpha is not None and alpha.N != N:
            raise ValueError('permutation acts on [{0}]x[{0}] but indices live in [{1}]'
                             .format(alpha.N, N))
    return alphas


def variable_pairs(xi, i, alphas=None):
    r'''
    The entry variables :math:`\alpha_s^{\xi_s}(i_s, i_{s+1})` of a matrix word, 1-based.

    Here :math:`(i,j)^1 = (i,j)`, :math:`(i,j)^\ast = (j,i)` and :math:`i_{n+1} = i_1`;
    ``None`` in ``alphas`` stands for the identity.
    '''
    xi = SignPattern(xi)
    if not isinstance(i, IndexTuple):
        raise TypeError('indices have to be an IndexTuple, got {}'.format(type(i).__name__))
    n = len(xi)
    if len(i) != n:
        raise ValueError('sign pattern of length {} does not match {} indices'.format(n, len(i)))
    alphas, pairs = _check_alphas(alphas, n, i.N), []
    for s in range(n):
        a, b = i[s], i[(s + 1) % n]
        pair = (a, b) if xi[s] == ONE else (b, a)
        if alphas[s] is not None:
            pair = alphas[s](*pair)
        pairs.append(pair)
    return pairs


def _runs(pairs):
    n = len(pairs)
    endpoints = [t for t in range(1, n) if pairs[t - 1] != pairs[t]] + [n]
    return IntervalPartition(endpoints, n)


def iota(xi, i):
    r'''
    The partition :math:`\iota(\vec\xi, \vec\imath)` of maximal runs of repeated entry variables.

    Consecutive positions :math:`t, t+1` share a block iff
    :math:`(i_t, i_{t+1})^{\xi_t} = (i_{t+1}, i_{t+2})^{\xi_{t+1}}`.

    Args:
        xi (SignPattern): the sign pattern.
        i (IndexTuple): the indices, read cyclically.

    Return:
        IntervalPartition: the partition of :math:`[n]`.

    Example:
        >>> br.iota(br.parse_xi('xx*'), br.IndexTuple([1, 2], N=3))
        IntervalPartition([2])
        >>> br.iota(br.parse_xi('xx'), br.IndexTuple([1, 2], N=3))
        IntervalPartition([1,2])
    '''
    return _runs(variable_pairs(xi, i))


def iota_permuted(alphas, xi, i):
    r'''
    :meth:`iota` with each pair relabelled by :math:`\alpha_s^{\xi_s}`, where
    :math:`\alpha^\ast(i,j) = \alpha(j,i)`.

    Args:
        alphas (list): a :obj:`PermutationSpec` or ``None`` (identity) per position.
        xi (SignPattern): the sign pattern.
        i (IndexTuple): the indices.
    '''
    return _runs(variable_pairs(xi, i, alphas))


def enumerate_alt_permuted(alpha_labels, xi):
    r'''
    Enumerate :math:`\mathrm{alt}(\vec\alpha, \vec\xi)`: the :math:`\vec\xi`-alternating
    partitions whose blocks carry a single permutation label.

    Args:
        alpha_labels (iterable): hashable permutation labels, one per position.
        xi (SignPattern): the sign pattern.

    Example:
        >>> [str(s) for s in br.enumerate_alt_permuted('eeaa', br.parse_xi('xx*xx*'))]
        ['[2,4]']
    '''
    xi = SignPattern(xi)
    omega = omega_of_labels(alpha_labels)
    _check_length(omega, xi)
    return (sigma for sigma in enumerate_alt(xi) if meet(sigma, omega) == sigma)
