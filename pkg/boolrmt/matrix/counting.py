import torch
import sympy
from functools import lru_cache
from dataclasses import dataclass
from ..utils.config import DEFAULT_CHUNK, check_budget
from ..partitions import ONE, SignPattern, IntervalPartition, is_xi_alternating


@dataclass(frozen=True)
class CountResult:
    r'''
    The number :math:`\#\{\vec\imath\in[N]^n : \iota(\vec\xi, \vec\imath) = \sigma\}`.

    Attributes:
        sigma (IntervalPartition): the target partition.
        xi (SignPattern): the sign pattern.
        N (int): the matrix size.
        count (int): the number of index tuples.
        method (str): ``"brute"``, ``"blockwise"`` or ``"closed_form"``.
    '''
    sigma: IntervalPartition
    xi: SignPattern
    N: int
    count: int
    method: str

    def to_json(self):
        return {'sigma': str(self.sigma), 'xi': str(self.xi), 'N': self.N,
                'count': self.count, 'method': self.method}


def _check(sigma, xi, N):
    xi = SignPattern(xi)
    if sigma.n != len(xi):
        raise ValueError('partition of [{}] does not match a word of length {}'
                         .format(sigma.n, len(xi)))
    assert N >= 1, ValueError('N has to be positive: {}'.format(N))
    return xi


@lru_cache(maxsize=256)
def _histogram(xi, N, alphas, chunk):
    n = len(xi)
    powers = torch.tensor([N ** (n - 1 - s) for s in range(n)], dtype=torch.long)
    counts = torch.zeros(1 << (n - 1), dtype=torch.long)
    bits = torch.tensor([1 << (t - 1) for t in range(1, n)], dtype=torch.long)
    total = N ** n
    for start in range(0, total, chunk):
        codes = torch.arange(start, min(start + chunk, total), dtype=torch.long)
        idx = (codes[:, None] // powers) % N
        pairs = []
        for s in range(n):
            a, b = idx[:, s], idx[:, (s + 1) % n]
            if xi[s] != ONE:
                a, b = b, a
            if alphas[s] is not None:
                a, b = alphas[s].take(a, b)
            pairs.append(a * N + b)
        if n > 1:
            pairs = torch.stack(pairs, dim=1)
            differ = (pairs[:, 1:] != pairs[:, :-1]).long()
            masks = (differ * bits).sum(dim=1)
        else:
            masks = torch.zeros(codes.numel(), dtype=torch.long)
        counts += torch.bincount(masks, minlength=1 << (n - 1))
    return tuple(counts.tolist())


def iota_histogram(xi, N, alphas=None, budget=None, chunk=DEFAULT_CHUNK):
    r'''
    The number of index tuples per :math:`\iota`-partition, by exhaustive enumeration.

    All :math:`N^n` tuples are enumerated in torch batches of ``chunk`` tuples; each tuple's
    entry variables are encoded as :math:`aN + b` and the run boundaries as the endpoint
    bitmask of :obj:`IntervalPartition`.

    Args:
        xi (SignPattern): the sign pattern.
        N (int): the matrix size.
        alphas (list, optional): a :obj:`PermutationSpec` or ``None`` per position, giving
            the counts of :math:`\iota(\vec\alpha, \vec\xi, \cdot)`. Default: ``None``.
        budget (int, optional): the largest :math:`N^n` allowed. Default: ``None``, see
            :meth:`enumeration_budget`.
        chunk (int, optional): tuples per batch. Default: :obj:`DEFAULT_CHUNK`.

    Return:
        dict: :obj:`IntervalPartition` to count, every partition of :math:`[n]` present.
    '''
    xi = SignPattern(xi)
    n = len(xi)
    assert N >= 1, ValueError('N has to be positive: {}'.format(N))
    check_budget(N ** n, budget)
    alphas = (None,) * n if alphas is None else tuple(alphas)
    if len(alphas) != n:
        raise ValueError('expected {} permutations, got {}'.format(n, len(alphas)))
    for alpha in alphas:
        if alpha is not None and alpha.N != N:
            raise ValueError('permutation acts on [{}]x[{}] but N={}'.format(alpha.N, alpha.N, N))
    alphas = tuple(None if a is None or a.is_identity else a for a in alphas)
    counts = _histogram(tuple(xi), N, alphas, chunk)
    return {IntervalPartition.from_mask(n, mask): c for mask, c in enumerate(counts)}


def count_tuples_brute(sigma, xi, N, alphas=None, budget=None):
    r'''
    Count :math:`\#\{\vec\imath\in[N]^n : \iota(\vec\xi,\vec\imath) = \sigma\}` by enumeration.

    Example:
        >>> br.count_tuples_brute(br.one(2), br.parse_xi('xx*'), 3).count
        9
        >>> br.count_tuples_brute(br.one(2), br.parse_xi('xx'), 3).count
        3
    '''
    xi = _check(sigma, xi, N)
    count = iota_histogram(xi, N, alphas, budget)[sigma]
    return CountResult(sigma, xi, N, count, 'brute')


class _Classes(object):
    ''' Union-find on index positions. '''
    def __init__(self, n):
        self.parent = list(range(n))
        self.size = n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[y] = x
            self.size -= 1

    def copy(self):
        other = _Classes(0)
        other.parent, other.size = list(self.parent), self.size
        return other


@lru_cache(maxsize=4096)
def _coefficients(endpoints, xi):
    n = len(xi)
    # pair_s as positions of the index variables, i_{n+1} = i_1
    pairs = [(s, (s + 1) % n) if xi[s] == ONE else ((s + 1) % n, s) for s in range(n)]
    inner = set(endpoints[:-1])
    base = _Classes(n)
    for t in range(1, n):
        if t not in inner:
            base.union(pairs[t - 1][0], pairs[t][0])
            base.union(pairs[t - 1][1], pairs[t][1])
    boundaries = sorted(inner)
    coefficients = {}
    for subset in range(1 << len(boundaries)):
        classes, sign = base.copy(), 1
        for k, t in enumerate(boundaries):
            if subset >> k & 1:
                classes.union(pairs[t - 1][0], pairs[t][0])
                classes.union(pairs[t - 1][1], pairs[t][1])
                sign = -sign
        coefficients[classes.size] = coefficients.get(classes.size, 0) + sign
    return tuple(sorted((e, c) for e, c in coefficients.items() if c != 0))


def count_polynomial(sigma, xi):
    r'''
    The count :math:`\#\{\vec\imath : \iota(\vec\xi,\vec\imath) = \sigma\}` as a polynomial in
    :math:`N`.

    Inside a block consecutive entry variables coincide, which identifies index positions;
    at each inner endpoint the two neighbouring variables must differ. Inclusion-exclusion
    over the endpoints turns the inequalities into identifications:

    .. math::
        \sum_{S} (-1)^{|S|} N^{c(S)},

    where :math:`S` runs over sets of inner endpoints whose variables are forced equal and
    :math:`c(S)` is the number of free index classes.

    Example:
        >>> br.count_polynomial(br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*'))
        N**3 - N**2
    '''
    xi = SignPattern(xi)
    _check(sigma, xi, 1)
    N = sympy.Symbol('N', positive=True, integer=True)
    return sympy.expand(sum(c * N ** e for e, c in _coefficients(sigma.endpoints, tuple(xi))))


def count_tuples_blockwise(sigma, xi, N):
    r'''
    The exact count from :meth:`count_polynomial`, evaluated at :math:`N` without enumeration.

    Example:
        >>> br.count_tuples_blockwise(br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*'), 4).count
        48
    '''
    xi = _check(sigma, xi, N)
    count = sum(c * N ** e for e, c in _coefficients(sigma.endpoints, tuple(xi)))
    return CountResult(sigma, xi, N, count, 'blockwise')


def closed_form_applies(sigma, xi):
    r'''
    Whether :meth:`closed_form_count` is exact: :math:`\sigma\in\mathrm{alt}(\vec\xi)` and
    :math:`\vec\xi` alternates along the whole word, :math:`\xi_s \neq \xi_{s+1}` cyclically.

    Inside an alternating block the indices alternate between two values. Only when the word
    alternates globally do all blocks share the first of them, which is what leaves
    :math:`N^2 (N-1)^{r-1}` tuples. Otherwise the count differs, e.g. :math:`N^3 - N` for
    :math:`\vec\xi = (1,\ast,\ast,1)` and :math:`\sigma = [2,4]`.

    Example:
        >>> br.closed_form_applies(br.IntervalPartition([2, 4]), br.parse_xi('xx*xx*'))
        True
        >>> br.closed_form_applies(br.IntervalPartition([2, 4]), br.parse_xi('xx*x*x'))
        False
    '''
    xi = SignPattern(xi)
    return len(xi) % 2 == 0 and xi.is_alternating() and is_xi_alternating(sigma, xi)


def closed_form_count(sigma, xi, N):
    r'''
    :math:`N^2 (N-1)^{r-1}` with :math:`r = \#\sigma`.

    Raises:
        ValueError: unless :meth:`closed_form_applies`, use :meth:`count_tuples_blockwise`
            for the other words.
    '''
    xi = _check(sigma, xi, N)
    if not is_xi_alternating(sigma, xi):
        raise ValueError('{} is not {}-alternating; no closed form'.format(sigma, xi))
    if not closed_form_applies(sigma, xi):
        raise ValueError('{} does not alternate along the whole word; the closed form needs '
                         'a word like "xx*xx*"'.format(xi))
    return CountResult(sigma, xi, N, N ** 2 * (N - 1) ** (len(sigma) - 1), 'closed_form')
