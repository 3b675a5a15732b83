import torch
import warnings
import pandas as pd
from ..utils.config import DENSE_LIMIT, DEFAULT_CHUNK


class PermutationSpec(object):
    r'''
    A bijection :math:`\alpha` of :math:`[N]\times[N]`, acting on matrix entries by
    :math:`(A^{\lceil\alpha\rceil})_{ij} = A_{\alpha(i,j)}`.

    Up to :obj:`DENSE_LIMIT` the map is stored densely as a ``(N, N, 2)`` long tensor of
    0-based targets and bijectivity is checked exactly. Above it a callable is kept and
    bijectivity is only checked on a sample, with a warning. Both storages answer
    :meth:`take` and :meth:`bands`, which every diagnostic goes through; only
    :meth:`dense`, :meth:`inverse` and :meth:`compose` need the table.

    The public interface is 1-based: ``alpha(i, j)`` takes and returns indices in :math:`[N]`.
    A callable is first tried on whole index tensors and falls back to one call per cell.

    Args:
        N (int): the grid side.
        table (Tensor, optional): the dense map, 0-based. Default: ``None``.
        fn (callable, optional): ``(i, j) -> (i', j')``, 1-based. Default: ``None``.
        name (str, optional): a tag used in reports and as the decoration label in limits.
            Default: ``None``.
        samples (int, optional): the sample size of the closure check, ``0`` for maps
            known to be bijections, which skips the check and its warning. Default: ``4096``.
        seed (int, optional): the seed of the closure check. Default: ``0``.

    Example:
        >>> t = br.transpose(3)
        >>> t(1, 2)
        (2, 1)
        >>> t.star().is_identity
        True
    '''
    def __init__(self, N, table=None, fn=None, name=None, samples=4096, seed=0):
        assert N >= 1, ValueError('N has to be positive: {}'.format(N))
        if (table is None) == (fn is None):
            raise ValueError('exactly one of table and fn has to be given')
        self.N, self.name, self._signature, self._vectorized = int(N), name, None, True
        if table is None and self.N <= DENSE_LIMIT:
            table = self._tabulate(fn)
        if table is not None:
            table = torch.as_tensor(table, dtype=torch.long)
            if tuple(table.shape) != (self.N, self.N, 2):
                raise ValueError('a dense map needs shape ({0}, {0}, 2). Got {1}'
                                 .format(self.N, tuple(table.shape)))
            self._table, self._fn = table, None
            self._check_dense()
        else:
            self._table, self._fn = None, fn
            if samples:
                self._check_sampled(samples, seed)

    def _tabulate(self, fn):
        self._table, self._fn = None, fn
        grid = torch.arange(self.N)
        return torch.stack(self.take(*torch.meshgrid(grid, grid, indexing='ij')), dim=-1)

    def _check_dense(self):
        t, N = self._table, self.N
        if t.min() < 0 or t.max() >= N:
            raise ValueError('map leaves [{}]x[{}]'.format(N, N))
        codes = (t[..., 0] * N + t[..., 1]).flatten()
        if torch.unique(codes).numel() != N * N:
            raise ValueError('map on [{0}]x[{0}] is not a bijection'.format(N))

    def _check_sampled(self, samples, seed):
        generator = torch.Generator().manual_seed(seed)
        codes = torch.unique(torch.randint(0, self.N * self.N, (samples,), generator=generator))
        a, b = self.take(codes // self.N, codes % self.N)
        outside = (a < 0) | (a >= self.N) | (b < 0) | (b >= self.N)
        if bool(outside.any()):
            k = int(outside.nonzero()[0, 0])
            raise ValueError('map sends ({}, {}) outside the grid: {}'.format(
                int(codes[k]) // self.N + 1, int(codes[k]) % self.N + 1,
                (int(a[k]) + 1, int(b[k]) + 1)))
        if torch.unique(a * self.N + b).numel() != codes.numel():
            raise ValueError('map on [{0}]x[{0}] is not a bijection'.format(self.N))
        warnings.warn('permutation on a {0}x{0} grid is kept as a closure; bijectivity was '
                      'checked on {1} samples only'.format(self.N, samples))

    @property
    def is_dense(self):
        return self._table is not None

    def dense(self):
        r''' The ``(N, N, 2)`` map, 0-based. '''
        if self._table is None:
            raise ValueError('a {0}x{0} closure has no dense map'.format(self.N))
        return self._table

    def take(self, a, b):
        r'''
        The images of the cells ``(a, b)``, 0-based on both sides.

        Args:
            a (Tensor): row indices, a long tensor.
            b (Tensor): column indices, of the same shape as ``a``.

        Return:
            tuple of two long tensors shaped like ``a``.

        Example:
            >>> a, b = br.transpose(3).take(torch.tensor([0, 1]), torch.tensor([2, 2]))
            >>> a.tolist(), b.tolist()
            ([2, 2], [0, 1])
        '''
        if self._table is not None:
            return self._table[a, b, 0], self._table[a, b, 1]
        if self._vectorized:
            try:
                image = self._fn(a + 1, b + 1)
                return tuple(torch.broadcast_to(torch.as_tensor(v, dtype=torch.long), a.shape) - 1
                             for v in image)
            except (TypeError, ValueError, RuntimeError):
                self._vectorized = False
        cells = zip((a + 1).flatten().tolist(), (b + 1).flatten().tolist())
        image = torch.tensor([tuple(self._fn(i, j)) for i, j in cells], dtype=torch.long)
        image = image.view(*a.shape, 2) - 1
        return image[..., 0], image[..., 1]

    def bands(self, chunk=DEFAULT_CHUNK):
        r'''
        Walk the grid in bands of whole rows, at most about ``chunk`` cells each.

        Yields:
            ``(rows, cols, a, b)``: ``rows`` a column and ``cols`` a row of 0-based indices,
            ``a`` and ``b`` the 0-based images of the band, of shape ``(len(rows), N)``.
        '''
        step = max(1, chunk // self.N)
        cols = torch.arange(self.N)[None, :]
        for start in range(0, self.N, step):
            rows = torch.arange(start, min(start + step, self.N))[:, None]
            shape = (rows.shape[0], self.N)
            a, b = self.take(rows.expand(shape), cols.expand(shape))
            yield rows, cols, a, b

    def __call__(self, i, j):
        if self._table is not None:
            a, b = self._table[i - 1, j - 1].tolist()
            return a + 1, b + 1
        return tuple(int(v) for v in self._fn(i, j))

    def star(self):
        r''' :math:`\alpha^\ast(i, j) = \alpha(j, i)`. '''
        name = None if self.name is None else self.name + '*'
        if self._table is not None:
            return PermutationSpec(self.N, self._table.transpose(0, 1).contiguous(), name=name)
        fn = self._fn
        return PermutationSpec(self.N, fn=lambda i, j: fn(j, i), name=name, samples=0)

    def inverse(self):
        t = self.dense()
        codes = (t[..., 0] * self.N + t[..., 1]).flatten()
        source = torch.empty_like(codes)
        source[codes] = torch.arange(self.N * self.N)
        table = torch.stack([source // self.N, source % self.N], dim=-1).view(self.N, self.N, 2)
        return PermutationSpec(self.N, table, name=None if self.name is None else self.name + '^-1')

    def compose(self, other):
        r''' :math:`(\alpha\circ\gamma)(i, j) = \alpha(\gamma(i, j))`. '''
        if other.N != self.N:
            raise ValueError('cannot compose maps on grids {} and {}'.format(self.N, other.N))
        t, s = self.dense(), other.dense()
        return PermutationSpec(self.N, t[s[..., 0], s[..., 1]])

    @property
    def is_identity(self):
        return all(bool((a == rows).all() and (b == cols).all())
                   for rows, cols, a, b in self.bands())

    def fixed_points(self):
        cells = []
        for rows, cols, a, b in self.bands():
            offset = int(rows[0, 0])
            fixed = (a == rows) & (b == cols)
            cells += [(i + offset + 1, j + 1) for i, j in fixed.nonzero().tolist()]
        return cells

    @property
    def signature(self):
        r''' The images of the first row, enough to tell most maps apart in a hash. '''
        if self._signature is None:
            a, b = self.take(torch.zeros(self.N, dtype=torch.long), torch.arange(self.N))
            self._signature = (self.N, tuple(a.tolist()), tuple(b.tolist()))
        return self._signature

    def __eq__(self, other):
        if not isinstance(other, PermutationSpec) or self.N != other.N:
            return False
        if self is other:
            return True
        if self.is_dense and other.is_dense:
            return torch.equal(self._table, other._table)
        if self.signature != other.signature:
            return False
        return all(torch.equal(a, c) and torch.equal(b, d) for (_, _, a, b), (_, _, c, d)
                   in zip(self.bands(), other.bands()))

    def __hash__(self):
        return hash(self.signature)

    def label(self):
        r''' The decoration label used by limits: ``"e"`` for the identity, else the name. '''
        if self.is_identity:
            return 'e'
        return self.name if self.name is not None else 'alpha@{}'.format(id(self))

    def __repr__(self):
        return 'PermutationSpec(N={}, name={!r})'.format(self.N, self.name)


def identity(N):
    if N > DENSE_LIMIT:
        return PermutationSpec(N, fn=lambda i, j: (i, j), name='e', samples=0)
    grid = torch.arange(N)
    table = torch.stack(torch.meshgrid(grid, grid, indexing='ij'), dim=-1)
    return PermutationSpec(N, table, name='e')


def transpose(N):
    r''' The full transpose :math:`t(i, j) = (j, i)`, so :math:`A^{\lceil t\rceil} = A^T`. '''
    if N > DENSE_LIMIT:
        return PermutationSpec(N, fn=lambda i, j: (j, i), name='t', samples=0)
    grid = torch.arange(N)
    rows, cols = torch.meshgrid(grid, grid, indexing='ij')
    return PermutationSpec(N, torch.stack([cols, rows], dim=-1), name='t')


class PartialTransposeSpec(object):
    r'''
    The partial :math:`m`-transpose of :math:`mn\times mn` matrices: the matrix is read as an
    :math:`m\times m` array of :math:`n\times n` blocks and every block is transposed in place.

    Example:
        >>> spec = PartialTransposeSpec(2, 3)
        >>> spec.N, len(br.delta_set(spec))
        (6, 12)
    '''
    def __init__(self, m, n):
        assert m >= 1 and n >= 1, ValueError('m and n have to be positive: {}, {}'.format(m, n))
        self.m, self.n, self.N = int(m), int(n), int(m) * int(n)

    def image(self, i, j):
        r''' The 0-based image of the 0-based cell ``(i, j)``, for ints or long tensors. '''
        n = self.n
        return (i // n) * n + j % n, (j // n) * n + i % n

    def permutation(self):
        name = 'partial:{},{}'.format(self.m, self.n)
        if self.N > DENSE_LIMIT:
            def fn(i, j):
                a, b = self.image(i - 1, j - 1)
                return a + 1, b + 1
            return PermutationSpec(self.N, fn=fn, name=name, samples=0)
        grid = torch.arange(self.N)
        rows, cols = torch.meshgrid(grid, grid, indexing='ij')
        return PermutationSpec(self.N, torch.stack(self.image(rows, cols), dim=-1), name=name)

    def __repr__(self):
        return 'PartialTransposeSpec(m={}, n={})'.format(self.m, self.n)


def partial_transpose(m, n):
    r''' The partial :math:`m`-transpose on :math:`[mn]\times[mn]` as a :obj:`PermutationSpec`. '''
    return PartialTransposeSpec(m, n).permutation()


def from_callable(N, fn, name=None):
    return PermutationSpec(N, fn=fn, name=name)


def from_csv(path, N=None, name=None):
    r'''
    Read a map from CSV rows ``i,j,i',j'`` (1-based). Lines starting with ``#`` are skipped.
    Every cell of the grid has to appear exactly once.
    '''
    frame = pd.read_csv(path, header=None, comment='#', skipinitialspace=True)
    if frame.shape[1] != 4:
        raise ValueError('expected 4 columns i,j,i2,j2 in {}. Got {}'.format(path, frame.shape[1]))
    rows = torch.as_tensor(frame.values.astype('int64'))
    N = int(rows[:, :2].max()) if N is None else int(N)
    if rows.shape[0] != N * N:
        raise ValueError('expected {} rows for a {}x{} grid. Got {}'.format(N * N, N, N, rows.shape[0]))
    if rows.min() < 1 or rows.max() > N:
        raise ValueError('indices in {} leave [{}]'.format(path, N))
    table = torch.full((N, N, 2), -1, dtype=torch.long)
    table[rows[:, 0] - 1, rows[:, 1] - 1] = rows[:, 2:] - 1
    seen = torch.zeros(N, N, dtype=torch.long)
    seen.index_put_((rows[:, 0] - 1, rows[:, 1] - 1), torch.ones(rows.shape[0], dtype=torch.long),
                    accumulate=True)
    if not bool((seen == 1).all()):
        raise ValueError('{} does not list every cell of the grid exactly once'.format(path))
    return PermutationSpec(N, table, name=name or str(path))


def parse_permutation(text, N=None):
    r'''
    Resolve a permutation name: ``identity`` (or ``e``), ``transpose`` (or ``t``),
    ``partial:m,n``, or a path to a CSV file.

    Args:
        text (str): the name.
        N (int, optional): the grid side; required for identity and transpose, checked for
            ``partial:m,n`` against :math:`mn`. Default: ``None``.
    '''
    text = text.strip()
    if text in ('identity', 'e', 'transpose', 't'):
        if N is None:
            raise ValueError('{!r} needs the grid side N'.format(text))
        return identity(N) if text in ('identity', 'e') else transpose(N)
    if text.startswith('partial:'):
        try:
            m, n = (int(v) for v in text[len('partial:'):].split(','))
        except ValueError:
            raise ValueError('expected partial:m,n. Got {!r}'.format(text))
        if N is not None and m * n != N:
            raise ValueError('partial:{},{} acts on N={}, not N={}'.format(m, n, m * n, N))
        return partial_transpose(m, n)
    return from_csv(text, N)


def apply_entry_permutation(alpha, matrix=None):
    r'''
    The entry action of :math:`\alpha`.

    Without a matrix, returns :math:`\alpha` itself as the ``(i, j) -> (i', j')`` relabelling
    used by the trace moments. With a square tensor, returns :math:`A^{\lceil\alpha\rceil}`.

    Example:
        >>> A = torch.arange(9.).view(3, 3)
        >>> torch.equal(apply_entry_permutation(br.transpose(3), A), A.T)
        True
    '''
    if not isinstance(alpha, PermutationSpec):
        raise TypeError('{} is not a PermutationSpec'.format(type(alpha).__name__))
    if matrix is None:
        return alpha
    if tuple(matrix.shape[-2:]) != (alpha.N, alpha.N):
        raise ValueError('matrix of shape {} does not match N={}'.format(tuple(matrix.shape), alpha.N))
    grid = torch.arange(alpha.N)
    a, b = alpha.take(*torch.meshgrid(grid, grid, indexing='ij'))
    return matrix[..., a, b]
