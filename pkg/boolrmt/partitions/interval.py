import json
import numbers


class IntervalPartition(object):
    r'''
    An interval partition of :math:`[n] = \{1, 2, \dots, n\}`, stored by its block endpoints.

    A partition with blocks :math:`B_t = \{l(t-1)+1, \dots, l(t)\}`, :math:`l(0) = 0`, is
    written :math:`\sigma = [l(1), l(2), \dots, l(r)]` with :math:`l(r) = n`. The set
    :math:`\mathcal{I}(n)` of all such partitions is a lattice of size :math:`2^{n-1}` under
    refinement, where :math:`\pi \leq \sigma` whenever each block of :math:`\pi` is contained
    in a block of :math:`\sigma`.

    Args:
        endpoints (iterable of int): the strictly increasing endpoints :math:`l(1) < \dots < l(r)`.
        n (int, optional): the ground-set size. If ``None``, the last endpoint is used.
            Default: ``None``.

    Note:
        Endpoints make the lattice operations set operations: the endpoints of
        :math:`\sigma\wedge\omega` are the union and those of :math:`\sigma\vee\omega` the
        intersection of the two endpoint sets. Block views are derived on demand.

    Example:
        >>> sigma = br.IntervalPartition([2, 4])
        >>> sigma.blocks
        ((1, 2), (3, 4))
        >>> br.meet(sigma, br.IntervalPartition([3, 4]))
        IntervalPartition([2,3,4])
    '''
    __slots__ = ('_n', '_endpoints')

    def __init__(self, endpoints, n=None):
        endpoints = tuple(int(e) for e in endpoints)
        if len(endpoints) == 0:
            raise ValueError('an interval partition needs at least one endpoint')
        n = endpoints[-1] if n is None else int(n)
        if n < 1:
            raise ValueError('ground-set size has to be positive: {}'.format(n))
        if endpoints[-1] != n:
            raise ValueError('last endpoint has to equal n={}. Got {}'.format(n, list(endpoints)))
        if endpoints[0] < 1 or any(a >= b for a, b in zip(endpoints, endpoints[1:])):
            raise ValueError('endpoints have to be strictly increasing in [{}]. Got {}'
                             .format(n, list(endpoints)))
        self._n, self._endpoints = n, endpoints

    @property
    def n(self):
        return self._n

    @property
    def endpoints(self):
        return self._endpoints

    @property
    def blocks(self):
        starts = (0,) + self._endpoints[:-1]
        return tuple(tuple(range(a + 1, b + 1)) for a, b in zip(starts, self._endpoints))

    @property
    def windows(self):
        ''' Blocks as ``(start, length)`` pairs, i.e. the block is ``start+1, ..., start+length``. '''
        starts = (0,) + self._endpoints[:-1]
        return tuple((a, b - a) for a, b in zip(starts, self._endpoints))

    @property
    def sizes(self):
        return tuple(length for _, length in self.windows)

    @property
    def mask(self):
        r''' The inner endpoints :math:`\{l(1), \dots, l(r-1)\}` as a bitmask, bit ``l-1`` for ``l``. '''
        return sum(1 << (e - 1) for e in self._endpoints[:-1])

    @classmethod
    def from_mask(cls, n, mask):
        if n < 1:
            raise ValueError('ground-set size has to be positive: {}'.format(n))
        if mask < 0 or mask >> (n - 1):
            raise ValueError('mask {} is outside the endpoint range of I({})'.format(mask, n))
        return cls([e for e in range(1, n) if mask >> (e - 1) & 1] + [n], n)

    @classmethod
    def parse(cls, text):
        r'''
        Parse the bracket form ``"[l1,l2,...,lr]"``.

        Example:
            >>> br.IntervalPartition.parse('[1, 3, 4]')
            IntervalPartition([1,3,4])
        '''
        body = text.strip()
        if not (body.startswith('[') and body.endswith(']')):
            raise ValueError('expected a bracketed endpoint list like "[2,4]". Got {!r}'.format(text))
        items = [item.strip() for item in body[1:-1].split(',') if item.strip()]
        try:
            return cls([int(item) for item in items])
        except ValueError as e:
            raise ValueError('invalid interval partition {!r}: {}'.format(text, e))

    def to_json(self):
        return list(self._endpoints)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data)

    def __len__(self):
        return len(self._endpoints)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, IntervalPartition):
            return NotImplemented
        return self._n == other._n and self._endpoints == other._endpoints

    def __hash__(self):
        return hash((self._n, self._endpoints))

    def __le__(self, other):
        self._check_same_n(other)
        return set(other._endpoints) <= set(self._endpoints)

    def __lt__(self, other):
        return self <= other and self != other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def _check_same_n(self, other):
        if not isinstance(other, IntervalPartition):
            raise TypeError('{} is not an IntervalPartition'.format(type(other).__name__))
        if self._n != other._n:
            raise ValueError('partitions live on different ground sets: I({}) and I({})'
                             .format(self._n, other._n))

    def __str__(self):
        return '[' + ','.join(str(e) for e in self._endpoints) + ']'

    def __repr__(self):
        return 'IntervalPartition({})'.format(self)


def one(n):
    r''' The single-block partition :math:`\mathbb{1}_n`, the top of :math:`\mathcal{I}(n)`. '''
    return IntervalPartition([n], n)


def zero(n):
    r''' The all-singletons partition :math:`\mathbb{0}_n`, the bottom of :math:`\mathcal{I}(n)`. '''
    return IntervalPartition(range(1, n + 1), n)


def enumerate_partitions(n):
    r'''
    Enumerate :math:`\mathcal{I}(n)`.

    Partitions are produced in increasing order of their endpoint bitmask
    (:obj:`IntervalPartition.mask`), so the stream is deterministic and has
    :math:`2^{n-1}` elements.

    Args:
        n (int): the ground-set size, at least 1.

    Return:
        iterator of :obj:`IntervalPartition`.

    Example:
        >>> [str(s) for s in br.enumerate_partitions(3)]
        ['[3]', '[1,3]', '[2,3]', '[1,2,3]']
    '''
    assert isinstance(n, numbers.Integral) and not isinstance(n, bool), \
        ValueError('n has to be a positive integer: {}'.format(n))
    n = int(n)
    if n < 1:
        raise ValueError('n has to be a positive integer: {}'.format(n))
    return (IntervalPartition.from_mask(n, mask) for mask in range(1 << (n - 1)))


def meet(sigma, omega):
    r'''
    The meet :math:`\sigma \wedge \omega`, the largest partition below both.

    Its endpoint set is the union of the two endpoint sets.

    Example:
        >>> br.meet(br.IntervalPartition([2, 4]), br.IntervalPartition([3, 4]))
        IntervalPartition([2,3,4])
    '''
    sigma._check_same_n(omega)
    return IntervalPartition(sorted(set(sigma.endpoints) | set(omega.endpoints)), sigma.n)


def join(sigma, omega):
    r'''
    The join :math:`\sigma \vee \omega`, the smallest partition above both.

    Its endpoint set is the intersection of the two endpoint sets (``n`` is always common).

    Example:
        >>> br.join(br.IntervalPartition([2, 4]), br.IntervalPartition([3, 4]))
        IntervalPartition([4])
    '''
    sigma._check_same_n(omega)
    return IntervalPartition(sorted(set(sigma.endpoints) & set(omega.endpoints)), sigma.n)


def meet_inductive(sigma, omega):
    r'''
    The meet by the inductive rule :math:`v(k+1) = \inf\{l(s), u(s) : l(s), u(s) > v(k)\}`.

    Kept as an independent oracle for :meth:`meet`.
    '''
    sigma._check_same_n(omega)
    candidates, v = sigma.endpoints + omega.endpoints, [0]
    while v[-1] < sigma.n:
        v.append(min(c for c in candidates if c > v[-1]))
    return IntervalPartition(v[1:], sigma.n)


def join_inductive(sigma, omega):
    r'''
    The join by the inductive rule :math:`w(k+1) = \inf\{l(s) : l(s) > w(k), l(s) = u(s')\}`.

    Kept as an independent oracle for :meth:`join`. The comparison is against :math:`w(k)`;
    comparing against :math:`v(k)` as printed would not define a sequence on its own.
    '''
    sigma._check_same_n(omega)
    common, w = set(omega.endpoints), [0]
    while w[-1] < sigma.n:
        w.append(min(l for l in sigma.endpoints if l > w[-1] and l in common))
    return IntervalPartition(w[1:], sigma.n)


def juxtapose(sigma, *others):
    r'''
    The juxtaposition :math:`\sigma \oplus \pi \oplus \cdots`.

    The endpoints of :math:`\pi` are shifted by the size of :math:`\sigma` and appended.

    Example:
        >>> br.juxtapose(br.IntervalPartition([2]), br.IntervalPartition([1, 2]))
        IntervalPartition([2,3,4])
    '''
    endpoints, n = list(sigma.endpoints), sigma.n
    for pi in others:
        endpoints.extend(e + n for e in pi.endpoints)
        n = n + pi.n
    return IntervalPartition(endpoints, n)


def restrict(sigma, d_start, d_len):
    r'''
    The restriction :math:`\sigma_{|D}` to the window :math:`D = \{d+1, \dots, d+p\}`.

    Blocks of the result are the nonempty intersections of blocks of :math:`\sigma` with
    :math:`D`, shifted to start at 1, so the result lives in :math:`\mathcal{I}(p)`.

    Args:
        sigma (IntervalPartition): the partition to restrict.
        d_start (int): the offset :math:`d` of the window.
        d_len (int): the window length :math:`p`.

    Example:
        >>> br.restrict(br.IntervalPartition([2, 4]), 1, 2)
        IntervalPartition([1,2])
    '''
    if d_start < 0 or d_len < 1 or d_start + d_len > sigma.n:
        raise ValueError('window {{{}, ..., {}}} is not inside [{}]'
                         .format(d_start + 1, d_start + d_len, sigma.n))
    inner = [e - d_start for e in sigma.endpoints if d_start < e < d_start + d_len]
    return IntervalPartition(inner + [d_len], d_len)


def decompose(tau, omega):
    r'''
    Split :math:`\tau` along the blocks of :math:`\omega`: returns :math:`[\tau_{|D}]_{D\in\omega}`.

    For every :math:`\tau`, ``juxtapose(*decompose(tau, omega))`` equals
    :math:`\tau \wedge \omega`, and equals :math:`\tau` when :math:`\tau \leq \omega`.
    '''
    tau._check_same_n(omega)
    return [restrict(tau, start, length) for start, length in omega.windows]


def interval_pairing(n):
    r'''
    The interval pairing :math:`[2, 4, \dots, n]`, the only element of
    :math:`\mathcal{I}_2(n)`; ``None`` when ``n`` is odd.
    '''
    if n < 1:
        raise ValueError('n has to be positive: {}'.format(n))
    if n % 2:
        return None
    return IntervalPartition(range(2, n + 1, 2), n)
