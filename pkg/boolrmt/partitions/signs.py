ONE, STAR = '1', '*'


def _sign(value):
    if value in (ONE, 1, True):
        return ONE
    if value in (STAR, '∗'):
        return STAR
    raise ValueError('a sign is either 1 or *. Got {!r}'.format(value))


class SignPattern(tuple):
    r'''
    A tuple :math:`\vec\xi \in \{1, \ast\}^n` marking the adjoint positions of a word.

    Elements are the strings ``'1'`` and ``'*'``; the integer ``1`` is accepted on input.

    Example:
        >>> xi = br.SignPattern('1*1*')
        >>> xi
        SignPattern('x x* x x*')
        >>> xi[1:3]
        SignPattern('x* x')
    '''
    def __new__(cls, signs):
        if isinstance(signs, SignPattern):
            return signs
        signs = tuple(_sign(s) for s in signs)
        if len(signs) < 1:
            raise ValueError('a sign pattern has length at least 1')
        return super().__new__(cls, signs)

    def __getitem__(self, index):
        item = super().__getitem__(index)
        return SignPattern(item) if isinstance(index, slice) else item

    def __add__(self, other):
        return SignPattern(tuple(self) + tuple(SignPattern(other)))

    def __mul__(self, times):
        return SignPattern(tuple(self) * times)

    def window(self, start, length):
        return self[start:start + length]

    def adjoint(self):
        r''' The pattern of the adjoint word: reversed with every sign flipped. '''
        return SignPattern(STAR if s == ONE else ONE for s in reversed(self))

    def is_alternating(self):
        return all(a != b for a, b in zip(self, self[1:])) if len(self) > 1 else True

    def __repr__(self):
        return 'SignPattern({!r})'.format(format_xi(self, sep=' '))

    def __str__(self):
        return format_xi(self)


def parse_xi(text):
    r'''
    Parse a word string such as ``"xx*xx*"``: ``x`` is the sign 1 and ``x*`` the sign
    :math:`\ast`. Whitespace is ignored.

    Example:
        >>> parse_xi('xx*')
        SignPattern('x x*')
    '''
    body = ''.join(str(text).split())
    signs, k = [], 0
    while k < len(body):
        if body[k] != 'x':
            raise ValueError('invalid word string {!r}: expected "x" at position {}'
                             .format(text, k + 1))
        if k + 1 < len(body) and body[k + 1] == '*':
            signs.append(STAR)
            k = k + 2
        else:
            signs.append(ONE)
            k = k + 1
    if not signs:
        raise ValueError('a word string needs at least one letter')
    return SignPattern(signs)


def format_xi(xi, sep=''):
    return sep.join('x' if s == ONE else 'x*' for s in xi)


class LabelTuple(tuple):
    r'''
    Matrix identifiers :math:`\vec k = (k_1, \dots, k_n)` of a mixed word. Any hashable labels.
    '''
    def __new__(cls, labels):
        if isinstance(labels, LabelTuple):
            return labels
        labels = tuple(labels)
        if len(labels) < 1:
            raise ValueError('a label tuple has length at least 1')
        return super().__new__(cls, labels)

    def __getitem__(self, index):
        item = super().__getitem__(index)
        return LabelTuple(item) if isinstance(index, slice) else item

    def __repr__(self):
        return 'LabelTuple({})'.format(tuple(self))


class IndexTuple(tuple):
    r'''
    Row/column indices :math:`\vec i = (i_1, \dots, i_n) \in [N]^n`, 1-based.

    Words are read cyclically: :math:`i_{n+1} = i_1`.

    Args:
        indices (iterable of int): the indices.
        N (int): the matrix size.
    '''
    def __new__(cls, indices, N):
        indices = tuple(int(i) for i in indices)
        if N < 1:
            raise ValueError('N has to be positive: {}'.format(N))
        if len(indices) < 1:
            raise ValueError('an index tuple has length at least 1')
        if any(i < 1 or i > N for i in indices):
            raise ValueError('indices have to lie in [{}]. Got {}'.format(N, indices))
        self = super().__new__(cls, indices)
        self.N = N
        return self

    def __getnewargs__(self):
        return (tuple(self), self.N)

    def cyclic(self, s):
        ''' The 1-based index :math:`i_s` with the cyclic convention. '''
        return self[(s - 1) % len(self)]

    def __repr__(self):
        return 'IndexTuple({}, N={})'.format(tuple(self), self.N)
