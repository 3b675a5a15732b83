import json
from ..utils.scalar import as_scalar, format_scalar
from ..cumulants import Alphabet, Letter, MomentFunctional, BDiagonalLaw
from ..partitions import ONE, STAR, SignPattern, parse_xi


DIAGONAL = 'd'


def _signs(word):
    return SignPattern(STAR if a.endswith('*') else ONE for a in word)


class EntryModel(object):
    r'''
    The common law of the entries :math:`x_{ij,N}` of a matrix with Boolean independent,
    identically distributed entries.

    Values are stored as :math:`N`-independent numerators and the moment of an entry word
    at size :math:`N` is the numerator divided by :math:`N`, so exact finite-:math:`N`
    values are available at every :math:`N`.

    Subclasses implement :meth:`numerator`.
    '''
    kind = None

    def numerator(self, xi):
        raise NotImplementedError

    def word_value(self, xi, N):
        r''' The moment :math:`\varphi(x^{\xi_1} \cdots x^{\xi_n})` of one entry at size :math:`N`. '''
        assert N >= 1, ValueError('N has to be positive: {}'.format(N))
        return as_scalar(self.numerator(SignPattern(xi))) / N

    def at(self, N, max_order=16):
        r'''
        The moment functional of one off-diagonal entry letter ``x`` (with ``x*``) at size
        :math:`N`.
        '''
        assert N >= 1, ValueError('N has to be positive: {}'.format(N))
        return MomentFunctional.from_callable(Alphabet.star_pair('x'),
                                              lambda w: self.word_value(_signs(w), N), max_order)

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(data):
        r'''
        Load an entry model. The document has a ``kind`` and the fields of that kind:
        ``{"kind": "bdiag_family", "a": [...], "b": [...]}``,
        ``{"kind": "selfadjoint_family", "alpha": ..., "beta": ...}`` or
        ``{"kind": "general", "values": [[word, "p/q"], ...]}``.
        '''
        if isinstance(data, str):
            data = json.loads(data)
        kinds = {cls.kind: cls for cls in (GeneralEntries, BDiagonalEntries, SelfAdjointEntries)}
        if data.get('kind') not in kinds:
            raise ValueError('unknown entry model kind {!r}; expected one of {}'
                             .format(data.get('kind'), sorted(kinds)))
        return kinds[data['kind']]._from_json(data)

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, json.dumps(self.to_json()))


class GeneralEntries(EntryModel):
    r'''
    Entries given by an explicit table of numerators :math:`N\varphi(w)` on sign words.

    Args:
        values (dict): sign pattern (or ``"xx*"`` string) to numerator; missing words read 0.

    Example:
        >>> model = br.GeneralEntries({'xx*': 2, 'x*x': 1})
        >>> model.word_value(br.parse_xi('xx*'), 4)
        Fraction(1, 2)
    '''
    kind = 'general'

    def __init__(self, values):
        self.values = {}
        for word, value in values.items():
            xi = _parse_word(word)
            self.values[xi] = as_scalar(value)

    def numerator(self, xi):
        return self.values.get(SignPattern(xi), 0)

    def to_json(self):
        return {'kind': self.kind,
                'values': [[str(xi), format_scalar(v)] for xi, v in sorted(self.values.items())]}

    @classmethod
    def _from_json(cls, data):
        return cls({word: value for word, value in data.get('values', [])})


class BDiagonalEntries(EntryModel):
    r'''
    Entries whose only nonzero moments are

    .. math::
        \varphi\left((xx^\ast)^m\right) = \frac{a_m}{N}, \quad
        \varphi\left((x^\ast x)^m\right) = \frac{b_m}{N},

    so that :math:`N\varphi((xx^\ast)^m) \to a_m`, :math:`N\varphi((x^\ast x)^m) \to b_m` and
    :math:`N^\varepsilon \varphi(w) \to 0` for every other word and every
    :math:`\varepsilon < 1`. Sequences are indexed from :math:`m = 1`; missing terms are 0.

    Example:
        >>> model = br.BDiagonalEntries(a=[3], b=[1])
        >>> model.word_value(br.parse_xi('xx*'), 10)
        Fraction(3, 10)
    '''
    kind = 'bdiag_family'

    def __init__(self, a, b=()):
        self.a, self.b = tuple(as_scalar(v) for v in a), tuple(as_scalar(v) for v in b)

    def numerator(self, xi):
        n = len(xi)
        if n % 2 or not xi.is_alternating():
            return 0
        seq = self.a if xi[0] == ONE else self.b
        return seq[n // 2 - 1] if n // 2 <= len(seq) else 0

    def law(self):
        r''' The B-diagonal limit law with determining sequences :math:`(a_m)`, :math:`(b_m)`. '''
        return BDiagonalLaw(self.a, self.b, max(len(self.a), len(self.b), 1))

    def to_json(self):
        return {'kind': self.kind, 'a': [format_scalar(v) for v in self.a],
                'b': [format_scalar(v) for v in self.b]}

    @classmethod
    def _from_json(cls, data):
        return cls(data.get('a', []), data.get('b', []))


class SelfAdjointEntries(EntryModel):
    r'''
    Entries of a self-adjoint matrix :math:`B_N = (b_{ij})`, with :math:`b_{ji} = b_{ij}^\ast`.

    The free entries are :math:`b_{ij}`, :math:`i < j`, with
    :math:`\varphi(b b^\ast) = \alpha/N`, :math:`\varphi(b^\ast b) = \beta/N` and all other
    words 0. Diagonal entries are self-adjoint and all their moments are 0.

    Args:
        alpha (scalar): the limit :math:`N\varphi(bb^\ast)`.
        beta (scalar): the limit :math:`N\varphi(b^\ast b)`.
    '''
    kind = 'selfadjoint_family'

    def __init__(self, alpha, beta):
        self.alpha, self.beta = as_scalar(alpha), as_scalar(beta)

    def numerator(self, xi):
        if tuple(xi) == (ONE, STAR):
            return self.alpha
        if tuple(xi) == (STAR, ONE):
            return self.beta
        return 0

    def diagonal_at(self, N, max_order=16):
        ''' The (vanishing) moment functional of a diagonal entry, the self-adjoint letter ``d``. '''
        return MomentFunctional(Alphabet([Letter(DIAGONAL)]), {}, max_order)

    def models(self, N, max_order=16):
        r''' Tag to functional for the tags produced by :meth:`selfadjoint_letter`. '''
        off, diag = self.at(N, max_order), self.diagonal_at(N, max_order)
        return lambda tag: diag if tag[0] == tag[1] else off

    def to_json(self):
        return {'kind': self.kind, 'alpha': format_scalar(self.alpha),
                'beta': format_scalar(self.beta)}

    @classmethod
    def _from_json(cls, data):
        return cls(data['alpha'], data['beta'])


def _parse_word(word):
    if isinstance(word, SignPattern):
        return word
    if isinstance(word, str):
        return parse_xi(word)
    return SignPattern(word)


def selfadjoint_letter(i, j):
    r'''
    The entry variable and letter of :math:`b_{ij}` in a self-adjoint matrix.

    Return:
        tuple: ``((min, max), letter)`` with letter ``"x"`` for :math:`i < j`, ``"x*"`` for
        :math:`i > j` and the self-adjoint ``"d"`` on the diagonal.

    Example:
        >>> selfadjoint_letter(3, 1)
        ((1, 3), 'x*')
    '''
    if i == j:
        return (i, i), DIAGONAL
    return ((i, j), 'x') if i < j else ((j, i), 'x*')
