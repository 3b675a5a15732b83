import json
import warnings
import itertools
from ..utils.scalar import as_scalar, format_scalar


class Letter(object):
    r'''
    A symbol of a noncommutative word.

    Args:
        name (str): the symbol, e.g. ``"x"`` or ``"x*"``.
        tag (hashable, optional): the algebra the letter belongs to. Default: ``None``.
        adjoint (str, optional): the name of :math:`a^\ast`. If ``None``, the letter is
            self-adjoint. Default: ``None``.
    '''
    __slots__ = ('name', 'tag', 'adjoint')

    def __init__(self, name, tag=None, adjoint=None):
        self.name, self.tag = str(name), tag
        self.adjoint = self.name if adjoint is None else str(adjoint)

    def __eq__(self, other):
        return isinstance(other, Letter) and \
            (self.name, self.tag, self.adjoint) == (other.name, other.tag, other.adjoint)

    def __hash__(self):
        return hash((self.name, self.tag, self.adjoint))

    def __repr__(self):
        return 'Letter({!r}, tag={!r}, adjoint={!r})'.format(self.name, self.tag, self.adjoint)


class Alphabet(object):
    r'''
    A finite set of :obj:`Letter` closed under the adjoint involution.

    Example:
        >>> A = Alphabet.star_pair('x', tag='X')
        >>> A.adjoint_word(('x', 'x', 'x*'))
        ('x', 'x*', 'x*')
    '''
    def __init__(self, letters):
        self._letters = {}
        for letter in letters:
            if letter.name in self._letters:
                raise ValueError('duplicate letter {!r}'.format(letter.name))
            self._letters[letter.name] = letter
        if not self._letters:
            raise ValueError('an alphabet needs at least one letter')
        for letter in self._letters.values():
            partner = self._letters.get(letter.adjoint)
            if partner is None or partner.adjoint != letter.name:
                raise ValueError('adjoint of {!r} is not an involution on the alphabet'
                                 .format(letter.name))

    @classmethod
    def star_pair(cls, name, tag=None):
        r''' The alphabet :math:`\{a, a^\ast\}` of a single non-self-adjoint variable. '''
        star = name + '*'
        return cls([Letter(name, tag, star), Letter(star, tag, name)])

    @classmethod
    def merge(cls, *alphabets):
        return cls([letter for A in alphabets for letter in A])

    @property
    def names(self):
        return tuple(self._letters)

    def __iter__(self):
        return iter(self._letters.values())

    def __len__(self):
        return len(self._letters)

    def __contains__(self, name):
        return name in self._letters

    def __getitem__(self, name):
        return self._letters[name]

    def tag(self, name):
        return self._letters[name].tag

    def adjoint_word(self, word):
        return tuple(self._letters[a].adjoint for a in reversed(word))

    def words(self, order, min_order=1):
        r''' All words of length ``min_order`` up to ``order``, shortest first. '''
        for n in range(min_order, order + 1):
            yield from itertools.product(self.names, repeat=n)

    def to_json(self):
        return [{'name': a.name, 'tag': a.tag, 'adjoint': a.adjoint} for a in self]

    @classmethod
    def from_json(cls, data):
        return cls([Letter(d['name'], d.get('tag'), d.get('adjoint')) for d in data])


def _as_word(word):
    if isinstance(word, str):
        return tuple(word.split())
    return tuple(word)


class WordFunctional(object):
    r'''
    A scalar-valued functional on words of length :math:`1, \dots,` ``max_order``.

    Values come from an explicit table and, optionally, from a callable evaluated lazily
    and cached. Words in neither read as 0 and are reported by :meth:`defaulted_words`.

    Args:
        alphabet (Alphabet): the letters.
        values (dict, optional): word (tuple of letter names) to exact scalar. Default: ``None``.
        max_order (int): the longest word the functional is defined on.
        fn (callable, optional): word to scalar, for words missing from ``values``.
            Default: ``None``.
    '''
    def __init__(self, alphabet, values=None, max_order=1, fn=None):
        assert max_order >= 1, ValueError('max_order has to be positive: {}'.format(max_order))
        self.alphabet, self.max_order, self._fn = alphabet, int(max_order), fn
        self._values, self._cache = {}, {}
        for word, value in (values or {}).items():
            self._values[self.check_word(word)] = as_scalar(value)

    def check_word(self, word):
        word = _as_word(word)
        if len(word) < 1:
            raise ValueError('words have length at least 1')
        if len(word) > self.max_order:
            raise ValueError('word of length {} exceeds the maximal order {}'
                             .format(len(word), self.max_order))
        for a in word:
            if a not in self.alphabet:
                raise ValueError('letter {!r} is not in the alphabet {}'
                                 .format(a, self.alphabet.names))
        return word

    def value(self, word):
        word = self.check_word(word)
        if word in self._values:
            return self._values[word]
        if self._fn is not None:
            if word not in self._cache:
                self._cache[word] = as_scalar(self._fn(word))
            return self._cache[word]
        return as_scalar(0)

    __call__ = value

    def is_asserted(self, word):
        word = self.check_word(word)
        return word in self._values or self._fn is not None

    def defaulted_words(self, order=None):
        r''' Words up to ``order`` that are read as 0 without having been specified. '''
        if self._fn is not None:
            return []
        order = self.max_order if order is None else min(order, self.max_order)
        return [w for w in self.alphabet.words(order) if w not in self._values]

    @classmethod
    def from_callable(cls, alphabet, fn, max_order):
        return cls(alphabet, max_order=max_order, fn=fn)

    def table(self, order=None):
        order = self.max_order if order is None else order
        return {w: self.value(w) for w in self.alphabet.words(order)}

    def to_json(self):
        entries = []
        for word, value in sorted(self._values.items()):
            value = as_scalar(value)
            entries.append([list(word), format_scalar(value)])
        return {'alphabet': self.alphabet.to_json(), 'max_order': self.max_order,
                'values': entries}

    @classmethod
    def from_json(cls, data):
        r'''
        Load from a JSON document (or a parsed dict).

        The document holds ``alphabet`` (letters with ``name``, ``tag`` and ``adjoint``),
        ``max_order`` and ``values``: entries ``[word, "p/q"]`` or ``[word, numerator,
        denominator]``, a word being a list of letter names or a space-separated string.
        '''
        if isinstance(data, str):
            data = json.loads(data)
        alphabet = Alphabet.from_json(data['alphabet'])
        values = {}
        for entry in data.get('values', []):
            if len(entry) == 3:
                values[_as_word(entry[0])] = as_scalar(entry[1]) / as_scalar(entry[2])
            elif len(entry) == 2:
                values[_as_word(entry[0])] = as_scalar(entry[1] if isinstance(entry[1], (int, str))
                                                       else str(entry[1]))
            else:
                raise ValueError('invalid value entry: {!r}'.format(entry))
        functional = cls(alphabet, values, data.get('max_order', 1))
        missing = len(functional.defaulted_words())
        if missing:
            warnings.warn('{} words up to order {} are unspecified and read as 0'
                          .format(missing, functional.max_order))
        return functional

    def __repr__(self):
        return '{}(letters={}, max_order={}, asserted={})'.format(
            self.__class__.__name__, list(self.alphabet.names), self.max_order,
            'callable' if self._fn is not None else len(self._values))


class MomentFunctional(WordFunctional):
    r'''
    The moments :math:`\varphi(a_1 a_2 \cdots a_n)` of a unital linear functional, on words.

    No positivity or adjoint consistency is assumed.

    Example:
        >>> A = br.Alphabet.star_pair('x')
        >>> phi = br.MomentFunctional(A, {('x', 'x*'): '1/2'}, max_order=2)
        >>> phi(('x', 'x*')), phi(('x', 'x'))
        (Fraction(1, 2), Fraction(0, 1))
    '''


class CumulantFunctional(WordFunctional):
    r'''
    Boolean cumulants :math:`b_n(a_1, \dots, a_n)` stored on words of letters.

    Multilinearity is structural: values live on words and are extended to linear
    combinations by :meth:`multilinear`.
    '''
