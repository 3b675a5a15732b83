import itertools
from collections.abc import Mapping
from ..utils.scalar import as_scalar, is_zero, simplify
from ..partitions import ONE, STAR, SignPattern
from ..cumulants import Alphabet, MomentFunctional, cumulant_table
from .entries import EntryModel


class TaggedWord(tuple):
    r'''
    A word of ``(tag, letter)`` pairs, the tag naming the algebra (or entry variable) the
    letter lives in.

    Example:
        >>> w = TaggedWord([('b', 'b*'), ('a', 'a*'), ('a', 'a'), ('b', 'b')])
        >>> w.runs()
        [('b', ('b*',)), ('a', ('a*', 'a')), ('b', ('b',))]
    '''
    def __new__(cls, items):
        items = tuple((tag, letter) for tag, letter in items)
        if len(items) < 1:
            raise ValueError('a tagged word has length at least 1')
        return super().__new__(cls, items)

    @classmethod
    def from_letters(cls, tags, letters):
        return cls(zip(tags, letters))

    @property
    def tags(self):
        return tuple(tag for tag, _ in self)

    @property
    def letters(self):
        return tuple(letter for _, letter in self)

    def runs(self):
        ''' Maximal runs of equal tags, as ``(tag, letters)``. '''
        return [(tag, tuple(letter for _, letter in run))
                for tag, run in itertools.groupby(self, key=lambda item: item[0])]

    def __add__(self, other):
        return TaggedWord(tuple(self) + tuple(other))


def _model(models, tag):
    if isinstance(models, Mapping):
        if tag not in models:
            raise KeyError('no moment functional for tag {!r}'.format(tag))
        return models[tag]
    model = models(tag)
    if model is None:
        raise KeyError('no moment functional for tag {!r}'.format(tag))
    return model


def boolean_product_moment(models, w):
    r'''
    The moment of a word whose tag algebras are Boolean independent.

    The word is split into maximal runs of equal tag and

    .. math::
        \varphi(w_1 w_2 \cdots w_k) = \varphi(w_1)\varphi(w_2)\cdots\varphi(w_k),

    each run being evaluated by the functional of its tag.

    Args:
        models (dict or callable): tag to :obj:`MomentFunctional` (or any callable on words).
        w (TaggedWord): the word.

    Return:
        the exact moment.

    Example:
        >>> A, B = br.Alphabet.star_pair('a'), br.Alphabet.star_pair('b')
        >>> models = {'a': br.MomentFunctional(A, {('a',): 2}, 2),
        ...           'b': br.MomentFunctional(B, {('b',): 3}, 2)}
        >>> br.boolean_product_moment(models, TaggedWord([('a', 'a'), ('b', 'b')]))
        Fraction(6, 1)
    '''
    w = w if isinstance(w, TaggedWord) else TaggedWord(w)
    value = as_scalar(1)
    for tag, letters in w.runs():
        value = value * _model(models, tag)(letters)
        if is_zero(value):
            return as_scalar(0)
    return simplify(value)


def entry_word_moment(model, xi, run_is_single_variable=True, N=1):
    r'''
    The moment of an entry word :math:`x^{\xi_1} \cdots x^{\xi_n}` at size :math:`N`.

    When the run is a single entry variable this is the model's word value
    (for the B-diagonal family :math:`a_m/N`, :math:`b_m/N` or 0). Otherwise every letter
    is a different, Boolean independent copy and the value is the product of the
    one-letter moments.

    Args:
        model (EntryModel): the entry law.
        xi (SignPattern): the signs.
        run_is_single_variable (bool, optional): whether all letters are the same variable.
            Default: ``True``.
        N (int, optional): the matrix size. Default: ``1``.
    '''
    if not isinstance(model, EntryModel):
        raise TypeError('expected an EntryModel, got {}'.format(type(model).__name__))
    xi = SignPattern(xi)
    if run_is_single_variable:
        return model.word_value(xi, N)
    value = as_scalar(1)
    for s in xi:
        value = value * model.word_value(SignPattern((s,)), N)
    return simplify(value)


def _star_letters(m, role):
    for letter in m.alphabet:
        if letter.adjoint != letter.name and not letter.name.endswith('*'):
            return letter.name, letter.adjoint
    raise ValueError('the {} functional needs a non-self-adjoint letter'.format(role))


def product_of_boolean_letters_law(a_model, b_model, order):
    r'''
    The :math:`\ast`-moments of :math:`Y = ab` for Boolean independent :math:`a` and :math:`b`.

    Each word in :math:`Y = ab` and :math:`Y^\ast = b^\ast a^\ast` is expanded into letters of
    :math:`a` and :math:`b` and evaluated by :meth:`boolean_product_moment`. The runs of such
    words have length at most 2, so both functionals need order 2 only.

    Args:
        a_model (MomentFunctional): moments of :math:`a, a^\ast`, with
            :math:`\varphi(a) = \varphi(a^\ast) = 0`.
        b_model (MomentFunctional): moments of :math:`b, b^\ast`.
        order (int): the longest word in :math:`Y, Y^\ast`.

    Return:
        MomentFunctional: over the letters ``y`` and ``y*``.
    '''
    a, a_star = _star_letters(a_model, 'a')
    b, b_star = _star_letters(b_model, 'b')
    if not (is_zero(a_model((a,))) and is_zero(a_model((a_star,)))):
        raise ValueError('the product law needs phi(a) = phi(a*) = 0. Got {} and {}'
                         .format(a_model((a,)), a_model((a_star,))))
    models = {'A': a_model, 'B': b_model}
    expand = {'y': (('A', a), ('B', b)), 'y*': (('B', b_star), ('A', a_star))}

    def moment(word):
        return boolean_product_moment(models, TaggedWord(item for y in word for item in expand[y]))

    return MomentFunctional.from_callable(Alphabet.star_pair('y'), moment, order)


def _allowed(xi):
    return len(xi) % 2 == 0 and xi.is_alternating() and xi[0] == STAR


def product_law_violations(a_model, b_model, order):
    r'''
    Sign patterns whose Boolean cumulant of :math:`Y = ab` does not vanish although the
    pattern is not of the form :math:`(\ast, 1, \ast, 1, \dots)`.

    Return:
        list: ``(SignPattern, value)`` pairs; empty when the vanishing pattern holds.
    '''
    table = cumulant_table(product_of_boolean_letters_law(a_model, b_model, order))
    violations = []
    for word, value in table.table().items():
        xi = SignPattern(STAR if y == 'y*' else ONE for y in word)
        if not _allowed(xi) and not is_zero(value):
            violations.append((xi, value))
    return violations


def lemma_split_holds(models, a1, x, y, a2):
    r'''
    Whether :math:`\varphi(a_1 x y a_2) = \varphi(a_1 x)\varphi(y a_2)` for letters
    :math:`x, y` from different algebras.

    Args:
        models (dict or callable): tag to functional.
        a1 (TaggedWord or tuple): the prefix, possibly empty.
        x (tuple): the ``(tag, letter)`` ending the left factor.
        y (tuple): the ``(tag, letter)`` starting the right factor.
        a2 (TaggedWord or tuple): the suffix, possibly empty.
    '''
    if x[0] == y[0]:
        raise ValueError('x and y have to come from different algebras, both are {!r}'.format(x[0]))
    left, right = TaggedWord(tuple(a1) + (x,)), TaggedWord((y,) + tuple(a2))
    lhs = boolean_product_moment(models, left + right)
    rhs = boolean_product_moment(models, left) * boolean_product_moment(models, right)
    return is_zero(lhs - rhs)
