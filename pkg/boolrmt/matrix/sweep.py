import torch
from ..utils.scalar import as_scalar, format_scalar, to_float
from .trace import MixedWordSpec, trace_moment_exact, trace_moment_selfadjoint_exact
from .limits import limit_bdiag, limit_permuted, limit_selfadjoint


class ConvergenceSweep(object):
    r'''
    Steps an exact finite-:math:`N` moment through an increasing list of sizes and records
    its distance to the limit.

    Args:
        evaluate (callable): ``N -> exact value``.
        limit (scalar): the limit value.
        sizes (list): strictly increasing sizes :math:`N`.
        verbose (bool): if ``True``, prints a message to stdout for each step.
            Default: ``False``.

    Note:
        As with a scheduler, the sweep is either driven by calling :meth:`step` while
        :obj:`continual` is ``True``, or run to the end with :meth:`run`.

    Example:
        >>> spec = br.MixedWordSpec(br.parse_xi('xx*xx*'), models=br.BDiagonalEntries([1]))
        >>> sweep = br.ConvergenceSweep.for_word(spec, sizes=[4, 8], verbose=True)
        >>> while sweep.continual:
        ...     sweep.step()
        ConvergenceSweep on N 4 value 3/4 --> error 2.500000e-01 (N*error: 1.0000e+00)
        ConvergenceSweep on N 8 value 7/8 --> error 1.250000e-01 (N*error: 1.0000e+00)
        ConvergenceSweep: Last size reached, Quiting..
    '''
    def __init__(self, evaluate, limit, sizes, verbose=False):
        if not callable(evaluate):
            raise TypeError('{} is not callable'.format(type(evaluate).__name__))
        sizes = [int(N) for N in sizes]
        if not sizes:
            raise ValueError('the sweep needs at least one size')
        if any(N < 1 for N in sizes) or any(a >= b for a, b in zip(sizes, sizes[1:])):
            raise ValueError('sizes have to be positive and increasing: {}'.format(sizes))
        self.evaluate, self.verbose = evaluate, verbose
        self.limit, self.sizes = as_scalar(limit), sizes
        self.max_steps, self.steps = len(sizes), 0
        self.values = []
        self.errors = torch.zeros(len(sizes), dtype=torch.float64)
        self.continual = True

    @property
    def continual(self):
        return self._continual

    @continual.setter
    def continual(self, value):
        assert isinstance(value, bool)
        self._continual = value

    @classmethod
    def for_word(cls, spec, sizes, limit=None, method='partition', budget=None, verbose=False):
        r'''
        A sweep of :meth:`trace_moment_exact`. The limit defaults to :meth:`limit_permuted`,
        which reduces to :meth:`limit_bdiag` for undecorated single-matrix words.
        '''
        if not isinstance(spec, MixedWordSpec):
            raise TypeError('{} is not a MixedWordSpec'.format(type(spec).__name__))
        limit = limit_permuted(spec) if limit is None else limit
        return cls(lambda N: trace_moment_exact(spec, N, method, budget), limit, sizes, verbose)

    @classmethod
    def for_selfadjoint(cls, model, n, sizes, method='closed_form', verbose=False):
        r''' A sweep of :meth:`trace_moment_selfadjoint_exact` towards :meth:`limit_selfadjoint`. '''
        limit = limit_selfadjoint(model.alpha, model.beta, n)
        return cls(lambda N: trace_moment_selfadjoint_exact(model, n, N, method),
                   limit, sizes, verbose)

    @property
    def sizes_done(self):
        return torch.tensor(self.sizes[:self.steps], dtype=torch.float64)

    @property
    def scaled_errors(self):
        r''' :math:`N\cdot|\text{value} - \text{limit}|` of the finished steps. '''
        return self.sizes_done * self.errors[:self.steps]

    def step(self):
        r'''
        Evaluates the next size.

        Return:
            the exact value at that size.
        '''
        assert self.continual, 'the sweep is finished; call load_state_dict() or start anew'
        N = self.sizes[self.steps]
        value = self.evaluate(N)
        self.values.append(value)
        self.errors[self.steps] = abs(to_float(value - self.limit))

        if self.verbose:
            print('ConvergenceSweep on N {} value {} --> error {:.6e} (N*error: {:.4e})'
                  .format(N, format_scalar(value), self.errors[self.steps].item(),
                          N * self.errors[self.steps].item()))

        self.steps = self.steps + 1

        if self.steps >= self.max_steps:
            self.continual = False
            if self.verbose:
                print('ConvergenceSweep: Last size reached, Quiting..')

        return value

    def run(self):
        r''' Performs all remaining steps and returns :meth:`records`. '''
        while self.continual:
            self.step()
        return self.records()

    def records(self):
        r'''
        One record per finished step: ``N``, the exact value, the limit, ``abs_error`` and
        ``N_error``.
        '''
        scaled = self.scaled_errors.tolist()
        return [{'N': N, 'value': format_scalar(value), 'limit': format_scalar(self.limit),
                 'abs_error': self.errors[k].item(), 'N_error': scaled[k]}
                for k, (N, value) in enumerate(zip(self.sizes, self.values))]

    def state_dict(self):
        r'''
        Returns the state of the sweep as a :class:`dict`, every entry of ``self.__dict__``
        except the evaluation callable.
        '''
        return {key: value for key, value in self.__dict__.items() if key != 'evaluate'}

    def load_state_dict(self, state_dict):
        r'''
        Loads the sweep state.

        Args:
            state_dict (dict): an object returned from a call to :meth:`state_dict`.
        '''
        self.__dict__.update(state_dict)
