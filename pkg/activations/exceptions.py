__all__ = [
    'ActivationNotImplementedException', 'UnknownActivationException'
]


class ActivationNotImplementedException(Exception):
    """
    This exception will be raised if an operation is requested for an activation kind that has no closed form for it,
    for example the in-zoo derivative of the linear function
    """
    def __init__(self, message=None, kind=None):
        self.value = 'Operation is not implemented for activation kind %s' % (kind or 'unknown')
        if message:
            self.value = message

    def __str__(self):
        return repr(self.value)


class UnknownActivationException(Exception):
    """
    This exception will be raised if an activation name given on the command line cannot be resolved
    """
    def __init__(self, message=None, name=None):
        self.value = 'Unknown activation %r. Known names: relu, step, tpow:k, sigmoid, dsigmoid:k, softplus, tanh, ' \
                     'dtanh:k, rbf, drbf:k, delta, ddelta:k, linear' % (name,)
        if message:
            self.value = message

    def __str__(self):
        return repr(self.value)
